//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! A [`CycNumber`] is stored as a dense coefficient vector of length `N`
//! over arbitrary-precision rationals, kept in the canonical form obtained
//! by reducing modulo the `N`-th cyclotomic polynomial `Φ_N`. Canonical
//! forms are unique, so equality of two numbers over the same order is a
//! plain vector comparison; numbers over different orders are compared
//! after embedding both into `Q(ζ_lcm)`.
//!
//! `Φ_N` has integer coefficients and is obtained by exact division of
//! `x^N − 1` by `Φ_d` for all proper divisors `d` of `N`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, the coefficient ring for all scalars.
pub type Rat = BigRational;

/// Error raised by scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// A cyclotomic order of zero was requested.
    InvalidOrder,
    /// Division by the zero scalar.
    DivisionByZero,
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::InvalidOrder => write!(f, "cyclotomic order must be positive"),
            ScalarError::DivisionByZero => write!(f, "division by zero scalar"),
        }
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// An element of `Q(ζ_N)` in canonical reduced form.
///
/// Index `k` of the coefficient vector holds the coefficient of `ζ_N^k`.
/// After reduction mod `Φ_N` only the first `φ(N)` entries can be nonzero;
/// the vector is kept at full length `N` so indices never shift.
#[derive(Debug, Clone)]
pub struct CycNumber {
    order: u64,
    coeffs: Vec<Rat>,
}

impl CycNumber {
    /// The zero scalar of the given order.
    pub fn zero(order: u64) -> Self {
        CycNumber {
            order: order.max(1),
            coeffs: vec![Rat::zero(); order.max(1) as usize],
        }
    }

    /// The unit scalar of order 1.
    pub fn one() -> Self {
        CycNumber::from_rat(Rat::one())
    }

    /// A rational number seen as a cyclotomic scalar of order 1.
    pub fn from_rat(r: Rat) -> Self {
        CycNumber {
            order: 1,
            coeffs: vec![r],
        }
    }

    /// An integer seen as a cyclotomic scalar of order 1.
    pub fn from_int(n: i64) -> Self {
        CycNumber::from_rat(rat(n))
    }

    /// `ζ_N^k`, the primitive `N`-th root of unity raised to `k`.
    pub fn root_of_unity(order: u64, k: i64) -> Result<Self, ScalarError> {
        if order == 0 {
            return Err(ScalarError::InvalidOrder);
        }
        let k = k.rem_euclid(order as i64) as usize;
        let mut coeffs = vec![Rat::zero(); order as usize];
        coeffs[k] = Rat::one();
        Ok(CycNumber { order, coeffs }.reduced())
    }

    /// Builds a scalar from a raw coefficient vector (length = order) and
    /// reduces it to canonical form.
    pub fn from_coeffs(order: u64, mut coeffs: Vec<Rat>) -> Result<Self, ScalarError> {
        if order == 0 {
            return Err(ScalarError::InvalidOrder);
        }
        coeffs.resize(order as usize, Rat::zero());
        Ok(CycNumber { order, coeffs }.reduced())
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Canonical coefficients; index `k` holds the coefficient of `ζ^k`.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Returns the rational value if the scalar lies in `Q`.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Embeds the scalar into `Q(ζ_M)`; `M` must be a multiple of the order.
    pub fn embed(&self, new_order: u64) -> Self {
        assert!(
            new_order % self.order == 0,
            "embedding target must be a multiple of the source order"
        );
        let stride = (new_order / self.order) as usize;
        let mut coeffs = vec![Rat::zero(); new_order as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[k * stride] = c.clone();
            }
        }
        CycNumber {
            order: new_order,
            coeffs,
        }
        .reduced()
    }

    fn reduced(mut self) -> Self {
        let phi = cyclotomic_polynomial(self.order);
        reduce_in_place(&mut self.coeffs, &phi);
        self
    }

    /// Brings two scalars to the common field `Q(ζ_lcm)`.
    fn align(&self, other: &Self) -> (CycNumber, CycNumber) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let m = self.order.lcm(&other.order);
        (self.embed(m), other.embed(m))
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let phi = cyclotomic_polynomial(self.order);
        let phi_q: Vec<Rat> = phi.iter().map(|&c| rat(c)).collect();
        let a = trim(&self.coeffs);
        // Extended Euclid over Q[x]: u·a + v·Φ = gcd = nonzero constant.
        let (g, u) = poly_ext_gcd(&a, &phi_q);
        debug_assert!(g.len() == 1, "Φ_N is irreducible, gcd with a unit is constant");
        let ginv = g[0].recip();
        let mut coeffs: Vec<Rat> = u.iter().map(|c| c * &ginv).collect();
        coeffs.resize(self.order as usize, Rat::zero());
        Ok(CycNumber {
            order: self.order,
            coeffs,
        }
        .reduced())
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = CycNumber::one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            n >>= 1;
        }
        Ok(acc)
    }

    /// Exact division. Errors on a zero divisor.
    pub fn div_exact(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.align(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNumber {}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            if k == 0 {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                write!(f, "z{}^{}", self.order, k)?;
            }
        }
        Ok(())
    }
}

impl Add for &CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        let (mut a, b) = self.align(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }
}

impl Sub for &CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        let (mut a, b) = self.align(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        a
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        let mut a = self.clone();
        for x in a.coeffs.iter_mut() {
            *x = -x.clone();
        }
        a
    }
}

impl Mul for &CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        let (a, b) = self.align(rhs);
        let n = a.order as usize;
        // Cyclic convolution in Q[x]/(x^N − 1), then canonical reduction.
        let mut coeffs = vec![Rat::zero(); n];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = (i + j) % n;
                coeffs[k] += x * y;
            }
        }
        CycNumber {
            order: a.order,
            coeffs,
        }
        .reduced()
    }
}

impl Div for &CycNumber {
    type Output = CycNumber;
    fn div(self, rhs: &CycNumber) -> CycNumber {
        self.div_exact(rhs).expect("division by zero scalar")
    }
}

/// `Φ_N` with integer coefficients, computed by dividing `x^N − 1` by
/// `Φ_d` for every proper divisor `d | N`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    assert!(n > 0);
    if n == 1 {
        return vec![-1, 1];
    }
    // x^n − 1
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let q = cyclotomic_polynomial(d);
            p = int_poly_div_exact(&p, &q);
        }
    }
    p
}

/// Exact division of integer polynomials; panics if not exact (never for
/// cyclotomic factors).
fn int_poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(dn >= dd && den[dd] == 1);
    let mut rem: Vec<i64> = num.to_vec();
    let mut quot = vec![0i64; dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &dc) in den.iter().enumerate() {
                rem[k + i] -= c * dc;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// Reduces `coeffs` (length = order) modulo the monic integer polynomial
/// `phi`, in place; the tail above `deg Φ` is zeroed.
fn reduce_in_place(coeffs: &mut [Rat], phi: &[i64]) {
    let d = phi.len() - 1;
    for k in (d..coeffs.len()).rev() {
        if coeffs[k].is_zero() {
            continue;
        }
        let c = core::mem::replace(&mut coeffs[k], Rat::zero());
        // x^k ≡ −(Φ − x^d)·x^(k−d)
        for (i, &pc) in phi[..d].iter().enumerate() {
            if pc != 0 {
                let sub = &c * rat(pc);
                coeffs[k - d + i] -= sub;
            }
        }
    }
}

fn trim(coeffs: &[Rat]) -> Vec<Rat> {
    let mut v: Vec<Rat> = coeffs.to_vec();
    while v.len() > 1 && v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

/// Extended gcd over Q[x]: returns `(g, u)` with `u·a ≡ g (mod m)` and
/// `g = gcd(a, m)`. Both inputs are treated as polynomials over Q.
fn poly_ext_gcd(a: &[Rat], m: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r0 = trim(m);
    let mut r1 = trim(a);
    let mut u0: Vec<Rat> = vec![Rat::zero()];
    let mut u1: Vec<Rat> = vec![Rat::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_div_rem(&r0, &r1);
        let nu = poly_sub(&u0, &poly_mul(&q, &u1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = trim(&nu);
    }
    (r0, u0)
}

fn poly_div_rem(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut rem = num.to_vec();
    if num.len() < den.len() {
        return (vec![Rat::zero()], trim(&rem));
    }
    let mut quot = vec![Rat::zero(); num.len() - den.len() + 1];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] / &lead;
        if !c.is_zero() {
            for (i, dc) in den.iter().enumerate() {
                let sub = &c * dc;
                rem[k + i] -= sub;
            }
        }
        quot[k] = c;
    }
    (trim(&quot), trim(&rem))
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}
