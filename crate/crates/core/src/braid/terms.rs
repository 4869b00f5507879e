//! Operation terms over the ribbon-braid generators and the cyclic action.
//!
//! A [`MorphismTerm`] is a formal vertical composite of whiskered
//! generator morphisms on `n` strands: cabled braidings (block crossings
//! carrying a sign and a `μ`/`μ^opp` source marker) and cabled twists.
//! Flattening evaluates the composite in the framed braid group; the
//! source marker is invisible there and only routes the cyclic action.
//!
//! The cyclic action rotates the roles of the `n+1` legs: input `j`
//! becomes input `j−1`, input `1` becomes the output, the old output
//! becomes input `n`. On terms this is implemented by tracking strand
//! identities through both diagrams:
//!
//! * a twist on an identity set containing input `1` maps to the cabled
//!   twist on the complementary block (the image curve separates the
//!   same holes, read from the other side of the sphere);
//! * twists and crossings not involving input `1` shift;
//! * a crossing whose left cable holds input `1` maps through a fixed
//!   four-entry generator-image table; a crossing holding it in the
//!   right cable delegates to the inverse flavor. The assignment is
//!   pinned by its constraint set (trivial on the balancing, triples to
//!   the identity, the transposition exchange, relation preservation);
//!   [`TAU_TABLE`] is the table passing all of those checks, selected
//!   by exhaustive search over the candidate family in the
//!   `table_selection` test.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::FramedBraid;

/// Error for malformed terms or cyclic images that leave the span
/// calculus (non-contiguous cables).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermError {
    /// A step's strand interval is empty or out of bounds.
    BadSpan,
    /// Vertical composition of terms with different strand counts.
    BoundaryMismatch,
    /// The arity of a term does not match the rotation applied to it.
    ArityMismatch,
    /// The cyclic image of a step is not expressible through contiguous
    /// cables.
    CyclicImage,
}

impl fmt::Display for TermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermError::BadSpan => write!(f, "step interval is empty or out of bounds"),
            TermError::BoundaryMismatch => write!(f, "term boundaries do not match"),
            TermError::ArityMismatch => write!(f, "rotation arity does not match the term"),
            TermError::CyclicImage => write!(f, "cyclic image leaves the span calculus"),
        }
    }
}

/// A planar operation term over the generators `μ` (binary) and `u`
/// (nullary); leaves are input slots. The associativity relations hold
/// strictly at the object level, so morphism terms reference strand
/// intervals rather than bracketings; `OpTerm` records a bracketing
/// where one is wanted (display, construction, the object-level cyclic
/// action).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpTerm {
    Leaf,
    Unit,
    Node(alloc::boxed::Box<OpTerm>, alloc::boxed::Box<OpTerm>),
}

impl OpTerm {
    /// Number of input slots (units contribute none).
    pub fn arity(&self) -> usize {
        match self {
            OpTerm::Leaf => 1,
            OpTerm::Unit => 0,
            OpTerm::Node(l, r) => l.arity() + r.arity(),
        }
    }

    /// The left-normed bracketing `(..((1 2) 3)..n)`.
    pub fn left_normed(n: usize) -> OpTerm {
        match n {
            0 => OpTerm::Unit,
            1 => OpTerm::Leaf,
            _ => OpTerm::Node(
                alloc::boxed::Box::new(OpTerm::left_normed(n - 1)),
                alloc::boxed::Box::new(OpTerm::Leaf),
            ),
        }
    }

    /// Removes unit factors using the unitality relations.
    pub fn collapse_units(&self) -> OpTerm {
        match self {
            OpTerm::Leaf => OpTerm::Leaf,
            OpTerm::Unit => OpTerm::Unit,
            OpTerm::Node(l, r) => {
                let l = l.collapse_units();
                let r = r.collapse_units();
                match (l.arity(), r.arity()) {
                    (0, _) => r,
                    (_, 0) => l,
                    _ => OpTerm::Node(alloc::boxed::Box::new(l), alloc::boxed::Box::new(r)),
                }
            }
        }
    }

    /// The object-level cyclic action: input slots shift down by one and
    /// the output re-enters as the last slot. The result is reassociated
    /// to the canonical left-normed bracketing; at the object level the
    /// action is leg relabeling, so bracketing carries no information
    /// (flattened morphisms over either bracketing agree).
    pub fn rotate(&self) -> OpTerm {
        OpTerm::left_normed(self.collapse_units().arity())
    }
}

/// A cyclic rotation `τ^power` on terms of the given arity; `τ` has
/// order `arity + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicRotation {
    pub arity: usize,
    pub power: usize,
}

impl CyclicRotation {
    pub fn new(arity: usize, power: usize) -> Self {
        CyclicRotation {
            arity,
            power: power % (arity + 1),
        }
    }
}

/// One layer of a morphism term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// Cabled twist `θ^power` on strands `[lo, hi)` (1-based, `hi`
    /// exclusive): the full twist of the block plus a framing on each
    /// strand.
    Twist { lo: usize, hi: usize, power: i64 },
    /// Block crossing of cables `[lo, mid)` and `[mid, hi)`. `opp` marks
    /// the `μ^opp`-sourced braiding variants; it does not affect the
    /// underlying braid.
    Cross {
        lo: usize,
        mid: usize,
        hi: usize,
        positive: bool,
        opp: bool,
    },
}

impl Step {
    fn check(&self, n: usize) -> Result<(), TermError> {
        let ok = match *self {
            Step::Twist { lo, hi, .. } => lo >= 1 && lo < hi && hi <= n + 1,
            Step::Cross { lo, mid, hi, .. } => lo >= 1 && lo < mid && mid < hi && hi <= n + 1,
        };
        if ok {
            Ok(())
        } else {
            Err(TermError::BadSpan)
        }
    }

    /// The inverse layer, written at its own boundary.
    fn inverse(&self) -> Step {
        match *self {
            Step::Twist { lo, hi, power } => Step::Twist { lo, hi, power: -power },
            Step::Cross {
                lo,
                mid,
                hi,
                positive,
                opp,
            } => Step::Cross {
                lo,
                mid: lo + (hi - mid),
                hi,
                positive: !positive,
                opp: !opp,
            },
        }
    }

    /// Applies the layer's permutation to a position-indexed vector.
    fn permute<T: Copy>(&self, state: &mut [T]) {
        if let Step::Cross { lo, mid, hi, .. } = *self {
            let mut block: Vec<T> = state[mid - 1..hi - 1].to_vec();
            block.extend_from_slice(&state[lo - 1..mid - 1]);
            state[lo - 1..hi - 1].copy_from_slice(&block);
        }
    }
}

/// A formal composite of whiskered generator morphisms on `n` strands,
/// together with the ordering of its source legs (default `1..n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismTerm {
    strands: usize,
    labels: Vec<u32>,
    steps: Vec<Step>,
}

impl MorphismTerm {
    pub fn new(strands: usize, steps: Vec<Step>) -> Result<Self, TermError> {
        for s in &steps {
            s.check(strands)?;
        }
        Ok(MorphismTerm {
            strands,
            labels: (1..=strands as u32).collect(),
            steps,
        })
    }

    pub fn identity(strands: usize) -> Self {
        MorphismTerm::new(strands, Vec::new()).expect("no steps to check")
    }

    /// The braiding `c : μ → μ^opp`.
    pub fn braiding_c() -> Self {
        MorphismTerm::new(
            2,
            vec![Step::Cross { lo: 1, mid: 2, hi: 3, positive: true, opp: false }],
        )
        .expect("valid")
    }

    /// The reverse braiding `c̄ : μ → μ^opp`.
    pub fn braiding_c_bar() -> Self {
        MorphismTerm::new(
            2,
            vec![Step::Cross { lo: 1, mid: 2, hi: 3, positive: false, opp: false }],
        )
        .expect("valid")
    }

    /// `c⁻¹ : μ^opp → μ`.
    pub fn braiding_c_inv() -> Self {
        MorphismTerm::new(
            2,
            vec![Step::Cross { lo: 1, mid: 2, hi: 3, positive: false, opp: true }],
        )
        .expect("valid")
    }

    /// `c̄⁻¹ : μ^opp → μ`.
    pub fn braiding_c_bar_inv() -> Self {
        MorphismTerm::new(
            2,
            vec![Step::Cross { lo: 1, mid: 2, hi: 3, positive: true, opp: true }],
        )
        .expect("valid")
    }

    /// The balancing `θ^k` whiskered onto the cable `[lo, hi)`.
    pub fn twist(strands: usize, lo: usize, hi: usize, power: i64) -> Result<Self, TermError> {
        MorphismTerm::new(strands, vec![Step::Twist { lo, hi, power }])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Vertical composition: `self` then `other`.
    pub fn then(&self, other: &MorphismTerm) -> Result<MorphismTerm, TermError> {
        if self.strands != other.strands {
            return Err(TermError::BoundaryMismatch);
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Ok(MorphismTerm {
            strands: self.strands,
            labels: self.labels.clone(),
            steps,
        })
    }

    /// The inverse composite; its source ordering is this term's target
    /// ordering.
    pub fn inverse(&self) -> MorphismTerm {
        let steps: Vec<Step> = self.steps.iter().rev().map(|s| s.inverse()).collect();
        MorphismTerm {
            strands: self.strands,
            labels: self.target_labels(),
            steps,
        }
    }

    /// Labels of the target ordering: the source labels carried through
    /// the underlying permutation.
    pub fn target_labels(&self) -> Vec<u32> {
        let pi = self.flatten().permutation();
        let mut out = vec![0u32; self.strands];
        for (i, &label) in self.labels.iter().enumerate() {
            out[pi.0[i]] = label;
        }
        out
    }

    /// Evaluates the composite in the framed braid group.
    pub fn flatten(&self) -> FramedBraid {
        let n = self.strands;
        let mut acc = FramedBraid::identity(n);
        for s in &self.steps {
            let piece = match *s {
                Step::Twist { lo, hi, power } => {
                    let mut twists = vec![0i64; n];
                    for t in twists.iter_mut().take(hi - 1).skip(lo - 1) {
                        *t = power;
                    }
                    FramedBraid::new(n, twists, super::full_twist_word(lo - 1, hi - lo, power))
                }
                Step::Cross { lo, mid, hi, positive, .. } => FramedBraid::new(
                    n,
                    vec![0; n],
                    super::block_crossing_word(lo - 1, mid - lo, hi - mid, positive),
                ),
            };
            acc = acc.then(&piece).expect("same strand count");
        }
        acc
    }

    /// Flattened equality including the source orderings.
    pub fn equals_flattened(&self, other: &MorphismTerm) -> bool {
        self.strands == other.strands
            && self.labels == other.labels
            && self.flatten().equals(&other.flatten())
    }

    /// The transposition action exchanging the two legs of an arity-2
    /// term: conjugates the diagram and toggles the braiding markers.
    pub fn transposed(&self) -> Result<MorphismTerm, TermError> {
        if self.strands != 2 {
            return Err(TermError::ArityMismatch);
        }
        let steps = self
            .steps
            .iter()
            .map(|s| match *s {
                Step::Twist { lo, hi, power } => {
                    if hi - lo == 2 {
                        Step::Twist { lo, hi, power }
                    } else {
                        Step::Twist { lo: 3 - lo, hi: 4 - lo, power }
                    }
                }
                Step::Cross { lo, mid, hi, positive, opp } => Step::Cross {
                    lo,
                    mid,
                    hi,
                    positive,
                    opp: !opp,
                },
            })
            .collect();
        Ok(MorphismTerm {
            strands: 2,
            labels: vec![self.labels[1], self.labels[0]],
            steps,
        })
    }

    /// The cyclic action `τ^power`.
    pub fn cyclic_act(&self, rot: CyclicRotation) -> Result<MorphismTerm, TermError> {
        if rot.arity != self.strands {
            return Err(TermError::ArityMismatch);
        }
        let mut out = self.clone();
        for _ in 0..rot.power {
            out = tau_once_with(&out, &TAU_TABLE)?;
        }
        Ok(out)
    }
}

/// Image of a braiding whose left cable carries input 1: a balancing
/// correction next to a crossing of the shifted right cable against the
/// block holding everything else including the old output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossImage {
    /// Correction twist on the shifted cable (true) or on the
    /// complement block (false).
    pub corr_on_shifted: bool,
    pub corr_power: i8,
    /// Correction before (true) or after (false) the crossing.
    pub corr_first: bool,
    pub cross_positive: bool,
    pub cross_opp: bool,
}

/// Generator-image table of the cyclic action: one entry per braiding
/// flavor, used when the flavor's left cable carries input 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TauTable {
    /// Image of `c` (positive, plain).
    pub c: CrossImage,
    /// Image of `c̄` (negative, plain).
    pub c_bar: CrossImage,
    /// Image of `c⁻¹` (negative, opp).
    pub c_inv: CrossImage,
    /// Image of `c̄⁻¹` (positive, opp).
    pub c_bar_inv: CrossImage,
}

impl TauTable {
    fn entry(&self, positive: bool, opp: bool) -> CrossImage {
        match (positive, opp) {
            (true, false) => self.c,
            (false, false) => self.c_bar,
            (false, true) => self.c_inv,
            (true, true) => self.c_bar_inv,
        }
    }
}

/// The assignment passing the full constraint suite: the rotation
/// orders, the transposition exchange, preservation of (T1), (T2),
/// (B1), (B2) under one and two rotations, and the full-rotation
/// identity on random composite terms. `τ(c)` is the reverse braiding
/// corrected by an inverse balancing on the incoming cable. Every
/// candidate table passing the suite induces the same images on the
/// four braidings after flattening (see the `table_selection` test);
/// the residual freedom is presentation slack.
pub const TAU_TABLE: TauTable = TauTable {
    c: CrossImage {
        corr_on_shifted: true,
        corr_power: -1,
        corr_first: true,
        cross_positive: false,
        cross_opp: true,
    },
    c_bar: CrossImage {
        corr_on_shifted: true,
        corr_power: 1,
        corr_first: true,
        cross_positive: true,
        cross_opp: true,
    },
    c_inv: CrossImage {
        corr_on_shifted: true,
        corr_power: 1,
        corr_first: true,
        cross_positive: true,
        cross_opp: true,
    },
    c_bar_inv: CrossImage {
        corr_on_shifted: true,
        corr_power: -1,
        corr_first: true,
        cross_positive: false,
        cross_opp: true,
    },
};

/// Locates a set of strand identities inside a position→identity vector,
/// requiring a contiguous interval; returns 1-based `[lo, hi)`.
fn locate(state: &[usize], ids: &[usize]) -> Result<(usize, usize), TermError> {
    let mut lo = usize::MAX;
    let mut hi = 0;
    let mut count = 0;
    for (p, id) in state.iter().enumerate() {
        if ids.contains(id) {
            lo = lo.min(p + 1);
            hi = hi.max(p + 2);
            count += 1;
        }
    }
    if count != ids.len() || count == 0 || hi - lo != count {
        return Err(TermError::CyclicImage);
    }
    Ok((lo, hi))
}

/// One application of the cyclic generator, using the given table.
pub fn tau_once_with(term: &MorphismTerm, table: &TauTable) -> Result<MorphismTerm, TermError> {
    let n = term.strands;
    if n == 0 {
        return Ok(term.clone());
    }
    // Source strands are identified with their initial positions 1..n.
    // In the image, input j ≥ 2 continues as identity j−1 and the old
    // output enters as identity 0, initially at the last position.
    let mut src: Vec<usize> = (1..=n).collect();
    let mut img: Vec<usize> = (1..n).chain(core::iter::once(0)).collect();
    let mut out: Vec<Step> = Vec::with_capacity(term.steps.len() * 2);

    for step in &term.steps {
        match *step {
            Step::Twist { lo, hi, power } => {
                let ids: Vec<usize> = src[lo - 1..hi - 1].to_vec();
                let span = if ids.contains(&1) {
                    // wraps through the output: the image curve encloses
                    // the complement of the shifted remainder
                    let keep: Vec<usize> =
                        ids.iter().filter(|&&j| j != 1).map(|&j| j - 1).collect();
                    let rest: Vec<usize> = (0..n).filter(|p| !keep.contains(p)).collect();
                    locate(&img, &rest)?
                } else {
                    let shifted: Vec<usize> = ids.iter().map(|&j| j - 1).collect();
                    locate(&img, &shifted)?
                };
                out.push(Step::Twist { lo: span.0, hi: span.1, power });
            }
            Step::Cross { lo, mid, hi, positive, opp } => {
                let a: Vec<usize> = src[lo - 1..mid - 1].to_vec();
                let b: Vec<usize> = src[mid - 1..hi - 1].to_vec();
                if a.contains(&1) {
                    emit_wrap_crossing(&mut out, &mut img, n, &a, &b, table.entry(positive, opp))?;
                } else if b.contains(&1) {
                    // input 1 in the right cable: the crossing is the
                    // inverse of the inverse-flavored crossing of
                    // (b | a); emit that image inverted
                    let entry = table.entry(!positive, !opp);
                    emit_wrap_crossing_inverted(&mut out, &mut img, n, &b, &a, entry)?;
                } else {
                    let sa: Vec<usize> = a.iter().map(|&j| j - 1).collect();
                    let sb: Vec<usize> = b.iter().map(|&j| j - 1).collect();
                    let (la, ha) = locate(&img, &sa)?;
                    let (lb, hb) = locate(&img, &sb)?;
                    if ha != lb {
                        return Err(TermError::CyclicImage);
                    }
                    let s = Step::Cross { lo: la, mid: lb, hi: hb, positive, opp };
                    s.permute(&mut img);
                    out.push(s);
                }
                Step::Cross { lo, mid, hi, positive, opp }.permute(&mut src);
            }
        }
    }

    Ok(MorphismTerm {
        strands: n,
        labels: term.labels.clone(),
        steps: out,
    })
}

/// Image cables of a wrap crossing with cables `(a | b)`, input 1 in
/// `a`: the shifted `b` and the complement block (bystanders plus the
/// old output).
fn wrap_cables(n: usize, a: &[usize], b: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let shifted: Vec<usize> = b.iter().map(|&j| j - 1).collect();
    let rest: Vec<usize> = (0..n)
        .filter(|&p| !shifted.contains(&p) && (p == 0 || !a.contains(&(p + 1))))
        .collect();
    (shifted, rest)
}

/// Emits the image of a crossing `(a | b)` whose left cable holds
/// input 1.
fn emit_wrap_crossing(
    out: &mut Vec<Step>,
    img: &mut [usize],
    n: usize,
    a: &[usize],
    b: &[usize],
    entry: CrossImage,
) -> Result<(), TermError> {
    let (shifted, rest) = wrap_cables(n, a, b);
    let (lb, hb) = locate(img, &shifted)?;
    let (lr, hr) = locate(img, &rest)?;
    if hb != lr {
        return Err(TermError::CyclicImage);
    }
    let cross = Step::Cross {
        lo: lb,
        mid: lr,
        hi: hr,
        positive: entry.cross_positive,
        opp: entry.cross_opp,
    };
    if entry.corr_first {
        let span = if entry.corr_on_shifted { (lb, hb) } else { (lr, hr) };
        out.push(Step::Twist { lo: span.0, hi: span.1, power: entry.corr_power as i64 });
        cross.permute(img);
        out.push(cross);
    } else {
        cross.permute(img);
        out.push(cross);
        // post-crossing positions: the blocks have exchanged places
        let span = if entry.corr_on_shifted {
            (lb + (hr - lr), hr)
        } else {
            (lb, lb + (hr - lr))
        };
        out.push(Step::Twist { lo: span.0, hi: span.1, power: entry.corr_power as i64 });
    }
    Ok(())
}

/// Emits the inverse of the image of the crossing `(a | b)` (input 1 in
/// `a`): used for source crossings carrying input 1 in their right
/// cable, which are inverses of such crossings.
fn emit_wrap_crossing_inverted(
    out: &mut Vec<Step>,
    img: &mut [usize],
    n: usize,
    a: &[usize],
    b: &[usize],
    entry: CrossImage,
) -> Result<(), TermError> {
    let (shifted, rest) = wrap_cables(n, a, b);
    // the uninverted image crosses (shifted | rest) ending at the
    // current layout, so here rest sits left of shifted
    let (lr, hr) = locate(img, &rest)?;
    let (lb, hb) = locate(img, &shifted)?;
    if hr != lb {
        return Err(TermError::CyclicImage);
    }
    let cross = Step::Cross {
        lo: lr,
        mid: lb,
        hi: hb,
        positive: !entry.cross_positive,
        opp: !entry.cross_opp,
    };
    if entry.corr_first {
        // inverted order: crossing first, then the negated correction at
        // the post-crossing position of its cable
        cross.permute(img);
        out.push(cross);
        let span = if entry.corr_on_shifted {
            (lr, lr + (hb - lb))
        } else {
            (lr + (hb - lb), hb)
        };
        out.push(Step::Twist { lo: span.0, hi: span.1, power: -entry.corr_power as i64 });
    } else {
        let span = if entry.corr_on_shifted { (lb, hb) } else { (lr, hr) };
        out.push(Step::Twist { lo: span.0, hi: span.1, power: -entry.corr_power as i64 });
        cross.permute(img);
        out.push(cross);
    }
    Ok(())
}
