//! The category description file format.
//!
//! A file describes a pointed category over a finite abelian group in a
//! line-oriented structured text format. Lines are `key value...`;
//! `#` starts a comment. Two styles are supported:
//!
//! Quadratic-form style (cyclic factors with standard cocycles):
//!
//! ```text
//! # the running example
//! group 4          # cyclic factor orders
//! q 1              # one exponent per factor: q_i(1) = ζ^{e}, with
//!                  # ζ of order 2n_i (even n_i) or n_i (odd n_i)
//! h0 1             # one residue per factor, g₀ = −2·h₀
//! cross 0 1 1      # optional: bicharacter cross term between factors
//!                  # i < j with exponent e: β(a,b) = ζ_gcd^{e·a·b}
//! ```
//!
//! Explicit-table style (arbitrary `(λ, τ)` as root-of-unity exponents):
//!
//! ```text
//! group 2
//! h0 0
//! zeta 4           # ζ = ζ_N for the exponents below
//! lambda 0 0 0 0 0 0 0 0     # |G|³ entries, row-major over (a,b,c)
//! tau 0 0 0 1                # |G|² entries, row-major over (a,b)
//! ```
//!
//! Unknown keys are rejected. Parsing reports the line number; category
//! validation names the violated axiom and its witness.

use std::fmt;

use gvcalc_core::cyclotomic::CycNumber;
use gvcalc_core::pointed::{
    make_product_cocycle, AbelianCocycle, CrossTerm, CyclicFactor, Elem, FiniteAbelianGroup,
    PointedGVCategory,
};

/// Parse or validation failure, with position information where
/// available.
#[derive(Debug)]
pub enum CategoryFileError {
    Grammar { line: usize, message: String },
    MissingKey(&'static str),
    Validation { axiom: String, witness: Vec<i64> },
}

impl fmt::Display for CategoryFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CategoryFileError::Grammar { line, message } => {
                write!(f, "line {}: {}", line, message)
            }
            CategoryFileError::MissingKey(k) => write!(f, "missing required key `{}`", k),
            CategoryFileError::Validation { axiom, witness } => {
                write!(f, "invariant `{}` violated at witness {:?}", axiom, witness)
            }
        }
    }
}

impl std::error::Error for CategoryFileError {}

#[derive(Debug, Default)]
struct RawFile {
    group: Option<Vec<u64>>,
    q: Option<Vec<i64>>,
    h0: Option<Vec<u64>>,
    cross: Vec<(usize, usize, i64)>,
    zeta: Option<u64>,
    lambda: Option<Vec<i64>>,
    tau: Option<Vec<i64>>,
}

fn parse_numbers<T: std::str::FromStr>(
    line: usize,
    parts: &[&str],
) -> Result<Vec<T>, CategoryFileError> {
    parts
        .iter()
        .map(|p| {
            p.parse::<T>().map_err(|_| CategoryFileError::Grammar {
                line,
                message: format!("cannot parse `{}` as a number", p),
            })
        })
        .collect()
}

fn parse_raw(text: &str) -> Result<RawFile, CategoryFileError> {
    let mut raw = RawFile::default();
    for (idx, full_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = full_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let key = parts.next().expect("nonempty line");
        let rest: Vec<&str> = parts.collect();
        match key {
            "group" => raw.group = Some(parse_numbers(line_no, &rest)?),
            "q" => raw.q = Some(parse_numbers(line_no, &rest)?),
            "h0" => raw.h0 = Some(parse_numbers(line_no, &rest)?),
            "zeta" => {
                let v: Vec<u64> = parse_numbers(line_no, &rest)?;
                if v.len() != 1 {
                    return Err(CategoryFileError::Grammar {
                        line: line_no,
                        message: "zeta takes exactly one order".into(),
                    });
                }
                raw.zeta = Some(v[0]);
            }
            "lambda" => raw.lambda = Some(parse_numbers(line_no, &rest)?),
            "tau" => raw.tau = Some(parse_numbers(line_no, &rest)?),
            "cross" => {
                let v: Vec<i64> = parse_numbers(line_no, &rest)?;
                if v.len() != 3 {
                    return Err(CategoryFileError::Grammar {
                        line: line_no,
                        message: "cross takes `i j exponent`".into(),
                    });
                }
                raw.cross.push((v[0] as usize, v[1] as usize, v[2]));
            }
            other => {
                return Err(CategoryFileError::Grammar {
                    line: line_no,
                    message: format!("unknown key `{}`", other),
                })
            }
        }
    }
    Ok(raw)
}

/// Parses the structural content without running the coherence
/// validation; used by `check`, which reports violations instead of
/// refusing to construct.
pub fn parse_category_unchecked(text: &str) -> Result<PointedGVCategory, CategoryFileError> {
    let raw = parse_raw(text)?;
    let factors = raw.group.ok_or(CategoryFileError::MissingKey("group"))?;
    let h0 = raw.h0.ok_or(CategoryFileError::MissingKey("h0"))?;
    if h0.len() != factors.len() {
        return Err(CategoryFileError::Grammar {
            line: 0,
            message: "h0 must list one residue per group factor".into(),
        });
    }
    let group = FiniteAbelianGroup::new(factors.clone());
    let n = group.order() as usize;
    let h0: Elem = factors.iter().zip(h0.iter()).map(|(&f, &x)| x % f).collect();

    if let (Some(zeta), Some(lambda), Some(tau)) = (raw.zeta, &raw.lambda, &raw.tau) {
        if lambda.len() != n * n * n {
            return Err(CategoryFileError::Grammar {
                line: 0,
                message: format!("lambda needs |G|³ = {} entries, got {}", n * n * n, lambda.len()),
            });
        }
        if tau.len() != n * n {
            return Err(CategoryFileError::Grammar {
                line: 0,
                message: format!("tau needs |G|² = {} entries, got {}", n * n, tau.len()),
            });
        }
        let to_scalar = |e: &i64| CycNumber::root_of_unity(zeta, *e).expect("zeta order checked");
        let cocycle = AbelianCocycle::new(
            &group,
            lambda.iter().map(to_scalar).collect(),
            tau.iter().map(to_scalar).collect(),
        );
        return Ok(PointedGVCategory::new_unchecked(group, cocycle, h0));
    }

    let q = raw.q.ok_or(CategoryFileError::MissingKey("q (or zeta/lambda/tau)"))?;
    if q.len() != factors.len() {
        return Err(CategoryFileError::Grammar {
            line: 0,
            message: "q must list one exponent per group factor".into(),
        });
    }
    let specs: Vec<CyclicFactor> = factors
        .iter()
        .zip(q.iter())
        .map(|(&order, &q1_exponent)| CyclicFactor { order, q1_exponent })
        .collect();
    let cross: Vec<CrossTerm> = raw
        .cross
        .iter()
        .map(|&(i, j, exponent)| CrossTerm { i, j, exponent })
        .collect();
    for ct in &cross {
        if ct.i >= ct.j || ct.j >= factors.len() {
            return Err(CategoryFileError::Grammar {
                line: 0,
                message: "cross term needs factor indices i < j within the group".into(),
            });
        }
    }
    let (group, cocycle) = make_product_cocycle(&specs, &cross);
    Ok(PointedGVCategory::new_unchecked(group, cocycle, h0))
}

/// Parses and validates a category description; errors name the first
/// violated axiom.
pub fn parse_category(text: &str) -> Result<PointedGVCategory, CategoryFileError> {
    let cat = parse_category_unchecked(text)?;
    let report = cat.validate_cocycle();
    if let Some(first) = report.failures.first() {
        return Err(CategoryFileError::Validation {
            axiom: first.axiom.clone(),
            witness: first.witness.clone(),
        });
    }
    Ok(cat)
}

/// Parses a comma-separated label list such as `1,3,0`; for product
/// groups an element's residues are joined by dots: `1.0,0.1`.
pub fn parse_labels(
    cat: &PointedGVCategory,
    text: &str,
) -> Result<Vec<Elem>, CategoryFileError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let factors = cat.group().factors();
    text.split(',')
        .map(|tok| {
            let comps: Vec<&str> = tok.trim().split('.').collect();
            if comps.len() != factors.len() {
                return Err(CategoryFileError::Grammar {
                    line: 0,
                    message: format!(
                        "label `{}` needs {} dot-separated residues",
                        tok,
                        factors.len()
                    ),
                });
            }
            comps
                .iter()
                .zip(factors.iter())
                .map(|(c, &f)| {
                    c.parse::<u64>()
                        .map(|x| x % f)
                        .map_err(|_| CategoryFileError::Grammar {
                            line: 0,
                            message: format!("cannot parse label residue `{}`", c),
                        })
                })
                .collect()
        })
        .collect()
}
