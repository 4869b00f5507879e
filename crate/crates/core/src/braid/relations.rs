//! Executable relation suites for the ribbon-braid operad: the braiding
//! and balancing relations (T1), (T2), (B1), (B2) together with the
//! framed exchange relations, checked as normal-form equalities over all
//! generator placements up to a strand bound, and the cyclic-structure
//! suite (orders of the rotations, the transposition exchange, and
//! preservation of the relations under the cyclic action).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::report::{Failure, SuiteReport};

use super::terms::{tau_once_with, CyclicRotation, MorphismTerm, Step, TauTable, TAU_TABLE};

fn cross(lo: usize, mid: usize, hi: usize, positive: bool, opp: bool) -> Step {
    Step::Cross { lo, mid, hi, positive, opp }
}

fn twist(lo: usize, hi: usize, power: i64) -> Step {
    Step::Twist { lo, hi, power }
}

fn term(n: usize, steps: Vec<Step>) -> MorphismTerm {
    MorphismTerm::new(n, steps).expect("relation instances are well-formed")
}

fn record_pair(
    rep: &mut SuiteReport,
    axiom: &str,
    witness: &[i64],
    lhs: &MorphismTerm,
    rhs: &MorphismTerm,
) {
    rep.record(if lhs.flatten().equals(&rhs.flatten()) {
        None
    } else {
        Some(Failure {
            axiom: String::from(axiom),
            witness: witness.to_vec(),
            lhs: None,
            rhs: None,
            detail: format!("normal forms differ on {} strands", lhs.strands()),
        })
    });
}

/// A relation instance: two terms expected to flatten to equal framed
/// braids.
#[derive(Debug)]
pub struct RelationInstance {
    pub axiom: &'static str,
    pub witness: Vec<i64>,
    pub lhs: MorphismTerm,
    pub rhs: MorphismTerm,
}

/// Enumerates the defining relations over all cable placements with at
/// most `n` strands.
pub fn relation_instances(n: usize) -> Vec<RelationInstance> {
    let mut out = Vec::new();

    for total in 2..=n {
        // (T1): the balancing slides through the braiding, on both cables
        for lo in 1..=total {
            for mid in lo + 1..=total {
                for hi in mid + 1..=total + 1 {
                    let x = cross(lo, mid, hi, true, false);
                    let (a, b) = ((lo, mid), (mid, hi));
                    // twist on the left cable emerges on the right
                    out.push(RelationInstance {
                        axiom: "T1-left",
                        witness: vec![total as i64, lo as i64, mid as i64, hi as i64],
                        lhs: term(total, vec![twist(a.0, a.1, 1), x]),
                        rhs: term(total, vec![x, twist(lo + (hi - mid), hi, 1)]),
                    });
                    // twist on the right cable emerges on the left
                    out.push(RelationInstance {
                        axiom: "T1-right",
                        witness: vec![total as i64, lo as i64, mid as i64, hi as i64],
                        lhs: term(total, vec![twist(b.0, b.1, 1), x]),
                        rhs: term(total, vec![x, twist(lo, lo + (hi - mid), 1)]),
                    });

                    // (T2): cabled balancing = double braiding after the
                    // strandwise balancings
                    out.push(RelationInstance {
                        axiom: "T2",
                        witness: vec![total as i64, lo as i64, mid as i64, hi as i64],
                        lhs: term(total, vec![twist(lo, hi, 1)]),
                        rhs: term(
                            total,
                            vec![
                                twist(lo, mid, 1),
                                twist(mid, hi, 1),
                                cross(lo, mid, hi, true, false),
                                cross(lo, lo + (hi - mid), hi, true, true),
                            ],
                        ),
                    });
                }
            }
        }

        // (B1), (B2): the hexagons as cabled crossings
        for l in 1..=total {
            for m in l + 1..=total {
                for p in m + 1..=total {
                    for h in p + 1..=total + 1 {
                        // (B1): crossing A past B⊗C equals crossing past B
                        // then past C
                        out.push(RelationInstance {
                            axiom: "B1",
                            witness: vec![total as i64, l as i64, m as i64, p as i64, h as i64],
                            lhs: term(total, vec![cross(l, m, h, true, false)]),
                            rhs: term(
                                total,
                                vec![
                                    cross(l, m, p, true, false),
                                    cross(l + (p - m), p, h, true, false),
                                ],
                            ),
                        });
                        // (B2): crossing A⊗B past C equals crossing B then A
                        out.push(RelationInstance {
                            axiom: "B2",
                            witness: vec![total as i64, l as i64, m as i64, p as i64, h as i64],
                            lhs: term(total, vec![cross(l, p, h, true, false)]),
                            rhs: term(
                                total,
                                vec![
                                    cross(m, p, h, true, false),
                                    cross(l, m, m + (h - p), true, false),
                                ],
                            ),
                        });
                    }
                }
            }
        }
    }

    // framed exchange at single-strand level: σ_i t_j σ_i⁻¹ = t_{s_i(j)}
    for total in 2..=n {
        for i in 1..total {
            for j in 1..=total {
                let s = cross(i, i + 1, i + 2, true, false);
                let sj = if j == i {
                    i + 1
                } else if j == i + 1 {
                    i
                } else {
                    j
                };
                out.push(RelationInstance {
                    axiom: "framed-exchange",
                    witness: vec![total as i64, i as i64, j as i64],
                    lhs: term(total, vec![twist(j, j + 1, 1), s]),
                    rhs: term(total, vec![s, twist(sj, sj + 1, 1)]),
                });
            }
        }
    }

    // braid relations as a cabling sanity check
    for total in 3..=n {
        for i in 1..total - 1 {
            let s1 = cross(i, i + 1, i + 2, true, false);
            let s2 = cross(i + 1, i + 2, i + 3, true, false);
            out.push(RelationInstance {
                axiom: "braid-relation",
                witness: vec![total as i64, i as i64],
                lhs: term(total, vec![s1, s2, s1]),
                rhs: term(total, vec![s2, s1, s2]),
            });
        }
    }

    out
}

/// Verifies (T1), (T2), (B1), (B2) and the framed exchange relations as
/// normal-form equalities for all generator placements with at most `n`
/// strands.
pub fn check_rbr_relations(n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("rbr-relations");
    for inst in relation_instances(n) {
        record_pair(&mut rep, inst.axiom, &inst.witness, &inst.lhs, &inst.rhs);
    }
    rep
}

/// A tiny deterministic generator for random morphism terms
/// (xorshift64*), good enough to sample the term calculus.
#[derive(Debug)]
pub struct TermSampler {
    state: u64,
}

impl TermSampler {
    pub fn new(seed: u64) -> Self {
        TermSampler {
            state: seed.max(1),
        }
    }

    fn next(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }

    /// A random term of the given arity: a vertical composite of
    /// whiskered generators with consistent source markers, built by
    /// simulating crossings on a bracketing of the strands.
    pub fn term(&mut self, strands: usize, layers: usize) -> MorphismTerm {
        #[derive(Clone)]
        struct Node {
            lo: usize,
            hi: usize,
            mid: Option<usize>,
            opp: bool,
        }
        // nodes of a left-normed bracketing: (..((1 2) 3) .. n)
        let mut nodes: Vec<Node> = (2..=strands)
            .map(|k| Node { lo: 1, hi: k + 1, mid: Some(k), opp: false })
            .collect();
        if nodes.is_empty() {
            nodes.push(Node { lo: 1, hi: 2, mid: None, opp: false });
        }
        let mut steps = Vec::new();
        for _ in 0..layers {
            let pick = self.below(nodes.len() + strands);
            if pick < nodes.len() && nodes[pick].mid.is_some() {
                let positive = self.next() & 1 == 0;
                let n = nodes[pick].clone();
                let mid = n.mid.expect("checked");
                steps.push(cross(n.lo, mid, n.hi, positive, n.opp));
                nodes[pick].opp = !n.opp;
                nodes[pick].mid = Some(n.lo + (n.hi - mid));
            } else {
                // cabled twist on a random interval
                let lo = 1 + self.below(strands);
                let hi = lo + 1 + self.below(strands + 1 - lo);
                let power = self.below(3) as i64 - 1;
                if power != 0 {
                    steps.push(twist(lo, hi, power));
                }
            }
        }
        term(strands, steps)
    }
}

fn tau_k(x: &MorphismTerm, k: usize, table: &TauTable) -> Result<MorphismTerm, super::TermError> {
    let mut out = x.clone();
    for _ in 0..k {
        out = tau_once_with(&out, table)?;
    }
    Ok(out)
}

/// The cyclic-structure suite against a given generator-image table:
/// `Z(τ₂)² = id` and `Z(τ₃)³ = id` on all arity-≤2 generator morphisms
/// and on `samples` random terms of arity ≤ 3, the transposition
/// exchange `τσ = στ²`, functoriality on inverses, and preservation of
/// (T1), (T2), (B1), (B2) under one and two rotations.
pub fn check_cyclic_structure_with(n: usize, samples: usize, table: &TauTable) -> SuiteReport {
    let mut rep = SuiteReport::new("cyclic-structure");

    let arity2_generators = [
        MorphismTerm::braiding_c(),
        MorphismTerm::braiding_c_bar(),
        MorphismTerm::braiding_c_inv(),
        MorphismTerm::braiding_c_bar_inv(),
        MorphismTerm::twist(2, 1, 2, 1).expect("valid"),
        MorphismTerm::twist(2, 2, 3, 1).expect("valid"),
        MorphismTerm::twist(2, 1, 3, 1).expect("valid"),
    ];

    // Z(τ₂)² = id on arity-1 morphisms
    for k in [-2i64, 1, 3] {
        let th = MorphismTerm::twist(1, 1, 2, k).expect("valid");
        match tau_k(&th, 2, table) {
            Ok(img) => record_pair(&mut rep, "tau2-squared", &[k], &img, &th),
            Err(_) => rep.record(Some(Failure {
                axiom: String::from("tau2-squared"),
                witness: vec![k],
                lhs: None,
                rhs: None,
                detail: String::from("cyclic image failed"),
            })),
        }
        // and the action fixes the balancing itself
        match tau_k(&th, 1, table) {
            Ok(img) => record_pair(&mut rep, "tau-fixes-theta", &[k], &img, &th),
            Err(_) => rep.record(Some(Failure {
                axiom: String::from("tau-fixes-theta"),
                witness: vec![k],
                lhs: None,
                rhs: None,
                detail: String::from("cyclic image failed"),
            })),
        }
    }

    // Z(τ₃)³ = id on arity-2 generator morphisms
    for (i, g) in arity2_generators.iter().enumerate() {
        match tau_k(g, 3, table) {
            Ok(img) => record_pair(&mut rep, "tau3-cubed-generators", &[i as i64], &img, g),
            Err(_) => rep.record(Some(Failure {
                axiom: String::from("tau3-cubed-generators"),
                witness: vec![i as i64],
                lhs: None,
                rhs: None,
                detail: String::from("cyclic image failed"),
            })),
        }
    }

    // exchange τσ = στ²
    for (i, g) in arity2_generators.iter().enumerate() {
        let lhs = g
            .transposed()
            .ok()
            .and_then(|t| tau_k(&t, 1, table).ok());
        let rhs = tau_k(g, 2, table).ok().and_then(|t| t.transposed().ok());
        match (lhs, rhs) {
            (Some(l), Some(r)) => record_pair(&mut rep, "exchange-tau-sigma", &[i as i64], &l, &r),
            _ => rep.record(Some(Failure {
                axiom: String::from("exchange-tau-sigma"),
                witness: vec![i as i64],
                lhs: None,
                rhs: None,
                detail: String::from("cyclic image failed"),
            })),
        }
    }

    // the cyclic action preserves the defining relations (one and two
    // applications)
    for inst in relation_instances(n.min(4)) {
        let arity = inst.lhs.strands();
        for k in 1..=2usize {
            let li = tau_k(&inst.lhs, k, table);
            let ri = tau_k(&inst.rhs, k, table);
            match (li, ri) {
                (Ok(l), Ok(r)) => {
                    let mut w = vec![k as i64, arity as i64];
                    w.extend_from_slice(&inst.witness);
                    record_pair(&mut rep, "tau-preserves-relations", &w, &l, &r);
                }
                _ => rep.record(Some(Failure {
                    axiom: String::from("tau-preserves-relations"),
                    witness: inst.witness.clone(),
                    lhs: None,
                    rhs: None,
                    detail: String::from("cyclic image failed"),
                })),
            }
        }
    }

    // full rotation order on random composite terms of arity ≤ 3
    let mut sampler = TermSampler::new(0x5EED_CAB1E5);
    for i in 0..samples {
        let arity = 2 + (i % 2);
        let x = sampler.term(arity, 4 + i % 4);
        match tau_k(&x, arity + 1, table) {
            Ok(img) => record_pair(&mut rep, "tau-order-random-terms", &[i as i64], &img, &x),
            Err(_) => rep.record(Some(Failure {
                axiom: String::from("tau-order-random-terms"),
                witness: vec![i as i64],
                lhs: None,
                rhs: None,
                detail: String::from("cyclic image failed"),
            })),
        }
    }

    rep
}

/// The cyclic-structure suite with the pinned generator-image table.
pub fn check_cyclic_structure(n: usize, samples: usize) -> SuiteReport {
    check_cyclic_structure_with(n, samples, &TAU_TABLE)
}

/// Rotating a term through its full cyclic order using the public API.
pub fn full_rotation(x: &MorphismTerm) -> Result<MorphismTerm, super::TermError> {
    x.cyclic_act(CyclicRotation::new(x.strands(), x.strands() + 1))
}
