//! Exact algebra for handlebody-group representations built from pointed
//! balanced braided Grothendieck-Verdier categories.
//!
//! The crate is organized around five layers:
//!
//! * [`cyclotomic`] — exact arithmetic in the cyclotomic fields `Q(ζ_N)`.
//!   Every categorical scalar in this crate is a [`cyclotomic::CycNumber`];
//!   no floating point is used anywhere in the computation path.
//! * [`graphs`] — half-edge graphs, the categories `Graphs` / `Forests` /
//!   `RForests` with substitution composition, standard factorizations of
//!   forest morphisms, and ribbon graphs with edge contraction.
//! * [`braid`] — ribbon (framed) braid groups with a decidable word problem
//!   via Garside left-greedy normal forms, operadic cabling, morphism terms
//!   over the generators `μ, u, c, θ`, and the cyclic action on them.
//! * [`pointed`] — finite abelian groups, quadratic forms, abelian
//!   3-cocycles, and pointed categories `Vect_G^{ω,g₀}` together with
//!   executable coherence suites (pivotal, hexagon, balanced braided).
//! * [`blocks`] — the coend `𝔽`, block spaces `V_{g,n}(a⃗)`, mapping-class
//!   operators (handle twists, boundary twists, boundary braidings), the
//!   genus-zero ribbon-braid action, excision/sewing checks and ribbon-graph
//!   evaluation.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line live in the companion `gvcalc` crate.

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod blocks;
pub mod braid;
pub mod cyclotomic;
pub mod graphs;
pub mod pointed;
pub mod report;

pub use cyclotomic::CycNumber;
pub use report::{Failure, SuiteReport};
