//! Ribbon (framed) braid groups `RB_n = Z^n ⋊ B_n`, operation terms over
//! the generators `μ, u, c, θ`, cabling, and the cyclic action.
//!
//! A [`FramedBraid`] is a twist vector (framings, applied at the bottom of
//! the diagram) followed by a braid word. Equality is decidable through
//! the cached canonical pair (twist vector, Garside left-greedy normal
//! form); see [`garside`]. Diagrams compose bottom-to-top: `a.then(&b)`
//! stacks `b` on top of `a`.

pub mod garside;
pub mod relations;
pub mod terms;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use garside::{normal_form, NormalForm, Perm};

pub use relations::{check_cyclic_structure, check_rbr_relations};
pub use terms::{CyclicRotation, MorphismTerm, OpTerm, Step, TermError};

/// Strand-count mismatch in a group operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArityError {
    pub left: usize,
    pub right: usize,
}

impl fmt::Display for ArityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "strand counts differ: {} vs {}", self.left, self.right)
    }
}

/// An element of the ribbon braid group on `n` strands.
#[derive(Debug, Clone)]
pub struct FramedBraid {
    strands: usize,
    /// Framings by bottom position, applied before the braid word.
    twists: Vec<i64>,
    /// Signed 1-based generators in diagram order (bottom to top).
    word: Vec<i32>,
    nf: NormalForm,
}

impl FramedBraid {
    pub fn new(strands: usize, twists: Vec<i64>, word: Vec<i32>) -> Self {
        debug_assert_eq!(twists.len(), strands);
        debug_assert!(word
            .iter()
            .all(|&g| g != 0 && (g.unsigned_abs() as usize) < strands.max(1)));
        let nf = normal_form(strands, &word);
        FramedBraid {
            strands,
            twists,
            word,
            nf,
        }
    }

    pub fn identity(strands: usize) -> Self {
        FramedBraid::new(strands, vec![0; strands], Vec::new())
    }

    /// The generator `σ_i^±` (1-based).
    pub fn generator(strands: usize, i: usize, positive: bool) -> Self {
        assert!(i >= 1 && i < strands);
        FramedBraid::new(
            strands,
            vec![0; strands],
            vec![if positive { i as i32 } else { -(i as i32) }],
        )
    }

    /// The twist `t_i^k` on the strand at position `i` (1-based).
    pub fn twist(strands: usize, i: usize, k: i64) -> Self {
        assert!(i >= 1 && i <= strands);
        let mut twists = vec![0; strands];
        twists[i - 1] = k;
        FramedBraid::new(strands, twists, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    /// The cached canonical braid part.
    pub fn braid_normal_form(&self) -> &NormalForm {
        &self.nf
    }

    /// Underlying permutation, bottom position to top position.
    pub fn permutation(&self) -> Perm {
        self.nf.permutation()
    }

    pub fn is_identity(&self) -> bool {
        self.twists.iter().all(|&t| t == 0)
            && self.nf.power == 0
            && self.nf.factors.is_empty()
    }

    /// Group product: `self` stacked under `other`. The twist vector of
    /// `other` slides down through the braid part of `self`.
    pub fn then(&self, other: &FramedBraid) -> Result<FramedBraid, ArityError> {
        if self.strands != other.strands {
            return Err(ArityError {
                left: self.strands,
                right: other.strands,
            });
        }
        let pi = self.permutation();
        let twists: Vec<i64> = (0..self.strands)
            .map(|i| self.twists[i] + other.twists[pi.0[i]])
            .collect();
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Ok(FramedBraid::new(self.strands, twists, word))
    }

    pub fn inverse(&self) -> FramedBraid {
        let pi = self.permutation();
        // (v, β)⁻¹ = (−v ∘ π⁻¹ transported, β⁻¹)
        let mut twists = vec![0i64; self.strands];
        for i in 0..self.strands {
            twists[pi.0[i]] = -self.twists[i];
        }
        let word: Vec<i32> = self.word.iter().rev().map(|&g| -g).collect();
        FramedBraid::new(self.strands, twists, word)
    }

    pub fn pow(&self, k: i64) -> Result<FramedBraid, ArityError> {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = FramedBraid::identity(self.strands);
        for _ in 0..k.unsigned_abs() {
            acc = acc.then(&base)?;
        }
        Ok(acc)
    }

    /// Decidable equality: twist vectors and Garside normal forms agree.
    pub fn equals(&self, other: &FramedBraid) -> bool {
        self.strands == other.strands && self.twists == other.twists && self.nf == other.nf
    }

    /// Cables each strand into a ribbon of the given width. Crossings
    /// become block crossings of the affected cables, twists become
    /// cabled twists (full twist times strandwise twists); widths are
    /// tracked through the word as cables move.
    pub fn cable(&self, widths: &[usize]) -> FramedBraid {
        assert_eq!(widths.len(), self.strands, "one width per strand");
        let total: usize = widths.iter().sum();
        let mut twists = vec![0i64; total];
        let mut word: Vec<i32> = Vec::new();

        // cabled twists, in the bottom layout
        let mut offset = 0;
        for (i, &w) in widths.iter().enumerate() {
            let k = self.twists[i];
            if k != 0 && w > 0 {
                for t in twists.iter_mut().skip(offset).take(w) {
                    *t += k;
                }
                word.extend(full_twist_word(offset, w, k));
            }
            offset += w;
        }

        // the braid word, with the current cable layout tracked
        let mut layout: Vec<usize> = widths.to_vec();
        for &g in &self.word {
            let i = g.unsigned_abs() as usize; // crossing at cables i, i+1
            let o: usize = layout[..i - 1].iter().sum();
            let (a, b) = (layout[i - 1], layout[i]);
            word.extend(block_crossing_word(o, a, b, g > 0));
            layout.swap(i - 1, i);
        }

        FramedBraid::new(total, twists, word)
    }
}

impl PartialEq for FramedBraid {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for FramedBraid {}

/// Word for the cabled twist `Δ_w^{2k}` on strands `[offset, offset+w)`
/// (the strandwise framings are handled separately).
pub(crate) fn full_twist_word(offset: usize, w: usize, k: i64) -> Vec<i32> {
    if w < 2 || k == 0 {
        return Vec::new();
    }
    // Δ² = (σ₁ ⋯ σ_{w−1})^w, shifted by the offset
    let mut once: Vec<i32> = Vec::with_capacity(w * (w - 1));
    for _ in 0..w {
        for i in 1..w {
            once.push((offset + i) as i32);
        }
    }
    let mut out = Vec::with_capacity(once.len() * k.unsigned_abs() as usize);
    for _ in 0..k.unsigned_abs() {
        if k > 0 {
            out.extend_from_slice(&once);
        } else {
            out.extend(once.iter().rev().map(|&g| -g));
        }
    }
    out
}

/// Word for the block crossing exchanging cables `[o, o+a)` and
/// `[o+a, o+a+b)`. Both signs swap the blocks; the negative crossing is
/// the inverse of the positive crossing of the swapped widths.
pub(crate) fn block_crossing_word(o: usize, a: usize, b: usize, positive: bool) -> Vec<i32> {
    if a == 0 || b == 0 {
        return Vec::new();
    }
    if !positive {
        let w = block_crossing_word(o, b, a, true);
        return w.iter().rev().map(|&g| -g).collect();
    }
    let n = o + a + b;
    let mut perm: Vec<usize> = (0..n).collect();
    for (j, p) in perm.iter_mut().enumerate().skip(o) {
        if j < o + a {
            *p = j + b;
        } else {
            *p = j - a;
        }
    }
    Perm(perm).reduced_word().iter().map(|&i| i as i32).collect()
}
