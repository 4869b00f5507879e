//! Garside left-greedy normal forms for the braid groups `B_n`.
//!
//! A braid word is rewritten as `Δ^p · A₁ ⋯ A_k` where `Δ` is the half
//! twist and each `A_i` is a permutation braid (simple element) strictly
//! between the identity and `Δ`, with every adjacent pair left-weighted:
//! the starting set of `A_{i+1}` is contained in the finishing set of
//! `A_i`. This factorization is unique, so braid equality is structural
//! equality of normal forms.
//!
//! Permutation braids are stored as position permutations; `perm[i]` is
//! where the strand entering at position `i` (0-based) exits. Products
//! read left to right in diagram order: `(a·b)(x) = b(a(x))`.

use alloc::vec;
use alloc::vec::Vec;

/// A permutation of `0..n`, doubling as a permutation braid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// The half twist: full reversal.
    pub fn delta(n: usize) -> Self {
        Perm((0..n).rev().collect())
    }

    pub fn is_delta(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &x)| x == self.n() - 1 - i)
    }

    /// Adjacent transposition `σ_i` (1-based generator index).
    pub fn sigma(n: usize, i: usize) -> Self {
        debug_assert!(i >= 1 && i < n);
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i - 1, i);
        Perm(v)
    }

    /// Diagram-order product: `self` then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0usize; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x] = i;
        }
        Perm(v)
    }

    /// Word length = inversion count.
    pub fn len(&self) -> usize {
        let v = &self.0;
        let mut c = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// `Δ A Δ⁻¹`, the mirror automorphism on simples.
    pub fn flip(&self) -> Perm {
        let n = self.n();
        let mut v = vec![0usize; n];
        for i in 0..n {
            v[i] = n - 1 - self.0[n - 1 - i];
        }
        Perm(v)
    }

    /// Starting set: generators `σ_{i+1}` with `ℓ(σ·A) < ℓ(A)`,
    /// i.e. descents at the entry side.
    fn starting_set(&self) -> Vec<usize> {
        (0..self.n().saturating_sub(1))
            .filter(|&i| self.0[i] > self.0[i + 1])
            .collect()
    }

    /// Finishing set: generators with `ℓ(A·σ) < ℓ(A)`, descents at the
    /// exit side.
    fn finishing_contains(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i] > inv.0[i + 1]
    }

    /// A positive reduced word for the permutation braid, as 1-based
    /// generator indices (bubble sort).
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        let mut word = Vec::new();
        // peel crossings from the entry side: each adjacent swap of the
        // image list factors the permutation as σ_i · rest, so the swaps
        // come out in diagram order
        loop {
            let mut swapped = false;
            for i in 0..v.len().saturating_sub(1) {
                if v[i] > v[i + 1] {
                    v.swap(i, i + 1);
                    word.push(i + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        word
    }
}

/// Left-greedy normal form `Δ^power · factors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub n: usize,
    pub power: i64,
    pub factors: Vec<Perm>,
}

impl NormalForm {
    pub fn identity(n: usize) -> Self {
        NormalForm {
            n,
            power: 0,
            factors: Vec::new(),
        }
    }

    /// Underlying permutation of the whole braid.
    pub fn permutation(&self) -> Perm {
        let mut p = if self.power.rem_euclid(2) == 1 {
            Perm::delta(self.n)
        } else {
            Perm::identity(self.n)
        };
        for f in &self.factors {
            p = p.then(f);
        }
        p
    }
}

/// Computes the left-greedy normal form of a signed braid word
/// (1-based generators, negative for inverses).
pub fn normal_form(n: usize, word: &[i32]) -> NormalForm {
    let mut power: i64 = 0;
    let mut factors: Vec<Perm> = Vec::new();

    for &g in word {
        debug_assert!(g != 0 && (g.unsigned_abs() as usize) < n.max(1));
        let i = g.unsigned_abs() as usize;
        if g > 0 {
            factors.push(Perm::sigma(n, i));
        } else {
            // σ_i⁻¹ = Δ⁻¹ · (Δ σ_i⁻¹); push the Δ⁻¹ all the way left,
            // flipping the factors it passes
            let tail = Perm::delta(n).then(&Perm::sigma(n, i));
            for f in factors.iter_mut() {
                *f = f.flip();
            }
            power -= 1;
            factors.push(tail);
        }
    }

    normalize(n, power, factors)
}

fn normalize(n: usize, mut power: i64, mut factors: Vec<Perm>) -> NormalForm {
    loop {
        let mut changed = false;

        // drop identities, absorb deltas into the power
        let mut cleaned: Vec<Perm> = Vec::with_capacity(factors.len());
        for f in factors.into_iter() {
            if f.is_identity() {
                changed = true;
            } else if f.is_delta() {
                for g in cleaned.iter_mut() {
                    *g = g.flip();
                }
                power += 1;
                changed = true;
            } else {
                cleaned.push(f);
            }
        }
        factors = cleaned;

        // local slides toward left-weightedness
        for i in 0..factors.len().saturating_sub(1) {
            loop {
                let mut moved = false;
                for s in factors[i + 1].starting_set() {
                    if !factors[i].finishing_contains(s) {
                        let t = Perm::sigma(n, s + 1);
                        factors[i] = factors[i].then(&t);
                        factors[i + 1] = t.then(&factors[i + 1]);
                        moved = true;
                        changed = true;
                        break;
                    }
                }
                if !moved {
                    break;
                }
            }
        }

        if !changed {
            return NormalForm { n, power, factors };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nf(n: usize, word: &[i32]) -> NormalForm {
        normal_form(n, word)
    }

    #[test]
    fn braid_relation() {
        assert_eq!(nf(3, &[1, 2, 1]), nf(3, &[2, 1, 2]));
        assert_ne!(nf(3, &[1]), nf(3, &[-1]));
        assert_eq!(nf(3, &[1, -1]), NormalForm::identity(3));
        assert_eq!(nf(3, &[-2, 2]), NormalForm::identity(3));
    }

    #[test]
    fn full_twist_identity() {
        // Δ₃² = (σ₁σ₂)³
        let delta = [1, 2, 1];
        let mut delta2 = delta.to_vec();
        delta2.extend_from_slice(&delta);
        assert_eq!(nf(3, &delta2), nf(3, &[1, 2, 1, 2, 1, 2]));
        assert_eq!(nf(3, &delta2).power, 2);
        assert!(nf(3, &delta2).factors.is_empty());
    }

    #[test]
    fn distant_generators_commute() {
        assert_eq!(nf(4, &[1, 3]), nf(4, &[3, 1]));
        assert_ne!(nf(4, &[1, 2]), nf(4, &[2, 1]));
    }

    #[test]
    fn reduced_words_roundtrip() {
        for perm in [
            Perm(vec![1, 2, 0]),
            Perm(vec![2, 0, 1]),
            Perm::delta(4),
            Perm(vec![1, 0, 3, 2]),
        ] {
            let word: Vec<i32> = perm.reduced_word().iter().map(|&i| i as i32).collect();
            assert_eq!(word.len(), perm.len());
            let back = nf(perm.n(), &word);
            assert_eq!(back.permutation(), perm);
        }
    }

    proptest! {
        #[test]
        fn word_problem_invariance(seed in proptest::collection::vec(-3i32..=3, 0..12), pos in 0usize..12) {
            // insert a relator at a random position: normal form unchanged
            let n = 4usize;
            let word: Vec<i32> = seed.into_iter().filter(|&g| g != 0).collect();
            let p = pos.min(word.len());
            for relator in [
                alloc::vec![1, -1],
                alloc::vec![-2, 2],
                alloc::vec![1, 2, 1, -2, -1, -2],
                alloc::vec![1, 3, -1, -3],
            ] {
                let mut w2 = word.clone();
                for (k, &g) in relator.iter().enumerate() {
                    w2.insert(p + k, g);
                }
                prop_assert_eq!(normal_form(n, &word), normal_form(n, &w2));
            }
        }

        #[test]
        fn permutation_tracks_word(word in proptest::collection::vec(-3i32..=3, 0..10)) {
            let n = 4usize;
            let word: Vec<i32> = word.into_iter().filter(|&g| g != 0).collect();
            let mut p = Perm::identity(n);
            for &g in &word {
                p = p.then(&Perm::sigma(n, g.unsigned_abs() as usize));
            }
            prop_assert_eq!(normal_form(n, &word).permutation(), p);
        }
    }
}
