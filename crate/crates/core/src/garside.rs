//! Left normal form in the classical Garside structure of `B_n`.
//!
//! A positive braid in which every pair of strands crosses at most once is a
//! permutation braid and is determined by its permutation, so all factor
//! arithmetic below happens on [`Permutation`]s.

use alloc::vec::Vec;

use crate::braid::{BraidWord, Permutation};
use crate::{Error, Result};

/// `Δ^infimum · A_1 ⋯ A_m` with every `A_t` a proper, nontrivial permutation
/// braid and every adjacent pair left-weighted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub strands: usize,
    pub infimum: i64,
    pub factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// Canonical length `m`.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }
}

fn half_twist(n: usize) -> Permutation {
    Permutation::from_images((0..n).rev().collect()).expect("reversal is a bijection")
}

fn transposition(n: usize, g: usize) -> Permutation {
    let mut p = Permutation::identity(n);
    p.swap_positions(g);
    p
}

/// Conjugation by the half twist, `σ_i ↦ σ_{n-i}`.
fn flip(p: &Permutation) -> Permutation {
    let n = p.len();
    Permutation::from_images((0..n).map(|x| n - 1 - p.image(n - 1 - x)).collect())
        .expect("conjugate of a bijection")
}

/// Generators `σ_i` (1-based) that can start the permutation braid.
fn starts_with(p: &Permutation, i: usize) -> bool {
    p.image(i - 1) > p.image(i)
}

/// Generators `σ_i` (1-based) that can end the permutation braid.
fn ends_with(p_inv: &Permutation, i: usize) -> bool {
    p_inv.image(i - 1) > p_inv.image(i)
}

/// Makes `(a, b)` left-weighted in place. Returns whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.len();
    let mut moved = false;
    loop {
        let a_inv = a.inverse();
        let candidate = (1..n).find(|&i| starts_with(b, i) && !ends_with(&a_inv, i));
        match candidate {
            Some(i) => {
                let s = transposition(n, i);
                *a = a.then(&s);
                *b = s.then(b);
                moved = true;
            }
            None => return moved,
        }
    }
}

pub fn left_normal_form(w: &BraidWord) -> NormalForm {
    let n = w.strands();
    let delta = half_twist(n);
    let identity = Permutation::identity(n);
    let mut infimum: i64 = 0;
    let mut factors: Vec<Permutation> = Vec::with_capacity(w.len());

    for &g in w.letters() {
        let i = g.unsigned_abs() as usize;
        if g > 0 {
            factors.push(transposition(n, i));
        } else {
            // σ_i^{-1} = Δ^{-1} · (Δ σ_i^{-1}); push Δ^{-1} past the factors.
            for f in factors.iter_mut() {
                *f = flip(f);
            }
            infimum -= 1;
            factors.push(delta.then(&transposition(n, i)));
        }
    }

    loop {
        let mut changed = false;
        for t in 0..factors.len().saturating_sub(1) {
            let (left, right) = factors.split_at_mut(t + 1);
            if left_weight(&mut left[t], &mut right[0]) {
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let leading = factors.iter().take_while(|f| **f == delta).count();
    infimum += leading as i64;
    factors.drain(..leading);
    while factors.last() == Some(&identity) {
        factors.pop();
    }
    debug_assert!(!factors.iter().any(|f| *f == identity || *f == delta));

    NormalForm {
        strands: n,
        infimum,
        factors,
    }
}

/// Word problem: do the two words represent the same braid?
pub fn words_equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    if w1.strands() != w2.strands() {
        return Err(Error::StrandMismatch {
            left: w1.strands(),
            right: w2.strands(),
        });
    }
    Ok(left_normal_form(&w1.concat(&w2.inverse())?).is_identity())
}

/// Checks the left-weighting condition on a normal form.
pub fn is_left_weighted(nf: &NormalForm) -> bool {
    let n = nf.strands;
    nf.factors.windows(2).all(|pair| {
        let a_inv = pair[0].inverse();
        (1..n).all(|i| !starts_with(&pair[1], i) || ends_with(&a_inv, i))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn trivial_and_delta() {
        let nf = left_normal_form(&w(2, &[1, -1]));
        assert!(nf.is_identity());
        let nf = left_normal_form(&w(3, &[1, 2, 1]));
        assert_eq!(nf.infimum, 1);
        assert!(nf.factors.is_empty());
    }

    #[test]
    fn negative_generator_in_b2() {
        // Δ = σ1 in B2, so σ1^{-1} = Δ^{-1}.
        let nf = left_normal_form(&w(2, &[-1]));
        assert_eq!(nf.infimum, -1);
        assert!(nf.factors.is_empty());
    }

    #[test]
    fn negative_generator_in_b3() {
        // σ1^{-1} = Δ^{-1} · σ1σ2 in B3.
        let nf = left_normal_form(&w(3, &[-1]));
        assert_eq!(nf.infimum, -1);
        assert_eq!(nf.factors, vec![w(3, &[1, 2]).underlying_permutation()]);
    }

    #[test]
    fn words_equal_examples() {
        assert!(words_equal(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])).unwrap());
        assert!(!words_equal(&w(3, &[1]), &w(3, &[2])).unwrap());
        assert!(!words_equal(&w(3, &[1, -2, 1, -2, 1, -2]), &w(3, &[])).unwrap());
        assert!(words_equal(&w(4, &[1, 3]), &w(4, &[3, 1])).unwrap());
        assert!(!words_equal(&w(3, &[1, 1]), &w(3, &[])).unwrap());
        assert!(words_equal(&w(2, &[1]), &w(3, &[])).is_err());
    }

    #[test]
    fn delta_squared_is_central() {
        let d2 = w(4, &[1, 2, 3, 1, 2, 1, 1, 2, 3, 1, 2, 1]);
        let nf = left_normal_form(&d2);
        assert_eq!(nf.infimum, 2);
        assert!(nf.factors.is_empty());
        let x = w(4, &[2, -3, 1]);
        assert!(words_equal(&d2.concat(&x).unwrap(), &x.concat(&d2).unwrap()).unwrap());
    }

    #[test]
    fn normal_forms_are_left_weighted() {
        let nf = left_normal_form(&w(4, &[1, -2, 3, 3, -1, 2, -3, 1, 2]));
        assert!(is_left_weighted(&nf));
    }
}
