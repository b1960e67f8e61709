//! The unreduced Burau representation `B_n → GL_n(Z[T, T^-1])`.
//!
//! Convention: `σ_i` is the identity except for the block `[[1-T, T], [1, 0]]`
//! on rows and columns `i, i+1`, so `det Ψ(σ_i) = -T`. A word maps to the
//! product of its letters' matrices in word order. Other references use the
//! transpose or substitute `T ↦ T^-1`; kernels and characteristic polynomials
//! up to that substitution agree.

use alloc::vec::Vec;
use core::fmt;

use crate::braid::BraidWord;
use crate::poly::{BivariatePoly, LaurentPoly};

/// A square matrix over `Z[T, T^-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentMatrix {
    n: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = alloc::vec![LaurentPoly::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = LaurentPoly::one();
        }
        LaurentMatrix { n, entries }
    }

    pub fn from_entries(n: usize, entries: Vec<LaurentPoly>) -> Self {
        assert_eq!(entries.len(), n * n, "matrix must be square");
        LaurentMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r * self.n + c]
    }

    fn get_mut(&mut self, r: usize, c: usize) -> &mut LaurentPoly {
        &mut self.entries[r * self.n + c]
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|r| {
            (0..self.n).all(|c| {
                let e = self.get(r, c);
                if r == c {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn mul(&self, other: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = LaurentMatrix::from_entries(n, alloc::vec![LaurentPoly::zero(); n * n]);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let sum = out.get(r, c) + &(a * b);
                        *out.get_mut(r, c) = sum;
                    }
                }
            }
        }
        out
    }

    /// Right multiplication by `Ψ(σ_i^{±1})`, touching columns `i, i+1`.
    fn apply_generator(&mut self, letter: i32) {
        let a = letter.unsigned_abs() as usize - 1;
        let t = LaurentPoly::monomial(1, 1);
        let t_inv = LaurentPoly::monomial(1, -1);
        let one = LaurentPoly::one();
        for r in 0..self.n {
            let left = self.get(r, a).clone();
            let right = self.get(r, a + 1).clone();
            let (new_left, new_right) = if letter > 0 {
                // [[1-T, T], [1, 0]]
                (&(&(&one - &t) * &left) + &right, &t * &left)
            } else {
                // [[0, 1], [T^-1, 1-T^-1]]
                (&t_inv * &right, &left + &(&(&one - &t_inv) * &right))
            };
            *self.get_mut(r, a) = new_left;
            *self.get_mut(r, a + 1) = new_right;
        }
    }

    /// `det(λ·I - M)` by Laplace expansion over column subsets.
    pub fn char_poly(&self) -> BivariatePoly {
        let n = self.n;
        let lambda = BivariatePoly::lambda();
        let entry = |r: usize, c: usize| {
            let m = BivariatePoly::from_laurent(self.get(r, c));
            if r == c {
                &lambda - &m
            } else {
                -&m
            }
        };
        // partial[S] = signed sum over bijections rows 0..|S| → S.
        let mut partial: Vec<BivariatePoly> = alloc::vec![BivariatePoly::zero(); 1 << n];
        partial[0] = BivariatePoly::one();
        for subset in 0usize..1 << n {
            if partial[subset].is_zero() {
                continue;
            }
            let row = subset.count_ones() as usize;
            if row == n {
                continue;
            }
            for c in (0..n).filter(|&c| subset >> c & 1 == 0) {
                let above = (subset >> c).count_ones();
                let term = &partial[subset] * &entry(row, c);
                let term = if above % 2 == 1 { -&term } else { term };
                let next = subset | 1 << c;
                partial[next] = &partial[next] + &term;
            }
        }
        partial.pop().expect("full subset")
    }

    /// `det M`, read off the characteristic polynomial's constant term.
    pub fn determinant(&self) -> LaurentPoly {
        let constant = self.char_poly().coefficient(0);
        if self.n.is_multiple_of(2) {
            constant
        } else {
            -&constant
        }
    }
}

impl fmt::Display for LaurentMatrix {
    /// One row per line, entries separated by ` | `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n {
            for c in 0..self.n {
                if c > 0 {
                    f.write_str(" | ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn burau_matrix(w: &BraidWord) -> LaurentMatrix {
    let mut m = LaurentMatrix::identity(w.strands());
    for &g in w.letters() {
        m.apply_generator(g);
    }
    m
}

pub fn char_poly(m: &LaurentMatrix) -> BivariatePoly {
    m.char_poly()
}

/// Whether the word lies in the kernel of the Burau representation.
pub fn burau_kernel_check(w: &BraidWord) -> bool {
    burau_matrix(w).is_identity()
}

/// `(λ - 1)^n`, the characteristic polynomial of the identity.
pub fn trivial_char_poly(n: usize) -> BivariatePoly {
    (&BivariatePoly::lambda() - &BivariatePoly::one()).pow(n as u32)
}

/// Bigelow's nontrivial element of the Burau kernel in `B_5`
/// (Geom. Topol. 3 (1999) 397–404), written out as a word: the commutator
/// `[ψ1^-1 σ4 ψ1, ψ2^-1 σ4 σ3 σ2 σ1^2 σ2 σ3 σ4 ψ2]` with
/// `ψ1 = σ3^-1 σ2 σ1^2 σ2 σ4^3 σ3 σ2` and
/// `ψ2 = σ4^-1 σ3 σ2 σ1^-2 σ2 σ1^2 σ2^2 σ1 σ4^5`.
pub fn bigelow_kernel_word() -> BraidWord {
    let psi1 = BraidWord::parse("-3 2 1^2 2 4^3 3 2", Some(5)).expect("valid word");
    let psi2 = BraidWord::parse("-4 3 2 1^-2 2 1^2 2^2 1 4^5", Some(5)).expect("valid word");
    let s4 = BraidWord::parse("4", Some(5)).expect("valid word");
    let middle = BraidWord::parse("4 3 2 1^2 2 3 4", Some(5)).expect("valid word");
    let conj = |inner: &BraidWord, by: &BraidWord| {
        by.inverse()
            .concat(inner)
            .and_then(|x| x.concat(by))
            .expect("equal strand counts")
    };
    let a = conj(&s4, &psi1);
    let b = conj(&middle, &psi2);
    // [a, b] = a^-1 b^-1 a b
    a.inverse()
        .concat(&b.inverse())
        .and_then(|x| x.concat(&a))
        .and_then(|x| x.concat(&b))
        .expect("equal strand counts")
}
