//! Braid words in the Artin generators and their underlying permutations.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A word in the Artin generators of `B_n`.
///
/// Letter `g > 0` is `σ_g`, letter `g < 0` is `σ_{|g|}^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidLetter { letter: 0, strands });
        }
        for &g in &letters {
            if g == 0 || g.unsigned_abs() as usize > strands - 1 {
                return Err(Error::InvalidLetter { letter: g, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// The identity braid on `strands` strands.
    pub fn trivial(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Parses whitespace- or comma-separated signed letters, each optionally
    /// raised to an integer power: `"1 -2 1^3"`, `"2^-2"`.
    ///
    /// The strand count defaults to one more than the largest index, and an
    /// explicit `strands` may enlarge it.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
        {
            let malformed = || Error::MalformedToken {
                token: token.to_string(),
            };
            let (base, power) = match token.split_once('^') {
                Some((b, p)) => (b, p.parse::<i32>().map_err(|_| malformed())?),
                None => (token, 1),
            };
            let g: i32 = base.parse().map_err(|_| malformed())?;
            if g == 0 {
                return Err(malformed());
            }
            let letter = if power < 0 { -g } else { g };
            letters.extend(core::iter::repeat_n(letter, power.unsigned_abs() as usize));
        }
        let required = letters
            .iter()
            .map(|g| g.unsigned_abs() as usize + 1)
            .max()
            .unwrap_or(1);
        let strands = match strands {
            Some(s) if s < required => {
                return Err(Error::StrandsTooSmall {
                    strands: s,
                    required,
                })
            }
            Some(s) => s,
            None => required,
        };
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Group inverse: reversed order, negated letters.
    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|g| -g).collect(),
        }
    }

    /// Reversed letter order, signs kept.
    pub fn reverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Negated letters, order kept.
    pub fn mirror(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|g| -g).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Cancels adjacent `g, -g` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last() == Some(&-g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    pub fn underlying_permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &g in &self.letters {
            p.swap_positions(g.unsigned_abs() as usize);
        }
        p
    }

    pub fn is_pure(&self) -> bool {
        self.underlying_permutation().is_identity()
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        self.underlying_permutation().cycle_count()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&g| i64::from(g.signum())).sum()
    }

    /// Cyclic rotation: the first `k` letters move to the end.
    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, g) in self.letters.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// A bijection of `{1..n}`, stored 0-based.
///
/// For a braid, `image(p)` is the bottom position of the strand that starts
/// at top position `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 0-based images; `None` unless bijective.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based images.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, p: usize) -> usize {
        self.images[p]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &x)| p == x)
    }

    /// Post-composes with the transposition of positions `g, g+1` (1-based).
    pub fn swap_positions(&mut self, g: usize) {
        for x in self.images.iter_mut() {
            if *x == g - 1 {
                *x = g;
            } else if *x == g {
                *x = g - 1;
            }
        }
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0; self.len()];
        for (p, &x) in self.images.iter().enumerate() {
            images[x] = p;
        }
        Permutation { images }
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = alloc::vec![false; self.len()];
        let mut cycles = 0;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
            }
        }
        cycles
    }

    /// Number of inverted pairs; the length of the permutation braid.
    pub fn inversions(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (idx, x) in self.images.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        f.write_str("]")
    }
}
