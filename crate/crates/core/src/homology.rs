//! Graded homology dimensions over F2.
//!
//! Each block of the complex is a cochain complex in the homological degree
//! `i`, and `dim H^i = dim C^i - rank d^i - rank d^{i-1}`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::complex::{build_complex, AnnularComplex, ComplexOptions, Mode};
use crate::diagram::AnnularClosureDiagram;
use crate::f2::sparse_rank;
use crate::Result;

/// A homological degree `(i, j, k)`; `k` is absent for ordinary Khovanov
/// homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree {
    pub i: i32,
    pub j: i32,
    pub k: Option<i32>,
}

impl Degree {
    pub fn triple(i: i32, j: i32, k: i32) -> Self {
        Degree { i, j, k: Some(k) }
    }

    pub fn pair(i: i32, j: i32) -> Self {
        Degree { i, j, k: None }
    }
}

/// Finitely supported map from degrees to positive dimensions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GradedDims {
    dims: BTreeMap<Degree, u64>,
}

impl GradedDims {
    pub fn new() -> Self {
        GradedDims::default()
    }

    /// Adds `dim` at `degree`; zero additions are ignored.
    pub fn add(&mut self, degree: Degree, dim: u64) {
        if dim > 0 {
            *self.dims.entry(degree).or_insert(0) += dim;
        }
    }

    pub fn get(&self, degree: Degree) -> u64 {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// Entries in ascending `(i, j, k)` order.
    pub fn iter(&self) -> impl Iterator<Item = (Degree, u64)> + '_ {
        self.dims.iter().map(|(d, &n)| (*d, n))
    }

    /// Sums over `k`, giving a bigraded table.
    pub fn forget_k(&self) -> GradedDims {
        let mut out = GradedDims::new();
        for (d, n) in self.iter() {
            out.add(Degree::pair(d.i, d.j), n);
        }
        out
    }

    /// `j ↦ Σ_i (-1)^i dim` (summed over `k` as well).
    pub fn euler_characteristic(&self) -> BTreeMap<i32, i64> {
        let mut chi: BTreeMap<i32, i64> = BTreeMap::new();
        for (d, n) in self.iter() {
            let sign = if d.i.rem_euclid(2) == 0 { 1 } else { -1 };
            *chi.entry(d.j).or_insert(0) += sign * n as i64;
        }
        chi.retain(|_, v| *v != 0);
        chi
    }

    /// The distinct homological degrees carrying homology.
    pub fn homological_support(&self) -> Vec<i32> {
        let mut is: Vec<i32> = self.dims.keys().map(|d| d.i).collect();
        is.dedup();
        is
    }

    /// Negates the listed gradings: `(i, j, k) ↦ (-i, -j, ±k)`.
    pub fn negated(&self, negate_k: bool) -> GradedDims {
        let mut out = GradedDims::new();
        for (d, n) in self.iter() {
            let k = d.k.map(|k| if negate_k { -k } else { k });
            out.add(
                Degree {
                    i: -d.i,
                    j: -d.j,
                    k,
                },
                n,
            );
        }
        out
    }

    /// Poincaré polynomial in `t` (homological), `q` (quantum) and `a`
    /// (annular), e.g. `q^-2*a^-2 + 2 + q^2*a^2`.
    pub fn poincare_polynomial(&self) -> String {
        if self.dims.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (idx, (d, n)) in self.iter().enumerate() {
            if idx > 0 {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            for (var, exp) in [("t", d.i), ("q", d.j), ("a", d.k.unwrap_or(0))] {
                match exp {
                    0 => {}
                    1 => factors.push(String::from(var)),
                    e => factors.push(alloc::format!("{var}^{e}")),
                }
            }
            if n != 1 || factors.is_empty() {
                factors.insert(0, alloc::format!("{n}"));
            }
            let _ = write!(out, "{}", factors.join("*"));
        }
        out
    }
}

impl FromIterator<(Degree, u64)> for GradedDims {
    fn from_iter<T: IntoIterator<Item = (Degree, u64)>>(iter: T) -> Self {
        let mut out = GradedDims::new();
        for (d, n) in iter {
            out.add(d, n);
        }
        out
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poincare_polynomial())
    }
}

/// Homology of every block of the complex in the given mode.
///
/// Entries carry `k` in [`Mode::AssociatedGraded`] and omit it in
/// [`Mode::Full`].
pub fn homology(cx: &AnnularComplex, mode: Mode) -> GradedDims {
    let blocks = cx.blocks(mode);
    let mut out = GradedDims::new();
    for block in &blocks.blocks {
        // ranks[idx] = rank of d from degree i_min + idx - 1 to i_min + idx.
        let mut ranks = Vec::with_capacity(block.chains.len() + 1);
        ranks.push(0usize);
        for idx in 0..block.chains.len() {
            let i = block.i_min + idx as i32;
            let rank = if block.chain(i + 1).is_empty() {
                0
            } else {
                let rows = block
                    .chain(i)
                    .iter()
                    .map(|&g| {
                        cx.boundary(mode, g)
                            .map(|t| blocks.local_index(t) as u32)
                            .collect()
                    })
                    .collect();
                sparse_rank(rows, block.chain(i + 1).len())
            };
            ranks.push(rank);
        }
        for (idx, chain) in block.chains.iter().enumerate() {
            let dim = chain.len() - ranks[idx] - ranks[idx + 1];
            let i = block.i_min + idx as i32;
            out.add(
                Degree {
                    i,
                    j: block.key.j,
                    k: block.key.k,
                },
                dim as u64,
            );
        }
    }
    out
}

/// Sutured annular Khovanov homology `SKh^i(j, k)` of the closure.
pub fn skh(d: &AnnularClosureDiagram) -> Result<GradedDims> {
    skh_with(d, ComplexOptions::default())
}

pub fn skh_with(d: &AnnularClosureDiagram, options: ComplexOptions) -> Result<GradedDims> {
    Ok(homology(
        &build_complex(d, options)?,
        Mode::AssociatedGraded,
    ))
}

/// Ordinary Khovanov homology `Kh^{i,j}` of the closure in `S^3`.
pub fn kh(d: &AnnularClosureDiagram) -> Result<GradedDims> {
    kh_with(d, ComplexOptions::default())
}

pub fn kh_with(d: &AnnularClosureDiagram, options: ComplexOptions) -> Result<GradedDims> {
    Ok(homology(&build_complex(d, options)?, Mode::Full))
}
