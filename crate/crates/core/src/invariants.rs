//! Decision procedures built on the homology: trivial-braid detection, the
//! word problem, the Plamenevskaya class and the flype experiment.

use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::complex::{
    build_complex, plamenevskaya_generator, AnnularComplex, ComplexOptions, Mode,
};
use crate::diagram::AnnularClosureDiagram;
use crate::f2::F2Matrix;
use crate::homology::{skh_with, Degree, GradedDims};
use crate::{EnhancedGenerator, Error, Result};

/// `SKh` of the closure of the trivial braid on `n` strands:
/// `C(n, m)` copies in degree `(0, n - 2m, n - 2m)`.
pub fn skh_trivial(n: usize) -> GradedDims {
    let mut out = GradedDims::new();
    let mut binomial: u64 = 1;
    for m in 0..=n {
        let q = n as i32 - 2 * m as i32;
        out.add(Degree::triple(0, q, q), binomial);
        binomial = binomial * (n - m) as u64 / (m as u64 + 1);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Equal,
    UnequalByPermutation,
    UnequalByHomology,
}

impl Verdict {
    pub fn is_equal(self) -> bool {
        self == Verdict::Equal
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Equal => "equal",
            Verdict::UnequalByPermutation => "unequal-by-permutation",
            Verdict::UnequalByHomology => "unequal-by-homology",
        }
    }
}

/// Outcome of a homological word-problem query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    /// For [`Verdict::UnequalByHomology`]: the computed `SKh` and the trivial
    /// braid's `SKh`, which differ.
    pub witness: Option<(GradedDims, GradedDims)>,
}

/// Decides whether `w` is the trivial braid: a non-pure braid is not, and a
/// pure braid is trivial exactly when its closure has the `SKh` of the
/// trivial closure.
pub fn is_trivial(w: &BraidWord, options: ComplexOptions) -> Result<Decision> {
    if !w.is_pure() {
        return Ok(Decision {
            verdict: Verdict::UnequalByPermutation,
            witness: None,
        });
    }
    let computed = skh_with(&AnnularClosureDiagram::new(w), options)?;
    let trivial = skh_trivial(w.strands());
    Ok(if computed == trivial {
        Decision {
            verdict: Verdict::Equal,
            witness: None,
        }
    } else {
        Decision {
            verdict: Verdict::UnequalByHomology,
            witness: Some((computed, trivial)),
        }
    })
}

/// Word problem via `is_trivial(w1 · w2^-1)` after free reduction.
pub fn words_equal_homological(
    w1: &BraidWord,
    w2: &BraidWord,
    options: ComplexOptions,
) -> Result<Decision> {
    let difference = w1.concat(&w2.inverse())?.free_reduce();
    is_trivial(&difference, options)
}

/// The Plamenevskaya class of the closure, as a class in ordinary Khovanov
/// homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PlamenevskayaClass {
    /// Bidegree `(i, j) = (0, writhe - n)`.
    pub i: i32,
    pub j: i32,
    pub nonzero: bool,
}

pub fn plamenevskaya(w: &BraidWord, options: ComplexOptions) -> Result<PlamenevskayaClass> {
    let d = AnnularClosureDiagram::new(w);
    let cx = build_complex(&d, options)?;
    Ok(plamenevskaya_in(&d, &cx))
}

/// Decides whether the all-`v-` braid-like generator is a boundary in the
/// full complex. Only the quantum grading `writhe - n` is inspected.
pub fn plamenevskaya_in(d: &AnnularClosureDiagram, cx: &AnnularComplex) -> PlamenevskayaClass {
    let psi = plamenevskaya_generator(d);
    let index = cx.index_of(psi.vertex, psi.labels);
    assert!(
        cx.boundary(Mode::Full, index).next().is_none(),
        "the Plamenevskaya generator must be a cycle"
    );

    let grade = cx.grading(index);
    let in_degree = |i: i32| -> Vec<u32> {
        (0..cx.generator_count() as u32)
            .filter(|&g| {
                let gr = cx.grading(g);
                gr.i == i && gr.j == grade.j
            })
            .collect()
    };
    let sources = in_degree(grade.i - 1);
    let targets = in_degree(grade.i);
    let local = |g: u32| {
        targets
            .binary_search(&g)
            .expect("boundary preserves j and raises i by one")
    };

    let mut image = F2Matrix::zeros(0, targets.len());
    for &s in &sources {
        let row: Vec<usize> = cx.boundary(Mode::Full, s).map(local).collect();
        image.push_row(&row);
    }
    let before = image.rank();
    image.push_row(&[local(index)]);
    let nonzero = image.rank() > before;

    PlamenevskayaClass {
        i: grade.i,
        j: grade.j,
        nonzero,
    }
}

/// What the Plamenevskaya class says about veering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Veering {
    /// `ψ ≠ 0`, which rules out "not right-veering".
    RightVeering,
    /// `ψ = 0` carries no information either way.
    Inconclusive,
}

pub fn right_veering_obstruction(w: &BraidWord, options: ComplexOptions) -> Result<Veering> {
    Ok(if plamenevskaya(w, options)?.nonzero {
        Veering::RightVeering
    } else {
        Veering::Inconclusive
    })
}

/// `ψ` of a braid and of its mirror. Both nonzero means the braid is both
/// right- and left-veering, hence trivial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VeeringReport {
    pub psi: PlamenevskayaClass,
    pub mirror_psi: PlamenevskayaClass,
}

impl VeeringReport {
    pub fn certifies_trivial(&self) -> bool {
        self.psi.nonzero && self.mirror_psi.nonzero
    }
}

pub fn veering_report(w: &BraidWord, options: ComplexOptions) -> Result<VeeringReport> {
    Ok(VeeringReport {
        psi: plamenevskaya(w, options)?,
        mirror_psi: plamenevskaya(&w.mirror(), options)?,
    })
}

/// Generators in the bottom annular grading `k = -n`.
pub fn bottom_k_generators(cx: &AnnularComplex) -> Vec<EnhancedGenerator> {
    cx.generators_with_k(-(cx.strands() as i32))
        .into_iter()
        .map(|g| cx.generator(g))
        .collect()
}

fn twist(generator: i32, exponent: i32) -> impl Iterator<Item = i32> {
    let letter = if exponent < 0 { -generator } else { generator };
    core::iter::repeat_n(letter, exponent.unsigned_abs() as usize)
}

/// The two 3-braids related by a flype:
/// `σ1^u σ2^v σ1^w σ2^±1` and `σ1^u σ2^±1 σ1^w σ2^v`. The closure of the
/// second is isotopic to the closure of the reverse of the first.
pub fn flype_pair(u: i32, v: i32, w: i32, positive: bool) -> (BraidWord, BraidWord) {
    let s = if positive { 1 } else { -1 };
    let first: Vec<i32> = twist(1, u)
        .chain(twist(2, v))
        .chain(twist(1, w))
        .chain(twist(2, s))
        .collect();
    let second: Vec<i32> = twist(1, u)
        .chain(twist(2, s))
        .chain(twist(1, w))
        .chain(twist(2, v))
        .collect();
    (
        BraidWord::new(3, first).expect("3-braid letters"),
        BraidWord::new(3, second).expect("3-braid letters"),
    )
}

/// Whether `b` is a cyclic rotation of `a`, letter for letter.
pub fn is_cyclic_rotation(a: &BraidWord, b: &BraidWord) -> bool {
    a.strands() == b.strands()
        && a.len() == b.len()
        && (a.is_empty() || (0..a.len()).any(|k| a.rotate(k) == *b))
}

/// Guard used by the CLI before it attempts a homology computation.
pub fn check_crossings(w: &BraidWord, options: ComplexOptions) -> Result<()> {
    let d = AnnularClosureDiagram::new(w);
    if d.crossing_count() > options.max_crossings {
        return Err(Error::CrossingLimit {
            crossings: d.crossing_count(),
            limit: options.max_crossings,
            estimated_states: crate::complex::estimated_states(&d),
        });
    }
    Ok(())
}
