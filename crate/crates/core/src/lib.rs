//! Sutured annular Khovanov homology of braid closures over F2.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure
//! computation on immutable values: braid words, the annular cube of
//! resolutions, GF(2) homology, the Plamenevskaya class, a Garside
//! normal-form oracle for the word problem and the unreduced Burau
//! representation. IO and the command line live in the `braidkh` crate.
//!
//! Conventions used throughout:
//!
//! * Letters act left to right on strand positions `1..=n`; a word is read
//!   top to bottom.
//! * At a positive crossing the 0-resolution is the braid-like (oriented)
//!   smoothing; at a negative crossing it is the cap-cup smoothing.
//! * Gradings of an enhanced resolution with `r` one-resolutions are
//!   `i = r - n_minus`, `j = (#v+ - #v-) + r + n_plus - 2 n_minus` and
//!   `k = (#essential v+) - (#essential v-)`, with no overall shift on `k`.
//! * Burau: `σ_i` acts by the block `[[1-T, T], [1, 0]]` on rows and
//!   columns `i, i+1`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod braid;
pub mod burau;
pub mod complex;
pub mod diagram;
mod error;
pub mod f2;
pub mod garside;
pub mod homology;
pub mod invariants;
pub mod poly;

pub use braid::{BraidWord, Permutation};
pub use complex::{AnnularComplex, ComplexOptions, EnhancedGenerator, Mode};
pub use diagram::{AnnularClosureDiagram, ResolutionState};
pub use error::Error;
pub use f2::F2Matrix;
pub use garside::NormalForm;
pub use homology::{Degree, GradedDims};
pub use invariants::{Decision, PlamenevskayaClass, Verdict};

pub type Result<T> = core::result::Result<T, Error>;
