//! Integer Laurent polynomials in `T` and polynomials in `(λ, T)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An element of `Z[T, T^-1]`, stored as exponent ↦ nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// `coefficient · T^exponent`.
    pub fn monomial(coefficient: i64, exponent: i32) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exponent, BigInt::from(coefficient));
        p
    }

    /// `(-T)^e`.
    pub fn neg_t_pow(e: i64) -> Self {
        let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
        LaurentPoly::monomial(sign, e as i32)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, exponent: i32, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *slot += coefficient;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coefficient(&self, exponent: i32) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    /// `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Exact division by an integer; `None` if some coefficient is not
    /// divisible.
    pub fn div_exact(&self, d: &BigInt) -> Option<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (e, c) in self.terms() {
            if !(c % d).is_zero() {
                return None;
            }
            out.add_term(e, c / d);
        }
        Some(out)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

fn write_monomial(out: &mut String, first: bool, c: &BigInt, vars: &[(&str, i64)]) {
    let negative = c.is_negative();
    let magnitude = c.abs();
    match (first, negative) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    let mut factors: alloc::vec::Vec<String> = alloc::vec::Vec::new();
    for &(name, e) in vars {
        match e {
            0 => {}
            1 => factors.push(String::from(name)),
            e => factors.push(alloc::format!("{name}^{e}")),
        }
    }
    if !magnitude.is_one() || factors.is_empty() {
        factors.insert(0, alloc::format!("{magnitude}"));
    }
    let _ = write!(out, "{}", factors.join("*"));
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms().enumerate() {
            write_monomial(&mut out, idx == 0, c, &[("T", i64::from(e))]);
        }
        f.write_str(&out)
    }
}

/// A polynomial in `λ` with coefficients in `Z[T, T^-1]`, stored as
/// `(λ-degree, T-exponent) ↦ nonzero coefficient`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, i32), BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        BivariatePoly::default()
    }

    pub fn one() -> Self {
        BivariatePoly::from_laurent(&LaurentPoly::one())
    }

    /// `λ`.
    pub fn lambda() -> Self {
        let mut p = BivariatePoly::zero();
        p.add_term(1, 0, BigInt::one());
        p
    }

    /// The constant (λ-degree 0) polynomial `p`.
    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let mut out = BivariatePoly::zero();
        for (e, c) in p.terms() {
            out.add_term(0, e, c.clone());
        }
        out
    }

    /// `Σ_d coefficients[d] λ^d`.
    pub fn from_coefficients(coefficients: &[LaurentPoly]) -> Self {
        let mut out = BivariatePoly::zero();
        for (d, p) in coefficients.iter().enumerate() {
            for (e, c) in p.terms() {
                out.add_term(d as u32, e, c.clone());
            }
        }
        out
    }

    fn add_term(&mut self, d: u32, e: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((d, e)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(d, e));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(d, _)| *d).max()
    }

    /// Coefficient of `λ^d`.
    pub fn coefficient(&self, d: u32) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for ((_, e), c) in self.terms.range((d, i32::MIN)..=(d, i32::MAX)) {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn pow(&self, exp: u32) -> BivariatePoly {
        let mut out = BivariatePoly::one();
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for ((d, e), c) in &rhs.terms {
            out.add_term(*d, *e, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for ((d, e), c) in &rhs.terms {
            out.add_term(*d, *e, -c.clone());
        }
        out
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for ((d1, e1), c1) in &self.terms {
            for ((d2, e2), c2) in &rhs.terms {
                out.add_term(d1 + d2, e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        BivariatePoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

/// Descending powers of `λ` (written `L`), ascending powers of `T` within
/// each.
impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: alloc::vec::Vec<&(u32, i32)> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut out = String::new();
        for (idx, key) in keys.into_iter().enumerate() {
            write_monomial(
                &mut out,
                idx == 0,
                &self.terms[key],
                &[("T", i64::from(key.1)), ("L", i64::from(key.0))],
            );
        }
        f.write_str(&out)
    }
}
