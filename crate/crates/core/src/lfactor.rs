//! Factored products of local L-factors in the spectral variable `w = 2s`.
//!
//! A product is stored as a finite map from shift `n` to a nonzero exponent
//! `e_n`, with semantics `prod_n L(w + n)^{e_n}` where `L(x) = (1 - q^{-x})^{-1}`
//! and `q` is a formal parameter. Factors with distinct shifts are coprime
//! irreducibles, so a stored pair `(n, e_n)` with `e_n > 0` is a pole of order
//! `e_n` at `w = -n`, and `e_n < 0` a zero of order `-e_n` there. Canonical
//! form keeps no zero exponents, so equality of maps is equality of products.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::Error;
use crate::halfint::HalfInt;

/// A canonical factored product `prod_n L(w + n)^{e_n}`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LFactorProduct {
    factors: BTreeMap<HalfInt, i64>,
}

impl LFactorProduct {
    /// The empty product, i.e. the constant 1.
    pub fn one() -> Self {
        LFactorProduct::default()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// A single factor `L(w + shift)^exp`.
    pub fn single(shift: HalfInt, exp: i64) -> Self {
        let mut p = LFactorProduct::one();
        p.mul_factor(shift, exp);
        p
    }

    /// Multiplies `L(w + shift)^exp` into the product, canonicalizing.
    pub fn mul_factor(&mut self, shift: HalfInt, exp: i64) {
        if exp == 0 {
            return;
        }
        let e = self.factors.entry(shift).or_insert(0);
        *e += exp;
        if *e == 0 {
            self.factors.remove(&shift);
        }
    }

    /// Exponent-wise sum with `other`.
    pub fn mul(&self, other: &LFactorProduct) -> LFactorProduct {
        let mut out = self.clone();
        for (&shift, &exp) in &other.factors {
            out.mul_factor(shift, exp);
        }
        out
    }

    /// Exponent-wise difference with `other`.
    pub fn div(&self, other: &LFactorProduct) -> LFactorProduct {
        let mut out = self.clone();
        for (&shift, &exp) in &other.factors {
            out.mul_factor(shift, -exp);
        }
        out
    }

    /// Stored `(shift, exponent)` pairs in ascending shift order.
    pub fn factors(&self) -> impl Iterator<Item = (HalfInt, i64)> + '_ {
        self.factors.iter().map(|(&n, &e)| (n, e))
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn exponent_at_shift(&self, shift: HalfInt) -> i64 {
        self.factors.get(&shift).copied().unwrap_or(0)
    }

    /// Pole order at the location `w0` (the exponent stored at shift `-w0`,
    /// clamped to zero when that factor is absent or a zero).
    pub fn pole_order_at(&self, w0: HalfInt) -> u32 {
        self.exponent_at_shift(-w0).max(0) as u32
    }

    /// Positive-exponent part, re-indexed by pole location `w0 = -n`.
    pub fn pole_part(&self) -> PoleMultiset {
        self.factors
            .iter()
            .filter(|&(_, &e)| e > 0)
            .map(|(&n, &e)| (-n, e as u32))
            .collect()
    }

    /// Negative-exponent part, re-indexed by zero location `w0 = -n`.
    pub fn zero_part(&self) -> PoleMultiset {
        self.factors
            .iter()
            .filter(|&(_, &e)| e < 0)
            .map(|(&n, &e)| (-n, (-e) as u32))
            .collect()
    }

    /// Numeric evaluation at real `q > 1` and real `w`, with half-integer
    /// shifts going through the real square root of `q`.
    pub fn eval(&self, q: f64, w: f64) -> Result<f64, Error> {
        assert!(q > 1.0, "eval requires q > 1");
        let mut acc = 1.0;
        for (&shift, &exp) in &self.factors {
            let x = w + shift.to_f64();
            let base = 1.0 - q.powf(-x);
            if exp > 0 && base == 0.0 {
                return Err(Error::EvaluationAtPole { shift, w });
            }
            acc *= base.powi(-exp as i32);
        }
        Ok(acc)
    }

    /// JSON rendering: array of `{"shift": "...", "exp": n}` in ascending
    /// shift order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.factors
                .iter()
                .map(|(&n, &e)| json!({ "shift": n.to_string(), "exp": e }))
                .collect(),
        )
    }
}

fn fmt_one_factor(shift: HalfInt, exp: i64, out: &mut String) {
    out.push_str("L(w");
    if shift > HalfInt::ZERO {
        out.push('+');
        out.push_str(&shift.to_string());
    } else if shift < HalfInt::ZERO {
        out.push_str(&shift.to_string());
    }
    out.push(')');
    if exp != 1 {
        out.push('^');
        out.push_str(&exp.to_string());
    }
}

fn fmt_side(factors: &[(HalfInt, i64)]) -> String {
    let mut out = String::new();
    for (i, &(n, e)) in factors.iter().enumerate() {
        if i > 0 {
            out.push('·');
        }
        fmt_one_factor(n, e, &mut out);
    }
    out
}

impl fmt::Display for LFactorProduct {
    /// Canonical text form: factors sorted by ascending shift, negative
    /// exponents collected into a denominator, e.g. `L(w)/L(w+1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let num: Vec<_> = self.factors().filter(|&(_, e)| e > 0).collect();
        let den: Vec<_> = self
            .factors()
            .filter(|&(_, e)| e < 0)
            .map(|(n, e)| (n, -e))
            .collect();
        if den.is_empty() {
            write!(f, "{}", fmt_side(&num))
        } else {
            let num_str = if num.is_empty() {
                "1".to_owned()
            } else {
                fmt_side(&num)
            };
            if den.len() == 1 {
                write!(f, "{}/{}", num_str, fmt_side(&den))
            } else {
                write!(f, "{}/({})", num_str, fmt_side(&den))
            }
        }
    }
}

impl FromIterator<(HalfInt, i64)> for LFactorProduct {
    fn from_iter<T: IntoIterator<Item = (HalfInt, i64)>>(iter: T) -> Self {
        let mut p = LFactorProduct::one();
        for (n, e) in iter {
            p.mul_factor(n, e);
        }
        p
    }
}

/// A multiset of pole locations with strictly positive multiplicities.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PoleMultiset {
    entries: BTreeMap<HalfInt, u32>,
}

impl PoleMultiset {
    pub fn empty() -> Self {
        PoleMultiset::default()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn insert(&mut self, location: HalfInt, multiplicity: u32) {
        if multiplicity > 0 {
            *self.entries.entry(location).or_insert(0) += multiplicity;
        }
    }

    pub fn multiplicity_at(&self, location: HalfInt) -> u32 {
        self.entries.get(&location).copied().unwrap_or(0)
    }

    pub fn contains(&self, location: HalfInt) -> bool {
        self.entries.contains_key(&location)
    }

    /// `(location, multiplicity)` pairs in ascending location order.
    pub fn iter(&self) -> impl Iterator<Item = (HalfInt, u32)> + '_ {
        self.entries.iter().map(|(&w, &m)| (w, m))
    }

    pub fn support(&self) -> impl Iterator<Item = HalfInt> + '_ {
        self.entries.keys().copied()
    }

    /// Number of distinct locations.
    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.values().map(|&m| m as u64).sum()
    }

    /// Location-wise minimum (the shared-pole part of two products).
    pub fn min_with(&self, other: &PoleMultiset) -> PoleMultiset {
        self.entries
            .iter()
            .filter_map(|(&w, &m)| {
                let n = other.multiplicity_at(w);
                (n > 0).then(|| (w, m.min(n)))
            })
            .collect()
    }

    /// Location-wise sum.
    pub fn sum_with(&self, other: &PoleMultiset) -> PoleMultiset {
        let mut out = self.clone();
        for (w, m) in other.iter() {
            out.insert(w, m);
        }
        out
    }

    /// The same multiset with every location negated.
    pub fn mirrored(&self) -> PoleMultiset {
        self.iter().map(|(w, m)| (-w, m)).collect()
    }

    /// True when every multiplicity of `other` is at most the one stored here.
    pub fn dominates(&self, other: &PoleMultiset) -> bool {
        other
            .iter()
            .all(|(w, m)| self.multiplicity_at(w) >= m)
    }

    /// JSON rendering: object keyed by canonical location strings.
    pub fn to_json(&self) -> Value {
        Value::Object(
            self.entries
                .iter()
                .map(|(&w, &m)| (w.to_string(), json!(m)))
                .collect(),
        )
    }
}

impl fmt::Display for PoleMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (w, m)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {}", w, m)?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<(HalfInt, u32)> for PoleMultiset {
    fn from_iter<T: IntoIterator<Item = (HalfInt, u32)>>(iter: T) -> Self {
        let mut s = PoleMultiset::empty();
        for (w, m) in iter {
            s.insert(w, m);
        }
        s
    }
}

/// Shared poles of two products: the location-wise minimum of their pole
/// parts. In factored-polynomial terms this is the g.c.d. of the inverses.
pub fn common_pole_part(x: &LFactorProduct, y: &LFactorProduct) -> PoleMultiset {
    x.pole_part().min_with(&y.pole_part())
}
