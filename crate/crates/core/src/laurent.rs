//! Sparse Laurent polynomials over the integers in the variable `v = q^{1/2}`.
//!
//! Every scalar that shows up in the skein computations (`q`, `q^{-1}`,
//! `q^{(2n+1)/2}`, `q + q^{-1}`, ...) is an honest Laurent polynomial in `v`
//! with integer exponents, so `q^k` is stored as `v^{2k}`. Coefficients are
//! arbitrary precision.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Result, SkeinError};

/// An element of `Z[v, v^{-1}]`.
///
/// Terms are kept sorted by exponent with no zero coefficients, so structural
/// equality is ring equality and the zero polynomial has no terms.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigInt)>,
}

/// Quotient `Z[v^{±1}] / (v^M - 1)`, the group ring of `Z/M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicContext {
    modulus: u64,
}

impl CyclotomicContext {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(SkeinError::InvalidModulus(modulus));
        }
        Ok(Self { modulus })
    }

    /// The context in which `q^2` being an `order`-th root of unity is
    /// enforced as `v^{4·order} = 1`.
    pub fn for_q_squared_order(order: u64) -> Result<Self> {
        Self::new(order.checked_mul(4).ok_or(SkeinError::InvalidModulus(0))?)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// `c · v^exp`.
    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: vec![(exp, c)],
            }
        }
    }

    /// `v^exp`, i.e. `q^{exp/2}`.
    pub fn v_pow(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    /// `q^exp = v^{2·exp}`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(2 * exp, 1)
    }

    /// `v^k + v^{-k}`; equals `2` at `k = 0`.
    pub fn v_pair(k: i64) -> Self {
        Self::v_pow(k) + Self::v_pow(-k)
    }

    /// `q^k + q^{-k}`.
    pub fn q_pair(k: i64) -> Self {
        Self::v_pair(2 * k)
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// summing repeated exponents and dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(k, c)| (k, c.into())).collect();
        terms.sort_by_key(|(k, _)| *k);
        let mut merged: Vec<(i64, BigInt)> = Vec::with_capacity(terms.len());
        for (k, c) in terms {
            match merged.last_mut() {
                Some((lk, lc)) if *lk == k => *lc += c,
                _ => merged.push((k, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Self { terms: merged }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent of v, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + ExactSizeIterator {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        match self.terms.binary_search_by_key(&exp, |(k, _)| *k) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(k, _)| *k)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(k, _)| *k)
    }

    /// Membership in the cone `Z_{≥0}[q^{±1/2}]`. Zero is in the cone.
    pub fn is_nonneg(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    /// The bar involution `v ↦ v^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().rev().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Image in `Z[v]/(v^M - 1)` with exponents normalized into `[0, M)`.
    pub fn reduce_mod_order(&self, ctx: &CyclotomicContext) -> Self {
        let m = ctx.modulus as i64;
        Self::from_terms(self.terms.iter().map(|(k, c)| (k.rem_euclid(m), c.clone())))
    }

    /// Adds `c · v^exp` in place.
    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.binary_search_by_key(&exp, |(k, _)| *k) {
            Ok(i) => {
                self.terms[i].1 += c;
                if self.terms[i].1.is_zero() {
                    self.terms.remove(i);
                }
            }
            Err(i) => self.terms.insert(i, (exp, c)),
        }
    }

    /// `self += a · b` without materializing the product.
    pub fn add_product(&mut self, a: &LaurentPoly, b: &LaurentPoly) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if a.len() * b.len() <= 4 {
            for (ka, ca) in &a.terms {
                for (kb, cb) in &b.terms {
                    self.add_term(ka + kb, ca * cb);
                }
            }
        } else {
            *self += &(a * b);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect(),
        }
    }

    /// Multiplies by `v^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k + shift, c.clone())).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor` in `Z[v^{±1}]`, or `None` when the
    /// divisor is zero or does not divide.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<Self> {
        let (d_min, d_max) = (divisor.min_exp()?, divisor.max_exp()?);
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lead = &divisor.terms.last()?.1;
        let floor = self.min_exp()? - d_min;
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some(r_max) = rem.max_exp() {
            let exp = r_max - d_max;
            if exp < floor {
                return None;
            }
            let r_lead = &rem.terms.last()?.1;
            if !(r_lead % lead).is_zero() {
                return None;
            }
            let c = r_lead / lead;
            let step = Self::monomial(exp, c);
            rem -= &(&step * divisor);
            quotient += &step;
        }
        Some(quotient)
    }

    fn merge_with(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: &BigInt| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(k, c)| (*k, sign(c))));
        Self { terms: out }
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge_with(rhs, false)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge_with(rhs, true)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if self.len() == 1 && rhs.len() == 1 {
            let (ka, ca) = &self.terms[0];
            let (kb, cb) = &rhs.terms[0];
            return LaurentPoly::monomial(ka + kb, ca * cb);
        }
        let lo = self.min_exp().unwrap() + rhs.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + rhs.max_exp().unwrap();
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                dense[(ka + kb - lo) as usize] += ca * cb;
            }
        }
        LaurentPoly {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i64, c))
                .collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.len() <= 2 {
            for (k, c) in &rhs.terms {
                self.add_term(*k, c.clone());
            }
        } else {
            *self = self.merge_with(rhs, false);
        }
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self += &rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.len() <= 2 {
            for (k, c) in &rhs.terms {
                self.add_term(*k, -c);
            }
        } else {
            *self = self.merge_with(rhs, true);
        }
    }
}

impl SubAssign<LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self -= &rhs;
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a LaurentPoly> for LaurentPoly {
    fn sum<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, x| &acc * &x)
    }
}

/// Renders in powers of `q`, highest exponent first: `q^{3/2} + 2 - q^{-1}`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let q_part = match (*k, k % 2 == 0) {
                (0, _) => String::new(),
                (2, _) => "q".to_string(),
                (k, true) if k < 0 => format!("q^{{{}}}", k / 2),
                (k, true) => format!("q^{}", k / 2),
                (k, false) => format!("q^{{{k}/2}}"),
            };
            if q_part.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&q_part)?;
            } else {
                write!(f, "{abs}{q_part}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentJson {
    v_exponents: Vec<(i64, String)>,
}

/// `{"v_exponents": [[k, "c"], ...]}` with ascending `k`.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        LaurentJson {
            v_exponents: self.terms.iter().map(|(k, c)| (*k, c.to_string())).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = LaurentJson::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.v_exponents.len());
        for (k, c) in raw.v_exponents {
            let c: BigInt = c
                .trim()
                .parse()
                .map_err(|_| D::Error::custom(format!("coefficient `{c}` is not a decimal integer")))?;
            terms.push((k, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}
