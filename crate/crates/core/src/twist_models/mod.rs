//! Finite rewriting models for multiplication by loops and arcs near an arc
//! `α`: the annulus model (full twist `τ`) and the punctured disk model
//! (half twist `σ`).

pub mod annulus;
pub mod disk;
pub mod rule_forcing;
pub mod transparency;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::ser::{SerializeMap, SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::chebyshev::PolyX;
use crate::laurent::{CyclotomicContext, LaurentPoly};

pub use annulus::AnnulusSymbol;
pub use disk::DiskSymbol;

/// A basis symbol of one of the models.
pub trait Symbol: Clone + Ord + fmt::Debug + fmt::Display {
    /// The left-right mirror image of the local picture.
    fn mirror(&self) -> Self;

    /// Fields of the JSON term object ahead of `coeff`, in output order.
    fn json_fields(&self) -> Vec<(&'static str, Value)>;
}

/// Finitely supported `Z[q^{±1/2}]`-combination of symbols.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkeinElement<S: Symbol> {
    support: BTreeMap<S, LaurentPoly>,
}

impl<S: Symbol> Default for SkeinElement<S> {
    fn default() -> Self {
        Self {
            support: BTreeMap::new(),
        }
    }
}

impl<S: Symbol> SkeinElement<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(symbol: S, coeff: impl Into<LaurentPoly>) -> Self {
        let mut out = Self::zero();
        out.add_term(symbol, &coeff.into());
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (S, LaurentPoly)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (s, c) in terms {
            out.add_term(s, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn coeff(&self, symbol: &S) -> LaurentPoly {
        self.support.get(symbol).cloned().unwrap_or_default()
    }

    /// Terms in canonical symbol order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&S, &LaurentPoly)> {
        self.support.iter()
    }

    pub fn add_term(&mut self, symbol: S, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.support.entry(symbol.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.support.remove(&symbol);
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for (s, oc) in &other.support {
            let slot = self.support.entry(s.clone()).or_default();
            slot.add_product(oc, c);
            if slot.is_zero() {
                self.support.remove(s);
            }
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        Self::from_terms(self.support.iter().map(|(s, c)| (s.clone(), f(c))))
    }

    /// Bar on coefficients; symbols untouched.
    pub fn bar_coefficients(&self) -> Self {
        self.map_coeffs(LaurentPoly::bar)
    }

    /// Bar on coefficients together with the mirror on symbols.
    pub fn mirror_bar(&self) -> Self {
        Self::from_terms(self.support.iter().map(|(s, c)| (s.mirror(), c.bar())))
    }

    pub fn is_symmetric(&self) -> bool {
        self.mirror_bar() == *self
    }

    pub fn reduce(&self, ctx: &CyclotomicContext) -> Self {
        self.map_coeffs(|c| c.reduce_mod_order(ctx))
    }

    /// Only the terms whose symbol satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&S) -> bool) -> Self {
        Self {
            support: self
                .support
                .iter()
                .filter(|(s, _)| keep(s))
                .map(|(s, c)| (s.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> LaurentPoly {
        self.support.values().sum()
    }

    pub fn all_coefficients_nonneg(&self) -> bool {
        self.support.values().all(LaurentPoly::is_nonneg)
    }

    /// `poly(p_α)` applied on the right of `seed`, where `mul_p` is right
    /// multiplication by `p_α`.
    pub fn apply_poly(&self, poly: &PolyX, mul_p: impl Fn(&Self) -> Self) -> Self {
        let Some(deg) = poly.degree() else {
            return Self::zero();
        };
        let mut out = Self::zero();
        let mut power = self.clone();
        for d in 0..=deg {
            if let Some(c) = poly.coeff_ref(d) {
                out.add_scaled(&power, c);
            }
            if d < deg {
                power = mul_p(&power);
            }
        }
        out
    }
}

impl<S: Symbol> Add<&SkeinElement<S>> for &SkeinElement<S> {
    type Output = SkeinElement<S>;
    fn add(self, rhs: &SkeinElement<S>) -> SkeinElement<S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::one());
        out
    }
}

impl<S: Symbol> Sub<&SkeinElement<S>> for &SkeinElement<S> {
    type Output = SkeinElement<S>;
    fn sub(self, rhs: &SkeinElement<S>) -> SkeinElement<S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::constant(-1));
        out
    }
}

impl<S: Symbol> Neg for &SkeinElement<S> {
    type Output = SkeinElement<S>;
    fn neg(self) -> SkeinElement<S> {
        self.map_coeffs(|c| -c)
    }
}

impl<S: Symbol> fmt::Display for SkeinElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.support.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{s}")?;
            } else {
                write!(f, "({c}){s}")?;
            }
        }
        Ok(())
    }
}

impl<S: Symbol> fmt::Debug for SkeinElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkeinElement({self})")
    }
}

struct TermsJson<'a, S: Symbol>(&'a BTreeMap<S, LaurentPoly>);

impl<S: Symbol> Serialize for TermsJson<'_, S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for (s, c) in self.0 {
            seq.serialize_element(&TermJson(s, c))?;
        }
        seq.end()
    }
}

struct TermJson<'a, S: Symbol>(&'a S, &'a LaurentPoly);

impl<S: Symbol> Serialize for TermJson<'_, S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        let fields = self.0.json_fields();
        let mut map = serializer.serialize_map(Some(fields.len() + 1))?;
        for (k, v) in &fields {
            map.serialize_entry(k, v)?;
        }
        map.serialize_entry("coeff", self.1)?;
        map.end()
    }
}

/// `{"terms": [{"symbol": ..., <indices>, "coeff": LaurentPoly}, ...]}`.
impl<S: Symbol> Serialize for SkeinElement<S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        let mut st = serializer.serialize_struct("SkeinElement", 1)?;
        st.serialize_field("terms", &TermsJson(&self.support))?;
        st.end()
    }
}

/// `q^{n/2} = v^n`.
pub(crate) fn v(n: i64) -> LaurentPoly {
    LaurentPoly::v_pow(n)
}

/// `q^n = v^{2n}`.
pub(crate) fn q(n: i64) -> LaurentPoly {
    LaurentPoly::q_pow(n)
}
