use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::laurent::LaurentPoly;

/// Univariate polynomial in `x` with Laurent-polynomial coefficients.
///
/// Stored sparsely by degree; no stored coefficient is zero, so the zero
/// polynomial is the empty map.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct PolyX {
    coeffs: BTreeMap<usize, LaurentPoly>,
}

impl PolyX {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(LaurentPoly::one())
    }

    pub fn x() -> Self {
        Self::monomial(1, LaurentPoly::one())
    }

    pub fn constant(c: impl Into<LaurentPoly>) -> Self {
        Self::monomial(0, c)
    }

    /// `c · x^degree`.
    pub fn monomial(degree: usize, c: impl Into<LaurentPoly>) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(degree, c);
        }
        Self { coeffs }
    }

    pub fn x_pow(degree: usize) -> Self {
        Self::monomial(degree, LaurentPoly::one())
    }

    pub fn from_coeffs<I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = (usize, LaurentPoly)>,
    {
        let mut out = Self::zero();
        for (d, c) in coeffs {
            out.add_at(d, &c);
        }
        out
    }

    /// Integer coefficients listed from degree 0 upwards.
    pub fn from_ints(ascending: &[i64]) -> Self {
        Self::from_coeffs(
            ascending
                .iter()
                .enumerate()
                .map(|(d, &c)| (d, LaurentPoly::constant(c))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: usize) -> LaurentPoly {
        self.coeffs.get(&degree).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, degree: usize) -> Option<&LaurentPoly> {
        self.coeffs.get(&degree)
    }

    pub fn leading(&self) -> Option<&LaurentPoly> {
        self.coeffs.values().next_back()
    }

    pub fn is_monic_of_degree(&self, n: usize) -> bool {
        self.degree() == Some(n) && self.leading().is_some_and(LaurentPoly::is_one)
    }

    /// Nonzero `(degree, coefficient)` pairs in ascending degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &LaurentPoly)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    fn add_at(&mut self, degree: usize, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(degree).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    /// `self += c · x^shift · other`.
    pub fn add_scaled_shifted(&mut self, other: &PolyX, c: &LaurentPoly, shift: usize) {
        if c.is_zero() {
            return;
        }
        for (d, oc) in &other.coeffs {
            let slot = self.coeffs.entry(d + shift).or_default();
            slot.add_product(oc, c);
            if slot.is_zero() {
                self.coeffs.remove(&(d + shift));
            }
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled_shifted(self, c, 0);
        out
    }

    pub fn mul_x(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(d, c)| (d + 1, c.clone())).collect(),
        }
    }

    /// Evaluates at a scalar by Horner's rule.
    pub fn eval(&self, at: &LaurentPoly) -> LaurentPoly {
        let Some(deg) = self.degree() else {
            return LaurentPoly::zero();
        };
        let mut acc = LaurentPoly::zero();
        for d in (0..=deg).rev() {
            acc = &acc * at;
            if let Some(c) = self.coeffs.get(&d) {
                acc += c;
            }
        }
        acc
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &PolyX) -> Self {
        let Some(deg) = self.degree() else {
            return Self::zero();
        };
        let mut acc = Self::zero();
        for d in (0..=deg).rev() {
            acc = &acc * inner;
            if let Some(c) = self.coeffs.get(&d) {
                acc.add_at(0, c);
            }
        }
        acc
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|(d, c)| (*d, f(c))))
    }
}

impl Add<&PolyX> for &PolyX {
    type Output = PolyX;
    fn add(self, rhs: &PolyX) -> PolyX {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_at(*d, c);
        }
        out
    }
}

impl Sub<&PolyX> for &PolyX {
    type Output = PolyX;
    fn sub(self, rhs: &PolyX) -> PolyX {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_at(*d, &-c);
        }
        out
    }
}

impl Neg for &PolyX {
    type Output = PolyX;
    fn neg(self) -> PolyX {
        PolyX {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }
}

impl Mul<&PolyX> for &PolyX {
    type Output = PolyX;
    fn mul(self, rhs: &PolyX) -> PolyX {
        let (Some(da), Some(db)) = (self.degree(), rhs.degree()) else {
            return PolyX::zero();
        };
        let mut dense = vec![LaurentPoly::zero(); da + db + 1];
        for (i, a) in &self.coeffs {
            for (j, b) in &rhs.coeffs {
                dense[i + j].add_product(a, b);
            }
        }
        PolyX {
            coeffs: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<PolyX> for PolyX {
            type Output = PolyX;
            fn $method(self, rhs: PolyX) -> PolyX {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&PolyX> for PolyX {
            type Output = PolyX;
            fn $method(self, rhs: &PolyX) -> PolyX {
                (&self).$method(rhs)
            }
        }
        impl $tr<PolyX> for &PolyX {
            type Output = PolyX;
            fn $method(self, rhs: PolyX) -> PolyX {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for PolyX {
    type Output = PolyX;
    fn neg(self) -> PolyX {
        -&self
    }
}

impl fmt::Display for PolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.coeffs.iter().rev().enumerate() {
            let x_part = match d {
                0 => String::new(),
                1 => "x".to_string(),
                d => format!("x^{d}"),
            };
            let rendered = c.to_string();
            let (neg, body) = if c.len() == 1 && rendered.starts_with('-') {
                (true, rendered[1..].to_string())
            } else {
                (false, rendered)
            };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if x_part.is_empty() {
                if c.len() > 1 {
                    write!(f, "({body})")?;
                } else {
                    f.write_str(&body)?;
                }
            } else if body == "1" {
                f.write_str(&x_part)?;
            } else if c.len() > 1 {
                write!(f, "({body}){x_part}")?;
            } else {
                write!(f, "{body}{x_part}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyX({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    x_coeffs: Vec<(usize, LaurentPoly)>,
}

/// `{"x_coeffs": [[deg, LaurentPoly], ...]}` with ascending degree.
impl Serialize for PolyX {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            x_coeffs: self.coeffs.iter().map(|(d, c)| (*d, c.clone())).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolyX {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        let mut seen = std::collections::BTreeSet::new();
        for (d, _) in &raw.x_coeffs {
            if !seen.insert(*d) {
                return Err(D::Error::custom(format!("degree {d} listed twice")));
            }
        }
        Ok(PolyX::from_coeffs(raw.x_coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let x = PolyX::x();
        let p = &(&x * &x) - &PolyX::constant(2);
        assert_eq!(p, PolyX::from_ints(&[-2, 0, 1]));
        assert_eq!(p.degree(), Some(2));
        assert!(p.is_monic_of_degree(2));
        assert_eq!(&p - &p, PolyX::zero());
        assert_eq!(PolyX::zero().degree(), None);
    }

    #[test]
    fn compose_and_eval() {
        let t2 = PolyX::from_ints(&[-2, 0, 1]);
        // (x^2 - 2)^2 - 2 = x^4 - 4x^2 + 2
        assert_eq!(t2.compose(&t2), PolyX::from_ints(&[2, 0, -4, 0, 1]));
        let q = LaurentPoly::q_pow(1) + LaurentPoly::q_pow(-1);
        assert_eq!(t2.eval(&q), LaurentPoly::q_pow(2) + LaurentPoly::q_pow(-2));
    }

    #[test]
    fn display_and_json() {
        let c = LaurentPoly::q_pow(1) + LaurentPoly::q_pow(-1);
        let p = &PolyX::from_ints(&[-1, -1, 1]) + &PolyX::monomial(3, c);
        assert_eq!(p.to_string(), "(q + q^{-1})x^3 + x^2 - x - 1");
        let json = serde_json::to_string(&PolyX::from_ints(&[-2, 0, 1])).unwrap();
        assert_eq!(
            json,
            r#"{"x_coeffs":[[0,{"v_exponents":[[0,"-2"]]}],[2,{"v_exponents":[[0,"1"]]}]]}"#
        );
        let back: PolyX = serde_json::from_str(&json).unwrap();
        assert_eq!(back, PolyX::from_ints(&[-2, 0, 1]));
    }
}
