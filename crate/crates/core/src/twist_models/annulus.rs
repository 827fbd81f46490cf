//! Annulus model: an arc `β` crossing `p_α` once, its images under the full
//! twist `τ`, and the arcs `τ^k(α̲)`.

use std::fmt;

use serde_json::Value;

use super::{q, v, SkeinElement, Symbol};
use crate::arc_products::expand_arc_poly;
use crate::chebyshev::sequences::{cheb_t, cheb_tbar, s_diff};
use crate::error::{Result, SkeinError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnnulusSymbol {
    /// `τ^k(β)`.
    Beta(i64),
    /// `τ^k(α̲)`; `D(0) = α̲` and `D(1) = ᾱ`.
    D(i64),
}

impl fmt::Display for AnnulusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnnulusSymbol::Beta(k) => write!(f, "BETA({k})"),
            AnnulusSymbol::D(k) => write!(f, "D({k})"),
        }
    }
}

impl Symbol for AnnulusSymbol {
    fn mirror(&self) -> Self {
        match *self {
            AnnulusSymbol::Beta(k) => AnnulusSymbol::Beta(-k),
            AnnulusSymbol::D(k) => AnnulusSymbol::D(1 - k),
        }
    }

    fn json_fields(&self) -> Vec<(&'static str, Value)> {
        let (name, k) = match *self {
            AnnulusSymbol::Beta(k) => ("BETA", k),
            AnnulusSymbol::D(k) => ("D", k),
        };
        vec![("symbol", name.into()), ("k", k.into())]
    }
}

pub type AnnulusElement = SkeinElement<AnnulusSymbol>;

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(SkeinError::IndexOutOfRange {
            what: "n",
            value: 0,
            min: 1,
        })
    } else {
        Ok(())
    }
}

/// Right multiplication by `p_α`: each symbol `X(k)` goes to
/// `q X(k+1) + q^{-1} X(k-1)`.
pub fn annulus_mul_p(e: &AnnulusElement) -> AnnulusElement {
    let mut out = AnnulusElement::zero();
    let (up, down) = (q(1), q(-1));
    for (s, c) in e.terms() {
        let (next, prev) = match *s {
            AnnulusSymbol::Beta(k) => (AnnulusSymbol::Beta(k + 1), AnnulusSymbol::Beta(k - 1)),
            AnnulusSymbol::D(k) => (AnnulusSymbol::D(k + 1), AnnulusSymbol::D(k - 1)),
        };
        out.add_term(next, &(c * &up));
        out.add_term(prev, &(c * &down));
    }
    out
}

pub fn beta() -> AnnulusElement {
    AnnulusElement::term(AnnulusSymbol::Beta(0), 1)
}

/// `β · α = q^{1/2} ᾱ + q^{-1/2} α̲`.
pub fn beta_mul_alpha() -> AnnulusElement {
    AnnulusElement::from_terms([(AnnulusSymbol::D(1), v(1)), (AnnulusSymbol::D(0), v(-1))])
}

/// `q^n τ^n(β) + q^{-n} τ^{-n}(β)`.
pub fn beta_mul_tn_p(n: usize) -> Result<AnnulusElement> {
    require_positive(n)?;
    let n = n as i64;
    Ok(AnnulusElement::from_terms([
        (AnnulusSymbol::Beta(n), q(n)),
        (AnnulusSymbol::Beta(-n), q(-n)),
    ]))
}

pub fn beta_mul_tn_p_recurrence(n: usize) -> Result<AnnulusElement> {
    require_positive(n)?;
    Ok(beta().apply_poly(&cheb_t(n), annulus_mul_p))
}

/// `β (S_n - S_{n-1})(p_α) α = q^{(2n+1)/2} τ^n(ᾱ) + q^{-(2n+1)/2} τ^{-n}(α̲)`.
pub fn beta_mul_snsm_alpha(n: usize) -> Result<AnnulusElement> {
    require_positive(n)?;
    let n = n as i64;
    Ok(AnnulusElement::from_terms([
        (AnnulusSymbol::D(n + 1), v(2 * n + 1)),
        (AnnulusSymbol::D(-n), v(-(2 * n + 1))),
    ]))
}

pub fn beta_mul_snsm_alpha_recurrence(n: usize) -> Result<AnnulusElement> {
    require_positive(n)?;
    Ok(beta_mul_alpha().apply_poly(&s_diff(n), annulus_mul_p))
}

/// `β · T̄_n(α)`.
pub fn beta_mul_tbar(n: usize) -> Result<AnnulusElement> {
    require_positive(n)?;
    let half = (n / 2) as i64;
    let n_i = n as i64;
    Ok(if n.is_multiple_of(2) {
        AnnulusElement::from_terms([
            (AnnulusSymbol::Beta(half), q(half)),
            (AnnulusSymbol::Beta(-half), q(-half)),
        ])
    } else {
        AnnulusElement::from_terms([
            (AnnulusSymbol::D(half + 1), v(n_i)),
            (AnnulusSymbol::D(-half), v(-n_i)),
        ])
    })
}

/// `β · T̄_n(α)` through `T̄_n(α) = E(p_α) + O(p_α) α`.
pub fn beta_mul_tbar_recurrence(n: usize) -> Result<AnnulusElement> {
    require_positive(n)?;
    Ok(beta_mul_any(&expand_arc_poly(&cheb_tbar(n))))
}

/// `β · P(α)` for an arbitrary polynomial, `β·T̄_0 = β` included.
pub fn beta_mul_any(expansion: &crate::arc_products::ArcPolyExpansion) -> AnnulusElement {
    let even = beta().apply_poly(&expansion.even_part, annulus_mul_p);
    let odd = beta_mul_alpha().apply_poly(&expansion.odd_part, annulus_mul_p);
    &even + &odd
}
