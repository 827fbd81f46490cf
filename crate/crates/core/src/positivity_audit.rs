//! Coefficient extraction for `R_1(β) · R_n(α)` in the annulus model and the
//! `T̄` lower-bound test for normalized sequences.

use std::fmt;

use serde::Serialize;
use serde_json::Value;

use crate::chebyshev::basis::TriangularBasis;
use crate::chebyshev::sequences::{Family, NormalizedSequence};
use crate::chebyshev::PolyX;
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::twist_models::annulus::{beta, beta_mul_tbar, AnnulusElement, AnnulusSymbol};
use crate::twist_models::{SkeinElement, Symbol};

/// `(c_0, ..., c_d)` with `P = Σ c_k T̄_k`.
pub fn expand_in_tbar(p: &PolyX) -> Result<Vec<LaurentPoly>> {
    let deg = p.degree().unwrap_or(0);
    TriangularBasis::new(&NormalizedSequence::family(Family::Tbar), deg)?.expand(p)
}

/// `Σ c_k T̄_k`.
pub fn reassemble_from_tbar(c: &[LaurentPoly]) -> Result<PolyX> {
    let deg = c.len().saturating_sub(1);
    Ok(TriangularBasis::new(&NormalizedSequence::family(Family::Tbar), deg)?.reassemble(c))
}

/// A row of the audit: the element `R_n(α)` itself, or `R_1` applied to an
/// annulus symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AuditRow {
    Rn,
    Annulus(AnnulusSymbol),
}

impl fmt::Display for AuditRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditRow::Rn => f.write_str("Rn"),
            AuditRow::Annulus(s) => write!(f, "R1[{s}]"),
        }
    }
}

impl Symbol for AuditRow {
    fn mirror(&self) -> Self {
        match self {
            AuditRow::Rn => AuditRow::Rn,
            AuditRow::Annulus(s) => AuditRow::Annulus(s.mirror()),
        }
    }

    fn json_fields(&self) -> Vec<(&'static str, Value)> {
        match self {
            AuditRow::Rn => vec![("symbol", "Rn".into())],
            AuditRow::Annulus(s) => s.json_fields(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub a: LaurentPoly,
    pub c: Vec<LaurentPoly>,
    pub terms: SkeinElement<AuditRow>,
    pub d: LaurentPoly,
}

/// `β · Σ c_k T̄_k(α)`.
pub fn beta_times_tbar_combination(c: &[LaurentPoly]) -> AnnulusElement {
    let mut out = AnnulusElement::zero();
    for (k, ck) in c.iter().enumerate() {
        let piece = if k == 0 {
            beta()
        } else {
            beta_mul_tbar(k).expect("k ≥ 1")
        };
        out.add_scaled(&piece, ck);
    }
    out
}

/// Expands `(β + a) R_n(α)` with `R_n = Σ c_k T̄_k` and rewrites every
/// annulus symbol `X` as `R_1(X) - a`. The leftover scalar is `d`.
pub fn audit_r1_rn(a: &LaurentPoly, c: &[LaurentPoly]) -> AuditReport {
    let body = beta_times_tbar_combination(c);
    let mut terms = SkeinElement::term(AuditRow::Rn, a.clone());
    for (s, coeff) in body.terms() {
        terms.add_term(AuditRow::Annulus(*s), coeff);
    }
    let d = -(a * &body.coefficient_sum());
    AuditReport {
        a: a.clone(),
        c: c.to_vec(),
        terms,
        d,
    }
}

/// `-a (c_0 + Σ_k c_{2k}(q^k + q^{-k}) + Σ_k c_{2k-1}(q^{(2k-1)/2} + q^{-(2k-1)/2}))`.
pub fn d_closed_form(a: &LaurentPoly, c: &[LaurentPoly]) -> LaurentPoly {
    let mut bracket = LaurentPoly::zero();
    for (j, cj) in c.iter().enumerate() {
        let weight = if j == 0 {
            LaurentPoly::one()
        } else if j % 2 == 0 {
            LaurentPoly::q_pair((j / 2) as i64)
        } else {
            LaurentPoly::v_pair(j as i64)
        };
        bracket.add_product(cj, &weight);
    }
    -(a * &bracket)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LowerBoundViolation {
    /// `R_1 = x + a` with `a ≠ 0`.
    NonzeroShift { a: LaurentPoly },
    /// `R_n` has a coefficient outside the cone in the `T̄` basis.
    NegativeCoefficient { n: usize, k: usize, coeff: LaurentPoly },
}

pub fn lower_bound_violation(r: &NormalizedSequence, max: usize) -> Result<Option<LowerBoundViolation>> {
    r.check_upto(max.max(1))?;
    let a = r.term(1).coeff(0);
    if !a.is_zero() {
        return Ok(Some(LowerBoundViolation::NonzeroShift { a }));
    }
    let basis = TriangularBasis::new(&NormalizedSequence::family(Family::Tbar), max)?;
    for n in 0..=max {
        let c = basis.expand(&r.term(n))?;
        if let Some(k) = c.iter().position(|ck| !ck.is_nonneg()) {
            return Ok(Some(LowerBoundViolation::NegativeCoefficient {
                n,
                k,
                coeff: c[k].clone(),
            }));
        }
    }
    Ok(None)
}

/// `R_1 = x`, and every `R_n`, `n ≤ max`, has nonnegative `T̄` coefficients.
pub fn lower_bound_check(r: &NormalizedSequence, max: usize) -> Result<bool> {
    Ok(lower_bound_violation(r, max)?.is_none())
}
