//! Recovers the C-rule `C(k) p_α = A·C(k+1) + B·C(k-1) + E·B(0,1)` from the
//! tabulated `z · T̄_n(α)`, `n = 1, 3, 5`.
//!
//! `z · T̄_3 = z · α · (p_α - 1)` uses the rule exactly once, so its
//! coefficients are affine in `(A, B, E)`; solving those equations pins the
//! rule down. The `n = 1` and `n = 5` tables are then checked against it.

use std::collections::BTreeSet;

use serde::Serialize;

use super::disk::{b, small_case_table, z_mul_alpha, z_mul_poly_with, CRule, DiskElement, DiskSymbol};
use crate::chebyshev::sequences::cheb_tbar;
use crate::laurent::LaurentPoly;

/// `constant + a·A + b·B + e·E`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct AffineForm {
    constant: LaurentPoly,
    coeffs: [LaurentPoly; 3],
}

impl AffineForm {
    fn add_scaled(&mut self, other: &AffineForm, c: &LaurentPoly) {
        self.constant.add_product(&other.constant, c);
        for (a, o) in self.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_product(o, c);
        }
    }
}

/// An element whose coefficients are affine in the unknown rule.
#[derive(Clone, Debug, Default)]
struct AffineElement(std::collections::BTreeMap<DiskSymbol, AffineForm>);

impl AffineElement {
    fn from_element(e: &DiskElement) -> Self {
        Self(
            e.terms()
                .map(|(s, c)| {
                    (
                        *s,
                        AffineForm {
                            constant: c.clone(),
                            ..Default::default()
                        },
                    )
                })
                .collect(),
        )
    }

    fn add_scaled(&mut self, other: &AffineElement, c: &LaurentPoly) {
        for (s, f) in &other.0 {
            self.0.entry(*s).or_default().add_scaled(f, c);
        }
    }

    /// One application of `p_α` to an element with constant coefficients.
    fn mul_p_once(e: &DiskElement) -> Self {
        let mut out = AffineElement::default();
        let constant_only = |c: &LaurentPoly| AffineForm {
            constant: c.clone(),
            ..Default::default()
        };
        let unknown = |i: usize, c: &LaurentPoly| {
            let mut f = AffineForm::default();
            f.coeffs[i] = c.clone();
            f
        };
        let one = LaurentPoly::one();
        for (s, c) in e.terms() {
            let pieces: Vec<(DiskSymbol, AffineForm)> = match *s {
                DiskSymbol::C(k) => vec![
                    (DiskSymbol::C(k + 1), unknown(0, c)),
                    (DiskSymbol::C(k - 1), unknown(1, c)),
                    (b(0, 1), unknown(2, c)),
                ],
                _ => super::disk::disk_mul_p(&DiskElement::term(*s, c.clone()))
                    .terms()
                    .map(|(s2, c2)| (*s2, constant_only(c2)))
                    .collect(),
            };
            for (sym, f) in pieces {
                out.0.entry(sym).or_default().add_scaled(&f, &one);
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleForcingReport {
    /// The solved rule, if the equations have one.
    pub solution: Option<CRule>,
    /// Every unknown was isolated by an equation with a nonzero coefficient.
    pub unique: bool,
    pub matches_n1: bool,
    pub matches_n3: bool,
    pub matches_n5: bool,
}

impl RuleForcingReport {
    pub fn forces_standard_rule(&self) -> bool {
        self.unique
            && self.matches_n1
            && self.matches_n3
            && self.matches_n5
            && self.solution.as_ref() == Some(&CRule::standard())
    }
}

/// Solves `form_s(A, B, E) = target_s` for all symbols `s` by repeatedly
/// picking an equation with a single unresolved unknown and dividing exactly.
fn solve(equations: &[(AffineForm, LaurentPoly)]) -> (Option<[LaurentPoly; 3]>, bool) {
    let mut known: [Option<LaurentPoly>; 3] = Default::default();
    loop {
        let mut progressed = false;
        for (form, target) in equations {
            let open: Vec<usize> = (0..3)
                .filter(|&i| known[i].is_none() && !form.coeffs[i].is_zero())
                .collect();
            if open.len() != 1 {
                continue;
            }
            let i = open[0];
            let mut rhs = target - &form.constant;
            for (j, kj) in known.iter().enumerate() {
                if let Some(val) = kj {
                    rhs -= &form.coeffs[j] * val;
                }
            }
            match rhs.div_exact(&form.coeffs[i]) {
                Some(val) => known[i] = Some(val),
                None => return (None, true),
            }
            progressed = true;
        }
        if !progressed {
            break;
        }
    }
    if known.iter().any(Option::is_none) {
        return (None, false);
    }
    let vals = known.map(|k| k.expect("all unknowns resolved"));
    let consistent = equations.iter().all(|(form, target)| {
        let mut lhs = form.constant.clone();
        for (c, v) in form.coeffs.iter().zip(&vals) {
            lhs.add_product(c, v);
        }
        &lhs == target
    });
    if consistent {
        (Some(vals), true)
    } else {
        (None, true)
    }
}

/// Solves for the C-rule against the `n = 3` table, then checks `n = 1, 5`.
pub fn force_c_rule() -> RuleForcingReport {
    // z · T̄_3 = (z·α)·p_α - z·α
    let seed = z_mul_alpha();
    let mut affine = AffineElement::mul_p_once(&seed);
    affine.add_scaled(&AffineElement::from_element(&seed), &LaurentPoly::constant(-1));
    let target = small_case_table(3).expect("table covers n = 3");

    let symbols: BTreeSet<DiskSymbol> = affine
        .0
        .keys()
        .copied()
        .chain(target.terms().map(|(s, _)| *s))
        .collect();
    let equations: Vec<(AffineForm, LaurentPoly)> = symbols
        .iter()
        .map(|s| (affine.0.get(s).cloned().unwrap_or_default(), target.coeff(s)))
        .collect();

    let (vals, unique) = solve(&equations);
    let solution = vals.map(|[up, down, extra]| CRule { up, down, extra });
    let check = |n: usize| {
        solution.as_ref().is_some_and(|rule| {
            Some(z_mul_poly_with(&cheb_tbar(n), rule)) == small_case_table(n)
        })
    };
    RuleForcingReport {
        matches_n1: check(1),
        matches_n3: check(3),
        matches_n5: check(5),
        unique,
        solution,
    }
}
