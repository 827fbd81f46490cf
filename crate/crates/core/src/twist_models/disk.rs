//! Punctured disk model around `α`: the transverse arc `z`, its half-twist
//! images, the crossing arcs `C(k)`, and the blocks `(L+R) p_α^m α^ε`.

use std::fmt;

use serde::Serialize;
use serde_json::Value;

use super::{q, SkeinElement, Symbol};
use crate::arc_products::expand_arc_poly;
use crate::chebyshev::basis::TriangularBasis;
use crate::chebyshev::sequences::{cheb_s, cheb_tbar, Family, NormalizedSequence};
use crate::chebyshev::PolyX;
use crate::error::{Result, SkeinError};
use crate::laurent::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiskSymbol {
    /// `σ^k(z)`.
    Z(i64),
    /// `σ^{k-1}(A↗)`; `C(0) = A↖`.
    C(i64),
    /// `(L+R) p_α^m α^eps`.
    B { m: usize, eps: u8 },
}

impl fmt::Display for DiskSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiskSymbol::Z(k) => write!(f, "Z({k})"),
            DiskSymbol::C(k) => write!(f, "C({k})"),
            DiskSymbol::B { m, eps } => write!(f, "B({m},{eps})"),
        }
    }
}

impl Symbol for DiskSymbol {
    fn mirror(&self) -> Self {
        match *self {
            DiskSymbol::Z(k) => DiskSymbol::Z(-k),
            DiskSymbol::C(k) => DiskSymbol::C(1 - k),
            b @ DiskSymbol::B { .. } => b,
        }
    }

    fn json_fields(&self) -> Vec<(&'static str, Value)> {
        match *self {
            DiskSymbol::Z(k) => vec![("symbol", "Z".into()), ("k", k.into())],
            DiskSymbol::C(k) => vec![("symbol", "C".into()), ("k", k.into())],
            DiskSymbol::B { m, eps } => vec![("symbol", "B".into()), ("m", m.into()), ("eps", eps.into())],
        }
    }
}

pub type DiskElement = SkeinElement<DiskSymbol>;

pub fn b(m: usize, eps: u8) -> DiskSymbol {
    DiskSymbol::B { m, eps }
}

/// Coefficients of `C(k) p_α = up·C(k+1) + down·C(k-1) + extra·B(0,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CRule {
    pub up: LaurentPoly,
    pub down: LaurentPoly,
    pub extra: LaurentPoly,
}

impl CRule {
    /// `(q², q⁻², 1)`.
    pub fn standard() -> Self {
        Self {
            up: q(2),
            down: q(-2),
            extra: LaurentPoly::one(),
        }
    }
}

/// Right multiplication by `p_α` under a given C-rule.
pub fn disk_mul_p_with(e: &DiskElement, rule: &CRule) -> DiskElement {
    let mut out = DiskElement::zero();
    let (up, down, cross) = (q(2), q(-2), LaurentPoly::q_pair(1));
    for (s, c) in e.terms() {
        match *s {
            DiskSymbol::Z(k) => {
                out.add_term(DiskSymbol::Z(k + 1), &(c * &up));
                out.add_term(DiskSymbol::Z(k - 1), &(c * &down));
                out.add_term(b(0, 0), &(c * &cross));
            }
            DiskSymbol::C(k) => {
                out.add_term(DiskSymbol::C(k + 1), &(c * &rule.up));
                out.add_term(DiskSymbol::C(k - 1), &(c * &rule.down));
                out.add_term(b(0, 1), &(c * &rule.extra));
            }
            DiskSymbol::B { m, eps } => out.add_term(b(m + 1, eps), c),
        }
    }
    out
}

pub fn disk_mul_p(e: &DiskElement) -> DiskElement {
    disk_mul_p_with(e, &CRule::standard())
}

pub fn z() -> DiskElement {
    DiskElement::term(DiskSymbol::Z(0), 1)
}

/// `z · α = q A↗ + q⁻¹ A↖`.
pub fn z_mul_alpha() -> DiskElement {
    DiskElement::from_terms([(DiskSymbol::C(1), q(1)), (DiskSymbol::C(0), q(-1))])
}

pub fn z_mul_poly_with(poly: &PolyX, rule: &CRule) -> DiskElement {
    let e = expand_arc_poly(poly);
    let even = z().apply_poly(&e.even_part, |x| disk_mul_p_with(x, rule));
    let odd = z_mul_alpha().apply_poly(&e.odd_part, |x| disk_mul_p_with(x, rule));
    &even + &odd
}

/// `z · T̄_n(α)` by running the multiplication rules.
pub fn z_mul_tbar_rewrite(n: usize) -> DiskElement {
    z_mul_poly_with(&cheb_tbar(n), &CRule::standard())
}

/// `(L+R) · P(α)` as `B` symbols.
pub fn lr_times(poly_in_alpha: &PolyX) -> DiskElement {
    let e = expand_arc_poly(poly_in_alpha);
    let mut out = DiskElement::zero();
    for (part, eps) in [(&e.even_part, 0u8), (&e.odd_part, 1u8)] {
        for (m, c) in part.terms() {
            out.add_term(b(m, eps), c);
        }
    }
    out
}

/// `S_k(q² + q⁻²)`.
pub fn s_at_q_pair(k: usize) -> LaurentPoly {
    cheb_s(k as i64)
        .expect("k is nonnegative")
        .eval(&LaurentPoly::q_pair(2))
}

fn extremes(n: usize) -> DiskElement {
    let k = (n / 2) as i64;
    let n_i = n as i64;
    if n.is_multiple_of(2) {
        if n == 0 {
            return z();
        }
        DiskElement::from_terms([(DiskSymbol::Z(k), q(n_i)), (DiskSymbol::Z(-k), q(-n_i))])
    } else {
        DiskElement::from_terms([(DiskSymbol::C(k + 1), q(n_i)), (DiskSymbol::C(-k), q(-n_i))])
    }
}

/// The tabulated values of `z · T̄_n(α)` for `n ≤ 5`.
pub fn small_case_table(n: usize) -> Option<DiskElement> {
    let cross = LaurentPoly::q_pair(1);
    let sym = match n {
        0 | 1 => DiskElement::zero(),
        2 => DiskElement::term(b(0, 0), cross),
        3 => DiskElement::term(b(0, 1), cross),
        4 => DiskElement::from_terms([
            (b(0, 0), &cross * &LaurentPoly::q_pair(2)),
            (b(1, 0), cross),
        ]),
        5 => DiskElement::from_terms([(b(0, 1), LaurentPoly::q_pair(3)), (b(1, 1), cross)]),
        _ => return None,
    };
    Some(&extremes(n) + &sym)
}

/// The part of `z · T̄_n(α)` besides the two extreme terms, for `n = 2k+1`:
/// `(L+R)(q+q⁻¹) Σ_{i=1}^{k} S_{i-1}(q²+q⁻²) T̄_{2k-2i+1}(α)`;
/// for `n = 2k`: `(L+R)(q+q⁻¹) Σ_{i=0}^{k-1} S_i(q²+q⁻²) T̄_{k-i-1}(p_α)`.
fn general_symmetric_part(n: usize) -> DiskElement {
    let k = n / 2;
    let cross = LaurentPoly::q_pair(1);
    let mut poly = PolyX::zero();
    if n % 2 == 1 {
        for i in 1..=k {
            let c = &cross * &s_at_q_pair(i - 1);
            poly.add_scaled_shifted(&cheb_tbar(2 * k - 2 * i + 1), &c, 0);
        }
    } else {
        let p = crate::arc_products::p_alpha();
        for i in 0..k {
            let c = &cross * &s_at_q_pair(i);
            poly.add_scaled_shifted(&cheb_tbar(k - i - 1).compose(&p), &c, 0);
        }
    }
    lr_times(&poly)
}

/// `z · T̄_n(α)` from the closed forms; `n ≤ 5` uses the small-case tables.
pub fn z_mul_tbar_closed(n: usize) -> DiskElement {
    small_case_table(n).unwrap_or_else(|| &extremes(n) + &general_symmetric_part(n))
}

/// The closed form with the small cases also taken from the general sums.
pub fn z_mul_tbar_general(n: usize) -> DiskElement {
    if n == 0 {
        return z();
    }
    &extremes(n) + &general_symmetric_part(n)
}

/// `z · T̄_n(α)` minus its two extreme `C`-terms, for odd `n`.
pub fn odd_symmetric_part(n: usize) -> Result<DiskElement> {
    if n.is_multiple_of(2) {
        return Err(SkeinError::IndexOutOfRange {
            what: "odd n",
            value: n as i64,
            min: 1,
        });
    }
    Ok(&z_mul_tbar_closed(n) - &extremes(n))
}

/// `T̄_n(α) · z`: the extreme coefficients invert, everything else stays.
pub fn tbar_mul_z(n: usize) -> DiskElement {
    let left = z_mul_tbar_closed(n);
    if n % 2 == 1 {
        let rest = &left - &extremes(n);
        &extremes(n).bar_coefficients() + &rest
    } else {
        left.bar_coefficients()
    }
}

/// Coefficients `c_k` with `Σ b_{m,ε} (L+R) p_α^m α^ε = (L+R) Σ c_k T̄_k(α)`.
/// Non-`B` terms are ignored.
pub fn b_part_in_tbar(e: &DiskElement) -> Result<Vec<LaurentPoly>> {
    let p = crate::arc_products::p_alpha();
    let mut poly = PolyX::zero();
    for (s, c) in e.terms() {
        if let DiskSymbol::B { m, eps } = *s {
            let mut term = PolyX::one();
            for _ in 0..m {
                term = &term * &p;
            }
            if eps == 1 {
                term = term.mul_x();
            }
            poly.add_scaled_shifted(&term, c, 0);
        }
    }
    let deg = poly.degree().unwrap_or(0);
    TriangularBasis::new(&NormalizedSequence::family(Family::Tbar), deg)?.expand(&poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use DiskSymbol::{C, Z};

    fn cross() -> LaurentPoly {
        LaurentPoly::q_pair(1)
    }

    #[test]
    fn mul_p_examples() {
        assert_eq!(
            disk_mul_p(&DiskElement::term(Z(0), 1)),
            DiskElement::from_terms([(Z(1), q(2)), (Z(-1), q(-2)), (b(0, 0), cross())])
        );
        assert_eq!(
            disk_mul_p(&DiskElement::term(C(0), 1)),
            DiskElement::from_terms([(C(1), q(2)), (C(-1), q(-2)), (b(0, 1), LaurentPoly::one())])
        );
        assert_eq!(disk_mul_p(&DiskElement::term(b(2, 1), 1)), DiskElement::term(b(3, 1), 1));
    }

    #[test]
    fn rewrite_matches_small_tables() {
        for n in 0..=5 {
            assert_eq!(z_mul_tbar_rewrite(n), z_mul_tbar_closed(n), "n={n}");
        }
        assert_eq!(
            z_mul_tbar_rewrite(3),
            DiskElement::from_terms([(C(2), q(3)), (C(-1), q(-3)), (b(0, 1), cross())])
        );
    }

    #[test]
    fn general_sums_agree_with_rewrite() {
        for n in 0..=24 {
            assert_eq!(z_mul_tbar_general(n), z_mul_tbar_rewrite(n), "n={n}");
        }
    }

    #[test]
    fn symmetry() {
        assert!(z_mul_tbar_closed(4).is_symmetric());
        assert!(z_mul_tbar_rewrite(1).is_symmetric());
        assert!(!DiskElement::term(C(2), q(3)).is_symmetric());
        for n in (1..=21).step_by(2) {
            let sym = odd_symmetric_part(n).unwrap();
            assert!(sym.is_symmetric(), "n={n}");
            assert!(sym.terms().all(|(s, _)| matches!(s, DiskSymbol::B { .. })));
        }
        assert!(odd_symmetric_part(4).is_err());
    }

    #[test]
    fn mirror_bar_examples() {
        assert_eq!(DiskElement::term(Z(1), q(2)).mirror_bar(), DiskElement::term(Z(-1), q(-2)));
        assert_eq!(z_mul_alpha().mirror_bar(), z_mul_alpha());
        let e = DiskElement::term(b(0, 1), cross());
        assert_eq!(e.mirror_bar(), e);
    }

    #[test]
    fn right_multiplication() {
        assert_eq!(
            tbar_mul_z(1),
            DiskElement::from_terms([(C(1), q(-1)), (C(0), q(1))])
        );
        assert_eq!(
            tbar_mul_z(3),
            DiskElement::from_terms([(C(2), q(-3)), (C(-1), q(3)), (b(0, 1), cross())])
        );
        assert_eq!(tbar_mul_z(0), z());
        for n in 0..=15 {
            assert_eq!(tbar_mul_z(n), z_mul_tbar_closed(n).bar_coefficients(), "n={n}");
        }
    }

    #[test]
    fn s_at_q_pair_sums_powers() {
        for k in 0..=12usize {
            let expected: LaurentPoly = (0..=k as i64)
                .map(|i| LaurentPoly::q_pow(2 * k as i64 - 4 * i))
                .sum();
            assert_eq!(s_at_q_pair(k), expected, "k={k}");
        }
    }

    #[test]
    fn symmetric_part_in_tbar_is_nonneg() {
        // raw B-coordinates carry negative coefficients from n = 7 on
        let raw = odd_symmetric_part(7).unwrap();
        assert!(!raw.all_coefficients_nonneg());
        for n in (3..=21).step_by(2) {
            let c = b_part_in_tbar(&odd_symmetric_part(n).unwrap()).unwrap();
            assert!(c.iter().all(LaurentPoly::is_nonneg), "n={n}");
        }
        let c5 = b_part_in_tbar(&odd_symmetric_part(5).unwrap()).unwrap();
        assert_eq!(
            c5,
            vec![
                LaurentPoly::zero(),
                &cross() * &LaurentPoly::q_pair(2),
                LaurentPoly::zero(),
                cross()
            ]
        );
    }
}
