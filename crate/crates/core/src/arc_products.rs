//! Products of Chebyshev polynomials in a single arc `α`, and the exchange
//! `p_α = α² - 2` between the arc and the loop around it.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::chebyshev::basis::TriangularBasis;
use crate::chebyshev::sequences::{cheb_t, cheb_tbar, Family, NormalizedSequence};
use crate::chebyshev::PolyX;
use crate::error::Result;
use crate::laurent::LaurentPoly;

/// `P(α) = E(p_α) + O(p_α)·α`, with `E` and `O` stored as polynomials in `p_α`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcPolyExpansion {
    pub even_part: PolyX,
    pub odd_part: PolyX,
}

/// `x ↦ x² - 2`, i.e. `p_α` written in `α`.
pub fn p_alpha() -> PolyX {
    PolyX::from_ints(&[-2, 0, 1])
}

impl ArcPolyExpansion {
    /// Substitutes `p_α = α² - 2` back.
    pub fn to_polyx(&self) -> PolyX {
        let p = p_alpha();
        &self.even_part.compose(&p) + &self.odd_part.compose(&p).mul_x()
    }

    pub fn is_zero(&self) -> bool {
        self.even_part.is_zero() && self.odd_part.is_zero()
    }
}

pub fn expand_arc_poly(poly: &PolyX) -> ArcPolyExpansion {
    // P(x) = A(x²) + x·B(x²), and x² = p + 2
    let mut a = PolyX::zero();
    let mut b = PolyX::zero();
    for (d, c) in poly.terms() {
        let target = if d % 2 == 0 { &mut a } else { &mut b };
        target.add_scaled_shifted(&PolyX::x_pow(d / 2), c, 0);
    }
    let shift = PolyX::from_ints(&[2, 1]);
    ArcPolyExpansion {
        even_part: a.compose(&shift),
        odd_part: b.compose(&shift),
    }
}

/// Sparse structure constants `k ↦ c_k` of `T̄_m · T̄_n = Σ c_k T̄_k`.
pub type StructureConstants = BTreeMap<usize, LaurentPoly>;

/// Multiplies out `T̄_m(x) T̄_n(x)` and solves the triangular system in the
/// `T̄` basis.
pub fn product_in_tbar_basis(m: usize, n: usize) -> Result<StructureConstants> {
    let product = &cheb_tbar(m) * &cheb_tbar(n);
    let basis = TriangularBasis::new(&NormalizedSequence::family(Family::Tbar), m + n)?;
    Ok(basis
        .expand(&product)?
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect())
}

pub fn product_closed_form(m: usize, n: usize) -> StructureConstants {
    let one = LaurentPoly::one;
    let mut out = StructureConstants::new();
    if m == 0 || n == 0 {
        out.insert(m + n, one());
    } else if m == n {
        out.insert(2 * n, one());
        out.insert(0, LaurentPoly::constant(2));
    } else {
        out.insert(m + n, one());
        out.insert(m.abs_diff(n), one());
    }
    out
}

pub fn products_agree(m: usize, n: usize) -> Result<bool> {
    Ok(product_in_tbar_basis(m, n)? == product_closed_form(m, n))
}

/// Checks `T̄_{2n+1}(α) T̄_{2m+1}(α) = T_{2(n+m+1)}(α) + T_{2|n-m|}(α)`
/// along both routes: through `(S_n - S_{n-1})(p)(S_m - S_{m-1})(p)(p + 2)`
/// in the loop variable, and by direct multiplication in `α`.
///
/// The second summand is `T`, not `T̄`: at `n = m` it contributes `2`.
pub fn verify_odd_odd_display(n: usize, m: usize) -> bool {
    let left = expand_arc_poly(&cheb_tbar(2 * n + 1));
    let right = expand_arc_poly(&cheb_tbar(2 * m + 1));
    if !left.even_part.is_zero() || !right.even_part.is_zero() {
        return false;
    }
    let in_p = &(&left.odd_part * &right.odd_part) * &PolyX::from_ints(&[2, 1]);
    let expected_in_p = &cheb_t(n + m + 1) + &cheb_t(n.abs_diff(m));
    if in_p != expected_in_p {
        return false;
    }
    let via_arc = ArcPolyExpansion {
        even_part: in_p,
        odd_part: PolyX::zero(),
    }
    .to_polyx();
    let direct = &cheb_tbar(2 * n + 1) * &cheb_tbar(2 * m + 1);
    let display = &cheb_t(2 * (n + m + 1)) + &cheb_t(2 * n.abs_diff(m));
    via_arc == direct && direct == display
}

/// One row of the structure-constant table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductRow {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub coefficient: LaurentPoly,
}

/// All nonzero structure constants for `0 ≤ m, n ≤ max`, in `(m, n, k)` order.
pub fn product_table(max: usize) -> Result<Vec<ProductRow>> {
    let mut rows = Vec::new();
    for m in 0..=max {
        for n in 0..=max {
            for (k, coefficient) in product_in_tbar_basis(m, n)? {
                rows.push(ProductRow { m, n, k, coefficient });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::sequences::s_diff;

    fn consts(pairs: &[(usize, i64)]) -> StructureConstants {
        pairs.iter().map(|&(k, c)| (k, LaurentPoly::constant(c))).collect()
    }

    #[test]
    fn expand_x_squared() {
        let e = expand_arc_poly(&PolyX::x_pow(2));
        assert_eq!(e.even_part, PolyX::from_ints(&[2, 1]));
        assert!(e.odd_part.is_zero());
    }

    #[test]
    fn expand_even_tbar_is_t_in_p() {
        let e = expand_arc_poly(&cheb_tbar(6));
        assert_eq!(e.even_part, cheb_t(3));
        assert!(e.odd_part.is_zero());
    }

    #[test]
    fn expand_odd_tbar_is_sdiff_in_p() {
        let e = expand_arc_poly(&cheb_tbar(5));
        assert!(e.even_part.is_zero());
        assert_eq!(e.odd_part, PolyX::from_ints(&[-1, -1, 1]));
        for n in 0..20 {
            assert_eq!(expand_arc_poly(&cheb_tbar(2 * n + 1)).odd_part, s_diff(n));
        }
    }

    #[test]
    fn round_trip_on_families() {
        for fam in Family::ALL {
            for n in 0..=24 {
                let p = fam.term(n);
                assert_eq!(expand_arc_poly(&p).to_polyx(), p, "{fam} {n}");
            }
        }
    }

    #[test]
    fn product_examples() {
        assert_eq!(product_in_tbar_basis(3, 5).unwrap(), consts(&[(8, 1), (2, 1)]));
        assert_eq!(product_in_tbar_basis(0, 7).unwrap(), consts(&[(7, 1)]));
        assert_eq!(product_in_tbar_basis(4, 4).unwrap(), consts(&[(8, 1), (0, 2)]));
        assert_eq!(product_in_tbar_basis(0, 0).unwrap(), consts(&[(0, 1)]));
    }

    #[test]
    fn closed_form_matches_oracle() {
        for m in 0..=20 {
            for n in 0..=20 {
                assert!(products_agree(m, n).unwrap(), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn odd_odd_examples() {
        assert!(verify_odd_odd_display(0, 0));
        assert!(verify_odd_odd_display(1, 2));
        assert!(verify_odd_odd_display(4, 4));
        // T̄_9² = T̄_18 + 2·T̄_0
        let sq = &cheb_tbar(9) * &cheb_tbar(9);
        assert_eq!(sq, &cheb_tbar(18) + &PolyX::constant(2));
    }

    #[test]
    fn table_rows_are_ordered() {
        let rows = product_table(2).unwrap();
        assert_eq!(rows[0], ProductRow { m: 0, n: 0, k: 0, coefficient: LaurentPoly::one() });
        let keys: Vec<_> = rows.iter().map(|r| (r.m, r.n)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
