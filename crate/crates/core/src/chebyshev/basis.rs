//! Triangular change of basis between normalized sequences and the
//! dominance order built on it.

use serde::Serialize;

use super::poly::PolyX;
use super::sequences::NormalizedSequence;
use crate::error::{Result, SkeinError};
use crate::laurent::LaurentPoly;

/// The first `max_degree + 1` terms of a normalized sequence, validated monic.
#[derive(Clone, Debug)]
pub struct TriangularBasis {
    name: String,
    terms: Vec<PolyX>,
}

impl TriangularBasis {
    pub fn new(seq: &NormalizedSequence, max_degree: usize) -> Result<Self> {
        let terms: Vec<PolyX> = (0..=max_degree).map(|n| seq.term(n)).collect();
        for (n, t) in terms.iter().enumerate() {
            if !t.is_monic_of_degree(n) {
                return Err(SkeinError::NotNormalized {
                    name: seq.name().to_string(),
                    n,
                });
            }
        }
        Ok(Self {
            name: seq.name().to_string(),
            terms,
        })
    }

    pub fn max_degree(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term(&self, n: usize) -> &PolyX {
        &self.terms[n]
    }

    /// Coefficients `(c_0, ..., c_d)` with `p = Σ c_i B_i`, `d = deg p`.
    /// The zero polynomial expands to an empty vector.
    pub fn expand(&self, p: &PolyX) -> Result<Vec<LaurentPoly>> {
        let Some(deg) = p.degree() else {
            return Ok(Vec::new());
        };
        if deg > self.max_degree() {
            return Err(SkeinError::NotNormalized {
                name: format!("{} (truncated at {})", self.name, self.max_degree()),
                n: deg,
            });
        }
        let mut rem = p.clone();
        let mut out = vec![LaurentPoly::zero(); deg + 1];
        for i in (0..=deg).rev() {
            let c = rem.coeff(i);
            if c.is_zero() {
                continue;
            }
            rem.add_scaled_shifted(&self.terms[i], &-&c, 0);
            out[i] = c;
        }
        debug_assert!(rem.is_zero());
        Ok(out)
    }

    /// `Σ c_i B_i`.
    pub fn reassemble(&self, coeffs: &[LaurentPoly]) -> PolyX {
        let mut out = PolyX::zero();
        for (i, c) in coeffs.iter().enumerate() {
            out.add_scaled_shifted(&self.terms[i], c, 0);
        }
        out
    }
}

/// Lower-triangular matrix `M` with `A_n = Σ_{i ≤ n} M[n][i] · B_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisChange {
    rows: Vec<Vec<LaurentPoly>>,
}

impl BasisChange {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.rows
    }

    /// `M[n][i]`, zero above the diagonal.
    pub fn entry(&self, n: usize, i: usize) -> LaurentPoly {
        self.rows[n].get(i).cloned().unwrap_or_default()
    }

    /// First entry (row-major) outside the nonnegative cone.
    pub fn first_negative(&self) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(n, row)| {
            row.iter()
                .position(|c| !c.is_nonneg())
                .map(|i| (n, i))
        })
    }

    pub fn is_nonneg(&self) -> bool {
        self.first_negative().is_none()
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &BasisChange) -> BasisChange {
        let size = self.size().min(other.size());
        let rows = (0..size)
            .map(|n| {
                (0..=n)
                    .map(|j| {
                        let mut acc = LaurentPoly::zero();
                        for i in j..=n {
                            acc.add_product(&self.entry(n, i), &other.entry(i, j));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        BasisChange { rows }
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(n, row)| {
            row.iter()
                .enumerate()
                .all(|(i, c)| if i == n { c.is_one() } else { c.is_zero() })
        })
    }
}

/// Expresses `A_0, ..., A_max` in the basis `B_0, ..., B_max`.
pub fn change_of_basis(
    a: &NormalizedSequence,
    b: &NormalizedSequence,
    max: usize,
) -> Result<BasisChange> {
    a.check_upto(max)?;
    let basis = TriangularBasis::new(b, max)?;
    let rows = (0..=max)
        .map(|n| basis.expand(&a.term(n)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BasisChange { rows })
}

/// `(A_n) ≥ (B_n)` truncated at degree `max`: every `A_n` is a
/// `Z_{≥0}[q^{±1/2}]`-combination of `B_0, ..., B_n`.
pub fn dominates(a: &NormalizedSequence, b: &NormalizedSequence, max: usize) -> Result<bool> {
    Ok(change_of_basis(a, b, max)?.is_nonneg())
}
