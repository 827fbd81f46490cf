//! The classical Chebyshev identities, checked by full expansion of both
//! sides.

use std::fmt;
use std::str::FromStr;

use super::poly::PolyX;
use super::sequences::{cheb_s_ref, cheb_t_ref, cheb_tbar, eps, s_diff};
use crate::error::{Result, SkeinError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityTag {
    /// `T_m T_n = T_{m+n} + T_{|m-n|}`
    TProduct,
    /// `T_{2n}(x) = T_n(x^2 - 2)`
    TDoubling,
    /// `(S_n - S_{n-1})(S_m - S_{m-1})(x + 2) = T_{n+m+1} + T_{|n-m|}`
    SDiffProduct,
    /// `T_n (S_m - S_{m-1}) = (S_{n+m} - S_{n+m-1}) + (S_ε - S_{ε-1})`
    TTimesSDiff,
    /// `T̄_{2n+1}(x) = (S_n - S_{n-1})(x^2 - 2) · x`
    TbarOdd,
    /// `T̄_n = (S_n - S_{n-1}) + (S_{n-1} - S_{n-2})`, and `T̄_0 = S_0 - S_{-1}`
    TbarAsSDiff,
    /// `S_{2n} = Σ_{i=0}^{n} T̄_{2n-2i}`
    SEven,
    /// `S_{2n+1} = Σ_{i=0}^{n} T̄_{2n-2i+1}`
    SOdd,
}

impl IdentityTag {
    pub const ALL: [IdentityTag; 8] = [
        IdentityTag::TProduct,
        IdentityTag::TDoubling,
        IdentityTag::SDiffProduct,
        IdentityTag::TTimesSDiff,
        IdentityTag::TbarOdd,
        IdentityTag::TbarAsSDiff,
        IdentityTag::SEven,
        IdentityTag::SOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityTag::TProduct => "t_product",
            IdentityTag::TDoubling => "t_doubling",
            IdentityTag::SDiffProduct => "sdiff_product",
            IdentityTag::TTimesSDiff => "t_times_sdiff",
            IdentityTag::TbarOdd => "tbar_odd",
            IdentityTag::TbarAsSDiff => "tbar_as_sdiff",
            IdentityTag::SEven => "s_even",
            IdentityTag::SOdd => "s_odd",
        }
    }

    /// Whether the identity depends on the second index `m`.
    pub fn uses_m(self) -> bool {
        matches!(self, IdentityTag::TProduct | IdentityTag::SDiffProduct | IdentityTag::TTimesSDiff)
    }
}

impl fmt::Display for IdentityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityTag {
    type Err = SkeinError;

    fn from_str(s: &str) -> Result<Self> {
        IdentityTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| SkeinError::UnknownName {
                kind: "identity tag",
                value: s.to_string(),
            })
    }
}

fn check_index(what: &'static str, value: i64) -> Result<usize> {
    if value < 0 {
        Err(SkeinError::IndexOutOfRange { what, value, min: 0 })
    } else {
        Ok(value as usize)
    }
}

fn t(n: usize) -> std::sync::Arc<PolyX> {
    cheb_t_ref(n)
}

fn s(n: i64) -> std::sync::Arc<PolyX> {
    cheb_s_ref(n).expect("internal S index below -1")
}

/// Both sides of an identity, fully expanded. `m` is ignored by the
/// single-index identities.
pub fn identity_sides(tag: IdentityTag, n: i64, m: i64) -> Result<(PolyX, PolyX)> {
    let n = check_index("n", n)?;
    let m = if tag.uses_m() { check_index("m", m)? } else { 0 };
    let p_alpha = PolyX::from_ints(&[-2, 0, 1]);
    let sides = match tag {
        IdentityTag::TProduct => (&*t(m) * &*t(n), &*t(m + n) + &*t(m.abs_diff(n))),
        IdentityTag::TDoubling => ((*t(2 * n)).clone(), t(n).compose(&p_alpha)),
        IdentityTag::SDiffProduct => {
            let lhs = &(&s_diff(n) * &s_diff(m)) * &PolyX::from_ints(&[2, 1]);
            (lhs, &*t(n + m + 1) + &*t(n.abs_diff(m)))
        }
        IdentityTag::TTimesSDiff => {
            let e = eps(n, m);
            (&*t(n) * &s_diff(m), &s_diff(n + m) + &s_diff(e))
        }
        IdentityTag::TbarOdd => (cheb_tbar(2 * n + 1), s_diff(n).compose(&p_alpha).mul_x()),
        IdentityTag::TbarAsSDiff => {
            let rhs = if n == 0 {
                &*s(0) - &*s(-1)
            } else {
                let n = n as i64;
                &(&*s(n) - &*s(n - 1)) + &(&*s(n - 1) - &*s(n - 2))
            };
            (cheb_tbar(n), rhs)
        }
        IdentityTag::SEven => {
            let rhs = (0..=n).fold(PolyX::zero(), |acc, i| &acc + &cheb_tbar(2 * n - 2 * i));
            ((*s(2 * n as i64)).clone(), rhs)
        }
        IdentityTag::SOdd => {
            let rhs = (0..=n).fold(PolyX::zero(), |acc, i| &acc + &cheb_tbar(2 * n - 2 * i + 1));
            ((*s(2 * n as i64 + 1)).clone(), rhs)
        }
    };
    Ok(sides)
}

pub fn verify_identity(tag: IdentityTag, n: i64, m: i64) -> Result<bool> {
    let (lhs, rhs) = identity_sides(tag, n, m)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_examples() {
        assert!(verify_identity(IdentityTag::TProduct, 2, 3).unwrap());
        assert!(verify_identity(IdentityTag::TbarOdd, 1, 0).unwrap());
        let (lhs, rhs) = identity_sides(IdentityTag::TbarOdd, 1, 0).unwrap();
        assert_eq!(lhs, PolyX::from_ints(&[0, -3, 0, 1]));
        assert_eq!(rhs, lhs);
        assert!(verify_identity(IdentityTag::TbarAsSDiff, 5, 0).unwrap());
    }

    #[test]
    fn all_tags_small_range() {
        for tag in IdentityTag::ALL {
            for n in 0..=12 {
                for m in 0..=12 {
                    assert!(verify_identity(tag, n, m).unwrap(), "{tag} n={n} m={m}");
                    if !tag.uses_m() {
                        break;
                    }
                }
            }
        }
    }

    #[test]
    fn negative_indices_rejected() {
        assert!(matches!(
            verify_identity(IdentityTag::TProduct, -1, 0),
            Err(SkeinError::IndexOutOfRange { what: "n", .. })
        ));
        assert!(matches!(
            verify_identity(IdentityTag::SDiffProduct, 0, -4),
            Err(SkeinError::IndexOutOfRange { what: "m", value: -4, .. })
        ));
        // single-index identities ignore m entirely
        assert!(verify_identity(IdentityTag::TDoubling, 3, -4).unwrap());
    }

    #[test]
    fn tags_parse() {
        for tag in IdentityTag::ALL {
            assert_eq!(tag.name().parse::<IdentityTag>().unwrap(), tag);
        }
        assert!("t_tripling".parse::<IdentityTag>().is_err());
    }

    #[test]
    fn a_wrong_identity_is_detected() {
        // T_2 T_2 = T_4 + T_0; dropping T_0 must not verify
        let lhs = &*t(2) * &*t(2);
        assert_ne!(lhs, (*t(4)).clone());
    }
}
