//! Commutators of `T̄_N(α)` with `z` and with the arc `β'` from the disk
//! boundary to the left puncture, after specializing `v^M = 1`.
//!
//! Reversing the stacking order fixes crossingless diagrams and inverts
//! `q^{1/2}`, so `T̄_N(α) · X` is the coefficient-bar image of `X · T̄_N(α)`.
//! For `β'` the products are those of the annulus model with `τ = σ²`.

use serde::Serialize;

use super::annulus::{beta_mul_tbar, AnnulusElement};
use super::disk::{tbar_mul_z, z_mul_tbar_closed, DiskElement};
use crate::error::{Result, SkeinError};
use crate::laurent::CyclotomicContext;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransparencyReport {
    pub order: u64,
    pub modulus: u64,
    /// `z·T̄_N(α) - T̄_N(α)·z`, reduced.
    pub z_commutator: DiskElement,
    /// `β'·T̄_N(α) - T̄_N(α)·β'`, reduced.
    pub beta_commutator: AnnulusElement,
    pub z_commutes: bool,
    pub beta_commutes: bool,
    pub passed: bool,
}

/// `β'·T̄_N(α)` and `T̄_N(α)·β'`.
pub fn beta_prime_products(order: u64) -> Result<(AnnulusElement, AnnulusElement)> {
    let left = beta_mul_tbar(order as usize)?;
    let right = left.bar_coefficients();
    Ok((left, right))
}

pub fn transparency_report_with_modulus(order: u64, modulus: u64) -> Result<TransparencyReport> {
    if order == 0 {
        return Err(SkeinError::IndexOutOfRange {
            what: "order",
            value: 0,
            min: 1,
        });
    }
    let ctx = CyclotomicContext::new(modulus)?;
    let n = order as usize;
    let z_commutator = (&z_mul_tbar_closed(n) - &tbar_mul_z(n)).reduce(&ctx);
    let (left, right) = beta_prime_products(order)?;
    let beta_commutator = (&left - &right).reduce(&ctx);
    let z_commutes = z_commutator.is_zero();
    let beta_commutes = beta_commutator.is_zero();
    Ok(TransparencyReport {
        order,
        modulus,
        z_commutator,
        beta_commutator,
        z_commutes,
        beta_commutes,
        passed: z_commutes && beta_commutes,
    })
}

/// Reduction modulo `v^{4N} - 1`, i.e. `q^{2N} = 1`.
pub fn transparency_report(order: u64) -> Result<TransparencyReport> {
    let modulus = CyclotomicContext::for_q_squared_order(order.max(1))?.modulus();
    transparency_report_with_modulus(order, modulus)
}

pub fn transparency_check(order: u64) -> Result<bool> {
    Ok(transparency_report(order)?.passed)
}

/// `β'·T̄_N(α)` minus its mirror-bar image. Both products are fixed by
/// mirror-bar, so this vanishes identically.
pub fn beta_mirror_bar_difference(order: u64) -> Result<AnnulusElement> {
    let left = beta_mul_tbar(order as usize)?;
    Ok(&left - &left.mirror_bar())
}
