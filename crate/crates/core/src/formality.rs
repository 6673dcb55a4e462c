//! Equivariant-formality certificate for one symmetric pair.
//!
//! The T_K-fixed set of G/K is a disjoint union of r tori of dimension
//! rank g − rank k, where r counts compartments inside one k-Weyl chamber:
//! r = |W(k′)| / |W(k)|. The isotropy action is equivariantly formal exactly
//! when dim H*(M^T) = 2^(rank g − rank k) · r equals dim H*(M).

use serde::Serialize;

use crate::catalog::SymmetricPairEntry;
use crate::error::{Error, Result};
use crate::restricted::{build_restricted, RestrictedRootSystem};
use crate::rootsys::CartanType;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormalityReport {
    #[serde(flatten)]
    pub entry: SymmetricPairEntry,
    pub kprime_type: Vec<CartanType>,
    pub nonreduced: bool,
    /// |W(k′)|, the number of compartments in t_k.
    pub total_compartments: u64,
    pub r: u64,
    pub fixed_component_dim: u32,
    pub dim_fixed_set: u64,
    pub formal: bool,
}

/// Builds the restricted root system of the entry's involution.
pub fn restricted_system(entry: &SymmetricPairEntry) -> Result<RestrictedRootSystem> {
    build_restricted(&entry.involution()?)
}

fn divide(entry: &SymmetricPairEntry, total: u64) -> Result<u64> {
    if entry.k_weyl_order == 0 || !total.is_multiple_of(entry.k_weyl_order) {
        return Err(Error::CatalogInconsistency(format!(
            "{}: |W(k′)| = {total} is not divisible by |W(k)| = {}",
            entry.display_name(),
            entry.k_weyl_order
        )));
    }
    Ok(total / entry.k_weyl_order)
}

/// r = |W(k′)| / |W(k)|.
pub fn compartments_per_chamber(entry: &SymmetricPairEntry) -> Result<u64> {
    let rrs = restricted_system(entry)?;
    divide(entry, rrs.total_compartments())
}

/// 2^(rank g − rank k) · r.
pub fn fixed_set_dimension(entry: &SymmetricPairEntry, r: u64) -> u64 {
    (1u64 << (entry.rank_g - entry.rank_k)) * r
}

pub fn target_dimension(entry: &SymmetricPairEntry) -> Result<u64> {
    entry.evaluate_dim_formula()
}

/// Assembles the report. Fails only when r is not an integer or the fixed
/// set would have more cohomology than M; a plain inequality is reported
/// with `formal = false`.
pub fn check_formality(entry: &SymmetricPairEntry) -> Result<FormalityReport> {
    let rrs = restricted_system(entry)?;
    let total_compartments = rrs.total_compartments();
    let r = divide(entry, total_compartments)?;
    let dim_fixed_set = fixed_set_dimension(entry, r);
    let dim_m = target_dimension(entry)?;
    if dim_fixed_set > dim_m {
        return Err(Error::HsiangViolation {
            fixed: dim_fixed_set,
            total: dim_m,
        });
    }
    let mut entry = entry.clone();
    entry.dim_m = dim_m;
    Ok(FormalityReport {
        fixed_component_dim: entry.rank_g - entry.rank_k,
        entry,
        kprime_type: rrs.kprime_type().to_vec(),
        nonreduced: rrs.is_nonreduced(),
        total_compartments,
        r,
        dim_fixed_set,
        formal: dim_fixed_set == dim_m,
    })
}

/// Like [`check_formality`], but a non-formal verdict is an error.
pub fn certify(entry: &SymmetricPairEntry) -> Result<FormalityReport> {
    let report = check_formality(entry)?;
    if !report.formal {
        return Err(Error::NotFormal {
            fixed: report.dim_fixed_set,
            total: report.entry.dim_m,
        });
    }
    Ok(report)
}
