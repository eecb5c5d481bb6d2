//! Finding the nu-maximizing cocharacter ray: the closed-form critical-point
//! solve, an exhaustive lattice oracle, and the slope-canonical ray.

use crate::invariant::{compare_nu, ell_functionals, nu, nu_with_totals, NuValue};
use crate::linalg::{self, LinalgError};
use crate::ratio::Rat;
use crate::rootdata::{
    self, gram_matrix, is_primitive, primitive_scale, Cocharacter, RootDataError,
};
use crate::sheafmodel::{is_central, psi_functional, totals, CombinatorialRhoSheaf, SheafError};
use num::bigint::BigInt;
use num::Zero;
use std::cmp::Ordering;

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum OptimizerError {
    #[error("representation inner product is degenerate")]
    DegenerateForm,
    #[error("search space of {candidates} candidates exceeds the cap {cap}")]
    SearchSpaceTooLarge { candidates: u128, cap: u128 },
    #[error("representation is not central")]
    NotCentral,
    #[error(transparent)]
    Sheaf(#[from] SheafError),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingCochar {
    pub lambda: Cocharacter,
    pub leading_degree: usize,
    pub value: NuValue,
}

/// The critical-point solve: for the top nonzero functional ell_{e*}, the ray
/// maximizing ell_{e*}(x) / sqrt(x .chi x) is G^{-1} ell_{e*} by Cauchy-Schwarz
/// equality. In the toral model there is no parabolic cone constraint (the
/// trivial torus reduction admits every cocharacter), so the unconstrained
/// critical point is the global maximizer of the leading coefficient, and
/// uniqueness of the ray settles all lower-order ties.
pub fn leading_cochar(
    sheaf: &CombinatorialRhoSheaf,
) -> Result<Option<LeadingCochar>, OptimizerError> {
    let ells = ell_functionals(sheaf)?;
    let top = ells
        .iter()
        .find(|(_, ell)| ell.iter().any(|x| !x.is_zero()));
    let Some((e_star, ell)) = top else {
        return Ok(None);
    };
    let g = gram_matrix(&sheaf.rep);
    let x = linalg::solve_square(&g, ell).map_err(|e| match e {
        LinalgError::Singular => OptimizerError::DegenerateForm,
        other => OptimizerError::Sheaf(SheafError::Malformed(other.to_string())),
    })?;
    let lambda = primitive_scale(&x)?;
    let value = nu(sheaf, &lambda)?;
    debug_assert!(linalg::dot(ell, &rootdata::to_rat_vec(&lambda)) > Rat::zero());
    Ok(Some(LeadingCochar { lambda, leading_degree: *e_star, value }))
}

pub const DEFAULT_CANDIDATE_CAP: u128 = 5_000_000;

pub fn brute_force_max(
    sheaf: &CombinatorialRhoSheaf,
    bound: u32,
) -> Result<Option<(Cocharacter, NuValue)>, OptimizerError> {
    brute_force_max_capped(sheaf, bound, DEFAULT_CANDIDATE_CAP)
}

/// Enumerates every integer cocharacter with entries in [-B, B] and returns
/// the compare_nu-maximal nondegenerate one with positive nu; ties are broken
/// toward primitive vectors, then lexicographically.
pub fn brute_force_max_capped(
    sheaf: &CombinatorialRhoSheaf,
    bound: u32,
    cap: u128,
) -> Result<Option<(Cocharacter, NuValue)>, OptimizerError> {
    assert!(bound >= 1, "bound must be positive");
    let n = sheaf.rep.torus_rank;
    let width = 2u128 * bound as u128 + 1;
    let candidates = width.checked_pow(n as u32).unwrap_or(u128::MAX);
    if candidates > cap {
        return Err(OptimizerError::SearchSpaceTooLarge { candidates, cap });
    }
    let data = totals(sheaf)?;
    let mut best: Option<(Cocharacter, NuValue)> = None;
    let mut coords = vec![-(bound as i64); n];
    loop {
        let lambda: Cocharacter = coords.iter().map(|&c| BigInt::from(c)).collect();
        let value = nu_with_totals(sheaf, &data, &lambda);
        if !value.degenerate() {
            let replace = match &best {
                None => true,
                Some((b_lam, b_val)) => match compare_nu(&value, b_val) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    // ascending lexicographic enumeration: the incumbent is
                    // already lex-smallest in its class, only primitivity can
                    // promote a later candidate
                    Ordering::Equal => is_primitive(&lambda) && !is_primitive(b_lam),
                },
            };
            if replace {
                best = Some((lambda, value));
            }
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == n {
                let positive = best
                    .as_ref()
                    .map_or(false, |(_, v)| compare_nu_positive(v));
                return Ok(if positive { best } else { None });
            }
            if coords[k] < bound as i64 {
                coords[k] += 1;
                break;
            }
            coords[k] = -(bound as i64);
            k += 1;
        }
    }
}

fn compare_nu_positive(v: &NuValue) -> bool {
    use crate::ratio::sign;
    !v.q.is_zero() && v.l.leading().map_or(false, |c| sign(c) > 0)
}

/// The ray of pi_Z(psi): the canonical slope destabilizing direction for
/// central representations, before the filtration sign convention.
pub fn slope_canonical(
    sheaf: &CombinatorialRhoSheaf,
) -> Result<Option<Cocharacter>, OptimizerError> {
    if !is_central(&sheaf.datum, &sheaf.rep) {
        return Err(OptimizerError::NotCentral);
    }
    let psi = psi_functional(sheaf)?;
    let proj = rootdata::pi_z(&sheaf.datum, &sheaf.rep, &psi).map_err(|e| match e {
        RootDataError::DegenerateForm => OptimizerError::DegenerateForm,
        other => OptimizerError::RootData(other),
    })?;
    if proj.iter().all(|x| x.is_zero()) {
        return Ok(None);
    }
    Ok(Some(primitive_scale(&proj)?))
}
