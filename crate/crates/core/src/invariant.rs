//! The polynomial numerical invariant nu of a toral weighted filtration, its
//! per-degree linear functionals, and the semistability verdict.

use crate::polyq::{poly_cmp, RationalPoly};
use crate::ratio::{fmt_rat, sign, Rat};
use crate::rootdata::{pair_ii, Cocharacter};
use crate::sheafmodel::{totals, CombinatorialRhoSheaf, SheafError, TotalData};
use num::bigint::BigInt;
use num::Zero;
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// The Z-filtration induced by a cocharacter: summand i sits in graded degree
/// m_i = -<lambda, chi_i>.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedFiltration {
    pub lambda: Cocharacter,
    pub degrees: Vec<BigInt>,
    pub graded: BTreeMap<BigInt, Vec<usize>>,
}

pub fn filtration_from_cochar(
    sheaf: &CombinatorialRhoSheaf,
    lambda: &Cocharacter,
) -> WeightedFiltration {
    let degrees: Vec<BigInt> = (0..sheaf.summands.len())
        .map(|i| -pair_ii(sheaf.weight_of(i), lambda))
        .collect();
    let mut graded: BTreeMap<BigInt, Vec<usize>> = BTreeMap::new();
    for (i, m) in degrees.iter().enumerate() {
        graded.entry(m.clone()).or_default().push(i);
    }
    WeightedFiltration { lambda: lambda.clone(), degrees, graded }
}

/// nu = sqrt(A_d) * L / sqrt(Q), held exactly as the triple (L, Q, A_d).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuValue {
    pub l: RationalPoly,
    pub q: Rat,
    pub a_d: Rat,
}

impl NuValue {
    pub fn degenerate(&self) -> bool {
        self.q.is_zero()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "L": self.l.to_strings(),
            "Q": fmt_rat(&self.q),
            "A_d": fmt_rat(&self.a_d),
        })
    }
}

/// L(n) = sum over blocks j and summands i in j of
/// m_i * rk_i * (pbar_i - pbar_{F^j}); Q = sum m_i^2 rk_i.
pub fn nu(sheaf: &CombinatorialRhoSheaf, lambda: &Cocharacter) -> Result<NuValue, SheafError> {
    let data = totals(sheaf)?;
    Ok(nu_with_totals(sheaf, &data, lambda))
}

/// Like [`nu`] with the per-block reduced polynomials precomputed; lets
/// enumeration loops hoist the reductions out.
pub fn nu_with_totals(
    sheaf: &CombinatorialRhoSheaf,
    data: &TotalData,
    lambda: &Cocharacter,
) -> NuValue {
    let filt = filtration_from_cochar(sheaf, lambda);
    let mut l = RationalPoly::zero();
    let mut q = Rat::zero();
    for (j, block) in sheaf.blocks.iter().enumerate() {
        for &i in block {
            let m = Rat::from(filt.degrees[i].clone());
            if m.is_zero() {
                continue;
            }
            let rk = Rat::from(BigInt::from(sheaf.summands[i].rank));
            let diff = data.summand_reduced[i].sub(&data.block_reduced[j]);
            l = l.add(&diff.scale(&(&m * &rk)));
            q += &m * &m * &rk;
        }
    }
    NuValue { l, q, a_d: sheaf.variety.a_d.clone() }
}

/// The covectors ell_e with L(lambda) = sum_e ell_e(lambda) n^e, listed for
/// e = d-1 down to 0.
pub fn ell_functionals(
    sheaf: &CombinatorialRhoSheaf,
) -> Result<Vec<(usize, Vec<Rat>)>, SheafError> {
    let n = sheaf.rep.torus_rank;
    let d = sheaf.variety.dim;
    let data = totals(sheaf)?;
    let mut ells = vec![vec![Rat::zero(); n]; d];
    for (j, block) in sheaf.blocks.iter().enumerate() {
        for &i in block {
            let rk = Rat::from(BigInt::from(sheaf.summands[i].rank));
            let diff = data.summand_reduced[i].sub(&data.block_reduced[j]);
            let chi = sheaf.weight_of(i);
            for e in 0..d {
                let coeff = diff.coeff(e);
                if coeff.is_zero() {
                    continue;
                }
                let scaled = coeff * &rk;
                for s in 0..n {
                    if !chi[s].is_zero() {
                        // m_i = -<lambda, chi_i> contributes with a minus sign
                        ells[e][s] -= Rat::from(chi[s].clone()) * &scaled;
                    }
                }
            }
        }
    }
    Ok((0..d).rev().map(|e| (e, ells[e].clone())).collect())
}

/// Semistable iff every ell_e vanishes: in the toral model both lambda and
/// -lambda are admissible reductions, so sup nu <= 0 forces L = 0 throughout.
pub fn is_semistable(sheaf: &CombinatorialRhoSheaf) -> Result<bool, SheafError> {
    Ok(ell_functionals(sheaf)?
        .iter()
        .all(|(_, ell)| ell.iter().all(|x| x.is_zero())))
}

/// Exact comparison of sqrt(A_d) L / sqrt(Q) values in the asymptotic order.
pub fn compare_nu(a: &NuValue, b: &NuValue) -> Ordering {
    let sign_of = |v: &NuValue| -> i32 {
        if v.q.is_zero() {
            return 0;
        }
        v.l.leading().map_or(0, sign)
    };
    let sa = sign_of(a);
    let sb = sign_of(b);
    if sa != sb {
        return sa.cmp(&sb);
    }
    if sa == 0 {
        return Ordering::Equal;
    }
    // same nonzero sign: compare A_a Q_b L_a^2 against A_b Q_a L_b^2 and
    // orient by the sign (squaring reverses order on the negative side)
    let lhs = a.l.mul(&a.l).scale(&(&a.a_d * &b.q));
    let rhs = b.l.mul(&b.l).scale(&(&b.a_d * &a.q));
    let cmp = poly_cmp(&lhs, &rhs);
    if sa > 0 {
        cmp
    } else {
        cmp.reverse()
    }
}
