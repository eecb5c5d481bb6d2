//! Shared fixtures for the unit tests.

use crate::polyq::RationalPoly;
use crate::ratio::rat;
use crate::rootdata::{builtin_datum, standard_rep};
use crate::sheafmodel::{CombinatorialRhoSheaf, Summand, VarietyDescriptor};

pub fn poly(coeffs: &[(i64, i64)]) -> RationalPoly {
    RationalPoly::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
}

/// SO(7)/P3 example; `corrected` switches between the verbatim and the
/// binomial-recomputed Hilbert tables. Summand order: I_L, I_Z, I_p, O, O, O, O
/// against weights e1, e2, e3, 0, -e3, -e2, -e1.
pub fn so7_sheaf(corrected: bool) -> CombinatorialRhoSheaf {
    let datum = builtin_datum("so(7)").unwrap();
    let rep = standard_rep("so(7)").unwrap();
    let variety = VarietyDescriptor::new(3, rat(1, 1), rat(2, 1), "P3".into()).unwrap();
    let (p_o, p_ip, p_iz, p_il) = if corrected {
        (
            poly(&[(1, 1), (11, 6), (1, 1), (1, 6)]),
            poly(&[(0, 1), (11, 6), (1, 1), (1, 6)]),
            poly(&[(-1, 1), (11, 6), (1, 1), (1, 6)]),
            poly(&[(0, 1), (5, 6), (1, 1), (1, 6)]),
        )
    } else {
        (
            poly(&[(3, 6), (10, 6), (1, 1), (1, 6)]),
            poly(&[(-3, 6), (10, 6), (1, 1), (1, 6)]),
            poly(&[(-9, 6), (10, 6), (1, 1), (1, 6)]),
            poly(&[(-3, 6), (-1, 1), (1, 1), (1, 6)]),
        )
    };
    let hps = [p_il, p_iz, p_ip, p_o.clone(), p_o.clone(), p_o.clone(), p_o];
    let summands = hps
        .into_iter()
        .enumerate()
        .map(|(i, hp)| Summand { factor: 0, index: i, hp, rank: 1 })
        .collect();
    CombinatorialRhoSheaf::new(variety, datum, rep, summands).unwrap()
}

/// The noncentral GL(2)xGL(2) -> GL(4) example on P1: E of rank 2 degree 3
/// plus E' of rank 2 degree 1, each diagonalized into two rank-1 pieces.
pub fn glxgl_sheaf() -> CombinatorialRhoSheaf {
    let datum = builtin_datum("gl(2)xgl(2)").unwrap();
    let weights = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
    let rep = crate::rootdata::Representation::new(
        4,
        vec![weights
            .iter()
            .map(|w| crate::rootdata::WeightEntry {
                weight: crate::rootdata::cochar(w),
                mult: 1,
            })
            .collect()],
    )
    .unwrap();
    let variety = VarietyDescriptor::projective_space(1);
    // halves of deg-3 and deg-1 rank-2 bundles: hp = n + 1 + deg/2
    let hp_e = poly(&[(5, 2), (1, 1)]);
    let hp_e2 = poly(&[(3, 2), (1, 1)]);
    let summands = vec![
        Summand { factor: 0, index: 0, hp: hp_e.clone(), rank: 1 },
        Summand { factor: 0, index: 1, hp: hp_e, rank: 1 },
        Summand { factor: 0, index: 2, hp: hp_e2.clone(), rank: 1 },
        Summand { factor: 0, index: 3, hp: hp_e2, rank: 1 },
    ];
    CombinatorialRhoSheaf::new(variety, datum, rep, summands).unwrap()
}
