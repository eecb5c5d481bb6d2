//! The recursive Gieseker-Harder-Narasimhan construction: iterate the leading
//! cocharacter through Levi and block refinements and assemble the
//! lexicographic Z^q filtration, plus the classical-HN comparison oracle for
//! the torsion-free (GL-identity) specialization.

use crate::linalg;
use crate::optimizer::{leading_cochar, OptimizerError};
use crate::polyq::{poly_cmp, slope, RationalPoly};
use crate::ratio::Rat;
use crate::rootdata::{
    all_roots, pair_ri, primitive_scale, to_rat_vec, Cocharacter, GroupDatum, RootDataError,
};
use crate::sheafmodel::{totals, CombinatorialRhoSheaf, SheafError};
use num::bigint::BigInt;
use num::{Signed, Zero};
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum GhnError {
    #[error("cocharacter is not dominant in the current Levi: retained root #{root} pairs negatively")]
    NotDominant { root: usize },
    #[error("refinement step produced no new blocks (internal invariant violated)")]
    InternalNonRefinement,
    #[error("input is not a single GL factor with the identity-style diagonal representation")]
    WrongGroupShape,
    #[error("input is semistable; no leading-term weights exist")]
    SemistableInput,
    #[error(transparent)]
    Sheaf(#[from] SheafError),
    #[error(transparent)]
    Optimizer(#[from] OptimizerError),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// Levi sub-datum state for the recursion: the full root system of the joint
/// centralizer of the absorbed cocharacters and the basis of its center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviState {
    /// Indices of the original simple roots still orthogonal to every
    /// absorbed cocharacter (the simple system when those are dominant).
    pub retained: Vec<usize>,
    /// Every root of the current centralizer, both signs. Non-simple roots
    /// matter: the centralizer of a non-dominant maximizer can keep a root
    /// whose simple summands are both dropped.
    pub roots: Vec<Vec<Rat>>,
    /// Basis of the centralizer's central cocharacter subspace (the common
    /// kernel of its roots).
    pub center: Vec<Vec<Rat>>,
}

fn center_of(roots: &[Vec<Rat>], n: usize) -> Vec<Vec<Rat>> {
    if roots.is_empty() {
        return (0..n)
            .map(|i| {
                let mut e = linalg::zeros(n);
                e[i] = Rat::from(BigInt::from(1));
                e
            })
            .collect();
    }
    linalg::nullspace(roots)
}

impl LeviState {
    pub fn full(datum: &GroupDatum) -> Result<Self, GhnError> {
        let roots = all_roots(datum)?;
        let center = center_of(&roots, datum.torus_rank);
        Ok(LeviState {
            retained: (0..datum.simple_roots.len()).collect(),
            roots,
            center,
        })
    }

    /// Intersects the centralizer with that of lambda: keeps exactly the
    /// roots orthogonal to lambda and recomputes the center as their common
    /// kernel.
    pub fn absorb(&mut self, datum: &GroupDatum, lambda: &Cocharacter) -> Result<(), GhnError> {
        let lam = to_rat_vec(lambda);
        self.roots.retain(|a| linalg::dot(a, &lam).is_zero());
        self.retained
            .retain(|&j| linalg::dot(&datum.simple_roots[j], &lam).is_zero());
        self.center = center_of(&self.roots, datum.torus_rank);
        Ok(())
    }

    /// True iff lambda pairs non-negatively with every retained simple root.
    pub fn is_dominant(&self, datum: &GroupDatum, lambda: &Cocharacter) -> Result<(), GhnError> {
        let lam = to_rat_vec(lambda);
        for &j in &self.retained {
            if linalg::dot(&datum.simple_roots[j], &lam).is_negative() {
                return Err(GhnError::NotDominant { root: j });
            }
        }
        Ok(())
    }
}

/// Canonical form of a partition: inner indices ascending, blocks ordered by
/// their smallest element.
fn canonical(mut blocks: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort_by_key(|b| b.first().copied().unwrap_or(usize::MAX));
    blocks
}

/// Splits each block by the joint pairings of the summand weights with the
/// given center vectors (the restriction of the weights to Z_lambda).
fn split_by_center(sheaf: &CombinatorialRhoSheaf, center: &[Vec<Rat>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for block in &sheaf.blocks {
        let mut groups: Vec<(Vec<Rat>, Vec<usize>)> = Vec::new();
        for &i in block {
            let chi = sheaf.weight_of(i);
            let key: Vec<Rat> = center.iter().map(|v| pair_ri(v, chi)).collect();
            match groups.iter_mut().find(|(k, _)| *k == key) {
                Some((_, members)) => members.push(i),
                None => groups.push((key, vec![i])),
            }
        }
        out.extend(groups.into_iter().map(|(_, members)| members));
    }
    canonical(out)
}

/// Refinement of the current blocks by a dominant cocharacter: summands stay
/// together iff every vector of the Levi center extended by lambda's new
/// center directions pairs equally with their weights.
pub fn refine_blocks(
    sheaf: &CombinatorialRhoSheaf,
    levi: &LeviState,
    lambda: &Cocharacter,
) -> Result<Vec<Vec<usize>>, GhnError> {
    levi.is_dominant(&sheaf.datum, lambda)?;
    let mut next = levi.clone();
    next.absorb(&sheaf.datum, lambda)?;
    Ok(split_by_center(sheaf, &next.center))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub lambda: Cocharacter,
    pub leading_degree: usize,
    pub blocks_before: Vec<Vec<usize>>,
    pub blocks_after: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexFiltration {
    pub steps: Vec<Step>,
    pub q: usize,
    /// Per-summand vector in Z^q; entry k is -<lambda_k, chi_i>.
    pub summand_weights: Vec<Vec<BigInt>>,
    /// Distinct weight vectors with their summands, descending lexicographic.
    pub jumping_points: Vec<(Vec<BigInt>, Vec<usize>)>,
}

impl LexFiltration {
    pub fn to_json(&self) -> serde_json::Value {
        let steps: Vec<_> = self
            .steps
            .iter()
            .map(|s| {
                serde_json::json!({
                    "lambda": s.lambda.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "leading_degree": s.leading_degree,
                    "blocks_after": s.blocks_after,
                })
            })
            .collect();
        serde_json::json!({
            "q": self.q,
            "steps": steps,
            "summand_weights": self
                .summand_weights
                .iter()
                .map(|w| w.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "jumping_points": self
                .jumping_points
                .iter()
                .map(|(w, s)| {
                    serde_json::json!({
                        "weight": w.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        "summands": s,
                    })
                })
                .collect::<Vec<_>>(),
        })
    }
}

/// The full multi-weighted recursion: repeatedly take the leading cocharacter
/// of the current block configuration, refine, and shrink the root subsystem,
/// until the configuration is semistable.
pub fn ghn_filtration(sheaf: &CombinatorialRhoSheaf) -> Result<LexFiltration, GhnError> {
    let mut current = sheaf.with_blocks(canonical(sheaf.blocks.clone()));
    let mut levi = LeviState::full(&sheaf.datum)?;
    let mut steps: Vec<Step> = Vec::new();
    let mut lambdas: Vec<Cocharacter> = Vec::new();
    let mut prev_degree: Option<usize> = None;
    while let Some(lead) = leading_cochar(&current)? {
        if let Some(pe) = prev_degree {
            if lead.leading_degree > pe {
                log::warn!(
                    "leading degree increased from {pe} to {} at step {}",
                    lead.leading_degree,
                    steps.len() + 1
                );
            }
        }
        prev_degree = Some(lead.leading_degree);
        levi.absorb(&sheaf.datum, &lead.lambda)?;
        let after = split_by_center(&current, &levi.center);
        if after.len() <= current.blocks.len() {
            return Err(GhnError::InternalNonRefinement);
        }
        steps.push(Step {
            lambda: lead.lambda.clone(),
            leading_degree: lead.leading_degree,
            blocks_before: current.blocks.clone(),
            blocks_after: after.clone(),
        });
        lambdas.push(lead.lambda);
        current = current.with_blocks(after);
    }
    let q = steps.len();
    let summand_weights: Vec<Vec<BigInt>> = (0..sheaf.summands.len())
        .map(|i| {
            lambdas
                .iter()
                .map(|lam| -crate::rootdata::pair_ii(sheaf.weight_of(i), lam))
                .collect()
        })
        .collect();
    let mut grouped: BTreeMap<Vec<BigInt>, Vec<usize>> = BTreeMap::new();
    for (i, w) in summand_weights.iter().enumerate() {
        grouped.entry(w.clone()).or_default().push(i);
    }
    // BTreeMap on Vec<BigInt> is ascending lexicographic; reverse it
    let jumping_points: Vec<(Vec<BigInt>, Vec<usize>)> = grouped.into_iter().rev().collect();
    Ok(LexFiltration { steps, q, summand_weights, jumping_points })
}

/// Partial unions of the jumping-point summand sets in descending
/// lexicographic order; the last set contains every summand.
pub fn unweighted_chain(lex: &LexFiltration) -> Vec<Vec<usize>> {
    let mut acc: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    for (_, summands) in &lex.jumping_points {
        acc.extend(summands.iter().copied());
        acc.sort_unstable();
        out.push(acc.clone());
    }
    out
}

fn check_gl_identity_shape(sheaf: &CombinatorialRhoSheaf) -> Result<(), GhnError> {
    let n = sheaf.rep.torus_rank;
    if sheaf.rep.factors.len() != 1 || sheaf.rep.factors[0].len() != n {
        return Err(GhnError::WrongGroupShape);
    }
    // The datum itself must be a single GL(n): a full A-chain of roots and a
    // one-dimensional center.
    if sheaf.datum.simple_roots.len() + 1 != n || sheaf.datum.central_basis.len() != 1 {
        return Err(GhnError::WrongGroupShape);
    }
    for (i, entry) in sheaf.rep.factors[0].iter().enumerate() {
        for (s, x) in entry.weight.iter().enumerate() {
            let expect = if s == i { BigInt::from(1) } else { BigInt::zero() };
            if *x != expect {
                return Err(GhnError::WrongGroupShape);
            }
        }
    }
    if sheaf.summands.len() != n {
        return Err(GhnError::WrongGroupShape);
    }
    Ok(())
}

/// Classical Gieseker-HN chain for the GL-identity shape: group summands by
/// equal reduced Hilbert polynomial, sort descending, take partial unions.
/// Each summand is treated as a semistable atom.
pub fn classical_hn_oracle(sheaf: &CombinatorialRhoSheaf) -> Result<Vec<Vec<usize>>, GhnError> {
    check_gl_identity_shape(sheaf)?;
    let data = totals(sheaf)?;
    let mut groups: Vec<(RationalPoly, Vec<usize>)> = Vec::new();
    for (i, red) in data.summand_reduced.iter().enumerate() {
        match groups.iter_mut().find(|(p, _)| p == red) {
            Some((_, members)) => members.push(i),
            None => groups.push((red.clone(), vec![i])),
        }
    }
    groups.sort_by(|(a, _), (b, _)| poly_cmp(b, a));
    let mut acc: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    for (_, members) in groups {
        acc.extend(members);
        acc.sort_unstable();
        out.push(acc.clone());
    }
    Ok(out)
}

/// Jump weights of the leading-term filtration in the GL-identity shape: for
/// the largest e with unequal slopes, the integer vector proportional to
/// slope_e(summand) - slope_e(total).
pub fn leading_term_weights(sheaf: &CombinatorialRhoSheaf) -> Result<Vec<BigInt>, GhnError> {
    check_gl_identity_shape(sheaf)?;
    let d = sheaf.variety.dim;
    let total = sheaf.block_total(&(0..sheaf.summands.len()).collect::<Vec<_>>());
    for e in (0..d).rev() {
        let mu_f = slope(&total, e).map_err(SheafError::Poly)?;
        let devs: Vec<Rat> = sheaf
            .summands
            .iter()
            .map(|s| Ok::<_, GhnError>(slope(&s.hp, e).map_err(SheafError::Poly)? - &mu_f))
            .collect::<Result<_, _>>()?;
        if devs.iter().any(|x| !x.is_zero()) {
            return Ok(primitive_scale(&devs)?);
        }
    }
    Err(GhnError::SemistableInput)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariant::{filtration_from_cochar, is_semistable};
    use crate::rootdata::cochar;
    use crate::sheafmodel::{CombinatorialRhoSheaf as Sheaf, Summand, VarietyDescriptor};
    use crate::testutil::{glxgl_sheaf, poly, so7_sheaf};

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn refine_so7_first_and_second_step() {
        let sheaf = so7_sheaf(false);
        let levi = LeviState::full(&sheaf.datum).unwrap();
        let blocks = refine_blocks(&sheaf, &levi, &cochar(&[1, 0, 0])).unwrap();
        assert_eq!(blocks, vec![vec![0], vec![1, 2, 3, 4, 5], vec![6]]);

        let mut levi2 = levi.clone();
        levi2.absorb(&sheaf.datum, &cochar(&[1, 0, 0])).unwrap();
        assert_eq!(levi2.retained, vec![1, 2]);
        let refined = sheaf.with_blocks(blocks);
        let blocks2 = refine_blocks(&refined, &levi2, &cochar(&[0, 2, 1])).unwrap();
        assert_eq!(
            blocks2,
            vec![vec![0], vec![1], vec![2], vec![3], vec![4], vec![5], vec![6]]
        );
        // a cocharacter pairing identically on a block changes nothing
        let same = refine_blocks(&sheaf, &levi, &cochar(&[0, 0, 0])).unwrap();
        assert_eq!(same, vec![vec![0, 1, 2, 3, 4, 5, 6]]);
        // (0,2,1) is not dominant for the full root system
        assert!(matches!(
            refine_blocks(&sheaf, &levi, &cochar(&[0, 2, 1])),
            Err(GhnError::NotDominant { root: 0 })
        ));
    }

    #[test]
    fn ghn_so7_both_fixtures() {
        for corrected in [false, true] {
            let sheaf = so7_sheaf(corrected);
            let lex = ghn_filtration(&sheaf).unwrap();
            assert_eq!(lex.q, 2);
            assert_eq!(lex.steps[0].lambda, cochar(&[1, 0, 0]));
            assert_eq!(lex.steps[0].leading_degree, 1);
            assert_eq!(lex.steps[1].lambda, cochar(&[0, 2, 1]));
            assert_eq!(lex.steps[1].leading_degree, 0);
            let expect: Vec<(Vec<BigInt>, Vec<usize>)> = vec![
                (big(&[1, 0]), vec![6]),
                (big(&[0, 2]), vec![5]),
                (big(&[0, 1]), vec![4]),
                (big(&[0, 0]), vec![3]),
                (big(&[0, -1]), vec![2]),
                (big(&[0, -2]), vec![1]),
                (big(&[-1, 0]), vec![0]),
            ];
            assert_eq!(lex.jumping_points, expect);
            assert_eq!(
                lex.summand_weights,
                vec![
                    big(&[-1, 0]),
                    big(&[0, -2]),
                    big(&[0, -1]),
                    big(&[0, 0]),
                    big(&[0, 1]),
                    big(&[0, 2]),
                    big(&[1, 0]),
                ]
            );
            // final configuration is semistable
            let last = lex.steps.last().unwrap();
            assert!(is_semistable(&sheaf.with_blocks(last.blocks_after.clone())).unwrap());
            // strict refinement every step
            for s in &lex.steps {
                assert!(s.blocks_after.len() > s.blocks_before.len());
            }
            let chain = unweighted_chain(&lex);
            assert_eq!(chain.len(), 7);
            assert_eq!(chain[0], vec![6]);
            assert_eq!(chain[1], vec![5, 6]);
            assert_eq!(chain[6], vec![0, 1, 2, 3, 4, 5, 6]);
        }
    }

    #[test]
    fn ghn_semistable_is_trivial() {
        let mut flat = so7_sheaf(false);
        let hp = flat.summands[3].hp.clone();
        for s in &mut flat.summands {
            s.hp = hp.clone();
        }
        let lex = ghn_filtration(&flat).unwrap();
        assert_eq!(lex.q, 0);
        assert!(lex.steps.is_empty());
        assert_eq!(unweighted_chain(&lex), vec![vec![0, 1, 2, 3, 4, 5, 6]]);
    }

    #[test]
    fn ghn_glxgl() {
        let sheaf = glxgl_sheaf();
        let lex = ghn_filtration(&sheaf).unwrap();
        assert_eq!(lex.q, 1);
        assert_eq!(lex.steps[0].lambda, cochar(&[-1, -1, 1, 1]));
        assert_eq!(
            lex.jumping_points,
            vec![(big(&[1]), vec![0, 1]), (big(&[-1]), vec![2, 3])]
        );
        assert_eq!(lex.steps[0].blocks_after, vec![vec![0, 1], vec![2, 3]]);
    }

    fn gl_identity_sheaf(hps: &[RationalPoly]) -> Sheaf {
        let n = hps.len();
        let datum = crate::rootdata::builtin_datum(&format!("gl({n})")).unwrap();
        let rep = crate::rootdata::standard_rep(&format!("gl({n})")).unwrap();
        let variety = VarietyDescriptor::projective_space(1);
        let summands = hps
            .iter()
            .enumerate()
            .map(|(i, hp)| Summand { factor: 0, index: i, hp: hp.clone(), rank: 1 })
            .collect();
        Sheaf::new(variety, datum, rep, summands).unwrap()
    }

    #[test]
    fn classical_oracle_examples() {
        // line bundles of degree 2, 0 on P1
        let s = gl_identity_sheaf(&[poly(&[(3, 1), (1, 1)]), poly(&[(1, 1), (1, 1)])]);
        assert_eq!(classical_hn_oracle(&s).unwrap(), vec![vec![0], vec![0, 1]]);
        // all equal
        let s = gl_identity_sheaf(&vec![poly(&[(1, 1), (1, 1)]); 3]);
        assert_eq!(classical_hn_oracle(&s).unwrap(), vec![vec![0, 1, 2]]);
        // wrong shape
        assert!(matches!(
            classical_hn_oracle(&glxgl_sheaf()),
            Err(GhnError::WrongGroupShape)
        ));
    }

    #[test]
    fn ghn_matches_classical_on_gl3() {
        let s = gl_identity_sheaf(&[
            poly(&[(5, 1), (1, 1)]),
            poly(&[(1, 1), (1, 1)]),
            poly(&[(3, 1), (1, 1)]),
        ]);
        let lex = ghn_filtration(&s).unwrap();
        assert_eq!(lex.q, 1);
        assert_eq!(unweighted_chain(&lex), classical_hn_oracle(&s).unwrap());
    }

    #[test]
    fn leading_term_weight_examples() {
        let s = gl_identity_sheaf(&[poly(&[(4, 1), (1, 1)]), poly(&[(2, 1), (1, 1)])]);
        assert_eq!(leading_term_weights(&s).unwrap(), big(&[1, -1]));
        let s = gl_identity_sheaf(&[
            poly(&[(3, 1), (1, 1)]),
            poly(&[(3, 1), (1, 1)]),
            poly(&[(-3, 1), (1, 1)]),
        ]);
        assert_eq!(leading_term_weights(&s).unwrap(), big(&[1, 1, -2]));
        // step-1 degrees of the filtration agree up to positive scale
        let lex = ghn_filtration(&s).unwrap();
        let step1: Vec<BigInt> = lex.summand_weights.iter().map(|w| w[0].clone()).collect();
        assert_eq!(
            primitive_scale(&to_rat_vec(&step1)).unwrap(),
            leading_term_weights(&s).unwrap()
        );
        let flat = gl_identity_sheaf(&vec![poly(&[(1, 1), (1, 1)]); 2]);
        assert!(matches!(
            leading_term_weights(&flat),
            Err(GhnError::SemistableInput)
        ));
    }

    #[test]
    fn filtration_degrees_match_steps() {
        let sheaf = so7_sheaf(false);
        let lex = ghn_filtration(&sheaf).unwrap();
        for (k, step) in lex.steps.iter().enumerate() {
            let filt = filtration_from_cochar(&sheaf, &step.lambda);
            for (i, w) in lex.summand_weights.iter().enumerate() {
                assert_eq!(w[k], filt.degrees[i]);
            }
        }
    }
}
