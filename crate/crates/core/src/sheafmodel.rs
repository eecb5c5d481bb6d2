//! The torus-diagonalized model of a principal rho-sheaf: per-weight-summand
//! Hilbert data, validation, first-Chern c-values, the psi functional, degree
//! and the centrality check.

use crate::linalg::{self, SolveOutcome};
use crate::polyq::{factorial, poly_cmp, reduced_hp, slope, PolyError, RationalPoly};
use crate::ratio::Rat;
use crate::rootdata::{to_rat_vec, GroupDatum, Representation, RootDataError};
use num::bigint::BigInt;
use num::Signed;
use std::cmp::Ordering;

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum SheafError {
    #[error("no linear functional psi matches the c-values (violated at summand {summand})")]
    InconsistentDegrees { summand: usize },
    #[error("psi is underdetermined: weights do not span the covector space")]
    UnderdeterminedPsi,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error("malformed sheaf: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyDescriptor {
    /// Dimension d of the polarized variety.
    pub dim: usize,
    /// A_d / d! is the leading Hilbert coefficient of the structure sheaf line;
    /// A_d is the degree H^d of the polarization.
    pub a_d: Rat,
    /// The intersection number t_1 . H^{d-1} of the degree-1 Todd term.
    pub todd_line: Rat,
    pub name: String,
}

impl VarietyDescriptor {
    pub fn new(dim: usize, a_d: Rat, todd_line: Rat, name: String) -> Result<Self, SheafError> {
        if dim == 0 {
            return Err(SheafError::Malformed("variety dimension must be >= 1".into()));
        }
        if !a_d.is_positive() {
            return Err(SheafError::Malformed(format!("A_d = {a_d} must be positive")));
        }
        Ok(VarietyDescriptor { dim, a_d, todd_line, name })
    }

    /// Projective space P^d with its hyperplane polarization:
    /// A_d = 1, t_1.H^{d-1} = (d+1)/2.
    pub fn projective_space(d: usize) -> Self {
        VarietyDescriptor {
            dim: d,
            a_d: Rat::from(BigInt::from(1)),
            todd_line: Rat::new(BigInt::from(d as i64 + 1), BigInt::from(2)),
            name: format!("P{d}"),
        }
    }

    /// Hilbert polynomial of O_{P^d}(n) = C(n+d, d).
    pub fn projective_space_structure_hp(d: usize) -> RationalPoly {
        // product (n+1)(n+2)...(n+d) / d!
        let mut p = RationalPoly::constant(Rat::from(BigInt::from(1)));
        for k in 1..=d {
            p = p.mul(&RationalPoly::new(vec![
                Rat::from(BigInt::from(k as i64)),
                Rat::from(BigInt::from(1)),
            ]));
        }
        p.scale(&Rat::from(factorial(d)).recip())
    }
}

/// One weight-space summand of the diagonalized sheaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    /// Factor index into the representation.
    pub factor: usize,
    /// Position inside the factor's weight list.
    pub index: usize,
    pub hp: RationalPoly,
    pub rank: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialRhoSheaf {
    pub variety: VarietyDescriptor,
    pub datum: GroupDatum,
    pub rep: Representation,
    pub summands: Vec<Summand>,
    /// Partition of summand indices; starts as one block per factor and is
    /// refined by the filtration recursion.
    pub blocks: Vec<Vec<usize>>,
}

impl CombinatorialRhoSheaf {
    pub fn new(
        variety: VarietyDescriptor,
        datum: GroupDatum,
        rep: Representation,
        summands: Vec<Summand>,
    ) -> Result<Self, SheafError> {
        if datum.torus_rank != rep.torus_rank {
            return Err(SheafError::Malformed(
                "datum and representation torus ranks differ".into(),
            ));
        }
        for (i, s) in summands.iter().enumerate() {
            let factor = rep
                .factors
                .get(s.factor)
                .ok_or_else(|| SheafError::Malformed(format!("summand {i}: no factor {}", s.factor)))?;
            if s.index >= factor.len() {
                return Err(SheafError::Malformed(format!(
                    "summand {i}: no weight entry {} in factor {}",
                    s.index, s.factor
                )));
            }
            if s.rank == 0 {
                return Err(SheafError::Malformed(format!("summand {i}: rank must be positive")));
            }
        }
        let blocks = initial_blocks(&rep, &summands);
        Ok(CombinatorialRhoSheaf { variety, datum, rep, summands, blocks })
    }

    pub fn weight_of(&self, summand: usize) -> &Vec<BigInt> {
        let s = &self.summands[summand];
        &self.rep.factors[s.factor][s.index].weight
    }

    pub fn reduced_summand(&self, summand: usize) -> Result<RationalPoly, PolyError> {
        reduced_hp(&self.summands[summand].hp)
    }

    pub fn block_total(&self, block: &[usize]) -> RationalPoly {
        let mut total = RationalPoly::zero();
        for &i in block {
            total = total.add(&self.summands[i].hp);
        }
        total
    }

    pub fn with_blocks(&self, blocks: Vec<Vec<usize>>) -> Self {
        let mut out = self.clone();
        out.blocks = blocks;
        out
    }
}

/// One block per factor, in factor order.
pub fn initial_blocks(rep: &Representation, summands: &[Summand]) -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); rep.factors.len()];
    for (i, s) in summands.iter().enumerate() {
        if let Some(b) = blocks.get_mut(s.factor) {
            b.push(i);
        }
    }
    blocks.retain(|b| !b.is_empty());
    blocks
}

/// Per-block totals and reduced polynomials (the derived view used by the
/// numerical invariant).
#[derive(Debug, Clone)]
pub struct TotalData {
    pub block_totals: Vec<RationalPoly>,
    pub block_reduced: Vec<RationalPoly>,
    pub summand_reduced: Vec<RationalPoly>,
}

pub fn totals(sheaf: &CombinatorialRhoSheaf) -> Result<TotalData, SheafError> {
    let block_totals: Vec<RationalPoly> = sheaf.blocks.iter().map(|b| sheaf.block_total(b)).collect();
    let block_reduced = block_totals
        .iter()
        .map(reduced_hp)
        .collect::<Result<Vec<_>, _>>()?;
    let summand_reduced = sheaf
        .summands
        .iter()
        .map(|s| reduced_hp(&s.hp))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TotalData { block_totals, block_reduced, summand_reduced })
}

/// c_i = A_d * slope_{d-1}(hp_i) - t_1.H^{d-1}, the normalized first Chern
/// pairing of each summand, by inverting the Riemann-Roch slope identity.
pub fn c_values(sheaf: &CombinatorialRhoSheaf) -> Result<Vec<Rat>, SheafError> {
    let d = sheaf.variety.dim;
    sheaf
        .summands
        .iter()
        .map(|s| {
            let mu = slope(&s.hp, d - 1)?;
            Ok(&sheaf.variety.a_d * mu - &sheaf.variety.todd_line)
        })
        .collect()
}

/// The unique covector psi with <psi, chi_i> = c_i for all summands.
pub fn psi_functional(sheaf: &CombinatorialRhoSheaf) -> Result<Vec<Rat>, SheafError> {
    let c = c_values(sheaf)?;
    let rows: Vec<Vec<Rat>> = (0..sheaf.summands.len())
        .map(|i| to_rat_vec(sheaf.weight_of(i)))
        .collect();
    match linalg::solve_general(&rows, &c)
        .map_err(|e| SheafError::Malformed(e.to_string()))?
    {
        SolveOutcome::Unique(psi) => Ok(psi),
        SolveOutcome::Inconsistent { row } => Err(SheafError::InconsistentDegrees { summand: row }),
        SolveOutcome::Underdetermined => Err(SheafError::UnderdeterminedPsi),
    }
}

/// Coordinates of the degree in Lambda(G): psi paired with the character
/// group basis of the datum.
pub fn degree(sheaf: &CombinatorialRhoSheaf) -> Result<Vec<Rat>, SheafError> {
    let psi = psi_functional(sheaf)?;
    Ok(crate::rootdata::character_group_basis(&sheaf.datum)
        .iter()
        .map(|b| linalg::dot(b, &psi))
        .collect())
}

/// True iff every central basis vector pairs constantly with the weights of
/// each factor.
pub fn is_central(datum: &GroupDatum, rep: &Representation) -> bool {
    for z in &datum.central_basis {
        for factor in &rep.factors {
            let mut seen: Option<Rat> = None;
            for entry in factor {
                let p = crate::rootdata::pair_ri(z, &entry.weight);
                match &seen {
                    None => seen = Some(p),
                    Some(q) if *q != p => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs every structural and arithmetic consistency check; failures become
/// report entries with witnesses rather than errors.
pub fn validate(sheaf: &CombinatorialRhoSheaf) -> ValidationReport {
    let mut checks = Vec::new();
    let d = sheaf.variety.dim;
    let mut push = |name: &str, witness: Option<String>| {
        checks.push(CheckResult {
            name: name.to_string(),
            passed: witness.is_none(),
            witness,
        });
    };

    // degrees
    let mut bad = None;
    for (i, s) in sheaf.summands.iter().enumerate() {
        if s.hp.degree() != Some(d) {
            bad = Some(format!("summand {i} has degree {:?}, expected {d}", s.hp.degree()));
            break;
        }
    }
    push("summand-degrees", bad);

    // leading coefficient = rank * A_d / d!
    let mut bad = None;
    for (i, s) in sheaf.summands.iter().enumerate() {
        if s.hp.degree() != Some(d) {
            continue; // reported above
        }
        let expect = Rat::from(BigInt::from(s.rank)) * &sheaf.variety.a_d / Rat::from(factorial(d));
        if s.hp.coeff(d) != expect {
            bad = Some(format!(
                "summand {i} leading coefficient {} differs from rank*A_d/d! = {}",
                s.hp.coeff(d),
                expect
            ));
            break;
        }
    }
    push("leading-coefficients", bad);

    // weight references: bijective onto representation entries with matching
    // rank/multiplicity
    let mut bad = None;
    let mut seen = std::collections::BTreeSet::new();
    for (i, s) in sheaf.summands.iter().enumerate() {
        if !seen.insert((s.factor, s.index)) {
            bad = Some(format!("summand {i} duplicates weight entry ({}, {})", s.factor, s.index));
            break;
        }
        let entry = &sheaf.rep.factors[s.factor][s.index];
        if entry.mult != s.rank {
            bad = Some(format!(
                "summand {i} rank {} differs from weight multiplicity {}",
                s.rank, entry.mult
            ));
            break;
        }
    }
    if bad.is_none() {
        let total: usize = sheaf.rep.factors.iter().map(|f| f.len()).sum();
        if seen.len() != total {
            bad = Some(format!(
                "{} weight entries but {} summands",
                total,
                seen.len()
            ));
        }
    }
    push("weight-references", bad);

    // spanning
    push(
        "spanning",
        if sheaf.rep.spans() {
            None
        } else {
            Some("weights do not span the rational covector space".into())
        },
    );

    // psi consistency (meaningless when degrees are broken)
    let psi_witness = match psi_functional(sheaf) {
        Ok(_) => None,
        Err(e) => Some(e.to_string()),
    };
    push("psi-consistency", psi_witness);

    // blocks partition the summands and never mix factors
    let mut bad = None;
    let mut covered = vec![false; sheaf.summands.len()];
    'outer: for (b, block) in sheaf.blocks.iter().enumerate() {
        let mut factor = None;
        for &i in block {
            if i >= sheaf.summands.len() || covered[i] {
                bad = Some(format!("block {b} misuses summand index {i}"));
                break 'outer;
            }
            covered[i] = true;
            match factor {
                None => factor = Some(sheaf.summands[i].factor),
                Some(f) if f != sheaf.summands[i].factor => {
                    bad = Some(format!("block {b} mixes factors"));
                    break 'outer;
                }
                _ => {}
            }
        }
    }
    if bad.is_none() && covered.iter().any(|&c| !c) {
        bad = Some("blocks do not cover all summands".into());
    }
    push("block-alignment", bad);

    ValidationReport { checks }
}

/// Descending comparison helper used by the classical oracle.
pub fn cmp_reduced_desc(a: &RationalPoly, b: &RationalPoly) -> Ordering {
    poly_cmp(b, a)
}
