//! Split reductive root data, representations as weight tuples, and the
//! cocharacter combinatorics (parabolic types, Levi centers, the
//! representation inner product and its projections).

use crate::linalg::{self, LinalgError};
use crate::ratio::{is_integer, Rat};
use num::bigint::BigInt;
use num::integer::gcd;
use num::{One, Signed, Zero};
use std::collections::BTreeSet;

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum RootDataError {
    #[error("cocharacter is not dominant: pairing with simple root #{root} is negative")]
    NotDominant { root: usize },
    #[error("representation inner product is degenerate (weights do not span)")]
    DegenerateForm,
    #[error("cannot scale the zero vector to a primitive cocharacter")]
    ZeroVector,
    #[error("group spec parse error: {0}")]
    ParseError(String),
    #[error("unsupported group factor: {0}")]
    UnsupportedType(String),
    #[error("invalid root datum: {0}")]
    InvalidDatum(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
}

/// Integer cocharacter of the split maximal torus.
pub type Cocharacter = Vec<BigInt>;

pub fn cochar(coords: &[i64]) -> Cocharacter {
    coords.iter().map(|&c| BigInt::from(c)).collect()
}

pub fn to_rat_vec(v: &[BigInt]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from(x.clone())).collect()
}

/// ⟨covector, vector⟩ with rational covector and integer vector.
pub fn pair_ri(cov: &[Rat], v: &[BigInt]) -> Rat {
    cov.iter().zip(v).map(|(c, x)| c * Rat::from(x.clone())).sum()
}

/// ⟨covector, vector⟩ with both integral.
pub fn pair_ii(cov: &[BigInt], v: &[BigInt]) -> BigInt {
    cov.iter().zip(v).map(|(c, x)| c * x).sum()
}

/// Split reductive group datum in fixed torus coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDatum {
    pub torus_rank: usize,
    /// z_1..z_h, integer vectors spanning the central cocharacter directions.
    pub central_basis: Vec<Vec<Rat>>,
    pub simple_roots: Vec<Vec<Rat>>,
    pub simple_coroots: Vec<Vec<Rat>>,
    /// omega^vee_j, dual to the simple roots inside the coroot span.
    pub fund_coweights: Vec<Vec<Rat>>,
    pub name: String,
}

impl GroupDatum {
    pub fn new(
        torus_rank: usize,
        central_basis: Vec<Vec<Rat>>,
        simple_roots: Vec<Vec<Rat>>,
        simple_coroots: Vec<Vec<Rat>>,
        fund_coweights: Vec<Vec<Rat>>,
        name: String,
    ) -> Result<Self, RootDataError> {
        let datum = GroupDatum {
            torus_rank,
            central_basis,
            simple_roots,
            simple_coroots,
            fund_coweights,
            name,
        };
        datum.check()?;
        Ok(datum)
    }

    fn check(&self) -> Result<(), RootDataError> {
        let n = self.torus_rank;
        if n == 0 {
            return Err(RootDataError::InvalidDatum("torus rank must be positive".into()));
        }
        let h = self.central_basis.len();
        let l = self.simple_roots.len();
        if self.simple_coroots.len() != l || self.fund_coweights.len() != l {
            return Err(RootDataError::InvalidDatum(
                "roots, coroots and coweights must have equal length".into(),
            ));
        }
        for v in self
            .central_basis
            .iter()
            .chain(&self.simple_roots)
            .chain(&self.simple_coroots)
            .chain(&self.fund_coweights)
        {
            if v.len() != n {
                return Err(RootDataError::InvalidDatum(format!(
                    "vector length {} does not match torus rank {n}",
                    v.len()
                )));
            }
        }
        for z in &self.central_basis {
            if z.iter().any(|x| !is_integer(x)) {
                return Err(RootDataError::InvalidDatum(
                    "central basis vectors must be integral".into(),
                ));
            }
        }
        if h + l != n {
            return Err(RootDataError::InvalidDatum(format!(
                "h + l = {} does not equal torus rank {n}",
                h + l
            )));
        }
        // {z, omega^vee} must be a basis
        let mut basis: Vec<Vec<Rat>> = self.central_basis.clone();
        basis.extend(self.fund_coweights.iter().cloned());
        if linalg::rank(&basis) != n {
            return Err(RootDataError::InvalidDatum(
                "central basis and fundamental coweights do not form a basis".into(),
            ));
        }
        for (i, alpha) in self.simple_roots.iter().enumerate() {
            for (j, z) in self.central_basis.iter().enumerate() {
                if !linalg::dot(alpha, z).is_zero() {
                    return Err(RootDataError::InvalidDatum(format!(
                        "<alpha_{i}, z_{j}> is nonzero"
                    )));
                }
            }
            for (j, omega) in self.fund_coweights.iter().enumerate() {
                let expected = if i == j { Rat::one() } else { Rat::zero() };
                if linalg::dot(alpha, omega) != expected {
                    return Err(RootDataError::InvalidDatum(format!(
                        "<alpha_{i}, omega_{j}> is not delta_{{ij}}"
                    )));
                }
            }
            for (j, coroot) in self.simple_coroots.iter().enumerate() {
                let c = linalg::dot(alpha, coroot);
                if !is_integer(&c) {
                    return Err(RootDataError::InvalidDatum(format!(
                        "Cartan entry <alpha_{i}, alpha_{j}^v> = {c} is not integral"
                    )));
                }
                if i == j && c != Rat::from(BigInt::from(2)) {
                    return Err(RootDataError::InvalidDatum(format!(
                        "Cartan diagonal <alpha_{i}, alpha_{i}^v> = {c} is not 2"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<Rat>> {
        self.simple_roots
            .iter()
            .map(|alpha| {
                self.simple_coroots
                    .iter()
                    .map(|co| linalg::dot(alpha, co))
                    .collect()
            })
            .collect()
    }

    /// Simple reflection s_j on cocharacter-space vectors.
    pub fn reflect(&self, j: usize, v: &[Rat]) -> Vec<Rat> {
        let c = linalg::dot(&self.simple_roots[j], v);
        v.iter()
            .zip(&self.simple_coroots[j])
            .map(|(x, co)| x - &c * co)
            .collect()
    }
}

/// One weight entry of a representation factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEntry {
    pub weight: Vec<BigInt>,
    pub mult: u32,
}

/// Tuple of weight lists, one per general linear factor of the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub torus_rank: usize,
    pub factors: Vec<Vec<WeightEntry>>,
}

impl Representation {
    pub fn new(torus_rank: usize, factors: Vec<Vec<WeightEntry>>) -> Result<Self, RootDataError> {
        for factor in &factors {
            for entry in factor {
                if entry.weight.len() != torus_rank {
                    return Err(RootDataError::InvalidRepresentation(format!(
                        "weight length {} does not match torus rank {torus_rank}",
                        entry.weight.len()
                    )));
                }
                if entry.mult == 0 {
                    return Err(RootDataError::InvalidRepresentation(
                        "multiplicity must be positive".into(),
                    ));
                }
            }
        }
        Ok(Representation { torus_rank, factors })
    }

    /// Per-factor dimensions r_j.
    pub fn dims(&self) -> Vec<u64> {
        self.factors
            .iter()
            .map(|f| f.iter().map(|e| e.mult as u64).sum())
            .collect()
    }

    pub fn iter_entries(&self) -> impl Iterator<Item = (usize, usize, &WeightEntry)> {
        self.factors
            .iter()
            .enumerate()
            .flat_map(|(j, f)| f.iter().enumerate().map(move |(i, e)| (j, i, e)))
    }

    /// Do the weights span the full rational covector space?
    pub fn spans(&self) -> bool {
        let rows: Vec<Vec<Rat>> = self
            .iter_entries()
            .map(|(_, _, e)| to_rat_vec(&e.weight))
            .collect();
        linalg::rank(&rows) == self.torus_rank
    }
}

/// J = { j : <alpha_j, lambda> > 0 } for dominant lambda.
pub fn parabolic_type(datum: &GroupDatum, lambda: &Cocharacter) -> Result<BTreeSet<usize>, RootDataError> {
    let lam = to_rat_vec(lambda);
    let mut out = BTreeSet::new();
    for (j, alpha) in datum.simple_roots.iter().enumerate() {
        let p = linalg::dot(alpha, &lam);
        if p.is_negative() {
            return Err(RootDataError::NotDominant { root: j });
        }
        if p.is_positive() {
            out.insert(j);
        }
    }
    Ok(out)
}

/// Basis of X_*(Z_lambda): the central vectors plus the fundamental coweights
/// of the simple roots pairing positively with lambda.
pub fn levi_center_basis(datum: &GroupDatum, lambda: &Cocharacter) -> Result<Vec<Vec<Rat>>, RootDataError> {
    let j_set = parabolic_type(datum, lambda)?;
    let mut basis = datum.central_basis.clone();
    basis.extend(j_set.iter().map(|&j| datum.fund_coweights[j].clone()));
    Ok(basis)
}

/// The representation inner product delta ._chi gamma = sum over weights
/// (with multiplicity) of <delta, chi><gamma, chi>.
pub fn chi_inner(rep: &Representation, delta: &[Rat], gamma: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (_, _, entry) in rep.iter_entries() {
        let chi = to_rat_vec(&entry.weight);
        let a = linalg::dot(delta, &chi);
        let b = linalg::dot(gamma, &chi);
        acc += a * b * Rat::from(BigInt::from(entry.mult));
    }
    acc
}

pub fn gram_matrix(rep: &Representation) -> Vec<Vec<Rat>> {
    let n = rep.torus_rank;
    let mut g = vec![vec![Rat::zero(); n]; n];
    for (_, _, entry) in rep.iter_entries() {
        let m = Rat::from(BigInt::from(entry.mult));
        let chi = to_rat_vec(&entry.weight);
        for s in 0..n {
            if chi[s].is_zero() {
                continue;
            }
            for t in 0..n {
                if chi[t].is_zero() {
                    continue;
                }
                g[s][t] += &chi[s] * &chi[t] * &m;
            }
        }
    }
    g
}

/// Orthogonal projection of v, with respect to ._chi, onto the span of the
/// fundamental coweights (the complement of the central span).
pub fn pi_z(datum: &GroupDatum, rep: &Representation, v: &[Rat]) -> Result<Vec<Rat>, RootDataError> {
    let w = &datum.fund_coweights;
    let l = w.len();
    let n = datum.torus_rank;
    if l == 0 {
        return Ok(vec![Rat::zero(); n]);
    }
    // normal equations in the ._chi form: (W^T G W) c = W^T G v
    let gw: Vec<Vec<Rat>> = (0..l)
        .map(|a| (0..l).map(|b| chi_inner(rep, &w[a], &w[b])).collect())
        .collect();
    let rhs: Vec<Rat> = (0..l).map(|a| chi_inner(rep, &w[a], v)).collect();
    let c = linalg::solve_square(&gw, &rhs).map_err(|e| match e {
        LinalgError::Singular => RootDataError::DegenerateForm,
        LinalgError::DimensionMismatch(m) => RootDataError::InvalidDatum(m),
    })?;
    let mut out = vec![Rat::zero(); n];
    for (ck, wk) in c.iter().zip(w) {
        linalg::add_scaled(&mut out, wk, ck);
    }
    Ok(out)
}

/// The unique positive rational multiple of v with coprime integer entries.
pub fn primitive_scale(v: &[Rat]) -> Result<Cocharacter, RootDataError> {
    if v.iter().all(|x| x.is_zero()) {
        return Err(RootDataError::ZeroVector);
    }
    let mut denom = BigInt::one();
    for x in v {
        denom = num::integer::lcm(denom, x.denom().clone());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&denom / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = gcd(g, x.clone());
    }
    Ok(ints.into_iter().map(|x| x / &g).collect())
}

pub fn is_primitive(v: &Cocharacter) -> bool {
    let mut g = BigInt::zero();
    for x in v {
        g = gcd(g, x.clone());
    }
    g.is_one()
}

/// A rational basis of the annihilator of the coroot span — the character
/// group X^*(G)_Q of the split group.
pub fn character_group_basis(datum: &GroupDatum) -> Vec<Vec<Rat>> {
    if datum.simple_coroots.is_empty() {
        // no coroots: every coordinate covector survives
        return (0..datum.torus_rank)
            .map(|i| {
                let mut v = vec![Rat::zero(); datum.torus_rank];
                v[i] = Rat::one();
                v
            })
            .collect();
    }
    linalg::nullspace(&datum.simple_coroots)
        .into_iter()
        .map(|v| {
            let prim = primitive_scale(&v).expect("nullspace basis vectors are nonzero");
            to_rat_vec(&prim)
        })
        .collect()
}

/// Fundamental coweights dual to `roots` inside span(`coroots`), by an exact
/// Cartan-matrix solve. Shared with the Levi sub-datum recomputation.
pub fn fund_coweights_for(
    roots: &[Vec<Rat>],
    coroots: &[Vec<Rat>],
) -> Result<Vec<Vec<Rat>>, RootDataError> {
    let l = roots.len();
    if l == 0 {
        return Ok(vec![]);
    }
    let n = roots[0].len();
    let cartan: Vec<Vec<Rat>> = roots
        .iter()
        .map(|a| coroots.iter().map(|co| linalg::dot(a, co)).collect())
        .collect();
    let mut out = Vec::with_capacity(l);
    for j in 0..l {
        let mut e = vec![Rat::zero(); l];
        e[j] = Rat::one();
        let c = linalg::solve_square(&cartan, &e).map_err(|_| {
            RootDataError::InvalidDatum("Cartan matrix of the subsystem is singular".into())
        })?;
        let mut omega = vec![Rat::zero(); n];
        for (ck, co) in c.iter().zip(coroots) {
            linalg::add_scaled(&mut omega, co, ck);
        }
        out.push(omega);
    }
    Ok(out)
}

/// Every root of the datum: closure of the simple roots (and their negatives)
/// under the simple reflections. Capped to guard against malformed custom
/// data whose "root system" is infinite.
pub fn all_roots(datum: &GroupDatum) -> Result<Vec<Vec<Rat>>, RootDataError> {
    const CAP: usize = 10_000;
    let mut roots: Vec<Vec<Rat>> = Vec::new();
    for r in &datum.simple_roots {
        for signed in [r.clone(), r.iter().map(|x| -x).collect()] {
            if !roots.contains(&signed) {
                roots.push(signed);
            }
        }
    }
    let mut frontier = roots.clone();
    while let Some(beta) = frontier.pop() {
        for (alpha, coroot) in datum.simple_roots.iter().zip(&datum.simple_coroots) {
            let c = linalg::dot(&beta, coroot);
            if c.is_zero() {
                continue;
            }
            let refl: Vec<Rat> = beta.iter().zip(alpha).map(|(b, a)| b - &c * a).collect();
            if !roots.contains(&refl) {
                if roots.len() >= CAP {
                    return Err(RootDataError::InvalidDatum(
                        "root system closure exceeds the size cap".into(),
                    ));
                }
                roots.push(refl.clone());
                frontier.push(refl);
            }
        }
    }
    Ok(roots)
}

// ---------------------------------------------------------------------------
// builtin groups
// ---------------------------------------------------------------------------

struct FactorTables {
    rank: usize,
    central: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    std_weights: Vec<Vec<i64>>,
}

fn unit(n: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = c;
    v
}

fn diff(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v[i + 1] = -1;
    v
}

fn factor_tables(name: &str, arg: usize) -> Result<FactorTables, RootDataError> {
    match name {
        "gl" => {
            if arg < 1 {
                return Err(RootDataError::UnsupportedType("gl(k) needs k >= 1".into()));
            }
            let n = arg;
            Ok(FactorTables {
                rank: n,
                central: vec![vec![1; n]],
                roots: (0..n - 1).map(|i| diff(n, i)).collect(),
                coroots: (0..n - 1).map(|i| diff(n, i)).collect(),
                std_weights: (0..n).map(|i| unit(n, i, 1)).collect(),
            })
        }
        "sl" => {
            if arg < 2 {
                return Err(RootDataError::UnsupportedType("sl(k) needs k >= 2".into()));
            }
            // reduced coordinates: a in Z^{k-1} is diag(t^{a_1},..,t^{a_{k-1}},t^{-sum})
            let n = arg - 1;
            let mut roots: Vec<Vec<i64>> = (0..n.saturating_sub(1)).map(|i| diff(n, i)).collect();
            let mut last = vec![1; n];
            last[n - 1] = 2;
            roots.push(last);
            let mut coroots: Vec<Vec<i64>> = (0..n.saturating_sub(1)).map(|i| diff(n, i)).collect();
            coroots.push(unit(n, n - 1, 1));
            let mut std_weights: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i, 1)).collect();
            std_weights.push(vec![-1; n]);
            Ok(FactorTables {
                rank: n,
                central: vec![],
                roots,
                coroots,
                std_weights,
            })
        }
        "so" => {
            if arg < 3 {
                return Err(RootDataError::UnsupportedType("so(k) needs k >= 3".into()));
            }
            if arg % 2 == 1 {
                // type B_n, torus diag(t^{a_1},..,t^{a_n},1,t^{-a_n},..,t^{-a_1})
                let n = arg / 2;
                let mut roots: Vec<Vec<i64>> = (0..n.saturating_sub(1)).map(|i| diff(n, i)).collect();
                roots.push(unit(n, n - 1, 1));
                let mut coroots: Vec<Vec<i64>> = (0..n.saturating_sub(1)).map(|i| diff(n, i)).collect();
                coroots.push(unit(n, n - 1, 2));
                let mut std_weights: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i, 1)).collect();
                std_weights.push(vec![0; n]);
                std_weights.extend((0..n).rev().map(|i| unit(n, i, -1)));
                Ok(FactorTables {
                    rank: n,
                    central: vec![],
                    roots,
                    coroots,
                    std_weights,
                })
            } else {
                // type D_n
                let n = arg / 2;
                if n < 2 {
                    return Err(RootDataError::UnsupportedType("so(2n) needs n >= 2".into()));
                }
                let mut roots: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i)).collect();
                let mut last = vec![0; n];
                last[n - 2] = 1;
                last[n - 1] = 1;
                roots.push(last.clone());
                let coroots = roots.clone();
                let mut std_weights: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i, 1)).collect();
                std_weights.extend((0..n).rev().map(|i| unit(n, i, -1)));
                Ok(FactorTables {
                    rank: n,
                    central: vec![],
                    roots,
                    coroots,
                    std_weights,
                })
            }
        }
        "sp" => {
            if arg < 2 || arg % 2 == 1 {
                return Err(RootDataError::UnsupportedType(
                    "sp(2k) needs an even argument >= 2".into(),
                ));
            }
            // type C_n
            let n = arg / 2;
            let mut roots: Vec<Vec<i64>> = (0..n.saturating_sub(1)).map(|i| diff(n, i)).collect();
            roots.push(unit(n, n - 1, 2));
            let mut coroots: Vec<Vec<i64>> = (0..n.saturating_sub(1)).map(|i| diff(n, i)).collect();
            coroots.push(unit(n, n - 1, 1));
            let mut std_weights: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i, 1)).collect();
            std_weights.extend((0..n).rev().map(|i| unit(n, i, -1)));
            Ok(FactorTables {
                rank: n,
                central: vec![],
                roots,
                coroots,
                std_weights,
            })
        }
        other => Err(RootDataError::UnsupportedType(other.to_string())),
    }
}

fn parse_factor(s: &str) -> Result<(String, usize), RootDataError> {
    let s = s.trim().to_ascii_lowercase();
    let open = s
        .find('(')
        .ok_or_else(|| RootDataError::ParseError(format!("missing '(' in {s:?}")))?;
    if !s.ends_with(')') {
        return Err(RootDataError::ParseError(format!("missing ')' in {s:?}")));
    }
    let name = s[..open].to_string();
    let arg: usize = s[open + 1..s.len() - 1]
        .trim()
        .parse()
        .map_err(|_| RootDataError::ParseError(format!("bad argument in {s:?}")))?;
    Ok((name, arg))
}

fn parse_spec(spec: &str) -> Result<Vec<FactorTables>, RootDataError> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(RootDataError::ParseError("empty group spec".into()));
    }
    spec.split('x')
        .map(|f| {
            let (name, arg) = parse_factor(f)?;
            factor_tables(&name, arg)
        })
        .collect()
}

fn embed(n_total: usize, offset: usize, v: &[i64]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n_total];
    for (i, &x) in v.iter().enumerate() {
        out[offset + i] = Rat::from(BigInt::from(x));
    }
    out
}

/// Standard root datum for a product group spec like `"gl(2)xso(7)"`.
pub fn builtin_datum(spec: &str) -> Result<GroupDatum, RootDataError> {
    let factors = parse_spec(spec)?;
    let n: usize = factors.iter().map(|f| f.rank).sum();
    let mut central = Vec::new();
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    let mut offset = 0;
    for f in &factors {
        central.extend(f.central.iter().map(|v| embed(n, offset, v)));
        roots.extend(f.roots.iter().map(|v| embed(n, offset, v)));
        coroots.extend(f.coroots.iter().map(|v| embed(n, offset, v)));
        offset += f.rank;
    }
    let coweights = fund_coweights_for(&roots, &coroots)?;
    GroupDatum::new(n, central, roots, coroots, coweights, spec.trim().to_ascii_lowercase())
}

/// The defining representation of each factor (one weight list per factor),
/// mainly for tests and fixtures.
pub fn standard_rep(spec: &str) -> Result<Representation, RootDataError> {
    let factors = parse_spec(spec)?;
    let n: usize = factors.iter().map(|f| f.rank).sum();
    let mut out = Vec::new();
    let mut offset = 0;
    for f in &factors {
        let list: Vec<WeightEntry> = f
            .std_weights
            .iter()
            .map(|w| WeightEntry {
                weight: embed(n, offset, w)
                    .into_iter()
                    .map(|r| r.numer().clone())
                    .collect(),
                mult: 1,
            })
            .collect();
        out.push(list);
        offset += f.rank;
    }
    Representation::new(n, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat;

    fn rv(v: &[(i64, i64)]) -> Vec<Rat> {
        v.iter().map(|&(n, d)| rat(n, d)).collect()
    }

    #[test]
    fn so7_datum_tables() {
        let d = builtin_datum("so(7)").unwrap();
        assert_eq!(d.torus_rank, 3);
        assert!(d.central_basis.is_empty());
        assert_eq!(d.simple_roots.len(), 3);
        assert_eq!(
            d.simple_roots,
            vec![
                rv(&[(1, 1), (-1, 1), (0, 1)]),
                rv(&[(0, 1), (1, 1), (-1, 1)]),
                rv(&[(0, 1), (0, 1), (1, 1)]),
            ]
        );
        // B3 Cartan matrix
        let cartan = d.cartan_matrix();
        let expect: Vec<Vec<i64>> = vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]];
        for (row, erow) in cartan.iter().zip(&expect) {
            for (x, &e) in row.iter().zip(erow) {
                assert_eq!(x, &rat(e, 1));
            }
        }
        // omega_1 = e1 for B3
        assert_eq!(d.fund_coweights[0], rv(&[(1, 1), (0, 1), (0, 1)]));
    }

    #[test]
    fn builtin_cartan_tables_a_b_c_d() {
        let cases = [
            ("gl(4)", vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]),
            ("sl(3)", vec![vec![2, -1], vec![-1, 2]]),
            ("sp(4)", vec![vec![2, -1], vec![-2, 2]]),
            (
                "so(8)",
                vec![
                    vec![2, -1, 0, 0],
                    vec![-1, 2, -1, -1],
                    vec![0, -1, 2, 0],
                    vec![0, -1, 0, 2],
                ],
            ),
        ];
        for (spec, expect) in cases {
            let d = builtin_datum(spec).unwrap();
            let cartan = d.cartan_matrix();
            for (row, erow) in cartan.iter().zip(&expect) {
                for (x, &e) in row.iter().zip(erow) {
                    assert_eq!(x, &rat(e, 1), "{spec}");
                }
            }
        }
    }

    #[test]
    fn builtin_sizes() {
        let gl1 = builtin_datum("gl(1)").unwrap();
        assert_eq!((gl1.torus_rank, gl1.central_basis.len(), gl1.simple_roots.len()), (1, 1, 0));
        let p = builtin_datum("gl(2)xgl(2)").unwrap();
        assert_eq!((p.torus_rank, p.central_basis.len(), p.simple_roots.len()), (4, 2, 2));
        assert!(builtin_datum("so(2)").is_err());
        assert!(builtin_datum("sp(3)").is_err());
        assert!(builtin_datum("e8(8)").is_err());
        assert!(builtin_datum("gl2").is_err());
    }

    #[test]
    fn parabolic_type_so7() {
        let d = builtin_datum("so(7)").unwrap();
        assert_eq!(
            parabolic_type(&d, &cochar(&[1, 0, 0])).unwrap(),
            BTreeSet::from([0])
        );
        assert_eq!(parabolic_type(&d, &cochar(&[0, 0, 0])).unwrap(), BTreeSet::new());
        assert_eq!(
            parabolic_type(&d, &cochar(&[0, 2, 1])),
            Err(RootDataError::NotDominant { root: 0 })
        );
        // within the Levi of (1,0,0): retained roots alpha_2, alpha_3
        let sub_roots = vec![d.simple_roots[1].clone(), d.simple_roots[2].clone()];
        let sub_coroots = vec![d.simple_coroots[1].clone(), d.simple_coroots[2].clone()];
        let sub_cow = fund_coweights_for(&sub_roots, &sub_coroots).unwrap();
        let sub = GroupDatum::new(
            3,
            vec![to_rat_vec(&cochar(&[1, 0, 0]))],
            sub_roots,
            sub_coroots,
            sub_cow,
            "levi".into(),
        )
        .unwrap();
        assert_eq!(
            parabolic_type(&sub, &cochar(&[0, 2, 1])).unwrap(),
            BTreeSet::from([0, 1])
        );
    }

    #[test]
    fn levi_center_examples() {
        let d = builtin_datum("so(7)").unwrap();
        assert_eq!(
            levi_center_basis(&d, &cochar(&[1, 0, 0])).unwrap(),
            vec![rv(&[(1, 1), (0, 1), (0, 1)])]
        );
        let p = builtin_datum("gl(2)xgl(2)").unwrap();
        assert_eq!(
            levi_center_basis(&p, &cochar(&[0, 0, 0, 0])).unwrap(),
            p.central_basis
        );
        // (1,1,0,0) is orthogonal to both roots, so only the center appears
        assert_eq!(
            levi_center_basis(&p, &cochar(&[1, 1, 0, 0])).unwrap(),
            p.central_basis
        );
        // a genuinely splitting dominant cocharacter picks up coweights
        let b = levi_center_basis(&p, &cochar(&[1, 0, 1, 0])).unwrap();
        assert_eq!(b.len(), 4);
    }

    #[test]
    fn chi_inner_and_gram() {
        let rep = standard_rep("so(7)").unwrap();
        let e1 = rv(&[(1, 1), (0, 1), (0, 1)]);
        let e2 = rv(&[(0, 1), (1, 1), (0, 1)]);
        assert_eq!(chi_inner(&rep, &e1, &e1), rat(2, 1));
        assert_eq!(chi_inner(&rep, &e1, &e2), rat(0, 1));
        assert_eq!(chi_inner(&rep, &rv(&[(0, 1); 3]), &e1), rat(0, 1));
        let g = gram_matrix(&rep);
        for s in 0..3 {
            for t in 0..3 {
                let expect = if s == t { rat(2, 1) } else { rat(0, 1) };
                assert_eq!(g[s][t], expect);
            }
        }
        assert!(linalg::is_positive_definite(&g));
        // k copies of the single weight (1) for gl(1)
        let rep1 = Representation::new(
            1,
            vec![vec![WeightEntry { weight: cochar(&[1]), mult: 5 }]],
        )
        .unwrap();
        assert_eq!(gram_matrix(&rep1), vec![vec![rat(5, 1)]]);
    }

    #[test]
    fn pi_z_examples() {
        // semisimple: identity
        let so7 = builtin_datum("so(7)").unwrap();
        let rep = standard_rep("so(7)").unwrap();
        let v = rv(&[(3, 1), (-1, 2), (5, 7)]);
        assert_eq!(pi_z(&so7, &rep, &v).unwrap(), v);
        // gl(2) identity rep
        let gl2 = builtin_datum("gl(2)").unwrap();
        let id2 = standard_rep("gl(2)").unwrap();
        assert_eq!(
            pi_z(&gl2, &id2, &rv(&[(1, 1), (0, 1)])).unwrap(),
            rv(&[(1, 2), (-1, 2)])
        );
        // central vectors project to zero
        assert_eq!(
            pi_z(&gl2, &id2, &rv(&[(7, 3), (7, 3)])).unwrap(),
            rv(&[(0, 1), (0, 1)])
        );
    }

    #[test]
    fn pi_z_idempotent_self_adjoint() {
        let d = builtin_datum("gl(3)").unwrap();
        let rep = standard_rep("gl(3)").unwrap();
        let v = rv(&[(1, 1), (2, 1), (-4, 3)]);
        let w = rv(&[(0, 1), (5, 2), (1, 1)]);
        let pv = pi_z(&d, &rep, &v).unwrap();
        assert_eq!(pi_z(&d, &rep, &pv).unwrap(), pv);
        let pw = pi_z(&d, &rep, &w).unwrap();
        assert_eq!(chi_inner(&rep, &pv, &w), chi_inner(&rep, &v, &pw));
    }

    #[test]
    fn primitive_scale_examples() {
        assert_eq!(
            primitive_scale(&rv(&[(2, 3), (0, 1), (1, 3)])).unwrap(),
            cochar(&[2, 0, 1])
        );
        assert_eq!(primitive_scale(&rv(&[(-4, 1), (-2, 1)])).unwrap(), cochar(&[-2, -1]));
        assert_eq!(primitive_scale(&rv(&[(5, 1)])).unwrap(), cochar(&[1]));
        assert_eq!(
            primitive_scale(&rv(&[(0, 1), (0, 1)])),
            Err(RootDataError::ZeroVector)
        );
        // scale invariance
        let v = rv(&[(3, 7), (-6, 5)]);
        let scaled: Vec<Rat> = v.iter().map(|x| x * rat(11, 4)).collect();
        assert_eq!(primitive_scale(&v).unwrap(), primitive_scale(&scaled).unwrap());
    }

    #[test]
    fn character_group_bases() {
        let so7 = builtin_datum("so(7)").unwrap();
        assert!(character_group_basis(&so7).is_empty());
        let gl3 = builtin_datum("gl(3)").unwrap();
        assert_eq!(character_group_basis(&gl3), vec![rv(&[(1, 1); 3])]);
        let p = builtin_datum("gl(2)xgl(3)").unwrap();
        let basis = character_group_basis(&p);
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0], rv(&[(1, 1), (1, 1), (0, 1), (0, 1), (0, 1)]));
        assert_eq!(basis[1], rv(&[(0, 1), (0, 1), (1, 1), (1, 1), (1, 1)]));
    }

    #[test]
    fn duality_and_weyl_invariance_for_builtins() {
        for spec in ["gl(3)", "sl(3)", "so(7)", "so(8)", "sp(4)", "gl(2)xgl(2)", "gl(1)"] {
            let d = builtin_datum(spec).unwrap();
            for (i, alpha) in d.simple_roots.iter().enumerate() {
                for (j, omega) in d.fund_coweights.iter().enumerate() {
                    let expect = if i == j { rat(1, 1) } else { rat(0, 1) };
                    assert_eq!(linalg::dot(alpha, omega), expect, "{spec} <a_{i}, w_{j}>");
                }
                for z in &d.central_basis {
                    assert_eq!(linalg::dot(alpha, z), rat(0, 1), "{spec}");
                }
            }
            // Weyl generator invariance of the standard-representation form
            let rep = standard_rep(spec).unwrap();
            let n = d.torus_rank;
            let probe: Vec<Vec<Rat>> = (0..n)
                .map(|i| {
                    let mut v = vec![rat(1, 3); n];
                    v[i] = rat(2 + i as i64, 1);
                    v
                })
                .collect();
            for j in 0..d.simple_roots.len() {
                for a in &probe {
                    for b in &probe {
                        let ra = d.reflect(j, a);
                        let rb = d.reflect(j, b);
                        assert_eq!(
                            chi_inner(&rep, &ra, &rb),
                            chi_inner(&rep, a, b),
                            "{spec} s_{j}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn standard_rep_spans() {
        for spec in ["gl(3)", "sl(4)", "so(7)", "so(8)", "sp(6)", "gl(2)xgl(2)"] {
            assert!(standard_rep(spec).unwrap().spans(), "{spec}");
        }
    }
}
