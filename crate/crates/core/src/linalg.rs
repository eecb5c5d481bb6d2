//! Exact linear algebra over the rationals: fraction-free elimination for
//! square solves, rational RREF for consistency checks and nullspaces.

use crate::ratio::Rat;
use num::bigint::BigInt;
use num::integer::lcm;
use num::{One, Signed, Zero};

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn zeros(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn add_scaled(v: &mut [Rat], w: &[Rat], c: &Rat) {
    for (x, y) in v.iter_mut().zip(w) {
        *x += y * c;
    }
}

/// Solves the square system A x = b by Bareiss fraction-free elimination on
/// the denominator-cleared integer matrix.
pub fn solve_square(a: &[Vec<Rat>], b: &[Rat]) -> Result<Vec<Rat>, LinalgError> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(LinalgError::DimensionMismatch(format!(
            "square solve of size {n}"
        )));
    }
    if n == 0 {
        return Ok(vec![]);
    }
    // clear denominators row by row; augmented integer matrix [A | b]
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for (row, rhs) in a.iter().zip(b) {
        let mut denom = rhs.denom().clone();
        for x in row {
            denom = lcm(denom, x.denom().clone());
        }
        let mut int_row: Vec<BigInt> = row
            .iter()
            .map(|x| x.numer() * (&denom / x.denom()))
            .collect();
        int_row.push(rhs.numer() * (&denom / rhs.denom()));
        m.push(int_row);
    }
    // fraction-free forward elimination (Bareiss)
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let pivot = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match pivot {
                Some(r) => m.swap(k, r),
                None => return Err(LinalgError::Singular),
            }
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev; // exact by Bareiss
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    // back substitution over the rationals
    let mut x = vec![Rat::zero(); n];
    for k in (0..n).rev() {
        let mut acc = Rat::from(m[k][n].clone());
        for j in k + 1..n {
            acc -= Rat::from(m[k][j].clone()) * &x[j];
        }
        x[k] = acc / Rat::from(m[k][k].clone());
    }
    Ok(x)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Unique(Vec<Rat>),
    /// Index of a zero row of the RREF whose right-hand side is nonzero,
    /// together with the combination certificate is not tracked; the row index
    /// refers to the original equation order after elimination.
    Inconsistent { row: usize },
    Underdetermined,
}

/// Row-reduces the augmented rectangular system A x = b exactly and reports
/// uniqueness, inconsistency or underdetermination.
pub fn solve_general(a: &[Vec<Rat>], b: &[Rat]) -> Result<SolveOutcome, LinalgError> {
    let rows = a.len();
    if b.len() != rows {
        return Err(LinalgError::DimensionMismatch("rhs length".into()));
    }
    let cols = a.first().map_or(0, |r| r.len());
    if a.iter().any(|r| r.len() != cols) {
        return Err(LinalgError::DimensionMismatch("ragged matrix".into()));
    }
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, cols);
    for (i, row) in m.iter().enumerate() {
        if row[..cols].iter().all(|x| x.is_zero()) && !row[cols].is_zero() {
            return Ok(SolveOutcome::Inconsistent { row: i });
        }
    }
    if pivots.len() < cols {
        return Ok(SolveOutcome::Underdetermined);
    }
    let mut x = vec![Rat::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Ok(SolveOutcome::Unique(x))
}

/// In-place reduced row echelon form of the first `cols` columns (extra
/// columns are carried along). Returns the pivot column per pivot row.
fn rref(m: &mut Vec<Vec<Rat>>, cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone().recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (head, tail) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&mut a[i], &b[0])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&mut b[0], &a[r])
                };
                for (x, y) in head.iter_mut().zip(tail.iter()) {
                    *x -= y * &f;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(a: &[Vec<Rat>]) -> usize {
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    rref(&mut m, cols).len()
}

/// Basis of the right nullspace { x : A x = 0 }, one vector per free column,
/// ordered by free-column index.
pub fn nullspace(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let pivots = rref(&mut m, cols);
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Determinant sign test helper: exact positivity of all leading principal
/// minors (Sylvester criterion for positive definiteness).
pub fn is_positive_definite(a: &[Vec<Rat>]) -> bool {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return false;
    }
    for k in 1..=n {
        let minor: Vec<Vec<Rat>> = a[..k].iter().map(|r| r[..k].to_vec()).collect();
        if !determinant(&minor).is_positive() {
            return false;
        }
    }
    true
}

pub fn determinant(a: &[Vec<Rat>]) -> Rat {
    let n = a.len();
    if n == 0 {
        return Rat::one();
    }
    let mut m = a.to_vec();
    let mut det = Rat::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Rat::zero();
        };
        if p != k {
            m.swap(k, p);
            det = -det;
        }
        det *= m[k][k].clone();
        let inv = m[k][k].clone().recip();
        for i in k + 1..n {
            let f = m[i][k].clone() * &inv;
            let (top, bottom) = m.split_at_mut(i);
            for (x, y) in bottom[0].iter_mut().zip(top[k].iter()) {
                *x -= y * &f;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat;

    fn mat(rows: &[&[(i64, i64)]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&(n, d)| rat(n, d)).collect())
            .collect()
    }

    #[test]
    fn square_solve_exact() {
        let a = mat(&[
            &[(2, 1), (1, 1)],
            &[(1, 3), (1, 1)],
        ]);
        let b = vec![rat(5, 1), rat(2, 1)];
        let x = solve_square(&a, &b).unwrap();
        assert_eq!(x, vec![rat(9, 5), rat(7, 5)]);
    }

    #[test]
    fn square_solve_singular() {
        let a = mat(&[&[(1, 1), (2, 1)], &[(2, 1), (4, 1)]]);
        assert_eq!(
            solve_square(&a, &[rat(1, 1), rat(2, 1)]),
            Err(LinalgError::Singular)
        );
    }

    #[test]
    fn general_solve_outcomes() {
        let a = mat(&[&[(1, 1), (0, 1)], &[(0, 1), (1, 1)], &[(1, 1), (1, 1)]]);
        assert_eq!(
            solve_general(&a, &[rat(2, 1), rat(3, 1), rat(5, 1)]).unwrap(),
            SolveOutcome::Unique(vec![rat(2, 1), rat(3, 1)])
        );
        assert!(matches!(
            solve_general(&a, &[rat(2, 1), rat(3, 1), rat(4, 1)]).unwrap(),
            SolveOutcome::Inconsistent { .. }
        ));
        let wide = mat(&[&[(1, 1), (1, 1)]]);
        assert_eq!(
            solve_general(&wide, &[rat(1, 1)]).unwrap(),
            SolveOutcome::Underdetermined
        );
    }

    #[test]
    fn nullspace_of_difference_covectors() {
        // rows e_i - e_{i+1} for n = 3: nullspace = span (1,1,1)
        let a = mat(&[&[(1, 1), (-1, 1), (0, 1)], &[(0, 1), (1, 1), (-1, 1)]]);
        let ns = nullspace(&a);
        assert_eq!(ns, vec![vec![rat(1, 1), rat(1, 1), rat(1, 1)]]);
        assert_eq!(rank(&a), 2);
    }

    #[test]
    fn positive_definiteness() {
        assert!(is_positive_definite(&mat(&[
            &[(2, 1), (0, 1)],
            &[(0, 1), (2, 1)]
        ])));
        assert!(!is_positive_definite(&mat(&[
            &[(1, 1), (2, 1)],
            &[(2, 1), (1, 1)]
        ])));
    }

    #[test]
    fn determinant_values() {
        assert_eq!(
            determinant(&mat(&[&[(1, 1), (2, 1)], &[(3, 1), (4, 1)]])),
            rat(-2, 1)
        );
        assert_eq!(
            determinant(&mat(&[&[(1, 1), (2, 1)], &[(2, 1), (4, 1)]])),
            rat(0, 1)
        );
    }
}
