//! Exact dense linear solving over Q(i).
//!
//! Every coefficient-comparison system in the analysis reduces to
//! [`linear_solve_exact`]. Elimination uses exact rational pivoting with
//! largest-numerator pivot selection to control fraction growth at this
//! scale.

use crate::error::{CoreError, Result};
use crate::scalar::QGauss;

/// Affine solution set of A*x = b.
#[derive(Clone, Debug)]
pub struct SolutionSet {
    /// One solution, or None when the system is inconsistent.
    pub particular: Option<Vec<QGauss>>,
    /// Basis of the homogeneous nullspace.
    pub nullspace: Vec<Vec<QGauss>>,
}

impl SolutionSet {
    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }
}

/// Solves A*x = b exactly; returns the full affine solution set.
pub fn linear_solve_exact(a: &[Vec<QGauss>], b: &[QGauss]) -> Result<SolutionSet> {
    let rows = a.len();
    if rows != b.len() {
        return Err(CoreError::DimensionMismatch(format!(
            "matrix has {rows} rows but rhs has {}",
            b.len()
        )));
    }
    let cols = a.first().map_or(0, |r| r.len());
    for (i, row) in a.iter().enumerate() {
        if row.len() != cols {
            return Err(CoreError::DimensionMismatch(format!(
                "row {i} has {} entries, expected {cols}",
                row.len()
            )));
        }
    }

    // Augmented matrix [A | b], reduced to RREF.
    let mut m: Vec<Vec<QGauss>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        let pivot_row = (row..rows)
            .filter(|&r| !m[r][col].is_zero())
            .max_by_key(|&r| m[r][col].numerator_score());
        let Some(p) = pivot_row else { continue };
        m.swap(row, p);
        let inv = m[row][col].inv()?;
        for entry in m[row].iter_mut() {
            *entry = &*entry * &inv;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=cols {
                    let t = &factor * &m[row][c];
                    m[r][c] = &m[r][c] - &t;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }

    // Inconsistency: a zero row of A with nonzero rhs.
    for r in row..rows {
        if !m[r][cols].is_zero() {
            return Ok(SolutionSet {
                particular: None,
                nullspace: vec![],
            });
        }
    }

    let mut particular = vec![QGauss::zero(); cols];
    for (i, &pc) in pivot_cols.iter().enumerate() {
        particular[pc] = m[i][cols].clone();
    }

    let mut nullspace = Vec::new();
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; cols];
        for &pc in &pivot_cols {
            v[pc] = true;
        }
        v
    };
    for free in 0..cols {
        if pivot_set[free] {
            continue;
        }
        let mut vec_dir = vec![QGauss::zero(); cols];
        vec_dir[free] = QGauss::one();
        for (i, &pc) in pivot_cols.iter().enumerate() {
            vec_dir[pc] = -&m[i][free];
        }
        nullspace.push(vec_dir);
    }

    Ok(SolutionSet {
        particular: Some(particular),
        nullspace,
    })
}

/// Rank of a matrix over Q(i).
pub fn rank(a: &[Vec<QGauss>]) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<QGauss>> = a.to_vec();
    let mut rk = 0usize;
    for col in 0..cols {
        let pivot_row = (rk..rows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot_row else { continue };
        m.swap(rk, p);
        let inv = m[rk][col].inv().expect("nonzero pivot");
        for entry in m[rk].iter_mut() {
            *entry = &*entry * &inv;
        }
        for r in (rk + 1)..rows {
            if !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let t = &factor * &m[rk][c];
                    m[r][c] = &m[r][c] - &t;
                }
            }
        }
        rk += 1;
        if rk == rows {
            break;
        }
    }
    rk
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> QGauss {
        QGauss::from_int(n)
    }

    #[test]
    fn unique_solution() {
        let a = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        let b = vec![q(2), q(3)];
        let s = linear_solve_exact(&a, &b).unwrap();
        assert_eq!(s.particular, Some(vec![q(2), q(3)]));
        assert!(s.nullspace.is_empty());
    }

    #[test]
    fn one_dimensional_affine_set() {
        let a = vec![vec![q(1), q(1)]];
        let b = vec![q(0)];
        let s = linear_solve_exact(&a, &b).unwrap();
        assert_eq!(s.particular, Some(vec![q(0), q(0)]));
        assert_eq!(s.nullspace.len(), 1);
        let dir = &s.nullspace[0];
        assert_eq!(&dir[0] + &dir[1], q(0));
        assert!(!dir[0].is_zero());
    }

    #[test]
    fn inconsistent_system() {
        let a = vec![vec![q(1)], vec![q(1)]];
        let b = vec![q(0), q(1)];
        let s = linear_solve_exact(&a, &b).unwrap();
        assert!(s.is_empty());
        let ab = vec![vec![q(1), q(0)], vec![q(1), q(1)]];
        assert!(rank(&a) < rank(&ab));
    }

    #[test]
    fn dimension_mismatch() {
        let a = vec![vec![q(1), q(2)]];
        let b = vec![q(1), q(2)];
        assert!(linear_solve_exact(&a, &b).is_err());
    }

    #[test]
    fn complex_entries() {
        // (1+i) x = 2i  =>  x = 1+i
        let one_plus_i = &q(1) + &QGauss::i();
        let two_i = &q(2) * &QGauss::i();
        let s = linear_solve_exact(&[vec![one_plus_i.clone()]], &[two_i]).unwrap();
        assert_eq!(s.particular, Some(vec![one_plus_i]));
    }
}
