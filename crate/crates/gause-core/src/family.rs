//! Affine families of polynomials and scalars over a space of free
//! parameters.
//!
//! The stratum chains solve one linear ODE per y-level; each solve changes
//! the free-parameter space, and everything solved so far is rewritten in
//! the new coordinates. A family value is base + sum_j t_j * dirs[j] with
//! t the current free parameters.

use crate::error::Result;
use crate::linalg::linear_solve_exact;
use crate::poly::UPoly;
use crate::scalar::QGauss;

/// Affine change of parameter space: old = particular + sum_j t_j basis[j].
#[derive(Clone, Debug)]
pub(crate) struct Reparam {
    pub particular: Vec<QGauss>,
    pub basis: Vec<Vec<QGauss>>,
}

impl Reparam {
    pub fn new_dim(&self) -> usize {
        self.basis.len()
    }
}

/// Polynomial depending affinely on the free parameters.
#[derive(Clone, Debug)]
pub(crate) struct ParamPoly {
    pub base: UPoly,
    pub dirs: Vec<UPoly>,
}

impl ParamPoly {
    pub fn fixed(p: UPoly, dim: usize) -> Self {
        ParamPoly {
            base: p,
            dirs: vec![UPoly::zero(); dim],
        }
    }

    pub fn realize(&self, t: &[QGauss]) -> UPoly {
        let mut out = self.base.clone();
        for (ti, di) in t.iter().zip(self.dirs.iter()) {
            out = &out + &di.scale(ti);
        }
        out
    }

    pub fn derivative(&self) -> ParamPoly {
        ParamPoly {
            base: self.base.derivative(),
            dirs: self.dirs.iter().map(|d| d.derivative()).collect(),
        }
    }

    pub fn mul_upoly(&self, p: &UPoly) -> ParamPoly {
        ParamPoly {
            base: &self.base * p,
            dirs: self.dirs.iter().map(|d| d * p).collect(),
        }
    }

    pub fn add(&self, other: &ParamPoly) -> ParamPoly {
        debug_assert_eq!(self.dirs.len(), other.dirs.len());
        ParamPoly {
            base: &self.base + &other.base,
            dirs: self
                .dirs
                .iter()
                .zip(other.dirs.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn reparam(&self, r: &Reparam) -> ParamPoly {
        let mut base = self.base.clone();
        for (coef, dir) in r.particular.iter().zip(self.dirs.iter()) {
            base = &base + &dir.scale(coef);
        }
        let dirs = r
            .basis
            .iter()
            .map(|b| {
                let mut d = UPoly::zero();
                for (coef, dir) in b.iter().zip(self.dirs.iter()) {
                    d = &d + &dir.scale(coef);
                }
                d
            })
            .collect();
        ParamPoly { base, dirs }
    }
}

/// Scalar depending affinely on the free parameters.
#[derive(Clone, Debug)]
pub(crate) struct ParamScalar {
    pub base: QGauss,
    pub dirs: Vec<QGauss>,
}

impl ParamScalar {
    pub fn realize(&self, t: &[QGauss]) -> QGauss {
        let mut out = self.base.clone();
        for (ti, di) in t.iter().zip(self.dirs.iter()) {
            out = &out + &(di * ti);
        }
        out
    }

    pub fn reparam(&self, r: &Reparam) -> ParamScalar {
        let mut base = self.base.clone();
        for (coef, dir) in r.particular.iter().zip(self.dirs.iter()) {
            base = &base + &(dir * coef);
        }
        let dirs = r
            .basis
            .iter()
            .map(|b| {
                let mut d = QGauss::zero();
                for (coef, dir) in b.iter().zip(self.dirs.iter()) {
                    d = &d + &(dir * coef);
                }
                d
            })
            .collect();
        ParamScalar { base, dirs }
    }

    /// The value this scalar is forced to take, if the family is constant.
    pub fn forced_value(&self) -> Option<QGauss> {
        if self.dirs.iter().all(|d| d.is_zero()) {
            Some(self.base.clone())
        } else {
            None
        }
    }
}

/// Imposes expr == 0 (coefficientwise) for each expression; returns the
/// affine solution set over the free parameters, or None when infeasible.
pub(crate) fn solve_zero_constraints(exprs: &[ParamPoly], dim: usize) -> Result<Option<Reparam>> {
    let mut rows: Vec<Vec<QGauss>> = Vec::new();
    let mut rhs: Vec<QGauss> = Vec::new();
    for e in exprs {
        let max_len = e
            .dirs
            .iter()
            .chain(std::iter::once(&e.base))
            .map(|p| p.coeffs().len())
            .max()
            .unwrap_or(0);
        for i in 0..max_len {
            rows.push(e.dirs.iter().map(|d| d.coeff(i)).collect());
            rhs.push(-&e.base.coeff(i));
        }
    }
    if rows.is_empty() {
        // No constraints: identity reparametrization.
        return Ok(Some(identity_reparam(dim)));
    }
    let sol = linear_solve_exact(&rows, &rhs)?;
    match sol.particular {
        None => Ok(None),
        Some(p) => Ok(Some(Reparam {
            particular: p,
            basis: sol.nullspace,
        })),
    }
}

pub(crate) fn identity_reparam(dim: usize) -> Reparam {
    Reparam {
        particular: vec![QGauss::zero(); dim],
        basis: (0..dim)
            .map(|j| {
                let mut v = vec![QGauss::zero(); dim];
                v[j] = QGauss::one();
                v
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constraint_solving_reparametrizes() {
        // Family f(t1, t2) = x + t1 * 1 + t2 * x; impose f == 0 coefficientwise:
        // t1 = 0, t2 = -1.
        let f = ParamPoly {
            base: UPoly::x(),
            dirs: vec![UPoly::one(), UPoly::x()],
        };
        let r = solve_zero_constraints(&[f.clone()], 2).unwrap().unwrap();
        assert_eq!(r.new_dim(), 0);
        let g = f.reparam(&r);
        assert!(g.base.is_zero());

        // Infeasible: 1 + t * 0 == 0.
        let bad = ParamPoly {
            base: UPoly::one(),
            dirs: vec![UPoly::zero()],
        };
        assert!(solve_zero_constraints(&[bad], 1).unwrap().is_none());
    }

    #[test]
    fn scalar_family_forced_value() {
        let s = ParamScalar {
            base: QGauss::from_int(-2),
            dirs: vec![QGauss::zero()],
        };
        assert_eq!(s.forced_value(), Some(QGauss::from_int(-2)));
        let free = ParamScalar {
            base: QGauss::zero(),
            dirs: vec![QGauss::one()],
        };
        assert_eq!(free.forced_value(), None);
    }
}
