//! Polynomial solutions of first-order linear ODEs
//! a(x) w' + b(x) w = g(x), with g allowed to depend affinely on unknown
//! scalar parameters.
//!
//! The right-hand side is g0 + sum_k lambda_k * g_k with the lambda_k
//! unknown. The solver bounds the degree of any polynomial solution by
//! leading-coefficient analysis, sets up the joint linear system in the
//! coefficients of w and the lambda_k, and returns the exact affine
//! solution set. An `Empty` verdict certifies nonexistence at all degrees:
//! the degree bound is exact over Q(i), so no margin is needed.

use crate::error::{CoreError, Result};
use crate::linalg::{linear_solve_exact, SolutionSet};
use crate::poly::{Deg, UPoly};
use crate::scalar::QGauss;

/// a(x) w' + b(x) w = g0(x) + sum_k lambda_k g_k(x), a != 0.
#[derive(Clone, Debug)]
pub struct LinOde {
    pub a: UPoly,
    pub b: UPoly,
    pub g0: UPoly,
    pub g_params: Vec<UPoly>,
}

impl LinOde {
    pub fn new(a: UPoly, b: UPoly, g0: UPoly) -> Result<Self> {
        Self::with_params(a, b, g0, vec![])
    }

    pub fn with_params(a: UPoly, b: UPoly, g0: UPoly, g_params: Vec<UPoly>) -> Result<Self> {
        if a.is_zero() {
            return Err(CoreError::InvalidParameter(
                "zero coefficient of w' in linear ODE".into(),
            ));
        }
        Ok(LinOde { a, b, g0, g_params })
    }

    /// Residual a w' + b w - g0 - sum lambda_k g_k for a joint candidate.
    fn residual(&self, w: &UPoly, lambda: &[QGauss], include_g0: bool) -> UPoly {
        let mut res = &(&self.a * &w.derivative()) + &(&self.b * w);
        if include_g0 {
            res = &res - &self.g0;
        }
        for (gk, lk) in self.g_params.iter().zip(lambda.iter()) {
            res = &res - &gk.scale(lk);
        }
        res
    }
}

/// One point of the joint (w, lambda) solution space.
#[derive(Clone, Debug, PartialEq)]
pub struct JointSolution {
    pub w: UPoly,
    pub lambda: Vec<QGauss>,
}

/// Affine set of polynomial solutions.
///
/// `Empty` means: no solution at all for an inhomogeneous equation, and no
/// nonzero solution for a homogeneous one.
#[derive(Clone, Debug)]
pub enum PolySolutionSet {
    Empty,
    Solutions {
        particular: JointSolution,
        basis: Vec<JointSolution>,
    },
}

impl PolySolutionSet {
    pub fn is_empty(&self) -> bool {
        matches!(self, PolySolutionSet::Empty)
    }
}

/// Candidate maximum degree of a polynomial solution.
///
/// Candidates are rhs_degree - max(deg a - 1, deg b), plus, when
/// deg b = deg a - 1 and n* = -lc(b)/lc(a) is a nonnegative integer, also
/// n* (the leading terms of a w' and b w then cancel at degree n*).
/// Returns None when no candidate is a nonnegative integer.
pub fn degree_bound(a: &UPoly, b: &UPoly, rhs_degree: Deg) -> Result<Option<usize>> {
    let Deg::Fin(da) = a.degree() else {
        return Err(CoreError::InvalidParameter(
            "zero coefficient of w' in degree bound".into(),
        ));
    };
    let mut candidates: Vec<usize> = Vec::new();

    if let Deg::Fin(rhs) = rhs_degree {
        let lead_deg = match b.degree() {
            Deg::Fin(db) => (da as i64 - 1).max(db as i64),
            Deg::NegInf => da as i64 - 1,
        };
        let c1 = rhs as i64 - lead_deg;
        if c1 >= 0 {
            candidates.push(c1 as usize);
        }
    }

    if let Deg::Fin(db) = b.degree() {
        if da >= 1 && db == da - 1 {
            let ratio = -&(&b.lc().unwrap().clone() / a.lc().unwrap());
            if let Some(n) = ratio.as_nonneg_integer() {
                candidates.push(n);
            }
        }
    }

    Ok(candidates.into_iter().max())
}

/// Computes the full affine set of polynomial solutions of `ode`.
pub fn poly_solutions(ode: &LinOde) -> Result<PolySolutionSet> {
    let homogeneous_rhs =
        ode.g0.is_zero() && ode.g_params.iter().all(|g| g.is_zero());

    // Degenerate case: a w' = 0 with b = 0 has exactly the constants.
    if ode.b.is_zero() && homogeneous_rhs {
        let mut basis = vec![JointSolution {
            w: UPoly::one(),
            lambda: vec![QGauss::zero(); ode.g_params.len()],
        }];
        for k in 0..ode.g_params.len() {
            let mut lambda = vec![QGauss::zero(); ode.g_params.len()];
            lambda[k] = QGauss::one();
            basis.push(JointSolution {
                w: UPoly::zero(),
                lambda,
            });
        }
        return Ok(PolySolutionSet::Solutions {
            particular: JointSolution {
                w: UPoly::zero(),
                lambda: vec![QGauss::zero(); ode.g_params.len()],
            },
            basis,
        });
    }

    let rhs_deg = {
        let mut d = ode.g0.degree();
        for g in &ode.g_params {
            if let Deg::Fin(dg) = g.degree() {
                d = match d {
                    Deg::Fin(cur) => Deg::Fin(cur.max(dg)),
                    Deg::NegInf => Deg::Fin(dg),
                };
            }
        }
        d
    };

    // A degree-0 solution can exist even when the leading-term analysis
    // yields no candidate (the w' term drops out), so always try constants.
    let max_deg = degree_bound(&ode.a, &ode.b, rhs_deg)?.unwrap_or(0);

    let n_w = max_deg + 1;
    let n_params = ode.g_params.len();
    let cols = n_w + n_params;

    // Column polynomials: a * (x^i)' + b * x^i for w_i, -g_k for lambda_k.
    let mut col_polys: Vec<UPoly> = Vec::with_capacity(cols);
    for i in 0..n_w {
        let d_term = if i == 0 {
            UPoly::zero()
        } else {
            ode.a.scale(&QGauss::from_int(i as i64)).shift_up(i - 1)
        };
        col_polys.push(&d_term + &ode.b.shift_up(i));
    }
    for g in &ode.g_params {
        col_polys.push(-g);
    }

    let nrows = col_polys
        .iter()
        .chain(std::iter::once(&ode.g0))
        .filter_map(|p| p.degree().finite())
        .max()
        .map_or(1, |d| d + 1);

    let matrix: Vec<Vec<QGauss>> = (0..nrows)
        .map(|row| col_polys.iter().map(|p| p.coeff(row)).collect())
        .collect();
    let rhs: Vec<QGauss> = (0..nrows).map(|row| ode.g0.coeff(row)).collect();

    let SolutionSet {
        particular,
        nullspace,
    } = linear_solve_exact(&matrix, &rhs)?;

    let Some(part) = particular else {
        return Ok(PolySolutionSet::Empty);
    };

    let split = |v: &[QGauss]| -> JointSolution {
        JointSolution {
            w: UPoly::from_coeffs(v[..n_w].to_vec()),
            lambda: v[n_w..].to_vec(),
        }
    };
    let particular = split(&part);
    let basis: Vec<JointSolution> = nullspace.iter().map(|v| split(v)).collect();

    if !ode.residual(&particular.w, &particular.lambda, true).is_zero() {
        return Err(CoreError::Internal(
            "linear ODE particular solution failed verification".into(),
        ));
    }
    for dir in &basis {
        if !ode.residual(&dir.w, &dir.lambda, false).is_zero() {
            return Err(CoreError::Internal(
                "linear ODE homogeneous direction failed verification".into(),
            ));
        }
    }

    // Without parameters, a homogeneous equation whose only solution is
    // w = 0 has no polynomial solutions in the sense used by the search.
    if n_params == 0 && ode.g0.is_zero() && basis.is_empty() {
        return Ok(PolySolutionSet::Empty);
    }

    Ok(PolySolutionSet::Solutions { particular, basis })
}
