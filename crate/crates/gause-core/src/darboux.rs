//! Darboux polynomial search and verification for the reduced Gause fields.
//!
//! A polynomial f is invariant for the field L = p d/dx + q d/dy when
//! L[f] = c f with a polynomial cofactor c; for these fields any cofactor
//! has y-degree at most 1, written P(x) + Q(x) y.
//!
//! The search enumerates candidates stratum by stratum. Writing
//! f = sum_j X_j(x) y^j, comparison of y-powers in L[f] = c f forces the
//! top stratum to const * x^n (V1) or const (V2), the lowest stratum to a
//! product of irreducible factors of Pi_{m+2}, and ties consecutive strata
//! by first-order linear ODEs solved exactly by `linode`. Every candidate
//! that survives is re-verified by exact division.

use serde::Serialize;
use std::fmt;

use crate::error::{CoreError, Result};
use crate::family::{solve_zero_constraints, ParamPoly, Reparam};
use crate::linode::{poly_solutions, LinOde, PolySolutionSet};
use crate::model::{pi_m2, ExactParams, FieldKind, PlanarField};
use crate::poly::{Deg, UPoly, YPoly};
use crate::scalar::QGauss;

/// Cofactor P(x) + Q(x) y.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cofactor {
    pub p: UPoly,
    pub q: UPoly,
}

impl Cofactor {
    pub fn zero() -> Self {
        Cofactor {
            p: UPoly::zero(),
            q: UPoly::zero(),
        }
    }

    pub fn to_ypoly(&self) -> YPoly {
        YPoly::from_strata(vec![self.p.clone(), self.q.clone()])
    }

    pub fn from_ypoly(c: &YPoly) -> Option<Self> {
        match c.deg_y() {
            Deg::Fin(d) if d > 1 => None,
            _ => Some(Cofactor {
                p: c.stratum(0),
                q: c.stratum(1),
            }),
        }
    }
}

impl fmt::Display for Cofactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*y", self.p, self.q)
    }
}

/// A verified invariant polynomial with its cofactor.
#[derive(Clone, Debug, Serialize)]
pub struct DarbouxCertificate {
    pub f: YPoly,
    pub cofactor: Cofactor,
    pub irreducible_factors: Vec<(YPoly, u32)>,
    pub verified: bool,
}

/// L[f] = p df/dx + q df/dy, exactly.
pub fn apply_field(field: &PlanarField, f: &YPoly) -> YPoly {
    &field.p.mul_ypoly(&f.partial_x()) + &field.q.mul_ypoly(&f.partial_y())
}

/// Exact invariance check: returns the cofactor iff f divides L[f].
pub fn verify_darboux(field: &PlanarField, f: &YPoly) -> Result<Option<Cofactor>> {
    if f.is_zero() {
        return Err(CoreError::InvalidParameter(
            "cannot verify the zero polynomial".into(),
        ));
    }
    let lf = apply_field(field, f);
    match lf.div_exact(f) {
        None => Ok(None),
        Some(c) => {
            let cof = Cofactor::from_ypoly(&c).ok_or_else(|| {
                CoreError::Internal("cofactor with y-degree above 1".into())
            })?;
            Ok(Some(cof))
        }
    }
}

/// Distinct monic irreducible factors of Pi_{m+2} over Q(i).
///
/// x^m + beta is split for m = 1, for m = 2 when -beta is a square in Q(i),
/// and is otherwise kept as a single block (documented limitation of the
/// exact search).
pub fn irreducible_pi_factors(params: &ExactParams) -> Vec<UPoly> {
    let mut factors = vec![
        UPoly::x(),
        &UPoly::x() - &UPoly::constant(params.k.clone()),
    ];
    if params.beta.is_zero() {
        // Pi degenerates to x^{m+1} (x - k); no new factors.
    } else {
        match params.m {
            1 => factors.push(&UPoly::x() + &UPoly::constant(params.beta.clone())),
            2 => {
                if let Some(t) = (-&params.beta).sqrt_exact() {
                    factors.push(&UPoly::x() - &UPoly::constant(t.clone()));
                    factors.push(&UPoly::x() + &UPoly::constant(t));
                } else {
                    let mut block = UPoly::monomial(QGauss::one(), 2);
                    block = &block + &UPoly::constant(params.beta.clone());
                    factors.push(block);
                }
            }
            m => {
                let mut block = UPoly::monomial(QGauss::one(), m as usize);
                block = &block + &UPoly::constant(params.beta.clone());
                factors.push(block);
            }
        }
    }
    let mut out: Vec<UPoly> = Vec::new();
    for f in factors {
        let f = f.monic();
        if f.degree() != Deg::NegInf && f.degree() != Deg::Fin(0) && !out.contains(&f) {
            out.push(f);
        }
    }
    out
}

/// Factor base for the lowest stratum of a chain candidate.
fn chain_factor_base(field: &PlanarField) -> Vec<UPoly> {
    match field.kind {
        FieldKind::V2 => vec![
            UPoly::x(),
            &UPoly::x() - &UPoly::constant(field.params.k.clone()),
        ],
        _ => irreducible_pi_factors(&field.params),
    }
}

struct ChainContext {
    /// Coefficient of X_j' in the level equation.
    a: UPoly,
    /// Per-level multiplier: q-tilde for V1, (alpha c - gamma) for V2.
    level_mul: UPoly,
    /// (r/k) Pi X0'/X0, computed exactly from the multiplicity vector.
    log_term: UPoly,
    /// Multiplier of X_{j-1}' on the right-hand side.
    rhs_deriv_mul: UPoly,
    /// Q(x): multiplier of X_{j-1} on the right-hand side.
    q_poly: UPoly,
}

/// Bounded search for Darboux polynomials of a V1/V2 field.
///
/// Enumerates top-stratum exponents n <= nmax, y-degrees M <= mmax, and
/// lowest strata built from irreducible factors of Pi with multiplicities
/// <= nmax, then solves the intermediate strata by linear-ODE chains. The
/// result is deduplicated into verified irreducible certificates.
pub fn darboux_search(
    field: &PlanarField,
    mmax: u32,
    nmax: u32,
) -> Result<Vec<DarbouxCertificate>> {
    match field.kind {
        FieldKind::V1 | FieldKind::V2 => {}
        FieldKind::ReducedC => {
            // q = 0 makes y a polynomial first integral.
            let y = YPoly::y();
            let cof = verify_darboux(field, &y)?
                .ok_or_else(|| CoreError::Internal("y must be invariant when q = 0".into()))?;
            return Ok(vec![DarbouxCertificate {
                irreducible_factors: vec![(y.clone(), 1)],
                f: y,
                cofactor: cof,
                verified: true,
            }]);
        }
        FieldKind::ReducedA | FieldKind::ReducedB => {
            return Err(CoreError::NotApplicable(
                "degenerate parameter class: use the exceptional-case first integral".into(),
            ));
        }
    }

    let params = &field.params;
    let mut candidates: Vec<YPoly> = Vec::new();

    // Single-stratum candidates x^n y^M (V1) and y^M (V2).
    for big_m in 0..=mmax {
        let n_range = if field.kind == FieldKind::V1 { nmax } else { 0 };
        for n in 0..=n_range {
            if n == 0 && big_m == 0 {
                continue;
            }
            candidates.push(YPoly::monomial(QGauss::one(), n as usize, big_m as usize));
        }
    }

    // Multi-stratum candidates from the level-by-level chains.
    let factors = chain_factor_base(field);
    let mut mult = vec![0u32; factors.len()];
    loop {
        for n in 0..=nmax {
            run_chain(field, &factors, &mult, n, mmax, &mut candidates)?;
        }
        // Next multiplicity vector.
        let mut i = 0;
        loop {
            if i == mult.len() {
                break;
            }
            if mult[i] < nmax {
                mult[i] += 1;
                break;
            }
            mult[i] = 0;
            i += 1;
        }
        if i == mult.len() {
            break;
        }
    }

    // Verify, factor, and deduplicate into irreducible certificates.
    let mut irreducibles: Vec<YPoly> = Vec::new();
    for cand in candidates {
        if cand.is_zero() || cand.total_degree() == Deg::Fin(0) {
            continue;
        }
        let Some(_cof) = verify_darboux(field, &cand)? else {
            return Err(CoreError::Internal(format!(
                "search produced a non-invariant candidate: {cand}"
            )));
        };
        for (factor, _mult) in factor_into_irreducibles(&cand, &factors) {
            let norm = factor.normalized();
            if norm.total_degree() == Deg::Fin(0) {
                continue;
            }
            if !irreducibles.contains(&norm) {
                irreducibles.push(norm);
            }
        }
    }
    irreducibles.sort_by_key(certificate_sort_key);

    let mut out = Vec::new();
    for f in irreducibles {
        let cof = verify_darboux(field, &f)?.ok_or_else(|| {
            CoreError::Internal("irreducible factor of an invariant failed verification".into())
        })?;
        // Verified cofactors stay within the degree budget of the field.
        if let (Deg::Fin(dc), Deg::Fin(df)) = (cof.to_ypoly().total_degree(), field_degree(field))
        {
            if dc + 1 > df {
                return Err(CoreError::Internal("cofactor degree exceeds field degree - 1".into()));
            }
        }
        out.push(DarbouxCertificate {
            irreducible_factors: vec![(f.clone(), 1)],
            f,
            cofactor: cof,
            verified: true,
        });
    }
    Ok(out)
}

fn field_degree(field: &PlanarField) -> Deg {
    match (field.p.total_degree(), field.q.total_degree()) {
        (Deg::Fin(a), Deg::Fin(b)) => Deg::Fin(a.max(b)),
        (Deg::Fin(a), Deg::NegInf) => Deg::Fin(a),
        (Deg::NegInf, d) => d,
    }
}

fn certificate_sort_key(f: &YPoly) -> (usize, usize, String) {
    (
        f.deg_y().finite().unwrap_or(0),
        f.deg_x().finite().unwrap_or(0),
        f.to_string(),
    )
}

/// Runs one stratum chain for a fixed lowest stratum and top exponent.
fn run_chain(
    field: &PlanarField,
    factors: &[UPoly],
    mult: &[u32],
    n: u32,
    mmax: u32,
    candidates: &mut Vec<YPoly>,
) -> Result<()> {
    let params = &field.params;
    let m = params.m as usize;
    let r_over_k = &params.r / &params.k;

    let mut x0 = UPoly::one();
    for (f, &c) in factors.iter().zip(mult.iter()) {
        for _ in 0..c {
            x0 = &x0 * f;
        }
    }

    // (r/k) * Pi * X0'/X0 = (r/k) * sum_i c_i (Pi / F_i) F_i'.
    let base_poly = match field.kind {
        FieldKind::V1 => pi_m2(params),
        _ => &UPoly::x() * &(&UPoly::x() - &UPoly::constant(params.k.clone())),
    };
    let mut log_sum = UPoly::zero();
    for (f, &c) in factors.iter().zip(mult.iter()) {
        if c == 0 {
            continue;
        }
        let quot = base_poly
            .div_exact(f)
            .ok_or_else(|| CoreError::Internal("factor must divide Pi".into()))?;
        let term = (&quot * &f.derivative()).scale(&QGauss::from_int(c as i64));
        log_sum = &log_sum + &term;
    }

    let ctx = match field.kind {
        FieldKind::V1 => {
            let ac_g = &(&params.alpha * &params.c) - &params.gamma;
            let q_tilde = &UPoly::monomial(ac_g, m)
                - &UPoly::constant(&params.gamma * &params.beta);
            ChainContext {
                a: -&base_poly.scale(&r_over_k),
                level_mul: q_tilde,
                log_term: log_sum.scale(&r_over_k),
                rhs_deriv_mul: UPoly::monomial(params.alpha.clone(), m),
                q_poly: UPoly::monomial(
                    -&(&QGauss::from_int(n as i64) * &params.alpha),
                    m - 1,
                ),
            }
        }
        FieldKind::V2 => {
            let ac_g = &(&params.alpha * &params.c) - &params.gamma;
            ChainContext {
                a: -&base_poly.scale(&r_over_k),
                level_mul: UPoly::constant(ac_g),
                log_term: log_sum.scale(&r_over_k),
                rhs_deriv_mul: UPoly::constant(params.alpha.clone()),
                q_poly: UPoly::zero(),
            }
        }
        _ => unreachable!("chains run only for V1/V2"),
    };

    let mut dim = 0usize;
    let mut strata: Vec<ParamPoly> = vec![ParamPoly::fixed(x0, dim)];

    for level in 1..=mmax {
        let prev = strata.last().unwrap();
        let rhs = prev
            .mul_upoly(&ctx.q_poly)
            .add(&prev.derivative().mul_upoly(&ctx.rhs_deriv_mul));

        let b_level = &ctx
            .level_mul
            .scale(&QGauss::from_int(level as i64))
            + &ctx.log_term;

        let ode = LinOde::with_params(ctx.a.clone(), b_level, rhs.base.clone(), rhs.dirs.clone())?;
        match poly_solutions(&ode)? {
            PolySolutionSet::Empty => {
                if rhs.base.is_zero() && rhs.dirs.iter().all(|d| d.is_zero()) {
                    // Homogeneous level with only the zero solution: the
                    // stratum vanishes and the chain continues.
                    strata.push(ParamPoly::fixed(UPoly::zero(), dim));
                } else {
                    return Ok(());
                }
            }
            PolySolutionSet::Solutions { particular, basis } => {
                let rep = Reparam {
                    particular: particular.lambda,
                    basis: basis.iter().map(|b| b.lambda.clone()).collect(),
                };
                for s in strata.iter_mut() {
                    *s = s.reparam(&rep);
                }
                dim = rep.new_dim();
                strata.push(ParamPoly {
                    base: particular.w,
                    dirs: basis.into_iter().map(|b| b.w).collect(),
                });
            }
        }

        harvest(field, &strata, dim, n, candidates)?;
    }
    Ok(())
}

/// Imposes the top-stratum form on a chain state and collects candidates.
fn harvest(
    field: &PlanarField,
    strata: &[ParamPoly],
    dim: usize,
    n: u32,
    candidates: &mut Vec<YPoly>,
) -> Result<()> {
    let top = strata.last().unwrap();
    // V1: x X_M' - n X_M = 0 (X_M = const x^n); V2: X_M' = 0.
    let constraint = match field.kind {
        FieldKind::V1 => top
            .derivative()
            .mul_upoly(&UPoly::x())
            .add(&top.mul_upoly(&UPoly::constant(QGauss::from_int(-(n as i64))))),
        _ => top.derivative(),
    };
    let Some(rep) = solve_zero_constraints(&[constraint], dim)? else {
        return Ok(());
    };
    let constrained: Vec<ParamPoly> = strata.iter().map(|s| s.reparam(&rep)).collect();
    let new_dim = rep.new_dim();

    let mut points: Vec<Vec<QGauss>> = vec![vec![QGauss::zero(); new_dim]];
    for j in 0..new_dim {
        let mut t = vec![QGauss::zero(); new_dim];
        t[j] = QGauss::one();
        points.push(t);
    }
    for t in points {
        let f = YPoly::from_strata(constrained.iter().map(|s| s.realize(&t)).collect());
        if !f.is_zero() {
            candidates.push(f);
        }
    }
    Ok(())
}

/// Splits a verified invariant into factors: monomial parts exactly, the
/// rest by trial division against the univariate factor base.
pub fn factor_into_irreducibles(f: &YPoly, factor_base: &[UPoly]) -> Vec<(YPoly, u32)> {
    let mut out: Vec<(YPoly, u32)> = Vec::new();
    let mut rest = f.clone();

    if let Some(v) = rest.y_valuation() {
        if v > 0 {
            rest = rest
                .div_exact(&YPoly::monomial(QGauss::one(), 0, v))
                .expect("y^v divides");
            out.push((YPoly::y(), v as u32));
        }
    }
    if let Some(v) = rest.x_factor_valuation() {
        if v > 0 {
            rest = rest
                .div_exact(&YPoly::monomial(QGauss::one(), v, 0))
                .expect("x^v divides");
            out.push((YPoly::x(), v as u32));
        }
    }
    for base in factor_base {
        if base.degree() == Deg::Fin(1) && base.coeff(0).is_zero() {
            continue; // x itself, already extracted
        }
        let lifted = YPoly::from_upoly(base.clone());
        let mut count = 0u32;
        while let Some(q) = rest.div_exact(&lifted) {
            rest = q;
            count += 1;
        }
        if count > 0 {
            out.push((lifted, count));
        }
    }
    if rest.total_degree() != Deg::Fin(0) && !rest.is_zero() {
        out.push((rest, 1));
    }
    out
}

/// Checks e^{f/g} against the exponential-factor identity
/// L[f] = f K_g + g K, with g itself a Darboux polynomial.
pub fn verify_exponential_factor(
    field: &PlanarField,
    f: &YPoly,
    g: &YPoly,
    cofactor: &Cofactor,
) -> Result<bool> {
    if g.is_zero() {
        return Err(CoreError::InvalidParameter(
            "exponential factor needs a nonzero denominator".into(),
        ));
    }
    if !strata_coprime(f, g) {
        return Err(CoreError::InvalidParameter(
            "numerator and denominator share a factor".into(),
        ));
    }
    let Some(kg) = verify_darboux(field, g)? else {
        return Ok(false);
    };
    let lhs = apply_field(field, f);
    let rhs = &f.mul_ypoly(&kg.to_ypoly()) + &g.mul_ypoly(&cofactor.to_ypoly());
    Ok(lhs == rhs)
}

/// Coprimality check at the stratum level: no shared power of x or y and
/// no common univariate content.
fn strata_coprime(f: &YPoly, g: &YPoly) -> bool {
    if f.is_zero() || g.is_zero() {
        return true;
    }
    if f.y_valuation().unwrap_or(0) > 0 && g.y_valuation().unwrap_or(0) > 0 {
        return false;
    }
    let content = |h: &YPoly| -> UPoly {
        let mut acc = UPoly::zero();
        for s in h.strata() {
            if !s.is_zero() {
                acc = if acc.is_zero() { s.clone() } else { acc.gcd(s) };
            }
        }
        acc
    };
    let common = content(f).gcd(&content(g));
    common.degree() == Deg::Fin(0)
}

/// Cofactor of x from the single-stratum analysis:
/// P = -(r/k)(x - k)(x^m + beta), Q = -alpha x^{m-1}.
pub fn axis_x_cofactor(params: &ExactParams) -> Cofactor {
    let r_over_k = &params.r / &params.k;
    let x_minus_k = &UPoly::x() - &UPoly::constant(params.k.clone());
    let mut xm_beta = UPoly::monomial(QGauss::one(), params.m as usize);
    xm_beta = &xm_beta + &UPoly::constant(params.beta.clone());
    Cofactor {
        p: -&(&x_minus_k * &xm_beta).scale(&r_over_k),
        q: UPoly::monomial(-&params.alpha, params.m as usize - 1),
    }
}

/// Cofactor of y: P = -gamma beta + (alpha c - gamma) x^m (V1), or
/// alpha c - gamma (V2); Q = 0.
pub fn axis_y_cofactor(params: &ExactParams, kind: FieldKind) -> Cofactor {
    let ac_g = &(&params.alpha * &params.c) - &params.gamma;
    let p = match kind {
        FieldKind::V2 => UPoly::constant(ac_g),
        _ => {
            &UPoly::monomial(ac_g, params.m as usize)
                - &UPoly::constant(&params.gamma * &params.beta)
        }
    };
    Cofactor {
        p,
        q: UPoly::zero(),
    }
}

/// Cofactor of the monomial x^{n1} y^{n2} for V1.
pub fn monomial_cofactor(params: &ExactParams, n1: u32, n2: u32) -> Cofactor {
    let cx = axis_x_cofactor(params);
    let cy = axis_y_cofactor(params, FieldKind::V1);
    Cofactor {
        p: &cx.p.scale(&QGauss::from_int(n1 as i64))
            + &cy.p.scale(&QGauss::from_int(n2 as i64)),
        q: cx.q.scale(&QGauss::from_int(n1 as i64)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::build_field_exact;

    fn fixture() -> ExactParams {
        ExactParams::from_ratios((1, 1), (1, 1), (1, 1), (1, 1), (1, 4), (1, 1), 1).unwrap()
    }

    fn v2_fixture() -> ExactParams {
        ExactParams::from_ratios((1, 1), (1, 1), (1, 1), (1, 1), (1, 2), (0, 1), 1).unwrap()
    }

    #[test]
    fn apply_field_basics() {
        let field = build_field_exact(&fixture()).unwrap();
        assert_eq!(apply_field(&field, &YPoly::x()), field.p);
        assert_eq!(apply_field(&field, &YPoly::y()), field.q);
        assert!(apply_field(&field, &YPoly::constant(QGauss::from_int(5))).is_zero());
    }

    #[test]
    fn verify_axes_and_reject_sum() {
        let field = build_field_exact(&fixture()).unwrap();
        let cx = verify_darboux(&field, &YPoly::x()).unwrap().unwrap();
        assert_eq!(cx, axis_x_cofactor(&fixture()));
        let cy = verify_darboux(&field, &YPoly::y()).unwrap().unwrap();
        assert_eq!(cy, axis_y_cofactor(&fixture(), FieldKind::V1));
        // x + y is not invariant for the generic fixture.
        let f = &YPoly::x() + &YPoly::y();
        assert!(verify_darboux(&field, &f).unwrap().is_none());
        assert!(verify_darboux(&field, &YPoly::zero()).is_err());
    }

    #[test]
    fn v2_axis_cofactor() {
        let field = build_field_exact(&v2_fixture()).unwrap();
        let cy = verify_darboux(&field, &YPoly::y()).unwrap().unwrap();
        // alpha c - gamma = 1/2
        assert_eq!(cy.p, UPoly::constant(QGauss::from_ratio(1, 2)));
        assert!(cy.q.is_zero());
    }

    #[test]
    fn search_finds_only_axes_on_generic_v1() {
        let field = build_field_exact(&fixture()).unwrap();
        let certs = darboux_search(&field, 3, 3).unwrap();
        assert_eq!(certs.len(), 2);
        assert_eq!(certs[0].f, YPoly::x());
        assert_eq!(certs[1].f, YPoly::y());
        assert_eq!(certs[0].cofactor, axis_x_cofactor(&fixture()));
        assert_eq!(certs[1].cofactor, axis_y_cofactor(&fixture(), FieldKind::V1));
    }

    #[test]
    fn search_finds_only_y_on_generic_v2() {
        let field = build_field_exact(&v2_fixture()).unwrap();
        let certs = darboux_search(&field, 3, 3).unwrap();
        assert_eq!(certs.len(), 1);
        assert_eq!(certs[0].f, YPoly::y());
        assert_eq!(
            certs[0].cofactor,
            axis_y_cofactor(&v2_fixture(), FieldKind::V2)
        );
    }

    #[test]
    fn reduced_c_yields_polynomial_first_integral() {
        let params =
            ExactParams::from_ratios((1, 1), (1, 1), (1, 1), (1, 1), (1, 1), (0, 1), 1).unwrap();
        let field = build_field_exact(&params).unwrap();
        assert_eq!(field.kind, FieldKind::ReducedC);
        let certs = darboux_search(&field, 3, 3).unwrap();
        assert_eq!(certs.len(), 1);
        assert_eq!(certs[0].f, YPoly::y());
        assert_eq!(certs[0].cofactor, Cofactor::zero());
    }

    #[test]
    fn monomial_closure_cofactors() {
        let params = fixture();
        let field = build_field_exact(&params).unwrap();
        for (n1, n2) in [(1u32, 0u32), (0, 1), (2, 1), (1, 3)] {
            let f = YPoly::monomial(QGauss::one(), n1 as usize, n2 as usize);
            let cof = verify_darboux(&field, &f).unwrap().unwrap();
            assert_eq!(cof, monomial_cofactor(&params, n1, n2));
        }
    }

    #[test]
    fn exponential_factor_checks() {
        let field = build_field_exact(&fixture()).unwrap();
        // Trivial factor e^0.
        assert!(verify_exponential_factor(
            &field,
            &YPoly::zero(),
            &YPoly::constant(QGauss::one()),
            &Cofactor::zero()
        )
        .unwrap());
        // Wrong cofactor for f = x, g = y fails the identity.
        let bad = Cofactor {
            p: UPoly::one(),
            q: UPoly::zero(),
        };
        assert!(!verify_exponential_factor(&field, &YPoly::x(), &YPoly::y(), &bad).unwrap());
        // Non-coprime input is an error.
        assert!(verify_exponential_factor(
            &field,
            &YPoly::monomial(QGauss::one(), 1, 1),
            &YPoly::x(),
            &Cofactor::zero()
        )
        .is_err());
    }

    #[test]
    fn exponential_factor_on_reduced_b() {
        // r = 0: f = x, g = 1 forces K = L[x] = -alpha x^m.
        let params =
            ExactParams::from_ratios((1, 1), (0, 1), (1, 1), (1, 1), (1, 2), (1, 1), 1).unwrap();
        let field = build_field_exact(&params).unwrap();
        assert_eq!(field.kind, FieldKind::ReducedB);
        let k = Cofactor {
            p: UPoly::from_i64(&[0, -1]),
            q: UPoly::zero(),
        };
        assert!(
            verify_exponential_factor(&field, &YPoly::x(), &YPoly::constant(QGauss::one()), &k)
                .unwrap()
        );
    }

    #[test]
    fn pi_factorization_modes() {
        let f = irreducible_pi_factors(&fixture());
        assert_eq!(f.len(), 3); // x, x-1, x+1

        // m = 2, beta = -4: x^2 - 4 splits rationally.
        let p =
            ExactParams::from_ratios((1, 1), (1, 1), (1, 1), (1, 1), (1, 4), (-4, 1), 2).unwrap();
        let f = irreducible_pi_factors(&p);
        assert_eq!(f.len(), 4);

        // m = 2, beta = 4: x^2 + 4 splits over Q(i) as (x - 2i)(x + 2i).
        let p =
            ExactParams::from_ratios((1, 1), (1, 1), (1, 1), (1, 1), (1, 4), (4, 1), 2).unwrap();
        let f = irreducible_pi_factors(&p);
        assert_eq!(f.len(), 4);

        // m = 2, beta = 2: x^2 + 2 stays a block.
        let p =
            ExactParams::from_ratios((1, 1), (1, 1), (1, 1), (1, 1), (1, 4), (2, 1), 2).unwrap();
        let f = irreducible_pi_factors(&p);
        assert_eq!(f.len(), 3);
        assert_eq!(f[2].degree(), Deg::Fin(2));
    }

    #[test]
    fn factorization_of_products() {
        let factors = irreducible_pi_factors(&fixture());
        // x^2 y (x - 1)
        let f = YPoly::from_upoly(&UPoly::from_i64(&[0, 0, 1]) * &UPoly::from_i64(&[-1, 1]))
            .mul_ypoly(&YPoly::y());
        let parts = factor_into_irreducibles(&f, &factors);
        let mut found_y = false;
        let mut found_x2 = false;
        let mut found_xm1 = false;
        for (p, mult) in parts {
            if p == YPoly::y() {
                found_y = mult == 1;
            } else if p == YPoly::x() {
                found_x2 = mult == 2;
            } else if p == YPoly::from_upoly(UPoly::from_i64(&[-1, 1])) {
                found_xm1 = mult == 1;
            }
        }
        assert!(found_y && found_x2 && found_xm1);
    }
}
