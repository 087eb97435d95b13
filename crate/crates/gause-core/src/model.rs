//! The generalized Gause predator-prey model: parameters, parameter-space
//! classification, the reduced polynomial vector fields, and the associated
//! Abel equation of the second kind.
//!
//! With Pi(x) = x(x-k)(x^m + beta), the polynomial fields are
//!
//!   V1 (beta != 0): p = -((r/k) Pi(x) + alpha x^m y),
//!                   q = (-gamma beta + (alpha c - gamma) x^m) y
//!   V2 (beta  = 0): p = -((r/k) x(x-k) + alpha y),
//!                   q = (alpha c - gamma) y
//!
//! and the degenerate parameter classes reduce to integrable fields handled
//! by `special`.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::fmt;

use crate::error::{CoreError, Result};
use crate::poly::{UPoly, YPoly};
use crate::scalar::{CScalar, QGauss};

/// The six scalar parameters plus the response exponent m.
#[derive(Clone, Debug, PartialEq)]
pub struct GauseParams<S> {
    pub alpha: S,
    pub r: S,
    pub c: S,
    pub k: S,
    pub gamma: S,
    pub beta: S,
    pub m: u32,
}

pub type ExactParams = GauseParams<QGauss>;
pub type NumericParams = GauseParams<CScalar>;

impl ExactParams {
    /// Convenience constructor from integer ratios, for fixtures.
    pub fn from_ratios(
        alpha: (i64, i64),
        r: (i64, i64),
        c: (i64, i64),
        k: (i64, i64),
        gamma: (i64, i64),
        beta: (i64, i64),
        m: u32,
    ) -> Result<Self> {
        let p = GauseParams {
            alpha: QGauss::from_ratio(alpha.0, alpha.1),
            r: QGauss::from_ratio(r.0, r.1),
            c: QGauss::from_ratio(c.0, c.1),
            k: QGauss::from_ratio(k.0, k.1),
            gamma: QGauss::from_ratio(gamma.0, gamma.1),
            beta: QGauss::from_ratio(beta.0, beta.1),
            m,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k.is_zero() {
            return Err(CoreError::InvalidParameter("k must be nonzero".into()));
        }
        if self.m < 1 {
            return Err(CoreError::InvalidParameter("m must be at least 1".into()));
        }
        Ok(())
    }

    pub fn to_numeric(&self) -> NumericParams {
        GauseParams {
            alpha: self.alpha.to_complex(),
            r: self.r.to_complex(),
            c: self.c.to_complex(),
            k: self.k.to_complex(),
            gamma: self.gamma.to_complex(),
            beta: self.beta.to_complex(),
            m: self.m,
        }
    }
}

impl NumericParams {
    pub fn validate(&self) -> Result<()> {
        if self.k.norm_sqr() == 0.0 {
            return Err(CoreError::InvalidParameter("k must be nonzero".into()));
        }
        if self.m < 1 {
            return Err(CoreError::InvalidParameter("m must be at least 1".into()));
        }
        let vals = [self.alpha, self.r, self.c, self.k, self.gamma, self.beta];
        if vals.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(CoreError::Numeric("non-finite parameter".into()));
        }
        Ok(())
    }
}

/// Parameters in exact or numeric mode.
///
/// Exact-only operations reject numeric-mode parameters with a clear error
/// instead of silently coercing.
#[derive(Clone, Debug)]
pub enum Params {
    Exact(ExactParams),
    Numeric(NumericParams),
}

impl Params {
    pub fn validate(&self) -> Result<()> {
        match self {
            Params::Exact(p) => p.validate(),
            Params::Numeric(p) => p.validate(),
        }
    }

    pub fn m(&self) -> u32 {
        match self {
            Params::Exact(p) => p.m,
            Params::Numeric(p) => p.m,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Params::Exact(_))
    }

    pub fn exact(&self) -> Result<&ExactParams> {
        match self {
            Params::Exact(p) => Ok(p),
            Params::Numeric(_) => Err(CoreError::ExactRequired(
                "operation needs exact rational parameters".into(),
            )),
        }
    }

    pub fn to_numeric(&self) -> NumericParams {
        match self {
            Params::Exact(p) => p.to_numeric(),
            Params::Numeric(p) => p.clone(),
        }
    }

    /// Parses the parameter-file JSON schema. Scalars given as "p/q"
    /// strings or {"re","im"} objects select exact mode; any float selects
    /// numeric mode for the whole parameter set.
    pub fn from_json(value: &serde_json::Value) -> Result<Params> {
        let obj = value
            .as_object()
            .ok_or_else(|| CoreError::Parse("parameter file must be a JSON object".into()))?;
        let m = obj
            .get("m")
            .ok_or_else(|| CoreError::Parse("missing field m".into()))?
            .as_u64()
            .ok_or_else(|| CoreError::Parse("m must be a positive integer".into()))?;
        if m < 1 {
            return Err(CoreError::InvalidParameter("m must be at least 1".into()));
        }

        enum Raw {
            Exact(QGauss),
            Numeric(f64),
        }
        let get = |name: &str| -> Result<Raw> {
            let v = obj
                .get(name)
                .ok_or_else(|| CoreError::Parse(format!("missing field {name}")))?;
            match v {
                serde_json::Value::String(s) => Ok(Raw::Exact(QGauss::parse_rational(s)?)),
                serde_json::Value::Object(_) => {
                    let q: QGauss = serde_json::from_value(v.clone())
                        .map_err(|e| CoreError::Parse(format!("field {name}: {e}")))?;
                    Ok(Raw::Exact(q))
                }
                serde_json::Value::Number(n) => {
                    let f = n
                        .as_f64()
                        .ok_or_else(|| CoreError::Parse(format!("field {name}: bad number")))?;
                    // Integers are exact regardless of spelling.
                    if f.fract() == 0.0 && f.abs() < 2f64.powi(53) {
                        Ok(Raw::Exact(QGauss::from_int(f as i64)))
                    } else {
                        Ok(Raw::Numeric(f))
                    }
                }
                _ => Err(CoreError::Parse(format!("field {name}: unsupported value"))),
            }
        };

        let names = ["alpha", "r", "c", "k", "gamma", "beta"];
        let raws: Vec<Raw> = names.iter().map(|n| get(n)).collect::<Result<_>>()?;
        let any_numeric = raws.iter().any(|r| matches!(r, Raw::Numeric(_)));
        let params = if any_numeric {
            let vals: Vec<CScalar> = raws
                .iter()
                .map(|r| match r {
                    Raw::Exact(q) => q.to_complex(),
                    Raw::Numeric(f) => CScalar::new(*f, 0.0),
                })
                .collect();
            Params::Numeric(GauseParams {
                alpha: vals[0],
                r: vals[1],
                c: vals[2],
                k: vals[3],
                gamma: vals[4],
                beta: vals[5],
                m: m as u32,
            })
        } else {
            let vals: Vec<QGauss> = raws
                .into_iter()
                .map(|r| match r {
                    Raw::Exact(q) => q,
                    Raw::Numeric(_) => unreachable!(),
                })
                .collect();
            Params::Exact(GauseParams {
                alpha: vals[0].clone(),
                r: vals[1].clone(),
                c: vals[2].clone(),
                k: vals[3].clone(),
                gamma: vals[4].clone(),
                beta: vals[5].clone(),
                m: m as u32,
            })
        };
        params.validate()?;
        Ok(params)
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(8))?;
        match self {
            Params::Exact(p) => {
                map.serialize_entry("mode", "exact")?;
                map.serialize_entry("alpha", &p.alpha)?;
                map.serialize_entry("r", &p.r)?;
                map.serialize_entry("c", &p.c)?;
                map.serialize_entry("k", &p.k)?;
                map.serialize_entry("gamma", &p.gamma)?;
                map.serialize_entry("beta", &p.beta)?;
                map.serialize_entry("m", &p.m)?;
            }
            Params::Numeric(p) => {
                map.serialize_entry("mode", "numeric")?;
                for (name, v) in [
                    ("alpha", p.alpha),
                    ("r", p.r),
                    ("c", p.c),
                    ("k", p.k),
                    ("gamma", p.gamma),
                    ("beta", p.beta),
                ] {
                    if v.im == 0.0 {
                        map.serialize_entry(name, &v.re)?;
                    } else {
                        map.serialize_entry(name, &[v.re, v.im])?;
                    }
                }
                map.serialize_entry("m", &p.m)?;
            }
        }
        map.end()
    }
}

/// Primary parameter class, with the raw A/B membership flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClassKind {
    /// In A \ B: the nonintegrable regime.
    Generic,
    /// alpha = 0 (outside A).
    CaseAAlphaZero,
    /// r = 0 (outside A).
    CaseBRZero,
    /// In B: alpha c - gamma = 0 and gamma beta = 0.
    CaseCInB,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamClass {
    pub kind: ClassKind,
    pub in_a: bool,
    pub in_b: bool,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassKind::Generic => "GENERIC_A_MINUS_B",
            ClassKind::CaseAAlphaZero => "CASE_A_ALPHA_ZERO",
            ClassKind::CaseBRZero => "CASE_B_R_ZERO",
            ClassKind::CaseCInB => "CASE_C_IN_B",
        };
        f.write_str(s)
    }
}

/// Classifies parameters against the sets A (r != 0, alpha != 0) and
/// B (alpha c - gamma = 0, gamma beta = 0).
///
/// Precedence for overlapping degenerate classes: alpha = 0, then r = 0,
/// then membership in B; the raw flags stay visible either way.
pub fn classify_params(params: &Params) -> Result<ParamClass> {
    params.validate()?;
    let (alpha_zero, r_zero, ac_minus_gamma_zero, gamma_beta_zero) = match params {
        Params::Exact(p) => (
            p.alpha.is_zero(),
            p.r.is_zero(),
            (&(&p.alpha * &p.c) - &p.gamma).is_zero(),
            (&p.gamma * &p.beta).is_zero(),
        ),
        Params::Numeric(p) => (
            p.alpha.norm_sqr() == 0.0,
            p.r.norm_sqr() == 0.0,
            (p.alpha * p.c - p.gamma).norm_sqr() == 0.0,
            (p.gamma * p.beta).norm_sqr() == 0.0,
        ),
    };
    let in_a = !alpha_zero && !r_zero;
    let in_b = ac_minus_gamma_zero && gamma_beta_zero;
    let kind = if alpha_zero {
        ClassKind::CaseAAlphaZero
    } else if r_zero {
        ClassKind::CaseBRZero
    } else if in_b {
        ClassKind::CaseCInB
    } else {
        ClassKind::Generic
    };
    Ok(ParamClass { kind, in_a, in_b })
}

/// Which polynomial vector field a parameter set induces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FieldKind {
    V1,
    V2,
    ReducedA,
    ReducedB,
    ReducedC,
}

/// Exact polynomial planar vector field (p, q) with its parameters.
#[derive(Clone, Debug)]
pub struct PlanarField {
    pub kind: FieldKind,
    pub p: YPoly,
    pub q: YPoly,
    pub params: ExactParams,
}

/// Pi_{m+2}(x) = x (x - k) (x^m + beta).
pub fn pi_m2(params: &ExactParams) -> UPoly {
    let x = UPoly::x();
    let x_minus_k = &x - &UPoly::constant(params.k.clone());
    let mut xm_beta = UPoly::monomial(QGauss::one(), params.m as usize);
    xm_beta = &xm_beta + &UPoly::constant(params.beta.clone());
    &(&x * &x_minus_k) * &xm_beta
}

/// -gamma beta + (alpha c - gamma) x^m.
fn q_tilde(params: &ExactParams) -> UPoly {
    let ac_g = &(&params.alpha * &params.c) - &params.gamma;
    let gb = &params.gamma * &params.beta;
    &UPoly::monomial(ac_g, params.m as usize) - &UPoly::constant(gb)
}

/// Builds the exact reduced polynomial field for the parameter class.
pub fn build_field_exact(params: &ExactParams) -> Result<PlanarField> {
    params.validate()?;
    let class = classify_params(&Params::Exact(params.clone()))?;
    let r_over_k = &params.r / &params.k;
    let pi = pi_m2(params);
    let m = params.m as usize;

    let (kind, p, q) = match class.kind {
        ClassKind::Generic | ClassKind::CaseAAlphaZero => {
            if params.beta.is_zero() && class.kind == ClassKind::Generic {
                // V2: p = -((r/k) x(x-k) + alpha y), q = (alpha c - gamma) y
                let x_x_minus_k = &UPoly::x() * &(&UPoly::x() - &UPoly::constant(params.k.clone()));
                let p = YPoly::from_strata(vec![
                    -&x_x_minus_k.scale(&r_over_k),
                    -&UPoly::constant(params.alpha.clone()),
                ]);
                let ac_g = &(&params.alpha * &params.c) - &params.gamma;
                let q = YPoly::from_strata(vec![UPoly::zero(), UPoly::constant(ac_g)]);
                (FieldKind::V2, p, q)
            } else {
                // V1 shape, also used for the alpha = 0 reduction.
                let p = YPoly::from_strata(vec![
                    -&pi.scale(&r_over_k),
                    -&UPoly::monomial(params.alpha.clone(), m),
                ]);
                let q = YPoly::from_strata(vec![UPoly::zero(), q_tilde(params)]);
                let kind = if class.kind == ClassKind::CaseAAlphaZero {
                    FieldKind::ReducedA
                } else {
                    FieldKind::V1
                };
                (kind, p, q)
            }
        }
        ClassKind::CaseBRZero => {
            // r = 0: the common factor y cancels from V1.
            let p = YPoly::from_upoly(-&UPoly::monomial(params.alpha.clone(), m));
            let q = YPoly::from_upoly(q_tilde(params));
            (FieldKind::ReducedB, p, q)
        }
        ClassKind::CaseCInB => {
            let p = YPoly::from_upoly(-&pi.scale(&r_over_k));
            (FieldKind::ReducedC, p, YPoly::zero())
        }
    };
    Ok(PlanarField {
        kind,
        p,
        q,
        params: params.clone(),
    })
}

/// Builds the field in whichever mode the parameters carry.
pub fn build_field(params: &Params) -> Result<FieldRepr> {
    match params {
        Params::Exact(p) => Ok(FieldRepr::Exact(build_field_exact(p)?)),
        Params::Numeric(p) => Ok(FieldRepr::Numeric(build_field_numeric(p)?)),
    }
}

#[derive(Clone, Debug)]
pub enum FieldRepr {
    Exact(PlanarField),
    Numeric(NumericField),
}

impl FieldRepr {
    pub fn numeric(&self) -> NumericField {
        match self {
            FieldRepr::Exact(f) => f.to_numeric(),
            FieldRepr::Numeric(f) => f.clone(),
        }
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            FieldRepr::Exact(f) => f.kind,
            FieldRepr::Numeric(f) => f.kind,
        }
    }
}

impl PlanarField {
    pub fn to_numeric(&self) -> NumericField {
        NumericField {
            kind: self.kind,
            p_strata: self.p.strata().iter().map(|s| s.to_f64_coeffs()).collect(),
            q_strata: self.q.strata().iter().map(|s| s.to_f64_coeffs()).collect(),
            params: self.params.to_numeric(),
        }
    }
}

/// Divergence of the field as an exact polynomial.
pub fn field_divergence(field: &PlanarField) -> YPoly {
    &field.p.partial_x() + &field.q.partial_y()
}

/// Numeric planar field: strata of complex coefficient vectors.
#[derive(Clone, Debug)]
pub struct NumericField {
    pub kind: FieldKind,
    pub p_strata: Vec<Vec<CScalar>>,
    pub q_strata: Vec<Vec<CScalar>>,
    pub params: NumericParams,
}

fn cpoly_eval(coeffs: &[CScalar], x: CScalar) -> CScalar {
    let mut acc = CScalar::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn cpoly_mul(a: &[CScalar], b: &[CScalar]) -> Vec<CScalar> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![CScalar::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn cpoly_derivative(a: &[CScalar]) -> Vec<CScalar> {
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * i as f64)
        .collect()
}

impl NumericField {
    pub fn eval(&self, x: CScalar, y: CScalar) -> (CScalar, CScalar) {
        let strata_eval = |strata: &[Vec<CScalar>]| {
            let mut acc = CScalar::new(0.0, 0.0);
            for s in strata.iter().rev() {
                acc = acc * y + cpoly_eval(s, x);
            }
            acc
        };
        (strata_eval(&self.p_strata), strata_eval(&self.q_strata))
    }

    /// Jacobian [[dp/dx, dp/dy], [dq/dx, dq/dy]].
    pub fn jacobian(&self, x: CScalar, y: CScalar) -> [[CScalar; 2]; 2] {
        let d_dx = |strata: &[Vec<CScalar>]| {
            let mut acc = CScalar::new(0.0, 0.0);
            for s in strata.iter().rev() {
                acc = acc * y + cpoly_eval(&cpoly_derivative(s), x);
            }
            acc
        };
        let d_dy = |strata: &[Vec<CScalar>]| {
            let mut acc = CScalar::new(0.0, 0.0);
            for (j, s) in strata.iter().enumerate().skip(1).rev() {
                acc = acc * y + cpoly_eval(s, x) * j as f64;
            }
            acc
        };
        [
            [d_dx(&self.p_strata), d_dy(&self.p_strata)],
            [d_dx(&self.q_strata), d_dy(&self.q_strata)],
        ]
    }
}

/// Numeric Pi_{m+2} coefficients.
pub fn pi_m2_numeric(params: &NumericParams) -> Vec<CScalar> {
    let zero = CScalar::new(0.0, 0.0);
    let one = CScalar::new(1.0, 0.0);
    let x = vec![zero, one];
    let x_minus_k = vec![-params.k, one];
    let mut xm_beta = vec![zero; params.m as usize + 1];
    xm_beta[0] = params.beta;
    xm_beta[params.m as usize] = one;
    cpoly_mul(&cpoly_mul(&x, &x_minus_k), &xm_beta)
}

/// Builds the numeric field for numeric-mode parameters.
pub fn build_field_numeric(params: &NumericParams) -> Result<NumericField> {
    params.validate()?;
    let class = classify_params(&Params::Numeric(params.clone()))?;
    let zero = CScalar::new(0.0, 0.0);
    let one = CScalar::new(1.0, 0.0);
    let m = params.m as usize;
    let r_over_k = params.r / params.k;
    let pi = pi_m2_numeric(params);
    let scale = |v: &[CScalar], s: CScalar| -> Vec<CScalar> { v.iter().map(|&c| c * s).collect() };
    let ac_g = params.alpha * params.c - params.gamma;
    let q_tilde = {
        let mut v = vec![zero; m + 1];
        v[0] = -params.gamma * params.beta;
        v[m] = ac_g;
        v
    };

    let (kind, p_strata, q_strata) = match class.kind {
        ClassKind::Generic | ClassKind::CaseAAlphaZero => {
            if params.beta.norm_sqr() == 0.0 && class.kind == ClassKind::Generic {
                let x_x_minus_k = cpoly_mul(&[zero, one], &[-params.k, one]);
                (
                    FieldKind::V2,
                    vec![scale(&x_x_minus_k, -r_over_k), vec![-params.alpha]],
                    vec![vec![], vec![ac_g]],
                )
            } else {
                let mut alpha_xm = vec![zero; m + 1];
                alpha_xm[m] = -params.alpha;
                let kind = if class.kind == ClassKind::CaseAAlphaZero {
                    FieldKind::ReducedA
                } else {
                    FieldKind::V1
                };
                (
                    kind,
                    vec![scale(&pi, -r_over_k), alpha_xm],
                    vec![vec![], q_tilde],
                )
            }
        }
        ClassKind::CaseBRZero => {
            let mut alpha_xm = vec![zero; m + 1];
            alpha_xm[m] = -params.alpha;
            (FieldKind::ReducedB, vec![alpha_xm], vec![q_tilde])
        }
        ClassKind::CaseCInB => (
            FieldKind::ReducedC,
            vec![scale(&pi, -r_over_k)],
            vec![],
        ),
    };
    Ok(NumericField {
        kind,
        p_strata,
        q_strata,
        params: params.clone(),
    })
}

/// The Abel equation of the second kind carried by the system:
/// (b0(x) + b1(x) y) dy/dx = a1(x) y.
#[derive(Clone, Debug)]
pub struct AbelEq {
    pub b0: UPoly,
    pub b1: UPoly,
    pub a1: UPoly,
}

/// b0 = (r/k) Pi, b1 = alpha x^m, a1 = gamma beta - (alpha c - gamma) x^m.
pub fn build_abel(params: &ExactParams) -> Result<AbelEq> {
    params.validate()?;
    let r_over_k = &params.r / &params.k;
    let b0 = pi_m2(params).scale(&r_over_k);
    let b1 = UPoly::monomial(params.alpha.clone(), params.m as usize);
    let a1 = -&q_tilde(params);
    Ok(AbelEq { b0, b1, a1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Deg;

    fn fixture() -> ExactParams {
        ExactParams::from_ratios((1, 1), (1, 1), (1, 1), (1, 1), (1, 4), (1, 1), 1).unwrap()
    }

    #[test]
    fn classification_cases() {
        let generic = classify_params(&Params::Exact(fixture())).unwrap();
        assert_eq!(generic.kind, ClassKind::Generic);
        assert!(generic.in_a && !generic.in_b);

        let mut a0 = fixture();
        a0.alpha = QGauss::zero();
        let class = classify_params(&Params::Exact(a0)).unwrap();
        assert_eq!(class.kind, ClassKind::CaseAAlphaZero);

        // alpha=1, c=1, gamma=1, beta=0, r=1: in B (and in A)
        let p =
            ExactParams::from_ratios((1, 1), (1, 1), (1, 1), (1, 1), (1, 1), (0, 1), 1).unwrap();
        let class = classify_params(&Params::Exact(p)).unwrap();
        assert_eq!(class.kind, ClassKind::CaseCInB);
        assert!(class.in_a && class.in_b);

        let mut k0 = fixture();
        k0.k = QGauss::zero();
        assert!(classify_params(&Params::Exact(k0)).is_err());
    }

    #[test]
    fn v1_field_matches_expansion() {
        // m=1, (1,1,1,1,1/4,1): p = -(x^3 - x) - x y, q = (-1/4 + 3/4 x) y
        let f = build_field_exact(&fixture()).unwrap();
        assert_eq!(f.kind, FieldKind::V1);
        let expected_p = YPoly::from_strata(vec![
            UPoly::from_i64(&[0, 1, 0, -1]),
            UPoly::from_i64(&[0, -1]),
        ]);
        assert_eq!(f.p, expected_p);
        let expected_q = YPoly::from_strata(vec![
            UPoly::zero(),
            UPoly::from_coeffs(vec![QGauss::from_ratio(-1, 4), QGauss::from_ratio(3, 4)]),
        ]);
        assert_eq!(f.q, expected_q);
    }

    #[test]
    fn v2_field_display_case() {
        // beta=0, (1,1,1,1,1/2): p = -x(x-1) - y, q = y/2
        let p =
            ExactParams::from_ratios((1, 1), (1, 1), (1, 1), (1, 1), (1, 2), (0, 1), 1).unwrap();
        let f = build_field_exact(&p).unwrap();
        assert_eq!(f.kind, FieldKind::V2);
        assert_eq!(
            f.p,
            YPoly::from_strata(vec![UPoly::from_i64(&[0, 1, -1]), UPoly::from_i64(&[-1])])
        );
        assert_eq!(
            f.q,
            YPoly::from_strata(vec![
                UPoly::zero(),
                UPoly::constant(QGauss::from_ratio(1, 2))
            ])
        );
    }

    #[test]
    fn reduced_c_field() {
        let p =
            ExactParams::from_ratios((1, 1), (1, 1), (1, 1), (1, 1), (1, 1), (0, 1), 1).unwrap();
        let f = build_field_exact(&p).unwrap();
        assert_eq!(f.kind, FieldKind::ReducedC);
        assert!(f.q.is_zero());
        // p = -(r/k) Pi with Pi = x^2 (x - 1) when beta = 0
        assert_eq!(f.p, YPoly::from_upoly(UPoly::from_i64(&[0, 0, 1, -1])));
    }

    #[test]
    fn divergence_examples() {
        let p =
            ExactParams::from_ratios((1, 1), (1, 1), (1, 1), (1, 1), (1, 2), (0, 1), 1).unwrap();
        let f = build_field_exact(&p).unwrap();
        // div = -(2x - 1) + 1/2
        let div = field_divergence(&f);
        let expected = YPoly::from_upoly(UPoly::from_coeffs(vec![
            QGauss::from_ratio(3, 2),
            QGauss::from_int(-2),
        ]));
        assert_eq!(div, expected);

        let f1 = build_field_exact(&fixture()).unwrap();
        // div = -(3x^2 - 1) - y + (-1/4 + 3x/4)
        let div1 = field_divergence(&f1);
        let expected1 = YPoly::from_strata(vec![
            UPoly::from_coeffs(vec![
                QGauss::from_ratio(3, 4),
                QGauss::from_ratio(3, 4),
                QGauss::from_int(-3),
            ]),
            UPoly::from_i64(&[-1]),
        ]);
        assert_eq!(div1, expected1);
    }

    #[test]
    fn abel_coefficients() {
        let abel = build_abel(&fixture()).unwrap();
        assert_eq!(abel.b0, UPoly::from_i64(&[0, -1, 0, 1]));
        assert_eq!(abel.b1, UPoly::x());
        assert_eq!(
            abel.a1,
            UPoly::from_coeffs(vec![QGauss::from_ratio(1, 4), QGauss::from_ratio(-3, 4)])
        );

        // gamma = 0: a1 = -alpha c x^m
        let mut g0 = fixture();
        g0.gamma = QGauss::zero();
        let abel = build_abel(&g0).unwrap();
        assert_eq!(abel.a1, UPoly::from_i64(&[0, -1]));

        // beta = 0, m = 1: b0 = (r/k) x^2 (x - k)
        let p =
            ExactParams::from_ratios((1, 1), (1, 1), (1, 1), (1, 1), (1, 2), (0, 1), 1).unwrap();
        let abel = build_abel(&p).unwrap();
        assert_eq!(abel.b0, UPoly::from_i64(&[0, 0, -1, 1]));
        assert_eq!(abel.a1, UPoly::from_coeffs(vec![
            QGauss::zero(),
            QGauss::from_ratio(-1, 2),
        ]));
    }

    #[test]
    fn v1_equals_rescaled_original() {
        // (beta + x^m) * (original rational components) == (p, q) of V1,
        // built here from the unreduced products.
        let params = fixture();
        let f = build_field_exact(&params).unwrap();
        let m = params.m as usize;
        let beta_xm = &UPoly::monomial(QGauss::one(), m) + &UPoly::constant(params.beta.clone());
        // x g(x) (beta + x^m) - alpha x^m y, with g = r(1 - x/k)
        let xg = UPoly::from_coeffs(vec![
            QGauss::zero(),
            params.r.clone(),
            -&(&params.r / &params.k),
        ]);
        let orig_num_p = YPoly::from_strata(vec![
            &xg * &beta_xm,
            -&UPoly::monomial(params.alpha.clone(), m),
        ]);
        assert_eq!(f.p, orig_num_p);
        let ac_g = &(&params.alpha * &params.c) - &params.gamma;
        let orig_num_q = YPoly::from_strata(vec![
            UPoly::zero(),
            &UPoly::monomial(ac_g, m) - &UPoly::constant(&params.gamma * &params.beta),
        ]);
        assert_eq!(f.q, orig_num_q);
    }

    #[test]
    fn q_vanishes_on_axis() {
        for p in [
            fixture(),
            ExactParams::from_ratios((1, 1), (1, 1), (1, 1), (1, 1), (1, 2), (0, 1), 1).unwrap(),
        ] {
            let f = build_field_exact(&p).unwrap();
            assert!(f.q.stratum(0).is_zero());
        }
    }

    #[test]
    fn params_json_modes() {
        let v: serde_json::Value = serde_json::from_str(
            r#"{"alpha":"1","r":"1","c":"1","k":"1","gamma":"1/4","beta":"1","m":1}"#,
        )
        .unwrap();
        let p = Params::from_json(&v).unwrap();
        assert!(p.is_exact());

        let v: serde_json::Value = serde_json::from_str(
            r#"{"alpha":0.5,"r":"1","c":"1","k":"1","gamma":"1/4","beta":"1","m":1}"#,
        )
        .unwrap();
        let p = Params::from_json(&v).unwrap();
        assert!(!p.is_exact());
        assert!(p.exact().is_err());

        let v: serde_json::Value = serde_json::from_str(
            r#"{"alpha":"1","r":"1","c":"1","k":"0","gamma":"1/4","beta":"1","m":1}"#,
        )
        .unwrap();
        assert!(Params::from_json(&v).is_err());
    }

    #[test]
    fn numeric_field_matches_exact() {
        let params = fixture();
        let exact = build_field_exact(&params).unwrap();
        let numeric = build_field_numeric(&params.to_numeric()).unwrap();
        let (x, y) = (CScalar::new(0.7, 0.0), CScalar::new(1.3, 0.0));
        let (pe, qe) = (exact.p.eval_c(x, y), exact.q.eval_c(x, y));
        let (pn, qn) = numeric.eval(x, y);
        assert!((pe - pn).norm() < 1e-14);
        assert!((qe - qn).norm() < 1e-14);
        assert_eq!(exact.p.deg_y(), Deg::Fin(1));
    }
}
