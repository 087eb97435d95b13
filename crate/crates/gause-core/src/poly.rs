//! Dense univariate polynomials over Q(i) and bivariate polynomials stored
//! as y-strata: f(x, y) = sum_j X_j(x) * y^j.
//!
//! Degrees stay small throughout the analysis, so everything is dense and
//! exact. The zero polynomial carries a distinguished degree marker.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{CoreError, Result};
use crate::scalar::{CScalar, QGauss};

/// Degree with a marker for the zero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Deg {
    NegInf,
    Fin(usize),
}

impl Deg {
    pub fn finite(self) -> Option<usize> {
        match self {
            Deg::NegInf => None,
            Deg::Fin(d) => Some(d),
        }
    }
}

/// Univariate polynomial in x; index = power, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UPoly {
    coeffs: Vec<QGauss>,
}

impl UPoly {
    pub fn from_coeffs(mut coeffs: Vec<QGauss>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UPoly::constant(QGauss::one())
    }

    pub fn constant(c: QGauss) -> Self {
        UPoly::from_coeffs(vec![c])
    }

    /// c * x^n
    pub fn monomial(c: QGauss, n: usize) -> Self {
        let mut coeffs = vec![QGauss::zero(); n + 1];
        coeffs[n] = c;
        UPoly::from_coeffs(coeffs)
    }

    pub fn x() -> Self {
        UPoly::monomial(QGauss::one(), 1)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UPoly::from_coeffs(coeffs.iter().map(|&c| QGauss::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[QGauss] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> QGauss {
        self.coeffs.get(n).cloned().unwrap_or_else(QGauss::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Deg {
        if self.coeffs.is_empty() {
            Deg::NegInf
        } else {
            Deg::Fin(self.coeffs.len() - 1)
        }
    }

    /// Leading coefficient; None for the zero polynomial.
    pub fn lc(&self) -> Option<&QGauss> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> UPoly {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| &QGauss::from_int(i as i64) * c)
            .collect();
        UPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, s: &QGauss) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiplies by x^n.
    pub fn shift_up(&self, n: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![QGauss::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly::from_coeffs(coeffs)
    }

    /// Horner evaluation; exact.
    pub fn eval_q(&self, x: &QGauss) -> QGauss {
        let mut acc = QGauss::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_c(&self, x: CScalar) -> CScalar {
        let mut acc = CScalar::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_complex();
        }
        acc
    }

    /// Euclidean division: self = q*b + r with deg r < deg b.
    pub fn divrem(&self, b: &UPoly) -> Result<(UPoly, UPoly)> {
        if b.is_zero() {
            return Err(CoreError::DivisionByZero("polynomial division"));
        }
        let db = b.coeffs.len() - 1;
        let lb = b.lc().unwrap().clone();
        let lb_inv = lb.inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((UPoly::zero(), self.clone()));
        }
        let dq = rem.len() - 1 - db;
        let mut quot = vec![QGauss::zero(); dq + 1];
        for i in (0..=dq).rev() {
            let lead = rem[i + db].clone();
            if lead.is_zero() {
                continue;
            }
            let c = &lead * &lb_inv;
            for (j, bc) in b.coeffs.iter().enumerate() {
                let t = &c * bc;
                rem[i + j] = &rem[i + j] - &t;
            }
            quot[i] = c;
        }
        Ok((UPoly::from_coeffs(quot), UPoly::from_coeffs(rem)))
    }

    /// Exact quotient when the remainder vanishes.
    pub fn div_exact(&self, b: &UPoly) -> Option<UPoly> {
        let (q, r) = self.divrem(b).ok()?;
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scales so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> UPoly {
        match self.lc() {
            None => UPoly::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero lc")),
        }
    }

    /// Multiplicity of the root x = 0.
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn pow(&self, n: usize) -> UPoly {
        let mut acc = UPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64_coeffs(&self) -> Vec<CScalar> {
        self.coeffs.iter().map(|c| c.to_complex()).collect()
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        UPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        UPoly::from_coeffs(coeffs)
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![QGauss::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                coeffs[i + j] = &coeffs[i + j] + &t;
            }
        }
        UPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for UPoly {
    type Output = UPoly;
    fn add(self, rhs: UPoly) -> UPoly {
        &self + &rhs
    }
}

impl Sub for UPoly {
    type Output = UPoly;
    fn sub(self, rhs: UPoly) -> UPoly {
        &self - &rhs
    }
}

impl Mul for UPoly {
    type Output = UPoly;
    fn mul(self, rhs: UPoly) -> UPoly {
        &self * &rhs
    }
}

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        -&self
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Bivariate polynomial as y-strata of univariate polynomials in x.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct YPoly {
    strata: Vec<UPoly>,
}

impl YPoly {
    pub fn from_strata(mut strata: Vec<UPoly>) -> Self {
        while strata.last().is_some_and(|s| s.is_zero()) {
            strata.pop();
        }
        YPoly { strata }
    }

    pub fn zero() -> Self {
        YPoly { strata: vec![] }
    }

    pub fn from_upoly(p: UPoly) -> Self {
        YPoly::from_strata(vec![p])
    }

    pub fn constant(c: QGauss) -> Self {
        YPoly::from_upoly(UPoly::constant(c))
    }

    pub fn x() -> Self {
        YPoly::from_upoly(UPoly::x())
    }

    pub fn y() -> Self {
        YPoly::from_strata(vec![UPoly::zero(), UPoly::one()])
    }

    /// c * x^a * y^b
    pub fn monomial(c: QGauss, a: usize, b: usize) -> Self {
        let mut strata = vec![UPoly::zero(); b + 1];
        strata[b] = UPoly::monomial(c, a);
        YPoly::from_strata(strata)
    }

    pub fn strata(&self) -> &[UPoly] {
        &self.strata
    }

    pub fn stratum(&self, j: usize) -> UPoly {
        self.strata.get(j).cloned().unwrap_or_else(UPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.strata.is_empty()
    }

    pub fn deg_y(&self) -> Deg {
        if self.strata.is_empty() {
            Deg::NegInf
        } else {
            Deg::Fin(self.strata.len() - 1)
        }
    }

    pub fn deg_x(&self) -> Deg {
        self.strata
            .iter()
            .filter_map(|s| s.degree().finite())
            .max()
            .map_or(Deg::NegInf, Deg::Fin)
    }

    /// Total degree in (x, y).
    pub fn total_degree(&self) -> Deg {
        self.strata
            .iter()
            .enumerate()
            .filter_map(|(j, s)| s.degree().finite().map(|d| d + j))
            .max()
            .map_or(Deg::NegInf, Deg::Fin)
    }

    pub fn partial_x(&self) -> YPoly {
        YPoly::from_strata(self.strata.iter().map(|s| s.derivative()).collect())
    }

    pub fn partial_y(&self) -> YPoly {
        if self.strata.len() <= 1 {
            return YPoly::zero();
        }
        let strata = self
            .strata
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, s)| s.scale(&QGauss::from_int(j as i64)))
            .collect();
        YPoly::from_strata(strata)
    }

    pub fn scale(&self, s: &QGauss) -> YPoly {
        YPoly::from_strata(self.strata.iter().map(|p| p.scale(s)).collect())
    }

    pub fn mul_upoly(&self, p: &UPoly) -> YPoly {
        YPoly::from_strata(self.strata.iter().map(|s| s * p).collect())
    }

    /// Multiplies by y^n.
    pub fn mul_y_pow(&self, n: usize) -> YPoly {
        if self.is_zero() {
            return YPoly::zero();
        }
        let mut strata = vec![UPoly::zero(); n];
        strata.extend(self.strata.iter().cloned());
        YPoly::from_strata(strata)
    }

    pub fn eval_q(&self, x: &QGauss, y: &QGauss) -> QGauss {
        let mut acc = QGauss::zero();
        for s in self.strata.iter().rev() {
            acc = &(&acc * y) + &s.eval_q(x);
        }
        acc
    }

    pub fn eval_c(&self, x: CScalar, y: CScalar) -> CScalar {
        let mut acc = CScalar::new(0.0, 0.0);
        for s in self.strata.iter().rev() {
            acc = acc * y + s.eval_c(x);
        }
        acc
    }

    /// Lowest stratum index with a nonzero entry (y-valuation).
    pub fn y_valuation(&self) -> Option<usize> {
        self.strata.iter().position(|s| !s.is_zero())
    }

    /// Multiplicity of x as a factor: min x-valuation over nonzero strata.
    pub fn x_factor_valuation(&self) -> Option<usize> {
        self.strata
            .iter()
            .filter(|s| !s.is_zero())
            .map(|s| s.x_valuation())
            .min()
    }

    /// Exact division in (Q(i)[x])[y]; None when not exactly divisible.
    pub fn div_exact(&self, d: &YPoly) -> Option<YPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(YPoly::zero());
        }
        let dd = d.strata.len() - 1;
        let dlead = d.strata.last().unwrap();
        let mut rem = self.clone();
        let mut quot_strata: Vec<UPoly> = vec![];
        loop {
            if rem.is_zero() {
                break;
            }
            let dr = rem.strata.len() - 1;
            if dr < dd {
                return None;
            }
            let qj = rem.strata.last().unwrap().div_exact(dlead)?;
            let step = YPoly::from_strata(vec![qj.clone()]).mul_y_pow(dr - dd);
            rem = &rem - &step.mul_ypoly(d);
            if quot_strata.len() < dr - dd + 1 {
                quot_strata.resize(dr - dd + 1, UPoly::zero());
            }
            quot_strata[dr - dd] = qj;
        }
        Some(YPoly::from_strata(quot_strata))
    }

    pub fn mul_ypoly(&self, rhs: &YPoly) -> YPoly {
        if self.is_zero() || rhs.is_zero() {
            return YPoly::zero();
        }
        let mut strata = vec![UPoly::zero(); self.strata.len() + rhs.strata.len() - 1];
        for (i, a) in self.strata.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.strata.iter().enumerate() {
                let t = a * b;
                strata[i + j] = &strata[i + j] + &t;
            }
        }
        YPoly::from_strata(strata)
    }

    /// Leading stratum scaled to be monic (canonical representative).
    pub fn normalized(&self) -> YPoly {
        match self.strata.last().and_then(|s| s.lc()) {
            None => YPoly::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero lc")),
        }
    }
}

impl Add for &YPoly {
    type Output = YPoly;
    fn add(self, rhs: &YPoly) -> YPoly {
        let n = self.strata.len().max(rhs.strata.len());
        let strata = (0..n).map(|j| &self.stratum(j) + &rhs.stratum(j)).collect();
        YPoly::from_strata(strata)
    }
}

impl Sub for &YPoly {
    type Output = YPoly;
    fn sub(self, rhs: &YPoly) -> YPoly {
        let n = self.strata.len().max(rhs.strata.len());
        let strata = (0..n).map(|j| &self.stratum(j) - &rhs.stratum(j)).collect();
        YPoly::from_strata(strata)
    }
}

impl Mul for &YPoly {
    type Output = YPoly;
    fn mul(self, rhs: &YPoly) -> YPoly {
        self.mul_ypoly(rhs)
    }
}

impl Neg for &YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        YPoly::from_strata(self.strata.iter().map(|s| -s).collect())
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, s) in self.strata.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "[{s}]")?,
                1 => write!(f, "[{s}]*y")?,
                _ => write!(f, "[{s}]*y^{j}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_examples() {
        // (x^2 - 1) / (x - 1) = x + 1 rem 0
        let a = UPoly::from_i64(&[-1, 0, 1]);
        let b = UPoly::from_i64(&[-1, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q, UPoly::from_i64(&[1, 1]));
        assert!(r.is_zero());

        // (x^3 - x) / x = x^2 - 1 rem 0
        let a = UPoly::from_i64(&[0, -1, 0, 1]);
        let (q, r) = a.divrem(&UPoly::x()).unwrap();
        assert_eq!(q, UPoly::from_i64(&[-1, 0, 1]));
        assert!(r.is_zero());

        // (x^2 + 1) / (x + 1) = x - 1 rem 2
        let a = UPoly::from_i64(&[1, 0, 1]);
        let b = UPoly::from_i64(&[1, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q, UPoly::from_i64(&[-1, 1]));
        assert_eq!(r, UPoly::from_i64(&[2]));

        assert!(a.divrem(&UPoly::zero()).is_err());
    }

    #[test]
    fn eval_examples() {
        let p = UPoly::from_i64(&[0, -1, 0, 1]); // x^3 - x
        assert_eq!(p.eval_q(&QGauss::from_int(2)), QGauss::from_int(6));
        assert_eq!(UPoly::zero().eval_q(&QGauss::from_int(7)), QGauss::zero());

        // X0 = 1, X1 = x at (2, 3): 1 + 2*3 = 7
        let f = YPoly::from_strata(vec![UPoly::one(), UPoly::x()]);
        assert_eq!(
            f.eval_q(&QGauss::from_int(2), &QGauss::from_int(3)),
            QGauss::from_int(7)
        );
    }

    #[test]
    fn derivative_product_rule() {
        let p = UPoly::from_i64(&[1, 2, 3]);
        let q = UPoly::from_i64(&[-1, 0, 0, 5]);
        let lhs = (&p * &q).derivative();
        let rhs = &(&p.derivative() * &q) + &(&p * &q.derivative());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ypoly_exact_division() {
        let f = YPoly::monomial(QGauss::from_int(1), 1, 1); // x*y
        let g = &f + &YPoly::constant(QGauss::from_int(1)); // x*y + 1
        let prod = g.mul_ypoly(&f);
        assert_eq!(prod.div_exact(&f), Some(g.clone()));
        assert_eq!(prod.div_exact(&g), Some(f.clone()));
        let not_divisible = &prod + &YPoly::constant(QGauss::from_int(1));
        assert_eq!(not_divisible.div_exact(&f), None);
    }

    #[test]
    fn valuations() {
        // x^2*y + x^3*y^2
        let f = &YPoly::monomial(QGauss::from_int(1), 2, 1)
            + &YPoly::monomial(QGauss::from_int(1), 3, 2);
        assert_eq!(f.y_valuation(), Some(1));
        assert_eq!(f.x_factor_valuation(), Some(2));
        assert_eq!(f.total_degree(), Deg::Fin(5));
    }
}
