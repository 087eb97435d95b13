//! Scalar domains: exact Gaussian rationals and the binary64 complex numbers
//! used for numeric evaluation.
//!
//! `QGauss` is an element of Q(i). Both parts are `BigRational`, which the
//! `num-rational` crate keeps in lowest terms with a positive denominator, so
//! the canonical-form invariant holds by construction and all field
//! operations are exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{CoreError, Result};

/// Complex scalar for numeric evaluation.
pub type CScalar = num_complex::Complex64;

/// Returns an error if the value is not finite in both parts.
pub fn ensure_finite(z: CScalar, what: &str) -> Result<CScalar> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(CoreError::Numeric(format!("non-finite value in {what}")))
    }
}

/// Gaussian rational: re + im*i with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QGauss {
    re: BigRational,
    im: BigRational,
}

impl QGauss {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        QGauss { re, im }
    }

    pub fn zero() -> Self {
        QGauss::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        QGauss::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        QGauss::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        QGauss::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// Exact p/q with q != 0.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        QGauss::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::zero(),
        )
    }

    pub fn from_rational(re: BigRational) -> Self {
        QGauss::new(re, BigRational::zero())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.im.is_zero() && self.re.is_one()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True when the value is a nonnegative integer, returning it.
    pub fn as_nonneg_integer(&self) -> Option<usize> {
        if !self.im.is_zero() || !self.re.denom().is_one() || self.re.is_negative() {
            return None;
        }
        self.re.numer().to_usize()
    }

    pub fn conj(&self) -> Self {
        QGauss::new(self.re.clone(), -self.im.clone())
    }

    /// |z|^2 as an exact rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(CoreError::DivisionByZero("QGauss::inv"));
        }
        let n = self.norm_sqr();
        Ok(QGauss::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn to_complex(&self) -> CScalar {
        CScalar::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }

    /// Exact square root in Q(i), when one exists.
    pub fn sqrt_exact(&self) -> Option<QGauss> {
        if self.is_zero() {
            return Some(QGauss::zero());
        }
        if self.im.is_zero() {
            if !self.re.is_negative() {
                return rat_sqrt(&self.re).map(QGauss::from_rational);
            }
            let t = rat_sqrt(&(-self.re.clone()))?;
            return Some(QGauss::new(BigRational::zero(), t));
        }
        // (x + iy)^2 = re + i*im: x^2 = (re + |z|)/2, y = im / (2x).
        let n = rat_sqrt(&self.norm_sqr())?;
        let two = BigRational::from_integer(BigInt::from(2));
        let xsq = (&self.re + &n) / &two;
        let x = rat_sqrt(&xsq)?;
        if x.is_zero() {
            return None;
        }
        let y = &self.im / (&two * &x);
        let cand = QGauss::new(x, y);
        if &(&cand * &cand) == self {
            Some(cand)
        } else {
            None
        }
    }

    pub fn pow(&self, n: u32) -> QGauss {
        let mut acc = QGauss::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Parses "p/q", "p", or "-p/q".
    pub fn parse_rational(s: &str) -> Result<Self> {
        parse_big_rational(s).map(QGauss::from_rational)
    }

    /// Height proxy used for pivot selection: larger numerators first.
    pub fn numerator_score(&self) -> BigInt {
        self.re.numer().abs() * self.im.denom().abs() + self.im.numer().abs() * self.re.denom().abs()
    }
}

/// Converts a BigRational to the nearest f64.
pub fn rat_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact rational square root, when the value is a square in Q.
pub fn rat_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

pub fn parse_big_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num_str)
        .map_err(|_| CoreError::Parse(format!("invalid rational numerator in {s:?}")))?;
    let d = BigInt::from_str(den_str)
        .map_err(|_| CoreError::Parse(format!("invalid rational denominator in {s:?}")))?;
    if d.is_zero() {
        return Err(CoreError::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// Canonical "p/q" form ("p" when the denominator is 1).
pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QGauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", rational_string(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}*i", rational_string(&self.im))
        } else if self.im.is_negative() {
            write!(
                f,
                "{}-{}*i",
                rational_string(&self.re),
                rational_string(&-self.im.clone())
            )
        } else {
            write!(f, "{}+{}*i", rational_string(&self.re), rational_string(&self.im))
        }
    }
}

impl fmt::Debug for QGauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &QGauss {
    type Output = QGauss;
    fn add(self, rhs: &QGauss) -> QGauss {
        QGauss::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Add for QGauss {
    type Output = QGauss;
    fn add(self, rhs: QGauss) -> QGauss {
        &self + &rhs
    }
}

impl Sub for &QGauss {
    type Output = QGauss;
    fn sub(self, rhs: &QGauss) -> QGauss {
        QGauss::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Sub for QGauss {
    type Output = QGauss;
    fn sub(self, rhs: QGauss) -> QGauss {
        &self - &rhs
    }
}

impl Mul for &QGauss {
    type Output = QGauss;
    fn mul(self, rhs: &QGauss) -> QGauss {
        QGauss::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Mul for QGauss {
    type Output = QGauss;
    fn mul(self, rhs: QGauss) -> QGauss {
        &self * &rhs
    }
}

impl Neg for &QGauss {
    type Output = QGauss;
    fn neg(self) -> QGauss {
        QGauss::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for QGauss {
    type Output = QGauss;
    fn neg(self) -> QGauss {
        -&self
    }
}

impl Div for &QGauss {
    type Output = QGauss;
    fn div(self, rhs: &QGauss) -> QGauss {
        let inv = rhs.inv().expect("division by zero QGauss");
        self * &inv
    }
}

impl Div for QGauss {
    type Output = QGauss;
    fn div(self, rhs: QGauss) -> QGauss {
        &self / &rhs
    }
}

impl Serialize for QGauss {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.im.is_zero() {
            serializer.serialize_str(&rational_string(&self.re))
        } else {
            use serde::ser::SerializeStruct;
            let mut st = serializer.serialize_struct("QGauss", 2)?;
            st.serialize_field("re", &rational_string(&self.re))?;
            st.serialize_field("im", &rational_string(&self.im))?;
            st.end()
        }
    }
}

struct QGaussVisitor;

impl<'de> Visitor<'de> for QGaussVisitor {
    type Value = QGauss;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a rational string \"p/q\" or an object {\"re\": \"p/q\", \"im\": \"p/q\"}")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<QGauss, E> {
        QGauss::parse_rational(v).map_err(|e| E::custom(e.to_string()))
    }

    fn visit_map<M: MapAccess<'de>>(self, mut map: M) -> std::result::Result<QGauss, M::Error> {
        let mut re: Option<String> = None;
        let mut im: Option<String> = None;
        while let Some(key) = map.next_key::<String>()? {
            match key.as_str() {
                "re" => re = Some(map.next_value()?),
                "im" => im = Some(map.next_value()?),
                other => return Err(de::Error::unknown_field(other, &["re", "im"])),
            }
        }
        let re = parse_big_rational(&re.unwrap_or_else(|| "0".into()))
            .map_err(|e| de::Error::custom(e.to_string()))?;
        let im = parse_big_rational(&im.unwrap_or_else(|| "0".into()))
            .map_err(|e| de::Error::custom(e.to_string()))?;
        Ok(QGauss::new(re, im))
    }
}

impl<'de> Deserialize<'de> for QGauss {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        deserializer.deserialize_any(QGaussVisitor)
    }
}
