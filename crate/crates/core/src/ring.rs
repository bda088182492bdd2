//! Exact arithmetic in the quadratic field Q(√5).
//!
//! Elements are stored as `x + y·φ` where φ = (1 + √5)/2 satisfies φ² = φ + 1.
//! In this basis the ring of integers Z[φ] is exactly the set of elements with
//! integer coordinates, which is where every eigenvalue and eigenvector entry
//! of the binomial matrix lives.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element `x + y·φ` of Q(√5).
///
/// Both coordinates are reduced rationals, so two values are equal exactly
/// when their coordinates are.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GoldenNumber {
    x: BigRational,
    y: BigRational,
}

impl GoldenNumber {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        GoldenNumber { x, y }
    }

    pub fn from_integers(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        GoldenNumber {
            x: BigRational::from_integer(x.into()),
            y: BigRational::from_integer(y.into()),
        }
    }

    pub fn from_rational(x: BigRational) -> Self {
        GoldenNumber {
            x,
            y: BigRational::zero(),
        }
    }

    /// Convenience constructor from small fractions `xn/xd + (yn/yd)·φ`.
    ///
    /// Panics if a denominator is zero.
    pub fn from_fractions(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        GoldenNumber {
            x: BigRational::new(xn.into(), xd.into()),
            y: BigRational::new(yn.into(), yd.into()),
        }
    }

    /// The golden ratio φ = (1 + √5)/2.
    pub fn phi() -> Self {
        Self::from_integers(0, 1)
    }

    /// The conjugate root ψ = (1 − √5)/2 = 1 − φ.
    pub fn psi() -> Self {
        Self::from_integers(1, -1)
    }

    /// √5 = 2φ − 1.
    pub fn sqrt5() -> Self {
        Self::from_integers(-1, 2)
    }

    /// Coefficient of 1.
    pub fn x(&self) -> &BigRational {
        &self.x
    }

    /// Coefficient of φ.
    pub fn y(&self) -> &BigRational {
        &self.y
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    /// True when the value lies in Z[φ].
    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    /// The integer value, if this is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.y.is_zero() && self.x.is_integer()).then(|| self.x.to_integer())
    }

    /// Galois conjugate: φ ↦ ψ, so `x + yφ ↦ (x + y) − yφ`.
    pub fn conj(&self) -> Self {
        GoldenNumber {
            x: &self.x + &self.y,
            y: -&self.y,
        }
    }

    /// Field norm `x² + xy − y²`, i.e. the product with the conjugate.
    pub fn norm(&self) -> BigRational {
        &self.x * &self.x + &self.x * &self.y - &self.y * &self.y
    }

    pub fn trace(&self) -> BigRational {
        &self.x * BigInt::from(2) + &self.y
    }

    pub fn inv(&self) -> Result<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let conj = self.conj();
        Ok(GoldenNumber {
            x: conj.x / &norm,
            y: conj.y / norm,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Exact power with a possibly negative exponent.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        Ok(base.pow_unsigned(exp.unsigned_abs()))
    }

    fn pow_unsigned(mut self, mut exp: u64) -> Self {
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &self;
            }
            exp >>= 1;
            if exp > 0 {
                self = &self * &self;
            }
        }
        acc
    }

    /// Multiplies by a rational integer.
    pub fn scale(&self, k: &BigInt) -> Self {
        if self.is_integral() {
            return GoldenNumber::from_integers(self.x.numer() * k, self.y.numer() * k);
        }
        GoldenNumber {
            x: &self.x * k,
            y: &self.y * k,
        }
    }

    /// Display-only floating point approximation.
    ///
    /// Small values of large-coordinate elements are recovered through
    /// `norm / conj` to avoid cancellation between the two coordinates.
    pub fn approx_f64(&self) -> f64 {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let psi = 1.0 - phi;
        let x = rational_to_f64(&self.x);
        let y = rational_to_f64(&self.y);
        let direct = x + y * phi;
        let conj = x + y * psi;
        if direct.abs() < conj.abs() {
            rational_to_f64(&self.norm()) / conj
        } else {
            direct
        }
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl Zero for GoldenNumber {
    fn zero() -> Self {
        GoldenNumber::default()
    }

    fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl One for GoldenNumber {
    fn one() -> Self {
        Self::from_integers(1, 0)
    }
}

impl From<i64> for GoldenNumber {
    fn from(v: i64) -> Self {
        Self::from_integers(v, 0)
    }
}

impl From<BigInt> for GoldenNumber {
    fn from(v: BigInt) -> Self {
        Self::from_integers(v, BigInt::zero())
    }
}

impl From<&BigInt> for GoldenNumber {
    fn from(v: &BigInt) -> Self {
        Self::from_integers(v.clone(), BigInt::zero())
    }
}

impl<'a> Add<&'a GoldenNumber> for &'a GoldenNumber {
    type Output = GoldenNumber;

    fn add(self, rhs: &GoldenNumber) -> GoldenNumber {
        if self.is_integral() && rhs.is_integral() {
            return GoldenNumber::from_integers(
                self.x.numer() + rhs.x.numer(),
                self.y.numer() + rhs.y.numer(),
            );
        }
        GoldenNumber {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
        }
    }
}

impl<'a> Sub<&'a GoldenNumber> for &'a GoldenNumber {
    type Output = GoldenNumber;

    fn sub(self, rhs: &GoldenNumber) -> GoldenNumber {
        if self.is_integral() && rhs.is_integral() {
            return GoldenNumber::from_integers(
                self.x.numer() - rhs.x.numer(),
                self.y.numer() - rhs.y.numer(),
            );
        }
        GoldenNumber {
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
        }
    }
}

impl<'a> Mul<&'a GoldenNumber> for &'a GoldenNumber {
    type Output = GoldenNumber;

    // (x1 + y1φ)(x2 + y2φ) = (x1x2 + y1y2) + (x1y2 + x2y1 + y1y2)φ
    fn mul(self, rhs: &GoldenNumber) -> GoldenNumber {
        if self.is_zero() || rhs.is_zero() {
            return GoldenNumber::zero();
        }
        if self.is_integral() && rhs.is_integral() {
            // integral fast path, no gcd reduction
            let (x1, y1) = (self.x.numer(), self.y.numer());
            let (x2, y2) = (rhs.x.numer(), rhs.y.numer());
            let xx = x1 * x2;
            let yy = y1 * y2;
            let cross = x1 * y2 + x2 * y1;
            return GoldenNumber {
                x: BigRational::from_integer(&xx + &yy),
                y: BigRational::from_integer(cross + yy),
            };
        }
        let xx = &self.x * &rhs.x;
        let yy = &self.y * &rhs.y;
        let cross = &self.x * &rhs.y + &rhs.x * &self.y;
        GoldenNumber {
            x: &xx + &yy,
            y: cross + yy,
        }
    }
}

impl Neg for &GoldenNumber {
    type Output = GoldenNumber;

    fn neg(self) -> GoldenNumber {
        GoldenNumber {
            x: -&self.x,
            y: -&self.y,
        }
    }
}

impl Neg for GoldenNumber {
    type Output = GoldenNumber;

    fn neg(self) -> GoldenNumber {
        GoldenNumber {
            x: -self.x,
            y: -self.y,
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait<GoldenNumber> for GoldenNumber {
            type Output = GoldenNumber;

            fn $method(self, rhs: GoldenNumber) -> GoldenNumber {
                (&self).$method(&rhs)
            }
        }

        impl<'a> $trait<&'a GoldenNumber> for GoldenNumber {
            type Output = GoldenNumber;

            fn $method(self, rhs: &GoldenNumber) -> GoldenNumber {
                (&self).$method(rhs)
            }
        }

        impl<'a> $trait<GoldenNumber> for &'a GoldenNumber {
            type Output = GoldenNumber;

            fn $method(self, rhs: GoldenNumber) -> GoldenNumber {
                self.$method(&rhs)
            }
        }

        impl<'a> $assign_trait<&'a GoldenNumber> for GoldenNumber {
            fn $assign_method(&mut self, rhs: &GoldenNumber) {
                *self = (&*self).$method(rhs);
            }
        }

        impl $assign_trait<GoldenNumber> for GoldenNumber {
            fn $assign_method(&mut self, rhs: GoldenNumber) {
                *self = (&*self).$method(&rhs);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

impl std::iter::Sum for GoldenNumber {
    fn sum<I: Iterator<Item = GoldenNumber>>(iter: I) -> Self {
        iter.fold(GoldenNumber::zero(), |acc, v| acc + v)
    }
}

impl std::iter::Product for GoldenNumber {
    fn product<I: Iterator<Item = GoldenNumber>>(iter: I) -> Self {
        iter.fold(GoldenNumber::one(), |acc, v| acc * v)
    }
}

/// Formats as `x + y·φ`, omitting zero parts: `0`, `1/2`, `1 - 1·φ`, `-2·φ`.
impl fmt::Display for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.x.is_zero(), self.y.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}", self.x),
            (true, false) => write!(f, "{}·φ", self.y),
            (false, false) => {
                if self.y.is_negative() {
                    write!(f, "{} - {}·φ", self.x, -&self.y)
                } else {
                    write!(f, "{} + {}·φ", self.x, self.y)
                }
            }
        }
    }
}

impl fmt::Debug for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GoldenNumber({self})")
    }
}

fn parse_rational(input: &str, whole: &str) -> Result<BigRational> {
    let s = input.trim();
    if s.is_empty() || s.starts_with('+') {
        return Err(parse_error(whole, "expected a rational number"));
    }
    let value: BigRational = s
        .parse()
        .map_err(|_| parse_error(whole, "malformed rational"))?;
    Ok(value)
}

fn parse_error(input: &str, reason: &'static str) -> Error {
    Error::Parse {
        input: input.to_string(),
        reason,
    }
}

/// Parses the `Display` form. A bare `φ` or `-φ` is accepted as coefficient ±1.
impl FromStr for GoldenNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let Some(body) = trimmed.strip_suffix('φ') else {
            return Ok(GoldenNumber::from_rational(parse_rational(trimmed, s)?));
        };
        let body = body.strip_suffix('·').unwrap_or(body);
        let split = [" + ", " - "]
            .iter()
            .filter_map(|sep| body.rfind(sep).map(|pos| (pos, *sep)))
            .max_by_key(|(pos, _)| *pos);
        let (x, y_text, negate) = match split {
            Some((pos, sep)) => (parse_rational(&body[..pos], s)?, &body[pos + 3..], sep == " - "),
            None => (BigRational::zero(), body, false),
        };
        let y_text = y_text.trim();
        let mut y = match y_text {
            "" => BigRational::one(),
            "-" if !negate => -BigRational::one(),
            _ => parse_rational(y_text, s)?,
        };
        if negate {
            if y.is_negative() {
                return Err(parse_error(s, "doubled sign on φ coefficient"));
            }
            y = -y;
        }
        Ok(GoldenNumber { x, y })
    }
}

#[derive(Serialize, Deserialize)]
struct GoldenNumberRepr {
    x: String,
    y: String,
}

/// JSON form `{"x": "p/q", "y": "p/q"}` with string rationals.
impl Serialize for GoldenNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GoldenNumberRepr {
            x: self.x.to_string(),
            y: self.y.to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GoldenNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = GoldenNumberRepr::deserialize(deserializer)?;
        let x = parse_rational(&repr.x, &repr.x).map_err(D::Error::custom)?;
        let y = parse_rational(&repr.y, &repr.y).map_err(D::Error::custom)?;
        Ok(GoldenNumber { x, y })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gn(x: i64, y: i64) -> GoldenNumber {
        GoldenNumber::from_integers(x, y)
    }

    #[test]
    fn addition() {
        assert_eq!(GoldenNumber::phi() + GoldenNumber::psi(), gn(1, 0));
        assert_eq!(gn(0, 0) + gn(3, 2), gn(3, 2));
        assert_eq!(
            GoldenNumber::from_fractions(1, 2, 1, 3) + GoldenNumber::from_fractions(1, 2, 2, 3),
            gn(1, 1)
        );
    }

    #[test]
    fn multiplication() {
        let phi = GoldenNumber::phi();
        assert_eq!(&phi * &phi, gn(1, 1));
        assert_eq!(&phi * &GoldenNumber::psi(), gn(-1, 0));
        assert_eq!(
            gn(2, 0) * GoldenNumber::from_fractions(1, 2, 3, 1),
            gn(1, 6)
        );
    }

    #[test]
    fn inverse() {
        assert_eq!(GoldenNumber::phi().inv().unwrap(), gn(-1, 1));
        assert_eq!(gn(1, 0).inv().unwrap(), gn(1, 0));
        assert_eq!(GoldenNumber::psi().inv().unwrap(), gn(0, -1));
        assert_eq!(GoldenNumber::zero().inv(), Err(Error::DivisionByZero));
        let half = GoldenNumber::from_fractions(1, 2, -3, 7);
        assert_eq!(&half * &half.inv().unwrap(), GoldenNumber::one());
    }

    #[test]
    fn conjugate() {
        assert_eq!(GoldenNumber::phi().conj(), GoldenNumber::psi());
        assert_eq!(gn(5, 0).conj(), gn(5, 0));
        assert_eq!(gn(2, 3).conj().conj(), gn(2, 3));
    }

    #[test]
    fn norm() {
        let phi = GoldenNumber::phi();
        assert_eq!(phi.norm(), BigRational::from_integer((-1).into()));
        assert_eq!(gn(1, 0).norm(), BigRational::one());
        assert_eq!((&phi * &phi).norm(), BigRational::one());
        assert_eq!(GoldenNumber::sqrt5().norm(), BigRational::from_integer((-5).into()));
    }

    #[test]
    fn powers() {
        let phi = GoldenNumber::phi();
        assert_eq!(phi.pow(-2).unwrap(), gn(2, -1));
        assert_eq!(phi.pow(0).unwrap(), gn(1, 0));
        assert_eq!(phi.pow(3).unwrap(), gn(1, 2));
        // φ^n = F(n-1) + F(n)φ
        assert_eq!(phi.pow(10).unwrap(), gn(34, 55));
        assert_eq!(GoldenNumber::zero().pow(-1), Err(Error::DivisionByZero));
        assert_eq!(GoldenNumber::zero().pow(0).unwrap(), GoldenNumber::one());
    }

    #[test]
    fn formatting() {
        assert_eq!(gn(1, -1).to_string(), "1 - 1·φ");
        assert_eq!(gn(0, 0).to_string(), "0");
        assert_eq!(GoldenNumber::from_fractions(1, 2, 0, 1).to_string(), "1/2");
        assert_eq!(gn(0, -2).to_string(), "-2·φ");
        assert_eq!(
            GoldenNumber::from_fractions(-1, 2, 3, 4).to_string(),
            "-1/2 + 3/4·φ"
        );
    }

    #[test]
    fn parsing() {
        for s in ["1 - 1·φ", "0", "1/2", "-2·φ", "-1/2 + 3/4·φ", "-3 - 5/2·φ"] {
            assert_eq!(s.parse::<GoldenNumber>().unwrap().to_string(), s);
        }
        assert_eq!("φ".parse::<GoldenNumber>().unwrap(), GoldenNumber::phi());
        assert_eq!("1 - φ".parse::<GoldenNumber>().unwrap(), GoldenNumber::psi());
        assert_eq!("-φ".parse::<GoldenNumber>().unwrap(), gn(0, -1));
        assert!("".parse::<GoldenNumber>().is_err());
        assert!("1 - -2·φ".parse::<GoldenNumber>().is_err());
        assert!("1/0".parse::<GoldenNumber>().is_err());
        assert!("abc·φ".parse::<GoldenNumber>().is_err());
    }

    #[test]
    fn json_encoding() {
        let v = GoldenNumber::from_fractions(-1, 2, 3, 1);
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"{"x":"-1/2","y":"3"}"#);
        let back: GoldenNumber = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<GoldenNumber>(r#"{"x":"1/0","y":"0"}"#).is_err());
    }

    #[test]
    fn approximation() {
        let phi = GoldenNumber::phi();
        assert!((phi.approx_f64() - 1.618_033_988_749_895).abs() < 1e-15);
        // φ^-40 has coordinates near 10^8 with opposite signs.
        let tiny = phi.pow(-40).unwrap();
        let expected = 1.618_033_988_749_895f64.powi(-40);
        assert!((tiny.approx_f64() / expected - 1.0).abs() < 1e-12);
    }
}
