//! Dense univariate polynomials in `z` over Q(√5).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ring::GoldenNumber;

/// A polynomial `c0 + c1·z + c2·z² + …`, stored with no trailing zero
/// coefficients. The zero polynomial has no coefficients and no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GoldenPoly {
    coeffs: Vec<GoldenNumber>,
}

impl GoldenPoly {
    pub fn from_coeffs(coeffs: Vec<GoldenNumber>) -> Self {
        let mut p = GoldenPoly { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: GoldenNumber) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        Self::monomial(GoldenNumber::one(), 1)
    }

    /// `c·z^k`
    pub fn monomial(c: GoldenNumber, k: usize) -> Self {
        let mut coeffs = vec![GoldenNumber::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// `c0 + c1·z`
    pub fn linear(c0: GoldenNumber, c1: GoldenNumber) -> Self {
        Self::from_coeffs(vec![c0, c1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[GoldenNumber] {
        &self.coeffs
    }

    /// `[z^j] p`; zero beyond the degree.
    pub fn coeff(&self, j: usize) -> GoldenNumber {
        self.coeffs.get(j).cloned().unwrap_or_else(GoldenNumber::zero)
    }

    pub fn scalar_mul(&self, c: &GoldenNumber) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Returns `p(c·z)`: coefficient `j` is multiplied by `c^j`.
    pub fn scale_arg(&self, c: &GoldenNumber) -> Self {
        let mut factor = GoldenNumber::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &factor);
            factor = &factor * c;
        }
        Self::from_coeffs(coeffs)
    }

    /// Exact power by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, z: &GoldenNumber) -> GoldenNumber {
        self.coeffs
            .iter()
            .rev()
            .fold(GoldenNumber::zero(), |acc, c| &acc * z + c)
    }
}

impl Zero for GoldenPoly {
    fn zero() -> Self {
        GoldenPoly::default()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for GoldenPoly {
    fn one() -> Self {
        Self::constant(GoldenNumber::one())
    }
}

impl<'a> Add<&'a GoldenPoly> for &'a GoldenPoly {
    type Output = GoldenPoly;

    fn add(self, rhs: &GoldenPoly) -> GoldenPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        GoldenPoly::from_coeffs(coeffs)
    }
}

impl Add for GoldenPoly {
    type Output = GoldenPoly;

    fn add(self, rhs: GoldenPoly) -> GoldenPoly {
        &self + &rhs
    }
}

impl Neg for &GoldenPoly {
    type Output = GoldenPoly;

    fn neg(self) -> GoldenPoly {
        GoldenPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Sub<&'a GoldenPoly> for &'a GoldenPoly {
    type Output = GoldenPoly;

    fn sub(self, rhs: &GoldenPoly) -> GoldenPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a GoldenPoly> for &'a GoldenPoly {
    type Output = GoldenPoly;

    fn mul(self, rhs: &GoldenPoly) -> GoldenPoly {
        if self.is_zero() || rhs.is_zero() {
            return GoldenPoly::zero();
        }
        let mut coeffs = vec![GoldenNumber::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        GoldenPoly::from_coeffs(coeffs)
    }
}

impl Mul for GoldenPoly {
    type Output = GoldenPoly;

    fn mul(self, rhs: GoldenPoly) -> GoldenPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for GoldenPoly {
    fn sum<I: Iterator<Item = GoldenPoly>>(iter: I) -> Self {
        iter.fold(GoldenPoly::zero(), |acc, p| &acc + &p)
    }
}

/// `c0 + c1·z + c2·z^2`, with compound coefficients parenthesised.
impl fmt::Display for GoldenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let text = c.to_string();
            if j == 0 {
                f.write_str(&text)?;
                continue;
            }
            if text.contains(' ') {
                write!(f, "({text})")?;
            } else {
                f.write_str(&text)?;
            }
            match j {
                1 => f.write_str("·z")?,
                _ => write!(f, "·z^{j}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GoldenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GoldenPoly({self})")
    }
}

/// JSON form: array of coefficients, lowest degree first.
impl Serialize for GoldenPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GoldenPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Vec::<GoldenNumber>::deserialize(deserializer).map(GoldenPoly::from_coeffs)
    }
}
