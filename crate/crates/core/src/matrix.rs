//! Dense square matrices over Z and over Q(√5).
//!
//! Storage is row-major and indices on these generic types are 0-based.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::GoldenNumber;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for r in 0..order {
            for c in 0..order {
                entries.push(f(r, c));
            }
        }
        IntMatrix { order, entries }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let order = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != order) {
            return Err(Error::DimensionMismatch {
                left: order,
                right: bad.len(),
            });
        }
        Ok(IntMatrix {
            order,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |r, c| if r == c { BigInt::one() } else { BigInt::zero() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.order + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.order.max(1))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// `self^m` by `m` successive multiplications.
    pub fn pow_by_repeated_mul(&self, m: u32) -> Self {
        let mut acc = Self::identity(self.order);
        for _ in 0..m {
            acc = &acc * self;
        }
        acc
    }
}

impl<'a> Mul<&'a IntMatrix> for &'a IntMatrix {
    type Output = IntMatrix;

    /// Panics if the orders differ.
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.order, rhs.order, "matrix order mismatch");
        let n = self.order;
        IntMatrix::from_fn(n, |r, c| {
            (0..n)
                .map(|k| self.get(r, k) * rhs.get(k, c))
                .sum()
        })
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (r, row) in self.rows().enumerate() {
            if r > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix({self})")
    }
}

/// Rows of decimal strings, so arbitrarily large entries survive JSON.
impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.order))?;
        for row in self.rows() {
            let row: Vec<String> = row.iter().map(ToString::to_string).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

/// A column vector over Q(√5). `entry` uses 1-based indexing.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct GoldenVector {
    entries: Vec<GoldenNumber>,
}

impl GoldenVector {
    pub fn new(entries: Vec<GoldenNumber>) -> Self {
        GoldenVector { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// 1-based access.
    pub fn entry(&self, i: usize) -> Option<&GoldenNumber> {
        i.checked_sub(1).and_then(|k| self.entries.get(k))
    }

    pub fn as_slice(&self) -> &[GoldenNumber] {
        &self.entries
    }

    pub fn scale(&self, c: &GoldenNumber) -> Self {
        GoldenVector::new(self.entries.iter().map(|v| v * c).collect())
    }

    /// First 1-based index where the vectors differ, if any.
    pub fn first_difference(&self, other: &GoldenVector) -> Option<usize> {
        if self.len() != other.len() {
            return Some(self.len().min(other.len()) + 1);
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|k| k + 1)
    }
}

impl fmt::Debug for GoldenVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries.iter().map(ToString::to_string)).finish()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GoldenMatrix {
    order: usize,
    entries: Vec<GoldenNumber>,
}

impl GoldenMatrix {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> GoldenNumber) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for r in 0..order {
            for c in 0..order {
                entries.push(f(r, c));
            }
        }
        GoldenMatrix { order, entries }
    }

    pub fn from_rows(rows: Vec<Vec<GoldenNumber>>) -> Result<Self> {
        let order = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != order) {
            return Err(Error::DimensionMismatch {
                left: order,
                right: bad.len(),
            });
        }
        Ok(GoldenMatrix {
            order,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[GoldenVector]) -> Result<Self> {
        let order = columns.len();
        if let Some(bad) = columns.iter().find(|c| c.len() != order) {
            return Err(Error::DimensionMismatch {
                left: order,
                right: bad.len(),
            });
        }
        Ok(Self::from_fn(order, |r, c| columns[c].as_slice()[r].clone()))
    }

    pub fn identity(order: usize) -> Self {
        Self::diagonal(&vec![GoldenNumber::one(); order])
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_, _| GoldenNumber::zero())
    }

    pub fn diagonal(diag: &[GoldenNumber]) -> Self {
        Self::from_fn(diag.len(), |r, c| {
            if r == c {
                diag[r].clone()
            } else {
                GoldenNumber::zero()
            }
        })
    }

    /// Embeds an integer matrix.
    pub fn lift(m: &IntMatrix) -> Self {
        Self::from_fn(m.order(), |r, c| GoldenNumber::from(m.get(r, c)))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> &GoldenNumber {
        &self.entries[row * self.order + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[GoldenNumber]> {
        self.entries.chunks(self.order.max(1))
    }

    pub fn column(&self, col: usize) -> GoldenVector {
        GoldenVector::new((0..self.order).map(|r| self.get(r, col).clone()).collect())
    }

    pub fn trace(&self) -> GoldenNumber {
        (0..self.order).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn mul_vec(&self, v: &GoldenVector) -> Result<GoldenVector> {
        if v.len() != self.order {
            return Err(Error::DimensionMismatch {
                left: self.order,
                right: v.len(),
            });
        }
        Ok(GoldenVector::new(
            self.rows()
                .map(|row| row.iter().zip(v.as_slice()).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    /// Multiplies on the right by `diag(d)`, scaling column `c` by `d[c]`.
    pub fn mul_diagonal(&self, d: &[GoldenNumber]) -> Self {
        assert_eq!(d.len(), self.order, "matrix order mismatch");
        Self::from_fn(self.order, |r, c| self.get(r, c) * &d[c])
    }

    /// Converts to an integer matrix; on failure returns the first offending
    /// `(row, col)`.
    pub fn to_int_matrix(&self) -> std::result::Result<IntMatrix, (usize, usize)> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for (k, v) in self.entries.iter().enumerate() {
            match v.to_integer() {
                Some(i) => entries.push(i),
                None => return Err((k / self.order, k % self.order)),
            }
        }
        Ok(IntMatrix {
            order: self.order,
            entries,
        })
    }

    /// Determinant by Gaussian elimination with exact division, pivoting
    /// on the first nonzero entry of each column.
    pub fn det(&self) -> GoldenNumber {
        let n = self.order;
        let mut a = self.entries.clone();
        let mut det = GoldenNumber::one();
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return GoldenNumber::zero();
            };
            if pivot_row != col {
                swap_rows(&mut a, n, pivot_row, col);
                det = -det;
            }
            let pivot = a[col * n + col].clone();
            let pivot_inv = pivot.inv().expect("pivot is nonzero");
            det *= &pivot;
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let factor = &a[r * n + col] * &pivot_inv;
                for c in col..n {
                    let delta = &factor * &a[col * n + c];
                    a[r * n + c] -= delta;
                }
            }
        }
        det
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn invert(&self) -> Result<Self> {
        let n = self.order;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(n).entries;
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !a[r * n + col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot_row != col {
                swap_rows(&mut a, n, pivot_row, col);
                swap_rows(&mut inv, n, pivot_row, col);
            }
            let pivot_inv = a[col * n + col].inv()?;
            for c in 0..n {
                a[col * n + c] *= &pivot_inv;
                inv[col * n + c] *= &pivot_inv;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].clone();
                for c in 0..n {
                    let da = &factor * &a[col * n + c];
                    a[r * n + c] -= da;
                    let di = &factor * &inv[col * n + c];
                    inv[r * n + c] -= di;
                }
            }
        }
        Ok(GoldenMatrix { order: n, entries: inv })
    }
}

fn swap_rows<T>(a: &mut [T], n: usize, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    let (lo, hi) = (r1.min(r2), r1.max(r2));
    let (head, tail) = a.split_at_mut(hi * n);
    head[lo * n..lo * n + n].swap_with_slice(&mut tail[..n]);
}

impl<'a> Mul<&'a GoldenMatrix> for &'a GoldenMatrix {
    type Output = GoldenMatrix;

    /// Panics if the orders differ.
    fn mul(self, rhs: &GoldenMatrix) -> GoldenMatrix {
        assert_eq!(self.order, rhs.order, "matrix order mismatch");
        let n = self.order;
        GoldenMatrix::from_fn(n, |r, c| {
            (0..n).map(|k| self.get(r, k) * rhs.get(k, c)).sum()
        })
    }
}

impl fmt::Debug for GoldenMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .rows()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        f.debug_tuple("GoldenMatrix").field(&rows).finish()
    }
}

/// Array of rows.
impl Serialize for GoldenMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.order))?;
        for row in self.rows() {
            seq.serialize_element(row)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gn(x: i64, y: i64) -> GoldenNumber {
        GoldenNumber::from_integers(x, y)
    }

    fn ints(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| v.into()).collect()).collect())
            .unwrap()
    }

    #[test]
    fn determinant() {
        assert_eq!(GoldenMatrix::identity(1).det(), GoldenNumber::one());
        let u2 = GoldenMatrix::from_rows(vec![vec![gn(1, 0), gn(1, 0)], vec![gn(1, -1), gn(0, 1)]])
            .unwrap();
        assert_eq!(u2.det(), gn(-1, 2));
        let r2 = GoldenMatrix::lift(&ints(&[&[0, 1], &[1, 1]]));
        assert_eq!(r2.det(), gn(-1, 0));
        assert_eq!(GoldenMatrix::zero(3).det(), GoldenNumber::zero());
        // needs a row swap and a nontrivial elimination
        let m = GoldenMatrix::lift(&ints(&[&[0, 2, 1], &[3, 1, 4], &[1, 5, 9]]));
        // cofactor expansion: 0·(9−20) − 2·(27−4) + 1·(15−1) = −32
        assert_eq!(m.det(), gn(-32, 0));
    }

    #[test]
    fn inverse() {
        let id = GoldenMatrix::identity(3);
        assert_eq!(id.invert().unwrap(), id);
        let u2 = GoldenMatrix::from_rows(vec![vec![gn(1, 0), gn(1, 0)], vec![gn(1, -1), gn(0, 1)]])
            .unwrap();
        let inv = u2.invert().unwrap();
        // (1/(2φ−1))·[[φ, −1], [φ−1, 1]]
        let s = gn(-1, 2).inv().unwrap();
        let expected = GoldenMatrix::from_rows(vec![
            vec![&s * &gn(0, 1), &s * &gn(-1, 0)],
            vec![&s * &gn(-1, 1), s.clone()],
        ])
        .unwrap();
        assert_eq!(inv, expected);
        assert_eq!(&u2 * &inv, GoldenMatrix::identity(2));
        assert_eq!(GoldenMatrix::zero(3).invert(), Err(Error::SingularMatrix));
        let singular = GoldenMatrix::lift(&ints(&[&[1, 2], &[2, 4]]));
        assert_eq!(singular.invert(), Err(Error::SingularMatrix));
    }

    #[test]
    fn products() {
        let r = ints(&[&[0, 1], &[1, 1]]);
        assert_eq!(r.pow_by_repeated_mul(5), ints(&[&[3, 5], &[5, 8]]));
        assert_eq!(r.pow_by_repeated_mul(0), IntMatrix::identity(2));
        assert_eq!(r.trace(), BigInt::from(1));
        let g = GoldenMatrix::lift(&r);
        let v = GoldenVector::new(vec![gn(1, 0), gn(0, 1)]);
        assert_eq!(g.mul_vec(&v).unwrap(), GoldenVector::new(vec![gn(0, 1), gn(1, 1)]));
        assert!(g.mul_vec(&GoldenVector::new(vec![gn(1, 0)])).is_err());
        assert_eq!((&g * &g).to_int_matrix().unwrap(), ints(&[&[1, 1], &[1, 2]]));
        let half = GoldenMatrix::diagonal(&[GoldenNumber::from_fractions(1, 2, 0, 1), gn(1, 0)]);
        assert_eq!(half.to_int_matrix(), Err((0, 0)));
    }

    #[test]
    fn vectors() {
        let v = GoldenVector::new(vec![gn(1, 0), gn(0, 1)]);
        assert_eq!(v.entry(0), None);
        assert_eq!(v.entry(2), Some(&gn(0, 1)));
        assert_eq!(v.entry(3), None);
        let w = GoldenVector::new(vec![gn(1, 0), gn(0, 2)]);
        assert_eq!(v.first_difference(&v), None);
        assert_eq!(v.first_difference(&w), Some(2));
    }

    #[test]
    fn int_matrix_json() {
        let r = ints(&[&[0, 1], &[1, 1]]);
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"[["0","1"],["1","1"]]"#);
        assert_eq!(r.to_string(), "[[0,1],[1,1]]");
    }
}
