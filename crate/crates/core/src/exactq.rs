//! Exact rational scalars, vectors and dense matrices.
//!
//! Every value is kept in canonical form: rationals are reduced with a
//! positive denominator, so structural equality is semantic equality.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Index, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact rational number `numerator / denominator`.
///
/// The denominator is always positive and coprime with the numerator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// `numerator / denominator`, or `None` when the denominator is zero.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Option<Self> {
        let d = denominator.into();
        if d.is_zero() {
            return None;
        }
        Some(Rational(BigRational::new(numerator.into(), d)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn signum(&self) -> Ordering {
        self.0.numer().sign().cmp(&num_bigint::Sign::NoSign)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {literal:?}")]
pub struct ParseRationalError {
    pub literal: String,
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `"p"` or `"p/q"` with an optional sign on the numerator only.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError { literal: s.into() };
        let s_trim = s.trim();
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        let (num, den) = match s_trim.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s_trim, None),
        };
        let unsigned = num.strip_prefix('-').or_else(|| num.strip_prefix('+')).unwrap_or(num);
        if !digits(unsigned) {
            return Err(err());
        }
        let n: BigInt = num.parse().map_err(|_| err())?;
        match den {
            None => Ok(Rational::from_integer(n)),
            Some(d) => {
                if !digits(d) {
                    return Err(err());
                }
                let d: BigInt = d.parse().map_err(|_| err())?;
                Rational::new(n, d).ok_or_else(err)
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    /// Panics on division by zero, like integer division.
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

/// A point or direction in `Q^n`, or a linear functional on it; the
/// role is determined by usage and the pairing is the dot product.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct QVector(Vec<Rational>);

impl QVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        QVector(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        QVector(coords.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        QVector(vec![Rational::zero(); dim])
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = QVector::zeros(dim);
        v.0[axis] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        let mut acc = Rational::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    pub fn scale(&self, factor: &Rational) -> QVector {
        QVector(self.0.iter().map(|c| c * factor).collect())
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, factor: &Rational, other: &QVector) -> QVector {
        QVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + &(factor * b))
                .collect(),
        )
    }

    /// The vector with one extra trailing coordinate.
    pub fn extended(&self, last: Rational) -> QVector {
        let mut c = self.0.clone();
        c.push(last);
        QVector(c)
    }

    /// Drops the trailing coordinate.
    pub fn truncated(&self) -> QVector {
        QVector(self.0[..self.0.len() - 1].to_vec())
    }

    pub fn last(&self) -> &Rational {
        self.0.last().expect("empty vector has no last coordinate")
    }
}

impl Index<usize> for QVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl<'a> Add<&'a QVector> for &'a QVector {
    type Output = QVector;
    fn add(self, rhs: &'a QVector) -> QVector {
        QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a QVector> for &'a QVector {
    type Output = QVector;
    fn sub(self, rhs: &'a QVector) -> QVector {
        QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &QVector {
    type Output = QVector;
    fn neg(self) -> QVector {
        QVector(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Row-major dense rational matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    rows: Vec<QVector>,
    ncols: usize,
}

impl QMatrix {
    /// Panics if a row has the wrong length.
    pub fn new(rows: Vec<QVector>, ncols: usize) -> Self {
        assert!(
            rows.iter().all(|r| r.dim() == ncols),
            "every row must have {ncols} columns"
        );
        QMatrix { rows, ncols }
    }

    pub fn from_i64s(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        QMatrix::new(rows.iter().map(|r| QVector::from_i64s(r)).collect(), ncols)
    }

    pub fn identity(n: usize) -> Self {
        QMatrix::new((0..n).map(|i| QVector::unit(n, i)).collect(), n)
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        QMatrix::new(vec![QVector::zeros(ncols); nrows], ncols)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[QVector] {
        &self.rows
    }

    pub fn mul_vec(&self, x: &QVector) -> QVector {
        QVector(self.rows.iter().map(|r| r.dot(x)).collect())
    }

    /// Reduced row-echelon form and its pivot columns. Zero rows are kept
    /// at the bottom so the shape is unchanged.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m: Vec<Vec<Rational>> = self.rows.iter().map(|r| r.0.clone()).collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.ncols {
            if row == m.len() {
                break;
            }
            let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].recip().expect("pivot is nonzero");
            for c in col..self.ncols {
                m[row][c] = &m[row][c] * &inv;
            }
            for r in 0..m.len() {
                if r == row || m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].clone();
                for c in col..self.ncols {
                    let delta = &f * &m[row][c];
                    m[r][c] -= &delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        let rows = m.into_iter().map(QVector).collect();
        (QMatrix::new(rows, self.ncols), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{v : self * v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<QVector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.ncols];
                v[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -&r.rows[i][f];
                }
                QVector(v)
            })
            .collect()
    }

    /// One exact solution of `self * x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &QVector) -> Option<QVector> {
        assert_eq!(b.dim(), self.nrows(), "right-hand side has wrong length");
        let augmented = QMatrix::new(
            self.rows
                .iter()
                .zip(b.iter())
                .map(|(r, bi)| r.extended(bi.clone()))
                .collect(),
            self.ncols + 1,
        );
        let (r, pivots) = augmented.rref();
        if pivots.last() == Some(&self.ncols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.ncols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.rows[i][self.ncols].clone();
        }
        Some(QVector(x))
    }
}

/// Integer vector with gcd 1, positive multiple of the input direction.
/// The zero vector maps to the zero vector.
pub(crate) fn primitive_integer(coords: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in coords {
        lcm = lcm.lcm(c.denominator());
    }
    let ints: Vec<BigInt> = coords
        .iter()
        .map(|c| c.numerator() * (&lcm / c.denominator()))
        .collect();
    primitive_bigint(ints)
}

pub(crate) fn primitive_bigint(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in &mut v {
            *c = &*c / &g;
        }
    }
    v
}

pub(crate) fn to_rationals(v: &[BigInt]) -> QVector {
    QVector(v.iter().cloned().map(Rational::from_integer).collect())
}
