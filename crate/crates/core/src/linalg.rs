//! Exact rational vectors and small dense matrices.
//!
//! Everything here is over `Ratio<i64>`. The coordinates that show up in root
//! systems of rank ≤ 8 are tiny (half-integers, small integers), so the fixed
//! width never comes close to overflowing.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always normalized with positive denominator.
pub type Rat = num_rational::Ratio<i64>;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(n)
}

/// Returns the value as an `i64` if it is an integer.
pub fn as_integer(x: &Rat) -> Option<i64> {
    x.is_integer().then(|| x.to_integer())
}

pub fn fmt_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// A vector of rationals in a fixed ambient dimension.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(Vec<Rat>);

impl Vector {
    pub fn new(coords: Vec<Rat>) -> Self {
        Vector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| int(c)).collect())
    }

    /// Coordinates given as halves: `from_halves(&[1, -1])` is `(1/2, -1/2)`.
    pub fn from_halves(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| rat(c, 2)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Vector(vec![Rat::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Rat::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn dot(&self, other: &Vector) -> Rat {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm2(&self) -> Rat {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: Rat) -> Vector {
        Vector(self.0.iter().map(|c| c * s).collect())
    }

    /// Embeds into a bigger space, placing the coordinates at `offset`.
    pub fn embed(&self, dim: usize, offset: usize) -> Vector {
        let mut v = Vector::zero(dim);
        v.0[offset..offset + self.dim()].clone_from_slice(&self.0);
        v
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(fmt_rat).collect()
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl Index<usize> for Vector {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Rat {
        &mut self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector]) -> Self {
        let rows = cols.first().map_or(0, Vector::dim);
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..rows {
                m[(i, j)] = c[i];
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::new((0..self.rows).map(|i| self[(i, j)]).collect())
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.dim());
        Vector::new(
            (0..self.rows)
                .map(|i| (0..self.cols).fold(Rat::zero(), |acc, j| acc + self[(i, j)] * v[j]))
                .collect(),
        )
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::Linear("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = Rat::one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::Linear("singular matrix".into()));
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)];
            }
        }
        Ok(inv)
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let lead = self[(row, col)];
            for j in 0..self.cols {
                self[(row, j)] /= lead;
            }
            for r in 0..self.rows {
                if r != row && !self[(r, col)].is_zero() {
                    let f = self[(r, col)];
                    for j in 0..self.cols {
                        let delta = f * self[(row, j)];
                        self[(r, j)] -= delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<_> = (0..self.cols).map(|j| fmt_rat(&self[(i, j)])).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Number of linearly independent vectors among `vs`.
pub fn rank(vs: &[Vector]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    Matrix::from_columns(vs).rref().len()
}

/// Coordinates of `v` in terms of `basis`, or `None` if `v` is outside the
/// span. The basis must be linearly independent.
pub fn coordinates(basis: &[Vector], v: &Vector) -> Option<Vec<Rat>> {
    let k = basis.len();
    let mut cols = basis.to_vec();
    cols.push(v.clone());
    let mut m = Matrix::from_columns(&cols);
    let pivots = m.rref();
    if pivots.contains(&k) {
        return None;
    }
    let mut out = vec![Rat::zero(); k];
    for (row, &p) in pivots.iter().enumerate() {
        out[p] = m[(row, k)];
    }
    Some(out)
}

/// Basis of the orthogonal complement of the span of `vs` inside `Q^dim`.
pub fn orthogonal_complement(vs: &[Vector], dim: usize) -> Vec<Vector> {
    if vs.is_empty() {
        return (0..dim).map(|i| Vector::unit(dim, i)).collect();
    }
    let mut m = Matrix::from_columns(vs).transpose();
    let pivots = m.rref();
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = Vector::zero(dim);
            x[f] = Rat::one();
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = -m[(row, f)];
            }
            x
        })
        .collect()
}

pub fn is_nonnegative(c: &Rat) -> bool {
    !c.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_in_span() {
        let basis = [Vector::from_ints(&[1, -1, 0]), Vector::from_ints(&[0, 1, -1])];
        let v = Vector::from_ints(&[1, 0, -1]);
        assert_eq!(coordinates(&basis, &v), Some(vec![int(1), int(1)]));
        assert_eq!(coordinates(&basis, &Vector::from_ints(&[1, 1, 1])), None);
    }

    #[test]
    fn complement_is_orthogonal() {
        let vs = [Vector::from_ints(&[1, -1, 0, 0]), Vector::from_ints(&[0, 1, -1, 0])];
        let comp = orthogonal_complement(&vs, 4);
        assert_eq!(comp.len(), 2);
        for c in &comp {
            for v in &vs {
                assert!(c.dot(v).is_zero());
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_columns(&[
            Vector::from_ints(&[2, -1, 0]),
            Vector::from_ints(&[-1, 2, -1]),
            Vector::from_ints(&[0, -2, 2]),
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(3));
        assert!(Matrix::zeros(2, 2).inverse().is_err());
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(fmt_rat(&rat(-3, 6)), "-1/2");
        assert_eq!(Vector::from_halves(&[1, 2]).to_string(), "(1/2, 1)");
    }
}
