//! Dense exact matrices over the rationals: products, brackets, and
//! reduced row echelon form with leftmost-pivot selection.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// `E_{rc}`: one at `(r, c)`, zero elsewhere.
    pub fn unit(n: usize, r: usize, c: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        m[(r, c)] = Rational::one();
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
            .expect("ragged literal")
    }

    pub fn from_columns(cols: &[Vec<Rational>]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|col| col.len() != r) {
            return Err(Error::Dimension("ragged matrix columns".into()));
        }
        let mut m = Matrix::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `[A, B] = AB - BA`.
    pub fn bracket(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// `sum coeffs[k] * mats[k]`.
    pub fn combination(coeffs: &[Rational], mats: &[Matrix]) -> Matrix {
        assert_eq!(coeffs.len(), mats.len());
        let (r, c) = mats.first().map_or((0, 0), |m| (m.rows, m.cols));
        let mut out = Matrix::zeros(r, c);
        for (k, m) in coeffs.iter().zip(mats) {
            if k.is_zero() {
                continue;
            }
            for (o, x) in out.data.iter_mut().zip(&m.data) {
                *o += k * x;
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        Echelon::new(self).pivots.len()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| self.row(i).iter().map(format_rational).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows()
            .iter()
            .map(|r| r.iter().map(format_rational).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = Vec::<Vec<String>>::deserialize(d)?;
        let rows = raw
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Matrix::from_rows(rows).map_err(D::Error::custom)
    }
}

/// Reduced row echelon form. Pivots are chosen left to right, taking the
/// first row with a nonzero entry in the pivot column.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(m: &Matrix) -> Self {
        let mut a = m.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..a.cols {
                    a.data.swap(p * a.cols + j, r * a.cols + j);
                }
            }
            let inv = a[(r, c)].recip();
            for j in c..a.cols {
                let v = &a[(r, j)] * &inv;
                a[(r, j)] = v;
            }
            for i in 0..a.rows {
                if i == r || a[(i, c)].is_zero() {
                    continue;
                }
                let factor = a[(i, c)].clone();
                for j in c..a.cols {
                    let v = &a[(r, j)] * &factor;
                    a[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: a, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.reduced.cols).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Basis of the right kernel, one vector per free column, each scaled
    /// so that its first nonzero entry is positive.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let n = self.reduced.cols;
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = vec![Rational::zero(); n];
                v[f] = Rational::one();
                for (row, &p) in self.pivots.iter().enumerate() {
                    v[p] = -self.reduced[(row, f)].clone();
                }
                normalize_sign(v)
            })
            .collect()
    }

    /// Nonzero rows of the reduced form: a basis of the row space.
    pub fn row_basis(&self) -> Vec<Vec<Rational>> {
        (0..self.rank()).map(|i| self.reduced.row(i).to_vec()).collect()
    }

    /// Reduces `v` modulo the row space; the result vanishes on pivot columns.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (j, x) in self.reduced.row(row).iter().enumerate() {
                if !x.is_zero() {
                    out[j] -= &c * x;
                }
            }
        }
        out
    }
}

fn normalize_sign(v: Vec<Rational>) -> Vec<Rational> {
    use num_traits::Signed;
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => v.into_iter().map(|x| -x).collect(),
        _ => v,
    }
}

/// Solution set of `A t = b`: one particular solution plus a kernel basis,
/// or `None` when the system is inconsistent.
pub fn solve(a: &Matrix, b: &[Rational]) -> Result<Option<(Vec<Rational>, Vec<Vec<Rational>>)>> {
    if b.len() != a.rows() {
        return Err(Error::Dimension(format!(
            "right-hand side has {} entries, system has {} equations",
            b.len(),
            a.rows()
        )));
    }
    let n = a.cols();
    let mut aug = Matrix::zeros(a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let e = Echelon::new(&aug);
    if e.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &p) in e.pivots.iter().enumerate() {
        x[p] = e.reduced[(row, n)].clone();
    }
    let kernel = Echelon::new(a).kernel();
    Ok(Some((x, kernel)))
}
