use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Subspace;
use crate::exactnum::{Field, GaussRat, Rat};
use crate::{Error, Result};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Mat<F> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::SizeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Mat { rows, cols, data })
    }

    /// Builds a matrix from rows, which must all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::SizeMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Mat {
            rows: r,
            cols,
            data,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    /// `e_ij` as an `n×n` matrix unit (0-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.data[i * n + j] = F::one();
        m
    }

    pub fn diag(entries: &[F]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
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

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Mat<G> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Mat {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    fn check_same_shape(&self, o: &Self) {
        assert!(
            self.rows == o.rows && self.cols == o.cols,
            "shape mismatch {}x{} vs {}x{}",
            self.rows,
            self.cols,
            o.rows,
            o.cols
        );
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_same_shape(o);
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b).collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check_same_shape(o);
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b).collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, k: &F) -> Self {
        self.map(|a| a.clone() * k)
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a.clone())
    }

    /// Panics if the inner dimensions differ.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "inner dimension mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    out.data[idx] = out.data[idx].clone() + &(a.clone() * b);
                }
            }
        }
        out
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::SizeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(self.mul(o))
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        (0..self.rows)
            .map(|i| dot(self.row(i), v))
            .collect()
    }

    /// `ab - ba`.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> F {
        assert!(self.is_square());
        (0..self.rows).fold(F::zero(), |acc, i| acc + self.get(i, i))
    }

    /// Kronecker product.
    pub fn kron(&self, o: &Self) -> Self {
        let (r, c) = (self.rows * o.rows, self.cols * o.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        out.set(i * o.rows + k, j * o.cols + l, a.clone() * o.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        self.map(Field::conj)
    }

    /// Stacks the rows of several matrices with equal column counts.
    pub fn vstack(cols: usize, parts: &[&Mat<F>]) -> Self {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "column mismatch in vstack");
            data.extend_from_slice(&p.data);
            rows += p.rows;
        }
        Mat { rows, cols, data }
    }

    /// Reduced row-echelon form (leftmost pivot, pivots normalized to 1, zero
    /// rows dropped) and the pivot columns.
    pub fn rref(&self) -> (Mat<F>, Vec<usize>) {
        let mut rows: Vec<Vec<F>> = self.row_vecs();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&p| !rows[p][c].is_zero()) else {
                continue;
            };
            rows.swap(p, r);
            let inv = rows[r][c].inv().expect("nonzero pivot");
            for x in rows[r].iter_mut().skip(c) {
                *x = x.clone() * &inv;
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let k = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !p.is_zero() {
                        *x = x.clone() - &(k.clone() * p);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        let m = Mat::from_rows(self.cols, rows).expect("rectangular");
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// `{x : self·x = 0}`.
    pub fn nullspace(&self) -> Subspace<F> {
        let (r, pivots) = self.rref();
        let n = self.cols;
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); n];
            v[free] = F::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(k, free).clone();
            }
            basis.push(v);
        }
        Subspace::span(n, &basis)
    }

    /// Some `x` with `self·x = b`, if the system is consistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let aug_rows: Vec<Vec<F>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let aug = Mat::from_rows(self.cols + 1, aug_rows).expect("rectangular");
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = r.get(k, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug_rows: Vec<Vec<F>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
                r
            })
            .collect();
        let (r, pivots) = Mat::from_rows(2 * n, aug_rows).expect("rectangular").rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let data = (0..n)
            .flat_map(|i| r.row(i)[n..].to_vec())
            .collect();
        Some(Mat { rows: n, cols: n, data })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }
}

impl Mat<Rat> {
    pub fn to_gauss(&self) -> Mat<GaussRat> {
        self.map(|r| GaussRat::real(r.clone()))
    }

    /// Integer-entry matrix.
    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Self {
        let data = entries.iter().map(|&n| crate::exactnum::rat(n)).collect();
        Mat::from_vec(rows, cols, data).expect("entry count")
    }
}

impl<F: Field> Mat<F> {
    /// The matrix as rationals, if every entry is one.
    pub fn to_rat(&self) -> Option<Mat<Rat>> {
        let data = self.data.iter().map(Field::to_rat).collect::<Option<Vec<_>>>()?;
        Some(Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(F::zero(), |acc, (x, y)| acc + &(x.clone() * y))
}

impl<F: Field> fmt::Display for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let w = cells.iter().map(|s| s.chars().count()).max().unwrap_or(0);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>w$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Rows of scalars in text form.
pub(crate) fn rows_to_text<F: Field>(rows: &[Vec<F>]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect()
}

pub(crate) fn rows_from_text<F: Field>(rows: &[Vec<String>]) -> std::result::Result<Vec<Vec<F>>, String> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| F::parse_text(x).ok_or_else(|| format!("malformed scalar {x:?}")))
                .collect()
        })
        .collect()
}

impl<F: Field> Serialize for Mat<F> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        rows_to_text(&self.row_vecs()).serialize(s)
    }
}

impl<'de, F: Field> Deserialize<'de> for Mat<F> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text: Vec<Vec<String>> = Vec::deserialize(d)?;
        let rows: Vec<Vec<F>> = rows_from_text(&text).map_err(D::Error::custom)?;
        let cols = rows.first().map_or(0, Vec::len);
        Mat::from_rows(cols, rows).map_err(D::Error::custom)
    }
}
