//! Exact rational scalars, small dense matrices and sparse row echelon forms.

use std::collections::BTreeMap;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// `"p/q"`, with `q = 1` written out for integers.
pub fn format_scalar(x: &Scalar) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p.trim().parse().ok()?, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Number of nonzero entries in row `i`.
    pub fn row_support(&self, i: usize) -> usize {
        self.row(i).iter().filter(|x| !x.is_zero()).count()
    }

    /// Whether every nonzero entry couples two indices of the same block.
    pub fn is_block_diagonal(&self, blocks: &[Vec<usize>]) -> bool {
        let mut block_of = vec![usize::MAX; self.rows];
        for (b, idx) in blocks.iter().enumerate() {
            for &i in idx {
                block_of[i] = b;
            }
        }
        (0..self.rows).all(|i| (0..self.cols).all(|j| self[(i, j)].is_zero() || block_of[i] == block_of[j]))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a, T> Mul for &'a Matrix<T>
where
    T: Clone + Zero + One,
    for<'x> &'x T: Mul<&'x T, Output = T>,
{
    type Output = Matrix<T>;

    fn mul(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix shapes do not chain");
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
                        let prod = a * b;
                        let slot = &mut out[(i, j)];
                        *slot = std::mem::replace(slot, T::zero()) + prod;
                    }
                }
            }
        }
        out
    }
}

impl<'a, T> Add for &'a Matrix<T>
where
    T: Clone,
    for<'x> &'x T: Add<&'x T, Output = T>,
{
    type Output = Matrix<T>;

    fn add(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a, T> Sub for &'a Matrix<T>
where
    T: Clone,
    for<'x> &'x T: Sub<&'x T, Output = T>,
{
    type Output = Matrix<T>;

    fn sub(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Matrix<f64> {
    /// Largest absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &Matrix<f64>) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Sparse vector: `(index, value)` pairs sorted by index, no zero values.
pub type SparseVec = Vec<(usize, Scalar)>;

/// `a - c * b` for sparse vectors.
pub fn sparse_sub_scaled(a: &[(usize, Scalar)], c: &Scalar, b: &[(usize, Scalar)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Reduced row echelon form over the rationals, built one row at a time.
///
/// Rows are kept sorted by pivot with pivot entry 1 and zeros in every other
/// pivot column, so two echelon forms of the same row space compare equal.
#[derive(Debug, Clone, PartialEq)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    /// `v` minus its component along the current row space.
    pub fn reduce(&self, v: &[(usize, Scalar)]) -> SparseVec {
        if self.rows.is_empty() {
            return v.iter().filter(|(_, x)| !x.is_zero()).cloned().collect();
        }
        let mut dense: BTreeMap<usize, Scalar> = v.iter().filter(|(_, x)| !x.is_zero()).cloned().collect();
        for row in &self.rows {
            let pivot = row[0].0;
            let Some(c) = dense.get(&pivot).cloned() else { continue };
            for (j, x) in row {
                let entry = dense.entry(*j).or_insert_with(Scalar::zero);
                *entry -= &c * x;
                if entry.is_zero() {
                    dense.remove(j);
                }
            }
        }
        dense.into_iter().collect()
    }

    pub fn contains(&self, v: &[(usize, Scalar)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: &[(usize, Scalar)]) -> bool {
        let mut r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let lead = r[0].1.clone();
        if !lead.is_one() {
            for (_, x) in r.iter_mut() {
                *x /= &lead;
            }
        }
        let pivot = r[0].0;
        for row in self.rows.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&pivot, |(j, _)| *j) {
                let c = row[pos].1.clone();
                *row = sparse_sub_scaled(row, &c, &r);
            }
        }
        let at = self.rows.partition_point(|row| row[0].0 < pivot);
        self.rows.insert(at, r);
        true
    }

    /// Basis of `{x : row . x = 0 for every row}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<SparseVec> {
        let pivots = self.pivots();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v: SparseVec = self
                .rows
                .iter()
                .filter_map(|row| {
                    row.binary_search_by_key(&free, |(j, _)| *j)
                        .ok()
                        .map(|pos| (row[0].0, -row[pos].1.clone()))
                })
                .collect();
            v.push((free, Scalar::one()));
            v.sort_by_key(|(j, _)| *j);
            out.push(v);
        }
        out
    }
}

/// Basis of the solution space of the homogeneous system with the given rows.
pub fn kernel<I>(equations: I, ncols: usize) -> Vec<SparseVec>
where
    I: IntoIterator<Item = SparseVec>,
{
    let mut ech = Echelon::new(ncols);
    for eq in equations {
        ech.insert(&eq);
        if ech.rank() == ncols {
            break;
        }
    }
    ech.nullspace()
}
