//! Young's seminormal and orthogonal forms on the basis of standard tableaux.
//!
//! Basis vectors are the standard tableaux of a (possibly skew) shape in the
//! canonical enumeration order, and matrices act on column vectors: column
//! `t` holds the image of basis vector `t`. The row-reading tableau is
//! normalised to 1, which pins every seminormal matrix uniquely.

mod json;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, One, Zero};

use crate::combinatorics::{
    canonical_tableau, content_vector, enumerate_tableaux, inversion_length, young_graph_neighbors, ContentVector,
    Partition, SkewShape, StandardTableau,
};
use crate::error::{Error, Result};
use crate::linalg::{int, ratio, Matrix, Scalar};
use crate::permutation::Permutation;

pub use json::{format_real, matrix_json, MatrixSubject};

/// Which model of the representation to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormKind {
    /// Exact rational entries.
    Seminormal,
    /// Orthonormal basis, machine reals.
    Orthogonal,
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormKind::Seminormal => "seminormal",
            FormKind::Orthogonal => "orthogonal",
        })
    }
}

impl FromStr for FormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "seminormal" => Ok(FormKind::Seminormal),
            "orthogonal" => Ok(FormKind::Orthogonal),
            other => Err(Error::Parse(format!("unknown form {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Entries {
    Seminormal(Matrix<Scalar>),
    Orthogonal(Matrix<f64>),
}

/// A matrix of the action on a Young basis.
#[derive(Debug, Clone, PartialEq)]
pub struct RepMatrix {
    basis: Arc<Vec<StandardTableau>>,
    entries: Entries,
}

impl RepMatrix {
    pub fn form(&self) -> FormKind {
        match self.entries {
            Entries::Seminormal(_) => FormKind::Seminormal,
            Entries::Orthogonal(_) => FormKind::Orthogonal,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    pub fn entries(&self) -> &Entries {
        &self.entries
    }

    pub fn seminormal(&self) -> Option<&Matrix<Scalar>> {
        match &self.entries {
            Entries::Seminormal(m) => Some(m),
            Entries::Orthogonal(_) => None,
        }
    }

    pub fn orthogonal(&self) -> Option<&Matrix<f64>> {
        match &self.entries {
            Entries::Orthogonal(m) => Some(m),
            Entries::Seminormal(_) => None,
        }
    }

    /// Product `self * other`; both must be in the same form on the same basis.
    pub fn compose(&self, other: &RepMatrix) -> RepMatrix {
        let entries = match (&self.entries, &other.entries) {
            (Entries::Seminormal(a), Entries::Seminormal(b)) => Entries::Seminormal(a * b),
            (Entries::Orthogonal(a), Entries::Orthogonal(b)) => Entries::Orthogonal(a * b),
            _ => panic!("cannot compose seminormal and orthogonal matrices"),
        };
        RepMatrix { basis: self.basis.clone(), entries }
    }

    /// Trace as a real number (exact for seminormal matrices with integer trace).
    pub fn trace_f64(&self) -> f64 {
        match &self.entries {
            Entries::Seminormal(m) => {
                let t = m.trace();
                rational_to_f64(&t)
            }
            Entries::Orthogonal(m) => m.trace(),
        }
    }
}

fn rational_to_f64(x: &Scalar) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// `a_{i+1} - a_i` on the contents of `tableau`; never zero for a standard tableau.
pub fn axial_distance(tableau: &StandardTableau, i: usize) -> i64 {
    tableau.cell(i + 1).content() - tableau.cell(i).content()
}

fn to_small(x: &Scalar) -> Option<Ratio<i128>> {
    use num_traits::ToPrimitive;
    Some(Ratio::new_raw(x.numer().to_i128()?, x.denom().to_i128()?))
}

/// `sum_t (M e_t)_t` for `M = M_{w_1} ... M_{w_l}` with each factor given by
/// its sparse columns. `None` when `mul_add` reports an overflow.
fn sparse_trace<T, F>(columns: &[Vec<Vec<(usize, T)>>], word: &[usize], dim: usize, mul_add: F) -> Option<T>
where
    T: Clone + Zero + One,
    F: Fn(&mut T, &T, &T) -> Option<()>,
{
    let mut total = T::zero();
    let mut scratch = vec![T::zero(); dim];
    let mut touched = vec![false; dim];
    for t in 0..dim {
        let mut v: Vec<(usize, T)> = vec![(t, T::one())];
        for &i in word.iter().rev() {
            let mut support = Vec::new();
            for (s, c) in &v {
                for (u, x) in &columns[i - 1][*s] {
                    if !touched[*u] {
                        touched[*u] = true;
                        support.push(*u);
                    }
                    mul_add(&mut scratch[*u], c, x)?;
                }
            }
            v = support
                .into_iter()
                .map(|u| {
                    touched[u] = false;
                    (u, std::mem::replace(&mut scratch[u], T::zero()))
                })
                .filter(|(_, c)| !c.is_zero())
                .collect();
        }
        if let Some((_, c)) = v.iter().find(|(u, _)| *u == t) {
            mul_add(&mut total, c, &T::one())?;
        }
    }
    Some(total)
}

/// The Young basis of a shape with the data needed to build generator matrices.
#[derive(Debug, Clone)]
pub struct YoungModule {
    shape: SkewShape,
    basis: Arc<Vec<StandardTableau>>,
    index: HashMap<Vec<i64>, usize>,
    lengths: Vec<usize>,
}

impl YoungModule {
    pub fn new(shape: SkewShape) -> Result<Self> {
        let basis = enumerate_tableaux(&shape)?;
        let index = basis.iter().enumerate().map(|(i, t)| (t.contents(), i)).collect();
        let lengths = basis.iter().map(inversion_length).collect();
        Ok(YoungModule { shape, basis: Arc::new(basis), index, lengths })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of boxes, the degree of the acting symmetric group.
    pub fn degree(&self) -> usize {
        self.shape.size()
    }

    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    pub fn index_of(&self, tableau: &StandardTableau) -> Option<usize> {
        if tableau.shape() != &self.shape {
            return None;
        }
        self.index.get(&tableau.contents()).copied()
    }

    fn check_generator(&self, i: usize) -> Result<()> {
        let k = self.degree();
        if i == 0 || i >= k {
            return Err(Error::IndexOutOfRange { index: i, max: k.saturating_sub(1) });
        }
        Ok(())
    }

    fn wrap(&self, entries: Entries) -> RepMatrix {
        RepMatrix { basis: self.basis.clone(), entries }
    }

    /// For each basis vector: `None` when `i, i+1` share a row or column
    /// (with the sign of the diagonal entry), otherwise the partner index.
    fn pairing(&self, i: usize) -> Vec<std::result::Result<usize, i64>> {
        self.basis
            .iter()
            .map(|t| {
                let (a, b) = (t.cell(i), t.cell(i + 1));
                if a.row == b.row {
                    Err(1)
                } else if a.col == b.col {
                    Err(-1)
                } else {
                    let mut swapped = t.contents();
                    swapped.swap(i - 1, i);
                    Ok(self.index[&swapped])
                }
            })
            .collect()
    }

    /// Nonzero entries of each column of the seminormal matrix of `s_i`.
    fn seminormal_columns(&self, i: usize) -> Vec<Vec<(usize, Scalar)>> {
        self.pairing(i)
            .into_iter()
            .enumerate()
            .map(|(t, pair)| match pair {
                Err(sign) => vec![(t, int(sign))],
                Ok(u) => {
                    let r = axial_distance(&self.basis[t], i);
                    let off = if self.lengths[t] < self.lengths[u] {
                        Scalar::one()
                    } else {
                        Scalar::one() - ratio(1, r * r)
                    };
                    vec![(t, ratio(1, r)), (u, off)]
                }
            })
            .collect()
    }

    /// Seminormal matrix of `s_i`.
    pub fn coxeter_seminormal(&self, i: usize) -> Result<Matrix<Scalar>> {
        self.check_generator(i)?;
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (t, column) in self.seminormal_columns(i).into_iter().enumerate() {
            for (u, x) in column {
                m[(u, t)] = x;
            }
        }
        Ok(m)
    }

    /// Orthogonal matrix of `s_i`.
    pub fn coxeter_orthogonal(&self, i: usize) -> Result<Matrix<f64>> {
        self.check_generator(i)?;
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (t, pair) in self.pairing(i).into_iter().enumerate() {
            match pair {
                Err(sign) => m[(t, t)] = sign as f64,
                Ok(u) => {
                    let r = axial_distance(&self.basis[t], i) as f64;
                    m[(t, t)] = 1.0 / r;
                    m[(u, t)] = (1.0 - 1.0 / (r * r)).sqrt();
                }
            }
        }
        Ok(m)
    }

    pub fn coxeter(&self, i: usize, form: FormKind) -> Result<RepMatrix> {
        Ok(self.wrap(match form {
            FormKind::Seminormal => Entries::Seminormal(self.coxeter_seminormal(i)?),
            FormKind::Orthogonal => Entries::Orthogonal(self.coxeter_orthogonal(i)?),
        }))
    }

    /// Diagonal matrix of the Jucys-Murphy element acting on the `j`th box.
    pub fn yjm(&self, j: usize, form: FormKind) -> Result<RepMatrix> {
        let k = self.degree();
        if j == 0 || j > k {
            return Err(Error::IndexOutOfRange { index: j, max: k });
        }
        let d = self.dim();
        let contents: Vec<i64> = self.basis.iter().map(|t| t.cell(j).content()).collect();
        Ok(self.wrap(match form {
            FormKind::Seminormal => {
                let mut m = Matrix::zeros(d, d);
                for (t, &c) in contents.iter().enumerate() {
                    m[(t, t)] = int(c);
                }
                Entries::Seminormal(m)
            }
            FormKind::Orthogonal => {
                let mut m = Matrix::zeros(d, d);
                for (t, &c) in contents.iter().enumerate() {
                    m[(t, t)] = c as f64;
                }
                Entries::Orthogonal(m)
            }
        }))
    }

    /// `s_{w_1} s_{w_2} ... s_{w_l}`.
    pub fn word(&self, word: &[usize], form: FormKind) -> Result<RepMatrix> {
        let d = self.dim();
        let mut acc = self.wrap(match form {
            FormKind::Seminormal => Entries::Seminormal(Matrix::identity(d)),
            FormKind::Orthogonal => Entries::Orthogonal(Matrix::identity(d)),
        });
        for &i in word {
            acc = acc.compose(&self.coxeter(i, form)?);
        }
        Ok(acc)
    }

    /// Matrix of `g` through its bubble-sort reduced word.
    pub fn permutation(&self, g: &Permutation, form: FormKind) -> Result<RepMatrix> {
        if g.degree() != self.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: g.degree() });
        }
        self.word(&g.reduced_word(), form)
    }
    /// Exact character value `tr g` in the seminormal form, computed column by
    /// column on sparse vectors without forming the matrix of `g`.
    pub fn trace(&self, g: &Permutation) -> Result<Scalar> {
        if g.degree() != self.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: g.degree() });
        }
        let word = g.reduced_word();
        let columns: Vec<_> = (1..self.degree()).map(|i| self.seminormal_columns(i)).collect();
        let small: Option<Vec<Vec<Vec<(usize, Ratio<i128>)>>>> = columns
            .iter()
            .map(|gen| {
                gen.iter()
                    .map(|col| col.iter().map(|(u, x)| Some((*u, to_small(x)?))).collect())
                    .collect()
            })
            .collect();
        let fast = small.and_then(|cols| {
            sparse_trace(&cols, &word, self.dim(), |acc, c, x| {
                *acc = acc.checked_add(&c.checked_mul(x)?)?;
                Some(())
            })
        });
        if let Some(t) = fast {
            return Ok(Scalar::new((*t.numer()).into(), (*t.denom()).into()));
        }
        let exact = sparse_trace(&columns, &word, self.dim(), |acc, c, x| {
            *acc += c * x;
            Some(())
        });
        Ok(exact.expect("big rationals do not overflow"))
    }
}

pub fn coxeter_matrix(shape: &SkewShape, i: usize, form: FormKind) -> Result<RepMatrix> {
    YoungModule::new(shape.clone())?.coxeter(i, form)
}

pub fn yjm_matrix(shape: &SkewShape, j: usize, form: FormKind) -> Result<RepMatrix> {
    YoungModule::new(shape.clone())?.yjm(j, form)
}

pub fn permutation_matrix(shape: &SkewShape, g: &Permutation, form: FormKind) -> Result<RepMatrix> {
    YoungModule::new(shape.clone())?.permutation(g, form)
}

/// Groups the basis of `V^lambda` by the shape left after removing the box
/// labelled `n`, in Young-graph parent order.
pub fn restrict(shape: &Partition) -> Result<Vec<(Partition, Vec<usize>)>> {
    let n = shape.size();
    if n == 0 {
        return Err(Error::InvalidPartition("cannot restrict the empty diagram".into()));
    }
    let basis = enumerate_tableaux(&SkewShape::straight(shape.clone()))?;
    let (parents, _) = young_graph_neighbors(shape);
    let mut blocks: Vec<(Partition, Vec<usize>)> = parents.into_iter().map(|p| (p, Vec::new())).collect();
    for (t, tab) in basis.iter().enumerate() {
        let prefix = tab.prefix_shape(n - 1);
        let slot = blocks
            .iter_mut()
            .find(|(p, _)| *p == prefix)
            .expect("a prefix shape is always a Young-graph parent");
        slot.1.push(t);
    }
    Ok(blocks)
}

/// Content vector of the row-reading tableau, the lexicographically largest weight.
pub fn highest_weight(shape: &Partition) -> ContentVector {
    content_vector(&canonical_tableau(shape)).expect("straight shape")
}

/// Whether a seminormal matrix is zero.
pub fn is_zero_matrix(m: &Matrix<Scalar>) -> bool {
    (0..m.rows()).all(|i| m.row(i).iter().all(Zero::is_zero))
}
