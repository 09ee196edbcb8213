use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::characters::CycleType;
use crate::error::{Error, Result};
use crate::linalg::{int, Scalar, SparseVec};
use crate::permutation::Permutation;

/// A rational linear combination of permutations of one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, Scalar>,
}

impl AlgebraElement {
    pub fn zero(degree: usize) -> Self {
        AlgebraElement { degree, terms: BTreeMap::new() }
    }

    pub fn identity(degree: usize) -> Self {
        Self::from_permutation(Permutation::identity(degree))
    }

    pub fn from_permutation(g: Permutation) -> Self {
        let degree = g.degree();
        AlgebraElement { degree, terms: BTreeMap::from([(g, Scalar::one())]) }
    }

    /// Sums the coefficients of repeated permutations and drops zeros.
    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, Scalar)>,
    {
        let mut out = Self::zero(degree);
        for (g, c) in terms {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
            out.add_term(g, c);
        }
        Ok(out)
    }

    /// Sum of the given permutations with coefficient 1 each.
    pub fn sum_of<I: IntoIterator<Item = Permutation>>(degree: usize, perms: I) -> Result<Self> {
        Self::from_terms(degree, perms.into_iter().map(|g| (g, Scalar::one())))
    }

    fn add_term(&mut self, g: Permutation, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of permutations with a nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, g: &Permutation) -> Scalar {
        self.terms.get(g).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Scalar)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        AlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(g, x)| (g.clone(), x * c)).collect(),
        }
    }

    /// Image under `C[S_n] -> C[S_m]`, `m >= n`.
    pub fn embed(&self, m: usize) -> Self {
        AlgebraElement {
            degree: m,
            terms: self.terms.iter().map(|(g, x)| (g.embed(m), x.clone())).collect(),
        }
    }

    /// Applies a map on group elements linearly.
    pub fn map_linear<F: Fn(&Permutation) -> Permutation>(&self, degree: usize, f: F) -> Self {
        let mut out = Self::zero(degree);
        for (g, c) in &self.terms {
            out.add_term(f(g), c.clone());
        }
        out
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn to_coordinates(&self, coords: &Coordinates) -> SparseVec {
        let mut v: SparseVec = self.terms.iter().map(|(g, c)| (coords.index(g), c.clone())).collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn from_coordinates(coords: &Coordinates, v: &[(usize, Scalar)]) -> Self {
        AlgebraElement {
            degree: coords.degree(),
            terms: v
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (coords.element(*i).clone(), c.clone()))
                .collect(),
        }
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.degree, rhs.degree, "algebra degrees differ");
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self + &(-rhs)
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        self.scale(&int(-1))
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;

    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.degree, rhs.degree, "algebra degrees differ");
        let mut acc: HashMap<Permutation, Scalar> = HashMap::new();
        for (g, a) in &self.terms {
            for (h, b) in &rhs.terms {
                *acc.entry(g * h).or_insert_with(Scalar::zero) += a * b;
            }
        }
        AlgebraElement {
            degree: self.degree,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let items: Vec<String> = self
            .terms
            .iter()
            .map(|(g, c)| if c.is_one() { g.to_string() } else { format!("{c}*{g}") })
            .collect();
        f.write_str(&items.join(" + "))
    }
}

/// Indexing of `S_n` used as coordinates on the group algebra.
#[derive(Debug)]
pub struct Coordinates {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl Coordinates {
    fn build(degree: usize) -> Self {
        let elements = Permutation::all(degree);
        let index = elements.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
        Coordinates { degree, elements, index }
    }

    /// Shared coordinates for `S_n`.
    pub fn of(degree: usize) -> Arc<Coordinates> {
        static CACHE: Mutex<Vec<(usize, Arc<Coordinates>)>> = Mutex::new(Vec::new());
        let mut cache = CACHE.lock().unwrap_or_else(|e| e.into_inner());
        if let Some((_, c)) = cache.iter().find(|(d, _)| *d == degree) {
            return c.clone();
        }
        let c = Arc::new(Coordinates::build(degree));
        cache.push((degree, c.clone()));
        c
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `n!`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index(&self, g: &Permutation) -> usize {
        self.index[g]
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }
}

/// `X_i = (1 i) + (2 i) + ... + (i-1 i)` in `C[S_n]`; `X_1 = 0`.
pub fn yjm_element(i: usize, n: usize) -> Result<AlgebraElement> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    AlgebraElement::sum_of(n, (1..i).map(|j| Permutation::transposition(j, i, n)))
}

/// Sum of all permutations of `S_n` of the given cycle type (padded with fixed points).
pub fn class_sum(cycle_type: &CycleType, n: usize) -> Result<AlgebraElement> {
    if cycle_type.size() > n {
        return Err(Error::SizeMismatch { shape: n, cycle_type: cycle_type.size() });
    }
    let target = cycle_type.padded(n);
    AlgebraElement::sum_of(
        n,
        Permutation::all(n).into_iter().filter(|g| g.cycle_type() == *target.partition()),
    )
}

/// Sum of all transpositions of `S_m` inside `C[S_n]`.
pub fn transposition_sum(m: usize, n: usize) -> AlgebraElement {
    let mut out = AlgebraElement::zero(n);
    for b in 2..=m {
        for a in 1..b {
            out.add_term(Permutation::transposition(a, b, n), Scalar::one());
        }
    }
    out
}
