use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;


use super::algebra::{AlgebraElement, Coordinates};
use crate::error::{Error, Result};
use crate::limits::{self, Limits};
use crate::linalg::{int, kernel, Echelon, SparseVec};
use crate::permutation::Permutation;

/// A subspace of `C[S_n]` held as a reduced row echelon basis in group coordinates.
///
/// Equality compares the reduced bases, so it is equality of subspaces.
#[derive(Debug, Clone)]
pub struct Subspace {
    coords: Arc<Coordinates>,
    echelon: Echelon,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.degree() == other.degree() && self.echelon == other.echelon
    }
}

impl Subspace {
    pub fn new(degree: usize) -> Self {
        let coords = Coordinates::of(degree);
        let echelon = Echelon::new(coords.len());
        Subspace { coords, echelon }
    }

    pub fn spanned_by<'a, I>(degree: usize, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a AlgebraElement>,
    {
        let mut s = Self::new(degree);
        for e in elements {
            s.insert(e)?;
        }
        Ok(s)
    }

    fn from_vectors(degree: usize, vectors: &[SparseVec]) -> Self {
        let mut s = Self::new(degree);
        for v in vectors {
            s.echelon.insert(v);
        }
        s
    }

    pub fn degree(&self) -> usize {
        self.coords.degree()
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn coordinates(&self) -> &Coordinates {
        &self.coords
    }

    fn check_degree(&self, e: &AlgebraElement) -> Result<()> {
        if e.degree() != self.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: e.degree() });
        }
        Ok(())
    }

    /// Adds an element; returns whether the rank grew.
    pub fn insert(&mut self, e: &AlgebraElement) -> Result<bool> {
        self.check_degree(e)?;
        Ok(self.echelon.insert(&e.to_coordinates(&self.coords)))
    }

    pub fn contains(&self, e: &AlgebraElement) -> bool {
        e.degree() == self.degree() && self.echelon.contains(&e.to_coordinates(&self.coords))
    }

    /// Containment: adjoining `other` does not raise the rank.
    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.degree() == self.degree() && other.echelon.rows().iter().all(|r| self.echelon.contains(r))
    }

    /// The reduced basis as algebra elements.
    pub fn basis(&self) -> Vec<AlgebraElement> {
        self.echelon
            .rows()
            .iter()
            .map(|r| AlgebraElement::from_coordinates(&self.coords, r))
            .collect()
    }

    /// Whether all basis elements pairwise commute.
    pub fn is_commutative(&self) -> bool {
        let basis = self.basis();
        basis
            .iter()
            .enumerate()
            .all(|(i, a)| basis[i + 1..].iter().all(|b| a.commutator(b).is_zero()))
    }

    /// `{x in C[S_n] : x y = y x for every y in self}`.
    pub fn commutant(&self) -> Subspace {
        let n = self.coords.len();
        let basis = self.basis();
        let mut equations = Vec::new();
        for y in &basis {
            // column g holds the coordinates of g y - y g
            let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
            for (g_idx, g) in self.coords.elements().iter().enumerate() {
                let ge = AlgebraElement::from_permutation(g.clone());
                for (h, c) in ge.commutator(y).terms() {
                    rows.entry(self.coords.index(h)).or_default().push((g_idx, c.clone()));
                }
            }
            equations.extend(rows.into_values());
        }
        Subspace::from_vectors(self.degree(), &kernel(equations, n))
    }
}

/// The subalgebra generated by `generators` (and the identity) in `C[S_n]`.
///
/// Right-multiplies every newly independent product by every generator until
/// the span stops growing.
pub fn generated_subalgebra(degree: usize, generators: &[AlgebraElement]) -> Result<Subspace> {
    limits::check("generated subalgebra", degree, Limits::current().subalgebra)?;
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
        }
    }
    let mut span = Subspace::new(degree);
    let mut queue = VecDeque::new();
    let identity = AlgebraElement::identity(degree);
    span.insert(&identity)?;
    queue.push_back(identity);
    for g in generators {
        if span.insert(g)? {
            queue.push_back(g.clone());
        }
    }
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = &x * g;
            if span.insert(&y)? {
                queue.push_back(y);
            }
        }
    }
    Ok(span)
}

/// Centralizer of `C[S_m]` in `C[S_n]`: solutions of `s x s = x` for the
/// Coxeter generators `s_1, ..., s_{m-1}`.
pub fn centralizer(n: usize, m: usize) -> Result<Subspace> {
    limits::check("centralizer", n, Limits::current().subalgebra)?;
    if m > n {
        return Err(Error::DegreeMismatch { expected: n, found: m });
    }
    let coords = Coordinates::of(n);
    let mut equations = Vec::new();
    for i in 1..m {
        let s = Permutation::coxeter(i, n);
        for (h_idx, h) in coords.elements().iter().enumerate() {
            let conj = coords.index(&(&(&s * h) * &s));
            if conj > h_idx {
                equations.push(vec![(h_idx, int(1)), (conj, int(-1))]);
            }
        }
    }
    Ok(Subspace::from_vectors(n, &kernel(equations, coords.len())))
}

/// Basis of the center `Z(C[S_n])`: class sums, one per cycle type.
pub fn center_basis(n: usize) -> Vec<AlgebraElement> {
    let mut by_type: BTreeMap<Vec<usize>, Vec<Permutation>> = BTreeMap::new();
    for g in Permutation::all(n) {
        by_type.entry(g.cycle_type().parts().to_vec()).or_default().push(g);
    }
    by_type
        .into_values()
        .rev()
        .map(|perms| AlgebraElement::sum_of(n, perms).expect("same degree"))
        .collect()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::yjm_element;

    #[test]
    fn subalgebra_ranks() {
        let id = generated_subalgebra(3, &[AlgebraElement::identity(3)]).unwrap();
        assert_eq!(id.rank(), 1);
        let xs: Vec<_> = (1..=3).map(|i| yjm_element(i, 3).unwrap()).collect();
        assert_eq!(generated_subalgebra(3, &xs).unwrap().rank(), 4);
        assert!(generated_subalgebra(3, &[AlgebraElement::identity(2)]).is_err());
    }

    #[test]
    fn centralizer_ranks() {
        assert_eq!(centralizer(3, 2).unwrap().rank(), 4);
        assert_eq!(centralizer(3, 3).unwrap().rank(), 3);
        assert_eq!(centralizer(3, 0).unwrap().rank(), 6);
        assert!(centralizer(4, 3).unwrap().is_commutative());
        assert!(!centralizer(3, 1).unwrap().is_commutative());
    }

    #[test]
    fn center_is_spanned_by_class_sums() {
        let z = Subspace::spanned_by(4, &center_basis(4)).unwrap();
        assert_eq!(z, centralizer(4, 4).unwrap());
    }

    #[test]
    fn z2_and_x3_generate_z3() {
        let mut gens: Vec<_> = center_basis(2).iter().map(|e| e.embed(3)).collect();
        gens.push(yjm_element(3, 3).unwrap());
        let span = generated_subalgebra(3, &gens).unwrap();
        let z3 = Subspace::spanned_by(3, &center_basis(3)).unwrap();
        assert!(span.contains_subspace(&z3));
    }

    #[test]
    fn commutant_of_the_center_is_everything() {
        let z = Subspace::spanned_by(3, &center_basis(3)).unwrap();
        assert_eq!(z.commutant().rank(), 6);
    }
}
