use std::collections::BTreeMap;

use super::algebra::{AlgebraElement, Coordinates};
use super::subspace::{centralizer, Subspace};
use crate::error::{Error, Result};
use crate::limits::{self, Limits};
use crate::linalg::{kernel, Scalar, SparseVec};
use crate::permutation::Permutation;

/// Deletes the symbol `n` from its cycle, giving an element of `S_{n-1}`.
pub fn virtual_projection(g: &Permutation, n: usize) -> Result<Permutation> {
    if g.degree() != n {
        return Err(Error::DegreeMismatch { expected: n, found: g.degree() });
    }
    if n < 2 {
        return Err(Error::InvalidPermutation("the projection needs degree at least 2".into()));
    }
    let images: Vec<usize> = (1..n)
        .map(|i| {
            let v = g.apply(i);
            if v == n {
                g.apply(n)
            } else {
                v
            }
        })
        .collect();
    Permutation::from_one_line(&images)
}

/// The projection extended linearly to `C[S_n] -> C[S_{n-1}]`.
pub fn project_element(x: &AlgebraElement) -> Result<AlgebraElement> {
    let n = x.degree();
    let mut terms = Vec::with_capacity(x.len());
    for (g, c) in x.terms() {
        terms.push((virtual_projection(g, n)?, c.clone()));
    }
    AlgebraElement::from_terms(n - 1, terms)
}

/// Some `h` fixing `n` with `h g h^{-1} = g^{-1}`, searched over `S_{n-1}`
/// in lexicographic order.
pub fn conjugate_to_inverse(g: &Permutation) -> Result<Permutation> {
    let n = g.degree();
    limits::check("conjugation search", n, Limits::current().conjugation)?;
    if n <= 1 {
        return Ok(Permutation::identity(n));
    }
    let target = g.inverse();
    Permutation::all(n - 1)
        .into_iter()
        .map(|h| h.embed(n))
        .find(|h| &(h * g) * &h.inverse() == target)
        .ok_or_else(|| Error::InvalidPermutation(format!("no conjugating element found for {g}")))
}

/// Elements of the centralizer of `S_{n-1}` in `C[S_n]` supported on the
/// fibre of the projection over the identity, i.e. on `1` and the
/// transpositions `(i n)`.
///
/// Read as a linear condition on the projected element the preimage of
/// scalars is larger (rank 5 at `n = 4`), since coefficients inside one fibre
/// can cancel. The fibre reading is the one under which the intersection is
/// exactly `span{1, X_n}`.
pub fn yjm_from_projection(n: usize) -> Result<Subspace> {
    if n < 2 {
        return Err(Error::DegreeMismatch { expected: 2, found: n });
    }
    limits::check("projection preimage", n, Limits::current().subalgebra)?;
    let basis = centralizer(n, n - 1)?.basis();
    let coords = Coordinates::of(n);
    // one equation per g outside the fibre: its coefficient vanishes
    let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for (k, b) in basis.iter().enumerate() {
        for (g, c) in b.terms() {
            if !virtual_projection(g, n)?.is_identity() {
                rows.entry(coords.index(g)).or_default().push((k, c.clone()));
            }
        }
    }
    let mut out = Subspace::new(n);
    for y in kernel(rows.into_values(), basis.len()) {
        let mut combo = AlgebraElement::zero(n);
        for (k, c) in &y {
            combo = &combo + &basis[*k].scale(c);
        }
        out.insert(&combo)?;
    }
    Ok(out)
}

/// The identity coefficient, i.e. the component along constants.
pub fn identity_component(x: &AlgebraElement) -> Scalar {
    x.coefficient(&Permutation::identity(x.degree()))
}
