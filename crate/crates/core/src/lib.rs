//! Irreducible representations of the symmetric groups built from content
//! vectors and Jucys-Murphy elements.
//!
//! * [`combinatorics`]: partitions, standard tableaux, content vectors.
//! * [`representations`]: Young's seminormal (exact) and orthogonal forms.
//! * [`characters`]: Murnaghan-Nakayama characters of straight and skew shapes.
//! * [`oracle`]: brute-force group algebra used to check the constructions.
//! * [`cli`]: the `symrep` command-line front end.

pub mod characters;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod limits;
pub mod linalg;
pub mod oracle;
pub mod permutation;
pub mod representations;

pub use error::{Error, Result};
pub use limits::Limits;
pub use permutation::Permutation;
