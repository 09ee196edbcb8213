//! A brute-force model of the group algebra `C[S_n]` over the rationals.
//!
//! Nothing here uses the Young-basis constructions; it exists to check them.

mod algebra;
mod checks;
mod projection;
mod spectrum;
mod subspace;

pub use crate::permutation::Permutation;
pub use algebra::{class_sum, transposition_sum, yjm_element, AlgebraElement, Coordinates};
pub use checks::{run_suite, suite_ceiling, CheckReport, CheckStatus};
pub use projection::{conjugate_to_inverse, identity_component, project_element, virtual_projection, yjm_from_projection};
pub use spectrum::spectrum_bruteforce;
pub use subspace::{center_basis, centralizer, generated_subalgebra, Subspace};
