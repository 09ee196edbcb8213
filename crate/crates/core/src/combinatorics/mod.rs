//! Partitions, skew shapes, standard tableaux and content vectors.
//!
//! Boxes use English notation with 1-based coordinates: rows go down, columns
//! go right, and the content of a box is `col - row`.

mod content;
mod partition;
mod tableau;

pub use content::{
    content_vector, format_raw, parse_raw, place_on_diagonals, tableau_from_content, tableau_from_raw,
    validate_content, ContentCondition, ContentVector, ContentViolation,
};
pub use partition::{enumerate_partitions, enumerate_skew_shapes, is_skew_hook, young_graph_neighbors, Cell, Partition, SkewShape};
pub use tableau::{
    admissible_transposition, canonical_tableau, count_tableaux, enumerate_tableaux, inversion_length,
    path_to_canonical, StandardTableau,
};

