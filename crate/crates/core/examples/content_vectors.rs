//! Content vectors: validating integer sequences and walking to the canonical
//! tableau by admissible transpositions.

use symrep::combinatorics::{
    admissible_transposition, content_vector, format_raw, inversion_length, path_to_canonical, tableau_from_raw,
    validate_content,
};

fn main() -> symrep::Result<()> {
    for raw in [vec![0, 1, -1, 0], vec![0, 1, 1], vec![0, -1, 2]] {
        match validate_content(&raw) {
            Ok(alpha) => println!("{alpha} is a content vector"),
            Err(v) => println!("{} fails condition ({}) at position {}", format_raw(&raw), v.condition.number(), v.position),
        }
    }

    let t = tableau_from_raw(&[0, -1, 1, 0, 2])?;
    println!("\ntableau {t} with contents {}", content_vector(&t)?);
    let path = path_to_canonical(&t);
    println!("{} inversions, path {path:?}", inversion_length(&t));
    let mut cur = t;
    for i in path {
        cur = admissible_transposition(&cur, i).expect("every step is admissible");
        println!("  s_{i} -> {cur}");
    }
    Ok(())
}
