//! Joint eigenvalues of the Jucys-Murphy elements on the regular
//! representation of S_4, compared with the content vectors of tableaux.

use symrep::combinatorics::{enumerate_partitions, enumerate_tableaux, SkewShape};
use symrep::oracle::spectrum_bruteforce;

fn main() -> symrep::Result<()> {
    let n = 4;
    let spectrum = spectrum_bruteforce(n)?;
    for p in enumerate_partitions(n)? {
        println!("{p}");
        for t in enumerate_tableaux(&SkewShape::straight(p))? {
            let alpha = t.contents();
            println!("  {alpha:?} with multiplicity {}", spectrum.get(&alpha).copied().unwrap_or(0));
        }
    }
    println!("{} distinct eigenvalue tuples", spectrum.len());
    Ok(())
}
