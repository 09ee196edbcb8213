//! Character table of S_5, a skew character, and the restriction of a
//! character to S_3.

use symrep::characters::{character_table, mn_character, restriction_multiplicity, CycleType};
use symrep::combinatorics::{Partition, SkewShape};

fn main() -> symrep::Result<()> {
    let table = character_table(5)?;
    print!("{table}");

    let skew: SkewShape = "4,3,1/2,1".parse()?;
    for ct in ["5", "3,2", "1,1,1,1,1"] {
        let rho: CycleType = ct.parse()?;
        println!("chi^{skew}({rho}) = {}", mn_character(&skew, &rho)?);
    }

    let lambda: Partition = "3,2".parse()?;
    for mu in ["3", "2,1", "1,1,1"] {
        let mu: Partition = mu.parse()?;
        println!("{mu} occurs {} times in {lambda} restricted to S_3", restriction_multiplicity(&lambda, &mu)?);
    }
    Ok(())
}
