//! Partitions of 5, the standard tableaux of one shape, and a skew shape.

use symrep::combinatorics::{count_tableaux, enumerate_partitions, enumerate_tableaux, Partition, SkewShape};

fn main() -> symrep::Result<()> {
    for p in enumerate_partitions(5)? {
        println!("{p:>10}  dim {}", count_tableaux(&SkewShape::straight(p.clone())));
    }

    let shape: Partition = "3,2".parse()?;
    println!("\nstandard tableaux of {shape}:");
    for t in enumerate_tableaux(&SkewShape::straight(shape))? {
        println!("  {t}");
    }

    let skew: SkewShape = "3,2/1".parse()?;
    println!("\n{skew} has {} cells in {} component(s) and {} tableaux", skew.size(), skew.components().len(), count_tableaux(&skew));
    Ok(())
}
