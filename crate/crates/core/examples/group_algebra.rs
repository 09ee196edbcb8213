//! Subalgebras of C[S_4]: the centralizer of S_3, the Gelfand-Tsetlin algebra,
//! and the identity X_2 X_3 X_4 = sum of 4-cycles.

use symrep::characters::CycleType;
use symrep::oracle::{center_basis, centralizer, class_sum, generated_subalgebra, yjm_element, AlgebraElement};

fn main() -> symrep::Result<()> {
    let n = 4;
    let z = centralizer(n, n - 1)?;
    println!("centralizer of S_3 in C[S_4]: dimension {}, commutative: {}", z.rank(), z.is_commutative());

    let xs: Vec<AlgebraElement> = (1..=n).map(|i| yjm_element(i, n)).collect::<Result<_, _>>()?;
    let gz = generated_subalgebra(n, &xs)?;
    println!("algebra generated by X_1..X_4: dimension {}", gz.rank());
    println!("it is its own commutant: {}", gz.commutant() == gz);

    let center = center_basis(n);
    println!("center of C[S_4]: dimension {}", center.len());

    let mut product = AlgebraElement::identity(n);
    for x in &xs[1..] {
        product = &product * x;
    }
    println!("X_2 X_3 X_4 = sum of 4-cycles: {}", product == class_sum(&CycleType::full_cycle(n), n)?);
    println!("X_4 = {}", xs[3]);
    Ok(())
}
