//! Seminormal and orthogonal matrices for the shape (3,1), and the relation
//! s_i X_i + 1 = X_{i+1} s_i checked on them.

use symrep::combinatorics::SkewShape;
use symrep::linalg::{format_scalar, Matrix, Scalar};
use symrep::representations::{FormKind, YoungModule};
use symrep::Permutation;

fn show(m: &Matrix<Scalar>) {
    for r in m.to_rows() {
        let cells: Vec<String> = r.iter().map(format_scalar).collect();
        println!("  [{}]", cells.join(", "));
    }
}

fn main() -> symrep::Result<()> {
    let module = YoungModule::new("3,1".parse::<SkewShape>()?)?;
    let basis: Vec<String> = module.basis().iter().map(ToString::to_string).collect();
    println!("basis: {}", basis.join("  "));

    for i in 1..module.degree() {
        println!("s_{i} (seminormal):");
        show(&module.coxeter_seminormal(i)?);
    }

    let g = Permutation::parse_cycles("(1 2 3 4)", 4)?;
    let m = module.permutation(&g, FormKind::Orthogonal)?;
    println!("{g} (orthogonal), trace {:.6}:", m.trace_f64());
    for row in m.orthogonal().expect("orthogonal form").to_rows() {
        println!("  {row:.4?}");
    }

    let id = Matrix::identity(module.dim());
    for i in 1..module.degree() {
        let s = module.coxeter_seminormal(i)?;
        let xi = module.yjm(i, FormKind::Seminormal)?;
        let xj = module.yjm(i + 1, FormKind::Seminormal)?;
        let holds = &(&s * xi.seminormal().unwrap()) + &id == xj.seminormal().unwrap() * &s;
        println!("s_{i} X_{i} + 1 = X_{} s_{i}: {holds}", i + 1);
    }
    Ok(())
}
