//! Acceptance gate. Run with `cargo test --test acceptance`.
//!
//! Each criterion prints one PASS/FAIL line; the process exits nonzero if any
//! criterion fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use symrep::characters::{
    character_table, full_cycle_character, hook_multiplicity, mn_character, CycleType,
};
use symrep::combinatorics::{
    canonical_tableau, enumerate_partitions, enumerate_skew_shapes, enumerate_tableaux, inversion_length,
    is_skew_hook, path_to_canonical, young_graph_neighbors, Partition, SkewShape,
};
use symrep::linalg::{int, Matrix, Scalar};
use symrep::oracle::{
    center_basis, centralizer, class_sum, generated_subalgebra, spectrum_bruteforce, yjm_element,
    yjm_from_projection, AlgebraElement, Subspace,
};
use symrep::representations::{restrict, FormKind, YoungModule};
use symrep::Permutation;

type Verdict = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn within(start: Instant, budget: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= budget, || format!("{what} took {t:.1?}, budget {budget:?}"))
}

fn modules(n: usize) -> Vec<YoungModule> {
    enumerate_partitions(n)
        .unwrap()
        .into_iter()
        .map(|p| YoungModule::new(SkewShape::straight(p)).unwrap())
        .collect()
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn binomial(n: usize, k: usize) -> u128 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Skew shapes with `k` boxes, one per diagram up to translation, drawn from
/// inner partitions of at most `floor(k^2 / 4)` boxes. Every connected skew
/// shape with `k` boxes fits in that range.
fn skew_shapes(k: usize) -> Vec<SkewShape> {
    let mut seen = std::collections::BTreeSet::new();
    enumerate_skew_shapes(k, k * k / 4)
        .unwrap()
        .into_iter()
        .filter(|s| {
            let cells = s.cells();
            let top = cells.iter().map(|c| c.row).min().unwrap_or(0);
            let left = cells.iter().map(|c| c.col).min().unwrap_or(0);
            let key: Vec<(usize, usize)> = cells.iter().map(|c| (c.row - top, c.col - left)).collect();
            seen.insert(key)
        })
        .collect()
}

fn spectrum_identity() -> Verdict {
    let start = Instant::now();
    for n in 1..=5 {
        let brute = spectrum_bruteforce(n).map_err(fail)?;
        let mut expected = BTreeMap::new();
        for p in enumerate_partitions(n).unwrap() {
            let tabs = enumerate_tableaux(&SkewShape::straight(p)).unwrap();
            let dim = tabs.len();
            for t in tabs {
                expected.insert(t.contents(), dim);
            }
        }
        ensure(brute == expected, || format!("n = {n}: oracle tuples differ from content vectors"))?;
    }
    within(start, Duration::from_secs(300), "spectrum")?;
    Ok(format!("n = 1..5 in {:.1?}", start.elapsed()))
}

fn coxeter_relations() -> Verdict {
    let start = Instant::now();
    for n in 2..=7 {
        for m in modules(n) {
            let s: Vec<Matrix<Scalar>> = (1..n).map(|i| m.coxeter_seminormal(i).unwrap()).collect();
            let id = Matrix::identity(m.dim());
            for a in 0..s.len() {
                ensure(&s[a] * &s[a] == id, || format!("s_{}^2 on {}", a + 1, m.shape()))?;
                for b in a + 1..s.len() {
                    let ok = if b == a + 1 {
                        &(&s[a] * &s[b]) * &s[a] == &(&s[b] * &s[a]) * &s[b]
                    } else {
                        &s[a] * &s[b] == &s[b] * &s[a]
                    };
                    ensure(ok, || format!("s_{} s_{} on {}", a + 1, b + 1, m.shape()))?;
                }
            }
        }
    }
    let mut worst: f64 = 0.0;
    for n in 2..=8 {
        for m in modules(n) {
            let s: Vec<Matrix<f64>> = (1..n).map(|i| m.coxeter_orthogonal(i).unwrap()).collect();
            let id = Matrix::identity(m.dim());
            for a in 0..s.len() {
                worst = worst.max((&s[a] * &s[a]).max_abs_diff(&id));
                for b in a + 1..s.len() {
                    let d = if b == a + 1 {
                        (&(&s[a] * &s[b]) * &s[a]).max_abs_diff(&(&(&s[b] * &s[a]) * &s[b]))
                    } else {
                        (&s[a] * &s[b]).max_abs_diff(&(&s[b] * &s[a]))
                    };
                    worst = worst.max(d);
                }
            }
        }
    }
    ensure(worst <= 1e-10, || format!("orthogonal deviation {worst:e}"))?;
    within(start, Duration::from_secs(120), "Coxeter relations")?;
    Ok(format!("exact for n <= 7, orthogonal deviation {worst:.1e} for n <= 8, {:.1?}", start.elapsed()))
}

fn hecke_relation() -> Verdict {
    for n in 2..=7 {
        let one = AlgebraElement::identity(n);
        for i in 1..n {
            let s = AlgebraElement::from_permutation(Permutation::coxeter(i, n));
            let lhs = &(&s * &yjm_element(i, n).unwrap()) + &one;
            let rhs = &yjm_element(i + 1, n).unwrap() * &s;
            ensure(lhs == rhs, || format!("group algebra, n = {n}, i = {i}"))?;
        }
        for m in modules(n) {
            let id = Matrix::identity(m.dim());
            for i in 1..n {
                let s = m.coxeter_seminormal(i).unwrap();
                let xi = m.yjm(i, FormKind::Seminormal).unwrap();
                let xj = m.yjm(i + 1, FormKind::Seminormal).unwrap();
                let lhs = &(&s * xi.seminormal().unwrap()) + &id;
                let rhs = xj.seminormal().unwrap() * &s;
                ensure(lhs == rhs, || format!("matrices, {} i = {i}", m.shape()))?;
            }
        }
    }
    Ok("group algebra and seminormal matrices, n <= 7".into())
}

fn character_consistency() -> Verdict {
    let mut entries = 0;
    for n in 1..=6 {
        let table = character_table(n).map_err(fail)?;
        for (r, m) in modules(n).iter().enumerate() {
            for (c, ct) in table.cycle_types.iter().enumerate() {
                let g = Permutation::of_cycle_type(ct.partition(), n);
                let trace = m.permutation(&g, FormKind::Seminormal).unwrap().seminormal().unwrap().trace();
                ensure(trace == int(table.values[r][c]), || format!("{} at {ct}", m.shape()))?;
                entries += 1;
            }
        }
    }
    let mut shapes = 0;
    for k in 1..=7 {
        let cycle = Permutation::of_cycle_type(CycleType::full_cycle(k).partition(), k);
        for s in skew_shapes(k) {
            let closed = match is_skew_hook(&s) {
                Some(h) if h % 2 == 0 => 1,
                Some(_) => -1,
                None => 0,
            };
            let value = full_cycle_character(&s).map_err(fail)?;
            ensure(value == closed, || format!("{s}: {value} vs closed form {closed}"))?;
            let recursion = mn_character(&s, &CycleType::full_cycle(k)).map_err(fail)?;
            ensure(recursion == closed, || format!("{s}: rim-hook recursion {recursion} vs closed form {closed}"))?;
            let module = YoungModule::new(s.clone()).unwrap();
            let trace = module.trace(&cycle).unwrap();
            ensure(trace == int(closed), || format!("{s}: trace {trace} vs closed form {closed}"))?;
            shapes += 1;
        }
    }
    Ok(format!("{entries} table entries, {shapes} skew shapes"))
}

fn hook_facts() -> Verdict {
    for k in 1..=8 {
        for b in 0..k {
            let d = enumerate_tableaux(&SkewShape::straight(Partition::hook(k - b - 1, b))).unwrap().len();
            ensure(d as u128 == binomial(k - 1, b), || format!("dim of hook ({k}, height {b}) = {d}"))?;
        }
    }
    for k in 1..=6 {
        for b in 0..k {
            let m = YoungModule::new(SkewShape::straight(Partition::hook(k - b - 1, b))).unwrap();
            let mut prod = Matrix::<Scalar>::identity(m.dim());
            for j in 2..=k {
                prod = &prod * m.yjm(j, FormKind::Seminormal).unwrap().seminormal().unwrap();
            }
            let sign = if b % 2 == 0 { 1 } else { -1 };
            let expected = int(sign * (factorial(b) * factorial(k - b - 1)) as i64);
            for r in 0..m.dim() {
                for c in 0..m.dim() {
                    let want = if r == c { expected.clone() } else { int(0) };
                    ensure(prod[(r, c)] == want, || format!("X_2...X_{k} on hook height {b}"))?;
                }
            }
        }
        let mut prod = AlgebraElement::identity(k);
        for j in 2..=k {
            prod = &prod * &yjm_element(j, k).unwrap();
        }
        ensure(prod == class_sum(&CycleType::full_cycle(k), k).unwrap(), || format!("product identity, k = {k}"))?;
    }
    Ok("dimensions k <= 8, eigenvalues and cycle sums k <= 6".into())
}

fn embedded_center(m: usize, n: usize) -> Vec<AlgebraElement> {
    center_basis(m).iter().map(|e| e.embed(n)).collect()
}

fn gz(n: usize) -> Subspace {
    let gens: Vec<_> = (1..=n).flat_map(|m| embedded_center(m, n)).collect();
    generated_subalgebra(n, &gens).unwrap()
}

fn subalgebra_structure() -> Verdict {
    let start = Instant::now();
    for n in 2..=6 {
        let z = centralizer(n, n - 1).map_err(fail)?;
        ensure(z.is_commutative(), || format!("centralizer not commutative, n = {n}"))?;
        let mut gens = embedded_center(n - 1, n);
        gens.push(yjm_element(n, n).unwrap());
        let generated = generated_subalgebra(n, &gens).map_err(fail)?;
        let center = Subspace::spanned_by(n, &center_basis(n)).map_err(fail)?;
        ensure(generated.contains_subspace(&center), || format!("center not contained, n = {n}"))?;
        if n <= 5 {
            ensure(generated == z, || format!("centralizer differs from <Z(n-1), X_n>, n = {n}"))?;
        }
    }
    for n in 1..=5 {
        let xs: Vec<_> = (1..=n).map(|i| yjm_element(i, n).unwrap()).collect();
        ensure(generated_subalgebra(n, &xs).unwrap() == gz(n), || format!("GZ({n}) not generated by YJM elements"))?;
    }
    for n in 1..=4 {
        let g = gz(n);
        ensure(g.commutant() == g, || format!("GZ({n}) is not maximal commutative"))?;
    }
    for n in 4..=6 {
        let s = yjm_from_projection(n).map_err(fail)?;
        ensure(s.rank() == 2, || format!("projection preimage rank {} at n = {n}", s.rank()))?;
        ensure(s.contains(&yjm_element(n, n).unwrap()), || format!("X_{n} outside the preimage"))?;
        ensure(s.contains(&AlgebraElement::identity(n)), || format!("identity outside the preimage, n = {n}"))?;
    }
    within(start, Duration::from_secs(600), "subalgebra checks")?;
    Ok(format!("{:.1?}", start.elapsed()))
}

fn branching() -> Verdict {
    for n in 1..=6 {
        for lambda in enumerate_partitions(n).unwrap() {
            let blocks = restrict(&lambda).map_err(fail)?;
            let (parents, _) = young_graph_neighbors(&lambda);
            let found: Vec<Partition> = blocks.iter().map(|(p, _)| p.clone()).collect();
            ensure(found == parents, || format!("{lambda}: restriction blocks differ from parents"))?;
            for (mu, idx) in &blocks {
                let mult = restricted_character_product(&lambda, mu)?;
                ensure(mult == int(1), || format!("{lambda} over {mu}: multiplicity {mult}"))?;
                let dim = enumerate_tableaux(&SkewShape::straight(mu.clone())).unwrap().len();
                ensure(idx.len() == dim, || format!("{lambda}: block {mu} has {} vectors", idx.len()))?;
            }
            for m in 0..=n {
                for mu in enumerate_partitions(m).unwrap() {
                    let paths = if lambda.contains(&mu) {
                        enumerate_tableaux(&SkewShape::new(lambda.clone(), mu.clone()).unwrap()).unwrap().len()
                    } else {
                        0
                    };
                    let restricted = restricted_character_product(&lambda, &mu)?;
                    ensure(restricted == int(paths as i64), || format!("{lambda} over {mu}: {restricted} vs {paths} paths"))?;
                }
            }
        }
    }
    Ok("|lambda| <= 6".into())
}

/// `<Res chi^lambda, chi^mu>` over `S_m`, with `chi^lambda` restricted along
/// the standard embedding, from full character tables.
fn restricted_character_product(lambda: &Partition, mu: &Partition) -> Result<Scalar, String> {
    let n = lambda.size();
    let m = mu.size();
    if m == 0 {
        return Ok(int(enumerate_tableaux(&SkewShape::straight(lambda.clone())).unwrap().len() as i64));
    }
    let big = character_table(n).map_err(fail)?;
    let small = character_table(m).map_err(fail)?;
    let mut total = Scalar::from_integer(0.into());
    for ct in &small.cycle_types {
        let padded = ct.padded(n);
        let a = big.value(lambda, &padded).unwrap();
        let b = small.value(mu, ct).unwrap();
        total += Scalar::from_integer((ct.class_size() as i64 * a * b).into());
    }
    Ok(total / Scalar::from_integer((factorial(m) as i64).into()))
}

fn dimension_identities() -> Verdict {
    for n in 1..=8 {
        let total: u128 = enumerate_partitions(n)
            .unwrap()
            .into_iter()
            .map(|p| (enumerate_tableaux(&SkewShape::straight(p)).unwrap().len() as u128).pow(2))
            .sum();
        ensure(total == factorial(n), || format!("n = {n}: {total}"))?;
    }
    for n in 1..=5 {
        let total: usize = enumerate_partitions(n)
            .unwrap()
            .into_iter()
            .map(|p| enumerate_tableaux(&SkewShape::straight(p)).unwrap().len())
            .sum();
        ensure(gz(n).rank() == total, || format!("dim GZ({n}) != {total}"))?;
    }
    Ok("squares for n <= 8, GZ dimension for n <= 5".into())
}

fn minimal_paths() -> Verdict {
    let mut count = 0;
    for n in 0..=7 {
        for p in enumerate_partitions(n).unwrap() {
            let target = canonical_tableau(&p);
            for t in enumerate_tableaux(&SkewShape::straight(p.clone())).unwrap() {
                let path = path_to_canonical(&t);
                ensure(path.len() == inversion_length(&t), || format!("{t}: path length {}", path.len()))?;
                let mut cur = t.clone();
                for &i in &path {
                    cur = symrep::combinatorics::admissible_transposition(&cur, i)
                        .ok_or_else(|| format!("{t}: step s_{i} is not admissible"))?;
                }
                ensure(cur == target, || format!("{t}: path ends at {cur}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} tableaux"))
}

fn hook_multiplicities() -> Verdict {
    let mut count = 0;
    for k in 1..=6 {
        for s in skew_shapes(k) {
            let Some(height) = is_skew_hook(&s) else { continue };
            for b in 0..k {
                let gamma = Partition::hook(k - b - 1, b);
                let mult = hook_multiplicity(&gamma, &s).map_err(fail)?;
                ensure(mult == u64::from(b == height), || format!("{gamma} in {s}: {mult}"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} skew hooks"))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("spectrum identity", spectrum_identity),
        ("Coxeter relations", coxeter_relations),
        ("Hecke relation", hecke_relation),
        ("character consistency", character_consistency),
        ("hook facts", hook_facts),
        ("subalgebra structure", subalgebra_structure),
        ("branching", branching),
        ("dimension identities", dimension_identities),
        ("minimal paths", minimal_paths),
        ("hook multiplicities", hook_multiplicities),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = check();
        let elapsed = start.elapsed();
        match verdict.map(|d| format!("{d} [{elapsed:.1?}]")) {
            Ok(detail) => println!("PASS  {:>2}. {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL  {:>2}. {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
