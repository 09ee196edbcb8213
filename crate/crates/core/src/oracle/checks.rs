//! The verification suite behind `symrep verify`.
//!
//! Each check compares a Young-basis construction against an independent
//! computation (the brute-force group algebra, enumeration, or a closed form)
//! for every size from 1 up to the requested `n`, clipped to a per-check ceiling
//! taken from [`Limits`].

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::algebra::{class_sum, yjm_element, AlgebraElement};
use super::projection::{conjugate_to_inverse, virtual_projection, yjm_from_projection};
use super::spectrum::spectrum_bruteforce;
use super::subspace::{center_basis, centralizer, generated_subalgebra, Subspace};
use crate::characters::{
    character_table, factorial, full_cycle_character, hook_eigenvalue, hook_multiplicity, mn_character,
    restriction_multiplicity, CycleType,
};
use crate::combinatorics::{
    admissible_transposition, canonical_tableau, count_tableaux, enumerate_partitions, enumerate_skew_shapes,
    enumerate_tableaux, inversion_length, is_skew_hook, path_to_canonical, validate_content, young_graph_neighbors,
    Partition, SkewShape,
};
use crate::limits::Limits;
use crate::linalg::{int, Matrix, Scalar};
use crate::permutation::Permutation;
use crate::representations::{restrict, YoungModule};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One line of the verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub theorem_ref: String,
    pub n: usize,
    pub status: CheckStatus,
    pub detail: String,
}

type Outcome = std::result::Result<String, String>;

struct Check {
    id: &'static str,
    statement: &'static str,
    min: usize,
    max: fn(&Limits) -> usize,
    run: fn(usize) -> Outcome,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn checks() -> Vec<Check> {
    vec![
        Check { id: "spectrum-equals-content", statement: "Spec(n) = Cont(n)", min: 1, max: |l| l.spectrum, run: spectrum_equals_content },
        Check { id: "content-conditions-exact", statement: "content vectors are characterised by conditions (1)-(3)", min: 1, max: |l| l.matrices, run: content_conditions_exact },
        Check { id: "coxeter-relations-seminormal", statement: "s_i^2 = 1, s_i s_j = s_j s_i, s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}", min: 2, max: |l| l.matrices, run: coxeter_seminormal },
        Check { id: "coxeter-relations-orthogonal", statement: "Coxeter relations and orthogonality of Young's orthogonal form", min: 2, max: |l| l.matrices + 1, run: coxeter_orthogonal },
        Check { id: "hecke-relation-matrices", statement: "s_i X_i + 1 = X_{i+1} s_i on every Young basis", min: 2, max: |l| l.matrices, run: hecke_matrices },
        Check { id: "hecke-relation-algebra", statement: "s_i X_i + 1 = X_{i+1} s_i in C[S_n]", min: 2, max: |l| l.matrices, run: hecke_algebra },
        Check { id: "character-traces", statement: "Murnaghan-Nakayama values equal traces of seminormal matrices", min: 1, max: |l| l.traces, run: character_traces },
        Check { id: "full-cycle-closed-form", statement: "chi^{lambda/mu}(k-cycle) = (-1)^height on skew hooks, else 0", min: 1, max: |l| l.matrices, run: full_cycle_closed_form },
        Check { id: "hook-dimension", statement: "dim (k-b, 1^b) = C(k-1, b)", min: 1, max: |l| l.matrices + 1, run: hook_dimension },
        Check { id: "hook-eigenvalue", statement: "X_2...X_k acts on a hook of height b by (-1)^b b! (k-b-1)!", min: 1, max: |l| l.traces, run: hook_eigenvalues },
        Check { id: "yjm-product-full-cycles", statement: "X_2 X_3 ... X_k = sum of all k-cycles", min: 1, max: |l| l.subalgebra, run: yjm_product_full_cycles },
        Check { id: "center-in-generated", statement: "Z(n) is contained in <Z(n-1), X_n>", min: 2, max: |l| l.subalgebra, run: center_in_generated },
        Check { id: "gz-generated-by-yjm", statement: "<Z(1), ..., Z(n)> = <X_1, ..., X_n>", min: 1, max: |l| l.subalgebra - 1, run: gz_generated_by_yjm },
        Check { id: "centralizer-generated", statement: "Z(n-1,1) = <Z(n-1), X_n>", min: 2, max: |l| l.subalgebra - 1, run: centralizer_generated },
        Check { id: "centralizer-commutative", statement: "the centralizer of C[S_{n-1}] in C[S_n] is commutative", min: 2, max: |l| l.subalgebra, run: centralizer_commutative },
        Check { id: "simple-branching", statement: "restriction to S_{n-1} is multiplicity free along the Young graph", min: 1, max: |l| l.traces, run: simple_branching },
        Check { id: "gz-maximal-commutative", statement: "GZ(n) is its own commutant in C[S_n]", min: 1, max: |l| l.subalgebra - 2, run: gz_maximal },
        Check { id: "gz-dimension", statement: "dim GZ(n) = sum of dim lambda", min: 1, max: |l| l.subalgebra - 1, run: gz_dimension },
        Check { id: "yjm-from-projection", statement: "preimage of scalars in Z(n-1,1) is span{1, X_n}", min: 4, max: |l| l.subalgebra, run: yjm_projection },
        Check { id: "projection-bimodule", statement: "p_n(g_1 h g_2) = g_1 p_n(h) g_2 for g_1, g_2 in S_{n-1}", min: 2, max: |l| l.subalgebra - 1, run: projection_bimodule },
        Check { id: "conjugate-to-inverse", statement: "every g in S_n is conjugate to g^{-1} by some h in S_{n-1}", min: 1, max: |l| l.conjugation, run: conjugation },
        Check { id: "restriction-path-count", statement: "multiplicity of mu in lambda = number of Young-graph paths", min: 1, max: |l| l.traces, run: restriction_paths },
        Check { id: "dimension-sum", statement: "sum over lambda of (dim lambda)^2 = n!", min: 1, max: |l| l.matrices + 1, run: dimension_sum },
        Check { id: "hook-multiplicity", statement: "Hom(V^gamma, V^{lambda/mu}) is 1-dimensional iff heights agree", min: 1, max: |l| l.traces, run: hook_multiplicities },
        Check { id: "minimal-paths", statement: "admissible paths to T^lambda have length l(T)", min: 1, max: |l| l.matrices, run: minimal_paths },
    ]
}

/// Largest size at which at least one check still runs.
pub fn suite_ceiling(limits: &Limits) -> usize {
    checks().iter().map(|c| (c.max)(limits)).max().unwrap_or(0)
}

/// Runs every check for sizes `1..=n`, each clipped to its ceiling.
pub fn run_suite(n: usize, limits: &Limits) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for check in checks() {
        let top = n.min((check.max)(limits));
        for m in check.min..=top {
            let (status, detail) = match (check.run)(m) {
                Ok(d) => (CheckStatus::Pass, d),
                Err(d) => (CheckStatus::Fail, d),
            };
            out.push(CheckReport {
                check_id: check.id.to_string(),
                theorem_ref: check.statement.to_string(),
                n: m,
                status,
                detail,
            });
        }
    }
    out
}

fn partitions(n: usize) -> Vec<Partition> {
    enumerate_partitions(n).expect("within enumeration cap")
}

fn modules(n: usize) -> Vec<YoungModule> {
    partitions(n)
        .into_iter()
        .map(|p| YoungModule::new(SkewShape::straight(p)).expect("within enumeration cap"))
        .collect()
}

fn err(e: crate::Error) -> String {
    e.to_string()
}

fn content_multiset(n: usize) -> BTreeMap<Vec<i64>, usize> {
    let mut out = BTreeMap::new();
    for p in partitions(n) {
        let tabs = enumerate_tableaux(&SkewShape::straight(p)).expect("within cap");
        let dim = tabs.len();
        for t in tabs {
            out.insert(t.contents(), dim);
        }
    }
    out
}

fn spectrum_equals_content(n: usize) -> Outcome {
    let brute = spectrum_bruteforce(n).map_err(err)?;
    let expected = content_multiset(n);
    ensure(brute == expected, || format!("{} eigenvalue tuples vs {} content vectors", brute.len(), expected.len()))?;
    Ok(format!("{} joint eigenvalue tuples match", brute.len()))
}

/// Every sequence with `a_1 = 0` and `|a_q| < q`.
pub(crate) fn candidate_sequences(n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for q in 0..n {
        let bound = q as i64;
        out = out
            .into_iter()
            .flat_map(|s: Vec<i64>| {
                (-bound..=bound).map(move |a| {
                    let mut t = s.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
    }
    out
}

fn content_conditions_exact(n: usize) -> Outcome {
    let valid: BTreeSet<Vec<i64>> =
        candidate_sequences(n).into_iter().filter(|s| validate_content(s).is_ok()).collect();
    let contents: BTreeSet<Vec<i64>> = content_multiset(n).into_keys().collect();
    ensure(valid == contents, || format!("{} validated sequences vs {} tableaux", valid.len(), contents.len()))?;
    Ok(format!("{} content vectors", valid.len()))
}

fn coxeter_seminormal(n: usize) -> Outcome {
    let mut count = 0;
    for m in modules(n) {
        let gens: Vec<Matrix<Scalar>> = (1..n).map(|i| m.coxeter_seminormal(i)).collect::<Result<_, _>>().map_err(err)?;
        let id = Matrix::identity(m.dim());
        for (a, sa) in gens.iter().enumerate() {
            ensure(&(sa * sa) == &id, || format!("s_{}^2 != 1 on {}", a + 1, m.shape()))?;
            ensure((0..m.dim()).all(|r| sa.row_support(r) <= 2), || format!("s_{} not sparse on {}", a + 1, m.shape()))?;
            for (b, sb) in gens.iter().enumerate().skip(a + 1) {
                let ok = if b == a + 1 {
                    &(&(sa * sb) * sa) == &(&(sb * sa) * sb)
                } else {
                    &(sa * sb) == &(sb * sa)
                };
                ensure(ok, || format!("relation between s_{} and s_{} fails on {}", a + 1, b + 1, m.shape()))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} generator pairs"))
}

fn coxeter_orthogonal(n: usize) -> Outcome {
    const TOL: f64 = 1e-10;
    let mut worst: f64 = 0.0;
    for m in modules(n) {
        let gens: Vec<Matrix<f64>> = (1..n).map(|i| m.coxeter_orthogonal(i)).collect::<Result<_, _>>().map_err(err)?;
        let id = Matrix::identity(m.dim());
        for (a, sa) in gens.iter().enumerate() {
            worst = worst.max((sa * sa).max_abs_diff(&id));
            worst = worst.max((&sa.transpose() * sa).max_abs_diff(&id));
            for (b, sb) in gens.iter().enumerate().skip(a + 1) {
                let d = if b == a + 1 {
                    (&(sa * sb) * sa).max_abs_diff(&(&(sb * sa) * sb))
                } else {
                    (sa * sb).max_abs_diff(&(sb * sa))
                };
                worst = worst.max(d);
            }
        }
    }
    ensure(worst <= TOL, || format!("max deviation {worst:e}"))?;
    Ok(format!("max deviation {worst:e}"))
}

fn hecke_matrices(n: usize) -> Outcome {
    use crate::representations::FormKind::Seminormal;
    for m in modules(n) {
        let id: Matrix<Scalar> = Matrix::identity(m.dim());
        for i in 1..n {
            let s = m.coxeter_seminormal(i).map_err(err)?;
            let xi = m.yjm(i, Seminormal).map_err(err)?.seminormal().unwrap().clone();
            let xj = m.yjm(i + 1, Seminormal).map_err(err)?.seminormal().unwrap().clone();
            ensure(&(&s * &xi) + &id == &xj * &s, || format!("fails for i = {i} on {}", m.shape()))?;
        }
    }
    Ok("exact".into())
}

fn hecke_algebra(n: usize) -> Outcome {
    let one = AlgebraElement::identity(n);
    for i in 1..n {
        let s = AlgebraElement::from_permutation(Permutation::coxeter(i, n));
        let lhs = &(&s * &yjm_element(i, n).map_err(err)?) + &one;
        let rhs = &yjm_element(i + 1, n).map_err(err)? * &s;
        ensure(lhs == rhs, || format!("fails for i = {i}"))?;
    }
    Ok("exact".into())
}

fn character_traces(n: usize) -> Outcome {
    use crate::representations::FormKind::Seminormal;
    let table = character_table(n).map_err(err)?;
    for (r, m) in modules(n).iter().enumerate() {
        for (c, ct) in table.cycle_types.iter().enumerate() {
            let g = Permutation::of_cycle_type(ct.partition(), n);
            let trace = m.permutation(&g, Seminormal).map_err(err)?.seminormal().unwrap().trace();
            ensure(trace == int(table.values[r][c]), || format!("chi^{}({ct}) = {} but trace = {trace}", m.shape(), table.values[r][c]))?;
        }
    }
    Ok(format!("{} entries", table.partitions.len() * table.cycle_types.len()))
}

fn skew_shapes(k: usize) -> Vec<SkewShape> {
    enumerate_skew_shapes(k, k * k / 4).expect("within cap")
}

fn full_cycle_closed_form(k: usize) -> Outcome {
    let shapes = skew_shapes(k);
    for s in &shapes {
        let mn = mn_character(s, &CycleType::full_cycle(k)).map_err(err)?;
        let closed = full_cycle_character(s).map_err(err)?;
        ensure(mn == closed, || format!("{s}: recursion {mn}, closed form {closed}"))?;
    }
    Ok(format!("{} skew shapes", shapes.len()))
}

fn binomial(n: usize, k: usize) -> u128 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn hook_dimension(k: usize) -> Outcome {
    for b in 0..k {
        let d = enumerate_tableaux(&SkewShape::straight(Partition::hook(k - b - 1, b))).map_err(err)?.len();
        ensure(d as u128 == binomial(k - 1, b), || format!("height {b}: {d} tableaux"))?;
    }
    Ok("all heights".into())
}

fn hook_eigenvalues(k: usize) -> Outcome {
    use crate::representations::FormKind::Seminormal;
    for b in 0..k {
        let m = YoungModule::new(SkewShape::straight(Partition::hook(k - b - 1, b))).map_err(err)?;
        let mut prod = Matrix::<Scalar>::identity(m.dim());
        for j in 2..=k {
            prod = &prod * m.yjm(j, Seminormal).map_err(err)?.seminormal().unwrap();
        }
        let expected = Scalar::from_integer(hook_eigenvalue(k, b).map_err(err)?.into());
        let scalar = &Matrix::identity(m.dim()).map(|x: &Scalar| x * &expected);
        ensure(&prod == scalar, || format!("height {b}"))?;
    }
    Ok("all heights".into())
}

fn yjm_product_full_cycles(k: usize) -> Outcome {
    let mut prod = AlgebraElement::identity(k);
    for j in 2..=k {
        prod = &prod * &yjm_element(j, k).map_err(err)?;
    }
    let cycles = class_sum(&CycleType::full_cycle(k), k).map_err(err)?;
    ensure(prod == cycles, || "product differs from the class sum".into())?;
    Ok(format!("{} terms", cycles.len()))
}

fn embedded_center(m: usize, n: usize) -> Vec<AlgebraElement> {
    center_basis(m).iter().map(|e| e.embed(n)).collect()
}

fn center_in_generated(n: usize) -> Outcome {
    let mut gens = embedded_center(n - 1, n);
    gens.push(yjm_element(n, n).map_err(err)?);
    let span = generated_subalgebra(n, &gens).map_err(err)?;
    let center = Subspace::spanned_by(n, &center_basis(n)).map_err(err)?;
    ensure(span.contains_subspace(&center), || "Z(n) not contained".into())?;
    Ok(format!("rank {} contains rank {}", span.rank(), center.rank()))
}

fn gz_algebra(n: usize) -> std::result::Result<Subspace, String> {
    let gens: Vec<_> = (1..=n).flat_map(|m| embedded_center(m, n)).collect();
    generated_subalgebra(n, &gens).map_err(err)
}

fn gz_generated_by_yjm(n: usize) -> Outcome {
    let xs: Vec<_> = (1..=n).map(|i| yjm_element(i, n)).collect::<Result<_, _>>().map_err(err)?;
    let by_yjm = generated_subalgebra(n, &xs).map_err(err)?;
    let gz = gz_algebra(n)?;
    ensure(by_yjm == gz, || format!("ranks {} and {}", by_yjm.rank(), gz.rank()))?;
    Ok(format!("rank {}", gz.rank()))
}

fn centralizer_generated(n: usize) -> Outcome {
    let mut gens = embedded_center(n - 1, n);
    gens.push(yjm_element(n, n).map_err(err)?);
    let span = generated_subalgebra(n, &gens).map_err(err)?;
    let z = centralizer(n, n - 1).map_err(err)?;
    ensure(span == z, || format!("ranks {} and {}", span.rank(), z.rank()))?;
    Ok(format!("rank {}", z.rank()))
}

fn centralizer_commutative(n: usize) -> Outcome {
    let z = centralizer(n, n - 1).map_err(err)?;
    ensure(z.is_commutative(), || "two basis elements do not commute".into())?;
    Ok(format!("rank {}", z.rank()))
}

fn simple_branching(n: usize) -> Outcome {
    for m in modules(n) {
        let shape = m.shape().outer().clone();
        let blocks = restrict(&shape).map_err(err)?;
        let (parents, _) = young_graph_neighbors(&shape);
        let found: Vec<Partition> = blocks.iter().map(|(p, _)| p.clone()).collect();
        ensure(found == parents, || format!("{shape}: blocks {found:?}"))?;
        let idx: Vec<Vec<usize>> = blocks.iter().map(|(_, i)| i.clone()).collect();
        for (p, i) in &blocks {
            ensure(i.len() as u128 == count_tableaux(&SkewShape::straight(p.clone())), || format!("{shape}: block {p}"))?;
        }
        for i in 1..n.saturating_sub(1) {
            ensure(m.coxeter_seminormal(i).map_err(err)?.is_block_diagonal(&idx), || format!("{shape}: s_{i} mixes blocks"))?;
        }
    }
    Ok("multiplicity one".into())
}

fn gz_maximal(n: usize) -> Outcome {
    let gz = gz_algebra(n)?;
    let comm = gz.commutant();
    ensure(comm == gz, || format!("commutant rank {} vs {}", comm.rank(), gz.rank()))?;
    Ok(format!("rank {}", gz.rank()))
}

fn gz_dimension(n: usize) -> Outcome {
    let gz = gz_algebra(n)?;
    let total: u128 = partitions(n).into_iter().map(|p| count_tableaux(&SkewShape::straight(p))).sum();
    ensure(gz.rank() as u128 == total, || format!("rank {} vs {total}", gz.rank()))?;
    Ok(format!("rank {total}"))
}

fn yjm_projection(n: usize) -> Outcome {
    let s = yjm_from_projection(n).map_err(err)?;
    let x = yjm_element(n, n).map_err(err)?;
    ensure(s.rank() == 2, || format!("rank {}", s.rank()))?;
    ensure(s.contains(&x) && s.contains(&AlgebraElement::identity(n)), || "X_n or 1 missing".into())?;
    Ok("span{1, X_n}".into())
}

fn projection_bimodule(n: usize) -> Outcome {
    let small: Vec<Permutation> = Permutation::all(n - 1);
    let big = Permutation::all(n);
    for h in &big {
        let ph = virtual_projection(h, n).map_err(err)?;
        for g1 in &small {
            for g2 in &small {
                let lhs = virtual_projection(&(&(&g1.embed(n) * h) * &g2.embed(n)), n).map_err(err)?;
                ensure(lhs == &(g1 * &ph) * g2, || format!("fails at h = {h}"))?;
            }
        }
    }
    Ok(format!("{} triples", big.len() * small.len() * small.len()))
}

fn conjugation(n: usize) -> Outcome {
    for g in Permutation::all(n) {
        let h = conjugate_to_inverse(&g).map_err(err)?;
        ensure(h.apply(n) == n && &(&h * &g) * &h.inverse() == g.inverse(), || format!("bad h for {g}"))?;
    }
    Ok(format!("{} permutations", factorial(n)))
}

fn restriction_paths(n: usize) -> Outcome {
    let mut count = 0;
    for lambda in partitions(n) {
        for m in 0..=n {
            for mu in partitions(m) {
                let via_chars = restriction_multiplicity(&lambda, &mu).map_err(err)?;
                let paths = if lambda.contains(&mu) {
                    count_tableaux(&SkewShape::new(lambda.clone(), mu.clone()).map_err(err)?)
                } else {
                    0
                };
                ensure(via_chars as u128 == paths, || format!("{lambda} over {mu}: {via_chars} vs {paths}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} pairs"))
}

fn dimension_sum(n: usize) -> Outcome {
    let total: u128 = partitions(n).into_iter().map(|p| count_tableaux(&SkewShape::straight(p)).pow(2)).sum();
    ensure(total == factorial(n), || format!("{total} != {n}!"))?;
    Ok(format!("{total}"))
}

fn hook_multiplicities(k: usize) -> Outcome {
    let mut count = 0;
    for s in skew_shapes(k).into_iter() {
        let Some(height) = is_skew_hook(&s) else { continue };
        for b in 0..k {
            let gamma = Partition::hook(k - b - 1, b);
            let mult = hook_multiplicity(&gamma, &s).map_err(err)?;
            ensure(mult == u64::from(b == height), || format!("{gamma} in {s}: {mult}"))?;
        }
        count += 1;
    }
    Ok(format!("{count} skew hooks"))
}

fn minimal_paths(n: usize) -> Outcome {
    for p in partitions(n) {
        let target = canonical_tableau(&p);
        for t in enumerate_tableaux(&SkewShape::straight(p.clone())).map_err(err)? {
            let path = path_to_canonical(&t);
            ensure(path.len() == inversion_length(&t), || format!("{t}: length {}", path.len()))?;
            let mut cur = t.clone();
            for &i in &path {
                cur = admissible_transposition(&cur, i).ok_or_else(|| format!("{t}: step {i} not admissible"))?;
            }
            ensure(cur == target, || format!("{t}: path ends at {cur}"))?;
        }
    }
    Ok("all tableaux".into())
}
