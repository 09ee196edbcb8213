use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use symrep::characters::{character_table, mn_character, mn_character_in_order, CycleType};
use symrep::combinatorics::{
    admissible_transposition, content_vector, count_tableaux, enumerate_partitions, enumerate_tableaux,
    inversion_length, tableau_from_content, validate_content, Cell, Partition, SkewShape, StandardTableau,
};
use symrep::linalg::{int, ratio, Matrix, Scalar};
use symrep::representations::{highest_weight, FormKind, YoungModule};
use symrep::Permutation;

fn partitions(n: usize) -> Vec<Partition> {
    enumerate_partitions(n).unwrap()
}

fn module(p: &Partition) -> YoungModule {
    YoungModule::new(SkewShape::straight(p.clone())).unwrap()
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// A random partition of a random size in `lo..=hi`.
fn partition_strategy(lo: usize, hi: usize) -> impl Strategy<Value = Partition> {
    (lo..=hi).prop_flat_map(|n| {
        let ps = partitions(n);
        (0..ps.len()).prop_map(move |i| ps[i].clone())
    })
}

/// A random standard tableau of straight shape with `lo..=hi` boxes.
fn tableau_strategy(lo: usize, hi: usize) -> impl Strategy<Value = StandardTableau> {
    partition_strategy(lo, hi).prop_flat_map(|p| {
        let tabs = enumerate_tableaux(&SkewShape::straight(p)).unwrap();
        (0..tabs.len()).prop_map(move |i| tabs[i].clone())
    })
}

/// Number of fillings of `cells` increasing along rows and columns, by
/// removing maximal cells one at a time.
fn linear_extensions(cells: &[Cell]) -> u128 {
    fn go(cells: &BTreeSet<Cell>, memo: &mut BTreeMap<Vec<Cell>, u128>) -> u128 {
        if cells.is_empty() {
            return 1;
        }
        let key: Vec<Cell> = cells.iter().copied().collect();
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for &c in cells {
            let right = Cell::new(c.row, c.col + 1);
            let below = Cell::new(c.row + 1, c.col);
            if !cells.contains(&right) && !cells.contains(&below) {
                let mut rest = cells.clone();
                rest.remove(&c);
                total += go(&rest, memo);
            }
        }
        memo.insert(key, total);
        total
    }
    go(&cells.iter().copied().collect(), &mut BTreeMap::new())
}

fn hook_length_count(p: &Partition) -> u128 {
    let n = p.size();
    let mut hooks: u128 = 1;
    for r in 0..p.rows() {
        for c in 0..p.part(r) {
            let arm = p.part(r) - c - 1;
            let leg = (r + 1..p.rows()).filter(|&q| p.part(q) > c).count();
            hooks *= (arm + leg + 1) as u128;
        }
    }
    factorial(n) / hooks
}

#[test]
fn content_round_trip_up_to_eight_boxes() {
    for n in 0..=8 {
        for p in partitions(n) {
            for t in enumerate_tableaux(&SkewShape::straight(p)).unwrap() {
                let alpha = content_vector(&t).unwrap();
                assert_eq!(tableau_from_content(&alpha), t);
            }
        }
    }
}

#[test]
fn validation_is_exact_up_to_eight() {
    for n in 1..=8 {
        let contents: BTreeSet<Vec<i64>> = partitions(n)
            .into_iter()
            .flat_map(|p| enumerate_tableaux(&SkewShape::straight(p)).unwrap())
            .map(|t| t.contents())
            .collect();
        // every content vector starts at 0 and stays within one of the range of
        // its earlier entries
        let mut candidates: Vec<Vec<i64>> = vec![vec![0]];
        for _ in 1..n {
            candidates = candidates
                .into_iter()
                .flat_map(|s| {
                    let lo = s.iter().min().unwrap() - 1;
                    let hi = s.iter().max().unwrap() + 1;
                    (lo..=hi).map(move |a| {
                        let mut t = s.clone();
                        t.push(a);
                        t
                    })
                })
                .collect();
        }
        let valid: BTreeSet<Vec<i64>> = candidates.into_iter().filter(|s| validate_content(s).is_ok()).collect();
        assert_eq!(valid, contents, "n = {n}");
    }
}

#[test]
fn equivalence_classes_are_shapes() {
    for n in 1..=7 {
        let all: Vec<Vec<i64>> = partitions(n)
            .into_iter()
            .flat_map(|p| enumerate_tableaux(&SkewShape::straight(p)).unwrap())
            .map(|t| t.contents())
            .collect();
        // connected components of the graph of admissible swaps
        let index: BTreeMap<Vec<i64>, usize> = all.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        let mut class = vec![usize::MAX; all.len()];
        let mut classes = 0;
        for start in 0..all.len() {
            if class[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            class[start] = classes;
            while let Some(k) = stack.pop() {
                let t = tableau_from_content(&validate_content(&all[k]).unwrap());
                for i in 1..n {
                    if let Some(s) = admissible_transposition(&t, i) {
                        let j = index[&s.contents()];
                        if class[j] == usize::MAX {
                            class[j] = classes;
                            stack.push(j);
                        }
                    }
                }
            }
            classes += 1;
        }
        assert_eq!(classes, partitions(n).len(), "n = {n}");
    }
}

#[test]
fn highest_weight_is_lexicographically_maximal() {
    for n in 1..=7 {
        for p in partitions(n) {
            let top = highest_weight(&p).into_inner();
            let best = enumerate_tableaux(&SkewShape::straight(p.clone()))
                .unwrap()
                .into_iter()
                .map(|t| t.contents())
                .max()
                .unwrap();
            assert_eq!(top, best, "{p}");
        }
    }
}

#[test]
fn tableau_counts_match_hook_lengths() {
    for n in 0..=12 {
        for p in partitions(n) {
            assert_eq!(count_tableaux(&SkewShape::straight(p.clone())), hook_length_count(&p), "{p}");
        }
    }
}

#[test]
fn reduced_words_give_the_same_matrix() {
    let shape: Partition = "2,1,1".parse().unwrap();
    let m = module(&shape);
    let mut distinct = 0;
    for g in Permutation::all(4) {
        let word = g.reduced_word();
        let by_word = m.word(&word, FormKind::Seminormal).unwrap();
        // a second reduced word: peel the largest moved symbol home first
        let mut other = Vec::new();
        let mut rest = g.clone();
        for target in (1..=4).rev() {
            let mut pos = (1..=4).find(|&x| rest.apply(x) == target).unwrap();
            while pos < target {
                rest = &rest * &Permutation::coxeter(pos, 4);
                other.push(pos);
                pos += 1;
            }
        }
        other.reverse();
        assert_eq!(Permutation::from_word(&other, 4), g);
        assert_eq!(other.len(), word.len());
        distinct += usize::from(other != word);
        let by_other = m.word(&other, FormKind::Seminormal).unwrap();
        assert_eq!(by_word.seminormal(), by_other.seminormal(), "g = {g}");
    }
    assert!(distinct > 0);
}

#[test]
fn eigenvector_law() {
    for n in 2..=6 {
        for p in partitions(n) {
            let m = module(&p);
            for i in 1..n {
                let s = m.coxeter_seminormal(i).unwrap();
                for (t, tab) in m.basis().iter().enumerate() {
                    let Some(swapped) = admissible_transposition(tab, i) else { continue };
                    let u = m.index_of(&swapped).unwrap();
                    let r = tab.cell(i + 1).content() - tab.cell(i).content();
                    // (s_i - 1/r) v_T, read off column t
                    let mut image = vec![int(0); m.dim()];
                    for row in 0..m.dim() {
                        image[row] = s[(row, t)].clone();
                    }
                    image[t] -= ratio(1, r);
                    let scale = if inversion_length(tab) < inversion_length(&swapped) {
                        int(1)
                    } else {
                        int(1) - ratio(1, r * r)
                    };
                    for (row, x) in image.iter().enumerate() {
                        let want = if row == u { scale.clone() } else { int(0) };
                        assert_eq!(x, &want, "{p}, i = {i}, T = {tab}");
                    }
                }
            }
        }
    }
}

#[test]
fn yjm_matrices_are_sums_of_transpositions() {
    for n in 1..=5 {
        for p in partitions(n) {
            let m = module(&p);
            for j in 1..=n {
                let mut sum: Matrix<Scalar> = Matrix::zeros(m.dim(), m.dim());
                for i in 1..j {
                    let t = m.permutation(&Permutation::transposition(i, j, n), FormKind::Seminormal).unwrap();
                    sum = &sum + t.seminormal().unwrap();
                }
                let x = m.yjm(j, FormKind::Seminormal).unwrap();
                assert_eq!(x.seminormal().unwrap(), &sum, "{p}, X_{j}");
                for k in 1..=n {
                    let y = m.yjm(k, FormKind::Seminormal).unwrap();
                    let (a, b) = (x.seminormal().unwrap(), y.seminormal().unwrap());
                    assert_eq!(a * b, b * a);
                }
            }
        }
    }
}

#[test]
fn orthogonal_generators_are_orthogonal_and_satisfy_hecke() {
    for n in 2..=8 {
        for p in partitions(n) {
            let m = module(&p);
            let id = Matrix::identity(m.dim());
            for i in 1..n {
                let s = m.coxeter_orthogonal(i).unwrap();
                assert!((&s.transpose() * &s).max_abs_diff(&id) <= 1e-10);
                if n <= 6 {
                    let xi = m.yjm(i, FormKind::Orthogonal).unwrap();
                    let xj = m.yjm(i + 1, FormKind::Orthogonal).unwrap();
                    let lhs = &(&s * xi.orthogonal().unwrap()) + &id;
                    let rhs = xj.orthogonal().unwrap() * &s;
                    assert!(lhs.max_abs_diff(&rhs) <= 1e-10);
                }
            }
        }
    }
}

#[test]
fn character_tables_satisfy_orthogonality() {
    for n in 1..=8 {
        let table = character_table(n).unwrap();
        let k = table.partitions.len();
        let sizes: Vec<i128> = table.cycle_types.iter().map(|c| c.class_size() as i128).collect();
        for a in 0..k {
            for b in 0..k {
                let row: i128 = (0..k)
                    .map(|c| sizes[c] * table.values[a][c] as i128 * table.values[b][c] as i128)
                    .sum();
                assert_eq!(row, if a == b { factorial(n) as i128 } else { 0 }, "rows {a}, {b} of n = {n}");
                let col: i128 = (0..k).map(|r| table.values[r][a] as i128 * table.values[r][b] as i128).sum();
                let want = if a == b { factorial(n) as i128 / sizes[a] } else { 0 };
                assert_eq!(col, want, "columns {a}, {b} of n = {n}");
            }
        }
        let squares: u128 = (0..k).map(|r| (table.values[r][0] * table.values[r][0]) as u128).sum();
        assert_eq!(squares, factorial(n));
    }
}

#[test]
fn number_of_cycle_types_is_number_of_partitions() {
    for n in 1..=7 {
        let classes: BTreeSet<Vec<usize>> =
            Permutation::all(n).iter().map(|g| g.cycle_type().parts().to_vec()).collect();
        assert_eq!(classes.len(), partitions(n).len());
    }
}

fn skew_strategy(max_boxes: usize) -> impl Strategy<Value = SkewShape> {
    (partition_strategy(1, max_boxes + 4), any::<prop::sample::Index>()).prop_filter_map("nonempty", move |(outer, pick)| {
        let inners: Vec<Partition> = (0..outer.size())
            .flat_map(partitions)
            .filter(|mu| outer.contains(mu) && outer.size() - mu.size() <= max_boxes)
            .collect();
        if inners.is_empty() {
            return None;
        }
        SkewShape::new(outer, pick.get(&inners).clone()).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn admissible_swaps_swap_contents(t in tableau_strategy(2, 8), i in 1usize..8) {
        prop_assume!(i < t.size());
        if let Some(s) = admissible_transposition(&t, i) {
            let mut expected = t.contents();
            expected.swap(i - 1, i);
            prop_assert_eq!(s.contents(), expected.clone());
            prop_assert!(validate_content(&expected).is_ok());
            prop_assert_eq!(s.shape(), t.shape());
        } else {
            let (a, b) = (t.cell(i), t.cell(i + 1));
            prop_assert!(a.row == b.row || a.col == b.col);
        }
    }

    #[test]
    fn permutation_matrices_are_a_homomorphism(
        p in partition_strategy(3, 5),
        x in prop::collection::vec(1usize..5, 0..8),
        y in prop::collection::vec(1usize..5, 0..8),
    ) {
        let n = p.size();
        let g = Permutation::from_word(&x.iter().map(|&i| 1 + (i - 1) % (n - 1)).collect::<Vec<_>>(), n);
        let h = Permutation::from_word(&y.iter().map(|&i| 1 + (i - 1) % (n - 1)).collect::<Vec<_>>(), n);
        let m = module(&p);
        let mg = m.permutation(&g, FormKind::Seminormal).unwrap();
        let mh = m.permutation(&h, FormKind::Seminormal).unwrap();
        let mgh = m.permutation(&(&g * &h), FormKind::Seminormal).unwrap();
        prop_assert_eq!(&(mg.seminormal().unwrap() * mh.seminormal().unwrap()), mgh.seminormal().unwrap());
    }

    #[test]
    fn skew_dimension_factors_over_components(shape in skew_strategy(7)) {
        let comps = shape.components();
        let mut expected = factorial(shape.size());
        for c in &comps {
            expected = expected / factorial(c.len()) * linear_extensions(c);
        }
        prop_assert_eq!(count_tableaux(&shape), expected);
        prop_assert_eq!(enumerate_tableaux(&shape).unwrap().len() as u128, expected);
        prop_assert_eq!(linear_extensions(&shape.cells()), expected);
    }

    #[test]
    fn peeling_order_does_not_matter(
        shape in skew_strategy(7),
        seed in any::<prop::sample::Index>(),
    ) {
        let k = shape.size();
        let types: Vec<Partition> = partitions(k);
        let rho = seed.get(&types).clone();
        let decreasing = mn_character(&shape, &CycleType::new(rho.clone())).unwrap();
        let mut increasing = rho.parts().to_vec();
        increasing.reverse();
        prop_assert_eq!(mn_character_in_order(&shape, &increasing).unwrap(), decreasing);
        let module = YoungModule::new(shape.clone()).unwrap();
        let g = Permutation::of_cycle_type(&rho, k);
        prop_assert_eq!(module.trace(&g).unwrap(), int(decreasing));
    }
}
