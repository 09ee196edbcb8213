//! Murnaghan-Nakayama characters of straight and skew shapes.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::combinatorics::{enumerate_partitions, is_skew_hook, Partition, SkewShape};
use crate::error::{Error, Result};
use crate::limits::{self, Limits};

/// A conjugacy class of `S_k`, given by its cycle lengths.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(parts: Partition) -> Self {
        CycleType(parts)
    }

    /// The class of the identity in `S_k`.
    pub fn identity(k: usize) -> Self {
        CycleType(Partition::column(k))
    }

    /// The class of a full `k`-cycle.
    pub fn full_cycle(k: usize) -> Self {
        CycleType(Partition::row(k))
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[usize] {
        self.0.parts()
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// The same class in `S_n`, `n >= size`, with extra fixed points.
    pub fn padded(&self, n: usize) -> CycleType {
        let mut parts = self.parts().to_vec();
        parts.extend(std::iter::repeat_n(1, n.saturating_sub(self.size())));
        CycleType(Partition::from_unsorted(parts))
    }

    /// `k! / prod_j (j^{m_j} m_j!)`.
    pub fn class_size(&self) -> u128 {
        let mut denom: u128 = 1;
        for (j, &m) in self.0.multiplicities().iter().enumerate().skip(1) {
            denom *= (j as u128).pow(m as u32) * factorial(m);
        }
        factorial(self.size()) / denom
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Comma list of cycle lengths in any order, e.g. `"3,1,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(CycleType(Partition::empty()));
        }
        let parts = s
            .split(',')
            .map(|p| match p.trim().parse::<usize>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(Error::Parse(format!("bad cycle length {p:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CycleType(Partition::from_unsorted(parts)))
    }
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Every way to remove a rim hook of `size` boxes from `shape`, as
/// `(remaining shape, height)`, via beta-numbers.
pub fn rim_hooks(shape: &Partition, size: usize) -> Vec<(Partition, usize)> {
    if size == 0 {
        return Vec::new();
    }
    let rows = shape.rows();
    let beta: Vec<usize> = (0..rows).map(|i| shape.part(i) + rows - 1 - i).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < size || beta.contains(&(b - size)) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > b - size && x < b).count();
        let mut moved = beta.clone();
        moved[i] = b - size;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts = moved.iter().enumerate().map(|(j, &x)| x - (rows - 1 - j)).collect();
        out.push((Partition::from_unsorted(parts), height));
    }
    out
}

/// Memoised Murnaghan-Nakayama recursion.
///
/// Parts are peeled off the outer boundary in the order supplied, the first
/// part outermost.
#[derive(Debug, Default)]
pub struct MnEvaluator {
    memo: HashMap<(Partition, Partition, Vec<usize>), i64>,
}

impl MnEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn evaluate(&mut self, outer: &Partition, inner: &Partition, parts: &[usize]) -> i64 {
        let Some((&first, rest)) = parts.split_first() else {
            return i64::from(outer == inner);
        };
        let key = (outer.clone(), inner.clone(), parts.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for (smaller, height) in rim_hooks(outer, first) {
            if smaller.contains(inner) {
                let sign = if height % 2 == 0 { 1 } else { -1 };
                total += sign * self.evaluate(&smaller, inner, rest);
            }
        }
        self.memo.insert(key, total);
        total
    }

    pub fn character(&mut self, shape: &SkewShape, cycle_type: &CycleType) -> Result<i64> {
        check_sizes(shape, cycle_type.size())?;
        Ok(self.evaluate(shape.outer(), shape.inner(), cycle_type.parts()))
    }
}

fn check_sizes(shape: &SkewShape, total: usize) -> Result<()> {
    if shape.size() != total {
        return Err(Error::SizeMismatch { shape: shape.size(), cycle_type: total });
    }
    Ok(())
}

/// `chi^{shape}` on the class `cycle_type`, peeling the largest part first.
pub fn mn_character(shape: &SkewShape, cycle_type: &CycleType) -> Result<i64> {
    MnEvaluator::new().character(shape, cycle_type)
}

/// The same recursion with the cycle lengths peeled in the given order.
pub fn mn_character_in_order(shape: &SkewShape, parts: &[usize]) -> Result<i64> {
    check_sizes(shape, parts.iter().sum())?;
    Ok(MnEvaluator::new().evaluate(shape.outer(), shape.inner(), parts))
}

/// Value on a full `k`-cycle: `(-1)^height` for a skew hook, otherwise 0.
pub fn full_cycle_character(shape: &SkewShape) -> Result<i64> {
    if shape.size() == 0 {
        return Err(Error::InvalidShape("the full-cycle character needs at least one box".into()));
    }
    Ok(match is_skew_hook(shape) {
        Some(h) if h % 2 == 0 => 1,
        Some(_) => -1,
        None => 0,
    })
}

/// Integer characters of `S_n`: rows are partitions in reverse-lexicographic
/// order, columns are cycle types from the identity class upward.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    pub n: usize,
    #[serde(serialize_with = "as_strings")]
    pub partitions: Vec<Partition>,
    #[serde(serialize_with = "as_strings")]
    pub cycle_types: Vec<CycleType>,
    pub values: Vec<Vec<i64>>,
}

fn as_strings<S, T>(items: &[T], s: S) -> std::result::Result<S::Ok, S::Error>
where
    S: serde::Serializer,
    T: fmt::Display,
{
    s.collect_seq(items.iter().map(ToString::to_string))
}

impl CharacterTable {
    pub fn value(&self, shape: &Partition, cycle_type: &CycleType) -> Option<i64> {
        let r = self.partitions.iter().position(|p| p == shape)?;
        let c = self.cycle_types.iter().position(|p| p == cycle_type)?;
        Some(self.values[r][c])
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("character table serializes")
    }

    /// Header row of cycle types, then one row per partition.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["partition".to_string()];
        header.extend(self.cycle_types.iter().map(ToString::to_string));
        w.write_record(&header).expect("in-memory write");
        for (p, row) in self.partitions.iter().zip(&self.values) {
            let mut record = vec![p.to_string()];
            record.extend(row.iter().map(ToString::to_string));
            w.write_record(&record).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}

impl fmt::Display for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut cells: Vec<Vec<String>> = vec![std::iter::once("".to_string())
            .chain(self.cycle_types.iter().map(ToString::to_string))
            .collect()];
        for (p, row) in self.partitions.iter().zip(&self.values) {
            cells.push(std::iter::once(p.to_string()).chain(row.iter().map(ToString::to_string)).collect());
        }
        let widths: Vec<usize> = (0..cells[0].len())
            .map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(0))
            .collect();
        for row in cells {
            let line: Vec<String> = row.iter().zip(&widths).map(|(x, w)| format!("{x:>w$}")).collect();
            writeln!(f, "{}", line.join("  ").trim_end())?;
        }
        Ok(())
    }
}

pub fn character_table(n: usize) -> Result<CharacterTable> {
    if n == 0 {
        return Err(Error::SizeCap { what: "character table", n, cap: Limits::current().character_table });
    }
    limits::check("character table", n, Limits::current().character_table)?;
    let partitions = enumerate_partitions(n)?;
    let mut cycle_types: Vec<CycleType> = partitions.iter().cloned().map(CycleType).collect();
    cycle_types.reverse();
    let mut eval = MnEvaluator::new();
    let values = partitions
        .iter()
        .map(|p| {
            cycle_types
                .iter()
                .map(|c| eval.evaluate(p, &Partition::empty(), c.parts()))
                .collect()
        })
        .collect();
    Ok(CharacterTable { n, partitions, cycle_types, values })
}

/// Eigenvalue `(-1)^b b! (k-b-1)!` of `X_2 X_3 ... X_k` on a hook of height `b`.
pub fn hook_eigenvalue(k: usize, b: usize) -> Result<i128> {
    if k == 0 || b >= k {
        return Err(Error::IndexOutOfRange { index: b, max: k.saturating_sub(1) });
    }
    let magnitude = (factorial(b) * factorial(k - b - 1)) as i128;
    Ok(if b % 2 == 0 { magnitude } else { -magnitude })
}

/// `(1/k!) sum_g chi^a(g) chi^b(g)` over `S_k`, evaluated class by class.
pub fn character_inner_product(a: &SkewShape, b: &SkewShape) -> Result<BigRational> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch { shape: a.size(), cycle_type: b.size() });
    }
    let k = a.size();
    let mut eval = MnEvaluator::new();
    let mut total = BigInt::zero();
    for rho in enumerate_partitions(k)? {
        let ct = CycleType(rho);
        let x = eval.evaluate(a.outer(), a.inner(), ct.parts());
        let y = eval.evaluate(b.outer(), b.inner(), ct.parts());
        total += BigInt::from(ct.class_size()) * BigInt::from(x) * BigInt::from(y);
    }
    Ok(BigRational::new(total, BigInt::from(factorial(k))))
}

fn as_multiplicity(x: BigRational) -> u64 {
    assert!(x.is_integer(), "character inner products of representations are integers");
    x.to_integer().to_u64().expect("multiplicities are non-negative")
}

/// Multiplicity of the hook `gamma` in `V^{shape}`.
pub fn hook_multiplicity(gamma: &Partition, shape: &SkewShape) -> Result<u64> {
    if gamma.hook_height().is_none() {
        return Err(Error::NotAHook(gamma.to_string()));
    }
    Ok(as_multiplicity(character_inner_product(&SkewShape::straight(gamma.clone()), shape)?))
}

/// Multiplicity of `V^mu` in the restriction of `V^lambda` from `S_|lambda|`
/// to `S_|mu|`, by inner products of characters.
pub fn restriction_multiplicity(lambda: &Partition, mu: &Partition) -> Result<u64> {
    let (n, m) = (lambda.size(), mu.size());
    if m > n {
        return Err(Error::SizeMismatch { shape: m, cycle_type: n });
    }
    let mut eval = MnEvaluator::new();
    let mut total = BigInt::zero();
    for rho in enumerate_partitions(m)? {
        let ct = CycleType(rho);
        let x = eval.evaluate(lambda, &Partition::empty(), ct.padded(n).parts());
        let y = eval.evaluate(mu, &Partition::empty(), ct.parts());
        total += BigInt::from(ct.class_size()) * BigInt::from(x) * BigInt::from(y);
    }
    Ok(as_multiplicity(BigRational::new(total, BigInt::from(factorial(m)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::count_tableaux;

    fn sk(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn ct(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    #[test]
    fn mn_examples() {
        assert_eq!(mn_character(&sk("2,1"), &ct("3")).unwrap(), -1);
        assert_eq!(mn_character(&sk("2,2"), &ct("4")).unwrap(), 0);
        for s in ["3,2", "2,2,1", "4,1", "3,2/1"] {
            let shape = sk(s);
            let dim = mn_character(&shape, &CycleType::identity(shape.size())).unwrap();
            assert_eq!(dim as u128, count_tableaux(&shape));
        }
        assert!(matches!(mn_character(&sk("2,1"), &ct("2")), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn rim_hooks_match_skew_hook_test() {
        // brute force: every contained partition with the right size whose
        // difference is a skew hook
        for lambda in enumerate_partitions(7).unwrap() {
            for r in 1..=7 {
                let mut fast = rim_hooks(&lambda, r);
                fast.sort();
                let mut slow: Vec<(Partition, usize)> = if r > 7 {
                    vec![]
                } else {
                    enumerate_partitions(7 - r)
                        .unwrap()
                        .into_iter()
                        .filter(|mu| lambda.contains(mu))
                        .filter_map(|mu| {
                            let h = is_skew_hook(&SkewShape::new(lambda.clone(), mu.clone()).unwrap())?;
                            Some((mu, h))
                        })
                        .collect()
                };
                slow.sort();
                assert_eq!(fast, slow, "{lambda} r={r}");
            }
        }
    }

    #[test]
    fn full_cycles() {
        assert_eq!(full_cycle_character(&sk("5")).unwrap(), 1);
        for k in 1..7 {
            let col = SkewShape::straight(Partition::column(k));
            assert_eq!(full_cycle_character(&col).unwrap(), if k % 2 == 1 { 1 } else { -1 });
        }
        assert_eq!(full_cycle_character(&sk("3,1/2")).unwrap(), 0);
        assert!(full_cycle_character(&sk("-")).is_err());
    }

    #[test]
    fn small_tables() {
        let t2 = character_table(2).unwrap();
        assert_eq!(t2.values, vec![vec![1, 1], vec![1, -1]]);
        assert_eq!(t2.cycle_types, vec![ct("1,1"), ct("2")]);
        let t3 = character_table(3).unwrap();
        assert_eq!(t3.values[1], vec![2, 0, -1]);
        let t4 = character_table(4).unwrap();
        let first: Vec<i64> = t4.values.iter().map(|r| r[0]).collect();
        assert_eq!(first, vec![1, 3, 2, 3, 1]);
        assert!(character_table(0).is_err());
        assert!(character_table(9).is_err());
    }

    #[test]
    fn table_serializations() {
        let t = character_table(2).unwrap();
        assert_eq!(t.to_csv(), "partition,\"1,1\",2\n2,1,1\n\"1,1\",1,-1\n");
        let v: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(v["partitions"], serde_json::json!(["2", "1,1"]));
        assert_eq!(v["values"], serde_json::json!([[1, 1], [1, -1]]));
    }

    #[test]
    fn class_sizes() {
        assert_eq!(ct("2,1").class_size(), 3);
        assert_eq!(ct("3").class_size(), 2);
        assert_eq!(ct("2,2").class_size(), 3);
        assert_eq!(ct("1,1,1,1").class_size(), 1);
        let total: u128 = enumerate_partitions(6).unwrap().into_iter().map(|p| CycleType::new(p).class_size()).sum();
        assert_eq!(total, 720);
    }

    #[test]
    fn hook_values() {
        assert_eq!(hook_eigenvalue(3, 0).unwrap(), 2);
        assert_eq!(hook_eigenvalue(3, 2).unwrap(), 2);
        assert_eq!(hook_eigenvalue(4, 1).unwrap(), -2);
        assert!(hook_eigenvalue(3, 3).is_err());
        let p = |s: &str| -> Partition { s.parse().unwrap() };
        assert_eq!(hook_multiplicity(&p("2,1"), &sk("2,2/1")).unwrap(), 1);
        assert_eq!(hook_multiplicity(&p("3"), &sk("2,2/1")).unwrap(), 0);
        for g in ["4", "3,1", "2,1,1", "1,1,1,1"] {
            assert_eq!(hook_multiplicity(&p(g), &sk("2,2")).unwrap(), 0);
        }
        assert!(matches!(hook_multiplicity(&p("2,2"), &sk("3,1")), Err(Error::NotAHook(_))));
    }

    #[test]
    fn restriction_counts_paths() {
        let p = |s: &str| -> Partition { s.parse().unwrap() };
        assert_eq!(restriction_multiplicity(&p("3,2"), &p("2,1")).unwrap(), 2);
        assert_eq!(restriction_multiplicity(&p("3,2"), &p("1,1,1")).unwrap(), 0);
    }
}
