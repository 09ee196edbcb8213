//! Permutations of `{1, ..., n}` in one-line notation.
//!
//! Products apply the right factor first: `(g * h)(x) = g(h(x))`.

use std::fmt;
use std::ops::Mul;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // 0-based images
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From 1-based one-line notation `[g(1), ..., g(n)]`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &v in one_line {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidPermutation(format!("{one_line:?} is not a bijection of 1..={n}")));
            }
            images.push(v - 1);
        }
        Ok(Permutation { images })
    }

    /// From disjoint cycles of 1-based points, padded with fixed points to degree `n`.
    pub fn from_cycles(cycles: &[Vec<usize>], n: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                    return Err(Error::InvalidPermutation(format!("cycles {cycles:?} are not disjoint in 1..={n}")));
                }
                images[x - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// The transposition `(a b)` in `S_n`, 1-based.
    pub fn transposition(a: usize, b: usize, n: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    /// The Coxeter generator `s_i = (i, i+1)`.
    pub fn coxeter(i: usize, n: usize) -> Self {
        Self::transposition(i, i + 1, n)
    }

    /// `s_{w_1} s_{w_2} ... s_{w_k}` in `S_n`.
    pub fn from_word(word: &[usize], n: usize) -> Self {
        word.iter()
            .fold(Permutation::identity(n), |acc, &i| &acc * &Permutation::coxeter(i, n))
    }

    /// The representative `(1 ... r_1)(r_1+1 ... r_1+r_2)...` of a cycle type,
    /// padded with fixed points to degree `n`.
    pub fn of_cycle_type(cycle_type: &Partition, n: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &len in cycle_type.parts() {
            for k in 0..len {
                images[start + k] = start + (k + 1) % len;
            }
            start += len;
        }
        Permutation { images }
    }

    /// Every permutation of degree `n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                return out;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `g(x)` for 1-based `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// The same permutation in `S_m`, `m >= degree`, fixing the new points.
    pub fn embed(&self, m: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.images.len()..m);
        Permutation { images }
    }

    /// Restriction to `S_{n-1}`; `None` unless `n` is fixed.
    pub fn restrict(&self) -> Option<Self> {
        let n = self.images.len();
        if n == 0 || self.images[n - 1] != n - 1 {
            return None;
        }
        Some(Permutation { images: self.images[..n - 1].to_vec() })
    }

    /// Disjoint cycles (1-based), each starting at its least point, including fixed points.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    /// Number of inversions, the Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// A reduced word `[i_1, ..., i_l]` with `self = s_{i_1} ... s_{i_l}`,
    /// found by bubble-sorting the one-line notation.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut swaps = Vec::new();
        let n = w.len();
        for pass in 0..n {
            for i in 0..n.saturating_sub(pass + 1) {
                if w[i] > w[i + 1] {
                    w.swap(i, i + 1);
                    swaps.push(i + 1);
                }
            }
        }
        swaps.reverse();
        swaps
    }

    /// Parses `"(1 2 3)(4 5)"` in degree `n`; `"()"` or `""` is the identity.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body_end = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')'))
                .ok_or_else(|| Error::Parse(format!("bad cycle notation {s:?}")))?;
            let body = &rest[1..=body_end];
            let cycle = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad point {x:?} in {s:?}"))))
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = rest[body_end + 2..].trim_start();
        }
        Self::from_cycles(&cycles, n)
    }

    /// Parses one-line notation `"2,3,1"`.
    pub fn parse_one_line(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad image {x:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_one_line(&images)
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "permutation degrees differ");
        Permutation { images: rhs.images.iter().map(|&x| self.images[x]).collect() }
    }
}

impl Mul for Permutation {
    type Output = Permutation;

    fn mul(self, rhs: Permutation) -> Permutation {
        &self * &rhs
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let items: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", items.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn composition_applies_right_first() {
        let a = Permutation::transposition(1, 2, 3);
        let b = Permutation::transposition(2, 3, 3);
        // (1 2)(2 3): 3 -> 2 -> 1
        assert_eq!((&a * &b).apply(3), 1);
        assert_eq!((&a * &b).to_string(), "(1 2 3)");
    }

    #[test]
    fn cycle_notation_round_trip() {
        let g = Permutation::parse_cycles("(1 2 3)(4 5)", 6).unwrap();
        assert_eq!(g.one_line(), vec![2, 3, 1, 5, 4, 6]);
        assert_eq!(g.to_string(), "(1 2 3)(4 5)");
        assert_eq!(g.cycle_type(), Partition::new(vec![3, 2, 1]).unwrap());
        assert_eq!(Permutation::parse_one_line("2,3,1").unwrap().to_string(), "(1 2 3)");
        assert!(Permutation::parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 4)", 3).is_err());
        assert!(Permutation::parse_one_line("1,1").is_err());
        assert!(Permutation::parse_cycles("()", 2).unwrap().is_identity());
    }

    #[test]
    fn cycle_type_representatives() {
        let rho = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(Permutation::of_cycle_type(&rho, 4).to_string(), "(1 2 3)");
        assert_eq!(Permutation::all(4).len(), 24);
    }

    proptest! {
        #[test]
        fn reduced_words_are_reduced(perm in Just((1..=6usize).collect::<Vec<_>>()).prop_shuffle()) {
            let g = Permutation::from_one_line(&perm).unwrap();
            let word = g.reduced_word();
            prop_assert_eq!(word.len(), g.length());
            prop_assert_eq!(Permutation::from_word(&word, 6), g.clone());
            prop_assert!((&g * &g.inverse()).is_identity());
        }
    }
}
