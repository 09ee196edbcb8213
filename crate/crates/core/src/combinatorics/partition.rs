use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::limits::{self, Limits};

/// A Young diagram: weakly decreasing positive parts.
///
/// The derived ordering is lexicographic on the parts, so sorting in
/// *descending* order gives the reverse-lexicographic enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row diagram `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The single-column diagram `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook `(a+1, 1^b)`.
    pub fn hook(arm: usize, height: usize) -> Self {
        let mut parts = vec![arm + 1];
        parts.extend(std::iter::repeat_n(1, height));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length with 0-based `row`, zero past the last row.
    pub fn part(&self, row: usize) -> usize {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// Whether the diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.rows() <= self.rows() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// `Some(height)` if the diagram is a hook `(a+1, 1^b)`.
    pub fn hook_height(&self) -> Option<usize> {
        if self.is_empty() || self.parts[1..].iter().any(|&p| p != 1) {
            None
        } else {
            Some(self.rows() - 1)
        }
    }

    /// Rows (0-based) whose last box can be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.rows())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .collect()
    }

    /// Rows (0-based) where a box can be appended.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.rows())
            .filter(|&r| r == 0 || self.part(r - 1) > self.part(r))
            .collect()
    }

    pub(crate) fn with_box_removed(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Partition { parts }
    }

    pub(crate) fn with_box_added(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Partition { parts }
    }

    /// Multiplicity of each part size: `counts[j]` is the number of parts equal to `j`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut counts = vec![0; self.parts.first().map_or(1, |p| p + 1)];
        for &p in &self.parts {
            counts[p] += 1;
        }
        counts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.pad("-");
        }
        let joined: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.pad(&joined.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {p:?} in partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, largest first part first.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    limits::check("partition enumeration", n, Limits::current().enumeration)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill_partitions(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for part in (1..=max.min(remaining)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// Young-graph parents (one corner removed) and children (one box added),
/// each in reverse-lexicographic order.
pub fn young_graph_neighbors(shape: &Partition) -> (Vec<Partition>, Vec<Partition>) {
    let mut parents: Vec<Partition> = shape
        .removable_rows()
        .into_iter()
        .map(|r| shape.with_box_removed(r))
        .collect();
    let mut children: Vec<Partition> = shape
        .addable_rows()
        .into_iter()
        .map(|r| shape.with_box_added(r))
        .collect();
    parents.sort_by(|a, b| b.cmp(a));
    children.sort_by(|a, b| b.cmp(a));
    (parents, children)
}

/// A box of a diagram, 1-based, rows downward and columns rightward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    fn shares_edge(&self, other: &Cell) -> bool {
        self.row.abs_diff(other.row) + self.col.abs_diff(other.col) == 1
    }
}

/// A skew diagram `outer / inner`; a straight shape has an empty inner part.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(shape: Partition) -> Self {
        SkewShape { outer: shape, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of boxes `|outer| - |inner|`.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// The boxes in row-reading order.
    pub fn cells(&self) -> Vec<Cell> {
        (0..self.outer.rows())
            .flat_map(|r| (self.inner.part(r)..self.outer.part(r)).map(move |c| Cell::new(r + 1, c + 1)))
            .collect()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && cell.col <= self.outer.part(cell.row - 1)
            && cell.col > self.inner.part(cell.row - 1)
    }

    /// Edge-connected components, each as a sorted list of boxes, ordered by
    /// their first box in row-reading order.
    pub fn components(&self) -> Vec<Vec<Cell>> {
        let cells = self.cells();
        let mut seen = vec![false; cells.len()];
        let mut out = Vec::new();
        for start in 0..cells.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(i) = stack.pop() {
                comp.push(cells[i]);
                for j in 0..cells.len() {
                    if !seen[j] && cells[i].shares_edge(&cells[j]) {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Number of rows that contain at least one box.
    pub fn occupied_rows(&self) -> usize {
        (0..self.outer.rows())
            .filter(|&r| self.outer.part(r) > self.inner.part(r))
            .count()
    }
}

impl From<Partition> for SkewShape {
    fn from(shape: Partition) -> Self {
        SkewShape::straight(shape)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((outer, inner)) => SkewShape::new(outer.parse()?, inner.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// Every skew shape `outer / inner` with `boxes` boxes and `|inner| <= max_inner`.
///
/// With `max_inner >= boxes^2 / 4` this includes a translate of every
/// connected skew diagram with that many boxes.
pub fn enumerate_skew_shapes(boxes: usize, max_inner: usize) -> Result<Vec<SkewShape>> {
    let mut out = BTreeSet::new();
    for size in 0..=max_inner {
        for inner in enumerate_partitions(size)? {
            let mut layer = BTreeSet::from([inner.clone()]);
            for _ in 0..boxes {
                layer = layer
                    .iter()
                    .flat_map(|p| p.addable_rows().into_iter().map(move |r| p.with_box_added(r)))
                    .collect();
            }
            out.extend(layer.into_iter().map(|outer| SkewShape { outer, inner: inner.clone() }));
        }
    }
    Ok(out.into_iter().collect())
}

/// `Some(height)` when the shape is a nonempty skew hook: edge-connected with
/// pairwise distinct contents. The height is the number of occupied rows minus one.
pub fn is_skew_hook(shape: &SkewShape) -> Option<usize> {
    let cells = shape.cells();
    if cells.is_empty() {
        return None;
    }
    let contents: BTreeSet<i64> = cells.iter().map(Cell::content).collect();
    if contents.len() != cells.len() || !shape.is_connected() {
        return None;
    }
    Some(shape.occupied_rows() - 1)
}
