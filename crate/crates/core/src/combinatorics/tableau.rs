use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::partition::{Cell, Partition, SkewShape};
use crate::error::{Error, Result};
use crate::limits::{self, Limits};

/// A standard filling of a (possibly skew) shape by `1..=k`.
///
/// Stored as the box occupied by each label, which is also the path
/// `inner = nu_0 -> nu_1 -> ... -> nu_k = outer` in the Young graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: SkewShape,
    cells: Vec<Cell>,
}

impl StandardTableau {
    /// Checks that `cells[label - 1]` is a bijective, standard filling of `shape`.
    pub fn from_cells(shape: SkewShape, cells: Vec<Cell>) -> Result<Self> {
        if cells.len() != shape.size() {
            return Err(Error::InvalidTableau(format!(
                "{} labels for a shape with {} boxes",
                cells.len(),
                shape.size()
            )));
        }
        let mut labels = HashMap::with_capacity(cells.len());
        for (i, &c) in cells.iter().enumerate() {
            if !shape.contains_cell(c) {
                return Err(Error::InvalidTableau(format!("label {} outside shape {shape}", i + 1)));
            }
            if labels.insert(c, i).is_some() {
                return Err(Error::InvalidTableau(format!("box ({},{}) labelled twice", c.row, c.col)));
            }
        }
        for (&c, &i) in &labels {
            let right = Cell::new(c.row, c.col + 1);
            let below = Cell::new(c.row + 1, c.col);
            for next in [right, below] {
                if let Some(&j) = labels.get(&next) {
                    if j < i {
                        return Err(Error::InvalidTableau(format!(
                            "labels {} and {} are not increasing",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(StandardTableau { shape, cells })
    }

    /// Parses rows of labels, e.g. `[[1, 2], [3]]`; `None` marks a box of the
    /// inner diagram and may only appear at the start of a row.
    pub fn from_rows(rows: &[Vec<Option<usize>>]) -> Result<Self> {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut placed = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            let skip = row.iter().take_while(|x| x.is_none()).count();
            if row[skip..].iter().any(Option::is_none) {
                return Err(Error::InvalidTableau(format!("row {} has an interior gap", r + 1)));
            }
            outer.push(row.len());
            inner.push(skip);
            for (c, label) in row.iter().enumerate().skip(skip) {
                placed.push((label.unwrap(), Cell::new(r + 1, c + 1)));
            }
        }
        let outer = Partition::new(outer.into_iter().filter(|&p| p > 0).collect())?;
        let inner = Partition::new(inner.into_iter().filter(|&p| p > 0).collect())?;
        let shape = SkewShape::new(outer, inner)?;
        let k = placed.len();
        let mut cells = vec![None; k];
        for (label, cell) in placed {
            if label == 0 || label > k {
                return Err(Error::InvalidTableau(format!("label {label} not in 1..={k}")));
            }
            if cells[label - 1].replace(cell).is_some() {
                return Err(Error::InvalidTableau(format!("label {label} used twice")));
            }
        }
        Self::from_cells(shape, cells.into_iter().map(Option::unwrap).collect())
    }

    pub(crate) fn from_cells_unchecked(shape: SkewShape, cells: Vec<Cell>) -> Self {
        StandardTableau { shape, cells }
    }

    /// Row-reading filling: labels increase along row 1, then row 2, and so on.
    pub fn row_reading(shape: &SkewShape) -> Self {
        StandardTableau { shape: shape.clone(), cells: shape.cells() }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Number of boxes (labels).
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// Box holding `label` (1-based).
    pub fn cell(&self, label: usize) -> Cell {
        self.cells[label - 1]
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn label_at(&self, cell: Cell) -> Option<usize> {
        self.cells.iter().position(|&c| c == cell).map(|i| i + 1)
    }

    /// Contents of the boxes labelled `1..=k`, without validation.
    pub fn contents(&self) -> Vec<i64> {
        self.cells.iter().map(Cell::content).collect()
    }

    /// Labels row by row, `None` for boxes of the inner diagram.
    pub fn rows(&self) -> Vec<Vec<Option<usize>>> {
        let outer = self.shape.outer();
        let mut rows: Vec<Vec<Option<usize>>> = (0..outer.rows()).map(|r| vec![None; outer.part(r)]).collect();
        for (i, c) in self.cells.iter().enumerate() {
            rows[c.row - 1][c.col - 1] = Some(i + 1);
        }
        rows
    }

    /// The shape occupied by the labels `1..=m` together with the inner diagram.
    pub fn prefix_shape(&self, m: usize) -> Partition {
        let mut parts: Vec<usize> = (0..self.shape.outer().rows()).map(|r| self.shape.inner().part(r)).collect();
        for c in &self.cells[..m] {
            parts[c.row - 1] += 1;
        }
        Partition::from_unsorted(parts)
    }

    fn swapped(&self, i: usize) -> Self {
        let mut cells = self.cells.clone();
        cells.swap(i - 1, i);
        StandardTableau { shape: self.shape.clone(), cells }
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.map_or(".".to_string(), |l| l.to_string()))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        f.write_str(&rows.join(";"))
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    /// Rows separated by `;`, labels by `,`, `.` for inner boxes: `"1,2;3"`, `".,1;2"`.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|x| match x.trim() {
                        "." => Ok(None),
                        t => t
                            .parse::<usize>()
                            .map(Some)
                            .map_err(|_| Error::Parse(format!("bad label {t:?} in tableau {s:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(&rows)
    }
}

/// All standard tableaux of `shape`, ordered by content vector in
/// decreasing lexicographic order (so the row-reading tableau of a straight
/// shape comes first).
pub fn enumerate_tableaux(shape: &SkewShape) -> Result<Vec<StandardTableau>> {
    limits::check("tableau enumeration", shape.size(), Limits::current().enumeration)?;
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..shape.outer().rows()).map(|r| shape.inner().part(r)).collect();
    let mut cells = Vec::with_capacity(shape.size());
    grow(shape, &mut current, &mut cells, &mut out);
    out.sort_by_cached_key(|t| std::cmp::Reverse(t.contents()));
    Ok(out)
}

fn grow(shape: &SkewShape, rows: &mut [usize], cells: &mut Vec<Cell>, out: &mut Vec<StandardTableau>) {
    if cells.len() == shape.size() {
        out.push(StandardTableau::from_cells_unchecked(shape.clone(), cells.clone()));
        return;
    }
    for r in 0..rows.len() {
        let fits = rows[r] < shape.outer().part(r) && (r == 0 || rows[r - 1] > rows[r]);
        if fits {
            rows[r] += 1;
            cells.push(Cell::new(r + 1, rows[r]));
            grow(shape, rows, cells, out);
            cells.pop();
            rows[r] -= 1;
        }
    }
}

/// Number of standard tableaux of `shape`, counted along Young-graph paths.
pub fn count_tableaux(shape: &SkewShape) -> u128 {
    fn paths(current: &mut Vec<usize>, shape: &SkewShape, memo: &mut HashMap<Vec<usize>, u128>) -> u128 {
        if current.iter().enumerate().all(|(r, &len)| len == shape.outer().part(r)) {
            return 1;
        }
        if let Some(&v) = memo.get(current.as_slice()) {
            return v;
        }
        let mut total = 0;
        for r in 0..current.len() {
            if current[r] < shape.outer().part(r) && (r == 0 || current[r - 1] > current[r]) {
                current[r] += 1;
                total += paths(current, shape, memo);
                current[r] -= 1;
            }
        }
        memo.insert(current.clone(), total);
        total
    }
    let mut current: Vec<usize> = (0..shape.outer().rows()).map(|r| shape.inner().part(r)).collect();
    paths(&mut current, shape, &mut HashMap::new())
}

/// The row-reading tableau `T^lambda`.
pub fn canonical_tableau(shape: &Partition) -> StandardTableau {
    StandardTableau::row_reading(&SkewShape::straight(shape.clone()))
}

/// Swaps labels `i` and `i + 1` when they lie in different rows and columns.
///
/// Returns `None` when they share a row or a column, or when `i` is not in `1..k`.
pub fn admissible_transposition(tableau: &StandardTableau, i: usize) -> Option<StandardTableau> {
    if i == 0 || i >= tableau.size() {
        return None;
    }
    let (a, b) = (tableau.cell(i), tableau.cell(i + 1));
    if a.row == b.row || a.col == b.col {
        None
    } else {
        Some(tableau.swapped(i))
    }
}

/// Position of each box in the row-reading order of the shape (0-based),
/// indexed by label.
fn reading_ranks(tableau: &StandardTableau) -> Vec<usize> {
    let order: HashMap<Cell, usize> = tableau.shape.cells().into_iter().enumerate().map(|(i, c)| (c, i)).collect();
    tableau.cells.iter().map(|c| order[c]).collect()
}

/// Number of inversions of the permutation carrying the row-reading tableau
/// of the shape to `tableau`.
pub fn inversion_length(tableau: &StandardTableau) -> usize {
    let ranks = reading_ranks(tableau);
    let mut count = 0;
    for i in 0..ranks.len() {
        for j in i + 1..ranks.len() {
            if ranks[i] > ranks[j] {
                count += 1;
            }
        }
    }
    count
}

/// Admissible transpositions taking `tableau` to the row-reading tableau of
/// its shape, with exactly [`inversion_length`] steps.
///
/// A label pair `i, i+1` out of reading order can never share a row or a
/// column, so each step swaps the first such pair.
pub fn path_to_canonical(tableau: &StandardTableau) -> Vec<usize> {
    let mut ranks = reading_ranks(tableau);
    let mut steps = Vec::new();
    while let Some(i) = (0..ranks.len().saturating_sub(1)).find(|&i| ranks[i] > ranks[i + 1]) {
        ranks.swap(i, i + 1);
        steps.push(i + 1);
    }
    steps
}
