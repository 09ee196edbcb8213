use std::fmt;
use std::str::FromStr;

use super::partition::{Cell, Partition, SkewShape};
use super::tableau::StandardTableau;
use crate::error::{Error, Result};

/// Which of the three content-vector conditions failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContentCondition {
    /// (1) the first entry is 0.
    StartsAtZero,
    /// (2) every later entry has a neighbour value `a - 1` or `a + 1` before it.
    NeighbourPresent,
    /// (3) between two equal entries `a` both `a - 1` and `a + 1` occur.
    RepeatSeparated,
}

impl ContentCondition {
    /// 1, 2 or 3.
    pub fn number(self) -> u8 {
        match self {
            ContentCondition::StartsAtZero => 1,
            ContentCondition::NeighbourPresent => 2,
            ContentCondition::RepeatSeparated => 3,
        }
    }
}

/// A rejected sequence: the first failing condition and its 1-based position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ContentViolation {
    pub condition: ContentCondition,
    pub position: usize,
}

impl fmt::Display for ContentViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition ({}) fails at position {}", self.condition.number(), self.position)
    }
}

impl std::error::Error for ContentViolation {}

/// An integer sequence known to be the content vector of a standard tableau.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ContentVector(Vec<i64>);

impl ContentVector {
    pub fn new(raw: Vec<i64>) -> std::result::Result<Self, ContentViolation> {
        validate_content(&raw)?;
        Ok(ContentVector(raw))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }
}

impl fmt::Display for ContentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_raw(&self.0))
    }
}

/// `[0,1,-1]` text form of any integer sequence.
pub fn format_raw(raw: &[i64]) -> String {
    let items: Vec<String> = raw.iter().map(|a| a.to_string()).collect();
    format!("[{}]", items.join(","))
}

/// Parses `[0,1,-1]` (brackets optional) into a raw sequence.
pub fn parse_raw(s: &str) -> Result<Vec<i64>> {
    let body = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad entry {x:?} in {s:?}"))))
        .collect()
}

impl FromStr for ContentVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ContentVector::new(parse_raw(s)?).map_err(Error::InvalidContent)
    }
}

/// Checks the three content-vector conditions position by position and
/// reports the first failure.
pub fn validate_content(raw: &[i64]) -> std::result::Result<ContentVector, ContentViolation> {
    for (q, &a) in raw.iter().enumerate() {
        let fail = |condition| ContentViolation { condition, position: q + 1 };
        if q == 0 {
            if a != 0 {
                return Err(fail(ContentCondition::StartsAtZero));
            }
            continue;
        }
        let before = &raw[..q];
        if !before.contains(&(a - 1)) && !before.contains(&(a + 1)) {
            return Err(fail(ContentCondition::NeighbourPresent));
        }
        if let Some(p) = before.iter().rposition(|&x| x == a) {
            let between = &raw[p + 1..q];
            if !between.contains(&(a - 1)) || !between.contains(&(a + 1)) {
                return Err(fail(ContentCondition::RepeatSeparated));
            }
        }
    }
    Ok(ContentVector(raw.to_vec()))
}

/// The content vector of a straight-shape tableau.
///
/// Skew tableaux are rejected; use [`StandardTableau::contents`] for their raw sequence.
pub fn content_vector(tableau: &StandardTableau) -> Result<ContentVector> {
    if !tableau.shape().is_straight() {
        return Err(Error::InvalidShape(format!(
            "{} is skew; its contents are not a content vector",
            tableau.shape()
        )));
    }
    Ok(ContentVector(tableau.contents()))
}

/// The unique straight tableau with content vector `alpha`: box `i` goes on
/// the addable box of diagonal `alpha[i]`.
pub fn tableau_from_content(alpha: &ContentVector) -> StandardTableau {
    place_on_diagonals(&Partition::empty(), alpha.entries())
        .expect("a validated content vector always describes a diagram growth")
}

/// Validates and then places a raw sequence.
pub fn tableau_from_raw(raw: &[i64]) -> Result<StandardTableau> {
    let alpha = validate_content(raw).map_err(Error::InvalidContent)?;
    Ok(tableau_from_content(&alpha))
}

/// Grows `start` by one box on each listed diagonal; `None` if some diagonal
/// has no addable box. Works for skew growth as well.
pub fn place_on_diagonals(start: &Partition, contents: &[i64]) -> Option<StandardTableau> {
    let mut rows: Vec<usize> = start.parts().to_vec();
    let mut cells = Vec::with_capacity(contents.len());
    for &a in contents {
        let r = (0..=rows.len()).find(|&r| {
            let len = rows.get(r).copied().unwrap_or(0);
            let addable = r == 0 || rows[r - 1] > len;
            addable && len as i64 - r as i64 == a
        })?;
        if r == rows.len() {
            rows.push(0);
        }
        rows[r] += 1;
        cells.push(Cell::new(r + 1, rows[r]));
    }
    let shape = SkewShape::new(Partition::new(rows).ok()?, start.clone()).ok()?;
    Some(StandardTableau::from_cells_unchecked(shape, cells))
}
