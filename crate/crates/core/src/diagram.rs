//! Cells, diagrams and key diagrams.
//!
//! Cells are `(column, row)`, both 1-based, rows counted upward. Column 0 is
//! the basement, never stored.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::WeakComposition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(u32, u32)", into = "(u32, u32)")]
pub struct Cell {
    pub col: u32,
    pub row: u32,
}

impl Cell {
    pub const fn new(col: u32, row: u32) -> Self {
        Cell { col, row }
    }
}

impl From<(u32, u32)> for Cell {
    fn from((col, row): (u32, u32)) -> Self {
        Cell { col, row }
    }
}

impl From<Cell> for (u32, u32) {
    fn from(c: Cell) -> Self {
        (c.col, c.row)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// Same column, or adjacent columns with the left cell strictly higher.
pub fn attacking(u: Cell, v: Cell) -> bool {
    if u == v {
        return false;
    }
    if u.col == v.col {
        return true;
    }
    let (left, right) = if u.col < v.col { (u, v) } else { (v, u) };
    right.col == left.col + 1 && left.row > right.row
}

/// A finite set of cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Diagram {
    cells: BTreeSet<Cell>,
}

impl Diagram {
    pub fn new<I: IntoIterator<Item = Cell>>(cells: I) -> Self {
        Diagram { cells: cells.into_iter().collect() }
    }

    pub fn empty() -> Self {
        Diagram::default()
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn insert(&mut self, c: Cell) -> bool {
        self.cells.insert(c)
    }

    pub fn remove(&mut self, c: Cell) -> bool {
        self.cells.remove(&c)
    }

    pub fn max_row(&self) -> u32 {
        self.cells.iter().map(|c| c.row).max().unwrap_or(0)
    }

    pub fn max_col(&self) -> u32 {
        self.cells.iter().map(|c| c.col).max().unwrap_or(0)
    }

    /// Number of cells in each row `1..=max(n, max_row)`.
    pub fn weight(&self, n: usize) -> WeakComposition {
        let len = n.max(self.max_row() as usize);
        let mut parts = vec![0; len];
        for c in &self.cells {
            parts[c.row as usize - 1] += 1;
        }
        WeakComposition::new(parts)
    }

    /// The shape `a` if this is the key diagram `D(a)`.
    pub fn key_shape(&self) -> Option<WeakComposition> {
        let w = self.weight(0);
        let a = KeyDiagram::new(w.clone());
        (a.to_diagram() == *self).then_some(w)
    }

    pub fn symmetric_difference(&self, other: &Diagram) -> Diagram {
        Diagram::new(self.cells.symmetric_difference(&other.cells).copied())
    }

    pub fn difference(&self, other: &Diagram) -> Diagram {
        Diagram::new(self.cells.difference(&other.cells).copied())
    }

    pub fn union(&self, other: &Diagram) -> Diagram {
        Diagram::new(self.cells.union(&other.cells).copied())
    }

    pub fn is_subset(&self, other: &Diagram) -> bool {
        self.cells.is_subset(&other.cells)
    }
}

impl FromIterator<Cell> for Diagram {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        Diagram::new(iter)
    }
}

impl<'a> IntoIterator for &'a Diagram {
    type Item = &'a Cell;
    type IntoIter = std::collections::btree_set::Iter<'a, Cell>;

    fn into_iter(self) -> Self::IntoIter {
        self.cells.iter()
    }
}

/// `D(a)`: row `r` holds columns `1..=a_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KeyDiagram {
    shape: WeakComposition,
}

impl KeyDiagram {
    pub fn new(shape: WeakComposition) -> Self {
        KeyDiagram { shape }
    }

    pub fn shape(&self) -> &WeakComposition {
        &self.shape
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.col >= 1 && c.row >= 1 && c.col <= self.shape.part(c.row as usize)
    }

    pub fn to_diagram(&self) -> Diagram {
        key_diagram(&self.shape)
    }
}

pub fn key_diagram(a: &WeakComposition) -> Diagram {
    let cells = (1..=a.len()).flat_map(|r| (1..=a.part(r)).map(move |c| Cell::new(c, r as u32)));
    Diagram::new(cells)
}
