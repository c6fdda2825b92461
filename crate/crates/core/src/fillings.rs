//! Fillings of key diagrams and Ferrers diagrams, their statistics, and
//! enumeration of the four tableau families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::combinat::WeakComposition;
use crate::diagram::Cell;
use crate::error::{Error, Result};

/// Entries of a diagram, stored row by row from the bottom.
///
/// Row `r` holds the entries of cells `(1,r), (2,r), …`. Trailing empty rows
/// are dropped, so equality depends only on the occupied cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    rows: Vec<Vec<u32>>,
}

impl Filling {
    pub fn new(mut rows: Vec<Vec<u32>>) -> Self {
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        Filling { rows }
    }

    pub fn empty() -> Self {
        Filling::default()
    }

    /// Fill `D(shape)` from entries listed row 1 upward, left to right.
    pub fn from_reading(shape: &WeakComposition, entries: &[u32]) -> Self {
        let mut it = entries.iter().copied();
        let rows = shape.parts().iter().map(|&len| it.by_ref().take(len as usize).collect()).collect();
        Filling::new(rows)
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Row `r` (1-based); empty past the top.
    pub fn row(&self, r: usize) -> &[u32] {
        if r == 0 {
            return &[];
        }
        self.rows.get(r - 1).map_or(&[], Vec::as_slice)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn shape(&self) -> WeakComposition {
        WeakComposition::new(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn entry(&self, cell: Cell) -> Option<u32> {
        if cell.col == 0 {
            return None;
        }
        self.row(cell.row as usize).get(cell.col as usize - 1).copied()
    }

    /// Entry of the augmented filling: column 0 holds `i` in row `i ≤ n`.
    pub fn hat(&self, col: u32, row: u32, n: usize) -> Option<u32> {
        if col == 0 {
            (row >= 1 && row as usize <= n).then_some(row)
        } else {
            self.entry(Cell::new(col, row))
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (Cell::new(c as u32 + 1, r as u32 + 1), v)))
    }

    /// Entries read row 1 upward, left to right.
    pub fn reading(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Multiplicity of each value `1..=max(n, max entry)`.
    pub fn weight(&self, n: usize) -> WeakComposition {
        let len = n.max(self.max_entry() as usize);
        let mut parts = vec![0; len];
        for &v in self.rows.iter().flatten() {
            parts[v as usize - 1] += 1;
        }
        WeakComposition::new(parts)
    }

    pub fn num_columns(&self) -> u32 {
        self.rows.iter().map(|r| r.len() as u32).max().unwrap_or(0)
    }

    /// Entries of column `c` listed from the bottom.
    pub fn column(&self, c: u32) -> Vec<u32> {
        self.rows.iter().filter_map(|r| r.get(c as usize - 1).copied()).collect()
    }

    /// Entries of column `c` in increasing order.
    pub fn column_set(&self, c: u32) -> Vec<u32> {
        let mut v = self.column(c);
        v.sort_unstable();
        v
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<u32>> {
        &mut self.rows
    }

    pub(crate) fn normalize(&mut self) {
        while self.rows.last().is_some_and(Vec::is_empty) {
            self.rows.pop();
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"shape": self.shape().parts(), "rows": self.rows})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let raw: FillingJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        raw.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct FillingJson {
    shape: Vec<u32>,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<FillingJson> for Filling {
    type Error = Error;

    fn try_from(raw: FillingJson) -> Result<Self> {
        let lens: Vec<u32> = raw.rows.iter().map(|r| r.len() as u32).collect();
        let n = raw.shape.len().max(lens.len());
        let ok = (0..n).all(|i| raw.shape.get(i).copied().unwrap_or(0) == lens.get(i).copied().unwrap_or(0));
        if !ok {
            return Err(Error::ShapeMismatch { shape: raw.shape, rows: lens });
        }
        if raw.rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::EntryOutOfRange { entry: 0, n: 0 });
        }
        Ok(Filling::new(raw.rows))
    }
}

impl Serialize for Filling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FillingJson { shape: self.shape().parts().to_vec(), rows: self.rows.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Filling {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        FillingJson::deserialize(d)?.try_into().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Semistandard key tableau.
    Sskt,
    /// Reverse semi-skyline augmented filling.
    Rssaf,
    /// Semistandard Young tableau, French convention.
    Ssyt,
    /// Reverse SSYT: rows weakly decrease, columns strictly decrease upward.
    Rssyt,
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sskt" => Ok(Flavor::Sskt),
            "rssaf" => Ok(Flavor::Rssaf),
            "ssyt" => Ok(Flavor::Ssyt),
            "rssyt" => Ok(Flavor::Rssyt),
            other => Err(Error::Parse(format!("unknown flavor {other:?}"))),
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Flavor::Sskt => "SSKT",
            Flavor::Rssaf => "rSSAF",
            Flavor::Ssyt => "SSYT",
            Flavor::Rssyt => "rSSYT",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FillingStats {
    pub maj: u64,
    pub comaj: u64,
    pub coinv: u64,
    pub inv: u64,
    pub attacking_violations: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleKind {
    Coinversion,
    Inversion,
}

/// Classify a triple with entries `k` (corner), `i` (beside it) and `j`
/// (the third cell). `None` unless all three differ.
pub fn triple_kind(k: u32, i: u32, j: u32) -> Option<TripleKind> {
    if k == i || i == j || j == k {
        return None;
    }
    if (i < j && j < k) || (j < k && k < i) || (k < i && i < j) {
        Some(TripleKind::Coinversion)
    } else {
        Some(TripleKind::Inversion)
    }
}

/// Number of cells weakly right of `u` in its row of `D(shape)`.
pub fn leg(shape: &WeakComposition, u: Cell) -> u32 {
    (shape.part(u.row as usize) + 1).saturating_sub(u.col)
}

/// Cells below `u` in its column of `D(shape)`, plus cells above `u` in the
/// column to its left in the augmented diagram with `n` rows.
pub fn arm(shape: &WeakComposition, u: Cell, n: usize) -> u32 {
    let below = (1..u.row).filter(|&s| shape.part(s as usize) >= u.col).count();
    let left = u.col - 1;
    let above = (u.row + 1..=n as u32).filter(|&s| left == 0 || shape.part(s as usize) >= left).count();
    (below + above) as u32
}

/// Triples of the augmented diagram, as `(k, i, j)` cells.
///
/// Type I: `(c,r), (c+1,r), (c,s)` with `r < s`, `a_r > a_s`.
/// Type II: `(c+1,r), (c,s), (c+1,s)` with `r < s`, `a_r ≤ a_s`.
/// Column `c` may be the basement.
pub fn triples(shape: &WeakComposition, n: usize) -> Vec<[Cell; 3]> {
    let n = n.max(shape.support_len()) as u32;
    let a = |r: u32| shape.part(r as usize);
    let mut out = Vec::new();
    for r in 1..=n {
        for s in r + 1..=n {
            for c in 0..a(r) {
                if a(r) > a(s) {
                    if c == 0 || c <= a(s) {
                        out.push([Cell::new(c, r), Cell::new(c + 1, r), Cell::new(c, s)]);
                    }
                } else {
                    out.push([Cell::new(c, s), Cell::new(c + 1, s), Cell::new(c + 1, r)]);
                }
            }
        }
    }
    out
}

/// Statistics of the augmented filling with basement of height `n`.
pub fn statistics(t: &Filling, n: usize) -> FillingStats {
    let shape = t.shape();
    let n = n.max(t.num_rows());
    let mut st = FillingStats::default();
    for (u, v) in t.cells() {
        let left = t.hat(u.col - 1, u.row, n).expect("left neighbour exists");
        let l = u64::from(leg(&shape, u));
        if v > left {
            st.maj += l;
        } else if v < left {
            st.comaj += l;
        }
    }
    for [k, i, j] in triples(&shape, n) {
        let val = |c: Cell| t.hat(c.col, c.row, n).expect("triple cell exists");
        match triple_kind(val(k), val(i), val(j)) {
            Some(TripleKind::Coinversion) => st.coinv += 1,
            Some(TripleKind::Inversion) => st.inv += 1,
            None => {}
        }
    }
    st.attacking_violations = attacking_violations(t, n);
    st
}

fn attacking_violations(t: &Filling, n: usize) -> u64 {
    let mut count = 0;
    let width = t.num_columns();
    for c in 0..=width {
        let here: Vec<(u32, u32)> = (1..=n as u32).filter_map(|r| t.hat(c, r, n).map(|v| (r, v))).collect();
        for (x, &(_, v)) in here.iter().enumerate() {
            count += here[x + 1..].iter().filter(|&&(_, w)| w == v).count() as u64;
        }
        for &(r, v) in &here {
            count += (1..r).filter(|&s| t.hat(c + 1, s, n) == Some(v)).count() as u64;
        }
    }
    count
}

fn is_partition_shape(shape: &WeakComposition) -> bool {
    shape.stripped().windows(2).all(|w| w[0] >= w[1])
}

/// Membership in a tableau family, with entries in `[n]` and a basement of
/// height `n` for the key-diagram families.
pub fn is_member(t: &Filling, flavor: Flavor, n: usize) -> Result<bool> {
    let shape = t.shape();
    if matches!(flavor, Flavor::Ssyt | Flavor::Rssyt) && !is_partition_shape(&shape) {
        return Err(Error::FlavorMismatch(shape.parts().to_vec()));
    }
    if t.rows.iter().flatten().any(|&v| v == 0 || v as usize > n) || t.num_rows() > n {
        return Ok(false);
    }
    Ok(match flavor {
        Flavor::Sskt => {
            let st = statistics(t, n);
            st.attacking_violations == 0 && st.maj == 0 && st.coinv == 0
        }
        Flavor::Rssaf => {
            let st = statistics(t, n);
            st.attacking_violations == 0 && st.comaj == 0 && st.inv == 0
        }
        Flavor::Ssyt => young_ok(t, |l, r| l <= r, |below, above| below < above),
        Flavor::Rssyt => young_ok(t, |l, r| l >= r, |below, above| below > above),
    })
}

fn young_ok(t: &Filling, row_ok: impl Fn(u32, u32) -> bool, col_ok: impl Fn(u32, u32) -> bool) -> bool {
    let rows_fine = t.rows.iter().all(|row| row.windows(2).all(|w| row_ok(w[0], w[1])));
    let cols_fine = t.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(&up, &down)| col_ok(down, up)));
    rows_fine && cols_fine
}

/// All fillings of the given shape in a family, optionally with a fixed
/// weight, sorted by reading word.
pub fn enumerate(
    shape: &WeakComposition,
    n: usize,
    flavor: Flavor,
    weight: Option<&WeakComposition>,
) -> Result<Vec<Filling>> {
    if matches!(flavor, Flavor::Ssyt | Flavor::Rssyt) && !is_partition_shape(shape) {
        return Err(Error::FlavorMismatch(shape.parts().to_vec()));
    }
    if shape.support_len() > n && shape.size() > 0 {
        return Err(Error::AmbientTooSmall { n, len: shape.support_len() });
    }
    if let Some(w) = weight {
        if w.size() != shape.size() || w.support_len() > n {
            return Ok(Vec::new());
        }
    }
    let mut e = Enumerator::new(shape, n, flavor, weight);
    e.run(0);
    let mut out = e.out;
    out.sort();
    Ok(out)
}

struct Enumerator {
    shape: WeakComposition,
    n: usize,
    flavor: Flavor,
    order: Vec<Cell>,
    grid: Vec<Vec<u32>>,
    remaining: Option<Vec<u32>>,
    out: Vec<Filling>,
}

impl Enumerator {
    fn new(shape: &WeakComposition, n: usize, flavor: Flavor, weight: Option<&WeakComposition>) -> Self {
        let shape = shape.trimmed();
        let width = shape.parts().iter().copied().max().unwrap_or(0);
        let mut order = Vec::with_capacity(shape.size() as usize);
        for c in 1..=width {
            for r in 1..=shape.len() as u32 {
                if shape.part(r as usize) >= c {
                    order.push(Cell::new(c, r));
                }
            }
        }
        let grid = shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
        let remaining = weight.map(|w| w.pad_to(n).parts().to_vec());
        let shape = shape.pad_to(n);
        Enumerator { shape, n, flavor, order, grid, remaining, out: Vec::new() }
    }

    fn a(&self, r: u32) -> u32 {
        self.shape.part(r as usize)
    }

    /// Entry of the augmented partial filling.
    fn hat(&self, c: u32, r: u32) -> u32 {
        if c == 0 {
            r
        } else {
            self.grid[r as usize - 1][c as usize - 1]
        }
    }

    fn run(&mut self, idx: usize) {
        if idx == self.order.len() {
            self.out.push(Filling::new(self.grid.clone()));
            return;
        }
        let u = self.order[idx];
        for v in 1..=self.n as u32 {
            if let Some(rem) = &self.remaining {
                if rem[v as usize - 1] == 0 {
                    continue;
                }
            }
            if !self.admissible(u, v) {
                continue;
            }
            self.grid[u.row as usize - 1][u.col as usize - 1] = v;
            if let Some(rem) = &mut self.remaining {
                rem[v as usize - 1] -= 1;
            }
            self.run(idx + 1);
            if let Some(rem) = &mut self.remaining {
                rem[v as usize - 1] += 1;
            }
            self.grid[u.row as usize - 1][u.col as usize - 1] = 0;
        }
    }

    fn admissible(&self, u: Cell, v: u32) -> bool {
        let Cell { col: c, row: r } = u;
        match self.flavor {
            Flavor::Ssyt | Flavor::Rssyt => {
                let decreasing = self.flavor == Flavor::Rssyt;
                if c > 1 {
                    let left = self.hat(c - 1, r);
                    if (decreasing && v > left) || (!decreasing && v < left) {
                        return false;
                    }
                }
                if r > 1 {
                    let below = self.hat(c, r - 1);
                    if (decreasing && v >= below) || (!decreasing && v <= below) {
                        return false;
                    }
                }
                true
            }
            Flavor::Sskt | Flavor::Rssaf => {
                let left = self.hat(c - 1, r);
                let bad = if self.flavor == Flavor::Sskt {
                    if v > left {
                        return false;
                    }
                    TripleKind::Coinversion
                } else {
                    if v < left {
                        return false;
                    }
                    TripleKind::Inversion
                };
                // attacking: lower cells of this column, higher cells of the left column
                if (1..r).any(|s| self.a(s) >= c && self.hat(c, s) == v) {
                    return false;
                }
                let n = self.n as u32;
                if (r + 1..=n).any(|s| (c == 1 || self.a(s) >= c - 1) && self.hat(c - 1, s) == v) {
                    return false;
                }
                // Type I triples whose right cell is u
                for s in r + 1..=n {
                    if self.a(r) > self.a(s) && (c == 1 || self.a(s) >= c - 1) {
                        let kind = triple_kind(self.hat(c - 1, r), v, self.hat(c - 1, s));
                        if kind == Some(bad) {
                            return false;
                        }
                    }
                }
                // Type II triples whose upper right cell is u
                for s in 1..r {
                    if self.a(s) <= self.a(r) && self.a(s) >= c {
                        let kind = triple_kind(self.hat(c - 1, r), v, self.hat(c, s));
                        if kind == Some(bad) {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }
}

/// Fillings in the family of `shape` grouped by weight, as a generating
/// function in the exponents.
pub fn weight_counts(
    shape: &WeakComposition,
    n: usize,
    flavor: Flavor,
) -> Result<std::collections::BTreeMap<WeakComposition, u64>> {
    let mut out = std::collections::BTreeMap::new();
    for t in enumerate(shape, n, flavor, None)? {
        *out.entry(t.weight(n).trimmed()).or_insert(0) += 1;
    }
    Ok(out)
}
