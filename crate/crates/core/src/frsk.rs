//! Classical RSK on reverse tableaux, flagged insertion, the flagged RSK
//! bijection, and the column-set maps between the two.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::combinat::{parse_list, WeakComposition};
use crate::diagram::Cell;
use crate::error::{Error, Result};
use crate::fillings::{is_member, Filling, Flavor};

/// A square matrix of naturals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NMatrix {
    rows: Vec<Vec<u32>>,
}

impl NMatrix {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        Ok(NMatrix { rows })
    }

    pub fn zero(n: usize) -> Self {
        NMatrix { rows: vec![vec![0; n]; n] }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.rows[i - 1][j - 1] = v;
    }

    pub fn total(&self) -> u32 {
        self.rows.iter().flatten().sum()
    }

    pub fn row_sums(&self) -> WeakComposition {
        WeakComposition::new(self.rows.iter().map(|r| r.iter().sum()).collect())
    }

    pub fn col_sums(&self) -> WeakComposition {
        let n = self.size();
        WeakComposition::new((0..n).map(|j| self.rows.iter().map(|r| r[j]).sum()).collect())
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| r[i + 1..].iter().all(|&v| v == 0))
    }

    /// Same matrix with zero rows and columns appended up to size `n`.
    pub fn resized(&self, n: usize) -> Self {
        let n = n.max(self.size());
        let mut m = NMatrix::zero(n);
        for (i, r) in self.rows.iter().enumerate() {
            m.rows[i][..r.len()].copy_from_slice(r);
        }
        m
    }

    pub fn to_json(&self) -> Value {
        json!(self.rows)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let rows: Vec<Vec<u32>> = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        NMatrix::new(rows)
    }

    /// All `n × n` matrices with entry sum at most `max_total`, optionally
    /// only lower triangular ones.
    pub fn all(n: usize, max_total: u32, lower_only: bool) -> Vec<NMatrix> {
        let slots: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| !lower_only || j <= i).collect();
        let mut out = Vec::new();
        let mut m = NMatrix::zero(n);
        fn go(k: usize, budget: u32, slots: &[(usize, usize)], m: &mut NMatrix, out: &mut Vec<NMatrix>) {
            if k == slots.len() {
                out.push(m.clone());
                return;
            }
            let (i, j) = slots[k];
            for v in 0..=budget {
                m.rows[i][j] = v;
                go(k + 1, budget - v, slots, m, out);
            }
            m.rows[i][j] = 0;
        }
        go(0, max_total, &slots, &mut m, &mut out);
        out
    }
}

impl FromStr for NMatrix {
    type Err = Error;

    /// Rows separated by `;`, entries by `,`.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(NMatrix::zero(0));
        }
        NMatrix::new(s.split(';').map(parse_list).collect::<Result<_>>()?)
    }
}

impl fmt::Display for NMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.rows.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|v| format!("{v:>w$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// A matrix with no entries above the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LowerTriangularMatrix(NMatrix);

impl LowerTriangularMatrix {
    pub fn as_matrix(&self) -> &NMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> NMatrix {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// All of them in size `n` with entry sum at most `max_total`.
    pub fn all(n: usize, max_total: u32) -> Vec<LowerTriangularMatrix> {
        NMatrix::all(n, max_total, true).into_iter().map(LowerTriangularMatrix).collect()
    }
}

impl TryFrom<NMatrix> for LowerTriangularMatrix {
    type Error = Error;

    fn try_from(m: NMatrix) -> Result<Self> {
        if m.is_lower_triangular() {
            Ok(LowerTriangularMatrix(m))
        } else {
            Err(Error::NotLowerTriangular)
        }
    }
}

/// Two-line array sorted by top letter, ties by bottom letter descending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Biword {
    pairs: Vec<(u32, u32)>,
}

impl Biword {
    pub fn from_pairs(mut pairs: Vec<(u32, u32)>) -> Result<Self> {
        if let Some(&(i, j)) = pairs.iter().find(|&&(i, j)| i == 0 || j == 0) {
            return Err(Error::Parse(format!("biword letters must be positive, got ({i},{j})")));
        }
        pairs.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        Ok(Biword { pairs })
    }

    pub fn new(top: &[u32], bottom: &[u32]) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::BiwordLength(top.len(), bottom.len()));
        }
        Biword::from_pairs(top.iter().copied().zip(bottom.iter().copied()).collect())
    }

    pub fn from_matrix(m: &NMatrix) -> Self {
        let mut pairs = Vec::new();
        for i in 1..=m.size() {
            for j in (1..=m.size()).rev() {
                pairs.extend(std::iter::repeat_n((i as u32, j as u32), m.get(i, j) as usize));
            }
        }
        Biword { pairs }
    }

    /// The matrix of multiplicities, of size `max(n, largest letter)`.
    pub fn to_matrix(&self, n: usize) -> NMatrix {
        let size = self.pairs.iter().map(|&(i, j)| i.max(j) as usize).max().unwrap_or(0).max(n);
        let mut m = NMatrix::zero(size);
        for &(i, j) in &self.pairs {
            let v = m.get(i as usize, j as usize);
            m.set(i as usize, j as usize, v + 1);
        }
        m
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn top(&self) -> Vec<u32> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn bottom(&self) -> Vec<u32> {
        self.pairs.iter().map(|p| p.1).collect()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({"top": self.top(), "bottom": self.bottom()})
    }
}

/// An insertion tableau with its recording tableau.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TableauPair {
    pub insertion: Filling,
    pub recording: Filling,
}

impl TableauPair {
    pub fn new(insertion: Filling, recording: Filling) -> Self {
        TableauPair { insertion, recording }
    }

    pub fn to_json(&self) -> Value {
        json!({"insertion": self.insertion.to_json(), "recording": self.recording.to_json()})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        Ok(TableauPair {
            insertion: Filling::from_json(&v["insertion"])?,
            recording: Filling::from_json(&v["recording"])?,
        })
    }
}

/// What one insertion did: the new cell, the values that moved (the
/// inserted letter first), and how many placements the core loop made.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionTrace {
    pub new_cell: Cell,
    pub bumped: Vec<u32>,
    pub columns: Vec<u32>,
    pub placements: usize,
}

fn push_cell(t: &mut Filling, row: u32, v: u32) {
    let rows = t.rows_mut();
    if rows.len() < row as usize {
        rows.resize(row as usize, Vec::new());
    }
    rows[row as usize - 1].push(v);
}

/// Row insertion into a reverse SSYT.
pub fn rsk_insert(p: &Filling, j: u32) -> Filling {
    rsk_insert_traced(p, j).0
}

pub fn rsk_insert_traced(p: &Filling, j: u32) -> (Filling, InsertionTrace) {
    let mut out = p.clone();
    let mut x = j;
    let mut r = 1u32;
    let mut trace = InsertionTrace { new_cell: Cell::new(0, 0), bumped: vec![j], columns: Vec::new(), placements: 0 };
    loop {
        trace.placements += 1;
        let rows = out.rows_mut();
        if rows.len() < r as usize {
            rows.resize(r as usize, Vec::new());
        }
        let row = &mut rows[r as usize - 1];
        match row.iter().position(|&y| y < x) {
            Some(pos) => {
                trace.columns.push(pos as u32 + 1);
                x = std::mem::replace(&mut row[pos], x);
                trace.bumped.push(x);
                r += 1;
            }
            None => {
                row.push(x);
                let c = row.len() as u32;
                trace.columns.push(c);
                trace.new_cell = Cell::new(c, r);
                return (out, trace);
            }
        }
    }
}

/// Classical RSK of a matrix: insertion tableau is a reverse SSYT,
/// recording tableau an SSYT.
pub fn rsk(a: &NMatrix) -> TableauPair {
    rsk_biword(&Biword::from_matrix(a))
}

pub fn rsk_biword(w: &Biword) -> TableauPair {
    let mut pair = TableauPair::default();
    for &(i, j) in w.pairs() {
        let (p, tr) = rsk_insert_traced(&pair.insertion, j);
        pair.insertion = p;
        push_cell(&mut pair.recording, tr.new_cell.row, i);
    }
    pair
}

/// Undo one row insertion ending at the corner in row `r`: returns the
/// letter that was inserted.
fn reverse_bump(p: &mut Filling, r: u32) -> u32 {
    let rows = p.rows_mut();
    let mut x = rows[r as usize - 1].pop().expect("corner exists");
    for s in (1..r).rev() {
        let row = &mut rows[s as usize - 1];
        let pos = row.iter().rposition(|&y| y > x).expect("reverse bump position exists");
        x = std::mem::replace(&mut row[pos], x);
    }
    p.normalize();
    x
}

fn same_shape(a: &Filling, b: &Filling) -> bool {
    a.shape() == b.shape()
}

/// Inverse of [`rsk`].
pub fn rsk_inverse(pair: &TableauPair) -> Result<NMatrix> {
    let (p, q) = (&pair.insertion, &pair.recording);
    let n = p.max_entry().max(q.max_entry()) as usize;
    if !same_shape(p, q) || !is_member(p, Flavor::Rssyt, n)? || !is_member(q, Flavor::Ssyt, n)? {
        return Err(Error::NotInImage("need a reverse SSYT and an SSYT of equal shape".into()));
    }
    let (mut p, mut q) = (p.clone(), q.clone());
    let mut pairs = Vec::new();
    while !q.is_empty() {
        let i = q.max_entry();
        // the rightmost cell holding the largest entry was recorded last
        let (cell, _) = q.cells().filter(|&(_, v)| v == i).max_by_key(|&(c, _)| c.col).expect("nonempty");
        q.rows_mut()[cell.row as usize - 1].pop();
        q.normalize();
        let j = reverse_bump(&mut p, cell.row);
        pairs.push((i, j));
    }
    Ok(Biword::from_pairs(pairs)?.to_matrix(n))
}

/// Number of entries `≥ x` in column `c` of the augmented filling.
fn count_at_least(rows: &[Vec<u32>], c: u32, x: u32, n: usize) -> usize {
    if c == 0 {
        return (n + 1).saturating_sub(x as usize);
    }
    rows.iter().filter(|r| r.get(c as usize - 1).is_some_and(|&v| v >= x)).count()
}

/// Flagged insertion `S ⇂_n j` with a basement of height `n`.
pub fn flagged_insert(s: &Filling, j: u32, n: usize) -> Result<Filling> {
    flagged_insert_traced(s, j, n).map(|r| r.0)
}

pub fn flagged_insert_traced(s: &Filling, j: u32, n: usize) -> Result<(Filling, InsertionTrace)> {
    if j == 0 || j as usize > n {
        return Err(Error::EntryOutOfRange { entry: j, n });
    }
    if s.num_rows() > n || s.max_entry() as usize > n {
        return Err(Error::AmbientTooSmall { n, len: s.num_rows().max(s.max_entry() as usize) });
    }
    let mut out = s.clone();
    let mut x = j;
    let mut bound: Option<u32> = None;
    let mut trace = InsertionTrace { new_cell: Cell::new(0, 0), bumped: vec![j], columns: Vec::new(), placements: 0 };
    {
        let rows = out.rows_mut();
        rows.resize(n, Vec::new());
    }
    loop {
        trace.placements += 1;
        let rows = out.rows_mut();
        let width = rows.iter().map(|r| r.len() as u32).max().unwrap_or(0);
        let top = bound.map_or(width + 1, |b| b.min(width + 1));
        let col = (1..=top)
            .rev()
            .find(|&c| count_at_least(rows, c, x, n) < count_at_least(rows, c - 1, x, n))
            .ok_or_else(|| Error::NotInImage(format!("no column accepts {x}")))?;
        let left_ok = |r: &Vec<u32>, row: u32| {
            col == 1 && row >= x || col > 1 && r.get(col as usize - 2).is_some_and(|&v| v >= x)
        };
        let row = (1..=n as u32)
            .rev()
            .find(|&row| {
                let r = &rows[row as usize - 1];
                left_ok(r, row) && r.get(col as usize - 1).is_none_or(|&v| v < x)
            })
            .ok_or_else(|| Error::NotInImage(format!("no row in column {col} accepts {x}")))?;
        trace.columns.push(col);
        let r = &mut rows[row as usize - 1];
        if r.len() == col as usize - 1 {
            r.push(x);
            trace.new_cell = Cell::new(col, row);
            out.normalize();
            return Ok((out, trace));
        }
        x = std::mem::replace(&mut r[col as usize - 1], x);
        trace.bumped.push(x);
        bound = Some(col);
    }
}

/// Flagged RSK: insert `j` with ambient `i` for each biword pair `(i, j)`;
/// the recording filling receives `i` in the new cell.
pub fn frsk(l: &LowerTriangularMatrix) -> TableauPair {
    frsk_biword(&Biword::from_matrix(l.as_matrix())).expect("lower triangular biwords insert")
}

/// Flagged RSK of a biword with `j ≤ i` in every pair.
pub fn frsk_biword(w: &Biword) -> Result<TableauPair> {
    let mut pair = TableauPair::default();
    for &(i, j) in w.pairs() {
        if j > i {
            return Err(Error::NotLowerTriangular);
        }
        let (s, tr) = flagged_insert_traced(&pair.insertion, j, i as usize)?;
        pair.insertion = s;
        push_cell(&mut pair.recording, tr.new_cell.row, i);
    }
    Ok(pair)
}

/// Inverse of [`frsk`] on pairs whose entries lie in `[n]`.
///
/// Peels pairs off through the classical correspondence and rejects any
/// pair outside the image.
pub fn frsk_inverse(pair: &TableauPair, n: usize) -> Result<LowerTriangularMatrix> {
    let (s, t) = (&pair.insertion, &pair.recording);
    if !same_shape(s, t) {
        return Err(Error::NotInImage("shapes differ".into()));
    }
    if !is_member(s, Flavor::Sskt, n)? || !is_member(t, Flavor::Rssaf, n)? {
        return Err(Error::NotInImage("need an SSKT and an rSSAF".into()));
    }
    let (mut s, mut t) = (s.clone(), t.clone());
    let mut pairs = Vec::new();
    while !t.is_empty() {
        let i = t.max_entry();
        let q = rho(&t);
        let col = q.cells().filter(|&(_, v)| v == i).map(|(c, _)| c.col).max().expect("nonempty");
        let row = (1..=t.num_rows() as u32)
            .find(|&r| t.entry(Cell::new(col, r)) == Some(i))
            .ok_or_else(|| Error::NotInImage(format!("no {i} in column {col}")))?;
        if t.row(row as usize).len() != col as usize {
            return Err(Error::NotInImage(format!("last recorded cell ({col},{row}) does not end its row")));
        }
        t.rows_mut()[row as usize - 1].pop();
        t.normalize();
        let mut p = tau(&s);
        let height = p.column(col).len() as u32;
        if p.row(height as usize).len() != col as usize {
            return Err(Error::NotInImage(format!("column {col} has no corner")));
        }
        let j = reverse_bump(&mut p, height);
        s = tau_dagger(&p, &t.shape())?;
        pairs.push((i, j));
    }
    let m = Biword::from_pairs(pairs)?.to_matrix(n);
    let l = LowerTriangularMatrix::try_from(m).map_err(|_| Error::NotInImage("letters above the diagonal".into()))?;
    if frsk(&l) != *pair {
        return Err(Error::NotInImage("pair is not reproduced by forward insertion".into()));
    }
    Ok(l)
}

/// Build a Ferrers-shape filling whose column `c` is `cols[c]` listed from
/// the bottom.
fn from_columns(cols: &[Vec<u32>]) -> Filling {
    let height = cols.first().map_or(0, Vec::len);
    let rows = (0..height).map(|r| cols.iter().filter_map(|col| col.get(r).copied()).collect()).collect();
    Filling::new(rows)
}

/// The reverse SSYT with the same column sets as `s`.
pub fn tau(s: &Filling) -> Filling {
    let cols: Vec<Vec<u32>> = (1..=s.num_columns())
        .map(|c| {
            let mut v = s.column(c);
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        })
        .collect();
    from_columns(&cols)
}

/// The SSYT with the same column sets as `t`.
pub fn rho(t: &Filling) -> Filling {
    let cols: Vec<Vec<u32>> = (1..=t.num_columns()).map(|c| t.column_set(c)).collect();
    from_columns(&cols)
}

/// Column by column from the left, smallest entries first: each goes to the
/// topmost empty slot immediately right of a weakly smaller entry (the
/// basement included).
pub fn rho_inverse(q: &Filling, n: usize) -> Result<Filling> {
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); n];
    for c in 1..=q.num_columns() {
        for v in q.column_set(c) {
            let row = (1..=n)
                .rev()
                .find(|&r| {
                    let cur = &rows[r - 1];
                    let left = if c == 1 { Some(r as u32) } else { cur.get(c as usize - 2).copied() };
                    cur.len() == c as usize - 1 && left.is_some_and(|l| l <= v)
                })
                .ok_or(Error::ColumnPlacement(c))?;
            rows[row - 1].push(v);
        }
    }
    Ok(Filling::new(rows))
}

/// Refill `D(a)` with the column sets of `p`: columns right to left, cells
/// bottom to top, each taking the smallest remaining entry not below its
/// right neighbour.
pub fn tau_dagger(p: &Filling, a: &WeakComposition) -> Result<Filling> {
    let width = a.parts().iter().copied().max().unwrap_or(0);
    if width != p.num_columns() {
        return Err(Error::ColumnPlacement(width.max(p.num_columns())));
    }
    let mut rows: Vec<Vec<u32>> = a.parts().iter().map(|&l| vec![0; l as usize]).collect();
    for c in (1..=width).rev() {
        let mut pool = p.column_set(c);
        let cells: Vec<usize> = (0..a.len()).filter(|&r| a.parts()[r] >= c).collect();
        if cells.len() != pool.len() {
            return Err(Error::ColumnPlacement(c));
        }
        for r in cells {
            let right = rows[r].get(c as usize).copied().unwrap_or(0);
            let pos = pool.iter().position(|&v| v >= right).ok_or(Error::ColumnPlacement(c))?;
            rows[r][c as usize - 1] = pool.remove(pos);
        }
    }
    Ok(Filling::new(rows))
}

/// Shift every biword pair `(i, j)` to `(i + n, j)`.
pub fn lift_f(a: &NMatrix) -> LowerTriangularMatrix {
    let n = a.size();
    let mut m = NMatrix::zero(2 * n);
    for i in 1..=n {
        for j in 1..=n {
            m.set(i + n, j, a.get(i, j));
        }
    }
    LowerTriangularMatrix(m)
}
