//! Kohnert moves, Kohnert polynomials, and the diagram `D_a` whose Kohnert
//! polynomial is `ĥ_a`.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::WeakComposition;
use crate::diagram::{Cell, Diagram};
use crate::error::{Error, Result};
use crate::frsk::{LowerTriangularMatrix, NMatrix};
use crate::poly::SparsePolynomial;

/// A diagram with its row weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KohnertState {
    pub diagram: Diagram,
    pub weight: WeakComposition,
}

impl KohnertState {
    pub fn new(diagram: Diagram, n: usize) -> Self {
        let weight = diagram.weight(n);
        KohnertState { diagram, weight }
    }
}

/// All diagrams reachable by one move: the rightmost cell of a row drops to
/// the topmost vacant position below it in its column.
pub fn kohnert_moves(d: &Diagram) -> BTreeSet<Diagram> {
    let mut out = BTreeSet::new();
    let rows: BTreeSet<u32> = d.iter().map(|c| c.row).collect();
    for r in rows {
        let col = d.iter().filter(|c| c.row == r).map(|c| c.col).max().expect("row is occupied");
        if let Some(s) = (1..r).rev().find(|&s| !d.contains(Cell::new(col, s))) {
            let mut next = d.clone();
            next.remove(Cell::new(col, r));
            next.insert(Cell::new(col, s));
            out.insert(next);
        }
    }
    out
}

/// Every diagram obtainable from `d` by a sequence of moves, `d` included.
pub fn kohnert_closure(d: &Diagram) -> BTreeSet<Diagram> {
    let mut seen = BTreeSet::from([d.clone()]);
    let mut queue = VecDeque::from([d.clone()]);
    while let Some(cur) = queue.pop_front() {
        for next in kohnert_moves(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// The closure as states carrying weights in `n` rows.
pub fn kohnert_states(d: &Diagram, n: usize) -> Vec<KohnertState> {
    kohnert_closure(d).into_iter().map(|t| KohnertState::new(t, n)).collect()
}

/// `Σ x^{wt(T)}` over the closure; the empty diagram gives 1.
pub fn kohnert_polynomial(d: &Diagram) -> SparsePolynomial {
    let n = d.max_row() as usize;
    let terms = kohnert_closure(d).into_iter().map(|t| (t.weight(n), BigInt::one()));
    SparsePolynomial::from_terms(n, terms)
}

/// Row `r` of `D_a` fills the columns after the first `a_1 + … + a_{r-1}`,
/// up to `a_1 + … + a_r`.
pub fn build_da(a: &WeakComposition, n: usize) -> Result<Diagram> {
    if a.support_len() > n {
        return Err(Error::AmbientTooSmall { n, len: a.support_len() });
    }
    let mut cells = Vec::new();
    let mut start = 0;
    for r in 1..=a.len() {
        let end = start + a.part(r);
        cells.extend((start + 1..=end).map(|c| Cell::new(c, r as u32)));
        start = end;
    }
    Ok(Diagram::new(cells))
}

/// `(d, r), (c, s)` in the diagram with `c < d`, `r < s` forces `(c, r)`.
pub fn is_southwest(d: &Diagram) -> bool {
    d.iter().all(|&x| d.iter().all(|&y| !(y.col < x.col && x.row < y.row) || d.contains(Cell::new(y.col, x.row))))
}

/// Column window of part `i`: half-open range of columns.
fn windows(a: &WeakComposition) -> Vec<(u32, u32)> {
    let sums = a.prefix_sums();
    (0..a.len()).map(|i| (if i == 0 { 0 } else { sums[i - 1] }, sums[i])).collect()
}

/// `L_{i,j}` counts cells of `t` in row `j` inside the column window of part
/// `i`. Rejects diagrams outside the closure of `D_a`, which are exactly
/// those failing: one cell per column of `1..=|a|`, rows at most `i` in
/// window `i`, rows weakly decreasing left to right within a window.
pub fn phi(t: &Diagram, a: &WeakComposition) -> Result<LowerTriangularMatrix> {
    let n = a.len().max(t.max_row() as usize);
    let total = a.size();
    let fail = |msg: String| Err(Error::NotInClosure(msg));
    if t.len() != total as usize || t.max_col() > total {
        return fail(format!("expected one cell in each of columns 1..={total}"));
    }
    let mut row_of = vec![0u32; total as usize + 1];
    for c in t.iter() {
        if row_of[c.col as usize] != 0 {
            return fail(format!("column {} holds two cells", c.col));
        }
        row_of[c.col as usize] = c.row;
    }
    let mut m = NMatrix::zero(n);
    for (i, (lo, hi)) in windows(a).into_iter().enumerate() {
        let mut prev = u32::MAX;
        for c in lo + 1..=hi {
            let r = row_of[c as usize];
            if r as usize > i + 1 {
                return fail(format!("cell ({c},{r}) lies above row {}", i + 1));
            }
            if r > prev {
                return fail(format!("rows increase within the window of part {}", i + 1));
            }
            prev = r;
            m.set(i + 1, r as usize, m.get(i + 1, r as usize) + 1);
        }
    }
    LowerTriangularMatrix::try_from(m)
}

/// Inverse of [`phi`]: inside window `r`, the rightmost `L_{r,1}` columns
/// get row 1, the next `L_{r,2}` row 2, and so on.
pub fn phi_inverse(l: &LowerTriangularMatrix, a: &WeakComposition) -> Result<Diagram> {
    let m = l.as_matrix();
    if m.row_sums() != *a {
        return Err(Error::NotInClosure(format!("row sums {} differ from {a}", m.row_sums())));
    }
    let mut cells = Vec::new();
    for (i, (_, hi)) in windows(a).into_iter().enumerate() {
        let mut c = hi;
        for j in 1..=i + 1 {
            for _ in 0..m.get(i + 1, j) {
                cells.push(Cell::new(c, j as u32));
                c -= 1;
            }
        }
    }
    Ok(Diagram::new(cells))
}
