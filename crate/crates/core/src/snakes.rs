//! Snakes, special snake tabloids, the signed coefficients `K̃⁻¹`, and the
//! sign-reversing involution on pairs `(S, T)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::bases::{Basis, BasisExpansion};
use crate::combinat::{key_poset_leq, Partition, WeakComposition};
use crate::diagram::{attacking, key_diagram, Cell, Diagram};
use crate::error::{Error, Result};
use crate::fillings::{enumerate, is_member, Filling, Flavor};

/// Same column, or adjacent columns with the left cell weakly higher.
pub fn weakly_connected(u: Cell, v: Cell) -> bool {
    if u.col == v.col {
        return true;
    }
    let (left, right) = if u.col < v.col { (u, v) } else { (v, u) };
    right.col == left.col + 1 && left.row >= right.row
}

fn components_by(d: &Diagram, linked: impl Fn(Cell, Cell) -> bool) -> Vec<Diagram> {
    let cells: Vec<Cell> = d.iter().copied().collect();
    let mut parent: Vec<usize> = (0..cells.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            if linked(cells[i], cells[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Cell>> = BTreeMap::new();
    for (i, &c) in cells.iter().enumerate() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(c);
    }
    let mut out: Vec<Diagram> = groups.into_values().map(Diagram::new).collect();
    out.sort();
    out
}

/// Weakly connected components, sorted.
pub fn weak_components(d: &Diagram) -> Vec<Diagram> {
    components_by(d, weakly_connected)
}

/// Components under horizontal and vertical adjacency.
pub fn edge_components(d: &Diagram) -> Vec<Diagram> {
    components_by(d, |u, v| u.col.abs_diff(v.col) + u.row.abs_diff(v.row) == 1)
}

/// `(c,s), (c+1,s), (c+1,r)` all present with `r < s`.
fn has_forbidden_triple(s: &Diagram) -> bool {
    s.iter().any(|&u| s.contains(Cell::new(u.col + 1, u.row)) && s.iter().any(|v| v.col == u.col + 1 && v.row < u.row))
}

/// Shape of `D(b) \ S` if it is a key diagram, padded to the length of `b`.
pub fn complement_shape(s: &Diagram, b: &WeakComposition) -> Option<WeakComposition> {
    let host = key_diagram(b);
    if !s.is_subset(&host) {
        return None;
    }
    let rest = host.difference(s);
    rest.key_shape().map(|a| a.pad_to(b.len()))
}

/// Lowest cell of column 1 in `D(b)`.
pub fn anchor(b: &WeakComposition) -> Option<Cell> {
    b.support().first().map(|&r| Cell::new(1, r as u32))
}

pub fn is_snake(s: &Diagram, b: &WeakComposition) -> bool {
    let Some(a) = complement_shape(s, b) else {
        return false;
    };
    weak_components(s).len() <= 1 && key_poset_leq(&a, b) && !has_forbidden_triple(s)
}

/// A snake that is empty or holds the lowest cell of column 1.
pub fn is_special_snake(s: &Diagram, b: &WeakComposition) -> bool {
    is_snake(s, b) && (s.is_empty() || anchor(b).is_some_and(|c| s.contains(c)))
}

/// A snake of `D(host)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Snake {
    cells: Diagram,
    host: WeakComposition,
}

impl Snake {
    pub fn new(cells: Diagram, host: WeakComposition) -> Result<Self> {
        if !is_snake(&cells, &host) {
            return Err(Error::NotASnake(format!("{:?} in shape {host}", cells_vec(&cells))));
        }
        Ok(Snake { cells, host })
    }

    pub fn cells(&self) -> &Diagram {
        &self.cells
    }

    pub fn host(&self) -> &WeakComposition {
        &self.host
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn is_special(&self) -> bool {
        self.is_empty() || anchor(&self.host).is_some_and(|c| self.cells.contains(c))
    }

    /// Shape of the remaining key diagram.
    pub fn complement(&self) -> WeakComposition {
        complement_shape(&self.cells, &self.host).expect("validated on construction")
    }

    pub fn height(&self) -> usize {
        height(&self.cells)
    }

    pub fn sign(&self) -> i64 {
        sign(&self.cells)
    }
}

fn cells_vec(d: &Diagram) -> Vec<(u32, u32)> {
    d.iter().map(|&c| c.into()).collect()
}

/// Number of occupied rows; 1 for the empty set.
pub fn height(s: &Diagram) -> usize {
    s.iter().map(|c| c.row).collect::<std::collections::BTreeSet<_>>().len().max(1)
}

pub fn sign(s: &Diagram) -> i64 {
    if height(s) % 2 == 1 {
        1
    } else {
        -1
    }
}

/// Every nonempty special snake of `D(c)`, or just the empty one when `c`
/// is zero. A special snake holds its whole anchor row and a suffix of each
/// higher row, so candidates are indexed by the complement shape.
pub fn special_snakes(c: &WeakComposition) -> Vec<Snake> {
    let Some(r0) = c.support().first().copied() else {
        return vec![Snake { cells: Diagram::empty(), host: c.clone() }];
    };
    let parts = c.parts().to_vec();
    let mut a = parts.clone();
    a[r0 - 1] = 0;
    let mut out = Vec::new();
    suffix_search(&parts, r0, r0 + 1, &mut a, &mut out);
    out
}

fn suffix_search(c: &[u32], r0: usize, r: usize, a: &mut Vec<u32>, out: &mut Vec<Snake>) {
    if r > c.len() {
        let cells: Diagram = (r0..=c.len())
            .flat_map(|row| (a[row - 1] + 1..=c[row - 1]).map(move |col| Cell::new(col, row as u32)))
            .collect();
        if weak_components(&cells).len() <= 1 {
            out.push(Snake { cells, host: WeakComposition::new(c.to_vec()) });
        }
        return;
    }
    let cr = c[r - 1];
    for ar in 0..=cr {
        let descents_ok = (1..r).all(|i| a[i - 1] <= ar || c[i - 1] > cr);
        // columns ar+2..=cr of row r must miss every lower suffix
        let triple_free =
            cr < ar + 2 || (r0..r).all(|i| a[i - 1] + 1 > cr || c[i - 1] < ar + 2 || a[i - 1] >= c[i - 1]);
        if descents_ok && triple_free {
            a[r - 1] = ar;
            suffix_search(c, r0, r + 1, a, out);
        }
    }
    a[r - 1] = cr;
}

/// An ordered decomposition `D(b) = S_1 ⊔ … ⊔ S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SnakeTabloid {
    shape: WeakComposition,
    snakes: Vec<Diagram>,
}

impl SnakeTabloid {
    /// Checks every defining condition from scratch.
    pub fn new(shape: WeakComposition, snakes: Vec<Diagram>) -> Result<Self> {
        let t = SnakeTabloid { shape, snakes };
        t.validate()?;
        Ok(t)
    }

    /// Cells labelled `i` form `S_i`; `n` is the number of snakes.
    pub fn from_labels(labels: &Filling, n: usize) -> Result<Self> {
        let shape = labels.shape().pad_to(n);
        let mut snakes = vec![Diagram::empty(); n];
        for (cell, v) in labels.cells() {
            if v == 0 || v as usize > n {
                return Err(Error::InvalidTabloid(format!("label {v} at {cell}")));
            }
            snakes[v as usize - 1].insert(cell);
        }
        SnakeTabloid::new(shape, snakes)
    }

    pub fn shape(&self) -> &WeakComposition {
        &self.shape
    }

    pub fn snakes(&self) -> &[Diagram] {
        &self.snakes
    }

    pub fn weight(&self) -> WeakComposition {
        WeakComposition::new(self.snakes.iter().map(|s| s.len() as u32).collect())
    }

    pub fn sign(&self) -> i64 {
        self.snakes.iter().map(sign).product()
    }

    /// Filling whose entry at each cell is the index of its snake.
    pub fn labels(&self) -> Filling {
        let mut rows: Vec<Vec<u32>> = self.shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
        for (i, s) in self.snakes.iter().enumerate() {
            for c in s {
                rows[c.row as usize - 1][c.col as usize - 1] = i as u32 + 1;
            }
        }
        Filling::new(rows)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidTabloid(m));
        if self.snakes.len() < self.shape.support_len() {
            return bad(format!("{} snakes for shape {}", self.snakes.len(), self.shape));
        }
        let mut rest = self.shape.pad_to(self.snakes.len());
        for (i, s) in self.snakes.iter().enumerate() {
            let row_empty = rest.part(i + 1) == 0;
            if s.is_empty() != row_empty {
                return bad(format!("snake {} is empty exactly when row {} is not", i + 1, i + 1));
            }
            if !is_special_snake(s, &rest) {
                return bad(format!("snake {} is not a special snake of {rest}", i + 1));
            }
            rest = complement_shape(s, &rest).expect("checked by is_special_snake");
        }
        if rest.size() != 0 {
            return bad(format!("cells of shape {rest} are left over"));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let snakes: Vec<Vec<(u32, u32)>> = self.snakes.iter().map(cells_vec).collect();
        json!({
            "shape": self.shape.parts(),
            "snakes": snakes,
            "weight": self.weight().parts(),
            "sign": self.sign(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let parse = |e: serde_json::Error| Error::Parse(e.to_string());
        let shape: Vec<u32> = serde_json::from_value(v["shape"].clone()).map_err(parse)?;
        let snakes: Vec<Vec<(u32, u32)>> = serde_json::from_value(v["snakes"].clone()).map_err(parse)?;
        let snakes = snakes.into_iter().map(|s| s.into_iter().map(Cell::from).collect()).collect();
        SnakeTabloid::new(WeakComposition::new(shape), snakes)
    }
}

/// All special snake tabloids of shape `b` with `b.len()` snakes.
pub fn enumerate_special_snake_tabloids(b: &WeakComposition) -> Vec<SnakeTabloid> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    tabloid_search(b, b, 1, &mut prefix, &mut out);
    out
}

fn tabloid_search(
    shape: &WeakComposition,
    rest: &WeakComposition,
    i: usize,
    prefix: &mut Vec<Diagram>,
    out: &mut Vec<SnakeTabloid>,
) {
    if i > shape.len() {
        out.push(SnakeTabloid { shape: shape.clone(), snakes: prefix.clone() });
        return;
    }
    if rest.part(i) == 0 {
        prefix.push(Diagram::empty());
        tabloid_search(shape, rest, i + 1, prefix, out);
        prefix.pop();
        return;
    }
    for s in special_snakes(rest) {
        let next = s.complement();
        prefix.push(s.cells);
        tabloid_search(shape, &next, i + 1, prefix, out);
        prefix.pop();
    }
}

/// `Σ_a K̃⁻¹_{ab}` as a map over weights `a` (zero entries dropped).
pub fn inverse_ktilde_column(b: &WeakComposition) -> BTreeMap<WeakComposition, i64> {
    let mut out = BTreeMap::new();
    for t in enumerate_special_snake_tabloids(b) {
        *out.entry(t.weight().trimmed()).or_insert(0) += t.sign();
    }
    out.retain(|_, v| *v != 0);
    out
}

pub fn inverse_ktilde(a: &WeakComposition, b: &WeakComposition) -> i64 {
    enumerate_special_snake_tabloids(b).iter().filter(|t| t.weight() == *a).map(SnakeTabloid::sign).sum()
}

/// `key_b = Σ_a K̃⁻¹_{ab} ĥ_a`.
pub fn expand_key_into_h(b: &WeakComposition) -> BasisExpansion {
    let mut out = BasisExpansion::new(Basis::HFlagged);
    for (a, c) in inverse_ktilde_column(b) {
        out.add(a, BigInt::from(c));
    }
    out
}

/// `D(rev μ)` coordinates with `ℓ(μ)` rows: connected, the complement is
/// `D(rev λ)` for a partition `λ ⊆ μ`, and no 2×2 block.
pub fn rim_hook_check(s: &Diagram, mu: &Partition) -> bool {
    let host_shape = mu.to_composition(mu.len()).rev();
    let Some(rest) = complement_shape(s, &host_shape) else {
        return false;
    };
    let increasing = rest.parts().windows(2).all(|w| w[0] <= w[1]);
    let square = s.iter().any(|&c| {
        [Cell::new(c.col + 1, c.row), Cell::new(c.col, c.row + 1), Cell::new(c.col + 1, c.row + 1)]
            .into_iter()
            .all(|d| s.contains(d))
    });
    edge_components(s).len() <= 1 && increasing && !square
}

/// Signed counts of special rim hook tabloids of shape `mu` grouped by type.
///
/// Works in English coordinates on the partition directly: each step removes
/// a border strip holding the bottom cell of the first column.
pub fn special_rim_hook_tabloids(mu: &Partition) -> BTreeMap<Partition, i64> {
    let mut out = BTreeMap::new();
    rim_hook_search(mu.parts().to_vec(), &mut Vec::new(), 1, &mut out);
    out.retain(|_, v| *v != 0);
    out
}

fn rim_hook_search(nu: Vec<u32>, sizes: &mut Vec<u32>, sgn: i64, out: &mut BTreeMap<Partition, i64>) {
    if nu.is_empty() {
        let mut t = sizes.clone();
        t.sort_unstable_by(|a, b| b.cmp(a));
        *out.entry(Partition::new(t).expect("sorted")).or_insert(0) += sgn;
        return;
    }
    let l = nu.len();
    // inner shapes λ ⊆ ν with at most l-1 rows
    let mut lam = vec![0u32; l - 1];
    inner_shapes(&nu, 0, &mut lam, &mut |lam: &[u32]| {
        let cells: Vec<(usize, u32)> = (0..l)
            .flat_map(|i| {
                let lo = lam.get(i).copied().unwrap_or(0);
                (lo + 1..=nu[i]).map(move |c| (i, c))
            })
            .collect();
        let has = |i: usize, c: u32| cells.contains(&(i, c));
        let square = cells.iter().any(|&(i, c)| has(i + 1, c) && has(i, c + 1) && has(i + 1, c + 1));
        if square || !english_connected(&cells) {
            return;
        }
        let rows = cells.iter().map(|&(i, _)| i).collect::<std::collections::BTreeSet<_>>().len();
        let next: Vec<u32> = lam.iter().copied().filter(|&p| p > 0).collect();
        sizes.push(cells.len() as u32);
        let s = if rows % 2 == 1 { sgn } else { -sgn };
        rim_hook_search(next, sizes, s, out);
        sizes.pop();
    });
}

fn inner_shapes(nu: &[u32], i: usize, lam: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if i == lam.len() {
        f(lam);
        return;
    }
    let cap = if i == 0 { nu[0] } else { nu[i].min(lam[i - 1]) };
    for v in 0..=cap {
        lam[i] = v;
        inner_shapes(nu, i + 1, lam, f);
    }
}

fn english_connected(cells: &[(usize, u32)]) -> bool {
    let Some(&start) = cells.first() else {
        return true;
    };
    let mut seen = vec![start];
    let mut stack = vec![start];
    while let Some((i, c)) = stack.pop() {
        for &(j, d) in cells {
            if i.abs_diff(j) + c.abs_diff(d) as usize == 1 && !seen.contains(&(j, d)) {
                seen.push((j, d));
                stack.push((j, d));
            }
        }
    }
    seen.len() == cells.len()
}

fn restrict(t: &Filling, a: &WeakComposition) -> Filling {
    Filling::new((1..=a.len()).map(|r| t.row(r)[..a.part(r) as usize].to_vec()).collect())
}

/// `T ∈ 𝒢(S)`: ones on `S` and an SSKT on the complement.
pub fn in_gset(s: &Snake, t: &Filling, n: usize) -> bool {
    if t.shape() != *s.host() {
        return false;
    }
    let a = s.complement();
    s.cells().iter().all(|&c| t.entry(c) == Some(1)) && is_member(&restrict(t, &a), Flavor::Sskt, n).unwrap_or(false)
}

/// Every `T` with ones on `S` and an SSKT with entries in `[n]` elsewhere.
pub fn gset_enumerate(s: &Snake, n: usize) -> Result<Vec<Filling>> {
    let a = s.complement();
    let b = s.host();
    let inner = enumerate(&a, n, Flavor::Sskt, None)?;
    Ok(inner
        .into_iter()
        .map(|t| {
            let rows = (1..=b.len())
                .map(|r| {
                    let mut row = t.row(r).to_vec();
                    row.resize(b.part(r) as usize, 1);
                    row
                })
                .collect();
            Filling::new(rows)
        })
        .collect())
}

/// Ordered pairs `(x, y)` with `x ∈ S`, both entries 1, `y` attacking `x`
/// from above in its column or from the next column over, and in the latter
/// case the cell left of `y` outside `S`.
pub fn s_attacks(s: &Snake, t: &Filling) -> Vec<(Cell, Cell)> {
    let ones: Vec<Cell> = t.cells().filter(|&(_, v)| v == 1).map(|(c, _)| c).collect();
    let mut out = Vec::new();
    for &x in s.cells() {
        if t.entry(x) != Some(1) {
            continue;
        }
        for &y in &ones {
            let placed = (y.col == x.col && y.row > x.row) || (y.col == x.col + 1 && x.row > y.row);
            if !placed || !attacking(x, y) {
                continue;
            }
            if y.col != x.col && s.cells().contains(Cell::new(y.col - 1, y.row)) {
                continue;
            }
            out.push((x, y));
        }
    }
    out
}

/// `ι(S, T) = (S Δ B(y), T)`.
pub fn iota(s: &Snake, t: &Filling, n: usize) -> Result<(Snake, Filling)> {
    let b = s.host();
    let out = |m: &str| Err(Error::OutsideDomain(m.to_string()));
    if b.part(1) == 0 {
        return out("the first row is empty");
    }
    if !s.is_special() {
        return out("the snake is not special");
    }
    if !in_gset(s, t, n) {
        return out("the filling is not in G(S)");
    }
    if is_member(t, Flavor::Sskt, n)? {
        return out("the filling is an SSKT");
    }
    let attacks = s_attacks(s, t);
    let x = attacks.iter().map(|&(x, _)| x).max_by_key(|c| (c.col, c.row));
    let Some(x) = x else {
        return out("no S-attack");
    };
    let y = attacks
        .iter()
        .filter(|&&(u, _)| u == x)
        .map(|&(_, y)| y)
        .max_by_key(|c| (c.col, std::cmp::Reverse(c.row)))
        .expect("x starts an attack");
    let block: Diagram = (y.col..=b.part(y.row as usize)).map(|c| Cell::new(c, y.row)).collect();
    let next = Snake::new(s.cells().symmetric_difference(&block), b.clone())?;
    Ok((next, t.clone()))
}

/// The set `𝓕` of pairs `(S, T)` with `S` special, `T ∈ 𝒢(S)` not an SSKT.
pub fn f_set(b: &WeakComposition, n: usize) -> Result<Vec<(Snake, Filling)>> {
    let mut out = Vec::new();
    for s in special_snakes(b) {
        for t in gset_enumerate(&s, n)? {
            if !is_member(&t, Flavor::Sskt, n)? {
                out.push((s.clone(), t));
            }
        }
    }
    Ok(out)
}
