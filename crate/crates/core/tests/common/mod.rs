//! Brute-force oracles written without the library's algorithms.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use hkey_core::combinat::{Partition, WeakComposition};
use hkey_core::fillings::Filling;
use hkey_core::SparsePolynomial;
use num_bigint::BigInt;
use num_traits::One;

/// Every filling of `shape` with entries in `[n]`.
pub fn all_fillings(shape: &WeakComposition, n: usize) -> Vec<Filling> {
    let cells = shape.size() as usize;
    let mut out = Vec::new();
    let mut entries = vec![1u32; cells];
    loop {
        out.push(Filling::from_reading(shape, &entries));
        let Some(pos) = entries.iter().rposition(|&v| (v as usize) < n) else {
            break;
        };
        entries[pos] += 1;
        for e in &mut entries[pos + 1..] {
            *e = 1;
        }
    }
    out
}

/// Distinct arrangements of a multiset, in lexicographic order.
pub fn arrangements(mut letters: Vec<u32>) -> Vec<Vec<u32>> {
    letters.sort_unstable();
    let mut out = vec![letters.clone()];
    loop {
        let Some(i) = (1..letters.len()).rev().find(|&i| letters[i - 1] < letters[i]) else {
            return out;
        };
        let j = (i..letters.len()).rev().find(|&j| letters[j] > letters[i - 1]).expect("successor exists");
        letters.swap(i - 1, j);
        letters[i..].reverse();
        out.push(letters.clone());
    }
}

pub fn partition_shape(lam: &Partition) -> WeakComposition {
    lam.to_composition(lam.len())
}

/// French SSYT: rows weakly increase, columns strictly increase upward.
pub fn is_ssyt(t: &Filling) -> bool {
    let rows = t.rows();
    let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
    let cols_ok = rows.windows(2).all(|pair| pair[1].iter().zip(&pair[0]).all(|(up, down)| down < up));
    rows_ok && cols_ok
}

/// SSYT of shape `lam` and content `mu`, counted over all arrangements.
pub fn ssyt_count(lam: &Partition, mu: &WeakComposition) -> u64 {
    if lam.size() != mu.size() {
        return 0;
    }
    let letters: Vec<u32> = (1..=mu.len()).flat_map(|i| std::iter::repeat_n(i as u32, mu.part(i) as usize)).collect();
    let shape = partition_shape(lam);
    arrangements(letters).into_iter().filter(|w| is_ssyt(&Filling::from_reading(&shape, w))).count() as u64
}

pub fn ssyt_generating_function(lam: &Partition, n: usize) -> SparsePolynomial {
    let mut p = SparsePolynomial::zero(n);
    for t in all_fillings(&partition_shape(lam), n) {
        if is_ssyt(&t) {
            p.add_term(t.weight(n), BigInt::one());
        }
    }
    p
}

/// `K⁻¹` over partitions of `k`: `inv[(λ, μ)]` with `Σ_μ K_{λμ} K⁻¹_{μν} = δ_{λν}`.
#[allow(clippy::needless_range_loop)]
pub fn inverse_kostka(k: u32) -> BTreeMap<(Partition, Partition), i64> {
    let mut parts = Partition::all(k);
    // decreasing lex order extends dominance, so K is upper unitriangular
    parts.sort_by(|a, b| b.parts().cmp(a.parts()));
    let m = parts.len();
    let kost: Vec<Vec<i64>> = parts
        .iter()
        .map(|lam| parts.iter().map(|mu| ssyt_count(lam, &mu.to_composition(mu.len())) as i64).collect())
        .collect();
    let mut inv = vec![vec![0i64; m]; m];
    for col in 0..m {
        for row in (0..m).rev() {
            let target = i64::from(row == col);
            let acc: i64 = (row + 1..m).map(|j| kost[row][j] * inv[j][col]).sum();
            assert_eq!(kost[row][row], 1, "unitriangular");
            inv[row][col] = target - acc;
        }
    }
    let mut out = BTreeMap::new();
    for (i, lam) in parts.iter().enumerate() {
        for (j, mu) in parts.iter().enumerate() {
            out.insert((lam.clone(), mu.clone()), inv[i][j]);
        }
    }
    out
}

fn times_variable(p: &SparsePolynomial, i: usize) -> SparsePolynomial {
    p * &SparsePolynomial::variable(i)
}

/// Demazure operator `f ↦ ∂_i(x_i f)`.
pub fn demazure(p: &SparsePolynomial, i: usize) -> SparsePolynomial {
    times_variable(p, i).divided_difference(i)
}

pub fn key_by_operators(a: &WeakComposition, n: usize) -> SparsePolynomial {
    let parts = a.pad_to(n).parts().to_vec();
    match (1..n).find(|&i| parts[i - 1] < parts[i]) {
        None => SparsePolynomial::monomial(WeakComposition::new(parts), BigInt::one()).with_nvars(n),
        Some(i) => {
            let mut swapped = parts.clone();
            swapped.swap(i - 1, i);
            demazure(&key_by_operators(&WeakComposition::new(swapped), n), i).with_nvars(n)
        }
    }
}

pub fn atom_by_operators(a: &WeakComposition, n: usize) -> SparsePolynomial {
    let parts = a.pad_to(n).parts().to_vec();
    match (1..n).find(|&i| parts[i - 1] < parts[i]) {
        None => SparsePolynomial::monomial(WeakComposition::new(parts), BigInt::one()).with_nvars(n),
        Some(i) => {
            let mut swapped = parts.clone();
            swapped.swap(i - 1, i);
            let prev = atom_by_operators(&WeakComposition::new(swapped), n);
            (&demazure(&prev, i) - &prev).with_nvars(n)
        }
    }
}

/// Lower-triangular `n × n` natural matrices with entry sum at most `max`,
/// as row-major vectors.
pub fn lower_matrices(n: usize, max: u32) -> Vec<Vec<Vec<u32>>> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..=i).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut m = vec![vec![0u32; n]; n];
    fn go(slots: &[(usize, usize)], left: u32, m: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        let Some((&(i, j), rest)) = slots.split_first() else {
            out.push(m.clone());
            return;
        };
        for v in 0..=left {
            m[i][j] = v;
            go(rest, left - v, m, out);
        }
        m[i][j] = 0;
    }
    go(&slots, max, &mut m, &mut out);
    out
}

pub fn row_sums(m: &[Vec<u32>]) -> WeakComposition {
    WeakComposition::new(m.iter().map(|r| r.iter().sum()).collect())
}

pub fn col_sums(m: &[Vec<u32>]) -> WeakComposition {
    WeakComposition::new((0..m.len()).map(|j| m.iter().map(|r| r[j]).sum()).collect())
}

/// `Σ x^{col(L)}` over lower-triangular `L` with row sums `a`.
pub fn h_by_matrices(a: &WeakComposition, n: usize) -> SparsePolynomial {
    let a = a.pad_to(n);
    let mut p = SparsePolynomial::zero(n);
    for m in lower_matrices(n, a.size()) {
        if row_sums(&m) == a {
            p.add_term(col_sums(&m), BigInt::one());
        }
    }
    p
}

/// `h_k(x_1..x_n)` by listing monomials.
pub fn complete_homogeneous(k: u32, n: usize) -> SparsePolynomial {
    let mut p = SparsePolynomial::zero(n);
    fn go(k: u32, n: usize, prefix: &mut Vec<u32>, p: &mut SparsePolynomial) {
        if prefix.len() + 1 == n {
            prefix.push(k);
            p.add_term(WeakComposition::new(prefix.clone()), BigInt::one());
            prefix.pop();
            return;
        }
        for v in 0..=k {
            prefix.push(v);
            go(k - v, n, prefix, p);
            prefix.pop();
        }
    }
    if n > 0 {
        go(k, n, &mut Vec::new(), &mut p);
    } else if k == 0 {
        p = SparsePolynomial::one(0);
    }
    p
}

pub type Cells = BTreeSet<(u32, u32)>;

/// One Kohnert move per occupied row, cells as `(col, row)`.
pub fn kohnert_step(d: &Cells) -> Vec<Cells> {
    let rows: BTreeSet<u32> = d.iter().map(|&(_, r)| r).collect();
    let mut out = Vec::new();
    for r in rows {
        let c = d.iter().filter(|&&(_, rr)| rr == r).map(|&(c, _)| c).max().unwrap();
        let mut target = r;
        while target > 1 {
            target -= 1;
            if !d.contains(&(c, target)) {
                let mut next = d.clone();
                next.remove(&(c, r));
                next.insert((c, target));
                out.push(next);
                break;
            }
        }
    }
    out
}

pub fn kohnert_orbit(d: &Cells) -> BTreeSet<Cells> {
    let mut seen = BTreeSet::from([d.clone()]);
    let mut stack = vec![d.clone()];
    while let Some(cur) = stack.pop() {
        for next in kohnert_step(&cur) {
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    seen
}

/// Schubert polynomials from the staircase by divided differences, with the
/// permutation given as a full word.
pub fn schubert_by_recursion(word: &[u32]) -> SparsePolynomial {
    let m = word.len();
    match (1..m).find(|&i| word[i - 1] < word[i]) {
        None => {
            let exp: Vec<u32> = (1..m).map(|i| (m - i) as u32).collect();
            SparsePolynomial::monomial(WeakComposition::new(exp), BigInt::one())
        }
        Some(i) => {
            let mut up = word.to_vec();
            up.swap(i - 1, i);
            schubert_by_recursion(&up).divided_difference(i)
        }
    }
}
