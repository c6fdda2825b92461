//! Weak compositions, partitions, permutations and the orders on them.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of naturals with a declared length.
///
/// Trailing zeros do not affect equality, hashing or ordering, but the
/// declared length is kept for reversal and diagram construction.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition {
    parts: Vec<u32>,
}

impl WeakComposition {
    pub fn new(parts: Vec<u32>) -> Self {
        WeakComposition { parts }
    }

    pub fn zeros(n: usize) -> Self {
        WeakComposition { parts: vec![0; n] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Declared length, trailing zeros included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (1-based); zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The parts with trailing zeros removed.
    pub fn stripped(&self) -> &[u32] {
        let end = self.parts.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1);
        &self.parts[..end]
    }

    /// Index of the last nonzero part (0 for the zero composition).
    pub fn support_len(&self) -> usize {
        self.stripped().len()
    }

    /// Same value with declared length exactly the support length.
    pub fn trimmed(&self) -> Self {
        WeakComposition::new(self.stripped().to_vec())
    }

    /// Extend with zeros to declared length at least `n`.
    pub fn pad_to(&self, n: usize) -> Self {
        let mut parts = self.parts.clone();
        if parts.len() < n {
            parts.resize(n, 0);
        }
        WeakComposition { parts }
    }

    /// Reversal over the declared length.
    pub fn rev(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        WeakComposition { parts }
    }

    pub fn sort(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(parts)
    }

    /// `0^k × a`.
    pub fn prepend_zeros(&self, k: usize) -> Self {
        let mut parts = vec![0; k];
        parts.extend_from_slice(&self.parts);
        WeakComposition { parts }
    }

    pub fn nonzero_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p != 0).count()
    }

    /// 1-based indices of the nonzero parts.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.part(i) != 0).collect()
    }

    pub fn prefix_sums(&self) -> Vec<u32> {
        self.parts
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }
}

impl PartialEq for WeakComposition {
    fn eq(&self, other: &Self) -> bool {
        self.stripped() == other.stripped()
    }
}

impl Eq for WeakComposition {}

impl Hash for WeakComposition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.stripped().hash(state);
    }
}

/// Lexicographic order on zero-padded sequences.
impl Ord for WeakComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.len().max(other.len());
        (1..=n).map(|i| self.part(i).cmp(&other.part(i))).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
    }
}

impl PartialOrd for WeakComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for WeakComposition {
    fn from(parts: Vec<u32>) -> Self {
        WeakComposition::new(parts)
    }
}

impl From<&[u32]> for WeakComposition {
    fn from(parts: &[u32]) -> Self {
        WeakComposition::new(parts.to_vec())
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}")))).collect()
}

impl FromStr for WeakComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_list(s).map(WeakComposition::new)
    }
}

/// All weak compositions of `size` with exactly `len` parts, in lexicographic order.
pub fn compositions(size: u32, len: usize) -> Vec<WeakComposition> {
    fn go(size: u32, len: usize, prefix: &mut Vec<u32>, out: &mut Vec<WeakComposition>) {
        if len == 0 {
            if size == 0 {
                out.push(WeakComposition::new(prefix.clone()));
            }
            return;
        }
        if len == 1 {
            prefix.push(size);
            out.push(WeakComposition::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for p in 0..=size {
            prefix.push(p);
            go(size - p, len - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(size, len, &mut Vec::with_capacity(len), &mut out);
    out
}

/// All weak compositions of length `len` and size at most `max_size`.
pub fn compositions_up_to(max_size: u32, len: usize) -> Vec<WeakComposition> {
    (0..=max_size).flat_map(|d| compositions(d, len)).collect()
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Accepts trailing zeros; rejects anything not weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition::from_sorted(parts))
    }

    fn from_sorted(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part `i` (1-based); zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// As a composition of declared length `max(n, len)`.
    pub fn to_composition(&self, n: usize) -> WeakComposition {
        WeakComposition::new(self.parts.clone()).pad_to(n)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width).map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32).collect();
        Partition { parts }
    }

    /// Young containment `self ⊆ other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        (1..=self.len()).all(|i| self.part(i) <= other.part(i))
    }

    /// All partitions of `size`, in reverse lexicographic order.
    pub fn all(size: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                go(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, &mut Vec::new(), &mut out);
        out
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", WeakComposition::new(self.parts.clone()))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

/// Returns `(sort(a), rev(a))`.
pub fn sort_and_reverse(a: &WeakComposition) -> (Partition, WeakComposition) {
    (a.sort(), a.rev())
}

/// Every prefix sum of `a` is at most the matching prefix sum of `b`.
pub fn dominance_leq(a: &WeakComposition, b: &WeakComposition) -> bool {
    let n = a.len().max(b.len());
    let (mut sa, mut sb) = (0u64, 0u64);
    for i in 1..=n {
        sa += u64::from(a.part(i));
        sb += u64::from(b.part(i));
        if sa > sb {
            return false;
        }
    }
    true
}

/// The key poset: `a ≤ b` part-wise, and every strict descent `a_i > a_j`
/// (i < j) is also a strict descent of `b`.
pub fn key_poset_leq(a: &WeakComposition, b: &WeakComposition) -> bool {
    let n = a.len().max(b.len());
    if (1..=n).any(|i| a.part(i) > b.part(i)) {
        return false;
    }
    for i in 1..=n {
        for j in i + 1..=n {
            if a.part(i) > a.part(j) && b.part(i) <= b.part(j) {
                return false;
            }
        }
    }
    true
}

fn check_index_set(set: &[usize]) -> Result<()> {
    if set.first() == Some(&0) || set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadIndexSet(set.to_vec()));
    }
    Ok(())
}

/// Move the part at `from[m]` to position `to[m]`, zeros elsewhere.
pub fn relabel(a: &WeakComposition, from: &[usize], to: &[usize]) -> Result<WeakComposition> {
    check_index_set(from)?;
    check_index_set(to)?;
    if from.len() != to.len() {
        return Err(Error::IndexSetSize(from.len(), to.len()));
    }
    if let Some(i) = a.support().into_iter().find(|i| !from.contains(i)) {
        return Err(Error::OutsideIndexSet(i));
    }
    let len = a.len().max(to.last().copied().unwrap_or(0));
    let mut parts = vec![0; len];
    for (&i, &j) in from.iter().zip(to) {
        parts[j - 1] = a.part(i);
    }
    Ok(WeakComposition::new(parts))
}

/// A permutation fixing all but finitely many positive integers, stored as
/// its shortest one-line word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let m = word.len();
        let mut seen = vec![false; m];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > m || seen[v - 1] {
                return Err(Error::NotAPermutation(word));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation::canonical(word))
    }

    fn canonical(mut word: Vec<u32>) -> Self {
        while word.last().is_some_and(|&v| v as usize == word.len()) {
            word.pop();
        }
        Permutation { word }
    }

    pub fn identity() -> Self {
        Permutation::default()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// The shortest one-line word.
    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// One-line word over `[max(m, len)]`.
    pub fn window(&self, m: usize) -> Vec<u32> {
        let m = m.max(self.word.len());
        (1..=m).map(|i| self.value(i)).collect()
    }

    /// Size of the minimal window.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `w(i)`, 1-based.
    pub fn value(&self, i: usize) -> u32 {
        self.word.get(i.wrapping_sub(1)).copied().unwrap_or(i as u32)
    }

    /// Coxeter length: number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.word;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// `w · t_{i,j}`: swap the values in positions `i` and `j`.
    pub fn swap_positions(&self, i: usize, j: usize) -> Permutation {
        let mut w = self.window(i.max(j));
        w.swap(i - 1, j - 1);
        Permutation::canonical(w)
    }

    pub fn longest(m: usize) -> Permutation {
        Permutation::canonical((1..=m as u32).rev().collect())
    }

    pub fn descents(&self) -> Vec<usize> {
        (1..self.word.len()).filter(|&i| self.value(i) > self.value(i + 1)).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.window(1);
        write!(f, "[")?;
        for (i, v) in w.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_list(s)?)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let word = Vec::<u32>::deserialize(d)?;
        Permutation::new(word).map_err(serde::de::Error::custom)
    }
}

/// `u · t_{i,j}` covers `u` iff `u(i) < u(j)` and no position strictly
/// between holds a value strictly between them.
pub(crate) fn is_cover_swap(u: &Permutation, i: usize, j: usize) -> bool {
    let (lo, hi) = (u.value(i), u.value(j));
    lo < hi && (i + 1..j).all(|p| !(lo < u.value(p) && u.value(p) < hi))
}

/// k-Bruhat covers of `u` using positions in `[universe]`.
pub fn k_bruhat_covers(u: &Permutation, k: usize, universe: usize) -> BTreeSet<Permutation> {
    let mut out = BTreeSet::new();
    for i in 1..=k.min(universe) {
        for j in k + 1..=universe {
            if is_cover_swap(u, i, j) {
                out.insert(u.swap_positions(i, j));
            }
        }
    }
    out
}

/// All k-Bruhat covers of `u` among permutations of any size.
///
/// Positions past `max(len(u), k) + 1` never yield a cover.
pub fn k_bruhat_covers_all(u: &Permutation, k: usize) -> BTreeSet<Permutation> {
    k_bruhat_covers(u, k, u.len().max(k) + 1)
}

/// The Grassmannian permutation with descent at `k` and shape `lam`.
pub fn grassmannian_perm(lam: &Partition, k: usize) -> Result<Permutation> {
    if lam.len() > k {
        return Err(Error::TooManyParts { parts: lam.parts().to_vec(), k });
    }
    let head: Vec<u32> = (1..=k).map(|i| lam.part(k + 1 - i) + i as u32).collect();
    let m = head.last().copied().unwrap_or(0) as usize;
    let mut word = head.clone();
    word.extend((1..=m as u32).filter(|v| !head.contains(v)));
    Permutation::new(word)
}
