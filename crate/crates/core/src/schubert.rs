//! Pieri products in k-Bruhat order, Schubert expansions of `ĥ_b`, and a
//! divided-difference construction of Schubert polynomials to check them.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::combinat::{is_cover_swap, Permutation, WeakComposition};
use crate::error::{Error, Result};
use crate::poly::{bigint_json, json_bigint, SparsePolynomial};

/// Integer combination of Schubert polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchubertExpansion {
    terms: BTreeMap<Permutation, BigInt>,
}

impl SchubertExpansion {
    pub fn new() -> Self {
        SchubertExpansion::default()
    }

    /// `𝔖_w` alone.
    pub fn single(w: Permutation) -> Self {
        let mut e = SchubertExpansion::new();
        e.add(w, BigInt::one());
        e
    }

    pub fn add(&mut self, w: Permutation, coef: BigInt) {
        let entry = self.terms.entry(w.clone()).or_insert_with(BigInt::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, w: &Permutation) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| *c > BigInt::zero())
    }

    /// `Σ c_w 𝔖_w` with at least `n` variables.
    pub fn recombine(&self, oracle: &mut SchubertOracle, n: usize) -> SparsePolynomial {
        let mut p = SparsePolynomial::zero(n);
        for (w, c) in &self.terms {
            p = &p + &oracle.get(w).scale(c);
        }
        p.with_nvars(n)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> =
            self.terms.iter().map(|(w, c)| json!({"perm": w.window(1), "coef": bigint_json(c)})).collect();
        Value::Array(terms)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let items = v.as_array().ok_or_else(|| Error::Parse("expected an array of terms".into()))?;
        let mut e = SchubertExpansion::new();
        for item in items {
            let w: Permutation =
                serde_json::from_value(item["perm"].clone()).map_err(|err| Error::Parse(err.to_string()))?;
            e.add(w, json_bigint(&item["coef"])?);
        }
        Ok(e)
    }
}

/// Targets of saturated k-Bruhat chains of length `m` from `u` whose
/// transpositions `t_{i,j}` have distinct `j`.
pub fn horizontal_strip_targets(u: &Permutation, k: usize, m: u32) -> BTreeSet<Permutation> {
    let mut out = BTreeSet::new();
    let mut seen = BTreeSet::new();
    strip_search(u.clone(), k, m, &mut Vec::new(), &mut seen, &mut out);
    out
}

fn strip_search(
    w: Permutation,
    k: usize,
    left: u32,
    used: &mut Vec<usize>,
    seen: &mut BTreeSet<(Permutation, Vec<usize>)>,
    out: &mut BTreeSet<Permutation>,
) {
    if left == 0 {
        out.insert(w);
        return;
    }
    let mut key = used.clone();
    key.sort_unstable();
    if !seen.insert((w.clone(), key)) {
        return;
    }
    // a cover never uses a position past max(len, k) + 1
    let universe = w.len().max(k) + 1;
    for j in k + 1..=universe {
        if used.contains(&j) {
            continue;
        }
        for i in 1..=k {
            if is_cover_swap(&w, i, j) {
                used.push(j);
                strip_search(w.swap_positions(i, j), k, left - 1, used, seen, out);
                used.pop();
            }
        }
    }
}

/// `e · 𝔖_{v((m),k)}`, each target counted once per source term.
pub fn pieri_multiply(e: &SchubertExpansion, m: u32, k: usize) -> SchubertExpansion {
    if m == 0 {
        return e.clone();
    }
    let mut out = SchubertExpansion::new();
    for (u, c) in e.terms() {
        for w in horizontal_strip_targets(u, k, m) {
            out.add(w, c.clone());
        }
    }
    out
}

/// `ĥ_b = Σ_w C_{w,b} 𝔖_w`.
pub fn h_schubert_expansion(b: &WeakComposition) -> SchubertExpansion {
    (1..=b.len()).fold(SchubertExpansion::single(Permutation::identity()), |e, k| pieri_multiply(&e, b.part(k), k))
}

/// Schubert polynomials by divided differences from the staircase monomial
/// of the longest element, memoized.
#[derive(Debug, Default)]
pub struct SchubertOracle {
    memo: HashMap<(usize, Permutation), SparsePolynomial>,
}

impl SchubertOracle {
    pub fn new() -> Self {
        SchubertOracle::default()
    }

    pub fn get(&mut self, w: &Permutation) -> SparsePolynomial {
        let m = w.len().max(1);
        self.in_window(w, m)
    }

    fn in_window(&mut self, w: &Permutation, m: usize) -> SparsePolynomial {
        if let Some(p) = self.memo.get(&(m, w.clone())) {
            return p.clone();
        }
        let word = w.window(m);
        let p = match (1..m).find(|&i| word[i - 1] < word[i]) {
            None => {
                let exp: Vec<u32> = (1..m).map(|i| (m - i) as u32).collect();
                SparsePolynomial::monomial(WeakComposition::new(exp), BigInt::one())
            }
            Some(i) => self.in_window(&w.swap_positions(i, i + 1), m).divided_difference(i),
        };
        self.memo.insert((m, w.clone()), p.clone());
        p
    }
}

/// The Schubert polynomial of `w` with at least `n` variables.
pub fn schubert_oracle(w: &Permutation, n: usize) -> SparsePolynomial {
    SchubertOracle::new().get(w).with_nvars(n)
}
