//! The flagged complete homogeneous basis, key polynomials, Demazure atoms,
//! and the counting coefficients relating them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::combinat::{compositions, Partition, WeakComposition};
use crate::error::{Error, Result};
use crate::fillings::{enumerate, Flavor};
use crate::poly::{bigint_json, express_in_basis, grlex_desc, SparsePolynomial};

fn check_ambient(a: &WeakComposition, n: usize) -> Result<()> {
    if a.support_len() > n {
        return Err(Error::AmbientTooSmall { n, len: a.support_len() });
    }
    Ok(())
}

/// `h_k(x_1, …, x_m)`.
pub fn h_complete(k: u32, m: usize) -> SparsePolynomial {
    if m == 0 {
        return if k == 0 { SparsePolynomial::one(0) } else { SparsePolynomial::zero(0) };
    }
    SparsePolynomial::from_terms(m, compositions(k, m).into_iter().map(|e| (e, BigInt::one())))
}

/// `ĥ_a = ∏_i h_{a_i}(x_1, …, x_i)`.
pub fn h_flagged(a: &WeakComposition, n: usize) -> Result<SparsePolynomial> {
    check_ambient(a, n)?;
    let mut p = SparsePolynomial::one(n);
    for i in 1..=a.len() {
        if a.part(i) > 0 {
            p = &p * &h_complete(a.part(i), i);
        }
    }
    Ok(p.with_nvars(n))
}

/// Sum of `x^{col(L)}` over lower-triangular natural matrices `L` whose row
/// sums are `a`.
pub fn h_flagged_matrix_oracle(a: &WeakComposition) -> SparsePolynomial {
    let n = a.len();
    let mut out = SparsePolynomial::zero(n);
    // row i of L is a weak composition of a_i into its first i entries
    fn go(a: &WeakComposition, i: usize, cols: &mut Vec<u32>, out: &mut SparsePolynomial) {
        if i > a.len() {
            out.add_term(WeakComposition::new(cols.clone()), BigInt::one());
            return;
        }
        for row in compositions(a.part(i), i) {
            for (c, &v) in row.parts().iter().enumerate() {
                cols[c] += v;
            }
            go(a, i + 1, cols, out);
            for (c, &v) in row.parts().iter().enumerate() {
                cols[c] -= v;
            }
        }
    }
    go(a, 1, &mut vec![0; n], &mut out);
    out
}

/// The symmetric `h_λ(x_1, …, x_n)`.
pub fn h_symmetric(lam: &Partition, n: usize) -> SparsePolynomial {
    lam.parts().iter().fold(SparsePolynomial::one(n), |p, &k| &p * &h_complete(k, n))
}

fn weight_sum(shape: &WeakComposition, n: usize, flavor: Flavor) -> Result<SparsePolynomial> {
    let fillings = enumerate(shape, n, flavor, None)?;
    Ok(SparsePolynomial::from_terms(n, fillings.into_iter().map(|t| (t.weight(n), BigInt::one()))))
}

/// Sum of `x^{wt(T)}` over SSKT of shape `a` with entries in `[n]`.
pub fn key_polynomial(a: &WeakComposition, n: usize) -> Result<SparsePolynomial> {
    check_ambient(a, n)?;
    weight_sum(a, n, Flavor::Sskt)
}

/// Sum of `x^{wt(T)}` over rSSAF of shape `a` with entries in `[n]`.
pub fn rssaf_polynomial(a: &WeakComposition, n: usize) -> Result<SparsePolynomial> {
    check_ambient(a, n)?;
    weight_sum(a, n, Flavor::Rssaf)
}

/// rSSAF of shape `rev(a)`, read in the reversed alphabet.
pub fn demazure_atom(a: &WeakComposition, n: usize) -> Result<SparsePolynomial> {
    check_ambient(a, n)?;
    let shape = a.pad_to(n).rev();
    Ok(weight_sum(&shape, n, Flavor::Rssaf)?.reverse_variables(n))
}

/// Classical Schur polynomial as the weight sum over SSYT.
pub fn schur_polynomial(lam: &Partition, n: usize) -> Result<SparsePolynomial> {
    weight_sum(&lam.to_composition(0), n, Flavor::Ssyt)
}

fn count(shape: &WeakComposition, n: usize, flavor: Flavor, weight: &WeakComposition) -> u64 {
    if shape.size() != weight.size() {
        return 0;
    }
    enumerate(shape, n, flavor, Some(weight)).map_or(0, |v| v.len() as u64)
}

/// Number of rSSAF with shape `a` and weight `b`.
pub fn ktilde(a: &WeakComposition, b: &WeakComposition) -> u64 {
    let n = a.len().max(b.len());
    count(a, n, Flavor::Rssaf, b)
}

/// Number of SSKT with shape `rev(a)` and weight `rev(b)`, reversing over
/// the longer declared length.
pub fn ktilde_upper(a: &WeakComposition, b: &WeakComposition) -> u64 {
    let n = a.len().max(b.len());
    count(&a.pad_to(n).rev(), n, Flavor::Sskt, &b.pad_to(n).rev())
}

/// Number of SSYT of shape `lam` and weight `b`.
pub fn kostka(lam: &Partition, b: &WeakComposition) -> u64 {
    let n = lam.len().max(b.len());
    count(&lam.to_composition(0), n, Flavor::Ssyt, b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Monomial,
    HFlagged,
    Key,
    Atom,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::HFlagged => "h",
            Basis::Key => "key",
            Basis::Atom => "atom",
        }
    }

    /// The basis element indexed by `a` in `n` variables.
    pub fn element(self, a: &WeakComposition, n: usize) -> Result<SparsePolynomial> {
        match self {
            Basis::Monomial => {
                check_ambient(a, n)?;
                Ok(SparsePolynomial::monomial(a.pad_to(n), BigInt::one()))
            }
            Basis::HFlagged => h_flagged(a, n),
            Basis::Key => key_polynomial(a, n),
            Basis::Atom => demazure_atom(a, n),
        }
    }

    /// All elements of degree `d` in `n` variables, keyed by index.
    pub fn elements(self, d: u32, n: usize) -> Result<BTreeMap<WeakComposition, SparsePolynomial>> {
        compositions(d, n).into_iter().map(|a| Ok((a.clone(), self.element(&a, n)?))).collect()
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "monomial" | "m" | "x" => Ok(Basis::Monomial),
            "h" | "hhat" | "h-flagged" => Ok(Basis::HFlagged),
            "key" => Ok(Basis::Key),
            "atom" => Ok(Basis::Atom),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

/// Coefficients of a polynomial in one of the composition-indexed bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    pub basis: Basis,
    pub terms: BTreeMap<WeakComposition, BigInt>,
}

impl BasisExpansion {
    pub fn new(basis: Basis) -> Self {
        BasisExpansion { basis, terms: BTreeMap::new() }
    }

    pub fn add(&mut self, index: WeakComposition, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        let key = index.trimmed();
        let e = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *e += coef;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coefficient(&self, index: &WeakComposition) -> BigInt {
        self.terms.get(index).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in canonical (graded lex, descending) order.
    pub fn sorted_terms(&self) -> Vec<(&WeakComposition, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex_desc(a.0, b.0));
        v
    }

    /// `Σ c_a · basis_a` in `n` variables.
    pub fn recombine(&self, n: usize) -> Result<SparsePolynomial> {
        let mut p = SparsePolynomial::zero(n);
        for (a, c) in &self.terms {
            p = &p + &self.basis.element(a, n)?.scale(c);
        }
        Ok(p)
    }

    pub fn to_json(&self, n: usize) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(a, c)| json!({"index": a.pad_to(n).parts(), "coef": bigint_json(c)}))
            .collect();
        json!({"basis": self.basis.tag(), "terms": terms})
    }
}

/// `ĥ_b = Σ_a K̃_{ab} key_a`.
pub fn expand_h_into_keys(b: &WeakComposition) -> BasisExpansion {
    let mut out = BasisExpansion::new(Basis::Key);
    let len = b.support_len();
    for a in compositions(b.size(), len) {
        out.add(a.clone(), BigInt::from(ktilde(&a, b)));
    }
    out
}

/// `ĥ_b = Σ_a K̃^{ab} atom_a` in `n` variables.
pub fn expand_h_into_atoms(b: &WeakComposition, n: usize) -> Result<BasisExpansion> {
    check_ambient(b, n)?;
    let b = b.pad_to(n);
    let mut out = BasisExpansion::new(Basis::Atom);
    for a in compositions(b.size(), n) {
        out.add(a.clone(), BigInt::from(ktilde_upper(&a, &b)));
    }
    Ok(out)
}

/// Expand a homogeneous polynomial of degree `d` in `n` variables by
/// triangular elimination.
pub fn expand_homogeneous(p: &SparsePolynomial, basis: Basis, d: u32, n: usize) -> Result<BasisExpansion> {
    let family = basis.elements(d, n)?;
    let coefs = express_in_basis(p, &family)?;
    let mut out = BasisExpansion::new(basis);
    for (a, c) in coefs {
        out.add(a, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc(p: &[u32]) -> WeakComposition {
        WeakComposition::from(p)
    }

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> SparsePolynomial {
        SparsePolynomial::from_terms(n, terms.iter().map(|(e, c)| (wc(e), BigInt::from(*c))))
    }

    #[test]
    fn h_flagged_examples() {
        assert_eq!(h_flagged(&wc(&[0, 0, 0]), 3).unwrap(), SparsePolynomial::one(3));
        let x2 = poly(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]);
        assert_eq!(h_flagged(&wc(&[0, 2]), 2).unwrap(), x2);
        assert_eq!(h_flagged(&wc(&[1, 1]), 2).unwrap(), poly(2, &[(&[2, 0], 1), (&[1, 1], 1)]));
        assert!(h_flagged(&wc(&[0, 1]), 1).is_err());
    }

    #[test]
    fn matrix_oracle_examples() {
        assert_eq!(h_flagged_matrix_oracle(&wc(&[1, 0])), poly(2, &[(&[1], 1)]));
        assert_eq!(h_flagged_matrix_oracle(&wc(&[0, 1])), poly(2, &[(&[1], 1), (&[0, 1], 1)]));
        assert_eq!(h_flagged_matrix_oracle(&wc(&[0, 2])).len(), 3);
    }

    #[test]
    fn key_and_atom_examples() {
        assert_eq!(key_polynomial(&wc(&[0, 0]), 2).unwrap(), SparsePolynomial::one(2));
        assert_eq!(key_polynomial(&wc(&[0, 1]), 2).unwrap(), poly(2, &[(&[1], 1), (&[0, 1], 1)]));
        assert_eq!(key_polynomial(&wc(&[2, 0]), 2).unwrap(), poly(2, &[(&[2], 1)]));
        assert_eq!(demazure_atom(&wc(&[0, 0]), 2).unwrap(), SparsePolynomial::one(2));
        assert_eq!(demazure_atom(&wc(&[1, 0]), 2).unwrap(), poly(2, &[(&[1], 1)]));
        assert_eq!(demazure_atom(&wc(&[0, 1]), 2).unwrap(), poly(2, &[(&[0, 1], 1)]));
    }

    #[test]
    fn ktilde_examples() {
        assert_eq!(ktilde(&wc(&[0, 2]), &wc(&[0, 2])), 1);
        assert_eq!(ktilde(&wc(&[1, 1]), &wc(&[1, 1])), 1);
        assert_eq!(ktilde(&wc(&[2, 0]), &wc(&[1, 1])), 1);
        assert_eq!(ktilde(&wc(&[0, 2]), &wc(&[1, 1])), 0);
        assert_eq!(ktilde_upper(&wc(&[1, 0]), &wc(&[1, 1])), 0);
        let e = expand_h_into_keys(&wc(&[1, 1]));
        assert_eq!(e.terms.len(), 2);
        assert_eq!(e.coefficient(&wc(&[2])), BigInt::one());
        let z = expand_h_into_keys(&wc(&[0, 0]));
        assert_eq!(z.coefficient(&wc(&[])), BigInt::one());
    }

    #[test]
    fn kostka_examples() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(kostka(&p(&[1]), &wc(&[1])), 1);
        assert_eq!(kostka(&p(&[2, 1]), &wc(&[1, 1, 1])), 2);
        assert_eq!(kostka(&p(&[2, 1]), &wc(&[3])), 0);
    }

    #[test]
    fn h11_in_h_basis() {
        let p = h_symmetric(&Partition::new(vec![1, 1]).unwrap(), 2);
        let e = expand_homogeneous(&p, Basis::HFlagged, 2, 2).unwrap();
        assert_eq!(e.coefficient(&wc(&[0, 2])), BigInt::from(1));
        assert_eq!(e.coefficient(&wc(&[1, 1])), BigInt::from(1));
        assert_eq!(e.coefficient(&wc(&[2, 0])), BigInt::from(-1));
        assert_eq!(e.terms.len(), 3);
    }

    #[test]
    fn x1x2_in_key_basis() {
        let p = poly(2, &[(&[1, 1], 1)]);
        let e = expand_homogeneous(&p, Basis::Key, 2, 2).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.coefficient(&wc(&[1, 1])), BigInt::one());
    }

    #[test]
    fn expansion_json() {
        let e = expand_h_into_keys(&wc(&[1, 1]));
        let v = e.to_json(2);
        assert_eq!(v["basis"], "key");
        assert_eq!(v["terms"][0]["index"], json!([2, 0]));
        assert_eq!(v["terms"][1]["index"], json!([1, 1]));
    }
}
