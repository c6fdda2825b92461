//! Sparse multivariate polynomials with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::combinat::WeakComposition;
use crate::error::{Error, Result};

/// A polynomial in `x_1, …, x_n`.
///
/// Keys are stripped exponent vectors; zero coefficients are never stored.
/// Equality ignores the ambient variable count.
#[derive(Clone, Debug, Default)]
pub struct SparsePolynomial {
    terms: BTreeMap<WeakComposition, BigInt>,
    nvars: usize,
}

impl PartialEq for SparsePolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for SparsePolynomial {}

/// Graded lexicographic comparison: higher total degree first, then
/// lexicographically larger exponent first.
pub fn grlex_desc(a: &WeakComposition, b: &WeakComposition) -> Ordering {
    b.size().cmp(&a.size()).then_with(|| b.cmp(a))
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial { terms: BTreeMap::new(), nvars }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(WeakComposition::zeros(nvars), BigInt::one())
    }

    /// `coef · x^exp`, ambient size taken from the declared length of `exp`.
    pub fn monomial(exp: WeakComposition, coef: BigInt) -> Self {
        let nvars = exp.len();
        let mut p = SparsePolynomial::zero(nvars);
        p.add_term(exp, coef);
        p
    }

    /// The variable `x_i` (1-based).
    pub fn variable(i: usize) -> Self {
        let mut e = vec![0; i];
        e[i - 1] = 1;
        Self::monomial(WeakComposition::new(e), BigInt::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (WeakComposition, BigInt)>>(nvars: usize, terms: I) -> Self {
        let mut p = SparsePolynomial::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Same polynomial with ambient size at least `n`.
    pub fn with_nvars(mut self, n: usize) -> Self {
        self.nvars = self.nvars.max(n);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add `coef · x^exp` in place.
    pub fn add_term(&mut self, exp: WeakComposition, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        self.nvars = self.nvars.max(exp.support_len());
        let key = exp.trimmed();
        let entry = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coefficient(&self, exp: &WeakComposition) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn iter(&self) -> impl Iterator<Item = (&WeakComposition, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in canonical (graded lex, descending) order.
    pub fn terms(&self) -> Vec<(&WeakComposition, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex_desc(a.0, b.0));
        v
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(WeakComposition::size).max()
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| e.size() == d);
        SparsePolynomial::from_terms(self.nvars, terms.map(|(e, c)| (e.clone(), c.clone())))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c));
        SparsePolynomial::from_terms(self.nvars, terms)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(SparsePolynomial::one(self.nvars), |acc, _| &acc * self)
    }

    /// Set `x_j = 0` for every `j > k`.
    pub fn truncate_vars(&self, k: usize) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| e.support_len() <= k);
        SparsePolynomial::from_terms(k, terms.map(|(e, c)| (e.clone(), c.clone())))
    }

    /// Substitute `x_i ↦ x_{n+1-i}`.
    pub fn reverse_variables(&self, n: usize) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.pad_to(n).rev(), c.clone()));
        SparsePolynomial::from_terms(n, terms)
    }

    /// Rename `x_i ↦ x_{i+k}`.
    pub fn shift_variables(&self, k: usize) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.prepend_zeros(k), c.clone()));
        SparsePolynomial::from_terms(self.nvars + k, terms)
    }

    /// The divided difference `∂_i = (f − s_i f) / (x_i − x_{i+1})`.
    pub fn divided_difference(&self, i: usize) -> Self {
        let mut out = SparsePolynomial::zero(self.nvars.max(i + 1));
        for (e, c) in &self.terms {
            let mut parts = e.pad_to(i + 1).parts().to_vec();
            let (p, q) = (parts[i - 1], parts[i]);
            // (x^p y^q − x^q y^p)/(x − y) = sign · Σ x^{lo+t} y^{hi−1−t}
            let (lo, hi, sign) = match p.cmp(&q) {
                Ordering::Equal => continue,
                Ordering::Greater => (q, p, BigInt::one()),
                Ordering::Less => (p, q, -BigInt::one()),
            };
            for t in 0..hi - lo {
                parts[i - 1] = lo + t;
                parts[i] = hi - 1 - t;
                out.add_term(WeakComposition::new(parts.clone()), c * &sign);
            }
        }
        out
    }

    /// Sum of all coefficients.
    pub fn evaluate_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn to_json(&self) -> Value {
        let n = self.nvars;
        Value::Array(
            self.terms()
                .into_iter()
                .map(|(e, c)| json!({"exp": e.pad_to(n).parts(), "coef": bigint_json(c)}))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("polynomial must be an array".into()))?;
        let mut p = SparsePolynomial::zero(0);
        for t in arr {
            let exp: Vec<u32> =
                serde_json::from_value(t["exp"].clone()).map_err(|e| Error::Parse(format!("exp: {e}")))?;
            let coef = json_bigint(&t["coef"])?;
            let n = exp.len();
            p.add_term(WeakComposition::new(exp), coef);
            p.nvars = p.nvars.max(n);
        }
        Ok(p)
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

pub(crate) fn json_bigint(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            n.as_i64().map(BigInt::from).ok_or_else(|| Error::Parse(format!("coefficient {n} is not an integer")))
        }
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("bad coefficient {s:?}"))),
        _ => Err(Error::Parse("missing coefficient".into())),
    }
}

impl Add<&SparsePolynomial> for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        out.nvars = out.nvars.max(rhs.nvars);
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub<&SparsePolynomial> for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        out.nvars = out.nvars.max(rhs.nvars);
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul<&SparsePolynomial> for &SparsePolynomial {
    type Output = SparsePolynomial;

    // exponents add under multiplication
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero(self.nvars.max(rhs.nvars));
        for (e, c) in &self.terms {
            for (f, d) in &rhs.terms {
                let n = e.len().max(f.len());
                let parts = (1..=n).map(|i| e.part(i) + f.part(i)).collect();
                out.add_term(WeakComposition::new(parts), c * d);
            }
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn neg(self) -> SparsePolynomial {
        self.scale(&-BigInt::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<SparsePolynomial> for SparsePolynomial {
            type Output = SparsePolynomial;
            fn $m(self, rhs: SparsePolynomial) -> SparsePolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&SparsePolynomial> for SparsePolynomial {
            type Output = SparsePolynomial;
            fn $m(self, rhs: &SparsePolynomial) -> SparsePolynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for SparsePolynomial {
    fn sum<I: Iterator<Item = SparsePolynomial>>(iter: I) -> Self {
        iter.fold(SparsePolynomial::zero(0), |acc, p| acc + p)
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .parts()
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, p) })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Solve `p = Σ c_a · basis_a` for a family that is uni-triangular with
/// respect to lexicographic order on exponents: the lex-smallest monomial of
/// `basis_a` is `x^a`.
///
/// Repeatedly cancels the lex-smallest monomial of the remainder.
pub fn express_in_basis(
    p: &SparsePolynomial,
    basis: &BTreeMap<WeakComposition, SparsePolynomial>,
) -> Result<BTreeMap<WeakComposition, BigInt>> {
    let mut rem = p.clone();
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = rem.terms.iter().next().map(|(e, c)| (e.clone(), c.clone())) {
        let stuck = || Error::NotInSpan(lead.stripped().to_vec());
        let elem = basis.get(&lead).ok_or_else(stuck)?;
        match elem.terms.iter().next() {
            Some((e, d)) if *e == lead && (&c % d).is_zero() => {
                let q = &c / d;
                rem = &rem - &elem.scale(&q);
                out.insert(lead.clone(), q);
            }
            _ => return Err(stuck()),
        }
    }
    Ok(out)
}
