//! Exhaustive and regression suites with pass/fail reports.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::bases::{
    expand_h_into_atoms, expand_h_into_keys, h_flagged, h_symmetric, key_polynomial, kostka, ktilde, ktilde_upper,
    rssaf_polynomial, Basis,
};
use crate::combinat::{compositions, compositions_up_to, dominance_leq, key_poset_leq, Partition, WeakComposition};
use crate::diagram::{key_diagram, Diagram};
use crate::error::{Error, Result};
use crate::fillings::{is_member, statistics, Flavor};
use crate::frsk::{
    flagged_insert_traced, frsk, frsk_biword, frsk_inverse, rho, rho_inverse, rsk, rsk_biword, rsk_insert_traced, tau,
    tau_dagger, LowerTriangularMatrix, NMatrix,
};
use crate::kohnert::{build_da, is_southwest, kohnert_closure, kohnert_moves, kohnert_polynomial, phi, phi_inverse};
use crate::poly::{express_in_basis, SparsePolynomial};
use crate::reference as refdata;
use crate::schubert::{h_schubert_expansion, pieri_multiply, SchubertOracle};
use crate::snakes::{
    complement_shape, enumerate_special_snake_tabloids, expand_key_into_h, f_set, in_gset, inverse_ktilde_column, iota,
    is_special_snake, rim_hook_check, s_attacks, special_rim_hook_tabloids, special_snakes, weak_components, Snake,
    SnakeTabloid,
};

pub const SUITES: &[&str] = &[
    "hbasis",
    "stable",
    "kohnert",
    "key-atom",
    "kostka",
    "cauchy",
    "frsk",
    "snakes",
    "cancelfree",
    "involution",
    "schubert",
    "paper-figures",
];

/// Size limits: ambient variable count and total degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub n: usize,
    pub deg: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { n: 3, deg: 4 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub suite: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Deterministic fields only; the wall time is left out.
    pub fn to_json(&self) -> Value {
        let failures: Vec<Value> =
            self.failures.iter().map(|f| json!({"case": f.case, "expected": f.expected, "got": f.got})).collect();
        json!({
            "suite": self.suite,
            "passed": self.passed(),
            "instances": self.instances,
            "failures": failures,
        })
    }

    pub fn summary(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        format!("{status} {}: {} instances, {} failures", self.suite, self.instances, self.failures.len())
    }
}

#[derive(Default)]
struct Recorder {
    instances: usize,
    failures: Vec<Failure>,
}

impl Recorder {
    fn eq<T: PartialEq + Debug>(&mut self, case: impl FnOnce() -> String, expected: &T, got: &T) -> bool {
        self.instances += 1;
        let ok = expected == got;
        if !ok {
            self.failures.push(Failure { case: case(), expected: format!("{expected:?}"), got: format!("{got:?}") });
        }
        ok
    }

    fn truth(&mut self, case: impl FnOnce() -> String, got: bool) -> bool {
        self.eq(case, &true, &got)
    }

    fn ok<T>(&mut self, case: impl FnOnce() -> String, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.instances += 1;
                self.failures.push(Failure { case: case(), expected: "success".into(), got: e.to_string() });
                None
            }
        }
    }
}

pub fn run_suite(name: &str, bounds: Bounds) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut rec = Recorder::default();
    let Bounds { n, deg } = bounds;
    match name {
        "hbasis" => hbasis(&mut rec, n, deg),
        "stable" => stable(&mut rec, n, deg),
        "kohnert" => kohnert(&mut rec, n, deg),
        "key-atom" => key_atom(&mut rec, n, deg),
        "kostka" => kostka_bridges(&mut rec, n, deg),
        "cauchy" => cauchy(&mut rec, n, deg),
        "frsk" => frsk_suite(&mut rec, n, deg),
        "snakes" => snakes_suite(&mut rec, n, deg),
        "cancelfree" => cancelfree(&mut rec, deg),
        "involution" => involution(&mut rec, n, deg),
        "schubert" => schubert(&mut rec, n, deg),
        "paper-figures" => figures(&mut rec),
        other => return Err(Error::UnknownSuite(other.to_string())),
    }
    Ok(VerifyReport {
        suite: name.to_string(),
        instances: rec.instances,
        failures: rec.failures,
        elapsed: start.elapsed(),
    })
}

fn hbasis(rec: &mut Recorder, n: usize, deg: u32) {
    for d in 0..=deg {
        let family: BTreeMap<_, _> = compositions(d, n)
            .into_iter()
            .map(|a| {
                let p = h_flagged(&a, n).expect("length n");
                (a, p)
            })
            .collect();
        for (a, p) in &family {
            rec.eq(|| format!("diagonal of {a}"), &BigInt::one(), &p.coefficient(a));
            for (b, _) in p.iter() {
                rec.truth(|| format!("ĥ_{a} has x^{b} outside the dominance upper set"), dominance_leq(a, b));
            }
        }
        for m in compositions(d, n) {
            let mono = SparsePolynomial::monomial(m.clone(), BigInt::one());
            if let Some(coefs) = rec.ok(|| format!("x^{m} in the ĥ basis"), express_in_basis(&mono, &family)) {
                let back = coefs.iter().fold(SparsePolynomial::zero(n), |acc, (a, c)| &acc + &family[a].scale(c));
                rec.eq(|| format!("recombine x^{m}"), &mono, &back);
            }
        }
    }
}

fn stable(rec: &mut Recorder, n: usize, deg: u32) {
    for nn in 1..=n {
        for a in compositions_up_to(deg, n) {
            if a.nonzero_count() > 2 {
                continue;
            }
            let shifted = a.prepend_zeros(nn);
            let Some(p) = rec.ok(|| format!("ĥ of {shifted}"), h_flagged(&shifted, shifted.len())) else {
                continue;
            };
            rec.eq(|| format!("a = {a}, n = {nn}"), &h_symmetric(&a.sort(), nn), &p.truncate_vars(nn));
        }
    }
}

fn kohnert(rec: &mut Recorder, n: usize, deg: u32) {
    for nn in 1..=n {
        let lower = LowerTriangularMatrix::all(nn, deg);
        for a in compositions_up_to(deg, nn) {
            let Some(da) = rec.ok(|| format!("D_{a}"), build_da(&a, nn)) else {
                continue;
            };
            rec.truth(|| format!("D_{a} southwest"), is_southwest(&da));
            let closure = kohnert_closure(&da);
            let expect = h_flagged(&a, nn).expect("length nn");
            rec.eq(|| format!("Kohnert polynomial of D_{a}, n = {nn}"), &expect, &kohnert_polynomial(&da));
            let mut images = BTreeSet::new();
            for t in &closure {
                let Some(l) = rec.ok(|| format!("phi on closure of D_{a}"), phi(t, &a)) else {
                    continue;
                };
                rec.eq(|| format!("column sums vs weight, a = {a}"), &t.weight(nn), &l.as_matrix().col_sums());
                rec.eq(|| format!("row sums, a = {a}"), &a, &l.as_matrix().row_sums());
                if let Some(back) = rec.ok(|| format!("phi inverse, a = {a}"), phi_inverse(&l, &a)) {
                    rec.eq(|| format!("phi round trip, a = {a}"), t, &back);
                }
                images.insert(l.as_matrix().resized(nn));
            }
            let targets: BTreeSet<NMatrix> =
                lower.iter().map(|l| l.as_matrix().clone()).filter(|m| m.row_sums() == a).collect();
            rec.eq(|| format!("phi image for a = {a}"), &targets, &images);
        }
    }
}

fn key_atom(rec: &mut Recorder, n: usize, deg: u32) {
    for nn in 1..=n {
        for b in compositions_up_to(deg, nn) {
            let h = h_flagged(&b, nn).expect("length nn");
            let keys = expand_h_into_keys(&b);
            rec.truth(
                || format!("key coefficients of ĥ_{b} nonnegative"),
                keys.terms.values().all(|c| c.sign() != num_bigint::Sign::Minus),
            );
            if let Some(p) = rec.ok(|| format!("recombine keys of {b}"), keys.recombine(nn)) {
                rec.eq(|| format!("ĥ_{b} via keys, n = {nn}"), &h, &p);
            }
            let Some(atoms) = rec.ok(|| format!("atom expansion of {b}"), expand_h_into_atoms(&b, nn)) else {
                continue;
            };
            rec.truth(
                || format!("atom coefficients of ĥ_{b} nonnegative"),
                atoms.terms.values().all(|c| c.sign() != num_bigint::Sign::Minus),
            );
            if let Some(p) = rec.ok(|| format!("recombine atoms of {b}"), atoms.recombine(nn)) {
                rec.eq(|| format!("ĥ_{b} via atoms, n = {nn}"), &h, &p);
            }
        }
    }
}

fn kostka_bridges(rec: &mut Recorder, n: usize, deg: u32) {
    for nn in 1..=n {
        for size in 0..=deg {
            let comps = compositions(size, nn);
            for lam in Partition::all(size) {
                if lam.len() > nn {
                    continue;
                }
                for b in &comps {
                    let k = kostka(&lam, b);
                    let summed: u64 = comps.iter().filter(|a| a.sort() == lam).map(|a| ktilde(a, b)).sum();
                    rec.eq(|| format!("Σ K̃_(a,{b}) over sort(a) = {lam}"), &k, &summed);
                    let upper = ktilde_upper(&lam.to_composition(nn), b);
                    rec.eq(|| format!("K̃^({lam},{b})"), &k, &upper);
                }
            }
        }
    }
}

fn joined(x: &WeakComposition, y: &WeakComposition, n: usize) -> WeakComposition {
    let mut parts = x.pad_to(n).parts().to_vec();
    parts.extend_from_slice(y.pad_to(n).parts());
    WeakComposition::new(parts)
}

fn cauchy(rec: &mut Recorder, n: usize, deg: u32) {
    let mut lhs: Vec<SparsePolynomial> = vec![SparsePolynomial::zero(2 * n); deg as usize + 1];
    for l in LowerTriangularMatrix::all(n, deg) {
        let m = l.as_matrix();
        lhs[m.total() as usize].add_term(joined(&m.row_sums(), &m.col_sums(), n), BigInt::one());
    }
    for d in 0..=deg {
        let mut rhs = SparsePolynomial::zero(2 * n);
        for a in compositions(d, n) {
            let x = rssaf_polynomial(&a, n).expect("length n");
            let y = key_polynomial(&a, n).expect("length n").shift_variables(n);
            rhs = &rhs + &(&x * &y);
        }
        rec.eq(|| format!("degree {d}"), &lhs[d as usize], &rhs);
    }
}

fn frsk_suite(rec: &mut Recorder, n: usize, deg: u32) {
    for l in LowerTriangularMatrix::all(n, deg) {
        let m = l.as_matrix();
        let pair = frsk(&l);
        let (s, t) = (&pair.insertion, &pair.recording);
        rec.truth(|| format!("S is an SSKT for {m}"), is_member(s, Flavor::Sskt, n).unwrap_or(false));
        rec.truth(|| format!("T is a reverse SSAF for {m}"), is_member(t, Flavor::Rssaf, n).unwrap_or(false));
        rec.eq(|| format!("shapes for {m}"), &s.shape(), &t.shape());
        rec.eq(|| format!("wt(S) for {m}"), &m.col_sums().pad_to(n), &s.weight(n));
        rec.eq(|| format!("wt(T) for {m}"), &m.row_sums().pad_to(n), &t.weight(n));
        let classical = rsk(m);
        rec.eq(|| format!("τ(S) for {m}"), &classical.insertion, &tau(s));
        rec.eq(|| format!("ρ(T) for {m}"), &classical.recording, &rho(t));
        if let Some(back) = rec.ok(|| format!("inverse for {m}"), frsk_inverse(&pair, n)) {
            rec.eq(|| format!("round trip for {m}"), m, &back.as_matrix().resized(n));
        }
        if let Some(s2) = rec.ok(|| format!("τ† for {m}"), tau_dagger(&tau(s), &s.shape())) {
            rec.eq(|| format!("τ† ∘ τ for {m}"), s, &s2);
        }
        if let Some(t2) = rec.ok(|| format!("ρ⁻¹ for {m}"), rho_inverse(&rho(t), n)) {
            rec.eq(|| format!("ρ⁻¹ ∘ ρ for {m}"), t, &t2);
        }
    }
    let w = refdata::biword13_corrected();
    if let Some(p) = rec.ok(|| "flagged RSK of the 13-letter biword".into(), frsk_biword(&w)) {
        rec.eq(|| "flagged pair of the 13-letter biword".into(), &refdata::biword13_flagged(), &p);
    }
    rec.eq(|| "classical pair of the 13-letter biword".into(), &refdata::biword13_classical(), &rsk_biword(&w));
}

fn snakes_suite(rec: &mut Recorder, n: usize, deg: u32) {
    for nn in 1..=n {
        for b in compositions_up_to(deg, nn) {
            let e = expand_key_into_h(&b);
            if let Some(p) = rec.ok(|| format!("recombine {b}"), e.recombine(nn)) {
                rec.eq(|| format!("key_{b} via ĥ, n = {nn}"), &key_polynomial(&b, nn).expect("length nn"), &p);
            }
        }
    }
    for k in 0..=deg {
        let comps = compositions(k, n);
        let kt: BTreeMap<(usize, usize), i64> = comps
            .iter()
            .enumerate()
            .flat_map(|(i, a)| comps.iter().enumerate().map(move |(j, b)| ((i, j), ktilde(a, b) as i64)))
            .collect();
        let inv: Vec<BTreeMap<WeakComposition, i64>> = comps.iter().map(inverse_ktilde_column).collect();
        for (i, a) in comps.iter().enumerate() {
            for (j, c) in comps.iter().enumerate() {
                let sum: i64 = comps
                    .iter()
                    .enumerate()
                    .map(|(m, b)| kt[&(i, m)] * inv[j].get(&b.trimmed()).copied().unwrap_or(0))
                    .sum();
                rec.eq(|| format!("[K̃·K̃⁻¹] at ({a}, {c})"), &i64::from(i == j), &sum);
            }
        }
    }
}

fn cancelfree(rec: &mut Recorder, deg: u32) {
    for size in 0..=deg {
        for mu in Partition::all(size) {
            let b = mu.to_composition(mu.len()).rev();
            let mut per_weight: BTreeMap<WeakComposition, Vec<i64>> = BTreeMap::new();
            for t in enumerate_special_snake_tabloids(&b) {
                per_weight.entry(t.weight()).or_default().push(t.sign());
            }
            let worst = per_weight.values().map(Vec::len).max().unwrap_or(0);
            rec.truth(|| format!("at most one tabloid per weight for shape {b}"), worst <= 1);
            let mut by_sort: BTreeMap<Partition, i64> = BTreeMap::new();
            for (a, signs) in &per_weight {
                *by_sort.entry(a.sort()).or_insert(0) += signs.iter().sum::<i64>();
            }
            by_sort.retain(|_, v| *v != 0);
            rec.eq(|| format!("rim hook tabloids of {mu}"), &special_rim_hook_tabloids(&mu), &by_sort);
        }
    }
    sorted_alike(rec);
}

fn sorted_alike(rec: &mut Recorder) {
    let (left, right) = refdata::sorted_alike_labels();
    let tabloids = (SnakeTabloid::from_labels(&left, 4), SnakeTabloid::from_labels(&right, 4));
    if let (Some(l), Some(r)) = (
        rec.ok(|| "first sorted-alike tabloid".into(), tabloids.0),
        rec.ok(|| "second sorted-alike tabloid".into(), tabloids.1),
    ) {
        rec.eq(|| "sorted-alike weights sort equal".into(), &l.weight().sort(), &r.weight().sort());
        rec.truth(|| "sorted-alike weights differ".into(), l.weight() != r.weight());
        rec.eq(|| "sorted-alike signs".into(), &-l.sign(), &r.sign());
        rec.eq(
            || "sorted-alike weights".into(),
            &(WeakComposition::from(&[1, 3, 0, 2][..]), WeakComposition::from(&[2, 0, 3, 1][..])),
            &(l.weight(), r.weight()),
        );
    }
}

fn involution(rec: &mut Recorder, n: usize, deg: u32) {
    for nn in 1..=n {
        for b in compositions_up_to(deg, nn) {
            if b.part(1) == 0 {
                continue;
            }
            let Some(f) = rec.ok(|| format!("F for {b}"), f_set(&b, nn)) else {
                continue;
            };
            let members: BTreeSet<_> = f.iter().cloned().collect();
            for (s, t) in &f {
                let case = || format!("b = {b}, S = {:?}, T = {:?}", s.cells(), t.rows());
                let Some((s2, t2)) = rec.ok(case, iota(s, t, nn)) else {
                    continue;
                };
                rec.eq(case, t, &t2);
                rec.truth(case, members.contains(&(s2.clone(), t2.clone())));
                rec.eq(case, &-s.sign(), &s2.sign());
                let a1: BTreeSet<_> = s_attacks(s, t).into_iter().collect();
                let a2: BTreeSet<_> = s_attacks(&s2, t).into_iter().collect();
                rec.eq(case, &a1, &a2);
                if let Some((s3, _)) = rec.ok(case, iota(&s2, &t2, nn)) {
                    rec.eq(case, s, &s3);
                }
            }
            let mut signed = SparsePolynomial::zero(nn);
            for s in special_snakes(&b) {
                if let Some(g) = rec.ok(|| format!("G(S) for {b}"), crate::snakes::gset_enumerate(&s, nn)) {
                    for t in g {
                        signed.add_term(t.weight(nn), BigInt::from(s.sign()));
                    }
                }
            }
            rec.eq(|| format!("signed sum for {b}, n = {nn}"), &key_polynomial(&b, nn).expect("length nn"), &signed);
        }
    }
}

fn schubert(rec: &mut Recorder, n: usize, deg: u32) {
    let mut oracle = SchubertOracle::new();
    for nn in 1..=n {
        for b in compositions_up_to(deg, nn) {
            let e = h_schubert_expansion(&b);
            rec.truth(|| format!("C_(w,{b}) ≥ 0"), e.is_nonnegative());
            rec.eq(
                || format!("ĥ_{b} via Schubert, n = {nn}"),
                &h_flagged(&b, nn).expect("length nn"),
                &e.recombine(&mut oracle, nn),
            );
        }
    }
    let comps = compositions_up_to(deg, n);
    for a in &comps {
        for b in &comps {
            if a.size() + b.size() > deg {
                continue;
            }
            let e = (1..=n).fold(h_schubert_expansion(a), |e, k| pieri_multiply(&e, b.part(k), k));
            rec.truth(|| format!("ĥ_{a}·ĥ_{b} Schubert positive"), e.is_nonnegative());
            let prod = &h_flagged(a, n).expect("length n") * &h_flagged(b, n).expect("length n");
            rec.eq(|| format!("ĥ_{a}·ĥ_{b}"), &prod, &e.recombine(&mut oracle, n));
        }
    }
}

fn wc(p: &[u32]) -> WeakComposition {
    WeakComposition::from(p)
}

fn expansion_terms(terms: &BTreeMap<WeakComposition, BigInt>, n: usize) -> Vec<(Vec<u32>, i64)> {
    terms.iter().map(|(a, c)| (a.pad_to(n).parts().to_vec(), i64::try_from(c).unwrap_or(i64::MAX))).collect()
}

fn figures(rec: &mut Recorder) {
    let h11_identity = vec![(vec![0, 2], 1), (vec![1, 1], 1), (vec![2, 0], -1)];

    // key poset comparisons
    for (a, b, expect) in refdata::key_poset_cases() {
        rec.eq(|| format!("key poset {a} ≤ {b}"), &expect, &key_poset_leq(&a, &b));
    }

    // h_{11}(x1,x2) in the ĥ basis
    let h11 = h_symmetric(&Partition::new(vec![1, 1]).expect("partition"), 2);
    if let Ok(family) = Basis::HFlagged.elements(2, 2) {
        if let Some(c) = rec.ok(|| "h_11 in the ĥ basis".into(), express_in_basis(&h11, &family)) {
            rec.eq(|| "h_11 = ĥ_02 + ĥ_11 − ĥ_20".into(), &h11_identity, &expansion_terms(&c, 2));
        }
        // ĥ_{(0,1)}²
        let h01 = h_flagged(&wc(&[0, 1]), 2).expect("length 2");
        if let Some(c) = rec.ok(|| "ĥ_01² in the ĥ basis".into(), express_in_basis(&(&h01 * &h01), &family)) {
            rec.eq(|| "ĥ_01² = ĥ_02 + ĥ_11 − ĥ_20".into(), &h11_identity, &expansion_terms(&c, 2));
        }
    }

    // key diagram of the skyline shape and the two fillings
    let shape = refdata::skyline_shape();
    rec.eq(|| "cells of D(1,0,3,6,1,0,2)".into(), &13, &key_diagram(&shape).len());
    let flagged = refdata::biword13_flagged();
    let classical = refdata::biword13_classical();
    let st = statistics(&flagged.insertion, 7);
    rec.eq(|| "SSKT statistics (maj, coinv, attacks)".into(), &(0, 0, 0), &(st.maj, st.coinv, st.attacking_violations));
    let st = statistics(&flagged.recording, 7);
    rec.eq(
        || "reverse SSAF statistics (comaj, inv, attacks)".into(),
        &(0, 0, 0),
        &(st.comaj, st.inv, st.attacking_violations),
    );
    rec.eq(|| "SSKT membership".into(), &Ok(true), &is_member(&flagged.insertion, Flavor::Sskt, 7));
    rec.eq(|| "reverse SSAF membership".into(), &Ok(true), &is_member(&flagged.recording, Flavor::Rssaf, 7));
    rec.eq(|| "shape of the flagged pair".into(), &shape, &flagged.insertion.shape());
    rec.eq(|| "reverse SSYT membership".into(), &Ok(true), &is_member(&classical.insertion, Flavor::Rssyt, 7));
    rec.eq(|| "SSYT membership".into(), &Ok(true), &is_member(&classical.recording, Flavor::Ssyt, 7));

    // the 13-letter biword
    let w = refdata::biword13();
    let m = w.to_matrix(7);
    let mut expect = NMatrix::zero(7);
    for (i, j) in w.pairs() {
        expect.set(*i as usize, *j as usize, expect.get(*i as usize, *j as usize) + 1);
    }
    rec.eq(|| "biword matrix".into(), &expect, &m);
    rec.eq(|| "biword matrix entries".into(), &13, &m.total());
    let printed = rsk_biword(&w);
    rec.eq(|| "weight of RSK of the printed biword".into(), &m.col_sums().pad_to(7), &printed.insertion.weight(7));
    let fixed = refdata::biword13_corrected();
    rec.eq(|| "classical RSK of the corrected biword".into(), &classical, &rsk_biword(&fixed));
    if let Some(p) = rec.ok(|| "flagged RSK of the corrected biword".into(), frsk_biword(&fixed)) {
        rec.eq(|| "flagged RSK of the corrected biword".into(), &flagged, &p);
    }

    // last insertions
    let (after, trace) = rsk_insert_traced(&refdata::classical_before(), 3);
    rec.eq(|| "classical insertion of 3".into(), &classical.insertion, &after);
    rec.eq(|| "classical bump chain".into(), &vec![3, 2, 1], &trace.bumped);
    if let Some((after, trace)) =
        rec.ok(|| "flagged insertion of 3".into(), flagged_insert_traced(&refdata::flagged_before(), 3, 7))
    {
        rec.eq(|| "flagged insertion of 3".into(), &flagged.insertion, &after);
        rec.eq(|| "flagged bump chain".into(), &vec![3, 2, 1], &trace.bumped);
        rec.eq(|| "flagged bump columns".into(), &vec![5, 3, 2], &trace.columns);
    }
    let (column, column_after) = refdata::one_step_column();
    if let Some((after, trace)) = rec.ok(|| "one-step insertion".into(), flagged_insert_traced(&column, 3, 3)) {
        rec.eq(|| "one-step insertion result".into(), &column_after, &after);
        rec.eq(|| "one-step insertion placements".into(), &1, &trace.placements);
    }

    // τ, τ†, ρ, ρ⁻¹
    rec.eq(|| "τ".into(), &classical.insertion, &tau(&flagged.insertion));
    rec.eq(|| "τ†".into(), &Ok(flagged.insertion.clone()), &tau_dagger(&classical.insertion, &shape));
    rec.eq(|| "ρ".into(), &classical.recording, &rho(&flagged.recording));
    rec.eq(|| "ρ⁻¹".into(), &Ok(flagged.recording.clone()), &rho_inverse(&classical.recording, 7));

    // Kohnert moves and D_a
    let children: BTreeSet<Diagram> = refdata::kohnert_children().into_iter().collect();
    rec.eq(|| "Kohnert moves of the sample diagram".into(), &children, &kohnert_moves(&refdata::kohnert_top()));
    rec.eq(|| "D_(1,0,3,6,1,0,2)".into(), &Ok(refdata::skyline_da()), &build_da(&shape, 7));
    let (sw, not_sw) = refdata::southwest_pair();
    rec.eq(|| "southwest diagrams".into(), &(true, false), &(is_southwest(&sw), is_southwest(&not_sw)));

    // snakes and rim hooks
    let host = refdata::snake_host();
    let snake = refdata::snake_cells();
    rec.truth(|| "sample snake is special".into(), is_special_snake(&snake, &host));
    rec.eq(
        || "complement of the sample snake".into(),
        &Some(refdata::snake_complement()),
        &complement_shape(&snake, &host),
    );
    rec.truth(|| "sample rim hook".into(), rim_hook_check(&refdata::rim_hook_cells(), &refdata::rim_hook_partition()));
    let comps = refdata::component_cells();
    let union = comps.iter().fold(Diagram::empty(), |acc, c| acc.union(c));
    let mut sorted = comps.clone();
    sorted.sort();
    rec.eq(|| "weakly connected components".into(), &sorted, &weak_components(&union));

    // tabloids
    let all = enumerate_special_snake_tabloids(&host);
    for (i, (labels, weight, sign)) in refdata::tabloid_labels().into_iter().enumerate() {
        let Some(t) = rec.ok(|| format!("sample tabloid {}", i + 1), SnakeTabloid::from_labels(&labels, 7)) else {
            continue;
        };
        rec.eq(|| format!("sample tabloid {} weight and sign", i + 1), &(weight, sign), &(t.weight(), t.sign()));
        rec.truth(|| format!("sample tabloid {} enumerated", i + 1), all.contains(&t));
    }
    let (left, right) = refdata::cancelling_labels();
    let b243 = wc(&[2, 4, 3]);
    if let (Some(l), Some(r)) = (
        rec.ok(|| "first cancelling tabloid".into(), SnakeTabloid::from_labels(&left, 3)),
        rec.ok(|| "second cancelling tabloid".into(), SnakeTabloid::from_labels(&right, 3)),
    ) {
        rec.eq(|| "cancelling weights".into(), &(wc(&[5, 4, 0]), wc(&[5, 4, 0])), &(l.weight(), r.weight()));
        rec.eq(|| "cancelling signs".into(), &(-1, 1), &(l.sign(), r.sign()));
        let ts = enumerate_special_snake_tabloids(&b243);
        rec.truth(|| "cancelling pair enumerated".into(), ts.contains(&l) && ts.contains(&r));
    }
    sorted_alike(rec);

    // 𝒢(S) member and the involution
    let (cells, t) = refdata::gset_member();
    if let Some(s) = rec.ok(|| "snake of the 𝒢(S) sample".into(), Snake::new(cells, host.clone())) {
        rec.truth(|| "sample filling lies in 𝒢(S)".into(), in_gset(&s, &t, 7));
    }
    let (s_cells, s2_cells, t) = refdata::involution_pair();
    let pair = (Snake::new(s_cells, host.clone()), Snake::new(s2_cells, host.clone()));
    if let (Some(s), Some(s2)) =
        (rec.ok(|| "left involution snake".into(), pair.0), rec.ok(|| "right involution snake".into(), pair.1))
    {
        rec.truth(|| "left configuration has S-attacks".into(), !s_attacks(&s, &t).is_empty());
        rec.eq(|| "ι left to right".into(), &Ok((s2.clone(), t.clone())), &iota(&s, &t, 7));
        rec.eq(|| "ι right to left".into(), &Ok((s.clone(), t.clone())), &iota(&s2, &t, 7));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("nope", Bounds::default()), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn figures_pass() {
        let r = run_suite("paper-figures", Bounds::default()).unwrap();
        assert!(r.passed(), "{:#?}", r.failures);
    }
}
