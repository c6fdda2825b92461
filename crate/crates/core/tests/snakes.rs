use std::collections::{BTreeMap, BTreeSet};

use hkey_core::bases::{h_flagged, key_polynomial, kostka, ktilde};
use hkey_core::combinat::{compositions, compositions_up_to, relabel, Partition, WeakComposition};
use hkey_core::diagram::{key_diagram, Cell, Diagram};
use hkey_core::fillings::{is_member, Filling, Flavor};
use hkey_core::snakes::*;
use hkey_core::SparsePolynomial;
use num_bigint::BigInt;

fn wc(p: &[u32]) -> WeakComposition {
    WeakComposition::from(p)
}

/// Every subset of `D(b)` filtered by the definition.
fn brute_special_snakes(b: &WeakComposition) -> BTreeSet<Diagram> {
    let cells: Vec<Cell> = key_diagram(b).iter().copied().collect();
    (0u32..1 << cells.len())
        .map(|mask| (0..cells.len()).filter(|i| mask >> i & 1 == 1).map(|i| cells[i]).collect::<Diagram>())
        .filter(|s| !s.is_empty() && is_special_snake(s, b))
        .collect()
}

#[test]
fn special_snakes_match_subset_filter() {
    for n in 1..=4 {
        for b in compositions_up_to(8, n) {
            if b.size() == 0 {
                continue;
            }
            let fast: BTreeSet<Diagram> = special_snakes(&b).into_iter().map(|s| s.cells().clone()).collect();
            assert_eq!(fast, brute_special_snakes(&b), "shape {b}");
        }
    }
}

#[test]
fn enumerated_tabloids_validate() {
    for n in 1..=3 {
        for b in compositions_up_to(5, n) {
            let ts = enumerate_special_snake_tabloids(&b);
            assert!(!ts.is_empty());
            let distinct: BTreeSet<_> = ts.iter().collect();
            assert_eq!(distinct.len(), ts.len());
            for t in &ts {
                t.validate().unwrap();
                assert_eq!(&SnakeTabloid::from_json(&t.to_json()).unwrap(), t);
            }
        }
    }
}

#[test]
fn key_expands_into_h() {
    for n in 1..=3 {
        for b in compositions_up_to(5, n) {
            let e = expand_key_into_h(&b);
            assert_eq!(e.recombine(n).unwrap(), key_polynomial(&b, n).unwrap(), "shape {b}");
        }
    }
}

#[test]
fn transition_matrices_are_inverse() {
    let n = 3;
    for k in 0..=4 {
        let comps = compositions(k, n);
        let inv: BTreeMap<_, _> = comps.iter().map(|b| (b.clone(), inverse_ktilde_column(b))).collect();
        for a in &comps {
            for c in &comps {
                let sum: i64 = comps.iter().map(|b| ktilde(a, b) as i64 * inv[c].get(b).copied().unwrap_or(0)).sum();
                assert_eq!(sum, i64::from(a == c), "entry ({a}, {c})");
            }
        }
    }
}

#[test]
fn reversed_partitions_cancel_free_and_match_rim_hooks() {
    for size in 0..=6 {
        for mu in Partition::all(size) {
            let b = mu.to_composition(mu.len()).rev();
            let mut per_weight: BTreeMap<WeakComposition, Vec<i64>> = BTreeMap::new();
            for t in enumerate_special_snake_tabloids(&b) {
                per_weight.entry(t.weight()).or_default().push(t.sign());
            }
            assert!(per_weight.values().all(|v| v.len() == 1), "shape {b}");
            let mut by_sort: BTreeMap<Partition, i64> = BTreeMap::new();
            for (a, v) in &per_weight {
                *by_sort.entry(a.sort()).or_insert(0) += v[0];
            }
            by_sort.retain(|_, v| *v != 0);
            assert_eq!(by_sort, special_rim_hook_tabloids(&mu), "partition {mu}");
        }
    }
}

#[test]
fn rim_hook_tabloids_invert_kostka() {
    for size in 0..=5u32 {
        let parts = Partition::all(size);
        let cols: BTreeMap<_, _> = parts.iter().map(|mu| (mu.clone(), special_rim_hook_tabloids(mu))).collect();
        for lam in &parts {
            for nu in &parts {
                // Σ_μ K_{λμ} K⁻¹_{μν}: columns of K⁻¹ are indexed by shape
                let sum: i64 = parts
                    .iter()
                    .map(|mu| {
                        let k = kostka(lam, &mu.to_composition(mu.len())) as i64;
                        k * cols[nu].get(mu).copied().unwrap_or(0)
                    })
                    .sum();
                assert_eq!(sum, i64::from(lam == nu), "({lam}, {nu})");
            }
        }
    }
}

#[test]
fn snakes_of_reversed_partitions_are_rim_hooks() {
    for size in 1..=6 {
        for mu in Partition::all(size) {
            let b = mu.to_composition(mu.len()).rev();
            let cells: Vec<Cell> = key_diagram(&b).iter().copied().collect();
            for mask in 0u32..1 << cells.len() {
                let s: Diagram = (0..cells.len()).filter(|i| mask >> i & 1 == 1).map(|i| cells[i]).collect();
                assert_eq!(is_snake(&s, &b), rim_hook_check(&s, &mu), "{mu} {s:?}");
            }
        }
    }
}

#[test]
fn gset_generating_function() {
    let n = 3;
    for b in compositions_up_to(4, n) {
        for s in special_snakes(&b) {
            let mut p = SparsePolynomial::zero(n);
            for t in gset_enumerate(&s, n).unwrap() {
                assert!(in_gset(&s, &t, n));
                p.add_term(t.weight(n), BigInt::from(1));
            }
            let mut x1 = vec![0; n];
            x1[0] = s.len() as u32;
            let expect =
                &SparsePolynomial::monomial(wc(&x1), BigInt::from(1)) * &key_polynomial(&s.complement(), n).unwrap();
            assert_eq!(p, expect, "shape {b} snake {:?}", s.cells());
        }
    }
}

#[test]
fn involution_on_f() {
    let n = 3;
    for b in compositions_up_to(4, n) {
        if b.part(1) == 0 {
            continue;
        }
        let f = f_set(&b, n).unwrap();
        let members: BTreeSet<_> = f.iter().cloned().collect();
        let mut signed = SparsePolynomial::zero(n);
        for s in special_snakes(&b) {
            for t in gset_enumerate(&s, n).unwrap() {
                signed.add_term(t.weight(n), BigInt::from(s.sign()));
            }
        }
        assert_eq!(signed, key_polynomial(&b, n).unwrap(), "shape {b}");
        for (s, t) in &f {
            assert!(!s_attacks(s, t).is_empty());
            let (s2, t2) = iota(s, t, n).unwrap_or_else(|e| panic!("{b} {:?} {t:?}: {e}", s.cells()));
            assert_eq!(&t2, t);
            assert!(members.contains(&(s2.clone(), t2.clone())), "{b}: image outside F");
            assert_eq!(s2.sign(), -s.sign());
            let ds = s.cells().symmetric_difference(s2.cells());
            assert!(ds.is_subset(s2.cells()) || ds.is_subset(s.cells()));
            let a1: BTreeSet<_> = s_attacks(s, t).into_iter().collect();
            let a2: BTreeSet<_> = s_attacks(&s2, t).into_iter().collect();
            assert_eq!(a1, a2, "{b}: attack sets differ");
            assert_eq!(&iota(&s2, &t2, n).unwrap().0, s);
        }
    }
}

#[test]
fn iota_rejects_outside_domain() {
    let b = wc(&[1, 1]);
    let row = Snake::new([Cell::new(1, 1)].into_iter().collect(), b.clone()).unwrap();
    let sskt = Filling::new(vec![vec![1], vec![2]]);
    assert!(is_member(&sskt, Flavor::Sskt, 2).unwrap());
    assert!(s_attacks(&row, &sskt).is_empty());
    assert!(iota(&row, &sskt, 2).is_err());
    let zero_first = wc(&[0, 1]);
    let s = Snake::new([Cell::new(1, 2)].into_iter().collect(), zero_first).unwrap();
    assert!(iota(&s, &Filling::new(vec![vec![], vec![1]]), 2).is_err());
}

#[test]
fn relabelling_commutes_with_expansion() {
    let n = 4;
    for b in compositions_up_to(4, n) {
        if b.part(1) != 0 || b.size() == 0 {
            continue;
        }
        let from = b.support();
        let to: Vec<usize> = (1..=from.len()).collect();
        let moved = relabel(&b, &from, &to).unwrap();
        let lhs = expand_key_into_h(&b);
        let rhs = expand_key_into_h(&moved);
        let back: BTreeMap<WeakComposition, BigInt> =
            rhs.terms.iter().map(|(a, c)| (relabel(a, &to, &from).unwrap().trimmed(), c.clone())).collect();
        assert_eq!(lhs.terms, back, "shape {b}");
        assert!(!h_flagged(&b, n).unwrap().is_zero());
    }
}
