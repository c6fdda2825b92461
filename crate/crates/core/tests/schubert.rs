use hkey_core::bases::{expand_homogeneous, h_flagged, Basis};
use hkey_core::combinat::{compositions_up_to, grassmannian_perm, Partition, WeakComposition};
use hkey_core::schubert::*;
use num_bigint::BigInt;

#[test]
fn h_expansion_recombines() {
    let mut oracle = SchubertOracle::new();
    for n in 1..=3 {
        for b in compositions_up_to(4, n) {
            let e = h_schubert_expansion(&b);
            assert!(e.is_nonnegative());
            assert_eq!(e.recombine(&mut oracle, n), h_flagged(&b, n).unwrap(), "b = {b}");
        }
    }
}

#[test]
fn products_are_schubert_positive() {
    let n = 3;
    let mut oracle = SchubertOracle::new();
    let comps = compositions_up_to(4, n);
    for a in &comps {
        for b in &comps {
            if a.size() + b.size() > 4 {
                continue;
            }
            let e = (1..=n).fold(h_schubert_expansion(a), |e, k| pieri_multiply(&e, b.part(k), k));
            assert!(e.is_nonnegative(), "{a} * {b}");
            let prod = &h_flagged(a, n).unwrap() * &h_flagged(b, n).unwrap();
            assert_eq!(e.recombine(&mut oracle, n), prod, "{a} * {b}");
        }
    }
}

#[test]
fn single_row_h_is_grassmannian() {
    for m in 0..=4 {
        for k in 1..=3 {
            let mut parts = vec![0; k];
            parts[k - 1] = m;
            let a = WeakComposition::new(parts);
            let v = grassmannian_perm(&Partition::new(vec![m]).unwrap(), k).unwrap();
            assert_eq!(schubert_oracle(&v, k), h_flagged(&a, k).unwrap(), "m = {m}, k = {k}");
        }
    }
}

#[test]
fn h01_squared_in_h_basis() {
    let h01 = h_flagged(&WeakComposition::from(&[0, 1][..]), 2).unwrap();
    let e = expand_homogeneous(&(&h01 * &h01), Basis::HFlagged, 2, 2).unwrap();
    let terms: Vec<(Vec<u32>, BigInt)> =
        e.terms.iter().map(|(a, c)| (a.pad_to(2).parts().to_vec(), c.clone())).collect();
    assert_eq!(
        terms,
        vec![(vec![0, 2], BigInt::from(1)), (vec![1, 1], BigInt::from(1)), (vec![2, 0], BigInt::from(-1))]
    );
}
