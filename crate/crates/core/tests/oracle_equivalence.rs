use std::collections::BTreeSet;

use ks_parity::generators::{enumerate_i, enumerate_ii, enumerate_iii, Enumeration};
use ks_parity::tables::builtin_basis_table;
use ks_parity::verifier::{oracle_enumerate, oracle_enumerate_parallel, Signature};
use ks_parity::BasisSet;

fn basis_sets(e: &Enumeration) -> BTreeSet<BasisSet> {
    e.basis_sets().into_iter().collect()
}

#[test]
fn generators_match_the_exhaustive_scan() {
    let table = builtin_basis_table();
    let oracle = oracle_enumerate(table);
    assert_eq!(oracle.subsets_scanned, (1 << 25) - 1);
    assert_eq!(oracle.summary_line(), "11:320 13:640 15:64 total:1024");
    assert_eq!(
        oracle.by_signature.keys().copied().collect::<Vec<_>>(),
        vec![Signature::RAYS_36, Signature::RAYS_38, Signature::RAYS_40]
    );

    for (n_bases, e) in [(11, enumerate_i()), (13, enumerate_ii()), (15, enumerate_iii())] {
        let generated = basis_sets(&e.unwrap());
        let scanned: BTreeSet<BasisSet> = oracle.sets_with_bases(n_bases).iter().map(|k| k.bases).collect();
        assert_eq!(generated, scanned, "{n_bases}-basis family");
    }
}

#[test]
fn parallel_scan_agrees_with_sequential() {
    let table = builtin_basis_table();
    let a = oracle_enumerate(table);
    for split in [0, 3, 5] {
        let b = oracle_enumerate_parallel(table, split);
        assert_eq!(a.subsets_scanned, b.subsets_scanned);
        assert_eq!(a.by_signature, b.by_signature);
    }
}

#[test]
fn families_are_disjoint_and_total_1024() {
    let all: Vec<BasisSet> =
        [enumerate_i(), enumerate_ii(), enumerate_iii()].into_iter().flat_map(|e| e.unwrap().basis_sets()).collect();
    let distinct: BTreeSet<BasisSet> = all.iter().copied().collect();
    assert_eq!(all.len(), 1024);
    assert_eq!(distinct.len(), 1024);
}

#[test]
fn family_shapes() {
    let ii = enumerate_ii().unwrap();
    assert!(ii.sets.iter().all(|e| e.first.set.bases.len() == 13 && e.first.set.bases.pure_count() == 3));
    let iii = enumerate_iii().unwrap();
    for e in &iii.sets {
        assert_eq!(e.first.set.bases.pure_count(), 5);
        assert_eq!(e.first.set.ray_count(), 40);
        assert_eq!(e.first.set.sigma.len(), 20);
    }
    let i = enumerate_i().unwrap();
    assert!(i.sets.iter().all(|e| e.first.set.signature == Signature::RAYS_36));
}

#[test]
fn enumeration_is_deterministic() {
    let a = enumerate_ii().unwrap();
    let b = enumerate_ii().unwrap();
    let key = |e: &Enumeration| -> Vec<(BasisSet, String, u32)> {
        e.sets.iter().map(|s| (s.first.set.bases, s.first.choice.to_string(), s.parameterizations)).collect()
    };
    assert_eq!(key(&a), key(&b));
    // output is sorted by basis ids
    assert!(a.basis_sets().windows(2).all(|w| w[0] < w[1]));
}
