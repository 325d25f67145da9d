//! Exit criteria, run without the test harness so the PASS/FAIL lines are
//! always printed. Exits non-zero if any check fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use ks_parity::generators::{
    enumerate_i, enumerate_ii, enumerate_iii, run_algorithm_i, run_algorithm_ii, run_algorithm_iii, ChoiceI,
    Enumeration, GammaChoice, StepAdditions, STEPS_I, STEPS_II, STEPS_III,
};
use ks_parity::tables::{builtin_basis_table, derive_gamma_table, pure_bases, GammaIndex};
use ks_parity::verifier::{basis_mask, noncolourability_check, oracle_enumerate, verify_parity};
use ks_parity::{BasisId, BasisSet, RayId};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Check {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn gi(pb: u8, slot: u8) -> GammaIndex {
    GammaIndex::new(pb, slot).unwrap()
}

fn ray_list(v: &[RayId]) -> Vec<u8> {
    v.iter().map(|r| r.get()).collect()
}

/// All 40 Γ-sets, grouped by pure basis, in slot order.
const EXPECTED_GAMMAS: [[[u8; 4]; 8]; 5] = [
    [[1, 2, 3, 5], [1, 2, 4, 6], [1, 3, 4, 7], [1, 5, 6, 7], [2, 3, 4, 8], [2, 5, 6, 8], [3, 5, 7, 8], [4, 6, 7, 8]],
    [
        [9, 10, 11, 13],
        [9, 10, 12, 14],
        [9, 11, 12, 15],
        [9, 13, 14, 15],
        [10, 11, 12, 16],
        [10, 13, 14, 16],
        [11, 13, 15, 16],
        [12, 14, 15, 16],
    ],
    [
        [17, 18, 19, 21],
        [17, 18, 20, 22],
        [17, 19, 20, 23],
        [17, 21, 22, 23],
        [18, 19, 20, 24],
        [18, 21, 22, 24],
        [19, 21, 23, 24],
        [20, 22, 23, 24],
    ],
    [
        [25, 26, 27, 29],
        [25, 26, 28, 30],
        [25, 27, 28, 31],
        [25, 29, 30, 31],
        [26, 27, 28, 32],
        [26, 29, 30, 32],
        [27, 29, 31, 32],
        [28, 30, 31, 32],
    ],
    [
        [33, 34, 35, 40],
        [33, 34, 36, 38],
        [33, 35, 36, 37],
        [33, 37, 38, 40],
        [34, 35, 36, 39],
        [34, 38, 39, 40],
        [35, 37, 39, 40],
        [36, 37, 38, 39],
    ],
];

fn gamma_table_matches() -> Check {
    let start = Instant::now();
    let gammas = derive_gamma_table(builtin_basis_table()).map_err(|e| e.to_string())?;
    ensure(gammas.iter().count() == 40, || "expected 40 sets".into())?;
    for (p, column) in EXPECTED_GAMMAS.iter().enumerate() {
        let derived = gammas.in_pure(p as u8 + 1);
        for (j, expected) in column.iter().enumerate() {
            let got = derived[j].rays.to_vec();
            ensure(got == expected, || format!("Γ^{}{}: got {got:?}, expected {expected:?}", p + 1, j + 1))?;
        }
    }
    within(start, Duration::from_secs(1))
}

fn worked_example_one() -> Check {
    let c = ChoiceI { gamma: gi(1, 1), sigma5: RayId::new(13).unwrap(), sigma6: RayId::new(23).unwrap() };
    let g = run_algorithm_i(c).map_err(|e| e.to_string())?;
    ensure(g.set.bases == BasisSet::of(&[1, 6, 7, 8, 10, 14, 15, 17, 20, 21, 25]), || {
        format!("bases {}", g.set.bases)
    })?;
    let mut sigma = ray_list(&g.set.sigma);
    sigma.sort();
    ensure(sigma == [1, 2, 3, 5, 13, 23, 32, 35], || format!("sigma {sigma:?}"))
}

fn worked_example_two() -> Check {
    let g = run_algorithm_ii(GammaChoice::new(gi(1, 1), gi(2, 4), gi(3, 7))).map_err(|e| e.to_string())?;
    ensure(g.set.bases == BasisSet::of(&[1, 2, 3, 6, 7, 8, 10, 14, 15, 16, 20, 22, 25]), || {
        format!("bases {}", g.set.bases)
    })?;
    ensure(ray_list(&g.set.sigma[12..]) == [32, 34], || format!("Σ13, Σ14 = {:?}", &g.set.sigma[12..]))
}

fn worked_example_three() -> Check {
    let g = run_algorithm_iii(GammaChoice::new(gi(1, 1), gi(2, 4), gi(3, 7))).map_err(|e| e.to_string())?;
    ensure(g.set.bases == BasisSet::of(&[1, 2, 3, 4, 5, 6, 7, 8, 10, 14, 15, 16, 20, 22, 24]), || {
        format!("bases {}", g.set.bases)
    })?;
    ensure(ray_list(&g.set.sigma[12..16]) == [28, 30, 31, 32], || format!("Γ^48 = {:?}", &g.set.sigma[12..16]))?;
    ensure(ray_list(&g.set.sigma[16..]) == [33, 34, 36, 38], || format!("Γ^52 = {:?}", &g.set.sigma[16..]))
}

fn enumeration_counts(families: &mut Option<[Enumeration; 3]>) -> Check {
    let start = Instant::now();
    let run = [enumerate_i(), enumerate_ii(), enumerate_iii()];
    let took = start.elapsed();
    let mut out = Vec::new();
    for r in run {
        out.push(r.map_err(|e| e.to_string())?);
    }
    let counts: Vec<usize> = out.iter().map(Enumeration::len).collect();
    *families = Some(out.try_into().unwrap());
    ensure(counts == [320, 640, 64], || format!("counts {counts:?}"))?;
    ensure(took < Duration::from_secs(10), || format!("took {took:?}"))
}

fn oracle_equivalence(families: &[Enumeration; 3]) -> Check {
    let start = Instant::now();
    let oracle = oracle_enumerate(builtin_basis_table());
    let took = start.elapsed();
    ensure(oracle.total() == 1024, || format!("oracle found {}", oracle.total()))?;
    let sizes: BTreeSet<u8> = oracle.by_signature.keys().map(|s| s.n_bases).collect();
    ensure(sizes == BTreeSet::from([11, 13, 15]), || format!("proof sizes {sizes:?}"))?;
    for (fam, n) in families.iter().zip([11u8, 13, 15]) {
        let generated: BTreeSet<BasisSet> = fam.basis_sets().into_iter().collect();
        let scanned: BTreeSet<BasisSet> = oracle.sets_with_bases(n).iter().map(|k| k.bases).collect();
        ensure(generated == scanned, || format!("{n}-basis families differ"))?;
    }
    ensure(oracle.summary_line() == "11:320 13:640 15:64 total:1024", || oracle.summary_line())?;
    ensure(took < Duration::from_secs(60), || format!("took {took:?}"))
}

fn structural_invariant() -> Check {
    let t = builtin_basis_table();
    for r in RayId::all() {
        let pure = t.containing(r).iter().filter(|b| b.is_pure()).count();
        let hybrid = t.containing(r).iter().filter(|b| !b.is_pure()).count();
        ensure(pure == 1 && hybrid == 4, || format!("ray {r}: {pure} pure, {hybrid} hybrid"))?;
    }
    Ok(())
}

fn parity_consistency(families: &[Enumeration; 3]) -> Check {
    let t = builtin_basis_table();
    for fam in families {
        for e in &fam.sets {
            let c = verify_parity(t, e.first.set.bases);
            let s = c.signature.ok_or_else(|| format!("{} not certified", e.first.set.bases))?;
            ensure(c.valid && s.n_bases % 2 == 1 && s.is_balanced(), || format!("{s} unbalanced"))?;
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let bases = BasisSet::from_bits(rng.gen_range(0..1u32 << 25));
        let x = bases.iter().fold(0u64, |a, b| a ^ basis_mask(t, b).bits());
        let by_mask = bases.len() % 2 == 1 && x == 0;
        let by_count = verify_parity(t, bases).valid;
        ensure(by_mask == by_count, || format!("predicates disagree on {bases}"))?;
    }
    Ok(())
}

fn noncolourability(families: &[Enumeration; 3]) -> Check {
    let start = Instant::now();
    let t = builtin_basis_table();
    let mut rng = StdRng::seed_from_u64(9);
    let mut sampled = 0;
    for fam in families {
        for e in fam.sets.choose_multiple(&mut rng, 12) {
            ensure(noncolourability_check(t, e.first.set.bases), || format!("{} is colourable", e.first.set.bases))?;
            sampled += 1;
        }
    }
    ensure(sampled >= 32, || format!("sampled only {sampled}"))?;
    for b in BasisId::all() {
        ensure(!noncolourability_check(t, BasisSet::from_ids([b])), || format!("basis {b} reported noncolourable"))?;
    }
    ensure(!noncolourability_check(t, pure_bases()), || "pure bases reported noncolourable".into())?;
    within(start, Duration::from_secs(10))
}

fn step_counts(families: &[Enumeration; 3]) -> Check {
    let expected: [&[StepAdditions]; 3] = [&STEPS_I, &STEPS_II, &STEPS_III];
    let mut runs = 0;
    for (fam, exp) in families.iter().zip(expected) {
        for e in &fam.sets {
            runs += 1;
            ensure(e.first.steps == exp, || format!("{}: steps {:?}", e.first.choice, e.first.steps))?;
        }
    }
    let totals: Vec<Vec<u8>> = expected.iter().map(|s| s.iter().map(|a| a.total()).collect()).collect();
    ensure(totals[0] == [5, 3, 2, 1, 0], || format!("{:?}", totals[0]))?;
    ensure(runs == 1024, || format!("{runs} runs"))
}

fn main() {
    let mut families = None;
    let mut results: Vec<(&str, Check)> = vec![
        ("1 gamma table has the expected 40 sets", gamma_table_matches()),
        ("2 worked example, algorithm I", worked_example_one()),
        ("3 worked example, algorithm II", worked_example_two()),
        ("4 worked example, algorithm III", worked_example_three()),
        ("5 enumeration counts 320/640/64", enumeration_counts(&mut families)),
    ];
    match &families {
        Some(f) => {
            results.push(("6 oracle equivalence", oracle_equivalence(f)));
            results.push(("7 structural invariant", structural_invariant()));
            results.push(("8 parity/signature consistency", parity_consistency(f)));
            results.push(("9 noncolourability", noncolourability(f)));
            results.push(("10 step-count assertions", step_counts(f)));
        }
        None => {
            for name in [
                "6 oracle equivalence",
                "8 parity/signature consistency",
                "9 noncolourability",
                "10 step-count assertions",
            ] {
                results.push((name, Err("enumeration failed".into())));
            }
            results.push(("7 structural invariant", structural_invariant()));
        }
    }
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(()) => println!("PASS  {name}"),
            Err(e) => {
                failed += 1;
                println!("FAIL  {name}: {e}");
            }
        }
    }
    println!("{} of {} acceptance criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
