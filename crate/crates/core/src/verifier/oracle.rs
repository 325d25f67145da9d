//! Brute-force search for parity proofs over every subset of the 25 bases.
//!
//! A subset is a parity proof iff it has odd size and the XOR of its basis
//! masks is zero. Subsets are visited in Gray-code order so each step flips
//! one basis and costs a single XOR.

use std::collections::BTreeMap;
use std::thread;

use crate::ids::{BasisId, BasisSet, NUM_BASES};
use crate::ks_set::KsSet;
use crate::tables::BasisTable;
use crate::verifier::{basis_mask, Signature};

#[derive(Clone, Debug, Default)]
pub struct OracleResult {
    /// Parity proofs keyed by type, each list sorted by basis ids.
    pub by_signature: BTreeMap<Signature, Vec<KsSet>>,
    pub subsets_scanned: u64,
}

impl OracleResult {
    pub fn total(&self) -> usize {
        self.by_signature.values().map(Vec::len).sum()
    }

    /// Number of proofs using `n_bases` bases.
    pub fn count_with_bases(&self, n_bases: u8) -> usize {
        self.by_signature.iter().filter(|(s, _)| s.n_bases == n_bases).map(|(_, v)| v.len()).sum()
    }

    pub fn sets_with_bases(&self, n_bases: u8) -> Vec<&KsSet> {
        let mut out: Vec<&KsSet> =
            self.by_signature.iter().filter(|(s, _)| s.n_bases == n_bases).flat_map(|(_, v)| v.iter()).collect();
        out.sort();
        out
    }

    /// `11:320 13:640 15:64 total:1024`
    pub fn summary_line(&self) -> String {
        let mut by_bases: BTreeMap<u8, usize> = BTreeMap::new();
        for (s, v) in &self.by_signature {
            *by_bases.entry(s.n_bases).or_default() += v.len();
        }
        let mut parts: Vec<String> = by_bases.iter().map(|(n, c)| format!("{n}:{c}")).collect();
        parts.push(format!("total:{}", self.total()));
        parts.join(" ")
    }
}

fn masks(table: &BasisTable) -> [u64; NUM_BASES] {
    std::array::from_fn(|i| basis_mask(table, BasisId::new(i as u8 + 1).unwrap()).bits())
}

/// Scans the subsets whose top `NUM_BASES - low_bits` bits equal `high`.
fn scan_block(masks: &[u64; NUM_BASES], high: u32, low_bits: u32, out: &mut Vec<u32>) -> u64 {
    let mut acc = 0u64;
    let mut parity = false;
    for i in low_bits..NUM_BASES as u32 {
        if high >> (i - low_bits) & 1 == 1 {
            acc ^= masks[i as usize];
            parity = !parity;
        }
    }
    let base = high << low_bits;
    let mut gray = 0u32;
    let mut scanned = 0u64;
    if base != 0 {
        scanned += 1;
        if parity && acc == 0 {
            out.push(base);
        }
    }
    for k in 1u32..(1 << low_bits) {
        let bit = k.trailing_zeros();
        gray ^= 1 << bit;
        acc ^= masks[bit as usize];
        parity = !parity;
        scanned += 1;
        if parity && acc == 0 {
            out.push(base | gray);
        }
    }
    scanned
}

fn classify(table: &BasisTable, found: Vec<u32>, scanned: u64) -> OracleResult {
    let mut by_signature: BTreeMap<Signature, Vec<KsSet>> = BTreeMap::new();
    for bits in found {
        let ks =
            KsSet::from_bases(table, BasisSet::from_bits(bits)).expect("odd subset with zero XOR has an even profile");
        by_signature.entry(ks.signature).or_default().push(ks);
    }
    for v in by_signature.values_mut() {
        v.sort();
    }
    OracleResult { by_signature, subsets_scanned: scanned }
}

/// Single-threaded scan of all 2^25 - 1 nonempty subsets.
pub fn oracle_enumerate(table: &BasisTable) -> OracleResult {
    let masks = masks(table);
    let mut found = Vec::new();
    let scanned = scan_block(&masks, 0, NUM_BASES as u32, &mut found);
    classify(table, found, scanned)
}

/// Same result as [`oracle_enumerate`], with the subset range split into
/// `2^split_bits` blocks spread over scoped threads.
pub fn oracle_enumerate_parallel(table: &BasisTable, split_bits: u32) -> OracleResult {
    let split_bits = split_bits.min(8);
    let low_bits = NUM_BASES as u32 - split_bits;
    let masks = masks(table);
    let workers = thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let blocks: Vec<u32> = (0..1u32 << split_bits).collect();
    let chunk = blocks.len().div_ceil(workers).max(1);
    let (found, scanned) = thread::scope(|s| {
        let handles: Vec<_> = blocks
            .chunks(chunk)
            .map(|highs| {
                let masks = &masks;
                s.spawn(move || {
                    let mut found = Vec::new();
                    let mut scanned = 0;
                    for &h in highs {
                        scanned += scan_block(masks, h, low_bits, &mut found);
                    }
                    (found, scanned)
                })
            })
            .collect();
        handles.into_iter().fold((Vec::new(), 0u64), |(mut f, n), h| {
            let (part, m) = h.join().expect("oracle worker panicked");
            f.extend(part);
            (f, n + m)
        })
    });
    classify(table, found, scanned)
}
