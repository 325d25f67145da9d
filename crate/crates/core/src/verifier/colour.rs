//! Direct search for a {0,1} assignment with exactly one 1 in every listed
//! basis. A parity proof must admit none.

use crate::ids::{BasisSet, RaySet};
use crate::tables::BasisTable;

/// Returns the rays assigned 1 in some valid colouring of `bases`, or `None`
/// if the collection is noncolourable.
pub fn find_colouring(table: &BasisTable, bases: BasisSet) -> Option<RaySet> {
    let rows: Vec<u64> = bases.iter().map(|b| table.rays(b).bits()).collect();
    search(&rows, 0, 0).map(RaySet::from_bits)
}

pub fn noncolourability_check(table: &BasisTable, bases: BasisSet) -> bool {
    find_colouring(table, bases).is_none()
}

fn search(rows: &[u64], ones: u64, zeros: u64) -> Option<u64> {
    // most constrained basis that has no 1 yet
    let mut pick: Option<u64> = None;
    for &row in rows {
        if row & ones != 0 {
            continue;
        }
        let free = row & !zeros;
        if free == 0 {
            return None;
        }
        if pick.is_none_or(|p| free.count_ones() < p.count_ones()) {
            pick = Some(free);
        }
    }
    let Some(mut free) = pick else {
        return Some(ones);
    };
    while free != 0 {
        let bit = free & free.wrapping_neg();
        free &= free - 1;
        let neighbours = rows.iter().filter(|&&r| r & bit != 0).fold(0u64, |acc, &r| acc | r) & !bit;
        if neighbours & ones != 0 {
            continue;
        }
        if let Some(found) = search(rows, ones | bit, zeros | neighbours) {
            return Some(found);
        }
    }
    None
}
