//! The fixed incidence structure: 40 rays, 25 bases, and the 40 Γ-sets.
//!
//! Bases 1..=5 are the pure bases; they partition the rays. Bases 6..=25 are
//! hybrid: each takes four rays from one pure basis and four from another.
//! A Γ-set is a 4-ray subset of a pure basis whose four 3-subsets each sit
//! inside some hybrid basis. Choosing one brings in its pure basis and those
//! four hybrids.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ids::{BasisId, BasisSet, RayId, RaySet, BASIS_SIZE, NUM_BASES, NUM_PURE, NUM_RAYS};

/// Rows of the 25-basis table, ascending within each row.
pub const BUILTIN_ROWS: [[u8; BASIS_SIZE]; NUM_BASES] = [
    [1, 2, 3, 4, 5, 6, 7, 8],
    [9, 10, 11, 12, 13, 14, 15, 16],
    [17, 18, 19, 20, 21, 22, 23, 24],
    [25, 26, 27, 28, 29, 30, 31, 32],
    [33, 34, 35, 36, 37, 38, 39, 40],
    [1, 2, 3, 4, 13, 14, 15, 16],
    [1, 2, 5, 6, 21, 22, 23, 24],
    [1, 3, 5, 7, 29, 30, 31, 32],
    [1, 4, 6, 7, 37, 38, 39, 40],
    [2, 3, 5, 8, 33, 34, 35, 36],
    [2, 4, 6, 8, 25, 26, 27, 28],
    [3, 4, 7, 8, 17, 18, 19, 20],
    [5, 6, 7, 8, 9, 10, 11, 12],
    [9, 10, 13, 14, 19, 20, 23, 24],
    [9, 11, 13, 15, 27, 28, 31, 32],
    [9, 12, 14, 15, 34, 36, 38, 39],
    [10, 11, 13, 16, 33, 35, 37, 40],
    [10, 12, 14, 16, 25, 26, 29, 30],
    [11, 12, 15, 16, 17, 18, 21, 22],
    [17, 19, 21, 23, 26, 28, 30, 32],
    [17, 20, 22, 23, 35, 36, 37, 39],
    [18, 19, 21, 24, 33, 34, 38, 40],
    [18, 20, 22, 24, 25, 27, 29, 31],
    [25, 28, 30, 31, 33, 36, 37, 38],
    [26, 27, 29, 32, 34, 35, 39, 40],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Pure,
    Hybrid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    pub id: BasisId,
    pub rays: [RayId; BASIS_SIZE],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisTable {
    rays: [RaySet; NUM_BASES],
    containing: [BasisSet; NUM_RAYS],
}

impl BasisTable {
    /// Builds a table from 25 rows of 8 strictly ascending ray numbers.
    ///
    /// Only the row shape is checked here. Whether the rows have the
    /// pure/hybrid structure the algorithms need is reported by
    /// [`derive_gamma_table`] and [`BasisTable::check_structure`].
    pub fn new(rows: &[[u8; BASIS_SIZE]]) -> Result<Self> {
        if rows.len() != NUM_BASES {
            return Err(Error::Structure(format!("expected {NUM_BASES} bases, got {}", rows.len())));
        }
        let mut rays = [RaySet::EMPTY; NUM_BASES];
        let mut containing = [BasisSet::EMPTY; NUM_RAYS];
        for (i, row) in rows.iter().enumerate() {
            let id = BasisId::from_index(i);
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Structure(format!("basis {id} rays not strictly ascending")));
            }
            for &r in row {
                let r = RayId::new(r)?;
                rays[i] = rays[i].with(r);
                containing[r.index()] = containing[r.index()].with(id);
            }
        }
        Ok(BasisTable { rays, containing })
    }

    pub fn rays(&self, b: BasisId) -> RaySet {
        self.rays[b.index()]
    }

    pub fn basis(&self, b: BasisId) -> Basis {
        let mut rays = [RayId::from_index(0); BASIS_SIZE];
        for (slot, r) in rays.iter_mut().zip(self.rays(b).iter()) {
            *slot = r;
        }
        Basis { id: b, rays }
    }

    pub fn bases(&self) -> impl Iterator<Item = Basis> + '_ {
        BasisId::all().map(|b| self.basis(b))
    }

    pub fn kind(&self, b: BasisId) -> BasisKind {
        if b.is_pure() {
            BasisKind::Pure
        } else {
            BasisKind::Hybrid
        }
    }

    /// All bases that contain `r`.
    pub fn containing(&self, r: RayId) -> BasisSet {
        self.containing[r.index()]
    }

    pub fn hybrids_containing(&self, r: RayId) -> BasisSet {
        self.containing(r).difference(pure_bases())
    }

    /// The pure basis a ray belongs to (the first one, if the table is
    /// malformed).
    pub fn pure_of(&self, r: RayId) -> Option<BasisId> {
        self.containing(r).iter().find(|b| b.is_pure())
    }

    /// The unique hybrid basis containing all of `rays`, if there is exactly one.
    pub fn hybrid_containing_all(&self, rays: RaySet) -> Result<BasisId> {
        let mut found = hybrid_bases();
        for r in rays.iter() {
            found = BasisSet::from_bits(found.bits() & self.containing(r).bits());
        }
        match found.len() {
            1 => Ok(found.iter().next().unwrap()),
            n => Err(Error::Structure(format!("{n} hybrid bases contain {rays}, expected exactly 1"))),
        }
    }

    /// The hybrid basis with exactly these eight rays, if any.
    pub fn find_basis(&self, rays: RaySet) -> Option<BasisId> {
        BasisId::all().find(|&b| self.rays(b) == rays)
    }

    /// Checks that pure bases partition the rays, every ray sits in exactly
    /// four hybrids, and each hybrid splits 4/4 across two pure bases.
    pub fn check_structure(&self) -> Result<()> {
        let mut covered = RaySet::EMPTY;
        for b in pure_bases().iter() {
            if !covered.intersection(self.rays(b)).is_empty() {
                return Err(Error::Structure(format!("pure basis {b} overlaps an earlier pure basis")));
            }
            covered = covered.union(self.rays(b));
        }
        if covered != RaySet::ALL {
            return Err(Error::Structure("pure bases do not cover all rays".into()));
        }
        for r in RayId::all() {
            let n = self.hybrids_containing(r).len();
            if n != 4 {
                return Err(Error::Structure(format!("ray {r} occurs in {n} hybrid bases, expected 4")));
            }
        }
        for h in hybrid_bases().iter() {
            let split: Vec<usize> =
                pure_bases().iter().map(|p| self.rays(h).intersection(self.rays(p)).len()).filter(|&n| n > 0).collect();
            if split != [4, 4] {
                return Err(Error::Structure(format!("hybrid basis {h} does not split 4/4 over two pure bases")));
            }
        }
        Ok(())
    }
}

pub fn pure_bases() -> BasisSet {
    BasisSet::from_bits((1 << NUM_PURE) - 1)
}

pub fn hybrid_bases() -> BasisSet {
    BasisSet::ALL.difference(pure_bases())
}

pub fn builtin_basis_table() -> &'static BasisTable {
    static TABLE: OnceLock<BasisTable> = OnceLock::new();
    TABLE.get_or_init(|| BasisTable::new(&BUILTIN_ROWS).expect("builtin rows are well formed"))
}

/// Per-ray occurrence counts over a selection of bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RayCounts([u8; NUM_RAYS]);

impl RayCounts {
    pub fn get(&self, r: RayId) -> u8 {
        self.0[r.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (RayId, u8)> + '_ {
        self.0.iter().enumerate().map(|(i, &c)| (RayId::from_index(i), c))
    }

    /// Rays whose count equals `n`.
    pub fn with_count(&self, n: u8) -> RaySet {
        self.iter().filter(|&(_, c)| c == n).map(|(r, _)| r).collect()
    }

    pub fn as_array(&self) -> &[u8; NUM_RAYS] {
        &self.0
    }
}

pub fn multiplicity_profile(table: &BasisTable, bases: BasisSet) -> RayCounts {
    let mut counts = [0u8; NUM_RAYS];
    for b in bases.iter() {
        for r in table.rays(b).iter() {
            counts[r.index()] += 1;
        }
    }
    RayCounts(counts)
}

/// Position `(i, j)` of a Γ-set: pure basis `i` in 1..=5, slot `j` in 1..=8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaIndex {
    pb: u8,
    slot: u8,
}

impl GammaIndex {
    pub fn new(pb: u8, slot: u8) -> Result<Self> {
        if !(1..=NUM_PURE as u8).contains(&pb) {
            return Err(Error::OutOfRange { what: "pure basis", value: pb as u32, max: NUM_PURE as u32 });
        }
        if !(1..=8).contains(&slot) {
            return Err(Error::OutOfRange { what: "gamma slot", value: slot as u32, max: 8 });
        }
        Ok(GammaIndex { pb, slot })
    }

    pub fn pb(self) -> u8 {
        self.pb
    }

    pub fn slot(self) -> u8 {
        self.slot
    }

    pub fn pure_basis(self) -> BasisId {
        BasisId::from_index(self.pb as usize - 1)
    }

    pub fn all() -> impl Iterator<Item = GammaIndex> {
        (1..=NUM_PURE as u8).flat_map(|pb| (1..=8).map(move |slot| GammaIndex { pb, slot }))
    }
}

/// Renders as `G<i>.<j>`, the form accepted by choice specs.
impl fmt::Display for GammaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G{}.{}", self.pb, self.slot)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GammaSet {
    pub index: GammaIndex,
    pub rays: RaySet,
}

impl GammaSet {
    /// The four 3-subsets in the order {α,β,γ}, {α,β,δ}, {α,γ,δ}, {β,γ,δ}
    /// for rays α < β < γ < δ.
    pub fn triples(&self) -> [RaySet; 4] {
        let r: Vec<RayId> = self.rays.iter().collect();
        let drop = |k: usize| RaySet::from_ids(r.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &x)| x));
        [drop(3), drop(2), drop(1), drop(0)]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaTable {
    entries: [[GammaSet; 8]; NUM_PURE],
}

impl GammaTable {
    pub fn get(&self, index: GammaIndex) -> GammaSet {
        self.entries[index.pb as usize - 1][index.slot as usize - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = GammaSet> + '_ {
        self.entries.iter().flatten().copied()
    }

    pub fn in_pure(&self, pb: u8) -> &[GammaSet; 8] {
        &self.entries[pb as usize - 1]
    }

    pub fn find(&self, rays: RaySet) -> Option<GammaSet> {
        self.iter().find(|g| g.rays == rays)
    }
}

pub fn derive_gamma_table(table: &BasisTable) -> Result<GammaTable> {
    let hybrids: Vec<RaySet> = hybrid_bases().iter().map(|h| table.rays(h)).collect();
    let mut entries = Vec::with_capacity(NUM_PURE);
    for pb in 1..=NUM_PURE as u8 {
        let rays: Vec<RayId> = table.rays(BasisId::from_index(pb as usize - 1)).iter().collect();
        let mut found = Vec::new();
        for a in 0..rays.len() {
            for b in a + 1..rays.len() {
                for c in b + 1..rays.len() {
                    for d in c + 1..rays.len() {
                        let quad = RaySet::from_ids([rays[a], rays[b], rays[c], rays[d]]);
                        let candidate = GammaSet { index: GammaIndex { pb, slot: 0 }, rays: quad };
                        // Each 3-subset must recur in a hybrid, and in four
                        // different hybrids; otherwise the quad is just half
                        // of one hybrid basis.
                        let homes: Vec<Option<usize>> =
                            candidate.triples().iter().map(|t| hybrids.iter().position(|h| t.is_subset(*h))).collect();
                        let distinct = homes.iter().flatten().collect::<std::collections::BTreeSet<_>>().len();
                        if homes.iter().all(Option::is_some) && distinct == 4 {
                            found.push(quad);
                        }
                    }
                }
            }
        }
        if found.len() != 8 {
            return Err(Error::Structure(format!(
                "pure basis {pb} has {} four-ray sets with every 3-subset in a hybrid basis, expected 8",
                found.len()
            )));
        }
        // Nested index loops over an ascending row already produce
        // lexicographic order.
        let row: [GammaSet; 8] =
            std::array::from_fn(|j| GammaSet { index: GammaIndex { pb, slot: j as u8 + 1 }, rays: found[j] });
        entries.push(row);
    }
    Ok(GammaTable { entries: entries.try_into().expect("five pure bases") })
}

pub fn builtin_gamma_table() -> &'static GammaTable {
    static GAMMAS: OnceLock<GammaTable> = OnceLock::new();
    GAMMAS.get_or_init(|| derive_gamma_table(builtin_basis_table()).expect("builtin table yields 40 gamma sets"))
}

/// ¬Γ: the rays of the Γ-set's pure basis that are not in it.
pub fn complement_in_pb(table: &BasisTable, g: &GammaSet) -> RaySet {
    table.rays(g.index.pure_basis()).difference(g.rays)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratedBases {
    pub pure: BasisId,
    /// Hybrids holding the 3-subsets in [`GammaSet::triples`] order.
    pub hybrids: [BasisId; 4],
}

impl GeneratedBases {
    pub fn as_set(&self) -> BasisSet {
        BasisSet::from_ids(self.hybrids).with(self.pure)
    }
}

pub fn generated_bases(table: &BasisTable, g: &GammaSet) -> Result<GeneratedBases> {
    let triples = g.triples();
    let mut hybrids = [BasisId::from_index(0); 4];
    for (slot, t) in hybrids.iter_mut().zip(triples.iter()) {
        *slot = table.hybrid_containing_all(*t)?;
    }
    Ok(GeneratedBases { pure: g.index.pure_basis(), hybrids })
}

/// For each hybrid basis in `generated`, the rays that occur exactly once
/// across the whole collection.
pub fn lambda_sets(table: &BasisTable, generated: BasisSet) -> BTreeMap<BasisId, RaySet> {
    let once = multiplicity_profile(table, generated).with_count(1);
    generated.iter().filter(|b| !b.is_pure()).map(|h| (h, table.rays(h).intersection(once))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gamma(pb: u8, slot: u8) -> GammaSet {
        builtin_gamma_table().get(GammaIndex::new(pb, slot).unwrap())
    }

    fn b(id: u8) -> BasisId {
        BasisId::new(id).unwrap()
    }

    #[test]
    fn builtin_rows() {
        let t = builtin_basis_table();
        assert_eq!(t.rays(b(1)).to_vec(), vec![1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(t.rays(b(13)).to_vec(), vec![5, 6, 7, 8, 9, 10, 11, 12]);
        assert_eq!(t.rays(b(25)).to_vec(), vec![26, 27, 29, 32, 34, 35, 39, 40]);
        assert!(std::ptr::eq(builtin_basis_table(), t));
        t.check_structure().unwrap();
    }

    #[test]
    fn profiles() {
        let t = builtin_basis_table();
        let one = multiplicity_profile(t, BasisSet::of(&[1]));
        for r in RayId::all() {
            assert_eq!(one.get(r), u8::from(r.get() <= 8));
        }
        assert!(multiplicity_profile(t, BasisSet::ALL).iter().all(|(_, c)| c == 5));
        assert!(multiplicity_profile(t, BasisSet::EMPTY).iter().all(|(_, c)| c == 0));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(1, 1).rays.to_vec(), vec![1, 2, 3, 5]);
        assert_eq!(gamma(3, 4).rays.to_vec(), vec![17, 21, 22, 23]);
        assert_eq!(builtin_gamma_table().iter().count(), 40);
    }

    #[test]
    fn complements() {
        let t = builtin_basis_table();
        assert_eq!(complement_in_pb(t, &gamma(3, 4)).to_vec(), vec![18, 19, 20, 24]);
        assert_eq!(complement_in_pb(t, &gamma(1, 1)).to_vec(), vec![4, 6, 7, 8]);
        for g in builtin_gamma_table().iter() {
            let c = complement_in_pb(t, &g);
            assert_eq!(c.union(g.rays), t.rays(g.index.pure_basis()));
            assert!(c.intersection(g.rays).is_empty());
        }
    }

    #[test]
    fn generated_examples() {
        let t = builtin_basis_table();
        let g34 = generated_bases(t, &gamma(3, 4)).unwrap();
        assert_eq!(g34.pure, b(3));
        assert_eq!(g34.hybrids.map(BasisId::get), [19, 20, 21, 7]);
        let g11 = generated_bases(t, &gamma(1, 1)).unwrap();
        assert_eq!(g11.pure, b(1));
        let mut hs = g11.hybrids.map(BasisId::get);
        hs.sort();
        assert_eq!(hs, [6, 7, 8, 10]);
    }

    #[test]
    fn every_gamma_generates_the_expected_profile() {
        let t = builtin_basis_table();
        for g in builtin_gamma_table().iter() {
            let gen = generated_bases(t, &g).unwrap();
            let set = gen.as_set();
            assert_eq!(set.len(), 5);
            let pb = t.rays(gen.pure);
            let not_gamma = complement_in_pb(t, &g);
            for h in gen.hybrids {
                assert_eq!(t.rays(h).intersection(pb).len(), 4);
                assert_eq!(t.rays(h).intersection(g.rays).len(), 3);
                assert_eq!(t.rays(h).intersection(not_gamma).len(), 1);
            }
            let prof = multiplicity_profile(t, set);
            assert_eq!(prof.with_count(4), g.rays);
            assert_eq!(prof.with_count(2), not_gamma);
            assert_eq!(prof.with_count(1).len(), 16);
        }
    }

    #[test]
    fn lambda_examples() {
        let t = builtin_basis_table();
        let l = lambda_sets(t, generated_bases(t, &gamma(3, 4)).unwrap().as_set());
        assert_eq!(l[&b(19)].to_vec(), vec![11, 12, 15, 16]);
        assert_eq!(l[&b(20)].to_vec(), vec![26, 28, 30, 32]);
        assert_eq!(l[&b(21)].to_vec(), vec![35, 36, 37, 39]);
        assert_eq!(l[&b(7)].to_vec(), vec![1, 2, 5, 6]);
        let l = lambda_sets(t, generated_bases(t, &gamma(1, 1)).unwrap().as_set());
        assert_eq!(l[&b(10)].to_vec(), vec![33, 34, 35, 36]);
        assert_eq!(l.len(), 4);
    }

    #[test]
    fn corrupted_table_is_rejected() {
        let mut rows = BUILTIN_ROWS;
        rows[18] = [11, 12, 15, 16, 16, 18, 21, 22];
        assert!(BasisTable::new(&rows).is_err());

        // move ray 16 out of HB6 and ray 17 out of HB19
        let mut rows = BUILTIN_ROWS;
        rows[5] = [1, 2, 3, 4, 13, 14, 15, 17];
        rows[18] = [11, 12, 15, 16, 18, 20, 21, 22];
        let t = BasisTable::new(&rows).unwrap();
        assert!(t.check_structure().is_err());
        assert!(matches!(derive_gamma_table(&t), Err(Error::Structure(_))));
    }
}
