//! Identifiers and bitmask sets for rays and bases.
//!
//! Rays are numbered 1..=40 and bases 1..=25. Sets of either are stored as
//! bitmasks (bit `id - 1`), which keeps every set sorted ascending for free
//! and makes the parity arithmetic a plain XOR.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub const NUM_RAYS: usize = 40;
pub const NUM_BASES: usize = 25;
pub const NUM_PURE: usize = 5;
pub const BASIS_SIZE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct RayId(u8);

impl RayId {
    pub fn new(value: u8) -> Result<Self, Error> {
        if (1..=NUM_RAYS as u8).contains(&value) {
            Ok(RayId(value))
        } else {
            Err(Error::OutOfRange { what: "ray", value: value as u32, max: NUM_RAYS as u32 })
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// Zero-based position, also the bit index in a [`RaySet`].
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn all() -> impl Iterator<Item = RayId> {
        (1..=NUM_RAYS as u8).map(RayId)
    }

    pub(crate) fn from_index(index: usize) -> Self {
        debug_assert!(index < NUM_RAYS);
        RayId(index as u8 + 1)
    }
}

impl TryFrom<u8> for RayId {
    type Error = Error;
    fn try_from(value: u8) -> Result<Self, Error> {
        RayId::new(value)
    }
}

impl From<RayId> for u8 {
    fn from(r: RayId) -> u8 {
        r.0
    }
}

impl fmt::Display for RayId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct BasisId(u8);

impl BasisId {
    pub fn new(value: u8) -> Result<Self, Error> {
        if (1..=NUM_BASES as u8).contains(&value) {
            Ok(BasisId(value))
        } else {
            Err(Error::OutOfRange { what: "basis", value: value as u32, max: NUM_BASES as u32 })
        }
    }

    /// The pure basis `PB_i`, `i` in 1..=5.
    pub fn pure(i: u8) -> Result<Self, Error> {
        if (1..=NUM_PURE as u8).contains(&i) {
            Ok(BasisId(i))
        } else {
            Err(Error::OutOfRange { what: "pure basis", value: i as u32, max: NUM_PURE as u32 })
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn is_pure(self) -> bool {
        self.0 as usize <= NUM_PURE
    }

    pub fn all() -> impl Iterator<Item = BasisId> {
        (1..=NUM_BASES as u8).map(BasisId)
    }

    pub(crate) fn from_index(index: usize) -> Self {
        debug_assert!(index < NUM_BASES);
        BasisId(index as u8 + 1)
    }
}

impl TryFrom<u8> for BasisId {
    type Error = Error;
    fn try_from(value: u8) -> Result<Self, Error> {
        BasisId::new(value)
    }
}

impl From<BasisId> for u8 {
    fn from(b: BasisId) -> u8 {
        b.0
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pure() {
            write!(f, "PB{}", self.0)
        } else {
            write!(f, "HB{}", self.0)
        }
    }
}

/// A set of rays, bit `r - 1` set for ray `r`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RaySet(u64);

impl RaySet {
    pub const EMPTY: RaySet = RaySet(0);
    pub const ALL: RaySet = RaySet((1u64 << NUM_RAYS) - 1);

    pub fn from_bits(bits: u64) -> Self {
        RaySet(bits & Self::ALL.0)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_ids<I: IntoIterator<Item = RayId>>(ids: I) -> Self {
        ids.into_iter().fold(RaySet::EMPTY, |s, r| s.with(r))
    }

    /// Builds a set from raw ray numbers. Panics on out-of-range values, so
    /// only meant for literal tables.
    pub fn of(rays: &[u8]) -> Self {
        RaySet::from_ids(rays.iter().map(|&r| RayId::new(r).expect("ray literal in range")))
    }

    pub fn with(self, r: RayId) -> Self {
        RaySet(self.0 | 1 << r.index())
    }

    pub fn contains(self, r: RayId) -> bool {
        self.0 >> r.index() & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: RaySet) -> RaySet {
        RaySet(self.0 | other.0)
    }

    pub fn intersection(self, other: RaySet) -> RaySet {
        RaySet(self.0 & other.0)
    }

    pub fn difference(self, other: RaySet) -> RaySet {
        RaySet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: RaySet) -> RaySet {
        RaySet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: RaySet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Ascending iteration.
    pub fn iter(self) -> impl Iterator<Item = RayId> {
        BitIter(self.0).map(RayId::from_index)
    }

    pub fn to_vec(self) -> Vec<u8> {
        self.iter().map(RayId::get).collect()
    }
}

impl fmt::Display for RaySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, r) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", r.get())?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<RayId> for RaySet {
    fn from_iter<I: IntoIterator<Item = RayId>>(iter: I) -> Self {
        RaySet::from_ids(iter)
    }
}

/// A set of bases, bit `b - 1` set for basis `b`.
///
/// Ordering is lexicographic on the ascending id lists, so sorting a
/// collection of sets gives the same order as sorting their printed forms
/// numerically.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct BasisSet(u32);

impl BasisSet {
    pub const EMPTY: BasisSet = BasisSet(0);
    pub const ALL: BasisSet = BasisSet((1u32 << NUM_BASES) - 1);

    pub fn from_bits(bits: u32) -> Self {
        BasisSet(bits & Self::ALL.0)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn from_ids<I: IntoIterator<Item = BasisId>>(ids: I) -> Self {
        ids.into_iter().fold(BasisSet::EMPTY, |s, b| s.with(b))
    }

    /// Literal constructor; panics on out-of-range ids.
    pub fn of(bases: &[u8]) -> Self {
        BasisSet::from_ids(bases.iter().map(|&b| BasisId::new(b).expect("basis literal in range")))
    }

    pub fn with(self, b: BasisId) -> Self {
        BasisSet(self.0 | 1 << b.index())
    }

    pub fn contains(self, b: BasisId) -> bool {
        self.0 >> b.index() & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: BasisSet) -> BasisSet {
        BasisSet(self.0 | other.0)
    }

    pub fn difference(self, other: BasisSet) -> BasisSet {
        BasisSet(self.0 & !other.0)
    }

    pub fn pure_count(self) -> usize {
        (self.0 & ((1 << NUM_PURE) - 1)).count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = BasisId> {
        BitIter(self.0 as u64).map(BasisId::from_index)
    }

    pub fn to_vec(self) -> Vec<u8> {
        self.iter().map(BasisId::get).collect()
    }
}

impl PartialOrd for BasisSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BasisSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl FromIterator<BasisId> for BasisSet {
    fn from_iter<I: IntoIterator<Item = BasisId>>(iter: I) -> Self {
        BasisSet::from_ids(iter)
    }
}

impl fmt::Display for BasisSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, b) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", b.get())?;
        }
        write!(f, "}}")
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}
