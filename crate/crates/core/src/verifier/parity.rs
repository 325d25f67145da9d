use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::ids::{BasisId, BasisSet, RaySet, BASIS_SIZE};
use crate::tables::{multiplicity_profile, BasisTable, RayCounts};

/// Type of a parity proof: `n_twice` rays occur twice and `n_four` rays four
/// times across `n_bases` bases of eight rays.
///
/// Renders as `28_2 8_4 - 11_8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub n_twice: u8,
    pub n_four: u8,
    pub n_bases: u8,
}

impl Signature {
    pub const RAYS_36: Signature = Signature { n_twice: 28, n_four: 8, n_bases: 11 };
    pub const RAYS_38: Signature = Signature { n_twice: 24, n_four: 14, n_bases: 13 };
    pub const RAYS_40: Signature = Signature { n_twice: 20, n_four: 20, n_bases: 15 };

    /// Classifies a parity-proof profile. Returns `None` unless the basis
    /// count is odd and every count is 0, 2 or 4.
    pub fn classify(counts: &RayCounts, n_bases: usize) -> Option<Signature> {
        if n_bases.is_multiple_of(2) {
            return None;
        }
        let mut sig = Signature { n_twice: 0, n_four: 0, n_bases: n_bases as u8 };
        for (_, c) in counts.iter() {
            match c {
                0 => {}
                2 => sig.n_twice += 1,
                4 => sig.n_four += 1,
                _ => return None,
            }
        }
        Some(sig)
    }

    pub fn ray_count(self) -> usize {
        self.n_twice as usize + self.n_four as usize
    }

    /// 2·twice + 4·four = 8·bases
    pub fn is_balanced(self) -> bool {
        2 * self.n_twice as usize + 4 * self.n_four as usize == BASIS_SIZE * self.n_bases as usize
    }
}

impl Ord for Signature {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n_bases, self.n_four, self.n_twice).cmp(&(other.n_bases, other.n_four, other.n_twice))
    }
}

impl PartialOrd for Signature {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_2 {}_4 - {}_8", self.n_twice, self.n_four, self.n_bases)
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse { token: s.to_string(), reason: "expected `a_2 b_4 - n_8`".into() };
        let parts: Vec<&str> = s.split_whitespace().collect();
        let [twice, four, "-", bases] = parts.as_slice() else {
            return Err(bad());
        };
        let field = |p: &str, suffix: &str| p.strip_suffix(suffix).and_then(|n| n.parse::<u8>().ok());
        Ok(Signature {
            n_twice: field(twice, "_2").ok_or_else(bad)?,
            n_four: field(four, "_4").ok_or_else(bad)?,
            n_bases: field(bases, "_8").ok_or_else(bad)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityCertificate {
    pub bases: BasisSet,
    pub multiplicities: RayCounts,
    /// Present exactly when the certificate is valid.
    pub signature: Option<Signature>,
    pub valid: bool,
}

/// Parity proof check by counting: odd number of bases, every ray an even
/// number of times.
pub fn verify_parity(table: &BasisTable, bases: BasisSet) -> ParityCertificate {
    let multiplicities = multiplicity_profile(table, bases);
    let odd_bases = bases.len() % 2 == 1;
    let all_even = multiplicities.iter().all(|(_, c)| c % 2 == 0);
    let valid = odd_bases && all_even;
    let signature = if valid { Signature::classify(&multiplicities, bases.len()) } else { None };
    ParityCertificate { bases, multiplicities, signature, valid }
}

/// 40-bit occurrence vector of a basis over GF(2).
pub type OccurrenceMask = RaySet;

pub fn basis_mask(table: &BasisTable, b: BasisId) -> OccurrenceMask {
    table.rays(b)
}
