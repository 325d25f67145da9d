use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::ids::{BasisSet, RayId, RaySet};
use crate::tables::{multiplicity_profile, BasisTable};
use crate::verifier::Signature;

/// A parity-proof set of bases.
///
/// Equality, ordering and hashing look only at `bases`. `sigma` keeps the
/// rays of multiplicity four in the order they were chosen; sets built
/// straight from a basis list carry them ascending.
#[derive(Clone, Debug)]
pub struct KsSet {
    pub bases: BasisSet,
    pub sigma: Vec<RayId>,
    pub signature: Signature,
}

impl KsSet {
    /// Wraps a basis collection if it is a parity proof.
    pub fn from_bases(table: &BasisTable, bases: BasisSet) -> Option<KsSet> {
        let counts = multiplicity_profile(table, bases);
        let signature = Signature::classify(&counts, bases.len())?;
        Some(KsSet { bases, sigma: counts.with_count(4).iter().collect(), signature })
    }

    pub fn sigma_set(&self) -> RaySet {
        RaySet::from_ids(self.sigma.iter().copied())
    }

    /// Rays used by at least one basis.
    pub fn ray_count(&self) -> usize {
        self.signature.n_twice as usize + self.signature.n_four as usize
    }

    /// Same set with `sigma` sorted ascending.
    pub fn canonicalize(&self) -> KsSet {
        let mut sigma = self.sigma.clone();
        sigma.sort();
        KsSet { bases: self.bases, sigma, signature: self.signature }
    }
}

impl PartialEq for KsSet {
    fn eq(&self, other: &Self) -> bool {
        self.bases == other.bases
    }
}

impl Eq for KsSet {}

impl Hash for KsSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bases.hash(state)
    }
}

impl PartialOrd for KsSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for KsSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bases.cmp(&other.bases)
    }
}

pub fn canonicalize(ks: &KsSet) -> KsSet {
    ks.canonicalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::builtin_basis_table;

    #[test]
    fn from_bases_and_canonical_form() {
        let t = builtin_basis_table();
        let bases = BasisSet::of(&[1, 6, 7, 8, 10, 14, 15, 17, 20, 21, 25]);
        let ks = KsSet::from_bases(t, bases).unwrap();
        assert_eq!(ks.bases.to_vec(), vec![1, 6, 7, 8, 10, 14, 15, 17, 20, 21, 25]);
        assert_eq!(ks.sigma_set(), RaySet::of(&[1, 2, 3, 5, 13, 23, 32, 35]));
        assert_eq!(ks.ray_count(), 36);

        let shuffled = KsSet { sigma: ks.sigma.iter().rev().copied().collect(), ..ks.clone() };
        assert_eq!(shuffled.canonicalize().sigma, ks.sigma);
        assert_eq!(shuffled, ks);
        let once = shuffled.canonicalize();
        assert_eq!(once.canonicalize().sigma, once.sigma);

        assert!(KsSet::from_bases(t, BasisSet::of(&[1])).is_none());
    }
}
