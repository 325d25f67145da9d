//! JSON export of parity-proof sets, one compact object per line.
//!
//! Field order is fixed: `type`, `bases`, `sigma`, `signature`,
//! `provenance`. All values are integers or strings, so a record read back
//! and written again is byte-identical.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{Choice, Generated};
use crate::ids::{BasisId, BasisSet};
use crate::ks_set::KsSet;
use crate::tables::BasisTable;
use crate::verifier::Signature;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    /// `algorithm-I`, `algorithm-II`, `algorithm-III` or `oracle`.
    pub source: String,
    /// Choice spec of the run, absent for oracle output.
    pub choice: Option<String>,
    /// Rays of multiplicity four in the order the algorithm chose them.
    pub sigma_order: Vec<u8>,
    /// How many valid choices yield this set (1 for single runs).
    pub parameterizations: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KsSetRecord {
    #[serde(rename = "type")]
    pub ray_count: u8,
    pub bases: Vec<u8>,
    pub sigma: Vec<u8>,
    pub signature: String,
    pub provenance: Provenance,
}

fn source_name(choice: &Choice) -> &'static str {
    match choice {
        Choice::I(_) => "algorithm-I",
        Choice::II(_) => "algorithm-II",
        Choice::III(_) => "algorithm-III",
    }
}

impl KsSetRecord {
    pub fn from_generated(g: &Generated, parameterizations: u32) -> Self {
        let canonical = g.set.canonicalize();
        KsSetRecord {
            ray_count: g.set.ray_count() as u8,
            bases: g.set.bases.to_vec(),
            sigma: canonical.sigma.iter().map(|r| r.get()).collect(),
            signature: g.set.signature.to_string(),
            provenance: Provenance {
                source: source_name(&g.choice).into(),
                choice: Some(g.choice.to_string()),
                sigma_order: g.set.sigma.iter().map(|r| r.get()).collect(),
                parameterizations,
            },
        }
    }

    pub fn from_oracle(ks: &KsSet) -> Self {
        let sigma: Vec<u8> = ks.canonicalize().sigma.iter().map(|r| r.get()).collect();
        KsSetRecord {
            ray_count: ks.ray_count() as u8,
            bases: ks.bases.to_vec(),
            sigma: sigma.clone(),
            signature: ks.signature.to_string(),
            provenance: Provenance { source: "oracle".into(), choice: None, sigma_order: sigma, parameterizations: 1 },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    /// Parses one line and checks it describes a genuine parity proof of
    /// the stated type over `table`.
    pub fn from_json(table: &BasisTable, line: &str) -> Result<Self> {
        let record: KsSetRecord = serde_json::from_str(line)?;
        record.to_ks_set(table)?;
        Ok(record)
    }

    pub fn to_ks_set(&self, table: &BasisTable) -> Result<KsSet> {
        if self.bases.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Record("bases are not strictly ascending".into()));
        }
        if self.sigma.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Record("sigma is not strictly ascending".into()));
        }
        let ids = self.bases.iter().map(|&b| BasisId::new(b)).collect::<Result<Vec<_>>>()?;
        let bases = BasisSet::from_ids(ids);
        let ks = KsSet::from_bases(table, bases)
            .ok_or_else(|| Error::Record(format!("bases {bases} are not a parity proof")))?;
        let signature: Signature = self.signature.parse()?;
        if signature != ks.signature {
            return Err(Error::Record(format!("signature {} does not match bases ({})", self.signature, ks.signature)));
        }
        if ks.ray_count() != self.ray_count as usize {
            return Err(Error::Record(format!("type {} but the bases use {} rays", self.ray_count, ks.ray_count())));
        }
        let sigma: Vec<u8> = ks.sigma.iter().map(|r| r.get()).collect();
        if sigma != self.sigma {
            return Err(Error::Record("sigma differs from the rays occurring four times".into()));
        }
        let mut order = self.provenance.sigma_order.clone();
        order.sort();
        if order != self.sigma {
            return Err(Error::Record("provenance sigma_order is not a permutation of sigma".into()));
        }
        Ok(ks)
    }
}
