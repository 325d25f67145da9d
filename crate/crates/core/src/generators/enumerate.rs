//! Full choice-space enumeration for each algorithm.
//!
//! Choices are tried in a fixed order (pure basis, slot, then ascending ray
//! ids). Choices rejected with [`Error::InvalidChoice`] are skipped; any
//! other error aborts. Results are deduplicated by basis set, keeping the
//! first choice that produced each set and counting the rest.

use std::collections::BTreeMap;

use super::{ChoiceI, GammaChoice, Generated, Generator};
use crate::error::{Error, Result};
use crate::ids::{BasisSet, RayId};
use crate::tables::GammaIndex;

#[derive(Clone, Debug)]
pub struct Enumerated {
    /// The run from the first choice that produced this set.
    pub first: Generated,
    /// Number of valid choices that produced the same basis set.
    pub parameterizations: u32,
}

#[derive(Clone, Debug, Default)]
pub struct Enumeration {
    /// Distinct sets, sorted by basis ids.
    pub sets: Vec<Enumerated>,
    /// Valid choices run, duplicates included.
    pub valid_choices: usize,
}

impl Enumeration {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn basis_sets(&self) -> Vec<BasisSet> {
        self.sets.iter().map(|e| e.first.set.bases).collect()
    }

    /// All runs share one step profile; returns it, or `None` if they differ.
    pub fn common_steps(&self) -> Option<&[super::StepAdditions]> {
        let first = &self.sets.first()?.first.steps;
        self.sets.iter().all(|e| &e.first.steps == first).then_some(first.as_slice())
    }
}

fn collect<C, F>(choices: impl Iterator<Item = C>, mut run: F) -> Result<Enumeration>
where
    F: FnMut(C) -> Result<Generated>,
{
    let mut by_bases: BTreeMap<BasisSet, Enumerated> = BTreeMap::new();
    let mut valid = 0;
    for c in choices {
        match run(c) {
            Ok(g) => {
                valid += 1;
                by_bases
                    .entry(g.set.bases)
                    .and_modify(|e| e.parameterizations += 1)
                    .or_insert(Enumerated { first: g, parameterizations: 1 });
            }
            Err(Error::InvalidChoice { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(Enumeration { sets: by_bases.into_values().collect(), valid_choices: valid })
}

impl<'a> Generator<'a> {
    pub fn enumerate_i(&self) -> Result<Enumeration> {
        let choices = GammaIndex::all().flat_map(|gamma| {
            RayId::all().flat_map(move |sigma5| RayId::all().map(move |sigma6| ChoiceI { gamma, sigma5, sigma6 }))
        });
        collect(choices, |c| self.run_algorithm_i(c))
    }

    pub fn enumerate_ii(&self) -> Result<Enumeration> {
        collect(gamma_triples(), |c| self.run_algorithm_ii(c))
    }

    pub fn enumerate_iii(&self) -> Result<Enumeration> {
        collect(gamma_triples(), |c| self.run_algorithm_iii(c))
    }
}

/// Every ordered triple of Γ indices from three distinct pure bases.
fn gamma_triples() -> impl Iterator<Item = GammaChoice> {
    GammaIndex::all().flat_map(|a| {
        GammaIndex::all().filter(move |b| b.pb() != a.pb()).flat_map(move |b| {
            GammaIndex::all()
                .filter(move |c| c.pb() != a.pb() && c.pb() != b.pb())
                .map(move |c| GammaChoice::new(a, b, c))
        })
    })
}
