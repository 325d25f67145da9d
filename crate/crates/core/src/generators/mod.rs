//! The three constructions of parity proofs from Γ-sets.
//!
//! Every algorithm is a deterministic function of a small choice record.
//! Later steps are forced; the code searches for the forced continuation and
//! reports a [`Error::Structure`] if it is missing or not unique. Each step
//! also checks how many pure and hybrid bases it added, so a run that
//! returns `Ok` has followed the expected step profile exactly.

mod choice;
mod enumerate;
mod one;
mod three_gamma;

use std::fmt;

pub use choice::{Choice, ChoiceI, ChoiceII, ChoiceIII, GammaChoice};
pub use enumerate::{Enumerated, Enumeration};
pub use one::Delta;
pub use three_gamma::XiPair;

use crate::error::{Error, Result};
use crate::ids::{BasisId, BasisSet, RayId, RaySet};
use crate::ks_set::KsSet;
use crate::tables::{
    builtin_basis_table, builtin_gamma_table, generated_bases, lambda_sets, multiplicity_profile, BasisTable,
    GammaIndex, GammaSet, GammaTable, RayCounts,
};
use crate::verifier::Signature;

/// Bases added by one algorithm step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepAdditions {
    pub pure: u8,
    pub hybrid: u8,
}

impl StepAdditions {
    pub const fn new(pure: u8, hybrid: u8) -> Self {
        StepAdditions { pure, hybrid }
    }

    pub fn total(self) -> u8 {
        self.pure + self.hybrid
    }
}

impl fmt::Display for StepAdditions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}PB+{}HB", self.pure, self.hybrid)
    }
}

pub const STEPS_I: [StepAdditions; 5] = [
    StepAdditions::new(1, 4),
    StepAdditions::new(0, 3),
    StepAdditions::new(0, 2),
    StepAdditions::new(0, 1),
    StepAdditions::new(0, 0),
];

pub const STEPS_II: [StepAdditions; 4] =
    [StepAdditions::new(1, 4), StepAdditions::new(1, 3), StepAdditions::new(1, 2), StepAdditions::new(0, 1)];

pub const STEPS_III: [StepAdditions; 5] = [
    StepAdditions::new(1, 4),
    StepAdditions::new(1, 3),
    StepAdditions::new(1, 2),
    StepAdditions::new(1, 1),
    StepAdditions::new(1, 0),
];

/// Output of one algorithm run.
#[derive(Clone, Debug)]
pub struct Generated {
    pub set: KsSet,
    pub choice: Choice,
    /// Bases in the order they were brought in.
    pub order: Vec<BasisId>,
    pub steps: Vec<StepAdditions>,
}

/// A Λ set: the rays of a generated hybrid basis that came from the other
/// pure basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lambda {
    pub basis: BasisId,
    pub rays: RaySet,
}

/// The growing collection of bases during a run.
struct Collection<'a> {
    table: &'a BasisTable,
    bases: BasisSet,
    order: Vec<BasisId>,
    sigma: Vec<RayId>,
    steps: Vec<StepAdditions>,
}

impl<'a> Collection<'a> {
    fn new(table: &'a BasisTable) -> Self {
        Collection { table, bases: BasisSet::EMPTY, order: Vec::new(), sigma: Vec::new(), steps: Vec::new() }
    }

    /// Adds the bases not already present, in the given order, and checks
    /// the step added exactly `expected`. Returns the newly added bases.
    fn step<I>(&mut self, bases: I, expected: StepAdditions) -> Result<Vec<BasisId>>
    where
        I: IntoIterator<Item = BasisId>,
    {
        let mut added = Vec::new();
        for b in bases {
            if !self.bases.contains(b) {
                self.bases = self.bases.with(b);
                self.order.push(b);
                added.push(b);
            }
        }
        let pure = added.iter().filter(|b| b.is_pure()).count() as u8;
        let got = StepAdditions::new(pure, added.len() as u8 - pure);
        let n = self.steps.len() + 1;
        self.steps.push(got);
        if got != expected {
            return Err(Error::Structure(format!("step {n} added {got}, expected {expected}")));
        }
        Ok(added)
    }

    fn choose_gamma(&mut self, g: &GammaSet, expected: StepAdditions) -> Result<Vec<BasisId>> {
        let gen = generated_bases(self.table, g)?;
        self.sigma.extend(g.rays.iter());
        self.step(std::iter::once(gen.pure).chain(gen.hybrids), expected)
    }

    fn counts(&self) -> RayCounts {
        multiplicity_profile(self.table, self.bases)
    }

    fn finish(self, choice: Choice, expected: Signature) -> Result<Generated> {
        let set = KsSet::from_bases(self.table, self.bases)
            .ok_or_else(|| Error::Structure(format!("bases {} do not form a parity proof", self.bases)))?;
        if set.signature != expected {
            return Err(Error::Structure(format!("generated type {}, expected {expected}", set.signature)));
        }
        let chosen = RaySet::from_ids(self.sigma.iter().copied());
        if chosen != set.sigma_set() || chosen.len() != self.sigma.len() {
            return Err(Error::Structure(format!(
                "chosen rays {chosen} differ from the rays occurring four times {}",
                set.sigma_set()
            )));
        }
        Ok(Generated { set: KsSet { sigma: self.sigma, ..set }, choice, order: self.order, steps: self.steps })
    }
}

/// Runs the algorithms against a basis table and its Γ-table.
#[derive(Clone, Copy, Debug)]
pub struct Generator<'a> {
    pub table: &'a BasisTable,
    pub gammas: &'a GammaTable,
}

impl Generator<'static> {
    pub fn builtin() -> Self {
        Generator { table: builtin_basis_table(), gammas: builtin_gamma_table() }
    }
}

impl<'a> Generator<'a> {
    pub fn new(table: &'a BasisTable, gammas: &'a GammaTable) -> Self {
        Generator { table, gammas }
    }

    /// Runs whichever algorithm `choice` belongs to.
    pub fn run(&self, choice: Choice) -> Result<Generated> {
        match choice {
            Choice::I(c) => self.run_algorithm_i(c),
            Choice::II(c) => self.run_algorithm_ii(c),
            Choice::III(c) => self.run_algorithm_iii(c),
        }
    }

    fn gamma(&self, index: GammaIndex) -> GammaSet {
        self.gammas.get(index)
    }

    /// The rays of hybrid `h` outside pure basis `pb`.
    fn other_half(&self, h: BasisId, pb: BasisId) -> Lambda {
        Lambda { basis: h, rays: self.table.rays(h).difference(self.table.rays(pb)) }
    }

    /// Step 1 shared by all three algorithms: choose a Γ-set, bring in its
    /// pure basis and four hybrids, and read off the four Λ^1 sets.
    fn first_gamma(&self, coll: &mut Collection<'_>, index: GammaIndex) -> Result<Vec<Lambda>> {
        let g = self.gamma(index);
        let added = coll.choose_gamma(&g, STEPS_I[0])?;
        let lambdas = lambda_sets(self.table, coll.bases);
        let out: Vec<Lambda> =
            added.iter().filter(|b| !b.is_pure()).map(|&h| Lambda { basis: h, rays: lambdas[&h] }).collect();
        for l in &out {
            if l.rays.len() != 4 {
                return Err(Error::Structure(format!("Λ_{} has {} rays, expected 4", l.basis.get(), l.rays.len())));
            }
        }
        Ok(out)
    }
}

pub fn run_algorithm_i(c: ChoiceI) -> Result<Generated> {
    Generator::builtin().run_algorithm_i(c)
}

pub fn run_algorithm_ii(c: ChoiceII) -> Result<Generated> {
    Generator::builtin().run_algorithm_ii(c)
}

pub fn run_algorithm_iii(c: ChoiceIII) -> Result<Generated> {
    Generator::builtin().run_algorithm_iii(c)
}

pub fn enumerate_i() -> Result<Enumeration> {
    Generator::builtin().enumerate_i()
}

pub fn enumerate_ii() -> Result<Enumeration> {
    Generator::builtin().enumerate_ii()
}

pub fn enumerate_iii() -> Result<Enumeration> {
    Generator::builtin().enumerate_iii()
}

pub use crate::ks_set::canonicalize;
