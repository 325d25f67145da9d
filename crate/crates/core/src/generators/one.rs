//! Algorithm I: one Γ-set, then three rays picked from hybrid bases.
//! Produces the 11-basis, 36-ray parity proofs.

use super::{Choice, ChoiceI, Collection, Generated, Generator, Lambda, STEPS_I};
use crate::error::{Error, Result};
use crate::ids::{RayId, RaySet};
use crate::verifier::Signature;

/// A Δ set: the pair of a Λ^1 set that reappears once Σ5 is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Delta {
    /// The hybrid basis the parent Λ^1 set belongs to.
    pub basis: crate::ids::BasisId,
    pub rays: RaySet,
}

impl<'a> Generator<'a> {
    /// Steps 1 and 2 of Algorithm I, returning the three Δ sets.
    fn first_two_steps(&self, coll: &mut Collection<'_>, c: &ChoiceI) -> Result<Vec<Delta>> {
        let lambdas = self.first_gamma(coll, c.gamma)?;

        let Some(a) = lambdas.iter().find(|l| l.rays.contains(c.sigma5)) else {
            return Err(Error::InvalidChoice {
                step: "step 2",
                reason: format!("Σ5 = {} is not in any Λ^1 set of {}", c.sigma5, c.gamma),
            });
        };
        coll.sigma.push(c.sigma5);
        let new = self.table.hybrids_containing(c.sigma5).difference(coll.bases);
        coll.step(new.iter(), STEPS_I[1])?;

        let twice = coll.counts().with_count(2);
        lambdas
            .iter()
            .filter(|l| l.basis != a.basis)
            .map(|l: &Lambda| {
                let rays = l.rays.intersection(twice);
                if rays.len() != 2 {
                    return Err(Error::Structure(format!("Δ_{} has {} rays, expected 2", l.basis.get(), rays.len())));
                }
                Ok(Delta { basis: l.basis, rays })
            })
            .collect()
    }

    /// The three Δ sets left after picking Σ5.
    pub fn delta_sets(&self, gamma: crate::tables::GammaIndex, sigma5: RayId) -> Result<Vec<Delta>> {
        let mut coll = Collection::new(self.table);
        // sigma6 is unused by the first two steps
        self.first_two_steps(&mut coll, &ChoiceI { gamma, sigma5, sigma6: sigma5 })
    }

    pub fn run_algorithm_i(&self, c: ChoiceI) -> Result<Generated> {
        self.run_i(c, false)
    }

    /// `swap` takes the two Δ sets left for steps 4 and 5 in the opposite
    /// order; the result is the same set either way.
    fn run_i(&self, c: ChoiceI, swap: bool) -> Result<Generated> {
        let mut coll = Collection::new(self.table);
        let deltas = self.first_two_steps(&mut coll, &c)?;

        // Step 3: Σ6 from one of the Δ sets; it already occurs twice.
        let Some(chosen) = deltas.iter().position(|d| d.rays.contains(c.sigma6)) else {
            return Err(Error::InvalidChoice {
                step: "step 3",
                reason: format!("Σ6 = {} is not in any Δ set", c.sigma6),
            });
        };
        coll.sigma.push(c.sigma6);
        let new = self.table.hybrids_containing(c.sigma6).difference(coll.bases);
        coll.step(new.iter(), STEPS_I[2])?;

        let remaining: Vec<Delta> = deltas.iter().enumerate().filter(|&(i, _)| i != chosen).map(|(_, d)| *d).collect();
        let [mut penultimate, mut last] = remaining[..] else {
            unreachable!("three Δ sets minus one");
        };
        if swap {
            std::mem::swap(&mut penultimate, &mut last);
        }

        // Step 4: the ray of the penultimate Δ that is missing from exactly one hybrid.
        let missing = |r: RayId, coll: &Collection<'_>| self.table.hybrids_containing(r).difference(coll.bases);
        let candidates: Vec<RayId> = penultimate.rays.iter().filter(|&r| missing(r, &coll).len() == 1).collect();
        let [sigma7] = candidates[..] else {
            return Err(Error::Structure(format!(
                "Δ_{} = {} has {} rays generating exactly one new hybrid, expected 1",
                penultimate.basis.get(),
                penultimate.rays,
                candidates.len()
            )));
        };
        coll.sigma.push(sigma7);
        let new = missing(sigma7, &coll);
        coll.step(new.iter(), STEPS_I[3])?;

        // Step 5: the ray of the last Δ that already occurs four times.
        let counts = coll.counts();
        let candidates: Vec<RayId> = last.rays.iter().filter(|&r| counts.get(r) == 4).collect();
        let [sigma8] = candidates[..] else {
            return Err(Error::Structure(format!(
                "Δ_{} = {} has {} rays occurring four times, expected 1",
                last.basis.get(),
                last.rays,
                candidates.len()
            )));
        };
        coll.sigma.push(sigma8);
        coll.step(std::iter::empty(), STEPS_I[4])?;

        coll.finish(Choice::I(c), Signature::RAYS_36)
    }
}
