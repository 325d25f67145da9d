//! Algorithms II and III. Both pick three Γ-sets from three different pure
//! bases; II closes with one forced hybrid basis (13 bases, 38 rays), III
//! with two forced Γ-sets from the remaining pure bases (15 bases, 40 rays).

use super::{Choice, Collection, GammaChoice, Generated, Generator, Lambda, STEPS_II, STEPS_III};
use crate::error::{Error, Result};
use crate::ids::{BasisId, RaySet, NUM_PURE};
use crate::tables::GammaIndex;
use crate::verifier::Signature;

/// Ξ^i_j = Λ^1_i ∩ Λ^2_j together with its complement in Λ^1_i ∪ Λ^2_j.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct XiPair {
    pub first: BasisId,
    pub second: BasisId,
    pub xi: RaySet,
    pub not_xi: RaySet,
}

/// The six Λ sets left after step 3, grouped by the step that produced them.
struct AfterThree {
    first: Vec<Lambda>,
    second: Vec<Lambda>,
    third: Vec<Lambda>,
    used_pure: [u8; 3],
}

impl AfterThree {
    fn all(&self) -> impl Iterator<Item = &Lambda> {
        self.first.iter().chain(&self.second).chain(&self.third)
    }
}

impl<'a> Generator<'a> {
    /// Step 2: the second Γ-set must contain three rays of one Λ^1 set.
    /// Returns (Λ^1 sets other than the one used, Λ^2 sets).
    fn second_gamma(
        &self,
        coll: &mut Collection<'_>,
        lambda1: &[Lambda],
        first: GammaIndex,
        second: GammaIndex,
    ) -> Result<(Vec<Lambda>, Vec<Lambda>)> {
        if second.pb() == first.pb() {
            return Err(Error::InvalidChoice {
                step: "step 2",
                reason: format!("{second} comes from the same pure basis as {first}"),
            });
        }
        let g2 = self.gamma(second);
        let Some(a) = lambda1.iter().find(|l| l.rays.intersection(g2.rays).len() == 3) else {
            return Err(Error::InvalidChoice {
                step: "step 2",
                reason: format!("{second} does not contain three rays of any Λ^1 set of {first}"),
            });
        };
        let added = coll.choose_gamma(&g2, STEPS_II[1])?;
        let pb = second.pure_basis();
        let lambda2 = added.iter().filter(|b| !b.is_pure()).map(|&h| self.other_half(h, pb)).collect();
        let rest = lambda1.iter().filter(|l| l.basis != a.basis).copied().collect();
        Ok((rest, lambda2))
    }

    fn xi_pairs(&self, lambda1: &[Lambda], lambda2: &[Lambda]) -> Result<Vec<XiPair>> {
        let mut pairs = Vec::new();
        for l1 in lambda1 {
            for l2 in lambda2 {
                let xi = l1.rays.intersection(l2.rays);
                if xi.is_empty() {
                    continue;
                }
                let not_xi = l1.rays.union(l2.rays).difference(xi);
                if xi.len() != 2 || not_xi.len() != 4 {
                    return Err(Error::Structure(format!(
                        "Ξ^{}_{} = {xi} has {} rays, expected 2",
                        l1.basis.get(),
                        l2.basis.get(),
                        xi.len()
                    )));
                }
                pairs.push(XiPair { first: l1.basis, second: l2.basis, xi, not_xi });
            }
        }
        if pairs.len() != 3 {
            return Err(Error::Structure(format!("found {} Ξ sets, expected 3", pairs.len())));
        }
        Ok(pairs)
    }

    /// The three Ξ sets produced by the first two Γ-sets.
    pub fn xi_sets(&self, first: GammaIndex, second: GammaIndex) -> Result<Vec<XiPair>> {
        let mut coll = Collection::new(self.table);
        let lambda1 = self.first_gamma(&mut coll, first)?;
        let (rest, lambda2) = self.second_gamma(&mut coll, &lambda1, first, second)?;
        self.xi_pairs(&rest, &lambda2)
    }

    fn first_three_steps(&self, coll: &mut Collection<'_>, c: &GammaChoice) -> Result<AfterThree> {
        let [g1, g2, g3] = c.gammas;
        let lambda1 = self.first_gamma(coll, g1)?;
        let (lambda1, lambda2) = self.second_gamma(coll, &lambda1, g1, g2)?;
        let pairs = self.xi_pairs(&lambda1, &lambda2)?;

        // Step 3: Γ3 = Ξ plus two rays of ¬Ξ, for one of the three pairs.
        if g3.pb() == g1.pb() || g3.pb() == g2.pb() {
            return Err(Error::InvalidChoice {
                step: "step 3",
                reason: format!("{g3} reuses a pure basis already chosen"),
            });
        }
        let gamma3 = self.gamma(g3);
        let Some(pair) =
            pairs.iter().find(|p| p.xi.is_subset(gamma3.rays) && gamma3.rays.is_subset(p.xi.union(p.not_xi)))
        else {
            return Err(Error::InvalidChoice {
                step: "step 3",
                reason: format!("{g3} is not a Ξ set plus two rays of its complement"),
            });
        };
        let added = coll.choose_gamma(&gamma3, STEPS_II[2])?;
        let pb3 = g3.pure_basis();
        let third: Vec<Lambda> = added.iter().filter(|b| !b.is_pure()).map(|&h| self.other_half(h, pb3)).collect();

        Ok(AfterThree {
            first: lambda1.into_iter().filter(|l| l.basis != pair.first).collect(),
            second: lambda2.into_iter().filter(|l| l.basis != pair.second).collect(),
            third,
            used_pure: [g1.pb(), g2.pb(), g3.pb()],
        })
    }

    pub fn run_algorithm_ii(&self, c: GammaChoice) -> Result<Generated> {
        let mut coll = Collection::new(self.table);
        let state = self.first_three_steps(&mut coll, &c)?;

        // Step 4: across the six Λ sets, rays seen an odd number of times
        // (two of them three times, six once) make up the closing basis.
        let mut seen = [0u8; crate::ids::NUM_RAYS];
        for l in state.all() {
            for r in l.rays.iter() {
                seen[r.index()] += 1;
            }
        }
        let with = |n: u8| -> RaySet {
            seen.iter()
                .enumerate()
                .filter(|&(_, &c)| c == n)
                .map(|(i, _)| crate::ids::RayId::new(i as u8 + 1).unwrap())
                .collect()
        };
        let (thrice, once) = (with(3), with(1));
        if thrice.len() != 2 || once.len() != 6 {
            return Err(Error::Structure(format!(
                "closing step found {} rays three times and {} once, expected 2 and 6",
                thrice.len(),
                once.len()
            )));
        }
        let closing = thrice.union(once);
        let Some(last) = self.table.find_basis(closing).filter(|b| !b.is_pure()) else {
            return Err(Error::Structure(format!("rays {closing} are not a hybrid basis")));
        };
        coll.sigma.extend(thrice.iter());
        coll.step([last], STEPS_II[3])?;

        coll.finish(Choice::II(c), Signature::RAYS_38)
    }

    pub fn run_algorithm_iii(&self, c: GammaChoice) -> Result<Generated> {
        let mut coll = Collection::new(self.table);
        let state = self.first_three_steps(&mut coll, &c)?;

        let remaining: Vec<u8> = (1..=NUM_PURE as u8).filter(|p| !state.used_pure.contains(p)).collect();
        for (&pb, expected) in remaining.iter().zip(&STEPS_III[3..]) {
            let pure = self.table.rays(BasisId::pure(pb)?);
            let pick = |group: &[Lambda]| -> Result<RaySet> {
                let inside: Vec<&Lambda> = group.iter().filter(|l| l.rays.is_subset(pure)).collect();
                match inside[..] {
                    [l] => Ok(l.rays),
                    _ => {
                        Err(Error::Structure(format!("{} Λ sets of one step lie in PB{pb}, expected 1", inside.len())))
                    }
                }
            };
            let (a, b, d) = (pick(&state.first)?, pick(&state.second)?, pick(&state.third)?);
            let rays = a.intersection(b).union(a.intersection(d)).union(b.intersection(d));
            let Some(g) = self.gammas.find(rays).filter(|g| g.index.pb() == pb) else {
                return Err(Error::Structure(format!("forced set {rays} is not a Γ-set of PB{pb}")));
            };
            coll.choose_gamma(&g, *expected)?;
        }

        coll.finish(Choice::III(c), Signature::RAYS_40)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(pb: u8, slot: u8) -> GammaIndex {
        GammaIndex::new(pb, slot).unwrap()
    }

    fn ids(v: &[BasisId]) -> Vec<u8> {
        v.iter().map(|b| b.get()).collect()
    }

    #[test]
    fn xi_example() {
        let gen = Generator::builtin();
        let pairs = gen.xi_sets(gi(1, 1), gi(2, 4)).unwrap();
        let got: Vec<(u8, u8, Vec<u8>, Vec<u8>)> =
            pairs.iter().map(|p| (p.first.get(), p.second.get(), p.xi.to_vec(), p.not_xi.to_vec())).collect();
        assert_eq!(
            got,
            vec![
                (7, 14, vec![23, 24], vec![19, 20, 21, 22]),
                (8, 15, vec![31, 32], vec![27, 28, 29, 30]),
                (10, 16, vec![34, 36], vec![33, 35, 38, 39]),
            ]
        );
    }

    #[test]
    fn algorithm_ii_example() {
        let out = Generator::builtin().run_algorithm_ii(GammaChoice::new(gi(1, 1), gi(2, 4), gi(3, 7))).unwrap();
        assert_eq!(ids(&out.order), vec![1, 6, 7, 8, 10, 2, 14, 15, 16, 3, 20, 22, 25]);
        let sigma: Vec<u8> = out.set.sigma.iter().map(|r| r.get()).collect();
        assert_eq!(sigma, vec![1, 2, 3, 5, 9, 13, 14, 15, 19, 21, 23, 24, 32, 34]);
        assert_eq!(out.steps, STEPS_II.to_vec());
    }

    #[test]
    fn algorithm_iii_example() {
        let out = Generator::builtin().run_algorithm_iii(GammaChoice::new(gi(1, 1), gi(2, 4), gi(3, 7))).unwrap();
        assert_eq!(ids(&out.order), vec![1, 6, 7, 8, 10, 2, 14, 15, 16, 3, 20, 22, 4, 24, 5]);
        let sigma: Vec<u8> = out.set.sigma.iter().map(|r| r.get()).collect();
        assert_eq!(sigma, vec![1, 2, 3, 5, 9, 13, 14, 15, 19, 21, 23, 24, 28, 30, 31, 32, 33, 34, 36, 38]);
        assert_eq!(out.steps, STEPS_III.to_vec());
    }

    #[test]
    fn invalid_choices() {
        let gen = Generator::builtin();
        let err = |c| gen.run_algorithm_ii(c).unwrap_err();
        assert!(matches!(
            err(GammaChoice::new(gi(1, 1), gi(1, 2), gi(3, 7))),
            Error::InvalidChoice { step: "step 2", .. }
        ));
        // Γ^{21} = {9,10,11,13} shares only ray 13 with Λ^1_6
        assert!(matches!(
            err(GammaChoice::new(gi(1, 1), gi(2, 1), gi(3, 7))),
            Error::InvalidChoice { step: "step 2", .. }
        ));
        assert!(matches!(
            err(GammaChoice::new(gi(1, 1), gi(2, 4), gi(2, 7))),
            Error::InvalidChoice { step: "step 3", .. }
        ));
        assert!(matches!(
            err(GammaChoice::new(gi(1, 1), gi(2, 4), gi(3, 1))),
            Error::InvalidChoice { step: "step 3", .. }
        ));
    }
}
