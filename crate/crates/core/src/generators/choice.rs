use std::fmt;

use crate::ids::RayId;
use crate::tables::GammaIndex;

/// Free parameters of Algorithm I: the Γ-set of step 1 and the rays picked
/// in steps 2 and 3. Steps 4 and 5 are forced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChoiceI {
    pub gamma: GammaIndex,
    pub sigma5: RayId,
    pub sigma6: RayId,
}

/// Three Γ-sets from three different pure bases, chosen in steps 1-3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaChoice {
    pub gammas: [GammaIndex; 3],
}

impl GammaChoice {
    pub fn new(first: GammaIndex, second: GammaIndex, third: GammaIndex) -> Self {
        GammaChoice { gammas: [first, second, third] }
    }
}

/// Free parameters of Algorithm II.
pub type ChoiceII = GammaChoice;
/// Free parameters of Algorithm III; its fourth and fifth Γ-sets are forced.
pub type ChoiceIII = GammaChoice;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Choice {
    I(ChoiceI),
    II(ChoiceII),
    III(ChoiceIII),
}

impl Choice {
    /// Number of distinct rays in the resulting sets: 36, 38 or 40.
    pub fn ray_count(&self) -> u8 {
        match self {
            Choice::I(_) => 36,
            Choice::II(_) => 38,
            Choice::III(_) => 40,
        }
    }
}

impl fmt::Display for ChoiceI {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},S5={},S6={}", self.gamma, self.sigma5.get(), self.sigma6.get())
    }
}

impl fmt::Display for GammaChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.gammas;
        write!(f, "{a},{b},{c}")
    }
}

/// The choice-spec text accepted by [`crate::io::choice_spec_parse`].
impl fmt::Display for Choice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Choice::I(c) => c.fmt(f),
            Choice::II(c) | Choice::III(c) => c.fmt(f),
        }
    }
}
