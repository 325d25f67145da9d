//! Text form of algorithm choices.
//!
//! ```text
//! 36 rays:      G<i>.<j>,S5=<ray>,S6=<ray>
//! 38, 40 rays:  G<i1>.<j1>,G<i2>.<j2>,G<i3>.<j3>
//! ```

use crate::error::{Error, Result};
use crate::generators::{Choice, ChoiceI, GammaChoice, Generator};
use crate::ids::RayId;
use crate::tables::GammaIndex;

fn parse_error(token: &str, reason: impl Into<String>) -> Error {
    Error::Parse { token: token.to_string(), reason: reason.into() }
}

fn parse_gamma(token: &str) -> Result<GammaIndex> {
    let body = token.strip_prefix('G').ok_or_else(|| parse_error(token, "expected `G<i>.<j>`"))?;
    let (i, j) = body.split_once('.').ok_or_else(|| parse_error(token, "expected `G<i>.<j>`"))?;
    let i: u8 = i.parse().map_err(|_| parse_error(token, "pure basis index is not a number"))?;
    let j: u8 = j.parse().map_err(|_| parse_error(token, "slot index is not a number"))?;
    GammaIndex::new(i, j).map_err(|e| parse_error(token, e.to_string()))
}

fn parse_ray(token: &str, key: &str) -> Result<RayId> {
    let value = token
        .strip_prefix(key)
        .and_then(|v| v.strip_prefix('='))
        .ok_or_else(|| parse_error(token, format!("expected `{key}=<ray>`")))?;
    let r: u8 = value.parse().map_err(|_| parse_error(token, "ray is not a number"))?;
    RayId::new(r).map_err(|e| parse_error(token, e.to_string()))
}

/// Parses a choice for the algorithm producing `ray_count`-ray sets (36, 38
/// or 40). Only the grammar is checked; see [`validate_choice`].
pub fn choice_spec_parse(ray_count: u8, text: &str) -> Result<Choice> {
    let tokens: Vec<&str> = text.split(',').map(str::trim).collect();
    match ray_count {
        36 => {
            let [g, s5, s6] = tokens[..] else {
                return Err(parse_error(text, "expected `G<i>.<j>,S5=<ray>,S6=<ray>`"));
            };
            Ok(Choice::I(ChoiceI {
                gamma: parse_gamma(g)?,
                sigma5: parse_ray(s5, "S5")?,
                sigma6: parse_ray(s6, "S6")?,
            }))
        }
        38 | 40 => {
            let [a, b, c] = tokens[..] else {
                return Err(parse_error(text, "expected `G<i1>.<j1>,G<i2>.<j2>,G<i3>.<j3>`"));
            };
            let choice = GammaChoice::new(parse_gamma(a)?, parse_gamma(b)?, parse_gamma(c)?);
            Ok(if ray_count == 38 { Choice::II(choice) } else { Choice::III(choice) })
        }
        n => Err(parse_error(&n.to_string(), "type must be 36, 38 or 40")),
    }
}

/// Parses and runs the choice, so that precondition violations surface as
/// [`Error::InvalidChoice`] naming the step.
pub fn validate_choice(gen: &Generator<'_>, ray_count: u8, text: &str) -> Result<Choice> {
    let choice = choice_spec_parse(ray_count, text)?;
    gen.run(choice)?;
    Ok(choice)
}
