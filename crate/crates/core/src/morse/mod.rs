//! Characters, edge weights, sign chambers, and the connectivity checks on
//! ascending and descending living links.
//!
//! A character `λ` gives every edge class a signed weight. At a vertex `v`
//! a link vertex is dead when its edge has weight zero, ascending when the
//! height grows leaving `v` along it, descending otherwise. The checks ask,
//! for every simplex `σ` of dead link vertices including `σ = ∅`, that the
//! ascending and the descending part of `Lk(σ)` be `(m − dim σ − 1)`-
//! connected. Only `m ≤ 1` is supported.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub mod chambers;
pub mod character;
pub mod check;
pub mod split;
pub mod symbolic;

pub use chambers::{chamber_of, enumerate_chambers, ChamberError, SignChamber, MAX_CHAMBER_RANK};
pub use character::{
    compute_cmin, edge_weight, parse_rational, Character, CharacterError, EdgeClass, Family, ThetaEdge, ThetaKind,
};
pub use check::{
    check_link, check_theta_type1_explicit, check_xgamma_explicit, engine_disagreements, ChamberReport, Direction,
    Disagreement, Engine, LinkOutcome, SimplexCheck, VerificationReport, VertexTypeReport, Witness,
};
pub use split::{check_dead_links_full, flat_simplices, link_weights, living_dead_split, FullnessViolation, LinkSplit};
pub use symbolic::{check_block_type, check_xgamma_symbolic, SymbolicModel};

use crate::cover::{check_type1_hypotheses, check_type2_explicit, check_type2_hypotheses, VoltageCover};
use crate::cubeworld::{CubeError, ProductCubeComplex};
use crate::Budget;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorseError {
    Character(CharacterError),
    Chamber(ChamberError),
    Cube(CubeError),
    /// The symbolic engine needs connected spans and nonempty neighbour
    /// ranges for every block pair.
    MissingCertificate,
    UnsupportedTarget(i8),
    FamilyMismatch,
    /// The engine has nothing to run on for this instance.
    EngineUnavailable(Engine),
    Unsupported(&'static str),
}

impl fmt::Display for MorseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorseError::Character(e) => write!(f, "{e}"),
            MorseError::Chamber(e) => write!(f, "{e}"),
            MorseError::Cube(e) => write!(f, "{e}"),
            MorseError::MissingCertificate => {
                f.write_str("the symbolic engine needs a sizeability certificate (connected spans, every vertex meeting every opposite block)")
            }
            MorseError::UnsupportedTarget(m) => write!(f, "connectivity target m = {m} is not supported (only 0 and 1)"),
            MorseError::FamilyMismatch => f.write_str("character belongs to a different family or rank"),
            MorseError::EngineUnavailable(e) => write!(f, "the {e} engine is unavailable for this instance"),
            MorseError::Unsupported(what) => write!(f, "unsupported: {what}"),
        }
    }
}

/// What the checks run on.
#[derive(Clone, Copy, Debug)]
pub enum Instance<'a> {
    /// X_Γ with an explicit complex, a block-level model, or both.
    XGamma { n: u32, complex: Option<&'a ProductCubeComplex>, model: Option<&'a SymbolicModel> },
    /// `Θ³` and its ramified cover, Type-2 links from `cover`.
    Theta { cover: &'a VoltageCover },
}

impl Instance<'_> {
    pub fn family(&self) -> Family {
        match self {
            Instance::XGamma { n, .. } => Family::XGamma { n: *n },
            Instance::Theta { cover } => Family::Theta { n: cover.n() },
        }
    }

    pub fn supports(&self, engine: Engine) -> bool {
        match (self, engine) {
            (Instance::XGamma { complex, .. }, Engine::Explicit) => complex.is_some(),
            (Instance::XGamma { model, .. }, Engine::Symbolic) => model.is_some(),
            (Instance::Theta { .. }, _) => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub m: i8,
    /// Check every vertex of an explicit X_Γ, not one per block triple.
    pub exhaustive: bool,
    pub budget: Budget,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { m: 1, exhaustive: false, budget: Budget::default() }
    }
}

/// All vertex types of `instance` for one character.
pub fn check_chamber(
    instance: &Instance<'_>,
    engine: Engine,
    signs: String,
    lambda: &Character,
    opts: &CheckOptions,
) -> Result<ChamberReport, MorseError> {
    if lambda.family() != instance.family() {
        return Err(MorseError::FamilyMismatch);
    }
    check::validate_target(opts.m)?;
    let types = match (*instance, engine) {
        (Instance::XGamma { complex, .. }, Engine::Explicit) => {
            let x = complex.ok_or(MorseError::EngineUnavailable(engine))?;
            check_xgamma_explicit(x, lambda, opts.m, opts.exhaustive, &opts.budget)?
        }
        (Instance::XGamma { model, .. }, Engine::Symbolic) => {
            let model = model.ok_or(MorseError::MissingCertificate)?;
            check_xgamma_symbolic(model, lambda, opts.m)?
        }
        (Instance::Theta { cover }, Engine::Explicit) => {
            let mut t = check_theta_type1_explicit(cover.n(), lambda, opts.m)?;
            t.extend(check_type2_explicit(cover, lambda, opts.m)?);
            t
        }
        (Instance::Theta { cover }, Engine::Symbolic) => {
            let mut t = check_type1_hypotheses(cover.n(), lambda, opts.m)?;
            t.extend(check_type2_hypotheses(cover, lambda, opts.m)?);
            t
        }
    };
    Ok(ChamberReport::new(signs, lambda.clone(), types))
}

/// Runs [`check_chamber`] over the given characters in order.
pub fn check_theorem_hypotheses(
    instance: &Instance<'_>,
    engine: Engine,
    characters: &[(String, Character)],
    opts: &CheckOptions,
) -> Result<VerificationReport, MorseError> {
    let chambers = characters
        .iter()
        .map(|(s, l)| check_chamber(instance, engine, s.clone(), l, opts))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VerificationReport::new(instance.family(), opts.m, engine, chambers))
}

/// Every chamber as `(sign string, representative)`.
pub fn chamber_characters(family: Family) -> Result<Vec<(String, Character)>, MorseError> {
    Ok(enumerate_chambers(family)
        .map_err(MorseError::Chamber)?
        .into_iter()
        .map(|c| (c.sign_string(), c.representative))
        .collect())
}

/// Label of a single character: its sign string over the family's
/// functionals.
pub fn sign_label(lambda: &Character) -> String {
    lambda
        .sign_vector()
        .iter()
        .map(|s| match s {
            1 => '+',
            -1 => '-',
            _ => '0',
        })
        .collect()
}

#[cfg(test)]
mod tests;
