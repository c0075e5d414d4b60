//! Text grammar for family specs: a letter in `{Q, C, P, K, G}` followed by
//! a decimal integer, e.g. `Q5`, `C13`, `P4`, `K7`, `G3`.

use domprism_core::{FamilyKind, FamilySpec};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilySpecError {
    #[error("empty family spec")]
    Empty,
    #[error("unknown family letter {0:?}; expected one of Q, C, P, K, G")]
    UnknownFamily(char),
    #[error("bad parameter in family spec {0:?}")]
    BadParameter(String),
}

/// Parses `"Q5"`-style specs. Parameter range checks happen at build time.
pub fn parse_family_spec(text: &str) -> Result<FamilySpec, FamilySpecError> {
    let mut chars = text.chars();
    let letter = chars.next().ok_or(FamilySpecError::Empty)?;
    let family = match letter {
        'Q' => FamilyKind::Hypercube,
        'C' => FamilyKind::Cycle,
        'P' => FamilyKind::Path,
        'K' => FamilyKind::Complete,
        'G' => FamilyKind::ChainedFiveCycles,
        other => return Err(FamilySpecError::UnknownFamily(other)),
    };
    let rest = chars.as_str();
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return Err(FamilySpecError::BadParameter(text.to_string()));
    }
    let parameter: usize =
        rest.parse().map_err(|_| FamilySpecError::BadParameter(text.to_string()))?;
    Ok(FamilySpec { family, parameter })
}

/// True when the text looks like a family spec (used to disambiguate from
/// graph6 tokens, which can also match short letter-digit shapes).
pub fn looks_like_family_spec(text: &str) -> bool {
    parse_family_spec(text).is_ok()
}
