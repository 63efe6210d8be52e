//! Text grammars for the command line: `"4,5,6"` for a semigroup and
//! `"5,12@3,5"` or `"{5,8,10->}@3,5"` for an ideal.

use crate::error::{Error, Result};
use crate::ideal::SemigroupIdeal;
use crate::semigroup::NumericalSemigroup;

pub fn parse_integer_list(text: &str) -> Result<Vec<i64>> {
    let items: Vec<&str> = text.split(',').map(str::trim).collect();
    if items.iter().all(|s| s.is_empty()) {
        return Err(Error::EmptyInput);
    }
    items
        .iter()
        .map(|s| {
            s.parse::<i64>()
                .map_err(|_| Error::Parse(format!("`{s}` is not an integer")))
        })
        .collect()
}

pub fn parse_semigroup(text: &str) -> Result<NumericalSemigroup> {
    NumericalSemigroup::from_generators(&parse_integer_list(text)?)
}

/// Generators or a tail-notation set, over the given semigroup.
pub fn parse_ideal_over(h: &NumericalSemigroup, text: &str) -> Result<SemigroupIdeal> {
    if text.trim_start().starts_with('{') {
        SemigroupIdeal::from_tail_notation(h, text)
    } else {
        SemigroupIdeal::from_generators(h, &parse_integer_list(text)?)
    }
}

/// `"gens@H"`.
pub fn parse_ideal(text: &str) -> Result<SemigroupIdeal> {
    let (ideal, semigroup) = text
        .rsplit_once('@')
        .ok_or_else(|| Error::Parse(format!("expected `gens@semigroup`, got `{text}`")))?;
    parse_ideal_over(&parse_semigroup(semigroup)?, ideal)
}
