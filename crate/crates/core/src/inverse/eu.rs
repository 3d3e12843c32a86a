//! Council-style voting rules built from member populations.

use crate::error::{Error, Result};
use crate::games::{BoolCombo, ComboExpr, WeightedGame};
use crate::number::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Population {
    pub name: String,
    pub population: u64,
}

/// Lines `name,population`; blank lines and `#` comments are skipped.
pub fn parse_populations(text: &str) -> Result<Vec<Population>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: &str| Error::Syntax {
            pos: lineno + 1,
            msg: format!("line {}: {msg}", lineno + 1),
        };
        let (name, pop) = line
            .rsplit_once(',')
            .ok_or_else(|| bad("expected 'name,population'"))?;
        let population = pop
            .trim()
            .parse::<u64>()
            .map_err(|_| bad("population is not a non-negative integer"))?;
        out.push(Population {
            name: name.trim().to_string(),
            population,
        });
    }
    if out.is_empty() {
        return Err(Error::InvalidTarget("no members listed".into()));
    }
    Ok(out)
}

/// `([0.55 n; 1, ..., 1] ∧ [0.65; p_1, ..., p_n]) ∨ [n - 3; 1, ..., 1]` with
/// `p_i` the population share of member `i`.
///
/// With `per_mille` set, each share is rounded half-up to a multiple of
/// 1/1000 before building the population leaf, which keeps the index
/// computation small; otherwise the exact shares are used.
pub fn eu_council(members: &[Population], per_mille: bool) -> Result<BoolCombo> {
    let n = members.len();
    if n < 4 {
        return Err(Error::VoterCount {
            n,
            min: 4,
            max: crate::coalition::MAX_VOTERS,
        });
    }
    let total: u128 = members.iter().map(|m| m.population as u128).sum();
    if total == 0 {
        return Err(Error::InvalidWeights("total population is zero".into()));
    }
    let total = i128::try_from(total).map_err(|_| Error::Overflow("population total"))?;
    let shares: Vec<Rational> = members
        .iter()
        .map(|m| {
            let p = Rational::new(m.population as i128, total);
            if per_mille {
                Rational::new((p * 1000 + Rational::new(1, 2)).floor().to_integer(), 1000)
            } else {
                p
            }
        })
        .collect();
    let ones = vec![Rational::from_integer(1); n];
    let states = WeightedGame::new(Rational::new(55 * n as i128, 100), ones.clone())?;
    let people = WeightedGame::new(Rational::new(65, 100), shares)?;
    let blocking = WeightedGame::new(Rational::from_integer(n as i128 - 3), ones)?;
    BoolCombo::new(ComboExpr::or(
        ComboExpr::and(ComboExpr::Leaf(states), ComboExpr::Leaf(people)),
        ComboExpr::Leaf(blocking),
    ))
}
