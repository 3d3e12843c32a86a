//! Simple games: representations, evaluation, structural predicates and algebra.

mod combo;
mod complete;
mod explicit;
pub mod lp;
mod parse;
mod weighted;

use std::fmt;

pub use combo::{BoolCombo, ComboExpr};
pub use complete::CompleteGame;
pub use explicit::{Desirability, ExplicitGame, MAX_EXPLICIT_VOTERS, MAX_ORBIT_VOTERS};
pub use parse::parse_game;
pub use weighted::WeightedGame;

use crate::coalition::Coalition;
use crate::error::Result;

/// Any of the supported game representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Game {
    Explicit(ExplicitGame),
    Weighted(WeightedGame),
    Complete(CompleteGame),
    Combo(BoolCombo),
}

impl Game {
    pub fn n(&self) -> usize {
        match self {
            Game::Explicit(g) => g.n(),
            Game::Weighted(g) => g.n(),
            Game::Complete(g) => g.n(),
            Game::Combo(g) => g.n(),
        }
    }

    pub fn is_winning(&self, s: Coalition) -> bool {
        match self {
            Game::Explicit(g) => g.is_winning(s),
            Game::Weighted(g) => g.is_winning(s),
            Game::Complete(g) => g.is_winning(s),
            Game::Combo(g) => g.is_winning(s),
        }
    }

    pub fn to_explicit(&self) -> Result<ExplicitGame> {
        match self {
            Game::Explicit(g) => Ok(g.clone()),
            Game::Weighted(g) => g.to_explicit(),
            Game::Complete(g) => g.to_explicit(),
            Game::Combo(g) => g.to_explicit(),
        }
    }

    /// Appends `k` null voters, keeping the representation.
    pub fn add_null_voters(&self, k: usize) -> Result<Game> {
        Ok(match self {
            Game::Explicit(g) => Game::Explicit(g.with_null_voters(k)?),
            Game::Weighted(g) => Game::Weighted(g.with_null_voters(k)?),
            Game::Complete(g) => Game::Complete(g.with_null_voters(k)?),
            Game::Combo(g) => Game::Combo(g.with_null_voters(k)?),
        })
    }
}

impl From<WeightedGame> for Game {
    fn from(g: WeightedGame) -> Game {
        Game::Weighted(g)
    }
}

impl From<CompleteGame> for Game {
    fn from(g: CompleteGame) -> Game {
        Game::Complete(g)
    }
}

impl From<ExplicitGame> for Game {
    fn from(g: ExplicitGame) -> Game {
        Game::Explicit(g)
    }
}

impl From<BoolCombo> for Game {
    fn from(g: BoolCombo) -> Game {
        Game::Combo(g)
    }
}

impl std::str::FromStr for Game {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Game> {
        parse_game(s)
    }
}

impl fmt::Display for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Game::Explicit(g) => write!(f, "{g}"),
            Game::Weighted(g) => write!(f, "{g}"),
            Game::Complete(g) => write!(f, "{g}"),
            Game::Combo(g) => write!(f, "{g}"),
        }
    }
}

impl fmt::Debug for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
