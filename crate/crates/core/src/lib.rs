//! Exact power indices and approximation gaps for binary voting games.
//!
//! Games can be weighted (`[q; w_1, ..., w_n]`), complete (listed by their
//! shift-minimal winning coalitions), explicit, or Boolean combinations of
//! weighted games. On top of these the crate computes Shapley-Shubik and
//! Penrose-Banzhaf power vectors as exact rationals, enumerates weighted and
//! complete simple games for small voter counts, and measures how well the
//! power vectors of complete games can be matched by weighted ones.

pub mod coalition;
pub mod enumeration;
pub mod error;
pub mod games;
pub mod geometry;
pub mod indices;
pub mod inverse;
pub mod number;

pub use coalition::Coalition;
pub use error::{Error, Result};
pub use games::{
    parse_game, BoolCombo, ComboExpr, CompleteGame, Desirability, ExplicitGame, Game, WeightedGame,
};
pub use geometry::{distance, omega, GapReport, Metric, VectorStore};
pub use indices::{pbi, ssi, IndexKind, PowerVector};
pub use number::Rational;
