//! Inverse power index problem: find a weighted game whose power vector is
//! closest to a given target.
//!
//! [`ExactSolver`] scans every weighted game on `n <= 8` voters and returns a
//! true minimiser ([`Mode::ExactMin`]). [`inverse_heuristic`] runs a local
//! search over integer weights for any `n`; its distances are only upper
//! bounds on the minimum ([`Mode::HeuristicUpperBound`]). Only `ExactMin`
//! distances may be used as lower bounds on the approximation gap.

mod eu;
mod heuristic;
mod target;

pub use eu::{eu_council, parse_populations, Population};
pub use heuristic::{inverse_heuristic, HeuristicConfig};
pub use target::Target;

use std::collections::HashMap;
use std::fmt;

use crate::enumeration::{fold_complete, GameCatalog, GameClass, MAX_POSET_VOTERS};
use crate::error::{Error, Result};
use crate::games::{CompleteGame, Game, WeightedGame};
use crate::geometry::{Metric, VectorKey, VectorStore};
use crate::indices::{power_vector, Engine, IndexKind, PowerVector, SmallProfile};
use crate::number::{decimal7, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    ExactMin,
    HeuristicUpperBound,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::ExactMin => "EXACT_MIN",
            Mode::HeuristicUpperBound => "HEURISTIC_UPPER_BOUND",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseResult {
    pub game: WeightedGame,
    pub vector: PowerVector,
    pub distance: Rational,
    pub metric: Metric,
    pub mode: Mode,
    /// Seed of the randomised search, if one ran.
    pub seed: Option<u64>,
    /// Candidate weight vectors evaluated (zero for catalog scans).
    pub evaluations: u64,
}

impl InverseResult {
    pub fn distance_decimal(&self) -> String {
        decimal7(&self.distance)
    }
}

impl fmt::Display for InverseResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} = {} [{}]",
            self.game,
            self.metric,
            self.distance_decimal(),
            self.mode
        )
    }
}

/// Every distinct power vector of the weighted games on `n` voters, each
/// with the smallest complete game producing it.
pub struct ExactSolver {
    n: usize,
    kind: IndexKind,
    store: VectorStore<CompleteGame>,
}

impl ExactSolver {
    /// Streams all complete games on `n <= 8` voters. At `n = 8` this is a
    /// long computation (about sixteen million linear programs).
    pub fn new(n: usize, kind: IndexKind) -> Result<ExactSolver> {
        if !(1..=MAX_POSET_VOTERS).contains(&n) {
            return Err(Error::VoterCount {
                n,
                min: 1,
                max: MAX_POSET_VOTERS,
            });
        }
        let best = fold_complete(
            n,
            HashMap::<VectorKey, CompleteGame>::new,
            |acc, poset, u| {
                let key = VectorKey::from_profile(&SmallProfile::from_table(n, u.table), kind);
                let game = u.to_game();
                if acc.get(&key).is_some_and(|g| *g <= game) {
                    return;
                }
                if u.certificate(poset).is_some() {
                    acc.insert(key, game);
                }
            },
            |mut a, b| {
                for (k, g) in b {
                    match a.get(&k) {
                        Some(h) if *h <= g => {}
                        _ => {
                            a.insert(k, g);
                        }
                    }
                }
                a
            },
        )?;
        let store = VectorStore::build(
            kind,
            n,
            best.into_iter().map(|(k, g)| (k.to_vector(kind, n), g)),
        )?;
        Ok(ExactSolver { n, kind, store })
    }

    /// Uses a weighted catalog, e.g. one read back from a cache file.
    pub fn from_catalog(catalog: &GameCatalog, kind: IndexKind) -> Result<ExactSolver> {
        if catalog.class != GameClass::Weighted {
            return Err(Error::Unsupported(
                "exact search needs a weighted catalog".into(),
            ));
        }
        ExactSolver::from_games(catalog.n, kind, catalog.complete_games().cloned().map(Ok))
    }

    /// Uses a stream of weighted complete games; the caller vouches that
    /// every game is weighted and that no weighted game is missing.
    pub fn from_games<I>(n: usize, kind: IndexKind, games: I) -> Result<ExactSolver>
    where
        I: IntoIterator<Item = Result<CompleteGame>>,
    {
        let mut best: HashMap<PowerVector, CompleteGame> = HashMap::new();
        for g in games {
            let g = g?;
            if g.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: g.n(),
                });
            }
            let v = power_vector(&Game::Complete(g.clone()), kind, Engine::Direct)?;
            match best.get(&v) {
                Some(h) if *h <= g => {}
                _ => {
                    best.insert(v, g);
                }
            }
        }
        let store = VectorStore::build(kind, n, best)?;
        Ok(ExactSolver { n, kind, store })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> IndexKind {
        self.kind
    }

    pub fn store(&self) -> &VectorStore<CompleteGame> {
        &self.store
    }

    pub fn solve(&self, target: &Target, metric: Metric) -> Result<InverseResult> {
        if target.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: target.n(),
            });
        }
        if target.kind() != self.kind {
            return Err(Error::KindMismatch);
        }
        let hit = self.store.nearest(target.vector(), metric)?;
        let game = hit
            .payload
            .is_weighted()
            .ok_or_else(|| Error::NotSimple(format!("{} lost its weights", hit.payload)))?;
        Ok(InverseResult {
            game,
            vector: hit.vector.clone(),
            distance: hit.distance,
            metric,
            mode: Mode::ExactMin,
            seed: None,
            evaluations: 0,
        })
    }
}

/// Exact minimum over all weighted games with `target.n()` voters.
pub fn inverse_exact(target: &Target, metric: Metric) -> Result<InverseResult> {
    ExactSolver::new(target.n(), target.kind())?.solve(target, metric)
}

/// Pads `base` with null voters and approximates its power vector by a
/// weighted game: exactly when a solver for the padded size is supplied or
/// the size is at most seven, heuristically otherwise.
pub fn prop2_workflow(
    base: &CompleteGame,
    pads: usize,
    kind: IndexKind,
    metric: Metric,
    exact: Option<&ExactSolver>,
    cfg: &HeuristicConfig,
) -> Result<InverseResult> {
    let padded = base.with_null_voters(pads)?;
    let n = padded.n();
    let target = Target::exact(power_vector(&Game::Complete(padded), kind, Engine::Auto)?)?;
    match exact {
        Some(s) if s.n() == n && s.kind() == kind => s.solve(&target, metric),
        _ if n <= 7 => inverse_exact(&target, metric),
        _ => inverse_heuristic(&target, metric, cfg),
    }
}
