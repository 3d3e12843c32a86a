//! Exhaustive generation of complete simple games and weighted games for
//! up to eight voters.
//!
//! Complete games with voters ordered `1 ⪰ ... ⪰ n` correspond one-to-one to
//! non-empty antichains of the [`ShiftPoset`] that avoid the empty coalition
//! (the antichain is the list of shift-minimal winning coalitions). Two such
//! games are isomorphic only through permutations inside classes of
//! symmetric voters, which leave the game unchanged, so every generated game
//! is its own canonical representative.

mod cache;
mod poset;
mod simple;

use rayon::prelude::*;

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::games::{lp, CompleteGame, Game, WeightedGame};
use crate::indices::{swing_profile, DpConfig, Engine, IndexKind, PowerVector};

pub use cache::{read_catalog, write_catalog, CatalogReader, CatalogWriter, CATALOG_MAGIC};
pub use poset::{mask_get, Mask, ShiftPoset, MAX_POSET_VOTERS};
pub use simple::{enumerate_simple, enumerate_simple4};

/// Known class sizes, indexed by `n`.
pub const COMPLETE_COUNTS: [u64; 9] = [0, 1, 3, 8, 25, 117, 1171, 44_313, 16_175_188];
pub const WEIGHTED_COUNTS: [u64; 9] = [0, 1, 3, 8, 25, 117, 1111, 29_373, 2_730_164];
/// `n = 9`, for reference only; enumeration there is out of reach.
pub const WEIGHTED_COUNT_9: u64 = 993_061_482;
pub const COMPLETE_COUNT_9: u64 = 284_432_730_174;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GameClass {
    Weighted,
    Complete,
    Simple,
}

impl GameClass {
    pub fn code(self) -> u8 {
        match self {
            GameClass::Weighted => 0,
            GameClass::Complete => 1,
            GameClass::Simple => 2,
        }
    }

    pub fn from_code(c: u8) -> Option<GameClass> {
        match c {
            0 => Some(GameClass::Weighted),
            1 => Some(GameClass::Complete),
            2 => Some(GameClass::Simple),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GameClass::Weighted => "wg",
            GameClass::Complete => "cg",
            GameClass::Simple => "sg",
        }
    }
}

impl std::str::FromStr for GameClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<GameClass> {
        match s.to_ascii_lowercase().as_str() {
            "wg" | "weighted" => Ok(GameClass::Weighted),
            "cg" | "complete" => Ok(GameClass::Complete),
            "sg" | "simple" => Ok(GameClass::Simple),
            _ => Err(Error::Unsupported(format!("unknown game class '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub game: Game,
    /// Integer representation, present for every weighted entry.
    pub certificate: Option<WeightedGame>,
    pub vector: Option<PowerVector>,
}

/// One representative per isomorphism class of a game family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameCatalog {
    pub n: usize,
    pub class: GameClass,
    pub entries: Vec<CatalogEntry>,
}

impl GameCatalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Annotates every entry with its exact power vector.
    pub fn attach_power_vectors(&mut self, kind: IndexKind) -> Result<()> {
        self.entries.par_iter_mut().try_for_each(|e| {
            let p = swing_profile(&e.game, Engine::Direct, &DpConfig::default())?;
            e.vector = Some(p.index(kind)?);
            Ok(())
        })
    }

    pub fn complete_games(&self) -> impl Iterator<Item = &CompleteGame> {
        self.entries.iter().filter_map(|e| match &e.game {
            Game::Complete(c) => Some(c),
            _ => None,
        })
    }
}

/// A generated complete game, borrowed from the search state.
pub struct UpSet<'a> {
    pub n: usize,
    /// Shift-minimal winning coalitions, sorted by bitmask.
    pub shift_min: &'a [Coalition],
    /// Characteristic table, bit `S` set iff `S` wins.
    pub table: &'a Mask,
}

impl UpSet<'_> {
    pub fn to_game(&self) -> CompleteGame {
        CompleteGame::new_unchecked(self.n, self.shift_min.to_vec())
    }

    /// Exact weightedness test with non-increasing weights.
    pub fn certificate(&self, poset: &ShiftPoset) -> Option<WeightedGame> {
        let losing = poset.maximal_losing(self.table);
        let cert = lp::find_weights(self.n, self.shift_min, &losing, true)?;
        Some(
            WeightedGame::from_integers(cert.quota, &cert.weights)
                .expect("certificate is a simple game"),
        )
    }
}

fn check_range(n: usize) -> Result<()> {
    if !(1..=MAX_POSET_VOTERS).contains(&n) {
        return Err(Error::VoterCount {
            n,
            min: 1,
            max: MAX_POSET_VOTERS,
        });
    }
    Ok(())
}

/// Visits every complete simple game on `n` voters exactly once, folding
/// per worker and reducing the partial results. Visiting order is unspecified.
pub fn fold_complete<T, I, F, R>(n: usize, init: I, fold: F, reduce: R) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, &ShiftPoset, &UpSet) + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    check_range(n)?;
    let poset = ShiftPoset::new(n);
    let size = 1u64 << n;
    let mut all: Mask = [0; 4];
    for s in 1..size {
        poset::mask_set(&mut all, s);
    }
    let out = (1..size)
        .into_par_iter()
        .fold(&init, |mut acc, first| {
            let first = Coalition(first);
            let compat = poset::mask_andnot(
                &poset::mask_andnot(&all, poset.up(first)),
                poset.down(first),
            );
            let mut chosen = vec![first];
            let table = *poset.up(first);
            search(&poset, &mut acc, &fold, &mut chosen, &table, &compat);
            acc
        })
        .reduce(&init, &reduce);
    Ok(out)
}

fn search<T, F>(
    poset: &ShiftPoset,
    acc: &mut T,
    fold: &F,
    chosen: &mut Vec<Coalition>,
    table: &Mask,
    compat: &Mask,
) where
    F: Fn(&mut T, &ShiftPoset, &UpSet),
{
    fold(
        acc,
        poset,
        &UpSet {
            n: poset.n(),
            shift_min: chosen,
            table,
        },
    );
    let last = chosen.last().unwrap().bits();
    for w in (last >> 6) as usize..4 {
        let mut bits = compat[w];
        if w == (last >> 6) as usize {
            bits &= if last & 63 == 63 {
                0
            } else {
                !0u64 << ((last & 63) + 1)
            };
        }
        while bits != 0 {
            let y = Coalition((w as u64) << 6 | bits.trailing_zeros() as u64);
            bits &= bits - 1;
            let next = poset::mask_andnot(&poset::mask_andnot(compat, poset.up(y)), poset.down(y));
            let t = poset::mask_or(table, poset.up(y));
            chosen.push(y);
            search(poset, acc, fold, chosen, &t, &next);
            chosen.pop();
        }
    }
}

/// Number of complete simple games on `n` voters, by direct traversal.
pub fn count_complete(n: usize) -> Result<u64> {
    fold_complete(n, || 0u64, |c, _, _| *c += 1, |a, b| a + b)
}

/// All complete simple games on `n` voters, sorted.
pub fn enumerate_complete(n: usize) -> Result<GameCatalog> {
    let mut games = fold_complete(
        n,
        Vec::new,
        |v: &mut Vec<CompleteGame>, _, u| v.push(u.to_game()),
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )?;
    games.par_sort_unstable();
    Ok(GameCatalog {
        n,
        class: GameClass::Complete,
        entries: games
            .into_iter()
            .map(|g| CatalogEntry {
                game: Game::Complete(g),
                certificate: None,
                vector: None,
            })
            .collect(),
    })
}

/// All weighted games on `n` voters (the weighted complete games), sorted,
/// each with an integer certificate.
pub fn enumerate_weighted(n: usize) -> Result<GameCatalog> {
    let mut games = fold_complete(
        n,
        Vec::new,
        |v: &mut Vec<(CompleteGame, WeightedGame)>, poset, u| {
            if let Some(w) = u.certificate(poset) {
                v.push((u.to_game(), w));
            }
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )?;
    games.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    Ok(GameCatalog {
        n,
        class: GameClass::Weighted,
        entries: games
            .into_iter()
            .map(|(g, w)| CatalogEntry {
                game: Game::Complete(g),
                certificate: Some(w),
                vector: None,
            })
            .collect(),
    })
}

/// Checks a catalog size against the known class sizes; `None` if no reference exists.
pub fn certified_count(class: GameClass, n: usize) -> Option<u64> {
    match class {
        GameClass::Complete => COMPLETE_COUNTS.get(n).copied(),
        GameClass::Weighted => WEIGHTED_COUNTS.get(n).copied(),
        GameClass::Simple if n == 4 => Some(28),
        GameClass::Simple => None,
    }
}
