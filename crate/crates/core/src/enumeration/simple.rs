use std::collections::HashSet;

use crate::enumeration::{CatalogEntry, GameCatalog, GameClass};
use crate::error::{Error, Result};
use crate::games::{ExplicitGame, Game};

/// Largest `n` for which all simple games are enumerated (brute force over
/// monotone Boolean functions, then canonicalised).
pub const MAX_SIMPLE_VOTERS: usize = 5;

/// Every simple game on `n <= 5` voters up to isomorphism, in canonical form,
/// with certificates on the weighted ones.
pub fn enumerate_simple(n: usize) -> Result<GameCatalog> {
    if !(1..=MAX_SIMPLE_VOTERS).contains(&n) {
        return Err(Error::VoterCount {
            n,
            min: 1,
            max: MAX_SIMPLE_VOTERS,
        });
    }
    let size = 1usize << n;
    // inclusion up-sets and down-sets as 32-bit masks
    let up: Vec<u64> = (0..size)
        .map(|a| {
            (0..size)
                .filter(|&b| a & !b == 0)
                .fold(0, |m, b| m | 1 << b)
        })
        .collect();
    let down: Vec<u64> = (0..size)
        .map(|b| {
            (0..size)
                .filter(|&a| a & !b == 0)
                .fold(0, |m, a| m | 1 << a)
        })
        .collect();
    let all = ((1u64 << size) - 1) & !1;
    let mut seen = HashSet::new();
    let mut games = Vec::new();
    let mut stack: Vec<(u64, u64, usize)> = (1..size)
        .map(|x| (up[x], all & !up[x] & !down[x], x))
        .collect();
    while let Some((table, compat, last)) = stack.pop() {
        let words = vec![table];
        let g = ExplicitGame::from_table(n, words)?;
        let canon = g.canonical_form()?;
        if seen.insert(canon.table().to_vec()) {
            games.push(canon);
        }
        let mut bits = compat & !((2u64 << last) - 1);
        while bits != 0 {
            let y = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            stack.push((table | up[y], compat & !up[y] & !down[y], y));
        }
    }
    games.sort_by(|a, b| a.table_cmp(b));
    Ok(GameCatalog {
        n,
        class: GameClass::Simple,
        entries: games
            .into_iter()
            .map(|g| CatalogEntry {
                certificate: g.is_weighted(),
                game: Game::Explicit(g),
                vector: None,
            })
            .collect(),
    })
}

/// The 28 simple games on four voters.
pub fn enumerate_simple4() -> GameCatalog {
    enumerate_simple(4).expect("n = 4 is supported")
}
