use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;

use crate::enumeration::{fold_complete, MAX_POSET_VOTERS};
use crate::error::{Error, Result};
use crate::games::{CompleteGame, WeightedGame};
use crate::geometry::census::{census, Census, VectorKey};
use crate::geometry::metric::{distance_frac, Frac, Metric};
use crate::geometry::store::VectorStore;
use crate::indices::{IndexKind, PowerVector, SmallProfile};
use crate::number::{decimal7, Rational};

/// Worst-case distance between the power vectors of complete games and
/// their best weighted approximations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub n: usize,
    pub kind: IndexKind,
    pub metric: Metric,
    pub omega: Rational,
    /// Smallest complete game attaining the maximum.
    pub argmax: CompleteGame,
    pub argmax_vector: PowerVector,
    /// Smallest weighted game whose vector is nearest to `argmax_vector`.
    pub nearest: CompleteGame,
    pub nearest_certificate: WeightedGame,
    pub nearest_vector: PowerVector,
    /// Every complete game attaining the maximum (empty when the gap is zero).
    pub attaining: Vec<CompleteGame>,
    pub weighted_vectors: usize,
    pub complete_vectors: usize,
}

impl GapReport {
    pub fn omega_decimal(&self) -> String {
        decimal7(&self.omega)
    }
}

impl fmt::Display for GapReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "omega_{}^{}({}) = {} ({}); argmax {} ; nearest {}",
            self.metric,
            self.kind.name(),
            self.n,
            self.omega_decimal(),
            self.omega,
            self.argmax,
            self.nearest_certificate
        )
    }
}

fn min_game(a: Option<CompleteGame>, b: Option<CompleteGame>) -> Option<CompleteGame> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn key_of(n: usize, table: &crate::enumeration::Mask, kind: IndexKind) -> VectorKey {
    VectorKey::from_profile(&SmallProfile::from_table(n, table), kind)
}

/// Exact `max_c min_v d(p(c), p(v))` over complete games `c` and weighted
/// games `v` on `n` voters. Practical up to `n = 8`, where a full pass over
/// the 16 million complete games is required.
pub fn omega(n: usize, kind: IndexKind, metric: Metric) -> Result<GapReport> {
    GapAnalysis::new(n, &[kind])?.report(kind, metric)
}

/// The vector census of one voter count, shared by several gap reports.
pub struct GapAnalysis {
    n: usize,
    census: Census,
}

impl GapAnalysis {
    pub fn new(n: usize, kinds: &[IndexKind]) -> Result<GapAnalysis> {
        if !(1..=MAX_POSET_VOTERS).contains(&n) {
            return Err(Error::VoterCount {
                n,
                min: 1,
                max: MAX_POSET_VOTERS,
            });
        }
        Ok(GapAnalysis {
            n,
            census: census(n, kinds)?,
        })
    }

    pub fn census(&self) -> &Census {
        &self.census
    }

    /// `kind` must be one of the indices the analysis was built for.
    pub fn report(&self, kind: IndexKind, metric: Metric) -> Result<GapReport> {
        if !self.census.kinds.contains(&kind) {
            return Err(Error::KindMismatch);
        }
        gap_report(self.n, &self.census, kind, metric)
    }
}

fn gap_report(n: usize, c: &Census, kind: IndexKind, metric: Metric) -> Result<GapReport> {
    let (weighted, complete) = (c.weighted(kind), c.complete(kind));
    let store = VectorStore::build(kind, n, weighted.iter().map(|k| (k.to_vector(kind, n), *k)))?;
    let outside: Vec<VectorKey> = complete
        .iter()
        .filter(|k| !weighted.contains(k))
        .copied()
        .collect();
    let scored: Vec<(VectorKey, VectorKey, Frac)> = outside
        .par_iter()
        .map(|q| {
            let v = q.to_vector(kind, n);
            let hit = store.nearest(&v, metric)?;
            let d = distance_frac(&v, hit.vector, metric)?;
            Ok((*q, *hit.payload, d))
        })
        .collect::<Result<_>>()?;
    let best = scored.iter().map(|s| s.2).max_by(|a, b| a.cmp(b));

    // second pass: recover the games behind the extremal vectors
    let (targets, nearest_keys): (HashSet<VectorKey>, HashSet<VectorKey>) = match best {
        Some(b) => scored
            .iter()
            .filter(|s| s.2.cmp(&b).is_eq())
            .map(|s| (s.0, s.1))
            .unzip(),
        None => (HashSet::new(), HashSet::new()),
    };
    let (attaining, smallest) = fold_complete(
        n,
        || (Vec::new(), None::<CompleteGame>),
        |acc, _, u| {
            if targets.is_empty() {
                acc.1 = min_game(acc.1.take(), Some(u.to_game()));
            } else if targets.contains(&key_of(n, u.table, kind)) {
                acc.0.push(u.to_game());
            }
        },
        |mut a, mut b| {
            a.0.append(&mut b.0);
            (a.0, min_game(a.1, b.1))
        },
    )?;
    let mut attaining = attaining;
    attaining.sort();
    let argmax = match smallest {
        Some(g) => g,
        None => attaining.first().cloned().ok_or(Error::EmptyStore)?,
    };
    let argmax_key = key_of(n, &argmax_table(&argmax)?, kind);
    let nearest_key = if targets.is_empty() {
        argmax_key
    } else {
        let hit = store.nearest(&argmax_key.to_vector(kind, n), metric)?;
        debug_assert!(nearest_keys.contains(hit.payload));
        *hit.payload
    };
    let nearest = fold_complete(
        n,
        || None::<(CompleteGame, WeightedGame)>,
        |acc, poset, u| {
            if key_of(n, u.table, kind) != nearest_key {
                return;
            }
            let g = u.to_game();
            if acc.as_ref().is_some_and(|(best, _)| *best <= g) {
                return;
            }
            if let Some(w) = u.certificate(poset) {
                *acc = Some((g, w));
            }
        },
        |a, b| match (a, b) {
            (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
            (x, None) => x,
            (None, y) => y,
        },
    )?;
    let (nearest, nearest_certificate) = nearest.ok_or(Error::EmptyStore)?;
    let argmax_vector = argmax_key.to_vector(kind, n);
    let nearest_vector = nearest_key.to_vector(kind, n);
    let omega = distance_frac(&argmax_vector, &nearest_vector, metric)?.to_rational();
    Ok(GapReport {
        n,
        kind,
        metric,
        omega,
        argmax,
        argmax_vector,
        nearest,
        nearest_certificate,
        nearest_vector,
        attaining,
        weighted_vectors: weighted.len(),
        complete_vectors: complete.len(),
    })
}

fn argmax_table(g: &CompleteGame) -> Result<crate::enumeration::Mask> {
    let e = g.to_explicit()?;
    let mut t = [0u64; 4];
    t[..e.table().len()].copy_from_slice(e.table());
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::Game;
    use crate::geometry::distance;
    use crate::indices::{power_vector, Engine};

    #[test]
    fn no_gap_up_to_six_voters() {
        for n in 1..=6 {
            for kind in [IndexKind::Ssi, IndexKind::Pbi] {
                let r = omega(n, kind, Metric::L1).unwrap();
                assert_eq!(r.omega, Rational::from_integer(0), "n={n}");
                assert!(r.attaining.is_empty());
                assert_eq!(r.argmax_vector, r.nearest_vector);
            }
        }
    }

    #[test]
    fn report_is_reproducible_from_scratch() {
        let r = omega(7, IndexKind::Pbi, Metric::Linf).unwrap();
        let pa = power_vector(
            &Game::Complete(r.argmax.clone()),
            IndexKind::Pbi,
            Engine::Direct,
        )
        .unwrap();
        let pw = power_vector(
            &Game::Weighted(r.nearest_certificate.clone()),
            IndexKind::Pbi,
            Engine::Direct,
        )
        .unwrap();
        assert_eq!(distance(&pa, &pw, Metric::Linf).unwrap(), r.omega);
        assert_eq!(r.omega, Rational::new(2, 115));
    }
}
