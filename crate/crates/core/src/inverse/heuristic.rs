use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::games::{Game, WeightedGame};
use crate::geometry::metric::{distance_raw, Frac};
use crate::geometry::Metric;
use crate::indices::{factorials, power_vector, Engine, IndexKind, MAX_SSI_VOTERS};
use crate::inverse::{InverseResult, Mode, Target};

/// Weight sums beyond this are not explored.
const MAX_WEIGHT_SUM: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeuristicConfig {
    /// Total number of weight vectors evaluated, split evenly over the restarts.
    pub budget: u64,
    /// Weight sum of the starting point proportional to the target.
    pub weight_sum: u64,
    pub restarts: usize,
    pub seed: u64,
}

impl Default for HeuristicConfig {
    fn default() -> Self {
        HeuristicConfig {
            budget: 20_000,
            weight_sum: 100,
            restarts: 4,
            seed: 0,
        }
    }
}

/// Power vectors of `[q; w]` for every quota `1 <= q <= w(N)` at once.
struct QuotaScan {
    n: usize,
    kind: IndexKind,
    /// `k! (n - 1 - k)!`, the Shapley-Shubik weight of a swing into a coalition of size `k`.
    slot: Vec<u128>,
    den_ssi: u128,
}

impl QuotaScan {
    fn new(n: usize, kind: IndexKind) -> Result<QuotaScan> {
        if kind == IndexKind::Ssi && n > MAX_SSI_VOTERS {
            return Err(Error::VoterCount {
                n,
                min: 1,
                max: MAX_SSI_VOTERS,
            });
        }
        if n > 64 {
            return Err(Error::VoterCount { n, min: 1, max: 64 });
        }
        let (slot, den_ssi) = if kind == IndexKind::Ssi {
            let f = factorials(n);
            ((0..n).map(|k| f[k] * f[n - 1 - k]).collect(), f[n])
        } else {
            (Vec::new(), 0)
        };
        Ok(QuotaScan {
            n,
            kind,
            slot,
            den_ssi,
        })
    }

    /// Best quota for the weights `w` and its distance to the target; ties go to the smaller quota.
    fn best(&self, w: &[u64], target: &Target, m: Metric) -> Result<Option<(u64, Frac)>> {
        let n = self.n;
        let total: u64 = w.iter().sum();
        if total == 0 {
            return Ok(None);
        }
        let width = total as usize + 1;
        // counts[k][s]: coalitions of size k and weight s
        let mut counts = vec![0u128; (n + 1) * width];
        counts[0] = 1;
        for (j, &wj) in w.iter().enumerate() {
            let wj = wj as usize;
            for k in (0..=j).rev() {
                for s in (0..width - wj).rev() {
                    let c = counts[k * width + s];
                    if c != 0 {
                        counts[(k + 1) * width + s + wj] += c;
                    }
                }
            }
        }
        // nums[i][q]: numerator of voter i's index at quota q
        let mut nums = vec![0u128; n * width];
        let mut without = vec![0u128; n * width];
        let mut prefix = vec![0u128; width + 1];
        for (i, &wi) in w.iter().enumerate() {
            let wi = wi as usize;
            for k in 0..n {
                for s in 0..width {
                    let mut c = counts[k * width + s];
                    if k > 0 && s >= wi {
                        c -= without[(k - 1) * width + s - wi];
                    }
                    without[k * width + s] = c;
                }
            }
            if wi == 0 {
                continue;
            }
            let row = &mut nums[i * width..(i + 1) * width];
            match self.kind {
                IndexKind::Ssi => {
                    for k in 0..n {
                        for s in 0..width {
                            prefix[s + 1] = prefix[s] + without[k * width + s];
                        }
                        for (q, cell) in row.iter_mut().enumerate().skip(1) {
                            let swings = prefix[q] - prefix[q.saturating_sub(wi)];
                            *cell += swings * self.slot[k];
                        }
                    }
                }
                IndexKind::Pbi => {
                    for s in 0..width {
                        let c: u128 = (0..n).map(|k| without[k * width + s]).sum();
                        prefix[s + 1] = prefix[s] + c;
                    }
                    for (q, cell) in row.iter_mut().enumerate().skip(1) {
                        *cell = prefix[q] - prefix[q.saturating_sub(wi)];
                    }
                }
            }
        }
        let tv = target.vector();
        let mut best: Option<(u64, Frac)> = None;
        let mut x = vec![0u128; n];
        for q in 1..width {
            for (i, xi) in x.iter_mut().enumerate() {
                *xi = nums[i * width + q];
            }
            let den = match self.kind {
                IndexKind::Ssi => self.den_ssi,
                IndexKind::Pbi => x.iter().sum(),
            };
            let d = distance_raw(&x, den, tv.numerators(), tv.denominator(), m)?;
            if best.as_ref().is_none_or(|(_, b)| d.cmp(b).is_lt()) {
                best = Some((q as u64, d));
            }
        }
        Ok(best)
    }
}

/// Integer weights summing to `sum`, proportional to the target (largest remainders).
fn proportional(target: &Target, sum: u64) -> Vec<u64> {
    let v = target.vector();
    let total: u128 = v.numerators().iter().sum::<u128>().max(1);
    let raw: Vec<(u128, u128)> = v
        .numerators()
        .iter()
        .map(|&x| ((x * sum as u128) / total, (x * sum as u128) % total))
        .collect();
    let mut w: Vec<u64> = raw.iter().map(|r| r.0 as u64).collect();
    let missing = sum.saturating_sub(w.iter().sum());
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by(|&a, &b| raw[b].1.cmp(&raw[a].1).then(a.cmp(&b)));
    for &i in order.iter().take(missing as usize) {
        w[i] += 1;
    }
    w
}

struct Walk<'a> {
    scan: &'a QuotaScan,
    target: &'a Target,
    metric: Metric,
    budget: u64,
    evaluations: u64,
    seen: HashMap<Vec<u64>, Option<(u64, Frac)>>,
    best: Option<(Vec<u64>, u64, Frac)>,
}

impl Walk<'_> {
    fn exhausted(&self) -> bool {
        self.evaluations >= self.budget || self.best.as_ref().is_some_and(|b| b.2.num == 0)
    }

    fn eval(&mut self, w: &[u64]) -> Result<Option<Frac>> {
        if let Some(r) = self.seen.get(w) {
            return Ok(r.map(|x| x.1));
        }
        if self.exhausted() || w.iter().sum::<u64>() > MAX_WEIGHT_SUM {
            return Ok(None);
        }
        self.evaluations += 1;
        let r = self.scan.best(w, self.target, self.metric)?;
        self.seen.insert(w.to_vec(), r);
        if let Some((q, d)) = r {
            if self.best.as_ref().is_none_or(|b| d.cmp(&b.2).is_lt()) {
                self.best = Some((w.to_vec(), q, d));
            }
        }
        Ok(r.map(|x| x.1))
    }
}

fn restart<'a>(
    scan: &'a QuotaScan,
    target: &'a Target,
    metric: Metric,
    cfg: &HeuristicConfig,
    r: usize,
    budget: u64,
) -> Result<Walk<'a>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(r as u64);
    let mut walk = Walk {
        scan,
        target,
        metric,
        budget,
        evaluations: 0,
        seen: HashMap::new(),
        best: None,
    };
    let sum = cfg.weight_sum.max(1);
    let mut current = if r == 0 {
        proportional(target, sum)
    } else {
        let mut w = proportional(target, rng.gen_range(sum / 2..=2 * sum).max(1));
        for x in w.iter_mut() {
            *x = x.saturating_add_signed(rng.gen_range(-2..=2));
        }
        w
    };
    let n = current.len();
    // single-weight steps of +-1, then unit transfers between two voters
    let mut moves: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| [(i, usize::MAX), (usize::MAX, i)])
        .collect();
    moves.extend((0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))));
    let mut current_d = walk.eval(&current)?;
    while !walk.exhausted() {
        moves.shuffle(&mut rng);
        let mut moved = false;
        for &(from, to) in &moves {
            let mut w = current.clone();
            if from != usize::MAX {
                if w[from] == 0 {
                    continue;
                }
                w[from] -= 1;
            }
            if to != usize::MAX {
                w[to] += 1;
            }
            let Some(d) = walk.eval(&w)? else { continue };
            if current_d.is_none_or(|c| d.cmp(&c).is_lt()) {
                current = w;
                current_d = Some(d);
                moved = true;
                break;
            }
            if walk.exhausted() {
                break;
            }
        }
        if !moved {
            // local optimum: perturb the best point seen in this restart
            let Some((mut w, _, _)) = walk.best.clone() else {
                break;
            };
            for _ in 0..rng.gen_range(2..=4) {
                let i = rng.gen_range(0..n);
                w[i] = w[i].saturating_add_signed(rng.gen_range(-3..=3));
            }
            current_d = walk.eval(&w)?;
            current = w;
        }
    }
    Ok(walk)
}

/// Local search over integer weight vectors; every candidate is scored with
/// its best quota. The result is an upper bound on the exact minimum.
///
/// Restarts are independent and each follows a fixed trajectory given the
/// seed, so a larger budget never yields a worse answer.
pub fn inverse_heuristic(
    target: &Target,
    metric: Metric,
    cfg: &HeuristicConfig,
) -> Result<InverseResult> {
    let scan = QuotaScan::new(target.n(), target.kind())?;
    let restarts = cfg.restarts.max(1);
    let share = |r: usize| {
        cfg.budget / restarts as u64 + u64::from((r as u64) < cfg.budget % restarts as u64)
    };
    let walks = (0..restarts)
        .into_par_iter()
        .map(|r| {
            restart(&scan, target, metric, cfg, r, share(r).max(1)).map(|w| (w.best, w.evaluations))
        })
        .collect::<Result<Vec<_>>>()?;
    let evaluations = walks.iter().map(|w| w.1).sum();
    let (weights, quota, d) = walks
        .into_iter()
        .filter_map(|w| w.0)
        .reduce(|a, b| if b.2.cmp(&a.2).is_lt() { b } else { a })
        .ok_or_else(|| Error::InvalidTarget("target admits no weighted candidate".into()))?;
    let game = WeightedGame::from_integers(quota, &weights)?;
    let vector = power_vector(&Game::Weighted(game.clone()), target.kind(), Engine::Auto)?;
    Ok(InverseResult {
        game,
        vector,
        distance: d.to_rational(),
        metric,
        mode: Mode::HeuristicUpperBound,
        seed: Some(cfg.seed),
        evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::parse_game;
    use crate::geometry::distance;
    use crate::number::Rational;

    fn scan_vector(w: &[u64], q: u64, kind: IndexKind) -> crate::indices::PowerVector {
        power_vector(
            &Game::Weighted(WeightedGame::from_integers(q, w).unwrap()),
            kind,
            Engine::Direct,
        )
        .unwrap()
    }

    #[test]
    fn quota_scan_matches_direct_evaluation() {
        let w = [5u64, 3, 3, 2, 0, 1];
        for kind in [IndexKind::Ssi, IndexKind::Pbi] {
            let scan = QuotaScan::new(6, kind).unwrap();
            for q in 1..=14 {
                let v = scan_vector(&w, q, kind);
                let t = Target::exact(v.clone()).unwrap();
                let (bq, d) = scan.best(&w, &t, Metric::L1).unwrap().unwrap();
                assert_eq!(d.num, 0);
                assert_eq!(scan_vector(&w, bq, kind), v, "q={q}");
            }
        }
    }

    #[test]
    fn starting_point_on_target_stops_at_once() {
        let v = power_vector(
            &parse_game("[5;3,3,2,1,1]").unwrap(),
            IndexKind::Pbi,
            Engine::Direct,
        )
        .unwrap();
        let t = Target::exact(v.clone()).unwrap();
        let cfg = HeuristicConfig {
            weight_sum: 10,
            ..HeuristicConfig::default()
        };
        let r = inverse_heuristic(&t, Metric::L1, &cfg).unwrap();
        assert_eq!(r.distance, Rational::from_integer(0));
        assert_eq!(r.mode, Mode::HeuristicUpperBound);
        assert_eq!(r.vector, v);
    }

    #[test]
    fn more_budget_never_hurts() {
        let t = Target::beta(6, IndexKind::Ssi).unwrap();
        let mut last: Option<Rational> = None;
        for budget in [1u64, 10, 100, 1000] {
            let r = inverse_heuristic(
                &t,
                Metric::L1,
                &HeuristicConfig {
                    budget,
                    ..HeuristicConfig::default()
                },
            )
            .unwrap();
            let v = power_vector(
                &Game::Weighted(r.game.clone()),
                IndexKind::Ssi,
                Engine::Direct,
            )
            .unwrap();
            assert_eq!(distance(&v, t.vector(), Metric::L1).unwrap(), r.distance);
            if let Some(l) = last {
                assert!(r.distance <= l);
            }
            last = Some(r.distance);
        }
    }
}
