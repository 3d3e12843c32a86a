//! Swing profiles of weighted games and Boolean combinations without
//! tabulating the characteristic function.
//!
//! For each voter `i` we count the coalitions of the other voters by size and
//! by the weight sum under every non-uniform leaf, each sum clamped at that
//! leaf's quota. Leaves whose weights are all equal depend on the size alone
//! and add no dimension.

use crate::error::{Error, Result};
use crate::games::{BoolCombo, WeightedGame};
use crate::indices::SwingProfile;

pub const DEFAULT_STATE_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, Copy)]
pub struct DpConfig {
    /// Upper bound on `(n + 1) * prod(clamped sum ranges)`.
    pub state_cap: u128,
}

impl Default for DpConfig {
    fn default() -> Self {
        DpConfig {
            state_cap: DEFAULT_STATE_CAP,
        }
    }
}

enum LeafRule {
    /// Wins iff `weight * |S| >= quota`.
    Uniform { weight: u128, quota: u128 },
    /// Wins iff the clamped sum in dimension `dim` reaches `quota`.
    Sum { dim: usize },
}

struct Layout {
    n: usize,
    rules: Vec<LeafRule>,
    /// (quota, integer weights) per non-uniform leaf; clamp value is the quota
    dims: Vec<(u128, Vec<u64>)>,
    radix: Vec<usize>,
    states: usize,
}

impl Layout {
    fn new(leaves: &[&WeightedGame], cfg: &DpConfig) -> Result<Layout> {
        let n = leaves[0].n();
        let mut rules = Vec::new();
        let mut dims = Vec::new();
        for w in leaves {
            if w.is_uniform() {
                rules.push(LeafRule::Uniform {
                    weight: w.integer_weights()[0] as u128,
                    quota: w.integer_quota(),
                });
            } else {
                rules.push(LeafRule::Sum { dim: dims.len() });
                dims.push((w.integer_quota(), w.integer_weights().to_vec()));
            }
        }
        let mut states: u128 = 1;
        let mut radix = Vec::new();
        for (q, _) in &dims {
            let r = q + 1;
            states = states.saturating_mul(r);
            radix.push(r.min(usize::MAX as u128) as usize);
        }
        let total = states.saturating_mul(n as u128 + 1);
        if total > cfg.state_cap {
            return Err(Error::StateCap {
                states: total,
                cap: cfg.state_cap,
            });
        }
        Ok(Layout {
            n,
            rules,
            dims,
            radix,
            states: states as usize,
        })
    }

    fn decode(&self, mut idx: usize, out: &mut [u128]) {
        for (d, &r) in self.radix.iter().enumerate() {
            out[d] = (idx % r) as u128;
            idx /= r;
        }
    }

    fn encode(&self, sums: &[u128]) -> usize {
        self.radix
            .iter()
            .zip(sums)
            .rev()
            .fold(0usize, |acc, (&r, &s)| acc * r + s as usize)
    }

    /// State reached from `idx` when voter `v` joins.
    fn step_map(&self, v: usize) -> Vec<usize> {
        let mut sums = vec![0u128; self.dims.len()];
        (0..self.states)
            .map(|idx| {
                self.decode(idx, &mut sums);
                for (s, (q, w)) in sums.iter_mut().zip(&self.dims) {
                    *s = (*s + w[v] as u128).min(*q);
                }
                self.encode(&sums)
            })
            .collect()
    }

    /// For each state, which non-uniform dimensions have reached their quota.
    fn reached(&self) -> Vec<u64> {
        let mut sums = vec![0u128; self.dims.len()];
        (0..self.states)
            .map(|idx| {
                self.decode(idx, &mut sums);
                sums.iter()
                    .zip(&self.dims)
                    .enumerate()
                    .fold(
                        0u64,
                        |m, (d, (s, (q, _)))| {
                            if s >= q {
                                m | 1 << d
                            } else {
                                m
                            }
                        },
                    )
            })
            .collect()
    }
}

fn profile_with<F: Fn(&[bool]) -> bool>(
    leaves: &[&WeightedGame],
    eval: F,
    cfg: &DpConfig,
) -> Result<SwingProfile> {
    if leaves.len() > 64 {
        return Err(Error::Unsupported("more than 64 leaves".into()));
    }
    let layout = Layout::new(leaves, cfg)?;
    let n = layout.n;
    let r = layout.states;
    let maps: Vec<Vec<usize>> = (0..n).map(|v| layout.step_map(v)).collect();
    let reached = layout.reached();
    let wins = |k: usize, idx: usize, outcomes: &mut Vec<bool>| -> bool {
        for (o, rule) in outcomes.iter_mut().zip(&layout.rules) {
            *o = match *rule {
                LeafRule::Uniform { weight, quota } => weight * k as u128 >= quota,
                LeafRule::Sum { dim } => reached[idx] >> dim & 1 == 1,
            };
        }
        eval(outcomes)
    };
    let mut outcomes = vec![false; leaves.len()];
    let mut by_size = vec![vec![0u128; n]; n];
    let mut counts = vec![0u128; (n + 1) * r];
    for i in 0..n {
        counts.iter_mut().for_each(|c| *c = 0);
        counts[0] = 1;
        let mut added = 0;
        for v in (0..n).filter(|&v| v != i) {
            for k in (0..=added).rev() {
                let (lo, hi) = counts.split_at_mut((k + 1) * r);
                let src = &lo[k * r..];
                let dst = &mut hi[..r];
                for (idx, &c) in src.iter().enumerate() {
                    if c != 0 {
                        dst[maps[v][idx]] += c;
                    }
                }
            }
            added += 1;
        }
        for k in 0..n {
            for idx in 0..r {
                let c = counts[k * r + idx];
                if c == 0 || wins(k, idx, &mut outcomes) {
                    continue;
                }
                if wins(k + 1, maps[i][idx], &mut outcomes) {
                    by_size[i][k] += c;
                }
            }
        }
    }
    Ok(SwingProfile::new(by_size))
}

pub(crate) fn profile_weighted(w: &WeightedGame, cfg: &DpConfig) -> Result<SwingProfile> {
    profile_with(&[w], |o| o[0], cfg)
}

pub(crate) fn profile_combo(c: &BoolCombo, cfg: &DpConfig) -> Result<SwingProfile> {
    let leaves = c.leaves();
    profile_with(&leaves, |o| c.eval_leaves(o), cfg)
}
