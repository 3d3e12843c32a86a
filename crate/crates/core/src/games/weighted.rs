use std::fmt;

use num_traits::{Signed, Zero};

use crate::coalition::{Coalition, MAX_VOTERS};
use crate::error::{Error, Result};
use crate::games::explicit::{ExplicitGame, MAX_EXPLICIT_VOTERS};
use crate::number::{common_denominator, fraction_string, Rational};

/// `[q; w_1, ..., w_n]`: a coalition wins iff its weight meets the quota.
///
/// Weights and quota are kept as exact rationals; evaluation runs on an
/// equivalent integer form (all values scaled by the common denominator,
/// quota rounded up).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightedGame {
    quota: Rational,
    weights: Vec<Rational>,
    int_quota: u128,
    int_weights: Vec<u64>,
}

impl WeightedGame {
    pub fn new(quota: Rational, weights: Vec<Rational>) -> Result<WeightedGame> {
        if weights.is_empty() || weights.len() > MAX_VOTERS {
            return Err(Error::VoterCount {
                n: weights.len(),
                min: 1,
                max: MAX_VOTERS,
            });
        }
        if !quota.is_positive() {
            return Err(Error::InvalidWeights(format!(
                "quota {} is not positive",
                fraction_string(&quota)
            )));
        }
        if let Some(w) = weights.iter().find(|w| w.is_negative()) {
            return Err(Error::InvalidWeights(format!(
                "negative weight {}",
                fraction_string(w)
            )));
        }
        let den = common_denominator(weights.iter().chain(std::iter::once(&quota)))?;
        let scale = |r: &Rational| -> Result<i128> {
            r.numer()
                .checked_mul(den / r.denom())
                .ok_or(Error::Overflow("weight scaling"))
        };
        let int_weights = weights
            .iter()
            .map(|w| scale(w).and_then(|x| u64::try_from(x).map_err(|_| Error::Overflow("weight"))))
            .collect::<Result<Vec<_>>>()?;
        let int_quota = scale(&quota)? as u128;
        let total: u128 = int_weights.iter().map(|&w| w as u128).sum();
        if total < int_quota {
            return Err(Error::NotSimple(format!(
                "total weight {} is below the quota {}",
                fraction_string(&weights.iter().copied().fold(Rational::zero(), |a, b| a + b)),
                fraction_string(&quota)
            )));
        }
        Ok(WeightedGame {
            quota,
            weights,
            int_quota,
            int_weights,
        })
    }

    pub fn from_integers(quota: u64, weights: &[u64]) -> Result<WeightedGame> {
        WeightedGame::new(
            Rational::from_integer(quota as i128),
            weights
                .iter()
                .map(|&w| Rational::from_integer(w as i128))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn quota(&self) -> &Rational {
        &self.quota
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// Weights scaled to integers by the common denominator.
    pub fn integer_weights(&self) -> &[u64] {
        &self.int_weights
    }

    /// Quota on the integer scale, so `v(S) = 1` iff `sum >= integer_quota`.
    pub fn integer_quota(&self) -> u128 {
        self.int_quota
    }

    pub fn integer_weight(&self, s: Coalition) -> u128 {
        s.members().map(|i| self.int_weights[i] as u128).sum()
    }

    #[inline]
    pub fn is_winning(&self, s: Coalition) -> bool {
        self.integer_weight(s) >= self.int_quota
    }

    /// True when all weights are equal, so the outcome depends on `|S|` only.
    pub fn is_uniform(&self) -> bool {
        self.int_weights.windows(2).all(|p| p[0] == p[1])
    }

    pub fn with_null_voters(&self, k: usize) -> Result<WeightedGame> {
        let mut weights = self.weights.clone();
        weights.extend(std::iter::repeat_n(Rational::zero(), k));
        WeightedGame::new(self.quota, weights)
    }

    /// Tabulates the game, walking coalitions in Gray-code order so each step
    /// adds or removes one weight.
    pub fn to_explicit(&self) -> Result<ExplicitGame> {
        let n = self.n();
        if n > MAX_EXPLICIT_VOTERS {
            return Err(Error::VoterCount {
                n,
                min: 1,
                max: MAX_EXPLICIT_VOTERS,
            });
        }
        let mut table = vec![0u64; (1usize << n).div_ceil(64)];
        let mut sum: u128 = 0;
        let mut s: u64 = 0;
        for step in 0u64..1 << n {
            if step > 0 {
                let bit = step.trailing_zeros() as usize;
                s ^= 1 << bit;
                if s >> bit & 1 == 1 {
                    sum += self.int_weights[bit] as u128;
                } else {
                    sum -= self.int_weights[bit] as u128;
                }
            }
            if sum >= self.int_quota {
                table[(s >> 6) as usize] |= 1 << (s & 63);
            }
        }
        Ok(ExplicitGame::from_table_unchecked(n, table))
    }

    /// Integer representation with the smallest quota, then the smallest
    /// weight sum, found by exhaustive search (small `n` only).
    pub fn minimal_representation(&self) -> Result<WeightedGame> {
        let n = self.n();
        if n > 5 {
            return Err(Error::VoterCount { n, min: 1, max: 5 });
        }
        let target = self.to_explicit()?;
        for q in 1u64.. {
            let mut best: Option<Vec<u64>> = None;
            let mut w = vec![0u64; n];
            loop {
                let sum: u64 = w.iter().sum();
                if best.as_ref().is_none_or(|b| sum < b.iter().sum()) {
                    let cand = WeightedGame::from_integers(q, &w);
                    if let Ok(cand) = cand {
                        if cand.to_explicit()? == target {
                            best = Some(w.clone());
                        }
                    }
                }
                // odometer over 0..=q per coordinate
                let mut k = 0;
                while k < n && w[k] == q {
                    w[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
                w[k] += 1;
            }
            if let Some(b) = best {
                return WeightedGame::from_integers(q, &b);
            }
        }
        unreachable!()
    }
}

impl fmt::Display for WeightedGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};", fraction_string(&self.quota))?;
        for (k, w) in self.weights.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", fraction_string(w))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for WeightedGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
