use std::fmt;

use crate::coalition::{Coalition, MAX_VOTERS};
use crate::error::{Error, Result};
use crate::games::explicit::{ExplicitGame, MAX_EXPLICIT_VOTERS};
use crate::games::lp;
use crate::games::weighted::WeightedGame;

/// A complete simple game with voters ordered `1 ⪰ 2 ⪰ ... ⪰ n`, stored by its
/// shift-minimal winning coalitions.
///
/// A coalition wins iff it dominates (in the shift order) one of the listed
/// coalitions. The list is an antichain of that order, sorted by bitmask,
/// which makes the representation unique and gives a total order on games.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompleteGame {
    n: usize,
    shift_min: Vec<Coalition>,
}

impl CompleteGame {
    pub fn new(n: usize, mut shift_min: Vec<Coalition>) -> Result<CompleteGame> {
        if n == 0 || n > MAX_VOTERS {
            return Err(Error::VoterCount {
                n,
                min: 1,
                max: MAX_VOTERS,
            });
        }
        if shift_min.is_empty() {
            return Err(Error::NotSimple("no winning coalition".into()));
        }
        let full = Coalition::full(n);
        for s in &shift_min {
            if s.is_empty() {
                return Err(Error::NotSimple("the empty coalition wins".into()));
            }
            if !s.is_subset(full) {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: 64 - s.bits().leading_zeros() as usize,
                });
            }
        }
        shift_min.sort();
        shift_min.dedup();
        for (a, s) in shift_min.iter().enumerate() {
            for t in &shift_min[a + 1..] {
                if s.dominates(*t, n) || t.dominates(*s, n) {
                    return Err(Error::NotSimple(format!(
                        "{s} and {t} are comparable under shifts"
                    )));
                }
            }
        }
        Ok(CompleteGame { n, shift_min })
    }

    pub(crate) fn new_unchecked(n: usize, shift_min: Vec<Coalition>) -> CompleteGame {
        CompleteGame { n, shift_min }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shift_minimal_winning(&self) -> &[Coalition] {
        &self.shift_min
    }

    pub fn is_winning(&self, s: Coalition) -> bool {
        self.shift_min.iter().any(|&t| s.dominates(t, self.n))
    }

    pub fn to_explicit(&self) -> Result<ExplicitGame> {
        if self.n > MAX_EXPLICIT_VOTERS {
            return Err(Error::VoterCount {
                n: self.n,
                min: 1,
                max: MAX_EXPLICIT_VOTERS,
            });
        }
        ExplicitGame::from_fn(self.n, |s| self.is_winning(s))
    }

    pub fn with_null_voters(&self, k: usize) -> Result<CompleteGame> {
        let m = self.n + k;
        if m > MAX_VOTERS {
            return Err(Error::VoterCount {
                n: m,
                min: 1,
                max: MAX_VOTERS,
            });
        }
        Ok(CompleteGame {
            n: m,
            shift_min: self.shift_min.clone(),
        })
    }

    /// Losing coalitions all of whose immediate successors in the shift order win.
    pub fn shift_maximal_losing(&self) -> Vec<Coalition> {
        shift_maximal_losing(self.n, |s| self.is_winning(s))
    }

    /// Exact weightedness test; the certificate has non-increasing weights.
    pub fn is_weighted(&self) -> Option<WeightedGame> {
        let cert = lp::find_weights(self.n, &self.shift_min, &self.shift_maximal_losing(), true)?;
        Some(
            WeightedGame::from_integers(cert.quota, &cert.weights)
                .expect("certificate is a simple game"),
        )
    }

    /// Number of null voters; in a complete game these are a suffix of the order.
    pub fn null_voters(&self) -> usize {
        let used = self.shift_min.iter().fold(0u64, |m, s| m | s.bits());
        self.n - (64 - used.leading_zeros() as usize)
    }
}

pub(crate) fn shift_maximal_losing<F: Fn(Coalition) -> bool>(n: usize, wins: F) -> Vec<Coalition> {
    (0..1u64 << n)
        .map(Coalition)
        .filter(|&l| {
            !wins(l)
                && (0..n).all(|j| {
                    if !l.contains(j) {
                        wins(l.with(j))
                    } else {
                        // replace j by any stronger voter outside L
                        (0..j).all(|i| l.contains(i) || wins(l.without(j).with(i)))
                    }
                })
        })
        .collect()
}

impl fmt::Display for CompleteGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; shiftminwin=", self.n)?;
        for (k, s) in self.shift_min.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CompleteGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[usize]) -> Coalition {
        Coalition::from_voters(v.iter().copied())
    }

    #[test]
    fn matches_weighted_example_on_all_coalitions() {
        let cg = CompleteGame::new(4, vec![c(&[1]), c(&[2, 4])]).unwrap();
        let wg = WeightedGame::from_integers(3, &[3, 2, 1, 1]).unwrap();
        for s in 0..16u64 {
            assert_eq!(
                cg.is_winning(Coalition(s)),
                wg.is_winning(Coalition(s)),
                "{}",
                Coalition(s)
            );
        }
        assert_eq!(cg.shift_maximal_losing(), vec![c(&[2]), c(&[3, 4])]);
    }

    #[test]
    fn rejects_comparable_generators() {
        assert!(CompleteGame::new(4, vec![c(&[1]), c(&[2])]).is_err());
        assert!(CompleteGame::new(4, vec![c(&[1]), c(&[1, 2])]).is_err());
        assert!(CompleteGame::new(3, vec![Coalition::EMPTY]).is_err());
        assert!(CompleteGame::new(3, vec![]).is_err());
        assert!(CompleteGame::new(2, vec![c(&[3])]).is_err());
    }

    #[test]
    fn null_voters_are_a_suffix() {
        let g = CompleteGame::new(7, vec![c(&[4, 5, 6, 7]), c(&[2, 4]), c(&[1])]).unwrap();
        assert_eq!(g.null_voters(), 0);
        assert_eq!(g.with_null_voters(1).unwrap().null_voters(), 1);
        let dictator = CompleteGame::new(3, vec![c(&[1])]).unwrap();
        assert_eq!(dictator.null_voters(), 2);
    }

    #[test]
    fn weightedness_of_small_examples() {
        let g = CompleteGame::new(4, vec![c(&[1]), c(&[2, 4])]).unwrap();
        let w = g.is_weighted().unwrap();
        assert_eq!(w.to_explicit().unwrap(), g.to_explicit().unwrap());
        // |S| >= 3 and S meets {1,2}
        let e =
            ExplicitGame::from_fn(6, |s| s.len() >= 3 && (s.contains(0) || s.contains(1))).unwrap();
        let cg = e.shift_minimal_winning().unwrap();
        assert_eq!(cg.shift_minimal_winning(), &[c(&[2, 5, 6])]);
        assert!(cg.is_weighted().is_none());
    }
}
