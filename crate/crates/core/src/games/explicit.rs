use std::cmp::Ordering;

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::games::complete::CompleteGame;
use crate::games::lp;
use crate::games::weighted::WeightedGame;

/// Largest voter count for which the full characteristic function is tabulated.
pub const MAX_EXPLICIT_VOTERS: usize = 24;

/// Largest voter count for orbit-based canonical forms.
pub const MAX_ORBIT_VOTERS: usize = 7;

/// A simple game stored as its full characteristic function.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExplicitGame {
    n: usize,
    table: Vec<u64>,
}

/// Outcome of comparing two voters under the desirability relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Desirability {
    /// `i` is strictly more desirable than `j`.
    Geq,
    /// `j` is strictly more desirable than `i`.
    Leq,
    /// `i` and `j` are symmetric.
    Equal,
    Incomparable,
}

fn words_for(n: usize) -> usize {
    (1usize << n).div_ceil(64)
}

impl ExplicitGame {
    /// Tabulates `f` over all `2^n` coalitions and checks that the result is a simple game.
    pub fn from_fn<F: FnMut(Coalition) -> bool>(n: usize, mut f: F) -> Result<ExplicitGame> {
        check_n(n)?;
        let mut table = vec![0u64; words_for(n)];
        for s in 0..1u64 << n {
            if f(Coalition(s)) {
                table[(s >> 6) as usize] |= 1 << (s & 63);
            }
        }
        ExplicitGame::from_table(n, table)
    }

    /// Builds a game from its packed table (bit `S` of the table is `v(S)`).
    pub fn from_table(n: usize, table: Vec<u64>) -> Result<ExplicitGame> {
        check_n(n)?;
        if table.len() != words_for(n) {
            return Err(Error::DimensionMismatch {
                expected: words_for(n),
                found: table.len(),
            });
        }
        let g = ExplicitGame { n, table };
        g.validate()?;
        Ok(g)
    }

    pub(crate) fn from_table_unchecked(n: usize, table: Vec<u64>) -> ExplicitGame {
        debug_assert_eq!(table.len(), words_for(n));
        ExplicitGame { n, table }
    }

    /// Up-closure of the given coalitions.
    pub fn from_minimal_winning(n: usize, minimal: &[Coalition]) -> Result<ExplicitGame> {
        check_n(n)?;
        for s in minimal {
            if !s.is_subset(Coalition::full(n)) {
                return Err(Error::NotSimple(format!(
                    "coalition {s} exceeds {n} voters"
                )));
            }
        }
        ExplicitGame::from_fn(n, |s| minimal.iter().any(|m| m.is_subset(s)))
    }

    fn validate(&self) -> Result<()> {
        if self.is_winning(Coalition::EMPTY) {
            return Err(Error::NotSimple("the empty coalition wins".into()));
        }
        if !self.is_winning(Coalition::full(self.n)) {
            return Err(Error::NotSimple("the grand coalition loses".into()));
        }
        for s in 0..1u64 << self.n {
            if !self.is_winning(Coalition(s)) {
                continue;
            }
            for i in 0..self.n {
                if !self.is_winning(Coalition(s | 1 << i)) {
                    return Err(Error::NotSimple(format!(
                        "not monotone: {} wins but {} loses",
                        Coalition(s),
                        Coalition(s | 1 << i)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &[u64] {
        &self.table
    }

    #[inline]
    pub fn is_winning(&self, s: Coalition) -> bool {
        let s = s.bits();
        self.table[(s >> 6) as usize] >> (s & 63) & 1 == 1
    }

    pub fn winning_count(&self) -> u64 {
        self.table.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn minimal_winning(&self) -> Vec<Coalition> {
        (0..1u64 << self.n)
            .map(Coalition)
            .filter(|&s| self.is_winning(s) && s.members().all(|i| !self.is_winning(s.without(i))))
            .collect()
    }

    pub fn maximal_losing(&self) -> Vec<Coalition> {
        (0..1u64 << self.n)
            .map(Coalition)
            .filter(|&s| {
                !self.is_winning(s)
                    && (0..self.n).all(|i| s.contains(i) || self.is_winning(s.with(i)))
            })
            .collect()
    }

    pub fn desirability(&self, i: usize, j: usize) -> Desirability {
        assert!(i != j && i < self.n && j < self.n);
        let others = Coalition::full(self.n).without(i).without(j).bits();
        let (mut geq, mut leq) = (true, true);
        // walk all subsets of `others`
        let mut s = 0u64;
        loop {
            let a = self.is_winning(Coalition(s).with(i));
            let b = self.is_winning(Coalition(s).with(j));
            geq &= a >= b;
            leq &= b >= a;
            if !geq && !leq {
                return Desirability::Incomparable;
            }
            if s == others {
                break;
            }
            s = (s.wrapping_sub(others)) & others;
        }
        match (geq, leq) {
            (true, true) => Desirability::Equal,
            (true, false) => Desirability::Geq,
            (false, true) => Desirability::Leq,
            (false, false) => Desirability::Incomparable,
        }
    }

    pub fn is_null_voter(&self, i: usize) -> bool {
        (0..1u64 << self.n)
            .map(Coalition)
            .filter(|s| !s.contains(i))
            .all(|s| self.is_winning(s) == self.is_winning(s.with(i)))
    }

    pub fn is_complete(&self) -> bool {
        self.completeness_order().is_some()
    }

    /// If every pair of voters is comparable, the voters sorted from most to
    /// least desirable (ties by index); `None` otherwise.
    pub fn completeness_order(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut dominated = vec![0usize; n];
        for i in 0..n {
            for j in i + 1..n {
                match self.desirability(i, j) {
                    Desirability::Incomparable => return None,
                    Desirability::Geq => dominated[i] += 1,
                    Desirability::Leq => dominated[j] += 1,
                    Desirability::Equal => {
                        dominated[i] += 1;
                        dominated[j] += 1;
                    }
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(dominated[i]));
        Some(order)
    }

    /// Relabels voters so that new voter `k` is old voter `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> ExplicitGame {
        assert_eq!(order.len(), self.n);
        let mut table = vec![0u64; self.table.len()];
        for s in 0..1u64 << self.n {
            let old = order
                .iter()
                .enumerate()
                .filter(|&(k, _)| s >> k & 1 == 1)
                .fold(0u64, |m, (_, &o)| m | 1 << o);
            if self.is_winning(Coalition(old)) {
                table[(s >> 6) as usize] |= 1 << (s & 63);
            }
        }
        ExplicitGame { n: self.n, table }
    }

    /// Appends `k` null voters.
    pub fn with_null_voters(&self, k: usize) -> Result<ExplicitGame> {
        let m = self.n + k;
        check_n(m)?;
        let low = (1u64 << self.n) - 1;
        Ok(ExplicitGame::from_table_unchecked(
            m,
            (0..words_for(m))
                .map(|w| {
                    (0..64u64)
                        .filter(|b| {
                            let s = (w as u64) * 64 + b;
                            s < 1 << m && self.is_winning(Coalition(s & low))
                        })
                        .fold(0u64, |acc, b| acc | 1 << b)
                })
                .collect(),
        ))
    }

    /// Decides weightedness exactly; on success returns an integer representation.
    pub fn is_weighted(&self) -> Option<WeightedGame> {
        let cert = lp::find_weights(
            self.n,
            &self.minimal_winning(),
            &self.maximal_losing(),
            false,
        )?;
        Some(
            WeightedGame::from_integers(cert.quota, &cert.weights)
                .expect("certificate is a simple game"),
        )
    }

    /// Shift-minimal winning coalitions, for a complete game whose voters are
    /// already sorted by desirability.
    pub fn shift_minimal_winning(&self) -> Result<CompleteGame> {
        match self.completeness_order() {
            Some(order) if order.iter().enumerate().all(|(k, &o)| k == o) => {}
            Some(_) => {
                return Err(Error::Unsupported(
                    "voters are not sorted by desirability".into(),
                ))
            }
            None => return Err(Error::NotComplete),
        }
        let n = self.n;
        let list = (0..1u64 << n)
            .map(Coalition)
            .filter(|&s| {
                self.is_winning(s)
                    && s.members().all(|i| {
                        !self.is_winning(s.without(i))
                            && (i + 1..n)
                                .all(|j| s.contains(j) || !self.is_winning(s.without(i).with(j)))
                    })
            })
            .collect();
        CompleteGame::new(n, list)
    }

    /// Canonical representative of the isomorphism class: voters sorted by
    /// desirability for complete games, otherwise the lexicographically
    /// smallest table over all voter permutations (n <= 7).
    pub fn canonical_form(&self) -> Result<ExplicitGame> {
        if let Some(order) = self.completeness_order() {
            return Ok(self.permuted(&order));
        }
        if self.n > MAX_ORBIT_VOTERS {
            return Err(Error::VoterCount {
                n: self.n,
                min: 1,
                max: MAX_ORBIT_VOTERS,
            });
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut best = self.clone();
        while next_permutation(&mut perm) {
            let cand = self.permuted(&perm);
            if cand.table_cmp(&best) == Ordering::Less {
                best = cand;
            }
        }
        Ok(best)
    }

    /// Lexicographic order of the tables read as bit strings `v(0), v(1), ...`.
    pub fn table_cmp(&self, other: &ExplicitGame) -> Ordering {
        for (a, b) in self.table.iter().zip(&other.table) {
            if a != b {
                let low = (a ^ b).trailing_zeros();
                return (a >> low & 1).cmp(&(b >> low & 1));
            }
        }
        self.table.len().cmp(&other.table.len())
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_EXPLICIT_VOTERS {
        return Err(Error::VoterCount {
            n,
            min: 1,
            max: MAX_EXPLICIT_VOTERS,
        });
    }
    Ok(())
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

impl std::fmt::Debug for ExplicitGame {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for ExplicitGame {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "n={}; minwin=", self.n)?;
        for (k, s) in self.minimal_winning().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
