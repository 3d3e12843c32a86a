//! Shapley-Shubik and Penrose-Banzhaf indices as exact rationals.
//!
//! Both indices are derived from a [`SwingProfile`]: for every voter `i` and
//! size `k`, the number of coalitions `S` with `|S| = k`, `i ∉ S`, `S` losing
//! and `S ∪ {i}` winning. The profile comes either from direct enumeration of
//! the characteristic function or from a dynamic program over
//! (coalition size, clamped leaf weight sums).

mod direct;
mod dp;

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::games::Game;
use crate::number::{fraction_string, Rational};

pub use direct::{profile_from_table, SmallProfile};
pub use dp::{DpConfig, DEFAULT_STATE_CAP};

/// Largest `n` for which `n!` (the Shapley-Shubik denominator) fits the exact integer types.
pub const MAX_SSI_VOTERS: usize = 33;

/// Largest `n` for which the direct engine is used automatically on weighted
/// games and combinations.
const AUTO_DIRECT_MAX: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndexKind {
    Ssi,
    Pbi,
}

impl IndexKind {
    pub fn name(self) -> &'static str {
        match self {
            IndexKind::Ssi => "ssi",
            IndexKind::Pbi => "pbi",
        }
    }

    pub fn code(self) -> u8 {
        match self {
            IndexKind::Ssi => 0,
            IndexKind::Pbi => 1,
        }
    }

    pub fn from_code(c: u8) -> Option<IndexKind> {
        match c {
            0 => Some(IndexKind::Ssi),
            1 => Some(IndexKind::Pbi),
            _ => None,
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<IndexKind> {
        match s.to_ascii_lowercase().as_str() {
            "ssi" | "shapley" | "shapley-shubik" => Ok(IndexKind::Ssi),
            "pbi" | "banzhaf" | "penrose-banzhaf" => Ok(IndexKind::Pbi),
            _ => Err(Error::Unsupported(format!("unknown index '{s}'"))),
        }
    }
}

/// A vector of non-negative exact rationals over one common denominator,
/// always stored fully reduced so that equal vectors compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PowerVector {
    kind: IndexKind,
    nums: Vec<u128>,
    den: u128,
}

impl PowerVector {
    /// Builds `nums / den`, reducing to lowest terms.
    pub fn from_parts(kind: IndexKind, mut nums: Vec<u128>, mut den: u128) -> Result<PowerVector> {
        if den == 0 {
            return Err(Error::InvalidTarget("zero denominator".into()));
        }
        if nums.is_empty() {
            return Err(Error::InvalidTarget("empty vector".into()));
        }
        if den > i128::MAX as u128 || nums.iter().any(|&x| x > i128::MAX as u128) {
            return Err(Error::Overflow("power vector entries"));
        }
        let g = nums.iter().fold(den, |g, x| g.gcd(x));
        if g > 1 {
            nums.iter_mut().for_each(|x| *x /= g);
            den /= g;
        }
        Ok(PowerVector { kind, nums, den })
    }

    /// Builds a vector from arbitrary non-negative rationals.
    pub fn from_rationals(kind: IndexKind, values: &[Rational]) -> Result<PowerVector> {
        if values.iter().any(|v| *v < Rational::zero()) {
            return Err(Error::InvalidTarget("negative entry".into()));
        }
        let den = crate::number::common_denominator(values)?;
        let nums = values
            .iter()
            .map(|v| {
                v.numer()
                    .checked_mul(den / v.denom())
                    .map(|x| x as u128)
                    .ok_or(Error::Overflow("entries"))
            })
            .collect::<Result<Vec<_>>>()?;
        PowerVector::from_parts(kind, nums, den as u128)
    }

    pub fn kind(&self) -> IndexKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.nums.len()
    }

    pub fn numerators(&self) -> &[u128] {
        &self.nums
    }

    pub fn denominator(&self) -> u128 {
        self.den
    }

    pub fn entry(&self, i: usize) -> Rational {
        Rational::new(self.nums[i] as i128, self.den as i128)
    }

    pub fn entries(&self) -> Vec<Rational> {
        (0..self.n()).map(|i| self.entry(i)).collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.nums
            .iter()
            .map(|&x| x as f64 / self.den as f64)
            .collect()
    }

    /// True when the entries sum to exactly one.
    pub fn is_normalized(&self) -> bool {
        self.nums.iter().try_fold(0u128, |a, &x| a.checked_add(x)) == Some(self.den)
    }

    /// Appends `k` zero entries.
    pub fn padded(&self, k: usize) -> PowerVector {
        let mut nums = self.nums.clone();
        nums.extend(std::iter::repeat_n(0, k));
        PowerVector {
            kind: self.kind,
            nums,
            den: self.den,
        }
    }

    pub fn with_kind(&self, kind: IndexKind) -> PowerVector {
        PowerVector {
            kind,
            ..self.clone()
        }
    }
}

impl fmt::Display for PowerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.n() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fraction_string(&self.entry(i)))?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for PowerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self)
    }
}

/// Raw Banzhaf swing counts `η_i` and their total.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwingCounts {
    pub counts: Vec<u128>,
    pub total: u128,
}

/// Swing counts resolved by coalition size: `by_size[i][k]` counts losing
/// `S ⊆ N \ {i}` with `|S| = k` that win once `i` joins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwingProfile {
    n: usize,
    by_size: Vec<Vec<u128>>,
}

impl SwingProfile {
    pub fn new(by_size: Vec<Vec<u128>>) -> SwingProfile {
        let n = by_size.len();
        debug_assert!(by_size.iter().all(|r| r.len() == n));
        SwingProfile { n, by_size }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn by_size(&self) -> &[Vec<u128>] {
        &self.by_size
    }

    pub fn swings(&self) -> SwingCounts {
        let counts: Vec<u128> = self.by_size.iter().map(|r| r.iter().sum()).collect();
        let total = counts.iter().sum();
        SwingCounts { counts, total }
    }

    /// Shapley-Shubik numerators over `n!`.
    pub fn ssi_numerators(&self) -> Result<(Vec<u128>, u128)> {
        let n = self.n;
        if n > MAX_SSI_VOTERS {
            return Err(Error::VoterCount {
                n,
                min: 1,
                max: MAX_SSI_VOTERS,
            });
        }
        let fact = factorials(n);
        let nums = self
            .by_size
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .map(|(k, &c)| c * fact[k] * fact[n - k - 1])
                    .sum()
            })
            .collect();
        Ok((nums, fact[n]))
    }

    pub fn ssi(&self) -> Result<PowerVector> {
        let (nums, den) = self.ssi_numerators()?;
        PowerVector::from_parts(IndexKind::Ssi, nums, den)
    }

    pub fn pbi(&self) -> Result<PowerVector> {
        let s = self.swings();
        PowerVector::from_parts(IndexKind::Pbi, s.counts, s.total)
    }

    pub fn index(&self, kind: IndexKind) -> Result<PowerVector> {
        match kind {
            IndexKind::Ssi => self.ssi(),
            IndexKind::Pbi => self.pbi(),
        }
    }
}

pub(crate) fn factorials(n: usize) -> Vec<u128> {
    let mut f = vec![1u128; n + 1];
    for k in 1..=n {
        f[k] = f[k - 1] * k as u128;
    }
    f
}

/// Which computation path to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// Direct enumeration for tabulated games and moderate `n`, otherwise the DP.
    #[default]
    Auto,
    /// Enumerate all `2^n` coalitions (`n <= 24`).
    Direct,
    /// Dynamic program; weighted games and Boolean combinations only.
    Dp,
}

/// Computes the size-resolved swing profile of `g`.
pub fn swing_profile(g: &Game, engine: Engine, cfg: &DpConfig) -> Result<SwingProfile> {
    let use_dp = match engine {
        Engine::Direct => false,
        Engine::Dp => true,
        Engine::Auto => matches!(g, Game::Weighted(_) | Game::Combo(_)) && g.n() > AUTO_DIRECT_MAX,
    };
    if use_dp {
        match g {
            Game::Weighted(w) => dp::profile_weighted(w, cfg),
            Game::Combo(c) => dp::profile_combo(c, cfg),
            _ => Err(Error::Unsupported(
                "the DP engine needs a weighted game or a Boolean combination".into(),
            )),
        }
    } else {
        Ok(profile_from_table(&g.to_explicit()?))
    }
}

pub fn power_vector(g: &Game, kind: IndexKind, engine: Engine) -> Result<PowerVector> {
    swing_profile(g, engine, &DpConfig::default())?.index(kind)
}

/// Shapley-Shubik index.
pub fn ssi(g: &Game) -> Result<PowerVector> {
    power_vector(g, IndexKind::Ssi, Engine::Auto)
}

/// Penrose-Banzhaf index together with the raw swing counts.
pub fn pbi(g: &Game) -> Result<(PowerVector, SwingCounts)> {
    let p = swing_profile(g, Engine::Auto, &DpConfig::default())?;
    Ok((p.pbi()?, p.swings()))
}

pub fn ssi_dp(g: &Game) -> Result<PowerVector> {
    power_vector(g, IndexKind::Ssi, Engine::Dp)
}

pub fn pbi_dp(g: &Game) -> Result<PowerVector> {
    power_vector(g, IndexKind::Pbi, Engine::Dp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::parse_game;

    fn v(kind: IndexKind, nums: &[u128], den: u128) -> PowerVector {
        PowerVector::from_parts(kind, nums.to_vec(), den).unwrap()
    }

    #[test]
    fn weighted_example_indices() {
        let g = parse_game("[3;3,2,1,1]").unwrap();
        assert_eq!(ssi(&g).unwrap(), v(IndexKind::Ssi, &[7, 3, 1, 1], 12));
        let (p, sw) = pbi(&g).unwrap();
        assert_eq!(p, v(IndexKind::Pbi, &[5, 3, 1, 1], 10));
        assert_eq!(sw.counts, vec![5, 3, 1, 1]);
        assert_eq!(sw.total, 10);
        assert_eq!(ssi_dp(&g).unwrap(), ssi(&g).unwrap());
        assert_eq!(pbi_dp(&g).unwrap(), p);
    }

    #[test]
    fn equal_power_examples() {
        for text in [
            "[2;1,1,1,1]",
            "[3;1,1,1,1]",
            "[2;1,1,0,0] | [2;0,0,1,1]",
            "[2;2,0,1,1] & [2;0,2,1,1]",
        ] {
            let g = parse_game(text).unwrap();
            let quarter = v(IndexKind::Ssi, &[1, 1, 1, 1], 4);
            assert_eq!(ssi(&g).unwrap(), quarter, "{text}");
            assert_eq!(
                pbi(&g).unwrap().0,
                quarter.with_kind(IndexKind::Pbi),
                "{text}"
            );
        }
    }

    #[test]
    fn dictator_and_unanimity() {
        let g = parse_game("[1;1,0,0]").unwrap();
        assert_eq!(pbi(&g).unwrap().0, v(IndexKind::Pbi, &[1, 0, 0], 1));
        let u = parse_game("[6;1,1,1,1,1,1]").unwrap();
        assert_eq!(pbi_dp(&u).unwrap(), v(IndexKind::Pbi, &[1; 6], 6));
        assert_eq!(ssi_dp(&u).unwrap(), v(IndexKind::Ssi, &[1; 6], 6));
    }

    #[test]
    fn dp_rejects_tabulated_games() {
        let g = parse_game("n=4; minwin={1,2},{3,4}").unwrap();
        assert!(matches!(ssi_dp(&g), Err(Error::Unsupported(_))));
    }

    #[test]
    fn reduction_makes_representation_canonical() {
        assert_eq!(v(IndexKind::Pbi, &[2, 2], 4), v(IndexKind::Pbi, &[1, 1], 2));
        assert!(v(IndexKind::Pbi, &[2, 2], 4).is_normalized());
        assert!(!v(IndexKind::Pbi, &[1, 2], 4).is_normalized());
    }
}
