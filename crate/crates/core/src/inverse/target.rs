use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::indices::{IndexKind, PowerVector};
use crate::number::{parse_rational, Rational};

/// A power distribution to approximate.
///
/// Entries are exact. Targets read from decimals may miss a sum of one by
/// rounding; `tolerance` records how far off the sum is allowed to be.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Target {
    vector: PowerVector,
    tolerance: Rational,
}

impl Target {
    /// A target that sums to exactly one.
    pub fn exact(vector: PowerVector) -> Result<Target> {
        Target::with_tolerance(vector, Rational::zero())
    }

    pub fn with_tolerance(vector: PowerVector, tolerance: Rational) -> Result<Target> {
        let sum: u128 = vector
            .numerators()
            .iter()
            .try_fold(0u128, |a, &x| a.checked_add(x))
            .ok_or(Error::Overflow("target sum"))?;
        let diff = Rational::new(
            sum as i128 - vector.denominator() as i128,
            vector.denominator() as i128,
        );
        if diff.abs() > tolerance {
            return Err(Error::InvalidTarget(format!(
                "entries sum to {} instead of 1",
                Rational::from_integer(1) + diff
            )));
        }
        Ok(Target { vector, tolerance })
    }

    pub fn from_values(
        kind: IndexKind,
        values: &[Rational],
        tolerance: Rational,
    ) -> Result<Target> {
        Target::with_tolerance(PowerVector::from_rationals(kind, values)?, tolerance)
    }

    /// `(2, ..., 2, 1) / (2n - 1)`.
    pub fn beta(n: usize, kind: IndexKind) -> Result<Target> {
        if n == 0 {
            return Err(Error::InvalidTarget("empty target".into()));
        }
        let mut nums = vec![2u128; n];
        nums[n - 1] = 1;
        Target::exact(PowerVector::from_parts(kind, nums, 2 * n as u128 - 1)?)
    }

    pub fn n(&self) -> usize {
        self.vector.n()
    }

    pub fn kind(&self) -> IndexKind {
        self.vector.kind()
    }

    pub fn vector(&self) -> &PowerVector {
        &self.vector
    }

    pub fn tolerance(&self) -> Rational {
        self.tolerance
    }
}

/// Text form: a header line `n=<n> index=<ssi|pbi>` followed by `n`
/// whitespace-separated rationals or decimals. Decimal entries get a
/// tolerance of half a unit in their last place per entry.
impl FromStr for Target {
    type Err = Error;

    fn from_str(text: &str) -> Result<Target> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidTarget("missing header line".into()))?;
        let mut n = None;
        let mut kind = None;
        for field in header.split_whitespace() {
            match field.split_once('=') {
                Some(("n", v)) => {
                    n = Some(
                        v.parse::<usize>()
                            .map_err(|_| Error::InvalidTarget(format!("bad voter count '{v}'")))?,
                    )
                }
                Some(("index", v)) => kind = Some(v.parse::<IndexKind>()?),
                _ => {
                    return Err(Error::InvalidTarget(format!(
                        "unexpected header field '{field}'"
                    )))
                }
            }
        }
        let n = n.ok_or_else(|| Error::InvalidTarget("header lacks n=".into()))?;
        let kind = kind.ok_or_else(|| Error::InvalidTarget("header lacks index=".into()))?;
        let tokens: Vec<&str> = lines.flat_map(str::split_whitespace).collect();
        if tokens.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: tokens.len(),
            });
        }
        let mut values = Vec::with_capacity(n);
        let mut tolerance = Rational::zero();
        for t in tokens {
            let v = parse_rational(t)
                .ok_or_else(|| Error::InvalidTarget(format!("bad entry '{t}'")))?;
            if let Some((_, frac)) = t.split_once('.') {
                tolerance += Rational::new(1, 2 * 10i128.pow(frac.len().min(30) as u32));
            }
            values.push(v);
        }
        Target::from_values(kind, &values, tolerance)
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} index={}", self.n(), self.kind().name())?;
        let entries: Vec<String> = self
            .vector
            .entries()
            .iter()
            .map(crate::number::fraction_string)
            .collect();
        write!(f, "{}", entries.join(" "))
    }
}
