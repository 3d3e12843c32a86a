use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::indices::PowerVector;
use crate::number::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Metric {
    /// Manhattan distance `Σ |x_i - y_i|`.
    L1,
    /// Chebyshev distance `max |x_i - y_i|`.
    Linf,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::L1 => "l1",
            Metric::Linf => "linf",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Metric> {
        match s.to_ascii_lowercase().as_str() {
            "l1" | "manhattan" | "1" => Ok(Metric::L1),
            "linf" | "chebyshev" | "inf" | "max" => Ok(Metric::Linf),
            _ => Err(Error::Unsupported(format!("unknown metric '{s}'"))),
        }
    }
}

/// Unreduced non-negative fraction used on hot paths.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Frac {
    pub num: u128,
    pub den: u128,
}

impl Frac {
    pub fn cmp(&self, other: &Frac) -> Ordering {
        match (
            self.num.checked_mul(other.den),
            other.num.checked_mul(self.den),
        ) {
            (Some(a), Some(b)) => a.cmp(&b),
            _ => self.to_rational().cmp(&other.to_rational()),
        }
    }

    pub fn to_rational(self) -> Rational {
        let g = self.num.gcd(&self.den);
        Rational::new((self.num / g) as i128, (self.den / g) as i128)
    }
}

/// Exact distance as an unreduced fraction over `lcm(den_x, den_y)`.
pub(crate) fn distance_frac(x: &PowerVector, y: &PowerVector, m: Metric) -> Result<Frac> {
    distance_raw(
        x.numerators(),
        x.denominator(),
        y.numerators(),
        y.denominator(),
        m,
    )
}

/// [`distance_frac`] on bare numerators and denominators.
pub(crate) fn distance_raw(x: &[u128], a: u128, y: &[u128], b: u128, m: Metric) -> Result<Frac> {
    let l = a / a.gcd(&b);
    let l = l.checked_mul(b).ok_or(Error::Overflow("distance"))?;
    let (sa, sb) = (l / a, l / b);
    let mut acc: u128 = 0;
    for (&p, &q) in x.iter().zip(y) {
        let p = p.checked_mul(sa).ok_or(Error::Overflow("distance"))?;
        let q = q.checked_mul(sb).ok_or(Error::Overflow("distance"))?;
        let d = p.abs_diff(q);
        acc = match m {
            Metric::L1 => acc.checked_add(d).ok_or(Error::Overflow("distance"))?,
            Metric::Linf => acc.max(d),
        };
    }
    Ok(Frac { num: acc, den: l })
}

/// Exact distance between two power vectors of the same kind and length.
pub fn distance(x: &PowerVector, y: &PowerVector, m: Metric) -> Result<Rational> {
    if x.n() != y.n() {
        return Err(Error::DimensionMismatch {
            expected: x.n(),
            found: y.n(),
        });
    }
    if x.kind() != y.kind() {
        return Err(Error::KindMismatch);
    }
    let f = distance_frac(x, y, m)?;
    if f.den > i128::MAX as u128 {
        return Err(Error::Overflow("distance"));
    }
    Ok(f.to_rational())
}

/// Lexicographic comparison of the entries as rationals.
pub(crate) fn lex_cmp(x: &PowerVector, y: &PowerVector) -> Ordering {
    let (a, b) = (x.denominator(), y.denominator());
    for (&p, &q) in x.numerators().iter().zip(y.numerators()) {
        let o = match (p.checked_mul(b), q.checked_mul(a)) {
            (Some(l), Some(r)) => l.cmp(&r),
            _ => Rational::new(p as i128, a as i128).cmp(&Rational::new(q as i128, b as i128)),
        };
        if o != Ordering::Equal {
            return o;
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::IndexKind;

    fn pv(nums: &[u128], den: u128) -> PowerVector {
        PowerVector::from_parts(IndexKind::Ssi, nums.to_vec(), den).unwrap()
    }

    #[test]
    fn worked_example_distances() {
        // SSI([3;3,2,1,1]) against the PBI values (0.5, 0.3, 0.1, 0.1), compared as plain vectors
        let x = pv(&[7, 3, 1, 1], 12);
        let y = pv(&[5, 3, 1, 1], 10);
        assert_eq!(distance(&x, &y, Metric::L1).unwrap(), Rational::new(1, 6));
        assert_eq!(
            distance(&x, &y, Metric::Linf).unwrap(),
            Rational::new(1, 12)
        );
        assert_eq!(
            distance(&x, &x, Metric::L1).unwrap(),
            Rational::from_integer(0)
        );
    }

    #[test]
    fn mismatches_are_errors() {
        let x = pv(&[1, 1], 2);
        let y = pv(&[1, 1, 1], 3);
        assert!(matches!(
            distance(&x, &y, Metric::L1),
            Err(Error::DimensionMismatch { .. })
        ));
        let z = x.with_kind(IndexKind::Pbi);
        assert!(matches!(
            distance(&x, &z, Metric::L1),
            Err(Error::KindMismatch)
        ));
    }
}
