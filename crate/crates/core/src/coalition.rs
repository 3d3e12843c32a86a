use std::fmt;

/// A set of voters packed into a 64-bit mask; voter `i` (0-based) is bit `i`.
///
/// Text renderings use 1-based voter numbers, so bit 0 prints as voter 1.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coalition(pub u64);

pub const MAX_VOTERS: usize = 64;

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn full(n: usize) -> Coalition {
        if n >= 64 {
            Coalition(u64::MAX)
        } else {
            Coalition((1u64 << n) - 1)
        }
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(members: I) -> Coalition {
        Coalition(members.into_iter().fold(0, |m, i| m | (1u64 << i)))
    }

    /// Builds a coalition from 1-based voter numbers.
    pub fn from_voters<I: IntoIterator<Item = usize>>(voters: I) -> Coalition {
        Coalition::from_members(voters.into_iter().map(|v| v - 1))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Coalition {
        Coalition(self.0 | 1 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Coalition {
        Coalition(self.0 & !(1 << i))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    /// 0-based members in increasing order.
    pub fn members(self) -> Members {
        Members(self.0)
    }

    /// True when `self` is at least as strong as `other` in the shift order:
    /// every prefix `{0..k}` holds at least as many members of `self` as of `other`.
    pub fn dominates(self, other: Coalition, n: usize) -> bool {
        if self.len() < other.len() {
            return false;
        }
        let mut a = 0u32;
        let mut b = 0u32;
        for i in 0..n {
            a += (self.0 >> i & 1) as u32;
            b += (other.0 >> i & 1) as u32;
            if a < b {
                return false;
            }
        }
        true
    }
}

pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.members().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
