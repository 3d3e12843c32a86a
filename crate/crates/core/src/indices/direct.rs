use crate::games::ExplicitGame;
use crate::indices::SwingProfile;

/// Counts swings by walking every winning coalition and testing each member's removal.
pub fn profile_from_table(g: &ExplicitGame) -> SwingProfile {
    let n = g.n();
    let mut by_size = vec![vec![0u128; n]; n];
    let table = g.table();
    let wins = |s: u64| table[(s >> 6) as usize] >> (s & 63) & 1 == 1;
    for (w, &word) in table.iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            let s = (w as u64) << 6 | bits.trailing_zeros() as u64;
            bits &= bits - 1;
            let k = s.count_ones() as usize - 1;
            let mut members = s;
            while members != 0 {
                let i = members.trailing_zeros() as usize;
                members &= members - 1;
                if !wins(s & !(1 << i)) {
                    by_size[i][k] += 1;
                }
            }
        }
    }
    SwingProfile::new(by_size)
}

/// Allocation-free swing profile for `n <= 8`, as used by the enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmallProfile {
    pub n: usize,
    pub by_size: [[u32; 8]; 8],
}

impl SmallProfile {
    /// `table` holds `v(S)` in bit `S` (four words cover `n = 8`).
    pub fn from_table(n: usize, table: &[u64; 4]) -> SmallProfile {
        debug_assert!(n <= 8);
        let mut by_size = [[0u32; 8]; 8];
        let wins = |s: u64| table[(s >> 6) as usize] >> (s & 63) & 1 == 1;
        let words = (1usize << n).div_ceil(64);
        for (w, &word) in table.iter().enumerate().take(words) {
            let mut bits = word;
            while bits != 0 {
                let s = (w as u64) << 6 | bits.trailing_zeros() as u64;
                bits &= bits - 1;
                let k = s.count_ones() as usize - 1;
                let mut members = s;
                while members != 0 {
                    let i = members.trailing_zeros() as usize;
                    members &= members - 1;
                    if !wins(s & !(1 << i)) {
                        by_size[i][k] += 1;
                    }
                }
            }
        }
        SmallProfile { n, by_size }
    }

    /// Shapley-Shubik numerators over `n!`.
    pub fn ssi_numerators(&self) -> [u32; 8] {
        let fact = [1u32, 1, 2, 6, 24, 120, 720, 5040, 40320];
        let n = self.n;
        let mut out = [0u32; 8];
        for i in 0..n {
            out[i] = (0..n)
                .map(|k| self.by_size[i][k] * fact[k] * fact[n - k - 1])
                .sum();
        }
        out
    }

    /// Swing counts divided by their common gcd (equal vectors give equal keys).
    pub fn reduced_swings(&self) -> ([u32; 8], u32) {
        let mut out = [0u32; 8];
        for i in 0..self.n {
            out[i] = self.by_size[i][..self.n].iter().sum();
        }
        let total: u32 = out.iter().sum();
        let g = out.iter().fold(total, |g, &x| num_integer::gcd(g, x));
        for x in &mut out {
            *x /= g;
        }
        (out, total / g)
    }

    pub fn to_profile(&self) -> SwingProfile {
        SwingProfile::new(
            (0..self.n)
                .map(|i| {
                    self.by_size[i][..self.n]
                        .iter()
                        .map(|&c| c as u128)
                        .collect()
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::WeightedGame;

    #[test]
    fn small_profile_agrees_with_general_one() {
        let g = WeightedGame::from_integers(84, &[38, 27, 19, 16, 9, 9, 3, 0])
            .unwrap()
            .to_explicit()
            .unwrap();
        let mut t = [0u64; 4];
        t.copy_from_slice(g.table());
        let small = SmallProfile::from_table(8, &t);
        assert_eq!(small.to_profile(), profile_from_table(&g));
        let (nums, den) = small.to_profile().ssi_numerators().unwrap();
        assert_eq!(den, 40320);
        assert_eq!(
            nums.iter().map(|&x| x as u32).collect::<Vec<_>>(),
            small.ssi_numerators()[..8].to_vec()
        );
        assert_eq!(small.ssi_numerators()[7], 0);
    }
}
