use crate::coalition::Coalition;

/// Bitset over the `2^n <= 256` coalitions of at most eight voters.
pub type Mask = [u64; 4];

#[inline]
pub fn mask_get(m: &Mask, s: u64) -> bool {
    m[(s >> 6) as usize] >> (s & 63) & 1 == 1
}

#[inline]
pub fn mask_set(m: &mut Mask, s: u64) {
    m[(s >> 6) as usize] |= 1 << (s & 63);
}

#[inline]
pub fn mask_or(a: &Mask, b: &Mask) -> Mask {
    [a[0] | b[0], a[1] | b[1], a[2] | b[2], a[3] | b[3]]
}

#[inline]
pub fn mask_andnot(a: &Mask, b: &Mask) -> Mask {
    [a[0] & !b[0], a[1] & !b[1], a[2] & !b[2], a[3] & !b[3]]
}

/// Largest voter count the fixed-size masks support.
pub const MAX_POSET_VOTERS: usize = 8;

/// Coalitions of `n <= 8` voters ordered by inclusion plus left shifts
/// (replacing a member by a stronger, lower-numbered voter). Complete simple
/// games with voters ordered `1 ⪰ ... ⪰ n` are exactly the up-sets of this
/// order that contain the grand coalition but not the empty one.
#[derive(Debug, Clone)]
pub struct ShiftPoset {
    n: usize,
    up: Vec<Mask>,
    down: Vec<Mask>,
    succ: Vec<Vec<u64>>,
}

impl ShiftPoset {
    pub fn new(n: usize) -> ShiftPoset {
        assert!(
            (1..=MAX_POSET_VOTERS).contains(&n),
            "shift poset needs 1..=8 voters"
        );
        let size = 1u64 << n;
        let mut up = vec![[0u64; 4]; size as usize];
        let mut down = vec![[0u64; 4]; size as usize];
        for a in 0..size {
            for b in 0..size {
                if Coalition(b).dominates(Coalition(a), n) {
                    mask_set(&mut up[a as usize], b);
                    mask_set(&mut down[b as usize], a);
                }
            }
        }
        let succ = (0..size)
            .map(|x| {
                let mut out = Vec::new();
                for j in 0..n {
                    if x >> j & 1 == 0 {
                        out.push(x | 1 << j);
                    } else if j > 0 && x >> (j - 1) & 1 == 0 {
                        out.push(x & !(1 << j) | 1 << (j - 1));
                    }
                }
                out
            })
            .collect();
        ShiftPoset { n, up, down, succ }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        1 << self.n
    }

    /// `a ≤ b`: `b` is reachable from `a` by adding members and left shifts.
    pub fn leq(&self, a: Coalition, b: Coalition) -> bool {
        mask_get(&self.up[a.bits() as usize], b.bits())
    }

    pub fn up(&self, x: Coalition) -> &Mask {
        &self.up[x.bits() as usize]
    }

    pub fn down(&self, x: Coalition) -> &Mask {
        &self.down[x.bits() as usize]
    }

    /// One-step successors: add a voter, or move a member one place stronger.
    pub fn successors(&self, x: Coalition) -> impl Iterator<Item = Coalition> + '_ {
        self.succ[x.bits() as usize].iter().map(|&s| Coalition(s))
    }

    /// Characteristic table of the up-set generated by `gens`.
    pub fn up_closure(&self, gens: &[Coalition]) -> Mask {
        gens.iter().fold([0u64; 4], |m, g| mask_or(&m, self.up(*g)))
    }

    /// Maximal losing coalitions of the up-set `table`.
    pub fn maximal_losing(&self, table: &Mask) -> Vec<Coalition> {
        (0..self.size() as u64)
            .filter(|&x| {
                !mask_get(table, x) && self.succ[x as usize].iter().all(|&s| mask_get(table, s))
            })
            .map(Coalition)
            .collect()
    }
}
