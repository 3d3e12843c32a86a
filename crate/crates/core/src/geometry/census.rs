use std::collections::HashSet;

use rayon::prelude::*;

use crate::enumeration::{fold_complete, GameCatalog, GameClass, ShiftPoset, UpSet};
use crate::error::Result;
use crate::indices::SmallProfile;
use crate::indices::{IndexKind, PowerVector};

/// Compact exact power vector for `n <= 8`: numerators over a denominator,
/// reduced so that equal vectors have equal keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VectorKey {
    pub nums: [u32; 8],
    pub den: u32,
}

impl VectorKey {
    pub fn from_profile(p: &SmallProfile, kind: IndexKind) -> VectorKey {
        let (nums, den) = match kind {
            IndexKind::Ssi => {
                let fact = [1u32, 1, 2, 6, 24, 120, 720, 5040, 40320];
                (p.ssi_numerators(), fact[p.n])
            }
            IndexKind::Pbi => p.reduced_swings(),
        };
        VectorKey { nums, den }
    }

    pub fn to_vector(&self, kind: IndexKind, n: usize) -> PowerVector {
        let nums = self.nums[..n].iter().map(|&x| x as u128).collect();
        PowerVector::from_parts(kind, nums, self.den as u128)
            .expect("keys come from valid profiles")
    }
}

/// Distinct power vectors of the weighted and of all complete games on `n` voters.
#[derive(Debug, Clone, Default)]
pub struct Census {
    pub n: usize,
    pub kinds: Vec<IndexKind>,
    pub weighted: Vec<HashSet<VectorKey>>,
    pub complete: Vec<HashSet<VectorKey>>,
}

impl Census {
    fn slot(&self, kind: IndexKind) -> usize {
        self.kinds
            .iter()
            .position(|&k| k == kind)
            .expect("kind not collected")
    }

    pub fn weighted(&self, kind: IndexKind) -> &HashSet<VectorKey> {
        &self.weighted[self.slot(kind)]
    }

    pub fn complete(&self, kind: IndexKind) -> &HashSet<VectorKey> {
        &self.complete[self.slot(kind)]
    }

    fn merge(mut self, other: Census) -> Census {
        for (a, b) in self.weighted.iter_mut().zip(other.weighted) {
            merge_set(a, b);
        }
        for (a, b) in self.complete.iter_mut().zip(other.complete) {
            merge_set(a, b);
        }
        self
    }
}

fn merge_set(a: &mut HashSet<VectorKey>, mut b: HashSet<VectorKey>) {
    if a.len() < b.len() {
        std::mem::swap(a, &mut b);
    }
    a.extend(b);
}

/// Streams every complete game on `n <= 8` voters once and records the
/// distinct vectors for each requested index. Weightedness is only decided
/// when it can still change the result.
pub fn census(n: usize, kinds: &[IndexKind]) -> Result<Census> {
    let empty = || Census {
        n,
        kinds: kinds.to_vec(),
        weighted: vec![HashSet::new(); kinds.len()],
        complete: vec![HashSet::new(); kinds.len()],
    };
    fold_complete(
        n,
        empty,
        |acc: &mut Census, poset: &ShiftPoset, u: &UpSet| {
            let profile = SmallProfile::from_table(n, u.table);
            let keys: Vec<VectorKey> = kinds
                .iter()
                .map(|&k| VectorKey::from_profile(&profile, k))
                .collect();
            let mut undecided = false;
            for (slot, key) in keys.iter().enumerate() {
                acc.complete[slot].insert(*key);
                undecided |= !acc.weighted[slot].contains(key);
            }
            if undecided && u.certificate(poset).is_some() {
                for (slot, key) in keys.into_iter().enumerate() {
                    acc.weighted[slot].insert(key);
                }
            }
        },
        Census::merge,
    )
}

const TABLE_WG_SSI: [u64; 6] = [4, 11, 53, 536, 14_188, 1_364_907];
const TABLE_WG_PBI: [u64; 6] = [4, 12, 57, 555, 14_720, 1_366_032];
const TABLE_CG_SSI: [u64; 6] = [4, 11, 53, 536, 17_973, 6_314_952];
const TABLE_CG_PBI: [u64; 6] = [4, 12, 57, 555, 18_600, 4_616_157];

/// Published number of distinct power vectors for weighted or complete
/// games on `3 <= n <= 8` voters.
pub fn known_distinct_count(class: GameClass, kind: IndexKind, n: usize) -> Option<u64> {
    let table = match (class, kind) {
        (GameClass::Weighted, IndexKind::Ssi) => &TABLE_WG_SSI,
        (GameClass::Weighted, IndexKind::Pbi) => &TABLE_WG_PBI,
        (GameClass::Complete, IndexKind::Ssi) => &TABLE_CG_SSI,
        (GameClass::Complete, IndexKind::Pbi) => &TABLE_CG_PBI,
        (GameClass::Simple, _) => return None,
    };
    n.checked_sub(3).and_then(|i| table.get(i)).copied()
}

/// Number of distinct power vectors in a catalog.
pub fn count_distinct(catalog: &GameCatalog, kind: IndexKind) -> Result<usize> {
    let keys: Result<HashSet<PowerVector>> = catalog
        .entries
        .par_iter()
        .map(|e| match &e.vector {
            Some(v) if v.kind() == kind => Ok(v.clone()),
            _ => crate::indices::power_vector(&e.game, kind, crate::indices::Engine::Direct),
        })
        .collect();
    Ok(keys?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{enumerate_complete, enumerate_weighted};

    #[test]
    fn census_matches_catalog_counts() {
        for n in 1..=6 {
            let c = census(n, &[IndexKind::Ssi, IndexKind::Pbi]).unwrap();
            let wg = enumerate_weighted(n).unwrap();
            let cg = enumerate_complete(n).unwrap();
            for kind in [IndexKind::Ssi, IndexKind::Pbi] {
                assert_eq!(
                    c.weighted(kind).len(),
                    count_distinct(&wg, kind).unwrap(),
                    "n={n} {kind:?}"
                );
                assert_eq!(
                    c.complete(kind).len(),
                    count_distinct(&cg, kind).unwrap(),
                    "n={n} {kind:?}"
                );
            }
        }
    }
}
