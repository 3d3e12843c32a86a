//! Deduplicated store of exact power vectors with nearest-neighbour queries.
//!
//! The k-d tree works on a fixed-point image of each vector: coordinate `x`
//! maps to `floor(x * 2^40)`. A stored point and the query differ by more
//! than `(|X - Y| - 1) / 2^40` in every coordinate, so integer box bounds are
//! valid lower bounds on the exact distance and pruning never discards a
//! candidate that could tie or beat the current best. Candidate distances
//! are always compared exactly.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geometry::metric::{distance_frac, lex_cmp, Frac, Metric};
use crate::indices::{IndexKind, PowerVector};
use crate::number::Rational;

const SCALE_BITS: u32 = 40;
const BUCKET: usize = 8;

fn fixed_point(v: &PowerVector) -> Result<Vec<i64>> {
    let den = v.denominator();
    v.numerators()
        .iter()
        .map(|&x| {
            let shifted = x
                .checked_shl(SCALE_BITS)
                .filter(|s| s >> SCALE_BITS == x)
                .ok_or(Error::Overflow("fixed point"))?;
            i64::try_from(shifted / den).map_err(|_| Error::Overflow("fixed point"))
        })
        .collect()
}

/// Smallest integer `c` with `r * 2^40 <= c`.
fn ceil_scaled(r: &Frac) -> u128 {
    match r
        .num
        .checked_shl(SCALE_BITS)
        .filter(|s| s >> SCALE_BITS == r.num)
    {
        Some(s) => s.div_ceil(r.den),
        None => u128::MAX,
    }
}

enum Node {
    Leaf { start: usize, end: usize },
    Split { left: usize, right: usize },
}

/// Result of a nearest-neighbour query.
#[derive(Debug, Clone)]
pub struct Neighbor<'a, P> {
    pub index: usize,
    pub vector: &'a PowerVector,
    pub payload: &'a P,
    pub distance: Rational,
}

/// Immutable after construction; queries take `&self` and can run concurrently.
pub struct VectorStore<P = ()> {
    n: usize,
    kind: IndexKind,
    vectors: Vec<PowerVector>,
    payloads: Vec<P>,
    keys: Vec<Vec<i64>>,
    lookup: HashMap<PowerVector, usize>,
    /// Point indices, permuted so every leaf covers a contiguous range.
    order: Vec<usize>,
    nodes: Vec<Node>,
    /// Box of each node in tree dimensions (the first `n - 1` coordinates).
    boxes: Vec<(Vec<i64>, Vec<i64>)>,
}

impl<P: Clone + Ord> VectorStore<P> {
    /// Deduplicates `items`; for repeated vectors the smallest payload is kept.
    pub fn build<I: IntoIterator<Item = (PowerVector, P)>>(
        kind: IndexKind,
        n: usize,
        items: I,
    ) -> Result<Self> {
        let mut lookup: HashMap<PowerVector, usize> = HashMap::new();
        let mut vectors = Vec::new();
        let mut payloads: Vec<P> = Vec::new();
        for (v, p) in items {
            if v.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.n(),
                });
            }
            if v.kind() != kind {
                return Err(Error::KindMismatch);
            }
            match lookup.get(&v) {
                Some(&i) => {
                    if p < payloads[i] {
                        payloads[i] = p;
                    }
                }
                None => {
                    lookup.insert(v.clone(), vectors.len());
                    vectors.push(v);
                    payloads.push(p);
                }
            }
        }
        let keys = vectors
            .iter()
            .map(fixed_point)
            .collect::<Result<Vec<_>>>()?;
        let mut store = VectorStore {
            n,
            kind,
            vectors,
            payloads,
            keys,
            lookup,
            order: Vec::new(),
            nodes: Vec::new(),
            boxes: Vec::new(),
        };
        store.order = (0..store.vectors.len()).collect();
        if !store.vectors.is_empty() {
            let len = store.order.len();
            store.build_node(0, len);
        }
        Ok(store)
    }
}

impl<P> VectorStore<P> {
    fn dims(&self) -> usize {
        // the last coordinate is fixed by normalisation
        self.n.saturating_sub(1).max(1)
    }

    fn build_node(&mut self, start: usize, end: usize) -> usize {
        let d = self.dims();
        let mut lo = vec![i64::MAX; d];
        let mut hi = vec![i64::MIN; d];
        for &p in &self.order[start..end] {
            for k in 0..d {
                lo[k] = lo[k].min(self.keys[p][k]);
                hi[k] = hi[k].max(self.keys[p][k]);
            }
        }
        let id = self.nodes.len();
        self.boxes.push((lo.clone(), hi.clone()));
        let (dim, spread) = (0..d)
            .map(|k| (k, hi[k] - lo[k]))
            .max_by_key(|&(k, s)| (s, std::cmp::Reverse(k)))
            .unwrap();
        if end - start <= BUCKET || spread == 0 {
            self.nodes.push(Node::Leaf { start, end });
            return id;
        }
        self.nodes.push(Node::Leaf { start, end });
        let mid = start + (end - start) / 2;
        let keys = &self.keys;
        self.order[start..end].select_nth_unstable_by_key(mid - start, |&p| keys[p][dim]);
        let left = self.build_node(start, mid);
        let right = self.build_node(mid, end);
        self.nodes[id] = Node::Split { left, right };
        id
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> IndexKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[PowerVector] {
        &self.vectors
    }

    pub fn payload(&self, i: usize) -> &P {
        &self.payloads[i]
    }

    pub fn contains(&self, v: &PowerVector) -> bool {
        self.lookup.contains_key(v)
    }

    pub fn position(&self, v: &PowerVector) -> Option<usize> {
        self.lookup.get(v).copied()
    }

    fn lower_bound(&self, q: &[i64], lo: &[i64], hi: &[i64], m: Metric) -> u128 {
        let mut acc: u128 = 0;
        for k in 0..lo.len() {
            let gap = if q[k] < lo[k] {
                lo[k] - q[k]
            } else if q[k] > hi[k] {
                q[k] - hi[k]
            } else {
                0
            };
            let gap = (gap.max(1) - 1) as u128;
            acc = match m {
                Metric::L1 => acc + gap,
                Metric::Linf => acc.max(gap),
            };
        }
        acc
    }

    fn point_bound(&self, q: &[i64], p: usize, m: Metric) -> u128 {
        let key = &self.keys[p];
        let mut acc: u128 = 0;
        for k in 0..self.n {
            let gap = ((q[k] - key[k]).unsigned_abs().max(1) - 1) as u128;
            acc = match m {
                Metric::L1 => acc + gap,
                Metric::Linf => acc.max(gap),
            };
        }
        acc
    }

    /// Exact nearest stored vector; ties go to the lexicographically smallest vector.
    pub fn nearest(&self, query: &PowerVector, m: Metric) -> Result<Neighbor<'_, P>> {
        if query.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: query.n(),
            });
        }
        if query.kind() != self.kind {
            return Err(Error::KindMismatch);
        }
        if self.vectors.is_empty() {
            return Err(Error::EmptyStore);
        }
        if let Some(&i) = self.lookup.get(query) {
            return Ok(self.neighbor(i, Rational::from_integer(0)));
        }
        let q = fixed_point(query)?;
        let mut best: Option<(usize, Frac)> = None;
        let mut bound = u128::MAX;
        let mut stack = vec![0usize];
        while let Some(id) = stack.pop() {
            let (lo, hi) = &self.boxes[id];
            if self.lower_bound(&q, lo, hi, m) > bound {
                continue;
            }
            match &self.nodes[id] {
                Node::Leaf { start, end } => {
                    for &p in &self.order[*start..*end] {
                        if self.point_bound(&q, p, m) > bound {
                            continue;
                        }
                        let d = distance_frac(query, &self.vectors[p], m)?;
                        let better = match &best {
                            None => true,
                            Some((b, bd)) => match d.cmp(bd) {
                                Ordering::Less => true,
                                Ordering::Equal => {
                                    lex_cmp(&self.vectors[p], &self.vectors[*b]) == Ordering::Less
                                }
                                Ordering::Greater => false,
                            },
                        };
                        if better {
                            bound = ceil_scaled(&d);
                            best = Some((p, d));
                        }
                    }
                }
                Node::Split { left, right, .. } => {
                    // visit the nearer child first (pushed last)
                    let bl = self.lower_bound(&q, &self.boxes[*left].0, &self.boxes[*left].1, m);
                    let br = self.lower_bound(&q, &self.boxes[*right].0, &self.boxes[*right].1, m);
                    if bl <= br {
                        stack.push(*right);
                        stack.push(*left);
                    } else {
                        stack.push(*left);
                        stack.push(*right);
                    }
                }
            }
        }
        let (i, d) = best.expect("store is non-empty");
        Ok(self.neighbor(i, d.to_rational()))
    }

    fn neighbor(&self, i: usize, distance: Rational) -> Neighbor<'_, P> {
        Neighbor {
            index: i,
            vector: &self.vectors[i],
            payload: &self.payloads[i],
            distance,
        }
    }
}
