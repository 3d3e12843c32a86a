//! Exact feasibility test for weighted representations.
//!
//! Finds `w >= 0, q` with `w(S) >= q` for every listed winning coalition and
//! `w(T) <= q - 1` for every listed losing coalition, optionally with
//! `w_1 >= w_2 >= ... >= w_n`. Phase-one simplex on an integer-preserving
//! tableau (every entry is a subdeterminant over the running pivot product),
//! Dantzig pricing with a switch to Bland's rule against cycling. Runs on
//! `i64`, then `i128`, then `BigInt`, moving up whenever an intermediate
//! value overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed, ToPrimitive};

use crate::coalition::Coalition;

trait Exact: Clone + Integer + Signed + CheckedMul + CheckedSub + ToPrimitive {}
impl Exact for i64 {}
impl Exact for i128 {}
impl Exact for BigInt {}

/// Integer weights and quota certifying a representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub quota: u64,
    pub weights: Vec<u64>,
}

/// Returns a certificate if the system is feasible, `None` otherwise.
pub fn find_weights(
    n: usize,
    winning: &[Coalition],
    losing: &[Coalition],
    ordered: bool,
) -> Option<Certificate> {
    solve::<i64>(n, winning, losing, ordered)
        .or_else(|_| solve::<i128>(n, winning, losing, ordered))
        .or_else(|_| solve::<BigInt>(n, winning, losing, ordered))
        .unwrap_or(None)
}

struct Overflow;

const BLAND_AFTER: usize = 64;

fn solve<T: Exact>(
    n: usize,
    winning: &[Coalition],
    losing: &[Coalition],
    ordered: bool,
) -> Result<Option<Certificate>, Overflow> {
    let orders = if ordered && n > 1 { n - 1 } else { 0 };
    let rows = winning.len() + losing.len() + orders;
    // columns: w_0..w_{n-1}, q, one slack/surplus per row, one artificial per losing row, rhs
    let q_col = n;
    let slack0 = n + 1;
    let art0 = slack0 + rows;
    let rhs = art0 + losing.len();
    let cols = rhs + 1;
    let zero = T::zero();
    let one = T::one();
    let mut tab = Tableau {
        w: cols,
        cells: vec![zero.clone(); cols * (rows + 1)],
    };
    let mut basis = vec![0usize; rows];

    let mut r = 0;
    for s in winning {
        // q - w(S) + slack = 0
        for i in s.members() {
            *tab.at(r, i) = -one.clone();
        }
        *tab.at(r, q_col) = one.clone();
        *tab.at(r, slack0 + r) = one.clone();
        basis[r] = slack0 + r;
        r += 1;
    }
    for i in 0..orders {
        // w_{i+1} - w_i + slack = 0
        *tab.at(r, i) = -one.clone();
        *tab.at(r, i + 1) = one.clone();
        *tab.at(r, slack0 + r) = one.clone();
        basis[r] = slack0 + r;
        r += 1;
    }
    for (k, t) in losing.iter().enumerate() {
        // q - w(T) - surplus + artificial = 1
        for i in t.members() {
            *tab.at(r, i) = -one.clone();
        }
        *tab.at(r, q_col) = one.clone();
        *tab.at(r, slack0 + r) = -one.clone();
        *tab.at(r, art0 + k) = one.clone();
        *tab.at(r, rhs) = one.clone();
        basis[r] = art0 + k;
        r += 1;
    }
    // reduced costs for minimising the sum of artificials; last entry holds -objective
    let first_art_row = winning.len() + orders;
    for j in 0..cols {
        if (art0..rhs).contains(&j) {
            continue;
        }
        let mut acc = zero.clone();
        for i in first_art_row..rows {
            acc = acc - tab.get(i, j).clone();
        }
        *tab.at(rows, j) = acc;
    }

    let mut det = one.clone();
    let mut scratch = vec![zero.clone(); cols];
    let mut steps = 0usize;
    loop {
        // steepest reduced cost first, Bland's rule once the run gets long
        let candidates = (0..rhs).filter(|&j| tab.get(rows, j).is_negative());
        let enter = if steps < BLAND_AFTER {
            candidates.min_by(|&a, &b| tab.get(rows, a).cmp(tab.get(rows, b)))
        } else {
            candidates.min()
        };
        let Some(enter) = enter else {
            break;
        };
        steps += 1;
        let mut leave: Option<usize> = None;
        for i in 0..rows {
            if !tab.get(i, enter).is_positive() {
                continue;
            }
            leave = Some(match leave {
                None => i,
                Some(l) => {
                    let lhs = tab
                        .get(i, rhs)
                        .checked_mul(tab.get(l, enter))
                        .ok_or(Overflow)?;
                    let rhs_v = tab
                        .get(l, rhs)
                        .checked_mul(tab.get(i, enter))
                        .ok_or(Overflow)?;
                    if lhs < rhs_v || (lhs == rhs_v && basis[i] < basis[l]) {
                        i
                    } else {
                        l
                    }
                }
            });
        }
        // the phase-one objective is bounded below, so some row always qualifies
        let leave = leave.expect("phase one is bounded");
        tab.pivot(leave, enter, &det, &mut scratch)?;
        det = tab.get(leave, enter).clone();
        basis[leave] = enter;
    }

    if !tab.get(rows, rhs).is_zero() {
        return Ok(None);
    }
    // basic values are rhs / det; scaling by det keeps every losing gap >= 1
    let mut scaled = vec![zero.clone(); n + 1];
    for (i, &b) in basis.iter().enumerate() {
        if b <= q_col {
            scaled[b] = tab.get(i, rhs).clone();
        }
    }
    let g = scaled.iter().fold(zero.clone(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Ok(None);
    }
    let to_u64 =
        |x: &T| -> Result<u64, Overflow> { (x.clone() / g.clone()).to_u64().ok_or(Overflow) };
    let weights = scaled[..n]
        .iter()
        .map(to_u64)
        .collect::<Result<Vec<_>, _>>()?;
    let quota = to_u64(&scaled[n])?;
    Ok(Some(Certificate { quota, weights }))
}

struct Tableau<T> {
    w: usize,
    cells: Vec<T>,
}

impl<T: Exact> Tableau<T> {
    fn get(&self, r: usize, c: usize) -> &T {
        &self.cells[r * self.w + c]
    }

    fn at(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.cells[r * self.w + c]
    }

    fn pivot(&mut self, r: usize, c: usize, det: &T, scratch: &mut [T]) -> Result<(), Overflow> {
        let w = self.w;
        scratch.clone_from_slice(&self.cells[r * w..(r + 1) * w]);
        let p = scratch[c].clone();
        for (i, row) in self.cells.chunks_mut(w).enumerate() {
            if i == r {
                continue;
            }
            let f = row[c].clone();
            for (x, pr) in row.iter_mut().zip(scratch.iter()) {
                let a = x.checked_mul(&p).ok_or(Overflow)?;
                let diff = if f.is_zero() || pr.is_zero() {
                    a
                } else {
                    a.checked_sub(&f.checked_mul(pr).ok_or(Overflow)?)
                        .ok_or(Overflow)?
                };
                *x = diff / det.clone();
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[usize]) -> Coalition {
        Coalition::from_voters(v.iter().copied())
    }

    fn check(cert: &Certificate, winning: &[Coalition], losing: &[Coalition]) {
        let w = |s: &Coalition| s.members().map(|i| cert.weights[i]).sum::<u64>();
        for s in winning {
            assert!(w(s) >= cert.quota);
        }
        for t in losing {
            assert!(w(t) < cert.quota);
        }
    }

    #[test]
    fn weighted_example_is_feasible() {
        // [3;3,2,1,1]: minimal winning {1},{2,3},{2,4}; maximal losing {2},{3,4}
        let win = [c(&[1]), c(&[2, 3]), c(&[2, 4])];
        let lose = [c(&[2]), c(&[3, 4])];
        let cert = find_weights(4, &win, &lose, false).unwrap();
        check(&cert, &win, &lose);
        let cert = find_weights(4, &win, &lose, true).unwrap();
        check(&cert, &win, &lose);
        assert!(cert.weights.windows(2).all(|p| p[0] >= p[1]));
    }

    #[test]
    fn parents_or_kids_is_infeasible() {
        let win = [c(&[1, 2]), c(&[3, 4])];
        let lose = [c(&[1, 3]), c(&[1, 4]), c(&[2, 3]), c(&[2, 4])];
        assert_eq!(find_weights(4, &win, &lose, false), None);
    }

    #[test]
    fn bigint_path_agrees() {
        let win = [c(&[1]), c(&[2, 3]), c(&[2, 4])];
        let lose = [c(&[2]), c(&[3, 4])];
        let a = solve::<i128>(4, &win, &lose, false).ok().unwrap();
        let b = solve::<BigInt>(4, &win, &lose, false).ok().unwrap();
        assert_eq!(a, b);
    }
}
