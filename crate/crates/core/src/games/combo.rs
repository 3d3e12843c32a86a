use std::fmt;

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::games::explicit::{ExplicitGame, MAX_EXPLICIT_VOTERS};
use crate::games::weighted::WeightedGame;

/// Expression tree of conjunctions and disjunctions over weighted games.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ComboExpr {
    Leaf(WeightedGame),
    And(Vec<ComboExpr>),
    Or(Vec<ComboExpr>),
}

impl ComboExpr {
    pub fn and(a: ComboExpr, b: ComboExpr) -> ComboExpr {
        ComboExpr::And(vec![a, b])
    }

    pub fn or(a: ComboExpr, b: ComboExpr) -> ComboExpr {
        ComboExpr::Or(vec![a, b])
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a WeightedGame>) {
        match self {
            ComboExpr::Leaf(w) => out.push(w),
            ComboExpr::And(xs) | ComboExpr::Or(xs) => xs.iter().for_each(|x| x.collect_leaves(out)),
        }
    }

    /// Evaluates the tree given the outcome of each leaf in depth-first order.
    fn eval_with(&self, leaf: &mut impl FnMut() -> bool) -> bool {
        match self {
            ComboExpr::Leaf(_) => leaf(),
            // every leaf must be consumed, so no short-circuiting here
            ComboExpr::And(xs) => xs.iter().fold(true, |acc, x| x.eval_with(leaf) & acc),
            ComboExpr::Or(xs) => xs.iter().fold(false, |acc, x| x.eval_with(leaf) | acc),
        }
    }

    fn map_leaves(&self, f: &impl Fn(&WeightedGame) -> Result<WeightedGame>) -> Result<ComboExpr> {
        Ok(match self {
            ComboExpr::Leaf(w) => ComboExpr::Leaf(f(w)?),
            ComboExpr::And(xs) => {
                ComboExpr::And(xs.iter().map(|x| x.map_leaves(f)).collect::<Result<_>>()?)
            }
            ComboExpr::Or(xs) => {
                ComboExpr::Or(xs.iter().map(|x| x.map_leaves(f)).collect::<Result<_>>()?)
            }
        })
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, inside_and: bool) -> fmt::Result {
        match self {
            ComboExpr::Leaf(w) => write!(f, "{w}"),
            ComboExpr::And(xs) => {
                for (k, x) in xs.iter().enumerate() {
                    if k > 0 {
                        write!(f, " & ")?;
                    }
                    x.fmt_prec(f, true)?;
                }
                Ok(())
            }
            ComboExpr::Or(xs) => {
                if inside_and {
                    write!(f, "(")?;
                }
                for (k, x) in xs.iter().enumerate() {
                    if k > 0 {
                        write!(f, " | ")?;
                    }
                    x.fmt_prec(f, false)?;
                }
                if inside_and {
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

/// A simple game written as a Boolean combination of weighted games on a
/// common voter set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolCombo {
    n: usize,
    root: ComboExpr,
}

impl BoolCombo {
    pub fn new(root: ComboExpr) -> Result<BoolCombo> {
        let mut leaves = Vec::new();
        root.collect_leaves(&mut leaves);
        let n = leaves
            .first()
            .map(|w| w.n())
            .ok_or_else(|| Error::NotSimple("empty expression".into()))?;
        if let Some(w) = leaves.iter().find(|w| w.n() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: w.n(),
            });
        }
        if matches!(&root, ComboExpr::And(xs) | ComboExpr::Or(xs) if xs.is_empty()) {
            return Err(Error::NotSimple("empty operand list".into()));
        }
        let g = BoolCombo { n, root };
        if g.is_winning(Coalition::EMPTY) {
            return Err(Error::NotSimple("the empty coalition wins".into()));
        }
        if !g.is_winning(Coalition::full(n)) {
            return Err(Error::NotSimple("the grand coalition loses".into()));
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> &ComboExpr {
        &self.root
    }

    /// Leaves in depth-first order.
    pub fn leaves(&self) -> Vec<&WeightedGame> {
        let mut out = Vec::new();
        self.root.collect_leaves(&mut out);
        out
    }

    pub fn is_winning(&self, s: Coalition) -> bool {
        let leaves = self.leaves();
        let mut k = 0;
        self.root.eval_with(&mut || {
            k += 1;
            leaves[k - 1].is_winning(s)
        })
    }

    /// Evaluates the tree from precomputed leaf outcomes (depth-first order).
    pub fn eval_leaves(&self, outcomes: &[bool]) -> bool {
        let mut it = outcomes.iter();
        self.root
            .eval_with(&mut || *it.next().expect("one outcome per leaf"))
    }

    pub fn with_null_voters(&self, k: usize) -> Result<BoolCombo> {
        BoolCombo::new(self.root.map_leaves(&|w| w.with_null_voters(k))?)
    }

    pub fn to_explicit(&self) -> Result<ExplicitGame> {
        if self.n > MAX_EXPLICIT_VOTERS {
            return Err(Error::VoterCount {
                n: self.n,
                min: 1,
                max: MAX_EXPLICIT_VOTERS,
            });
        }
        let leaves: Vec<ExplicitGame> = self
            .leaves()
            .iter()
            .map(|w| w.to_explicit())
            .collect::<Result<_>>()?;
        let mut outcomes = vec![false; leaves.len()];
        ExplicitGame::from_fn(self.n, |s| {
            for (o, l) in outcomes.iter_mut().zip(&leaves) {
                *o = l.is_winning(s);
            }
            self.eval_leaves(&outcomes)
        })
    }
}

impl fmt::Display for BoolCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.fmt_prec(f, false)
    }
}

impl fmt::Debug for BoolCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
