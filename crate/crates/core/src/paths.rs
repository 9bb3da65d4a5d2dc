//! Forward dynamic programming over the Bratteli diagram of a model, plus an
//! exhaustive path enumerator used as an independent oracle.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, ModelKind, ModelSpec, WeightedStep};

/// Default cap on the path length accepted by [`enumerate_paths`].
pub const DEFAULT_ENUM_GUARD: i64 = 20;

/// Exact weighted path counts from the origin, one sparse row per level.
///
/// Only positions with a nonzero count are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    l: i64,
    kind: ModelKind,
    levels: Vec<BTreeMap<i64, BigUint>>,
}

impl CountTable {
    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn n_max(&self) -> i64 {
        self.levels.len() as i64 - 1
    }

    pub fn level(&self, n: i64) -> Option<&BTreeMap<i64, BigUint>> {
        usize::try_from(n).ok().and_then(|n| self.levels.get(n))
    }

    pub fn levels(&self) -> &[BTreeMap<i64, BigUint>] {
        &self.levels
    }

    /// Count at `(x, n)`; zero for anything unreachable or beyond the table.
    pub fn get(&self, x: i64, n: i64) -> BigUint {
        self.level(n)
            .and_then(|row| row.get(&x))
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }
}

/// Builds the table of `Z((0,0) -> (M,N))` for all `N <= n_max`.
pub fn count_paths(model: &ModelSpec, n_max: i64) -> Result<CountTable> {
    if n_max < 0 {
        return Err(Error::Parity { x: 0, n: n_max });
    }
    let mut levels = Vec::with_capacity(n_max as usize + 1);
    levels.push(BTreeMap::from([(0, BigUint::one())]));
    for _ in 0..n_max {
        let prev = levels.last().expect("level 0 is always present");
        let mut next: BTreeMap<i64, BigUint> = BTreeMap::new();
        for (&x, count) in prev {
            for step in model.allowed_steps(x)? {
                *next.entry(step.to_x).or_default() += count * step.weight;
            }
        }
        next.retain(|_, c| !c.is_zero());
        levels.push(next);
    }
    Ok(CountTable {
        l: model.l(),
        kind: model.kind(),
        levels,
    })
}

/// `Z((0,0) -> (M,N))` under the model's restrictions.
pub fn weighted_count(model: &ModelSpec, m: i64, n: i64) -> Result<BigUint> {
    LatticePoint::new(m, n)?;
    Ok(count_paths(model, n)?.get(m, n))
}

/// A complete path from the origin together with its multiplicative weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPath {
    pub steps: Vec<WeightedStep>,
    pub weight: BigUint,
}

impl WeightedPath {
    /// Step letters: `R` right, `L` left, `J` long.
    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.kind().letter()).collect()
    }
}

/// Lists every path from `(0,0)` to `(M,N)` by depth-first search.
///
/// Refuses `N > guard`; the search is exponential in `N`.
pub fn enumerate_paths(model: &ModelSpec, m: i64, n: i64, guard: i64) -> Result<Vec<WeightedPath>> {
    LatticePoint::new(m, n)?;
    if n > guard {
        return Err(Error::EnumerationGuard { n, guard });
    }
    // long steps jump left by 2l - 1; elementary steps move by one
    let max_left = if model.has_long_steps() {
        2 * model.l() - 1
    } else {
        1
    };
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(n as usize);
    descend(model, m, n, max_left, 0, &mut stack, &mut out)?;
    Ok(out)
}

fn descend(
    model: &ModelSpec,
    target: i64,
    remaining: i64,
    max_left: i64,
    x: i64,
    stack: &mut Vec<WeightedStep>,
    out: &mut Vec<WeightedPath>,
) -> Result<()> {
    if remaining == 0 {
        if x == target {
            let weight = stack.iter().fold(BigUint::one(), |w, s| w * s.weight);
            out.push(WeightedPath {
                steps: stack.clone(),
                weight,
            });
        }
        return Ok(());
    }
    if target - x > remaining || x - target > remaining * max_left {
        return Ok(());
    }
    for step in model.allowed_steps(x)? {
        stack.push(step);
        descend(
            model,
            target,
            remaining - 1,
            max_left,
            step.to_x,
            stack,
            out,
        )?;
        stack.pop();
    }
    Ok(())
}

/// Sum of path weights; the enumeration-side value of `weighted_count`.
pub fn total_weight(paths: &[WeightedPath]) -> BigUint {
    paths.iter().map(|p| &p.weight).sum()
}
