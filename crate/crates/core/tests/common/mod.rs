//! Test-local oracles, written from the step rules without touching the
//! library's model or counting code.

#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;

#[derive(Debug, Clone, Copy)]
pub enum Oracle {
    Free,
    Wall(i64),
    Filter {
        d: i64,
        weight: u128,
    },
    Aux,
    Uq,
    /// Filters at `lk - 1` and `l(k+2) - 1`, no wall.
    TwoFilter {
        k: i64,
        long: bool,
    },
    /// Auxiliary model with the single long-step family `k`.
    AuxFamily(i64),
}

fn filter_weight(o: Oracle, l: i64, x: i64) -> Option<u128> {
    match o {
        Oracle::Filter { d, weight } => (x == d).then_some(weight),
        Oracle::Aux | Oracle::Uq | Oracle::AuxFamily(_) => {
            (x >= l - 1 && (x + 1) % l == 0).then_some(1)
        }
        Oracle::TwoFilter { k, .. } => (x == l * k - 1 || x == l * (k + 2) - 1).then_some(1),
        _ => None,
    }
}

fn wall(o: Oracle) -> Option<i64> {
    match o {
        Oracle::Wall(a) => Some(a),
        Oracle::Aux | Oracle::Uq | Oracle::AuxFamily(_) => Some(0),
        _ => None,
    }
}

fn long_target(o: Oracle, l: i64, x: i64) -> Option<i64> {
    let source_of = |k: i64| l * (k + 2) - 2;
    match o {
        Oracle::Uq if x >= 3 * l - 2 && (x + 2) % l == 0 => Some(x - 2 * l + 1),
        Oracle::AuxFamily(k) | Oracle::TwoFilter { k, long: true } if x == source_of(k) => {
            Some(l * k - 1)
        }
        _ => None,
    }
}

pub fn steps(o: Oracle, l: i64, x: i64) -> Vec<(i64, u128)> {
    let mut out = if wall(o) == Some(x) {
        vec![(x + 1, 1)]
    } else if let Some(w) = filter_weight(o, l, x) {
        vec![(x + 1, w)]
    } else if filter_weight(o, l, x - 1).is_some() {
        vec![(x + 1, 1), (x - 1, 2)]
    } else {
        vec![(x + 1, 1), (x - 1, 1)]
    };
    if let Some(t) = long_target(o, l, x) {
        out.push((t, 1));
    }
    out
}

/// `rows[n][x]`, forward recursion from `(0, 0)`.
pub struct Rows(Vec<HashMap<i64, u128>>);

impl Rows {
    pub fn get(&self, m: i64, n: i64) -> u128 {
        self.0[n as usize].get(&m).copied().unwrap_or(0)
    }
}

pub fn rows(o: Oracle, l: i64, n_max: i64) -> Rows {
    let mut out = vec![HashMap::from([(0i64, 1u128)])];
    for _ in 0..n_max {
        let mut next = HashMap::new();
        for (&x, &v) in out.last().unwrap() {
            for (t, w) in steps(o, l, x) {
                *next.entry(t).or_insert(0) += v * w;
            }
        }
        out.push(next);
    }
    Rows(out)
}

pub fn binom(n: i64, r: i64) -> BigInt {
    if n < 0 || r < 0 || r > n {
        return BigInt::from(0);
    }
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..r {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

/// Parity-valid `(M, N)` with `0 <= M <= N <= n_max`.
pub fn cone(n_max: i64) -> Vec<(i64, i64)> {
    (0..=n_max)
        .flat_map(|n| (n % 2..=n).step_by(2).map(move |m| (m, n)))
        .collect()
}
