//! Invariant suites: each one recomputes a family of quantities along two
//! independent routes and reports the first disagreement.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::closed_form::{
    aux_strip_multiplicity, catalan_numbers, filter_count, identity_onee, identity_q,
    identity_twoo, strip_sum_coefficient, strip_sum_f1, unrestricted_count, uq_multiplicity,
    wall_count, wz_certificate_check, WzIdentity,
};
use crate::error::{Error, Result};
use crate::lattice::{strip_index, ModelSpec};
use crate::paths::{count_paths, enumerate_paths, total_weight, CountTable};
use crate::region::{check_congruent, counts_from_boundary, seed_from_table, Region, Translation};
use crate::tilting::{decompose_all, tilting_dim, total_dimension, DimTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    /// Main and auxiliary closed forms, plus the one-restriction formulas, against DP.
    ClosedForm,
    /// Catalan-weighted strip sums of auxiliary counts against DP.
    StripSum,
    Identities,
    Wz,
    /// Two-filter long-step shift, its periodic variant and the single-family strip sums.
    LongStep,
    /// DP against exhaustive enumeration for every model kind.
    Oracle,
    Dims,
    /// Recursion, DP and closed form on the quantum-group model.
    Routes,
    Congruence,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::ClosedForm,
        Suite::StripSum,
        Suite::Identities,
        Suite::Wz,
        Suite::LongStep,
        Suite::Oracle,
        Suite::Dims,
        Suite::Routes,
        Suite::Congruence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ClosedForm => "closed-form",
            Suite::StripSum => "f1",
            Suite::Identities => "identities",
            Suite::Wz => "wz",
            Suite::LongStep => "long-step",
            Suite::Oracle => "oracle",
            Suite::Dims => "dims",
            Suite::Routes => "routes",
            Suite::Congruence => "congruence",
        }
    }

    pub fn default_n_max(self) -> i64 {
        match self {
            Suite::Identities => 30,
            Suite::Wz => 15,
            Suite::Oracle => 14,
            Suite::Congruence => 12,
            _ => 40,
        }
    }

    pub fn default_ls(self) -> &'static [i64] {
        match self {
            Suite::LongStep | Suite::Congruence => &[3, 5],
            Suite::Oracle => &[3, 4, 5],
            _ => &[3, 5, 7],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidModel(format!("unknown suite {s:?}")))
    }
}

/// Moduli and level cap; `None` picks the suite defaults.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Grid {
    pub ls: Option<Vec<i64>>,
    pub n_max: Option<i64>,
}

impl Grid {
    pub fn new(ls: Vec<i64>, n_max: i64) -> Self {
        Grid {
            ls: Some(ls),
            n_max: Some(n_max),
        }
    }
}

/// First failing check. Identity suites have no lattice point; they report
/// `k` in `l`, `j` in `m` and `n` in `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub suite: &'static str,
    pub l: i64,
    pub m: i64,
    pub n: i64,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {}, {})",
            self.suite, self.l, self.m, self.n, self.expected, self.got
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: u64,
    pub counterexample: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

struct Tally {
    suite: Suite,
    checks: u64,
    first: Option<Counterexample>,
}

impl Tally {
    fn new(suite: Suite) -> Self {
        Tally {
            suite,
            checks: 0,
            first: None,
        }
    }

    fn check<T: PartialEq + fmt::Display>(&mut self, at: (i64, i64, i64), expected: T, got: T) {
        self.checks += 1;
        if expected != got && self.first.is_none() {
            self.first = Some(Counterexample {
                suite: self.suite.name(),
                l: at.0,
                m: at.1,
                n: at.2,
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    fn report(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            checks: self.checks,
            counterexample: self.first,
        }
    }
}

fn signed(v: BigUint) -> BigInt {
    BigInt::from(v)
}

/// Parity-valid `(M, N)` with `0 <= M <= N <= n_max`.
fn cone(n_max: i64) -> impl Iterator<Item = (i64, i64)> {
    (0..=n_max).flat_map(|n| (n % 2..=n).step_by(2).map(move |m| (m, n)))
}

pub fn run_suite(suite: Suite, grid: &Grid) -> Result<SuiteReport> {
    let ls = grid
        .ls
        .clone()
        .unwrap_or_else(|| suite.default_ls().to_vec());
    let n_max = grid.n_max.unwrap_or_else(|| suite.default_n_max());
    if n_max < 0 {
        return Err(Error::NegativePosition(n_max));
    }
    let mut tally = Tally::new(suite);
    match suite {
        Suite::ClosedForm => {
            for &l in &ls {
                uq_against_dp(&mut tally, l, n_max)?;
                aux_against_dp(&mut tally, l, n_max)?;
                simple_models_against_dp(&mut tally, l, n_max)?;
            }
        }
        Suite::StripSum => {
            catalan_coefficients(&mut tally, 15);
            for &l in &ls {
                strip_sum_against_dp(&mut tally, l, n_max)?;
            }
        }
        Suite::Identities => identities(&mut tally, n_max, 20),
        Suite::Wz => wz_grid(&mut tally, n_max, 10)?,
        Suite::LongStep => {
            for &l in &ls {
                for k in [1, 2] {
                    two_filter_shift(&mut tally, l, k)?;
                    periodic_shift(&mut tally, l, k)?;
                    single_family_strip_sums(&mut tally, l, k, n_max)?;
                }
            }
        }
        Suite::Oracle => {
            for &l in &ls {
                oracle(&mut tally, l, n_max)?;
            }
        }
        Suite::Dims => {
            for &l in &ls {
                dims(&mut tally, l, n_max)?;
            }
        }
        Suite::Routes => {
            for &l in &ls {
                routes(&mut tally, l, n_max)?;
            }
        }
        Suite::Congruence => {
            for &l in &ls {
                congruence(&mut tally, l, n_max)?;
            }
        }
    }
    Ok(tally.report())
}

pub fn run_suites(suites: &[Suite], grid: &Grid) -> Result<Vec<SuiteReport>> {
    suites.iter().map(|&s| run_suite(s, grid)).collect()
}

fn uq_against_dp(tally: &mut Tally, l: i64, n_max: i64) -> Result<()> {
    let table = count_paths(&ModelSpec::uq(l)?, n_max)?;
    for (m, n) in cone(n_max) {
        tally.check(
            (l, m, n),
            signed(table.get(m, n)),
            uq_multiplicity(l, m, n)?,
        );
    }
    Ok(())
}

fn aux_against_dp(tally: &mut Tally, l: i64, n_max: i64) -> Result<()> {
    let table = count_paths(&ModelSpec::auxiliary(l)?, n_max)?;
    for (m, n) in cone(n_max) {
        tally.check(
            (l, m, n),
            signed(table.get(m, n)),
            aux_strip_multiplicity(l, m, n)?,
        );
    }
    Ok(())
}

/// Free walk, walls at `0` and `-2`, and one type-1 filter at `l - 1`. Heavier
/// filters are left out: recrossing paths pick up `n^c 2^(c-1)`, not `n 2^(c-1)`.
fn simple_models_against_dp(tally: &mut Tally, l: i64, n_max: i64) -> Result<()> {
    let free = count_paths(&ModelSpec::unrestricted(l)?, n_max)?;
    for n in 0..=n_max {
        for m in (-n..=n).step_by(2) {
            tally.check((l, m, n), signed(free.get(m, n)), unrestricted_count(m, n)?);
        }
    }
    for a in [0, -2] {
        let walled = count_paths(&ModelSpec::wall_only(l, a)?, n_max)?;
        for n in 0..=n_max {
            for m in (-n..=n).step_by(2).filter(|&m| m >= a) {
                tally.check((l, m, n), signed(walled.get(m, n)), wall_count(m, n, a)?);
            }
        }
    }
    let d = l - 1;
    for filter_type in [1] {
        let filtered = count_paths(&ModelSpec::single_filter(l, d, filter_type)?, n_max)?;
        for n in 0..=n_max {
            for m in (-n..=n).step_by(2).filter(|&m| m != d) {
                tally.check(
                    (l, m, n),
                    signed(filtered.get(m, n)),
                    filter_count(m, n, d, filter_type)?,
                );
            }
        }
    }
    Ok(())
}

fn catalan_coefficients(tally: &mut Tally, j_max: usize) {
    for (j, c) in catalan_numbers(j_max + 1).into_iter().enumerate() {
        tally.check(
            (1, j as i64, 2 * j as i64),
            c,
            strip_sum_coefficient(1, j as i64),
        );
    }
}

fn strip_sum_against_dp(tally: &mut Tally, l: i64, n_max: i64) -> Result<()> {
    let table = count_paths(&ModelSpec::uq(l)?, n_max)?;
    for (m, n) in cone(n_max) {
        let k = strip_index(m, l)? - 1;
        let got = if k == 0 {
            aux_strip_multiplicity(l, m, n)?
        } else {
            strip_sum_f1(l, k, m, n)?
        };
        tally.check((l, m, n), signed(table.get(m, n)), got);
    }
    Ok(())
}

fn identities(tally: &mut Tally, n_max: i64, k_max: i64) {
    let zero = BigInt::zero;
    for k in 1..=k_max {
        for n in 1..=n_max {
            tally.check((k, 0, n), zero(), identity_onee(n, k));
            if n >= 2 {
                tally.check((k, 0, n), zero(), identity_twoo(n, k));
                tally.check((k, 0, n), zero(), identity_q(n, k));
            }
        }
    }
}

fn wz_grid(tally: &mut Tally, n_max: i64, k_max: i64) -> Result<()> {
    for which in [WzIdentity::Onee, WzIdentity::Twoo] {
        for n in 2..=n_max {
            for j in 0..=n {
                for k in 1..=k_max {
                    match wz_certificate_check(which, n, j, k) {
                        Ok(r) => tally.check((k, j, n), "0".to_string(), r.to_string()),
                        Err(Error::Pole { .. }) => {}
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    Ok(())
}

fn two_filter(l: i64, k: i64, long: bool) -> Result<ModelSpec> {
    let b = ModelSpec::builder(l)
        .filter(l * k - 1, 1)
        .filter(l * (k + 2) - 1, 1);
    if long { b.long_step_family(k) } else { b }.build()
}

fn periodic(l: i64, from: i64, long_family: Option<i64>) -> Result<ModelSpec> {
    let b = ModelSpec::builder(l).wall(0).periodic_filters(from);
    match long_family {
        Some(k) => b.long_step_family(k),
        None => b,
    }
    .build()
}

/// `Z' = Z` below region II and `Z' = Z + Z(M + 2l)` on it, with `n_top` the
/// last level of region II.
fn shift_ranges(
    tally: &mut Tally,
    l: i64,
    k: i64,
    z: &CountTable,
    zp: &CountTable,
    n_top: impl Fn(i64) -> i64,
) {
    for m in l * k - 1..=l * (k + 2) - 2 {
        for n in (m.rem_euclid(2)..=m + 2 * l - 2).step_by(2) {
            tally.check((l, m, n), z.get(m, n), zp.get(m, n));
        }
        for n in (m + 2 * l..=n_top(m)).step_by(2) {
            tally.check((l, m, n), z.get(m, n) + z.get(m + 2 * l, n), zp.get(m, n));
        }
    }
}

fn two_filter_shift(tally: &mut Tally, l: i64, k: i64) -> Result<()> {
    let n_top = l * (k + 4) - 2;
    let z = count_paths(&two_filter(l, k, false)?, n_top)?;
    let zp = count_paths(&two_filter(l, k, true)?, n_top)?;
    shift_ranges(tally, l, k, &z, &zp, |_| n_top);
    Ok(())
}

/// Wall, filters from `jl - 1` for `j = 1` and `j = k`, one long-step family;
/// region II is widened to the parallelogram `N <= M + 4l - 2`.
fn periodic_shift(tally: &mut Tally, l: i64, k: i64) -> Result<()> {
    let n_top = l * (k + 6);
    for from in [1, k] {
        let z = count_paths(&periodic(l, from, None)?, n_top)?;
        let zp = count_paths(&periodic(l, from, Some(k))?, n_top)?;
        shift_ranges(tally, l, k, &z, &zp, |m| {
            (l * (k + 4) - 2).max(m + 4 * l - 2)
        });
    }
    Ok(())
}

/// Auxiliary model plus `S(k)`: strips up to `k` are untouched, strip `m + 1`
/// for `m >= k` is the plain sum of auxiliary counts at `M + 2jl`.
fn single_family_strip_sums(tally: &mut Tally, l: i64, k: i64, n_max: i64) -> Result<()> {
    let aux = count_paths(&ModelSpec::auxiliary(l)?, n_max)?;
    let tilde = count_paths(&periodic(l, 1, Some(k))?, n_max)?;
    for (m, n) in cone(n_max) {
        let s = strip_index(m, l)? - 1;
        let expected: BigUint = if s < k {
            aux.get(m, n)
        } else {
            let upper = (n - l * s + 1).div_euclid(2 * l);
            (0..=upper).map(|j| aux.get(m + 2 * j * l, n)).sum()
        };
        tally.check((l, m, n), expected, tilde.get(m, n));
    }
    Ok(())
}

fn oracle(tally: &mut Tally, l: i64, n_max: i64) -> Result<()> {
    let models = [
        ModelSpec::unrestricted(l)?,
        ModelSpec::wall_only(l, 0)?,
        ModelSpec::single_filter(l, l - 1, 2)?,
        ModelSpec::auxiliary(l)?,
        ModelSpec::uq(l)?,
    ];
    for model in &models {
        let table = count_paths(model, n_max)?;
        let lo = model.wall().unwrap_or(-n_max);
        for n in 0..=n_max {
            for m in (-n..=n).step_by(2).filter(|&m| m >= lo) {
                let paths = enumerate_paths(model, m, n, n_max)?;
                tally.check((l, m, n), table.get(m, n), total_weight(&paths));
            }
        }
    }
    Ok(())
}

fn dims(tally: &mut Tally, l: i64, n_max: i64) -> Result<()> {
    for dec in decompose_all(n_max, l)? {
        let n = dec.power();
        tally.check(
            (l, n, n),
            BigUint::from(1u8) << n as usize,
            total_dimension(&dec, l),
        );
    }
    let propagated = DimTable::propagate(&ModelSpec::uq(l)?, 10 * l)?;
    for k in 0..=10 * l {
        let got = propagated.get(k).cloned().unwrap_or_default();
        tally.check((l, k, 0), signed(tilting_dim(k, l)), got);
    }
    Ok(())
}

fn routes(tally: &mut Tally, l: i64, n_max: i64) -> Result<()> {
    let table = count_paths(&ModelSpec::uq(l)?, n_max)?;
    for dec in decompose_all(n_max, l)? {
        let n = dec.power();
        for m in (n % 2..=n).step_by(2) {
            let dp = table.get(m, n);
            tally.check((l, m, n), dp.clone(), dec.get(m));
            tally.check((l, m, n), signed(dp), uq_multiplicity(l, m, n)?);
        }
    }
    Ok(())
}

fn congruence(tally: &mut Tally, l: i64, n_max: i64) -> Result<()> {
    let truth = |b: bool| if b { "congruent" } else { "not congruent" };
    let shift = Translation::horizontal(2 * l)?;

    // region II of the two-filter model and its image one filter gap to the right
    for k in [1, 2] {
        let z = two_filter(l, k, false)?;
        let n_top = l * (k + 4) - 2;
        let points: Vec<_> = Region::band(z.clone(), l * k - 1, l * (k + 2) - 2, 0, n_top)
            .points()
            .iter()
            .copied()
            .filter(|p| p.n >= p.x + 2 * l)
            .collect();
        let region = Region::new(z.clone(), points.iter().copied());
        let image = Region::new(z, points.iter().filter_map(|&p| shift.apply(p)));
        tally.check(
            (l, k, n_top),
            truth(true),
            truth(check_congruent(&region, &image, shift)),
        );
        tally.check(
            (l, k, n_top),
            truth(true),
            truth(check_congruent(&image, &region, shift.inverse())),
        );
    }

    // strip by the wall against a strip between filters
    let aux = ModelSpec::auxiliary(l)?;
    let t = Translation::new(2 * l - 1, 1)?;
    let wall_strip = Region::strip(aux.clone(), 1, n_max);
    let filter_strip = Region::band(aux.clone(), 2 * l - 1, 3 * l - 2, 1, n_max + 1);
    tally.check(
        (l, 0, n_max),
        truth(false),
        truth(check_congruent(&wall_strip, &filter_strip, t)),
    );
    // two strips between filters
    let t = Translation::new(l, l)?;
    let second = Region::strip(aux.clone(), 2, n_max);
    let third = Region::band(aux.clone(), 2 * l - 1, 3 * l - 2, l, n_max + l);
    tally.check(
        (l, l - 1, n_max),
        truth(true),
        truth(check_congruent(&second, &third, t)),
    );

    let table = count_paths(&aux, n_max)?;
    let rebuilt = counts_from_boundary(&second, &seed_from_table(&second, &table))?;
    for p in second.points() {
        let got = rebuilt.get(p).cloned().unwrap_or_default();
        tally.check((l, p.x, p.n), table.get(p.x, p.n), got);
    }
    tally.check((l, l - 1, n_max), second.len(), rebuilt.len());
    Ok(())
}
