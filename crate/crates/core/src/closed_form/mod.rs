//! Exact closed forms for weighted path counts.
//!
//! Every formula is a finite signed sum of binomials, so everything here works
//! on [`SignedExact`] and never rounds. Binomials follow the combinatorial zero
//! convention: `C(n, r) = 0` whenever `r < 0`, `r > n` or `n < 0`.

mod identities;

pub use identities::{
    identity_onee, identity_q, identity_twoo, summand_total, wz_certificate_check, WzIdentity,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::strip_index;

pub type SignedExact = BigInt;

pub fn binom(n: i64, r: i64) -> SignedExact {
    if n < 0 || r < 0 || r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    // running product stays integral: C(n - r + i, i) at step i
    let mut acc = BigInt::one();
    for i in 1..=r {
        acc = acc * (n - r + i) / i;
    }
    acc
}

fn half(v: i64) -> Result<i64> {
    if v.is_odd() {
        return Err(Error::Parity { x: v, n: 0 });
    }
    Ok(v / 2)
}

fn check_parity(m: i64, n: i64) -> Result<()> {
    if n < 0 || (n - m).is_odd() {
        return Err(Error::Parity { x: m, n });
    }
    Ok(())
}

/// `F_M^(N) = C(N, (N-M)/2) - C(N, (N-M)/2 - 1)`; negative for reflected `M`.
pub fn ballot_f(n: i64, m: i64) -> Result<SignedExact> {
    check_parity(m, n)?;
    Ok(ballot_unchecked(n, m))
}

fn ballot_unchecked(n: i64, m: i64) -> SignedExact {
    let h = (n - m) / 2;
    binom(n, h) - binom(n, h - 1)
}

/// Paths with unrestricted unit steps: `C(N, (N-M)/2)`.
pub fn unrestricted_count(m: i64, n: i64) -> Result<SignedExact> {
    check_parity(m, n)?;
    Ok(binom(n, half(n - m)?))
}

/// Paths from the origin with a left wall at `a <= 0`.
pub fn wall_count(m: i64, n: i64, a: i64) -> Result<SignedExact> {
    check_parity(m, n)?;
    if m < a {
        return Err(Error::LeftOfWall { x: m, wall: a });
    }
    if a > 0 {
        return Err(Error::Unsupported("wall must sit at or left of the origin"));
    }
    let h = (n - m) / 2;
    Ok(binom(n, h) - binom(n, h + a - 1))
}

/// Weighted paths with a single filter of type `filter_type` at `d > 0`.
pub fn filter_count(m: i64, n: i64, d: i64, filter_type: u64) -> Result<SignedExact> {
    check_parity(m, n)?;
    if d <= 0 {
        return Err(Error::Unsupported("filter must sit right of the origin"));
    }
    let h = (n - m) / 2;
    match m.cmp(&d) {
        std::cmp::Ordering::Less => Ok(binom(n, h) - binom(n, h + d)),
        std::cmp::Ordering::Greater => Ok(binom(n, h) * filter_type),
        std::cmp::Ordering::Equal => Err(Error::Unsupported("target on the filter line")),
    }
}

/// Coefficient `P_j(k)` of the auxiliary strip formula, `j >= 2`.
pub fn poly_p(j: i64, k: i64) -> Result<SignedExact> {
    strip_poly(j, k, 0)
}

/// Coefficient `Q_j(k)` of the auxiliary strip formula, `j >= 2`.
pub fn poly_q(j: i64, k: i64) -> Result<SignedExact> {
    strip_poly(j, k, 1)
}

fn strip_poly(j: i64, k: i64, offset: i64) -> Result<SignedExact> {
    if j < 2 {
        return Err(Error::Unsupported("strip coefficients need j >= 2"));
    }
    if k < 0 {
        return Err(Error::Unsupported("strip coefficients need k >= 0"));
    }
    Ok((0..=j / 2)
        .map(|i| binom(j - 2, 2 * i + offset) * binom(k - i + j - 2, j - 2))
        .sum())
}

/// `floor(num / den)` for `den > 0`; negative limits yield empty sums.
fn floor_div(num: i64, den: i64) -> i64 {
    num.div_euclid(den)
}

fn sum_to(upper: i64, term: impl Fn(i64) -> SignedExact) -> SignedExact {
    (0..=upper).map(term).sum()
}

fn check_target(l: i64, m: i64, n: i64) -> Result<()> {
    if l < 3 {
        return Err(Error::InvalidModulus(l));
    }
    if m < 0 {
        return Err(Error::NegativePosition(m));
    }
    check_parity(m, n)
}

/// Weighted count in the auxiliary model (wall at 0, type-1 filters at `nl-1`).
///
/// Strips `j >= 2` use the four alternating ballot sums with `P_j`/`Q_j`
/// coefficients. The first strip is not touched by long steps, so it is served
/// by [`uq_multiplicity`] with `k = 0`.
pub fn aux_strip_multiplicity(l: i64, m: i64, n: i64) -> Result<SignedExact> {
    check_target(l, m, n)?;
    if m > n {
        return Ok(BigInt::zero());
    }
    let j = strip_index(m, l)?;
    if j == 1 {
        return uq_multiplicity(l, m, n);
    }
    let f = |arg: i64| ballot_unchecked(n, arg);
    let p = |k: i64| strip_poly(j, k, 0).expect("j >= 2, k >= 0");
    let q = |k: i64| strip_poly(j, k, 1).expect("j >= 2, k >= 0");
    let four_l = 4 * l;

    let a = sum_to(floor_div(n - (j - 1) * l + 1, four_l), |k| {
        p(k) * f(m + 4 * k * l)
    });
    let b = sum_to(floor_div(n - j * l, four_l), |k| {
        p(k) * f(m - 4 * k * l - 2 * j * l)
    });
    let c = sum_to(floor_div(n - (j + 1) * l + 1, four_l), |k| {
        q(k) * f(m + 2 * l + 4 * k * l)
    });
    let d = sum_to(floor_div(n - j * l - 2 * l, four_l), |k| {
        q(k) * f(m - 4 * k * l - 2 * (j + 1) * l)
    });
    Ok(a + b - c - d)
}

/// Weighted count in the quantum-group model, i.e. the multiplicity of `T(M)`
/// in `T(1)^N`.
///
/// With `k = strip - 1`:
/// `F_M + sum_{j=1}^{floor((N-lk+1)/2l + 1/2)} F_{M-2lk-2jl} + sum_{j=1}^{floor((N-lk+1)/2l)} F_{M+2jl}`.
pub fn uq_multiplicity(l: i64, m: i64, n: i64) -> Result<SignedExact> {
    check_target(l, m, n)?;
    if m > n {
        return Ok(BigInt::zero());
    }
    let k = strip_index(m, l)? - 1;
    let f = |arg: i64| ballot_unchecked(n, arg);
    let span = n - l * k + 1;
    let reflected: SignedExact = (1..=floor_div(span + l, 2 * l))
        .map(|j| f(m - 2 * l * k - 2 * j * l))
        .sum();
    let shifted: SignedExact = (1..=floor_div(span, 2 * l)).map(|j| f(m + 2 * j * l)).sum();
    Ok(f(m) + reflected + shifted)
}

/// Catalan-type coefficient `F^(k-1+2j)_{k-1}` of the strip-sum formula.
pub fn strip_sum_coefficient(k: i64, j: i64) -> SignedExact {
    ballot_unchecked(k - 1 + 2 * j, k - 1)
}

/// Quantum-group count in strip `k + 1` as a coefficient-weighted sum of
/// auxiliary counts at the shifted positions `M + 2jl`.
pub fn strip_sum_f1(l: i64, k: i64, m: i64, n: i64) -> Result<SignedExact> {
    check_target(l, m, n)?;
    if k < 1 {
        return Err(Error::Unsupported("strip-sum formula needs k >= 1"));
    }
    let strip = strip_index(m, l)?;
    if strip != k + 1 {
        return Err(Error::StripMismatch { l, strip: k + 1, m });
    }
    let upper = floor_div(n - l * k + 1, 2 * l);
    (0..=upper)
        .map(|j| Ok(strip_sum_coefficient(k, j) * aux_strip_multiplicity(l, m + 2 * j * l, n)?))
        .sum()
}

/// Catalan numbers by the convolution recurrence; used as a reference.
pub fn catalan_numbers(count: usize) -> Vec<SignedExact> {
    let mut c: Vec<SignedExact> = vec![BigInt::one()];
    for n in 1..count {
        let next = (0..n).map(|i| &c[i] * &c[n - 1 - i]).sum();
        c.push(next);
    }
    c.truncate(count);
    c
}
