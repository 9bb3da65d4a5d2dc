//! Alternating binomial identities behind the main multiplicity formula and
//! exact evaluation of their Wilf–Zeilberger certificates.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{binom, strip_sum_coefficient, SignedExact};
use crate::error::{Error, Result};

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn expected_two(n: i64) -> SignedExact {
    BigInt::from(2 * sign(n))
}

/// Residual of `sum_j (-1)^j F^(k-1+2j)_{k-1} C(j+n+k-2, 2j+k-2) = 0`.
pub fn identity_q(n: i64, k: i64) -> SignedExact {
    (0..=n)
        .map(|j| sign(j) * strip_sum_coefficient(k, j) * binom(j + n + k - 2, 2 * j + k - 2))
        .sum()
}

/// Residual of `sum_j (-1)^j C(j+n+k-2, 2j+k-2) C(2j+k-1, j) = 2(-1)^n`.
pub fn identity_onee(n: i64, k: i64) -> SignedExact {
    let sum: SignedExact = (0..=n)
        .map(|j| sign(j) * binom(j + n + k - 2, 2 * j + k - 2) * binom(2 * j + k - 1, j))
        .sum();
    sum - expected_two(n)
}

/// Residual of `sum_j (-1)^j C(j+n+k-2, 2j+k-2) C(2j+k-1, j-1) = 2(-1)^n`.
pub fn identity_twoo(n: i64, k: i64) -> SignedExact {
    let sum: SignedExact = (0..=n)
        .map(|j| sign(j) * binom(j + n + k - 2, 2 * j + k - 2) * binom(2 * j + k - 1, j - 1))
        .sum();
    sum - expected_two(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WzIdentity {
    /// Second binomial `C(2j+k-1, j)`.
    Onee,
    /// Second binomial `C(2j+k-1, j-1)`; quadratic factor `(n+k)(n+k+1)`.
    Twoo,
    /// `Twoo` with the quadratic factor `(n+k)(n+k-1)` borrowed from `Onee`.
    /// Off from the telescoping certificate by `(n+k+1)/(n+k-1)`; kept so the
    /// discrepancy stays checkable.
    TwooUncorrected,
}

impl WzIdentity {
    /// Lower index shift of the second binomial: `C(2j+k-1, j - shift)`.
    fn shift(self) -> i64 {
        match self {
            WzIdentity::Onee => 0,
            WzIdentity::Twoo | WzIdentity::TwooUncorrected => 1,
        }
    }

    /// The summand `F(n, j) = (-1)^(j+n)/2 C(j+n+k-2, 2j+k-2) C(2j+k-1, j - shift)`.
    pub fn summand(self, n: i64, j: i64, k: i64) -> BigRational {
        let value = sign(j + n)
            * binom(j + n + k - 2, 2 * j + k - 2)
            * binom(2 * j + k - 1, j - self.shift());
        BigRational::new(value, BigInt::from(2))
    }

    /// The certificate `G(n, j)`.
    ///
    /// `C(j+n+k-2, 2j+k-2) / (j-n-1)` is rewritten as
    /// `-C(j+n+k-1, 2j+k-2) / (j+n+k-1)`, which agrees wherever both sides are
    /// defined and stays finite at `j = n + 1`. Any remaining vanishing
    /// numerator factor makes the term zero; otherwise a vanishing denominator
    /// factor is reported as a pole.
    pub fn certificate(self, n: i64, j: i64, k: i64) -> Result<BigRational> {
        let quadratic = k * k + n * (n - 1) + k * (2 * n - 1);
        let quadratic_up = k * k + n * (n + 1) + k * (2 * n + 1);
        let (numer, denom): (Vec<i64>, Vec<(&'static str, i64)>) = match self {
            WzIdentity::Onee => (
                vec![
                    j,
                    j + k - 1,
                    k + 2 * n,
                    1 + k * k * n - 3 * n * n
                        + k * (n * n - 3 * n - 1)
                        + j * (2 * n * n + 2 * k * n + k - 1),
                ],
                vec![
                    ("n", n),
                    ("n+1", n + 1),
                    ("j+n+k-1", j + n + k - 1),
                    ("k+2j-1", k + 2 * j - 1),
                    ("k^2+n(n-1)+k(2n-1)", quadratic),
                ],
            ),
            WzIdentity::Twoo | WzIdentity::TwooUncorrected => (
                vec![
                    j - 1,
                    j + k,
                    k + 2 * n,
                    1 + k * k * (n - 1) + k * (n * n - 3 * n) - 3 * n * n
                        + j * (2 * n * n + 2 * k * n - k - 1),
                ],
                vec![
                    ("n", n),
                    ("n-1", n - 1),
                    ("j+n+k-1", j + n + k - 1),
                    ("k+2j-1", k + 2 * j - 1),
                    if self == WzIdentity::Twoo {
                        ("k^2+n(n+1)+k(2n+1)", quadratic_up)
                    } else {
                        ("k^2+n(n-1)+k(2n-1)", quadratic)
                    },
                ],
            ),
        };
        let binomials =
            binom(j + n + k - 1, 2 * j + k - 2) * binom(2 * j + k - 1, j - self.shift());
        // the rewritten (j-n-1) factor contributes the minus sign
        let top = numer
            .iter()
            .fold(-sign(j + n) * binomials, |acc, &f| acc * f);
        if top.is_zero() {
            return Ok(BigRational::zero());
        }
        if let Some((factor, _)) = denom.iter().find(|(_, v)| *v == 0) {
            return Err(Error::Pole { factor });
        }
        let bottom = denom.iter().fold(BigInt::from(2), |acc, (_, v)| acc * v);
        Ok(BigRational::new(top, bottom))
    }
}

/// Residual `-F(n+1,j) + F(n,j) - G(n,j+1) + G(n,j)`, zero when the
/// certificate telescopes at `(n, j)`.
pub fn wz_certificate_check(which: WzIdentity, n: i64, j: i64, k: i64) -> Result<BigRational> {
    let g_next = which.certificate(n, j + 1, k)?;
    let g_here = which.certificate(n, j, k)?;
    Ok(which.summand(n, j, k) - which.summand(n + 1, j, k) - g_next + g_here)
}

/// `sum_{j=0}^{n} F(n, j)`, which the certificate pins to 1.
pub fn summand_total(which: WzIdentity, n: i64, k: i64) -> BigRational {
    (0..=n)
        .map(|j| which.summand(n, j, k))
        .fold(BigRational::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn hand_evaluated_examples() {
        assert!(identity_onee(1, 1).is_zero());
        assert!(identity_q(2, 2).is_zero());
        assert!(identity_twoo(2, 2).is_zero());
    }

    #[test]
    fn identity_grids() {
        for k in 1..=20 {
            for n in 1..=30 {
                assert!(identity_onee(n, k).is_zero(), "onee n = {n}, k = {k}");
                if n >= 2 {
                    assert!(identity_twoo(n, k).is_zero(), "twoo n = {n}, k = {k}");
                    assert!(identity_q(n, k).is_zero(), "q n = {n}, k = {k}");
                }
            }
        }
    }

    #[test]
    fn wz_examples() {
        assert!(wz_certificate_check(WzIdentity::Onee, 3, 1, 2)
            .unwrap()
            .is_zero());
        assert!(wz_certificate_check(WzIdentity::Twoo, 3, 2, 2)
            .unwrap()
            .is_zero());
        assert!(wz_certificate_check(WzIdentity::Onee, 2, 0, 1)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn certificate_boundary_values() {
        for which in [WzIdentity::Onee, WzIdentity::Twoo] {
            for n in 2..=12 {
                for k in 1..=8 {
                    assert!(which.certificate(n, 0, k).unwrap().is_zero());
                    assert_eq!(
                        which.certificate(n, n + 1, k).unwrap(),
                        which.summand(n + 1, n + 1, k),
                        "{which:?} n = {n}, k = {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn summands_total_one() {
        for which in [WzIdentity::Onee, WzIdentity::Twoo] {
            for n in 2..=20 {
                for k in 1..=8 {
                    assert_eq!(
                        summand_total(which, n, k),
                        BigRational::one(),
                        "{which:?} {n} {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn wz_grid() {
        for which in [WzIdentity::Onee, WzIdentity::Twoo] {
            for n in 2..=15 {
                for j in 0..=n {
                    for k in 1..=10 {
                        let r = wz_certificate_check(which, n, j, k).unwrap();
                        assert!(r.is_zero(), "{which:?} n = {n}, j = {j}, k = {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn uncorrected_certificate_does_not_telescope() {
        let r = wz_certificate_check(WzIdentity::TwooUncorrected, 3, 2, 2).unwrap();
        assert!(!r.is_zero());
        // G(3,3) differs from the telescoping value by (n+k+1)/(n+k-1) = 3/2
        let ratio = WzIdentity::TwooUncorrected.certificate(3, 3, 2).unwrap()
            / WzIdentity::Twoo.certificate(3, 3, 2).unwrap();
        assert_eq!(ratio, BigRational::new(3.into(), 2.into()));
    }

    #[test]
    fn poles_are_reported() {
        for which in [
            WzIdentity::Onee,
            WzIdentity::Twoo,
            WzIdentity::TwooUncorrected,
        ] {
            for n in -4..8 {
                for j in -3..10 {
                    for k in -4..8 {
                        if let Err(e) = which.certificate(n, j, k) {
                            assert!(matches!(e, Error::Pole { .. }), "{e}");
                        }
                    }
                }
            }
        }
    }
}
