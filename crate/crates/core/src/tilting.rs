//! Multiplicities of tilting modules `T(k)` in `T(1)^N` for the divided-power
//! quantum group at a root of unity of order `l`, computed from the
//! Grothendieck-ring recursion and compared against path counts.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::ModelSpec;
use crate::paths::count_paths;

/// Highest weight `k = l k1 + k0`, `0 <= k0 < l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TiltingLabel(pub i64);

impl TiltingLabel {
    pub fn split(self, l: i64) -> (i64, i64) {
        (self.0.div_euclid(l), self.0.rem_euclid(l))
    }

    /// Labels `lk1 - 1`, the columns carrying filters.
    pub fn is_filter_column(self, l: i64) -> bool {
        self.0 >= 0 && self.split(l).1 == l - 1
    }
}

/// Sparse multiplicities of `T(k)` in `T(1)^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    n: i64,
    mult: BTreeMap<TiltingLabel, BigUint>,
}

impl Decomposition {
    /// `T(1)^0 = T(0)`.
    pub fn unit() -> Self {
        Decomposition {
            n: 0,
            mult: BTreeMap::from([(TiltingLabel(0), BigUint::one())]),
        }
    }

    pub fn new(n: i64, mult: BTreeMap<TiltingLabel, BigUint>) -> Result<Self> {
        let dec = Decomposition { n, mult };
        dec.validate()?;
        Ok(dec)
    }

    fn validate(&self) -> Result<()> {
        if self.n < 0 {
            return Err(Error::MalformedDecomposition(format!(
                "negative power {}",
                self.n
            )));
        }
        for (label, m) in &self.mult {
            let k = label.0;
            if k < 0 || k > self.n || (self.n - k) % 2 != 0 {
                return Err(Error::MalformedDecomposition(format!(
                    "T({k}) cannot occur in T(1)^{}",
                    self.n
                )));
            }
            if m.is_zero() {
                return Err(Error::MalformedDecomposition(format!(
                    "zero multiplicity at T({k})"
                )));
            }
        }
        Ok(())
    }

    pub fn power(&self) -> i64 {
        self.n
    }

    pub fn get(&self, k: i64) -> BigUint {
        self.mult
            .get(&TiltingLabel(k))
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigUint)> {
        self.mult.iter().map(|(label, m)| (label.0, m))
    }

    pub fn len(&self) -> usize {
        self.mult.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }
}

/// Multiplicity of `T(k)` in `T(1)^(N+1)` by the recursion on labels:
///
/// * `T(0)` comes from `T(1)`;
/// * `k0 = l-2` comes from `T(k-1)` only;
/// * `k0 = l-1` comes from `T(k-1) + 2 T(k+1) + T(k + 2l - 1)`;
/// * every other label from its two neighbours.
fn next_multiplicity(dec: &Decomposition, k: i64, l: i64) -> BigUint {
    let (_, k0) = TiltingLabel(k).split(l);
    if k == 0 {
        dec.get(1)
    } else if k0 == l - 2 {
        dec.get(k - 1)
    } else if k0 == l - 1 {
        dec.get(k - 1) + dec.get(k + 1) * 2u32 + dec.get(k + 2 * l - 1)
    } else {
        dec.get(k - 1) + dec.get(k + 1)
    }
}

/// `T(1)^N -> T(1)^(N+1)`.
pub fn tensor_step(dec: &Decomposition, l: i64) -> Result<Decomposition> {
    if l < 3 {
        return Err(Error::InvalidModulus(l));
    }
    dec.validate()?;
    let n = dec.n + 1;
    let mult = (0..=n)
        .rev()
        .step_by(2)
        .map(|k| (TiltingLabel(k), next_multiplicity(dec, k, l)))
        .filter(|(_, m)| !m.is_zero())
        .collect();
    Ok(Decomposition { n, mult })
}

/// `T(1)^N` by iterating [`tensor_step`] from `T(0)`.
pub fn decompose(n: i64, l: i64) -> Result<Decomposition> {
    decompose_all(n, l).map(|mut all| all.pop().expect("power 0 is always present"))
}

/// Decompositions of `T(1)^0, ..., T(1)^N`.
pub fn decompose_all(n: i64, l: i64) -> Result<Vec<Decomposition>> {
    if l < 3 {
        return Err(Error::InvalidModulus(l));
    }
    if n < 0 {
        return Err(Error::MalformedDecomposition(format!("negative power {n}")));
    }
    let mut out = vec![Decomposition::unit()];
    for _ in 0..n {
        let next = tensor_step(out.last().expect("non-empty"), l)?;
        out.push(next);
    }
    Ok(out)
}

/// Closed form of the dimension functional: `k + 1` below `l`, then `2lk1`
/// on `lk1 + k0` (`k0 <= l-2`) and `lk1` on the filter columns `lk1 - 1`.
pub fn tilting_dim(k: i64, l: i64) -> BigUint {
    let (k1, k0) = TiltingLabel(k).split(l);
    let d = if k < l {
        k + 1
    } else if k0 == l - 1 {
        l * (k1 + 1)
    } else {
        2 * l * k1
    };
    BigUint::from(d as u64)
}

/// Dimension functional obtained by propagating `2 d(x) = sum w d(target)`
/// rightwards from `d(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimTable {
    dims: Vec<BigInt>,
}

impl DimTable {
    /// Each position's conservation law fixes the value one column to the
    /// right; all other targets are already known. Fails if a value comes out
    /// non-integral or non-positive.
    pub fn propagate(model: &ModelSpec, x_max: i64) -> Result<Self> {
        let mut dims = vec![BigInt::one()];
        for x in 0..x_max {
            let mut rest = BigInt::from(2) * &dims[x as usize];
            let mut right_weight = None;
            for step in model.allowed_steps(x)? {
                if step.to_x == x + 1 {
                    right_weight = Some(step.weight);
                } else {
                    let target = usize::try_from(step.to_x).map_err(|_| {
                        Error::Unsupported("dimension propagation needs a wall at 0")
                    })?;
                    rest -= &dims[target] * step.weight;
                }
            }
            let w = right_weight.ok_or(Error::Unsupported("position without a right step"))?;
            let w = BigInt::from(w);
            if !(&rest % &w).is_zero() || rest <= BigInt::zero() {
                return Err(Error::Unsupported(
                    "dimension propagation leaves the positive integers",
                ));
            }
            dims.push(rest / w);
        }
        Ok(DimTable { dims })
    }

    pub fn get(&self, k: i64) -> Option<&BigInt> {
        usize::try_from(k).ok().and_then(|k| self.dims.get(k))
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }
}

/// `sum_k mult(k) dim(k)`; equals `2^N` for `T(1)^N`.
pub fn total_dimension(dec: &Decomposition, l: i64) -> BigUint {
    dec.iter().map(|(k, m)| m * tilting_dim(k, l)).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub l: i64,
    pub k: i64,
    pub n: i64,
    pub from_recursion: BigUint,
    pub from_paths: BigUint,
}

/// Compares the recursion against path counts in the quantum-group model for
/// every `N <= n_max`.
pub fn verify_against_paths(n_max: i64, l: i64) -> Result<Vec<Mismatch>> {
    let decs = decompose_all(n_max, l)?;
    let table = count_paths(&ModelSpec::uq(l)?, n_max)?;
    let mut out = Vec::new();
    for (n, dec) in decs.iter().enumerate() {
        let n = n as i64;
        for k in 0..=n {
            let (a, b) = (dec.get(k), table.get(k, n));
            if a != b {
                out.push(Mismatch {
                    l,
                    k,
                    n,
                    from_recursion: a,
                    from_paths: b,
                });
            }
        }
    }
    Ok(out)
}
