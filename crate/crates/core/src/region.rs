//! Finite regions of a model, their boundaries, congruence under lattice
//! translations, and reconstruction of region counts from boundary values.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, ModelSpec};
use crate::paths::CountTable;

/// A finite point set read inside one model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    points: BTreeSet<LatticePoint>,
    model: ModelSpec,
}

impl Region {
    pub fn new(model: ModelSpec, points: impl IntoIterator<Item = LatticePoint>) -> Self {
        Region {
            points: points.into_iter().collect(),
            model,
        }
    }

    /// Every lattice point with `x_lo <= x <= x_hi` and `n_lo <= n <= n_hi`.
    pub fn band(model: ModelSpec, x_lo: i64, x_hi: i64, n_lo: i64, n_hi: i64) -> Self {
        let points = (n_lo.max(0)..=n_hi)
            .flat_map(|n| (x_lo..=x_hi).map(move |x| (x, n)))
            .filter_map(|(x, n)| LatticePoint::new(x, n).ok());
        Region::new(model, points)
    }

    /// Strip `j` of the model, `(j-1)l - 1 <= x <= jl - 2`, cut at level `n_max`.
    pub fn strip(model: ModelSpec, j: i64, n_max: i64) -> Self {
        let l = model.l();
        let lo = ((j - 1) * l - 1).max(0);
        Region::band(model, lo, j * l - 2, 0, n_max)
    }

    pub fn points(&self) -> &BTreeSet<LatticePoint> {
        &self.points
    }

    pub fn model(&self) -> &ModelSpec {
        &self.model
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.contains(p)
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// In-region outgoing steps of `p` as `(target, weight)`.
    fn inner_steps(&self, p: LatticePoint) -> BTreeSet<(LatticePoint, u64)> {
        self.model
            .allowed_steps(p.x)
            .map(|steps| {
                steps
                    .into_iter()
                    .map(|s| {
                        (
                            LatticePoint {
                                x: s.to_x,
                                n: p.n + 1,
                            },
                            s.weight,
                        )
                    })
                    .filter(|(q, _)| self.contains(q))
                    .collect()
            })
            .unwrap_or_default()
    }

    /// Reachable points outside the region with an allowed step into `p`.
    fn has_outside_predecessor(&self, p: LatticePoint) -> bool {
        p.n > 0
            && self.model.incoming_steps(p.x).iter().any(|s| {
                let src = LatticePoint {
                    x: s.from_x,
                    n: p.n - 1,
                };
                self.model.in_reach(src) && !self.contains(&src)
            })
    }
}

/// A lattice translation `(x, n) -> (x + dx, n + dn)`; `dx + dn` is even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Translation {
    dx: i64,
    dn: i64,
}

impl Translation {
    pub fn new(dx: i64, dn: i64) -> Result<Self> {
        if (dx + dn).rem_euclid(2) != 0 {
            return Err(Error::Parity { x: dx, n: dn });
        }
        Ok(Translation { dx, dn })
    }

    pub fn horizontal(dx: i64) -> Result<Self> {
        Translation::new(dx, 0)
    }

    pub fn identity() -> Self {
        Translation { dx: 0, dn: 0 }
    }

    pub fn inverse(self) -> Self {
        Translation {
            dx: -self.dx,
            dn: -self.dn,
        }
    }

    pub fn dx(self) -> i64 {
        self.dx
    }

    pub fn dn(self) -> i64 {
        self.dn
    }

    /// `None` when the image falls below level 0.
    pub fn apply(self, p: LatticePoint) -> Option<LatticePoint> {
        LatticePoint::new(p.x + self.dx, p.n + self.dn).ok()
    }
}

/// Points of the region that receive a step from a reachable point outside it.
///
/// Predecessors are restricted to points a path from the origin can visit;
/// everywhere else the weighted count is zero and cannot feed the region.
pub fn boundary(region: &Region) -> BTreeSet<LatticePoint> {
    region
        .points
        .iter()
        .copied()
        .filter(|&p| region.has_outside_predecessor(p))
        .collect()
}

/// True iff `t` maps `a` onto `b` and matches their in-region steps with
/// equal weights, checked from both sides.
pub fn check_congruent(a: &Region, b: &Region, t: Translation) -> bool {
    let image: Option<BTreeSet<_>> = a.points.iter().map(|&p| t.apply(p)).collect();
    if image.as_ref() != Some(&b.points) {
        return false;
    }
    let moved = |steps: BTreeSet<(LatticePoint, u64)>, t: Translation| {
        steps
            .into_iter()
            .map(|(q, w)| (t.apply(q).expect("region images are lattice points"), w))
            .collect::<BTreeSet<_>>()
    };
    let forward = a.points.iter().all(|&p| {
        let p_img = t.apply(p).expect("checked above");
        moved(a.inner_steps(p), t).is_subset(&b.inner_steps(p_img))
    });
    let back = b.points.iter().all(|&q| {
        let q_pre = t.inverse().apply(q).expect("checked above");
        moved(b.inner_steps(q), t.inverse()).is_subset(&a.inner_steps(q_pre))
    });
    forward && back
}

/// Rebuilds counts on the whole region from the values on its boundary by
/// running the forward recursion level by level inside the region.
pub fn counts_from_boundary(
    region: &Region,
    boundary_values: &BTreeMap<LatticePoint, BigUint>,
) -> Result<BTreeMap<LatticePoint, BigUint>> {
    let edge = boundary(region);
    if let Some(p) = boundary_values.keys().find(|p| !edge.contains(p)) {
        return Err(Error::UnexpectedSeed(*p));
    }
    let mut values: BTreeMap<LatticePoint, BigUint> = BTreeMap::new();
    // BTreeSet order is by x first; the recursion needs level order
    let mut by_level: Vec<LatticePoint> = region.points.iter().copied().collect();
    by_level.sort_by_key(|p| (p.n, p.x));
    for p in by_level {
        let value = if edge.contains(&p) {
            boundary_values
                .get(&p)
                .cloned()
                .ok_or(Error::IncompleteSeed(p))?
        } else if p.n == 0 {
            if p.x == 0 {
                BigUint::one()
            } else {
                BigUint::zero()
            }
        } else {
            region
                .model
                .incoming_steps(p.x)
                .iter()
                .filter_map(|s| {
                    values
                        .get(&LatticePoint {
                            x: s.from_x,
                            n: p.n - 1,
                        })
                        .map(|v| v * s.weight)
                })
                .sum()
        };
        values.insert(p, value);
    }
    Ok(values)
}

/// Boundary values read from a global table.
pub fn seed_from_table(region: &Region, table: &CountTable) -> BTreeMap<LatticePoint, BigUint> {
    boundary(region)
        .into_iter()
        .map(|p| (p, table.get(p.x, p.n)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::count_paths;

    fn pt(x: i64, n: i64) -> LatticePoint {
        LatticePoint::new(x, n).unwrap()
    }

    #[test]
    fn strip_boundary_is_left_filter_column() {
        for l in [3, 5] {
            let aux = ModelSpec::auxiliary(l).unwrap();
            let region = Region::strip(aux, 2, 20);
            let edge = boundary(&region);
            assert!(!edge.is_empty());
            assert!(edge.iter().all(|p| p.x == l - 1), "l = {l}: {edge:?}");
            let expected: BTreeSet<_> = (l - 1..=20)
                .filter_map(|n| LatticePoint::new(l - 1, n).ok())
                .collect();
            assert_eq!(edge, expected);
        }
    }

    #[test]
    fn interior_point_has_no_boundary() {
        let uq = ModelSpec::uq(3).unwrap();
        let region = Region::new(uq, [pt(0, 0), pt(1, 1), pt(0, 2), pt(2, 2)]);
        assert!(boundary(&region).is_empty());
    }

    #[test]
    fn reachable_cone_has_empty_boundary() {
        let uq = ModelSpec::uq(3).unwrap();
        let cone = Region::band(uq.clone(), 0, 12, 0, 12);
        let cone = Region::new(uq, cone.points().iter().copied().filter(|p| p.x <= p.n));
        assert!(boundary(&cone).is_empty());
    }

    #[test]
    fn identity_congruence() {
        let uq = ModelSpec::uq(3).unwrap();
        let r = Region::band(uq, 0, 9, 0, 12);
        assert!(check_congruent(&r, &r, Translation::identity()));
    }

    #[test]
    fn translation_parity() {
        assert!(Translation::new(1, 0).is_err());
        assert!(Translation::new(1, 1).is_ok());
        let t = Translation::new(4, 2).unwrap();
        assert_eq!(
            t.inverse().apply(t.apply(pt(3, 5)).unwrap()),
            Some(pt(3, 5))
        );
    }

    #[test]
    fn boundary_reconstruction_matches_table() {
        let aux = ModelSpec::auxiliary(3).unwrap();
        let table = count_paths(&aux, 8).unwrap();
        let region = Region::strip(aux, 2, 8);
        let seed = seed_from_table(&region, &table);
        let got = counts_from_boundary(&region, &seed).unwrap();
        assert_eq!(got[&pt(3, 5)], BigUint::from(4u32));
        assert_eq!(got[&pt(3, 7)], BigUint::from(13u32));
        assert_eq!(got[&pt(4, 8)], BigUint::from(13u32));
        for (p, v) in &got {
            assert_eq!(*v, table.get(p.x, p.n), "at {p}");
        }
    }

    #[test]
    fn empty_region_and_boundary_only() {
        let aux = ModelSpec::auxiliary(3).unwrap();
        let empty = Region::new(aux.clone(), []);
        assert!(counts_from_boundary(&empty, &BTreeMap::new())
            .unwrap()
            .is_empty());

        let only = Region::new(aux, [pt(2, 2), pt(2, 4)]);
        let seed: BTreeMap<_, _> = boundary(&only)
            .into_iter()
            .map(|p| (p, BigUint::from(p.n as u32 * 7)))
            .collect();
        assert_eq!(seed.len(), 2);
        assert_eq!(counts_from_boundary(&only, &seed).unwrap(), seed);
    }

    #[test]
    fn missing_and_unexpected_seeds() {
        let aux = ModelSpec::auxiliary(3).unwrap();
        let region = Region::strip(aux, 2, 6);
        assert_eq!(
            counts_from_boundary(&region, &BTreeMap::new()),
            Err(Error::IncompleteSeed(pt(2, 2)))
        );
        let seed = BTreeMap::from([(pt(3, 3), BigUint::one())]);
        assert_eq!(
            counts_from_boundary(&region, &seed),
            Err(Error::UnexpectedSeed(pt(3, 3)))
        );
    }
}
