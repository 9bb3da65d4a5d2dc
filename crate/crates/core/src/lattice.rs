//! The parity lattice, weighted steps, restrictions and lattice path models.
//!
//! A model is a step family together with walls, filters and long-step
//! families. Periodic filters and the infinite long-step family of the
//! quantum-group model are never materialized; they are resolved on demand
//! from the queried position, so every query touches finitely many of them.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A point `(x, n)` with `n >= 0` and `x + n` even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub x: i64,
    pub n: i64,
}

impl LatticePoint {
    pub fn new(x: i64, n: i64) -> Result<Self> {
        if n < 0 || (x + n).rem_euclid(2) != 0 {
            return Err(Error::Parity { x, n });
        }
        Ok(LatticePoint { x, n })
    }

    pub fn is_lattice(x: i64, n: i64) -> bool {
        n >= 0 && (x + n).rem_euclid(2) == 0
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StepKind {
    Right,
    Left,
    Long,
}

impl StepKind {
    pub fn letter(self) -> char {
        match self {
            StepKind::Right => 'R',
            StepKind::Left => 'L',
            StepKind::Long => 'J',
        }
    }
}

/// One step from `from_x` at level `n` to `to_x` at level `n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightedStep {
    pub from_x: i64,
    pub to_x: i64,
    pub weight: u64,
}

impl WeightedStep {
    pub fn kind(&self) -> StepKind {
        match self.to_x - self.from_x {
            1 => StepKind::Right,
            -1 => StepKind::Left,
            _ => StepKind::Long,
        }
    }
}

impl fmt::Display for WeightedStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{} w{}", self.from_x, self.to_x, self.weight)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Restriction {
    /// Only the right step is allowed at `x = d`.
    WallLeft { d: i64 },
    /// Filter of type `filter_type` occupying the columns `d` and `d + 1`.
    Filter { d: i64, filter_type: u64 },
    /// The long-step family `S(k)` from `l(k+2) - 2` to `lk - 1`.
    LongStepSource { k: i64, l: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    Unrestricted,
    WallOnly,
    SingleFilter,
    Auxiliary,
    Uq,
    Custom,
}

impl ModelKind {
    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Unrestricted => "unrestricted",
            ModelKind::WallOnly => "wall",
            ModelKind::SingleFilter => "filter",
            ModelKind::Auxiliary => "auxiliary",
            ModelKind::Uq => "uq",
            ModelKind::Custom => "custom",
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Filter {
    d: i64,
    filter_type: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Filters {
    Explicit(Vec<Filter>),
    /// Type-1 filters at `nl - 1` for every `n >= from`.
    Periodic {
        from: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum LongSteps {
    Families(BTreeSet<i64>),
    All,
}

/// Where a position sits relative to a filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FilterZone {
    Line(u64),
    Return,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModelSpec {
    l: i64,
    kind: ModelKind,
    wall: Option<i64>,
    filters: Filters,
    long_steps: LongSteps,
}

impl ModelSpec {
    pub fn unrestricted(l: i64) -> Result<Self> {
        ModelBuilder::new(l).kind(ModelKind::Unrestricted).build()
    }

    pub fn wall_only(l: i64, a: i64) -> Result<Self> {
        if a > 0 {
            return Err(Error::InvalidModel(format!(
                "wall must sit at or left of the origin, got {a}"
            )));
        }
        ModelBuilder::new(l)
            .kind(ModelKind::WallOnly)
            .wall(a)
            .build()
    }

    pub fn single_filter(l: i64, d: i64, filter_type: u64) -> Result<Self> {
        if d <= 0 {
            return Err(Error::InvalidModel(format!(
                "filter must sit right of the origin, got {d}"
            )));
        }
        ModelBuilder::new(l)
            .kind(ModelKind::SingleFilter)
            .filter(d, filter_type)
            .build()
    }

    /// Wall at 0 and type-1 filters at every `nl - 1`, `n >= 1`.
    pub fn auxiliary(l: i64) -> Result<Self> {
        ModelBuilder::new(l)
            .kind(ModelKind::Auxiliary)
            .wall(0)
            .periodic_filters(1)
            .build()
    }

    /// The auxiliary model with every long-step family `S(k)`, `k >= 1`.
    pub fn uq(l: i64) -> Result<Self> {
        ModelBuilder::new(l)
            .kind(ModelKind::Uq)
            .wall(0)
            .periodic_filters(1)
            .all_long_steps()
            .build()
    }

    pub fn builder(l: i64) -> ModelBuilder {
        ModelBuilder::new(l)
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn wall(&self) -> Option<i64> {
        self.wall
    }

    pub fn has_long_steps(&self) -> bool {
        match &self.long_steps {
            LongSteps::All => true,
            LongSteps::Families(ks) => !ks.is_empty(),
        }
    }

    /// Materializes the restrictions that act on positions `<= x_max`.
    pub fn restrictions(&self, x_max: i64) -> Vec<Restriction> {
        let mut out = Vec::new();
        if let Some(d) = self.wall {
            out.push(Restriction::WallLeft { d });
        }
        match &self.filters {
            Filters::Explicit(fs) => {
                out.extend(
                    fs.iter()
                        .filter(|f| f.d <= x_max)
                        .map(|f| Restriction::Filter {
                            d: f.d,
                            filter_type: f.filter_type,
                        }),
                )
            }
            Filters::Periodic { from } => {
                let mut n = *from;
                while n * self.l - 1 <= x_max {
                    out.push(Restriction::Filter {
                        d: n * self.l - 1,
                        filter_type: 1,
                    });
                    n += 1;
                }
            }
        }
        let mut k = 1;
        while self.l * (k + 2) - 2 <= x_max {
            if self.long_family_active(k) {
                out.push(Restriction::LongStepSource { k, l: self.l });
            }
            k += 1;
        }
        out
    }

    fn filter_zone(&self, x: i64) -> Option<FilterZone> {
        match &self.filters {
            Filters::Explicit(fs) => fs.iter().find_map(|f| {
                if f.d == x {
                    Some(FilterZone::Line(f.filter_type))
                } else if f.d + 1 == x {
                    Some(FilterZone::Return)
                } else {
                    None
                }
            }),
            Filters::Periodic { from } => {
                if (x + 1).rem_euclid(self.l) == 0 && (x + 1).div_euclid(self.l) >= *from {
                    Some(FilterZone::Line(1))
                } else if x.rem_euclid(self.l) == 0 && x.div_euclid(self.l) >= *from {
                    Some(FilterZone::Return)
                } else {
                    None
                }
            }
        }
    }

    fn long_family_active(&self, k: i64) -> bool {
        k >= 1
            && match &self.long_steps {
                LongSteps::All => true,
                LongSteps::Families(ks) => ks.contains(&k),
            }
    }

    /// The family index `k` whose long steps leave `x`, if any.
    fn long_family_from(&self, x: i64) -> Option<i64> {
        if (x + 2).rem_euclid(self.l) != 0 {
            return None;
        }
        let k = (x + 2).div_euclid(self.l) - 2;
        self.long_family_active(k).then_some(k)
    }

    /// The family index `k` whose long steps land on `x`, if any.
    fn long_family_into(&self, x: i64) -> Option<i64> {
        if (x + 1).rem_euclid(self.l) != 0 {
            return None;
        }
        let k = (x + 1).div_euclid(self.l);
        self.long_family_active(k).then_some(k)
    }

    /// All outgoing weighted steps at position `x`.
    ///
    /// Rules compose: a filter line keeps only the right step (weight = filter
    /// type), the column after a filter returns left with weight 2, the wall
    /// keeps only the right step, and a long-step source gains one extra step.
    pub fn allowed_steps(&self, x: i64) -> Result<Vec<WeightedStep>> {
        if let Some(wall) = self.wall {
            if x < wall {
                return Err(Error::LeftOfWall { x, wall });
            }
        }
        let right = |weight| WeightedStep {
            from_x: x,
            to_x: x + 1,
            weight,
        };
        let left = |weight| WeightedStep {
            from_x: x,
            to_x: x - 1,
            weight,
        };
        let mut steps = if self.wall == Some(x) {
            vec![right(1)]
        } else {
            match self.filter_zone(x) {
                Some(FilterZone::Line(n)) => vec![right(n)],
                Some(FilterZone::Return) => vec![right(1), left(2)],
                None => vec![right(1), left(1)],
            }
        };
        if let Some(k) = self.long_family_from(x) {
            steps.push(WeightedStep {
                from_x: x,
                to_x: self.l * k - 1,
                weight: 1,
            });
        }
        Ok(steps)
    }

    /// All steps arriving at `x`, as `(from_x, weight)` pairs.
    pub fn incoming_steps(&self, x: i64) -> Vec<WeightedStep> {
        let mut sources = vec![x - 1, x + 1];
        if let Some(k) = self.long_family_into(x) {
            sources.push(self.l * (k + 2) - 2);
        }
        sources
            .into_iter()
            .filter_map(|src| self.allowed_steps(src).ok())
            .flatten()
            .filter(|s| s.to_x == x)
            .collect()
    }

    /// Whether some path from the origin could end at `p`.
    ///
    /// Positions are bounded by the level on both sides (long steps only move
    /// left from inside the cone) and by the wall when one is present.
    pub fn in_reach(&self, p: LatticePoint) -> bool {
        LatticePoint::is_lattice(p.x, p.n) && p.x.abs() <= p.n && self.wall.is_none_or(|w| p.x >= w)
    }
}

/// Assembles custom models, e.g. the two-filter model with a single long-step
/// family or the auxiliary model with one family `S(k)`.
#[derive(Debug, Clone)]
pub struct ModelBuilder {
    l: i64,
    kind: ModelKind,
    wall: Option<i64>,
    explicit: Vec<Filter>,
    periodic_from: Option<i64>,
    long_steps: Option<LongSteps>,
}

impl ModelBuilder {
    pub fn new(l: i64) -> Self {
        ModelBuilder {
            l,
            kind: ModelKind::Custom,
            wall: None,
            explicit: Vec::new(),
            periodic_from: None,
            long_steps: None,
        }
    }

    pub fn kind(mut self, kind: ModelKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn wall(mut self, d: i64) -> Self {
        self.wall = Some(d);
        self
    }

    pub fn filter(mut self, d: i64, filter_type: u64) -> Self {
        self.explicit.push(Filter { d, filter_type });
        self
    }

    /// Type-1 filters at `nl - 1` for all `n >= from`.
    pub fn periodic_filters(mut self, from: i64) -> Self {
        self.periodic_from = Some(from);
        self
    }

    pub fn long_step_family(mut self, k: i64) -> Self {
        match &mut self.long_steps {
            Some(LongSteps::Families(ks)) => {
                ks.insert(k);
            }
            Some(LongSteps::All) => {}
            None => self.long_steps = Some(LongSteps::Families(BTreeSet::from([k]))),
        }
        self
    }

    pub fn all_long_steps(mut self) -> Self {
        self.long_steps = Some(LongSteps::All);
        self
    }

    pub fn build(self) -> Result<ModelSpec> {
        if self.l < 3 {
            return Err(Error::InvalidModulus(self.l));
        }
        let filters = match (self.periodic_from, self.explicit.is_empty()) {
            (Some(_), false) => {
                return Err(Error::InvalidModel(
                    "explicit and periodic filters cannot be mixed".into(),
                ))
            }
            (Some(from), true) => {
                if from < 1 {
                    return Err(Error::InvalidModel(format!(
                        "periodic filters start at n >= 1, got {from}"
                    )));
                }
                Filters::Periodic { from }
            }
            (None, _) => {
                let mut fs = self.explicit;
                fs.sort_by_key(|f| f.d);
                for pair in fs.windows(2) {
                    if pair[1].d - pair[0].d < 2 {
                        return Err(Error::InvalidModel(format!(
                            "filters at {} and {} overlap",
                            pair[0].d, pair[1].d
                        )));
                    }
                }
                if let Some(f) = fs.iter().find(|f| f.filter_type == 0) {
                    return Err(Error::InvalidModel(format!("filter at {} has type 0", f.d)));
                }
                Filters::Explicit(fs)
            }
        };
        if let Some(w) = self.wall {
            let first_filter = match &filters {
                Filters::Explicit(fs) => fs.first().map(|f| f.d),
                Filters::Periodic { from } => Some(from * self.l - 1),
            };
            if first_filter.is_some_and(|d| d <= w) {
                return Err(Error::InvalidModel(
                    "the wall must lie strictly left of every filter".into(),
                ));
            }
        }
        let long_steps = match self.long_steps {
            Some(LongSteps::Families(ks)) => {
                if let Some(k) = ks.iter().find(|&&k| k < 1) {
                    return Err(Error::InvalidModel(format!(
                        "long-step families are indexed by k >= 1, got {k}"
                    )));
                }
                LongSteps::Families(ks)
            }
            Some(LongSteps::All) => LongSteps::All,
            None => LongSteps::Families(BTreeSet::new()),
        };
        Ok(ModelSpec {
            l: self.l,
            kind: self.kind,
            wall: self.wall,
            filters,
            long_steps,
        })
    }
}

/// Strip number `j = floor((M + 1) / l) + 1`, i.e. `(j-1)l - 1 <= M <= jl - 2`.
pub fn strip_index(m: i64, l: i64) -> Result<i64> {
    if l < 3 {
        return Err(Error::InvalidModulus(l));
    }
    if m < 0 {
        return Err(Error::NegativePosition(m));
    }
    Ok((m + 1).div_euclid(l) + 1)
}
