//! Standard chain-closed t-norms, t-conorms and uninorm families.

use crate::chain::ChainScale;
use crate::error::{Error, Result};
use crate::table::OpTable;
use crate::uninorm::{validate_uninorm, Uninorm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Min,
    Max,
    LukasiewiczTNorm,
    LukasiewiczTConorm,
    DrasticTNorm,
    DrasticTConorm,
    /// max on `[e, n]^2`, min elsewhere.
    UminIdempotent,
    /// min on `[0, e]^2`, max elsewhere.
    UmaxIdempotent,
    /// `t` on `[0, e]^2`, `s` on `[e, n]^2`, min on `A(e)`.
    UminOf { t: Box<Uninorm>, s: Box<Uninorm> },
    /// `t` on `[0, e]^2`, `s` on `[e, n]^2`, max on `A(e)`.
    UmaxOf { t: Box<Uninorm>, s: Box<Uninorm> },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Min => "min",
            Family::Max => "max",
            Family::LukasiewiczTNorm => "lukasiewicz-tnorm",
            Family::LukasiewiczTConorm => "lukasiewicz-tconorm",
            Family::DrasticTNorm => "drastic-tnorm",
            Family::DrasticTConorm => "drastic-tconorm",
            Family::UminIdempotent => "umin-idempotent",
            Family::UmaxIdempotent => "umax-idempotent",
            Family::UminOf { .. } => "umin-of",
            Family::UmaxOf { .. } => "umax-of",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub scale: ChainScale,
    pub e: usize,
}

impl FamilySpec {
    pub fn new(family: Family, scale: ChainScale, e: usize) -> Self {
        FamilySpec { family, scale, e }
    }

    pub fn tnorm(family: Family, scale: ChainScale) -> Self {
        FamilySpec::new(family, scale, scale.n())
    }

    pub fn tconorm(family: Family, scale: ChainScale) -> Self {
        FamilySpec::new(family, scale, 0)
    }

    pub fn umin_of(t: Uninorm, s: Uninorm, scale: ChainScale, e: usize) -> Self {
        FamilySpec::new(Family::UminOf { t: Box::new(t), s: Box::new(s) }, scale, e)
    }

    pub fn umax_of(t: Uninorm, s: Uninorm, scale: ChainScale, e: usize) -> Self {
        FamilySpec::new(Family::UmaxOf { t: Box::new(t), s: Box::new(s) }, scale, e)
    }

    /// Checks the neutral element against the family and the sub-operation sizes.
    pub fn check(&self) -> Result<()> {
        let (n, e) = (self.scale.n(), self.e);
        let bad = |msg: String| Err(Error::InconsistentSpec(msg));
        if e > n {
            return bad(format!("neutral element {e} is outside L_{n}"));
        }
        match &self.family {
            Family::Min | Family::LukasiewiczTNorm | Family::DrasticTNorm if e != n => {
                bad(format!("{} is a t-norm and needs e = n = {n}, got {e}", self.family.name()))
            }
            Family::Max | Family::LukasiewiczTConorm | Family::DrasticTConorm if e != 0 => {
                bad(format!("{} is a t-conorm and needs e = 0, got {e}", self.family.name()))
            }
            Family::UminIdempotent
            | Family::UmaxIdempotent
            | Family::UminOf { .. }
            | Family::UmaxOf { .. }
                if e == 0 || e == n =>
            {
                bad(format!("{} needs a proper neutral element 0 < e < {n}, got {e}", self.family.name()))
            }
            Family::UminOf { t, s } | Family::UmaxOf { t, s } => {
                if t.n() != e || !t.is_tnorm() {
                    return bad(format!(
                        "T must be a t-norm on L_{e}, got neutral {} on L_{}",
                        t.neutral(),
                        t.n()
                    ));
                }
                if s.n() != n - e || !s.is_tconorm() {
                    return bad(format!(
                        "S must be a t-conorm on L_{}, got neutral {} on L_{}",
                        n - e,
                        s.neutral(),
                        s.n()
                    ));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

pub fn make(spec: &FamilySpec) -> Result<Uninorm> {
    spec.check()?;
    let (n, e) = (spec.scale.n(), spec.e);
    let table = match &spec.family {
        Family::Min => OpTable::from_fn(spec.scale, |x, y| x.min(y)),
        Family::Max => OpTable::from_fn(spec.scale, |x, y| x.max(y)),
        Family::LukasiewiczTNorm => OpTable::from_fn(spec.scale, |x, y| (x + y).saturating_sub(n)),
        Family::LukasiewiczTConorm => OpTable::from_fn(spec.scale, |x, y| (x + y).min(n)),
        Family::DrasticTNorm => {
            OpTable::from_fn(spec.scale, |x, y| if x.max(y) == n { x.min(y) } else { 0 })
        }
        Family::DrasticTConorm => {
            OpTable::from_fn(spec.scale, |x, y| if x.min(y) == 0 { x.max(y) } else { n })
        }
        Family::UminIdempotent => OpTable::from_fn(spec.scale, |x, y| {
            if x >= e && y >= e { x.max(y) } else { x.min(y) }
        }),
        Family::UmaxIdempotent => OpTable::from_fn(spec.scale, |x, y| {
            if x <= e && y <= e { x.min(y) } else { x.max(y) }
        }),
        Family::UminOf { t, s } => OpTable::from_fn(spec.scale, |x, y| {
            if x <= e && y <= e {
                t.get(x, y)
            } else if x >= e && y >= e {
                e + s.get(x - e, y - e)
            } else {
                x.min(y)
            }
        }),
        Family::UmaxOf { t, s } => OpTable::from_fn(spec.scale, |x, y| {
            if x <= e && y <= e {
                t.get(x, y)
            } else if x >= e && y >= e {
                e + s.get(x - e, y - e)
            } else {
                x.max(y)
            }
        }),
    }?;
    let report = validate_uninorm(&table, e);
    if !report.verdict() {
        return Err(Error::Internal(format!(
            "constructor {} produced an invalid table:\n{report}",
            spec.family.name()
        )));
    }
    Ok(Uninorm::trusted(table, e))
}

fn must(spec: FamilySpec) -> Uninorm {
    make(&spec).expect("catalog constructor on a consistent spec")
}

pub fn min_tnorm(scale: ChainScale) -> Uninorm {
    must(FamilySpec::tnorm(Family::Min, scale))
}

pub fn max_tconorm(scale: ChainScale) -> Uninorm {
    must(FamilySpec::tconorm(Family::Max, scale))
}

pub fn lukasiewicz_tnorm(scale: ChainScale) -> Uninorm {
    must(FamilySpec::tnorm(Family::LukasiewiczTNorm, scale))
}

pub fn lukasiewicz_tconorm(scale: ChainScale) -> Uninorm {
    must(FamilySpec::tconorm(Family::LukasiewiczTConorm, scale))
}

/// `IdemMin(e)`: max when both arguments are at least `e`, min otherwise.
pub fn idem_min(scale: ChainScale, e: usize) -> Result<Uninorm> {
    make(&FamilySpec::new(Family::UminIdempotent, scale, e))
}

/// `IdemMax(e)`: min when both arguments are at most `e`, max otherwise.
pub fn idem_max(scale: ChainScale, e: usize) -> Result<Uninorm> {
    make(&FamilySpec::new(Family::UmaxIdempotent, scale, e))
}

/// `LukUpper(e)`: bounded sum `min(n, x + y - e)` on `[e, n]^2`, min elsewhere.
pub fn luk_upper(scale: ChainScale, e: usize) -> Result<Uninorm> {
    let (t, s) = sub_scales(scale, e)?;
    make(&FamilySpec::umin_of(min_tnorm(t), lukasiewicz_tconorm(s), scale, e))
}

/// Dual of [`luk_upper`]: Łukasiewicz t-norm on `[0, e]^2`, max elsewhere.
pub fn luk_lower(scale: ChainScale, e: usize) -> Result<Uninorm> {
    let (t, s) = sub_scales(scale, e)?;
    make(&FamilySpec::umax_of(lukasiewicz_tnorm(t), max_tconorm(s), scale, e))
}

fn sub_scales(scale: ChainScale, e: usize) -> Result<(ChainScale, ChainScale)> {
    if e == 0 || e >= scale.n() {
        return Err(Error::InconsistentSpec(format!(
            "needs a proper neutral element 0 < e < {}, got {e}",
            scale.n()
        )));
    }
    Ok((ChainScale::new(e)?, ChainScale::new(scale.n() - e)?))
}
