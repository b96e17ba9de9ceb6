//! Splitting a distributive pair with distinct neutral elements into its
//! blocks, and assembling a pair back from blocks.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::chain::ChainScale;
use crate::distributivity::{
    check_distributivity, greater_neutral_conditions, less_neutral_conditions, TheoremCase,
};
use crate::error::{Error, Result};
use crate::report::{CheckReport, Law, Violation, Witness, WitnessPolicy};
use crate::table::OpTable;
use crate::uninorm::{validate_uninorm_with, Uninorm};

/// Which argument both uninorms return at an off-diagonal block point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Choice {
    /// The coordinate on the far side of `e2` (the `x` of the key).
    First,
    /// The coordinate on the `e1` side (the `y` of the key).
    Second,
}

impl Choice {
    pub fn name(self) -> &'static str {
        match self {
            Choice::First => "first",
            Choice::Second => "second",
        }
    }

    pub fn pick(self, x: usize, y: usize) -> usize {
        match self {
            Choice::First => x,
            Choice::Second => y,
        }
    }
}

/// Blocks of a distributive pair.
///
/// For `e1 > e2`: `inner` is `u1` on `[e2, n]^2` shifted to `L_{n-e2}` (neutral
/// `e1 - e2`), `boundary_op` the underlying t-conorm of `u2`, `residual` the
/// t-norm `u1` induces on `[0, e2]^2` (absent when `e2 = 0`), and `selection`
/// covers `x < e2 <= y`. For `e1 < e2` everything is mirrored: `inner` is `u1`
/// on `[0, e2]^2` (neutral `e1`), `boundary_op` the underlying t-norm of `u2`,
/// `residual` the t-conorm of `u1` on `[e2, n]^2`, selection keys `x > e2 >= y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub case: TheoremCase,
    pub inner: Uninorm,
    pub boundary_op: Uninorm,
    pub residual: Option<Uninorm>,
    #[serde(serialize_with = "selection_as_list")]
    pub selection: BTreeMap<(usize, usize), Choice>,
}

fn selection_as_list<S: Serializer>(
    sel: &BTreeMap<(usize, usize), Choice>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let list: Vec<(usize, usize, Choice)> = sel.iter().map(|(&(x, y), &c)| (x, y, c)).collect();
    list.serialize(s)
}

/// Keys the selection map must cover.
pub fn selection_domain(case: TheoremCase, n: usize, e2: usize) -> Vec<(usize, usize)> {
    match case {
        TheoremCase::GreaterNeutral => {
            (0..e2).flat_map(|x| (e2..=n).map(move |y| (x, y))).collect()
        }
        TheoremCase::LessNeutral => {
            (e2 + 1..=n).flat_map(|x| (0..=e2).map(move |y| (x, y))).collect()
        }
        TheoremCase::EqualNeutral => Vec::new(),
    }
}

pub fn decompose(u1: &Uninorm, u2: &Uninorm) -> Result<Decomposition> {
    let report = check_distributivity(u1, u2)?;
    let (n, e1, e2) = (u1.n(), u1.neutral(), u2.neutral());
    let case = TheoremCase::of(e1, e2);
    if case == TheoremCase::EqualNeutral {
        return Err(Error::WrongCase(format!(
            "decomposition needs distinct neutral elements, both are {e1}"
        )));
    }
    if !report.verdict() {
        return Err(Error::NotDistributive(report));
    }
    let internal = |what: &str, err: Error| {
        Error::Internal(format!("distributive pair has no valid {what}: {err}"))
    };
    let (inner, boundary_op, residual) = match case {
        TheoremCase::GreaterNeutral => (
            u1.restrict(e2, n, e1 - e2).map_err(|e| internal("inner block", e))?,
            u2.underlying_tconorm()?,
            if e2 > 0 {
                Some(u1.restrict(0, e2, e2).map_err(|e| internal("residual block", e))?)
            } else {
                None
            },
        ),
        _ => (
            u1.restrict(0, e2, e1).map_err(|e| internal("inner block", e))?,
            u2.underlying_tnorm()?,
            if e2 < n {
                Some(u1.restrict(e2, n, 0).map_err(|e| internal("residual block", e))?)
            } else {
                None
            },
        ),
    };
    let mut selection = BTreeMap::new();
    for (x, y) in selection_domain(case, n, e2) {
        let (a, b) = (u1.get(x, y), u2.get(x, y));
        let choice = match a {
            _ if a != b => None,
            v if v == x => Some(Choice::First),
            v if v == y => Some(Choice::Second),
            _ => None,
        };
        let choice = choice.ok_or_else(|| {
            Error::Internal(format!(
                "distributive pair is not locally internal at ({x}, {y}): u1 = {a}, u2 = {b}"
            ))
        })?;
        selection.insert((x, y), choice);
    }
    Ok(Decomposition { case, inner, boundary_op, residual, selection })
}

fn shape_error(msg: String) -> Error {
    Error::MalformedDecomposition(msg)
}

impl Decomposition {
    /// Checks component sizes against `(n, e1, e2)`.
    pub fn check_shape(&self, n: usize, e1: usize, e2: usize) -> Result<()> {
        if e1 > n || e2 > n {
            return Err(shape_error(format!("neutral elements {e1}, {e2} outside L_{n}")));
        }
        let case = TheoremCase::of(e1, e2);
        if case != self.case {
            return Err(Error::WrongCase(format!(
                "decomposition is {} but e1 = {e1}, e2 = {e2} is {case}",
                self.case
            )));
        }
        let expect = |name: &str, u: &Uninorm, size: usize, neutral: usize| {
            if u.n() != size || u.neutral() != neutral {
                Err(shape_error(format!(
                    "{name} must live on L_{size} with neutral {neutral}, got L_{} with neutral {}",
                    u.n(),
                    u.neutral()
                )))
            } else {
                Ok(())
            }
        };
        let (inner_size, inner_e, boundary_e, residual) = match case {
            TheoremCase::GreaterNeutral => (n - e2, e1 - e2, 0, (e2 > 0).then_some((e2, e2))),
            TheoremCase::LessNeutral => (e2, e1, e2, (e2 < n).then_some((n - e2, 0))),
            TheoremCase::EqualNeutral => unreachable!("case compared above"),
        };
        expect("inner", &self.inner, inner_size, inner_e)?;
        expect("boundary_op", &self.boundary_op, inner_size, boundary_e)?;
        match (&self.residual, residual) {
            (Some(r), Some((size, neutral))) => expect("residual", r, size, neutral)?,
            (None, None) => {}
            (Some(_), None) => return Err(shape_error("residual block must be absent".into())),
            (None, Some(_)) => return Err(shape_error("residual block is missing".into())),
        }
        let domain = selection_domain(case, n, e2);
        if domain.len() != self.selection.len() || domain.iter().any(|k| !self.selection.contains_key(k)) {
            return Err(shape_error(format!(
                "selection must cover exactly {} block points",
                domain.len()
            )));
        }
        Ok(())
    }

    /// Clause checks that do not need the assembled tables: the strip next to
    /// the neutral elements must select min (resp. max), and a selected `y0`
    /// in the side-condition range must be idempotent for the boundary operation.
    pub fn precheck(&self, e1: usize, e2: usize) -> CheckReport {
        let mut v = Vec::new();
        for (&(x, y), &c) in &self.selection {
            let (on_strip, in_side, y_local) = match self.case {
                TheoremCase::GreaterNeutral => (y <= e1, y >= e1, y - e2),
                _ => (y >= e1, y <= e1, y),
            };
            if on_strip && c == Choice::Second {
                v.push(
                    Violation::new(Law::StripFirst, Witness::Pair(x, y), vec![y])
                        .with_note("strip points must select the first argument"),
                );
            }
            if in_side && c == Choice::Second {
                let yy = self.boundary_op.get(y_local, y_local);
                if yy != y_local {
                    v.push(
                        Violation::new(Law::SideCondition, Witness::Pair(x, y), vec![yy, y_local])
                            .with_note("selected y0 is not idempotent for the boundary operation"),
                    );
                }
            }
        }
        CheckReport::from_violations(v)
    }
}

fn tag(report: CheckReport, which: &str) -> Vec<Violation> {
    report
        .violations()
        .iter()
        .cloned()
        .map(|v| {
            let note = match &v.note {
                Some(n) => format!("{which}: {n}"),
                None => which.to_string(),
            };
            v.with_note(note)
        })
        .collect()
}

/// Assembles `(u1, u2)` from blocks and confirms they are uninorms meeting
/// the structural conditions.
pub fn compose(d: &Decomposition, scale: ChainScale, e1: usize, e2: usize) -> Result<(Uninorm, Uninorm)> {
    let n = scale.n();
    d.check_shape(n, e1, e2)?;
    let pre = d.precheck(e1, e2);
    if !pre.verdict() {
        return Err(Error::CompositionRejected(pre));
    }
    let pick = |x: usize, y: usize| -> usize {
        let key = match d.case {
            TheoremCase::GreaterNeutral => (x.min(y), x.max(y)),
            _ => (x.max(y), x.min(y)),
        };
        d.selection[&key].pick(key.0, key.1)
    };
    let (t1, t2) = match d.case {
        TheoremCase::GreaterNeutral => (
            OpTable::from_fn(scale, |x, y| {
                if x >= e2 && y >= e2 {
                    e2 + d.inner.get(x - e2, y - e2)
                } else if x <= e2 && y <= e2 {
                    d.residual.as_ref().map_or(0, |r| r.get(x, y))
                } else {
                    pick(x, y)
                }
            })?,
            OpTable::from_fn(scale, |x, y| {
                if x >= e2 && y >= e2 {
                    e2 + d.boundary_op.get(x - e2, y - e2)
                } else if x <= e2 && y <= e2 {
                    x.min(y)
                } else {
                    pick(x, y)
                }
            })?,
        ),
        _ => (
            OpTable::from_fn(scale, |x, y| {
                if x <= e2 && y <= e2 {
                    d.inner.get(x, y)
                } else if x >= e2 && y >= e2 {
                    e2 + d.residual.as_ref().map_or(0, |r| r.get(x - e2, y - e2))
                } else {
                    pick(x, y)
                }
            })?,
            OpTable::from_fn(scale, |x, y| {
                if x <= e2 && y <= e2 {
                    d.boundary_op.get(x, y)
                } else if x >= e2 && y >= e2 {
                    x.max(y)
                } else {
                    pick(x, y)
                }
            })?,
        ),
    };
    let r1 = validate_uninorm_with(&t1, e1, WitnessPolicy::First);
    let r2 = validate_uninorm_with(&t2, e2, WitnessPolicy::First);
    if !r1.verdict() || !r2.verdict() {
        let mut v = tag(r1, "u1");
        v.extend(tag(r2, "u2"));
        return Err(Error::CompositionInvalid(CheckReport::from_violations(v)));
    }
    let u1 = Uninorm::new(t1, e1)?;
    let u2 = Uninorm::new(t2, e2)?;
    let cond = match d.case {
        TheoremCase::GreaterNeutral => greater_neutral_conditions(&u1, &u2)?,
        _ => less_neutral_conditions(&u1, &u2)?,
    };
    if !cond.verdict() {
        return Err(Error::CompositionInvalid(cond));
    }
    Ok((u1, u2))
}
