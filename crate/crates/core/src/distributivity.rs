//! Distributivity of one uninorm over another, the structural conditions
//! that characterize distributive pairs, and the ordered-semiring check.
//!
//! Clause ranges, with `[a, b[` written as `a..b` and `]a, b]` as `a+1..b+1`:
//!
//! | case      | clause              | x range       | y range        |
//! |-----------|---------------------|---------------|----------------|
//! | e1 = e2   | agreement on A(e)   | A(e)          |                |
//! | e1 > e2   | (i) selection block | `0..e2`       | `e2..n+1`      |
//! | e1 > e2   | (i) side condition  | `0..e2`       | `e1..n+1`      |
//! | e1 > e2   | (ii) min strip      | `0..e2`       | `e2..e1+1`     |
//! | e1 > e2   | (iii) inner block   | `e2..n+1`     | `e2..n+1`      |
//! | e1 < e2   | (i) selection block | `e2+1..n+1`   | `0..e2+1`      |
//! | e1 < e2   | (i) side condition  | `e2+1..n+1`   | `0..e1+1`      |
//! | e1 < e2   | (ii) max strip      | `e2+1..n+1`   | `e1..e2+1`     |
//! | e1 < e2   | (iii) inner block   | `0..e2+1`     | `0..e2+1`      |
//!
//! The necessity battery uses the same shape but with the closed range
//! `0..e2+1` for `u1` on the strip (resp. `e2..n+1`).

use std::ops::Range;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::{CheckReport, Collector, Law, Violation, Witness, WitnessPolicy};
use crate::table::OpTable;
use crate::uninorm::{in_a, validate_uninorm_with, Uninorm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremCase {
    EqualNeutral,
    GreaterNeutral,
    LessNeutral,
}

impl TheoremCase {
    /// Case of `u1` (neutral `e1`) over `u2` (neutral `e2`).
    pub fn of(e1: usize, e2: usize) -> TheoremCase {
        match e1.cmp(&e2) {
            std::cmp::Ordering::Equal => TheoremCase::EqualNeutral,
            std::cmp::Ordering::Greater => TheoremCase::GreaterNeutral,
            std::cmp::Ordering::Less => TheoremCase::LessNeutral,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TheoremCase::EqualNeutral => "equal-neutral",
            TheoremCase::GreaterNeutral => "greater-neutral",
            TheoremCase::LessNeutral => "less-neutral",
        }
    }
}

impl std::fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

fn same_scale(u1: &Uninorm, u2: &Uninorm) -> Result<()> {
    if u1.n() != u2.n() {
        return Err(Error::ScaleMismatch { left: u1.n(), right: u2.n() });
    }
    Ok(())
}

/// Scans `a(x, b(y, z)) = b(a(x, y), a(x, z))` for `y <= z`; both sides are
/// symmetric in `y, z`. Witness values shift by `shift` into the caller's chain.
fn scan_distributivity(a: &OpTable, b: &OpTable, law: Law, shift: usize, out: &mut Collector) {
    let n = a.n();
    for x in 0..=n {
        for y in 0..=n {
            let xy = a.get(x, y);
            for z in y..=n {
                let lhs = a.get(x, b.get(y, z));
                let rhs = b.get(xy, a.get(x, z));
                if lhs != rhs {
                    out.push(Violation::new(
                        law,
                        Witness::Triple(x + shift, y + shift, z + shift),
                        vec![lhs + shift, rhs + shift],
                    ));
                    if !out.wants(law) {
                        return;
                    }
                }
            }
        }
    }
}

/// Boolean fast path used by the enumeration-heavy callers.
pub(crate) fn distributes(a: &OpTable, b: &OpTable) -> bool {
    let n = a.n();
    (0..=n).all(|x| {
        (0..=n).all(|y| {
            let xy = a.get(x, y);
            (y..=n).all(|z| a.get(x, b.get(y, z)) == b.get(xy, a.get(x, z)))
        })
    })
}

pub fn check_distributivity(u1: &Uninorm, u2: &Uninorm) -> Result<CheckReport> {
    check_distributivity_with(u1, u2, WitnessPolicy::First)
}

pub fn check_distributivity_with(
    u1: &Uninorm,
    u2: &Uninorm,
    policy: WitnessPolicy,
) -> Result<CheckReport> {
    same_scale(u1, u2)?;
    let mut out = Collector::new(policy);
    scan_distributivity(u1.table(), u2.table(), Law::Distributivity, 0, &mut out);
    Ok(out.finish())
}

/// Replays a distributivity witness (including rescaled inner-block ones,
/// which are reported in the coordinates of `u1` and `u2`).
pub fn distributivity_witness_reproduces(u1: &Uninorm, u2: &Uninorm, v: &Violation) -> bool {
    match (v.law, &v.witness) {
        (Law::Distributivity | Law::InnerDistributivity, &Witness::Triple(x, y, z)) => {
            let n = u1.n();
            x <= n
                && y <= n
                && z <= n
                && u1.get(x, u2.get(y, z)) != u2.get(u1.get(x, y), u1.get(x, z))
        }
        _ => false,
    }
}

/// `(L_n, u2, u1, <=)` is a commutative ordered semiring: both tables satisfy
/// the uninorm axioms and `u1` distributes over `u2`.
pub fn verify_ordered_semiring(u1: &Uninorm, u2: &Uninorm) -> Result<CheckReport> {
    same_scale(u1, u2)?;
    let mut out = Collector::new(WitnessPolicy::First);
    out.extend(validate_uninorm_with(u1.table(), u1.neutral(), WitnessPolicy::First));
    out.extend(validate_uninorm_with(u2.table(), u2.neutral(), WitnessPolicy::First));
    scan_distributivity(u1.table(), u2.table(), Law::Distributivity, 0, &mut out);
    Ok(out.finish())
}

fn wrong_case(expected: TheoremCase, e1: usize, e2: usize) -> Error {
    Error::WrongCase(format!(
        "{expected} conditions do not apply to e1 = {e1}, e2 = {e2} ({})",
        TheoremCase::of(e1, e2)
    ))
}

// Clause scanners shared by the theorem predicates and the necessity battery.

fn scan_underlying(
    u2: &Uninorm,
    block: Range<usize>,
    op: fn(usize, usize) -> usize,
    out: &mut Collector,
) {
    for x in block.clone() {
        for y in x..block.end {
            let v = u2.get(x, y);
            if v != op(x, y) && out.wants(Law::UnderlyingOperator) {
                out.push(Violation::new(Law::UnderlyingOperator, Witness::Pair(x, y), vec![v, op(x, y)]));
            }
        }
    }
}

fn scan_internality(u2: &Uninorm, out: &mut Collector) {
    let (n, e) = (u2.n(), u2.neutral());
    for x in 0..=n {
        for y in x + 1..=n {
            let v = u2.get(x, y);
            if in_a(x, y, e) && v != x && v != y && out.wants(Law::LocalInternality) {
                out.push(Violation::new(Law::LocalInternality, Witness::Pair(x, y), vec![v]));
            }
        }
    }
}

/// `u1 = u2 in {x, y}` on `xs x ys`, plus the idempotency side condition for
/// every `y0` in `side` where `u2(x0, y0) = y0`.
fn scan_selection(
    u1: &Uninorm,
    u2: &Uninorm,
    xs: Range<usize>,
    ys: Range<usize>,
    side: Range<usize>,
    out: &mut Collector,
) {
    for x in xs {
        for y in ys.clone() {
            let (a, b) = (u1.get(x, y), u2.get(x, y));
            if (a != b || (b != x && b != y)) && out.wants(Law::SelectionBlock) {
                out.push(Violation::new(Law::SelectionBlock, Witness::Pair(x, y), vec![a, b]));
            }
            if side.contains(&y) && b == y && u2.get(y, y) != y && out.wants(Law::SideCondition) {
                out.push(Violation::new(Law::SideCondition, Witness::Pair(x, y), vec![u2.get(y, y), y]));
            }
        }
    }
}

fn scan_strip(
    u: &Uninorm,
    xs: Range<usize>,
    ys: Range<usize>,
    op: fn(usize, usize) -> usize,
    law: Law,
    out: &mut Collector,
) {
    for x in xs {
        for y in ys.clone() {
            let v = u.get(x, y);
            if v != op(x, y) && out.wants(law) {
                out.push(Violation::new(law, Witness::Pair(x, y), vec![v, op(x, y)]));
            }
        }
    }
}

/// The block `[lo, hi]^2` of `u1`, rescaled, must be a uninorm with neutral
/// index `neutral` that distributes over `boundary`.
fn scan_inner(
    u1: &Uninorm,
    lo: usize,
    hi: usize,
    neutral: usize,
    boundary: &Uninorm,
    out: &mut Collector,
) {
    let block = match u1.table().restrict(lo, hi) {
        Ok(t) => t,
        Err(Error::RestrictionNotClosed { x, y, value, .. }) => {
            out.push(
                Violation::new(Law::InnerUninorm, Witness::Pair(x, y), vec![value])
                    .with_note(format!("block [{lo}, {hi}] is not closed")),
            );
            return;
        }
        Err(err) => {
            out.push(Violation::new(Law::InnerUninorm, Witness::None, vec![]).with_note(err.to_string()));
            return;
        }
    };
    let axioms = validate_uninorm_with(&block, neutral, WitnessPolicy::First);
    if let Some(v) = axioms.violations().first() {
        let witness = match v.witness {
            Witness::Point(x) => Witness::Point(x + lo),
            Witness::Pair(x, y) => Witness::Pair(x + lo, y + lo),
            Witness::Triple(x, y, z) => Witness::Triple(x + lo, y + lo, z + lo),
            Witness::None => Witness::None,
        };
        out.push(
            Violation::new(Law::InnerUninorm, witness, vec![])
                .with_note(format!("rescaled block fails {} with neutral index {neutral}", v.law)),
        );
        return;
    }
    scan_distributivity(&block, boundary.table(), Law::InnerDistributivity, lo, out);
}

fn min2(x: usize, y: usize) -> usize {
    x.min(y)
}

fn max2(x: usize, y: usize) -> usize {
    x.max(y)
}

pub fn equal_neutral_conditions(u1: &Uninorm, u2: &Uninorm) -> Result<CheckReport> {
    equal_neutral_conditions_with(u1, u2, WitnessPolicy::First)
}

/// `u2` idempotent and `u1 = u2 in {x, y}` on `A(e)`.
pub fn equal_neutral_conditions_with(
    u1: &Uninorm,
    u2: &Uninorm,
    policy: WitnessPolicy,
) -> Result<CheckReport> {
    same_scale(u1, u2)?;
    let (e1, e2) = (u1.neutral(), u2.neutral());
    if e1 != e2 {
        return Err(wrong_case(TheoremCase::EqualNeutral, e1, e2));
    }
    let mut out = Collector::new(policy);
    let n = u1.n();
    for x in 0..=n {
        let v = u2.get(x, x);
        if v != x && out.wants(Law::Idempotency) {
            out.push(Violation::new(Law::Idempotency, Witness::Point(x), vec![v, x]));
        }
    }
    for x in 0..=n {
        for y in x + 1..=n {
            if !in_a(x, y, e1) {
                continue;
            }
            let (a, b) = (u1.get(x, y), u2.get(x, y));
            if (a != b || (b != x && b != y)) && out.wants(Law::OffDiagonalAgreement) {
                out.push(Violation::new(Law::OffDiagonalAgreement, Witness::Pair(x, y), vec![a, b]));
            }
        }
    }
    Ok(out.finish())
}

pub fn greater_neutral_conditions(u1: &Uninorm, u2: &Uninorm) -> Result<CheckReport> {
    greater_neutral_conditions_with(u1, u2, WitnessPolicy::First)
}

/// Structural conditions for `e1 > e2`. The hypothesis class (`u2` locally
/// internal with min as underlying t-norm) is checked, not assumed.
pub fn greater_neutral_conditions_with(
    u1: &Uninorm,
    u2: &Uninorm,
    policy: WitnessPolicy,
) -> Result<CheckReport> {
    same_scale(u1, u2)?;
    let (n, e1, e2) = (u1.n(), u1.neutral(), u2.neutral());
    if e1 <= e2 {
        return Err(wrong_case(TheoremCase::GreaterNeutral, e1, e2));
    }
    let mut out = Collector::new(policy);
    scan_underlying(u2, 0..e2 + 1, min2, &mut out);
    scan_internality(u2, &mut out);
    scan_selection(u1, u2, 0..e2, e2..n + 1, e1..n + 1, &mut out);
    scan_strip(u1, 0..e2, e2..e1 + 1, min2, Law::StripFirst, &mut out);
    scan_strip(u2, 0..e2, e2..e1 + 1, min2, Law::StripSecond, &mut out);
    let s2 = u2.underlying_tconorm()?;
    scan_inner(u1, e2, n, e1 - e2, &s2, &mut out);
    Ok(out.finish())
}

pub fn less_neutral_conditions(u1: &Uninorm, u2: &Uninorm) -> Result<CheckReport> {
    less_neutral_conditions_with(u1, u2, WitnessPolicy::First)
}

/// Structural conditions for `e1 < e2`, checked directly on the tables
/// (not through the dual).
pub fn less_neutral_conditions_with(
    u1: &Uninorm,
    u2: &Uninorm,
    policy: WitnessPolicy,
) -> Result<CheckReport> {
    same_scale(u1, u2)?;
    let (n, e1, e2) = (u1.n(), u1.neutral(), u2.neutral());
    if e1 >= e2 {
        return Err(wrong_case(TheoremCase::LessNeutral, e1, e2));
    }
    let mut out = Collector::new(policy);
    scan_underlying(u2, e2..n + 1, max2, &mut out);
    scan_internality(u2, &mut out);
    scan_selection(u1, u2, e2 + 1..n + 1, 0..e2 + 1, 0..e1 + 1, &mut out);
    scan_strip(u1, e2 + 1..n + 1, e1..e2 + 1, max2, Law::StripFirst, &mut out);
    scan_strip(u2, e2 + 1..n + 1, e1..e2 + 1, max2, Law::StripSecond, &mut out);
    let t2 = u2.underlying_tnorm()?;
    scan_inner(u1, 0, e2, e1, &t2, &mut out);
    Ok(out.finish())
}

/// Theorem conditions for whichever case `(e1, e2)` falls in.
pub fn theorem_conditions(u1: &Uninorm, u2: &Uninorm, policy: WitnessPolicy) -> Result<CheckReport> {
    match TheoremCase::of(u1.neutral(), u2.neutral()) {
        TheoremCase::EqualNeutral => equal_neutral_conditions_with(u1, u2, policy),
        TheoremCase::GreaterNeutral => greater_neutral_conditions_with(u1, u2, policy),
        TheoremCase::LessNeutral => less_neutral_conditions_with(u1, u2, policy),
    }
}

/// Consequences every distributive pair must satisfy. For `e1 > e2`: min as
/// underlying t-norm of `u2`; `u1 = min` on `[0, e2] x [e2, e1]`; `u2 = min`
/// on `[0, e2[ x [e2, e1]`; `u1 = u2 in {x, y}` on `[0, e2[ x [e1, n]` with
/// the side condition; `u2` locally internal; the rescaled upper block of
/// `u1` distributes over the underlying t-conorm of `u2`. Mirrored for
/// `e1 < e2`; for `e1 = e2` it coincides with the equal-neutral conditions.
pub fn necessity_battery(u1: &Uninorm, u2: &Uninorm) -> Result<CheckReport> {
    same_scale(u1, u2)?;
    let (n, e1, e2) = (u1.n(), u1.neutral(), u2.neutral());
    let mut out = Collector::new(WitnessPolicy::All);
    match TheoremCase::of(e1, e2) {
        TheoremCase::EqualNeutral => return equal_neutral_conditions_with(u1, u2, WitnessPolicy::All),
        TheoremCase::GreaterNeutral => {
            scan_underlying(u2, 0..e2 + 1, min2, &mut out);
            scan_strip(u1, 0..e2 + 1, e2..e1 + 1, min2, Law::StripFirst, &mut out);
            scan_strip(u2, 0..e2, e2..e1 + 1, min2, Law::StripSecond, &mut out);
            scan_selection(u1, u2, 0..e2, e1..n + 1, e1..n + 1, &mut out);
            scan_internality(u2, &mut out);
            scan_inner(u1, e2, n, e1 - e2, &u2.underlying_tconorm()?, &mut out);
        }
        TheoremCase::LessNeutral => {
            scan_underlying(u2, e2..n + 1, max2, &mut out);
            scan_strip(u1, e2..n + 1, e1..e2 + 1, max2, Law::StripFirst, &mut out);
            scan_strip(u2, e2 + 1..n + 1, e1..e2 + 1, max2, Law::StripSecond, &mut out);
            scan_selection(u1, u2, e2 + 1..n + 1, 0..e1 + 1, 0..e1 + 1, &mut out);
            scan_internality(u2, &mut out);
            scan_inner(u1, 0, e2, e1, &u2.underlying_tnorm()?, &mut out);
        }
    }
    Ok(out.finish())
}

/// Both verdicts for one ordered pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub case: TheoremCase,
    pub theorem: CheckReport,
    pub distributivity: CheckReport,
}

impl PairCheck {
    pub fn distributive(&self) -> bool {
        self.distributivity.verdict()
    }

    pub fn agreement(&self) -> bool {
        self.theorem.verdict() == self.distributivity.verdict()
    }

    /// Combined report: fails on non-distributivity and, separately, on
    /// theorem divergence.
    pub fn report(&self) -> CheckReport {
        let mut r = self.distributivity.clone();
        if !self.agreement() {
            r = r.merge(CheckReport::from_violations(vec![Violation::new(
                Law::TheoremDivergence,
                Witness::None,
                vec![],
            )
            .with_note(format!(
                "THEOREM-DIVERGENCE: {} conditions say {}, brute force says {}",
                self.case,
                self.theorem.verdict(),
                self.distributivity.verdict()
            ))]));
        }
        r
    }
}

impl std::fmt::Display for PairCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "distributive: {}; case: {}; {}",
            self.distributive(),
            self.case,
            if self.agreement() { "theorem agrees" } else { "THEOREM-DIVERGENCE" }
        )
    }
}

pub fn classify_and_check(u1: &Uninorm, u2: &Uninorm) -> Result<PairCheck> {
    classify_and_check_with(u1, u2, WitnessPolicy::First)
}

pub fn classify_and_check_with(u1: &Uninorm, u2: &Uninorm, policy: WitnessPolicy) -> Result<PairCheck> {
    same_scale(u1, u2)?;
    Ok(PairCheck {
        case: TheoremCase::of(u1.neutral(), u2.neutral()),
        theorem: theorem_conditions(u1, u2, policy)?,
        distributivity: check_distributivity_with(u1, u2, policy)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{idem_min, luk_upper, max_tconorm, min_tnorm};
    use crate::chain::ChainScale;

    fn l(n: usize) -> ChainScale {
        ChainScale::new(n).unwrap()
    }

    #[test]
    fn idem_min_over_itself() {
        let u = idem_min(l(4), 2).unwrap();
        assert!(check_distributivity(&u, &u).unwrap().verdict());
        assert!(equal_neutral_conditions(&u, &u).unwrap().verdict());
        assert!(verify_ordered_semiring(&u, &u).unwrap().verdict());
        let pc = classify_and_check(&u, &u).unwrap();
        assert_eq!(pc.case, TheoremCase::EqualNeutral);
        assert!(pc.agreement() && pc.distributive());
        assert_eq!(pc.to_string(), "distributive: true; case: equal-neutral; theorem agrees");
    }

    #[test]
    fn luk_upper_over_itself_fails_with_replayable_witness() {
        let u = luk_upper(l(4), 2).unwrap();
        let r = check_distributivity_with(&u, &u, WitnessPolicy::All).unwrap();
        assert!(!r.verdict());
        for v in r.violations() {
            assert!(distributivity_witness_reproduces(&u, &u, v), "{v}");
            if let Witness::Triple(_, y, z) = v.witness {
                assert!(y <= z);
            }
        }
        assert!(!verify_ordered_semiring(&u, &u).unwrap().verdict());
        let t = equal_neutral_conditions(&idem_min(l(4), 2).unwrap(), &u).unwrap();
        assert_eq!(t.laws(), vec![Law::Idempotency]);
    }

    #[test]
    fn min_over_max_is_a_semiring() {
        let min = min_tnorm(l(4));
        let max = max_tconorm(l(4));
        assert!(verify_ordered_semiring(&min, &max).unwrap().verdict());
    }

    #[test]
    fn case_errors() {
        let a = idem_min(l(4), 2).unwrap();
        let b = idem_min(l(4), 1).unwrap();
        assert!(matches!(equal_neutral_conditions(&a, &b), Err(Error::WrongCase(_))));
        assert!(matches!(greater_neutral_conditions(&b, &a), Err(Error::WrongCase(_))));
        assert!(matches!(less_neutral_conditions(&a, &b), Err(Error::WrongCase(_))));
        let c = idem_min(l(3), 1).unwrap();
        assert!(matches!(check_distributivity(&a, &c), Err(Error::ScaleMismatch { .. })));
    }

    #[test]
    fn idem_min_over_luk_upper_one() {
        let u1 = idem_min(l(4), 2).unwrap();
        let u2 = luk_upper(l(4), 1).unwrap();
        assert!(!check_distributivity(&u1, &u2).unwrap().verdict());
        let r = greater_neutral_conditions(&u1, &u2).unwrap();
        assert!(!r.verdict());
        assert!(r.violates(Law::InnerDistributivity), "{r}");
    }
}
