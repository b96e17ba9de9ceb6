//! Uninorm axioms, region geometry and the one-operation predicates.

use serde::Serialize;

use crate::chain::ChainScale;
use crate::error::{Error, Result};
use crate::report::{CheckReport, Collector, Law, Violation, Witness, WitnessPolicy};
use crate::table::OpTable;

/// Which block of `[0, n]^2` a point lies in, relative to a neutral element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegionTag {
    /// `[0, e]^2`, including the boundary lines.
    LowerSquare,
    /// `[e, n]^2` minus the point `(e, e)`, which belongs to the lower square.
    UpperSquare,
    /// `A(e)`, the strict complement of both squares.
    OffDiagonal,
}

pub fn region_of(x: usize, y: usize, e: usize) -> RegionTag {
    if x <= e && y <= e {
        RegionTag::LowerSquare
    } else if x >= e && y >= e {
        RegionTag::UpperSquare
    } else {
        RegionTag::OffDiagonal
    }
}

#[inline]
pub(crate) fn in_a(x: usize, y: usize, e: usize) -> bool {
    (x < e && y > e) || (x > e && y < e)
}

pub fn validate_uninorm(table: &OpTable, e: usize) -> CheckReport {
    validate_uninorm_with(table, e, WitnessPolicy::First)
}

/// Checks neutrality, monotonicity and associativity. Commutativity is
/// structural, so the associativity scan only visits `x <= z`.
pub fn validate_uninorm_with(table: &OpTable, e: usize, policy: WitnessPolicy) -> CheckReport {
    let mut out = Collector::new(policy);
    check_axioms(table, e, &mut out);
    out.finish()
}

/// Validates raw rows: structural defects first, then the axioms if the
/// rows form a well-formed table.
pub fn validate_rows(
    scale: ChainScale,
    rows: &[Vec<usize>],
    e: usize,
    policy: WitnessPolicy,
) -> CheckReport {
    let defects = OpTable::defects(scale, rows);
    if !defects.is_empty() {
        let mut out = Collector::new(WitnessPolicy::All);
        for d in defects {
            let witness = match d {
                crate::table::TableDefect::OutOfRange { x, y, .. }
                | crate::table::TableDefect::Asymmetric { x, y, .. } => Witness::Pair(x, y),
                crate::table::TableDefect::RowLength { row, .. } => Witness::Point(row),
                crate::table::TableDefect::RowCount { .. } => Witness::None,
            };
            out.push(Violation::new(Law::Structural, witness, vec![]).with_note(d.to_string()));
        }
        return out.finish();
    }
    let table = OpTable::from_rows(scale, rows).expect("defect-free rows");
    validate_uninorm_with(&table, e, policy)
}

fn check_axioms(t: &OpTable, e: usize, out: &mut Collector) {
    let n = t.n();
    if e > n {
        out.push(
            Violation::new(Law::Structural, Witness::Point(e), vec![])
                .with_note(format!("neutral element {e} is outside the chain 0..={n}")),
        );
        return;
    }
    for x in 0..=n {
        if t.get(e, x) != x {
            out.push(Violation::new(Law::Neutrality, Witness::Point(x), vec![t.get(e, x), x]));
            if !out.wants(Law::Neutrality) {
                break;
            }
        }
    }
    'mono: for y in 0..=n {
        for x in 0..n {
            if t.get(x, y) > t.get(x + 1, y) {
                out.push(Violation::new(
                    Law::Monotonicity,
                    Witness::Pair(x, y),
                    vec![t.get(x, y), t.get(x + 1, y)],
                ));
                if !out.wants(Law::Monotonicity) {
                    break 'mono;
                }
            }
        }
    }
    for x in 0..=n {
        for y in 0..=n {
            let xy = t.get(x, y);
            for z in x..=n {
                let lhs = t.get(xy, z);
                let rhs = t.get(x, t.get(y, z));
                if lhs != rhs {
                    out.push(Violation::new(
                        Law::Associativity,
                        Witness::Triple(x, y, z),
                        vec![lhs, rhs],
                    ));
                    if !out.wants(Law::Associativity) {
                        return;
                    }
                }
            }
        }
    }
}

/// Replays an axiom violation against `(table, e)`; true iff it still fails there.
pub fn witness_reproduces(table: &OpTable, e: usize, v: &Violation) -> bool {
    let n = table.n();
    match (v.law, &v.witness) {
        (Law::Neutrality, &Witness::Point(x)) => x <= n && e <= n && table.get(e, x) != x,
        (Law::Monotonicity, &Witness::Pair(x, y)) => {
            x < n && y <= n && table.get(x, y) > table.get(x + 1, y)
        }
        (Law::Associativity, &Witness::Triple(x, y, z)) => {
            x <= n
                && y <= n
                && z <= n
                && table.get(table.get(x, y), z) != table.get(x, table.get(y, z))
        }
        (Law::Structural, &Witness::Point(p)) => p > n,
        _ => false,
    }
}

/// Local internality on `A(e)` for a bare table, which need not be a uninorm.
pub fn table_is_locally_internal(table: &OpTable, e: usize) -> bool {
    let n = table.n();
    (0..e.min(n + 1)).all(|x| {
        (e + 1..=n).all(|y| {
            let v = table.get(x, y);
            v == x || v == y
        })
    })
}

/// A validated uninorm on a finite chain.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Uninorm {
    #[serde(rename = "neutral")]
    e: usize,
    #[serde(rename = "rows")]
    table: OpTable,
}

impl Uninorm {
    pub fn new(table: OpTable, e: usize) -> Result<Self> {
        let report = validate_uninorm(&table, e);
        if !report.verdict() {
            return Err(Error::NotAUninorm(report));
        }
        Ok(Uninorm { e, table })
    }

    /// For tables already known to satisfy the axioms.
    pub(crate) fn trusted(table: OpTable, e: usize) -> Self {
        debug_assert!(validate_uninorm(&table, e).verdict());
        Uninorm { e, table }
    }

    #[inline]
    pub fn table(&self) -> &OpTable {
        &self.table
    }

    #[inline]
    pub fn scale(&self) -> ChainScale {
        self.table.scale()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.table.n()
    }

    /// Index of the neutral element.
    #[inline]
    pub fn neutral(&self) -> usize {
        self.e
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.table.get(x, y)
    }

    pub fn is_tnorm(&self) -> bool {
        self.e == self.n()
    }

    pub fn is_tconorm(&self) -> bool {
        self.e == 0
    }

    pub fn is_proper(&self) -> bool {
        self.e > 0 && self.e < self.n()
    }

    /// Restriction to `[lo, hi]^2` reindexed by `i -> i - lo`, as a uninorm
    /// with neutral index `neutral` on `L_{hi - lo}`.
    pub fn restrict(&self, lo: usize, hi: usize, neutral: usize) -> Result<Uninorm> {
        let table = self.table.restrict(lo, hi)?;
        Uninorm::new(table, neutral)
    }

    /// The t-norm on `[0, e]^2`, as a uninorm on `L_e` with neutral `e`.
    pub fn underlying_tnorm(&self) -> Result<Uninorm> {
        if self.e == 0 {
            return Err(Error::EmptyRestriction { which: "[0, e]^2", e: self.e });
        }
        self.restrict(0, self.e, self.e).map_err(|err| {
            Error::Internal(format!("lower square of a valid uninorm is not a t-norm: {err}"))
        })
    }

    /// The t-conorm on `[e, n]^2`, reindexed to `L_{n-e}` with neutral 0.
    pub fn underlying_tconorm(&self) -> Result<Uninorm> {
        if self.e == self.n() {
            return Err(Error::EmptyRestriction { which: "[e, n]^2", e: self.e });
        }
        self.restrict(self.e, self.n(), 0).map_err(|err| {
            Error::Internal(format!("upper square of a valid uninorm is not a t-conorm: {err}"))
        })
    }

    pub fn is_idempotent(&self) -> bool {
        (0..=self.n()).all(|x| self.get(x, x) == x)
    }

    /// `U(x, y) in {x, y}` on every point of `A(e)`.
    pub fn is_locally_internal(&self) -> bool {
        table_is_locally_internal(&self.table, self.e)
    }

    /// `U(0, n) = 0`. Only defined for proper uninorms.
    pub fn is_conjunctive(&self) -> Result<bool> {
        if !self.is_proper() {
            return Err(Error::NotProper { e: self.e, n: self.n() });
        }
        match self.get(0, self.n()) {
            0 => Ok(true),
            v if v == self.n() => Ok(false),
            v => Err(Error::Internal(format!(
                "proper uninorm has U(0, {}) = {v}, expected 0 or {}",
                self.n(),
                self.n()
            ))),
        }
    }

    /// The order-reversed conjugate `n - U(n - x, n - y)` with neutral `n - e`.
    pub fn dual(&self) -> Uninorm {
        Uninorm { e: self.n() - self.e, table: self.table.dual() }
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.rows()
    }
}

impl std::fmt::Debug for Uninorm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Uninorm(e={}, {:?})", self.e, self.table)
    }
}
