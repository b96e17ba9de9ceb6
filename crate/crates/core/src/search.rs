//! Exhaustive enumeration of uninorms on small chains.
//!
//! Cells `x <= y` (skipping the neutral row) are filled in a fixed order,
//! increasing `x` then `y`, trying values in increasing order. Output order is
//! therefore lexicographic in the free cells and fully deterministic.

use rayon::prelude::*;
use serde::Serialize;

use crate::chain::ChainScale;
use crate::error::{Error, Result};
use crate::table::OpTable;
use crate::uninorm::{validate_uninorm, Uninorm};

const UNSET: u8 = u8::MAX;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Filters {
    pub idempotent: bool,
    pub locally_internal: bool,
    pub conjunctive: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationTask {
    pub scale: ChainScale,
    pub e: usize,
    pub filters: Filters,
}

impl EnumerationTask {
    pub fn new(scale: ChainScale, e: usize) -> Self {
        EnumerationTask { scale, e, filters: Filters::default() }
    }

    pub fn with_filters(mut self, filters: Filters) -> Self {
        self.filters = filters;
        self
    }
}

/// Pruning rules. Each is sound on its own; disabling one only moves the
/// corresponding check to the leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pruning {
    /// A cell must lie between its already-filled neighbours.
    pub monotone_bounds: bool,
    /// Bounds implied by the neutral row: `U(x, y) <= y` for `x <= e`, etc.
    pub neutral_bounds: bool,
    /// Check every triple whose products are all filled after each assignment.
    pub incremental_associativity: bool,
}

impl Pruning {
    pub const ALL: Pruning =
        Pruning { monotone_bounds: true, neutral_bounds: true, incremental_associativity: true };
    pub const NONE: Pruning =
        Pruning { monotone_bounds: false, neutral_bounds: false, incremental_associativity: false };

    fn complete(self) -> bool {
        self.monotone_bounds && self.incremental_associativity
    }
}

impl Default for Pruning {
    fn default() -> Self {
        Pruning::ALL
    }
}

/// Hard scale limits. These are configuration, raised deliberately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchLimits {
    pub max_enumerate_n: usize,
    pub max_certify_n: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_enumerate_n: 6, max_certify_n: 4 }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Successful cell assignments.
    pub nodes: u64,
    /// Complete tables reached (before leaf checks).
    pub leaves: u64,
}

impl std::ops::AddAssign for SearchStats {
    fn add_assign(&mut self, o: SearchStats) {
        self.nodes += o.nodes;
        self.leaves += o.leaves;
    }
}

enum Step {
    Progress,
    Leaf,
}

/// Lazy depth-first enumeration; yields each uninorm exactly once.
pub struct Enumeration {
    scale: ChainScale,
    e: usize,
    filters: Filters,
    pruning: Pruning,
    cells: Vec<(usize, usize)>,
    values: Vec<u8>,
    next_val: Vec<usize>,
    /// Depth below which cells are fixed (parallel prefixes).
    base: usize,
    depth: usize,
    at_leaf: bool,
    done: bool,
    stats: SearchStats,
}

fn free_cells(n: usize, e: usize) -> Vec<(usize, usize)> {
    (0..=n)
        .filter(|&x| x != e)
        .flat_map(|x| (x..=n).filter(move |&y| y != e).map(move |y| (x, y)))
        .collect()
}

impl Enumeration {
    fn new(task: &EnumerationTask, pruning: Pruning) -> Result<Self> {
        let (n, e) = (task.scale.n(), task.e);
        task.scale.check(e)?;
        if task.filters.conjunctive && (e == 0 || e == n) {
            return Err(Error::NotProper { e, n });
        }
        let size = task.scale.size();
        let mut values = vec![UNSET; size * size];
        for x in 0..size {
            values[e * size + x] = x as u8;
            values[x * size + e] = x as u8;
        }
        let cells = free_cells(n, e);
        let next_val = vec![0; cells.len() + 1];
        Ok(Enumeration {
            scale: task.scale,
            e,
            filters: task.filters,
            pruning,
            cells,
            values,
            next_val,
            base: 0,
            depth: 0,
            at_leaf: false,
            done: false,
            stats: SearchStats::default(),
        })
    }

    /// Restricts the search to the first `len` cells.
    fn truncated(mut self, len: usize) -> Self {
        self.cells.truncate(len);
        self.next_val.truncate(len + 1);
        self
    }

    /// Fixes the first cells to `prefix` and searches the remainder.
    fn with_prefix(mut self, prefix: &[u8]) -> Self {
        for (i, &v) in prefix.iter().enumerate() {
            let (x, y) = self.cells[i];
            self.set(x, y, v);
        }
        self.base = prefix.len();
        self.depth = prefix.len();
        self
    }

    pub fn stats(&self) -> SearchStats {
        self.stats
    }

    #[inline]
    fn at(&self, x: usize, y: usize) -> u8 {
        self.values[x * self.scale.size() + y]
    }

    #[inline]
    fn set(&mut self, x: usize, y: usize, v: u8) {
        let size = self.scale.size();
        self.values[x * size + y] = v;
        self.values[y * size + x] = v;
    }

    fn bounds(&self, x: usize, y: usize) -> (usize, usize) {
        let (n, e) = (self.scale.n(), self.e);
        let (mut lo, mut hi) = (0, n);
        if self.pruning.monotone_bounds {
            let size = self.scale.size();
            let below = [(x.wrapping_sub(1), y), (x, y.wrapping_sub(1))];
            for (a, b) in below {
                if a < size && b < size && self.at(a, b) != UNSET {
                    lo = lo.max(self.at(a, b) as usize);
                }
            }
            for (a, b) in [(x + 1, y), (x, y + 1)] {
                if a < size && b < size && self.at(a, b) != UNSET {
                    hi = hi.min(self.at(a, b) as usize);
                }
            }
        }
        if self.pruning.neutral_bounds {
            if x <= e {
                hi = hi.min(y);
            }
            if y <= e {
                hi = hi.min(x);
            }
            if x >= e {
                lo = lo.max(y);
            }
            if y >= e {
                lo = lo.max(x);
            }
        }
        (lo, hi)
    }

    fn allowed(&self, x: usize, y: usize, v: usize) -> bool {
        let (n, e) = (self.scale.n(), self.e);
        let f = self.filters;
        if f.idempotent && x == y && v != x {
            return false;
        }
        if f.locally_internal && x < e && y > e && v != x && v != y {
            return false;
        }
        if f.conjunctive && x == 0 && y == n && v != 0 {
            return false;
        }
        true
    }

    #[inline]
    fn triple_ok(&self, a: usize, b: usize, c: usize) -> bool {
        let ab = self.at(a, b);
        let bc = self.at(b, c);
        if ab == UNSET || bc == UNSET {
            return true;
        }
        let lhs = self.at(ab as usize, c);
        let rhs = self.at(a, bc as usize);
        lhs == UNSET || rhs == UNSET || lhs == rhs
    }

    /// Associativity on every determined triple that reads cell `(x, y)`.
    fn associative_around(&self, x: usize, y: usize) -> bool {
        let size = self.scale.size();
        for (p, q) in [(x, y), (y, x)] {
            for k in 0..size {
                // (x y) z and x (y z) with the cell as an inner product.
                if !self.triple_ok(p, q, k) || !self.triple_ok(k, p, q) {
                    return false;
                }
            }
            // The cell as the outer lookup (p, q): t[t[a][b]][q] with t[a][b] = p,
            // and t[p][t[b][c]] with t[b][c] = q.
            for a in 0..size {
                for b in 0..size {
                    let ab = self.at(a, b);
                    if ab as usize == p && !self.triple_ok(a, b, q) {
                        return false;
                    }
                    if ab as usize == q && !self.triple_ok(p, a, b) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn leaf(&self) -> Option<Uninorm> {
        let table = OpTable::from_raw(self.scale, self.values.clone().into_boxed_slice());
        if !self.pruning.complete() && !validate_uninorm(&table, self.e).verdict() {
            return None;
        }
        Some(Uninorm::trusted(table, self.e))
    }

    /// One search step. On `Step::Leaf` every cell is filled; the caller reads
    /// the table before the next call.
    fn advance(&mut self) -> Option<Step> {
        if self.done {
            return None;
        }
        if self.depth == self.cells.len() {
            if self.at_leaf {
                self.at_leaf = false;
                if self.depth == self.base {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                return Some(Step::Progress);
            }
            self.stats.leaves += 1;
            self.at_leaf = true;
            return Some(Step::Leaf);
        }
        let d = self.depth;
        let (x, y) = self.cells[d];
        let (lo, hi) = self.bounds(x, y);
        let mut found = None;
        for v in self.next_val[d].max(lo)..=hi {
            if !self.allowed(x, y, v) {
                continue;
            }
            self.set(x, y, v as u8);
            if !self.pruning.incremental_associativity || self.associative_around(x, y) {
                found = Some(v);
                break;
            }
        }
        match found {
            Some(v) => {
                self.stats.nodes += 1;
                self.next_val[d] = v + 1;
                self.depth += 1;
                self.next_val[self.depth] = 0;
            }
            None => {
                self.set(x, y, UNSET);
                self.next_val[d] = 0;
                if d == self.base {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
            }
        }
        Some(Step::Progress)
    }

    fn prefix_values(&self) -> Vec<u8> {
        self.cells.iter().map(|&(x, y)| self.at(x, y)).collect()
    }
}

impl Iterator for Enumeration {
    type Item = Uninorm;

    fn next(&mut self) -> Option<Uninorm> {
        loop {
            if let Step::Leaf = self.advance()? {
                if let Some(u) = self.leaf() {
                    return Some(u);
                }
            }
        }
    }
}

fn check_limit(scale: ChainScale, limit: usize) -> Result<()> {
    if scale.n() > limit {
        return Err(Error::ScaleLimit { n: scale.n(), limit });
    }
    Ok(())
}

pub fn enumerate_uninorms(task: &EnumerationTask, limits: &SearchLimits) -> Result<Enumeration> {
    enumerate_with(task, limits, Pruning::ALL)
}

pub fn enumerate_with(task: &EnumerationTask, limits: &SearchLimits, pruning: Pruning) -> Result<Enumeration> {
    check_limit(task.scale, limits.max_enumerate_n)?;
    Enumeration::new(task, pruning)
}

/// Enumerates with the tree split at a fixed depth across `workers` threads
/// (0 = rayon default). Output order matches the sequential enumeration.
pub fn enumerate_parallel(
    task: &EnumerationTask,
    limits: &SearchLimits,
    workers: usize,
) -> Result<(Vec<Uninorm>, SearchStats)> {
    check_limit(task.scale, limits.max_enumerate_n)?;
    let probe = Enumeration::new(task, Pruning::ALL)?;
    let split = probe.cells.len().min(3);
    let mut prefixes = Vec::new();
    let mut head = probe.truncated(split);
    while let Some(step) = head.advance() {
        if let Step::Leaf = step {
            prefixes.push(head.prefix_values());
        }
    }
    let mut stats = head.stats();

    let pool = pool(workers)?;
    let parts: Vec<Result<(Vec<Uninorm>, SearchStats)>> = pool.install(|| {
        prefixes
            .par_iter()
            .map(|prefix| {
                let mut en = Enumeration::new(task, Pruning::ALL)?.with_prefix(prefix);
                let found: Vec<Uninorm> = en.by_ref().collect();
                Ok((found, en.stats()))
            })
            .collect()
    });
    let mut all = Vec::new();
    for part in parts {
        let (found, s) = part?;
        stats += s;
        all.extend(found);
    }
    let before = all.len();
    all.sort_by(|a, b| a.table().raw().cmp(b.table().raw()));
    all.dedup();
    if all.len() != before {
        return Err(Error::Internal("parallel enumeration produced duplicates".into()));
    }
    Ok((all, stats))
}

pub(crate) fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Internal(format!("cannot start worker pool: {e}")))
}
