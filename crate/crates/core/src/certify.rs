//! The certification experiment: every ordered pair of uninorms on a chain,
//! structural conditions against brute-force distributivity.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::chain::ChainScale;
use crate::decomposition::{decompose, Decomposition};
use crate::distributivity::{distributes, necessity_battery, theorem_conditions, TheoremCase};
use crate::error::{Error, Result};
use crate::report::{CheckReport, WitnessPolicy};
use crate::search::{enumerate_parallel, pool, EnumerationTask, SearchLimits, SearchStats};
use crate::uninorm::Uninorm;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Worker threads; 0 lets rayon decide.
    pub workers: usize,
    pub limits: SearchLimits,
    /// Stop (and mark the report partial) before checking more pairs than this.
    pub pair_budget: Option<u64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CaseCounts {
    pub pairs: u64,
    pub distributive: u64,
    pub theorem_true: u64,
    pub agreements: u64,
}

impl std::ops::AddAssign for CaseCounts {
    fn add_assign(&mut self, o: CaseCounts) {
        self.pairs += o.pairs;
        self.distributive += o.distributive;
        self.theorem_true += o.theorem_true;
        self.agreements += o.agreements;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeutralPairCounts {
    pub e1: usize,
    pub e2: usize,
    pub case: TheoremCase,
    #[serde(flatten)]
    pub counts: CaseCounts,
}

/// A pair on which the structural conditions and brute force disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub e1: usize,
    pub index1: usize,
    pub e2: usize,
    pub index2: usize,
    pub theorem: bool,
    pub distributive: bool,
    pub u1: Vec<Vec<usize>>,
    pub u2: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Timing {
    pub enumerate_ms: u128,
    pub check_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificationReport {
    pub scale: ChainScale,
    pub complete: bool,
    /// Number of uninorms for each neutral element `0..=n`.
    pub uninorm_counts: Vec<usize>,
    pub search: Vec<SearchStats>,
    pub pairs_checked: u64,
    pub agreements: u64,
    pub by_case: BTreeMap<TheoremCase, CaseCounts>,
    pub by_neutrals: Vec<NeutralPairCounts>,
    pub divergences: Vec<Divergence>,
    /// Wall-clock figures; the only run-dependent field.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl CertificationReport {
    pub fn consistent(&self) -> bool {
        self.divergences.is_empty() && self.agreements == self.pairs_checked
    }

    /// Copy with timing removed, for byte-level comparison between runs.
    pub fn canonical(&self) -> CertificationReport {
        CertificationReport { timing: None, ..self.clone() }
    }

    pub fn expected_pairs(&self) -> u64 {
        let total: usize = self.uninorm_counts.iter().sum();
        (total as u64) * (total as u64)
    }
}

pub fn all_uninorms(scale: ChainScale, limits: &SearchLimits, workers: usize) -> Result<Vec<(Vec<Uninorm>, SearchStats)>> {
    (0..=scale.n())
        .map(|e| enumerate_parallel(&EnumerationTask::new(scale, e), limits, workers))
        .collect()
}

pub fn certify(scale: ChainScale, opts: &CertifyOptions) -> Result<CertificationReport> {
    if scale.n() > opts.limits.max_certify_n {
        return Err(Error::ScaleLimit { n: scale.n(), limit: opts.limits.max_certify_n });
    }
    let start = Instant::now();
    let families = all_uninorms(scale, &opts.limits, opts.workers)?;
    let enumerate_ms = start.elapsed().as_millis();
    let check_start = Instant::now();

    let pool = pool(opts.workers)?;
    let mut report = CertificationReport {
        scale,
        complete: true,
        uninorm_counts: families.iter().map(|(f, _)| f.len()).collect(),
        search: families.iter().map(|(_, s)| *s).collect(),
        pairs_checked: 0,
        agreements: 0,
        by_case: BTreeMap::new(),
        by_neutrals: Vec::new(),
        divergences: Vec::new(),
        timing: None,
    };

    'outer: for (e1, (us1, _)) in families.iter().enumerate() {
        for (e2, (us2, _)) in families.iter().enumerate() {
            let block = (us1.len() * us2.len()) as u64;
            if let Some(budget) = opts.pair_budget {
                if report.pairs_checked + block > budget {
                    report.complete = false;
                    break 'outer;
                }
            }
            let case = TheoremCase::of(e1, e2);
            let rows: Vec<Result<(CaseCounts, Vec<Divergence>)>> = pool.install(|| {
                us1.par_iter()
                    .enumerate()
                    .map(|(i1, u1)| {
                        let mut counts = CaseCounts::default();
                        let mut div = Vec::new();
                        for (i2, u2) in us2.iter().enumerate() {
                            let d = distributes(u1.table(), u2.table());
                            let t = theorem_conditions(u1, u2, WitnessPolicy::First)?.verdict();
                            counts.pairs += 1;
                            counts.distributive += d as u64;
                            counts.theorem_true += t as u64;
                            if d == t {
                                counts.agreements += 1;
                            } else {
                                div.push(Divergence {
                                    e1,
                                    index1: i1,
                                    e2,
                                    index2: i2,
                                    theorem: t,
                                    distributive: d,
                                    u1: u1.rows(),
                                    u2: u2.rows(),
                                });
                            }
                        }
                        Ok((counts, div))
                    })
                    .collect()
            });
            let mut counts = CaseCounts::default();
            for row in rows {
                let (c, d) = row?;
                counts += c;
                report.divergences.extend(d);
            }
            report.pairs_checked += counts.pairs;
            report.agreements += counts.agreements;
            *report.by_case.entry(case).or_default() += counts;
            report.by_neutrals.push(NeutralPairCounts { e1, e2, case, counts });
        }
    }
    report.timing = Some(Timing { enumerate_ms, check_ms: check_start.elapsed().as_millis() });
    Ok(report)
}

/// A distributive pair found by [`scan_pairs`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScannedPair {
    pub u1: Uninorm,
    pub u2: Uninorm,
    pub decomposition: Option<Decomposition>,
    /// Consequences every distributive pair must satisfy; a failing battery
    /// is a finding, reported rather than hidden.
    pub necessity: CheckReport,
}

/// All distributive pairs with neutral elements `(e1, e2)`.
pub fn scan_pairs(
    scale: ChainScale,
    e1: usize,
    e2: usize,
    limits: &SearchLimits,
    workers: usize,
) -> Result<Vec<ScannedPair>> {
    scale.check(e1)?;
    scale.check(e2)?;
    let (us1, _) = enumerate_parallel(&EnumerationTask::new(scale, e1), limits, workers)?;
    let (us2, _) = if e1 == e2 {
        (us1.clone(), SearchStats::default())
    } else {
        enumerate_parallel(&EnumerationTask::new(scale, e2), limits, workers)?
    };
    let pool = pool(workers)?;
    let found: Vec<Result<Vec<ScannedPair>>> = pool.install(|| {
        us1.par_iter()
            .map(|u1| {
                us2.iter()
                    .filter(|u2| distributes(u1.table(), u2.table()))
                    .map(|u2| {
                        let decomposition =
                            if e1 != e2 { Some(decompose(u1, u2)?) } else { None };
                        Ok(ScannedPair {
                            u1: u1.clone(),
                            u2: u2.clone(),
                            decomposition,
                            necessity: necessity_battery(u1, u2)?,
                        })
                    })
                    .collect()
            })
            .collect()
    });
    let mut out = Vec::new();
    for part in found {
        out.extend(part?);
    }
    Ok(out)
}

/// Environment variable naming the directory of golden certification reports.
pub const FIXTURES_ENV: &str = "UNINORM_FIXTURES";

pub fn golden_file_name(scale: ChainScale) -> String {
    format!("certify-n{}.json", scale.n())
}

/// The byte form compared against golden files.
pub fn golden_text(report: &CertificationReport) -> String {
    crate::format::structured("certification", &report.canonical())
}
