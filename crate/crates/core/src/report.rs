use std::fmt;

use serde::Serialize;

/// The law or theorem clause a violation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    /// Wrong dimensions, entries off the chain, asymmetry, bad neutral index.
    Structural,
    Neutrality,
    Monotonicity,
    Associativity,
    Distributivity,
    /// Underlying t-norm of `u2` is not min (resp. t-conorm not max).
    UnderlyingOperator,
    /// `u2` returns something other than `x` or `y` on `A(e2)`.
    LocalInternality,
    Idempotency,
    /// `u1 = u2 in {x, y}` fails on `A(e)` (equal neutral elements).
    OffDiagonalAgreement,
    /// `u1 = u2 in {x, y}` fails on the selection block.
    SelectionBlock,
    /// The selection returns `y0` but `y0` is not idempotent for `u2`.
    SideCondition,
    /// `u1` is not min (resp. max) on the strip next to the neutral elements.
    StripFirst,
    /// `u2` is not min (resp. max) on the strip.
    StripSecond,
    /// The rescaled block of `u1` is not a uninorm with the shifted neutral element.
    InnerUninorm,
    /// The rescaled block of `u1` does not distribute over the boundary operation.
    InnerDistributivity,
    /// The theorem predicate and brute-force distributivity disagree.
    TheoremDivergence,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::Structural => "structural",
            Law::Neutrality => "neutrality",
            Law::Monotonicity => "monotonicity",
            Law::Associativity => "associativity",
            Law::Distributivity => "distributivity",
            Law::UnderlyingOperator => "underlying-operator",
            Law::LocalInternality => "local-internality",
            Law::Idempotency => "idempotency",
            Law::OffDiagonalAgreement => "off-diagonal-agreement",
            Law::SelectionBlock => "selection-block",
            Law::SideCondition => "side-condition",
            Law::StripFirst => "strip-first",
            Law::StripSecond => "strip-second",
            Law::InnerUninorm => "inner-uninorm",
            Law::InnerDistributivity => "inner-distributivity",
            Law::TheoremDivergence => "theorem-divergence",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Chain indices locating a violation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum Witness {
    None,
    Point(usize),
    Pair(usize, usize),
    Triple(usize, usize, usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::None => f.write_str("-"),
            Witness::Point(x) => write!(f, "x={x}"),
            Witness::Pair(x, y) => write!(f, "(x,y)=({x},{y})"),
            Witness::Triple(x, y, z) => write!(f, "(x,y,z)=({x},{y},{z})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Violation {
    pub law: Law,
    pub witness: Witness,
    /// Observed values at the witness; for equations, `[lhs, rhs]`.
    pub values: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Violation {
    pub fn new(law: Law, witness: Witness, values: Vec<usize>) -> Self {
        Violation { law, witness, values, note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.law, self.witness)?;
        if !self.values.is_empty() {
            let vs: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            write!(f, " [{}]", vs.join(" vs "))?;
        }
        if let Some(note) = &self.note {
            write!(f, ": {note}")?;
        }
        Ok(())
    }
}

/// How many witnesses a checker keeps per law.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum WitnessPolicy {
    #[default]
    First,
    All,
}

/// Verdict plus witnesses. The verdict is true iff there are no violations.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    verdict: bool,
    violations: Vec<Violation>,
}

impl CheckReport {
    pub fn pass() -> Self {
        CheckReport { verdict: true, violations: Vec::new() }
    }

    pub fn from_violations(mut violations: Vec<Violation>) -> Self {
        violations.sort();
        violations.dedup();
        CheckReport { verdict: violations.is_empty(), violations }
    }

    #[inline]
    pub fn verdict(&self) -> bool {
        self.verdict
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn laws(&self) -> Vec<Law> {
        let mut laws: Vec<Law> = self.violations.iter().map(|v| v.law).collect();
        laws.dedup();
        laws
    }

    pub fn violates(&self, law: Law) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    pub fn first(&self, law: Law) -> Option<&Violation> {
        self.violations.iter().find(|v| v.law == law)
    }

    /// Combines two reports, keeping the lexicographic witness order.
    pub fn merge(self, other: CheckReport) -> CheckReport {
        let mut all = self.violations;
        all.extend(other.violations);
        CheckReport::from_violations(all)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {}", self.verdict)?;
        for v in &self.violations {
            writeln!(f, "  violation: {v}")?;
        }
        Ok(())
    }
}

/// Accumulates violations under a [`WitnessPolicy`].
#[derive(Debug)]
pub(crate) struct Collector {
    policy: WitnessPolicy,
    violations: Vec<Violation>,
}

impl Collector {
    pub(crate) fn new(policy: WitnessPolicy) -> Self {
        Collector { policy, violations: Vec::new() }
    }

    /// Whether more witnesses for `law` are wanted.
    pub(crate) fn wants(&self, law: Law) -> bool {
        match self.policy {
            WitnessPolicy::All => true,
            WitnessPolicy::First => !self.violations.iter().any(|v| v.law == law),
        }
    }

    pub(crate) fn push(&mut self, v: Violation) {
        if self.wants(v.law) {
            self.violations.push(v);
        }
    }

    pub(crate) fn extend(&mut self, report: CheckReport) {
        for v in report.violations {
            self.push(v);
        }
    }

    pub(crate) fn finish(self) -> CheckReport {
        CheckReport::from_violations(self.violations)
    }
}
