//! Exact uninorms on finite chains.
//!
//! A chain `L_n` is handled through its indices `0..=n`; every operation is a
//! symmetric integer table, so all checks are exact and exhaustive.

pub mod catalog;
pub mod certify;
pub mod chain;
pub mod decomposition;
pub mod distributivity;
pub mod error;
pub mod family_spec;
pub mod format;
pub mod report;
pub mod search;
pub mod table;
pub mod uninorm;

pub use catalog::{make, Family, FamilySpec};
pub use certify::{certify, scan_pairs, CertificationReport, CertifyOptions, ScannedPair};
pub use chain::ChainScale;
pub use decomposition::{compose, decompose, Choice, Decomposition};
pub use distributivity::{
    check_distributivity, classify_and_check, equal_neutral_conditions,
    greater_neutral_conditions, less_neutral_conditions, necessity_battery,
    verify_ordered_semiring, PairCheck, TheoremCase,
};
pub use error::{Error, ParseError, Result};
pub use family_spec::{build_family, parse_family_spec};
pub use report::{CheckReport, Law, Violation, Witness, WitnessPolicy};
pub use search::{enumerate_uninorms, EnumerationTask, Filters, Pruning, SearchLimits};
pub use table::OpTable;
pub use uninorm::{region_of, validate_uninorm, RegionTag, Uninorm};
