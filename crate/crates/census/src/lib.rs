//! Censuses of Cayley (di)graphs, overgroup scenarios, and the verification
//! suites behind the `grrcensus` binary.

pub mod bounds;
pub mod census;
pub mod corpus;
pub mod error;
pub mod scenario;
pub mod suites;

pub use census::{exhaustive_census, monte_carlo_census, unlabeled_census, CensusRecord, Counts, Method, Mode, Proportion};
pub use corpus::{parse_manifest, Manifest};
pub use error::{CensusError, Result};
pub use scenario::{build_scenarios, OvergroupScenario, Strategy};
