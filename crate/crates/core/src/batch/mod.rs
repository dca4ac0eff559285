//! File formats and batch pipelines behind the command-line front-end.
//!
//! * config: JSON, schema version [`SCHEMA_VERSION`], unknown keys rejected.
//! * distribution: CSV with header `t,x,P`, probabilities printed with 17
//!   significant digits.
//! * parts list: JSON, one block of ordered element records per step.
//! * summaries: JSON with moments, fidelities or localization series.

mod config;
mod parts;
mod pipeline;

pub use config::{CoinSpec, RunConfig, MAX_HALF_WIDTH, SCHEMA_VERSION};
pub use parts::{PartRecord, PartsList, StepBlock, VerificationRecord};
pub use pipeline::{
    compile, distribution_csv, localize, run, LocalizationSummary, MomentRow, RunOutput,
    RunSummary, SeedSeries, MAX_DENSE_HALF_WIDTH,
};
