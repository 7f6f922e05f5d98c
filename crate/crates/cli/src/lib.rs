//! File formats, report schema and the end-to-end pipeline behind the
//! `biclayout` binary.
//!
//! Every index in files, reports and diagnostics is **1-based**; the library
//! underneath is 0-based and conversion happens only here.

pub mod error;
pub mod formats;
pub mod pipeline;
pub mod report;

pub use error::{CliError, Result};
pub use formats::{parse_clustering, parse_matrix};
pub use pipeline::{plan, run, Artifact, InstancePaths, RunConfig};
