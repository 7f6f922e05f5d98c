//! Row and column reordering for visualizing overlapping biclusterings.
//!
//! Given a binary matrix and a list of (possibly overlapping) biclusters, the
//! crate groups rows and columns into blocks with identical cluster
//! membership, searches block orders that score well on several layout
//! objectives, suggests unclustered rows/columns that resemble existing
//! clusters, renders the reordered matrix, and compares algorithms against a
//! random baseline.
//!
//! Indices are 0-based in the API. With the default `parallel` feature,
//! candidate evaluation, rendering and multi-algorithm runs use rayon.

pub mod error;
pub mod eval;
pub mod layout;
pub mod model;
pub mod objectives;
pub mod par;
pub mod postprocess;
pub mod render;
pub mod tsp;

pub use error::{Error, Result};
pub use eval::{build_report, ScoreReport};
pub use layout::{run_algorithm, AlgorithmId, DemeritInsertion, SearchConfig};
pub use model::{compute_blocks, Axis, BinaryMatrix, Bicluster, Biclustering, Block, BlockDecomposition, Layout, Permutation};
pub use objectives::ObjectiveKind;
pub use postprocess::{suggest, zone_layout, Suggestions};
pub use render::{render_image, ColorMode, Image, Palette, RenderOptions};
pub use tsp::TspConfig;
