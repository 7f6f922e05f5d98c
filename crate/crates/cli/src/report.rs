//! JSON score report.
//!
//! Single instance, keys in this order:
//!
//! ```text
//! instance            input paths, dimensions, block counts, seeds, solver limits
//! algorithms          [{name, rowOrder, colOrder, displayRowOrder?, displayColOrder?, image}]
//! scores              {algorithm: {objective: integer}}
//! averageRandomScore  {objective: {num, den, value}}
//! ratios              {algorithm: {objective: {num, den, value} | null}}
//! suggestions         {rows, cols, leftoverRows, leftoverCols} | null
//! ```
//!
//! Orders are 1-based lists of row/column indices in visual order (top to
//! bottom, left to right). `rowOrder`/`colOrder` are the algorithm's layout,
//! which the scores refer to; the `display*` orders appear with
//! post-processing and give the rendered arrangement. A ratio is `null` when
//! the best score equals the random average.
//!
//! Several instances produce `{"instances": [<single report>...],
//! "ratioSummary": {algorithm: {objective: {mean, variance, count}}}}` with
//! population variance over the instances whose ratio is defined.

use std::collections::BTreeMap;

use biclayout::eval::{to_f64, Rational, RatioSummary};
use biclayout::{AlgorithmId, ObjectiveKind};
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::formats::SuggestionsOut;

/// Map serialized in insertion order.
#[derive(Debug, Clone, PartialEq)]
pub struct Ordered<V>(pub Vec<(String, V)>);

impl<V: Serialize> Serialize for Ordered<V> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct RationalOut {
    pub num: i128,
    pub den: i128,
    pub value: f64,
}

impl From<Rational> for RationalOut {
    fn from(r: Rational) -> Self {
        Self {
            num: *r.numer(),
            den: *r.denom(),
            value: to_f64(r),
        }
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TspOut {
    pub max_passes: usize,
    pub time_limit_ms: u64,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InstanceOut {
    pub matrix: String,
    pub clustering: String,
    pub rows: usize,
    pub cols: usize,
    pub ones: usize,
    pub clusters: usize,
    pub row_blocks: usize,
    pub col_blocks: usize,
    pub seed: u64,
    pub random_seeds: Vec<u64>,
    pub tsp: TspOut,
    pub demerit_insertion: String,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AlgorithmOut {
    pub name: String,
    pub row_order: Vec<usize>,
    pub col_order: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub display_row_order: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub display_col_order: Option<Vec<usize>>,
    pub image: Option<String>,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InstanceReport {
    pub instance: InstanceOut,
    pub algorithms: Vec<AlgorithmOut>,
    pub scores: Ordered<Ordered<u64>>,
    pub average_random_score: Ordered<RationalOut>,
    pub ratios: Ordered<Ordered<Option<RationalOut>>>,
    pub suggestions: Option<SuggestionsOut>,
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct SummaryOut {
    pub mean: Option<f64>,
    pub variance: Option<f64>,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MultiReport {
    pub instances: Vec<InstanceReport>,
    pub ratio_summary: Ordered<Ordered<SummaryOut>>,
}

pub fn ratio_summary(
    algorithms: &[AlgorithmId],
    objectives: &[ObjectiveKind],
    agg: &BTreeMap<(AlgorithmId, ObjectiveKind), RatioSummary>,
) -> Ordered<Ordered<SummaryOut>> {
    let finite = |x: f64| x.is_finite().then_some(x);
    Ordered(
        algorithms
            .iter()
            .map(|&a| {
                let inner = objectives
                    .iter()
                    .map(|&k| {
                        let s = agg[&(a, k)];
                        let out = SummaryOut {
                            mean: finite(s.mean),
                            variance: finite(s.variance),
                            count: s.count,
                        };
                        (k.name().to_string(), out)
                    })
                    .collect();
                (a.name().to_string(), Ordered(inner))
            })
            .collect(),
    )
}

pub fn to_json<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("report serializes");
    out.push(b'\n');
    out
}
