//! Run reports as single JSON objects. Reals are written with 17 significant
//! digits so reports from separate runs can be diffed textually.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::graph::{EdgeMultiset, Graph, Vertex};

/// `{:.16e}` formatting; non-finite values become `null`.
pub fn format_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        "null".to_string()
    }
}

fn raw<S: Serializer>(text: String, s: S) -> Result<S::Ok, S::Error> {
    RawValue::from_string(text)
        .map_err(serde::ser::Error::custom)?
        .serialize(s)
}

/// Serde `serialize_with` helper writing `format_f64`.
pub fn f64_17<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    raw(format_f64(*v), s)
}

/// As [`f64_17`]; `None` becomes `null`.
pub fn opt_f64_17<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => raw(format_f64(*v), s),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SparsifierStats {
    pub support_size: usize,
    pub input_support_size: usize,
    #[serde(serialize_with = "f64_17")]
    pub support_bound: f64,
    pub attempts: usize,
    pub single_shot_success: bool,
    #[serde(serialize_with = "f64_17")]
    pub oversampling: f64,
    #[serde(serialize_with = "f64_17")]
    pub eps_prime: f64,
    #[serde(serialize_with = "f64_17")]
    pub sparsified_cost: f64,
}

/// Wall-clock seconds per stage.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct StageTimes {
    #[serde(serialize_with = "f64_17")]
    pub mst: f64,
    #[serde(serialize_with = "f64_17")]
    pub lp: f64,
    #[serde(serialize_with = "f64_17")]
    pub sparsify: f64,
    #[serde(serialize_with = "f64_17")]
    pub tjoin: f64,
    #[serde(serialize_with = "f64_17")]
    pub tour: f64,
    #[serde(serialize_with = "f64_17")]
    pub total: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultigraphEdge {
    pub id: usize,
    pub u: Vertex,
    pub v: Vertex,
    pub multiplicity: usize,
}

impl MultigraphEdge {
    pub fn list(g: &Graph, es: &EdgeMultiset) -> Vec<MultigraphEdge> {
        es.iter()
            .map(|(id, multiplicity)| {
                let e = g.edge(id);
                MultigraphEdge { id, u: e.u, v: e.v, multiplicity }
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TourReport {
    pub algorithm: String,
    pub version: String,
    pub seed: u64,
    #[serde(serialize_with = "opt_f64_17")]
    pub epsilon: Option<f64>,
    pub n: usize,
    pub m: usize,
    #[serde(serialize_with = "opt_f64_17")]
    pub lp_objective: Option<f64>,
    #[serde(serialize_with = "opt_f64_17")]
    pub lp_lower_bound: Option<f64>,
    #[serde(serialize_with = "opt_f64_17")]
    pub lp_gap: Option<f64>,
    pub lp_iterations: Option<usize>,
    pub lp_certified: Option<bool>,
    pub sparsifier: Option<SparsifierStats>,
    #[serde(serialize_with = "f64_17")]
    pub mst_cost: f64,
    #[serde(serialize_with = "f64_17")]
    pub join_cost: f64,
    #[serde(serialize_with = "f64_17")]
    pub walk_cost: f64,
    #[serde(serialize_with = "f64_17")]
    pub shortcut_tour_cost: f64,
    #[serde(serialize_with = "opt_f64_17")]
    pub ratio_to_lower_bound: Option<f64>,
    pub stage_seconds: StageTimes,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tour: Option<Vec<Vertex>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walk: Option<Vec<Vertex>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multigraph: Option<Vec<MultigraphEdge>>,
}

impl TourReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Copy with all timing fields zeroed, for run-to-run comparison.
    pub fn without_timings(&self) -> Self {
        TourReport {
            stage_seconds: StageTimes::default(),
            ..self.clone()
        }
    }
}
