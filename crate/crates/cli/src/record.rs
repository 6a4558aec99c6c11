//! The JSON run record shared by `solve`, `verify`, `project` and `bench`.

use anyhow::{anyhow, bail, Result};
use colored_paths::ecg::serialize_instance;
use colored_paths::reductions::digest;
use colored_paths::{Mode, PathSolution, ProblemInstance, UniColorPath};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// Bumped whenever a field changes meaning.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_len: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub target: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub strategy: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub distance_max: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord {
    pub color: String,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub format_version: u32,
    pub instance_digest: String,
    pub algorithm: String,
    pub mode: Mode,
    #[serde(default)]
    pub params: Params,
    pub value: usize,
    pub paths: Vec<PathRecord>,
    #[serde(default)]
    pub stats: Map<String, Value>,
    /// Only present with `--timing`, so that plain runs are reproducible byte for byte.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_ms: Option<f64>,
}

pub fn instance_digest(inst: &ProblemInstance) -> String {
    digest(&serialize_instance(inst))
}

impl RunRecord {
    pub fn new(
        inst: &ProblemInstance,
        algorithm: &str,
        params: Params,
        sol: &PathSolution,
        stats: Map<String, Value>,
    ) -> Self {
        let paths = sol
            .paths
            .iter()
            .map(|p| PathRecord { color: inst.graph.color_name(p.color).to_string(), vertices: p.vertices.clone() })
            .collect();
        RunRecord {
            format_version: FORMAT_VERSION,
            instance_digest: instance_digest(inst),
            algorithm: algorithm.to_string(),
            mode: sol.mode,
            params,
            value: sol.value(),
            paths,
            stats,
            wall_ms: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let rec: RunRecord = serde_json::from_str(text)?;
        if rec.format_version != FORMAT_VERSION {
            bail!("unsupported format_version {} (expected {FORMAT_VERSION})", rec.format_version);
        }
        Ok(rec)
    }

    /// The paths with color names resolved against `inst`.
    pub fn solution(&self, inst: &ProblemInstance) -> Result<PathSolution> {
        let mut paths = Vec::with_capacity(self.paths.len());
        for p in &self.paths {
            let c = inst.graph.color_id(&p.color).ok_or_else(|| anyhow!("unknown color {:?}", p.color))?;
            paths.push(UniColorPath::new(p.vertices.clone(), c));
        }
        Ok(PathSolution::from_paths(paths, self.mode))
    }
}
