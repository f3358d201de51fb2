use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::models::InterceptionPath;
use crate::solver::{SolveResult, SolveStatus, Termination};

/// Serialized form of a [`SolveResult`].
///
/// Floats are written in shortest round-trip form, so parsing the document
/// reproduces every iterate bit for bit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub status: SolveStatus,
    pub termination: Termination,
    pub t_star: f64,
    pub iterations: usize,
    /// `[t_n, rho_n]` pairs, `n = 0..=iterations`.
    pub trace: Vec<[f64; 2]>,
    pub path: Option<InterceptionPath>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl From<&SolveResult> for ResultDocument {
    fn from(r: &SolveResult) -> Self {
        ResultDocument {
            status: r.status,
            termination: r.trace.termination,
            t_star: r.t_star,
            iterations: r.trace.iterations(),
            trace: r.trace.iterates.iter().map(|i| [i.t, i.rho]).collect(),
            path: r.path.clone(),
            notes: r.notes.clone(),
        }
    }
}

pub fn emit_result(result: &SolveResult) -> String {
    serde_json::to_string_pretty(&ResultDocument::from(result)).expect("result documents always serialize")
}

pub fn parse_result(text: &str) -> Result<ResultDocument> {
    serde_json::from_str(text).map_err(|e| Error::ScenarioSyntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}
