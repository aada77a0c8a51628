//! Serializable views of the core types.

use serde::{Deserialize, Serialize};

use pathpower_core::formula::{Regime, SplitRecord};
use pathpower_core::oracle::{DecompositionFamily, ExtremalResult};
use pathpower_core::{graph6, Embedding, Graph, LabeledConstruction, SParameter, TuranEvaluation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Role {
    pub name: String,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameter {
    pub name: String,
    pub value: usize,
}

/// Sidecar entry for one constructed graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Construction {
    pub family: String,
    pub graph6: String,
    pub order: usize,
    pub edges: usize,
    pub roles: Vec<Role>,
    pub parameters: Vec<Parameter>,
}

impl From<&LabeledConstruction> for Construction {
    fn from(c: &LabeledConstruction) -> Self {
        Self {
            family: c.family.to_owned(),
            graph6: graph6::encode(&c.graph),
            order: c.graph.order(),
            edges: c.graph.edge_count(),
            roles: c
                .roles
                .iter()
                .map(|(name, vertices)| Role { name: name.clone(), vertices: vertices.clone() })
                .collect(),
            parameters: c.parameters.iter().map(|&(name, value)| Parameter { name: name.to_owned(), value }).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SValue {
    pub s: usize,
    pub j: usize,
    pub t: usize,
}

impl From<SParameter> for SValue {
    fn from(sp: SParameter) -> Self {
        Self { s: sp.s, j: sp.j, t: sp.t }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Split {
    pub n0: usize,
    pub n1: usize,
    pub path_part: usize,
    pub cross: usize,
    pub turan_part: usize,
    pub total: usize,
    pub printed_objective: usize,
}

impl From<&SplitRecord> for Split {
    fn from(r: &SplitRecord) -> Self {
        Self {
            n0: r.n0,
            n1: r.n1,
            path_part: r.path_part,
            cross: r.cross,
            turan_part: r.turan_part,
            total: r.total,
            printed_objective: r.printed_objective,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evaluation {
    pub value: usize,
    pub regime: String,
    pub argmax_splits: Vec<usize>,
    pub s_used: Option<SValue>,
    pub breakdown: Vec<Split>,
}

impl From<&TuranEvaluation> for Evaluation {
    fn from(e: &TuranEvaluation) -> Self {
        let regime = match e.regime {
            Regime::Split => "split",
            Regime::Path => "path",
            Regime::Clique => "clique",
        };
        Self {
            value: e.value,
            regime: regime.to_owned(),
            argmax_splits: e.argmax_splits.clone(),
            s_used: e.s_used.map(SValue::from),
            breakdown: e.breakdown.iter().map(Split::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Oracle {
    pub value: usize,
    pub pattern: String,
    pub witnesses: Vec<String>,
}

impl From<&ExtremalResult> for Oracle {
    fn from(r: &ExtremalResult) -> Self {
        Self {
            value: r.value,
            pattern: graph6::encode(&r.pattern),
            witnesses: r.witnesses.iter().map(|w| w.as_graph6().to_owned()).collect(),
        }
    }
}

/// Formula value, optionally with the exhaustive value beside it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberResult {
    pub formula: Evaluation,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<Oracle>,
    /// `oracle - formula`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gap: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Containment {
    pub host_index: usize,
    pub host_order: usize,
    pub pattern: String,
    pub present: bool,
    /// `embedding[i]` is the host vertex used for pattern vertex `i`.
    pub embedding: Option<Vec<usize>>,
}

impl Containment {
    pub fn new(host_index: usize, host: &Graph, pattern: &Graph, found: Option<Embedding>) -> Self {
        Self {
            host_index,
            host_order: host.order(),
            pattern: graph6::encode(pattern),
            present: found.is_some(),
            embedding: found.map(|e| e.mapping),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub target: String,
    pub p: usize,
    pub host_width: usize,
    pub candidate_cap: usize,
    pub members: Vec<String>,
}

impl From<&DecompositionFamily> for Decomposition {
    fn from(f: &DecompositionFamily) -> Self {
        Self {
            target: graph6::encode(&f.target),
            p: f.p,
            host_width: f.host_width,
            candidate_cap: f.candidate_cap,
            members: f.members.iter().map(graph6::encode).collect(),
        }
    }
}

/// One check of a verification suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub suite: String,
    pub check: String,
    pub passed: bool,
    pub detail: serde_json::Value,
}
