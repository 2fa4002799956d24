//! Certificate documents: a schema tag, the certified graph in graph6, and
//! one certificate body.

use p5free_core::structure::StructurePartition;
use p5free_core::{DecompTree, ForbiddenWitness, HomogeneousSet, SplitDivide, SplitPartition};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "p5free-cert/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub schema: String,
    /// The graph the certificate is about, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(flatten)]
    pub body: Body,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "certificate", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum Body {
    /// Membership: a decomposition tree.
    Tree {
        tree: DecompTree,
    },
    /// Non-membership, or failure of a hypothesis: an induced pattern.
    Witness {
        witness: ForbiddenWitness,
    },
    /// The graph is split.
    Split {
        partition: SplitPartition,
    },
    /// The graph is not prime.
    Module {
        module: HomogeneousSet,
    },
    Divide {
        divide: SplitDivide,
    },
    Structure {
        partition: StructurePartition,
    },
}

impl CertificateDoc {
    pub fn new(graph6: Option<String>, body: Body) -> Self {
        CertificateDoc { schema: SCHEMA.to_string(), graph6, body }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificates serialize")
    }

    /// Parses a document, rejecting other schema versions.
    pub fn from_json(s: &str) -> Result<Self, String> {
        let v: serde_json::Value = serde_json::from_str(s).map_err(|e| format!("not JSON: {e}"))?;
        match v.get("schema").and_then(|s| s.as_str()) {
            Some(SCHEMA) => {}
            Some(other) => return Err(format!("unsupported schema `{other}` (expected `{SCHEMA}`)")),
            None => return Err("document has no schema field".into()),
        }
        serde_json::from_value(v).map_err(|e| format!("malformed certificate: {e}"))
    }
}
