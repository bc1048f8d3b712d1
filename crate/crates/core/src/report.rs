//! Structured pass/fail records for verification runs.
//!
//! Large integers are carried as decimal strings so JSON consumers never
//! lose precision.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One checked inequality (or recorded observation) with witnesses.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub params: Value,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl VerificationReport {
    pub fn new(
        check_id: impl Into<String>,
        params: Value,
        lhs: impl ToString,
        rhs: impl ToString,
        holds: bool,
    ) -> Self {
        VerificationReport {
            check_id: check_id.into(),
            params,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            holds,
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }
}
