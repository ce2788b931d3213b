//! Serializable result shapes shared by the commands.

use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
pub struct CountReport {
    pub n: usize,
    pub pinnacles: Vec<u32>,
    pub method: String,
    pub count: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct OrbitRow {
    pub representative: String,
    pub orbit_size: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ActReport {
    pub perm: String,
    pub x: u32,
    pub variant: String,
    pub result: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BenchRowReport {
    pub n: usize,
    pub pinnacles: Vec<u32>,
    pub count: String,
    pub naive_ms: Option<f64>,
    pub construct_ms: f64,
    pub speedup: Option<f64>,
}

/// Values joined with `;` so a set fits in one CSV cell.
pub fn csv_values(values: &[u32]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(";")
}
