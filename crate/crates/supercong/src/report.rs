//! Run reports: a JSON document with one record per executed check, plus a
//! CSV flattening of the same records. Reports are the regression artifact,
//! so everything except the timing fields is deterministic for a given
//! configuration.

use serde::{Deserialize, Serialize};

use crate::check::{CheckResult, RunParams, Status};
use crate::error::Error;

/// The configuration block echoed into every report. Only parameters that
/// affect check outcomes appear here; plumbing like concurrency width and
/// output paths is deliberately left out so reports stay comparable.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub checks: Vec<String>,
    pub primes: String,
    pub n_max: u64,
    pub mode: String,
    pub x_points: Vec<i64>,
    pub r_max: u64,
    pub seed: u64,
}

impl ConfigEcho {
    pub fn new(ids: &[&str], params: &RunParams) -> Self {
        ConfigEcho {
            checks: ids.iter().map(|s| s.to_string()).collect(),
            primes: format!("{}..{}", params.primes.0, params.primes.1),
            n_max: params.n_max,
            mode: params.mode.to_string(),
            x_points: params.x_points.clone(),
            r_max: params.r_max,
            seed: params.seed,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub elapsed_ms: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub config: ConfigEcho,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: ConfigEcho, results: Vec<CheckResult>, elapsed_ms: u64) -> Self {
        let count = |s: Status| results.iter().filter(|r| r.status == s).count();
        let summary = Summary {
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            skip: count(Status::Skip),
            elapsed_ms,
        };
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            results,
            summary,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| Error::Report(e.to_string()))
    }

    /// One row per result; nested tables are not flattened, everything else
    /// is. The (id, params, status) triple matches the JSON exactly.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "id",
            "params",
            "status",
            "witness_at",
            "witness_lhs",
            "witness_rhs",
            "skip_reason",
            "elapsed_ms",
        ])
        .expect("csv header");
        for r in &self.results {
            let status = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            let (at, lhs, rhs) = match &r.witness {
                Some(w) => (w.at.as_str(), w.lhs.as_str(), w.rhs.as_str()),
                None => ("", "", ""),
            };
            w.write_record([
                r.id.as_str(),
                r.params.as_str(),
                status,
                at,
                lhs,
                rhs,
                r.skip_reason.as_deref().unwrap_or(""),
                &r.elapsed_ms.to_string(),
            ])
            .expect("csv row");
        }
        String::from_utf8(w.into_inner().expect("csv flush")).expect("csv utf8")
    }
}
