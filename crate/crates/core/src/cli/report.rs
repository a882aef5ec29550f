//! Machine-readable run reports.

use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::poly::PolySystem;
use crate::spaces::{Classification, SolveOutcome};
use crate::violator::CallCounts;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Rounds {
    pub alg1: u64,
    pub alg2: u64,
}

/// One JSON object per command run. Keys are always present; inapplicable values are null.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input_digest: String,
    pub field: String,
    pub nvars: usize,
    pub m: usize,
    pub delta_or_gamma: Option<usize>,
    pub basis_indices: Vec<usize>,
    pub classification: Option<Classification>,
    pub primitive_calls: CallCounts,
    pub rounds: Rounds,
    pub seed: Option<u64>,
    pub wall_time_ms: u64,
    pub verified: Option<bool>,
}

/// Lowercase hex SHA-256 of the input file.
pub fn input_digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl RunReport {
    pub fn new(command: &str, bytes: &[u8], system: &PolySystem) -> Self {
        RunReport {
            command: command.to_string(),
            input_digest: input_digest(bytes),
            field: system.field().to_string(),
            nvars: system.nvars(),
            m: system.len(),
            delta_or_gamma: None,
            basis_indices: Vec::new(),
            classification: None,
            primitive_calls: CallCounts::default(),
            rounds: Rounds::default(),
            seed: None,
            wall_time_ms: 0,
            verified: None,
        }
    }

    pub fn with_outcome(mut self, out: &SolveOutcome) -> Self {
        self.delta_or_gamma = Some(out.delta_used);
        self.basis_indices = out.basis.clone();
        self.classification = out.classification;
        self.primitive_calls = out.stats.calls;
        self.rounds = Rounds {
            alg1: out.stats.rounds_alg1,
            alg2: out.stats.rounds_alg2,
        };
        self.seed = Some(out.stats.seed);
        self.verified = out.verification.as_ref().map(|v| v.passed);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// A short human-readable rendering.
    pub fn summary(&self) -> String {
        let mut s = format!("{}: {} polynomials in {} variables over {}\n", self.command, self.m, self.nvars, self.field);
        if let Some(d) = self.delta_or_gamma {
            let _ = writeln!(s, "  bound       {d}");
        }
        let _ = writeln!(s, "  basis       {:?} ({} elements)", self.basis_indices, self.basis_indices.len());
        if let Some(c) = self.classification {
            let _ = writeln!(s, "  outcome     {c:?}");
        }
        let c = &self.primitive_calls;
        if c.sampling_total() + c.verify > 0 {
            let _ = writeln!(
                s,
                "  queries     {} sampling ({} outer, {} inner, {} base), {} verify",
                c.sampling_total(),
                c.alg1_scans,
                c.alg2_scans,
                c.bruteforce,
                c.verify
            );
            let _ = writeln!(s, "  rounds      {} outer, {} inner", self.rounds.alg1, self.rounds.alg2);
        }
        if let Some(seed) = self.seed {
            let _ = writeln!(s, "  seed        {seed}");
        }
        if let Some(v) = self.verified {
            let _ = writeln!(s, "  verified    {v}");
        }
        let _ = writeln!(s, "  time        {} ms", self.wall_time_ms);
        s
    }
}
