use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use super::Theorem;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    pub trial: usize,
    pub n: usize,
    pub determinant: String,
    pub closed_form: String,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub theorem: Theorem,
    pub n_max: usize,
    pub order: usize,
    pub trials: usize,
    pub seed: Option<u64>,
    pub input: Option<String>,
    pub cases: Vec<Case>,
    pub success: bool,
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl VerifyReport {
    pub fn success(&self) -> bool {
        self.cases.iter().all(|c| c.matches)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    /// Fixed-width table. Only the final `elapsed:` line depends on timing.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let source = match (&self.input, self.seed) {
            (Some(path), _) => format!("input {path}"),
            (None, Some(seed)) => format!("seed {seed}"),
            (None, None) => "seed -".to_string(),
        };
        let _ = writeln!(
            out,
            "theorem {}  n_max {}  order {}  trials {}  {}",
            self.theorem, self.n_max, self.order, self.trials, source
        );
        let det_w = self.cases.iter().map(|c| c.determinant.len()).max().unwrap_or(0).max("determinant".len());
        let _ = writeln!(out, "{:>5} {:>3}  {:<5}  {:<det_w$}  closed form", "trial", "n", "match", "determinant");
        for c in &self.cases {
            let flag = if c.matches { "yes" } else { "NO" };
            let _ =
                writeln!(out, "{:>5} {:>3}  {:<5}  {:<det_w$}  {}", c.trial, c.n, flag, c.determinant, c.closed_form);
        }
        let matched = self.cases.iter().filter(|c| c.matches).count();
        let verdict = if self.success() { "verified" } else { "MISMATCH" };
        let _ = writeln!(out, "result: {matched}/{} cases match, {verdict}", self.cases.len());
        let _ = writeln!(out, "elapsed: {:.3}s", self.elapsed.as_secs_f64());
        out
    }
}
