//! Check records and their json / csv / text encodings.

use std::fmt::Write as _;
use std::str::FromStr;

use hermkern_core::BigRational;
use indexmap::IndexMap;
use serde::Serialize;

pub const TOOL: &str = "hermkern";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// One named check. Exact values are stored as strings (`num/den` for rationals).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    pub values: IndexMap<String, String>,
    pub residual: Option<f64>,
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

impl CheckRecord {
    pub fn new(name: impl Into<String>, ok: bool) -> Self {
        CheckRecord {
            name: name.into(),
            status: Status::from_bool(ok),
            values: IndexMap::new(),
            residual: None,
            tolerance: None,
            wall_ms: None,
        }
    }

    /// A numeric comparison; passes when `residual <= tolerance`.
    pub fn numeric(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        let mut rec = Self::new(name, residual <= tolerance);
        rec.residual = Some(residual);
        rec.tolerance = Some(tolerance);
        rec
    }

    pub fn value(mut self, key: &str, v: impl ToString) -> Self {
        self.values.insert(key.to_string(), v.to_string());
        self
    }

    pub fn exact(self, key: &str, q: &BigRational) -> Self {
        self.value(key, ratio_str(q))
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Lossless `num/den` rendering; integers keep the `/1`.
pub fn ratio_str(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64) -> Self {
        Report {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: command.into(),
            seed,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: CheckRecord) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = CheckRecord>) {
        self.checks.extend(checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckRecord::passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count()
    }

    pub fn find(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render(&self, format: Format) -> anyhow::Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            Format::Csv => self.to_csv(),
            Format::Text => Ok(self.to_text()),
        }
    }

    fn to_csv(&self) -> anyhow::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "name",
            "status",
            "residual",
            "tolerance",
            "wall_ms",
            "values",
        ])?;
        let num = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        for c in &self.checks {
            let values = c
                .values
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(";");
            w.write_record([
                c.name.as_str(),
                c.status.as_str(),
                &num(c.residual),
                &num(c.tolerance),
                &num(c.wall_ms),
                &values,
            ])?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} {} | {} | seed {}",
            self.tool, self.version, self.command, self.seed
        );
        for c in &self.checks {
            let _ = write!(out, "{} {}", c.status.as_str().to_uppercase(), c.name);
            if let (Some(r), Some(t)) = (c.residual, c.tolerance) {
                let _ = write!(out, "  residual={r:e} tol={t:e}");
            }
            if let Some(ms) = c.wall_ms {
                let _ = write!(out, "  {ms:.3}ms");
            }
            out.push('\n');
            for (k, v) in &c.values {
                let _ = writeln!(out, "    {k} = {v}");
            }
        }
        let _ = writeln!(
            out,
            "summary: {}/{} passed",
            self.checks.len() - self.failures(),
            self.checks.len()
        );
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown format {other}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("expand I(1,1) szego 1", 42);
        r.push(
            CheckRecord::new("c0_check", true).exact("c0", &BigRational::from_integer(1.into())),
        );
        r.push(CheckRecord::numeric("oracle", 2e-12, 1e-9).value("space", "I(1,1)"));
        r.push(CheckRecord::numeric("bad", 1.0, 1e-9));
        r
    }

    #[test]
    fn rationals_keep_denominator() {
        let q = BigRational::new((-6).into(), 4.into());
        assert_eq!(ratio_str(&q), "-3/2");
        assert_eq!(ratio_str(&BigRational::from_integer(5.into())), "5/1");
    }

    #[test]
    fn status_follows_tolerance() {
        let r = sample();
        assert!(!r.all_passed());
        assert_eq!(r.failures(), 1);
        assert!(r.find("oracle").unwrap().passed());
    }

    #[test]
    fn formats_carry_same_records() {
        let r = sample();
        let json: serde_json::Value =
            serde_json::from_str(&r.render(Format::Json).unwrap()).unwrap();
        let checks = json["checks"].as_array().unwrap();
        assert_eq!(checks.len(), 3);
        assert_eq!(checks[0]["values"]["c0"], "1/1");
        assert!(checks[0].get("wall_ms").is_none());

        let csv = r.render(Format::Csv).unwrap();
        let mut rd = csv::Reader::from_reader(csv.as_bytes());
        let rows: Vec<csv::StringRecord> = rd.records().map(Result::unwrap).collect();
        assert_eq!(rows.len(), 3);
        assert_eq!(&rows[0][0], "c0_check");
        assert_eq!(&rows[2][1], "fail");
        assert_eq!(&rows[0][5], "c0=1/1");

        let text = r.render(Format::Text).unwrap();
        assert!(text.contains("PASS c0_check"));
        assert!(text.contains("FAIL bad"));
        assert!(text.ends_with("summary: 2/3 passed\n"));
    }
}
