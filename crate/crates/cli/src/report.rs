//! Claim reports and their JSON / Markdown renderings.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Provenance {
    Paper,
    Trivial,
    Derived,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Discrepancy,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Discrepancy => "DISCREPANCY",
        })
    }
}

/// A computed or expected value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Count(u64),
    Real(f64),
    /// Complex vector as `[re, im]` pairs.
    Complex(Vec<[f64; 2]>),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Count(n) => write!(f, "{n}"),
            Value::Real(x) => f.write_str(&json_number(*x)),
            Value::Complex(zs) => {
                let parts: Vec<String> = zs
                    .iter()
                    .map(|[re, im]| {
                        let sign = if *im < 0.0 { '-' } else { '+' };
                        format!("{}{sign}{}i", json_number(*re), json_number(im.abs()))
                    })
                    .collect();
                write!(f, "({})", parts.join(", "))
            }
            Value::Text(s) => f.write_str(s),
        }
    }
}

/// The number exactly as it appears in the JSON report.
fn json_number(x: f64) -> String {
    serde_json::to_string(&x).expect("f64 serializes")
}

/// One line of a reproduction report. Deserialization requires every field, so a
/// report whose expected value lacks a provenance tag is rejected.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimReport {
    pub id: String,
    pub description: String,
    pub paper_location: String,
    pub computed: Value,
    pub expected: Value,
    pub provenance: Provenance,
    pub tolerance: f64,
    pub status: Status,
}

pub fn to_json(reports: &[ClaimReport]) -> String {
    let mut out = serde_json::to_string_pretty(reports).expect("reports serialize");
    out.push('\n');
    out
}

pub fn from_json(s: &str) -> Result<Vec<ClaimReport>, serde_json::Error> {
    serde_json::from_str(s)
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

/// A pipe table with the same columns as the JSON objects.
pub fn to_markdown(reports: &[ClaimReport]) -> String {
    let mut out = String::from(
        "| id | description | paper_location | computed | expected | provenance | tolerance | status |\n\
         |---|---|---|---|---|---|---|---|\n",
    );
    for r in reports {
        let provenance = serde_json::to_value(r.provenance).expect("enum serializes");
        writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} |",
            r.id,
            cell(&r.description),
            cell(&r.paper_location),
            cell(&r.computed.to_string()),
            cell(&r.expected.to_string()),
            provenance.as_str().unwrap_or_default(),
            json_number(r.tolerance),
            r.status
        )
        .expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ClaimReport {
        ClaimReport {
            id: "QQT-I3".into(),
            description: "third-order term".into(),
            paper_location: "somewhere".into(),
            computed: Value::Real(2.0),
            expected: Value::Real(2.0),
            provenance: Provenance::Derived,
            tolerance: 1e-10,
            status: Status::Pass,
        }
    }

    #[test]
    fn json_round_trip() {
        let reports = vec![sample()];
        let json = to_json(&reports);
        assert!(json.contains("\"provenance\": \"DERIVED\""));
        assert!(json.contains("\"paper_location\""));
        assert_eq!(from_json(&json).unwrap(), reports);
    }

    #[test]
    fn untagged_expected_is_rejected() {
        let mut v = serde_json::to_value(vec![sample()]).unwrap();
        v[0].as_object_mut().unwrap().remove("provenance");
        assert!(serde_json::from_value::<Vec<ClaimReport>>(v).is_err());
    }

    #[test]
    fn value_shapes() {
        let v: Value = serde_json::from_str("[[0.5, -0.25]]").unwrap();
        assert_eq!(v.to_string(), "(0.5-0.25i)");
        assert_eq!(Value::Real(1e-16).to_string(), "1e-16");
        assert_eq!(serde_json::from_str::<Value>("11").unwrap(), Value::Count(11));
        assert_eq!(serde_json::from_str::<Value>("false").unwrap(), Value::Bool(false));
    }

    #[test]
    fn markdown_has_one_row_per_report() {
        let md = to_markdown(&[sample(), sample()]);
        assert_eq!(md.lines().count(), 4);
        assert!(md.contains("| QQT-I3 |"));
    }
}
