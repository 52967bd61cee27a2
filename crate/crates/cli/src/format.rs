//! Output encodings: OEIS b-file, JSON and CSV.

use motzkin_core::Rat;
use serde::Serialize;

pub fn format_bfile(seq: &[Rat]) -> String {
    let mut out = String::new();
    for (n, v) in seq.iter().enumerate() {
        out.push_str(&format!("{n} {v}\n"));
    }
    out
}

pub fn format_csv(seq: &[Rat]) -> String {
    let parts: Vec<String> = seq.iter().map(ToString::to_string).collect();
    format!("{}\n", parts.join(","))
}

/// Sequence payload; coefficients travel as decimal strings.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct SeqPayload {
    pub model: String,
    pub what: String,
    pub terms: usize,
    pub coefficients: Vec<String>,
}

impl SeqPayload {
    pub fn new(model: impl Into<String>, what: impl Into<String>, seq: &[Rat]) -> Self {
        SeqPayload {
            model: model.into(),
            what: what.into(),
            terms: seq.len(),
            coefficients: strings(seq),
        }
    }
}

pub fn strings(seq: &[Rat]) -> Vec<String> {
    seq.iter().map(ToString::to_string).collect()
}

pub fn format_json<T: Serialize>(payload: &T) -> String {
    let mut s = serde_json::to_string(payload).expect("payload serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use motzkin_core::rat::{frac, rat};

    #[test]
    fn bfile_lines() {
        assert_eq!(format_bfile(&[rat(1), rat(1), rat(2)]), "0 1\n1 1\n2 2\n");
        assert_eq!(format_bfile(&[rat(-3)]), "0 -3\n");
    }

    #[test]
    fn csv_line() {
        assert_eq!(format_csv(&[rat(1), frac(-1, 2), rat(51)]), "1,-1/2,51\n");
    }

    #[test]
    fn json_object() {
        let p = SeqPayload::new("B", "f0", &[rat(1), rat(2), rat(5)]);
        assert_eq!(
            format_json(&p),
            "{\"model\":\"B\",\"what\":\"f0\",\"terms\":3,\"coefficients\":[\"1\",\"2\",\"5\"]}\n"
        );
    }
}
