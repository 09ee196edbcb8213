use serde::Serialize;
use serde_json::value::RawValue;

use super::{Entries, RepMatrix};
use crate::combinatorics::SkewShape;
use crate::linalg::format_scalar;
use crate::permutation::Permutation;

/// What a serialized matrix represents.
#[derive(Debug, Clone)]
pub enum MatrixSubject {
    Generator(usize),
    Permutation(Permutation),
    Yjm(usize),
}

#[derive(Serialize)]
struct MatrixDoc {
    shape: String,
    form: String,
    basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generator: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    permutation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    yjm: Option<usize>,
    rows: Vec<Vec<Box<RawValue>>>,
}

/// Decimal text with 17 significant digits, e.g. `0.86602540378443860`.
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0.0".to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (16 - exponent).max(1) as usize;
    format!("{x:.decimals$}")
}

fn raw(text: String) -> Box<RawValue> {
    RawValue::from_string(text).expect("matrix entries serialize to valid JSON")
}

/// `{shape, form, basis, generator|permutation|yjm, rows}`; seminormal entries are
/// `"p/q"` strings and orthogonal entries are numbers with 17 significant digits.
pub fn matrix_json(shape: &SkewShape, subject: &MatrixSubject, matrix: &RepMatrix) -> String {
    let rows = match matrix.entries() {
        Entries::Seminormal(m) => m
            .to_rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| raw(serde_json::to_string(&format_scalar(x)).unwrap()))
                    .collect()
            })
            .collect(),
        Entries::Orthogonal(m) => m
            .to_rows()
            .iter()
            .map(|row| row.iter().map(|&x| raw(format_real(x))).collect())
            .collect(),
    };
    let (generator, permutation, yjm) = match subject {
        MatrixSubject::Generator(i) => (Some(*i), None, None),
        MatrixSubject::Permutation(g) => (None, Some(g.to_string()), None),
        MatrixSubject::Yjm(j) => (None, None, Some(*j)),
    };
    let doc = MatrixDoc {
        shape: shape.to_string(),
        form: matrix.form().to_string(),
        basis: matrix.basis().iter().map(ToString::to_string).collect(),
        generator,
        permutation,
        yjm,
        rows,
    };
    serde_json::to_string(&doc).expect("matrix document serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representations::{coxeter_matrix, FormKind};

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(format_real(1.0), "1.0000000000000000");
        assert_eq!(format_real(-0.5), "-0.50000000000000000");
        let s = format_real(3f64.sqrt() / 2.0);
        assert_eq!(s.trim_start_matches("0.").len(), 17);
        assert_eq!(s.parse::<f64>().unwrap(), 3f64.sqrt() / 2.0);
    }

    #[test]
    fn matrix_documents() {
        let shape: SkewShape = "2,1".parse().unwrap();
        let m = coxeter_matrix(&shape, 2, FormKind::Seminormal).unwrap();
        let doc: serde_json::Value =
            serde_json::from_str(&matrix_json(&shape, &MatrixSubject::Generator(2), &m)).unwrap();
        assert_eq!(doc["basis"], serde_json::json!(["1,2;3", "1,3;2"]));
        assert_eq!(doc["rows"][0], serde_json::json!(["-1/2", "3/4"]));
        assert_eq!(doc["generator"], 2);
        let m = coxeter_matrix(&shape, 2, FormKind::Orthogonal).unwrap();
        let text = matrix_json(&shape, &MatrixSubject::Generator(2), &m);
        assert!(text.contains("-0.50000000000000000"));
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["form"], "orthogonal");
    }
}
