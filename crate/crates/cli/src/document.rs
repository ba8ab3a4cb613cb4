//! The point-set input document: `{"d": 3, "points": [[0,0,0], ...], "name": "..."}`.
//!
//! Coordinates must be JSON integer literals of any size. Floats, including
//! integral ones like `1.0`, are rejected with the path of the offending entry.

use std::str::FromStr;

use hollowlat::{Int, LatticePoint};
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSetDocument {
    pub d: usize,
    pub points: Vec<LatticePoint>,
    pub name: Option<String>,
    pub metadata: Option<Value>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {message}")]
    Field { path: String, message: String },
}

fn field(path: impl Into<String>, message: impl Into<String>) -> DocumentError {
    DocumentError::Field {
        path: path.into(),
        message: message.into(),
    }
}

fn integer(value: &Value, path: &str) -> Result<Int, DocumentError> {
    match value {
        // With arbitrary precision the number keeps its source text.
        Value::Number(n) => {
            Int::from_str(&n.to_string()).map_err(|_| field(path, format!("expected an integer, found {n}")))
        }
        other => Err(field(path, format!("expected an integer, found {other}"))),
    }
}

impl PointSetDocument {
    pub fn new(points: Vec<LatticePoint>, name: Option<String>) -> Self {
        let d = points.first().map_or(0, LatticePoint::dim);
        Self {
            d,
            points,
            name,
            metadata: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let root: Value = serde_json::from_str(text)?;
        let obj = root.as_object().ok_or_else(|| field("$", "expected an object"))?;

        let d_value = obj.get("d").ok_or_else(|| field("d", "missing"))?;
        let d = usize::try_from(&integer(d_value, "d")?)
            .ok()
            .filter(|&d| d >= 1)
            .ok_or_else(|| field("d", "expected a positive integer"))?;

        let raw = obj
            .get("points")
            .ok_or_else(|| field("points", "missing"))?
            .as_array()
            .ok_or_else(|| field("points", "expected an array"))?;
        let mut points = Vec::with_capacity(raw.len());
        for (i, entry) in raw.iter().enumerate() {
            let coords = entry
                .as_array()
                .ok_or_else(|| field(format!("points[{i}]"), "expected an array"))?;
            if coords.len() != d {
                return Err(field(
                    format!("points[{i}]"),
                    format!("expected {d} coordinates, found {}", coords.len()),
                ));
            }
            let coords = coords
                .iter()
                .enumerate()
                .map(|(j, c)| integer(c, &format!("points[{i}][{j}]")))
                .collect::<Result<Vec<_>, _>>()?;
            points.push(LatticePoint::new(coords));
        }

        let name = match obj.get("name") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(s.clone()),
            Some(_) => return Err(field("name", "expected a string")),
        };
        Ok(Self {
            d,
            points,
            name,
            metadata: obj.get("metadata").cloned(),
        })
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("d".into(), json!(self.d));
        obj.insert("points".into(), json!(self.points));
        if let Some(name) = &self.name {
            obj.insert("name".into(), json!(name));
        }
        if let Some(meta) = &self.metadata {
            obj.insert("metadata".into(), meta.clone());
        }
        Value::Object(obj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_big_integers_exactly() {
        let doc = PointSetDocument::parse(
            r#"{"d": 2, "points": [[0, 123456789012345678901234567890], [-1, 2]], "name": "x"}"#,
        )
        .unwrap();
        assert_eq!(
            doc.points[0].coords()[1].to_string(),
            "123456789012345678901234567890"
        );
        assert_eq!(doc.name.as_deref(), Some("x"));
        let again = PointSetDocument::parse(&doc.to_json().to_string()).unwrap();
        assert_eq!(again, doc);
    }

    #[test]
    fn rejects_floats_with_path() {
        let err = PointSetDocument::parse(r#"{"d": 2, "points": [[0, 0], [1, 0], [0, 1.0]]}"#).unwrap_err();
        assert!(err.to_string().starts_with("points[2][1]:"), "{err}");
        let err = PointSetDocument::parse(r#"{"d": 2, "points": [[0, 1e3]]}"#).unwrap_err();
        assert!(err.to_string().starts_with("points[0][1]:"), "{err}");
    }

    #[test]
    fn rejects_shape_errors() {
        for (text, path) in [
            (r#"{"points": []}"#, "d:"),
            (r#"{"d": 0, "points": []}"#, "d:"),
            (r#"{"d": 2.5, "points": []}"#, "d:"),
            (r#"{"d": 2}"#, "points:"),
            (r#"{"d": 2, "points": [[1, 2, 3]]}"#, "points[0]:"),
            (r#"{"d": 1, "points": [["1"]]}"#, "points[0][0]:"),
            (r#"{"d": 1, "points": [[1]], "name": 3}"#, "name:"),
        ] {
            let err = PointSetDocument::parse(text).unwrap_err();
            assert!(err.to_string().starts_with(path), "{text}: {err}");
        }
        assert!(matches!(
            PointSetDocument::parse("[1,"),
            Err(DocumentError::Json(_))
        ));
    }
}
