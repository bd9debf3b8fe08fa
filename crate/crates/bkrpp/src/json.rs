//! JSON encodings of shapes, fillings and polynomials.
//!
//! * shape: `{"lambda":[3,2,2],"mu":[1]}`
//! * filling: `{"shape":…,"rows":[[null,3,3],[2,3],[3,4]]}`. Row `i` starts
//!   at column 1; `null` marks the columns `1..=μ_i` outside the shape.
//!   Rows that list only the `λ_i - μ_i` cells of the shape are accepted on
//!   input.
//! * polynomial: `{"terms":[{"c":2,"x":[1,0,1],"t":[1]}]}`, exponents
//!   trimmed, terms in the library's canonical order. Coefficients are
//!   integers of any size.

use std::str::FromStr;

use bkrpp_core::polynomial::{Monomial, SparsePoly};
use bkrpp_core::shapes::{Cell, SkewShape};
use bkrpp_core::tableaux::{Filling, WeakComposition};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] bkrpp_core::Error),
    #[error("coefficient {0} is not an integer")]
    Coefficient(String),
    #[error("row {row}: {message}")]
    Row { row: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeJson {
    pub lambda: Vec<u32>,
    #[serde(default)]
    pub mu: Vec<u32>,
}

impl From<&SkewShape> for ShapeJson {
    fn from(s: &SkewShape) -> Self {
        ShapeJson { lambda: s.lambda().parts().to_vec(), mu: s.mu().parts().to_vec() }
    }
}

impl ShapeJson {
    pub fn to_shape(&self) -> Result<SkewShape, FormatError> {
        Ok(SkewShape::from_parts(&self.lambda, &self.mu)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FillingJson {
    pub shape: ShapeJson,
    pub rows: Vec<Vec<Option<u32>>>,
}

impl FillingJson {
    /// Encodes a filling of `shape`. Cells of `shape` missing from `t` are
    /// written as `null` too.
    pub fn new(shape: &SkewShape, t: &Filling) -> Self {
        let rows = (1..=shape.num_rows())
            .map(|i| (1..=shape.lambda().part(i)).map(|j| t.get(Cell::new(i, j))).collect())
            .collect();
        FillingJson { shape: shape.into(), rows }
    }

    /// Decodes into the shape and a filling of every cell of it.
    pub fn decode(&self) -> Result<(SkewShape, Filling), FormatError> {
        let shape = self.shape.to_shape()?;
        let mut t = Filling::new();
        if self.rows.len() > shape.num_rows() as usize && self.rows[shape.num_rows() as usize..].iter().any(|r| !r.is_empty()) {
            return Err(FormatError::Row { row: shape.num_rows() as usize + 1, message: "beyond the shape".into() });
        }
        for i in 1..=shape.num_rows() {
            let range = shape.row_range(i);
            let row = self.rows.get(i as usize - 1).map(Vec::as_slice).unwrap_or(&[]);
            let err = |message: String| FormatError::Row { row: i as usize, message };
            // shape-aligned rows carry exactly the cells and no nulls
            let first = if row.len() == range.len() as usize && row.iter().all(Option::is_some) {
                range.start
            } else {
                1
            };
            if first == 1 && row.len() != range.end as usize - 1 {
                return Err(err(format!("expected {} entries, found {}", range.end - 1, row.len())));
            }
            for (k, v) in row.iter().enumerate() {
                let col = first + k as u32;
                match (range.contains(col), v) {
                    (true, Some(0)) => return Err(err(format!("entry in column {col} must be positive"))),
                    (true, Some(v)) => t.set(Cell::new(i, col), *v),
                    (true, None) => return Err(err(format!("column {col} is inside the shape but null"))),
                    (false, None) => {}
                    (false, Some(_)) => return Err(err(format!("column {col} is outside the shape"))),
                }
            }
        }
        Ok((shape, t))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: serde_json::Number,
    #[serde(default)]
    pub x: Vec<u32>,
    #[serde(default)]
    pub t: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

impl From<&SparsePoly> for PolyJson {
    fn from(p: &SparsePoly) -> Self {
        let terms = p
            .terms()
            .map(|(m, c)| TermJson {
                c: serde_json::Number::from_str(&c.to_string()).expect("integers are valid JSON numbers"),
                x: m.x_exp().entries().to_vec(),
                t: m.t_exp().entries().to_vec(),
            })
            .collect();
        PolyJson { terms }
    }
}

impl PolyJson {
    pub fn to_poly(&self) -> Result<SparsePoly, FormatError> {
        let mut p = SparsePoly::zero();
        for term in &self.terms {
            let text = term.c.to_string();
            let c = BigInt::from_str(&text).map_err(|_| FormatError::Coefficient(text))?;
            let m = Monomial::new(WeakComposition::new(term.x.clone()), WeakComposition::new(term.t.clone()));
            p.add_term(m, c);
        }
        Ok(p)
    }
}

pub fn poly_to_string(p: &SparsePoly) -> String {
    serde_json::to_string(&PolyJson::from(p)).expect("serializable")
}

pub fn poly_from_str(text: &str) -> Result<SparsePoly, FormatError> {
    serde_json::from_str::<PolyJson>(text)?.to_poly()
}

pub fn shape_to_string(s: &SkewShape) -> String {
    serde_json::to_string(&ShapeJson::from(s)).expect("serializable")
}

pub fn shape_from_str(text: &str) -> Result<SkewShape, FormatError> {
    serde_json::from_str::<ShapeJson>(text)?.to_shape()
}

pub fn filling_to_string(shape: &SkewShape, t: &Filling) -> String {
    serde_json::to_string(&FillingJson::new(shape, t)).expect("serializable")
}

pub fn filling_from_str(text: &str) -> Result<(SkewShape, Filling), FormatError> {
    serde_json::from_str::<FillingJson>(text)?.decode()
}
