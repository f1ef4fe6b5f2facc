//! JSON shapes for command output. Complex numbers are `[re, im]`; matrices
//! are row-major nested arrays. `serde_json` writes the shortest decimal that
//! parses back to the same `f64`, so values round-trip exactly.

use lande_core::{Complex, Mat2, Vec2};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JsonComplex(pub [f64; 2]);

impl From<Complex> for JsonComplex {
    fn from(z: Complex) -> Self {
        JsonComplex([z.re, z.im])
    }
}

impl From<JsonComplex> for Complex {
    fn from(z: JsonComplex) -> Self {
        Complex::new(z.0[0], z.0[1])
    }
}

pub type JsonVec = [JsonComplex; 2];
pub type JsonMat = [[JsonComplex; 2]; 2];

pub fn vec(v: Vec2) -> JsonVec {
    [v.c0.into(), v.c1.into()]
}

pub fn mat(m: &Mat2) -> JsonMat {
    m.rows().map(|row| row.map(JsonComplex::from))
}

pub fn to_mat(m: &JsonMat) -> Mat2 {
    Mat2::from_rows(m.map(|row| row.map(Complex::from)))
}
