//! JSON interchange format for matrices, shared with the CLI:
//! `{"dim": d, "re": [[...d rows...]], "im": [[...]]}` with `im` optional
//! (defaults to the zero matrix).

use serde::{Deserialize, Serialize};

use crate::hermitian::{Complex64, ComplexMatrix};
use crate::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
struct RawMatrix {
    dim: usize,
    re: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    im: Option<Vec<Vec<f64>>>,
}

fn check_shape(field: &'static str, rows: &[Vec<f64>], dim: usize) -> Result<()> {
    if rows.len() != dim {
        return Err(Error::RowCount {
            field,
            dim,
            got: rows.len(),
        });
    }
    for (row, r) in rows.iter().enumerate() {
        if r.len() != dim {
            return Err(Error::RowLength {
                field,
                row,
                dim,
                got: r.len(),
            });
        }
    }
    Ok(())
}

/// Parses the JSON matrix format, rejecting non-square or missing rows.
pub fn parse(text: &str) -> Result<ComplexMatrix> {
    let raw: RawMatrix = serde_json::from_str(text)?;
    if raw.dim == 0 {
        return Err(Error::EmptyMatrix);
    }
    check_shape("re", &raw.re, raw.dim)?;
    if let Some(im) = &raw.im {
        check_shape("im", im, raw.dim)?;
    }
    ComplexMatrix::from_fn(raw.dim, |i, j| {
        Complex64::new(raw.re[i][j], raw.im.as_ref().map_or(0.0, |im| im[i][j]))
    })
}

/// Serializes a matrix to the JSON format; `im` is omitted for real matrices.
pub fn to_json(mat: &ComplexMatrix) -> String {
    let dim = mat.dim();
    let re: Vec<Vec<f64>> = (0..dim)
        .map(|i| (0..dim).map(|j| mat.get(i, j).re).collect())
        .collect();
    let all_real = (0..dim).all(|i| (0..dim).all(|j| mat.get(i, j).im == 0.0));
    let im = if all_real {
        None
    } else {
        Some(
            (0..dim)
                .map(|i| (0..dim).map(|j| mat.get(i, j).im).collect())
                .collect(),
        )
    };
    let raw = RawMatrix { dim, re, im };
    serde_json::to_string(&raw).expect("matrix serialization cannot fail")
}
