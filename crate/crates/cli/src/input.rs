//! Group input files.
//!
//! Schema:
//!
//! ```json
//! {
//!   "dim": 2,
//!   "cyclotomic_order": 4,
//!   "generators": [
//!     [ [["1"], ["0"]], [["0"], ["-1"]] ]
//!   ],
//!   "cap": 100000
//! }
//! ```
//!
//! Each matrix entry is the list of rational coefficients of the element
//! in the power basis of the primitive root of unity; rationals are
//! strings like `"1"`, `"-1"` or `"2/3"`.

use anyhow::{anyhow, bail, Context, Result};
use num_rational::BigRational;
use serde::Deserialize;

use met_atlas_core::cyclo::CycloField;
use met_atlas_core::group::GroupMatrix;
use met_atlas_core::linalg::Matrix;

#[derive(Debug, Deserialize)]
struct RawGroupInput {
    dim: usize,
    cyclotomic_order: usize,
    generators: Vec<Vec<Vec<Vec<String>>>>,
    #[serde(default)]
    cap: Option<usize>,
}

/// A parsed group specification ready for closure.
pub struct GroupInput {
    pub field: CycloField,
    pub dim: usize,
    pub generators: Vec<GroupMatrix>,
    pub cap: Option<usize>,
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|e| anyhow!("bad rational {s:?}: {e}"))
}

pub fn parse_group_input(raw: &str) -> Result<GroupInput> {
    let raw: RawGroupInput = serde_json::from_str(raw).context("parsing group input JSON")?;
    if raw.dim == 0 {
        bail!("dim must be positive");
    }
    let field = CycloField::new(raw.cyclotomic_order).map_err(|e| anyhow!("{e}"))?;
    let mut generators = Vec::with_capacity(raw.generators.len());
    for (gi, rows) in raw.generators.iter().enumerate() {
        if rows.len() != raw.dim || rows.iter().any(|r| r.len() != raw.dim) {
            bail!("generator {gi} is not a {0}x{0} matrix", raw.dim);
        }
        let mut mat_rows = Vec::with_capacity(raw.dim);
        for row in rows {
            let mut out_row = Vec::with_capacity(raw.dim);
            for entry in row {
                if entry.len() > field.degree() {
                    bail!(
                        "entry has {} coefficients but the field degree is {}",
                        entry.len(),
                        field.degree()
                    );
                }
                let coeffs = entry
                    .iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()?;
                out_row.push(field.element(coeffs));
            }
            mat_rows.push(out_row);
        }
        generators.push(Matrix::from_rows(mat_rows).map_err(|e| anyhow!("{e}"))?);
    }
    Ok(GroupInput {
        field,
        dim: raw.dim,
        generators,
        cap: raw.cap,
    })
}
