//! JSON document format for [`FactoredBelyi`].
//!
//! ```json
//! {
//!   "k": "1/1728",
//!   "zeros": [{ "coeffs": ["5", "10", "1"], "exp": 3 }],
//!   "ones":  [{ "coeffs": ["-1", "4", "1"], "exp": 2 }, …],
//!   "poles": [{ "coeffs": ["0", "1"], "exp": 1 }],
//!   "infinity": { "class": "pole", "order": 5 }
//! }
//! ```
//!
//! Coefficients are listed lowest power first as `"a/b"` (real) or
//! `"a/b,c/d"` (real, imaginary) strings; `infinity` may be `null`.

use serde::{Deserialize, Serialize};

use super::{Factor, FactoredBelyi, InfinityTag};
use crate::exactalg::{GaussRat, ParseError, UniPoly};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Coefficient(#[from] ParseError),
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FactorDoc {
    pub coeffs: Vec<String>,
    pub exp: u32,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FactoredBelyiDoc {
    pub k: String,
    pub zeros: Vec<FactorDoc>,
    pub ones: Vec<FactorDoc>,
    pub poles: Vec<FactorDoc>,
    pub infinity: Option<InfinityTag>,
}

fn factor_doc(f: &Factor) -> FactorDoc {
    FactorDoc { coeffs: f.poly.to_coeff_strings(), exp: f.exp }
}

fn factor_from(d: &FactorDoc) -> Result<Factor, ParseError> {
    Ok(Factor::new(UniPoly::from_coeff_strings(&d.coeffs)?, d.exp))
}

impl FactoredBelyi {
    pub fn to_doc(&self) -> FactoredBelyiDoc {
        FactoredBelyiDoc {
            k: self.k.to_string(),
            zeros: self.zeros.iter().map(factor_doc).collect(),
            ones: self.ones.iter().map(factor_doc).collect(),
            poles: self.poles.iter().map(factor_doc).collect(),
            infinity: self.infinity,
        }
    }

    pub fn from_doc(doc: &FactoredBelyiDoc) -> Result<Self, ParseError> {
        let list = |v: &[FactorDoc]| v.iter().map(factor_from).collect::<Result<Vec<_>, _>>();
        Ok(FactoredBelyi {
            k: doc.k.parse::<GaussRat>()?,
            zeros: list(&doc.zeros)?,
            ones: list(&doc.ones)?,
            poles: list(&doc.poles)?,
            infinity: doc.infinity,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("document serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, FormatError> {
        let doc: FactoredBelyiDoc = serde_json::from_str(s)?;
        Ok(Self::from_doc(&doc)?)
    }
}
