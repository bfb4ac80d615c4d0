//! The code spec file: a TGRS code as JSON, using the textual forms of
//! [`crate::text`].
//!
//! ```json
//! {"schema": 1, "field": "13", "n": 4, "k": 2, "eta": "5",
//!  "alpha": ["1","2","3","4"], "v": ["1","1","1","1"]}
//! ```

use serde::{Deserialize, Serialize};

use crate::code::TgrsCode;
use crate::constructions::{Construction, ConstructionSpec, Provenance};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::text::{parse_element, parse_field};

pub const CODE_SPEC_SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecProvenance {
    pub construction: ConstructionSpec,
    #[serde(flatten)]
    pub details: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpecFile {
    pub schema: u32,
    pub field: String,
    pub n: usize,
    pub k: usize,
    pub eta: String,
    pub alpha: Vec<String>,
    pub v: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<SpecProvenance>,
}

fn parse_at(field: &Field, what: &str, s: &str) -> Result<FieldElement> {
    parse_element(field, s).map_err(|e| Error::Parse(format!("field `{what}`: {e}")))
}

impl CodeSpecFile {
    pub fn from_code(code: &TgrsCode) -> CodeSpecFile {
        let strings = |xs: &[FieldElement]| xs.iter().map(ToString::to_string).collect();
        CodeSpecFile {
            schema: CODE_SPEC_SCHEMA,
            field: code.field().to_string(),
            n: code.n(),
            k: code.k(),
            eta: code.eta().to_string(),
            alpha: strings(code.alpha()),
            v: strings(code.v()),
            provenance: None,
        }
    }

    pub fn from_construction(c: &Construction) -> CodeSpecFile {
        CodeSpecFile {
            provenance: Some(SpecProvenance {
                construction: c.spec.clone(),
                details: c.provenance.clone(),
            }),
            ..CodeSpecFile::from_code(&c.code)
        }
    }

    /// Parses JSON; errors carry the line and column.
    pub fn from_json(s: &str) -> Result<CodeSpecFile> {
        let spec: CodeSpecFile = serde_json::from_str(s).map_err(|e| {
            Error::Parse(format!(
                "code spec, line {} column {}: {e}",
                e.line(),
                e.column()
            ))
        })?;
        if spec.schema != CODE_SPEC_SCHEMA {
            return Err(Error::Parse(format!(
                "field `schema`: unsupported version {} (expected {CODE_SPEC_SCHEMA})",
                spec.schema
            )));
        }
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("code spec serializes")
    }

    pub fn to_code(&self) -> Result<TgrsCode> {
        let field =
            parse_field(&self.field).map_err(|e| Error::Parse(format!("field `field`: {e}")))?;
        for (name, len) in [("alpha", self.alpha.len()), ("v", self.v.len())] {
            if len != self.n {
                return Err(Error::Parse(format!(
                    "field `{name}`: expected n = {} entries, got {len}",
                    self.n
                )));
            }
        }
        let alpha = self
            .alpha
            .iter()
            .enumerate()
            .map(|(i, s)| parse_at(&field, &format!("alpha[{i}]"), s))
            .collect::<Result<Vec<_>>>()?;
        let v = self
            .v
            .iter()
            .enumerate()
            .map(|(i, s)| parse_at(&field, &format!("v[{i}]"), s))
            .collect::<Result<Vec<_>>>()?;
        let eta = parse_at(&field, "eta", &self.eta)?;
        TgrsCode::new(&field, alpha, v, self.k, eta)
    }
}
