//! JSON job description: field, Galois subgroup, generators and options.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{Field, FieldSpec, GaloisSubgroup};
use crate::linalg::Matrix;
use crate::matgroup::GroupElement;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    pub field: FieldSection,
    pub group: GroupSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<LabelSpec>,
    #[serde(default)]
    pub options: JobOptions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSection {
    #[serde(flatten)]
    pub spec: FieldSpec,
    /// Generators of Gal(l/k): a for sigma_a, or a Frobenius exponent.
    #[serde(default)]
    pub galois: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSection {
    pub d: usize,
    pub generators: Vec<GeneratorSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    /// Row-major entries in the field grammar.
    pub matrix: Vec<Vec<String>>,
    /// Identity when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aut: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelStyle {
    /// {j, -j} is written M_{±j}
    PlusMinus,
    /// every orbit is written M_{j1,j2,...}
    List,
}

/// Names linear characters W_j by chi(g) = zeta^j, g a word in the generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelSpec {
    pub element: Vec<usize>,
    pub zeta: String,
    pub order: u64,
    pub style: LabelStyle,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub saturation: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub norm_search_bound: Option<u32>,
}

/// Parsed and validated field data and generators.
pub struct Parsed {
    pub field: Field,
    pub gal: GaloisSubgroup,
    pub generators: Vec<GroupElement>,
}

impl JobSpec {
    pub fn from_json(text: &str) -> Result<JobSpec> {
        serde_json::from_str(text)
            .map_err(|e| Error::InvalidJob(format!("line {}, column {}: {}", e.line(), e.column(), strip_position(&e.to_string()))))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("job serializes")
    }

    pub fn parse(&self) -> Result<Parsed> {
        let field = Field::new(self.field.spec.clone())?;
        let gal = GaloisSubgroup::new(&field, &self.field.galois).map_err(|e| Error::InvalidJob(format!("field.galois: {e}")))?;
        let d = self.group.d;
        if d < 2 {
            return Err(Error::InvalidJob(format!("group.d: need d >= 2, got {d}")));
        }
        if self.group.generators.is_empty() {
            return Err(Error::InvalidJob("group.generators: empty".into()));
        }
        let mut generators = Vec::with_capacity(self.group.generators.len());
        for (g, spec) in self.group.generators.iter().enumerate() {
            let at = format!("group.generators[{g}]");
            if spec.matrix.len() != d || spec.matrix.iter().any(|r| r.len() != d) {
                return Err(Error::InvalidJob(format!("{at}.matrix: expected {d} x {d}")));
            }
            let mut rows = Vec::with_capacity(d);
            for (r, row) in spec.matrix.iter().enumerate() {
                let mut out = Vec::with_capacity(d);
                for (c, s) in row.iter().enumerate() {
                    out.push(field.parse(s).map_err(|e| Error::InvalidJob(format!("{at}.matrix[{r}][{c}]: {e}")))?);
                }
                rows.push(out);
            }
            let aut = spec.aut.map_or(Ok(field.aut_identity()), |a| field.check_aut(a)).map_err(|e| Error::InvalidJob(format!("{at}.aut: {e}")))?;
            generators.push(GroupElement { matrix: Matrix::from_rows(rows), aut });
        }
        Ok(Parsed { field, gal, generators })
    }
}

// serde_json appends " at line L column C"; the position is reported separately
fn strip_position(msg: &str) -> &str {
    msg.rfind(" at line ").map_or(msg, |k| &msg[..k])
}
