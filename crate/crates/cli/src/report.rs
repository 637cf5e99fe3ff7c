//! JSON report types. Every report is checked to round-trip before it is
//! written.

use gradealg::blowup::ReesPresentation;
use gradealg::criterion::FailureReason;
use gradealg::hochster::{IndexWindow, SRInvariants};
use gradealg::rees_cohomology::GenCMVerdict;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::spec::Problem;
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub command: String,
    pub field: String,
    pub variables: Vec<String>,
    #[serde(rename = "J")]
    pub j: Vec<String>,
    #[serde(rename = "I")]
    pub i: Vec<String>,
}

impl Header {
    pub fn new(command: &str, p: &Problem) -> Self {
        Header {
            command: command.into(),
            field: p.field().to_string(),
            variables: p.ring.vars().to_vec(),
            j: p.j.canonical_strings(),
            i: p.i_gens.iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(rename = "J_B")]
    pub jb: Vec<String>,
    #[serde(rename = "J_C")]
    pub jc: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckIsoReport {
    #[serde(flatten)]
    pub header: Header,
    pub isomorphic: bool,
    pub reason: Option<FailureReason>,
    #[serde(rename = "B")]
    pub b: Option<Vec<String>>,
    pub verified: bool,
    pub witness: Option<Witness>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableGrading {
    pub name: String,
    /// Internal degree.
    pub degree: u32,
    /// Adic level (`Y`-weight).
    pub level: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub variables: Vec<VariableGrading>,
    pub x_vars: Vec<String>,
    pub y_vars: Vec<String>,
    pub ideal: Vec<String>,
}

impl From<&ReesPresentation> for PresentationJson {
    fn from(p: &ReesPresentation) -> Self {
        PresentationJson {
            variables: p
                .ring
                .vars()
                .iter()
                .zip(&p.bigrading)
                .map(|(name, &(degree, level))| VariableGrading { name: name.clone(), degree, level })
                .collect(),
            x_vars: p.x_names(),
            y_vars: p.y_names(),
            ideal: p.defining_ideal.canonical_strings(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub generators: usize,
    pub passed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    #[serde(flatten)]
    pub header: Header,
    pub rees: PresentationJson,
    pub assoc_graded: PresentationJson,
    pub lemma_check: LemmaCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertReport {
    #[serde(flatten)]
    pub header: Header,
    pub levels: u32,
    pub degree: u32,
    /// `dim A_d`, `0 <= d <= degree`.
    #[serde(rename = "A")]
    pub a: Vec<u64>,
    /// `dim (I^n/I^{n+1})_d` indexed `[n][d]`.
    #[serde(rename = "G")]
    pub g: Vec<Vec<u64>>,
    /// `Σ_n dim (I^n/I^{n+1})_d = dim A_d` for `d <= min(levels, degree)`.
    pub telescoping: bool,
    /// The presentation of `G` has the same bigraded Hilbert table.
    pub presentation_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesSummary {
    #[serde(rename = "B")]
    pub b: Vec<String>,
    #[serde(rename = "dim_R")]
    pub dim_r: usize,
    #[serde(rename = "cm_R")]
    pub cm_r: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    #[serde(flatten)]
    pub header: Header,
    pub module: String,
    pub window: (i64, i64),
    pub cohomology: Vec<IndexWindow>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub invariants: Option<SRInvariants>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rees: Option<ReesSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenCMWindows {
    pub window: (i64, i64),
    #[serde(rename = "A1")]
    pub a1: Vec<IndexWindow>,
    #[serde(rename = "A2")]
    pub a2: Vec<IndexWindow>,
    #[serde(rename = "R")]
    pub r: Vec<IndexWindow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenCMReport {
    #[serde(flatten)]
    pub header: Header,
    #[serde(rename = "B")]
    pub b: Vec<String>,
    #[serde(flatten)]
    pub verdict: GenCMVerdict,
    pub windows: GenCMWindows,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    #[serde(flatten)]
    pub header: Header,
    #[serde(rename = "dim_A")]
    pub dim_a: usize,
    #[serde(rename = "dim_R")]
    pub dim_r: usize,
    #[serde(rename = "depth_A")]
    pub depth_a: usize,
    #[serde(with = "a_invariant")]
    pub a_invariant: Option<i64>,
    #[serde(rename = "B")]
    pub b: Option<Vec<String>>,
    /// `"top-facets"` or `"rees-presentation"`.
    pub dim_r_method: String,
}

mod a_invariant {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Finite(i64),
        Text(String),
    }

    pub fn serialize<S: Serializer>(v: &Option<i64>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(a) => Repr::Finite(*a),
            None => Repr::Text("minus infinity".into()),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<i64>, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Finite(a) => Ok(Some(a)),
            Repr::Text(_) => Ok(None),
        }
    }
}

/// Pretty JSON, after checking that it parses back to the same report.
pub fn emit<T: Serialize + DeserializeOwned + PartialEq>(report: &T) -> Result<String, CliError> {
    let text = serde_json::to_string_pretty(report)
        .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))?;
    let back: T = serde_json::from_str(&text)
        .map_err(|e| CliError::Internal(format!("report does not match its schema: {e}")))?;
    if &back != report {
        return Err(CliError::Internal("report changed in a JSON round trip".into()));
    }
    Ok(text + "\n")
}
