//! Problem description read from `--input`.

use std::collections::HashSet;
use std::path::Path;
use std::sync::Arc;

use gradealg::simplicial::{complex_from_ideal, SimplicialComplex};
use gradealg::{Config, Field, Ideal, Polynomial, Ring, Session};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<(i64, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power_bound: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub allow_linear: Option<bool>,
}

/// Exactly one of `J` and `facets` must be present; facets use 1-based
/// indices into `variables`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub field: String,
    pub variables: Vec<String>,
    #[serde(rename = "J", default, skip_serializing_if = "Option::is_none")]
    pub j: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<usize>>>,
    #[serde(rename = "I")]
    pub i: Vec<String>,
    #[serde(default)]
    pub options: Options,
}

impl ProblemSpec {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("bad problem spec: {e}")))
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

/// Overrides given on the command line.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub field: Option<String>,
    pub window: Option<(i64, i64)>,
    pub allow_linear: bool,
}

/// A validated problem: ring, `J`, generators of `I`, and settings.
#[derive(Debug)]
pub struct Problem {
    pub ring: Arc<Ring>,
    pub j: Ideal,
    pub i_gens: Vec<Polynomial>,
    pub facets: Option<SimplicialComplex>,
    pub session: Session,
    pub allow_linear: bool,
}

impl Problem {
    pub fn new(spec: &ProblemSpec, overrides: &Overrides) -> Result<Self, CliError> {
        let field = Field::parse(overrides.field.as_deref().unwrap_or(&spec.field))?;
        let mut seen = HashSet::new();
        for v in &spec.variables {
            if !seen.insert(v) {
                return Err(CliError::Input(format!("variable `{v}` listed twice")));
            }
        }
        let ring = Ring::new(spec.variables.iter().cloned(), field);
        let (j, facets) = match (&spec.j, &spec.facets) {
            (Some(j), None) => (Ideal::parse(&ring, j)?, None),
            (None, Some(facets)) => {
                let n = spec.variables.len();
                let mut zero_based = Vec::with_capacity(facets.len());
                for f in facets {
                    if let Some(&v) = f.iter().find(|&&v| v == 0 || v > n) {
                        return Err(CliError::Input(format!("facet index {v} outside 1..={n}")));
                    }
                    zero_based.push(f.iter().map(|v| v - 1).collect::<Vec<_>>());
                }
                let delta = SimplicialComplex::new(n, &zero_based)?;
                (delta.stanley_reisner_ideal(&ring), Some(delta))
            }
            _ => return Err(CliError::Input("give exactly one of `J` and `facets`".into())),
        };
        if spec.i.is_empty() {
            return Err(CliError::Input("`I` needs at least one generator".into()));
        }
        let i_gens = Ideal::parse(&ring, &spec.i)?.generators().to_vec();
        if i_gens.is_empty() {
            return Err(CliError::Input("every generator of `I` is zero".into()));
        }
        let defaults = Config::default();
        let o = &spec.options;
        let window = overrides.window.or(o.window).unwrap_or(defaults.window);
        gradealg::hochster::check_window(window.0, window.1)?;
        let config = Config {
            power_bound: o.power_bound.unwrap_or(defaults.power_bound),
            levels: o.levels.unwrap_or(defaults.levels),
            degree: o.degree.unwrap_or(defaults.degree),
            window,
            exec: defaults.exec,
        };
        Ok(Problem {
            ring,
            j,
            i_gens,
            facets,
            session: Session::new(config),
            allow_linear: overrides.allow_linear || o.allow_linear.unwrap_or(false),
        })
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn window(&self) -> (i64, i64) {
        self.session.config().window
    }

    /// `Δ` from the facets, or from a squarefree monomial `J`.
    pub fn complex(&self) -> Result<SimplicialComplex, CliError> {
        match &self.facets {
            Some(d) => Ok(d.clone()),
            None => Ok(complex_from_ideal(&self.j)?),
        }
    }

    pub fn variable_names(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.ring.vars()[i].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(json: &str) -> Result<Problem, CliError> {
        Problem::new(&ProblemSpec::from_json(json)?, &Overrides::default())
    }

    #[test]
    fn facets_become_the_stanley_reisner_ideal() {
        let p = build(r#"{"field":"Q","variables":["a","b"],"facets":[[1],[2]],"I":["a"]}"#).unwrap();
        assert_eq!(p.j.to_string(), "(a*b)");
        assert_eq!(p.complex().unwrap().facet_lists(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn rejects_malformed_problems() {
        for bad in [
            r#"{"field":"Q","variables":["a","a"],"J":[],"I":["a"]}"#,
            r#"{"field":"Q","variables":["a"],"I":["a"]}"#,
            r#"{"field":"Q","variables":["a"],"facets":[[2]],"I":["a"]}"#,
            r#"{"field":"Q","variables":["a"],"facets":[[0]],"I":["a"]}"#,
            r#"{"field":"Q","variables":["a"],"J":[],"I":[]}"#,
            r#"{"field":"Q","variables":["a"],"J":[],"I":["0"]}"#,
            r#"{"field":"GF(4)","variables":["a"],"J":[],"I":["a"]}"#,
            r#"{"field":"Q","variables":["a"],"J":[],"I":["a"],"options":{"window":[1,2]}}"#,
            r#"{"field":"Q","variables":["a"],"J":[],"I":["b"]}"#,
        ] {
            assert!(build(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn overrides_win() {
        let spec = ProblemSpec::from_json(r#"{"field":"Q","variables":["a"],"J":[],"I":["a"]}"#).unwrap();
        let o = Overrides { field: Some("GF7".into()), window: Some((-2, 0)), allow_linear: true };
        let p = Problem::new(&spec, &o).unwrap();
        assert_eq!((p.field(), p.window(), p.allow_linear), (Field::Prime(7), (-2, 0), true));
    }
}
