//! JSON documents exchanged by the command line and the HTTP service. Both
//! front ends call the functions here, so a command and its endpoint always
//! produce the same payload for the same input.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::catalog::build_preferred_diagram;
use crate::diagram::{Diagram, NodeId};
use crate::engine::{self, Circling, ClassSummary, Symmetry};
use crate::error::Result;
use crate::family::{Family, FamilySpec, Parity};

/// A catalog entry named by family and parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramRef {
    pub family: Family,
    #[serde(default)]
    pub params: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<Parity>,
}

/// Where a request's diagram comes from: the catalog, or a full diagram
/// document supplied by the caller.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DiagramSource {
    Catalog(DiagramRef),
    Raw {
        diagram: Value,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        parity: Option<Parity>,
    },
}

/// A diagram ready for the engine. Diagrams not built from the catalog have
/// no realization to check their labels against and are marked unverified.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub diagram: Diagram,
    pub verified: bool,
}

impl DiagramSource {
    pub fn catalog(spec: &FamilySpec) -> Self {
        DiagramSource::Catalog(DiagramRef { family: spec.family, params: spec.params_json(), parity: None })
    }

    pub fn resolve(&self) -> Result<Resolved> {
        let (diagram, verified, parity) = match self {
            DiagramSource::Catalog(r) => {
                let spec = FamilySpec::from_params_json(r.family, &r.params)?;
                (build_preferred_diagram(&spec)?, true, r.parity)
            }
            DiagramSource::Raw { diagram, parity } => (Diagram::from_json_value(diagram.clone())?, false, *parity),
        };
        let diagram = match parity {
            Some(rule) => diagram.with_parity_rule(rule),
            None => diagram,
        };
        Ok(Resolved { diagram, verified })
    }
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PressPayload {
    pub circling: Circling,
    pub admissible: bool,
    /// Vertices that may be pressed next.
    pub pressable: Vec<NodeId>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub unverified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducePayload {
    pub circling: Circling,
    pub steps: Vec<NodeId>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub unverified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatedPayload {
    pub related: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<Vec<NodeId>>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub unverified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquivalentPayload {
    pub equivalent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetry: Option<Symmetry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<Vec<NodeId>>,
    #[serde(skip_serializing_if = "is_false")]
    pub unverified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassifyPayload {
    pub classes: Vec<ClassSummary>,
    #[serde(skip_serializing_if = "is_false")]
    pub unverified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissiblePayload {
    pub admissible: bool,
    #[serde(default, skip_serializing_if = "is_false")]
    pub unverified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymmetriesPayload {
    pub symmetries: Vec<Symmetry>,
    #[serde(skip_serializing_if = "is_false")]
    pub unverified: bool,
}

pub fn press(r: &Resolved, c: &Circling, vertex: NodeId) -> Result<PressPayload> {
    let circling = engine::press(&r.diagram, c, vertex)?;
    Ok(PressPayload {
        admissible: engine::is_admissible(&r.diagram, &circling)?,
        pressable: engine::pressable(&r.diagram, &circling)?,
        circling,
        unverified: !r.verified,
    })
}

pub fn reduce(r: &Resolved, c: &Circling) -> Result<ReducePayload> {
    let (circling, steps) = engine::reduce(&r.diagram, c)?;
    Ok(ReducePayload { circling, steps: steps.steps, unverified: !r.verified })
}

pub fn related(r: &Resolved, c1: &Circling, c2: &Circling) -> Result<RelatedPayload> {
    let steps = engine::f_related(&r.diagram, c1, c2)?;
    Ok(RelatedPayload { related: steps.is_some(), steps: steps.map(|s| s.steps), unverified: !r.verified })
}

pub fn equivalent(r: &Resolved, c1: &Circling, c2: &Circling) -> Result<EquivalentPayload> {
    let witness = engine::equivalent(&r.diagram, c1, c2)?;
    Ok(match witness {
        Some(w) => EquivalentPayload {
            equivalent: true,
            symmetry: Some(w.symmetry),
            steps: Some(w.steps.steps),
            unverified: !r.verified,
        },
        None => EquivalentPayload { equivalent: false, symmetry: None, steps: None, unverified: !r.verified },
    })
}

pub fn classify(r: &Resolved, cap: u128) -> Result<ClassifyPayload> {
    Ok(ClassifyPayload { classes: engine::classify_summary(&r.diagram, cap)?, unverified: !r.verified })
}

pub fn admissible(r: &Resolved, c: &Circling) -> Result<AdmissiblePayload> {
    Ok(AdmissiblePayload { admissible: engine::is_admissible(&r.diagram, c)?, unverified: !r.verified })
}

pub fn symmetries(r: &Resolved) -> SymmetriesPayload {
    SymmetriesPayload { symmetries: engine::automorphisms(&r.diagram), unverified: !r.verified }
}

/// Error body of every failed request.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApiError {
    pub code: String,
    pub message: String,
}

impl From<&crate::error::Error> for ApiError {
    fn from(err: &crate::error::Error) -> Self {
        ApiError { code: err.code().to_string(), message: err.to_string() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn source(value: Value) -> DiagramSource {
        serde_json::from_value(value).unwrap()
    }

    #[test]
    fn catalog_reference() {
        let src = source(json!({"family": "D", "params": {"m": 5, "n": 3}}));
        let r = src.resolve().unwrap();
        assert!(r.verified);
        assert_eq!(r.diagram.len(), 9);
        let out = press(&r, &Circling::from([2, 4, 9]), 2).unwrap();
        assert_eq!(
            serde_json::to_value(&out).unwrap(),
            json!({"circling": {"circled": [2, 3, 4, 9]}, "admissible": true, "pressable": [2, 3, 4, 9]})
        );
    }

    #[test]
    fn raw_diagram_is_unverified() {
        let d = build_preferred_diagram(&FamilySpec::sl(3, 2).unwrap()).unwrap();
        let src = source(json!({"diagram": d.to_json_value()}));
        let r = src.resolve().unwrap();
        assert!(!r.verified);
        let out = related(&r, &Circling::from([1, 5]), &Circling::from([3, 5])).unwrap();
        assert_eq!(serde_json::to_value(&out).unwrap(), json!({"related": true, "steps": [1, 2, 3], "unverified": true}));
    }

    #[test]
    fn parity_override_applies() {
        let src = source(json!({"family": "SL", "params": {"m": 3, "n": 2}, "parity": "odd"}));
        let r = src.resolve().unwrap();
        assert!(admissible(&r, &Circling::from([2, 3, 5])).unwrap().admissible);
    }

    #[test]
    fn equivalent_payload() {
        let r = DiagramSource::catalog(&FamilySpec::d(5, 3).unwrap()).resolve().unwrap();
        let out = equivalent(&r, &Circling::from([2, 4, 9]), &Circling::from([1, 4, 9])).unwrap();
        let v = serde_json::to_value(&out).unwrap();
        assert_eq!(v["equivalent"], json!(true));
        assert!(v["symmetry"]["perm"].is_array());
        assert!(v["steps"].is_array());
    }

    #[test]
    fn errors_map_to_codes() {
        let r = DiagramSource::catalog(&FamilySpec::sl(3, 2).unwrap()).resolve().unwrap();
        let err = reduce(&r, &Circling::from([2, 3, 5])).unwrap_err();
        assert_eq!((err.code(), err.exit_code()), ("not_admissible", 4));
        let err = press(&r, &Circling::from([3, 5]), 4).unwrap_err();
        assert_eq!((err.code(), err.exit_code()), ("not_pressable", 3));
        let api = ApiError::from(&err);
        assert_eq!(api.code, "not_pressable");
        assert!(source(json!({"family": "SL", "params": {"m": 0, "n": 2}})).resolve().is_err());
    }
}
