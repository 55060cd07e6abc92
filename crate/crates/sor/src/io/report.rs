//! Machine-readable result record. Every scalar is serialized as an
//! exact "num/den" string; polynomials and rational functions use the
//! canonical text form. Field order is fixed by the struct layout, so
//! serialization is byte-deterministic.

use crate::algebra::rat::{rat_to_string, Rat};
use crate::algebra::uni::UniPoly;
use crate::io::format::{format_poly, format_ratfunc_ext};
use crate::lines::PluckerLine;
use crate::rationality::{Classification, SurfaceParam, TubularData, Verdict};
use crate::recognition::{Axis, Diagnostics, ProfileCurve};
use crate::algebra::poly::{Poly, Var};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Debug, Clone)]
pub struct AxisOut {
    pub point: [String; 3],
    pub direction: [String; 3],
    pub plucker: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct TubularOut {
    pub m: String,
    pub d: String,
    pub equation: String,
    pub tau: [String; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau_inverse: Option<[String; 3]>,
    pub real_roots_of_m: usize,
    pub positive_intervals_of_m: usize,
}

#[derive(Serialize, Debug, Clone)]
pub struct ParamOut {
    pub x: String,
    pub y: String,
    pub z: String,
    pub construction: String,
    pub verified: bool,
    pub possibly_improper: bool,
}

#[derive(Serialize, Debug, Clone)]
pub struct ClassificationOut {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub missing_evidence: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile_reducible: Option<bool>,
    pub p2_param_present: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus_p2: Option<i64>,
}

#[derive(Serialize, Debug, Clone)]
pub struct DiagnosticsOut {
    pub solution_dim: usize,
    pub samples_used: usize,
    pub seed: u64,
}

#[derive(Serialize, Debug, Clone)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axis: Option<AxisOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetry_dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p2: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tubular: Option<TubularOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parametrization: Option<ParamOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<DiagnosticsOut>,
}

impl Report {
    pub fn new(command: &str, verdict: &str) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            verdict: verdict.to_string(),
            reason: None,
            axis: None,
            symmetry_dimension: None,
            profile: None,
            p2: None,
            tubular: None,
            parametrization: None,
            classification: None,
            diagnostics: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text rendering with one field per line.
    pub fn to_text(&self) -> String {
        let json = serde_json::to_value(self).expect("report serializes");
        let mut out = String::new();
        flatten("", &json, &mut out);
        out
    }
}

fn flatten(prefix: &str, v: &serde_json::Value, out: &mut String) {
    match v {
        serde_json::Value::Object(map) => {
            for (k, val) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{}.{}", prefix, k)
                };
                flatten(&key, val, out);
            }
        }
        serde_json::Value::Array(items) => {
            let rendered: Vec<String> = items
                .iter()
                .map(|i| match i {
                    serde_json::Value::String(s) => s.clone(),
                    other => other.to_string(),
                })
                .collect();
            out.push_str(&format!("{}: [{}]\n", prefix, rendered.join(", ")));
        }
        serde_json::Value::String(s) => {
            out.push_str(&format!("{}: {}\n", prefix, s));
        }
        other => {
            out.push_str(&format!("{}: {}\n", prefix, other));
        }
    }
}

pub fn axis_out(axis: &Axis) -> AxisOut {
    let f = |v: &[Rat; 3]| -> [String; 3] {
        [
            rat_to_string(&v[0]),
            rat_to_string(&v[1]),
            rat_to_string(&v[2]),
        ]
    };
    AxisOut {
        point: f(&axis.point),
        direction: f(&axis.direction),
        plucker: axis.plucker.render(),
    }
}

pub fn plucker_out(l: &PluckerLine) -> String {
    l.render()
}

pub fn profile_out(p: &ProfileCurve) -> String {
    format_poly(&p.p)
}

fn uni_out(p: &UniPoly) -> String {
    format_poly(&Poly::from_univariate(p, Var::T))
}

pub fn tubular_out(td: &TubularData) -> TubularOut {
    let rf = |r: &crate::algebra::poly::RatFunc<Rat>| {
        crate::io::format::format_ratfunc(r)
    };
    TubularOut {
        m: uni_out(&td.m),
        d: uni_out(&td.d),
        equation: format_poly(&td.tubular_eq),
        tau: [rf(&td.tau[0]), rf(&td.tau[1]), rf(&td.tau[2])],
        tau_inverse: td
            .tau_inv
            .as_ref()
            .map(|t| [rf(&t[0]), rf(&t[1]), rf(&t[2])]),
        real_roots_of_m: td.real_roots_of_m,
        positive_intervals_of_m: td.positive_intervals_of_m,
    }
}

pub fn param_out(sp: &SurfaceParam) -> ParamOut {
    let c = |i: usize| format_ratfunc_ext(&sp.components[i]);
    ParamOut {
        x: c(0),
        y: c(1),
        z: c(2),
        construction: format!("{:?}", sp.construction),
        verified: sp.verified,
        possibly_improper: sp.possibly_improper,
    }
}

pub fn classification_out(c: &Classification) -> ClassificationOut {
    let (verdict, missing) = match &c.verdict {
        Verdict::Rational => ("Rational".to_string(), None),
        Verdict::UnirationalNotRational => ("UnirationalNotRational".to_string(), None),
        Verdict::NonRational => ("NonRational".to_string(), None),
        Verdict::NeedsEvidence(what) => ("NeedsEvidence".to_string(), Some(what.clone())),
    };
    ClassificationOut {
        verdict,
        missing_evidence: missing,
        profile_reducible: c.evidence.profile_reducible,
        p2_param_present: c.evidence.p2_param_present,
        components: c.evidence.components,
        genus_p2: c.evidence.genus_p2,
    }
}

pub fn diagnostics_out(d: &Diagnostics) -> DiagnosticsOut {
    DiagnosticsOut {
        solution_dim: d.solution_dim,
        samples_used: d.samples_used,
        seed: d.seed,
    }
}
