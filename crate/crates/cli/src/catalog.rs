//! The classification catalog as a versioned JSON document.

use std::path::Path;

use quadscroll_core::classify::{
    catalog, Ambient, Description, HilbertDimension, Presentation, Rationality, ScrollBase, TypeEntry, TypeLabel,
};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "quadscroll-catalog";
pub const VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CatalogFile {
    pub schema: String,
    pub version: u32,
    pub types: Vec<EntryJson>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum AmbientJson {
    Exactly(u32),
    AtLeast(u32),
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum DescriptionJson {
    CompleteIntersection([i64; 3]),
    Scroll { over: String, text: String },
    Other(String),
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum HilbertJson {
    CompleteIntersection,
    Number(i64),
    Unknown,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    pub source: String,
    pub target: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct EntryJson {
    pub label: String,
    pub ambient: AmbientJson,
    pub d: i64,
    pub description: DescriptionJson,
    pub g: i64,
    pub q: i64,
    pub p_g: i64,
    pub chi_x: i64,
    pub hilbert: HilbertJson,
    pub components: u32,
    pub presentations: Vec<PresentationJson>,
    pub rationality: String,
    pub intersections: Option<[i64; 4]>,
    pub bundle_classes: Option<(i64, i64)>,
    pub notes: Vec<String>,
}

fn base_name(b: ScrollBase) -> &'static str {
    match b {
        ScrollBase::Curve => "curve",
        ScrollBase::Surface => "surface",
    }
}

fn rationality_name(r: Rationality) -> &'static str {
    match r {
        Rationality::Rational => "rational",
        Rationality::Unirational => "unirational",
        Rationality::Unknown => "unknown",
    }
}

impl From<&TypeEntry> for EntryJson {
    fn from(e: &TypeEntry) -> Self {
        Self {
            label: e.label.to_string(),
            ambient: match e.ambient {
                Ambient::Exactly(n) => AmbientJson::Exactly(n),
                Ambient::AtLeast(n) => AmbientJson::AtLeast(n),
            },
            d: e.d,
            description: match &e.description {
                Description::CompleteIntersection(deg) => DescriptionJson::CompleteIntersection(*deg),
                Description::Scroll { over, text } => DescriptionJson::Scroll { over: base_name(*over).into(), text: text.clone() },
                Description::Other(t) => DescriptionJson::Other(t.clone()),
            },
            g: e.g,
            q: e.q,
            p_g: e.p_g,
            chi_x: e.chi_x,
            hilbert: match e.hilbert {
                HilbertDimension::CompleteIntersection => HilbertJson::CompleteIntersection,
                HilbertDimension::Number(v) => HilbertJson::Number(v),
                HilbertDimension::Unknown => HilbertJson::Unknown,
            },
            components: e.components,
            presentations: e
                .presentations
                .iter()
                .map(|p| PresentationJson { source: p.source.to_string(), target: p.target.to_string() })
                .collect(),
            rationality: rationality_name(e.rationality).into(),
            intersections: e.intersections,
            bundle_classes: e.bundle_classes,
            notes: e.notes.clone(),
        }
    }
}

impl TryFrom<&EntryJson> for TypeEntry {
    type Error = String;

    fn try_from(j: &EntryJson) -> Result<Self, String> {
        let label: TypeLabel = j.label.parse().map_err(|e| format!("{e}"))?;
        let ctx = |what: &str, e: quadscroll_core::Error| format!("type {label}: {what}: {e}");
        let description = match &j.description {
            DescriptionJson::CompleteIntersection(deg) => Description::CompleteIntersection(*deg),
            DescriptionJson::Scroll { over, text } => {
                let over = match over.as_str() {
                    "curve" => ScrollBase::Curve,
                    "surface" => ScrollBase::Surface,
                    other => return Err(format!("type {label}: unknown scroll base `{other}`")),
                };
                Description::Scroll { over, text: text.clone() }
            }
            DescriptionJson::Other(t) => Description::Other(t.clone()),
        };
        let presentations = j
            .presentations
            .iter()
            .map(|p| {
                Ok(Presentation {
                    source: p.source.parse().map_err(|e| ctx("presentation source", e))?,
                    target: p.target.parse().map_err(|e| ctx("presentation target", e))?,
                })
            })
            .collect::<Result<Vec<_>, String>>()?;
        let rationality = match j.rationality.as_str() {
            "rational" => Rationality::Rational,
            "unirational" => Rationality::Unirational,
            "unknown" => Rationality::Unknown,
            other => return Err(format!("type {label}: unknown rationality `{other}`")),
        };
        Ok(TypeEntry {
            label,
            ambient: match j.ambient {
                AmbientJson::Exactly(n) => Ambient::Exactly(n),
                AmbientJson::AtLeast(n) => Ambient::AtLeast(n),
            },
            d: j.d,
            description,
            g: j.g,
            q: j.q,
            p_g: j.p_g,
            chi_x: j.chi_x,
            hilbert: match j.hilbert {
                HilbertJson::CompleteIntersection => HilbertDimension::CompleteIntersection,
                HilbertJson::Number(v) => HilbertDimension::Number(v),
                HilbertJson::Unknown => HilbertDimension::Unknown,
            },
            components: j.components,
            presentations,
            rationality,
            intersections: j.intersections,
            bundle_classes: j.bundle_classes,
            notes: j.notes.clone(),
        })
    }
}

pub fn builtin() -> CatalogFile {
    CatalogFile { schema: SCHEMA.into(), version: VERSION, types: catalog().iter().map(EntryJson::from).collect() }
}

pub fn to_json(file: &CatalogFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("serializable");
    s.push('\n');
    s
}

pub fn parse(text: &str) -> Result<Vec<TypeEntry>, String> {
    let file: CatalogFile = serde_json::from_str(text).map_err(|e| format!("invalid catalog: {e}"))?;
    if file.schema != SCHEMA {
        return Err(format!("schema `{}` is not `{SCHEMA}`", file.schema));
    }
    if file.version != VERSION {
        return Err(format!("catalog version {} is not supported (expected {VERSION})", file.version));
    }
    file.types.iter().map(TypeEntry::try_from).collect()
}

pub fn load(path: &Path) -> Result<Vec<TypeEntry>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = to_json(&builtin());
        assert_eq!(parse(&text).unwrap(), catalog());
    }

    #[test]
    fn rejects_other_versions() {
        let text = to_json(&builtin()).replacen("\"version\": 1", "\"version\": 2", 1);
        assert!(parse(&text).unwrap_err().contains("version 2"));
    }

    #[test]
    fn rejects_unknown_labels() {
        let text = to_json(&builtin()).replacen("\"label\": \"A\"", "\"label\": \"J\"", 1);
        assert!(parse(&text).is_err());
    }
}
