//! JSON and CSV encodings of spaces and sets.
//!
//! Every document this module writes is canonical: keys follow universe and
//! parameter order and endpoints are printed in lowest terms, so equal values
//! serialize to identical bytes.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::crisp::CrispSubset;
use crate::error::{Error, Result};
use crate::interval::IntervalValue;
use crate::ivfs::{IVFuzzySet, Universe};
use crate::soft_space::{build_space, CoveringPolicy, SoftMapping, SoftSpace};

pub const SCHEMA_VERSION: u32 = 1;
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Syntax {
                context: format!("format {other:?}"),
                message: "expected `json` or `csv`".into(),
            }),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

pub(crate) fn json_error(what: &str, e: serde_json::Error) -> Error {
    Error::Syntax {
        context: format!("{what} (line {}, column {})", e.line(), e.column()),
        message: e.to_string(),
    }
}

/// `parameter -> object -> grade`.
pub type MembershipTable = IndexMap<String, IndexMap<String, IntervalValue>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema_version: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub version: Option<String>,
    pub universe: Vec<String>,
    pub parameters: Vec<String>,
    pub beta: IntervalValue,
    pub membership: MembershipTable,
}

impl SpaceDocument {
    pub fn from_space(space: &SoftSpace) -> Self {
        let mut doc = Self::from_mapping(space.mapping(), space.beta());
        doc.schema_version = Some(SCHEMA_VERSION);
        doc.version = Some(VERSION.to_string());
        doc
    }

    pub(crate) fn from_mapping(mapping: &SoftMapping, beta: IntervalValue) -> Self {
        let universe = mapping.universe().objects().to_vec();
        let membership = mapping
            .iter()
            .map(|(p, set)| (p.to_string(), grade_map(set)))
            .collect();
        SpaceDocument {
            schema_version: None,
            version: None,
            universe,
            parameters: mapping.parameters().to_vec(),
            beta,
            membership,
        }
    }

    /// The mapping and β, without checking the covering condition.
    pub fn to_mapping(&self) -> Result<(SoftMapping, IntervalValue)> {
        let universe = Universe::new(self.universe.iter().cloned())?;
        let mapping = mapping_from_table(&universe, &self.parameters, &self.membership)?;
        Ok((mapping, self.beta))
    }

    pub fn to_space(&self, policy: &CoveringPolicy) -> Result<SoftSpace> {
        let (mapping, beta) = self.to_mapping()?;
        build_space(mapping, beta, policy)
    }
}

fn grade_map(set: &IVFuzzySet) -> IndexMap<String, IntervalValue> {
    set.iter().map(|(o, g)| (o.to_string(), g)).collect()
}

pub(crate) fn mapping_from_table(
    universe: &Arc<Universe>,
    parameters: &[String],
    table: &MembershipTable,
) -> Result<SoftMapping> {
    let declared: HashSet<&str> = parameters.iter().map(String::as_str).collect();
    if let Some(p) = table.keys().find(|p| !declared.contains(p.as_str())) {
        return Err(Error::UnknownParameter(p.clone()));
    }
    let mut sets = Vec::with_capacity(parameters.len());
    for p in parameters {
        let row = table.get(p);
        for o in universe.objects() {
            if row.and_then(|r| r.get(o)).is_none() {
                return Err(Error::IncompleteTable {
                    parameter: p.clone(),
                    object: o.clone(),
                });
            }
        }
        let row = row.expect("checked above");
        if let Some(o) = row.keys().find(|o| universe.position(o).is_err()) {
            return Err(Error::UnknownObject(o.clone()));
        }
        let set =
            IVFuzzySet::from_pairs(universe.clone(), row.iter().map(|(o, g)| (o.as_str(), *g)))?;
        sets.push((p.clone(), set));
    }
    SoftMapping::new(universe.clone(), sets)
}

/// Parses a space document. CSV carries only the membership table, so β must
/// come from `beta`; for JSON a given `beta` overrides the document's.
pub fn parse_space(
    text: &str,
    format: Format,
    policy: &CoveringPolicy,
    beta: Option<IntervalValue>,
) -> Result<SoftSpace> {
    let (mapping, doc_beta) = match format {
        Format::Json => {
            let doc: SpaceDocument =
                serde_json::from_str(text).map_err(|e| json_error("space document", e))?;
            doc.to_mapping()?
        }
        Format::Csv => {
            let beta = beta.ok_or_else(|| {
                Error::InvalidConfig("a CSV membership table needs β to be given separately".into())
            })?;
            (parse_csv_mapping(text)?, beta)
        }
    };
    build_space(mapping, beta.unwrap_or(doc_beta), policy)
}

/// Header `object,<p1>,<p2>,...`; one row per object; cells are interval literals.
pub fn parse_csv_mapping(text: &str) -> Result<SoftMapping> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let csv_error = |e: csv::Error| Error::Syntax {
        context: match e.position() {
            Some(p) => format!("CSV line {}", p.line()),
            None => "CSV input".into(),
        },
        message: e.to_string(),
    };
    let header = reader.headers().map_err(csv_error)?.clone();
    let parameters: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
    if header.get(0) != Some("object") {
        return Err(Error::Syntax {
            context: "CSV header".into(),
            message: "first column must be `object`".into(),
        });
    }
    let mut objects = Vec::new();
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(csv_error)?;
        let line = record.position().map_or(0, |p| p.line());
        let object = record.get(0).unwrap_or_default().to_string();
        let mut cells = Vec::with_capacity(parameters.len());
        for (k, p) in parameters.iter().enumerate() {
            let cell = record.get(k + 1).filter(|c| !c.is_empty()).ok_or_else(|| {
                Error::IncompleteTable {
                    parameter: p.clone(),
                    object: object.clone(),
                }
            })?;
            let grade = cell.parse::<IntervalValue>().map_err(|e| Error::Syntax {
                context: format!("CSV line {line}, cell ({p}, {object})"),
                message: e.to_string(),
            })?;
            cells.push(grade);
        }
        if record.len() > parameters.len() + 1 {
            return Err(Error::Syntax {
                context: format!("CSV line {line}"),
                message: "more cells than header columns".into(),
            });
        }
        objects.push(object);
        rows.push(cells);
    }
    let universe = Universe::new(objects)?;
    let sets = parameters.iter().enumerate().map(|(k, p)| {
        let grades = rows.iter().map(|r| r[k]).collect();
        IVFuzzySet::new(universe.clone(), grades).map(|s| (p.clone(), s))
    });
    SoftMapping::new(universe.clone(), sets.collect::<Result<Vec<_>>>()?)
}

pub fn space_to_json(space: &SoftSpace) -> String {
    serde_json::to_string_pretty(&SpaceDocument::from_space(space))
        .expect("space documents serialize")
}

pub fn mapping_to_csv(mapping: &SoftMapping) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["object".to_string()];
    header.extend(mapping.parameters().iter().cloned());
    writer.write_record(&header).expect("in-memory write");
    for (i, o) in mapping.universe().objects().iter().enumerate() {
        let mut row = vec![o.clone()];
        row.extend(mapping.sets().iter().map(|s| s.grade_at(i).to_string()));
        writer.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

pub fn serialize_space(space: &SoftSpace, format: Format) -> String {
    match format {
        Format::Json => space_to_json(space),
        Format::Csv => mapping_to_csv(space.mapping()),
    }
}

/// The standalone form of one interval-valued fuzzy set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IvfsDocument {
    pub universe: Vec<String>,
    pub grades: IndexMap<String, IntervalValue>,
}

impl IvfsDocument {
    pub fn from_set(set: &IVFuzzySet) -> Self {
        IvfsDocument {
            universe: set.universe().objects().to_vec(),
            grades: grade_map(set),
        }
    }

    pub fn to_set(&self) -> Result<IVFuzzySet> {
        let universe = Universe::new(self.universe.iter().cloned())?;
        IVFuzzySet::from_pairs(universe, self.grades.iter().map(|(o, g)| (o.as_str(), *g)))
    }
}

/// A target set for approximation, interpreted over a space's universe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase", deny_unknown_fields)]
pub enum SetDocument {
    Fuzzy {
        grades: IndexMap<String, IntervalValue>,
    },
    Crisp {
        members: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TargetSet {
    Fuzzy(IVFuzzySet),
    Crisp(CrispSubset),
}

impl SetDocument {
    pub fn from_fuzzy(set: &IVFuzzySet) -> Self {
        SetDocument::Fuzzy {
            grades: grade_map(set),
        }
    }

    pub fn from_crisp(set: &CrispSubset) -> Self {
        SetDocument::Crisp {
            members: set.members().map(str::to_string).collect(),
        }
    }

    pub fn resolve(&self, universe: &Arc<Universe>) -> Result<TargetSet> {
        match self {
            SetDocument::Fuzzy { grades } => IVFuzzySet::from_pairs(
                universe.clone(),
                grades.iter().map(|(o, g)| (o.as_str(), *g)),
            )
            .map(TargetSet::Fuzzy),
            SetDocument::Crisp { members } => {
                let mut seen = HashSet::new();
                if let Some(m) = members.iter().find(|m| !seen.insert(m.as_str())) {
                    return Err(Error::DuplicateIdentifier {
                        kind: "member",
                        id: m.clone(),
                    });
                }
                CrispSubset::from_members(universe.clone(), members.iter().map(String::as_str))
                    .map(TargetSet::Crisp)
            }
        }
    }
}

pub fn parse_set(text: &str, universe: &Arc<Universe>) -> Result<TargetSet> {
    let doc: SetDocument = serde_json::from_str(text).map_err(|e| json_error("set document", e))?;
    doc.resolve(universe)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"{
  "universe": ["x", "y", "z"],
  "parameters": ["e1", "e2", "e3"],
  "beta": "[0.5,0.6]",
  "membership": {
    "e1": {"x": "[0.6,0.7]", "y": "[0.5,0.6]", "z": "[0.3,0.6]"},
    "e2": {"x": "[0.5,0.8]", "y": "[0.4,0.9]", "z": "[0.7,0.8]"},
    "e3": {"x": "[0.2,0.3]", "y": "[0.6,0.7]", "z": "[0.5,11/20]"}
  }
}"#;

    #[test]
    fn json_round_trip_is_canonical() {
        let space = parse_space(SAMPLE, Format::Json, &CoveringPolicy::Strict, None).unwrap();
        let text = space_to_json(&space);
        let again = parse_space(&text, Format::Json, &CoveringPolicy::Strict, None).unwrap();
        assert_eq!(again, space);
        assert_eq!(space_to_json(&again), text);
        assert!(text.contains("\"[0.5,0.55]\""));
        assert!(text.contains("\"schema_version\": 1"));
    }

    #[test]
    fn csv_round_trip() {
        let space = parse_space(SAMPLE, Format::Json, &CoveringPolicy::Strict, None).unwrap();
        let csv = mapping_to_csv(space.mapping());
        assert!(csv.starts_with("object,e1,e2,e3\nx,\"[0.6,0.7]\""));
        let again = parse_space(
            &csv,
            Format::Csv,
            &CoveringPolicy::Strict,
            Some(space.beta()),
        )
        .unwrap();
        assert_eq!(again, space);
        assert!(matches!(
            parse_space(&csv, Format::Csv, &CoveringPolicy::Strict, None),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn missing_cell_is_named() {
        let text = SAMPLE.replace(r#", "z": "[0.7,0.8]""#, "");
        let err = parse_space(&text, Format::Json, &CoveringPolicy::Strict, None).unwrap_err();
        assert_eq!(
            err,
            Error::IncompleteTable {
                parameter: "e2".into(),
                object: "z".into()
            }
        );
        let csv = "object,e1,e2\nx,\"[0,1]\",\"[0,1]\"\nz,\"[0,1]\",\n";
        let err = parse_csv_mapping(csv).unwrap_err();
        assert_eq!(
            err,
            Error::IncompleteTable {
                parameter: "e2".into(),
                object: "z".into()
            }
        );
    }

    #[test]
    fn reversed_literal_is_a_positioned_syntax_error() {
        let text = SAMPLE.replace("[0.2,0.3]", "[0.7,0.3]");
        match parse_space(&text, Format::Json, &CoveringPolicy::Strict, None) {
            Err(Error::Syntax { context, .. }) => assert!(context.contains("line 8"), "{context}"),
            other => panic!("expected a syntax error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let text = SAMPLE.replace("\"beta\"", "\"gamma\": 1, \"beta\"");
        assert!(matches!(
            parse_space(&text, Format::Json, &CoveringPolicy::Strict, None),
            Err(Error::Syntax { .. })
        ));
        let text = SAMPLE.replace("\"e3\": {", "\"e4\": {");
        assert_eq!(
            parse_space(&text, Format::Json, &CoveringPolicy::Strict, None).unwrap_err(),
            Error::UnknownParameter("e4".into())
        );
        let text = SAMPLE.replace(
            "\"z\": \"[0.3,0.6]\"",
            "\"z\": \"[0.3,0.6]\", \"w\": \"[0,0]\"",
        );
        assert_eq!(
            parse_space(&text, Format::Json, &CoveringPolicy::Strict, None).unwrap_err(),
            Error::UnknownObject("w".into())
        );
    }

    #[test]
    fn strict_policy_reports_failures() {
        let text = SAMPLE.replace("\"beta\": \"[0.5,0.6]\"", "\"beta\": \"[0.85,0.95]\"");
        match parse_space(&text, Format::Json, &CoveringPolicy::Strict, None) {
            Err(Error::NotACovering(report)) => assert_eq!(report.failures.len(), 3),
            other => panic!("expected NotACovering, got {other:?}"),
        }
        let repaired = parse_space(
            &text,
            Format::Json,
            &CoveringPolicy::Repair("e3".into()),
            None,
        )
        .unwrap();
        assert_eq!(
            repaired
                .mapping()
                .set("e3")
                .unwrap()
                .grade("z")
                .unwrap()
                .to_string(),
            "[0.85,0.95]"
        );
    }

    #[test]
    fn set_documents() {
        let u = Universe::new(["x", "y"]).unwrap();
        let fuzzy = r#"{"mode": "fuzzy", "grades": {"x": "[0,1]", "y": "1/2"}}"#;
        assert!(matches!(parse_set(fuzzy, &u), Err(Error::Syntax { .. })));
        let fuzzy = r#"{"mode": "fuzzy", "grades": {"y": "[1/2,1]", "x": "[0,1]"}}"#;
        match parse_set(fuzzy, &u).unwrap() {
            TargetSet::Fuzzy(s) => assert_eq!(s.grade("y").unwrap().to_string(), "[0.5,1]"),
            other => panic!("{other:?}"),
        }
        let partial = r#"{"mode": "fuzzy", "grades": {"x": "[0,1]"}}"#;
        assert_eq!(
            parse_set(partial, &u).unwrap_err(),
            Error::MissingGrade("y".into())
        );
        let crisp = r#"{"mode": "crisp", "members": ["y"]}"#;
        match parse_set(crisp, &u).unwrap() {
            TargetSet::Crisp(s) => assert_eq!(s.members().collect::<Vec<_>>(), ["y"]),
            other => panic!("{other:?}"),
        }
        let bad = r#"{"mode": "crisp", "members": ["q"]}"#;
        assert_eq!(
            parse_set(bad, &u).unwrap_err(),
            Error::UnknownObject("q".into())
        );
    }

    #[test]
    fn ivfs_document_round_trip() {
        let u = Universe::new(["a", "b"]).unwrap();
        let set =
            IVFuzzySet::new(u, vec!["[0.1,0.2]".parse().unwrap(), IntervalValue::TOP]).unwrap();
        let doc = IvfsDocument::from_set(&set);
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(
            text,
            r#"{"universe":["a","b"],"grades":{"a":"[0.1,0.2]","b":"[1,1]"}}"#
        );
        let back: IvfsDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_set().unwrap(), set);
    }
}
