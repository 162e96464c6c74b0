//! JSON documents for groups and G-sets.
//!
//! A group is either a builtin name (`"S3"`, `"C2xC2"`, ...) or
//! `{"degree": n, "generators": [[...], ...], "name": "..."}` with permutations
//! in image notation. A G-set is
//! `{"group": <group>, "points": n, "action": [[...], ...]}` with one point
//! permutation per group generator, or with `"action"` one of `"point"`,
//! `"regular"`, `"natural"`, `"trivial"`.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{build_group, parse_builtin, Group};
use crate::gsets::GSet;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupDoc {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSource {
    Builtin(String),
    Permutations(GroupDoc),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ActionSpec {
    Named(String),
    Permutations(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GSetDoc {
    pub group: GroupSource,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
    pub action: ActionSpec,
}

impl GroupSource {
    pub fn build(&self) -> Result<Group> {
        match self {
            GroupSource::Builtin(name) => parse_builtin(name),
            GroupSource::Permutations(doc) => {
                let g = build_group(&doc.generators, doc.degree)?;
                Ok(match &doc.name {
                    Some(n) => g.with_label(n.clone()),
                    None => g,
                })
            }
        }
    }
}

impl GSetDoc {
    pub fn build(&self) -> Result<GSet> {
        let group = Arc::new(self.group.build()?);
        match &self.action {
            ActionSpec::Named(kind) => match kind.as_str() {
                "point" => Ok(GSet::point(group)),
                "regular" => Ok(GSet::regular(group)),
                "natural" => GSet::natural(group),
                "trivial" => Ok(GSet::trivial(group, self.points.unwrap_or(1))),
                other => Err(Error::Parse(format!("unknown named action '{other}'"))),
            },
            ActionSpec::Permutations(perms) => match self.points {
                Some(n) => GSet::build_sized(group, n, perms),
                None if perms.is_empty() => Err(Error::Parse("\"points\" is required when there are no generators".into())),
                None => GSet::build(group, perms),
            },
        }
    }
}

/// Reads a group from a file, or parses `src` as a builtin name when no such
/// file exists.
pub fn load_group(src: &str) -> Result<Group> {
    if Path::new(src).is_file() {
        let text = read(Path::new(src))?;
        let doc: GroupSource = serde_json::from_str(&text)?;
        return doc.build();
    }
    parse_builtin(src)
}

pub fn parse_gset(text: &str) -> Result<GSet> {
    let doc: GSetDoc = serde_json::from_str(text)?;
    doc.build()
}

pub fn load_gset(path: impl AsRef<Path>) -> Result<GSet> {
    parse_gset(&read(path.as_ref())?)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_and_permutation_groups() {
        let g: GroupSource = serde_json::from_str(r#""S3""#).unwrap();
        assert_eq!(g.build().unwrap().order(), 6);
        let g: GroupSource = serde_json::from_str(r#"{"degree": 4, "generators": [[1,0,2,3],[0,1,3,2]]}"#).unwrap();
        assert_eq!(g.build().unwrap().order(), 4);
    }

    #[test]
    fn gset_documents() {
        let x = parse_gset(r#"{"group": "S3", "action": "natural"}"#).unwrap();
        assert_eq!(x.size(), 3);
        let x = parse_gset(r#"{"group": "Z2", "action": [[1, 0]]}"#).unwrap();
        assert_eq!(x.quotient_size(), 1);
        let x = parse_gset(r#"{"group": "e", "points": 2, "action": []}"#).unwrap();
        assert_eq!(x.quotient_size(), 2);
        assert!(parse_gset(r#"{"group": "Z3", "action": [[1, 0]]}"#).is_err());
        assert!(parse_gset(r#"{"group": "Z2", "action": "sideways"}"#).is_err());
    }
}
