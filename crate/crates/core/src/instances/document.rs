//! The JSON structure document: one section per layer, each either a
//! finite-set generator or explicit tables keyed by numeric identifiers.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cat::{ArrowData, ArrowId, FinCat, FinSetCat, ObjectId};
use crate::dep::{DepArrowId, DepStructure, TableDep};
use crate::depsigma::TableDepSigma;
use crate::error::{Error, Result};
use crate::fam::{FamArrowId, FamStructure, TableFam};
use crate::sigma::TableSigma;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDocument {
    pub version: u32,
    pub category: CategorySection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fam: Option<FamSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<SigmaSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dep: Option<DepSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depsigma: Option<DepSigmaSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CategorySection {
    Finset {
        max_object_size: usize,
    },
    Table {
        objects: Vec<ObjectEntry>,
        arrows: Vec<ArrowEntry>,
        /// `[g, f, g∘f]`.
        composition: Vec<[u32; 3]>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectEntry {
    pub id: u32,
    pub name: String,
    pub identity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowEntry {
    pub id: u32,
    pub name: String,
    pub dom: u32,
    pub cod: u32,
}

/// A named element living over an object (families) or a family
/// (dependent arrows).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OverEntry {
    pub id: u32,
    pub name: String,
    pub over: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FamSection {
    Finset {
        fiber_cap: usize,
    },
    Table {
        families: Vec<OverEntry>,
        /// `[λ, f, λ∘f]`.
        restriction: Vec<[u32; 3]>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SigmaSection {
    Finset,
    Table {
        /// `[λ, Σλ]`.
        objects: Vec<[u32; 2]>,
        /// `[λ, pr1]`.
        projections: Vec<[u32; 2]>,
        /// `[λ, f, Σ_λ f]`.
        arrows: Vec<[u32; 3]>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DepSection {
    Finset,
    Table {
        arrows: Vec<OverEntry>,
        /// `[Φ, f, Φ(f)]`.
        application: Vec<[u32; 3]>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DepSigmaSection {
    Finset,
    Table {
        /// `[λ, pr2(λ)]`.
        pr2: Vec<[u32; 2]>,
    },
}

/// The structures a document describes.
#[derive(Debug, Clone)]
pub enum Model {
    FinSet(FinSetModel),
    Table(TableModel),
}

/// Finite sets up to `max_object`, with families of fibre size up to
/// `fiber_cap`. Sigma, dep and (dep,Σ) layers are the disjoint-union ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinSetModel {
    pub cat: FinSetCat,
    pub fiber_cap: Option<usize>,
    pub sigma: bool,
    pub dep: bool,
    pub depsigma: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableModel {
    pub cat: FinCat,
    pub fam: Option<TableFam>,
    pub sigma: Option<TableSigma>,
    pub dep: Option<TableDep>,
    pub depsigma: Option<TableDepSigma>,
}

impl TableModel {
    pub fn category(cat: FinCat) -> Self {
        TableModel {
            cat,
            fam: None,
            sigma: None,
            dep: None,
            depsigma: None,
        }
    }
}

fn check_ids(what: &str, ids: impl Iterator<Item = u32>) -> Result<()> {
    for (pos, id) in ids.enumerate() {
        if id as usize != pos {
            return Err(Error::Integrity(format!("{what} ids must be 0, 1, 2, … in order; found {id} at position {pos}")));
        }
    }
    Ok(())
}

fn need<T>(layer: Option<T>, what: &str, below: &str) -> Result<T> {
    layer.ok_or_else(|| Error::LayerMissing(format!("{below} layer (required by the {what} layer)")))
}

impl Model {
    pub fn from_document(doc: &StructureDocument) -> Result<Model> {
        if doc.version != FORMAT_VERSION {
            return Err(Error::InvalidSpec(format!(
                "unsupported document version {} (expected {FORMAT_VERSION})",
                doc.version
            )));
        }
        match &doc.category {
            CategorySection::Finset { max_object_size } => finset_model(doc, *max_object_size).map(Model::FinSet),
            CategorySection::Table {
                objects,
                arrows,
                composition,
            } => table_model(doc, objects, arrows, composition).map(Model::Table),
        }
    }

    pub fn to_document(&self) -> StructureDocument {
        match self {
            Model::FinSet(m) => StructureDocument {
                version: FORMAT_VERSION,
                category: CategorySection::Finset {
                    max_object_size: m.cat.max_object,
                },
                fam: m.fiber_cap.map(|fiber_cap| FamSection::Finset { fiber_cap }),
                sigma: m.sigma.then_some(SigmaSection::Finset),
                dep: m.dep.then_some(DepSection::Finset),
                depsigma: m.depsigma.then_some(DepSigmaSection::Finset),
            },
            Model::Table(m) => table_document(m),
        }
    }

    /// Layer names present, bottom up.
    pub fn layers(&self) -> Vec<&'static str> {
        let (fam, sigma, dep, depsigma) = match self {
            Model::FinSet(m) => (m.fiber_cap.is_some(), m.sigma, m.dep, m.depsigma),
            Model::Table(m) => (m.fam.is_some(), m.sigma.is_some(), m.dep.is_some(), m.depsigma.is_some()),
        };
        let mut out = vec!["category"];
        for (present, name) in [(fam, "fam"), (sigma, "sigma"), (dep, "dep"), (depsigma, "depsigma")] {
            if present {
                out.push(name);
            }
        }
        out
    }
}

fn finset_model(doc: &StructureDocument, max_object_size: usize) -> Result<FinSetModel> {
    let fiber_cap = match &doc.fam {
        None => None,
        Some(FamSection::Finset { fiber_cap }) => Some(*fiber_cap),
        Some(FamSection::Table { .. }) => {
            return Err(Error::InvalidSpec("a finset category takes a finset fam layer".into()));
        }
    };
    let finset = |present: bool, what: &str| -> Result<bool> {
        if present && fiber_cap.is_none() {
            return Err(Error::LayerMissing(format!("fam layer (required by the {what} layer)")));
        }
        Ok(present)
    };
    let sigma = match &doc.sigma {
        None => false,
        Some(SigmaSection::Finset) => finset(true, "sigma")?,
        Some(SigmaSection::Table { .. }) => return Err(Error::InvalidSpec("a finset fam layer takes a finset sigma layer".into())),
    };
    let dep = match &doc.dep {
        None => false,
        Some(DepSection::Finset) => finset(true, "dep")?,
        Some(DepSection::Table { .. }) => return Err(Error::InvalidSpec("a finset fam layer takes a finset dep layer".into())),
    };
    let depsigma = match &doc.depsigma {
        None => false,
        Some(DepSigmaSection::Finset) => {
            if !sigma || !dep {
                return Err(Error::LayerMissing("sigma and dep layers (required by the depsigma layer)".into()));
            }
            true
        }
        Some(DepSigmaSection::Table { .. }) => {
            return Err(Error::InvalidSpec("a finset fam layer takes a finset depsigma layer".into()))
        }
    };
    Ok(FinSetModel {
        cat: FinSetCat::new(max_object_size),
        fiber_cap,
        sigma,
        dep,
        depsigma,
    })
}

fn table_model(
    doc: &StructureDocument,
    objects: &[ObjectEntry],
    arrows: &[ArrowEntry],
    composition: &[[u32; 3]],
) -> Result<TableModel> {
    check_ids("object", objects.iter().map(|o| o.id))?;
    check_ids("arrow", arrows.iter().map(|a| a.id))?;
    let cat = FinCat::from_tables(
        objects.iter().map(|o| o.name.clone()).collect(),
        arrows
            .iter()
            .map(|a| ArrowData {
                name: a.name.clone(),
                dom: ObjectId(a.dom),
                cod: ObjectId(a.cod),
            })
            .collect(),
        objects.iter().map(|o| ArrowId(o.identity)).collect(),
        composition.iter().map(|&[g, f, h]| (ArrowId(g), ArrowId(f), ArrowId(h))).collect(),
    )?;
    let mut model = TableModel::category(cat.clone());
    let fam = match &doc.fam {
        None => None,
        Some(FamSection::Finset { .. }) => {
            return Err(Error::InvalidSpec("a finset fam layer needs a finset category".into()));
        }
        Some(FamSection::Table { families, restriction }) => {
            check_ids("family", families.iter().map(|f| f.id))?;
            Some(TableFam::new(
                cat,
                families.iter().map(|f| (f.name.clone(), ObjectId(f.over))).collect(),
                restriction
                    .iter()
                    .map(|&[l, f, m]| (FamArrowId(l), ArrowId(f), FamArrowId(m)))
                    .collect(),
            )?)
        }
    };
    model.sigma = match &doc.sigma {
        None => None,
        Some(SigmaSection::Finset) => return Err(Error::InvalidSpec("a finset sigma layer needs a finset category".into())),
        Some(SigmaSection::Table {
            objects,
            projections,
            arrows,
        }) => {
            let fam = need(fam.clone(), "sigma", "fam")?;
            let n = fam.num_families();
            let per_family = |what: &str, rows: &[[u32; 2]]| -> Result<Vec<u32>> {
                check_ids(what, rows.iter().map(|r| r[0]))?;
                if rows.len() != n {
                    return Err(Error::Integrity(format!("{what} table lists {} rows for {n} families", rows.len())));
                }
                Ok(rows.iter().map(|r| r[1]).collect())
            };
            Some(TableSigma::new(
                fam,
                per_family("sigma object", objects)?.into_iter().map(ObjectId).collect(),
                per_family("projection", projections)?.into_iter().map(ArrowId).collect(),
                arrows
                    .iter()
                    .map(|&[l, f, t]| (FamArrowId(l), ArrowId(f), ArrowId(t)))
                    .collect(),
            )?)
        }
    };
    model.dep = match &doc.dep {
        None => None,
        Some(DepSection::Finset) => return Err(Error::InvalidSpec("a finset dep layer needs a finset category".into())),
        Some(DepSection::Table { arrows, application }) => {
            let fam = need(fam.clone(), "dep", "fam")?;
            check_ids("dependent arrow", arrows.iter().map(|a| a.id))?;
            Some(TableDep::new(
                fam,
                arrows.iter().map(|a| (a.name.clone(), FamArrowId(a.over))).collect(),
                application
                    .iter()
                    .map(|&[p, f, q]| (DepArrowId(p), ArrowId(f), DepArrowId(q)))
                    .collect(),
            )?)
        }
    };
    model.depsigma = match &doc.depsigma {
        None => None,
        Some(DepSigmaSection::Finset) => {
            return Err(Error::InvalidSpec("a finset depsigma layer needs a finset category".into()))
        }
        Some(DepSigmaSection::Table { pr2 }) => {
            let sigma = need(model.sigma.clone(), "depsigma", "sigma")?;
            let dep = need(model.dep.clone(), "depsigma", "dep")?;
            check_ids("pr2", pr2.iter().map(|r| r[0]))?;
            Some(TableDepSigma::new(sigma, dep, pr2.iter().map(|r| DepArrowId(r[1])).collect())?)
        }
    };
    model.fam = fam;
    Ok(model)
}

fn table_document(m: &TableModel) -> StructureDocument {
    let cat = &m.cat;
    let category = CategorySection::Table {
        objects: cat
            .object_names()
            .iter()
            .zip(cat.identities())
            .enumerate()
            .map(|(i, (name, id))| ObjectEntry {
                id: i as u32,
                name: name.clone(),
                identity: id.0,
            })
            .collect(),
        arrows: cat
            .arrow_data()
            .iter()
            .enumerate()
            .map(|(i, a)| ArrowEntry {
                id: i as u32,
                name: a.name.clone(),
                dom: a.dom.0,
                cod: a.cod.0,
            })
            .collect(),
        composition: cat.composition_triples().iter().map(|(g, f, h)| [g.0, f.0, h.0]).collect(),
    };
    let fam = m.fam.as_ref().map(|fam| FamSection::Table {
        families: fam
            .family_ids()
            .map(|l| OverEntry {
                id: l.0,
                name: fam.name(l).to_string(),
                over: fam.fam_object(&l).0,
            })
            .collect(),
        restriction: fam.restriction_triples().iter().map(|(l, f, r)| [l.0, f.0, r.0]).collect(),
    });
    let sigma = m.sigma.as_ref().map(|s| SigmaSection::Table {
        objects: s.sigma_objects().iter().enumerate().map(|(i, o)| [i as u32, o.0]).collect(),
        projections: s.projections().iter().enumerate().map(|(i, p)| [i as u32, p.0]).collect(),
        arrows: s.sigma_arrow_triples().iter().map(|(l, f, t)| [l.0, f.0, t.0]).collect(),
    });
    let dep = m.dep.as_ref().map(|d| DepSection::Table {
        arrows: d
            .dep_ids()
            .map(|p| OverEntry {
                id: p.0,
                name: d.name(p).to_string(),
                over: d.dep_family(&p).0,
            })
            .collect(),
        application: d.application_triples().iter().map(|(p, f, q)| [p.0, f.0, q.0]).collect(),
    });
    let depsigma = m.depsigma.as_ref().map(|ds| DepSigmaSection::Table {
        pr2: ds.pr2_table().iter().enumerate().map(|(i, p)| [i as u32, p.0]).collect(),
    });
    StructureDocument {
        version: FORMAT_VERSION,
        category,
        fam,
        sigma,
        dep,
        depsigma,
    }
}

/// Canonical text: keys sorted, two-space indentation, arrays of scalars
/// on one line, trailing newline.
pub fn serialize(doc: &StructureDocument) -> String {
    let value = serde_json::to_value(doc).expect("documents are plain data");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

/// Parses, then checks version and referential integrity.
pub fn deserialize(bytes: &[u8]) -> Result<StructureDocument> {
    let doc: StructureDocument = serde_json::from_slice(bytes).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Model::from_document(&doc)?;
    Ok(doc)
}

pub(crate) fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize, out: &mut String| out.extend(std::iter::repeat_n(' ', n));
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (k, (key, val)) in map.iter().enumerate() {
                pad(indent + 2, out);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(val, indent + 2, out);
                if k + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            pad(indent, out);
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                pad(indent + 2, out);
                write_value(item, indent + 2, out);
                if k + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            pad(indent, out);
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ring_sigma, RingTables};

    fn ring_model() -> TableModel {
        let sigma = ring_sigma(&RingTables::modulo(2).unwrap()).unwrap();
        let mut m = TableModel::category(sigma.fam.base().clone());
        m.fam = Some(sigma.fam.clone());
        m.sigma = Some(sigma);
        m
    }

    #[test]
    fn table_round_trip_is_bit_exact() {
        let doc = Model::Table(ring_model()).to_document();
        let text = serialize(&doc);
        let back = deserialize(text.as_bytes()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(serialize(&back), text);
        assert!(text.contains("\"composition\": [\n      [0, 0, 0],"));
    }

    #[test]
    fn minimal_one_object_document() {
        let text = r#"{
  "version": 1,
  "category": {
    "kind": "table",
    "objects": [{"id": 0, "name": "*", "identity": 0}],
    "arrows": [{"id": 0, "name": "1", "dom": 0, "cod": 0}],
    "composition": [[0, 0, 0]]
  }
}"#;
        let doc = deserialize(text.as_bytes()).unwrap();
        match Model::from_document(&doc).unwrap() {
            Model::Table(m) => assert_eq!(m.cat.num_arrows(), 1),
            Model::FinSet(_) => panic!("expected tables"),
        }
    }

    #[test]
    fn truncated_and_dangling() {
        let text = serialize(&Model::Table(ring_model()).to_document());
        let cut = &text[..text.len() / 2];
        assert!(matches!(deserialize(cut.as_bytes()), Err(Error::Parse { .. })));
        let dangling = text.replacen("\"identity\": 0", "\"identity\": 9", 1);
        assert!(matches!(deserialize(dangling.as_bytes()), Err(Error::Integrity(_))));
        let version = text.replacen("\"version\": 1", "\"version\": 7", 1);
        assert!(matches!(deserialize(version.as_bytes()), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn finset_layers_need_their_base() {
        let doc = StructureDocument {
            version: FORMAT_VERSION,
            category: CategorySection::Finset { max_object_size: 2 },
            fam: None,
            sigma: Some(SigmaSection::Finset),
            dep: None,
            depsigma: None,
        };
        assert!(matches!(Model::from_document(&doc), Err(Error::LayerMissing(_))));
    }
}
