//! Instance specs and the generator.

use std::path::PathBuf;

use crate::cat::{FinCat, FinSetCat};
use crate::dep::{GlobalSectionsDep, TableDep};
use crate::depsigma::{CanonicalPr2, TableDepSigma};
use crate::error::{Error, Result};
use crate::fam::{ConstantFam, CosliceFam, FamStructure, TableFam};
use crate::ring::{ring_sigma, RingTables};

use super::document::{deserialize, FinSetModel, Model, StructureDocument, TableModel};
use super::runner::{applicable, run_suites, Suite};
use super::{discrete, monoid, poset};

/// Largest finite-set window the generator accepts.
pub const MAX_FINSET_OBJECT: usize = 4;
/// Largest fibre cap the generator accepts.
pub const MAX_FIBER_CAP: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FamChoice {
    None,
    #[default]
    Coslice,
    Constant,
}

impl FamChoice {
    pub fn parse(s: &str) -> Result<FamChoice> {
        match s {
            "none" => Ok(FamChoice::None),
            "coslice" => Ok(FamChoice::Coslice),
            "constant" => Ok(FamChoice::Constant),
            other => Err(Error::InvalidSpec(format!("unknown fam construction {other:?}; expected none, coslice or constant"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceSpec {
    FinSet { max_object_size: usize, fiber_cap: usize },
    Ring { tables: RingTables },
    Discrete { objects: usize, fam: FamChoice },
    /// `relation` lists pairs `x ≤ y`; it is closed reflexively and transitively.
    Poset { objects: usize, relation: Vec<(usize, usize)>, fam: FamChoice },
    /// `table[g][f] = g∘f`.
    Monoid { table: Vec<Vec<usize>>, fam: FamChoice },
    File { path: PathBuf },
}

impl InstanceSpec {
    pub fn finset(max_object_size: usize, fiber_cap: usize) -> Self {
        InstanceSpec::FinSet {
            max_object_size,
            fiber_cap,
        }
    }

    pub fn ring(modulus: usize) -> Result<Self> {
        Ok(InstanceSpec::Ring {
            tables: RingTables::modulo(modulus).map_err(not_a_ring)?,
        })
    }

    /// The chain `0 ≤ 1 ≤ … ≤ n-1`.
    pub fn chain(n: usize, fam: FamChoice) -> Self {
        InstanceSpec::Poset {
            objects: n,
            relation: (1..n).map(|i| (i - 1, i)).collect(),
            fam,
        }
    }
}

fn not_a_ring(e: Error) -> Error {
    match e {
        Error::NotARing(msg) => Error::InvalidSpec(format!("ring tables: {msg}")),
        other => other,
    }
}

/// Builds the document and runs the layer suites on it before returning.
pub fn generate(spec: &InstanceSpec, budget: usize) -> Result<StructureDocument> {
    let model = build(spec)?;
    let suites: Vec<Suite> = Suite::LAYERS.into_iter().filter(|s| applicable(&model, *s).is_ok()).collect();
    let report = run_suites(&model, Some(&suites), budget)?;
    if !report.passed() {
        let failed: Vec<String> = report
            .reports
            .iter()
            .flat_map(|r| r.failed_laws().into_iter().map(move |l| format!("{}: {l}", r.suite)))
            .collect();
        return Err(Error::InvalidSpec(format!("generated instance fails {}", failed.join(", "))));
    }
    Ok(model.to_document())
}

/// Builds the model without the self-check.
pub fn build(spec: &InstanceSpec) -> Result<Model> {
    match spec {
        InstanceSpec::FinSet {
            max_object_size,
            fiber_cap,
        } => {
            if *max_object_size > MAX_FINSET_OBJECT || *fiber_cap > MAX_FIBER_CAP {
                return Err(Error::InvalidSpec(format!(
                    "finset takes max_object_size ≤ {MAX_FINSET_OBJECT} and fiber_cap ≤ {MAX_FIBER_CAP}"
                )));
            }
            Ok(Model::FinSet(FinSetModel {
                cat: FinSetCat::new(*max_object_size),
                fiber_cap: Some(*fiber_cap),
                sigma: true,
                dep: true,
                depsigma: true,
            }))
        }
        InstanceSpec::Ring { tables } => {
            let tables = tables.clone().validated().map_err(not_a_ring)?;
            let sigma = ring_sigma(&tables)?;
            let ds = TableDepSigma::tabulate(&CanonicalPr2::new(sigma.clone()))?;
            let mut m = TableModel::category(sigma.fam.base().clone());
            m.fam = Some(sigma.fam.clone());
            m.dep = Some(TableDep::tabulate(&GlobalSectionsDep::new(sigma.clone()))?);
            m.sigma = Some(sigma);
            m.depsigma = Some(ds);
            Ok(Model::Table(m))
        }
        InstanceSpec::Discrete { objects, fam } => with_fam(discrete(*objects)?, *fam),
        InstanceSpec::Poset { objects, relation, fam } => with_fam(poset(*objects, relation)?, *fam),
        InstanceSpec::Monoid { table, fam } => with_fam(monoid(table)?, *fam),
        InstanceSpec::File { path } => {
            let bytes = std::fs::read(path)?;
            Model::from_document(&deserialize(&bytes)?)
        }
    }
}

fn with_fam(cat: FinCat, fam: FamChoice) -> Result<Model> {
    let mut m = TableModel::category(cat.clone());
    m.fam = match fam {
        FamChoice::None => None,
        FamChoice::Coslice => Some(TableFam::tabulate(&CosliceFam::new(cat))?),
        FamChoice::Constant => Some(TableFam::tabulate(&ConstantFam::new(cat))?),
    };
    Ok(Model::Table(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{terminal, Category};
    use crate::fam::FamStructure;

    fn table(doc: &StructureDocument) -> TableModel {
        match Model::from_document(doc).unwrap() {
            Model::Table(m) => m,
            Model::FinSet(_) => panic!("expected tables"),
        }
    }

    #[test]
    fn ring_documents() {
        let m = table(&generate(&InstanceSpec::ring(4).unwrap(), 2).unwrap());
        assert_eq!((m.cat.num_objects(), m.cat.num_arrows()), (1, 4));
        assert_eq!(m.fam.unwrap().num_families(), 16);
        let trivial = table(&generate(&InstanceSpec::ring(1).unwrap(), 2).unwrap());
        assert!(terminal(&trivial.cat).is_some());
        let bad = RingTables {
            add: vec![vec![0, 1], vec![1, 1]],
            mul: vec![vec![0, 0], vec![0, 1]],
        };
        assert!(matches!(generate(&InstanceSpec::Ring { tables: bad }, 2), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn finset_document() {
        let doc = generate(&InstanceSpec::finset(3, 2), 2).unwrap();
        let Model::FinSet(m) = Model::from_document(&doc).unwrap() else {
            panic!("expected finset");
        };
        let objects = m.cat.objects();
        let arrows: usize = objects.iter().flat_map(|a| objects.iter().map(move |b| (a, b))).map(|(a, b)| m.cat.hom(a, b).unwrap().len()).sum();
        assert_eq!((objects.len(), arrows), (4, 60));
        assert!(matches!(build(&InstanceSpec::finset(9, 2)), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn small_categories_with_families() {
        let m = table(&generate(&InstanceSpec::chain(3, FamChoice::Coslice), 2).unwrap());
        let fam = m.fam.unwrap();
        // Arrows out of the bottom of the chain.
        assert_eq!(fam.families(&crate::cat::ObjectId(0)).unwrap().len(), 3);
        let m = table(&generate(&InstanceSpec::Discrete { objects: 2, fam: FamChoice::Constant }, 2).unwrap());
        assert_eq!(m.fam.unwrap().num_families(), 4);
        let z2 = vec![vec![0, 1], vec![1, 0]];
        let m = table(&generate(&InstanceSpec::Monoid { table: z2, fam: FamChoice::Coslice }, 2).unwrap());
        assert_eq!(m.cat.num_arrows(), 2);
    }
}
