//! Dependent arrows given by explicit tables over a [`TableFam`].

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{check_apply_typing, DepStructure};
use crate::cat::{ArrowId, Category};
use crate::error::{Error, Result};
use crate::fam::{FamArrowId, FamStructure, TableFam};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DepArrowId(pub u32);

impl DepArrowId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Named dependent arrows, each over a family, and a total application table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDep {
    pub fam: TableFam,
    names: Vec<String>,
    over: Vec<FamArrowId>,
    by_family: Vec<Vec<DepArrowId>>,
    apply: HashMap<(DepArrowId, ArrowId), DepArrowId>,
}

impl TableDep {
    /// `apply` holds `(Φ, f, Φ(f))`; every `Φ` needs one entry per arrow into
    /// the object of its family. Typing is left to the law check.
    pub fn new(
        fam: TableFam,
        deps: Vec<(String, FamArrowId)>,
        apply: Vec<(DepArrowId, ArrowId, DepArrowId)>,
    ) -> Result<TableDep> {
        let mut by_family = vec![Vec::new(); fam.num_families()];
        let mut names = Vec::with_capacity(deps.len());
        let mut over = Vec::with_capacity(deps.len());
        for (i, (name, lam)) in deps.into_iter().enumerate() {
            fam.check_family(lam)
                .map_err(|_| Error::Integrity(format!("dependent arrow {name} lives over missing family {}", lam.0)))?;
            by_family[lam.index()].push(DepArrowId(i as u32));
            names.push(name);
            over.push(lam);
        }
        let n = names.len();
        let cat = fam.base();
        let mut table = HashMap::with_capacity(apply.len());
        for (phi, f, psi) in apply {
            if phi.index() >= n || psi.index() >= n {
                return Err(Error::Integrity(format!(
                    "application entry references dependent arrow {}",
                    phi.0.max(psi.0)
                )));
            }
            cat.arrow(f)
                .map_err(|_| Error::Integrity(format!("application entry references arrow {}", f.0)))?;
            if table.insert((phi, f), psi).is_some() {
                return Err(Error::Integrity(format!(
                    "duplicate application entry for {}({})",
                    names[phi.index()],
                    cat.arrow_label(&f)
                )));
            }
        }
        for (i, lam) in over.iter().enumerate() {
            let a = fam.fam_object(lam);
            for b in cat.objects() {
                for f in cat.hom(&b, &a)? {
                    if !table.contains_key(&(DepArrowId(i as u32), f)) {
                        return Err(Error::Integrity(format!(
                            "application table has no entry for {}({})",
                            names[i],
                            cat.arrow_label(&f)
                        )));
                    }
                }
            }
        }
        Ok(TableDep {
            fam,
            names,
            over,
            by_family,
            apply: table,
        })
    }

    /// Tabulates any dep structure over the same table family. Fails with
    /// `BudgetExceeded` if an application leaves the enumerated sets.
    pub fn tabulate<D: DepStructure<Fams = TableFam>>(dep: &D) -> Result<TableDep> {
        let fam = dep.fam().clone();
        let mut all = Vec::new();
        let mut index = HashMap::new();
        for lam in fam.family_ids() {
            for phi in dep.dep_arrows(&lam)? {
                index.insert(phi.clone(), DepArrowId(all.len() as u32));
                all.push(phi);
            }
        }
        let cat = fam.base();
        let mut apply = Vec::new();
        for (i, phi) in all.iter().enumerate() {
            let a = fam.fam_object(&dep.dep_family(phi));
            for b in cat.objects() {
                for f in cat.hom(&b, &a)? {
                    let r = dep.apply(phi, &f)?;
                    let j = index.get(&r).ok_or_else(|| {
                        Error::BudgetExceeded(format!("{} is outside the enumerated dependent arrows", dep.dep_label(&r)))
                    })?;
                    apply.push((DepArrowId(i as u32), f, *j));
                }
            }
        }
        let deps = all.iter().map(|p| (dep.dep_label(p), dep.dep_family(p))).collect();
        TableDep::new(fam, deps, apply)
    }

    pub fn num_deps(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, phi: DepArrowId) -> &str {
        &self.names[phi.index()]
    }

    pub fn dep_named(&self, name: &str) -> Option<DepArrowId> {
        self.names.iter().position(|n| n == name).map(|i| DepArrowId(i as u32))
    }

    pub fn dep_ids(&self) -> impl Iterator<Item = DepArrowId> {
        (0..self.names.len() as u32).map(DepArrowId)
    }

    /// `(Φ, f, Φ(f))` sorted.
    pub fn application_triples(&self) -> Vec<(DepArrowId, ArrowId, DepArrowId)> {
        let mut out: Vec<_> = self.apply.iter().map(|(&(p, f), &q)| (p, f, q)).collect();
        out.sort();
        out
    }

    pub fn with_apply(mut self, phi: DepArrowId, f: ArrowId, psi: DepArrowId) -> Self {
        self.apply.insert((phi, f), psi);
        self
    }

    pub fn check_dep(&self, phi: DepArrowId) -> Result<()> {
        if phi.index() < self.names.len() {
            Ok(())
        } else {
            Err(Error::Integrity(format!("unknown dependent arrow {}", phi.0)))
        }
    }
}

impl DepStructure for TableDep {
    type Fams = TableFam;
    type Dep = DepArrowId;

    fn fam(&self) -> &TableFam {
        &self.fam
    }

    fn dep_arrows(&self, lam: &FamArrowId) -> Result<Vec<DepArrowId>> {
        self.fam.check_family(*lam)?;
        Ok(self.by_family[lam.index()].clone())
    }

    fn dep_family(&self, phi: &DepArrowId) -> FamArrowId {
        self.over[phi.index()]
    }

    fn apply(&self, phi: &DepArrowId, f: &ArrowId) -> Result<DepArrowId> {
        self.check_dep(*phi)?;
        check_apply_typing(self, phi, f)?;
        Ok(self.apply[&(*phi, *f)])
    }

    fn is_dep_arrow(&self, phi: &DepArrowId) -> Result<bool> {
        Ok(phi.index() < self.names.len())
    }

    fn dep_label(&self, phi: &DepArrowId) -> String {
        self.names
            .get(phi.index())
            .cloned()
            .unwrap_or_else(|| format!("#{}", phi.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dep::{check_dep_laws, GlobalSectionsDep};
    use crate::report::{LawId, Status};
    use crate::ring::{ring_family, ring_sigma, RingTables};

    #[test]
    fn tabulated_ring_sections() {
        let r = RingTables::modulo(4).unwrap();
        let d = TableDep::tabulate(&GlobalSectionsDep::new(ring_sigma(&r).unwrap())).unwrap();
        assert_eq!(d.num_deps(), 16);
        assert!(check_dep_laws(&d).passed());
        // The only section over (1, 2) is -2 = 2.
        let phi = d.dep_arrows(&ring_family(&r, 1, 2)).unwrap()[0];
        assert_eq!(d.name(phi), "2");
        let other = d.dep_arrows(&ring_family(&r, 0, 1)).unwrap()[0];
        let bad = d.with_apply(phi, ArrowId(0), other);
        let rep = check_dep_laws(&bad);
        assert_eq!(rep.status(LawId::Dep1), Some(Status::Fail));
    }
}
