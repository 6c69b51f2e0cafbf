//! Family structures given by explicit tables over a [`FinCat`].

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{check_restrict_typing, FamStructure};
use crate::cat::{ArrowId, Category, FinCat, ObjectId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamArrowId(pub u32);

impl FamArrowId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Named family-arrows, each over an object, and a total restriction table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableFam {
    base: FinCat,
    names: Vec<String>,
    over: Vec<ObjectId>,
    by_object: Vec<Vec<FamArrowId>>,
    restrict: HashMap<(FamArrowId, ArrowId), FamArrowId>,
}

impl TableFam {
    /// `restrict` holds `(λ, f, λ∘f)`; every pair with `cod f` the object of
    /// `λ` needs exactly one entry, landing over `dom f`.
    pub fn new(
        base: FinCat,
        families: Vec<(String, ObjectId)>,
        restrict: Vec<(FamArrowId, ArrowId, FamArrowId)>,
    ) -> Result<TableFam> {
        let mut by_object = vec![Vec::new(); base.num_objects()];
        let mut names = Vec::with_capacity(families.len());
        let mut over = Vec::with_capacity(families.len());
        for (i, (name, a)) in families.into_iter().enumerate() {
            base.check_object(&a)
                .map_err(|_| Error::Integrity(format!("family {name} lives over missing object {}", a.0)))?;
            by_object[a.index()].push(FamArrowId(i as u32));
            names.push(name);
            over.push(a);
        }
        let n = names.len();
        let mut table = HashMap::with_capacity(restrict.len());
        for (lam, f, mu) in restrict {
            if lam.index() >= n || mu.index() >= n {
                return Err(Error::Integrity(format!(
                    "restriction entry references family {}",
                    lam.0.max(mu.0)
                )));
            }
            let fd = base
                .arrow(f)
                .map_err(|_| Error::Integrity(format!("restriction entry references arrow {}", f.0)))?;
            if fd.cod != over[lam.index()] || fd.dom != over[mu.index()] {
                return Err(Error::TypeMismatch(format!(
                    "restriction {}∘{} = {} is ill-typed",
                    names[lam.index()],
                    fd.name,
                    names[mu.index()]
                )));
            }
            if table.insert((lam, f), mu).is_some() {
                return Err(Error::Integrity(format!(
                    "duplicate restriction entry for {}∘{}",
                    names[lam.index()],
                    fd.name
                )));
            }
        }
        for (i, a) in over.iter().enumerate() {
            for b in base.objects() {
                for f in base.hom(&b, a)? {
                    if !table.contains_key(&(FamArrowId(i as u32), f)) {
                        return Err(Error::Integrity(format!(
                            "restriction table has no entry for {}∘{}",
                            names[i],
                            base.arrow_label(&f)
                        )));
                    }
                }
            }
        }
        Ok(TableFam {
            base,
            names,
            over,
            by_object,
            restrict: table,
        })
    }

    /// Tabulates any family structure on an explicit category. Fails with
    /// `BudgetExceeded` if a restriction leaves the enumerated families.
    pub fn tabulate<F: FamStructure<Cat = FinCat>>(fam: &F) -> Result<TableFam> {
        let cat = fam.base().clone();
        let mut all = Vec::new();
        let mut index = HashMap::new();
        for a in cat.objects() {
            for lam in fam.families(&a)? {
                index.insert(lam.clone(), FamArrowId(all.len() as u32));
                all.push((lam, a));
            }
        }
        let mut restrict = Vec::new();
        for (i, (lam, a)) in all.iter().enumerate() {
            for b in cat.objects() {
                for f in cat.hom(&b, a)? {
                    let r = fam.restrict(lam, &f)?;
                    let j = index.get(&r).ok_or_else(|| {
                        Error::BudgetExceeded(format!("{} is outside the enumerated families", fam.family_label(&r)))
                    })?;
                    restrict.push((FamArrowId(i as u32), f, *j));
                }
            }
        }
        let families = all.iter().map(|(lam, a)| (fam.family_label(lam), *a)).collect();
        TableFam::new(cat, families, restrict)
    }

    /// A copy with one restriction entry replaced. Typing is not enforced.
    pub fn with_restrict(mut self, lam: FamArrowId, f: ArrowId, mu: FamArrowId) -> Self {
        self.restrict.insert((lam, f), mu);
        self
    }

    pub fn num_families(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, lam: FamArrowId) -> &str {
        &self.names[lam.index()]
    }

    pub fn family_named(&self, name: &str) -> Option<FamArrowId> {
        self.names.iter().position(|n| n == name).map(|i| FamArrowId(i as u32))
    }

    pub fn family_ids(&self) -> impl Iterator<Item = FamArrowId> {
        (0..self.names.len() as u32).map(FamArrowId)
    }

    /// `(λ, f, λ∘f)` sorted.
    pub fn restriction_triples(&self) -> Vec<(FamArrowId, ArrowId, FamArrowId)> {
        let mut out: Vec<_> = self.restrict.iter().map(|(&(l, f), &m)| (l, f, m)).collect();
        out.sort();
        out
    }

    pub fn check_family(&self, lam: FamArrowId) -> Result<()> {
        if lam.index() < self.names.len() {
            Ok(())
        } else {
            Err(Error::Integrity(format!("family {} does not exist", lam.0)))
        }
    }
}

impl FamStructure for TableFam {
    type Cat = FinCat;
    type Fam = FamArrowId;

    fn base(&self) -> &FinCat {
        &self.base
    }

    fn families(&self, a: &ObjectId) -> Result<Vec<FamArrowId>> {
        self.base.check_object(a)?;
        Ok(self.by_object[a.index()].clone())
    }

    fn fam_object(&self, lam: &FamArrowId) -> ObjectId {
        self.over[lam.index()]
    }

    fn restrict(&self, lam: &FamArrowId, f: &ArrowId) -> Result<FamArrowId> {
        self.check_family(*lam)?;
        check_restrict_typing(self, lam, f)?;
        Ok(self.restrict[&(*lam, *f)])
    }

    fn family_label(&self, lam: &FamArrowId) -> String {
        self.names
            .get(lam.index())
            .cloned()
            .unwrap_or_else(|| format!("#{}", lam.0))
    }
}
