//! Dependent arrows: per family `λ` over `a` a set `dHom(a, λ)`, with
//! application `Φ(f) ∈ dHom(b, λ ∘ f)` for `f: b → a`.

mod constructions;
mod dep_objects;
mod presheaf;
mod sections;
mod table;

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::cat::Category;
use crate::error::{Error, Result};
use crate::fam::{ArrOf, FamStructure, ObjOf};
use crate::report::{LawId, LawReport};

pub use constructions::{Choice, ConstantDep, FinSetDep, TrivialDep};
pub use dep_objects::{dep_object_bijection, DepObjectBijection};
pub use presheaf::{category_of_dep_arrows, dep_presheaf, DepPresheaf};
pub use sections::{check_sections, GlobalSectionsDep, Section};
pub use table::{DepArrowId, TableDep};

pub type DFam<D> = <<D as DepStructure>::Fams as FamStructure>::Fam;
pub type DObj<D> = ObjOf<<D as DepStructure>::Fams>;
pub type DArr<D> = ArrOf<<D as DepStructure>::Fams>;

pub trait DepStructure {
    type Fams: FamStructure;
    type Dep: Clone + Ord + Hash + Debug;

    fn fam(&self) -> &Self::Fams;

    /// `dHom(a, λ)` in canonical order, `a` being the object of `λ`.
    fn dep_arrows(&self, lam: &DFam<Self>) -> Result<Vec<Self::Dep>>;

    /// The family a dependent arrow lives over.
    fn dep_family(&self, phi: &Self::Dep) -> DFam<Self>;

    /// `Φ(f)`.
    fn apply(&self, phi: &Self::Dep, f: &DArr<Self>) -> Result<Self::Dep>;

    /// Membership in `dHom` of its own family.
    fn is_dep_arrow(&self, phi: &Self::Dep) -> Result<bool> {
        Ok(self.dep_arrows(&self.dep_family(phi))?.contains(phi))
    }

    fn dep_label(&self, phi: &Self::Dep) -> String {
        format!("{phi:?}")
    }
}

/// Errors unless `f` ends where the family of `phi` lives.
pub fn check_apply_typing<D: DepStructure + ?Sized>(dep: &D, phi: &D::Dep, f: &DArr<D>) -> Result<()> {
    let lam = dep.dep_family(phi);
    crate::fam::check_restrict_typing(dep.fam(), &lam, f).map_err(|e| match e {
        Error::TypeMismatch(_) => Error::TypeMismatch(format!(
            "cannot apply {} to {}",
            dep.dep_label(phi),
            dep.fam().base().arrow_label(f)
        )),
        other => other,
    })
}

/// Typing of application, `Φ(1) = Φ` and `Φ(f ∘ g) = Φ(f)(g)`.
pub fn check_dep_laws<D: DepStructure>(dep: &D) -> LawReport {
    let mut report = LawReport::new("dep", &[LawId::DepTyping, LawId::Dep1, LawId::Dep2]);
    if let Err(e) = dep_laws_into(dep, &mut report) {
        report.record_error(LawId::Dep2, || format!("enumeration failed: {e}"));
    }
    report
}

fn dep_laws_into<D: DepStructure>(dep: &D, report: &mut LawReport) -> Result<()> {
    let fam = dep.fam();
    let cat = fam.base();
    let objects = cat.objects();
    let lbl = |p: &D::Dep| dep.dep_label(p);
    let albl = |f: &DArr<D>| cat.arrow_label(f);
    for a in &objects {
        for lam in fam.families(a)? {
            for phi in dep.dep_arrows(&lam)? {
                match dep.apply(&phi, &cat.identity(a)) {
                    Ok(r) => report.record(LawId::Dep1, r == phi, || format!("Φ = {}: Φ(1) = {}", lbl(&phi), lbl(&r))),
                    Err(e) => report.record_error(LawId::Dep1, || format!("Φ = {}: {e}", lbl(&phi))),
                }
                for b in &objects {
                    for f in cat.hom(b, a)? {
                        let pf = dep.apply(&phi, &f);
                        let typed = (|| {
                            let pf = pf.as_ref().map_err(Clone::clone)?;
                            let want = fam.restrict(&lam, &f)?;
                            Ok::<_, Error>(dep.dep_family(pf) == want && dep.is_dep_arrow(pf)?)
                        })();
                        match typed {
                            Ok(t) => report.record(LawId::DepTyping, t, || {
                                format!(
                                    "Φ = {}, f = {}: Φ(f) = {} is not in dHom(b, λ∘f)",
                                    lbl(&phi),
                                    albl(&f),
                                    pf.as_ref().map(&lbl).unwrap_or_default()
                                )
                            }),
                            Err(e) => report.record_error(LawId::DepTyping, || {
                                format!("Φ = {}, f = {}: {e}", lbl(&phi), albl(&f))
                            }),
                        }
                        for c in &objects {
                            for g in cat.hom(c, b)? {
                                let sides = (|| {
                                    let lhs = dep.apply(&phi, &cat.compose(&f, &g)?)?;
                                    let rhs = dep.apply(pf.as_ref().map_err(Clone::clone)?, &g)?;
                                    Ok::<_, Error>((lhs, rhs))
                                })();
                                match sides {
                                    Ok((lhs, rhs)) => report.record(LawId::Dep2, lhs == rhs, || {
                                        format!(
                                            "Φ = {}, f = {}, g = {}: Φ(f∘g) = {} but Φ(f)(g) = {}",
                                            lbl(&phi),
                                            albl(&f),
                                            albl(&g),
                                            lbl(&lhs),
                                            lbl(&rhs)
                                        )
                                    }),
                                    Err(e) => report.record_error(LawId::Dep2, || {
                                        format!("Φ = {}, f = {}, g = {}: {e}", lbl(&phi), albl(&f), albl(&g))
                                    }),
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// A dep structure with selected application entries replaced.
#[derive(Debug, Clone)]
pub struct DepOverride<D: DepStructure> {
    pub inner: D,
    pub entries: HashMap<(D::Dep, DArr<D>), D::Dep>,
}

impl<D: DepStructure> DepOverride<D> {
    pub fn new(inner: D) -> Self {
        DepOverride {
            inner,
            entries: HashMap::new(),
        }
    }

    pub fn with(mut self, phi: D::Dep, f: DArr<D>, result: D::Dep) -> Self {
        self.entries.insert((phi, f), result);
        self
    }
}

impl<D: DepStructure> DepStructure for DepOverride<D> {
    type Fams = D::Fams;
    type Dep = D::Dep;

    fn fam(&self) -> &D::Fams {
        self.inner.fam()
    }

    fn dep_arrows(&self, lam: &DFam<D>) -> Result<Vec<D::Dep>> {
        self.inner.dep_arrows(lam)
    }

    fn dep_family(&self, phi: &D::Dep) -> DFam<D> {
        self.inner.dep_family(phi)
    }

    fn apply(&self, phi: &D::Dep, f: &DArr<D>) -> Result<D::Dep> {
        match self.entries.get(&(phi.clone(), f.clone())) {
            Some(r) => Ok(r.clone()),
            None => self.inner.apply(phi, f),
        }
    }

    fn is_dep_arrow(&self, phi: &D::Dep) -> Result<bool> {
        self.inner.is_dep_arrow(phi)
    }

    fn dep_label(&self, phi: &D::Dep) -> String {
        self.inner.dep_label(phi)
    }
}
