//! Family-arrow structures: per-object sets `fHom(a)` with a restriction
//! action `λ ∘ f` by arrows into `a`.

mod cofam;
mod constructions;
mod finset;
mod functor;
mod presheaf;
mod slice;
mod table;
mod topos;

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::cat::Category;
use crate::error::{Error, Result};
use crate::report::{LawId, LawReport};

pub use cofam::{check_cofam_laws, CofamFromOp};
pub use constructions::{ConstFamily, ConstantFam, CosliceFam};
pub use finset::{FinFamily, FinSetFam};
pub use functor::{
    check_fam_functor, check_fam_nat_trans, ConstantFamFunctor, FamFunctor, IdentityFamFunctor, TableFamFunctor,
};
pub use presheaf::{category_of_elements, check_presheaf, fam_presheaf, ElementsCategory, FamPresheaf, Presheaf};
pub use slice::{check_weak_fam_laws, Canonical, PullbackChooser, Reversed, SliceFam};
pub use table::{FamArrowId, TableFam};
pub use topos::{ToposFam, ToposFamily};

pub type ObjOf<F> = <<F as FamStructure>::Cat as Category>::Obj;
pub type ArrOf<F> = <<F as FamStructure>::Cat as Category>::Arr;

/// A category with family-arrows.
///
/// Each family-arrow knows the object it lives over. Restriction must land
/// over the domain of the arrow; the laws `λ ∘ 1 = λ` and
/// `λ ∘ (f ∘ g) = (λ ∘ f) ∘ g` are checked by [`check_fam_laws`].
pub trait FamStructure {
    type Cat: Category;
    type Fam: Clone + Ord + Hash + Debug;

    fn base(&self) -> &Self::Cat;

    /// `fHom(a)` in canonical order.
    fn families(&self, a: &ObjOf<Self>) -> Result<Vec<Self::Fam>>;

    fn fam_object(&self, lam: &Self::Fam) -> ObjOf<Self>;

    /// `λ ∘ f`.
    fn restrict(&self, lam: &Self::Fam, f: &ArrOf<Self>) -> Result<Self::Fam>;

    fn family_label(&self, lam: &Self::Fam) -> String {
        format!("{lam:?}")
    }
}

/// Errors unless `f` ends where `lam` lives.
pub fn check_restrict_typing<F: FamStructure + ?Sized>(fam: &F, lam: &F::Fam, f: &ArrOf<F>) -> Result<()> {
    let cat = fam.base();
    cat.check_arrow(f)?;
    if cat.cod(f) != fam.fam_object(lam) {
        return Err(Error::TypeMismatch(format!(
            "cannot restrict {} over {} along {}",
            fam.family_label(lam),
            cat.object_label(&fam.fam_object(lam)),
            cat.arrow_label(f)
        )));
    }
    Ok(())
}

/// Checks both fam laws over every window object, family and composable pair.
pub fn check_fam_laws<F: FamStructure>(fam: &F) -> LawReport {
    let mut report = LawReport::new("fam", &[LawId::Fam1, LawId::Fam2]);
    if let Err(e) = fam_laws_into(fam, &mut report) {
        report.record_error(LawId::Fam2, || format!("enumeration failed: {e}"));
    }
    report
}

fn fam_laws_into<F: FamStructure>(fam: &F, report: &mut LawReport) -> Result<()> {
    let cat = fam.base();
    let objects = cat.objects();
    let lbl = |l: &F::Fam| fam.family_label(l);
    let albl = |f: &ArrOf<F>| cat.arrow_label(f);
    for a in &objects {
        for lam in fam.families(a)? {
            let id = cat.identity(a);
            match fam.restrict(&lam, &id) {
                Ok(r) => report.record(LawId::Fam1, r == lam, || {
                    format!("λ = {}: λ∘1 = {}", lbl(&lam), lbl(&r))
                }),
                Err(e) => report.record_error(LawId::Fam1, || format!("λ = {}: {e}", lbl(&lam))),
            }
            for b in &objects {
                for f in cat.hom(b, a)? {
                    let lf = fam.restrict(&lam, &f);
                    for c in &objects {
                        for g in cat.hom(c, b)? {
                            let lhs = cat.compose(&f, &g).and_then(|fg| fam.restrict(&lam, &fg));
                            let rhs = lf.clone().and_then(|x| fam.restrict(&x, &g));
                            match (lhs, rhs) {
                                (Ok(l), Ok(r)) => report.record(LawId::Fam2, l == r, || {
                                    format!(
                                        "λ = {}, f = {}, g = {}: λ∘(f∘g) = {} but (λ∘f)∘g = {}",
                                        lbl(&lam),
                                        albl(&f),
                                        albl(&g),
                                        lbl(&l),
                                        lbl(&r)
                                    )
                                }),
                                (Err(e), _) | (_, Err(e)) => report.record_error(LawId::Fam2, || {
                                    format!("λ = {}, f = {}, g = {}: {e}", lbl(&lam), albl(&f), albl(&g))
                                }),
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// A fam structure with selected restriction entries replaced.
#[derive(Debug, Clone)]
pub struct FamOverride<F: FamStructure> {
    pub inner: F,
    pub entries: HashMap<(F::Fam, ArrOf<F>), F::Fam>,
}

impl<F: FamStructure> FamOverride<F> {
    pub fn new(inner: F) -> Self {
        FamOverride {
            inner,
            entries: HashMap::new(),
        }
    }

    pub fn with(mut self, lam: F::Fam, f: ArrOf<F>, result: F::Fam) -> Self {
        self.entries.insert((lam, f), result);
        self
    }
}

impl<F: FamStructure> FamStructure for FamOverride<F> {
    type Cat = F::Cat;
    type Fam = F::Fam;

    fn base(&self) -> &F::Cat {
        self.inner.base()
    }

    fn families(&self, a: &ObjOf<F>) -> Result<Vec<F::Fam>> {
        self.inner.families(a)
    }

    fn fam_object(&self, lam: &F::Fam) -> ObjOf<F> {
        self.inner.fam_object(lam)
    }

    fn restrict(&self, lam: &F::Fam, f: &ArrOf<F>) -> Result<F::Fam> {
        match self.entries.get(&(lam.clone(), f.clone())) {
            Some(r) => Ok(r.clone()),
            None => self.inner.restrict(lam, f),
        }
    }

    fn family_label(&self, lam: &F::Fam) -> String {
        self.inner.family_label(lam)
    }
}
