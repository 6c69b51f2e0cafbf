//! Sigma-objects on a fam structure: `Σₐλ`, the first projection
//! `pr1: Σₐλ → a`, and for `f: b → a` the arrow `Σ_λ f: Σ_b(λ∘f) → Σₐλ`,
//! such that every square
//!
//! ```text
//! Σ_b(λ∘f) --Σ_λ f--> Σₐλ
//!    |                  |
//!   pr1                pr1
//!    v                  v
//!    b ------- f -----> a
//! ```
//!
//! is a pullback, `Σ_λ 1 = 1` and `Σ_λ(f∘g) = Σ_λ f ∘ Σ_{λ∘f} g`.

mod constructions;
mod transport;

use std::collections::HashMap;

use crate::cat::{describe_verdict, is_pullback, Category, Cone, PullbackWitness, Square};
use crate::error::{Error, Result};
use crate::fam::{ArrOf, FamStructure, ObjOf};
use crate::report::{LawId, LawReport};

pub use constructions::{FinSetSigma, ProductSigma, SliceSigma, TableSigma, TrivialSigma};
pub use transport::{check_transport, transport, TransportPair};

pub type FamOf<S> = <<S as SigmaStructure>::Fams as FamStructure>::Fam;
pub type SObj<S> = ObjOf<<S as SigmaStructure>::Fams>;
pub type SArr<S> = ArrOf<<S as SigmaStructure>::Fams>;
pub type CatOf<S> = <<S as SigmaStructure>::Fams as FamStructure>::Cat;

pub trait SigmaStructure {
    type Fams: FamStructure;

    fn fam(&self) -> &Self::Fams;

    /// `Σₐλ`.
    fn sigma_obj(&self, lam: &FamOf<Self>) -> Result<SObj<Self>>;

    /// `pr1: Σₐλ → a`.
    fn pr1(&self, lam: &FamOf<Self>) -> Result<SArr<Self>>;

    /// `Σ_λ f: Σ_b(λ∘f) → Σₐλ`.
    fn sigma_arr(&self, lam: &FamOf<Self>, f: &SArr<Self>) -> Result<SArr<Self>>;

    fn base(&self) -> &CatOf<Self> {
        self.fam().base()
    }

    /// The square for `(λ, f)`.
    fn square(&self, lam: &FamOf<Self>, f: &SArr<Self>) -> Result<Square<SArr<Self>>> {
        let restricted = self.fam().restrict(lam, f)?;
        Ok(Square {
            top: self.sigma_arr(lam, f)?,
            left: self.pr1(&restricted)?,
            right: self.pr1(lam)?,
            bottom: f.clone(),
        })
    }

    /// The square for `(λ, f)` as a pullback witness. Its pullback property
    /// is what [`check_sigma_laws`] verifies; mediators are still checked
    /// for existence and uniqueness when computed.
    fn witness(&self, lam: &FamOf<Self>, f: &SArr<Self>) -> Result<PullbackWitness<SArr<Self>>> {
        Ok(PullbackWitness::trusted(self.square(lam, f)?))
    }

    /// The mediating arrow into `Σ_b(λ∘f)` for a cone over `(f, pr1)`.
    fn mediate(
        &self,
        lam: &FamOf<Self>,
        f: &SArr<Self>,
        cone: &Cone<SObj<Self>, SArr<Self>>,
    ) -> Result<SArr<Self>> {
        self.witness(lam, f)?.mediator(self.base(), cone)
    }

    fn family_label(&self, lam: &FamOf<Self>) -> String {
        self.fam().family_label(lam)
    }
}

/// Square typing and commutation, the pullback property, `(s1)` and `(s2)`,
/// over every window family and composable pair.
pub fn check_sigma_laws<S: SigmaStructure>(sigma: &S) -> LawReport {
    let mut report = LawReport::new(
        "sigma",
        &[LawId::SigmaSquare, LawId::SigmaPullback, LawId::S1, LawId::S2],
    );
    if let Err(e) = sigma_laws_into(sigma, &mut report) {
        report.record_error(LawId::S2, || format!("enumeration failed: {e}"));
    }
    report
}

fn sigma_laws_into<S: SigmaStructure>(sigma: &S, report: &mut LawReport) -> Result<()> {
    let fam = sigma.fam();
    let cat = fam.base();
    let objects = cat.objects();
    let lbl = |l: &FamOf<S>| sigma.family_label(l);
    let albl = |f: &SArr<S>| cat.arrow_label(f);
    for a in &objects {
        for lam in fam.families(a)? {
            let s1 = (|| {
                let top = sigma.sigma_arr(&lam, &cat.identity(a))?;
                Ok::<_, Error>((top.clone(), top == cat.identity(&sigma.sigma_obj(&lam)?)))
            })();
            match s1 {
                Ok((top, holds)) => report.record(LawId::S1, holds, || {
                    format!("λ = {}: Σ_λ 1 = {}", lbl(&lam), albl(&top))
                }),
                Err(e) => report.record_error(LawId::S1, || format!("λ = {}: {e}", lbl(&lam))),
            }
            for b in &objects {
                for f in cat.hom(b, a)? {
                    square_into(sigma, &lam, &f, report);
                    let top_f = sigma.sigma_arr(&lam, &f);
                    let lf = fam.restrict(&lam, &f);
                    for c in &objects {
                        for g in cat.hom(c, b)? {
                            let sides = (|| {
                                let lhs = sigma.sigma_arr(&lam, &cat.compose(&f, &g)?)?;
                                let inner = sigma.sigma_arr(lf.as_ref().map_err(Clone::clone)?, &g)?;
                                let rhs = cat.compose(top_f.as_ref().map_err(Clone::clone)?, &inner)?;
                                Ok::<_, Error>((lhs, rhs))
                            })();
                            match sides {
                                Ok((lhs, rhs)) => report.record(LawId::S2, lhs == rhs, || {
                                    format!(
                                        "λ = {}, f = {}, g = {}: Σ_λ(f∘g) = {} but Σ_λ f ∘ Σ_(λ∘f) g = {}",
                                        lbl(&lam),
                                        albl(&f),
                                        albl(&g),
                                        albl(&lhs),
                                        albl(&rhs)
                                    )
                                }),
                                Err(e) => report.record_error(LawId::S2, || {
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

fn square_into<S: SigmaStructure>(sigma: &S, lam: &FamOf<S>, f: &SArr<S>, report: &mut LawReport) {
    let cat = sigma.base();
    let where_ = || format!("λ = {}, f = {}", sigma.family_label(lam), cat.arrow_label(f));
    let checked = (|| {
        let sq = sigma.square(lam, f)?;
        let restricted = sigma.fam().restrict(lam, f)?;
        let typed = cat.dom(&sq.top) == sigma.sigma_obj(&restricted)?
            && cat.cod(&sq.top) == sigma.sigma_obj(lam)?
            && cat.dom(&sq.right) == sigma.sigma_obj(lam)?
            && cat.cod(&sq.right) == sigma.fam().fam_object(lam)
            && cat.dom(&sq.left) == sigma.sigma_obj(&restricted)?
            && cat.cod(&sq.left) == cat.dom(f);
        if !typed {
            return Err(Error::IllTypedSquare(crate::cat::describe_square(cat, &sq)));
        }
        is_pullback(cat, &sq)
    })();
    match checked {
        Ok(verdict) => {
            let commutes = !matches!(verdict, crate::cat::PullbackVerdict::NotCommuting);
            report.record(LawId::SigmaSquare, commutes, || format!("{}: square does not commute", where_()));
            report.record(LawId::SigmaPullback, verdict.holds(), || {
                format!("{}: {}", where_(), describe_verdict(cat, &verdict))
            });
        }
        Err(e) => {
            report.record_error(LawId::SigmaSquare, || format!("{}: {e}", where_()));
            report.record_error(LawId::SigmaPullback, || format!("{}: {e}", where_()));
        }
    }
}

type MediateKey<S> = (FamOf<S>, SArr<S>, SArr<S>, SArr<S>);

/// A Sigma structure with selected entries replaced.
#[derive(Debug, Clone)]
pub struct SigmaOverride<S: SigmaStructure> {
    pub inner: S,
    pub pr1: HashMap<FamOf<S>, SArr<S>>,
    pub sigma_arr: HashMap<(FamOf<S>, SArr<S>), SArr<S>>,
    /// Keyed by `(λ, f, cone.top, cone.left)`.
    pub mediate: HashMap<MediateKey<S>, SArr<S>>,
}

impl<S: SigmaStructure> SigmaOverride<S> {
    pub fn new(inner: S) -> Self {
        SigmaOverride {
            inner,
            pr1: HashMap::new(),
            sigma_arr: HashMap::new(),
            mediate: HashMap::new(),
        }
    }
}

impl<S: SigmaStructure> SigmaStructure for SigmaOverride<S> {
    type Fams = S::Fams;

    fn fam(&self) -> &S::Fams {
        self.inner.fam()
    }

    fn sigma_obj(&self, lam: &FamOf<S>) -> Result<SObj<S>> {
        self.inner.sigma_obj(lam)
    }

    fn pr1(&self, lam: &FamOf<S>) -> Result<SArr<S>> {
        match self.pr1.get(lam) {
            Some(f) => Ok(f.clone()),
            None => self.inner.pr1(lam),
        }
    }

    fn sigma_arr(&self, lam: &FamOf<S>, f: &SArr<S>) -> Result<SArr<S>> {
        match self.sigma_arr.get(&(lam.clone(), f.clone())) {
            Some(t) => Ok(t.clone()),
            None => self.inner.sigma_arr(lam, f),
        }
    }

    fn mediate(&self, lam: &FamOf<S>, f: &SArr<S>, cone: &Cone<SObj<S>, SArr<S>>) -> Result<SArr<S>> {
        let key = (lam.clone(), f.clone(), cone.top.clone(), cone.left.clone());
        match self.mediate.get(&key) {
            Some(m) => Ok(m.clone()),
            None => self.witness(lam, f)?.mediator(self.base(), cone),
        }
    }

    fn family_label(&self, lam: &FamOf<S>) -> String {
        self.inner.family_label(lam)
    }
}
