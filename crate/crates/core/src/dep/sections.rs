//! The dependent arrows of a Sigma structure: sections `φ: a → Σₐλ` of the
//! first projection, applied through the pullback square of `(λ, f)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{check_apply_typing, DepStructure};
use crate::cat::{Category, Cone};
use crate::error::{Error, Result};
use crate::fam::FamStructure;
use crate::report::{LawId, LawReport};
use crate::sigma::{FamOf, SArr, SigmaStructure};

/// A section of `pr1` over the family `fam`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Section<L, A> {
    pub fam: L,
    pub arrow: A,
}

impl<L: fmt::Debug, A: fmt::Debug> fmt::Debug for Section<L, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.arrow)
    }
}

/// `dHom(a, λ) = {φ: a → Σₐλ | pr1 ∘ φ = 1_a}`, with `φ(f)` the mediator
/// of the `(λ, f)` square at the cone `(b, φ ∘ f, 1_b)`.
#[derive(Debug, Clone)]
pub struct GlobalSectionsDep<S> {
    pub sigma: S,
}

impl<S: SigmaStructure> GlobalSectionsDep<S> {
    pub fn new(sigma: S) -> Self {
        GlobalSectionsDep { sigma }
    }
}

impl<S: SigmaStructure> DepStructure for GlobalSectionsDep<S> {
    type Fams = S::Fams;
    type Dep = Section<FamOf<S>, SArr<S>>;

    fn fam(&self) -> &S::Fams {
        self.sigma.fam()
    }

    fn dep_arrows(&self, lam: &FamOf<S>) -> Result<Vec<Self::Dep>> {
        let cat = self.sigma.base();
        let a = self.fam().fam_object(lam);
        let pr = self.sigma.pr1(lam)?;
        let id = cat.identity(&a);
        let found = cat.factor(&a, &self.sigma.sigma_obj(lam)?, &[(&pr, &id)], usize::MAX)?;
        Ok(found
            .into_iter()
            .map(|arrow| Section {
                fam: lam.clone(),
                arrow,
            })
            .collect())
    }

    fn dep_family(&self, phi: &Self::Dep) -> FamOf<S> {
        phi.fam.clone()
    }

    fn apply(&self, phi: &Self::Dep, f: &SArr<S>) -> Result<Self::Dep> {
        check_apply_typing(self, phi, f)?;
        let cat = self.sigma.base();
        let b = cat.dom(f);
        let cone = Cone {
            apex: b.clone(),
            top: cat.compose(&phi.arrow, f)?,
            left: cat.identity(&b),
        };
        Ok(Section {
            fam: self.fam().restrict(&phi.fam, f)?,
            arrow: self.sigma.mediate(&phi.fam, f, &cone)?,
        })
    }

    fn is_dep_arrow(&self, phi: &Self::Dep) -> Result<bool> {
        let cat = self.sigma.base();
        if cat.check_arrow(&phi.arrow).is_err() {
            return Ok(false);
        }
        let a = self.fam().fam_object(&phi.fam);
        Ok(cat.dom(&phi.arrow) == a
            && cat.cod(&phi.arrow) == self.sigma.sigma_obj(&phi.fam)?
            && cat.compose(&self.sigma.pr1(&phi.fam)?, &phi.arrow)? == cat.identity(&a))
    }

    fn dep_label(&self, phi: &Self::Dep) -> String {
        self.sigma.base().arrow_label(&phi.arrow)
    }
}

/// Every section satisfies `pr1 ∘ φ = 1`, and every application satisfies
/// `φ ∘ f = Σ_λ f ∘ φ(f)` and `pr1 ∘ φ(f) = 1_b`.
pub fn check_sections<S: SigmaStructure>(dep: &GlobalSectionsDep<S>) -> LawReport {
    let mut report = LawReport::new(
        "sections",
        &[LawId::SectionsSection, LawId::SectionsEq1, LawId::SectionsEq2],
    );
    if let Err(e) = sections_into(dep, &mut report) {
        report.record_error(LawId::SectionsEq2, || format!("enumeration failed: {e}"));
    }
    report
}

fn sections_into<S: SigmaStructure>(dep: &GlobalSectionsDep<S>, report: &mut LawReport) -> Result<()> {
    let sigma = &dep.sigma;
    let cat = sigma.base();
    let objects = cat.objects();
    let albl = |f: &SArr<S>| cat.arrow_label(f);
    for a in &objects {
        for lam in sigma.fam().families(a)? {
            let pr = sigma.pr1(&lam)?;
            for phi in dep.dep_arrows(&lam)? {
                let sec = cat.compose(&pr, &phi.arrow)? == cat.identity(a);
                report.record(LawId::SectionsSection, sec, || format!("φ = {}: pr1 ∘ φ ≠ 1", albl(&phi.arrow)));
                for b in &objects {
                    for f in cat.hom(b, a)? {
                        let eqs = (|| {
                            let pf = dep.apply(&phi, &f)?;
                            let lhs = cat.compose(&phi.arrow, &f)?;
                            let rhs = cat.compose(&sigma.sigma_arr(&lam, &f)?, &pf.arrow)?;
                            let back = cat.compose(&sigma.pr1(&pf.fam)?, &pf.arrow)?;
                            Ok::<_, Error>((lhs == rhs, back == cat.identity(b), pf))
                        })();
                        let where_ = || format!("φ = {}, f = {}", albl(&phi.arrow), albl(&f));
                        match eqs {
                            Ok((e1, e2, pf)) => {
                                report.record(LawId::SectionsEq1, e1, || {
                                    format!("{}: φ∘f ≠ Σ_λf ∘ φ(f) with φ(f) = {}", where_(), albl(&pf.arrow))
                                });
                                report.record(LawId::SectionsEq2, e2, || {
                                    format!("{}: pr1 ∘ φ(f) ≠ 1 with φ(f) = {}", where_(), albl(&pf.arrow))
                                });
                            }
                            Err(e) => {
                                report.record_error(LawId::SectionsEq1, || format!("{}: {e}", where_()));
                                report.record_error(LawId::SectionsEq2, || format!("{}: {e}", where_()));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{FinSetCat, FnArrow};
    use crate::dep::check_dep_laws;
    use crate::fam::{FinFamily, FinSetFam};
    use crate::ring::{ring_sigma, RingTables};
    use crate::sigma::{FinSetSigma, ProductSigma, TrivialSigma};

    #[test]
    fn trivial_sigma_has_only_the_identity_section() {
        let d = GlobalSectionsDep::new(TrivialSigma { fam: FinSetFam::new(FinSetCat::new(2), 1) });
        let lam = FinFamily::new(vec![1, 0]);
        let secs = d.dep_arrows(&lam).unwrap();
        assert_eq!(secs.len(), 1);
        assert_eq!(secs[0].arrow, FnArrow::new(2, vec![0, 1]));
        assert!(check_dep_laws(&d).passed());
    }

    #[test]
    fn product_sections_are_functions() {
        let d = GlobalSectionsDep::new(ProductSigma::new(FinSetCat::new(3)).unwrap());
        let lam = d.sigma.fam.family(2, 3);
        assert_eq!(d.dep_arrows(&lam).unwrap().len(), 9);
        let r = check_dep_laws(&d);
        assert!(r.passed(), "{r}");
        assert!(check_sections(&d).passed());
    }

    #[test]
    fn finset_and_ring_sections() {
        let d = GlobalSectionsDep::new(FinSetSigma::new(FinSetFam::new(FinSetCat::new(3), 2)));
        assert_eq!(d.dep_arrows(&FinFamily::new(vec![2, 1, 2])).unwrap().len(), 4);
        let r = check_dep_laws(&d);
        assert!(r.passed(), "{r}");
        assert!(check_sections(&d).passed());
        let ring = GlobalSectionsDep::new(ring_sigma(&RingTables::modulo(4).unwrap()).unwrap());
        let r = check_dep_laws(&ring);
        assert!(r.passed(), "{r}");
        assert!(check_sections(&ring).passed());
    }
}
