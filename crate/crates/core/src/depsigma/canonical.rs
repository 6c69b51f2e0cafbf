//! The second projection every Sigma structure carries: `pr2(λ)` is the
//! mediator of the `(λ, pr1)` square at the cone `(Σₐλ, 1, 1)`.

use super::DepSigmaStructure;
use crate::cat::{binary_product, Category, Cone, ProductWitness};
use crate::dep::{DepStructure, GlobalSectionsDep, Section};
use crate::error::{Error, Result};
use crate::fam::{ConstFamily, ConstantFam, FamStructure};
use crate::report::{LawId, LawReport};
use crate::sigma::{FamOf, SArr, SigmaStructure};

/// Global sections as dependent arrows, with the diagonal section as `pr2`.
#[derive(Debug, Clone)]
pub struct CanonicalPr2<S> {
    pub dep: GlobalSectionsDep<S>,
}

impl<S: SigmaStructure> CanonicalPr2<S> {
    pub fn new(sigma: S) -> Self {
        CanonicalPr2 {
            dep: GlobalSectionsDep::new(sigma),
        }
    }
}

impl<S: SigmaStructure> DepSigmaStructure for CanonicalPr2<S> {
    type Sigma = S;
    type Dep = GlobalSectionsDep<S>;

    fn sigma(&self) -> &S {
        &self.dep.sigma
    }

    fn dep(&self) -> &GlobalSectionsDep<S> {
        &self.dep
    }

    fn pr2(&self, lam: &FamOf<S>) -> Result<Section<FamOf<S>, SArr<S>>> {
        diagonal(&self.dep.sigma, lam)
    }
}

fn diagonal<S: SigmaStructure>(sigma: &S, lam: &FamOf<S>) -> Result<Section<FamOf<S>, SArr<S>>> {
    let cat = sigma.base();
    let total = sigma.sigma_obj(lam)?;
    let pr = sigma.pr1(lam)?;
    let id = cat.identity(&total);
    let cone = Cone {
        apex: total,
        top: id.clone(),
        left: id,
    };
    Ok(Section {
        fam: sigma.fam().restrict(lam, &pr)?,
        arrow: sigma.mediate(lam, &pr, &cone)?,
    })
}

/// `pr2(λ)` is a section of both `pr1` and `Σ_λ pr1`; and `pr2(λ)(Σ_λ f)`
/// satisfies the mediator equations of the `(λ∘f, pr1)` square at
/// `(Σ_b(λ∘f), 1, 1)`, so equals `pr2(λ∘f)`.
pub fn check_canonical_pr2<S: SigmaStructure>(c: &CanonicalPr2<S>) -> LawReport {
    let mut report = LawReport::new("pr2", &[LawId::Pr2Section, LawId::Pr2Outer]);
    if let Err(e) = canonical_into(c, &mut report) {
        report.record_error(LawId::Pr2Outer, || format!("enumeration failed: {e}"));
    }
    report
}

fn canonical_into<S: SigmaStructure>(c: &CanonicalPr2<S>, report: &mut LawReport) -> Result<()> {
    let sigma = c.sigma();
    let dep = c.dep();
    let cat = sigma.base();
    let objects = cat.objects();
    let lbl = |l: &FamOf<S>| sigma.family_label(l);
    let albl = |f: &SArr<S>| cat.arrow_label(f);
    // Both legs of the diagonal cone are identities.
    let is_diagonal = |lam: &FamOf<S>, x: &SArr<S>| -> Result<bool> {
        let pr = sigma.pr1(lam)?;
        let id = cat.identity(&sigma.sigma_obj(lam)?);
        let lp = sigma.fam().restrict(lam, &pr)?;
        Ok(cat.compose(&sigma.pr1(&lp)?, x)? == id && cat.compose(&sigma.sigma_arr(lam, &pr)?, x)? == id)
    };
    for a in &objects {
        for lam in sigma.fam().families(a)? {
            let p = match c.pr2(&lam) {
                Ok(p) => p,
                Err(e) => {
                    report.record_error(LawId::Pr2Section, || format!("λ = {}: {e}", lbl(&lam)));
                    continue;
                }
            };
            match is_diagonal(&lam, &p.arrow) {
                Ok(ok) => report.record(LawId::Pr2Section, ok, || {
                    format!("λ = {}: pr2 = {} is not a section of both legs", lbl(&lam), albl(&p.arrow))
                }),
                Err(e) => report.record_error(LawId::Pr2Section, || format!("λ = {}: {e}", lbl(&lam))),
            }
            for b in &objects {
                for f in cat.hom(b, a)? {
                    let outer = (|| {
                        let x = dep.apply(&p, &sigma.sigma_arr(&lam, &f)?)?;
                        let lf = sigma.fam().restrict(&lam, &f)?;
                        let mediates = x.fam == sigma.fam().restrict(&lf, &sigma.pr1(&lf)?)?
                            && is_diagonal(&lf, &x.arrow)?;
                        Ok::<_, Error>((mediates, x, c.pr2(&lf)?))
                    })();
                    let where_ = || format!("λ = {}, f = {}", lbl(&lam), albl(&f));
                    match outer {
                        Ok((mediates, x, y)) => report.record(LawId::Pr2Outer, mediates && x == y, || {
                            format!(
                                "{}: pr2(λ)(Σ_λf) = {}, pr2(λ∘f) = {}{}",
                                where_(),
                                albl(&x.arrow),
                                albl(&y.arrow),
                                if mediates { "" } else { ", not a mediator" }
                            )
                        }),
                        Err(e) => report.record_error(LawId::Pr2Outer, || format!("{}: {e}", where_())),
                    }
                }
            }
        }
    }
    Ok(())
}

/// For the constant family `b` over `a`, the diagonal section of
/// `pr_a: (a×b)×b → a×b` is `⟨1, pr_b⟩`, and `j(pr2) = pr_b ∘ pr2 = pr_b`.
pub fn pr2_prime_check<S, C>(sigma: &S, a: &C::Obj, b: &C::Obj) -> Result<LawReport>
where
    S: SigmaStructure<Fams = ConstantFam<C>>,
    C: Category,
{
    pr2_prime_check_with(sigma, a, b, |outer, phi| sigma.base().compose(&outer.pr_b, phi))
}

/// As [`pr2_prime_check`], with `j` supplied. `j` receives the product
/// `(a×b) × b` and the section.
pub fn pr2_prime_check_with<S, C, J>(sigma: &S, a: &C::Obj, b: &C::Obj, j: J) -> Result<LawReport>
where
    S: SigmaStructure<Fams = ConstantFam<C>>,
    C: Category,
    J: Fn(&ProductWitness<C::Obj, C::Arr>, &C::Arr) -> Result<C::Arr>,
{
    let cat = sigma.base();
    let lam = sigma.fam().family(a.clone(), b.clone());
    let inner = product_of(sigma, &lam)?;
    let outer = product_of(sigma, &sigma.fam().family(inner.apex.clone(), b.clone()))?;
    let pr2 = diagonal(sigma, &lam)?.arrow;
    let expected = outer.pair(cat, &cat.identity(&inner.apex), &inner.pr_b)?;
    let mut report = LawReport::new("pr2prime", &[LawId::Pr2PrimeEq, LawId::Pr2PrimeJ]);
    report.record(LawId::Pr2PrimeEq, pr2 == expected, || {
        format!("pr2 = {} but ⟨1, pr_b⟩ = {}", cat.arrow_label(&pr2), cat.arrow_label(&expected))
    });
    let image = j(&outer, &pr2)?;
    report.record(LawId::Pr2PrimeJ, image == inner.pr_b, || {
        format!("j(pr2) = {} but pr_b = {}", cat.arrow_label(&image), cat.arrow_label(&inner.pr_b))
    });
    Ok(report)
}

/// The product `over × value` whose apex and first leg are the Sigma-object
/// and first projection of the constant family.
fn product_of<S, C>(sigma: &S, lam: &ConstFamily<C::Obj>) -> Result<ProductWitness<C::Obj, C::Arr>>
where
    S: SigmaStructure<Fams = ConstantFam<C>>,
    C: Category,
{
    let cat = sigma.base();
    let p = binary_product(cat, &lam.over, &lam.value)?.ok_or_else(|| {
        Error::MissingProduct(format!("{} × {}", cat.object_label(&lam.over), cat.object_label(&lam.value)))
    })?;
    if p.apex != sigma.sigma_obj(lam)? || p.pr_a != sigma.pr1(lam)? {
        return Err(Error::Integrity(format!(
            "Sigma-object of {} is not the chosen product",
            sigma.family_label(lam)
        )));
    }
    Ok(p)
}
