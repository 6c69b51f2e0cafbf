//! Mutation testing: plant one defect in a model's structure and check that
//! the targeted law fails with a witness.

use std::fmt;

use crate::cat::{check_category_laws, materialize, terminal, ArrowId, Category, Cone, FinCat, FnArrow};
use crate::dep::{check_dep_laws, check_sections, dep_object_bijection, Choice, DepOverride, DepStructure, FinSetDep, GlobalSectionsDep};
use crate::depsigma::{
    check_canonical_pr2, check_depsigma_laws, check_elements, pr2_prime_check, pr2_prime_check_with, CanonicalPr2,
    DepSigmaStructure, DsDep, DsFam, FinSetDepSigma, Pr2Override,
};
use crate::error::{Error, Result};
use crate::fam::{
    check_cofam_laws, check_fam_laws, check_weak_fam_laws, CofamFromOp, CosliceFam, FamOverride, FamStructure,
    FinFamily, FinSetFam, Reversed, SliceFam,
};
use crate::report::{LawId, LawReport};
use crate::sigma::{check_sigma_laws, check_transport, FinSetSigma, ProductSigma, SigmaOverride, SigmaStructure};

use super::document::{FinSetModel, Model, TableModel};
use super::runner::{applicable, Suite};

/// Candidate mutations tried per law before giving up.
pub const MAX_CANDIDATES: usize = 32;

#[derive(Debug, Clone)]
pub struct MutationOutcome {
    pub law: LawId,
    pub mutation: String,
    pub report: LawReport,
}

impl MutationOutcome {
    /// The law failed and the report names a witness.
    pub fn detected(&self) -> bool {
        self.report
            .entry(self.law)
            .is_some_and(|e| e.failed > 0 && e.witness.is_some())
    }
}

impl fmt::Display for MutationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mutation: {}", self.mutation)?;
        write!(f, "{}", self.report)?;
        let verdict = if self.detected() { "detected" } else { "NOT detected" };
        writeln!(f, "{}: {verdict}", self.law)
    }
}

/// The runner suite that checks `law`, if any.
pub fn suite_of(law: LawId) -> Option<Suite> {
    use LawId::*;
    Some(match law {
        CatTyping | CatUnit | CatAssoc => Suite::Category,
        Fam1 | Fam2 => Suite::Fam,
        SigmaSquare | SigmaPullback | S1 | S2 => Suite::Sigma,
        TranspIso | TranspMono => Suite::Transport,
        DepTyping | Dep1 | Dep2 | SectionsEq1 | SectionsEq2 => Suite::Dep,
        DepSigmaTyping | DepSigmaCompat | DepSigmaPrelement | Pr2Section | Pr2Outer | Pr2PrimeEq | Pr2PrimeJ => {
            Suite::Depsigma
        }
        ElementPr0 | ElementPr1 | ElementPr2 | ElementPr3 | ElementPr4 => Suite::Elements,
        DepObjectBij => Suite::DepObjects,
        WeakFam1 | WeakFam2 => Suite::Weak,
        Cofam1 | Cofam2 => Suite::Cofam,
        _ => return None,
    })
}

fn not_applicable(msg: impl Into<String>) -> Error {
    Error::MutationNotApplicable(msg.into())
}

/// Plants a defect aimed at `law` and reruns the check that covers it.
///
/// Errors with `MutationNotApplicable` when the law is not checked for this
/// model or no defect can be planted in it.
pub fn mutate(model: &Model, law: LawId) -> Result<MutationOutcome> {
    let suite = suite_of(law).ok_or_else(|| not_applicable(format!("{law} is not a mutation target")))?;
    applicable(model, suite).map_err(|reason| not_applicable(format!("{law}: {reason}")))?;
    match model {
        Model::FinSet(m) => finset(m, law),
        Model::Table(m) => table(m, law),
    }
}

fn search<M>(
    law: LawId,
    candidates: impl IntoIterator<Item = (String, M)>,
    check: impl Fn(&M) -> Result<LawReport>,
) -> Result<MutationOutcome> {
    let mut last = None;
    for (mutation, m) in candidates.into_iter().take(MAX_CANDIDATES) {
        let outcome = MutationOutcome {
            law,
            mutation,
            report: check(&m)?,
        };
        if outcome.detected() {
            return Ok(outcome);
        }
        last = Some(outcome);
    }
    last.ok_or_else(|| not_applicable(format!("{law}: no entry of this instance can be altered")))
}

fn one<M>(law: LawId, mutation: String, m: M, check: impl Fn(&M) -> Result<LawReport>) -> Result<MutationOutcome> {
    search(law, [(mutation, m)], check)
}

/// A (dep,Σ) structure whose Sigma layer is overridden.
struct WithSigma<T: DepSigmaStructure> {
    inner: T,
    sigma: SigmaOverride<T::Sigma>,
}

impl<T: DepSigmaStructure> DepSigmaStructure for WithSigma<T> {
    type Sigma = SigmaOverride<T::Sigma>;
    type Dep = T::Dep;

    fn sigma(&self) -> &Self::Sigma {
        &self.sigma
    }

    fn dep(&self) -> &T::Dep {
        self.inner.dep()
    }

    fn pr2(&self, lam: &DsFam<T>) -> Result<DsDep<T>> {
        self.inner.pr2(lam)
    }
}

fn arr(cod: usize, map: &[usize]) -> FnArrow {
    FnArrow::new(cod, map.to_vec())
}

fn fam(fibers: &[usize]) -> FinFamily {
    FinFamily::new(fibers.to_vec())
}

fn finset(m: &FinSetModel, law: LawId) -> Result<MutationOutcome> {
    use LawId::*;
    let cat = m.cat;
    let cap = m.fiber_cap.unwrap_or(0);
    let needs_fam = !matches!(suite_of(law), Some(Suite::Category | Suite::DepObjects | Suite::Weak | Suite::Cofam));
    if cat.max_object < 2 || (needs_fam && cap < 2) {
        return Err(not_applicable(format!(
            "{law}: finset mutations need max_object_size ≥ 2{}",
            if needs_fam { " and fiber_cap ≥ 2" } else { "" }
        )));
    }
    let (id1, id2, swap, c0) = (arr(1, &[0]), arr(2, &[0, 1]), arr(2, &[1, 0]), arr(2, &[0, 0]));
    let to1 = arr(1, &[0, 0]);
    let lbl = |f: &FnArrow| cat.arrow_label(f);
    let fams = FinSetFam::new(cat, cap);
    let sigma = FinSetSigma::new(fams.clone());
    match law {
        CatTyping | CatUnit | CatAssoc => {
            let mat = materialize(&cat)?;
            let id = |f: &FnArrow| mat.arrow_id(f).ok_or_else(|| Error::UnknownArrow(lbl(f)));
            let (g, f, h) = match law {
                CatTyping => (&id2, &id2, arr(2, &[0])),
                CatUnit => (&id2, &swap, id2.clone()),
                _ => (&swap, &c0, c0.clone()),
            };
            let mutated = mat.cat.with_comp_entry(id(g)?, id(f)?, id(&h)?)?;
            one(law, format!("{} ∘ {} := {}", lbl(g), lbl(f), lbl(&h)), mutated, |c| {
                Ok(check_category_laws(c))
            })
        }
        Fam1 | Fam2 => {
            let (lam, f, r) = if law == Fam1 {
                (fam(&[1, 0]), id2, fam(&[0, 1]))
            } else {
                (fam(&[0, 1]), swap, fam(&[1, 1]))
            };
            let desc = format!("{:?} ∘ {} := {:?}", lam, lbl(&f), r);
            one(law, desc, FamOverride::new(fams).with(lam, f, r), |x| Ok(check_fam_laws(x)))
        }
        SigmaSquare | SigmaPullback | S1 | S2 | TranspMono => {
            let (lam, f, t) = match law {
                SigmaSquare => (fam(&[1, 1]), id2, swap),
                SigmaPullback => (fam(&[2]), id1, c0),
                S1 => (fam(&[2]), id1, swap),
                S2 => (fam(&[2]), to1, arr(2, &[1, 0, 1, 0])),
                _ => (fam(&[2, 2]), arr(2, &[0]), arr(4, &[0, 0])),
            };
            let desc = format!("Σ_{:?}({}) := {}", lam, lbl(&f), lbl(&t));
            let mut s = SigmaOverride::new(sigma);
            s.sigma_arr.insert((lam, f), t);
            if law == TranspMono {
                one(law, desc, s, check_transport)
            } else {
                one(law, desc, s, |x| Ok(check_sigma_laws(x)))
            }
        }
        TranspIso => {
            let mut s = SigmaOverride::new(sigma);
            s.mediate.insert((fam(&[2]), id1.clone(), id2, to1), c0.clone());
            let desc = format!("transport of [2] at {} := {}", lbl(&id1), lbl(&c0));
            one(law, desc, s, check_transport)
        }
        DepTyping | Dep1 | Dep2 => {
            let phi = Choice {
                family: fam(&[2]),
                values: vec![0],
            };
            let (f, r) = match law {
                DepTyping => (id1, Choice { family: fam(&[1]), values: vec![0] }),
                Dep1 => (id1, Choice { family: fam(&[2]), values: vec![1] }),
                _ => (to1, Choice { family: fam(&[2, 2]), values: vec![1, 1] }),
            };
            let desc = format!("{:?}({}) := {:?}", phi, lbl(&f), r);
            one(law, desc, DepOverride::new(FinSetDep::new(fams)).with(phi, f, r), |d| Ok(check_dep_laws(d)))
        }
        SectionsEq1 | SectionsEq2 => {
            let mut s = SigmaOverride::new(sigma);
            s.mediate.insert((fam(&[1, 1]), id2.clone(), id2.clone(), id2), swap.clone());
            let desc = format!("section [1, 1] applied to the identity := {}", lbl(&swap));
            one(law, desc, GlobalSectionsDep::new(s), |d| Ok(check_sections(d)))
        }
        DepSigmaTyping | DepSigmaCompat | DepSigmaPrelement | ElementPr2 | ElementPr4 => {
            let (lam, phi) = if law == DepSigmaTyping {
                (fam(&[2]), Choice { family: fam(&[2]), values: vec![0] })
            } else {
                (fam(&[2, 1]), Choice { family: fam(&[2, 2, 1]), values: vec![1, 0, 0] })
            };
            let desc = format!("pr2({:?}) := {:?}", lam, phi);
            let ds = Pr2Override::new(FinSetDepSigma::new(fams)).with(lam, phi);
            if matches!(law, ElementPr2 | ElementPr4) {
                one(law, desc, ds, check_elements)
            } else {
                one(law, desc, ds, |x| Ok(check_depsigma_laws(x)))
            }
        }
        Pr2Section | Pr2Outer => canonical(law, &sigma),
        Pr2PrimeEq | Pr2PrimeJ => {
            let products = ProductSigma::new(cat)?;
            if law == Pr2PrimeJ {
                let desc = "j(φ) := swap ∘ pr_b ∘ φ for a = 1, b = 2".to_string();
                return one(law, desc, (), |_| {
                    pr2_prime_check_with(&products, &1, &2, |outer, phi| {
                        cat.compose(&swap, &cat.compose(&outer.pr_b, phi)?)
                    })
                });
            }
            let lam = products.fam.family(1, 2);
            let pr = products.pr1(&lam)?;
            let total = products.sigma_obj(&lam)?;
            let target = products.sigma_obj(&products.fam.restrict(&lam, &pr)?)?;
            let truth = products.mediate(&lam, &pr, &diagonal_cone(&cat, &total))?;
            let mut cands = Vec::new();
            for x in cat.hom(&total, &target)?.into_iter().filter(|x| *x != truth) {
                let mut s = SigmaOverride::new(products.clone());
                s.mediate.insert((lam.clone(), pr.clone(), cat.identity(&total), cat.identity(&total)), x.clone());
                cands.push((format!("pr2 of 1 × 2 := {}", lbl(&x)), s));
            }
            search(law, cands, |s| pr2_prime_check(s, &1, &2))
        }
        ElementPr0 | ElementPr1 | ElementPr3 => elements(law, &FinSetDepSigma::new(fams)),
        DepObjectBij => dep_objects(&cat),
        WeakFam1 | WeakFam2 => {
            let (f, r) = if law == WeakFam1 {
                (id1.clone(), arr(1, &[]))
            } else {
                (to1, arr(2, &[]))
            };
            let desc = format!("{} ∘ {} := {}", lbl(&id1), lbl(&f), lbl(&r));
            let slice = FamOverride::new(SliceFam::new(cat, Reversed)?).with(id1, f, r);
            one(law, desc, slice, |x| Ok(check_weak_fam_laws(x)))
        }
        Cofam1 | Cofam2 => cofam(law, &materialize(&cat)?.cat),
        _ => Err(not_applicable(format!("{law} is not a mutation target"))),
    }
}

fn diagonal_cone<C: Category>(cat: &C, total: &C::Obj) -> Cone<C::Obj, C::Arr> {
    Cone {
        apex: total.clone(),
        top: cat.identity(total),
        left: cat.identity(total),
    }
}

/// Replaces the diagonal mediator of one family by another arrow.
fn canonical<S: SigmaStructure + Clone>(law: LawId, sigma: &S) -> Result<MutationOutcome> {
    let cat = sigma.base();
    let mut cands = Vec::new();
    'outer: for a in cat.objects() {
        for lam in sigma.fam().families(&a)? {
            let pr = sigma.pr1(&lam)?;
            let total = sigma.sigma_obj(&lam)?;
            let target = sigma.sigma_obj(&sigma.fam().restrict(&lam, &pr)?)?;
            let truth = sigma.mediate(&lam, &pr, &diagonal_cone(cat, &total))?;
            for x in cat.hom(&total, &target)?.into_iter().filter(|x| *x != truth) {
                let mut s = SigmaOverride::new(sigma.clone());
                let id = cat.identity(&total);
                s.mediate.insert((lam.clone(), pr.clone(), id.clone(), id), x.clone());
                let desc = format!("pr2({}) := {}", sigma.family_label(&lam), cat.arrow_label(&x));
                cands.push((desc, CanonicalPr2::new(s)));
                if cands.len() == MAX_CANDIDATES {
                    break 'outer;
                }
            }
        }
    }
    search(law, cands, |c| Ok(check_canonical_pr2(c)))
}

/// Replaces the coordinate `u` of one global element `z` of a Sigma-object.
fn elements<T: DepSigmaStructure + Clone>(law: LawId, ds: &T) -> Result<MutationOutcome>
where
    T::Sigma: Clone,
{
    let sigma = ds.sigma();
    let cat = sigma.base();
    let one = terminal(cat).ok_or(Error::NoTerminalObject)?;
    let id1 = cat.identity(&one.object);
    let objects = cat.objects();
    let mut cands = Vec::new();
    'outer: for a in &objects {
        for lam in sigma.fam().families(a)? {
            for z in one.global_elements(cat, &sigma.sigma_obj(&lam)?)? {
                let i = cat.compose(&sigma.pr1(&lam)?, &z)?;
                let target = sigma.sigma_obj(&sigma.fam().restrict(&lam, &i)?)?;
                let cone = Cone {
                    apex: one.object.clone(),
                    top: z.clone(),
                    left: id1.clone(),
                };
                let truth = sigma.mediate(&lam, &i, &cone)?;
                let alternatives: Vec<_> = if law == LawId::ElementPr0 {
                    let mut out = Vec::new();
                    for b in objects.iter().filter(|b| **b != target) {
                        out.extend(cat.hom(&one.object, b)?);
                    }
                    out
                } else {
                    cat.hom(&one.object, &target)?.into_iter().filter(|u| *u != truth).collect()
                };
                for u in alternatives {
                    let mut s = SigmaOverride::new(sigma.clone());
                    s.mediate.insert((lam.clone(), i.clone(), z.clone(), id1.clone()), u.clone());
                    let desc = format!(
                        "coordinate of {} in Σ{} := {}",
                        cat.arrow_label(&z),
                        sigma.family_label(&lam),
                        cat.arrow_label(&u)
                    );
                    cands.push((desc, WithSigma { inner: ds.clone(), sigma: s }));
                    if cands.len() == MAX_CANDIDATES {
                        break 'outer;
                    }
                }
            }
        }
    }
    search(law, cands, check_elements)
}

/// Makes `j` send the first section where the second one goes.
fn dep_objects<C: Category>(cat: &C) -> Result<MutationOutcome> {
    let objects = cat.objects();
    for a in &objects {
        for b in &objects {
            let bij = dep_object_bijection(cat, a, b)?;
            if bij.j.len() >= 2 && bij.j[0] != bij.j[1] {
                let desc = format!(
                    "j({}) := {} for a = {}, b = {}",
                    cat.arrow_label(&bij.sections[0]),
                    cat.arrow_label(&bij.j[1]),
                    cat.object_label(a),
                    cat.object_label(b)
                );
                let image = bij.j[1].clone();
                return one(LawId::DepObjectBij, desc, bij.with_j(0, image), |x| Ok(x.check(cat)));
            }
        }
    }
    Err(not_applicable("exdo2.bij: no product with two sections in the window"))
}

/// Alters one action `g ∘ p` of the coslice cofamilies.
fn cofam(law: LawId, cat: &FinCat) -> Result<MutationOutcome> {
    let base = CosliceFam::new(cat.opposite());
    let cofam = CofamFromOp::new(cat.clone(), base.clone())?;
    let is_id = |g: &ArrowId| cat.identity(&cat.dom(g)) == *g;
    let objects = cat.objects();
    let mut cands = Vec::new();
    'outer: for b in &objects {
        for p in cofam.cofamilies(b)? {
            for c in &objects {
                for g in cat.hom(b, c)?.into_iter().filter(|g| is_id(g) == (law == LawId::Cofam1)) {
                    let truth = cofam.act(&g, &p)?;
                    for q in base.families(c)?.into_iter().filter(|q| *q != truth) {
                        let desc = format!(
                            "{} ∘ {} := {}",
                            cat.arrow_label(&g),
                            base.family_label(&p),
                            base.family_label(&q)
                        );
                        let fam = FamOverride::new(base.clone()).with(p, g, q);
                        cands.push((desc, fam));
                        if cands.len() == MAX_CANDIDATES {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    search(law, cands, |fam| Ok(check_cofam_laws(&CofamFromOp::new(cat.clone(), fam.clone())?)))
}

fn table(m: &TableModel, law: LawId) -> Result<MutationOutcome> {
    use LawId::*;
    let cat = &m.cat;
    let is_id = |f: &ArrowId| cat.identity(&cat.dom(f)) == *f;
    let arrows: Vec<ArrowId> = (0..cat.num_arrows()).map(|i| ArrowId(i as u32)).collect();
    let layer = |what: &str| Error::LayerMissing(format!("{what} layer"));
    match law {
        CatTyping | CatUnit | CatAssoc => {
            let mut cands = Vec::new();
            for (g, f, h) in cat.composition_triples() {
                let typing = (cat.dom(&f), cat.cod(&g));
                let fits = |k: &ArrowId| match law {
                    CatTyping => (cat.dom(k), cat.cod(k)) != typing,
                    CatUnit => (is_id(&g) || is_id(&f)) && (cat.dom(k), cat.cod(k)) == typing,
                    _ => !is_id(&g) && !is_id(&f) && (cat.dom(k), cat.cod(k)) == typing,
                };
                for k in arrows.iter().filter(|k| **k != h && fits(k)) {
                    let desc = format!("{} ∘ {} := {}", cat.arrow_label(&g), cat.arrow_label(&f), cat.arrow_label(k));
                    cands.push((desc, (g, f, *k)));
                }
            }
            search(law, cands, |&(g, f, k)| Ok(check_category_laws(&cat.with_comp_entry(g, f, k)?)))
        }
        Fam1 | Fam2 => {
            let fams = m.fam.as_ref().ok_or_else(|| layer("fam"))?;
            let mut cands = Vec::new();
            for (lam, f, mu) in fams.restriction_triples() {
                if is_id(&f) != (law == Fam1) {
                    continue;
                }
                for nu in fams.families(&cat.dom(&f))?.into_iter().filter(|nu| *nu != mu) {
                    let desc = format!(
                        "{} ∘ {} := {}",
                        fams.family_label(&lam),
                        cat.arrow_label(&f),
                        fams.family_label(&nu)
                    );
                    cands.push((desc, (lam, f, nu)));
                }
            }
            search(law, cands, |&(lam, f, nu)| Ok(check_fam_laws(&fams.clone().with_restrict(lam, f, nu))))
        }
        SigmaSquare | SigmaPullback | S1 | S2 | TranspIso | TranspMono | SectionsEq1 | SectionsEq2 => {
            let sigma = m.sigma.as_ref().ok_or_else(|| layer("sigma"))?;
            let one = terminal(cat);
            let mut cands = Vec::new();
            for (lam, f, t) in sigma.sigma_arrow_triples() {
                let keep = match law {
                    S1 => is_id(&f),
                    S2 => !is_id(&f),
                    TranspIso | TranspMono => one.as_ref().is_some_and(|o| cat.dom(&f) == o.object),
                    _ => true,
                };
                if !keep {
                    continue;
                }
                let left = sigma.pr1(&sigma.fam.restrict(&lam, &f)?)?;
                let bottom = cat.compose(&f, &left)?;
                let pr = sigma.pr1(&lam)?;
                for u in cat.hom(&cat.dom(&t), &cat.cod(&t))?.into_iter().filter(|u| *u != t) {
                    let commutes = cat.compose(&pr, &u)? == bottom;
                    if (law == SigmaSquare && commutes) || (law == SigmaPullback && !commutes) {
                        continue;
                    }
                    let desc = format!(
                        "Σ_{}({}) := {}",
                        sigma.family_label(&lam),
                        cat.arrow_label(&f),
                        cat.arrow_label(&u)
                    );
                    cands.push((desc, (lam, f, u)));
                }
            }
            search(law, cands, |&(lam, f, u)| {
                let s = sigma.clone().with_sigma_arr(lam, f, u);
                match law {
                    TranspIso | TranspMono => check_transport(&s),
                    SectionsEq1 | SectionsEq2 => Ok(check_sections(&GlobalSectionsDep::new(s))),
                    _ => Ok(check_sigma_laws(&s)),
                }
            })
        }
        DepTyping | Dep1 | Dep2 => {
            let dep = m.dep.as_ref().ok_or_else(|| layer("dep"))?;
            let mut cands = Vec::new();
            for (phi, f, psi) in dep.application_triples() {
                let over = dep.dep_family(&psi);
                let alternatives: Vec<_> = match law {
                    DepTyping => dep.dep_ids().filter(|x| dep.dep_family(x) != over).collect(),
                    _ if is_id(&f) != (law == Dep1) => continue,
                    _ => dep.dep_arrows(&over)?.into_iter().filter(|x| *x != psi).collect(),
                };
                for x in alternatives {
                    let desc = format!("{}({}) := {}", dep.dep_label(&phi), cat.arrow_label(&f), dep.dep_label(&x));
                    cands.push((desc, (phi, f, x)));
                }
            }
            search(law, cands, |&(phi, f, x)| Ok(check_dep_laws(&dep.clone().with_apply(phi, f, x))))
        }
        DepSigmaTyping | DepSigmaCompat | DepSigmaPrelement | ElementPr2 | ElementPr4 => {
            let ds = m.depsigma.as_ref().ok_or_else(|| layer("depsigma"))?;
            let mut cands = Vec::new();
            for lam in ds.sigma.fam.family_ids() {
                let cur = ds.pr2(&lam)?;
                let over = ds.dep.dep_family(&cur);
                let alternatives: Vec<_> = if law == DepSigmaTyping {
                    ds.dep.dep_ids().filter(|x| ds.dep.dep_family(x) != over).collect()
                } else {
                    ds.dep.dep_arrows(&over)?.into_iter().filter(|x| *x != cur).collect()
                };
                for x in alternatives {
                    let desc = format!("pr2({}) := {}", ds.sigma.family_label(&lam), ds.dep.dep_label(&x));
                    cands.push((desc, (lam, x)));
                }
            }
            search(law, cands, |&(lam, x)| {
                let mutated = ds.clone().with_pr2(lam, x);
                match law {
                    ElementPr2 | ElementPr4 => check_elements(&mutated),
                    _ => Ok(check_depsigma_laws(&mutated)),
                }
            })
        }
        Pr2Section | Pr2Outer => canonical(law, m.sigma.as_ref().ok_or_else(|| layer("sigma"))?),
        ElementPr0 | ElementPr1 | ElementPr3 => elements(law, m.depsigma.as_ref().ok_or_else(|| layer("depsigma"))?),
        DepObjectBij => dep_objects(cat),
        Cofam1 | Cofam2 => cofam(law, cat),
        _ => Err(not_applicable(format!("{law} is not checked for table documents"))),
    }
}
