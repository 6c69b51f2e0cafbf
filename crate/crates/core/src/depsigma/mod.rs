//! Second projections: a dependent arrow `pr2 ∈ dHom(Σₐλ, λ ∘ pr1)` per
//! family, compatible with Sigma arrows:
//! `pr2(λ ∘ f) = pr2(λ)(Σ_λ f)`.

mod canonical;
mod elements;

use std::collections::HashMap;

use crate::cat::{terminal, Category};
use crate::dep::{ConstantDep, DepArrowId, DepStructure, FinSetDep, TableDep, TrivialDep, Choice};
use crate::error::{Error, Result};
use crate::fam::{ConstFamily, FamArrowId, FamStructure, FinFamily};
use crate::report::{LawId, LawReport};
use crate::sigma::{FamOf, FinSetSigma, ProductSigma, SArr, SigmaStructure, TableSigma, TrivialSigma};

pub use canonical::{check_canonical_pr2, pr2_prime_check, pr2_prime_check_with, CanonicalPr2};
pub use elements::{analyze_element, check_elements, element_equality, ElementAnalysis, EqualityVerdict};

pub type DsFam<T> = FamOf<<T as DepSigmaStructure>::Sigma>;
pub type DsArr<T> = SArr<<T as DepSigmaStructure>::Sigma>;
pub type DsDep<T> = <<T as DepSigmaStructure>::Dep as DepStructure>::Dep;

pub trait DepSigmaStructure {
    type Sigma: SigmaStructure;
    type Dep: DepStructure<Fams = <Self::Sigma as SigmaStructure>::Fams>;

    fn sigma(&self) -> &Self::Sigma;

    fn dep(&self) -> &Self::Dep;

    /// `pr2 ∈ dHom(Σₐλ, λ ∘ pr1)`.
    fn pr2(&self, lam: &DsFam<Self>) -> Result<DsDep<Self>>;
}

/// Typing of `pr2` and of the compatibility law, compatibility for every
/// `(λ, f)`, and its restriction to global elements `pr2(λ)(Σ_λ i) = pr2(λ(i))`.
pub fn check_depsigma_laws<T: DepSigmaStructure>(ds: &T) -> LawReport {
    let mut report = LawReport::new(
        "depsigma",
        &[LawId::DepSigmaTyping, LawId::DepSigmaCompat, LawId::DepSigmaPrelement],
    );
    if let Err(e) = depsigma_into(ds, &mut report) {
        report.record_error(LawId::DepSigmaCompat, || format!("enumeration failed: {e}"));
    }
    report
}

fn depsigma_into<T: DepSigmaStructure>(ds: &T, report: &mut LawReport) -> Result<()> {
    let (sigma, dep) = (ds.sigma(), ds.dep());
    let fam = sigma.fam();
    let cat = sigma.base();
    let objects = cat.objects();
    let one = terminal(cat);
    if one.is_none() {
        report.note = Some("no terminal object; depsigma.prelement has no instances".into());
    }
    let lbl = |l: &DsFam<T>| fam.family_label(l);
    let dlbl = |p: &DsDep<T>| dep.dep_label(p);
    for a in &objects {
        for lam in fam.families(a)? {
            let typed = (|| {
                let p = ds.pr2(&lam)?;
                let want = fam.restrict(&lam, &sigma.pr1(&lam)?)?;
                Ok::<_, Error>(dep.dep_family(&p) == want && dep.is_dep_arrow(&p)?)
            })();
            match typed {
                Ok(t) => report.record(LawId::DepSigmaTyping, t, || {
                    format!("λ = {}: pr2 is not in dHom(Σλ, λ∘pr1)", lbl(&lam))
                }),
                Err(e) => report.record_error(LawId::DepSigmaTyping, || format!("λ = {}: {e}", lbl(&lam))),
            }
            let compat_at = |f: &DsArr<T>| -> Result<(bool, DsDep<T>, DsDep<T>)> {
                let lf = fam.restrict(&lam, f)?;
                let lhs = ds.pr2(&lf)?;
                let rhs = dep.apply(&ds.pr2(&lam)?, &sigma.sigma_arr(&lam, f)?)?;
                // λ ∘ (pr1 ∘ Σ_λ f) and (λ ∘ f) ∘ pr1 must agree for both sides to share a type.
                let via_top = fam.restrict(&lam, &cat.compose(&sigma.pr1(&lam)?, &sigma.sigma_arr(&lam, f)?)?)?;
                let via_left = fam.restrict(&lf, &sigma.pr1(&lf)?)?;
                Ok((via_top == via_left, lhs, rhs))
            };
            for b in &objects {
                for f in cat.hom(b, a)? {
                    let where_ = || format!("λ = {}, f = {}", lbl(&lam), cat.arrow_label(&f));
                    match compat_at(&f) {
                        Ok((typed, lhs, rhs)) => {
                            report.record(LawId::DepSigmaTyping, typed, || {
                                format!("{}: λ∘(pr1∘Σ_λf) ≠ (λ∘f)∘pr1", where_())
                            });
                            report.record(LawId::DepSigmaCompat, lhs == rhs, || {
                                format!("{}: pr2(λ∘f) = {} but pr2(λ)(Σ_λf) = {}", where_(), dlbl(&lhs), dlbl(&rhs))
                            });
                        }
                        Err(e) => report.record_error(LawId::DepSigmaCompat, || format!("{}: {e}", where_())),
                    }
                }
            }
            if let Some(one) = &one {
                for i in one.global_elements(cat, a)? {
                    let where_ = || format!("λ = {}, i = {}", lbl(&lam), cat.arrow_label(&i));
                    match compat_at(&i) {
                        Ok((_, lhs, rhs)) => report.record(LawId::DepSigmaPrelement, lhs == rhs, || {
                            format!("{}: pr2(λ)(Σ_λi) = {} but pr2(λ(i)) = {}", where_(), dlbl(&rhs), dlbl(&lhs))
                        }),
                        Err(e) => report.record_error(LawId::DepSigmaPrelement, || format!("{}: {e}", where_())),
                    }
                }
            }
        }
    }
    Ok(())
}

/// `pr2 = ∗`.
#[derive(Debug, Clone)]
pub struct TrivialDepSigma<F> {
    pub sigma: TrivialSigma<F>,
    pub dep: TrivialDep<F>,
}

impl<F: FamStructure + Clone> TrivialDepSigma<F> {
    pub fn new(fam: F) -> Self {
        TrivialDepSigma {
            sigma: TrivialSigma { fam: fam.clone() },
            dep: TrivialDep { fam },
        }
    }
}

impl<F: FamStructure> DepSigmaStructure for TrivialDepSigma<F> {
    type Sigma = TrivialSigma<F>;
    type Dep = TrivialDep<F>;

    fn sigma(&self) -> &TrivialSigma<F> {
        &self.sigma
    }

    fn dep(&self) -> &TrivialDep<F> {
        &self.dep
    }

    fn pr2(&self, lam: &F::Fam) -> Result<F::Fam> {
        self.sigma.fam.restrict(lam, &self.sigma.pr1(lam)?)
    }
}

/// Products over constant families with `pr2 = pr_b`.
#[derive(Debug, Clone)]
pub struct ProductDepSigma<C: Category> {
    pub sigma: ProductSigma<C>,
    pub dep: ConstantDep<C>,
}

impl<C: Category + Clone> ProductDepSigma<C> {
    pub fn new(cat: C) -> Result<Self> {
        Ok(ProductDepSigma {
            sigma: ProductSigma::new(cat.clone())?,
            dep: ConstantDep::new(cat),
        })
    }
}

impl<C: Category> DepSigmaStructure for ProductDepSigma<C> {
    type Sigma = ProductSigma<C>;
    type Dep = ConstantDep<C>;

    fn sigma(&self) -> &ProductSigma<C> {
        &self.sigma
    }

    fn dep(&self) -> &ConstantDep<C> {
        &self.dep
    }

    fn pr2(&self, lam: &ConstFamily<C::Obj>) -> Result<C::Arr> {
        Ok(self.sigma.product(&lam.over, &lam.value)?.pr_b)
    }
}

/// Disjoint unions with choice functions: `pr2` picks the fibre coordinate.
#[derive(Debug, Clone)]
pub struct FinSetDepSigma {
    pub sigma: FinSetSigma,
    pub dep: FinSetDep,
}

impl FinSetDepSigma {
    pub fn new(fam: crate::fam::FinSetFam) -> Self {
        FinSetDepSigma {
            sigma: FinSetSigma::new(fam.clone()),
            dep: FinSetDep::new(fam),
        }
    }
}

impl DepSigmaStructure for FinSetDepSigma {
    type Sigma = FinSetSigma;
    type Dep = FinSetDep;

    fn sigma(&self) -> &FinSetSigma {
        &self.sigma
    }

    fn dep(&self) -> &FinSetDep {
        &self.dep
    }

    fn pr2(&self, lam: &FinFamily) -> Result<Choice> {
        let family = self.sigma.fam.restrict(lam, &self.sigma.pr1(lam)?)?;
        let values = (0..lam.total()).map(|p| FinSetSigma::decode(lam, p).1).collect();
        Ok(Choice { family, values })
    }
}

/// `pr2` given by a table over table-backed Sigma and dep structures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDepSigma {
    pub sigma: TableSigma,
    pub dep: TableDep,
    pr2: Vec<DepArrowId>,
}

impl TableDepSigma {
    /// Both layers must sit over the same family table.
    pub fn new(sigma: TableSigma, dep: TableDep, pr2: Vec<DepArrowId>) -> Result<Self> {
        if sigma.fam != dep.fam {
            return Err(Error::Integrity("sigma and dep layers sit over different family tables".into()));
        }
        if pr2.len() != sigma.fam.num_families() {
            return Err(Error::Integrity(format!(
                "pr2 table lists {} entries for {} families",
                pr2.len(),
                sigma.fam.num_families()
            )));
        }
        for p in &pr2 {
            dep.check_dep(*p)?;
        }
        Ok(TableDepSigma { sigma, dep, pr2 })
    }

    /// Tabulates any (dep,Σ) structure over a table Sigma layer, tabulating
    /// its dep layer along the way.
    pub fn tabulate<T: DepSigmaStructure<Sigma = TableSigma>>(ds: &T) -> Result<Self> {
        let src = ds.dep();
        let dep = TableDep::tabulate(src)?;
        let mut pr2 = Vec::new();
        for lam in ds.sigma().fam.family_ids() {
            let p = ds.pr2(&lam)?;
            let over = src.dep_family(&p);
            let pos = src.dep_arrows(&over)?.iter().position(|x| *x == p).ok_or_else(|| {
                Error::BudgetExceeded(format!("pr2 {} is outside the enumerated dependent arrows", src.dep_label(&p)))
            })?;
            pr2.push(dep.dep_arrows(&over)?[pos]);
        }
        TableDepSigma::new(ds.sigma().clone(), dep, pr2)
    }

    pub fn pr2_table(&self) -> &[DepArrowId] {
        &self.pr2
    }

    pub fn with_pr2(mut self, lam: FamArrowId, phi: DepArrowId) -> Self {
        self.pr2[lam.index()] = phi;
        self
    }
}

impl DepSigmaStructure for TableDepSigma {
    type Sigma = TableSigma;
    type Dep = TableDep;

    fn sigma(&self) -> &TableSigma {
        &self.sigma
    }

    fn dep(&self) -> &TableDep {
        &self.dep
    }

    fn pr2(&self, lam: &FamArrowId) -> Result<DepArrowId> {
        self.sigma.fam.check_family(*lam)?;
        Ok(self.pr2[lam.index()])
    }
}

/// A (dep,Σ) structure with selected `pr2` entries replaced.
#[derive(Debug, Clone)]
pub struct Pr2Override<T: DepSigmaStructure> {
    pub inner: T,
    pub entries: HashMap<DsFam<T>, DsDep<T>>,
}

impl<T: DepSigmaStructure> Pr2Override<T> {
    pub fn new(inner: T) -> Self {
        Pr2Override {
            inner,
            entries: HashMap::new(),
        }
    }

    pub fn with(mut self, lam: DsFam<T>, phi: DsDep<T>) -> Self {
        self.entries.insert(lam, phi);
        self
    }
}

impl<T: DepSigmaStructure> DepSigmaStructure for Pr2Override<T> {
    type Sigma = T::Sigma;
    type Dep = T::Dep;

    fn sigma(&self) -> &T::Sigma {
        self.inner.sigma()
    }

    fn dep(&self) -> &T::Dep {
        self.inner.dep()
    }

    fn pr2(&self, lam: &DsFam<T>) -> Result<DsDep<T>> {
        match self.entries.get(lam) {
            Some(p) => Ok(p.clone()),
            None => self.inner.pr2(lam),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{FinSetCat, FnArrow};
    use crate::fam::FinSetFam;
    use crate::report::Status;

    #[test]
    fn standard_structures_pass() {
        let fam = FinSetFam::new(FinSetCat::new(3), 2);
        let r = check_depsigma_laws(&TrivialDepSigma::new(fam.clone()));
        assert!(r.passed(), "{r}");
        let r = check_depsigma_laws(&ProductDepSigma::new(FinSetCat::new(3)).unwrap());
        assert!(r.passed(), "{r}");
        let r = check_depsigma_laws(&FinSetDepSigma::new(fam));
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn mutated_pr2_fails_compatibility() {
        let ds = ProductDepSigma::new(FinSetCat::new(2)).unwrap();
        let lam = ds.sigma.fam.family(1, 2);
        // pr2 over 1 × 2 swapped: still well typed, no longer compatible.
        let bad = Pr2Override::new(ds).with(lam, FnArrow::new(2, vec![1, 0]));
        let r = check_depsigma_laws(&bad);
        assert_eq!(r.status(LawId::DepSigmaTyping), Some(Status::Pass));
        assert_eq!(r.status(LawId::DepSigmaCompat), Some(Status::Fail));
        assert!(r.entry(LawId::DepSigmaCompat).unwrap().witness.is_some());
    }
}
