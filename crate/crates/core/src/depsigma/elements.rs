//! Global elements of `Σₐλ`: every `z: 1 → Σₐλ` splits as a global element
//! `i = pr1 ∘ z` of `a` and a global element `u` of `Σ₁λ(i)`, and two
//! elements are equal iff their first parts agree and the transport carries
//! one second part to the other.

use super::{DepSigmaStructure, DsArr, DsFam};
use crate::cat::{terminal, Category, Cone, Terminal};
use crate::dep::DepStructure;
use crate::error::{Error, Result};
use crate::fam::FamStructure;
use crate::report::{LawId, LawReport};
use crate::sigma::{transport, SObj, SigmaStructure};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementAnalysis<A> {
    pub element: A,
    /// `i = pr1 ∘ z`.
    pub first: A,
    /// `u: 1 → Σ₁λ(i)`, the mediator at the cone `(1, z, 1₁)`.
    pub coordinate: A,
    /// `u` is a global element of `Σ₁λ(i)`.
    pub typed: bool,
    /// `z = Σ_λ i ∘ u`.
    pub recovers: bool,
    /// `pr2(λ)(z) = pr2(λ(i))(u)`.
    pub second_agrees: bool,
}

pub fn analyze_element<T: DepSigmaStructure>(
    ds: &T,
    lam: &DsFam<T>,
    z: &DsArr<T>,
) -> Result<ElementAnalysis<DsArr<T>>> {
    let sigma = ds.sigma();
    let cat = sigma.base();
    let one = terminal(cat).ok_or(Error::NoTerminalObject)?;
    analyze_with(ds, &one, lam, z)
}

fn analyze_with<T: DepSigmaStructure>(
    ds: &T,
    one: &Terminal<SObj<T::Sigma>>,
    lam: &DsFam<T>,
    z: &DsArr<T>,
) -> Result<ElementAnalysis<DsArr<T>>> {
    let (sigma, dep) = (ds.sigma(), ds.dep());
    let cat = sigma.base();
    let id1 = cat.identity(&one.object);
    let first = cat.compose(&sigma.pr1(lam)?, z)?;
    let li = sigma.fam().restrict(lam, &first)?;
    let cone = Cone {
        apex: one.object.clone(),
        top: z.clone(),
        left: id1.clone(),
    };
    let u = sigma.mediate(lam, &first, &cone)?;
    let target = sigma.sigma_obj(&li)?;
    let typed = cat.check_arrow(&u).is_ok()
        && cat.dom(&u) == one.object
        && cat.cod(&u) == target
        && cat.compose(&one.bang(cat, &target)?, &u)? == id1;
    let (recovers, second_agrees) = if typed {
        let back = cat.compose(&sigma.sigma_arr(lam, &first)?, &u)?;
        let lhs = dep.apply(&ds.pr2(lam)?, z)?;
        let rhs = dep.apply(&ds.pr2(&li)?, &u)?;
        (back == *z, lhs == rhs)
    } else {
        (false, false)
    };
    Ok(ElementAnalysis {
        element: z.clone(),
        first,
        coordinate: u,
        typed,
        recovers,
        second_agrees,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityVerdict {
    pub equal: bool,
    pub same_first: bool,
    /// `same_first` and the transport carries `z`'s coordinate to `w`'s.
    pub related: bool,
    /// For equal elements: the first step of the derivation of
    /// `pr2(λ)(z) = pr2(λ)(w)` through coordinates that fails.
    pub broken_step: Option<&'static str>,
}

impl EqualityVerdict {
    pub fn characterised(&self) -> bool {
        self.equal == self.related
    }
}

pub fn element_equality<T: DepSigmaStructure>(
    ds: &T,
    lam: &DsFam<T>,
    z: &DsArr<T>,
    w: &DsArr<T>,
) -> Result<EqualityVerdict> {
    let cat = ds.sigma().base();
    let one = terminal(cat).ok_or(Error::NoTerminalObject)?;
    let az = analyze_with(ds, &one, lam, z)?;
    let aw = analyze_with(ds, &one, lam, w)?;
    equality_with(ds, lam, &az, &aw)
}

fn equality_with<T: DepSigmaStructure>(
    ds: &T,
    lam: &DsFam<T>,
    az: &ElementAnalysis<DsArr<T>>,
    aw: &ElementAnalysis<DsArr<T>>,
) -> Result<EqualityVerdict> {
    let (sigma, dep) = (ds.sigma(), ds.dep());
    let cat = sigma.base();
    let equal = az.element == aw.element;
    let same_first = az.first == aw.first;
    let moved = if same_first {
        let t = transport(sigma, lam, &az.first, &aw.first)?;
        cat.compose(&t.lam_ij, &az.coordinate).ok()
    } else {
        None
    };
    let related = moved.as_ref() == Some(&aw.coordinate);
    let broken_step = if equal {
        let (i, j) = (&az.first, &aw.first);
        let p = ds.pr2(lam)?;
        let steps = || -> Result<Option<&'static str>> {
            if !(az.recovers && aw.recovers) {
                return Ok(Some("first projection"));
            }
            let at_i = dep.apply(&p, &sigma.sigma_arr(lam, i)?)?;
            let at_j = dep.apply(&p, &sigma.sigma_arr(lam, j)?)?;
            if dep.apply(&p, &az.element)? != dep.apply(&at_i, &az.coordinate)?
                || dep.apply(&p, &aw.element)? != dep.apply(&at_j, &aw.coordinate)?
            {
                return Ok(Some("composite application"));
            }
            let li = sigma.fam().restrict(lam, i)?;
            let lj = sigma.fam().restrict(lam, j)?;
            if at_i != ds.pr2(&li)? || at_j != ds.pr2(&lj)? {
                return Ok(Some("second projection at an element"));
            }
            if !related {
                return Ok(Some("transport"));
            }
            let t = transport(sigma, lam, i, j)?;
            if cat.compose(&sigma.sigma_arr(lam, j)?, &t.lam_ij)? != sigma.sigma_arr(lam, i)?
                || dep.apply(&at_j, &t.lam_ij)? != at_i
            {
                return Ok(Some("transport triangle"));
            }
            if dep.apply(&at_i, &az.coordinate)? != dep.apply(&at_j, &aw.coordinate)? {
                return Ok(Some("second coordinates"));
            }
            Ok(None)
        };
        steps().unwrap_or(Some("evaluation"))
    } else {
        None
    };
    Ok(EqualityVerdict {
        equal,
        same_first,
        related,
        broken_step,
    })
}

/// Every window family and every pair of global elements of its Sigma
/// object. Fails with `NoTerminalObject` when there is none.
pub fn check_elements<T: DepSigmaStructure>(ds: &T) -> Result<LawReport> {
    let sigma = ds.sigma();
    let cat = sigma.base();
    let one = terminal(cat).ok_or(Error::NoTerminalObject)?;
    let laws = [
        LawId::ElementPr0,
        LawId::ElementPr1,
        LawId::ElementPr2,
        LawId::ElementPr3,
        LawId::ElementPr4,
    ];
    let mut report = LawReport::new("elsigma", &laws);
    let albl = |f: &DsArr<T>| cat.arrow_label(f);
    for a in cat.objects() {
        for lam in sigma.fam().families(&a)? {
            let lbl = sigma.family_label(&lam);
            let mut analyses = Vec::new();
            for z in one.global_elements(cat, &sigma.sigma_obj(&lam)?)? {
                match analyze_with(ds, &one, &lam, &z) {
                    Ok(an) => {
                        let where_ = || format!("λ = {lbl}, z = {}", albl(&z));
                        report.record(LawId::ElementPr0, an.typed, || {
                            format!("{}: u = {} is not a global element of Σ₁λ(i)", where_(), albl(&an.coordinate))
                        });
                        report.record(LawId::ElementPr1, an.recovers, || {
                            format!("{}: Σ_λi ∘ u ≠ z with u = {}", where_(), albl(&an.coordinate))
                        });
                        report.record(LawId::ElementPr2, an.second_agrees, || {
                            format!("{}: pr2(λ)(z) ≠ pr2(λ(i))(u)", where_())
                        });
                        analyses.push(an);
                    }
                    Err(e) => {
                        for law in &laws[..3] {
                            report.record_error(*law, || format!("λ = {lbl}, z = {}: {e}", albl(&z)));
                        }
                    }
                }
            }
            for az in &analyses {
                for aw in &analyses {
                    let where_ = || format!("λ = {lbl}, z = {}, w = {}", albl(&az.element), albl(&aw.element));
                    match equality_with(ds, &lam, az, aw) {
                        Ok(v) => {
                            report.record(LawId::ElementPr3, v.characterised(), || {
                                format!(
                                    "{}: z {} w but coordinates are {}",
                                    where_(),
                                    if v.equal { "=" } else { "≠" },
                                    if v.related { "related" } else { "unrelated" }
                                )
                            });
                            if v.equal {
                                report.record(LawId::ElementPr4, v.broken_step.is_none(), || {
                                    format!("{}: step '{}' fails", where_(), v.broken_step.unwrap_or(""))
                                });
                            }
                        }
                        Err(e) => report.record_error(LawId::ElementPr3, || format!("{}: {e}", where_())),
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{FinSetCat, FnArrow};
    use crate::depsigma::{CanonicalPr2, FinSetDepSigma, Pr2Override, ProductDepSigma};
    use crate::fam::{FinFamily, FinSetFam};
    use crate::report::Status;
    use crate::ring::{ring_sigma, RingTables};
    use crate::sigma::SigmaOverride;

    #[test]
    fn finset_elements_split_into_index_and_coordinate() {
        let ds = FinSetDepSigma::new(FinSetFam::new(FinSetCat::new(3), 2));
        let lam = FinFamily::new(vec![2, 0, 1]);
        let z = FnArrow::new(3, vec![1]);
        let an = analyze_element(&ds, &lam, &z).unwrap();
        assert_eq!(an.first, FnArrow::new(3, vec![0]));
        assert_eq!(an.coordinate, FnArrow::new(2, vec![1]));
        assert!(an.typed && an.recovers && an.second_agrees);
        let w = FnArrow::new(3, vec![0]);
        let v = element_equality(&ds, &lam, &z, &w).unwrap();
        assert!(v.same_first && !v.related && !v.equal);
        let other = FnArrow::new(3, vec![2]);
        assert!(!element_equality(&ds, &lam, &z, &other).unwrap().same_first);
        let r = check_elements(&ds).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn canonical_and_product_elements() {
        let c = CanonicalPr2::new(crate::sigma::FinSetSigma::new(FinSetFam::new(FinSetCat::new(2), 2)));
        let r = check_elements(&c).unwrap();
        assert!(r.passed(), "{r}");
        let p = ProductDepSigma::new(FinSetCat::new(3)).unwrap();
        let r = check_elements(&p).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn no_terminal_object() {
        let c = CanonicalPr2::new(ring_sigma(&RingTables::modulo(4).unwrap()).unwrap());
        assert!(matches!(check_elements(&c), Err(Error::NoTerminalObject)));
    }

    #[test]
    fn shifted_coordinate_breaks_recovery_and_equality() {
        let ds = FinSetDepSigma::new(FinSetFam::new(FinSetCat::new(2), 2));
        let lam = FinFamily::new(vec![2]);
        let z = FnArrow::new(2, vec![0]);
        let i = FnArrow::new(1, vec![0]);
        let one = FnArrow::new(1, vec![0]);
        let mut sigma = SigmaOverride::new(ds.sigma.clone());
        sigma.mediate.insert((lam.clone(), i, z, one), FnArrow::new(2, vec![1]));
        let bad = FinSetWith { sigma, dep: ds.dep.clone() };
        let r = check_elements(&bad).unwrap();
        assert_eq!(r.status(LawId::ElementPr0), Some(Status::Pass));
        assert_eq!(r.status(LawId::ElementPr1), Some(Status::Fail));
        assert_eq!(r.status(LawId::ElementPr3), Some(Status::Fail));
    }

    #[test]
    fn swapped_second_projection() {
        let ds = FinSetDepSigma::new(FinSetFam::new(FinSetCat::new(2), 2));
        let lam = FinFamily::new(vec![2, 1]);
        let mut p = ds.pr2(&lam).unwrap();
        assert_eq!(p.values, vec![0, 1, 0]);
        p.values.swap(0, 1);
        let bad = Pr2Override::new(ds).with(lam, p);
        let r = check_elements(&bad).unwrap();
        assert_eq!(r.status(LawId::ElementPr2), Some(Status::Fail));
        assert_eq!(r.status(LawId::ElementPr4), Some(Status::Fail));
    }

    struct FinSetWith {
        sigma: SigmaOverride<crate::sigma::FinSetSigma>,
        dep: crate::dep::FinSetDep,
    }

    impl DepSigmaStructure for FinSetWith {
        type Sigma = SigmaOverride<crate::sigma::FinSetSigma>;
        type Dep = crate::dep::FinSetDep;

        fn sigma(&self) -> &Self::Sigma {
            &self.sigma
        }

        fn dep(&self) -> &Self::Dep {
            &self.dep
        }

        fn pr2(&self, lam: &FinFamily) -> Result<crate::dep::Choice> {
            FinSetDepSigma::new(self.dep.fam.clone()).pr2(lam)
        }
    }
}
