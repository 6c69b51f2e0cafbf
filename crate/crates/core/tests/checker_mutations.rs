//! Planted defects for checks that the suite runner does not mutate itself.
//! Each check passes on the intact structure and fails with a witness once
//! a single entry is changed.

use depcat::cat::{ArrowId, Category, FinSetCat, FnArrow, ObjectId};
use depcat::dep::{check_sections, GlobalSectionsDep};
use depcat::fam::{category_of_elements, check_fam_functor, check_fam_nat_trans, check_presheaf, fam_presheaf};
use depcat::ring::{ring_fam, ring_family, ring_hom_functor, RingTables};
use depcat::sigma::ProductSigma;
use depcat::{LawId, LawReport, Status};

fn caught(report: &LawReport, law: LawId) {
    let entry = report.entry(law).unwrap_or_else(|| panic!("{law} not in report"));
    assert_eq!(entry.status, Status::Fail, "{report}");
    assert!(entry.witness.is_some(), "{report}");
}

fn z(n: usize) -> RingTables {
    RingTables::modulo(n).unwrap()
}

#[test]
fn presheaf_identity_and_composition() {
    let fp = fam_presheaf(&ring_fam(&z(4)).unwrap()).unwrap();
    let cat = &fp.window.cat;
    assert!(check_presheaf(cat, &fp.presheaf).passed());
    let id = cat.identity(&ObjectId(0));

    let mut p = fp.presheaf.clone();
    p.maps[id.index()][0] = 1;
    caught(&check_presheaf(cat, &p), LawId::PresheafId);

    let f = cat.arrow_ids().find(|&f| f != id).unwrap();
    let mut p = fp.presheaf.clone();
    p.maps[f.index()][0] = p.maps[id.index()][0];
    let r = check_presheaf(cat, &p);
    caught(&r, LawId::PresheafComp);
    assert_eq!(r.status(LawId::PresheafId), Some(Status::Pass));
}

#[test]
fn elements_fibre() {
    let fp = fam_presheaf(&ring_fam(&z(4)).unwrap()).unwrap();
    let cat = &fp.window.cat;
    let mut el = category_of_elements(cat, &fp.presheaf, |a, x| format!("{}:{x}", a.0)).unwrap();
    assert!(el.check_fibres(cat, &fp.presheaf).passed());
    let id = cat.identity(&ObjectId(0));
    let i = el.arrows.iter().position(|&(f, _)| f != id).unwrap();
    let (f, x) = el.arrows[i];
    el.arrows[i] = (f, (x + 1) % fp.presheaf.sets[0].len());
    caught(&el.check_fibres(cat, &fp.presheaf), LawId::ElementsFibre);
}

#[test]
fn functor_laws() {
    let (z4, z2) = (z(4), z(2));
    let hom = ring_hom_functor(&z4, &z2, &[0, 1, 0, 1]).unwrap();
    assert!(check_fam_functor(&hom).passed());

    let mut bad = hom.clone();
    bad.arrows[0] = ArrowId(1);
    caught(&check_fam_functor(&bad), LawId::FunctorId);

    let mut bad = hom.clone();
    bad.arrows[1] = ArrowId(0);
    let r = check_fam_functor(&bad);
    caught(&r, LawId::FunctorComp);
    assert_eq!(r.status(LawId::FunctorId), Some(Status::Pass));

    let bad = hom.with_family(ring_family(&z4, 1, 2), ring_family(&z2, 0, 0));
    caught(&check_fam_functor(&bad), LawId::FamFunctorFam);
}

#[test]
fn natural_transformations() {
    let (z4, z2) = (z(4), z(2));
    let hom = ring_hom_functor(&z4, &z2, &[0, 1, 0, 1]).unwrap();
    assert!(check_fam_nat_trans(&hom, &hom, |_| Ok(ArrowId(0))).passed());

    let mut moved = hom.clone();
    moved.arrows[1] = ArrowId(0);
    let r = check_fam_nat_trans(&hom, &moved, |_| Ok(ArrowId(0)));
    caught(&r, LawId::NatNaturality);

    // Adding 1 commutes with everything but shifts every family.
    let r = check_fam_nat_trans(&hom, &hom, |_| Ok(ArrowId(1)));
    assert_eq!(r.status(LawId::NatNaturality), Some(Status::Pass));
    caught(&r, LawId::NatTriangle);
}

/// Finite sets whose factorisation search returns one spurious arrow for
/// single-constraint queries `2 → 4`.
#[derive(Debug, Clone)]
struct ExtraFactor(FinSetCat);

impl Category for ExtraFactor {
    type Obj = usize;
    type Arr = FnArrow;

    fn objects(&self) -> Vec<usize> {
        self.0.objects()
    }
    fn check_object(&self, a: &usize) -> depcat::Result<()> {
        self.0.check_object(a)
    }
    fn check_arrow(&self, f: &FnArrow) -> depcat::Result<()> {
        self.0.check_arrow(f)
    }
    fn dom(&self, f: &FnArrow) -> usize {
        self.0.dom(f)
    }
    fn cod(&self, f: &FnArrow) -> usize {
        self.0.cod(f)
    }
    fn identity(&self, a: &usize) -> FnArrow {
        self.0.identity(a)
    }
    fn compose(&self, g: &FnArrow, f: &FnArrow) -> depcat::Result<FnArrow> {
        self.0.compose(g, f)
    }
    fn hom(&self, a: &usize, b: &usize) -> depcat::Result<Vec<FnArrow>> {
        self.0.hom(a, b)
    }
    fn factor(
        &self,
        source: &usize,
        target: &usize,
        constraints: &[(&FnArrow, &FnArrow)],
        limit: usize,
    ) -> depcat::Result<Vec<FnArrow>> {
        let mut out = self.0.factor(source, target, constraints, limit)?;
        if (*source, *target, constraints.len()) == (2, 4, 1) && out.len() < limit {
            if let Some(extra) = self.0.hom(source, target)?.into_iter().find(|m| !out.contains(m)) {
                out.push(extra);
            }
        }
        Ok(out)
    }
    fn propose_product(&self, a: &usize, b: &usize) -> Option<(usize, FnArrow, FnArrow)> {
        self.0.propose_product(a, b)
    }
}

#[test]
fn sections_are_sections() {
    let intact = GlobalSectionsDep::new(ProductSigma::new(FinSetCat::new(2)).unwrap());
    assert!(check_sections(&intact).passed());
    let broken = GlobalSectionsDep::new(ProductSigma::new(ExtraFactor(FinSetCat::new(2))).unwrap());
    caught(&check_sections(&broken), LawId::SectionsSection);
}
