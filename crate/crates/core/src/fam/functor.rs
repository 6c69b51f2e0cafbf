//! Fam-functors and fam-natural transformations.

use super::{ArrOf, ConstFamily, ConstantFam, FamArrowId, FamStructure, ObjOf, TableFam};
use crate::cat::{ArrowId, Category, FinCat, ObjectId};
use crate::error::{Error, Result};
use crate::report::{LawId, LawReport};

/// A functor between the bases together with an action on family-arrows.
pub trait FamFunctor {
    type Src: FamStructure;
    type Tgt: FamStructure;

    fn source(&self) -> &Self::Src;
    fn target(&self) -> &Self::Tgt;
    fn on_object(&self, a: &ObjOf<Self::Src>) -> ObjOf<Self::Tgt>;
    fn on_arrow(&self, f: &ArrOf<Self::Src>) -> Result<ArrOf<Self::Tgt>>;
    fn on_family(&self, lam: &<Self::Src as FamStructure>::Fam) -> Result<<Self::Tgt as FamStructure>::Fam>;
}

/// Functor laws on the bases plus `F(λ ∘ f) = F(λ) ∘ F(f)`.
pub fn check_fam_functor<T: FamFunctor>(functor: &T) -> LawReport {
    let mut report = LawReport::new(
        "famfunctor",
        &[LawId::FunctorId, LawId::FunctorComp, LawId::FamFunctorFam],
    );
    if let Err(e) = functor_into(functor, &mut report) {
        report.record_error(LawId::FamFunctorFam, || format!("enumeration failed: {e}"));
    }
    report
}

fn functor_into<T: FamFunctor>(functor: &T, report: &mut LawReport) -> Result<()> {
    let (src, tgt) = (functor.source(), functor.target());
    let (sc, tc) = (src.base(), tgt.base());
    let objects = sc.objects();
    for a in &objects {
        let lhs = functor.on_arrow(&sc.identity(a));
        let rhs = tc.identity(&functor.on_object(a));
        report.record(LawId::FunctorId, lhs.as_ref().ok() == Some(&rhs), || {
            format!("F(1_{}) ≠ 1", sc.object_label(a))
        });
    }
    for a in &objects {
        for b in &objects {
            for f in sc.hom(a, b)? {
                let ff = functor.on_arrow(&f)?;
                let typed = tc.dom(&ff) == functor.on_object(a) && tc.cod(&ff) == functor.on_object(b);
                report.record(LawId::FunctorComp, typed, || {
                    format!("F({}) = {} is mistyped", sc.arrow_label(&f), tc.arrow_label(&ff))
                });
                for c in &objects {
                    for g in sc.hom(b, c)? {
                        let lhs = functor.on_arrow(&sc.compose(&g, &f)?)?;
                        let rhs = tc.compose(&functor.on_arrow(&g)?, &ff);
                        report.record(LawId::FunctorComp, rhs.as_ref().ok() == Some(&lhs), || {
                            format!(
                                "F({}∘{}) = {} ≠ F(g)∘F(f)",
                                sc.arrow_label(&g),
                                sc.arrow_label(&f),
                                tc.arrow_label(&lhs)
                            )
                        });
                    }
                }
            }
        }
    }
    for a in &objects {
        for lam in src.families(a)? {
            let flam = functor.on_family(&lam)?;
            report.record(LawId::FamFunctorFam, tgt.fam_object(&flam) == functor.on_object(a), || {
                format!("F({}) lives over the wrong object", src.family_label(&lam))
            });
            for b in &objects {
                for f in sc.hom(b, a)? {
                    let lhs = functor.on_family(&src.restrict(&lam, &f)?)?;
                    let rhs = functor.on_arrow(&f).and_then(|ff| tgt.restrict(&flam, &ff));
                    report.record(LawId::FamFunctorFam, rhs.as_ref().ok() == Some(&lhs), || {
                        format!(
                            "λ = {}, f = {}: F(λ∘f) = {} ≠ F(λ)∘F(f)",
                            src.family_label(&lam),
                            sc.arrow_label(&f),
                            tgt.family_label(&lhs)
                        )
                    });
                }
            }
        }
    }
    Ok(())
}

/// Naturality of `η: F ⇒ G` and the triangle `G(λ) ∘ η_a = F(λ)`.
pub fn check_fam_nat_trans<F, G>(
    f: &F,
    g: &G,
    eta: impl Fn(&ObjOf<F::Src>) -> Result<ArrOf<F::Tgt>>,
) -> LawReport
where
    F: FamFunctor,
    G: FamFunctor<Src = F::Src, Tgt = F::Tgt>,
{
    let mut report = LawReport::new("famnat", &[LawId::NatNaturality, LawId::NatTriangle]);
    let run = |report: &mut LawReport| -> Result<()> {
        let (src, tgt) = (f.source(), f.target());
        let (sc, tc) = (src.base(), tgt.base());
        let objects = sc.objects();
        for a in &objects {
            for b in &objects {
                for h in sc.hom(a, b)? {
                    let lhs = tc.compose(&g.on_arrow(&h)?, &eta(a)?);
                    let rhs = tc.compose(&eta(b)?, &f.on_arrow(&h)?);
                    report.record(LawId::NatNaturality, lhs.is_ok() && lhs.as_ref().ok() == rhs.as_ref().ok(), || {
                        format!("square for {} does not commute", sc.arrow_label(&h))
                    });
                }
            }
        }
        for a in &objects {
            let e = eta(a)?;
            for lam in src.families(a)? {
                let lhs = tgt.restrict(&g.on_family(&lam)?, &e);
                let rhs = f.on_family(&lam)?;
                report.record(LawId::NatTriangle, lhs.as_ref().ok() == Some(&rhs), || {
                    format!(
                        "a = {}, λ = {}: G(λ)∘η_a = {} but F(λ) = {}",
                        sc.object_label(a),
                        src.family_label(&lam),
                        lhs.as_ref().map(|x| tgt.family_label(x)).unwrap_or_else(|e| e.to_string()),
                        tgt.family_label(&rhs)
                    )
                });
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut report) {
        report.record_error(LawId::NatTriangle, || format!("enumeration failed: {e}"));
    }
    report
}

/// The identity fam-functor.
#[derive(Debug, Clone)]
pub struct IdentityFamFunctor<F> {
    pub fam: F,
}

impl<F: FamStructure> FamFunctor for IdentityFamFunctor<F> {
    type Src = F;
    type Tgt = F;

    fn source(&self) -> &F {
        &self.fam
    }
    fn target(&self) -> &F {
        &self.fam
    }
    fn on_object(&self, a: &ObjOf<F>) -> ObjOf<F> {
        a.clone()
    }
    fn on_arrow(&self, f: &ArrOf<F>) -> Result<ArrOf<F>> {
        Ok(f.clone())
    }
    fn on_family(&self, lam: &F::Fam) -> Result<F::Fam> {
        Ok(lam.clone())
    }
}

/// A fam-functor between table structures, given by its three tables.
#[derive(Debug, Clone)]
pub struct TableFamFunctor {
    pub source: TableFam,
    pub target: TableFam,
    pub objects: Vec<ObjectId>,
    pub arrows: Vec<ArrowId>,
    pub families: Vec<FamArrowId>,
}

impl TableFamFunctor {
    pub fn with_family(mut self, lam: FamArrowId, image: FamArrowId) -> Self {
        self.families[lam.index()] = image;
        self
    }
}

impl FamFunctor for TableFamFunctor {
    type Src = TableFam;
    type Tgt = TableFam;

    fn source(&self) -> &TableFam {
        &self.source
    }
    fn target(&self) -> &TableFam {
        &self.target
    }
    fn on_object(&self, a: &ObjectId) -> ObjectId {
        self.objects[a.index()]
    }
    fn on_arrow(&self, f: &ArrowId) -> Result<ArrowId> {
        self.arrows
            .get(f.index())
            .copied()
            .ok_or_else(|| Error::UnknownArrow(format!("#{}", f.0)))
    }
    fn on_family(&self, lam: &FamArrowId) -> Result<FamArrowId> {
        self.families
            .get(lam.index())
            .copied()
            .ok_or_else(|| Error::Integrity(format!("family {} has no image", lam.0)))
    }
}

/// The fam-functor on constant families induced by an endofunctor of the
/// base: `F(b over a) = F(b) over F(a)`.
#[derive(Debug, Clone)]
pub struct ConstantFamFunctor {
    pub fam: ConstantFam<FinCat>,
    pub objects: Vec<ObjectId>,
    pub arrows: Vec<ArrowId>,
}

impl ConstantFamFunctor {
    pub fn identity(cat: FinCat) -> Self {
        let objects = cat.objects();
        let arrows = cat.arrow_ids().collect();
        ConstantFamFunctor {
            fam: ConstantFam::new(cat),
            objects,
            arrows,
        }
    }
}

impl FamFunctor for ConstantFamFunctor {
    type Src = ConstantFam<FinCat>;
    type Tgt = ConstantFam<FinCat>;

    fn source(&self) -> &Self::Src {
        &self.fam
    }
    fn target(&self) -> &Self::Tgt {
        &self.fam
    }
    fn on_object(&self, a: &ObjectId) -> ObjectId {
        self.objects[a.index()]
    }
    fn on_arrow(&self, f: &ArrowId) -> Result<ArrowId> {
        self.arrows
            .get(f.index())
            .copied()
            .ok_or_else(|| Error::UnknownArrow(format!("#{}", f.0)))
    }
    fn on_family(&self, lam: &ConstFamily<ObjectId>) -> Result<ConstFamily<ObjectId>> {
        Ok(ConstFamily {
            over: self.on_object(&lam.over),
            value: self.on_object(&lam.value),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    /// Two objects and an isomorphism between them.
    fn walking_iso() -> (FinCat, [ArrowId; 4]) {
        let mut b = FinCat::builder();
        let x = b.object("x");
        let y = b.object("y");
        let ix = b.arrow("1x", x, x);
        let iy = b.arrow("1y", y, y);
        let i = b.arrow("i", x, y);
        let j = b.arrow("j", y, x);
        b.identity(x, ix).identity(y, iy);
        for (g, f, h) in [
            (ix, ix, ix),
            (iy, iy, iy),
            (i, ix, i),
            (iy, i, i),
            (j, iy, j),
            (ix, j, j),
            (j, i, ix),
            (i, j, iy),
        ] {
            b.compose(g, f, h);
        }
        (b.build().unwrap(), [ix, iy, i, j])
    }

    #[test]
    fn identity_functor_and_transformation() {
        let (cat, [ix, iy, ..]) = walking_iso();
        let id = ConstantFamFunctor::identity(cat);
        assert!(check_fam_functor(&id).passed());
        let r = check_fam_nat_trans(&id, &id, |a| Ok(if a.0 == 0 { ix } else { iy }));
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn swap_is_natural_but_breaks_the_triangle() {
        let (cat, [ix, iy, i, j]) = walking_iso();
        let id = ConstantFamFunctor::identity(cat.clone());
        let swap = ConstantFamFunctor {
            fam: ConstantFam::new(cat),
            objects: vec![ObjectId(1), ObjectId(0)],
            arrows: vec![iy, ix, j, i],
        };
        assert!(check_fam_functor(&swap).passed());
        let r = check_fam_nat_trans(&id, &swap, |a| Ok(if a.0 == 0 { i } else { j }));
        assert_eq!(r.status(LawId::NatNaturality), Some(Status::Pass));
        assert_eq!(r.status(LawId::NatTriangle), Some(Status::Fail));
    }
}
