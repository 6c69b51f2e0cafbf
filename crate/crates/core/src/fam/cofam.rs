//! Cofamily-arrows, obtained as family-arrows on the opposite category.
//!
//! A cofamily `p` lives at `b` and is acted on from the left by arrows out
//! of `b`: for `g: b → c`, `g ∘ p` is the restriction of `p` along `g`
//! viewed as an arrow `c → b` of the opposite.

use super::FamStructure;
use crate::cat::{ArrowId, Category, FinCat, ObjectId};
use crate::error::{Error, Result};
use crate::report::{LawId, LawReport};

#[derive(Debug, Clone)]
pub struct CofamFromOp<F> {
    pub cat: FinCat,
    pub fam: F,
}

impl<F: FamStructure<Cat = FinCat>> CofamFromOp<F> {
    /// `fam` must live on `opposite(cat)`.
    pub fn new(cat: FinCat, fam: F) -> Result<Self> {
        if *fam.base() != cat.opposite() {
            return Err(Error::TypeMismatch(
                "cofamily structure must be a fam structure on the opposite category".into(),
            ));
        }
        Ok(CofamFromOp { cat, fam })
    }

    pub fn cofamilies(&self, b: &ObjectId) -> Result<Vec<F::Fam>> {
        self.fam.families(b)
    }

    /// `g ∘ p` for `g: b → c` in the category.
    pub fn act(&self, g: &ArrowId, p: &F::Fam) -> Result<F::Fam> {
        self.fam.restrict(p, g)
    }
}

/// `1 ∘ p = p` and `(g ∘ f) ∘ p = g ∘ (f ∘ p)`, composing in the category.
pub fn check_cofam_laws<F: FamStructure<Cat = FinCat>>(cofam: &CofamFromOp<F>) -> LawReport {
    let mut report = LawReport::new("cofam", &[LawId::Cofam1, LawId::Cofam2]);
    let run = |report: &mut LawReport| -> Result<()> {
        let cat = &cofam.cat;
        let objects = cat.objects();
        let lbl = |p: &F::Fam| cofam.fam.family_label(p);
        for b in &objects {
            for p in cofam.cofamilies(b)? {
                let r = cofam.act(&cat.identity(b), &p)?;
                report.record(LawId::Cofam1, r == p, || format!("p = {}: 1∘p = {}", lbl(&p), lbl(&r)));
                for c in &objects {
                    for f in cat.hom(b, c)? {
                        let fp = cofam.act(&f, &p)?;
                        for d in &objects {
                            for g in cat.hom(c, d)? {
                                let lhs = cofam.act(&cat.compose(&g, &f)?, &p)?;
                                let rhs = cofam.act(&g, &fp)?;
                                report.record(LawId::Cofam2, lhs == rhs, || {
                                    format!(
                                        "p = {}, f = {}, g = {}: (g∘f)∘p = {} but g∘(f∘p) = {}",
                                        lbl(&p),
                                        cat.arrow_label(&f),
                                        cat.arrow_label(&g),
                                        lbl(&lhs),
                                        lbl(&rhs)
                                    )
                                });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut report) {
        report.record_error(LawId::Cofam2, || format!("enumeration failed: {e}"));
    }
    report
}
