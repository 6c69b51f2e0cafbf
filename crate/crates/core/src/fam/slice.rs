//! Slice families: a family over `a` is an arrow into `a`, restricted by a
//! chosen pullback. The fam laws hold only up to isomorphism in the slice
//! unless the choice of pullbacks happens to be strictly functorial.

use super::{ArrOf, FamStructure, ObjOf};
use crate::cat::{arrows_into, pullback_of, Category, FinSetCat, FnArrow, PullbackWitness, Square};
use crate::error::{Error, Result};
use crate::report::{LawId, LawReport};

/// Picks one pullback square per cospan: `bottom = f`, `right = g`.
pub trait PullbackChooser<C: Category> {
    fn choose(&self, cat: &C, f: &C::Arr, g: &C::Arr) -> Result<PullbackWitness<C::Arr>>;
}

/// The pullback returned by [`pullback_of`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Canonical;

/// The canonical finite-set pullback with its apex points listed in reverse.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Reversed;

fn missing<C: Category>(cat: &C, f: &C::Arr, g: &C::Arr) -> Error {
    Error::MissingPullback(format!("({}, {})", cat.arrow_label(f), cat.arrow_label(g)))
}

impl<C: Category> PullbackChooser<C> for Canonical {
    fn choose(&self, cat: &C, f: &C::Arr, g: &C::Arr) -> Result<PullbackWitness<C::Arr>> {
        pullback_of(cat, f, g)?.ok_or_else(|| missing(cat, f, g))
    }
}

impl PullbackChooser<FinSetCat> for Reversed {
    fn choose(&self, cat: &FinSetCat, f: &FnArrow, g: &FnArrow) -> Result<PullbackWitness<FnArrow>> {
        if cat.cod(f) != cat.cod(g) {
            return Err(Error::NotACospan {
                f: cat.arrow_label(f),
                g: cat.arrow_label(g),
            });
        }
        // The fibre product, as `pullback_of` would verify it.
        let (n, left, top) = cat.propose_pullback(f, g).ok_or_else(|| missing(cat, f, g))?;
        let rev = FnArrow::new(n, (0..n).rev().collect());
        // Precomposing both legs with an automorphism keeps the square a pullback.
        Ok(PullbackWitness::trusted(Square {
            top: cat.compose(&top, &rev)?,
            left: cat.compose(&left, &rev)?,
            right: g.clone(),
            bottom: f.clone(),
        }))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceFam<C, Ch> {
    pub cat: C,
    pub chooser: Ch,
}

impl<C: Category, Ch: PullbackChooser<C>> SliceFam<C, Ch> {
    /// Fails with `MissingPullback` naming the first window cospan without one.
    pub fn new(cat: C, chooser: Ch) -> Result<Self> {
        for a in cat.objects() {
            let into = arrows_into(&cat, &a)?;
            for lam in &into {
                for f in &into {
                    chooser.choose(&cat, f, lam)?;
                }
            }
        }
        Ok(SliceFam { cat, chooser })
    }

    /// The chosen pullback of `λ` along `f`.
    pub fn square(&self, lam: &C::Arr, f: &C::Arr) -> Result<PullbackWitness<C::Arr>> {
        self.chooser.choose(&self.cat, f, lam)
    }
}

impl<C: Category, Ch: PullbackChooser<C>> FamStructure for SliceFam<C, Ch> {
    type Cat = C;
    type Fam = C::Arr;

    fn base(&self) -> &C {
        &self.cat
    }

    fn families(&self, a: &C::Obj) -> Result<Vec<C::Arr>> {
        arrows_into(&self.cat, a)
    }

    fn fam_object(&self, lam: &C::Arr) -> C::Obj {
        self.cat.cod(lam)
    }

    fn restrict(&self, lam: &C::Arr, f: &C::Arr) -> Result<C::Arr> {
        super::check_restrict_typing(self, lam, f)?;
        Ok(self.square(lam, f)?.square.left)
    }

    fn family_label(&self, lam: &C::Arr) -> String {
        self.cat.arrow_label(lam)
    }
}

/// An isomorphism `k: dom p → dom q` with `q ∘ k = p`, found by exhaustive
/// search in canonical order.
pub fn slice_iso<C: Category>(cat: &C, p: &C::Arr, q: &C::Arr) -> Result<Option<C::Arr>> {
    if cat.cod(p) != cat.cod(q) {
        return Ok(None);
    }
    Ok(cat.factor_isos(&cat.dom(p), &cat.dom(q), &[(q, p)], 1)?.pop())
}

/// Weak fam laws for families that are arrows: both sides of each law must
/// be isomorphic over the base object.
pub fn check_weak_fam_laws<F>(fam: &F) -> LawReport
where
    F: FamStructure<Fam = ArrOf<F>>,
{
    let mut report = LawReport::new("weak", &[LawId::WeakFam1, LawId::WeakFam2]);
    if let Err(e) = weak_into(fam, &mut report) {
        report.record_error(LawId::WeakFam2, || format!("enumeration failed: {e}"));
    }
    report
}

fn weak_into<F>(fam: &F, report: &mut LawReport) -> Result<()>
where
    F: FamStructure<Fam = ArrOf<F>>,
{
    let cat = fam.base();
    let objects: Vec<ObjOf<F>> = cat.objects();
    let lbl = |f: &ArrOf<F>| cat.arrow_label(f);
    for a in &objects {
        for lam in fam.families(a)? {
            let r1 = fam
                .restrict(&lam, &cat.identity(a))
                .and_then(|l1| Ok((slice_iso(cat, &l1, &lam)?, l1)));
            match r1 {
                Ok((iso, l1)) => report.record(LawId::WeakFam1, iso.is_some(), || {
                    format!("λ = {}: λ∘1 = {} is not isomorphic to λ", lbl(&lam), lbl(&l1))
                }),
                Err(e) => report.record_error(LawId::WeakFam1, || format!("λ = {}: {e}", lbl(&lam))),
            }
            for b in &objects {
                for f in cat.hom(b, a)? {
                    let lf = fam.restrict(&lam, &f);
                    for c in &objects {
                        for g in cat.hom(c, b)? {
                            let sides = (|| {
                                let lhs = fam.restrict(&lam, &cat.compose(&f, &g)?)?;
                                let rhs = fam.restrict(lf.as_ref().map_err(Clone::clone)?, &g)?;
                                let iso = slice_iso(cat, &lhs, &rhs)?;
                                Ok::<_, Error>((lhs, rhs, iso))
                            })();
                            match sides {
                                Ok((lhs, rhs, iso)) => report.record(LawId::WeakFam2, iso.is_some(), || {
                                    format!(
                                        "λ = {}, f = {}, g = {}: {} and {} are not isomorphic over the base",
                                        lbl(&lam),
                                        lbl(&f),
                                        lbl(&g),
                                        lbl(&lhs),
                                        lbl(&rhs)
                                    )
                                }),
                                Err(e) => report.record_error(LawId::WeakFam2, || {
                                    format!("λ = {}, f = {}, g = {}: {e}", lbl(&lam), lbl(&f), lbl(&g))
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fam::check_fam_laws;
    use crate::report::Status;

    #[test]
    fn weak_pass_strict_fail_with_reversed_chooser() {
        let fam = SliceFam::new(FinSetCat::new(2), Reversed).unwrap();
        let weak = check_weak_fam_laws(&fam);
        assert!(weak.passed(), "{weak}");
        let strict = check_fam_laws(&fam);
        assert_eq!(strict.status(LawId::Fam1), Some(Status::Fail));
        assert!(strict.entry(LawId::Fam1).unwrap().witness.is_some());
    }

    #[test]
    fn reversed_squares_are_pullbacks() {
        let cat = FinSetCat::new(3);
        let f = FnArrow::new(2, vec![0, 1, 1]);
        let g = FnArrow::new(2, vec![1, 0]);
        let w = Reversed.choose(&cat, &f, &g).unwrap();
        assert!(crate::cat::is_pullback(&cat, &w.square).unwrap().holds());
        assert_ne!(w.square, Canonical.choose(&cat, &f, &g).unwrap().square);
    }

    #[test]
    fn canonical_chooser_is_strictly_unital() {
        let fam = SliceFam::new(FinSetCat::new(2), Canonical).unwrap();
        let strict = check_fam_laws(&fam);
        assert_eq!(strict.status(LawId::Fam1), Some(Status::Pass));
        assert!(check_weak_fam_laws(&fam).passed());
    }
}
