//! Presheaves on explicit categories and their categories of elements.

use super::{ArrOf, FamStructure};
use crate::cat::{materialize, ArrowData, ArrowId, Category, FinCat, Materialized, ObjectId};
use crate::error::{Error, Result};
use crate::report::{LawId, LawReport};

/// A contravariant functor into finite sets over a [`FinCat`].
///
/// `maps[f]` for `f: b → a` sends indices of `sets[a]` to indices of `sets[b]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presheaf<T> {
    pub sets: Vec<Vec<T>>,
    pub maps: Vec<Vec<usize>>,
}

impl<T> Presheaf<T> {
    /// Validates shapes against `cat`: one set per object, one correctly
    /// sized function per arrow.
    pub fn new(cat: &FinCat, sets: Vec<Vec<T>>, maps: Vec<Vec<usize>>) -> Result<Self> {
        if sets.len() != cat.num_objects() || maps.len() != cat.num_arrows() {
            return Err(Error::TypeMismatch("presheaf shape does not match its category".into()));
        }
        for f in cat.arrow_ids() {
            let d = cat.arrow(f)?;
            let m = &maps[f.index()];
            if m.len() != sets[d.cod.index()].len() || m.iter().any(|&x| x >= sets[d.dom.index()].len()) {
                return Err(Error::TypeMismatch(format!("presheaf action of {} is ill-typed", d.name)));
            }
        }
        Ok(Presheaf { sets, maps })
    }

    pub fn act(&self, f: ArrowId, x: usize) -> usize {
        self.maps[f.index()][x]
    }
}

/// Functoriality: identities act trivially and `P(g∘f) = P(f)∘P(g)`.
pub fn check_presheaf<T>(cat: &FinCat, p: &Presheaf<T>) -> LawReport {
    let mut report = LawReport::new("presheaf", &[LawId::PresheafId, LawId::PresheafComp]);
    for a in cat.objects() {
        let id = cat.identity(&a);
        for x in 0..p.sets[a.index()].len() {
            report.record(LawId::PresheafId, p.act(id, x) == x, || {
                format!("P(1_{})({x}) = {}", cat.object_name(a), p.act(id, x))
            });
        }
    }
    for (g, f, gf) in cat.composition_triples() {
        let c = cat.arrow_data()[g.index()].cod;
        for x in 0..p.sets[c.index()].len() {
            let lhs = p.act(gf, x);
            let rhs = p.act(f, p.act(g, x));
            report.record(LawId::PresheafComp, lhs == rhs, || {
                format!(
                    "g = {}, f = {}, x = {x}: P(g∘f)(x) = {lhs} but P(f)(P(g)(x)) = {rhs}",
                    cat.arrow_label(&g),
                    cat.arrow_label(&f)
                )
            });
        }
    }
    report
}

/// The presheaf `a ↦ fHom(a)` over the materialized window.
#[derive(Debug, Clone)]
pub struct FamPresheaf<C: Category, T> {
    pub window: Materialized<C>,
    pub presheaf: Presheaf<T>,
}

/// Fails with `BudgetExceeded` when a restriction leaves the enumerated
/// family sets.
pub fn fam_presheaf<F: FamStructure>(fam: &F) -> Result<FamPresheaf<F::Cat, F::Fam>> {
    let window = materialize(fam.base())?;
    let mut sets = Vec::new();
    for a in &window.objects {
        sets.push(fam.families(a)?);
    }
    let mut maps = Vec::new();
    for (fi, f) in window.arrows.iter().enumerate() {
        let d = &window.cat.arrow_data()[fi];
        let target = &sets[d.dom.index()];
        let mut m = Vec::with_capacity(sets[d.cod.index()].len());
        for lam in &sets[d.cod.index()] {
            let r = fam.restrict(lam, f as &ArrOf<F>)?;
            let idx = target.binary_search(&r).ok().or_else(|| target.iter().position(|x| *x == r));
            m.push(idx.ok_or_else(|| {
                Error::BudgetExceeded(format!(
                    "{}∘{} = {} is outside the enumerated families",
                    fam.family_label(lam),
                    fam.base().arrow_label(f),
                    fam.family_label(&r)
                ))
            })?);
        }
        maps.push(m);
    }
    let presheaf = Presheaf::new(&window.cat, sets, maps)?;
    Ok(FamPresheaf { window, presheaf })
}

/// The category of elements of a presheaf: objects `(a, x)`, arrows
/// `(f, x): (b, P(f)(x)) → (a, x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementsCategory {
    pub cat: FinCat,
    /// Object id ↦ `(base object, element index)`.
    pub objects: Vec<(ObjectId, usize)>,
    /// Arrow id ↦ `(base arrow, element index at its codomain)`.
    pub arrows: Vec<(ArrowId, usize)>,
}

impl ElementsCategory {
    pub fn object_id(&self, a: ObjectId, x: usize) -> Option<ObjectId> {
        self.objects.binary_search(&(a, x)).ok().map(|i| ObjectId(i as u32))
    }

    /// Every arrow's domain carries the restricted element.
    pub fn check_fibres<T>(&self, base: &FinCat, p: &Presheaf<T>) -> LawReport {
        let mut report = LawReport::new("elements", &[LawId::ElementsFibre]);
        for (i, &(f, x)) in self.arrows.iter().enumerate() {
            let d = &self.cat.arrow_data()[i];
            let expected = (base.arrow_data()[f.index()].dom, p.act(f, x));
            report.record(LawId::ElementsFibre, self.objects[d.dom.index()] == expected, || {
                format!("arrow {} has domain {:?}", d.name, self.objects[d.dom.index()])
            });
        }
        report
    }
}

pub fn category_of_elements<T>(
    base: &FinCat,
    p: &Presheaf<T>,
    label: impl Fn(ObjectId, usize) -> String,
) -> Result<ElementsCategory> {
    let mut objects = Vec::new();
    let mut names = Vec::new();
    for a in base.objects() {
        for x in 0..p.sets[a.index()].len() {
            objects.push((a, x));
            names.push(label(a, x));
        }
    }
    let obj_id = |a: ObjectId, x: usize| ObjectId(objects.binary_search(&(a, x)).expect("element exists") as u32);
    let mut arrows = Vec::new();
    let mut data = Vec::new();
    // Arrows indexed by codomain element, for composition lookup.
    let mut by_cod: std::collections::HashMap<(ArrowId, usize), ArrowId> = std::collections::HashMap::new();
    for f in base.arrow_ids() {
        let fd = &base.arrow_data()[f.index()];
        for x in 0..p.sets[fd.cod.index()].len() {
            let id = ArrowId(arrows.len() as u32);
            by_cod.insert((f, x), id);
            arrows.push((f, x));
            data.push(ArrowData {
                name: format!("({}, {})", fd.name, label(fd.cod, x)),
                dom: obj_id(fd.dom, p.act(f, x)),
                cod: obj_id(fd.cod, x),
            });
        }
    }
    let identities = objects.iter().map(|&(a, x)| by_cod[&(base.identity(&a), x)]).collect();
    let mut out_of: Vec<Vec<ArrowId>> = vec![Vec::new(); objects.len()];
    for (i, d) in data.iter().enumerate() {
        out_of[d.dom.index()].push(ArrowId(i as u32));
    }
    let mut comp = Vec::new();
    for (fi, &(f, _)) in arrows.iter().enumerate() {
        for &g in &out_of[data[fi].cod.index()] {
            let (gb, y) = arrows[g.index()];
            let h = base.compose(&gb, &f)?;
            comp.push((g, ArrowId(fi as u32), by_cod[&(h, y)]));
        }
    }
    let cat = FinCat::from_tables(names, data, identities, comp)?;
    Ok(ElementsCategory { cat, objects, arrows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{check_category_laws, FinSetCat};
    use crate::fam::{check_fam_laws, ConstantFam, FamOverride, FinSetFam};

    #[test]
    fn constant_fam_elements() {
        let fam = ConstantFam::new(FinSetCat::new(2));
        let fp = fam_presheaf(&fam).unwrap();
        assert!(check_presheaf(&fp.window.cat, &fp.presheaf).passed());
        let el = category_of_elements(&fp.window.cat, &fp.presheaf, |a, x| format!("{}:{x}", a.0)).unwrap();
        assert_eq!(el.cat.num_objects(), 9);
        assert!(check_category_laws(&el.cat).passed());
        assert!(el.check_fibres(&fp.window.cat, &fp.presheaf).passed());
    }

    #[test]
    fn broken_fam_breaks_functoriality_and_typing() {
        let fam = FinSetFam::new(FinSetCat::new(2), 1);
        let f = crate::cat::FnArrow::new(2, vec![0, 0]);
        let lam = crate::fam::FinFamily::new(vec![1, 0]);
        let bad = FamOverride::new(fam).with(lam, f, crate::fam::FinFamily::new(vec![0, 1]));
        assert!(!check_fam_laws(&bad).passed());
        let fp = fam_presheaf(&bad).unwrap();
        assert!(!check_presheaf(&fp.window.cat, &fp.presheaf).passed());
        let el = category_of_elements(&fp.window.cat, &fp.presheaf, |a, x| format!("{}:{x}", a.0)).unwrap();
        assert!(!check_category_laws(&el.cat).passed());
    }
}
