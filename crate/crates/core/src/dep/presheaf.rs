//! The presheaf `(a, λ) ↦ dHom(a, λ)` on the category of elements of
//! `fHom`, and its own category of elements.

use super::DepStructure;
use crate::error::{Error, Result};
use crate::fam::{category_of_elements, fam_presheaf, ElementsCategory, FamPresheaf, FamStructure, Presheaf};

pub struct DepPresheaf<D: DepStructure> {
    pub fam: FamPresheaf<<D::Fams as FamStructure>::Cat, <D::Fams as FamStructure>::Fam>,
    pub elements: ElementsCategory,
    pub presheaf: Presheaf<D::Dep>,
}

/// Fails with `BudgetExceeded` when an application leaves the enumerated
/// dependent arrows.
pub fn dep_presheaf<D: DepStructure>(dep: &D) -> Result<DepPresheaf<D>> {
    let fam = dep.fam();
    let fp = fam_presheaf(fam)?;
    let elements = category_of_elements(&fp.window.cat, &fp.presheaf, |a, x| {
        format!("({}, {})", fp.window.cat.object_name(a), fam.family_label(&fp.presheaf.sets[a.index()][x]))
    })?;
    let mut sets = Vec::with_capacity(elements.objects.len());
    for &(a, x) in &elements.objects {
        sets.push(dep.dep_arrows(&fp.presheaf.sets[a.index()][x])?);
    }
    let mut maps = Vec::with_capacity(elements.arrows.len());
    for (i, &(f, _)) in elements.arrows.iter().enumerate() {
        let d = &elements.cat.arrow_data()[i];
        let target = &sets[d.dom.index()];
        let mut m = Vec::with_capacity(sets[d.cod.index()].len());
        for phi in &sets[d.cod.index()] {
            let r = dep.apply(phi, fp.window.arrow(f))?;
            let idx = target.iter().position(|x| *x == r).ok_or_else(|| {
                Error::BudgetExceeded(format!(
                    "{} is outside the enumerated dependent arrows",
                    dep.dep_label(&r)
                ))
            })?;
            m.push(idx);
        }
        maps.push(m);
    }
    let presheaf = Presheaf::new(&elements.cat, sets, maps)?;
    Ok(DepPresheaf {
        fam: fp,
        elements,
        presheaf,
    })
}

/// Objects `((a, λ), Φ)`; arrows the arrows of the elements category that
/// carry `Φ` to `Φ(f)`.
pub fn category_of_dep_arrows<D: DepStructure>(dep: &D, p: &DepPresheaf<D>) -> Result<ElementsCategory> {
    let names: Vec<String> = p.elements.cat.object_names().to_vec();
    category_of_elements(&p.elements.cat, &p.presheaf, |o, x| {
        format!("{}: {}", names[o.index()], dep.dep_label(&p.presheaf.sets[o.index()][x]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{check_category_laws, FinSetCat, FnArrow};
    use crate::dep::{check_dep_laws, Choice, DepOverride, FinSetDep, TrivialDep};
    use crate::fam::{check_presheaf, FinFamily, FinSetFam};

    #[test]
    fn trivial_dep_arrows_match_elements() {
        let fam = FinSetFam::new(FinSetCat::new(2), 1);
        let p = dep_presheaf(&TrivialDep { fam: fam.clone() }).unwrap();
        let c = category_of_dep_arrows(&TrivialDep { fam }, &p).unwrap();
        assert_eq!(c.cat.num_objects(), p.elements.cat.num_objects());
        assert_eq!(c.cat.num_arrows(), p.elements.cat.num_arrows());
        assert!(check_category_laws(&c.cat).passed());
    }

    #[test]
    fn finset_counts_and_functoriality() {
        let d = FinSetDep::new(FinSetFam::new(FinSetCat::new(2), 2));
        let p = dep_presheaf(&d).unwrap();
        assert!(check_presheaf(&p.elements.cat, &p.presheaf).passed());
        let c = category_of_dep_arrows(&d, &p).unwrap();
        // Σ over λ of Π λ_i is (0 + 1 + 2)^a summed over a = 0, 1, 2.
        assert_eq!(c.cat.num_objects(), 1 + 3 + 9);
        assert!(check_category_laws(&c.cat).passed());
        let x = Choice {
            family: FinFamily::new(vec![2, 2]),
            values: vec![0, 1],
        };
        let swap = FnArrow::new(2, vec![1, 0]);
        let bad = DepOverride::new(d).with(x.clone(), swap, x);
        assert!(!check_dep_laws(&bad).passed());
        let p = dep_presheaf(&bad).unwrap();
        assert!(!check_presheaf(&p.elements.cat, &p.presheaf).passed());
    }
}
