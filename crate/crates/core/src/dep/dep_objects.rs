//! Sections of a product projection versus plain arrows:
//! `e(f) = ⟨1_a, f⟩` and `j(φ) = pr_b ∘ φ` are mutually inverse.

use crate::cat::{binary_product, Category, ProductWitness};
use crate::error::{Error, Result};
use crate::report::{LawId, LawReport};

/// Both directions, tabulated. `e[k]` is the image of `homs[k]` and `j[s]`
/// the image of `sections[s]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepObjectBijection<O, A> {
    pub product: ProductWitness<O, A>,
    pub homs: Vec<A>,
    pub sections: Vec<A>,
    pub e: Vec<A>,
    pub j: Vec<A>,
}

pub fn dep_object_bijection<C: Category>(cat: &C, a: &C::Obj, b: &C::Obj) -> Result<DepObjectBijection<C::Obj, C::Arr>> {
    let product = binary_product(cat, a, b)?
        .ok_or_else(|| Error::MissingProduct(format!("{} × {}", cat.object_label(a), cat.object_label(b))))?;
    let id = cat.identity(a);
    let homs = cat.hom(a, b)?;
    let sections = cat.factor(a, &product.apex, &[(&product.pr_a, &id)], usize::MAX)?;
    let e = homs
        .iter()
        .map(|f| product.pair(cat, &id, f))
        .collect::<Result<Vec<_>>>()?;
    let j = sections
        .iter()
        .map(|phi| cat.compose(&product.pr_b, phi))
        .collect::<Result<Vec<_>>>()?;
    Ok(DepObjectBijection {
        product,
        homs,
        sections,
        e,
        j,
    })
}

impl<O, A: Clone + PartialEq> DepObjectBijection<O, A> {
    /// Replaces one entry of `j`.
    pub fn with_j(mut self, s: usize, image: A) -> Self {
        self.j[s] = image;
        self
    }

    /// `j(e(f)) = f` for every arrow and `e(j(φ)) = φ` for every section.
    pub fn check<C: Category<Obj = O, Arr = A>>(&self, cat: &C) -> LawReport {
        let mut report = LawReport::new("exdo2", &[LawId::DepObjectBij]);
        for (k, f) in self.homs.iter().enumerate() {
            let back = self.sections.iter().position(|s| *s == self.e[k]).map(|s| &self.j[s]);
            report.record(LawId::DepObjectBij, back == Some(f), || {
                format!(
                    "f = {}: j(e(f)) = {}",
                    cat.arrow_label(f),
                    back.map(|x| cat.arrow_label(x)).unwrap_or_else(|| "undefined".into())
                )
            });
        }
        for (s, phi) in self.sections.iter().enumerate() {
            let back = self.homs.iter().position(|f| *f == self.j[s]).map(|k| &self.e[k]);
            report.record(LawId::DepObjectBij, back == Some(phi), || {
                format!(
                    "φ = {}: e(j(φ)) = {}",
                    cat.arrow_label(phi),
                    back.map(|x| cat.arrow_label(x)).unwrap_or_else(|| "undefined".into())
                )
            });
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{FinSetCat, FnArrow};

    #[test]
    fn finset_round_trip_and_mutation() {
        let cat = FinSetCat::new(3);
        let bij = dep_object_bijection(&cat, &2, &3).unwrap();
        assert_eq!(bij.homs.len(), 9);
        assert_eq!(bij.sections.len(), 9);
        assert!(bij.check(&cat).passed());
        let diag = dep_object_bijection(&cat, &2, &2).unwrap();
        let id = FnArrow::new(2, vec![0, 1]);
        let k = diag.homs.iter().position(|f| *f == id).unwrap();
        assert_eq!(diag.e[k], FnArrow::new(4, vec![0, 3]));
        let wrong = bij.j[1].clone();
        let broken = bij.with_j(0, wrong);
        assert!(!broken.check(&cat).passed());
    }
}
