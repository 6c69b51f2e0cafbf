//! Families in the topos of finite sets: a family over `a` is a pair
//! `(b, e)` with `e: a × b → Ω`, restricted by `(b, e) ∘ g = (b, e ∘ (g × 1_b))`.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use super::{check_restrict_typing, FamStructure};
use crate::cat::{binary_product, Category, FinSetCat, FnArrow, ProductWitness};
use crate::error::{Error, Result};

/// The subobject classifier: the two-element set.
pub const OMEGA: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ToposFamily {
    pub over: usize,
    pub b: usize,
    pub e: FnArrow,
}

/// Intensional: `fHom(a)` is enumerated for `b` up to `budget` only.
#[derive(Debug)]
pub struct ToposFam {
    pub cat: FinSetCat,
    pub budget: usize,
    products: Mutex<HashMap<(usize, usize), ProductWitness<usize, FnArrow>>>,
}

impl Clone for ToposFam {
    fn clone(&self) -> Self {
        ToposFam {
            cat: self.cat,
            budget: self.budget,
            products: Mutex::new(self.products.lock().unwrap().clone()),
        }
    }
}

impl ToposFam {
    pub fn new(cat: FinSetCat, budget: usize) -> Result<Self> {
        if cat.max_object < OMEGA {
            return Err(Error::NoSubobjectClassifier(format!(
                "the window 0..={} does not contain the two-element set",
                cat.max_object
            )));
        }
        Ok(ToposFam {
            cat,
            budget,
            products: Mutex::new(HashMap::new()),
        })
    }

    pub fn product(&self, a: usize, b: usize) -> Result<ProductWitness<usize, FnArrow>> {
        if let Some(p) = self.products.lock().unwrap().get(&(a, b)) {
            return Ok(p.clone());
        }
        let p = binary_product(&self.cat, &a, &b)?.ok_or_else(|| Error::MissingProduct(format!("{a} × {b}")))?;
        self.products.lock().unwrap().insert((a, b), p.clone());
        Ok(p)
    }

    /// `g × 1_b = ⟨g ∘ pr_c, pr_b⟩`.
    pub fn times_identity(&self, g: &FnArrow, b: usize) -> Result<FnArrow> {
        let (c, a) = (g.dom(), g.cod);
        let src = self.product(c, b)?;
        let tgt = self.product(a, b)?;
        let left = self.cat.compose(g, &src.pr_a)?;
        tgt.pair(&self.cat, &left, &src.pr_b)
    }
}

impl FamStructure for ToposFam {
    type Cat = FinSetCat;
    type Fam = ToposFamily;

    fn base(&self) -> &FinSetCat {
        &self.cat
    }

    fn families(&self, a: &usize) -> Result<Vec<ToposFamily>> {
        let mut out = Vec::new();
        for b in 0..=self.budget {
            let p = self.product(*a, b)?;
            for e in self.cat.hom(&p.apex, &OMEGA)? {
                out.push(ToposFamily { over: *a, b, e });
            }
        }
        Ok(out)
    }

    fn fam_object(&self, lam: &ToposFamily) -> usize {
        lam.over
    }

    fn restrict(&self, lam: &ToposFamily, g: &FnArrow) -> Result<ToposFamily> {
        check_restrict_typing(self, lam, g)?;
        let gx = self.times_identity(g, lam.b)?;
        Ok(ToposFamily {
            over: g.dom(),
            b: lam.b,
            e: self.cat.compose(&lam.e, &gx)?,
        })
    }

    fn family_label(&self, lam: &ToposFamily) -> String {
        format!("({}, {})", lam.b, lam.e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_identity() {
        let fam = ToposFam::new(FinSetCat::new(3), 2).unwrap();
        assert_eq!(fam.families(&1).unwrap().len(), 7);
        for lam in fam.families(&2).unwrap() {
            assert_eq!(fam.restrict(&lam, &fam.cat.identity(&2)).unwrap(), lam);
        }
        assert!(matches!(
            ToposFam::new(FinSetCat::new(1), 2),
            Err(Error::NoSubobjectClassifier(_))
        ));
    }

    #[test]
    fn restriction_reindexes_the_first_factor() {
        let fam = ToposFam::new(FinSetCat::new(3), 2).unwrap();
        // e over 2 × 2 picks out (1, 0); pulling back along the point 1 → 2 at 1.
        let lam = ToposFamily {
            over: 2,
            b: 2,
            e: FnArrow::new(2, vec![0, 0, 1, 0]),
        };
        let r = fam.restrict(&lam, &FnArrow::new(2, vec![1])).unwrap();
        assert_eq!(r.e, FnArrow::new(2, vec![1, 0]));
    }
}
