//! Constant and coslice family structures, available over any category.

use serde::{Deserialize, Serialize};

use super::{check_restrict_typing, ArrOf, FamStructure, ObjOf};
use crate::cat::{arrows_out_of, Category};
use crate::error::Result;

/// A constant family: the object `value`, viewed as a family over `over`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ConstFamily<O> {
    pub over: O,
    pub value: O,
}

/// `fHom(a)` is the set of objects, and `b ∘ f = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantFam<C> {
    pub cat: C,
}

impl<C: Category> ConstantFam<C> {
    pub fn new(cat: C) -> Self {
        ConstantFam { cat }
    }

    pub fn family(&self, over: C::Obj, value: C::Obj) -> ConstFamily<C::Obj> {
        ConstFamily { over, value }
    }
}

impl<C: Category> FamStructure for ConstantFam<C> {
    type Cat = C;
    type Fam = ConstFamily<C::Obj>;

    fn base(&self) -> &C {
        &self.cat
    }

    fn families(&self, a: &C::Obj) -> Result<Vec<Self::Fam>> {
        self.cat.check_object(a)?;
        Ok(self
            .cat
            .objects()
            .into_iter()
            .map(|value| ConstFamily { over: a.clone(), value })
            .collect())
    }

    fn fam_object(&self, lam: &Self::Fam) -> C::Obj {
        lam.over.clone()
    }

    fn restrict(&self, lam: &Self::Fam, f: &C::Arr) -> Result<Self::Fam> {
        check_restrict_typing(self, lam, f)?;
        Ok(ConstFamily {
            over: self.cat.dom(f),
            value: lam.value.clone(),
        })
    }

    fn family_label(&self, lam: &Self::Fam) -> String {
        format!("{}@{}", self.cat.object_label(&lam.value), self.cat.object_label(&lam.over))
    }
}

/// `fHom(a)` is the set of arrows out of `a`; restriction is composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosliceFam<C> {
    pub cat: C,
}

impl<C: Category> CosliceFam<C> {
    pub fn new(cat: C) -> Self {
        CosliceFam { cat }
    }
}

impl<C: Category> FamStructure for CosliceFam<C> {
    type Cat = C;
    type Fam = C::Arr;

    fn base(&self) -> &C {
        &self.cat
    }

    fn families(&self, a: &ObjOf<Self>) -> Result<Vec<C::Arr>> {
        self.cat.check_object(a)?;
        arrows_out_of(&self.cat, a)
    }

    fn fam_object(&self, lam: &C::Arr) -> C::Obj {
        self.cat.dom(lam)
    }

    fn restrict(&self, lam: &C::Arr, f: &ArrOf<Self>) -> Result<C::Arr> {
        check_restrict_typing(self, lam, f)?;
        self.cat.compose(lam, f)
    }

    fn family_label(&self, lam: &C::Arr) -> String {
        self.cat.arrow_label(lam)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::FinSetCat;
    use crate::fam::check_fam_laws;

    #[test]
    fn constant_fam_over_finset() {
        let fam = ConstantFam::new(FinSetCat::new(3));
        assert_eq!(fam.families(&2).unwrap().len(), 4);
        let lam = fam.family(2, 3);
        let f = crate::cat::FnArrow::new(2, vec![1, 0, 0]);
        assert_eq!(fam.restrict(&lam, &f).unwrap(), fam.family(3, 3));
        assert!(check_fam_laws(&fam).passed());
    }

    #[test]
    fn coslice_over_finset() {
        let fam = CosliceFam::new(FinSetCat::new(3));
        let r = check_fam_laws(&fam);
        assert!(r.passed(), "{r}");
        let lam = fam.families(&2).unwrap()[3].clone();
        assert_eq!(fam.restrict(&lam, &fam.cat.identity(&2)).unwrap(), lam);
    }
}
