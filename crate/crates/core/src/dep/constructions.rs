//! Trivial, constant and finite-set dependent arrows.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{check_apply_typing, DArr, DepStructure};
use crate::cat::{Category, FnArrow};
use crate::error::Result;
use crate::fam::{ConstFamily, ConstantFam, FamStructure, FinFamily, FinSetFam};

/// `dHom(a, λ) = {∗}`. The single dependent arrow is represented by its family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialDep<F> {
    pub fam: F,
}

impl<F: FamStructure> DepStructure for TrivialDep<F> {
    type Fams = F;
    type Dep = F::Fam;

    fn fam(&self) -> &F {
        &self.fam
    }

    fn dep_arrows(&self, lam: &F::Fam) -> Result<Vec<F::Fam>> {
        Ok(vec![lam.clone()])
    }

    fn dep_family(&self, phi: &F::Fam) -> F::Fam {
        phi.clone()
    }

    fn apply(&self, phi: &F::Fam, f: &DArr<Self>) -> Result<F::Fam> {
        self.fam.restrict(phi, f)
    }

    fn is_dep_arrow(&self, _phi: &F::Fam) -> Result<bool> {
        Ok(true)
    }

    fn dep_label(&self, phi: &F::Fam) -> String {
        format!("∗@{}", self.fam.family_label(phi))
    }
}

/// Over constant families: `dHom(a, b) = Hom(a, b)` and `f(g) = f ∘ g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantDep<C> {
    pub fam: ConstantFam<C>,
}

impl<C: Category> ConstantDep<C> {
    pub fn new(cat: C) -> Self {
        ConstantDep { fam: ConstantFam::new(cat) }
    }
}

impl<C: Category> DepStructure for ConstantDep<C> {
    type Fams = ConstantFam<C>;
    type Dep = C::Arr;

    fn fam(&self) -> &ConstantFam<C> {
        &self.fam
    }

    fn dep_arrows(&self, lam: &ConstFamily<C::Obj>) -> Result<Vec<C::Arr>> {
        self.fam.cat.hom(&lam.over, &lam.value)
    }

    fn dep_family(&self, phi: &C::Arr) -> ConstFamily<C::Obj> {
        ConstFamily {
            over: self.fam.cat.dom(phi),
            value: self.fam.cat.cod(phi),
        }
    }

    fn apply(&self, phi: &C::Arr, g: &C::Arr) -> Result<C::Arr> {
        check_apply_typing(self, phi, g)?;
        self.fam.cat.compose(phi, g)
    }

    fn is_dep_arrow(&self, phi: &C::Arr) -> Result<bool> {
        Ok(self.fam.cat.check_arrow(phi).is_ok())
    }

    fn dep_label(&self, phi: &C::Arr) -> String {
        self.fam.cat.arrow_label(phi)
    }
}

/// A choice function: `values[i] < family.fibers[i]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Choice {
    pub family: FinFamily,
    pub values: Vec<usize>,
}

impl fmt::Debug for Choice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}∈{:?}", self.values, self.family)
    }
}

/// Elements of the product of the fibres, applied by reindexing:
/// `(x ∘ f)_j = x_{f(j)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinSetDep {
    pub fam: FinSetFam,
}

impl FinSetDep {
    pub fn new(fam: FinSetFam) -> Self {
        FinSetDep { fam }
    }
}

impl DepStructure for FinSetDep {
    type Fams = FinSetFam;
    type Dep = Choice;

    fn fam(&self) -> &FinSetFam {
        &self.fam
    }

    fn dep_arrows(&self, lam: &FinFamily) -> Result<Vec<Choice>> {
        let mut out = vec![Vec::new()];
        for &n in &lam.fibers {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<usize>| {
                    (0..n).map(move |x| {
                        let mut v = prefix.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        Ok(out
            .into_iter()
            .map(|values| Choice {
                family: lam.clone(),
                values,
            })
            .collect())
    }

    fn dep_family(&self, phi: &Choice) -> FinFamily {
        phi.family.clone()
    }

    fn apply(&self, phi: &Choice, f: &FnArrow) -> Result<Choice> {
        check_apply_typing(self, phi, f)?;
        Ok(Choice {
            family: self.fam.restrict(&phi.family, f)?,
            values: f.map.iter().map(|&j| phi.values[j]).collect(),
        })
    }

    fn is_dep_arrow(&self, phi: &Choice) -> Result<bool> {
        Ok(phi.values.len() == phi.family.fibers.len()
            && phi.values.iter().zip(&phi.family.fibers).all(|(x, n)| x < n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::FinSetCat;
    use crate::dep::check_dep_laws;

    #[test]
    fn finset_choices_count_and_reindex() {
        let d = FinSetDep::new(FinSetFam::new(FinSetCat::new(3), 2));
        let lam = FinFamily::new(vec![2, 1, 2]);
        assert_eq!(d.dep_arrows(&lam).unwrap().len(), 4);
        let x = Choice {
            family: lam,
            values: vec![1, 0, 0],
        };
        let f = FnArrow::new(3, vec![2, 0]);
        assert_eq!(d.apply(&x, &f).unwrap().values, vec![0, 1]);
        let r = check_dep_laws(&d);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn constant_and_trivial_pass() {
        let c = ConstantDep::new(FinSetCat::new(2));
        assert!(check_dep_laws(&c).passed());
        let t = TrivialDep { fam: FinSetFam::new(FinSetCat::new(2), 2) };
        assert_eq!(t.dep_arrows(&FinFamily::new(vec![0, 2])).unwrap().len(), 1);
        assert!(check_dep_laws(&t).passed());
    }
}
