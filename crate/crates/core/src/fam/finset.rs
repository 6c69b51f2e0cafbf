//! Families of finite sets: a family over `I` is a list of fibre sizes.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{check_restrict_typing, FamStructure};
use crate::cat::{Category, FinSetCat, FnArrow};
use crate::error::Result;

/// `fibers[i]` is the size of the fibre over `i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FinFamily {
    pub fibers: Vec<usize>,
}

impl FinFamily {
    pub fn new(fibers: Vec<usize>) -> Self {
        FinFamily { fibers }
    }

    pub fn total(&self) -> usize {
        self.fibers.iter().sum()
    }
}

impl fmt::Debug for FinFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, n) in self.fibers.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "⟩")
    }
}

/// `fHom(I)` is every fibre-size list with entries at most `fiber_cap`;
/// restriction is reindexing, `(λ∘f)_j = λ_{f(j)}`.
///
/// Restriction accepts any fibre sizes, so the structure is closed under
/// the iterated families that Sigma-objects produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinSetFam {
    pub cat: FinSetCat,
    pub fiber_cap: usize,
}

impl FinSetFam {
    pub fn new(cat: FinSetCat, fiber_cap: usize) -> Self {
        FinSetFam { cat, fiber_cap }
    }
}

impl FamStructure for FinSetFam {
    type Cat = FinSetCat;
    type Fam = FinFamily;

    fn base(&self) -> &FinSetCat {
        &self.cat
    }

    fn families(&self, a: &usize) -> Result<Vec<FinFamily>> {
        let choices = self.fiber_cap + 1;
        let all = self.cat.hom(a, &choices)?;
        Ok(all.into_iter().map(|f| FinFamily::new(f.map)).collect())
    }

    fn fam_object(&self, lam: &FinFamily) -> usize {
        lam.fibers.len()
    }

    fn restrict(&self, lam: &FinFamily, f: &FnArrow) -> Result<FinFamily> {
        check_restrict_typing(self, lam, f)?;
        Ok(FinFamily::new(f.map.iter().map(|&j| lam.fibers[j]).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fam::check_fam_laws;

    #[test]
    fn finset_fam_laws_and_counts() {
        let fam = FinSetFam::new(FinSetCat::new(3), 2);
        assert_eq!(fam.families(&3).unwrap().len(), 27);
        assert_eq!(fam.families(&0).unwrap(), vec![FinFamily::new(vec![])]);
        let r = check_fam_laws(&fam);
        assert!(r.passed(), "{r}");
        let lam = FinFamily::new(vec![0, 2]);
        let f = FnArrow::new(2, vec![1, 1, 0]);
        assert_eq!(fam.restrict(&lam, &f).unwrap(), FinFamily::new(vec![2, 2, 0]));
    }
}
