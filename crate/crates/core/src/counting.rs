//! Cardinality oracles on finite sets, each compared against a brute-force
//! or closed-form count.

use crate::cat::{Category, FinSetCat};
use crate::dep::{DepStructure, FinSetDep, GlobalSectionsDep};
use crate::error::Result;
use crate::fam::{FamStructure, FinFamily, FinSetFam};
use crate::report::{LawId, LawReport};
use crate::sigma::{FinSetSigma, ProductSigma, SigmaStructure};

/// `k^m` with `0^0 = 1`.
pub fn power(k: usize, m: usize) -> usize {
    (0..m).fold(1, |acc, _| acc * k)
}

/// Points `(i, x)` with `x < λ(i)`, enumerated one by one.
pub fn disjoint_union_size(lam: &FinFamily) -> usize {
    (0..lam.fibers.len())
        .flat_map(|i| (0..lam.fibers[i]).map(move |x| (i, x)))
        .count()
}

/// `|hom(m, k)| = k^m`; `|Σ_I λ| = Σ|λ(i)|`; `|dHom(I, λ)| = Π|λ(i)|` for
/// both choice functions and global sections; `|𝒟ₐb| = |b|^|a|` for sections
/// of product projections.
pub fn check_counting(cat: FinSetCat, fiber_cap: usize) -> Result<LawReport> {
    let mut report = LawReport::new(
        "counting",
        &[LawId::CountHom, LawId::CountSigma, LawId::CountDhom, LawId::CountSections],
    );
    let objects = cat.objects();
    for &m in &objects {
        for &k in &objects {
            let n = cat.hom(&m, &k)?.len();
            report.record(LawId::CountHom, n == power(k, m), || {
                format!("|hom({m}, {k})| = {n}, expected {}", power(k, m))
            });
        }
    }
    let fam = FinSetFam::new(cat, fiber_cap);
    let sigma = FinSetSigma::new(fam.clone());
    let choices = FinSetDep::new(fam.clone());
    let sections = GlobalSectionsDep::new(sigma.clone());
    for a in &objects {
        for lam in fam.families(a)? {
            let total = sigma.sigma_obj(&lam)?;
            let brute = disjoint_union_size(&lam);
            report.record(LawId::CountSigma, total == brute && total == lam.total(), || {
                format!("λ = {lam:?}: |Σλ| = {total}, enumerated {brute}")
            });
            let product: usize = lam.fibers.iter().product();
            let c = choices.dep_arrows(&lam)?.len();
            let s = sections.dep_arrows(&lam)?.len();
            report.record(LawId::CountDhom, c == product && s == product, || {
                format!("λ = {lam:?}: {c} choice functions and {s} sections, expected {product}")
            });
        }
    }
    let products = ProductSigma::new(cat)?;
    let dep = GlobalSectionsDep::new(products);
    for &a in &objects {
        for &b in &objects {
            let lam = dep.sigma.fam.family(a, b);
            let n = dep.dep_arrows(&lam)?.len();
            report.record(LawId::CountSections, n == power(b, a), || {
                format!("|D({a}, {b})| = {n}, expected {}", power(b, a))
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_and_unions() {
        assert_eq!(power(0, 0), 1);
        assert_eq!(power(0, 2), 0);
        assert_eq!(power(3, 2), 9);
        assert_eq!(disjoint_union_size(&FinFamily::new(vec![2, 0, 1])), 3);
    }

    #[test]
    fn finset_counts_hold() {
        let r = check_counting(FinSetCat::new(3), 2).unwrap();
        assert!(r.passed(), "{r}");
        // 16 hom-sets, 40 families, 16 constant families.
        let checked: Vec<_> = r.entries.iter().map(|e| e.checked).collect();
        assert_eq!(checked, vec![16, 40, 40, 16]);
    }
}
