//! Standard Sigma structures: trivial, products over constant families,
//! explicit tables, disjoint unions of finite sets, and the slice.

use std::collections::HashMap;
use std::sync::Mutex;

use super::SigmaStructure;
use crate::cat::{binary_product, ArrowId, Category, FnArrow, ObjectId, ProductWitness};
use crate::error::{Error, Result};
use crate::fam::{
    check_restrict_typing, ArrOf, ConstFamily, ConstantFam, FamArrowId, FamStructure, FinFamily, FinSetFam, ObjOf,
    PullbackChooser, SliceFam, TableFam,
};

/// `Σₐλ = a`, `pr1 = 1_a`, `Σ_λ f = f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialSigma<F> {
    pub fam: F,
}

impl<F: FamStructure> SigmaStructure for TrivialSigma<F> {
    type Fams = F;

    fn fam(&self) -> &F {
        &self.fam
    }

    fn sigma_obj(&self, lam: &F::Fam) -> Result<ObjOf<F>> {
        Ok(self.fam.fam_object(lam))
    }

    fn pr1(&self, lam: &F::Fam) -> Result<ArrOf<F>> {
        Ok(self.fam.base().identity(&self.fam.fam_object(lam)))
    }

    fn sigma_arr(&self, lam: &F::Fam, f: &ArrOf<F>) -> Result<ArrOf<F>> {
        check_restrict_typing(&self.fam, lam, f)?;
        Ok(f.clone())
    }
}

type ProductCache<C> = HashMap<(ObjOf<ConstantFam<C>>, ObjOf<ConstantFam<C>>), ProductWitness<<C as Category>::Obj, <C as Category>::Arr>>;

/// Over constant families: `Σₐb = a × b`, `pr1 = pr_a` and
/// `Σ_b f = ⟨f ∘ pr_c, pr_b⟩`.
#[derive(Debug)]
pub struct ProductSigma<C: Category> {
    pub fam: ConstantFam<C>,
    products: Mutex<ProductCache<C>>,
}

impl<C: Category + Clone> Clone for ProductSigma<C> {
    fn clone(&self) -> Self {
        ProductSigma {
            fam: self.fam.clone(),
            products: Mutex::new(self.products.lock().unwrap().clone()),
        }
    }
}

impl<C: Category> ProductSigma<C> {
    /// Fails with `MissingProduct` naming the first window pair without one.
    pub fn new(cat: C) -> Result<Self> {
        let sigma = ProductSigma {
            fam: ConstantFam::new(cat),
            products: Mutex::new(HashMap::new()),
        };
        let objects = sigma.fam.cat.objects();
        for a in &objects {
            for b in &objects {
                sigma.product(a, b)?;
            }
        }
        Ok(sigma)
    }

    pub fn cat(&self) -> &C {
        &self.fam.cat
    }

    pub fn product(&self, a: &C::Obj, b: &C::Obj) -> Result<ProductWitness<C::Obj, C::Arr>> {
        let key = (a.clone(), b.clone());
        if let Some(p) = self.products.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let cat = &self.fam.cat;
        let p = binary_product(cat, a, b)?
            .ok_or_else(|| Error::MissingProduct(format!("{} × {}", cat.object_label(a), cat.object_label(b))))?;
        self.products.lock().unwrap().insert(key, p.clone());
        Ok(p)
    }
}

impl<C: Category> SigmaStructure for ProductSigma<C> {
    type Fams = ConstantFam<C>;

    fn fam(&self) -> &ConstantFam<C> {
        &self.fam
    }

    fn sigma_obj(&self, lam: &ConstFamily<C::Obj>) -> Result<C::Obj> {
        Ok(self.product(&lam.over, &lam.value)?.apex)
    }

    fn pr1(&self, lam: &ConstFamily<C::Obj>) -> Result<C::Arr> {
        Ok(self.product(&lam.over, &lam.value)?.pr_a)
    }

    fn sigma_arr(&self, lam: &ConstFamily<C::Obj>, f: &C::Arr) -> Result<C::Arr> {
        check_restrict_typing(&self.fam, lam, f)?;
        let cat = &self.fam.cat;
        let src = self.product(&cat.dom(f), &lam.value)?;
        let tgt = self.product(&lam.over, &lam.value)?;
        tgt.pair(cat, &cat.compose(f, &src.pr_a)?, &src.pr_b)
    }
}

/// Sigma data given by tables over a [`TableFam`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSigma {
    pub fam: TableFam,
    sigma_obj: Vec<ObjectId>,
    pr1: Vec<ArrowId>,
    sigma_arr: HashMap<(FamArrowId, ArrowId), ArrowId>,
}

impl TableSigma {
    /// One Sigma-object and first projection per family, and one
    /// `Σ_λ f` per family and arrow into its object. Typing is left to the
    /// law check.
    pub fn new(
        fam: TableFam,
        sigma_obj: Vec<ObjectId>,
        pr1: Vec<ArrowId>,
        sigma_arr: Vec<(FamArrowId, ArrowId, ArrowId)>,
    ) -> Result<TableSigma> {
        let n = fam.num_families();
        if sigma_obj.len() != n || pr1.len() != n {
            return Err(Error::Integrity(format!(
                "sigma tables list {} objects and {} projections for {n} families",
                sigma_obj.len(),
                pr1.len()
            )));
        }
        let cat = fam.base();
        for a in &sigma_obj {
            cat.check_object(a)
                .map_err(|_| Error::Integrity(format!("sigma object {} does not exist", a.0)))?;
        }
        for f in &pr1 {
            cat.arrow(*f)
                .map_err(|_| Error::Integrity(format!("projection {} does not exist", f.0)))?;
        }
        let mut table = HashMap::new();
        for (lam, f, t) in sigma_arr {
            fam.check_family(lam)?;
            for x in [f, t] {
                cat.arrow(x)
                    .map_err(|_| Error::Integrity(format!("sigma arrow entry references arrow {}", x.0)))?;
            }
            if table.insert((lam, f), t).is_some() {
                return Err(Error::Integrity(format!(
                    "duplicate sigma arrow entry for ({}, {})",
                    fam.name(lam),
                    cat.arrow_label(&f)
                )));
            }
        }
        for lam in fam.family_ids() {
            let a = fam.fam_object(&lam);
            for b in cat.objects() {
                for f in cat.hom(&b, &a)? {
                    if !table.contains_key(&(lam, f)) {
                        return Err(Error::Integrity(format!(
                            "sigma arrow table has no entry for ({}, {})",
                            fam.name(lam),
                            cat.arrow_label(&f)
                        )));
                    }
                }
            }
        }
        Ok(TableSigma {
            fam,
            sigma_obj,
            pr1,
            sigma_arr: table,
        })
    }

    /// Tabulates any Sigma structure over the same table family.
    pub fn tabulate<S: SigmaStructure<Fams = TableFam>>(sigma: &S) -> Result<TableSigma> {
        let fam = sigma.fam().clone();
        let mut objs = Vec::new();
        let mut prs = Vec::new();
        let mut arrs = Vec::new();
        for lam in fam.family_ids() {
            objs.push(sigma.sigma_obj(&lam)?);
            prs.push(sigma.pr1(&lam)?);
            for b in fam.base().objects() {
                for f in fam.base().hom(&b, &fam.fam_object(&lam))? {
                    arrs.push((lam, f, sigma.sigma_arr(&lam, &f)?));
                }
            }
        }
        TableSigma::new(fam, objs, prs, arrs)
    }

    pub fn sigma_objects(&self) -> &[ObjectId] {
        &self.sigma_obj
    }

    pub fn projections(&self) -> &[ArrowId] {
        &self.pr1
    }

    /// `(λ, f, Σ_λ f)` sorted.
    pub fn sigma_arrow_triples(&self) -> Vec<(FamArrowId, ArrowId, ArrowId)> {
        let mut out: Vec<_> = self.sigma_arr.iter().map(|(&(l, f), &t)| (l, f, t)).collect();
        out.sort();
        out
    }

    pub fn with_sigma_arr(mut self, lam: FamArrowId, f: ArrowId, t: ArrowId) -> Self {
        self.sigma_arr.insert((lam, f), t);
        self
    }

    pub fn with_pr1(mut self, lam: FamArrowId, f: ArrowId) -> Self {
        self.pr1[lam.index()] = f;
        self
    }
}

impl SigmaStructure for TableSigma {
    type Fams = TableFam;

    fn fam(&self) -> &TableFam {
        &self.fam
    }

    fn sigma_obj(&self, lam: &FamArrowId) -> Result<ObjectId> {
        self.fam.check_family(*lam)?;
        Ok(self.sigma_obj[lam.index()])
    }

    fn pr1(&self, lam: &FamArrowId) -> Result<ArrowId> {
        self.fam.check_family(*lam)?;
        Ok(self.pr1[lam.index()])
    }

    fn sigma_arr(&self, lam: &FamArrowId, f: &ArrowId) -> Result<ArrowId> {
        check_restrict_typing(&self.fam, lam, f)?;
        Ok(self.sigma_arr[&(*lam, *f)])
    }
}

/// Disjoint unions of finite sets. The points of `Σ_I λ` are the pairs
/// `(i, x)` with `x < λ_i`, numbered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinSetSigma {
    pub fam: FinSetFam,
}

impl FinSetSigma {
    pub fn new(fam: FinSetFam) -> Self {
        FinSetSigma { fam }
    }

    /// `offsets[i]` is the index of `(i, 0)`.
    pub fn offsets(lam: &FinFamily) -> Vec<usize> {
        let mut acc = 0;
        lam.fibers
            .iter()
            .map(|n| {
                let o = acc;
                acc += n;
                o
            })
            .collect()
    }

    pub fn index(lam: &FinFamily, i: usize, x: usize) -> usize {
        Self::offsets(lam)[i] + x
    }

    /// The pair `(i, x)` at a point of `Σ_I λ`.
    pub fn decode(lam: &FinFamily, p: usize) -> (usize, usize) {
        let mut rest = p;
        for (i, &n) in lam.fibers.iter().enumerate() {
            if rest < n {
                return (i, rest);
            }
            rest -= n;
        }
        panic!("point {p} is outside a disjoint union of size {}", lam.total())
    }
}

impl SigmaStructure for FinSetSigma {
    type Fams = FinSetFam;

    fn fam(&self) -> &FinSetFam {
        &self.fam
    }

    fn sigma_obj(&self, lam: &FinFamily) -> Result<usize> {
        Ok(lam.total())
    }

    fn pr1(&self, lam: &FinFamily) -> Result<FnArrow> {
        let map = lam
            .fibers
            .iter()
            .enumerate()
            .flat_map(|(i, &n)| std::iter::repeat_n(i, n))
            .collect();
        Ok(FnArrow::new(lam.fibers.len(), map))
    }

    fn sigma_arr(&self, lam: &FinFamily, f: &FnArrow) -> Result<FnArrow> {
        check_restrict_typing(&self.fam, lam, f)?;
        let offsets = Self::offsets(lam);
        let mut map = Vec::new();
        for &i in &f.map {
            map.extend((0..lam.fibers[i]).map(|x| offsets[i] + x));
        }
        Ok(FnArrow::new(lam.total(), map))
    }
}

/// The slice: `Σₐλ = dom λ`, `pr1 = λ`, `Σ_λ f` the top of the chosen
/// pullback. The squares are pullbacks but strictness holds only for a
/// strictly functorial choice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceSigma<C, Ch> {
    pub fam: SliceFam<C, Ch>,
}

impl<C: Category, Ch: PullbackChooser<C>> SigmaStructure for SliceSigma<C, Ch> {
    type Fams = SliceFam<C, Ch>;

    fn fam(&self) -> &SliceFam<C, Ch> {
        &self.fam
    }

    fn sigma_obj(&self, lam: &C::Arr) -> Result<C::Obj> {
        Ok(self.fam.cat.dom(lam))
    }

    fn pr1(&self, lam: &C::Arr) -> Result<C::Arr> {
        Ok(lam.clone())
    }

    fn sigma_arr(&self, lam: &C::Arr, f: &C::Arr) -> Result<C::Arr> {
        check_restrict_typing(&self.fam, lam, f)?;
        Ok(self.fam.square(lam, f)?.square.top)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::FinSetCat;
    use crate::fam::{check_fam_laws, Canonical, Reversed};
    use crate::report::{LawId, Status};
    use crate::sigma::check_sigma_laws;

    #[test]
    fn trivial_sigma_passes_over_finset() {
        let s = TrivialSigma { fam: FinSetFam::new(FinSetCat::new(2), 1) };
        let lam = FinFamily::new(vec![1, 0]);
        assert_eq!(s.sigma_obj(&lam).unwrap(), 2);
        assert_eq!(s.pr1(&lam).unwrap(), FnArrow::new(2, vec![0, 1]));
        let r = check_sigma_laws(&s);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn product_sigma_sizes_and_laws() {
        let s = ProductSigma::new(FinSetCat::new(3)).unwrap();
        let lam = s.fam.family(2, 3);
        assert_eq!(s.sigma_obj(&lam).unwrap(), 6);
        assert_eq!(s.sigma_arr(&lam, &FnArrow::new(2, vec![0, 1])).unwrap(), FnArrow::new(6, (0..6).collect()));
        let r = check_sigma_laws(&s);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn finset_sigma_encoding() {
        let s = FinSetSigma::new(FinSetFam::new(FinSetCat::new(3), 2));
        let lam = FinFamily::new(vec![2, 0, 1]);
        assert_eq!(s.sigma_obj(&lam).unwrap(), 3);
        assert_eq!(s.pr1(&lam).unwrap(), FnArrow::new(3, vec![0, 0, 2]));
        assert_eq!(FinSetSigma::decode(&lam, 2), (2, 0));
        // f = [2, 0]: Σ_J(λ∘f) has points (0,0), (1,0), (1,1).
        let t = s.sigma_arr(&lam, &FnArrow::new(3, vec![2, 0])).unwrap();
        assert_eq!(t, FnArrow::new(3, vec![2, 0, 1]));
        let r = check_sigma_laws(&s);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn slice_sigma_is_not_strict() {
        let rev = SliceSigma { fam: SliceFam::new(FinSetCat::new(2), Reversed).unwrap() };
        let r = check_sigma_laws(&rev);
        assert_eq!(r.status(LawId::SigmaPullback), Some(Status::Pass));
        assert_eq!(r.status(LawId::S1), Some(Status::Fail));
        // The canonical choice is strict on Sigma arrows but not on families.
        let canon = SliceSigma { fam: SliceFam::new(FinSetCat::new(2), Canonical).unwrap() };
        assert!(check_sigma_laws(&canon).passed());
        assert_eq!(check_fam_laws(&canon.fam).status(LawId::Fam2), Some(Status::Fail));
    }
}
