//! Categories and their finite limits.
//!
//! Two backings implement [`Category`]: [`FinCat`], a category given by
//! explicit tables, and [`FinSetCat`], the skeleton of finite sets whose
//! arrows are computed on demand. Law checks quantify over
//! [`Category::objects`], which for the intensional backing is a finite
//! enumeration window.

mod fincat;
mod finset;
mod limits;
mod materialize;

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::Result;

pub use fincat::{check_category_laws, ArrowData, ArrowId, FinCat, FinCatBuilder, ObjectId};
pub use finset::{FinSetCat, FnArrow};
pub use limits::{
    binary_product, commutes, describe_cone, describe_square, describe_verdict, global_elements, is_iso, is_mono, is_pullback, pullback_of, terminal, Cone,
    ProductWitness, PullbackVerdict, PullbackWitness, Square, Terminal,
};
pub use materialize::{materialize, Materialized};

/// A category whose hom-sets can be enumerated.
///
/// Composition follows `compose(g, f) = g ∘ f`.
pub trait Category {
    type Obj: Clone + Ord + Hash + Debug;
    type Arr: Clone + Ord + Hash + Debug;

    /// Objects that law checks quantify over, in canonical order.
    fn objects(&self) -> Vec<Self::Obj>;

    fn check_object(&self, a: &Self::Obj) -> Result<()>;

    fn check_arrow(&self, f: &Self::Arr) -> Result<()>;

    /// # Panics
    /// May panic for an arrow that `check_arrow` rejects.
    fn dom(&self, f: &Self::Arr) -> Self::Obj;

    /// # Panics
    /// May panic for an arrow that `check_arrow` rejects.
    fn cod(&self, f: &Self::Arr) -> Self::Obj;

    fn identity(&self, a: &Self::Obj) -> Self::Arr;

    fn compose(&self, g: &Self::Arr, f: &Self::Arr) -> Result<Self::Arr>;

    /// Arrows `a → b` in canonical order.
    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Vec<Self::Arr>>;

    /// Arrows `m: source → target` with `leg ∘ m = value` for every
    /// `(leg, value)` constraint, in canonical order, stopping after `limit`.
    ///
    /// The default scans `hom(source, target)`.
    fn factor(
        &self,
        source: &Self::Obj,
        target: &Self::Obj,
        constraints: &[(&Self::Arr, &Self::Arr)],
        limit: usize,
    ) -> Result<Vec<Self::Arr>> {
        let mut out = Vec::new();
        if limit == 0 {
            return Ok(out);
        }
        'candidates: for m in self.hom(source, target)? {
            for (leg, value) in constraints {
                if self.compose(leg, &m)? != **value {
                    continue 'candidates;
                }
            }
            out.push(m);
            if out.len() >= limit {
                break;
            }
        }
        Ok(out)
    }

    /// The isomorphisms among the arrows [`factor`](Category::factor)
    /// returns, in the same order, stopping after `limit`.
    fn factor_isos(
        &self,
        source: &Self::Obj,
        target: &Self::Obj,
        constraints: &[(&Self::Arr, &Self::Arr)],
        limit: usize,
    ) -> Result<Vec<Self::Arr>>
    where
        Self: Sized,
    {
        let mut out = Vec::new();
        for m in self.factor(source, target, constraints, usize::MAX)? {
            if out.len() >= limit {
                break;
            }
            if is_iso(self, &m)?.is_some() {
                out.push(m);
            }
        }
        Ok(out)
    }

    /// A candidate product `(apex, pr_a, pr_b)` tried before exhaustive search.
    /// Candidates are always verified against the universal property.
    fn propose_product(&self, _a: &Self::Obj, _b: &Self::Obj) -> Option<(Self::Obj, Self::Arr, Self::Arr)> {
        None
    }

    /// A candidate pullback `(apex, leg_f, leg_g)` of `f` and `g`, verified
    /// before use.
    fn propose_pullback(&self, _f: &Self::Arr, _g: &Self::Arr) -> Option<(Self::Obj, Self::Arr, Self::Arr)> {
        None
    }

    fn object_label(&self, a: &Self::Obj) -> String {
        format!("{a:?}")
    }

    fn arrow_label(&self, f: &Self::Arr) -> String {
        format!("{f:?}")
    }
}

pub type ObjOfCat<C> = <C as Category>::Obj;
pub type ArrOfCat<C> = <C as Category>::Arr;

pub fn is_identity<C: Category>(cat: &C, f: &C::Arr) -> bool {
    let a = cat.dom(f);
    a == cat.cod(f) && *f == cat.identity(&a)
}

/// Composes a path given in diagrammatic-reverse order: `compose_all([h, g, f]) = h ∘ g ∘ f`.
pub fn compose_all<C: Category>(cat: &C, path: &[&C::Arr]) -> Result<C::Arr> {
    let (last, rest) = path.split_last().expect("compose_all needs at least one arrow");
    let mut acc = (*last).clone();
    for g in rest.iter().rev() {
        acc = cat.compose(g, &acc)?;
    }
    Ok(acc)
}

/// Every arrow whose domain and codomain lie in the enumeration window.
pub fn all_arrows<C: Category>(cat: &C) -> Result<Vec<C::Arr>> {
    let objects = cat.objects();
    let mut out = Vec::new();
    for a in &objects {
        for b in &objects {
            out.extend(cat.hom(a, b)?);
        }
    }
    Ok(out)
}

/// Every arrow with codomain `a` whose domain lies in the window.
pub fn arrows_into<C: Category>(cat: &C, a: &C::Obj) -> Result<Vec<C::Arr>> {
    let mut out = Vec::new();
    for b in cat.objects() {
        out.extend(cat.hom(&b, a)?);
    }
    Ok(out)
}

/// Every arrow with domain `a` whose codomain lies in the window.
pub fn arrows_out_of<C: Category>(cat: &C, a: &C::Obj) -> Result<Vec<C::Arr>> {
    let mut out = Vec::new();
    for b in cat.objects() {
        out.extend(cat.hom(a, &b)?);
    }
    Ok(out)
}
