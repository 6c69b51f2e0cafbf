//! Turning the enumeration window of any category into an explicit table.

use std::collections::HashMap;

use super::{ArrowData, ArrowId, Category, FinCat, ObjectId};
use crate::error::{Error, Result};

/// The window of `C` as a [`FinCat`], with the translation both ways.
#[derive(Debug, Clone)]
pub struct Materialized<C: Category> {
    pub cat: FinCat,
    pub objects: Vec<C::Obj>,
    pub arrows: Vec<C::Arr>,
    object_ids: HashMap<C::Obj, ObjectId>,
    arrow_ids: HashMap<C::Arr, ArrowId>,
}

impl<C: Category> Materialized<C> {
    pub fn object_id(&self, a: &C::Obj) -> Option<ObjectId> {
        self.object_ids.get(a).copied()
    }

    pub fn arrow_id(&self, f: &C::Arr) -> Option<ArrowId> {
        self.arrow_ids.get(f).copied()
    }

    pub fn object(&self, a: ObjectId) -> &C::Obj {
        &self.objects[a.index()]
    }

    pub fn arrow(&self, f: ArrowId) -> &C::Arr {
        &self.arrows[f.index()]
    }
}

/// Enumerates every arrow between window objects and tabulates composition.
/// Arrows are numbered by `(dom, cod)` in window order, then hom order.
pub fn materialize<C: Category>(cat: &C) -> Result<Materialized<C>> {
    let objects = cat.objects();
    let object_ids: HashMap<C::Obj, ObjectId> = objects
        .iter()
        .enumerate()
        .map(|(i, a)| (a.clone(), ObjectId(i as u32)))
        .collect();
    let mut arrows = Vec::new();
    let mut data = Vec::new();
    for (i, a) in objects.iter().enumerate() {
        for (j, b) in objects.iter().enumerate() {
            for f in cat.hom(a, b)? {
                data.push(ArrowData {
                    name: cat.arrow_label(&f),
                    dom: ObjectId(i as u32),
                    cod: ObjectId(j as u32),
                });
                arrows.push(f);
            }
        }
    }
    let arrow_ids: HashMap<C::Arr, ArrowId> = arrows
        .iter()
        .enumerate()
        .map(|(i, f)| (f.clone(), ArrowId(i as u32)))
        .collect();
    let lookup = |f: &C::Arr| {
        arrow_ids
            .get(f)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(format!("{} leaves the enumeration window", cat.arrow_label(f))))
    };
    let identities = objects
        .iter()
        .map(|a| lookup(&cat.identity(a)))
        .collect::<Result<Vec<_>>>()?;
    let mut comp = Vec::new();
    for (fi, f) in arrows.iter().enumerate() {
        for (gi, g) in arrows.iter().enumerate() {
            if data[fi].cod == data[gi].dom {
                comp.push((ArrowId(gi as u32), ArrowId(fi as u32), lookup(&cat.compose(g, f)?)?));
            }
        }
    }
    let names = objects.iter().map(|a| cat.object_label(a)).collect();
    Ok(Materialized {
        cat: FinCat::from_tables(names, data, identities, comp)?,
        objects,
        arrows,
        object_ids,
        arrow_ids,
    })
}
