//! Finite categories given by explicit tables.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::Category;
use crate::error::{Error, Result};
use crate::report::{LawId, LawReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ObjectId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ArrowId(pub u32);

impl ObjectId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl ArrowId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowData {
    pub name: String,
    pub dom: ObjectId,
    pub cod: ObjectId,
}

/// A finite category: objects, typed arrows, identities and a composition
/// table defined exactly on composable pairs.
///
/// Construction guarantees referential integrity and totality of the table.
/// Whether the table is typed correctly, unital and associative is what
/// [`check_category_laws`] reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    objects: Vec<String>,
    arrows: Vec<ArrowData>,
    identities: Vec<ArrowId>,
    comp: HashMap<(ArrowId, ArrowId), ArrowId>,
    hom_index: HashMap<(ObjectId, ObjectId), Vec<ArrowId>>,
}

impl FinCat {
    pub fn builder() -> FinCatBuilder {
        FinCatBuilder::default()
    }

    /// Builds a category from raw tables; `comp` holds `(g, f, g∘f)` triples.
    pub fn from_tables(
        objects: Vec<String>,
        arrows: Vec<ArrowData>,
        identities: Vec<ArrowId>,
        comp: Vec<(ArrowId, ArrowId, ArrowId)>,
    ) -> Result<FinCat> {
        let n_obj = objects.len();
        let n_arr = arrows.len();
        let obj_ok = |o: ObjectId| o.index() < n_obj;
        let arr_ok = |f: ArrowId| f.index() < n_arr;
        for (i, a) in arrows.iter().enumerate() {
            if !obj_ok(a.dom) || !obj_ok(a.cod) {
                return Err(Error::Integrity(format!("arrow {i} ({}) references a missing object", a.name)));
            }
        }
        if identities.len() != n_obj {
            return Err(Error::Integrity(format!(
                "{} identities listed for {} objects",
                identities.len(),
                n_obj
            )));
        }
        if let Some(bad) = identities.iter().find(|f| !arr_ok(**f)) {
            return Err(Error::Integrity(format!("identity arrow {} does not exist", bad.0)));
        }
        let mut table = HashMap::with_capacity(comp.len());
        for (g, f, h) in comp {
            for x in [g, f, h] {
                if !arr_ok(x) {
                    return Err(Error::Integrity(format!("composition entry references arrow {}", x.0)));
                }
            }
            if arrows[f.index()].cod != arrows[g.index()].dom {
                return Err(Error::Integrity(format!(
                    "composition entry for non-composable pair {}∘{}",
                    arrows[g.index()].name,
                    arrows[f.index()].name
                )));
            }
            if table.insert((g, f), h).is_some() {
                return Err(Error::Integrity(format!(
                    "duplicate composition entry for {}∘{}",
                    arrows[g.index()].name,
                    arrows[f.index()].name
                )));
            }
        }
        let mut hom_index: HashMap<(ObjectId, ObjectId), Vec<ArrowId>> = HashMap::new();
        for (i, a) in arrows.iter().enumerate() {
            hom_index.entry((a.dom, a.cod)).or_default().push(ArrowId(i as u32));
        }
        for (i, f) in arrows.iter().enumerate() {
            for (j, g) in arrows.iter().enumerate() {
                if f.cod == g.dom && !table.contains_key(&(ArrowId(j as u32), ArrowId(i as u32))) {
                    return Err(Error::Integrity(format!("composition table has no entry for {}∘{}", g.name, f.name)));
                }
            }
        }
        Ok(FinCat {
            objects,
            arrows,
            identities,
            comp: table,
            hom_index,
        })
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn object_name(&self, a: ObjectId) -> &str {
        &self.objects[a.index()]
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn arrow(&self, f: ArrowId) -> Result<&ArrowData> {
        self.arrows
            .get(f.index())
            .ok_or_else(|| Error::UnknownArrow(format!("#{}", f.0)))
    }

    pub fn arrow_data(&self) -> &[ArrowData] {
        &self.arrows
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> {
        (0..self.arrows.len() as u32).map(ArrowId)
    }

    pub fn identities(&self) -> &[ArrowId] {
        &self.identities
    }

    pub fn object_named(&self, name: &str) -> Option<ObjectId> {
        self.objects.iter().position(|n| n == name).map(|i| ObjectId(i as u32))
    }

    pub fn arrow_named(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name).map(|i| ArrowId(i as u32))
    }

    /// Composition triples `(g, f, g∘f)` sorted by `(g, f)`.
    pub fn composition_triples(&self) -> Vec<(ArrowId, ArrowId, ArrowId)> {
        let mut out: Vec<_> = self.comp.iter().map(|(&(g, f), &h)| (g, f, h)).collect();
        out.sort();
        out
    }

    /// A copy whose table maps `(g, f)` to `h` instead.
    pub fn with_comp_entry(&self, g: ArrowId, f: ArrowId, h: ArrowId) -> Result<FinCat> {
        if !self.comp.contains_key(&(g, f)) {
            return Err(Error::NotComposable {
                g: self.arrow_label(&g),
                f: self.arrow_label(&f),
            });
        }
        self.arrow(h)?;
        let mut out = self.clone();
        out.comp.insert((g, f), h);
        Ok(out)
    }

    /// The opposite category: same identifiers, domains and codomains
    /// swapped, composition reversed.
    pub fn opposite(&self) -> FinCat {
        let arrows = self
            .arrows
            .iter()
            .map(|a| ArrowData {
                name: a.name.clone(),
                dom: a.cod,
                cod: a.dom,
            })
            .collect();
        let comp = self.comp.iter().map(|(&(g, f), &h)| (f, g, h)).collect();
        FinCat::from_tables(self.objects.clone(), arrows, self.identities.clone(), comp)
            .expect("opposite of a valid table is valid")
    }
}

impl Category for FinCat {
    type Obj = ObjectId;
    type Arr = ArrowId;

    fn objects(&self) -> Vec<ObjectId> {
        (0..self.objects.len() as u32).map(ObjectId).collect()
    }

    fn check_object(&self, a: &ObjectId) -> Result<()> {
        if a.index() < self.objects.len() {
            Ok(())
        } else {
            Err(Error::UnknownObject(format!("#{}", a.0)))
        }
    }

    fn check_arrow(&self, f: &ArrowId) -> Result<()> {
        self.arrow(*f).map(|_| ())
    }

    fn dom(&self, f: &ArrowId) -> ObjectId {
        self.arrows[f.index()].dom
    }

    fn cod(&self, f: &ArrowId) -> ObjectId {
        self.arrows[f.index()].cod
    }

    fn identity(&self, a: &ObjectId) -> ArrowId {
        self.identities[a.index()]
    }

    fn compose(&self, g: &ArrowId, f: &ArrowId) -> Result<ArrowId> {
        let gd = self.arrow(*g)?;
        let fd = self.arrow(*f)?;
        if fd.cod != gd.dom {
            return Err(Error::NotComposable {
                g: gd.name.clone(),
                f: fd.name.clone(),
            });
        }
        Ok(self.comp[&(*g, *f)])
    }

    fn hom(&self, a: &ObjectId, b: &ObjectId) -> Result<Vec<ArrowId>> {
        self.check_object(a)?;
        self.check_object(b)?;
        Ok(self.hom_index.get(&(*a, *b)).cloned().unwrap_or_default())
    }

    fn object_label(&self, a: &ObjectId) -> String {
        self.objects
            .get(a.index())
            .cloned()
            .unwrap_or_else(|| format!("#{}", a.0))
    }

    fn arrow_label(&self, f: &ArrowId) -> String {
        self.arrows
            .get(f.index())
            .map(|a| a.name.clone())
            .unwrap_or_else(|| format!("#{}", f.0))
    }
}

/// Incremental construction of a [`FinCat`].
#[derive(Debug, Default, Clone)]
pub struct FinCatBuilder {
    objects: Vec<String>,
    arrows: Vec<ArrowData>,
    identities: Vec<Option<ArrowId>>,
    comp: Vec<(ArrowId, ArrowId, ArrowId)>,
}

impl FinCatBuilder {
    pub fn object(&mut self, name: impl Into<String>) -> ObjectId {
        self.objects.push(name.into());
        self.identities.push(None);
        ObjectId(self.objects.len() as u32 - 1)
    }

    pub fn arrow(&mut self, name: impl Into<String>, dom: ObjectId, cod: ObjectId) -> ArrowId {
        self.arrows.push(ArrowData {
            name: name.into(),
            dom,
            cod,
        });
        ArrowId(self.arrows.len() as u32 - 1)
    }

    pub fn identity(&mut self, a: ObjectId, f: ArrowId) -> &mut Self {
        if let Some(slot) = self.identities.get_mut(a.index()) {
            *slot = Some(f);
        }
        self
    }

    /// Records `g ∘ f = h`.
    pub fn compose(&mut self, g: ArrowId, f: ArrowId, h: ArrowId) -> &mut Self {
        self.comp.push((g, f, h));
        self
    }

    pub fn arrow_dom_cod(&self, f: ArrowId) -> Option<(ObjectId, ObjectId)> {
        self.arrows.get(f.index()).map(|a| (a.dom, a.cod))
    }

    pub fn build(self) -> Result<FinCat> {
        let mut identities = Vec::with_capacity(self.identities.len());
        for (i, id) in self.identities.iter().enumerate() {
            match id {
                Some(f) => identities.push(*f),
                None => {
                    return Err(Error::Integrity(format!("object {} has no identity", self.objects[i])));
                }
            }
        }
        FinCat::from_tables(self.objects, self.arrows, identities, self.comp)
    }
}

/// Exhaustively checks typing, unit and associativity; witnesses are the
/// first violations in arrow-id order.
pub fn check_category_laws(cat: &FinCat) -> LawReport {
    let mut report = LawReport::new("category", &[LawId::CatTyping, LawId::CatUnit, LawId::CatAssoc]);
    let name = |f: ArrowId| cat.arrow_label(&f);

    for a in cat.objects() {
        let id = cat.identity(&a);
        let d = &cat.arrows[id.index()];
        report.record(LawId::CatTyping, d.dom == a && d.cod == a, || {
            format!("identity {} of {} is typed {}→{}", d.name, cat.object_name(a), cat.object_name(d.dom), cat.object_name(d.cod))
        });
    }
    for (g, f, h) in cat.composition_triples() {
        let (fd, gd, hd) = (&cat.arrows[f.index()], &cat.arrows[g.index()], &cat.arrows[h.index()]);
        report.record(LawId::CatTyping, hd.dom == fd.dom && hd.cod == gd.cod, || {
            format!(
                "{}∘{} = {} is typed {}→{}, expected {}→{}",
                gd.name,
                fd.name,
                hd.name,
                cat.object_name(hd.dom),
                cat.object_name(hd.cod),
                cat.object_name(fd.dom),
                cat.object_name(gd.cod)
            )
        });
    }

    for f in cat.arrow_ids() {
        let d = &cat.arrows[f.index()];
        let right = cat.comp[&(f, cat.identity(&d.dom))];
        report.record(LawId::CatUnit, right == f, || {
            format!("{}∘1 = {} ≠ {}", d.name, name(right), d.name)
        });
        let left = cat.comp[&(cat.identity(&d.cod), f)];
        report.record(LawId::CatUnit, left == f, || {
            format!("1∘{} = {} ≠ {}", d.name, name(left), d.name)
        });
    }

    let mut out_of: Vec<Vec<ArrowId>> = vec![Vec::new(); cat.num_objects()];
    for f in cat.arrow_ids() {
        out_of[cat.arrows[f.index()].dom.index()].push(f);
    }
    for f in cat.arrow_ids() {
        for &g in &out_of[cat.arrows[f.index()].cod.index()] {
            let gf = cat.comp[&(g, f)];
            for &h in &out_of[cat.arrows[g.index()].cod.index()] {
                let hg = cat.comp[&(h, g)];
                // A mistyped entry makes one side undefined; that is a typing
                // failure already, so the triple counts as an assoc failure too.
                let lhs = cat.comp.get(&(h, gf)).copied();
                let rhs = cat.comp.get(&(hg, f)).copied();
                report.record(LawId::CatAssoc, lhs.is_some() && lhs == rhs, || {
                    let show = |x: Option<ArrowId>| x.map(name).unwrap_or_else(|| "undefined".into());
                    format!(
                        "({h}, {g}, {f}): h∘(g∘f) = {} but (h∘g)∘f = {}",
                        show(lhs),
                        show(rhs),
                        h = name(h),
                        g = name(g),
                        f = name(f)
                    )
                });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn terminal_category() -> FinCat {
        let mut b = FinCat::builder();
        let o = b.object("*");
        let id = b.arrow("1", o, o);
        b.identity(o, id).compose(id, id, id);
        b.build().unwrap()
    }

    #[test]
    fn one_object_one_arrow_passes() {
        let c = terminal_category();
        let r = check_category_laws(&c);
        assert!(r.passed(), "{r}");
        assert_eq!(c.hom(&ObjectId(0), &ObjectId(0)).unwrap(), vec![ArrowId(0)]);
    }

    #[test]
    fn compose_rejects_non_composable_and_stale() {
        let mut b = FinCat::builder();
        let x = b.object("x");
        let y = b.object("y");
        let ix = b.arrow("1x", x, x);
        let iy = b.arrow("1y", y, y);
        let f = b.arrow("f", x, y);
        b.identity(x, ix).identity(y, iy);
        b.compose(ix, ix, ix).compose(iy, iy, iy).compose(f, ix, f).compose(iy, f, f);
        let c = b.build().unwrap();
        assert!(matches!(c.compose(&f, &f), Err(Error::NotComposable { .. })));
        assert!(matches!(c.compose(&ArrowId(9), &f), Err(Error::UnknownArrow(_))));
        assert!(matches!(c.hom(&x, &ObjectId(7)), Err(Error::UnknownObject(_))));
        assert_eq!(c.compose(&iy, &f).unwrap(), f);
        assert!(check_category_laws(&c).passed());
        assert_eq!(c.opposite().opposite(), c);
    }

    #[test]
    fn missing_table_entry_is_an_integrity_error() {
        let mut b = FinCat::builder();
        let x = b.object("x");
        let ix = b.arrow("1x", x, x);
        b.identity(x, ix);
        assert!(matches!(b.build(), Err(Error::Integrity(_))));
    }

    #[test]
    fn mutated_entry_names_a_witness() {
        // Z/3 under addition, then 1+1 changed to 0.
        let mut b = FinCat::builder();
        let o = b.object("*");
        let els: Vec<ArrowId> = (0..3).map(|i| b.arrow(i.to_string(), o, o)).collect();
        b.identity(o, els[0]);
        for g in 0..3 {
            for f in 0..3 {
                b.compose(els[g], els[f], els[(g + f) % 3]);
            }
        }
        let c = b.build().unwrap();
        assert!(check_category_laws(&c).passed());
        let bad = c.with_comp_entry(els[1], els[1], els[0]).unwrap();
        let r = check_category_laws(&bad);
        let e = r.entry(LawId::CatAssoc).unwrap();
        assert_eq!(e.status, Status::Fail);
        assert_eq!(e.witness.as_deref().unwrap(), "(2, 1, 1): h∘(g∘f) = 2 but (h∘g)∘f = 1");
        assert_eq!(r.status(LawId::CatUnit), Some(Status::Pass));
    }
}
