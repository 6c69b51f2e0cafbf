//! Terminal objects, products, pullbacks and monomorphisms, all decided by
//! exhaustive enumeration of cones over the enumeration window.

use super::Category;
use crate::error::{Error, Result};

/// A square
///
/// ```text
/// P --top--> X
/// |          |
/// left     right
/// v          v
/// B -bottom-> A
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Square<A> {
    pub top: A,
    pub left: A,
    pub right: A,
    pub bottom: A,
}

/// A cone over the cospan `(bottom, right)` of a square: `top: apex → X`,
/// `left: apex → B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cone<O, A> {
    pub apex: O,
    pub top: A,
    pub left: A,
}

impl<A> Square<A> {
    pub fn cospan(&self) -> (&A, &A) {
        (&self.bottom, &self.right)
    }
}

pub fn describe_square<C: Category>(cat: &C, sq: &Square<C::Arr>) -> String {
    format!(
        "top {} left {} right {} bottom {}",
        cat.arrow_label(&sq.top),
        cat.arrow_label(&sq.left),
        cat.arrow_label(&sq.right),
        cat.arrow_label(&sq.bottom)
    )
}

pub fn describe_cone<C: Category>(cat: &C, cone: &Cone<C::Obj, C::Arr>) -> String {
    format!(
        "cone at {}: top {} left {}",
        cat.object_label(&cone.apex),
        cat.arrow_label(&cone.top),
        cat.arrow_label(&cone.left)
    )
}

fn check_square_typing<C: Category>(cat: &C, sq: &Square<C::Arr>) -> Result<()> {
    for f in [&sq.top, &sq.left, &sq.right, &sq.bottom] {
        cat.check_arrow(f)
            .map_err(|e| Error::IllTypedSquare(format!("{}: {e}", describe_square(cat, sq))))?;
    }
    let ok = cat.dom(&sq.top) == cat.dom(&sq.left)
        && cat.cod(&sq.top) == cat.dom(&sq.right)
        && cat.cod(&sq.left) == cat.dom(&sq.bottom)
        && cat.cod(&sq.right) == cat.cod(&sq.bottom);
    if ok {
        Ok(())
    } else {
        Err(Error::IllTypedSquare(describe_square(cat, sq)))
    }
}

pub fn commutes<C: Category>(cat: &C, sq: &Square<C::Arr>) -> Result<bool> {
    check_square_typing(cat, sq)?;
    Ok(cat.compose(&sq.right, &sq.top)? == cat.compose(&sq.bottom, &sq.left)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PullbackVerdict<O, A> {
    Pullback,
    NotCommuting,
    NoMediator(Cone<O, A>),
    NotUnique { cone: Cone<O, A>, first: A, second: A },
}

impl<O, A> PullbackVerdict<O, A> {
    pub fn holds(&self) -> bool {
        matches!(self, PullbackVerdict::Pullback)
    }
}

pub fn describe_verdict<C: Category>(cat: &C, v: &PullbackVerdict<C::Obj, C::Arr>) -> String {
    match v {
        PullbackVerdict::Pullback => "pullback".into(),
        PullbackVerdict::NotCommuting => "square does not commute".into(),
        PullbackVerdict::NoMediator(cone) => format!("no mediator for {}", describe_cone(cat, cone)),
        PullbackVerdict::NotUnique { cone, first, second } => format!(
            "mediators {} and {} for {}",
            cat.arrow_label(first),
            cat.arrow_label(second),
            describe_cone(cat, cone)
        ),
    }
}

/// Decides whether `sq` is a pullback by checking every cone whose apex lies
/// in the enumeration window; the first failing cone is returned.
pub fn is_pullback<C: Category>(cat: &C, sq: &Square<C::Arr>) -> Result<PullbackVerdict<C::Obj, C::Arr>> {
    if !commutes(cat, sq)? {
        return Ok(PullbackVerdict::NotCommuting);
    }
    let apex = cat.dom(&sq.top);
    let x = cat.dom(&sq.right);
    let b = cat.dom(&sq.bottom);
    for d in cat.objects() {
        for t in cat.hom(&d, &x)? {
            let rt = cat.compose(&sq.right, &t)?;
            for l in cat.factor(&d, &b, &[(&sq.bottom, &rt)], usize::MAX)? {
                let mut ms = cat.factor(&d, &apex, &[(&sq.top, &t), (&sq.left, &l)], 2)?;
                let cone = Cone {
                    apex: d.clone(),
                    top: t.clone(),
                    left: l,
                };
                match ms.len() {
                    0 => return Ok(PullbackVerdict::NoMediator(cone)),
                    1 => {}
                    _ => {
                        let second = ms.pop().unwrap();
                        let first = ms.pop().unwrap();
                        return Ok(PullbackVerdict::NotUnique { cone, first, second });
                    }
                }
            }
        }
    }
    Ok(PullbackVerdict::Pullback)
}

/// A square known to be a pullback, with its mediating-arrow operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PullbackWitness<A> {
    pub square: Square<A>,
}

impl<A: Clone + PartialEq> PullbackWitness<A> {
    /// Checks the universal property exhaustively.
    pub fn verify<C: Category<Arr = A>>(cat: &C, square: Square<A>) -> Result<Option<Self>> {
        Ok(is_pullback(cat, &square)?.holds().then_some(PullbackWitness { square }))
    }

    /// Wraps a square whose pullback property was established elsewhere;
    /// [`mediator`](Self::mediator) still reports a missing or non-unique mediator.
    pub fn trusted(square: Square<A>) -> Self {
        PullbackWitness { square }
    }

    pub fn apex<C: Category<Arr = A>>(&self, cat: &C) -> C::Obj {
        cat.dom(&self.square.top)
    }

    pub fn mediator<C: Category<Arr = A>>(&self, cat: &C, cone: &Cone<C::Obj, A>) -> Result<A> {
        let sq = &self.square;
        let typed = cat.dom(&cone.top) == cone.apex
            && cat.dom(&cone.left) == cone.apex
            && cat.cod(&cone.top) == cat.dom(&sq.right)
            && cat.cod(&cone.left) == cat.dom(&sq.bottom);
        if !typed || cat.compose(&sq.right, &cone.top)? != cat.compose(&sq.bottom, &cone.left)? {
            return Err(Error::NonCommutingCone(describe_cone(cat, cone)));
        }
        let apex = self.apex(cat);
        let mut ms = cat.factor(&cone.apex, &apex, &[(&sq.top, &cone.top), (&sq.left, &cone.left)], 2)?;
        if ms.len() == 1 {
            Ok(ms.pop().unwrap())
        } else {
            Err(Error::PullbackMediatorMissing(format!(
                "{} mediators for {} over {}",
                ms.len(),
                describe_cone(cat, cone),
                describe_square(cat, sq)
            )))
        }
    }
}

/// A verified pullback of the cospan `(f, g)`: the returned square has
/// `bottom = f`, `right = g`, `left` into `dom f` and `top` into `dom g`.
///
/// The instance's own proposal is tried first; otherwise apexes are searched
/// in canonical order and the first verified square wins.
pub fn pullback_of<C: Category>(cat: &C, f: &C::Arr, g: &C::Arr) -> Result<Option<PullbackWitness<C::Arr>>> {
    cat.check_arrow(f)?;
    cat.check_arrow(g)?;
    if cat.cod(f) != cat.cod(g) {
        return Err(Error::NotACospan {
            f: cat.arrow_label(f),
            g: cat.arrow_label(g),
        });
    }
    let square = |left: C::Arr, top: C::Arr| Square {
        top,
        left,
        right: g.clone(),
        bottom: f.clone(),
    };
    if let Some((_, lf, lg)) = cat.propose_pullback(f, g) {
        if let Some(w) = PullbackWitness::verify(cat, square(lf, lg))? {
            return Ok(Some(w));
        }
    }
    let (b, c) = (cat.dom(f), cat.dom(g));
    for d in cat.objects() {
        for l in cat.hom(&d, &b)? {
            let fl = cat.compose(f, &l)?;
            for t in cat.factor(&d, &c, &[(g, &fl)], usize::MAX)? {
                if let Some(w) = PullbackWitness::verify(cat, square(l.clone(), t))? {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductWitness<O, A> {
    pub apex: O,
    pub pr_a: A,
    pub pr_b: A,
}

impl<O: Clone + PartialEq, A: Clone> ProductWitness<O, A> {
    /// The pairing `⟨f, g⟩`.
    pub fn pair<C: Category<Obj = O, Arr = A>>(&self, cat: &C, f: &A, g: &A) -> Result<A> {
        let d = cat.dom(f);
        if d != cat.dom(g) || cat.cod(f) != cat.cod(&self.pr_a) || cat.cod(g) != cat.cod(&self.pr_b) {
            return Err(Error::TypeMismatch(format!(
                "cannot pair {} with {}",
                cat.arrow_label(f),
                cat.arrow_label(g)
            )));
        }
        let mut ms = cat.factor(&d, &self.apex, &[(&self.pr_a, f), (&self.pr_b, g)], 2)?;
        if ms.len() == 1 {
            Ok(ms.pop().unwrap())
        } else {
            Err(Error::MissingProduct(format!(
                "{} pairings of {} and {}",
                ms.len(),
                cat.arrow_label(f),
                cat.arrow_label(g)
            )))
        }
    }

    /// Exhaustive check of the universal property over the window.
    pub fn verify<C: Category<Obj = O, Arr = A>>(&self, cat: &C) -> Result<bool> {
        let a = cat.cod(&self.pr_a);
        let b = cat.cod(&self.pr_b);
        if cat.dom(&self.pr_a) != self.apex || cat.dom(&self.pr_b) != self.apex {
            return Ok(false);
        }
        for d in cat.objects() {
            let into_b = cat.hom(&d, &b)?;
            for f in cat.hom(&d, &a)? {
                for g in &into_b {
                    if cat.factor(&d, &self.apex, &[(&self.pr_a, &f), (&self.pr_b, g)], 2)?.len() != 1 {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// A verified binary product of `a` and `b`, or `None` if the window holds none.
pub fn binary_product<C: Category>(
    cat: &C,
    a: &C::Obj,
    b: &C::Obj,
) -> Result<Option<ProductWitness<C::Obj, C::Arr>>> {
    cat.check_object(a)?;
    cat.check_object(b)?;
    if let Some((apex, pr_a, pr_b)) = cat.propose_product(a, b) {
        let w = ProductWitness { apex, pr_a, pr_b };
        if w.verify(cat)? {
            return Ok(Some(w));
        }
    }
    for p in cat.objects() {
        let to_b = cat.hom(&p, b)?;
        for pr_a in cat.hom(&p, a)? {
            for pr_b in &to_b {
                let w = ProductWitness {
                    apex: p.clone(),
                    pr_a: pr_a.clone(),
                    pr_b: pr_b.clone(),
                };
                if w.verify(cat)? {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Terminal<O> {
    pub object: O,
}

impl<O: Clone> Terminal<O> {
    /// The unique arrow `a → 1`.
    pub fn bang<C: Category<Obj = O>>(&self, cat: &C, a: &O) -> Result<C::Arr> {
        let mut h = cat.hom(a, &self.object)?;
        if h.len() == 1 {
            Ok(h.pop().unwrap())
        } else {
            Err(Error::NoTerminalObject)
        }
    }

    /// All arrows `1 → a`.
    pub fn global_elements<C: Category<Obj = O>>(&self, cat: &C, a: &O) -> Result<Vec<C::Arr>> {
        cat.hom(&self.object, a)
    }
}

/// The least object of the window receiving exactly one arrow from every object.
pub fn terminal<C: Category>(cat: &C) -> Option<Terminal<C::Obj>> {
    let objects = cat.objects();
    objects
        .iter()
        .find(|t| {
            objects
                .iter()
                .all(|a| cat.hom(a, t).map(|h| h.len() == 1).unwrap_or(false))
        })
        .map(|t| Terminal { object: t.clone() })
}

pub fn global_elements<C: Category>(cat: &C, a: &C::Obj) -> Result<Vec<C::Arr>> {
    let t = terminal(cat).ok_or(Error::NoTerminalObject)?;
    cat.check_object(a)?;
    t.global_elements(cat, a)
}

/// `f` is mono iff `f ∘ g = f ∘ h` forces `g = h` for parallel `g, h` out of
/// window objects.
pub fn is_mono<C: Category>(cat: &C, f: &C::Arr) -> Result<bool> {
    cat.check_arrow(f)?;
    let a = cat.dom(f);
    for d in cat.objects() {
        for g in cat.hom(&d, &a)? {
            let fg = cat.compose(f, &g)?;
            if cat.factor(&d, &a, &[(f, &fg)], 2)?.len() != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The two-sided inverse of `f`, if any.
pub fn is_iso<C: Category>(cat: &C, f: &C::Arr) -> Result<Option<C::Arr>> {
    cat.check_arrow(f)?;
    let (a, b) = (cat.dom(f), cat.cod(f));
    let id_a = cat.identity(&a);
    let id_b = cat.identity(&b);
    for g in cat.factor(&b, &a, &[(f, &id_b)], usize::MAX)? {
        if cat.compose(&g, f)? == id_a {
            return Ok(Some(g));
        }
    }
    Ok(None)
}
