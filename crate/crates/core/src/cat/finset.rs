//! The skeleton of finite sets, with arrows computed on demand.
//!
//! Object `n` is the set `{0, …, n-1}`. Any size is a valid object; the
//! enumeration window `0..=max_object` is what law checks quantify over.
//! Sums, products and fibre products land outside the window freely.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::Category;
use crate::error::{Error, Result};

/// Hom-sets larger than this are refused rather than enumerated.
const HOM_LIMIT: usize = 1 << 20;

/// A function `map.len() → cod`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FnArrow {
    pub cod: usize,
    pub map: Vec<usize>,
}

impl FnArrow {
    pub fn new(cod: usize, map: Vec<usize>) -> Self {
        FnArrow { cod, map }
    }

    pub fn dom(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }
}

impl fmt::Debug for FnArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FnArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, y) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{y}")?;
        }
        write!(f, "]:{}->{}", self.map.len(), self.cod)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinSetCat {
    pub max_object: usize,
}

impl FinSetCat {
    pub fn new(max_object: usize) -> Self {
        FinSetCat { max_object }
    }

    /// Enumerates `b^a` maps in lexicographic order (first point most significant).
    fn enumerate(a: usize, choices: &[Vec<usize>], cod: usize, limit: usize) -> Vec<FnArrow> {
        let mut out = Vec::new();
        if choices.iter().any(|c| c.is_empty()) || limit == 0 {
            return out;
        }
        let mut idx = vec![0usize; a];
        loop {
            out.push(FnArrow::new(cod, idx.iter().zip(choices).map(|(&i, c)| c[i]).collect()));
            if out.len() >= limit {
                return out;
            }
            let mut pos = a;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    fn count(choices: &[Vec<usize>]) -> Option<usize> {
        choices.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()))
    }
}

fn bijections(choices: &[Vec<usize>], map: &mut Vec<usize>, used: &mut [bool], limit: usize, out: &mut Vec<FnArrow>) {
    if out.len() >= limit {
        return;
    }
    let x = map.len();
    if x == choices.len() {
        out.push(FnArrow::new(used.len(), map.clone()));
        return;
    }
    for &y in &choices[x] {
        if !used[y] {
            used[y] = true;
            map.push(y);
            bijections(choices, map, used, limit, out);
            map.pop();
            used[y] = false;
        }
    }
}

impl Category for FinSetCat {
    type Obj = usize;
    type Arr = FnArrow;

    fn objects(&self) -> Vec<usize> {
        (0..=self.max_object).collect()
    }

    fn check_object(&self, _a: &usize) -> Result<()> {
        Ok(())
    }

    fn check_arrow(&self, f: &FnArrow) -> Result<()> {
        if f.map.iter().all(|&y| y < f.cod) {
            Ok(())
        } else {
            Err(Error::UnknownArrow(format!("{f} is not a function into {}", f.cod)))
        }
    }

    fn dom(&self, f: &FnArrow) -> usize {
        f.map.len()
    }

    fn cod(&self, f: &FnArrow) -> usize {
        f.cod
    }

    fn identity(&self, a: &usize) -> FnArrow {
        FnArrow::new(*a, (0..*a).collect())
    }

    fn compose(&self, g: &FnArrow, f: &FnArrow) -> Result<FnArrow> {
        if f.cod != g.map.len() {
            return Err(Error::NotComposable {
                g: g.to_string(),
                f: f.to_string(),
            });
        }
        if let Some(bad) = f.map.iter().find(|&&x| x >= g.map.len()) {
            return Err(Error::UnknownArrow(format!("{f} maps to {bad}, outside its codomain")));
        }
        Ok(FnArrow::new(g.cod, f.map.iter().map(|&x| g.map[x]).collect()))
    }

    fn hom(&self, a: &usize, b: &usize) -> Result<Vec<FnArrow>> {
        let choices = vec![(0..*b).collect::<Vec<_>>(); *a];
        match Self::count(&choices) {
            Some(n) if n <= HOM_LIMIT => Ok(Self::enumerate(*a, &choices, *b, usize::MAX)),
            _ => Err(Error::BudgetExceeded(format!("hom({a}, {b}) has more than {HOM_LIMIT} arrows"))),
        }
    }

    /// Solves the constraints pointwise: `m(x)` ranges over the points `y`
    /// with `leg(y) = value(x)` for every constraint.
    fn factor(
        &self,
        source: &usize,
        target: &usize,
        constraints: &[(&FnArrow, &FnArrow)],
        limit: usize,
    ) -> Result<Vec<FnArrow>> {
        for (leg, value) in constraints {
            if leg.dom() != *target || value.dom() != *source || leg.cod != value.cod {
                return Err(Error::TypeMismatch(format!(
                    "constraint {leg} ∘ m = {value} for m: {source}→{target}"
                )));
            }
        }
        let choices: Vec<Vec<usize>> = (0..*source)
            .map(|x| {
                (0..*target)
                    .filter(|&y| constraints.iter().all(|(leg, value)| leg.map[y] == value.map[x]))
                    .collect()
            })
            .collect();
        if limit == usize::MAX && Self::count(&choices).is_none_or(|n| n > HOM_LIMIT) {
            return Err(Error::BudgetExceeded(format!(
                "more than {HOM_LIMIT} factorizations {source}→{target}"
            )));
        }
        Ok(Self::enumerate(*source, &choices, *target, limit))
    }

    /// Bijections only, by backtracking over unused points.
    fn factor_isos(
        &self,
        source: &usize,
        target: &usize,
        constraints: &[(&FnArrow, &FnArrow)],
        limit: usize,
    ) -> Result<Vec<FnArrow>> {
        // Validates the constraints.
        self.factor(source, target, constraints, 0)?;
        let mut out = Vec::new();
        if source != target {
            return Ok(out);
        }
        let n = *source;
        let choices: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                (0..n)
                    .filter(|&y| constraints.iter().all(|(leg, value)| leg.map[y] == value.map[x]))
                    .collect()
            })
            .collect();
        let mut map = Vec::with_capacity(n);
        let mut used = vec![false; n];
        bijections(&choices, &mut map, &mut used, limit, &mut out);
        Ok(out)
    }

    /// Lexicographic pairs: `(x, y) ↦ x·b + y`.
    fn propose_product(&self, a: &usize, b: &usize) -> Option<(usize, FnArrow, FnArrow)> {
        let n = a * b;
        let pa = FnArrow::new(*a, (0..n).map(|p| p / b).collect());
        let pb = FnArrow::new(*b, (0..n).map(|p| p % b).collect());
        Some((n, pa, pb))
    }

    /// The fibre product `{(x, y) | f(x) = g(y)}`, ordered by `(y, x)`.
    fn propose_pullback(&self, f: &FnArrow, g: &FnArrow) -> Option<(usize, FnArrow, FnArrow)> {
        let mut lf = Vec::new();
        let mut lg = Vec::new();
        // Points of `g`'s domain vary slowest, so pulling back along an
        // identity returns the arrow unchanged.
        for y in 0..g.dom() {
            for x in 0..f.dom() {
                if f.map[x] == g.map[y] {
                    lf.push(x);
                    lg.push(y);
                }
            }
        }
        Some((lf.len(), FnArrow::new(f.dom(), lf), FnArrow::new(g.dom(), lg)))
    }

    fn object_label(&self, a: &usize) -> String {
        a.to_string()
    }

    fn arrow_label(&self, f: &FnArrow) -> String {
        f.to_string()
    }
}
