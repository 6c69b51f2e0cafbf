//! Finite commutative rings as one-object categories.
//!
//! Arrows are ring elements composed by addition. A family is a pair
//! `(a, b)` restricted by `(a, b) ∘ c = (c + a, c + b)`; the Sigma
//! structure has `pr1 = a·b` and `Σ_(a,b) c = c(1 + c + b + a)`.

use serde::{Deserialize, Serialize};

use crate::cat::{ArrowId, FinCat, ObjectId};
use crate::error::{Error, Result};
use crate::fam::{FamArrowId, TableFam, TableFamFunctor};
use crate::instances::one_object;
use crate::sigma::TableSigma;

/// Addition and multiplication tables over `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingTables {
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

impl RingTables {
    /// `ℤ/n`.
    pub fn modulo(n: usize) -> Result<RingTables> {
        if n == 0 {
            return Err(Error::InvalidSpec("modulus must be positive".into()));
        }
        let table = |op: fn(usize, usize) -> usize| (0..n).map(|x| (0..n).map(|y| op(x, y) % n).collect()).collect();
        RingTables {
            add: table(|x, y| x + y),
            mul: table(|x, y| x * y),
        }
        .validated()
    }

    pub fn size(&self) -> usize {
        self.add.len()
    }

    pub fn zero(&self) -> usize {
        unit_of(&self.add).expect("validated ring has an additive unit")
    }

    pub fn one(&self) -> usize {
        unit_of(&self.mul).expect("validated ring has a multiplicative unit")
    }

    pub fn plus(&self, x: usize, y: usize) -> usize {
        self.add[x][y]
    }

    pub fn times(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }

    /// Checks every commutative ring axiom exhaustively, naming the first
    /// violated one.
    pub fn validated(self) -> Result<RingTables> {
        let n = self.add.len();
        let square = |t: &Vec<Vec<usize>>| t.len() == n && t.iter().all(|r| r.len() == n && r.iter().all(|&x| x < n));
        if n == 0 || !square(&self.add) || !square(&self.mul) {
            return Err(Error::NotARing("tables must be square over 0..n with n > 0".into()));
        }
        let fail = |what: &str, args: &[usize]| Err(Error::NotARing(format!("{what} fails at {args:?}")));
        let zero = unit_of(&self.add).ok_or_else(|| Error::NotARing("addition has no unit".into()))?;
        unit_of(&self.mul).ok_or_else(|| Error::NotARing("multiplication has no unit".into()))?;
        let (a, m) = (&self.add, &self.mul);
        for x in 0..n {
            if !(0..n).any(|y| a[x][y] == zero) {
                return fail("additive inverse", &[x]);
            }
            for y in 0..n {
                if a[x][y] != a[y][x] {
                    return fail("commutativity of addition", &[x, y]);
                }
                if m[x][y] != m[y][x] {
                    return fail("commutativity of multiplication", &[x, y]);
                }
                for z in 0..n {
                    if a[x][a[y][z]] != a[a[x][y]][z] {
                        return fail("associativity of addition", &[x, y, z]);
                    }
                    if m[x][m[y][z]] != m[m[x][y]][z] {
                        return fail("associativity of multiplication", &[x, y, z]);
                    }
                    if m[x][a[y][z]] != a[m[x][y]][m[x][z]] {
                        return fail("distributivity", &[x, y, z]);
                    }
                }
            }
        }
        Ok(self)
    }
}

fn unit_of(t: &[Vec<usize>]) -> Option<usize> {
    let n = t.len();
    (0..n).find(|&e| (0..n).all(|x| t[e][x] == x && t[x][e] == x))
}

/// One object, the ring elements as arrows, addition as composition and
/// zero as the identity.
pub fn ring_category(r: &RingTables) -> FinCat {
    one_object(r.size(), r.zero(), |g, f| r.plus(g, f), |i| i.to_string())
}

/// The family id of `(a, b)`.
pub fn ring_family(r: &RingTables, a: usize, b: usize) -> FamArrowId {
    FamArrowId((a * r.size() + b) as u32)
}

/// `fHom(*) = R × R` with `(a, b) ∘ c = (c + a, c + b)`.
pub fn ring_fam(r: &RingTables) -> Result<TableFam> {
    let n = r.size();
    let cat = ring_category(r);
    let star = ObjectId(0);
    let mut families = Vec::with_capacity(n * n);
    let mut restrict = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            families.push((format!("({a},{b})"), star));
            for c in 0..n {
                restrict.push((ring_family(r, a, b), ArrowId(c as u32), ring_family(r, r.plus(c, a), r.plus(c, b))));
            }
        }
    }
    TableFam::new(cat, families, restrict)
}

/// `Σ(a,b) = *`, `pr1 = a·b`, `Σ_(a,b) c = c(1 + c + b + a)`.
pub fn ring_sigma(r: &RingTables) -> Result<TableSigma> {
    let n = r.size();
    let fam = ring_fam(r)?;
    let one = r.one();
    let mut objs = Vec::with_capacity(n * n);
    let mut prs = Vec::with_capacity(n * n);
    let mut arrs = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            objs.push(ObjectId(0));
            prs.push(ArrowId(r.times(a, b) as u32));
            for c in 0..n {
                let s = r.plus(r.plus(r.plus(one, c), b), a);
                arrs.push((ring_family(r, a, b), ArrowId(c as u32), ArrowId(r.times(c, s) as u32)));
            }
        }
    }
    TableSigma::new(fam, objs, prs, arrs)
}

/// The fam-functor induced by a ring homomorphism `map: R → S`.
pub fn ring_hom_functor(src: &RingTables, tgt: &RingTables, map: &[usize]) -> Result<TableFamFunctor> {
    let n = src.size();
    if map.len() != n || map.iter().any(|&y| y >= tgt.size()) {
        return Err(Error::InvalidSpec("ring homomorphism must map every element into the target".into()));
    }
    for x in 0..n {
        for y in 0..n {
            if map[src.plus(x, y)] != tgt.plus(map[x], map[y]) || map[src.times(x, y)] != tgt.times(map[x], map[y]) {
                return Err(Error::InvalidSpec(format!("map is not a ring homomorphism at ({x}, {y})")));
            }
        }
    }
    if map[src.one()] != tgt.one() {
        return Err(Error::InvalidSpec("map does not preserve one".into()));
    }
    let mut families = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            families.push(ring_family(tgt, map[a], map[b]));
        }
    }
    Ok(TableFamFunctor {
        source: ring_fam(src)?,
        target: ring_fam(tgt)?,
        objects: vec![ObjectId(0)],
        arrows: map.iter().map(|&y| ArrowId(y as u32)).collect(),
        families,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{check_category_laws, is_pullback, terminal, Category, Cone};
    use crate::fam::{check_fam_functor, check_fam_laws, FamStructure};
    use crate::sigma::{check_sigma_laws, SigmaStructure};

    #[test]
    fn z4_category_and_family() {
        let r = RingTables::modulo(4).unwrap();
        let c = ring_category(&r);
        assert!(check_category_laws(&c).passed());
        assert_eq!(c.compose(&ArrowId(3), &ArrowId(2)).unwrap(), ArrowId(1));
        assert_eq!(c.hom(&ObjectId(0), &ObjectId(0)).unwrap().len(), 4);
        assert!(terminal(&c).is_none());
        assert_eq!(c.opposite(), c);
        let fam = ring_fam(&r).unwrap();
        assert_eq!(fam.num_families(), 16);
        assert_eq!(fam.restrict(&ring_family(&r, 1, 2), &ArrowId(3)).unwrap(), ring_family(&r, 0, 1));
        assert!(check_fam_laws(&fam).passed());
    }

    #[test]
    fn z4_sigma_values() {
        let r = RingTables::modulo(4).unwrap();
        let s = ring_sigma(&r).unwrap();
        let lam = ring_family(&r, 1, 2);
        assert_eq!(s.pr1(&lam).unwrap(), ArrowId(2));
        assert_eq!(s.sigma_arr(&lam, &ArrowId(3)).unwrap(), ArrowId(1));
        assert_eq!(s.sigma_arr(&lam, &ArrowId(0)).unwrap(), ArrowId(0));
        let rep = check_sigma_laws(&s);
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn square_identity_over_z4_and_z5() {
        for n in [4, 5] {
            let r = RingTables::modulo(n).unwrap();
            let s = ring_sigma(&r).unwrap();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let lhs = (a * b + c * (1 + c + b + a)) % n;
                        let rhs = (c + (c + a) * (c + b)) % n;
                        assert_eq!(lhs, rhs);
                        let sq = s.square(&ring_family(&r, a, b), &ArrowId(c as u32)).unwrap();
                        assert!(is_pullback(s.base(), &sq).unwrap().holds());
                    }
                }
            }
        }
    }

    #[test]
    fn z4_mediator_solves_the_cone() {
        let r = RingTables::modulo(4).unwrap();
        let s = ring_sigma(&r).unwrap();
        let lam = ring_family(&r, 1, 2);
        // Over (c = 1, pr1 = 2) the cone (top 3, left 0) commutes: 2 + 3 = 1 + 0.
        let cone = Cone {
            apex: ObjectId(0),
            top: ArrowId(3),
            left: ArrowId(0),
        };
        // Σ_λ1 = 1 and pr1(λ∘1) = 2·3 = 2, so x solves 1 + x = 3 and 2 + x = 0.
        assert_eq!(s.mediate(&lam, &ArrowId(1), &cone).unwrap(), ArrowId(2));
    }

    #[test]
    fn bad_tables_and_homomorphisms() {
        let mut t = RingTables::modulo(3).unwrap();
        t.mul[1][2] = 0;
        assert!(matches!(t.validated(), Err(Error::NotARing(_))));
        let z4 = RingTables::modulo(4).unwrap();
        let z2 = RingTables::modulo(2).unwrap();
        let hom = ring_hom_functor(&z4, &z2, &[0, 1, 0, 1]).unwrap();
        assert!(check_fam_functor(&hom).passed());
        let broken = hom.with_family(ring_family(&z4, 1, 2), ring_family(&z2, 0, 0));
        assert!(!check_fam_functor(&broken).passed());
        assert!(ring_hom_functor(&z4, &z2, &[0, 1, 1, 1]).is_err());
        let trivial = ring_category(&RingTables::modulo(1).unwrap());
        assert!(terminal(&trivial).is_some());
    }
}
