//! Small explicit categories: discrete, posets and monoids.

use crate::cat::{ArrowId, FinCat, ObjectId};
use crate::error::{Error, Result};

/// `n` objects and only identities.
pub fn discrete(n: usize) -> Result<FinCat> {
    poset(n, &[])
}

/// The poset generated by `relation` (pairs `x ≤ y`), reflexively and
/// transitively closed. One arrow `x≤y` per related pair.
pub fn poset(n: usize, relation: &[(usize, usize)]) -> Result<FinCat> {
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(x, y) in relation {
        if x >= n || y >= n {
            return Err(Error::InvalidSpec(format!("relation pair ({x}, {y}) outside 0..{n}")));
        }
        leq[x][y] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && leq[i][j] && leq[j][i] {
                return Err(Error::InvalidSpec(format!("relation is not antisymmetric: {i} and {j}")));
            }
        }
    }
    let mut b = FinCat::builder();
    let objects: Vec<ObjectId> = (0..n).map(|i| b.object(i.to_string())).collect();
    let mut arrow = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            if leq[i][j] {
                arrow[i][j] = Some(b.arrow(format!("{i}≤{j}"), objects[i], objects[j]));
            }
        }
    }
    for i in 0..n {
        b.identity(objects[i], arrow[i][i].unwrap());
        for j in 0..n {
            for k in 0..n {
                if let (Some(f), Some(g)) = (arrow[i][j], arrow[j][k]) {
                    b.compose(g, f, arrow[i][k].unwrap());
                }
            }
        }
    }
    b.build()
}

/// The chain `0 ≤ 1 ≤ … ≤ n-1`.
pub fn chain(n: usize) -> Result<FinCat> {
    let rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    poset(n, &rel)
}

/// A one-object category from a multiplication table, `table[g][f] = g∘f`.
/// The table must be associative and have a unit.
pub fn monoid(table: &[Vec<usize>]) -> Result<FinCat> {
    let n = table.len();
    if n == 0 || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return Err(Error::InvalidSpec("monoid table must be a non-empty square table over its indices".into()));
    }
    let unit = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::InvalidSpec("monoid table has no unit".into()))?;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if table[x][table[y][z]] != table[table[x][y]][z] {
                    return Err(Error::InvalidSpec(format!("monoid table is not associative at ({x}, {y}, {z})")));
                }
            }
        }
    }
    Ok(one_object(n, unit, |g, f| table[g][f], |i| i.to_string()))
}

/// One object `*` with arrows `0..n`, identity `unit` and composition `op`.
pub(crate) fn one_object(
    n: usize,
    unit: usize,
    op: impl Fn(usize, usize) -> usize,
    name: impl Fn(usize) -> String,
) -> FinCat {
    let mut b = FinCat::builder();
    let o = b.object("*");
    let arrows: Vec<ArrowId> = (0..n).map(|i| b.arrow(name(i), o, o)).collect();
    b.identity(o, arrows[unit]);
    for g in 0..n {
        for f in 0..n {
            b.compose(arrows[g], arrows[f], arrows[op(g, f)]);
        }
    }
    b.build().expect("one-object tables are total")
}
