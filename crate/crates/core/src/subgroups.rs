//! Exhaustive search for abelian subgroups of minimal index.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinIndexAbelian {
    pub index: usize,
    pub witness: Subgroup,
}

struct Search<'a> {
    g: &'a FiniteGroup,
    require_normal: bool,
    visited: HashSet<Vec<usize>>,
    best: Subgroup,
}

impl Search<'_> {
    fn offer(&mut self, a: &Subgroup) {
        let better = a.order() > self.best.order()
            || (a.order() == self.best.order() && a.members() < self.best.members());
        if better {
            self.best = a.clone();
        }
    }

    fn explore(&mut self, a: Subgroup) {
        if !self.visited.insert(a.members().to_vec()) {
            return;
        }
        self.offer(&a);
        // every abelian subgroup containing `a` lies in its centraliser
        let c = self.g.centralizer(a.members());
        if c.order() < self.best.order() || c.order() == a.order() {
            return;
        }
        if c.is_abelian(self.g) {
            // the centraliser is the unique maximal abelian extension, and is
            // normal whenever `a` is
            self.explore(c);
            return;
        }
        let mut done = vec![false; self.g.order()];
        for &x in a.members() {
            done[x] = true;
        }
        for &x in c.members() {
            if done[x] {
                continue;
            }
            let next = if self.require_normal {
                self.extend_normal(&a, &c, x)
            } else {
                Some(self.extend(&a, x))
            };
            match next {
                Some(next) => {
                    // the coset xA yields the same extension
                    for &y in a.members() {
                        done[self.g.mult(x, y)] = true;
                    }
                    self.explore(next);
                }
                None => done[x] = true,
            }
        }
    }

    /// `⟨A, x⟩` for `x` centralising `A`: the products `a·x^i`.
    fn extend(&self, a: &Subgroup, x: usize) -> Subgroup {
        let mut members = a.members().to_vec();
        let mut power = x;
        while !a.contains(power) {
            members.extend(a.members().iter().map(|&y| self.g.mult(y, power)));
            power = self.g.mult(power, x);
        }
        Subgroup::from_members(members)
    }

    /// `⟨A, x^G⟩` when the conjugacy class of `x` lies in `C` and commutes
    /// elementwise; `None` otherwise.
    fn extend_normal(&self, a: &Subgroup, c: &Subgroup, x: usize) -> Option<Subgroup> {
        let classes = self.g.classes();
        let class = &classes.classes[classes.class_of[x]];
        if !class.iter().all(|&y| c.contains(y)) {
            return None;
        }
        for (i, &y) in class.iter().enumerate() {
            if !class[i + 1..].iter().all(|&z| self.g.commute(y, z)) {
                return None;
            }
        }
        let mut gens = self.g.generating_set(a.members());
        gens.extend(class.iter().copied());
        Some(self.g.subgroup_generated(&gens))
    }
}

/// An abelian subgroup (normal when `require_normal`) of minimal index in
/// `g`, ties broken by the lexicographically smallest element-index set.
pub fn abelian_subgroups_min_index(
    g: &FiniteGroup,
    require_normal: bool,
    limit: usize,
) -> Result<MinIndexAbelian> {
    if g.order() > limit {
        return Err(Error::OrderLimitExceeded {
            what: "abelian subgroup search".into(),
            limit,
        });
    }
    if g.is_abelian() {
        return Ok(MinIndexAbelian {
            index: 1,
            witness: g.whole(),
        });
    }
    // A·Z(G) is abelian (and normal when A is), so optimal subgroups contain
    // the center
    let center = g.center();
    let mut search = Search {
        g,
        require_normal,
        visited: HashSet::new(),
        best: center.clone(),
    };
    search.explore(center);
    Ok(MinIndexAbelian {
        index: g.order() / search.best.order(),
        witness: search.best,
    })
}
