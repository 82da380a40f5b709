use std::collections::HashSet;

use super::GroupTable;
use crate::elements::{ElementSet, MAX_ORDER};
use crate::error::{Error, Result};

/// A subgroup of a [`GroupTable`], with its normality decided up front.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    pub members: ElementSet,
    pub normal: bool,
    group_order: usize,
}

impl Subgroup {
    /// Validate `members` as a subgroup of `g`.
    pub fn new(g: &GroupTable, members: ElementSet) -> Result<Self> {
        if !g.is_subgroup(members) {
            return Err(Error::NotSubgroup(format!("{members:?}")));
        }
        assert_eq!(g.order() % members.len(), 0, "Lagrange");
        Ok(Self::trusted(g, members))
    }

    fn trusted(g: &GroupTable, members: ElementSet) -> Self {
        Subgroup { members, normal: g.is_normal(members), group_order: g.order() }
    }

    /// Subgroup generated by `gens`.
    pub fn generated(g: &GroupTable, gens: &[usize]) -> Self {
        Self::trusted(g, g.closure_of(gens))
    }

    pub fn trivial(g: &GroupTable) -> Self {
        Self::trusted(g, ElementSet::singleton(0))
    }

    pub fn whole(g: &GroupTable) -> Self {
        Self::trusted(g, g.all())
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// `|R:Q|`.
    pub fn index(&self) -> usize {
        self.group_order / self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.group_order
    }
}

/// Every subgroup of `g` (optionally only those of index at most
/// `max_index`), sorted by order and then by member mask.
///
/// Subgroups are found by closing joins of known subgroups with cyclic
/// subgroups, starting from the cyclic ones.
pub fn subgroups(g: &GroupTable, max_index: Option<usize>) -> Result<Vec<Subgroup>> {
    let r = g.order();
    if r > MAX_ORDER {
        return Err(Error::TooLarge { order: r, limit: MAX_ORDER });
    }
    // cyclic subgroups with one generator each
    let mut cyclic: Vec<(ElementSet, usize)> = Vec::new();
    for x in 0..r {
        let c = g.closure_of(&[x]);
        if !cyclic.iter().any(|&(d, _)| d == c) {
            cyclic.push((c, x));
        }
    }
    let mut seen: HashSet<u64> = HashSet::new();
    let mut found: Vec<(ElementSet, Vec<usize>)> = Vec::new();
    for &(c, x) in &cyclic {
        if seen.insert(c.bits()) {
            found.push((c, vec![x]));
        }
    }
    let mut next = 0;
    while next < found.len() {
        let (h, gens) = found[next].clone();
        next += 1;
        for &(c, x) in &cyclic {
            if c.is_subset(h) {
                continue;
            }
            let mut joined = gens.clone();
            joined.push(x);
            let k = g.closure_of(&joined);
            if seen.insert(k.bits()) {
                found.push((k, joined));
            }
        }
    }
    let mut out: Vec<Subgroup> = found
        .into_iter()
        .map(|(h, _)| h)
        .filter(|h| max_index.is_none_or(|m| r / h.len() <= m))
        .map(|h| Subgroup::trusted(g, h))
        .collect();
    out.sort_by_key(|s| (s.members.len(), s.members.bits()));
    Ok(out)
}
