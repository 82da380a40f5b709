//! Exact counting of inverse-closed subsets, with and without evenness
//! constraints over coset families.

mod bound;
mod even;
mod ordering;

pub use bound::{BoundCheck, DyadicBound};
pub use even::{
    count_l_quotient, count_l_subgroup, count_l_subgroup_factored, count_m, count_n, count_n_closed_form,
    even_intersect_check, EvenFamilySpec, OrbitCount, OrbitFamily, QuotientCount, SubgroupCount,
};
pub use ordering::{check_2k_property, construct_ordering, verify_ordering, OrderingResult};

use num_bigint::BigUint;

use crate::elements::{ElementSet, HalfInt};
use crate::error::{Error, Result};
use crate::group::GroupTable;

/// Largest `c(X)` any enumerator here will walk.
pub const ENUMERATION_CAP: i64 = 24;

/// Atoms of an inverse-closed set: singletons `{x}` for `x` of order at most
/// two and pairs `{y, y^-1}` otherwise, ordered by smallest element.
pub fn atoms(g: &GroupTable, x: ElementSet) -> Result<Vec<ElementSet>> {
    if !x.is_inverse_closed(g) {
        return Err(Error::NotInverseClosed);
    }
    let mut out = Vec::new();
    let mut left = x;
    while let Some(y) = left.first() {
        let atom = ElementSet::from_elements([y, g.inv(y)]);
        left = left - atom;
        out.push(atom);
    }
    Ok(out)
}

fn check_cap(c: HalfInt) -> Result<()> {
    if c.twice() > 2 * ENUMERATION_CAP {
        return Err(Error::Precondition(format!("c = {c} exceeds the enumeration cap {ENUMERATION_CAP}")));
    }
    Ok(())
}

/// Union of the atoms selected by the bits of `mask`.
#[inline]
pub fn atom_union(atoms: &[ElementSet], mask: u64) -> ElementSet {
    let mut s = 0u64;
    let mut m = mask;
    while m != 0 {
        s |= atoms[m.trailing_zeros() as usize].bits();
        m &= m - 1;
    }
    ElementSet(s)
}

/// Every inverse-closed subset of `x`, in atom-mask order.
pub struct InverseClosedSubsets {
    atoms: Vec<ElementSet>,
    next: u64,
    end: u64,
}

impl Iterator for InverseClosedSubsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        if self.next == self.end {
            return None;
        }
        let s = atom_union(&self.atoms, self.next);
        self.next += 1;
        Some(s)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

pub fn enumerate_inverse_closed(g: &GroupTable, x: ElementSet) -> Result<InverseClosedSubsets> {
    check_cap(x.c_value(g))?;
    let atoms = atoms(g, x)?;
    let end = 1u64 << atoms.len();
    Ok(InverseClosedSubsets { atoms, next: 0, end })
}

/// `n_k` for every `k in 0..=|X|`, by enumeration.
pub fn size_distribution(g: &GroupTable, x: ElementSet) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; x.len() + 1];
    for s in enumerate_inverse_closed(g, x)? {
        counts[s.len()] += 1;
    }
    Ok(counts)
}

/// Number of inverse-closed `k`-subsets of a nonempty inverse-closed `x`,
/// checked against `2^{c(X) - 1}`.
pub fn count_inverse_closed_of_size(g: &GroupTable, x: ElementSet, k: usize) -> Result<BoundCheck> {
    if x.is_empty() {
        return Err(Error::Precondition("empty set".into()));
    }
    let count = size_distribution(g, x)?.get(k).copied().unwrap_or(0);
    Ok(BoundCheck::new(count, DyadicBound::new(x.c_value(g).twice() - 2, 2)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Number of subsets of an `m`-set with the given size parity.
pub fn parity_subset_count(m: u32, parity: Parity) -> BigUint {
    if m == 0 {
        return match parity {
            Parity::Even => BigUint::from(1u32),
            Parity::Odd => BigUint::from(0u32),
        };
    }
    BigUint::from(1u32) << (m - 1)
}
