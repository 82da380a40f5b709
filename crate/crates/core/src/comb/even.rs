use super::{atom_union, atoms, check_cap, BoundCheck, DyadicBound};
use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::group::{double_cosets, DoubleCosetClass, DoubleCosetDecomposition, GroupTable, Quotient, Subgroup};

/// Above this many elements `N`-counts use the closed form only.
const SUBSET_WALK_CAP: usize = 20;

/// Blocks of equal-size cells against which evenness is required.
#[derive(Clone, Debug)]
pub struct EvenFamilySpec {
    pub blocks: Vec<(String, Vec<ElementSet>)>,
}

impl EvenFamilySpec {
    /// Validate: cells of a block are disjoint and equal-sized, blocks are
    /// disjoint, and together they cover the group.
    pub fn new(g: &GroupTable, blocks: Vec<(String, Vec<ElementSet>)>) -> Result<Self> {
        let mut seen = ElementSet::EMPTY;
        for (label, cells) in &blocks {
            let size = cells.first().map(|c| c.len());
            for c in cells {
                if Some(c.len()) != size || c.is_empty() {
                    return Err(Error::Invalid(format!("block {label}: cells of unequal size")));
                }
                if !c.is_disjoint(seen) {
                    return Err(Error::Invalid(format!("block {label}: overlapping cells")));
                }
                seen = seen | *c;
            }
        }
        if seen != g.all() {
            return Err(Error::Invalid("blocks do not cover the group".into()));
        }
        Ok(EvenFamilySpec { blocks })
    }

    /// One block per double coset, cells its right cosets.
    pub fn from_double_cosets(d: &DoubleCosetDecomposition) -> Self {
        let blocks = d
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| (format!("D{i}"), c.right_cosets.clone()))
            .collect();
        EvenFamilySpec { blocks }
    }

    fn cell_masks(&self) -> Vec<Vec<u64>> {
        self.blocks.iter().map(|(_, cells)| cells.iter().map(|c| c.bits()).collect()).collect()
    }
}

#[inline]
fn even_over(s: u64, cells: &[u64]) -> bool {
    match cells.split_first() {
        None => true,
        Some((first, rest)) => {
            let k = (s & first).count_ones();
            rest.iter().all(|c| (s & c).count_ones() == k)
        }
    }
}

/// `S` meets all cells of each block in equally many elements.
pub fn even_intersect_check(s: ElementSet, spec: &EvenFamilySpec) -> bool {
    spec.cell_masks().iter().all(|cells| even_over(s.bits(), cells))
}

fn class_masks(cls: &DoubleCosetClass) -> Vec<u64> {
    cls.right_cosets.iter().map(|c| c.bits()).collect()
}

/// Inverse-closed subsets of an inverse-closed double coset meeting its
/// right cosets evenly, against `2^{c(QxQ) - b/2 + 1/2}`.
pub fn count_m(g: &GroupTable, cls: &DoubleCosetClass) -> Result<BoundCheck> {
    let c = cls.elements.c_value(g);
    check_cap(c)?;
    let atoms = atoms(g, cls.elements)?;
    let cells = class_masks(cls);
    let count = (0..1u64 << atoms.len()).filter(|&m| even_over(atom_union(&atoms, m).bits(), &cells)).count() as u64;
    Ok(BoundCheck::new(count, DyadicBound::new(c.twice() - cls.b() as i64 + 1, 2)))
}

/// Every subset of `set` (by bit tricks over the mask), filtered.
fn count_subsets(set: ElementSet, mut keep: impl FnMut(u64) -> bool) -> u64 {
    let mask = set.bits();
    let mut sub = 0u64;
    let mut count = 0;
    loop {
        if keep(sub) {
            count += 1;
        }
        sub = sub.wrapping_sub(mask) & mask;
        if sub == 0 {
            return count;
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `Σ_k Π_cells C(|cell|, k)` for equal-size cells.
pub fn count_n_closed_form(cell_size: usize, cells: usize) -> u64 {
    (0..=cell_size as u64)
        .map(|k| binomial(cell_size as u64, k).pow(cells as u32))
        .sum()
}

fn count_n_cells(set: ElementSet, cells: &[u64], cell_size: usize) -> u64 {
    let closed = count_n_closed_form(cell_size, cells.len());
    if set.len() <= SUBSET_WALK_CAP {
        let walked = count_subsets(set, |s| even_over(s, cells));
        assert_eq!(walked, closed, "closed form for evenly meeting subsets");
    }
    closed
}

/// All subsets (inverse-closed or not) of a double coset meeting its right
/// cosets evenly, against `2^{|QxQ| - b + 1}`.
pub fn count_n(cls: &DoubleCosetClass) -> Result<BoundCheck> {
    let n = cls.elements.len();
    if n > 2 * super::ENUMERATION_CAP as usize {
        return Err(Error::Precondition(format!("double coset of size {n} too large")));
    }
    let count = count_n_cells(cls.elements, &class_masks(cls), cls.right_cosets[0].len());
    Ok(BoundCheck::new(count, DyadicBound::integer(n as i64 - cls.b() as i64 + 1)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupCount {
    pub count: u64,
    pub ell: usize,
    pub index: usize,
    /// Against `2^{c(R) - |R:Q|/2 + ℓ/2}`.
    pub ell_bound: BoundCheck,
    /// Against `2^{c(R) - |R:Q|/8}`; only for non-normal `Q`.
    pub nonnormal_bound: Option<BoundCheck>,
}

/// Inverse-closed `S ⊆ R` meeting every double coset of `q` evenly, by
/// walking all `2^{c(R)}` inverse-closed sets.
pub fn count_l_subgroup(g: &GroupTable, q: &Subgroup) -> Result<SubgroupCount> {
    let c = g.c_value();
    check_cap(c)?;
    let d = double_cosets(g, q);
    let spec = EvenFamilySpec::from_double_cosets(&d);
    let blocks = spec.cell_masks();
    let atoms = atoms(g, g.all())?;
    let count = (0..1u64 << atoms.len())
        .filter(|&m| {
            let s = atom_union(&atoms, m).bits();
            blocks.iter().all(|cells| even_over(s, cells))
        })
        .count() as u64;
    let (ell, index) = (d.ell(), q.index());
    let ell_bound = BoundCheck::new(count, DyadicBound::new(c.twice() - index as i64 + ell as i64, 2));
    let nonnormal_bound = (!q.normal).then(|| BoundCheck::new(count, DyadicBound::new(4 * c.twice() - index as i64, 8)));
    Ok(SubgroupCount { count, ell, index, ell_bound, nonnormal_bound })
}

/// The same count assembled class by class: self-paired classes contribute
/// their `M`-count; a paired class `B` contributes the subsets `T` with `T`
/// even over `B` and `T^-1` even over `B^-1`.
pub fn count_l_subgroup_factored(g: &GroupTable, q: &Subgroup) -> Result<u64> {
    let d = double_cosets(g, q);
    let mut total = 1u64;
    for &i in &d.self_paired {
        total *= count_m(g, &d.classes[i])?.count;
    }
    for &(i, j) in &d.paired {
        let (b, binv) = (&d.classes[i], &d.classes[j]);
        let (cells, inv_cells) = (class_masks(b), class_masks(binv));
        total *= count_subsets(b.elements, |t| {
            even_over(t, &cells) && even_over(ElementSet(t).inverse(g).bits(), &inv_cells)
        });
    }
    Ok(total)
}

/// Orbits of a group acting on `R/K`, with what the quotient counts need.
#[derive(Clone, Debug)]
pub struct OrbitFamily {
    pub quotient: Quotient,
    /// Orbits as sets of coset indices; they partition `R/K`.
    pub orbits: Vec<ElementSet>,
    /// Orbits of the group generated together with inversion.
    pub kappa: usize,
    pub quotient_bound_eligible: bool,
}

impl OrbitFamily {
    /// Preimage of an orbit, cut into its `K`-cosets.
    pub fn preimage_cells(&self, orbit: ElementSet) -> Vec<ElementSet> {
        orbit.iter().map(|i| self.quotient.cosets[i]).collect()
    }

    fn validate(&self) -> Result<()> {
        let m = self.quotient.table.order();
        let mut seen = ElementSet::EMPTY;
        for o in &self.orbits {
            if o.is_empty() || !o.is_disjoint(seen) {
                return Err(Error::Invalid("orbits overlap".into()));
            }
            seen = seen | *o;
        }
        if seen != ElementSet::full(m) || self.quotient.cosets.len() != m {
            return Err(Error::Invalid("orbits do not partition R/K".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCount {
    pub orbit: ElementSet,
    pub preimage: ElementSet,
    pub iota_fixed: bool,
    /// Inverse-closed even subsets of the preimage; only for inversion-fixed
    /// orbits.
    pub m: Option<BoundCheck>,
    /// All even subsets of the preimage.
    pub n: BoundCheck,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientCount {
    pub count: u64,
    /// Against `2^{c(R) - c(R/K) + κ}`.
    pub kappa_bound: BoundCheck,
    /// Against `2^{c(R) - |R/K|/96}`; only for eligible families.
    pub quotient_bound: Option<BoundCheck>,
    pub per_orbit: Vec<OrbitCount>,
}

/// Inverse-closed `S ⊆ R` meeting the preimage of every orbit evenly, plus
/// the per-orbit counts.
pub fn count_l_quotient(g: &GroupTable, fam: &OrbitFamily) -> Result<QuotientCount> {
    fam.validate()?;
    let c = g.c_value();
    check_cap(c)?;
    let qt = &fam.quotient.table;
    let mut blocks = Vec::new();
    let mut per_orbit = Vec::new();
    for &orbit in &fam.orbits {
        let cells = fam.preimage_cells(orbit);
        let preimage = cells.iter().fold(ElementSet::EMPTY, |a, &b| a | b);
        let masks: Vec<u64> = cells.iter().map(|c| c.bits()).collect();
        let iota_fixed = orbit.is_inverse_closed(qt);
        let m = if iota_fixed {
            let pc = preimage.c_value(g);
            check_cap(pc)?;
            let atoms = atoms(g, preimage)?;
            let count =
                (0..1u64 << atoms.len()).filter(|&mm| even_over(atom_union(&atoms, mm).bits(), &masks)).count() as u64;
            let num = pc.twice() - orbit.c_value(qt).twice() + 2;
            Some(BoundCheck::new(count, DyadicBound::new(num, 2)))
        } else {
            None
        };
        let n_count = count_n_cells(preimage, &masks, cells[0].len());
        let n = BoundCheck::new(n_count, DyadicBound::integer(preimage.len() as i64 - orbit.len() as i64 + 1));
        per_orbit.push(OrbitCount { orbit, preimage, iota_fixed, m, n });
        blocks.push(masks);
    }
    let atoms = atoms(g, g.all())?;
    let count = (0..1u64 << atoms.len())
        .filter(|&m| {
            let s = atom_union(&atoms, m).bits();
            blocks.iter().all(|cells| even_over(s, cells))
        })
        .count() as u64;
    let kappa_bound = BoundCheck::new(
        count,
        DyadicBound::new(c.twice() - qt.c_value().twice() + 2 * fam.kappa as i64, 2),
    );
    let quotient_bound = fam
        .quotient_bound_eligible
        .then(|| BoundCheck::new(count, DyadicBound::new(48 * c.twice() - qt.order() as i64, 96)));
    Ok(QuotientCount { count, kappa_bound, quotient_bound, per_orbit })
}
