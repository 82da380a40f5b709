use super::{GroupTable, Subgroup};
use crate::elements::ElementSet;
use crate::error::{Error, Result};

/// One double coset `QxQ`, cut into the right cosets it contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCosetClass {
    pub elements: ElementSet,
    /// `Λ_1, ..., Λ_b`, ordered by smallest element.
    pub right_cosets: Vec<ElementSet>,
    /// Index of the class holding the inverses of these elements.
    pub inverse_class: usize,
}

impl DoubleCosetClass {
    pub fn b(&self) -> usize {
        self.right_cosets.len()
    }

    pub fn is_self_paired(&self, index: usize) -> bool {
        self.inverse_class == index
    }

    /// `Λ_{i,j} = Λ_i ∩ Λ_j^{-1}` (0-based).
    pub fn lambda(&self, g: &GroupTable, i: usize, j: usize) -> ElementSet {
        self.right_cosets[i] & self.right_cosets[j].inverse(g)
    }

    /// Which right coset an element lies in.
    pub fn coset_of(&self, x: usize) -> Option<usize> {
        self.right_cosets.iter().position(|c| c.contains(x))
    }
}

/// The double cosets `Q\R/Q`.
#[derive(Clone, Debug)]
pub struct DoubleCosetDecomposition {
    pub subgroup: Subgroup,
    /// Ordered by smallest element; class 0 is `Q` itself.
    pub classes: Vec<DoubleCosetClass>,
    /// `D_1`: classes equal to their own inverse.
    pub self_paired: Vec<usize>,
    /// `D_2`: pairs `(Δ, Δ^{-1})` with the smaller index first.
    pub paired: Vec<(usize, usize)>,
}

impl DoubleCosetDecomposition {
    /// `ℓ`.
    pub fn ell(&self) -> usize {
        self.classes.len()
    }

    /// `(Σ_{D_1} a_i, Σ_{D_2} b_i)`.
    pub fn coset_totals(&self) -> (usize, usize) {
        let a = self.self_paired.iter().map(|&i| self.classes[i].b()).sum();
        let b = self.paired.iter().map(|&(i, _)| self.classes[i].b()).sum();
        (a, b)
    }
}

pub fn double_cosets(g: &GroupTable, q: &Subgroup) -> DoubleCosetDecomposition {
    let r = g.order();
    let qm = q.members;
    let mut classes: Vec<DoubleCosetClass> = Vec::new();
    let mut covered = ElementSet::EMPTY;
    for x in 0..r {
        if covered.contains(x) {
            continue;
        }
        let mut elements = ElementSet::EMPTY;
        let mut right_cosets = Vec::new();
        let qx = qm.right_mul(g, x);
        for t in qm.iter() {
            let coset = qx.right_mul(g, t);
            if !elements.contains(coset.first().expect("nonempty")) {
                elements = elements | coset;
                right_cosets.push(coset);
            }
        }
        right_cosets.sort_by_key(|c| c.first());
        covered = covered | elements;
        classes.push(DoubleCosetClass { elements, right_cosets, inverse_class: usize::MAX });
    }
    let mut self_paired = Vec::new();
    let mut paired = Vec::new();
    for i in 0..classes.len() {
        let inv = classes[i].elements.inverse(g);
        let j = classes.iter().position(|c| c.elements == inv).expect("inverse of a double coset is one");
        classes[i].inverse_class = j;
        if i == j {
            self_paired.push(i);
        } else if i < j {
            paired.push((i, j));
        }
    }
    debug_assert_eq!(covered, g.all());
    DoubleCosetDecomposition { subgroup: *q, classes, self_paired, paired }
}

/// `R/K` for a normal subgroup `K`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub table: GroupTable,
    /// Coset index of each element of `R`.
    pub projection: Vec<usize>,
    /// Cosets ordered by smallest element; coset 0 is `K`.
    pub cosets: Vec<ElementSet>,
}

pub fn quotient(g: &GroupTable, k: &Subgroup) -> Result<Quotient> {
    if !g.is_normal(k.members) {
        return Err(Error::NotNormal);
    }
    let r = g.order();
    let mut projection = vec![usize::MAX; r];
    let mut cosets = Vec::new();
    let mut reps = Vec::new();
    for x in 0..r {
        if projection[x] != usize::MAX {
            continue;
        }
        let coset = k.members.right_mul(g, x);
        for y in coset.iter() {
            projection[y] = cosets.len();
        }
        cosets.push(coset);
        reps.push(x);
    }
    let m = cosets.len();
    let table = GroupTable::from_fn(format!("{}/K", g.name()), m, |a, b| projection[g.mul(reps[a], reps[b])]);
    for x in 0..r {
        for y in 0..r {
            assert_eq!(
                projection[g.mul(x, y)],
                table.mul(projection[x], projection[y]),
                "projection is a homomorphism"
            );
        }
    }
    Ok(Quotient { table, projection, cosets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{load_group, subgroups};

    fn order2_non_normal(g: &GroupTable) -> Subgroup {
        *subgroups(g, None).unwrap().iter().find(|h| h.order() == 2 && !h.normal).unwrap()
    }

    #[test]
    fn sym3_by_transposition() {
        let g = load_group("sym:3").unwrap();
        let q = order2_non_normal(&g);
        let d = double_cosets(&g, &q);
        assert_eq!(d.ell(), 2);
        let mut sizes: Vec<(usize, usize)> = d.classes.iter().map(|c| (c.elements.len(), c.b())).collect();
        sizes.sort();
        assert_eq!(sizes, vec![(2, 1), (4, 2)]);
        assert_eq!(d.self_paired, vec![0, 1]);
        assert!(d.paired.is_empty());
    }

    #[test]
    fn extremes() {
        let g = load_group("dihedral:5").unwrap();
        let d = double_cosets(&g, &Subgroup::whole(&g));
        assert_eq!(d.ell(), 1);
        assert_eq!(d.classes[0].b(), 1);
        let d = double_cosets(&g, &Subgroup::trivial(&g));
        assert_eq!(d.ell(), 10);
        assert!(d.classes.iter().all(|c| c.elements.len() == 1));
    }

    #[test]
    fn index_identity() {
        for name in ["dihedral:6", "sym:4", "dicyclic:3", "alt:4"] {
            let g = load_group(name).unwrap();
            for q in subgroups(&g, None).unwrap() {
                let d = double_cosets(&g, &q);
                let (a, b) = d.coset_totals();
                assert_eq!(a + 2 * b, q.index(), "{name}");
                let total: usize = d.classes.iter().map(|c| c.elements.len()).sum();
                assert_eq!(total, g.order());
                for c in &d.classes {
                    let union = c.right_cosets.iter().fold(ElementSet::EMPTY, |a, &b| a | b);
                    assert_eq!(union, c.elements);
                    assert!(c.right_cosets.iter().all(|x| x.len() == q.order()));
                }
            }
        }
    }

    #[test]
    fn quotients() {
        let g = load_group("cyclic:4").unwrap();
        let k = Subgroup::generated(&g, &[2]);
        let q = quotient(&g, &k).unwrap();
        assert_eq!(q.table.order(), 2);

        let g = load_group("quaternion").unwrap();
        let centre = *subgroups(&g, None).unwrap().iter().find(|h| h.order() == 2).unwrap();
        let q = quotient(&g, &centre).unwrap();
        assert_eq!(q.table.order(), 4);
        assert_eq!(q.table.exponent(), 2);

        let g = load_group("sym:3").unwrap();
        let a3 = *subgroups(&g, None).unwrap().iter().find(|h| h.order() == 3).unwrap();
        assert_eq!(quotient(&g, &a3).unwrap().table.order(), 2);
        assert!(matches!(quotient(&g, &order2_non_normal(&g)), Err(Error::NotNormal)));
    }
}
