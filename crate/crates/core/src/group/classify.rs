use super::{subgroups, GroupTable};

/// Where a group sits relative to the families without GRRs/normal Cayley graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub abelian: bool,
    pub exponent: usize,
    pub elementary_abelian_2: bool,
    pub abelian_exp_gt2: bool,
    pub generalized_dicyclic: bool,
    pub hamiltonian_2group: bool,
    /// Abelian of exponent > 2, or generalized dicyclic.
    pub grr_family_excluded: bool,
}

pub fn classify(g: &GroupTable) -> Classification {
    let abelian = g.is_abelian();
    let exponent = g.exponent();
    let elementary_abelian_2 = exponent <= 2;
    let abelian_exp_gt2 = abelian && exponent > 2;
    let generalized_dicyclic = !abelian && is_generalized_dicyclic(g);
    let hamiltonian_2group = !abelian && g.order().is_power_of_two() && is_dedekind(g);
    Classification {
        abelian,
        exponent,
        elementary_abelian_2,
        abelian_exp_gt2,
        generalized_dicyclic,
        hamiltonian_2group,
        grr_family_excluded: abelian_exp_gt2 || generalized_dicyclic,
    }
}

/// Exists an abelian index-2 subgroup `A` and `x` outside `A` of order 4
/// with `x^-1 a x = a^-1` for every `a` in `A`. Exhaustive over all index-2
/// subgroups and all candidate `x`.
fn is_generalized_dicyclic(g: &GroupTable) -> bool {
    let r = g.order();
    if r % 2 != 0 {
        return false;
    }
    let index_two = subgroups(g, Some(2)).expect("order within enumeration cap");
    index_two.iter().filter(|a| a.index() == 2).any(|a| {
        let a = a.members;
        let abelian = a.iter().all(|x| a.iter().all(|y| g.mul(x, y) == g.mul(y, x)));
        abelian
            && (0..r)
                .filter(|&x| !a.contains(x) && g.element_order(x) == 4)
                .any(|x| a.iter().all(|y| g.conj(y, x) == g.inv(y)))
    })
}

/// Every subgroup normal; checking cyclic subgroups suffices.
fn is_dedekind(g: &GroupTable) -> bool {
    (0..g.order()).all(|x| {
        let c = g.closure_of(&[x]);
        g.is_normal(c)
    })
}

/// Result of comparing `|I(R)| / |R|` against 3/4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionFraction {
    /// `(|I(R)|, |R|)`, unreduced.
    pub fraction: (usize, usize),
    /// The fraction exceeds 3/4.
    pub must_be_ea2: bool,
    pub is_ea2: bool,
}

impl InvolutionFraction {
    /// A fraction above 3/4 forces an elementary abelian 2-group.
    pub fn consistent(&self) -> bool {
        !self.must_be_ea2 || self.is_ea2
    }
}

pub fn involution_fraction_check(g: &GroupTable) -> InvolutionFraction {
    let i = g.small_order_elements().len();
    let r = g.order();
    InvolutionFraction {
        fraction: (i, r),
        must_be_ea2: 4 * i > 3 * r,
        is_ea2: g.exponent() <= 2,
    }
}
