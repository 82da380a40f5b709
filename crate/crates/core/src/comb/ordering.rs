use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::group::{DoubleCosetClass, GroupTable};

/// An ordering `(Λ_1, ..., Λ_b)` of the right cosets in a double coset with
/// `⋃_{j>=i} (Λ_i ∩ Λ_j^-1)` nonempty for `2 <= i <= ⌊b/2⌋ + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingResult {
    /// `order[p]` is the index (into `right_cosets`) placed at position `p+1`.
    pub order: Vec<usize>,
    /// `(i, w)`: `w ∈ Λ_i` with `w^-1` in some `Λ_j`, `j >= i` (1-based `i`).
    pub witnesses: Vec<(usize, usize)>,
}

fn union(cls: &DoubleCosetClass, order: &[usize], from: usize, to: usize) -> ElementSet {
    // 1-based inclusive positions
    (from..=to).fold(ElementSet::EMPTY, |acc, p| acc | cls.right_cosets[order[p - 1]])
}

fn require_inverse_closed(g: &GroupTable, cls: &DoubleCosetClass) -> Result<()> {
    if cls.elements.is_inverse_closed(g) {
        Ok(())
    } else {
        Err(Error::NotInverseClosed)
    }
}

/// Build the ordering by the swap procedure: start from the coset order of
/// the decomposition; for `ℓ = 2..=⌊b/2⌋` take the smallest `s` in
/// `ℓ+1..=2ℓ` with `Φ_s ∩ (⋃_{j>ℓ} Φ_j)^-1` nonempty and swap positions
/// `ℓ+1` and `s`. The result is then checked again from scratch.
pub fn construct_ordering(g: &GroupTable, cls: &DoubleCosetClass) -> Result<OrderingResult> {
    require_inverse_closed(g, cls)?;
    let b = cls.b();
    if b < 2 {
        return Err(Error::Precondition(format!("need at least two cosets, got {b}")));
    }
    let mut order: Vec<usize> = (0..b).collect();
    for ell in 2..=b / 2 {
        let tail_inv = union(cls, &order, ell + 1, b).inverse(g);
        let s = (ell + 1..=2 * ell)
            .find(|&s| !(cls.right_cosets[order[s - 1]] & tail_inv).is_empty())
            .ok_or_else(|| Error::ProofViolation(format!("no s in {}..={} at ℓ = {ell}", ell + 1, 2 * ell)))?;
        order.swap(ell, s - 1);
    }
    let mut witnesses = Vec::new();
    for i in 2..=b / 2 + 1 {
        let hit = cls.right_cosets[order[i - 1]] & union(cls, &order, i, b).inverse(g);
        let w = hit
            .first()
            .ok_or_else(|| Error::ProofViolation(format!("position {i} has no witness")))?;
        witnesses.push((i, w));
    }
    let result = OrderingResult { order, witnesses };
    verify_ordering(g, cls, &result)?;
    Ok(result)
}

/// Independent check of an ordering's witnesses by coset lookup.
pub fn verify_ordering(g: &GroupTable, cls: &DoubleCosetClass, res: &OrderingResult) -> Result<()> {
    let b = cls.b();
    let mut sorted = res.order.clone();
    sorted.sort_unstable();
    if sorted != (0..b).collect::<Vec<_>>() {
        return Err(Error::ProofViolation("ordering is not a permutation".into()));
    }
    let position = |x: usize| -> Option<usize> {
        let c = cls.coset_of(x)?;
        res.order.iter().position(|&o| o == c).map(|p| p + 1)
    };
    let wanted: Vec<usize> = (2..=b / 2 + 1).collect();
    let got: Vec<usize> = res.witnesses.iter().map(|&(i, _)| i).collect();
    if wanted != got {
        return Err(Error::ProofViolation("witness positions incomplete".into()));
    }
    for &(i, w) in &res.witnesses {
        let ok = position(w) == Some(i) && position(g.inv(w)).is_some_and(|j| j >= i);
        if !ok {
            return Err(Error::ProofViolation(format!("witness {w} at position {i} fails")));
        }
    }
    Ok(())
}

/// For `k = 1..=⌊b/2⌋`: is `⋃_{i=k+1}^{2k} ⋃_{j=k+1}^{b} (Φ_i ∩ Φ_j^-1)`
/// nonempty? `ordering[p]` is the coset placed at position `p+1`.
pub fn check_2k_property(g: &GroupTable, cls: &DoubleCosetClass, ordering: &[usize]) -> Result<Vec<bool>> {
    require_inverse_closed(g, cls)?;
    let b = cls.b();
    let mut sorted = ordering.to_vec();
    sorted.sort_unstable();
    if sorted != (0..b).collect::<Vec<_>>() {
        return Err(Error::Invalid("ordering is not a permutation of the cosets".into()));
    }
    Ok((1..=b / 2)
        .map(|k| {
            let front = union(cls, ordering, k + 1, 2 * k);
            let tail_inv = union(cls, ordering, k + 1, b).inverse(g);
            !(front & tail_inv).is_empty()
        })
        .collect())
}
