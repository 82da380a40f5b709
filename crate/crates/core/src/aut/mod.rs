//! Automorphism groups of digraphs and the DRR / GRR / normality predicates.

mod canon;
mod refine;
mod search;

pub use canon::{canonical_form, CanonicalForm, CANON_LIMIT};

use std::time::{Duration, Instant};

use num_traits::ToPrimitive;

use crate::cayley::build_cayley;
use crate::digraph::Digraph;
use crate::elements::{ElementSet, MAX_ORDER};
use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup};
use crate::perm::{right_translation, PermGroup, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    RefinedBacktracking,
    BruteForce,
}

#[derive(Clone, Debug)]
pub struct AutResult {
    pub group: PermGroup,
    pub method: Method,
    pub elapsed: Duration,
    /// Search nodes (or permutations) examined.
    pub nodes: usize,
}

fn check_colors(d: &Digraph, colors: Option<&[usize]>) -> Result<Vec<usize>> {
    match colors {
        None => Ok(vec![0; d.order()]),
        Some(c) if c.len() == d.order() => Ok(c.to_vec()),
        Some(c) => Err(Error::DegreeMismatch { expected: d.order(), got: c.len() }),
    }
}

/// Full group of color-preserving automorphisms.
pub fn automorphism_group(d: &Digraph, colors: Option<&[usize]>) -> Result<AutResult> {
    if d.order() > MAX_ORDER {
        return Err(Error::TooLarge { order: d.order(), limit: MAX_ORDER });
    }
    let start = Instant::now();
    let colors = check_colors(d, colors)?;
    let out = search::search(d, &colors, false);
    for (gamma, _) in &out.strong {
        assert!(d.preserved_by(gamma), "generator preserves arcs");
    }
    let group = PermGroup::from_bsgs(d.order(), &out.base, out.strong);
    debug_assert_eq!(group.order(), out.order);
    Ok(AutResult { group, method: Method::RefinedBacktracking, elapsed: start.elapsed(), nodes: out.nodes })
}

/// Reference implementation: filter all `n!` permutations.
pub fn brute_force_automorphisms(d: &Digraph, colors: Option<&[usize]>) -> Result<AutResult> {
    let n = d.order();
    if n > 8 {
        return Err(Error::TooLarge { order: n, limit: 8 });
    }
    let start = Instant::now();
    let colors = check_colors(d, colors)?;
    let mut group = PermGroup::trivial(n);
    let mut count = 0u64;
    let mut images: Vec<usize> = (0..n).collect();
    heap_permutations(&mut images, n, &mut |p| {
        if (0..n).any(|x| colors[x] != colors[p[x]]) {
            return;
        }
        let perm = Permutation::from_images(p).expect("bijection");
        if d.preserved_by(&perm) {
            count += 1;
            if !group.contains(&perm) {
                let mut gens = group.generators().to_vec();
                gens.push(perm);
                group = PermGroup::new(n, gens).expect("same degree");
            }
        }
    });
    assert_eq!(group.order_u64(), Some(count), "automorphisms form a group");
    Ok(AutResult { group, method: Method::BruteForce, elapsed: start.elapsed(), nodes: (1..=n).product() })
}

fn heap_permutations(a: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        f(a);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(a, k - 1, f);
        if k % 2 == 0 {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap_permutations(a, k - 1, f);
}

/// Colors with vertex 0 alone in its own class.
fn pin_identity(r: usize) -> Vec<usize> {
    (0..r).map(|v| usize::from(v != 0)).collect()
}

/// Aut(Cay(R, S)).
pub fn cayley_automorphisms(g: &GroupTable, s: ElementSet) -> Result<AutResult> {
    let d = build_cayley(g, s)?;
    automorphism_group(&d.digraph, None)
}

/// Stabilizer of the identity vertex in Aut(Cay(R, S)).
pub fn cayley_vertex_stabilizer(g: &GroupTable, s: ElementSet) -> Result<AutResult> {
    let d = build_cayley(g, s)?;
    automorphism_group(&d.digraph, Some(&pin_identity(g.order())))
}

/// `|Aut(Cay(R, S))| = r`. Since the regular copy of `R` is transitive, this
/// is the same as the identity vertex having trivial stabilizer.
pub fn is_drr(g: &GroupTable, s: ElementSet) -> Result<bool> {
    let d = build_cayley(g, s)?;
    let out = search::search(&d.digraph, &pin_identity(g.order()), true);
    Ok(out.strong.is_empty())
}

pub fn is_grr(g: &GroupTable, s: ElementSet) -> Result<bool> {
    Ok(s.is_inverse_closed(g) && is_drr(g, s)?)
}

/// Whether `φ` (fixing 0) is a group automorphism, i.e. normalizes the
/// regular representation: `φ^-1 ρ_y φ = ρ_{φ(y)}` for every generator.
fn normalizes_regular(g: &GroupTable, phi: &Permutation, gens: &[usize]) -> bool {
    gens.iter().all(|&y| {
        let conj = right_translation(g, y).conjugate_by(phi);
        conj == right_translation(g, conj.apply(0))
    })
}

/// `R ⊴ Aut(Cay(R, S))`. Aut is generated by `R` and the identity-vertex
/// stabilizer, so it suffices to conjugate the regular generators by the
/// stabilizer's generators.
pub fn is_normal_cayley(g: &GroupTable, s: ElementSet) -> Result<bool> {
    let stab = cayley_vertex_stabilizer(g, s)?;
    let gens = crate::group::generating_set(g);
    Ok(stab.group.generators().iter().all(|phi| normalizes_regular(g, phi, &gens)))
}

/// Both answers from one search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CayleyClass {
    pub drr: bool,
    pub normal: bool,
    /// `|Aut(Cay(R, S))|`, when it fits in a `u64`.
    pub aut_order: Option<u64>,
}

pub fn classify_cayley(g: &GroupTable, s: ElementSet) -> Result<CayleyClass> {
    let stab = cayley_vertex_stabilizer(g, s)?;
    let gens = crate::group::generating_set(g);
    let drr = stab.group.is_trivial();
    let normal = stab.group.generators().iter().all(|phi| normalizes_regular(g, phi, &gens));
    let aut_order = stab.group.order().to_u64().and_then(|o| o.checked_mul(g.order() as u64));
    Ok(CayleyClass { drr, normal, aut_order })
}

/// Limit on the subgroup searched exhaustively for a normalizing element.
const STABILIZED_SEARCH_LIMIT: u64 = 100_000;

/// Is there a non-identity automorphism fixing the identity vertex,
/// stabilizing every coset of `n`, and normalizing the regular copy of `n`?
pub fn stabilized_orbit_predicate(g: &GroupTable, s: ElementSet, n: &Subgroup) -> Result<bool> {
    if !n.normal {
        return Err(Error::NotNormal);
    }
    if n.is_trivial() || n.is_whole() {
        return Err(Error::Precondition("normal subgroup must be nontrivial and proper".into()));
    }
    let r = g.order();
    let cosets = crate::cayley::coset_partition(g, n);
    let colors: Vec<usize> = (0..r).map(|v| if v == 0 { 0 } else { 1 + cosets.cell_of(v) }).collect();
    let d = build_cayley(g, s)?;
    let b = automorphism_group(&d.digraph, Some(&colors))?.group;
    if b.is_trivial() {
        return Ok(false);
    }
    let n_gens: Vec<usize> = crate::group::generating_set_of(g, n.members);
    let normalizes = |phi: &Permutation| {
        n_gens.iter().all(|&y| {
            let conj = right_translation(g, y).conjugate_by(phi);
            let image = conj.apply(0);
            n.members.contains(image) && conj == right_translation(g, image)
        })
    };
    if b.generators().iter().any(&normalizes) {
        return Ok(true);
    }
    let elements = b.elements(STABILIZED_SEARCH_LIMIT)?;
    Ok(elements.iter().any(|phi| !phi.is_identity() && normalizes(phi)))
}
