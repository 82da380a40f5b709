use std::collections::HashSet;

use num_traits::ToPrimitive;

use super::group::orbits_of;
use super::{PermGroup, Permutation};
use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::group::{generating_set, GroupTable};

/// Largest group the element-enumerating routines will materialize.
pub const ENUMERATION_LIMIT: u64 = 100_000;

/// `x ↦ xy`.
pub fn right_translation(g: &GroupTable, y: usize) -> Permutation {
    Permutation::from_fn(g.order(), |x| g.mul(x, y))
}

/// The right regular representation.
pub fn regular_rep(g: &GroupTable) -> PermGroup {
    let gens = generating_set(g).into_iter().map(|y| right_translation(g, y)).collect();
    let rep = PermGroup::new(g.order(), gens).expect("order within cap");
    assert_eq!(rep.order_u64(), Some(g.order() as u64), "regular action");
    rep
}

/// `ι : x ↦ x^{-1}`.
pub fn inversion_perm(g: &GroupTable) -> Permutation {
    let iota = Permutation::from_fn(g.order(), |x| g.inv(x));
    assert!((&iota * &iota).is_identity());
    iota
}

/// Number of orbits of `⟨g1, ι⟩`.
pub fn joint_orbit_count(g1: &PermGroup, iota: &Permutation) -> Result<usize> {
    if iota.degree() != g1.degree() {
        return Err(Error::DegreeMismatch { expected: g1.degree(), got: iota.degree() });
    }
    let mut gens = g1.generators().to_vec();
    gens.push(iota.clone());
    Ok(orbits_of(g1.degree(), &gens).len())
}

fn require_subgroup(g: &PermGroup, sub: &PermGroup) -> Result<()> {
    if sub.degree() != g.degree() {
        return Err(Error::DegreeMismatch { expected: g.degree(), got: sub.degree() });
    }
    if !g.contains_group(sub) {
        return Err(Error::NotSubgroup("generator outside the overgroup".into()));
    }
    Ok(())
}

/// Subgroup generated by a set of elements, choosing generators greedily.
fn span(degree: usize, elements: impl IntoIterator<Item = Permutation>) -> PermGroup {
    let mut group = PermGroup::trivial(degree);
    for p in elements {
        if !group.contains(&p) {
            let mut gens = group.generators().to_vec();
            gens.push(p);
            group = PermGroup::new(degree, gens).expect("same degree");
        }
    }
    group
}

/// The largest normal subgroup of `g` inside `r_sub`.
///
/// Starting from the elements of `r_sub`, repeatedly drop every element whose
/// conjugate by some generator of `g` has left the current set. The fixed
/// point is closed under conjugation by `g` and is an intersection of
/// conjugates of `r_sub`, hence the core.
pub fn core_of(g: &PermGroup, r_sub: &PermGroup) -> Result<PermGroup> {
    require_subgroup(g, r_sub)?;
    let mut current: HashSet<Permutation> = r_sub.elements(ENUMERATION_LIMIT)?.into_iter().collect();
    loop {
        let kept: HashSet<Permutation> = current
            .iter()
            .filter(|c| g.generators().iter().all(|t| current.contains(&c.conjugate_by(t))))
            .cloned()
            .collect();
        if kept.len() == current.len() {
            break;
        }
        current = kept;
    }
    let mut members: Vec<Permutation> = current.into_iter().collect();
    members.sort();
    let core = span(g.degree(), members);
    for k in core.generators() {
        for t in g.generators() {
            assert!(core.contains(&k.conjugate_by(t)), "core is normal");
        }
    }
    Ok(core)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Maximality {
    pub maximal: bool,
    /// `r_sub` is the whole group; reported maximal by convention.
    pub degenerate: bool,
}

/// Whether `r_sub` is maximal in `g`: every `x` outside it must give
/// `⟨r_sub, x⟩ = g`. One `x` per double coset suffices.
pub fn is_maximal_subgroup(g: &PermGroup, r_sub: &PermGroup) -> Result<Maximality> {
    require_subgroup(g, r_sub)?;
    let order = g.order();
    if r_sub.order() == order {
        return Ok(Maximality { maximal: true, degenerate: true });
    }
    let elements = g.elements(ENUMERATION_LIMIT)?;
    let sub_elements = r_sub.elements(ENUMERATION_LIMIT)?;
    let mut done: HashSet<Permutation> = sub_elements.iter().cloned().collect();
    for x in &elements {
        if done.contains(x) {
            continue;
        }
        let mut gens = r_sub.generators().to_vec();
        gens.push(x.clone());
        let joined = PermGroup::new(g.degree(), gens)?;
        if joined.order() != order {
            return Ok(Maximality { maximal: false, degenerate: false });
        }
        for a in &sub_elements {
            let ax = a * x;
            for b in &sub_elements {
                done.insert(&ax * b);
            }
        }
    }
    debug_assert_eq!(done.len() as u64, order.to_u64().expect("enumerated"));
    Ok(Maximality { maximal: true, degenerate: false })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DichotomyBranch {
    /// The orbit of 0 is a subgroup but not normal; nothing further claimed.
    OrbitNotNormal,
    LInR,
    OrbitsStabilized,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DichotomyReport {
    /// `L`-orbit of the identity, as a set of group elements.
    pub orbit: ElementSet,
    pub orbit_is_subgroup: bool,
    pub orbit_normal: bool,
    pub l_in_r: bool,
    pub orbits_stabilized: bool,
    /// `None` when neither alternative held (a violation).
    pub branch: Option<DichotomyBranch>,
    pub holds: bool,
}

/// Check the normal-orbit dichotomy for `L ⊴ G` with the regular copy of the
/// table maximal in `G`. Every precondition is verified and reported as an
/// error when it fails.
pub fn normal_orbit_dichotomy_check(g: &PermGroup, table: &GroupTable, l_sub: &PermGroup) -> Result<DichotomyReport> {
    let r_sub = regular_rep(table);
    require_subgroup(g, &r_sub)?;
    let m = is_maximal_subgroup(g, &r_sub)?;
    if m.degenerate {
        return Err(Error::Precondition("regular subgroup equals the overgroup".into()));
    }
    if !m.maximal {
        return Err(Error::Precondition("regular subgroup is not maximal".into()));
    }
    require_normal(g, l_sub)?;
    Ok(evaluate_dichotomy(g, table, l_sub))
}

fn require_normal(g: &PermGroup, l_sub: &PermGroup) -> Result<()> {
    require_subgroup(g, l_sub)?;
    let normal = l_sub
        .generators()
        .iter()
        .all(|k| g.generators().iter().all(|t| l_sub.contains(&k.conjugate_by(t))));
    if normal {
        Ok(())
    } else {
        Err(Error::NotNormal)
    }
}

/// The dichotomy computation alone, without the maximality precondition.
pub fn evaluate_dichotomy(g: &PermGroup, table: &GroupTable, l_sub: &PermGroup) -> DichotomyReport {
    let orbit = l_sub.orbit(0);
    let orbit_is_subgroup = table.is_subgroup(orbit);
    let orbit_normal = orbit_is_subgroup && table.is_normal(orbit);
    let l_in_r = l_sub.generators().iter().all(|p| *p == right_translation(table, p.apply(0)));
    let g1 = g.point_stabilizer(0);
    let l_orbits = l_sub.orbits();
    let orbits_stabilized = g1.generators().iter().all(|h| {
        l_orbits
            .cells()
            .iter()
            .all(|&o| ElementSet::from_elements(o.iter().map(|x| h.apply(x))) == o)
    });
    let branch = if !orbit_normal {
        Some(DichotomyBranch::OrbitNotNormal)
    } else if l_in_r {
        Some(DichotomyBranch::LInR)
    } else if orbits_stabilized {
        Some(DichotomyBranch::OrbitsStabilized)
    } else {
        None
    };
    DichotomyReport {
        orbit,
        orbit_is_subgroup,
        orbit_normal,
        l_in_r,
        orbits_stabilized,
        holds: orbit_is_subgroup && branch.is_some(),
        branch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::load_group;

    fn cyc(n: usize, c: &[usize]) -> Permutation {
        Permutation::from_cycles(n, &[c]).unwrap()
    }

    #[test]
    fn regular_reps() {
        let c3 = regular_rep(&load_group("cyclic:3").unwrap());
        assert_eq!(c3.order_u64(), Some(3));
        assert_eq!(c3.generators(), &[cyc(3, &[0, 1, 2])]);
        let s3 = regular_rep(&load_group("sym:3").unwrap());
        assert_eq!((s3.degree(), s3.order_u64()), (6, Some(6)));
        assert!(s3.point_stabilizer(0).is_trivial());
    }

    #[test]
    fn inversions() {
        let iota = inversion_perm(&load_group("elem2:3").unwrap());
        assert!(iota.is_identity());
        let iota = inversion_perm(&load_group("cyclic:4").unwrap());
        assert_eq!(iota, cyc(4, &[1, 3]));
        let s3 = load_group("sym:3").unwrap();
        let iota = inversion_perm(&s3);
        let fixed = (0..6).filter(|&x| iota.apply(x) == x).count();
        assert_eq!(fixed, 4);
    }

    #[test]
    fn joint_orbits() {
        let g = load_group("cyclic:4").unwrap();
        let iota = inversion_perm(&g);
        assert_eq!(joint_orbit_count(&PermGroup::trivial(4), &iota).unwrap(), 3);
        assert_eq!(joint_orbit_count(&PermGroup::trivial(5), &Permutation::identity(5)).unwrap(), 5);
        let fix0 = PermGroup::new(5, vec![cyc(5, &[1, 2]), cyc(5, &[1, 2, 3, 4])]).unwrap();
        assert_eq!(joint_orbit_count(&fix0, &Permutation::identity(5)).unwrap(), 2);
        assert!(joint_orbit_count(&fix0, &iota).is_err());
    }

    fn klein_in_s4() -> (PermGroup, PermGroup) {
        let s4 = PermGroup::symmetric(4).unwrap();
        let v = PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
            ],
        )
        .unwrap();
        (s4, v)
    }

    #[test]
    fn cores() {
        let s3 = load_group("sym:3").unwrap();
        let reg = regular_rep(&s3);
        assert!(core_of(&reg, &reg).unwrap().same_group(&reg));
        let (s4, v) = klein_in_s4();
        assert!(core_of(&s4, &v).unwrap().same_group(&v));
        let s6 = PermGroup::symmetric(6).unwrap();
        assert!(core_of(&s6, &reg).unwrap().is_trivial());
        let outside = PermGroup::new(4, vec![cyc(4, &[0, 1])]).unwrap();
        assert!(core_of(&v, &outside).is_err());
    }

    #[test]
    fn maximality() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let a4 = PermGroup::new(4, vec![cyc(4, &[0, 1, 2]), cyc(4, &[1, 2, 3])]).unwrap();
        assert_eq!(a4.order_u64(), Some(12));
        assert!(is_maximal_subgroup(&s4, &a4).unwrap().maximal);
        let t = PermGroup::new(4, vec![cyc(4, &[0, 1])]).unwrap();
        assert!(!is_maximal_subgroup(&s4, &t).unwrap().maximal);
        let m = is_maximal_subgroup(&s4, &s4).unwrap();
        assert!(m.maximal && m.degenerate);
        // S3 is maximal in S4 (point stabilizer of a primitive group)
        let s3 = PermGroup::new(4, vec![cyc(4, &[1, 2]), cyc(4, &[1, 2, 3])]).unwrap();
        assert!(is_maximal_subgroup(&s4, &s3).unwrap().maximal);
    }

    #[test]
    fn dichotomy_trivial_cases() {
        // the regular C3 has index 2 in Sym(3), so it is maximal
        let c3 = load_group("cyclic:3").unwrap();
        let s3 = PermGroup::symmetric(3).unwrap();
        let rep = normal_orbit_dichotomy_check(&s3, &c3, &PermGroup::trivial(3)).unwrap();
        assert_eq!(rep.branch, Some(DichotomyBranch::LInR));
        let rep = normal_orbit_dichotomy_check(&s3, &c3, &s3).unwrap();
        assert_eq!(rep.orbit, c3.all());
        assert!(rep.holds);
        assert_eq!(rep.branch, Some(DichotomyBranch::OrbitsStabilized));
    }

    #[test]
    fn dichotomy_klein_in_s4() {
        let klein = load_group("elem2:2").unwrap();
        let s4 = PermGroup::symmetric(4).unwrap();
        let a4 = PermGroup::new(4, vec![cyc(4, &[0, 1, 2]), cyc(4, &[1, 2, 3])]).unwrap();
        // elem2:2 labels 0..3 with xor; its regular copy is the Klein subgroup of S4
        let (_, v) = klein_in_s4();
        assert!(regular_rep(&klein).same_group(&v));
        // the Klein group is not maximal in S4 (it lies in a dihedral group)
        assert!(matches!(
            normal_orbit_dichotomy_check(&s4, &klein, &a4),
            Err(Error::Precondition(_))
        ));
        let rep = evaluate_dichotomy(&s4, &klein, &a4);
        assert!(rep.holds);
        assert_eq!(rep.branch, Some(DichotomyBranch::OrbitsStabilized));
    }
}
