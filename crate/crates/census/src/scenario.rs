//! Transitive overgroups of the regular representation and the data the
//! quotient counts need.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use grr_core::aut::cayley_automorphisms;
use grr_core::comb::OrbitFamily;
use grr_core::group::{automorphisms, classify, quotient, Quotient};
use grr_core::perm::{core_of, inversion_perm, is_maximal_subgroup, orbits_of, regular_rep};
use grr_core::{ElementSet, GroupTable, PermGroup, Permutation, Subgroup};
use serde::Serialize;

use crate::census::{Mode, SetSpace, GRAPH_CAP};
use crate::error::{CensusError, Result};

/// Largest group order accepted.
pub const SCENARIO_CAP: usize = 24;
const AUT_LIMIT: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// `Sym(R)`.
    Full,
    /// `⟨R, α⟩` for group automorphisms `α`, plus the holomorph.
    Aut,
    /// `Aut(Cay(R, S))` for inverse-closed `S` that are not GRRs.
    GraphAut,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::Full, Strategy::Aut, Strategy::GraphAut];
}

impl FromStr for Strategy {
    type Err = CensusError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Strategy::Full),
            "aut" => Ok(Strategy::Aut),
            "graph-aut" => Ok(Strategy::GraphAut),
            _ => Err(CensusError::Invalid(format!("unknown strategy {s:?}"))),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Full => "full",
            Strategy::Aut => "aut",
            Strategy::GraphAut => "graph-aut",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScenarioFlags {
    pub transitive: bool,
    /// `R < G`.
    pub proper: bool,
    /// `None` when `G` is too large to decide.
    pub r_maximal: Option<bool>,
    /// `R/K` is neither abelian of exponent > 2 nor generalized dicyclic.
    pub quotient_grr_eligible: bool,
    /// `K = R`.
    pub degenerate: bool,
    /// The point stabilizer moves some `K`-coset.
    pub h_nontrivial: bool,
}

#[derive(Clone, Debug)]
pub struct OvergroupScenario {
    pub strategy: Strategy,
    /// Where the overgroup came from, e.g. the connection set.
    pub label: String,
    pub overgroup: PermGroup,
    pub regular: PermGroup,
    /// Stabilizer of the identity vertex.
    pub stabilizer: PermGroup,
    pub core: Subgroup,
    pub core_perm: PermGroup,
    pub family: OrbitFamily,
    pub flags: ScenarioFlags,
}

impl OvergroupScenario {
    pub fn quotient(&self) -> &Quotient {
        &self.family.quotient
    }

    /// Preimages of the `H`-orbits in `R`.
    pub fn preimages(&self) -> Vec<ElementSet> {
        self.family
            .orbits
            .iter()
            .map(|&o| self.family.preimage_cells(o).into_iter().fold(ElementSet::EMPTY, |a, b| a | b))
            .collect()
    }
}

/// Populate a scenario for `g` acting on the elements of `table`.
pub fn scenario(table: &GroupTable, g: PermGroup, strategy: Strategy, label: String) -> Result<OvergroupScenario> {
    let r = table.order();
    let regular = regular_rep(table);
    if !g.contains_group(&regular) {
        return Err(CensusError::Invalid(format!("{label}: overgroup does not contain R")));
    }
    let core_perm = core_of(&g, &regular)?;
    let core_elements = core_perm.elements(r as u64)?;
    let core = Subgroup::new(table, ElementSet::from_elements(core_elements.iter().map(|p| p.apply(0))))?;
    let quot = quotient(table, &core)?;
    let stabilizer = g.point_stabilizer(0);
    let m = quot.table.order();

    // action of the stabilizer on the K-cosets, checked to be well defined
    let mut h_gens: Vec<Permutation> = Vec::new();
    for gamma in stabilizer.generators() {
        let mut images = vec![usize::MAX; m];
        for x in 0..r {
            let (i, j) = (quot.projection[x], quot.projection[gamma.apply(x)]);
            if images[i] == usize::MAX {
                images[i] = j;
            } else if images[i] != j {
                return Err(CensusError::Invalid(format!("{label}: K-cosets are not blocks")));
            }
        }
        h_gens.push(Permutation::from_images(&images)?);
    }
    let h_nontrivial = h_gens.iter().any(|h| !h.is_identity());
    let orbits: Vec<ElementSet> = orbits_of(m, &h_gens).cells().to_vec();
    let mut with_iota = h_gens.clone();
    with_iota.push(inversion_perm(&quot.table));
    let kappa = orbits_of(m, &with_iota).len();

    let quotient_grr_eligible = !classify(&quot.table).grr_family_excluded;
    let degenerate = core.is_whole();
    let r_maximal = match is_maximal_subgroup(&g, &regular) {
        Ok(mx) => Some(mx.maximal && !mx.degenerate),
        Err(grr_core::Error::Precondition(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let flags = ScenarioFlags {
        transitive: g.is_transitive(),
        proper: g.order() > regular.order(),
        r_maximal,
        quotient_grr_eligible,
        degenerate,
        h_nontrivial,
    };
    let family = OrbitFamily {
        quotient: quot,
        orbits,
        kappa,
        quotient_bound_eligible: quotient_grr_eligible && !degenerate && h_nontrivial,
    };
    Ok(OvergroupScenario { strategy, label, overgroup: g, regular, stabilizer, core, core_perm, family, flags })
}

fn right_translations_plus(table: &GroupTable, extra: &[Permutation]) -> Result<PermGroup> {
    let mut gens = regular_rep(table).generators().to_vec();
    gens.extend(extra.iter().cloned());
    Ok(PermGroup::new(table.order(), gens)?)
}

fn check_cap(table: &GroupTable) -> Result<()> {
    if table.order() > SCENARIO_CAP {
        return Err(CensusError::Cap { what: "group order", got: table.order(), limit: SCENARIO_CAP });
    }
    Ok(())
}

/// All scenarios for one strategy, in a deterministic order.
pub fn build_scenarios(table: &GroupTable, strategy: Strategy) -> Result<Vec<OvergroupScenario>> {
    check_cap(table)?;
    let r = table.order();
    match strategy {
        Strategy::Full => {
            if r <= 2 {
                return Ok(Vec::new());
            }
            Ok(vec![scenario(table, PermGroup::symmetric(r)?, strategy, "Sym(R)".into())?])
        }
        Strategy::Aut => {
            let auts = automorphisms(table, AUT_LIMIT)?;
            let perms: Vec<Permutation> =
                auts.iter().map(|a| Permutation::from_images(&a.images)).collect::<grr_core::Result<_>>()?;
            let mut by_order: Vec<(num_bigint::BigUint, String, PermGroup)> = Vec::new();
            let mut push = |g: PermGroup, label: String| {
                let order = g.order();
                if order > num_bigint::BigUint::from(r) && !by_order.iter().any(|(o, _, _)| *o == order) {
                    by_order.push((order, label, g));
                }
            };
            for (k, alpha) in perms.iter().enumerate().skip(1) {
                push(right_translations_plus(table, std::slice::from_ref(alpha))?, format!("<R, alpha{k}>"));
            }
            push(right_translations_plus(table, &perms)?, "Hol(R)".into());
            by_order.sort_by(|a, b| a.0.cmp(&b.0));
            by_order.into_iter().map(|(_, label, g)| scenario(table, g, strategy, label)).collect()
        }
        Strategy::GraphAut => {
            let space = SetSpace::new(table, Mode::Graph)?;
            if space.bits() > GRAPH_CAP {
                return Err(CensusError::Cap { what: "c(R)", got: space.bits(), limit: GRAPH_CAP });
            }
            // bucket by (order, orbit partition of the stabilizer) before the
            // exact equality test
            let mut seen: HashMap<(num_bigint::BigUint, Vec<u64>), Vec<usize>> = HashMap::new();
            let mut found: Vec<(String, PermGroup)> = Vec::new();
            for i in 0..1u64 << space.bits() {
                let s = space.set(i);
                let aut = cayley_automorphisms(table, s)?.group;
                if aut.order() == num_bigint::BigUint::from(r) {
                    continue;
                }
                let key = (aut.order(), aut.point_stabilizer(0).orbits().cells().iter().map(|c| c.bits()).collect());
                let bucket = seen.entry(key).or_default();
                if bucket.iter().any(|&k| found[k].1.same_group(&aut)) {
                    continue;
                }
                bucket.push(found.len());
                found.push((format!("S={:?}", s.iter().collect::<Vec<_>>()), aut));
            }
            found.into_iter().map(|(label, g)| scenario(table, g, strategy, label)).collect()
        }
    }
}

/// JSON view of a scenario.
#[derive(Clone, Debug, Serialize)]
pub struct ScenarioSummary {
    pub group: String,
    pub strategy: Strategy,
    pub label: String,
    pub overgroup_order: String,
    pub overgroup_generators: Vec<String>,
    pub core: Vec<usize>,
    pub quotient_order: usize,
    /// `H`-orbits as lists of coset indices (coset 0 is `K`).
    pub h_orbits: Vec<Vec<usize>>,
    /// Their preimages in `R`.
    pub preimages: Vec<Vec<usize>>,
    pub kappa: usize,
    pub flags: ScenarioFlags,
}

impl ScenarioSummary {
    pub fn new(table: &GroupTable, s: &OvergroupScenario) -> Self {
        ScenarioSummary {
            group: table.name().to_string(),
            strategy: s.strategy,
            label: s.label.clone(),
            overgroup_order: s.overgroup.order().to_string(),
            overgroup_generators: s.overgroup.generators().iter().map(|p| p.to_string()).collect(),
            core: s.core.members.iter().collect(),
            quotient_order: s.quotient().table.order(),
            h_orbits: s.family.orbits.iter().map(|o| o.iter().collect()).collect(),
            preimages: s.preimages().iter().map(|o| o.iter().collect()).collect(),
            kappa: s.family.kappa,
            flags: s.flags,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use grr_core::load_group;

    #[test]
    fn full_on_sym3() {
        let g = load_group("sym:3").unwrap();
        let sc = build_scenarios(&g, Strategy::Full).unwrap();
        assert_eq!(sc.len(), 1);
        let s = &sc[0];
        assert!(s.core.is_trivial());
        assert_eq!(s.family.kappa, 2);
        assert_eq!(s.family.orbits.len(), 2);
        assert!(s.flags.transitive && s.flags.proper);
        assert_eq!(s.flags.r_maximal, Some(false));
    }

    #[test]
    fn aut_extensions_of_klein() {
        let g = load_group("elem2:2").unwrap();
        let orders: Vec<u64> =
            build_scenarios(&g, Strategy::Aut).unwrap().iter().map(|s| s.overgroup.order_u64().unwrap()).collect();
        assert_eq!(orders, [8, 12, 24]);
    }

    #[test]
    fn normal_regular_subgroup_is_degenerate() {
        // R = C3 is normal in Sym(3) = Hol(C3), so K = R
        let g = load_group("cyclic:3").unwrap();
        let sc = build_scenarios(&g, Strategy::Aut).unwrap();
        assert_eq!(sc.len(), 1);
        assert!(sc[0].flags.degenerate);
        assert!(!sc[0].family.quotient_bound_eligible);
        assert_eq!(sc[0].family.orbits.len(), 1);
    }

    #[test]
    fn graph_aut_scenarios_are_distinct() {
        let g = load_group("cyclic:4").unwrap();
        let sc = build_scenarios(&g, Strategy::GraphAut).unwrap();
        assert!(!sc.is_empty());
        for (i, a) in sc.iter().enumerate() {
            for b in &sc[i + 1..] {
                assert!(!a.overgroup.same_group(&b.overgroup));
            }
        }
        assert!(build_scenarios(&load_group("cyclic:25").unwrap(), Strategy::Full).is_err());
    }
}
