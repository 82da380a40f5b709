//! Exhaustive and sampled censuses of connection sets.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use grr_core::aut::{canonical_form, classify_cayley, CANON_LIMIT};
use grr_core::cayley::build_cayley;
use grr_core::comb::{atom_union, atoms};
use grr_core::group::automorphisms;
use grr_core::{ElementSet, GroupTable};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{CensusError, Result};

/// Largest `c(R)` for an exhaustive graph census.
pub const GRAPH_CAP: usize = 20;
/// Largest `r` for an exhaustive digraph census.
pub const DIGRAPH_CAP: usize = 16;
/// Connection sets per parallel work unit.
pub const CHUNK: u64 = 1 << 10;
/// Two-sided 95% normal quantile.
pub const Z95: f64 = 1.959963984540054;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Inverse-closed connection sets; counts GRRs.
    Graph,
    /// All connection sets; counts DRRs.
    Digraph,
}

impl FromStr for Mode {
    type Err = CensusError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph" => Ok(Mode::Graph),
            "digraph" => Ok(Mode::Digraph),
            _ => Err(CensusError::Invalid(format!("unknown mode {s:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Graph => "graph",
            Mode::Digraph => "digraph",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exhaustive,
    Sample,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    /// GRRs in graph mode, DRRs in digraph mode.
    pub drr_or_grr: u64,
    pub normal: u64,
    /// Sets whose Cayley (di)graph has more automorphisms than `R`.
    pub non_regular: u64,
}

impl Counts {
    fn merge(self, o: Counts) -> Counts {
        Counts {
            drr_or_grr: self.drr_or_grr + o.drr_or_grr,
            normal: self.normal + o.normal,
            non_regular: self.non_regular + o.non_regular,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Proportion {
    /// `num / den`, unreduced.
    Exact { num: u64, den: u64 },
    /// Normal-approximation interval `value ± half_width`.
    Estimate { value: f64, half_width: f64, confidence: f64 },
}

impl Proportion {
    pub fn value(&self) -> f64 {
        match *self {
            Proportion::Exact { num, den } => num as f64 / den as f64,
            Proportion::Estimate { value, .. } => value,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub group: String,
    pub order: usize,
    pub mode: Mode,
    pub method: Method,
    /// `2^r`, `2^{c(R)}`, or the sample size.
    pub total: u64,
    pub counts: Counts,
    /// Proportion of DRRs (digraph mode) or GRRs (graph mode).
    pub proportion: Proportion,
    pub seed: Option<u64>,
    pub elapsed_ms: f64,
}

impl CensusRecord {
    /// The record as JSON with the timing zeroed, for comparisons.
    pub fn without_timing(&self) -> CensusRecord {
        CensusRecord { elapsed_ms: 0.0, ..self.clone() }
    }
}

/// How connection sets are indexed by integers for one group and mode.
pub struct SetSpace {
    mode: Mode,
    atoms: Vec<ElementSet>,
    bits: usize,
}

impl SetSpace {
    pub fn new(g: &GroupTable, mode: Mode) -> Result<Self> {
        match mode {
            Mode::Graph => {
                let atoms = atoms(g, g.all())?;
                Ok(SetSpace { mode, bits: atoms.len(), atoms })
            }
            Mode::Digraph => Ok(SetSpace { mode, atoms: Vec::new(), bits: g.order() }),
        }
    }

    /// `log2` of the number of sets.
    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn set(&self, index: u64) -> ElementSet {
        match self.mode {
            Mode::Graph => atom_union(&self.atoms, index),
            Mode::Digraph => ElementSet(index),
        }
    }

    fn check_exhaustive(&self, g: &GroupTable) -> Result<()> {
        match self.mode {
            Mode::Graph if self.bits > GRAPH_CAP => Err(CensusError::Cap { what: "c(R)", got: self.bits, limit: GRAPH_CAP }),
            Mode::Digraph if g.order() > DIGRAPH_CAP => {
                Err(CensusError::Cap { what: "group order", got: g.order(), limit: DIGRAPH_CAP })
            }
            _ => Ok(()),
        }
    }
}

fn tally(g: &GroupTable, s: ElementSet) -> Counts {
    let class = classify_cayley(g, s).expect("connection set within the group");
    Counts {
        drr_or_grr: u64::from(class.drr),
        normal: u64::from(class.normal),
        non_regular: u64::from(!class.drr),
    }
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        b = b.num_threads(j.max(1));
    }
    b.build().map_err(|e| CensusError::Invalid(e.to_string()))
}

/// Classify every index in `range`, in contiguous chunks of [`CHUNK`].
fn tally_range(g: &GroupTable, jobs: Option<usize>, range: std::ops::Range<u64>, set_of: impl Fn(u64) -> ElementSet + Sync) -> Result<Counts> {
    let chunks: Vec<std::ops::Range<u64>> = (range.start..range.end)
        .step_by(CHUNK as usize)
        .map(|s| s..(s + CHUNK).min(range.end))
        .collect();
    let run = || {
        chunks
            .par_iter()
            .map(|c| c.clone().map(|i| tally(g, set_of(i))).fold(Counts::default(), Counts::merge))
            .collect::<Vec<Counts>>()
            .into_iter()
            .fold(Counts::default(), Counts::merge)
    };
    Ok(match jobs {
        Some(1) => chunks
            .iter()
            .map(|c| c.clone().map(|i| tally(g, set_of(i))).fold(Counts::default(), Counts::merge))
            .fold(Counts::default(), Counts::merge),
        _ => pool(jobs)?.install(run),
    })
}

/// Classify every connection set. `jobs = Some(1)` runs serially on the
/// calling thread; `None` uses rayon's default worker count.
pub fn exhaustive_census(g: &GroupTable, mode: Mode, jobs: Option<usize>) -> Result<CensusRecord> {
    let start = Instant::now();
    let space = SetSpace::new(g, mode)?;
    space.check_exhaustive(g)?;
    let total = 1u64 << space.bits();
    let counts = tally_range(g, jobs, 0..total, |i| space.set(i))?;
    Ok(CensusRecord {
        group: g.name().to_string(),
        order: g.order(),
        mode,
        method: Method::Exhaustive,
        total,
        counts,
        proportion: Proportion::Exact { num: counts.drr_or_grr, den: total },
        seed: None,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// The `j`-th sampled index: one fair bit per atom (graph mode) or per
/// element (digraph mode). Sample `j` reads word `j mod CHUNK` of the ChaCha
/// stream `j / CHUNK` under `seed`, so any sample can be regenerated alone.
pub fn sample_index(seed: u64, j: u64, bits: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(j / CHUNK);
    rng.set_word_pos(u128::from(j % CHUNK) * 2);
    let x = rng.next_u64();
    if bits >= 64 {
        x
    } else {
        x & ((1u64 << bits) - 1)
    }
}

/// Tallies for samples `range` of the stream keyed by `seed`. Disjoint
/// ranges add up to the tally of their union.
pub fn sample_counts(g: &GroupTable, mode: Mode, seed: u64, range: std::ops::Range<u64>, jobs: Option<usize>) -> Result<Counts> {
    let space = SetSpace::new(g, mode)?;
    tally_range(g, jobs, range, |j| space.set(sample_index(seed, j, space.bits())))
}

/// Point estimate and 95% half-width for `hits` out of `n`.
pub fn estimate(hits: u64, n: u64) -> Proportion {
    let p = hits as f64 / n as f64;
    Proportion::Estimate { value: p, half_width: Z95 * (p * (1.0 - p) / n as f64).sqrt(), confidence: 0.95 }
}

pub fn monte_carlo_census(g: &GroupTable, mode: Mode, samples: u64, seed: u64, jobs: Option<usize>) -> Result<CensusRecord> {
    if samples == 0 {
        return Err(CensusError::Invalid("samples must be at least 1".into()));
    }
    let start = Instant::now();
    let counts = sample_counts(g, mode, seed, 0..samples, jobs)?;
    Ok(CensusRecord {
        group: g.name().to_string(),
        order: g.order(),
        mode,
        method: Method::Sample,
        total: samples,
        counts,
        proportion: estimate(counts.drr_or_grr, samples),
        seed: Some(seed),
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnlabeledCensus {
    pub group: String,
    pub labeled_total: u64,
    pub labeled_grr: u64,
    pub iso_classes: u64,
    pub grr_classes: u64,
    pub aut_r: u64,
    /// `grr_classes / iso_classes`.
    pub ratio: f64,
}

/// Limit handed to the group-automorphism enumeration.
const AUT_R_LIMIT: usize = 1 << 20;

/// Bucket every labeled Cayley graph by isomorphism class.
pub fn unlabeled_census(g: &GroupTable) -> Result<UnlabeledCensus> {
    if g.order() > CANON_LIMIT {
        return Err(CensusError::Cap { what: "group order", got: g.order(), limit: CANON_LIMIT });
    }
    let space = SetSpace::new(g, Mode::Graph)?;
    let total = 1u64 << space.bits();
    let mut classes: HashMap<grr_core::aut::CanonicalForm, bool> = HashMap::new();
    let mut labeled_grr = 0;
    for i in 0..total {
        let s = space.set(i);
        let grr = classify_cayley(g, s)?.drr;
        labeled_grr += u64::from(grr);
        let form = canonical_form(&build_cayley(g, s)?.digraph)?;
        let prev = classes.insert(form, grr);
        assert!(prev.is_none_or(|p| p == grr), "GRR is an isomorphism invariant");
    }
    let iso_classes = classes.len() as u64;
    let grr_classes = classes.values().filter(|&&b| b).count() as u64;
    let aut_r = automorphisms(g, AUT_R_LIMIT)?.len() as u64;
    assert!(iso_classes - grr_classes <= total - labeled_grr);
    assert!(grr_classes * aut_r >= labeled_grr);
    Ok(UnlabeledCensus {
        group: g.name().to_string(),
        labeled_total: total,
        labeled_grr,
        iso_classes,
        grr_classes,
        aut_r,
        ratio: grr_classes as f64 / iso_classes as f64,
    })
}
