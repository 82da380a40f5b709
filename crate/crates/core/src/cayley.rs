//! Cayley digraphs, equitable partitions and odd quotient graphs.

use crate::digraph::Digraph;
use crate::elements::{bits_of, ElementSet};
use crate::error::{Error, Result};
use crate::group::{quotient, GroupTable, Subgroup};
use crate::partition::Partition;

/// `Cay(R, S)`: arc `(u, v)` iff `v u^-1 ∈ S`, so the out-neighbours of `u`
/// are `Su`.
#[derive(Clone, Debug)]
pub struct CayleyDigraph<'g> {
    pub group: &'g GroupTable,
    pub connection: ElementSet,
    pub digraph: Digraph,
    pub is_graph: bool,
    pub loops_present: bool,
}

pub fn build_cayley(g: &GroupTable, s: ElementSet) -> Result<CayleyDigraph<'_>> {
    if !s.is_subset(g.all()) {
        return Err(Error::Invalid("connection set names elements outside the group".into()));
    }
    let rows: Vec<u64> = (0..g.order()).map(|u| s.right_mul(g, u).bits()).collect();
    let digraph = Digraph::from_rows(rows)?;
    debug_assert!((0..g.order()).all(|u| digraph.out_row(u).count_ones() as usize == s.len()));
    Ok(CayleyDigraph {
        group: g,
        connection: s,
        is_graph: s.is_inverse_closed(g),
        loops_present: s.contains(0),
        digraph,
    })
}

/// Outcome of an equitability test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equitability {
    /// `matrix[i][j]`: out-neighbours in cell `j` of any vertex in cell `i`.
    Equitable(Vec<Vec<usize>>),
    /// Vertices `u`, `v` of cell `from` see different numbers of
    /// out-neighbours in cell `to`.
    NotEquitable { from: usize, to: usize, u: usize, v: usize },
}

impl Equitability {
    pub fn is_equitable(&self) -> bool {
        matches!(self, Equitability::Equitable(_))
    }
}

pub fn is_equitable(d: &Digraph, parts: &Partition) -> Result<Equitability> {
    if parts.degree() != d.order() {
        return Err(Error::DegreeMismatch { expected: d.order(), got: parts.degree() });
    }
    let cells = parts.cells();
    let mut matrix = vec![vec![0usize; cells.len()]; cells.len()];
    for (i, ci) in cells.iter().enumerate() {
        let first = ci.first().expect("nonempty cell");
        for (j, cj) in cells.iter().enumerate() {
            let want = (d.out_row(first) & cj.bits()).count_ones() as usize;
            if let Some(v) = ci.iter().find(|&v| (d.out_row(v) & cj.bits()).count_ones() as usize != want) {
                return Ok(Equitability::NotEquitable { from: i, to: j, u: first, v });
            }
            matrix[i][j] = want;
        }
    }
    Ok(Equitability::Equitable(matrix))
}

/// Graph on the cells with an edge between distinct cells `B`, `C` iff
/// `e(B, C)` is odd. Diagonal counts are kept in `e_matrix` only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddQuotientGraph {
    pub parts: Partition,
    pub e_matrix: Vec<Vec<usize>>,
    pub edges: Vec<Vec<bool>>,
}

pub fn odd_quotient(d: &CayleyDigraph<'_>, parts: &Partition) -> Result<OddQuotientGraph> {
    if !d.is_graph {
        return Err(Error::Invalid("not a graph".into()));
    }
    if !parts.equal_sized() {
        return Err(Error::Invalid("cells of unequal size".into()));
    }
    let e_matrix = match is_equitable(&d.digraph, parts)? {
        Equitability::Equitable(m) => m,
        Equitability::NotEquitable { .. } => return Err(Error::Invalid("partition not equitable".into())),
    };
    let t = e_matrix.len();
    for i in 0..t {
        for j in 0..t {
            assert_eq!(e_matrix[i][j], e_matrix[j][i], "e(B,C) = e(C,B) for equal cells");
        }
    }
    let edges = (0..t).map(|i| (0..t).map(|j| i != j && e_matrix[i][j] % 2 == 1).collect()).collect();
    Ok(OddQuotientGraph { parts: parts.clone(), e_matrix, edges })
}

/// Parity of `|S ∩ Kx|` for each coset of a normal subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityProfile {
    /// Cosets ordered by smallest element; the first is `K`.
    pub cosets: Vec<ElementSet>,
    pub odd: Vec<bool>,
}

pub fn parity_profile(g: &GroupTable, s: ElementSet, k: &Subgroup) -> Result<ParityProfile> {
    let q = quotient(g, k)?;
    let odd = q.cosets.iter().map(|c| (*c & s).len() % 2 == 1).collect();
    Ok(ParityProfile { cosets: q.cosets, odd })
}

/// Cosets of a subgroup as a partition (right cosets `Kx`).
pub fn coset_partition(g: &GroupTable, k: &Subgroup) -> Partition {
    let mut cells: Vec<ElementSet> = Vec::new();
    let mut covered = ElementSet::EMPTY;
    for x in 0..g.order() {
        if !covered.contains(x) {
            let c = k.members.right_mul(g, x);
            covered = covered | c;
            cells.push(c);
        }
    }
    Partition::new(g.order(), cells).expect("cosets partition the group")
}

/// Neighbours of `u` in a Cayley digraph, as a set.
pub fn neighbourhood(d: &CayleyDigraph<'_>, u: usize) -> ElementSet {
    ElementSet(bits_of(d.digraph.out_row(u)).fold(0, |acc, v| acc | 1 << v))
}
