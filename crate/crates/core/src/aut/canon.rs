//! Canonical forms for small digraphs.

use super::refine::{refine, Cells, Trace};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::perm::group::UnionFind;
use crate::perm::{Permutation, StabChain};

/// Canonical forms are refused above this order.
pub const CANON_LIMIT: usize = 10;

/// Relabeled adjacency rows (bit `q` of row `p` set iff `p -> q`), minimal
/// over all leaves of the refinement tree. Two digraphs are isomorphic iff
/// their forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub rows: Vec<u64>,
}

struct Canon<'a> {
    g: &'a Digraph,
    directed: bool,
    aut_gens: Vec<Permutation>,
    best: Option<Vec<u64>>,
}

impl Canon<'_> {
    fn leaf(&mut self, cells: &Cells) {
        let lab = cells.labeling();
        let rows: Vec<u64> = lab
            .iter()
            .map(|&u| lab.iter().enumerate().filter(|&(_, &v)| self.g.has_arc(u as usize, v as usize)).fold(0u64, |acc, (q, _)| acc | 1 << q))
            .collect();
        if self.best.as_ref().is_none_or(|b| rows < *b) {
            self.best = Some(rows);
        }
    }

    fn explore(&mut self, cells: &Cells, path: &mut Vec<usize>, trace: Trace) {
        let Some(target) = cells.target() else {
            self.leaf(cells);
            return;
        };
        let n = self.g.order();
        let stab = StabChain::with_base_prefix(n, &self.aut_gens, path).stabilizer_generators(path.len());
        let mut uf = UnionFind::new(n);
        for gamma in &stab {
            for x in 0..n {
                uf.union(x, gamma.apply(x));
            }
        }
        let mut seen: Vec<usize> = Vec::new();
        for v in crate::elements::bits_of(cells.mask(target)) {
            let root = uf.find(v);
            if seen.contains(&root) {
                continue;
            }
            seen.push(root);
            let mut c = cells.individualize(target, v);
            let mut t = trace;
            t.push(target as u64 | 3 << 32);
            refine(self.g, self.directed, &mut c, &[target], &mut t);
            path.push(v);
            self.explore(&c, path, t);
            path.pop();
        }
    }
}

/// Canonical form of a digraph with at most [`CANON_LIMIT`] vertices.
pub fn canonical_form(d: &Digraph) -> Result<CanonicalForm> {
    let n = d.order();
    if n > CANON_LIMIT {
        return Err(Error::TooLarge { order: n, limit: CANON_LIMIT });
    }
    let aut = super::automorphism_group(d, None)?;
    let mut canon = Canon { g: d, directed: !d.is_symmetric(), aut_gens: aut.group.generators().to_vec(), best: None };
    let mut root = Cells::from_colors(n, &vec![0; n]);
    let mut trace = Trace::START;
    let starts: Vec<usize> = root.starts().collect();
    refine(d, canon.directed, &mut root, &starts, &mut trace);
    canon.explore(&root, &mut Vec::new(), trace);
    Ok(CanonicalForm { rows: canon.best.unwrap_or_default() })
}
