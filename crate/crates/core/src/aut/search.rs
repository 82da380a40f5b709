//! Automorphism group by individualization–refinement with first-path
//! orbit pruning.

use num_bigint::BigUint;

use super::refine::{refine, Cells, Trace};
use crate::digraph::Digraph;
use crate::perm::group::UnionFind;
use crate::perm::Permutation;

pub(crate) struct SearchOutcome {
    /// Vertices individualized along the first path.
    pub base: Vec<usize>,
    /// Generators with the first-path level they were found at.
    pub strong: Vec<(Permutation, usize)>,
    pub order: BigUint,
    pub nodes: usize,
}

struct PathNode {
    cells: Cells,
    target: usize,
    chosen: usize,
}

struct Search<'a> {
    g: &'a Digraph,
    directed: bool,
    colors: &'a [usize],
    /// Trace after refinement at each depth of the first path (index 0 = root).
    traces: Vec<Trace>,
    leaf: Vec<u8>,
    nodes: usize,
}

impl Search<'_> {
    fn child(&mut self, cells: &Cells, target: usize, v: usize, trace: Trace) -> (Cells, Trace) {
        self.nodes += 1;
        let mut c = cells.individualize(target, v);
        let mut t = trace;
        t.push(target as u64 | 3 << 32);
        refine(self.g, self.directed, &mut c, &[target], &mut t);
        (c, t)
    }

    fn leaf_map(&self, cells: &Cells) -> Option<Permutation> {
        let lab = cells.labeling();
        let mut images = vec![0usize; lab.len()];
        for (p, &v) in self.leaf.iter().enumerate() {
            images[v as usize] = lab[p] as usize;
        }
        let gamma = Permutation::from_images(&images).ok()?;
        let colors_ok = (0..images.len()).all(|x| self.colors[x] == self.colors[images[x]]);
        (colors_ok && self.g.preserved_by(&gamma)).then_some(gamma)
    }

    /// Find a leaf below `cells` (at `depth`) that is an automorphic image of
    /// the first leaf.
    fn find_automorphism(&mut self, cells: &Cells, depth: usize, trace: Trace) -> Option<Permutation> {
        if cells.is_discrete() {
            return self.leaf_map(cells);
        }
        if depth + 1 >= self.traces.len() {
            return None;
        }
        let target = cells.target()?;
        for v in crate::elements::bits_of(cells.mask(target)) {
            let (c, t) = self.child(cells, target, v, trace);
            if t != self.traces[depth + 1] {
                continue;
            }
            if let Some(gamma) = self.find_automorphism(&c, depth + 1, t) {
                return Some(gamma);
            }
        }
        None
    }
}

/// Generators and order of the color-preserving automorphism group. With
/// `stop_at_first`, returns as soon as one non-identity automorphism is
/// found (the order is then meaningless).
pub(crate) fn search(g: &Digraph, colors: &[usize], stop_at_first: bool) -> SearchOutcome {
    let n = g.order();
    let directed = !g.is_symmetric();
    let mut root = Cells::from_colors(n, colors);
    let mut trace = Trace::START;
    let starts: Vec<usize> = root.starts().collect();
    refine(g, directed, &mut root, &starts, &mut trace);

    let mut s = Search { g, directed, colors, traces: vec![trace], leaf: Vec::new(), nodes: 1 };
    let mut path: Vec<PathNode> = Vec::new();
    let mut node = root;
    let mut t = trace;
    while let Some(target) = node.target() {
        let chosen = node.mask(target).trailing_zeros() as usize;
        let (c, ct) = s.child(&node, target, chosen, t);
        path.push(PathNode { cells: node, target, chosen });
        s.traces.push(ct);
        node = c;
        t = ct;
    }
    s.leaf = node.labeling();

    let mut strong: Vec<(Permutation, usize)> = Vec::new();
    let mut order = BigUint::from(1u32);
    let mut uf = UnionFind::new(n);
    for level in (0..path.len()).rev() {
        let PathNode { cells, target, chosen } = &path[level];
        let mut failed: Vec<usize> = Vec::new();
        for w in crate::elements::bits_of(cells.mask(*target)) {
            if w == *chosen || uf.find(w) == uf.find(*chosen) {
                continue;
            }
            if failed.iter().any(|&f| uf.find(f) == uf.find(w)) {
                continue;
            }
            let (c, ct) = s.child(cells, *target, w, s.traces[level]);
            let found = if ct == s.traces[level + 1] { s.find_automorphism(&c, level + 1, ct) } else { None };
            match found {
                Some(gamma) => {
                    for x in 0..n {
                        uf.union(x, gamma.apply(x));
                    }
                    strong.push((gamma, level));
                    if stop_at_first {
                        return SearchOutcome { base: vec![], strong, order: BigUint::from(0u32), nodes: s.nodes };
                    }
                }
                None => failed.push(w),
            }
        }
        let root = uf.find(*chosen);
        let orbit = (0..n).filter(|&x| uf.find(x) == root).count();
        order *= orbit;
    }
    let base = path.iter().map(|p| p.chosen).collect();
    SearchOutcome { base, strong, order, nodes: s.nodes }
}
