//! Ordered partitions and equitable refinement.

use std::collections::VecDeque;

use crate::digraph::Digraph;
use crate::elements::bits_of;

/// An ordered partition of `0..n`. Each cell occupies a run of positions and
/// is named by its first position ("start").
#[derive(Clone, Debug)]
pub(crate) struct Cells {
    n: usize,
    /// Start of the cell containing each vertex.
    cell_of: [u8; 64],
    /// Member mask, meaningful at start positions only.
    mask: [u64; 64],
}

impl Cells {
    /// Cells grouped by color, in ascending color order.
    pub(crate) fn from_colors(n: usize, colors: &[usize]) -> Self {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (colors[v], v));
        let mut cells = Cells { n, cell_of: [0; 64], mask: [0; 64] };
        let mut start = 0;
        for (pos, &v) in order.iter().enumerate() {
            if pos > 0 && colors[v] != colors[order[pos - 1]] {
                start = pos;
            }
            cells.cell_of[v] = start as u8;
            cells.mask[start] |= 1 << v;
        }
        cells
    }

    pub(crate) fn starts(&self) -> impl Iterator<Item = usize> + '_ {
        let mut s = 0;
        std::iter::from_fn(move || {
            if s >= self.n {
                return None;
            }
            let cur = s;
            s += self.mask[cur].count_ones() as usize;
            Some(cur)
        })
    }

    pub(crate) fn mask(&self, start: usize) -> u64 {
        self.mask[start]
    }

    pub(crate) fn is_discrete(&self) -> bool {
        self.starts().count() == self.n
    }

    /// First smallest non-singleton cell.
    pub(crate) fn target(&self) -> Option<usize> {
        self.starts()
            .filter(|&s| self.mask[s].count_ones() > 1)
            .min_by_key(|&s| (self.mask[s].count_ones(), s))
    }

    /// Vertex at each position, for a discrete partition.
    pub(crate) fn labeling(&self) -> Vec<u8> {
        let mut lab = vec![0u8; self.n];
        for v in 0..self.n {
            lab[self.cell_of[v] as usize] = v as u8;
        }
        lab
    }

    /// Split `v` off the front of the cell at `start`.
    pub(crate) fn individualize(&self, start: usize, v: usize) -> Cells {
        let mut c = self.clone();
        let rest = c.mask[start] & !(1 << v);
        c.mask[start] = 1 << v;
        c.mask[start + 1] = rest;
        for u in bits_of(rest) {
            c.cell_of[u] = (start + 1) as u8;
        }
        c
    }

    fn cell_len(&self, start: usize) -> usize {
        self.mask[start].count_ones() as usize
    }
}

/// Running hash of everything refinement did; equal for nodes related by an
/// automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Trace(pub u64);

impl Trace {
    pub(crate) const START: Trace = Trace(0xcbf2_9ce4_8422_2325);

    pub(crate) fn push(&mut self, x: u64) {
        self.0 = (self.0 ^ x).wrapping_mul(0x0100_0000_01b3);
    }
}

/// Refine to the coarsest equitable partition finer than `cells`, using the
/// given splitter cells first.
pub(crate) fn refine(g: &Digraph, directed: bool, cells: &mut Cells, initial: &[usize], trace: &mut Trace) {
    let n = cells.n;
    let mut queued = 0u64;
    let mut queue = VecDeque::new();
    for &s in initial {
        if queued >> s & 1 == 0 {
            queued |= 1 << s;
            queue.push_back(s);
        }
    }
    let mut keyed: Vec<(u32, u8)> = Vec::with_capacity(64);
    while let Some(w) = queue.pop_front() {
        queued &= !(1 << w);
        let wmask = cells.mask[w];
        trace.push(w as u64);
        let mut s = 0;
        while s < n {
            let len = cells.cell_len(s);
            if len > 1 {
                keyed.clear();
                for v in bits_of(cells.mask[s]) {
                    let out = (g.out_row(v) & wmask).count_ones();
                    let key = if directed { out << 8 | (g.in_row(v) & wmask).count_ones() } else { out };
                    keyed.push((key, v as u8));
                }
                let k0 = keyed[0].0;
                if keyed.iter().any(|&(k, _)| k != k0) {
                    keyed.sort_unstable();
                    trace.push(s as u64 | 1 << 32);
                    let mut start = s;
                    let mut i = 0;
                    while i < keyed.len() {
                        let key = keyed[i].0;
                        let mut m = 0u64;
                        while i < keyed.len() && keyed[i].0 == key {
                            m |= 1 << keyed[i].1;
                            i += 1;
                        }
                        cells.mask[start] = m;
                        for v in bits_of(m) {
                            cells.cell_of[v] = start as u8;
                        }
                        trace.push((key as u64) << 8 | m.count_ones() as u64);
                        if queued >> start & 1 == 0 {
                            queued |= 1 << start;
                            queue.push_back(start);
                        }
                        start += m.count_ones() as usize;
                    }
                }
            }
            s += len;
        }
    }
    trace.push(cells.starts().count() as u64 | 2 << 32);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_graph_refines_by_degree() {
        // 0 - 1 - 2
        let g = Digraph::from_rows(vec![0b010, 0b101, 0b010]).unwrap();
        let mut c = Cells::from_colors(3, &[0, 0, 0]);
        let mut t = Trace::START;
        let starts: Vec<usize> = c.starts().collect();
        refine(&g, false, &mut c, &starts, &mut t);
        assert_eq!(c.starts().count(), 2);
        // degree-1 vertices first (smaller key)
        assert_eq!(c.mask(0), 0b101);
        assert_eq!(c.mask(2), 0b010);
        assert_eq!(c.target(), Some(0));
        let mut d = c.individualize(0, 2);
        refine(&g, false, &mut d, &[0], &mut t);
        assert!(d.is_discrete());
        assert_eq!(d.labeling(), vec![2, 0, 1]);
    }
}
