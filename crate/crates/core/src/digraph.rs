//! Digraphs on at most 64 vertices as bit rows.

use std::fmt::Write;

use crate::elements::{bits_of, MAX_ORDER};
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Digraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooLarge { order: n, limit: MAX_ORDER });
        }
        Ok(Digraph { n, out: vec![0; n], inn: vec![0; n] })
    }

    /// From out-neighbour rows (bit `v` of row `u` set iff `(u, v)` is an arc).
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let mut d = Self::empty(rows.len())?;
        let mask = if d.n == 64 { u64::MAX } else { (1u64 << d.n) - 1 };
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::Invalid(format!("row {u} names a vertex out of range")));
            }
            for v in bits_of(row) {
                d.add_arc(u, v);
            }
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        self.out[u] |= 1 << v;
        self.inn[v] |= 1 << u;
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    #[inline]
    pub fn out_row(&self, u: usize) -> u64 {
        self.out[u]
    }

    #[inline]
    pub fn in_row(&self, u: usize) -> u64 {
        self.inn[u]
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.out == self.inn
    }

    /// Whether `p` maps arcs onto arcs.
    pub fn preserved_by(&self, p: &Permutation) -> bool {
        p.degree() == self.n
            && (0..self.n).all(|u| {
                let image = bits_of(self.out[u]).fold(0u64, |acc, v| acc | 1 << p.apply(v));
                self.out[p.apply(u)] == image
            })
    }

    /// One line per vertex: `u: v1 v2 ...`, neighbours ascending.
    pub fn to_adjacency_list(&self) -> String {
        let mut s = String::new();
        for u in 0..self.n {
            write!(s, "{u}:").unwrap();
            for v in bits_of(self.out[u]) {
                write!(s, " {v}").unwrap();
            }
            s.push('\n');
        }
        s
    }
}
