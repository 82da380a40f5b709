use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{Permutation, StabChain};
use crate::elements::{ElementSet, MAX_ORDER};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A permutation group given by generators, with its stabilizer chain built
/// at construction.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree > MAX_ORDER {
            return Err(Error::TooLarge { order: degree, limit: MAX_ORDER });
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, got: g.degree() });
            }
        }
        let generators: Vec<Permutation> = generators.into_iter().filter(|g| !g.is_identity()).collect();
        let chain = StabChain::new(degree, &generators);
        Ok(PermGroup { degree, generators, chain })
    }

    /// Group with a base and strong generating set known to be complete
    /// (`strong[i].1` is the deepest base level the generator fixes up to).
    pub(crate) fn from_bsgs(degree: usize, base: &[usize], strong: Vec<(Permutation, usize)>) -> Self {
        let generators = strong.iter().map(|(g, _)| g.clone()).collect();
        let chain = StabChain::from_bsgs(degree, base, strong);
        PermGroup { degree, generators, chain }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, vec![]).expect("valid degree")
    }

    /// `Sym(n)`, generated by a transposition and an `n`-cycle.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n <= 1 {
            return Self::new(n, vec![]);
        }
        let t = Permutation::from_fn(n, |x| match x {
            0 => 1,
            1 => 0,
            _ => x,
        });
        let c = Permutation::from_fn(n, |x| (x + 1) % n);
        Self::new(n, vec![t, c])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn order(&self) -> BigUint {
        self.chain.order()
    }

    /// Order as a `u64` when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.chain.contains(p)
    }

    /// Whether every generator of `other` lies in this group.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// Same set of permutations.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.order() == other.order() && self.contains_group(other)
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// All elements, refusing groups larger than `limit`.
    pub fn elements(&self, limit: u64) -> Result<Vec<Permutation>> {
        let order = self.order();
        match order.to_u64() {
            Some(n) if n <= limit => {
                let mut out = Vec::with_capacity(n as usize);
                self.chain.for_each_element(|p| out.push(p.clone()));
                Ok(out)
            }
            _ => Err(Error::Precondition(format!("group of order {order} exceeds enumeration limit {limit}"))),
        }
    }

    /// Smallest normal subgroup of `self` containing `gens`.
    pub fn normal_closure(&self, gens: &[Permutation]) -> Result<PermGroup> {
        let mut closure = PermGroup::new(self.degree, gens.to_vec())?;
        loop {
            let fresh: Vec<Permutation> = closure
                .generators
                .iter()
                .flat_map(|x| self.generators.iter().map(move |t| x.conjugate_by(t)))
                .filter(|c| !closure.contains(c))
                .collect();
            if fresh.is_empty() {
                return Ok(closure);
            }
            let mut all = closure.generators.clone();
            all.push(fresh[0].clone());
            closure = PermGroup::new(self.degree, all)?;
        }
    }

    pub fn orbit(&self, p: usize) -> ElementSet {
        let mut orbit = ElementSet::singleton(p);
        let mut queue = vec![p];
        while let Some(x) = queue.pop() {
            for g in &self.generators {
                let y = g.apply(x);
                if !orbit.contains(y) {
                    orbit.insert(y);
                    queue.push(y);
                }
            }
        }
        orbit
    }

    /// Orbits by union-find over generator images, cells ordered by
    /// smallest point.
    pub fn orbits(&self) -> Partition {
        orbits_of(self.degree, &self.generators)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// Stabilizer of `p`, from a chain with `p` as first base point.
    pub fn point_stabilizer(&self, p: usize) -> PermGroup {
        let chain = StabChain::with_base_prefix(self.degree, &self.generators, &[p]);
        let stab = PermGroup::new(self.degree, chain.stabilizer_generators(1)).expect("same degree");
        assert_eq!(
            self.order(),
            stab.order() * self.orbit(p).len(),
            "orbit-stabilizer"
        );
        stab
    }

    /// Whether every part is a block: each generator maps each part onto a
    /// part or off it entirely.
    pub fn blocks_check(&self, parts: &Partition) -> Result<bool> {
        if parts.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, got: parts.degree() });
        }
        if !self.is_transitive() {
            return Err(Error::Intransitive);
        }
        Ok(self.generators.iter().all(|g| {
            parts.cells().iter().all(|&b| {
                let image = ElementSet::from_elements(b.iter().map(|x| g.apply(x)));
                image == b || image.is_disjoint(b)
            })
        }))
    }

    /// Smallest block containing `a` and `b`.
    pub fn minimal_block(&self, a: usize, b: usize) -> ElementSet {
        let n = self.degree;
        let mut uf = UnionFind::new(n);
        uf.union(a, b);
        let mut queue = vec![(a, b)];
        while let Some((x, y)) = queue.pop() {
            for g in &self.generators {
                let (gx, gy) = (g.apply(x), g.apply(y));
                if uf.union(gx, gy) {
                    queue.push((gx, gy));
                }
            }
        }
        let root = uf.find(a);
        ElementSet::from_elements((0..n).filter(|&x| uf.find(x) == root))
    }

    pub fn is_primitive(&self) -> Result<bool> {
        if !self.is_transitive() {
            return Err(Error::Intransitive);
        }
        Ok((1..self.degree).all(|p| self.minimal_block(0, p).len() == self.degree))
    }
}

/// Orbits of the group generated by `gens`, cells ordered by smallest point.
pub fn orbits_of(degree: usize, gens: &[Permutation]) -> Partition {
    let mut uf = UnionFind::new(degree);
    for g in gens {
        for x in 0..degree {
            uf.union(x, g.apply(x));
        }
    }
    let mut cells: Vec<ElementSet> = Vec::new();
    let mut root_cell = vec![usize::MAX; degree];
    for x in 0..degree {
        let r = uf.find(x);
        if root_cell[r] == usize::MAX {
            root_cell[r] = cells.len();
            cells.push(ElementSet::EMPTY);
        }
        cells[root_cell[r]].insert(x);
    }
    Partition::new(degree, cells).expect("orbits partition the points")
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if the two classes were distinct.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[usize]) -> Permutation {
        Permutation::from_cycles(n, &[c]).unwrap()
    }

    #[test]
    fn s4_facts() {
        let s4 = PermGroup::new(4, vec![cyc(4, &[0, 1]), cyc(4, &[0, 1, 2, 3])]).unwrap();
        assert_eq!(s4.order_u64(), Some(24));
        assert_eq!(s4.point_stabilizer(0).order_u64(), Some(6));
        assert!(s4.is_primitive().unwrap());
        assert!(s4.contains(&cyc(4, &[0, 1])));
    }

    #[test]
    fn orbits_of_three_cycle() {
        let g = PermGroup::new(5, vec![cyc(5, &[0, 1, 2])]).unwrap();
        let orbits = g.orbits();
        assert_eq!(
            orbits.cells(),
            &[ElementSet::from_elements([0, 1, 2]), ElementSet::singleton(3), ElementSet::singleton(4)]
        );
        assert!(matches!(g.blocks_check(&orbits), Err(Error::Intransitive)));
        assert!(matches!(g.is_primitive(), Err(Error::Intransitive)));
    }

    #[test]
    fn free_action_stabilizer() {
        let g = PermGroup::new(4, vec![Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()]).unwrap();
        assert!(g.point_stabilizer(0).is_trivial());
        assert_eq!(g.point_stabilizer(0).order_u64(), Some(1));
    }

    #[test]
    fn prime_cycle_primitive() {
        let g = PermGroup::new(5, vec![cyc(5, &[0, 1, 2, 3, 4])]).unwrap();
        assert!(g.is_primitive().unwrap());
        let c4 = PermGroup::new(4, vec![cyc(4, &[0, 1, 2, 3])]).unwrap();
        assert!(!c4.is_primitive().unwrap());
        assert_eq!(c4.minimal_block(0, 2), ElementSet::from_elements([0, 2]));
        assert!(c4.blocks_check(&Partition::discrete(4)).unwrap());
    }

    #[test]
    fn normal_closures_in_s4() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let double = cyc(4, &[0, 1]).conjugate_by(&cyc(4, &[0, 2]));
        let transposition = cyc(4, &[0, 1]);
        let klein = s4.normal_closure(&[&cyc(4, &[0, 1]) * &cyc(4, &[2, 3])]).unwrap();
        assert_eq!(klein.order_u64(), Some(4));
        assert_eq!(s4.normal_closure(&[cyc(4, &[0, 1, 2])]).unwrap().order_u64(), Some(12));
        assert_eq!(s4.normal_closure(&[transposition]).unwrap().order_u64(), Some(24));
        assert_eq!(s4.normal_closure(&[double]).unwrap().order_u64(), Some(24));
        assert!(s4.normal_closure(&[]).unwrap().is_trivial());
    }

    #[test]
    fn enumeration_limit() {
        let s5 = PermGroup::symmetric(5).unwrap();
        assert_eq!(s5.elements(1000).unwrap().len(), 120);
        assert!(s5.elements(100).is_err());
    }
}
