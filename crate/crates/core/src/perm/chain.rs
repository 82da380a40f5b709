use num_bigint::BigUint;

use super::Permutation;

/// One level of a stabilizer chain.
#[derive(Clone, Debug)]
struct Level {
    base: usize,
    /// `transversal[x]` maps the base point to `x`; `None` outside the orbit.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
    /// Per orbit point: how many strong generators have had their Schreier
    /// generator at that point sifted.
    tested: Vec<usize>,
}

/// A base and strong generating set, built by deterministic Schreier–Sims.
///
/// Base points are chosen as the smallest point moved by the element that
/// forces a new level, after any requested prefix.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
    /// Strong generators with the deepest level they belong to.
    strong: Vec<(Permutation, usize)>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        Self::with_base_prefix(degree, gens, &[])
    }

    /// Chain whose base starts with `prefix` (useful for point stabilizers).
    pub fn with_base_prefix(degree: usize, gens: &[Permutation], prefix: &[usize]) -> Self {
        let mut chain = StabChain { degree, levels: Vec::new(), strong: Vec::new() };
        for &b in prefix {
            chain.push_level(b);
        }
        for g in gens {
            if g.is_identity() {
                continue;
            }
            if chain.fixes_base(g, chain.levels.len()) {
                chain.push_level(g.first_moved().expect("non-identity"));
            }
            chain.strong.push((g.clone(), 0));
        }
        chain.close_orbits(chain.levels.len());
        chain.complete();
        chain
    }

    /// Chain from a base and strong generators already known to be complete,
    /// each tagged with the deepest level it belongs to.
    pub(crate) fn from_bsgs(degree: usize, base: &[usize], strong: Vec<(Permutation, usize)>) -> Self {
        let mut chain = StabChain { degree, levels: Vec::new(), strong };
        for &b in base {
            chain.push_level(b);
        }
        if !chain.levels.is_empty() {
            chain.close_orbits(chain.levels.len() - 1);
        }
        chain
    }

    fn base(&self) -> impl Iterator<Item = usize> + '_ {
        self.levels.iter().map(|l| l.base)
    }

    pub fn base_points(&self) -> Vec<usize> {
        self.base().collect()
    }

    fn fixes_base(&self, g: &Permutation, upto: usize) -> bool {
        self.levels[..upto].iter().all(|l| g.apply(l.base) == l.base)
    }

    fn push_level(&mut self, base: usize) {
        let mut transversal = vec![None; self.degree];
        transversal[base] = Some(Permutation::identity(self.degree));
        self.levels.push(Level { base, transversal, orbit: vec![base], tested: vec![0] });
    }

    /// Generators used at level `i`: those fixing base points `0..i`.
    fn gens_at(&self, i: usize) -> impl Iterator<Item = (usize, &Permutation)> {
        self.strong.iter().enumerate().filter(move |(_, (_, l))| *l >= i).map(|(k, (g, _))| (k, g))
    }

    /// Extend orbits of levels `0..=upto` under their generators, never
    /// replacing an existing transversal entry.
    fn close_orbits(&mut self, upto: usize) {
        for i in 0..self.levels.len().min(upto + 1) {
            let gens: Vec<Permutation> = self.gens_at(i).map(|(_, g)| g.clone()).collect();
            let level = &mut self.levels[i];
            let mut k = 0;
            while k < level.orbit.len() {
                let x = level.orbit[k];
                let ux = level.transversal[x].clone().expect("orbit point");
                for s in &gens {
                    let y = s.apply(x);
                    if level.transversal[y].is_none() {
                        level.transversal[y] = Some(&ux * s);
                        level.orbit.push(y);
                        level.tested.push(0);
                    }
                }
                k += 1;
            }
        }
    }

    /// Sift `h` through levels `from..`; returns the residue and the level
    /// where sifting stopped (`levels.len()` if it went all the way).
    pub(crate) fn sift_from(&self, mut h: Permutation, from: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let x = h.apply(level.base);
            match &level.transversal[x] {
                Some(u) => h = &h * &u.inverse(),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let lv = i as usize;
            let mut k = 0;
            while k < self.levels[lv].orbit.len() {
                let x = self.levels[lv].orbit[k];
                loop {
                    let next = self.levels[lv].tested[k];
                    if next >= self.strong.len() {
                        break;
                    }
                    self.levels[lv].tested[k] += 1;
                    let (s, depth) = &self.strong[next];
                    if *depth < lv {
                        continue;
                    }
                    let ux = self.levels[lv].transversal[x].as_ref().expect("orbit point");
                    let y = s.apply(x);
                    let uy = self.levels[lv].transversal[y].as_ref().expect("orbit closed");
                    let schreier = &(ux * s) * &uy.inverse();
                    let (residue, stop) = self.sift_from(schreier, lv + 1);
                    if !residue.is_identity() {
                        if stop == self.levels.len() {
                            self.push_level(residue.first_moved().expect("non-identity"));
                        }
                        self.strong.push((residue, stop));
                        self.close_orbits(stop);
                        i = stop as isize;
                        continue 'outer;
                    }
                }
                k += 1;
            }
            i -= 1;
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * l.orbit.len())
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (residue, stop) = self.sift_from(p.clone(), 0);
        stop == self.levels.len() && residue.is_identity()
    }

    pub fn strong_generators(&self) -> impl Iterator<Item = &Permutation> {
        self.strong.iter().map(|(g, _)| g)
    }

    /// Strong generators fixing the first `depth` base points; they generate
    /// that pointwise stabilizer.
    pub fn stabilizer_generators(&self, depth: usize) -> Vec<Permutation> {
        self.gens_at(depth).map(|(_, g)| g.clone()).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// The element picking, at each level, the orbit point with index
    /// `choices[level] % orbit size`. Uniform choices give a uniform element.
    pub fn element_at(&self, choices: &[usize]) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        for (level, l) in self.levels.iter().enumerate() {
            let pick = choices.get(level).copied().unwrap_or(0) % l.orbit.len();
            let u = l.transversal[l.orbit[pick]].as_ref().expect("orbit point");
            acc = u * &acc;
        }
        acc
    }

    /// Visit every element exactly once.
    pub fn for_each_element(&self, mut f: impl FnMut(&Permutation)) {
        fn rec(chain: &StabChain, level: usize, acc: &Permutation, f: &mut dyn FnMut(&Permutation)) {
            if level == chain.levels.len() {
                f(acc);
                return;
            }
            for &x in &chain.levels[level].orbit {
                let u = chain.levels[level].transversal[x].as_ref().expect("orbit point");
                // an element of G^(level) is (element of G^(level+1)) * u
                rec(chain, level + 1, &(u * acc), f);
            }
        }
        rec(self, 0, &Permutation::identity(self.degree), &mut f);
    }
}
