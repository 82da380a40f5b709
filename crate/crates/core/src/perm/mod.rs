//! Permutations and permutation groups on at most 64 points.
//!
//! Permutations act on the right: `p * q` applies `p` first, then `q`.

mod chain;
pub(crate) mod group;
mod ops;

pub use chain::StabChain;
pub use group::{orbits_of, PermGroup};
pub use ops::{
    core_of, evaluate_dichotomy, inversion_perm, is_maximal_subgroup, joint_orbit_count,
    normal_orbit_dichotomy_check, regular_rep, right_translation, DichotomyBranch, DichotomyReport,
    Maximality,
};

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::elements::MAX_ORDER;
use crate::error::{Error, Result};

/// A bijection on `0..n`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "degree cap");
        Permutation { images: (0..n as u8).collect() }
    }

    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_ORDER {
            return Err(Error::TooLarge { order: n, limit: MAX_ORDER });
        }
        let mut seen = 0u64;
        for &x in images {
            if x >= n || seen >> x & 1 == 1 {
                return Err(Error::Invalid(format!("not a permutation: {images:?}")));
            }
            seen |= 1 << x;
        }
        Ok(Permutation { images: images.iter().map(|&x| x as u8).collect() })
    }

    /// Build from a closure known to give a bijection.
    pub(crate) fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Self {
        let p = Permutation { images: (0..n).map(|x| f(x) as u8).collect() };
        debug_assert!(Permutation::from_images(&p.images()).is_ok());
        p
    }

    /// Product of disjoint cycles given as point lists.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = 0u64;
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                if x >= n || touched >> x & 1 == 1 {
                    return Err(Error::Invalid(format!("bad cycle {c:?}")));
                }
                touched |= 1 << x;
                images[x] = c[(i + 1) % c.len()];
            }
        }
        Self::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Smallest point not fixed.
    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().position(|(i, &x)| i != x as usize)
    }

    /// `p^-1 self p`.
    pub fn conjugate_by(&self, p: &Permutation) -> Permutation {
        &(&p.inverse() * self) * p
    }

    pub fn pow(&self, k: usize) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn order(&self) -> usize {
        let mut acc = 1;
        let mut seen = 0u64;
        for start in 0..self.degree() {
            if seen >> start & 1 == 1 {
                continue;
            }
            let (mut x, mut len) = (start, 0);
            while seen >> x & 1 == 0 {
                seen |= 1 << x;
                x = self.apply(x);
                len += 1;
            }
            acc = crate::group::lcm(acc, len);
        }
        acc
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), rhs.degree());
        Permutation { images: self.images.iter().map(|&x| rhs.images[x as usize]).collect() }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// One-line image array, e.g. `0 2 1 3`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let images = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse { line: 1, msg: format!("bad point {t:?}") })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(&images)
    }
}

/// Parse a list of permutation lines (blank lines and `#` comments skipped).
pub fn parse_perm_lines(text: &str) -> Result<Vec<Permutation>> {
    let mut out: Vec<Permutation> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let p = line.parse::<Permutation>().map_err(|e| match e {
            Error::Parse { msg, .. } => Error::Parse { line: i + 1, msg },
            Error::Invalid(msg) => Error::Parse { line: i + 1, msg },
            other => other,
        })?;
        if let Some(first) = out.first() {
            if first.degree() != p.degree() {
                return Err(Error::DegreeMismatch { expected: first.degree(), got: p.degree() });
            }
        }
        out.push(p);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_left_to_right() {
        let p = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let q = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        // 0 -p-> 1 -q-> 2
        assert_eq!((&p * &q).apply(0), 2);
        assert_eq!((&q * &p).apply(0), 1);
        assert!((&p * &p.inverse()).is_identity());
        assert_eq!((&p * &q).order(), 3);
    }

    #[test]
    fn text_round_trip() {
        let p: Permutation = "0 2 1 3".parse().unwrap();
        assert_eq!(p.to_string(), "0 2 1 3");
        assert!("0 0 1".parse::<Permutation>().is_err());
        assert!("0 x".parse::<Permutation>().is_err());
        let ps = parse_perm_lines("# gens\n1 0 2\n\n0 2 1 # swap\n").unwrap();
        assert_eq!(ps.len(), 2);
        assert!(matches!(parse_perm_lines("1 0\n0 1 2\n"), Err(Error::DegreeMismatch { .. })));
        assert!(matches!(parse_perm_lines("1 0\n1 1\n"), Err(Error::Parse { line: 2, .. })));
    }
}
