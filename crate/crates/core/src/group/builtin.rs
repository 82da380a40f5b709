use std::collections::HashMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::GroupTable;
use crate::elements::MAX_ORDER;
use crate::error::{Error, Result};

/// A named builtin group family member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Descriptor {
    Cyclic(usize),
    /// Order `2n`.
    Dihedral(usize),
    /// Order `4n`; `Dicyclic(2)` is the quaternion group.
    Dicyclic(usize),
    Quaternion,
    /// Order `2^k`.
    Elem2(usize),
    Sym(usize),
    Alt(usize),
    Product(Box<Descriptor>, Box<Descriptor>),
}

impl Descriptor {
    /// Group order, saturating on overflow.
    pub fn order(&self) -> usize {
        match self {
            Descriptor::Cyclic(n) => *n,
            Descriptor::Dihedral(n) => n.saturating_mul(2),
            Descriptor::Dicyclic(n) => n.saturating_mul(4),
            Descriptor::Quaternion => 8,
            Descriptor::Elem2(k) => {
                if *k >= usize::BITS as usize {
                    usize::MAX
                } else {
                    1usize << k
                }
            }
            Descriptor::Sym(n) => (1..=*n).fold(1usize, |a, b| a.saturating_mul(b)),
            Descriptor::Alt(n) => {
                let f = Descriptor::Sym(*n).order();
                if *n >= 2 {
                    f / 2
                } else {
                    f
                }
            }
            Descriptor::Product(a, b) => a.order().saturating_mul(b.order()),
        }
    }

    pub fn build(&self) -> Result<GroupTable> {
        let order = self.order();
        if order > MAX_ORDER {
            return Err(Error::TooLarge { order, limit: MAX_ORDER });
        }
        let name = self.to_string();
        let g = match self {
            Descriptor::Cyclic(n) => GroupTable::from_fn(name, *n, |x, y| (x + y) % n),
            Descriptor::Dihedral(n) => {
                let n = *n;
                GroupTable::from_fn(name, 2 * n, |x, y| {
                    let (a, b) = (x % n, x / n);
                    let (c, d) = (y % n, y / n);
                    let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
                    rot + n * (b ^ d)
                })
            }
            Descriptor::Dicyclic(n) => dicyclic(name, *n),
            Descriptor::Quaternion => dicyclic(name, 2),
            Descriptor::Elem2(k) => GroupTable::from_fn(name, 1 << k, |x, y| x ^ y),
            Descriptor::Sym(n) => permutation_group(name, *n, false),
            Descriptor::Alt(n) => permutation_group(name, *n, true),
            Descriptor::Product(a, b) => {
                let (ga, gb) = (a.build()?, b.build()?);
                let m = gb.order();
                GroupTable::from_fn(name, ga.order() * m, |x, y| {
                    ga.mul(x / m, y / m) * m + gb.mul(x % m, y % m)
                })
            }
        };
        Ok(g)
    }
}

fn dicyclic(name: String, n: usize) -> GroupTable {
    // a^i x^j with a of order 2n, x^2 = a^n, x^-1 a x = a^-1
    let m = 2 * n;
    GroupTable::from_fn(name, 2 * m, |p, q| {
        let (i, j) = (p % m, p / m);
        let (k, l) = (q % m, q / m);
        let mut e = if j == 0 { i + k } else { i + m - k };
        let jj = if j == 1 && l == 1 {
            e += n;
            0
        } else {
            j ^ l
        };
        e % m + m * jj
    })
}

fn is_even(p: &[u8]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn permutation_group(name: String, n: usize, even_only: bool) -> GroupTable {
    let mut perms: Vec<Vec<u8>> = Vec::new();
    let mut p: Vec<u8> = (0..n as u8).collect();
    loop {
        if !even_only || is_even(&p) {
            perms.push(p.clone());
        }
        // next lexicographic permutation
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    let index: HashMap<Vec<u8>, usize> = perms.iter().cloned().zip(0..).collect();
    GroupTable::from_fn(name, perms.len(), |x, y| {
        // apply x first, then y
        let prod: Vec<u8> = perms[x].iter().map(|&i| perms[y][i as usize]).collect();
        index[&prod]
    })
}

fn split_top_level_comma(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    if t.starts_with('(') && t.ends_with(')') {
        // only strip if the parens match each other
        let inner = &t[1..t.len() - 1];
        let mut depth = 0i32;
        for ch in inner.chars() {
            match ch {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth < 0 {
                        return t;
                    }
                }
                _ => {}
            }
        }
        if depth == 0 {
            return strip_parens(inner);
        }
    }
    t
}

impl FromStr for Descriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownDescriptor(s.to_string());
        let t = strip_parens(s);
        let t = t.strip_prefix("builtin:").unwrap_or(t);
        if t == "quaternion" {
            return Ok(Descriptor::Quaternion);
        }
        let (family, arg) = t.split_once(':').ok_or_else(bad)?;
        if family == "product" {
            let (a, b) = split_top_level_comma(arg).ok_or_else(bad)?;
            return Ok(Descriptor::Product(Box::new(a.parse()?), Box::new(b.parse()?)));
        }
        let n: usize = arg.trim().parse().map_err(|_| bad())?;
        let d = match family {
            "cyclic" if n >= 1 => Descriptor::Cyclic(n),
            "dihedral" if n >= 1 => Descriptor::Dihedral(n),
            "dicyclic" if n >= 1 => Descriptor::Dicyclic(n),
            "elem2" => Descriptor::Elem2(n),
            "sym" => Descriptor::Sym(n),
            "alt" => Descriptor::Alt(n),
            _ => return Err(bad()),
        };
        Ok(d)
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Cyclic(n) => write!(f, "cyclic:{n}"),
            Descriptor::Dihedral(n) => write!(f, "dihedral:{n}"),
            Descriptor::Dicyclic(n) => write!(f, "dicyclic:{n}"),
            Descriptor::Quaternion => write!(f, "quaternion"),
            Descriptor::Elem2(k) => write!(f, "elem2:{k}"),
            Descriptor::Sym(n) => write!(f, "sym:{n}"),
            Descriptor::Alt(n) => write!(f, "alt:{n}"),
            Descriptor::Product(a, b) => {
                if matches!(**a, Descriptor::Product(..)) {
                    write!(f, "product:({a}),{b}")
                } else {
                    write!(f, "product:{a},{b}")
                }
            }
        }
    }
}

/// Where a group comes from: a builtin descriptor or a `.gtab` file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSource {
    Builtin(Descriptor),
    File(PathBuf),
}

impl FromStr for GroupSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<Descriptor>() {
            Ok(d) => Ok(GroupSource::Builtin(d)),
            Err(e) => {
                let path = PathBuf::from(s);
                if s.ends_with(".gtab") || path.is_file() {
                    Ok(GroupSource::File(path))
                } else {
                    Err(e)
                }
            }
        }
    }
}

impl GroupSource {
    pub fn load(&self) -> Result<GroupTable> {
        match self {
            GroupSource::Builtin(d) => d.build(),
            GroupSource::File(path) => {
                let text = std::fs::read_to_string(path)?;
                let name = path.display().to_string();
                super::parse_gtab(&text).map(|mut g| {
                    g.set_name(name);
                    g
                })
            }
        }
    }
}

/// Load a group from a descriptor such as `builtin:cyclic:4`,
/// `product:quaternion,elem2:1`, or a path to a `.gtab` file.
pub fn load_group(source: &str) -> Result<GroupTable> {
    source.parse::<GroupSource>()?.load()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_4_is_abelian_of_order_4() {
        let g = load_group("builtin:cyclic:4").unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
        assert_eq!(g.exponent(), 4);
    }

    #[test]
    fn quaternion_has_one_involution() {
        let g = load_group("builtin:quaternion").unwrap();
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
        // identity plus exactly one involution
        assert_eq!(g.small_order_elements().len(), 2);
        assert_eq!(g, load_group("dicyclic:2").unwrap().renamed("quaternion"));
    }

    #[test]
    fn family_orders() {
        for (d, r) in [
            ("dihedral:4", 8),
            ("dicyclic:3", 12),
            ("elem2:3", 8),
            ("sym:3", 6),
            ("sym:4", 24),
            ("alt:4", 12),
            ("alt:5", 60),
            ("product:cyclic:3,cyclic:3", 9),
            ("product:quaternion,elem2:1", 16),
            ("product:(product:cyclic:2,cyclic:2),cyclic:3", 12),
            ("product:cyclic:2,product:cyclic:2,cyclic:2", 8),
        ] {
            assert_eq!(load_group(d).unwrap().order(), r, "{d}");
        }
    }

    #[test]
    fn oversize_and_unknown_rejected() {
        assert!(matches!(load_group("sym:5"), Err(Error::TooLarge { order: 120, .. })));
        assert!(matches!(load_group("elem2:7"), Err(Error::TooLarge { .. })));
        assert!(matches!(load_group("cyclic:0"), Err(Error::UnknownDescriptor(_))));
        assert!(matches!(load_group("frobnicate:3"), Err(Error::UnknownDescriptor(_))));
    }

    #[test]
    fn descriptor_display_round_trips() {
        for s in [
            "cyclic:5",
            "quaternion",
            "product:cyclic:4,cyclic:2",
            "product:(product:cyclic:2,cyclic:2),cyclic:3",
        ] {
            let d: Descriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
            assert_eq!(d.to_string().parse::<Descriptor>().unwrap(), d);
        }
    }

    #[test]
    fn dihedral_relations() {
        let g = load_group("dihedral:5").unwrap();
        // rotation 1, reflection 5
        assert_eq!(g.element_order(1), 5);
        assert_eq!(g.element_order(5), 2);
        assert_eq!(g.conj(1, 5), g.inv(1));
    }

    impl GroupTable {
        fn renamed(mut self, n: &str) -> Self {
            self.set_name(n);
            self
        }
    }
}
