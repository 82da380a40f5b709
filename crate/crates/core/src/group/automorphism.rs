use super::GroupTable;
use crate::elements::ElementSet;
use crate::error::{Error, Result};

/// Greedy generating set: scan elements in index order, keep any element not
/// already in the span. Each kept element at least doubles the span, so the
/// result has at most `log2 r` elements.
pub fn generating_set(g: &GroupTable) -> Vec<usize> {
    generating_set_of(g, g.all())
}

/// Greedy generating set of the subgroup `h`.
pub fn generating_set_of(g: &GroupTable, h: ElementSet) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = ElementSet::singleton(0);
    for x in h.iter() {
        if !span.contains(x) {
            gens.push(x);
            span = g.closure_of(&gens);
        }
    }
    gens
}

/// An automorphism of a group table, as the image of every element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupAutomorphism {
    pub images: Vec<usize>,
}

impl GroupAutomorphism {
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Order of the automorphism as a permutation.
    pub fn order(&self) -> usize {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut acc = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            acc = super::lcm(acc, len);
        }
        acc
    }
}

/// All automorphisms of `g`, identity first.
///
/// Searches images of a greedy generating set; each complete assignment is
/// extended along the Cayley graph of the generators and kept if it is a
/// well-defined bijective homomorphism. Fails once more than `limit`
/// automorphisms have been found.
pub fn automorphisms(g: &GroupTable, limit: usize) -> Result<Vec<GroupAutomorphism>> {
    let gens = generating_set(g);
    let orders: Vec<usize> = gens.iter().map(|&x| g.element_order(x)).collect();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    search(g, &gens, &orders, &mut images, &mut out, limit)?;
    out.sort_by_key(|a| (!a.is_identity(), a.images.clone()));
    Ok(out)
}

fn search(
    g: &GroupTable,
    gens: &[usize],
    orders: &[usize],
    images: &mut Vec<usize>,
    out: &mut Vec<GroupAutomorphism>,
    limit: usize,
) -> Result<()> {
    let depth = images.len();
    if depth == gens.len() {
        if let Some(a) = extend(g, gens, images) {
            if out.len() == limit {
                return Err(Error::Precondition(format!("more than {limit} automorphisms")));
            }
            out.push(a);
        }
        return Ok(());
    }
    // images of earlier generators span a subgroup the next image must avoid
    let span = g.closure_of(images);
    for y in 1..g.order() {
        if span.contains(y) || g.element_order(y) != orders[depth] {
            continue;
        }
        images.push(y);
        search(g, gens, orders, images, out, limit)?;
        images.pop();
    }
    Ok(())
}

fn extend(g: &GroupTable, gens: &[usize], images: &[usize]) -> Option<GroupAutomorphism> {
    let r = g.order();
    let mut map = vec![usize::MAX; r];
    map[0] = 0;
    let mut hit = ElementSet::singleton(0);
    let mut queue = vec![0usize];
    while let Some(x) = queue.pop() {
        for (&s, &t) in gens.iter().zip(images) {
            let (xs, ys) = (g.mul(x, s), g.mul(map[x], t));
            if map[xs] == usize::MAX {
                if hit.contains(ys) {
                    return None;
                }
                map[xs] = ys;
                hit.insert(ys);
                queue.push(xs);
            } else if map[xs] != ys {
                return None;
            }
        }
    }
    Some(GroupAutomorphism { images: map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::load_group;

    fn count(d: &str) -> usize {
        automorphisms(&load_group(d).unwrap(), 1 << 20).unwrap().len()
    }

    /// Brute-force homomorphism check over every pair.
    fn is_automorphism(g: &GroupTable, a: &GroupAutomorphism) -> bool {
        let r = g.order();
        (0..r).all(|x| (0..r).all(|y| a.apply(g.mul(x, y)) == g.mul(a.apply(x), a.apply(y))))
    }

    #[test]
    fn known_orders() {
        assert_eq!(count("cyclic:1"), 1);
        assert_eq!(count("cyclic:5"), 4);
        assert_eq!(count("cyclic:12"), 4);
        assert_eq!(count("elem2:2"), 6);
        assert_eq!(count("elem2:3"), 168);
        assert_eq!(count("sym:3"), 6);
        assert_eq!(count("quaternion"), 24);
        assert_eq!(count("dihedral:4"), 8);
        assert_eq!(count("product:cyclic:3,cyclic:3"), 48);
        assert_eq!(count("alt:4"), 24);
        assert_eq!(count("sym:4"), 24);
    }

    #[test]
    fn all_are_homomorphisms() {
        for d in ["dihedral:6", "dicyclic:3", "product:cyclic:4,cyclic:2"] {
            let g = load_group(d).unwrap();
            let auts = automorphisms(&g, 1000).unwrap();
            assert!(auts[0].is_identity());
            assert!(auts.iter().all(|a| is_automorphism(&g, a)), "{d}");
        }
    }

    #[test]
    fn generating_sets_are_small() {
        for d in ["elem2:5", "cyclic:60", "sym:4", "product:quaternion,elem2:2"] {
            let g = load_group(d).unwrap();
            let gens = generating_set(&g);
            assert_eq!(g.closure_of(&gens), g.all());
            assert!(1usize << gens.len() <= g.order(), "{d}");
        }
    }

    #[test]
    fn limit_is_an_error() {
        assert!(automorphisms(&load_group("elem2:3").unwrap(), 100).is_err());
    }
}
