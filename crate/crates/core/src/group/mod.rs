//! Finite groups as indexed multiplication tables.
//!
//! Element `0` is always the identity. Products compose "row element times
//! column element": `mul(x, y)` is `xy`.

mod automorphism;
mod builtin;
mod classify;
mod cosets;
mod gtab;
mod subgroup;

pub use automorphism::{automorphisms, generating_set, generating_set_of, GroupAutomorphism};
pub use builtin::{load_group, Descriptor, GroupSource};
pub use classify::{classify, involution_fraction_check, Classification, InvolutionFraction};
pub use cosets::{double_cosets, quotient, DoubleCosetClass, DoubleCosetDecomposition, Quotient};
pub use gtab::{parse_gtab, to_gtab_string};
pub use subgroup::{subgroups, Subgroup};

use crate::elements::{ElementSet, MAX_ORDER};
use crate::error::{Error, Result};

/// A finite group of order `r <= 64` given by its Cayley table.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u8>,
    inv: Vec<u8>,
    small: ElementSet,
    name: String,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl GroupTable {
    /// Build from a full table, validating every group axiom and renumbering
    /// so that the identity is element 0.
    ///
    /// Indices in errors refer to the rows as given.
    pub fn from_rows(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::Invalid("empty table".into()));
        }
        if r > MAX_ORDER {
            return Err(Error::TooLarge { order: r, limit: MAX_ORDER });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != r {
                return Err(Error::NotLatinRow(i));
            }
            let mut seen = 0u64;
            for &v in row {
                if v >= r || seen >> v & 1 == 1 {
                    return Err(Error::NotLatinRow(i));
                }
                seen |= 1 << v;
            }
        }
        for j in 0..r {
            let mut seen = 0u64;
            for row in rows {
                let v = row[j];
                if seen >> v & 1 == 1 {
                    return Err(Error::NotLatinColumn(j));
                }
                seen |= 1 << v;
            }
        }
        let e = (0..r)
            .find(|&e| (0..r).all(|j| rows[e][j] == j && rows[j][e] == j))
            .ok_or(Error::MissingIdentity)?;
        for x in 0..r {
            if !(0..r).any(|y| rows[x][y] == e && rows[y][x] == e) {
                return Err(Error::MissingInverse(x));
            }
        }
        for a in 0..r {
            for b in 0..r {
                let ab = rows[a][b];
                for c in 0..r {
                    if rows[ab][c] != rows[a][rows[b][c]] {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        // swap e <-> 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut flat = vec![0u8; r * r];
        for x in 0..r {
            for y in 0..r {
                flat[relabel(x) * r + relabel(y)] = relabel(rows[x][y]) as u8;
            }
        }
        Ok(Self::from_flat_unchecked(name.into(), r, flat))
    }

    /// Trusted constructor for tables produced by this crate's builders.
    pub(crate) fn from_flat_unchecked(name: String, order: usize, mul: Vec<u8>) -> Self {
        debug_assert_eq!(mul.len(), order * order);
        let mut inv = vec![0u8; order];
        let mut small = ElementSet::EMPTY;
        for x in 0..order {
            let y = (0..order).find(|&y| mul[x * order + y] == 0).expect("inverse exists");
            inv[x] = y as u8;
            if mul[x * order + x] == 0 {
                small.insert(x);
            }
        }
        GroupTable { order, mul, inv, small, name }
    }

    /// Same as [`GroupTable::from_rows`], for a table built by a closure.
    pub(crate) fn from_fn(name: String, order: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut mul = vec![0u8; order * order];
        for x in 0..order {
            for y in 0..order {
                mul[x * order + y] = f(x, y) as u8;
            }
        }
        Self::from_flat_unchecked(name, order, mul)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub const fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    /// `g^{-1} x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).map(|x| self.element_order(x)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Every element as a set.
    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    /// `I(R)`: identity plus involutions.
    pub fn small_order_elements(&self) -> ElementSet {
        self.small
    }

    /// `c(R)`.
    pub fn c_value(&self) -> crate::elements::HalfInt {
        self.all().c_value(self)
    }

    /// Row `x` of the table.
    pub fn row(&self, x: usize) -> &[u8] {
        &self.mul[x * self.order..(x + 1) * self.order]
    }

    /// Subgroup generated by a set of elements.
    pub fn closure(&self, gens: ElementSet) -> ElementSet {
        let gens: Vec<usize> = gens.iter().filter(|&x| x != 0).collect();
        self.closure_of(&gens)
    }

    pub(crate) fn closure_of(&self, gens: &[usize]) -> ElementSet {
        let mut set = ElementSet::singleton(0);
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !set.contains(y) {
                    set.insert(y);
                    queue.push(y);
                }
            }
        }
        set
    }

    /// Whether a set is a subgroup (contains 1, closed under products).
    pub fn is_subgroup(&self, h: ElementSet) -> bool {
        if !h.contains(0) || h.bits() & !self.all().bits() != 0 {
            return false;
        }
        h.iter().all(|x| h.iter().all(|y| h.contains(self.mul(x, y))))
    }

    /// Whether a subgroup is normal, by conjugating with a generating set.
    pub fn is_normal(&self, h: ElementSet) -> bool {
        generating_set(self)
            .into_iter()
            .all(|t| h.iter().all(|x| h.contains(self.conj(x, t))))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
