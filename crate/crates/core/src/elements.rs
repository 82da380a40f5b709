//! Subsets of a group's elements as single-word bitmasks.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use crate::group::GroupTable;

/// Largest supported group order; element sets are one machine word.
pub const MAX_ORDER: usize = 64;

/// An exact half-integer `numer / 2`, used for `c(X) = (|X| + |I(X)|) / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(pub i64);

impl HalfInt {
    pub fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    /// Numerator over 2.
    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer value, if there is one.
    pub fn as_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// A subset of `{0, .., r-1}` for a group of order `r <= 64`.
///
/// The set does not carry its group; operations that need the
/// multiplication or inverse tables take the [`GroupTable`] explicitly.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet(pub u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Self {
        ElementSet(1u64 << x)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for x in it {
            s.insert(x);
        }
        s
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, x: usize) -> bool {
        x < 64 && self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// `X^{-1}` elementwise.
    pub fn inverse(self, g: &GroupTable) -> ElementSet {
        let mut out = 0u64;
        for x in self.iter() {
            out |= 1u64 << g.inv(x);
        }
        ElementSet(out)
    }

    pub fn is_inverse_closed(self, g: &GroupTable) -> bool {
        self.inverse(g) == self
    }

    /// `I(X)`: elements of order at most two (identity included).
    pub fn involution_part(self, g: &GroupTable) -> ElementSet {
        self & g.small_order_elements()
    }

    pub fn involution_count(self, g: &GroupTable) -> usize {
        self.involution_part(g).len()
    }

    /// `c(X) = (|X| + |I(X)|) / 2`.
    pub fn c_value(self, g: &GroupTable) -> HalfInt {
        HalfInt((self.len() + self.involution_count(g)) as i64)
    }

    /// Right translate `Xy = { xy : x in X }`.
    pub fn right_mul(self, g: &GroupTable, y: usize) -> ElementSet {
        ElementSet::from_elements(self.iter().map(|x| g.mul(x, y)))
    }

    /// Left translate `yX`.
    pub fn left_mul(self, g: &GroupTable, y: usize) -> ElementSet {
        ElementSet::from_elements(self.iter().map(|x| g.mul(y, x)))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: Self) -> Self {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: Self) -> Self {
        ElementSet(self.0 & rhs.0)
    }
}

impl BitXor for ElementSet {
    type Output = ElementSet;
    fn bitxor(self, rhs: Self) -> Self {
        ElementSet(self.0 ^ rhs.0)
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: Self) -> Self {
        ElementSet(self.0 & !rhs.0)
    }
}

impl Not for ElementSet {
    type Output = ElementSet;
    fn not(self) -> Self {
        ElementSet(!self.0)
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::from_elements(iter)
    }
}

/// Ascending iterator over the members of an [`ElementSet`].
#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Iterate the members of a raw mask.
pub fn bits_of(mask: u64) -> Elements {
    Elements(mask)
}
