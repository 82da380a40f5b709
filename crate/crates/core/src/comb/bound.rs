use std::fmt;

use num_bigint::BigUint;

/// The bound `2^(num/den)`, compared exactly: a count `n` is admitted iff
/// `n^den <= 2^num`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DyadicBound {
    pub num: i64,
    pub den: u64,
}

impl DyadicBound {
    pub fn new(num: i64, den: u64) -> Self {
        assert!(den > 0);
        DyadicBound { num, den }
    }

    pub fn integer(e: i64) -> Self {
        Self::new(e, 1)
    }

    pub fn admits(&self, count: u64) -> bool {
        if count == 0 {
            return true;
        }
        if self.num < 0 {
            return false;
        }
        let num = self.num as u128;
        let den = self.den as u128;
        // 2^(bits-1) <= count < 2^bits
        let bits = 64 - count.leading_zeros() as u128;
        if den * bits <= num {
            return true;
        }
        if den * (bits - 1) > num {
            return false;
        }
        BigUint::from(count).pow(self.den as u32) <= BigUint::from(1u32) << self.num as usize
    }

    /// The exponent as a float, for display only.
    pub fn exponent_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for DyadicBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "2^{}", self.num)
        } else {
            write!(f, "2^({}/{})", self.num, self.den)
        }
    }
}

/// An exact count with its bound and verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub count: u64,
    pub bound: DyadicBound,
    pub holds: bool,
}

impl BoundCheck {
    pub fn new(count: u64, bound: DyadicBound) -> Self {
        BoundCheck { count, bound, holds: bound.admits(count) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn edges() {
        let b = DyadicBound::new(37, 8); // 2^4.625 ≈ 24.7
        assert!(b.admits(16));
        assert!(b.admits(24));
        assert!(!b.admits(25));
        assert!(DyadicBound::new(0, 2).admits(1));
        assert!(!DyadicBound::new(0, 2).admits(2));
        assert!(DyadicBound::new(-3, 96).admits(0));
        assert!(!DyadicBound::new(-3, 96).admits(1));
        assert!(DyadicBound::new(5, 2).admits(5)); // 25 <= 32
        assert!(!DyadicBound::new(5, 2).admits(6));
        assert_eq!(DyadicBound::new(5, 2).to_string(), "2^(5/2)");
    }

    proptest! {
        #[test]
        fn agrees_with_float(count in 1u64..1_000_000, num in 0i64..200, den in prop::sample::select(vec![1u64, 2, 8, 96])) {
            let exact = DyadicBound::new(num, den).admits(count);
            let lhs = (count as f64).log2() * den as f64;
            // away from the boundary the float answer is reliable
            if (lhs - num as f64).abs() > 1e-6 {
                prop_assert_eq!(exact, lhs <= num as f64);
            }
        }
    }
}
