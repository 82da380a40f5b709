//! The asymptotic proportion bounds, evaluated in floating point.
//!
//! With `L = log2 r` and `x = r^0.499 / (8 L^3)`, the GRR (and normal Cayley
//! graph) proportion is at least `1 - 2^{-x + L^2 + 3}` and the unlabeled
//! GRR ratio at least `1 - 2^{-x + 2L^2 + 3}`, for `r` beyond an unspecified
//! constant. These verdicts are advisory: the exponents are transcendental.

use grr_core::HalfInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Exponent {
    /// `e` in a bound of the form `1 - 2^e`.
    pub exponent: f64,
    /// `c(R) + e`: the matching bound on the number of bad connection sets is
    /// `2^{c(R) + e}`.
    pub count_exponent: f64,
    /// `count_exponent >= c(R)`, i.e. the count bound is no better than the
    /// trivial `2^{c(R)}` and the proportion bound is at most 0.
    pub vacuous: bool,
}

impl Exponent {
    fn new(exponent: f64, c_r: f64) -> Self {
        let count_exponent = c_r + exponent;
        Exponent { exponent, count_exponent, vacuous: count_exponent >= c_r }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundTable {
    pub r: u64,
    pub c_r: f64,
    pub log2_r: f64,
    /// `r^0.499 / (8 log2^3 r)`.
    pub decay: f64,
    /// Lower bound on the GRR proportion.
    pub grr_proportion: Exponent,
    /// Lower bound on `|GRR(R)| / |CG(R)|`, unlabeled.
    pub unlabeled_ratio: Exponent,
    /// Lower bound on the normal Cayley graph proportion.
    pub normal_proportion: Exponent,
    /// `a(r) = log2^2 r`, with `|Aut(R)| <= 2^{a(r)}`.
    pub aut_exponent: f64,
    /// `b(r) = x - log2^2 r - 3`, so the GRR proportion is at least `1 - 2^{-b(r)}`.
    pub b: f64,
}

/// Evaluate every exponent at `r`. Returns `None` for `r < 3`, where
/// `log2^3 r` is too small for the formulas to mean anything.
pub fn evaluate(r: u64, c_r: HalfInt) -> Option<BoundTable> {
    if r < 3 {
        return None;
    }
    let rf = r as f64;
    let l = rf.log2();
    let decay = rf.powf(0.499) / (8.0 * l.powi(3));
    let c = c_r.to_f64();
    let a = l * l;
    let proportion = -decay + a + 3.0;
    Some(BoundTable {
        r,
        c_r: c,
        log2_r: l,
        decay,
        grr_proportion: Exponent::new(proportion, c),
        unlabeled_ratio: Exponent::new(-decay + 2.0 * a + 3.0, c),
        normal_proportion: Exponent::new(proportion, c),
        aut_exponent: a,
        b: decay - a - 3.0,
    })
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    /// `(r, e1, e2, a, b)` at 50 significant digits, computed independently
    /// with arbitrary-precision arithmetic.
    const REFERENCE: &[(u64, f64, f64, f64, f64)] = &[
        (3, 5.4577890324802470696, 7.9698951611725080786, 2.512106128692261009, -5.4577890324802470696),
        (4, 6.9687932916843428461, 10.968793291684342846, 4.0, -6.9687932916843428461),
        (5, 8.3690580413090667973, 13.760408119136322764, 5.3913500778272559669, -8.3690580413090667973),
        (7, 10.866323267981920844, 18.747564926382977277, 7.8812416584010564331, -10.866323267981920844),
        (8, 11.986932631079549144, 20.986932631079549144, 9.0, -11.986932631079549144),
        (10, 14.024448074630062031, 25.059654342232042694, 11.035206267601980663, -14.024448074630062031),
        (12, 15.842581210871715379, 28.694537342448601113, 12.851956131576885735, -15.842581210871715379),
        (16, 18.992209130848811957, 34.992209130848811957, 16.0, -18.992209130848811957),
        (24, 24.015547862213397357, 45.037428995232595455, 21.021881133019198098, -24.015547862213397357),
        (64, 38.995389584476414546, 74.995389584476414546, 36.0, -38.995389584476414546),
        (100, 47.136582301837227689, 91.277407372245150339, 44.140825070407922651, -47.136582301837227689),
        (1000, 102.31289019968998858, 201.62974660810781455, 99.316856408417825964, -102.31289019968998858),
        (4096, 146.99540871883917457, 290.99540871883917457, 144.0, -146.99540871883917457),
        (65536, 258.99227366471577397, 514.99227366471577397, 256.0, -258.99227366471577397),
        (1000000, 400.25185574243192757, 797.51928137610323143, 397.26742563367130386, -400.25185574243192757),
        (1048576, 402.98422027672810625, 802.98422027672810625, 400.0, -402.98422027672810625),
        (1099511627776, 1601.0080026676996393, 3201.0080026676996393, 1600.0, -1601.0080026676996393),
    ];

    pub(crate) fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn matches_reference_values() {
        for &(r, e1, e2, a, b) in REFERENCE {
            let t = evaluate(r, HalfInt::from_int(r as i64)).unwrap();
            assert!(rel(t.grr_proportion.exponent, e1) < 1e-12, "r={r}");
            assert!(rel(t.normal_proportion.exponent, e1) < 1e-12, "r={r}");
            assert!(rel(t.unlabeled_ratio.exponent, e2) < 1e-12, "r={r}");
            assert!(rel(t.aut_exponent, a) < 1e-12, "r={r}");
            assert!(rel(t.b, b) < 1e-12, "r={r}");
        }
    }

    #[test]
    fn small_r_is_rejected() {
        assert!(evaluate(2, HalfInt::from_int(2)).is_none());
    }

    #[test]
    fn r16_is_vacuous() {
        let t = evaluate(16, HalfInt(2 * 9)).unwrap();
        assert!(t.decay < 0.01);
        assert!(t.grr_proportion.vacuous && t.unlabeled_ratio.vacuous);
        assert_eq!(t.grr_proportion.count_exponent, 9.0 + t.grr_proportion.exponent);
    }
}
