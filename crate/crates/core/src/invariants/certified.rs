//! Certified comparisons `b <= base^n` for exact integers `b`.
//!
//! Radical bases `a^(1/k)` are compared exactly through `b^k <= a^n`, so
//! equality cases such as `16 = (4^(1/5))^10` are detected. Every other base
//! is enclosed in a dyadic interval `[lo, hi] / 2^bits`; a comparison is
//! decided only when `b` falls outside `[lo^n, hi^n]`, and the precision is
//! doubled up to [`MAX_BITS`] before giving up with
//! [`Verdict::Undetermined`].

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// Starting precision of enclosures.
pub const START_BITS: u32 = 128;
/// Precision at which an undecided comparison is abandoned.
pub const MAX_BITS: u32 = 2048;

/// A positive real growth base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Base {
    /// `a^(1/k)`.
    Radical { a: BigUint, k: u32 },
    /// `Γ_d`: the root in `[1, 2]` of `x^(2d) = 1 + x + ... + x^(d-1)`.
    GammaRoot(u32),
    /// `θ_d`: the root in `[1, 2]` of `x^d = 1 + x + ... + x^(d-1)`.
    ThetaSmallRoot(u32),
    PlusOne(Box<Base>),
    Squared(Box<Base>),
}

impl Base {
    /// `Θ_d = d^(1/(d+1))`.
    pub fn theta_d(d: u32) -> Base {
        Base::Radical { a: BigUint::from(d), k: d + 1 }
    }

    /// `Θ = 4^(1/5)`.
    pub fn theta() -> Base {
        Base::theta_d(4)
    }

    /// `Γ = Γ_3`.
    pub fn gamma() -> Base {
        Base::GammaRoot(3)
    }

    /// `binom(2d, d-1)^(1/(2d+1))`, the conjectured base for complexes
    /// without missing faces of size above `d`.
    pub fn conjecture(d: u32) -> Base {
        Base::Radical { a: binomial(2 * d, d.saturating_sub(1)), k: 2 * d + 1 }
    }

    pub fn plus_one(self) -> Base {
        Base::PlusOne(Box::new(self))
    }

    pub fn squared(self) -> Base {
        Base::Squared(Box::new(self))
    }

    /// Dyadic enclosure with `bits` fractional bits.
    pub fn enclose(&self, bits: u32) -> Interval {
        let one = BigUint::one() << bits;
        match self {
            Base::Radical { a, k } => {
                let scaled: BigUint = a * (BigUint::one() << (bits as u64 * *k as u64));
                let r = scaled.nth_root(*k);
                let hi = if r.pow(*k) == scaled { r.clone() } else { &r + 1u32 };
                Interval { lo: r, hi, bits }
            }
            Base::GammaRoot(d) => {
                let mut coeffs = vec![BigInt::from(-1); *d as usize];
                coeffs.resize(2 * *d as usize, BigInt::zero());
                coeffs.push(BigInt::one());
                bisect_root(&coeffs, bits)
            }
            Base::ThetaSmallRoot(d) => {
                let mut coeffs = vec![BigInt::from(-1); *d as usize];
                coeffs.push(BigInt::one());
                bisect_root(&coeffs, bits)
            }
            Base::PlusOne(b) => {
                let i = b.enclose(bits);
                Interval { lo: i.lo + &one, hi: i.hi + &one, bits }
            }
            Base::Squared(b) => {
                let i = b.enclose(bits);
                let lo = (&i.lo * &i.lo) >> bits;
                let hi_sq = &i.hi * &i.hi;
                let mut hi = &hi_sq >> bits;
                if hi.clone() << bits != hi_sq {
                    hi += 1u32;
                }
                Interval { lo, hi, bits }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.enclose(START_BITS).midpoint_f64()
    }

    /// Decide `b <= self^n`.
    pub fn compare_power(&self, b: &BigUint, n: u32) -> Verdict {
        if let Base::Radical { a, k } = self {
            let lhs = b.pow(*k);
            let rhs = a.pow(n);
            return if lhs < rhs {
                Verdict::Within
            } else if lhs == rhs {
                Verdict::Equal
            } else {
                Verdict::Exceeds
            };
        }
        let mut bits = START_BITS;
        loop {
            let i = self.enclose(bits);
            let scaled = b << (bits as u64 * n as u64);
            if i.lo == i.hi && scaled == i.lo.pow(n) {
                return Verdict::Equal;
            }
            if scaled <= i.lo.pow(n) {
                return Verdict::Within;
            }
            if scaled > i.hi.pow(n) {
                return Verdict::Exceeds;
            }
            if bits >= MAX_BITS {
                return Verdict::Undetermined;
            }
            bits *= 2;
        }
    }

    /// `floor(self^n)`, or `None` if no enclosure up to [`MAX_BITS`]
    /// separates it from an integer boundary. Then `b <= self^n` iff
    /// `b <= floor(self^n)` for every integer `b`.
    pub fn floor_power(&self, n: u32) -> Option<BigUint> {
        if let Base::Radical { a, k } = self {
            return Some(a.pow(n).nth_root(*k));
        }
        let mut bits = START_BITS;
        loop {
            let i = self.enclose(bits);
            let shift = bits as u64 * n as u64;
            // floor is monotone, so equal floors at both ends pin it down
            let lo = i.lo.pow(n) >> shift;
            let hi = i.hi.pow(n) >> shift;
            if lo == hi {
                return Some(lo);
            }
            if bits >= MAX_BITS {
                return None;
            }
            bits *= 2;
        }
    }

    /// Floating enclosure of `self^n`, rounded outward.
    pub fn power_range(&self, n: u32) -> (f64, f64) {
        let i = self.enclose(START_BITS);
        let shift = START_BITS as i64 * n as i64;
        let lo = dyadic_to_f64(&i.lo.pow(n), shift);
        let hi = dyadic_to_f64(&i.hi.pow(n), shift);
        (lo * (1.0 - 4.0 * f64::EPSILON), hi * (1.0 + 4.0 * f64::EPSILON))
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Radical { a, k } => write!(f, "{a}^(1/{k})"),
            Base::GammaRoot(d) => write!(f, "gamma_{d}"),
            Base::ThetaSmallRoot(d) => write!(f, "theta_small_{d}"),
            Base::PlusOne(b) => write!(f, "({b} + 1)"),
            Base::Squared(b) => write!(f, "({b})^2"),
        }
    }
}

/// `[lo, hi] / 2^bits` containing the exact value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigUint,
    pub hi: BigUint,
    pub bits: u32,
}

impl Interval {
    pub fn lo_f64(&self) -> f64 {
        dyadic_to_f64(&self.lo, self.bits as i64)
    }

    pub fn hi_f64(&self) -> f64 {
        dyadic_to_f64(&self.hi, self.bits as i64)
    }

    pub fn midpoint_f64(&self) -> f64 {
        dyadic_to_f64(&(&self.lo + &self.hi), self.bits as i64 + 1)
    }

    /// Whether every point of `self` is at least every point of `other`.
    pub fn dominates(&self, other: &Interval) -> bool {
        let (a, b) = align(&self.lo, self.bits, &other.hi, other.bits);
        a >= b
    }

    /// Exact dyadic midpoint as `(numerator, denominator exponent)`.
    pub fn midpoint(&self) -> (BigUint, u32) {
        (&self.lo + &self.hi, self.bits + 1)
    }
}

fn align(a: &BigUint, abits: u32, b: &BigUint, bbits: u32) -> (BigUint, BigUint) {
    if abits >= bbits {
        (a.clone(), b << (abits - bbits))
    } else {
        (a << (bbits - abits), b.clone())
    }
}

/// `m / 2^shift` as the nearest double.
pub(crate) fn dyadic_to_f64(m: &BigUint, shift: i64) -> f64 {
    let extra = m.bits().saturating_sub(64);
    let top = (m >> extra).to_f64().expect("64-bit value converts");
    top * 2f64.powi((extra as i64 - shift) as i32)
}

/// `2^(bits·deg) · p(m / 2^bits)`, by Horner's rule in the scaled domain.
fn poly_at(coeffs: &[BigInt], m: &BigUint, bits: u32) -> BigInt {
    let deg = coeffs.len() - 1;
    let m = BigInt::from(m.clone());
    let mut acc = coeffs[deg].clone();
    for j in (0..deg).rev() {
        acc = acc * &m + (&coeffs[j] << (bits as u64 * (deg - j) as u64));
    }
    acc
}

/// Bisection on `[1, 2]` for the unique sign change of a polynomial with
/// `p(1) <= 0 < p(2)`. Returns `[lo, hi]` with `p(lo) <= 0 < p(hi)`.
fn bisect_root(coeffs: &[BigInt], bits: u32) -> Interval {
    let mut lo = BigUint::one() << bits;
    let mut hi = BigUint::one() << (bits + 1);
    debug_assert!(!poly_at(coeffs, &lo, bits).is_positive());
    debug_assert!(poly_at(coeffs, &hi, bits).is_positive());
    for _ in 0..bits {
        let mid: BigUint = (&lo + &hi) >> 1;
        if poly_at(coeffs, &mid, bits).is_positive() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // an exact root at lo is enclosed as the point interval
    if poly_at(coeffs, &lo, bits).is_zero() {
        hi = lo.clone();
    }
    Interval { lo, hi, bits }
}

pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Outcome of a certified comparison `b <= base^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Within,
    Equal,
    Exceeds,
    Undetermined,
}

impl Verdict {
    /// The bound holds (strictly or with equality).
    pub fn holds(self) -> bool {
        matches!(self, Verdict::Within | Verdict::Equal)
    }

    pub fn is_violation(self) -> bool {
        self == Verdict::Exceeds
    }
}
