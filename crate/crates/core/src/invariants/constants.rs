//! The growth-rate constants `Θ_d`, `Γ_d`, `θ_d` and the conjectured bases.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use super::certified::{Base, Interval, START_BITS};

/// One constant with its certified enclosure and the residual of its
/// defining equation at the enclosure midpoint.
#[derive(Clone, Debug, Serialize)]
pub struct ConstantValue {
    pub d: u32,
    pub value: f64,
    pub lo: f64,
    pub hi: f64,
    pub residual: f64,
    #[serde(skip)]
    pub enclosure: Interval,
}

#[derive(Clone, Debug, Serialize)]
pub struct Maximality {
    /// `Θ_4 >= Θ_d` for every `1 <= d <= d_max`, decided by `4^(d+1) >= d^5`.
    pub theta_4_is_max: bool,
    /// `Γ_3 >= Γ_d` for every `1 <= d <= d_max`, decided on enclosures.
    pub gamma_3_is_max: bool,
    /// Indices where a sweep failed (empty when both hold).
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Constants {
    pub d_max: u32,
    pub theta: ConstantValue,
    pub gamma: ConstantValue,
    pub gamma_squared: f64,
    pub theta_plus_one: f64,
    pub gamma_plus_one: f64,
    pub theta_d: Vec<ConstantValue>,
    pub gamma_d: Vec<ConstantValue>,
    pub theta_small_d: Vec<ConstantValue>,
    pub conjecture_base: Vec<ConstantValue>,
    pub maximality: Maximality,
}

/// `x^(2d) - Σ_{j<d} x^j`, zero exactly at `Γ_d`.
fn gamma_residual(d: u32, x: &Interval) -> f64 {
    // f_d(x) - 1 = Σ_{i=d+1}^{2d} x^(-i) - 1, evaluated exactly at the midpoint
    let (m, bits) = x.midpoint();
    let m = BigInt::from(m);
    let scale = |e: u32| BigInt::one() << (bits as u64 * e as u64);
    // numerator over denominator m^(2d): Σ_{i=d+1}^{2d} m^(2d-i) 2^(bits·i) - m^(2d)
    let mut num = -m.pow(2 * d);
    for i in d + 1..=2 * d {
        num += m.pow(2 * d - i) * scale(i);
    }
    ratio_f64(&num, &m.pow(2 * d))
}

/// `x^d - Σ_{i<d} x^i` at the midpoint, divided by `x^d`.
fn theta_small_residual(d: u32, x: &Interval) -> f64 {
    let (m, bits) = x.midpoint();
    let m = BigInt::from(m);
    let scale = |e: u32| BigInt::one() << (bits as u64 * e as u64);
    let mut num = m.pow(d);
    for i in 0..d {
        num -= m.pow(i) * scale(d - i);
    }
    ratio_f64(&num, &m.pow(d))
}

/// `a^(1/k)` residual `|x^k / a - 1|` at the midpoint.
fn radical_residual(a: &BigUint, k: u32, x: &Interval) -> f64 {
    let (m, bits) = x.midpoint();
    let num = BigInt::from(m.pow(k)) - BigInt::from(a.clone()) * (BigInt::one() << (bits as u64 * k as u64));
    let den = BigInt::from(a.clone()) * (BigInt::one() << (bits as u64 * k as u64));
    ratio_f64(&num, &den)
}

fn ratio_f64(num: &BigInt, den: &BigInt) -> f64 {
    let shift = den.bits().saturating_sub(60);
    let d = (den >> shift).to_f64().unwrap_or(f64::INFINITY);
    let n_bits = num.bits();
    if n_bits + 1100 < shift {
        return 0.0;
    }
    let nshift = n_bits.saturating_sub(60);
    let n = (num.abs() >> nshift).to_f64().unwrap_or(f64::INFINITY);
    n / d * 2f64.powi(nshift as i32 - shift as i32)
}

fn value_of(base: &Base, d: u32, residual: impl Fn(&Interval) -> f64) -> ConstantValue {
    let enclosure = base.enclose(START_BITS);
    ConstantValue {
        d,
        value: enclosure.midpoint_f64(),
        lo: enclosure.lo_f64(),
        hi: enclosure.hi_f64(),
        residual: residual(&enclosure),
        enclosure,
    }
}

pub fn theta_d_value(d: u32) -> ConstantValue {
    let base = Base::theta_d(d);
    let a = BigUint::from(d);
    value_of(&base, d, |x| radical_residual(&a, d + 1, x))
}

pub fn gamma_d_value(d: u32) -> ConstantValue {
    value_of(&Base::GammaRoot(d), d, |x| gamma_residual(d, x))
}

pub fn theta_small_value(d: u32) -> ConstantValue {
    value_of(&Base::ThetaSmallRoot(d), d, |x| theta_small_residual(d, x))
}

pub fn conjecture_value(d: u32) -> ConstantValue {
    let base = Base::conjecture(d);
    let Base::Radical { a, k } = &base else { unreachable!() };
    let (a, k) = (a.clone(), *k);
    value_of(&base, d, |x| radical_residual(&a, k, x))
}

/// Every constant for `1 <= d <= d_max` (conjectured bases from `d = 2`),
/// with the two maximality sweeps.
pub fn solve_constants(d_max: u32) -> Constants {
    let d_max = d_max.max(1);
    let theta_d: Vec<_> = (1..=d_max).map(theta_d_value).collect();
    let gamma_d: Vec<_> = (1..=d_max).map(gamma_d_value).collect();
    let theta_small_d = (1..=d_max).map(theta_small_value).collect();
    let conjecture_base = (2..=d_max.max(2)).map(conjecture_value).collect();

    let mut failures = Vec::new();
    let four = BigUint::from(4u32);
    for d in 1..=d_max {
        if four.pow(d + 1) < BigUint::from(d).pow(5) {
            failures.push(format!("theta_{d}"));
        }
    }
    let theta_4_is_max = failures.is_empty();
    let gamma = gamma_d_value(3);
    for g in &gamma_d {
        if g.d != 3 && !gamma.enclosure.dominates(&g.enclosure) {
            failures.push(format!("gamma_{}", g.d));
        }
    }
    let gamma_3_is_max = failures.iter().all(|f| f.starts_with("theta"));

    Constants {
        d_max,
        theta: theta_d_value(4),
        gamma_squared: Base::gamma().squared().to_f64(),
        theta_plus_one: Base::theta().plus_one().to_f64(),
        gamma_plus_one: Base::gamma().plus_one().to_f64(),
        gamma,
        theta_d,
        gamma_d,
        theta_small_d,
        conjecture_base,
        maximality: Maximality { theta_4_is_max, gamma_3_is_max, failures },
    }
}
