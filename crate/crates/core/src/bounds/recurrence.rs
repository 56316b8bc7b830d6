//! Exact degree-indexed bound functions.
//!
//! Sequences are kept as *unreduced* fractions over their natural product
//! denominators, so stepping the recurrence is a handful of small-by-big
//! multiplications and no gcd. Reduce with [`Fraction::to_rational`] only
//! when a canonical value is needed.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `numer / denom` with `denom > 0`, not necessarily in lowest terms.
#[derive(Debug, Clone)]
pub struct Fraction {
    pub numer: BigInt,
    pub denom: BigInt,
}

impl Fraction {
    pub fn new(numer: BigInt, denom: BigInt) -> Self {
        debug_assert!(denom > BigInt::zero());
        Fraction { numer, denom }
    }

    pub fn one() -> Self {
        Fraction::new(BigInt::one(), BigInt::one())
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.numer.clone(), self.denom.clone())
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        &self.numer * &other.denom == &other.numer * &self.denom
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some((&self.numer * &other.denom).cmp(&(&other.numer * &self.denom)))
    }
}

fn check_r(r: usize) -> Result<()> {
    if r < 2 {
        Err(Error::BadUniformity(r))
    } else {
        Ok(())
    }
}

/// `f_r(0..=len-1)`, where `f_r(0) = 1` and
/// `f_r(d) = (1 + ((r-1)d² - d) f_r(d-1)) / (1 + (r-1)d²)`.
///
/// The denominator of entry `d` is exactly `Π_{i=1..d} (1 + (r-1)i²)`.
#[derive(Debug, Clone)]
pub struct FrSequence {
    r: usize,
    values: Vec<Fraction>,
}

impl FrSequence {
    pub fn new(r: usize) -> Result<Self> {
        check_r(r)?;
        Ok(FrSequence { r, values: vec![Fraction::one()] })
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    /// `1 + (r-1)d²`, the step-`d` denominator factor.
    pub fn step_denominator(&self, d: usize) -> BigInt {
        BigInt::from(1u64) + BigInt::from((self.r - 1) as u64) * BigInt::from(d as u64).pow(2)
    }

    pub fn extend_to(&mut self, d: usize) {
        while self.values.len() <= d {
            let k = self.values.len();
            let prev = self.values.last().unwrap();
            let k2 = BigInt::from(k as u64).pow(2);
            let coeff = BigInt::from((self.r - 1) as u64) * &k2 - BigInt::from(k as u64);
            let q = self.step_denominator(k);
            let numer = &prev.denom + coeff * &prev.numer;
            let denom = &prev.denom * q;
            self.values.push(Fraction::new(numer, denom));
        }
    }

    /// Unreduced `f_r(d)`, extending the sequence as needed.
    pub fn get(&mut self, d: usize) -> &Fraction {
        self.extend_to(d);
        &self.values[d]
    }

    pub fn value(&mut self, d: usize) -> BigRational {
        self.get(d).to_rational()
    }

    /// `(scaled, D)` with `scaled[d] = f_r(d) · D` for `d ≤ max`, all integers,
    /// where `D` is the denominator of entry `max`.
    pub fn common_denominator(&mut self, max: usize) -> (Vec<BigInt>, BigInt) {
        self.extend_to(max);
        let mut scaled = vec![BigInt::zero(); max + 1];
        let mut mult = BigInt::one();
        for d in (0..=max).rev() {
            scaled[d] = &self.values[d].numer * &mult;
            if d > 0 {
                mult *= self.step_denominator(d);
            }
        }
        (scaled, self.values[max].denom.clone())
    }
}

pub fn fr(r: usize, d: usize) -> Result<BigRational> {
    Ok(FrSequence::new(r)?.value(d))
}

/// Double-precision iteration of the same recurrence.
pub fn fr_f64(r: usize, d: usize) -> Result<f64> {
    check_r(r)?;
    let c = (r - 1) as f64;
    let mut f = 1.0;
    for k in 1..=d {
        let k = k as f64;
        f = (1.0 + (c * k * k - k) * f) / (1.0 + c * k * k);
    }
    Ok(f)
}

/// `f_CT(r)(0..)` via `f(d) = f(d-1) · (r-1)d / ((r-1)d + 1)`.
#[derive(Debug, Clone)]
pub struct CaroTuzaSequence {
    r: usize,
    values: Vec<Fraction>,
}

impl CaroTuzaSequence {
    pub fn new(r: usize) -> Result<Self> {
        check_r(r)?;
        Ok(CaroTuzaSequence { r, values: vec![Fraction::one()] })
    }

    pub fn get(&mut self, d: usize) -> &Fraction {
        while self.values.len() <= d {
            let k = (self.r - 1) as u64 * self.values.len() as u64;
            let prev = self.values.last().unwrap();
            let next = Fraction::new(&prev.numer * BigInt::from(k), &prev.denom * BigInt::from(k + 1));
            self.values.push(next);
        }
        &self.values[d]
    }

    pub fn value(&mut self, d: usize) -> BigRational {
        self.get(d).to_rational()
    }
}

pub fn caro_tuza(r: usize, d: usize) -> Result<BigRational> {
    Ok(CaroTuzaSequence::new(r)?.value(d))
}

/// Solution of the difference equation `(d+1)f(d) = 1 + (d-d²)(f(d) - f(d-1))`,
/// `f(0) = 1`, for `d = 0..=max`.
pub fn shearer_s2_sequence(max: usize) -> Vec<Fraction> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(Fraction::one());
    for d in 1..=max {
        let prev: &Fraction = out.last().unwrap();
        let d = BigInt::from(d as u64);
        let lin = &d - &d * &d; // d - d², non-positive
        // f(d) · ((d+1) - lin) = 1 - lin · f(d-1)
        let lhs = (&d + 1u32) - &lin;
        let numer = &prev.denom - &lin * &prev.numer;
        let denom = lhs * &prev.denom;
        out.push(Fraction::new(numer, denom));
    }
    out
}

pub fn shearer_s2(d: usize) -> BigRational {
    shearer_s2_sequence(d)[d].to_rational()
}

/// `(d ln d - d + 1) / (d - 1)²`, continuous at `d = 0` and `d = 1`.
pub fn shearer_s1(d: f64) -> Result<f64> {
    if d.is_nan() || d < 0.0 {
        return Err(Error::NegativeDegree(d));
    }
    if d == 0.0 {
        return Ok(1.0);
    }
    let e = d - 1.0;
    if e.abs() < 1e-4 {
        // Σ_{k≥2} (-1)^k e^{k-2} / (k(k-1)), first three terms
        return Ok(0.5 - e / 6.0 + e * e / 12.0);
    }
    Ok((d * e.ln_1p() - e) / (e * e))
}

/// `L(r,d) = ((2r-1)d + 3r) / (r(d² + 5d + 5))`.
pub fn minorant_l(r: usize, d: usize) -> Result<BigRational> {
    check_r(r)?;
    let (r, d) = (BigInt::from(r as u64), BigInt::from(d as u64));
    let numer = (BigInt::from(2u32) * &r - 1u32) * &d + BigInt::from(3u32) * &r;
    let denom = &r * (&d * &d + BigInt::from(5u32) * &d + 5u32);
    Ok(BigRational::new(numer, denom))
}

/// Unreduced `L(r,d)`, for bulk comparisons.
pub fn minorant_fraction(r: usize, d: usize) -> Fraction {
    let (r, d) = (r as u64, d as u64);
    Fraction::new(
        BigInt::from((2 * r - 1) * d + 3 * r),
        BigInt::from(r) * BigInt::from(d * d + 5 * d + 5),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    /// Straight reduced-rational iteration, independent of the unreduced path.
    fn fr_naive(r: i64, d: i64) -> BigRational {
        let mut f = rat(1, 1);
        for k in 1..=d {
            let k2 = k * k;
            f = (rat(1, 1) + rat((r - 1) * k2 - k, 1) * f) / rat(1 + (r - 1) * k2, 1);
        }
        f
    }

    #[test]
    fn fr_values() {
        assert_eq!(fr(3, 0).unwrap(), rat(1, 1));
        assert_eq!(fr(3, 1).unwrap(), rat(2, 3));
        assert_eq!(fr(3, 2).unwrap(), rat(5, 9));
        assert_eq!(fr(3, 3).unwrap(), rat(28, 57));
        assert_eq!(fr(2, 2).unwrap(), rat(2, 5));
        assert_eq!(fr(2, 3).unwrap(), rat(17, 50));
        assert!(matches!(fr(1, 3), Err(Error::BadUniformity(1))));
        for r in 2..7 {
            for d in 0..30 {
                assert_eq!(fr(r, d).unwrap(), fr_naive(r as i64, d as i64));
            }
        }
    }

    #[test]
    fn fr_at_one_is_r_minus_one_over_r() {
        for r in 2..12 {
            assert_eq!(fr(r, 1).unwrap(), rat(r as i64 - 1, r as i64));
        }
    }

    #[test]
    fn float_path_tracks_exact() {
        for r in 2..8 {
            for d in [0, 1, 2, 10, 40, 200] {
                let exact = fr(r, d).unwrap().to_f64().unwrap();
                assert!((fr_f64(r, d).unwrap() - exact).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn common_denominator_scaling() {
        let mut seq = FrSequence::new(4).unwrap();
        let (scaled, den) = seq.common_denominator(6);
        for (d, s) in scaled.iter().enumerate() {
            assert_eq!(BigRational::new(s.clone(), den.clone()), fr(4, d).unwrap());
        }
    }

    #[test]
    fn caro_tuza_values() {
        assert_eq!(caro_tuza(3, 0).unwrap(), rat(1, 1));
        assert_eq!(caro_tuza(3, 1).unwrap(), rat(2, 3));
        assert_eq!(caro_tuza(3, 2).unwrap(), rat(8, 15));
        assert!(caro_tuza(0, 2).is_err());
    }

    #[test]
    fn caro_tuza_matches_inverse_generalized_binomial() {
        // 1 / C(d + s, d) = Γ(d+1)Γ(s+1)/Γ(d+s+1), s = 1/(r-1)
        for r in 2..8usize {
            let s = 1.0 / (r - 1) as f64;
            for d in 0..50usize {
                let df = d as f64;
                let lg = libm::lgamma(df + 1.0) + libm::lgamma(s + 1.0) - libm::lgamma(df + s + 1.0);
                let approx = lg.exp();
                let exact = caro_tuza(r, d).unwrap().to_f64().unwrap();
                assert!((approx - exact).abs() < 1e-12, "r={r} d={d}");
            }
        }
    }

    #[test]
    fn shearer_s2_values() {
        assert_eq!(shearer_s2(0), rat(1, 1));
        assert_eq!(shearer_s2(1), rat(1, 2));
        assert_eq!(shearer_s2(2), rat(2, 5));
        assert_eq!(shearer_s2(3), rat(17, 50));
    }

    #[test]
    fn shearer_s1_values() {
        assert_eq!(shearer_s1(0.0).unwrap(), 1.0);
        assert_eq!(shearer_s1(1.0).unwrap(), 0.5);
        let two = shearer_s1(2.0).unwrap();
        assert!((two - (2.0 * 2f64.ln() - 1.0)).abs() < 1e-15);
        assert!((two - 0.386294).abs() < 1e-6);
        // two-sided limit at 1
        let closed = |d: f64| (d * d.ln() - d + 1.0) / ((d - 1.0) * (d - 1.0));
        for h in [1e-3, 2e-4] {
            assert!((shearer_s1(1.0 + h).unwrap() - closed(1.0 + h)).abs() < 1e-9);
            assert!((shearer_s1(1.0 - h).unwrap() - closed(1.0 - h)).abs() < 1e-9);
        }
        let closed_l1p = |d: f64| (d * (d - 1.0).ln_1p() - (d - 1.0)) / ((d - 1.0) * (d - 1.0));
        assert!((closed_l1p(1.0 + 1e-6) - 0.5).abs() < 1e-6);
        assert!((closed_l1p(1.0 - 1e-6) - 0.5).abs() < 1e-6);
        assert!((shearer_s1(1.0 + 1e-6).unwrap() - 0.5).abs() < 1e-6);
        // continuity across the series switch
        let below = shearer_s1(1.0 + 0.99e-4).unwrap();
        let above = shearer_s1(1.0 + 1.01e-4).unwrap();
        assert!((below - above).abs() < 1e-6);
        assert!(matches!(shearer_s1(-0.5), Err(Error::NegativeDegree(_))));
        assert!(shearer_s1(f64::NAN).is_err());
    }

    #[test]
    fn minorant_values() {
        assert_eq!(minorant_l(3, 0).unwrap(), rat(3, 5));
        assert_eq!(minorant_l(2, 0).unwrap(), rat(3, 5));
        // (5·2 + 9) / (3·19)
        assert_eq!(minorant_l(3, 2).unwrap(), rat(19, 57));
        assert_eq!(minorant_fraction(3, 2).to_rational(), rat(1, 3));
    }

    #[test]
    fn fraction_ordering_ignores_representation() {
        let a = Fraction::new(2.into(), 4.into());
        let b = Fraction::new(1.into(), 2.into());
        assert_eq!(a, b);
        assert!(Fraction::new(2.into(), 3.into()) > b);
    }
}
