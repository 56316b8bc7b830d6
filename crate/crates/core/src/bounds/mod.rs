//! Lower-bound functions for the independence number and their evaluation.

pub mod integral;
pub mod recurrence;
pub mod table;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::quadrature::Estimate;

pub use integral::{beta_normalizer, chishti, chishti_with, li_zang, li_zang_with, Kernel, DEFAULT_TOL};
pub use recurrence::{
    caro_tuza, fr, fr_f64, minorant_fraction, minorant_l, shearer_s1, shearer_s2, shearer_s2_sequence, CaroTuzaSequence,
    Fraction, FrSequence,
};
pub use table::{bound_table, BoundRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Fr,
    CaroTuza,
    ShearerS1,
    ShearerS2,
    LiZang { m: u32 },
    Chishti,
    Minorant,
}

impl BoundKind {
    pub fn is_exact(self) -> bool {
        matches!(self, BoundKind::Fr | BoundKind::CaroTuza | BoundKind::ShearerS2 | BoundKind::Minorant)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum BoundNumber {
    Exact(BigRational),
    Approx(Estimate),
}

impl BoundNumber {
    pub fn to_f64(&self) -> f64 {
        match self {
            BoundNumber::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            BoundNumber::Approx(e) => e.value,
        }
    }

    pub fn error(&self) -> f64 {
        match self {
            BoundNumber::Exact(_) => 0.0,
            BoundNumber::Approx(e) => e.error,
        }
    }
}

/// One bound function evaluated at one argument.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundValue {
    pub kind: BoundKind,
    pub r: usize,
    pub argument: f64,
    pub value: BoundNumber,
}

fn integer_argument(x: f64) -> Result<usize> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::NegativeDegree(x));
    }
    if x.fract() != 0.0 || x > u32::MAX as f64 {
        return Err(Error::InvalidParameter(format!("degree must be an integer, got {x}")));
    }
    Ok(x as usize)
}

/// Evaluates `kind` at `argument`. Recurrence kinds need an integer argument;
/// `r` is ignored by the graph-only Shearer bounds.
pub fn evaluate(kind: BoundKind, r: usize, argument: f64, tol: f64) -> Result<BoundValue> {
    let value = match kind {
        BoundKind::Fr => BoundNumber::Exact(fr(r, integer_argument(argument)?)?),
        BoundKind::CaroTuza => BoundNumber::Exact(caro_tuza(r, integer_argument(argument)?)?),
        BoundKind::ShearerS2 => BoundNumber::Exact(shearer_s2(integer_argument(argument)?)),
        BoundKind::Minorant => BoundNumber::Exact(minorant_l(r, integer_argument(argument)?)?),
        BoundKind::ShearerS1 => BoundNumber::Approx(Estimate {
            value: shearer_s1(argument)?,
            error: 0.0,
        }),
        BoundKind::LiZang { m } => BoundNumber::Approx(li_zang(r, m, argument, tol)?),
        BoundKind::Chishti => BoundNumber::Approx(chishti(r, argument, tol)?),
    };
    Ok(BoundValue { kind, r, argument, value })
}

fn degree_histogram(h: &Hypergraph) -> Vec<usize> {
    let mut hist = vec![0usize; h.max_degree() + 1];
    for d in h.degrees() {
        hist[d] += 1;
    }
    hist
}

/// `Σ_u f_r(d(u))`, the main lower bound on `α(H)`.
pub fn theorem1_rhs(h: &Hypergraph, r: usize) -> Result<BigRational> {
    let mut seq = FrSequence::new(r)?;
    let hist = degree_histogram(h);
    let (scaled, denom) = seq.common_denominator(hist.len() - 1);
    let total: BigInt = hist.iter().zip(&scaled).map(|(&c, s)| s * BigInt::from(c)).sum();
    Ok(BigRational::new(total, denom))
}

/// `Σ_u f_CT(r)(d(u))`.
pub fn caro_tuza_rhs(h: &Hypergraph, r: usize) -> Result<BigRational> {
    let mut seq = CaroTuzaSequence::new(r)?;
    let mut total = BigRational::zero();
    for (d, &count) in degree_histogram(h).iter().enumerate() {
        if count > 0 {
            total += seq.value(d) * BigRational::from_integer(count.into());
        }
    }
    Ok(total)
}

/// `f_CZPI(r)(d(H)) · n(H)`, with error bound scaled by `n`.
pub fn chishti_rhs(h: &Hypergraph, r: usize, tol: f64) -> Result<Estimate> {
    let avg = h.average_degree()?.to_f64().unwrap_or(f64::NAN);
    let n = h.order() as f64;
    let e = chishti(r, avg, tol)?;
    Ok(Estimate { value: e.value * n, error: e.error * n })
}

/// Renders an exact value as `p/q` (always with a denominator).
pub fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn rhs_values() {
        let single = Hypergraph::new(3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(theorem1_rhs(&single, 3).unwrap(), rat(2, 1));
        let path = Hypergraph::new(5, [vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        assert_eq!(theorem1_rhs(&path, 3).unwrap(), rat(29, 9));
        assert_eq!(theorem1_rhs(&Hypergraph::empty(7), 4).unwrap(), rat(7, 1));
        assert!(matches!(theorem1_rhs(&path, 1), Err(Error::BadUniformity(1))));
        // 4·(2/3) + 8/15
        assert_eq!(caro_tuza_rhs(&path, 3).unwrap(), rat(48, 15));
    }

    #[test]
    fn chishti_rhs_values() {
        let e = chishti_rhs(&Hypergraph::empty(4), 3, DEFAULT_TOL).unwrap();
        assert!((e.value - 4.0).abs() < 1e-8);
        let edge = Hypergraph::new(2, [vec![0, 1]]).unwrap();
        let e = chishti_rhs(&edge, 2, DEFAULT_TOL).unwrap();
        assert!((e.value - 1.0).abs() < 1e-8);
        assert!(chishti_rhs(&Hypergraph::empty(0), 3, DEFAULT_TOL).is_err());
    }

    #[test]
    fn evaluate_dispatch() {
        let v = evaluate(BoundKind::Fr, 3, 2.0, DEFAULT_TOL).unwrap();
        assert_eq!(v.value, BoundNumber::Exact(rat(5, 9)));
        assert_eq!(v.value.error(), 0.0);
        assert!(evaluate(BoundKind::Fr, 3, 2.5, DEFAULT_TOL).is_err());
        let v = evaluate(BoundKind::Chishti, 3, 2.5, DEFAULT_TOL).unwrap();
        assert!(v.value.error() <= DEFAULT_TOL);
        assert!(BoundKind::Minorant.is_exact());
        assert!(!BoundKind::LiZang { m: 1 }.is_exact());
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_string(&rat(29, 9)), "29/9");
        assert_eq!(rational_string(&rat(4, 2)), "2/1");
    }
}
