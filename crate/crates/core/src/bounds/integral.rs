//! The two integral-form competitor bounds.
//!
//! With `a = 1/(r-1)²`, `b = (r-2)/(r-1)` and `p = a/m`:
//!
//! ```text
//! f_LZ(r,m)(x) = (m/B) ∫₀¹ (1-t)^p / (t^b (m + (x-m)t)) dt,   B = Beta(1-b, p)
//! f_CZPI(r)(x) = 1/(r-1) ∫₀¹ (1-t) / (t^b (1 + ((r-1)x-1)t)) dt
//! ```
//!
//! The `t^{-b}` singularity at 0 is removed with `t = u^{r-1}`. For the first
//! bound the `(1-t)^{p-1}`-type behaviour at 1 (strong when `p` is small and
//! `x` near 0) is removed on `[1/2, 1]` with `1 - t = s^{1/p}`.
//!
//! [`Kernel::Printed`] uses the denominators `m - (x-m)t` and
//! `1 - ((r-1)x-1)t`. Those equal the corrected kernels at the reflected
//! argument `2m - x` (resp. `2/(r-1) - x`), and have a pole inside `(0,1)`
//! exactly when that reflected argument is negative.

use crate::error::{Error, Result};
use crate::quadrature::{integrate, Estimate};

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Kernel {
    /// `m + (x-m)t` and `1 + ((r-1)x-1)t`; reproduces `f_S1` at `r = 2`.
    #[default]
    Corrected,
    Printed,
}

fn validate(r: usize, x: f64, tol: f64) -> Result<()> {
    if r < 2 {
        return Err(Error::BadUniformity(r));
    }
    if x.is_nan() || x < 0.0 {
        return Err(Error::NegativeDegree(x));
    }
    if !x.is_finite() {
        return Err(Error::InvalidParameter(format!("argument must be finite, got {x}")));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    Ok(())
}

fn exponents(r: usize, m: u32) -> (f64, f64) {
    let rm1 = (r - 1) as f64;
    let a = 1.0 / (rm1 * rm1);
    let b = (r as f64 - 2.0) / rm1;
    (a / m as f64, b)
}

/// `B = ∫₀¹ (1-t)^{p-1} t^{-b} dt = Beta(1-b, p)`, via log-Gamma.
pub fn beta_normalizer(r: usize, m: u32) -> Result<f64> {
    if r < 2 {
        return Err(Error::BadUniformity(r));
    }
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    let (p, b) = exponents(r, m);
    let alpha = 1.0 - b;
    Ok((libm::lgamma(alpha) + libm::lgamma(p) - libm::lgamma(alpha + p)).exp())
}

pub fn li_zang(r: usize, m: u32, x: f64, tol: f64) -> Result<Estimate> {
    li_zang_with(r, m, x, tol, Kernel::Corrected)
}

pub fn li_zang_with(r: usize, m: u32, x: f64, tol: f64, kernel: Kernel) -> Result<Estimate> {
    validate(r, x, tol)?;
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    let x = match kernel {
        Kernel::Corrected => x,
        Kernel::Printed => {
            let reflected = 2.0 * m as f64 - x;
            if reflected < 0.0 {
                return Err(Error::InteriorPole { argument: x });
            }
            reflected
        }
    };
    let (p, b) = exponents(r, m);
    let mf = m as f64;
    let rm1 = (r - 1) as f64;
    let norm = beta_normalizer(r, m)?;
    let scale = mf / norm;
    let piece_tol = 0.5 * tol / scale;

    // t ∈ [0, 1/2], t = u^{r-1}
    let u_max = 0.5f64.powf(1.0 / rm1);
    let head = integrate(
        |u| {
            let w = u.powi(r as i32 - 1);
            rm1 * (1.0 - w).powf(p) / (mf * (1.0 - w) + x * w)
        },
        0.0,
        u_max,
        piece_tol,
    )?;
    // t ∈ [1/2, 1], 1 - t = s^{1/p}
    let s_max = 0.5f64.powf(p);
    let tail = integrate(
        |s| {
            let q = s.powf(1.0 / p);
            let t = 1.0 - q;
            if x == 0.0 {
                t.powf(-b) / (p * mf)
            } else {
                q * t.powf(-b) / (p * (mf * q + x * t))
            }
        },
        0.0,
        s_max,
        piece_tol,
    )?;
    Ok(Estimate {
        value: scale * (head.value + tail.value),
        error: scale * (head.error + tail.error),
    })
}

pub fn chishti(r: usize, x: f64, tol: f64) -> Result<Estimate> {
    chishti_with(r, x, tol, Kernel::Corrected)
}

pub fn chishti_with(r: usize, x: f64, tol: f64, kernel: Kernel) -> Result<Estimate> {
    validate(r, x, tol)?;
    let rm1 = (r - 1) as f64;
    let x = match kernel {
        Kernel::Corrected => x,
        Kernel::Printed => {
            let reflected = 2.0 / rm1 - x;
            if reflected < 0.0 {
                return Err(Error::InteriorPole { argument: x });
            }
            reflected
        }
    };
    // After t = u^{r-1} the prefactor 1/(r-1) cancels the Jacobian, and
    // 1 + ((r-1)x - 1)w = (1-w) + (r-1)x·w.
    integrate(
        |u| {
            let w = u.powi(r as i32 - 1);
            let num = 1.0 - w;
            let den = num + rm1 * x * w;
            if den == 0.0 {
                1.0
            } else {
                num / den
            }
        },
        0.0,
        1.0,
        tol,
    )
}
