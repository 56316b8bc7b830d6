use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{li_zang, chishti, rational_string, CaroTuzaSequence, FrSequence};
use crate::error::Result;
use crate::quadrature::Estimate;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundRow {
    pub d: usize,
    pub li_zang: Estimate,
    pub chishti: Estimate,
    pub caro_tuza: BigRational,
    pub fr: BigRational,
}

/// Rows `d = 0..=d_max` of `(f_LZ(r,m), f_CZPI(r), f_CT(r), f_r)`.
///
/// Integral columns are evaluated in parallel; each row is independent so the
/// result does not depend on the thread count.
pub fn bound_table(r: usize, d_max: usize, m: u32, tol: f64) -> Result<Vec<BoundRow>> {
    let mut frs = FrSequence::new(r)?;
    let mut cts = CaroTuzaSequence::new(r)?;
    let exact: Vec<(BigRational, BigRational)> =
        (0..=d_max).map(|d| (cts.value(d), frs.value(d))).collect();
    let integrals = (0..=d_max)
        .into_par_iter()
        .map(|d| Ok((li_zang(r, m, d as f64, tol)?, chishti(r, d as f64, tol)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(exact
        .into_iter()
        .zip(integrals)
        .enumerate()
        .map(|(d, ((caro_tuza, fr), (li_zang, chishti)))| BoundRow { d, li_zang, chishti, caro_tuza, fr })
        .collect())
}

pub const CSV_HEADER: &str = "d,f_LZ,f_CZPI,f_CT,f_r";

pub fn to_csv(rows: &[BoundRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        writeln!(
            out,
            "{},{:.6},{:.6},{:.6},{:.6}",
            row.d,
            row.li_zang.value,
            row.chishti.value,
            row.caro_tuza.to_f64().unwrap_or(f64::NAN),
            row.fr.to_f64().unwrap_or(f64::NAN),
        )
        .unwrap();
    }
    out
}

pub fn to_json(rows: &[BoundRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| {
                json!({
                    "d": row.d,
                    "f_LZ": row.li_zang.value,
                    "f_LZ_error": row.li_zang.error,
                    "f_CZPI": row.chishti.value,
                    "f_CZPI_error": row.chishti.error,
                    "f_CT": rational_string(&row.caro_tuza),
                    "f_r": rational_string(&row.fr),
                })
            })
            .collect(),
    )
}
