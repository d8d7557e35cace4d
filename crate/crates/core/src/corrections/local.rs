use num_bigint::BigInt;

use super::tables::{L6, L7, L8};
use super::{power_sum, top3, Correction, CorrectionKind};
use crate::error::{Error, Result};
use crate::model::{validate::side_violations, NewtonSide, TruncationSpec};
use crate::series::{Rational, TruncSeries};

/// Evaluate a coefficient table at integer arguments.
pub(crate) fn eval_table<const N: usize>(table: &[(i64, [u32; N])], args: [i64; N]) -> Rational {
    let args = args.map(BigInt::from);
    let total: BigInt = table
        .iter()
        .map(|(c, exps)| {
            let mut t = BigInt::from(*c);
            for (a, &e) in args.iter().zip(exps) {
                t *= a.pow(e);
            }
            t
        })
        .sum();
    Rational::from(total)
}

/// Correction for one Newton polygon side, `-R (L - G)`.
pub fn type4_side(side: &NewtonSide) -> Result<Correction> {
    let v = side_violations(side);
    if !v.is_empty() {
        return Err(Error::Invalid(v));
    }
    if side.suppress {
        return Err(Error::precondition("side is suppressed"));
    }
    let [j0, k0] = side.from.map(i64::from);
    let [j1, k1] = side.to.map(i64::from);
    let at = [j0, k0, j1, k1];
    let l = top3(eval_table(L6, at), -eval_table(L7, at), eval_table(L8, at));

    let s_total = Rational::from(side.lattice_length());
    let g = top3(
        Rational::from(4) * power_sum(&side.s, 5),
        Rational::from(-36) * power_sum(&side.s, 6),
        Rational::from(192) * power_sum(&side.s, 7),
    )
    .scale(&s_total.recip());

    let r = Rational::from(side.area2());
    Ok(Correction::new((l - g).scale(&-r), CorrectionKind::IV))
}

/// Correction for a truncation whose limits are unions of conics.
pub fn type5(t: &TruncationSpec) -> Result<Correction> {
    if t.ell == 0 || !t.weight.is_positive() || t.s.is_empty() || t.s.contains(&0) {
        return Err(Error::precondition(format!(
            "truncation needs ell > 0, W > 0 and positive multiplicities, got ell = {}, W = {}, s = {:?}",
            t.ell, t.weight, t.s
        )));
    }
    let s: u32 = t.s.iter().sum();
    let gap = |p: u32| Rational::from(s).pow(p) - power_sum(&t.s, p);
    let series = top3(Rational::from(4) * gap(5), Rational::from(-36) * gap(6), Rational::from(192) * gap(7));
    let k = -(Rational::from(t.ell) * &t.weight);
    Ok(Correction::new(series.scale(&k), CorrectionKind::V))
}

/// Local contribution `-delta (P''(-rho) H^6/(42 6!) + P'(-rho) H^7/(7 7!) + P(-rho) H^8/8!)`
/// for `P(q) = alpha q^2 + beta q + gamma`.
pub fn lemma331(alpha: &Rational, beta: &Rational, gamma: &Rational, rho: &Rational, delta: u32) -> TruncSeries {
    let q = -rho;
    let p = alpha * &q * &q + beta * &q + gamma;
    let dp = Rational::from(2) * alpha * &q + beta;
    let ddp = Rational::from(2) * alpha;
    top3(ddp / Rational::from(42), dp / Rational::from(7), p).scale(&-Rational::from(delta))
}
