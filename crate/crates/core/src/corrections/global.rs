use super::{power_sum, Correction, CorrectionKind};
use crate::error::{Error, Result};
use crate::series::{Rational, TruncSeries};

/// Correction for a line of multiplicity `m` meeting the rest of a degree-`d`
/// curve with multiplicities `rs`: the antiderivative of
/// `-(m^3/2) exp(-dH) H^2 prod(1 + r H + r^2 H^2/2)`.
pub fn type1(m: u32, rs: &[u32], d: u32) -> Result<Correction> {
    check_type1(m, rs, d)?;
    let m = Rational::from(m);
    let mut integrand = TruncSeries::exp_linear(&-Rational::from(d)).scale(&(-m.pow(3) / Rational::from(2)))
        * TruncSeries::monomial(2, Rational::one());
    for &r in rs {
        let r = Rational::from(r);
        let f = TruncSeries::from_coeffs([Rational::one(), r.clone(), &r * &r / Rational::from(2)]);
        integrand = &integrand * &f;
    }
    Ok(Correction::new(integrand.antiderivative(), CorrectionKind::I))
}

/// Expanded form of [`type1`], in terms of the power sums of `rs`.
pub fn type1_closed_form(m: u32, rs: &[u32], d: u32) -> Result<Correction> {
    check_type1(m, rs, d)?;
    let (p3, p4, p5) = (power_sum(rs, 3), power_sum(rs, 4), power_sum(rs, 5));
    let m = Rational::from(m);
    let mp = |k: u32| m.pow(k);
    let q = |a: Rational, b: i64| a / Rational::from(b);
    let c = [
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        q(mp(3), 6),
        q(-mp(4), 8),
        q(mp(5), 20),
        q(-mp(3) * (mp(3) + &p3), 72),
        q(mp(3) * (mp(4) + Rational::from(4) * &m * &p3 + Rational::from(3) * &p4), 336),
        q(
            -mp(3)
                * (mp(5) + Rational::from(10) * mp(2) * &p3 + Rational::from(15) * &m * &p4 + Rational::from(6) * &p5),
            1920,
        ),
    ];
    Ok(Correction::new(-TruncSeries::from_coeffs(c), CorrectionKind::I))
}

fn check_type1(m: u32, rs: &[u32], d: u32) -> Result<()> {
    let sum: u64 = rs.iter().map(|&r| u64::from(r)).sum();
    if m == 0 || rs.contains(&0) || u64::from(m) + sum != u64::from(d) {
        return Err(Error::precondition(format!("line of multiplicity {m} meeting {rs:?} does not fit degree {d}")));
    }
    Ok(())
}

/// Correction for a nonlinear component of degree `e` and multiplicity `m`
/// in a curve of degree `d`.
pub fn type2(d: u32, e: u32, m: u32) -> Result<Correction> {
    if e < 2 || m == 0 || u64::from(e) * u64::from(m) > u64::from(d) {
        return Err(Error::precondition(format!(
            "component of degree {e} and multiplicity {m} does not fit degree {d}"
        )));
    }
    let (d, e, m) = (Rational::from(d), Rational::from(e), Rational::from(m));
    let q = |a: Rational, b: i64| a / Rational::from(b);
    let five = Rational::from(5);
    let c = [
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        q(Rational::one(), 20),
        q(-(&five * &d + Rational::from(18) * &m), 360),
        q((Rational::from(9) * &d + Rational::from(8) * &m) * &m, 420),
        q(-(&d * &m * &m), 60),
    ];
    let k = Rational::from(-2) * e * m.pow(5);
    Ok(Correction::new(TruncSeries::from_coeffs(c).scale(&k), CorrectionKind::II))
}

/// Elementary symmetric functions `e_0..=e_top` of `xs`.
pub fn esym(xs: &[u32], top: usize) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); top + 1];
    e[0] = Rational::one();
    for &x in xs {
        let x = Rational::from(x);
        for i in (1..=top).rev() {
            let add = &e[i - 1] * &x;
            e[i] += add;
        }
    }
    e
}

/// Correction for a tangent cone whose distinct lines have multiplicities
/// `lines`.
pub fn type3(lines: &[u32]) -> Correction {
    let e = esym(lines, 5);
    let k = &e[1] * (&e[2] * &e[3] - &e[1] * &e[4] - &e[5]);
    let c6 = Rational::new(1, 24);
    let c7 = -&e[1] / Rational::from(28);
    let c8 = &e[1] * &e[1] / Rational::from(64);
    let mut s = TruncSeries::zero();
    for (i, c) in [(6, c6), (7, c7), (8, c8)] {
        s = s + TruncSeries::monomial(i, c);
    }
    Correction::new(s.scale(&-k), CorrectionKind::III)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn series(c: &[(usize, Rational)]) -> TruncSeries {
        c.iter().map(|(i, x)| TruncSeries::monomial(*i, x.clone())).sum()
    }

    #[test]
    fn single_line_alone() {
        let t = type1(1, &[], 1).unwrap();
        let want =
            -series(&[(3, q(1, 6)), (4, q(-1, 8)), (5, q(1, 20)), (6, q(-1, 72)), (7, q(1, 336)), (8, q(-1, 1920))]);
        assert_eq!(t.term, want);
        assert_eq!(type1_closed_form(1, &[], 1).unwrap().term, want);
    }

    // a line of a star of d lines, meeting the others at one point of
    // multiplicity d - 1; the correction is minus the bracketed series
    #[test]
    fn line_of_a_star() {
        for d in 2..10i64 {
            let t = type1(1, &[d as u32 - 1], d as u32).unwrap();
            let c = d - 1;
            let bracket = series(&[
                (3, q(1, 6)),
                (4, q(-1, 8)),
                (5, q(1, 20)),
                (6, q(-(1 + c.pow(3)), 72)),
                (7, q(1 + 4 * c.pow(3) + 3 * c.pow(4), 336)),
                (8, q(-(1 + 10 * c.pow(3) + 15 * c.pow(4) + 6 * c.pow(5)), 1920)),
            ]);
            assert_eq!(t.term, -bracket, "d = {d}");
        }
    }

    #[test]
    fn type1_rejects_bad_meets() {
        assert!(type1(1, &[1], 3).is_err());
        assert!(type1_closed_form(2, &[0, 1], 3).is_err());
    }

    #[test]
    fn type1_routes_agree_exhaustively() {
        fn parts(n: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if n == 0 {
                out.push(acc.clone());
                return;
            }
            for x in (1..=n.min(max)).rev() {
                acc.push(x);
                parts(n - x, x, acc, out);
                acc.pop();
            }
        }
        for m in 1..=5 {
            for rest in 0..=6 {
                let mut all = Vec::new();
                parts(rest, rest, &mut Vec::new(), &mut all);
                for rs in all {
                    let d = m + rest;
                    assert_eq!(type1(m, &rs, d).unwrap(), type1_closed_form(m, &rs, d).unwrap(), "{m} {rs:?}");
                }
            }
        }
    }

    #[test]
    fn smooth_curve_type2() {
        for d in 2..8u32 {
            let t = type2(d, d, 1).unwrap();
            let dd = i64::from(d);
            let want = series(&[(5, q(1, 20)), (6, q(-(5 * dd + 18), 360)), (7, q(9 * dd + 8, 420)), (8, q(-dd, 60))])
                .scale(&Rational::from(-2 * dd));
            assert_eq!(t.term, want);
        }
        let conic = type2(2, 2, 1).unwrap();
        assert_eq!(conic.term.coeff(5), &q(-1, 5));
        let app = TruncSeries::exp_linear(&Rational::from(2)) * conic.factor();
        assert_eq!(app.coeff(5), &q(1, 15));
        assert!(type2(3, 2, 2).is_err());
        assert!(type2(3, 1, 1).is_err());
    }

    #[test]
    fn type3_examples() {
        assert!(type3(&[2, 5]).term.is_zero());
        assert!(type3(&[1, 1]).term.is_zero());
        let three = type3(&[1, 1, 1]).term;
        let want = series(&[(6, q(1, 24)), (7, q(-3, 28)), (8, q(9, 64))]).scale(&Rational::from(-9));
        assert_eq!(three, want);
        for m in 1..=8i64 {
            let got = type3(&vec![1; m as usize]).term;
            let k = m * m * (m - 1) * (m - 2) * (m * m + 3 * m - 3);
            let want = series(&[(6, q(1, 720)), (7, q(-m, 840)), (8, q(m * m, 1920))]).scale(&Rational::from(-k));
            assert_eq!(got, want, "m = {m}");
        }
    }

    #[test]
    fn esym_small() {
        let e = esym(&[1, 2, 3], 5);
        let want: Vec<Rational> = [1, 6, 11, 6, 0, 0].into_iter().map(Rational::from).collect();
        assert_eq!(e, want);
    }
}
