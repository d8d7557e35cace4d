use super::local::eval_table;
use super::tables::{OMP6, OMP7, OMP8};
use super::{esym, top3, type3};
use crate::error::{Error, Result};
use crate::series::TruncSeries;

fn check(m: u32, contacts: &[u32]) -> Result<()> {
    if m < 2 || contacts.len() > m as usize || contacts.iter().any(|&r| r <= m) {
        return Err(Error::precondition(format!(
            "ordinary {m}-fold point needs at most {m} contacts, each above {m}; got {contacts:?}"
        )));
    }
    Ok(())
}

/// Factor of one nonlinear branch with contact `r` through an ordinary
/// `m`-fold point.
pub fn per_line_factor(m: u32, r: u32) -> TruncSeries {
    let (m, r) = (i64::from(m), i64::from(r));
    let c6 = -r * (2 - 3 * r + r * r - 12 * m + 3 * r * m + 6 * m * m);
    let c7 = 3
        * r
        * (-12 + 2 * r - 2 * r * r + r.pow(3) + 10 * m - 8 * r * m + 3 * r * r * m - 20 * m * m
            + 6 * r * m * m
            + 10 * m.pow(3));
    let c8 = -3
        * r
        * (-64 + 2 * r * r - 3 * r.pow(3) + 2 * r.pow(4) + 10 * r * m - 12 * r * r * m + 6 * r.pow(3) * m + 30 * m * m
            - 30 * r * m * m
            + 12 * r * r * m * m
            - 60 * m.pow(3)
            + 20 * r * m.pow(3)
            + 30 * m.pow(4));
    TruncSeries::one() + top3(c6.into(), c7.into(), c8.into())
}

/// Factor of an ordinary `m`-fold point whose nonlinear branches have
/// contact orders `contacts`; linear branches are omitted.
pub fn ordinary_multiple_point(m: u32, contacts: &[u32]) -> Result<TruncSeries> {
    check(m, contacts)?;
    let mut f = type3(&vec![1; m as usize]).factor();
    for &r in contacts {
        f = &f * &per_line_factor(m, r);
    }
    Ok(f)
}

/// Same factor, through the elementary symmetric functions of `contacts`.
pub fn ordinary_multiple_point_symmetric(m: u32, contacts: &[u32]) -> Result<TruncSeries> {
    check(m, contacts)?;
    let e = esym(contacts, 5);
    let mut args = [i64::from(m); 6];
    for i in 1..=5 {
        args[i] = e[i].to_i64().ok_or_else(|| Error::precondition("contacts too large"))?;
    }
    Ok(TruncSeries::one() + top3(eval_table(OMP6, args), eval_table(OMP7, args), eval_table(OMP8, args)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corrections::type4_side;
    use crate::model::NewtonSide;
    use crate::series::Rational;

    fn unit_plus(c6: (i64, i64), c7: (i64, i64), c8: (i64, i64)) -> TruncSeries {
        TruncSeries::one()
            + TruncSeries::monomial(6, Rational::new(c6.0, c6.1))
            + TruncSeries::monomial(7, Rational::new(c7.0, c7.1))
            + TruncSeries::monomial(8, Rational::new(c8.0, c8.1))
    }

    #[test]
    fn general_node() {
        let want = unit_plus((-1, 6), (101, 280), (-25, 64));
        assert_eq!(ordinary_multiple_point(2, &[3, 3]).unwrap(), want);
    }

    #[test]
    fn biflecnode() {
        let want = unit_plus((-1, 3), (88, 105), (-15, 14));
        assert_eq!(ordinary_multiple_point(2, &[4, 4]).unwrap(), want);
    }

    #[test]
    fn node_with_a_line_branch_is_a_square_root() {
        let half = ordinary_multiple_point(2, &[3]).unwrap();
        assert_eq!(half, unit_plus((-1, 12), (101, 560), (-25, 128)));
        assert_eq!(&half * &half, ordinary_multiple_point(2, &[3, 3]).unwrap());
    }

    #[test]
    fn per_line_factor_is_a_side() {
        for m in 2..=8u32 {
            for r in m + 1..=m + 4 {
                let side = type4_side(&NewtonSide::new([m - 1, 1], [r, 0], vec![1])).unwrap();
                assert_eq!(per_line_factor(m, r), side.factor(), "m = {m}, r = {r}");
            }
        }
    }

    #[test]
    fn symmetric_form_agrees() {
        for m in 2..=7u32 {
            for n in 0..=m {
                let contacts: Vec<u32> = (0..n).map(|i| m + 1 + (i * 3 + m) % 5).collect();
                assert_eq!(
                    ordinary_multiple_point_symmetric(m, &contacts).unwrap(),
                    ordinary_multiple_point(m, &contacts).unwrap(),
                    "m = {m}, contacts = {contacts:?}"
                );
            }
        }
    }

    #[test]
    fn preconditions() {
        assert!(ordinary_multiple_point(2, &[2]).is_err());
        assert!(ordinary_multiple_point(2, &[3, 3, 3]).is_err());
        assert!(ordinary_multiple_point(1, &[]).is_err());
    }
}
