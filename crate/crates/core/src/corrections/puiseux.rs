use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{type4_side, type5};
use crate::error::{Error, Result};
use crate::model::{validate::irreducible_violations, IrreducibleSingularity, NewtonSide, TruncationSpec};
use crate::series::{KJet2, Rational, TruncSeries};

/// Which flex factor to use for ordinary flexes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErratumPolicy {
    /// `1 - H^6/48 + ...`, the value forced by every independent derivation.
    #[default]
    Derived,
    /// `1 - H^6/42 + ...`, as misprinted in the literature.
    Strict,
}

/// `P(a, b) = a^2 b^2 (1+ak)^-3 (1+bk)^-3 - 4 (1+k)^-3 (1+2k)^-3` as a k-jet.
pub(crate) fn p_jet(a: u32, b: u32) -> KJet2 {
    let (a, b) = (Rational::from(a), Rational::from(b));
    let lead = (&KJet2::inverse_cube(&a) * &KJet2::inverse_cube(&b)).scale(&(a.pow(2) * b.pow(2)));
    &lead - &base_jet().scale(&Rational::from(4))
}

/// `(1+k)^-3 (1+2k)^-3`.
pub(crate) fn base_jet() -> KJet2 {
    &KJet2::inverse_cube(&Rational::one()) * &KJet2::inverse_cube(&Rational::from(2))
}

fn check(s: &IrreducibleSingularity) -> Result<()> {
    let v = irreducible_violations(s);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::Invalid(v))
    }
}

/// `e_0 = n, e_1..e_r, e_{r+1} = 0` paired with `d_0..d_r`.
fn steps(s: &IrreducibleSingularity) -> impl Iterator<Item = (i64, u32)> {
    let ds = s.gcd_chain();
    let mut es = vec![i64::from(s.n)];
    es.extend(s.essential.iter().map(|&e| i64::from(e)));
    es.push(0);
    (0..ds.len()).map(move |j| (es[j + 1] - es[j], ds[j]))
}

/// Multiplicative factor of a unibranch singularity.
pub fn thm51(s: &IrreducibleSingularity) -> Result<TruncSeries> {
    check(s)?;
    let mut q = p_jet(s.m, s.n).scale(&Rational::from(s.m * s.n));
    for (de, dj) in steps(s) {
        let term = p_jet(dj, 2 * dj).scale(&(Rational::from(de) * Rational::from(dj)));
        q = &q + &term;
    }
    let mut c: Vec<Rational> = vec![Rational::zero(); 6];
    c[0] = Rational::one();
    for (i, qi) in q.0.iter().enumerate() {
        c.push(-qi / Rational::factorial(6 + i as u32));
    }
    Ok(TruncSeries::from_coeffs(c))
}

/// Raw absorbed-flex count; meaningful only for valid input.
pub(crate) fn absorbed_count(s: &IrreducibleSingularity) -> i64 {
    let (m, n) = (i64::from(s.m), i64::from(s.n));
    let tail: i64 = steps(s).map(|(de, dj)| de * (i64::from(dj) - 1)).sum();
    3 * m * n - 2 * m - 2 * n + 3 * tail
}

/// Number of ordinary flexes a unibranch singularity absorbs.
pub fn flexes_absorbed(s: &IrreducibleSingularity) -> Result<u32> {
    check(s)?;
    let k = absorbed_count(s);
    u32::try_from(k).map_err(|_| Error::Internal(format!("negative absorbed flex count {k} for {s:?}")))
}

/// A unibranch singularity rewritten as one Newton side plus truncations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibleDecomposition {
    pub side: NewtonSide,
    pub truncations: Vec<TruncationSpec>,
}

impl IrreducibleDecomposition {
    /// `1 + side + sum of truncations`, equal to [`thm51`].
    pub fn factor(&self) -> Result<TruncSeries> {
        let mut f = type4_side(&self.side)?.factor();
        for t in &self.truncations {
            f = f + type5(t)?.term;
        }
        Ok(f)
    }
}

pub fn decompose(s: &IrreducibleSingularity) -> Result<IrreducibleDecomposition> {
    check(s)?;
    let ds = s.gcd_chain();
    let es = &s.essential;
    let side = NewtonSide::new([0, s.m], [s.n, 0], vec![num_integer::gcd(s.m, s.n)]);
    let mut truncations = Vec::new();
    if s.n.is_multiple_of(s.m) && !es.is_empty() {
        truncations.push(TruncationSpec {
            ell: 1,
            weight: Rational::from(es[0]),
            s: vec![ds[1]; (s.m / ds[1]) as usize],
        });
    }
    let m = Rational::from(s.m);
    for j in 2..=es.len() {
        let mut w = Rational::from(ds[j - 1]) * Rational::from(es[j - 1]) / &m;
        for k in 1..j {
            w += Rational::from(ds[k - 1] - ds[k]) * Rational::from(es[k - 1]) / &m;
        }
        truncations.push(TruncationSpec {
            ell: s.m / ds[j - 1],
            weight: w,
            s: vec![ds[j]; (ds[j - 1] / ds[j]) as usize],
        });
    }
    Ok(IrreducibleDecomposition { side, truncations })
}

/// Factor of one ordinary flex.
pub fn flex_factor(policy: ErratumPolicy) -> TruncSeries {
    static DERIVED: OnceLock<TruncSeries> = OnceLock::new();
    let f = DERIVED
        .get_or_init(|| thm51(&IrreducibleSingularity::new(1, 3, vec![])).expect("(1,3) is a valid singularity"))
        .clone();
    match policy {
        ErratumPolicy::Derived => f,
        ErratumPolicy::Strict => {
            let mut c = f.coeffs().clone();
            c[6] = Rational::new(-1, 42);
            TruncSeries::from_coeffs(c)
        }
    }
}

/// Combined factor of `count` ordinary flexes.
pub fn flex_equivalent(count: u64) -> TruncSeries {
    flex_equivalent_with(count, ErratumPolicy::Derived)
}

pub fn flex_equivalent_with(count: u64, policy: ErratumPolicy) -> TruncSeries {
    flex_factor(policy).pow(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn unit_plus(c6: Rational, c7: Rational, c8: Rational) -> TruncSeries {
        TruncSeries::one() + TruncSeries::monomial(6, c6) + TruncSeries::monomial(7, c7) + TruncSeries::monomial(8, c8)
    }

    fn sing(m: u32, n: u32, e: &[u32]) -> IrreducibleSingularity {
        IrreducibleSingularity::new(m, n, e.to_vec())
    }

    #[test]
    fn smooth_point_is_trivial() {
        assert_eq!(thm51(&sing(1, 2, &[])).unwrap(), TruncSeries::one());
    }

    #[test]
    fn ordinary_cusp() {
        let got = thm51(&sing(2, 3, &[3])).unwrap();
        assert_eq!(got, unit_plus(q(-4, 15), q(3, 5), q(-19, 28)));
        assert_eq!(flexes_absorbed(&sing(2, 3, &[3])).unwrap(), 8);
    }

    #[test]
    fn ordinary_flex() {
        let want = unit_plus(q(-1, 48), q(3, 70), q(-197, 4480));
        assert_eq!(thm51(&sing(1, 3, &[])).unwrap(), want);
        assert_eq!(flex_factor(ErratumPolicy::Derived), want);
        assert_eq!(flex_factor(ErratumPolicy::Strict).coeff(6), &q(-1, 42));
        assert_eq!(flex_equivalent(1), want);
    }

    #[test]
    fn higher_flexes_match_side_formula() {
        for k in 2..=10u32 {
            let side = type4_side(&NewtonSide::new([0, 1], [k, 0], vec![1])).unwrap();
            assert_eq!(thm51(&sing(1, k, &[])).unwrap(), side.factor(), "k = {k}");
            assert_eq!(flexes_absorbed(&sing(1, k, &[])).unwrap(), k - 2);
        }
    }

    #[test]
    fn tacnode_like_branch_absorbs_3k() {
        for k in [5, 7, 9] {
            assert_eq!(flexes_absorbed(&sing(2, 4, &[k])).unwrap(), 3 * k);
        }
    }

    #[test]
    fn flex_powers_add_linearly() {
        assert_eq!(flex_equivalent(0), TruncSeries::one());
        let six = flex_equivalent(6);
        assert_eq!(six.coeff(6), &q(-1, 8));
        let f = flex_factor(ErratumPolicy::Derived);
        let linear = TruncSeries::one() + (&f - &TruncSeries::one()).scale(&Rational::from(6));
        assert_eq!(six, linear);
    }

    #[test]
    fn decomposition_matches_jet_route() {
        let cases: &[(u32, u32, &[u32])] = &[
            (1, 3, &[]),
            (1, 5, &[]),
            (2, 3, &[3]),
            (2, 4, &[5]),
            (2, 4, &[7]),
            (3, 4, &[4]),
            (3, 5, &[5]),
            (4, 6, &[6, 7]),
            (4, 8, &[10, 11]),
            (4, 8, &[9]),
            (6, 12, &[14, 15]),
            (12, 24, &[28, 30, 31]),
            (12, 18, &[18, 20, 21]),
            (6, 9, &[9, 10]),
            (4, 5, &[5]),
            (6, 8, &[8, 9]),
            (6, 12, &[15, 16]),
            (8, 12, &[12, 14, 15]),
        ];
        for &(m, n, e) in cases {
            let s = sing(m, n, e);
            assert_eq!(decompose(&s).unwrap().factor().unwrap(), thm51(&s).unwrap(), "{s:?}");
        }
    }

    #[test]
    fn invalid_singularities_rejected() {
        assert!(thm51(&sing(2, 4, &[6])).is_err());
        assert!(flexes_absorbed(&sing(3, 2, &[])).is_err());
    }
}
