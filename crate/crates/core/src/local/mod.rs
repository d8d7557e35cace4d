//! Newton polygons of explicit local equations and the squarefree
//! decomposition that turns a side into root multiplicities.
//!
//! The input is a plane curve `sum c x^(d-j-k) y^j z^k` already moved so that
//! the point of interest is `(1:0:0)` and the tangent line of interest is
//! `z = 0`. Only the `(j, k)` exponents and the coefficients matter.

mod poly;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{NewtonSide, Violation};
use crate::series::Rational;

pub use poly::{yun_factors, yun_squarefree, Poly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialSupport {
    pub degree: u32,
    /// `(j, k, coefficient)` of `x^(d-j-k) y^j z^k`.
    pub terms: Vec<(u32, u32, Rational)>,
}

impl MonomialSupport {
    pub fn new(degree: u32, terms: Vec<(u32, u32, Rational)>) -> Self {
        MonomialSupport { degree, terms }
    }

    /// Support with unit coefficients.
    pub fn from_points(degree: u32, points: &[(u32, u32)]) -> Self {
        MonomialSupport::new(degree, points.iter().map(|&(j, k)| (j, k, Rational::one())).collect())
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut seen = BTreeMap::new();
        for (i, (j, k, c)) in self.terms.iter().enumerate() {
            let mut bad = |m: String| out.push(Violation { path: format!("terms[{i}]"), message: m });
            if u64::from(*j) + u64::from(*k) > u64::from(self.degree) {
                bad(format!("j + k = {} exceeds the degree {}", j + k, self.degree));
            }
            if c.is_zero() {
                bad("zero coefficient".into());
            }
            if let Some(first) = seen.insert((*j, *k), i) {
                bad(format!("duplicates the monomial of terms[{first}]"));
            }
        }
        out
    }

    fn coeff_at(&self, j: u32, k: u32) -> Rational {
        self.terms.iter().find(|t| t.0 == j && t.1 == k).map(|t| t.2.clone()).unwrap_or_else(Rational::zero)
    }

    fn checked(&self) -> Result<()> {
        if self.terms.is_empty() {
            return Err(Error::EmptySupport);
        }
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(v))
        }
    }
}

/// Vertices of the lower-left boundary, by increasing `j` and decreasing `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polygon {
    pub vertices: Vec<[u32; 2]>,
}

impl Polygon {
    pub fn sides(&self) -> Vec<Side> {
        self.vertices.windows(2).map(|w| Side { from: w[0], to: w[1] }).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Side {
    pub from: [u32; 2],
    pub to: [u32; 2],
}

impl Side {
    fn deltas(&self) -> (u32, u32) {
        (self.to[0] - self.from[0], self.from[1] - self.to[1])
    }

    /// Slope strictly between -1 and 0.
    pub fn qualifies(&self) -> bool {
        let (dj, dk) = self.deltas();
        0 < dk && dk < dj
    }

    pub fn lattice_length(&self) -> u32 {
        let (dj, dk) = self.deltas();
        num_integer::gcd(dj, dk)
    }
}

fn cross(o: [u32; 2], a: [u32; 2], b: [u32; 2]) -> i64 {
    let [ox, oy] = o.map(i64::from);
    let [ax, ay] = a.map(i64::from);
    let [bx, by] = b.map(i64::from);
    (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)
}

/// Boundary of the convex hull of the union of the positive quadrants at the
/// support points.
pub fn newton_polygon(supp: &MonomialSupport) -> Result<Polygon> {
    supp.checked()?;
    let mut pts: Vec<[u32; 2]> = supp.terms.iter().map(|t| [t.0, t.1]).collect();
    pts.sort_unstable();
    // staircase of minimal points: j increasing, k strictly decreasing
    let mut stair: Vec<[u32; 2]> = Vec::new();
    for p in pts {
        if stair.last().is_none_or(|q| p[1] < q[1]) {
            stair.push(p);
        }
    }
    let mut hull: Vec<[u32; 2]> = Vec::with_capacity(stair.len());
    for p in stair {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    Ok(Polygon { vertices: hull })
}

/// Sides with slope strictly between -1 and 0, by increasing `j`.
pub fn qualifying_sides(p: &Polygon) -> Vec<Side> {
    p.sides().into_iter().filter(Side::qualifies).collect()
}

/// Coefficients and root multiplicities along one side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideData {
    pub from: [u32; 2],
    pub to: [u32; 2],
    #[serde(rename = "S")]
    pub lattice_length: u32,
    /// `gamma_t` at the `t`-th lattice point from `from`.
    pub gamma: Vec<Rational>,
    /// `(multiplicity, number of distinct roots)`, by decreasing multiplicity.
    pub profile: Vec<(u32, u32)>,
}

impl SideData {
    /// Root multiplicities `s_i`, one entry per distinct root.
    pub fn root_multiplicities(&self) -> Vec<u32> {
        self.profile.iter().flat_map(|&(i, g)| std::iter::repeat_n(i, g as usize)).collect()
    }

    pub fn to_newton_side(&self) -> NewtonSide {
        NewtonSide::new(self.from, self.to, self.root_multiplicities())
    }
}

/// Read the side polynomial `sum gamma_t xi^(S-t) eta^t` and decompose it.
pub fn side_data(supp: &MonomialSupport, side: &Side) -> Result<SideData> {
    supp.checked()?;
    if side.from[0] >= side.to[0] || side.from[1] <= side.to[1] {
        return Err(Error::precondition(format!("{side:?} is not a side of negative slope")));
    }
    let s = side.lattice_length();
    let (dj, dk) = side.deltas();
    let (sj, sk) = (dj / s, dk / s);
    let gamma: Vec<Rational> = (0..=s).map(|t| supp.coeff_at(side.from[0] + t * sj, side.from[1] - t * sk)).collect();
    if gamma[0].is_zero() || gamma[s as usize].is_zero() {
        return Err(Error::precondition(format!("{side:?} does not join two support points")));
    }

    // dehomogenize at eta = 1: gamma_t is the coefficient of xi^(S-t)
    let p = Poly::new(gamma.iter().rev().cloned().collect());
    let mut profile: BTreeMap<u32, u32> = BTreeMap::new();
    for (i, g) in yun_squarefree(&p) {
        *profile.entry(i).or_default() += g;
    }
    // vanishing leading coefficients put a root at infinity
    let v = gamma.iter().take_while(|g| g.is_zero()).count() as u32;
    if v > 0 {
        *profile.entry(v).or_default() += 1;
    }
    Ok(SideData {
        from: side.from,
        to: side.to,
        lattice_length: s,
        gamma,
        profile: profile.into_iter().rev().collect(),
    })
}

/// Multiplicity at `(1:0:0)` and contact order with `z = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalInvariants {
    pub m: u32,
    /// `None` when `z` divides the equation.
    pub n: Option<u32>,
}

pub fn local_invariants(supp: &MonomialSupport) -> Result<LocalInvariants> {
    supp.checked()?;
    if supp.terms.iter().any(|t| t.0 == 0 && t.1 == 0) {
        return Err(Error::PointNotOnCurve);
    }
    let m = supp.terms.iter().map(|t| t.0 + t.1).min().unwrap();
    let n = supp.terms.iter().filter(|t| t.1 == 0).map(|t| t.0).min();
    Ok(LocalInvariants { m, n })
}

/// Everything the `newton` command reports about a support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonAnalysis {
    pub invariants: LocalInvariants,
    pub polygon: Polygon,
    pub sides: Vec<SideData>,
}

pub fn analyze(supp: &MonomialSupport) -> Result<NewtonAnalysis> {
    let invariants = local_invariants(supp)?;
    let polygon = newton_polygon(supp)?;
    let sides = qualifying_sides(&polygon).iter().map(|s| side_data(supp, s)).collect::<Result<_>>()?;
    Ok(NewtonAnalysis { invariants, polygon, sides })
}

#[cfg(test)]
mod tests {
    use super::*;

    // (y^2 - xz)^2 - y^3 z at (1:0:0): y^4 - 2 x y^2 z + x^2 z^2 - y^3 z
    fn quartic() -> MonomialSupport {
        MonomialSupport::new(
            4,
            vec![
                (4, 0, Rational::one()),
                (2, 1, Rational::from(-2)),
                (0, 2, Rational::one()),
                (3, 1, Rational::from(-1)),
            ],
        )
    }

    #[test]
    fn quartic_polygon() {
        let p = newton_polygon(&quartic()).unwrap();
        assert_eq!(p.vertices, vec![[0, 2], [4, 0]]);
        let sides = qualifying_sides(&p);
        assert_eq!(sides, vec![Side { from: [0, 2], to: [4, 0] }]);
        let sd = side_data(&quartic(), &sides[0]).unwrap();
        assert_eq!(sd.lattice_length, 2);
        assert_eq!(sd.gamma, vec![Rational::one(), Rational::from(-2), Rational::one()]);
        assert_eq!(sd.profile, vec![(2, 1)]);
        assert_eq!(sd.root_multiplicities(), vec![2]);
        assert_eq!(local_invariants(&quartic()).unwrap(), LocalInvariants { m: 2, n: Some(4) });
    }

    #[test]
    fn single_term_and_flex() {
        let p = newton_polygon(&MonomialSupport::from_points(5, &[(0, 3)])).unwrap();
        assert_eq!(p.vertices, vec![[0, 3]]);
        assert!(qualifying_sides(&p).is_empty());

        let flex = MonomialSupport::from_points(5, &[(0, 1), (4, 0)]);
        let p = newton_polygon(&flex).unwrap();
        let sides = qualifying_sides(&p);
        assert_eq!(sides, vec![Side { from: [0, 1], to: [4, 0] }]);
        assert_eq!(side_data(&flex, &sides[0]).unwrap().profile, vec![(1, 1)]);
        assert_eq!(local_invariants(&flex).unwrap(), LocalInvariants { m: 1, n: Some(4) });
    }

    #[test]
    fn boundary_slopes_excluded() {
        let p = newton_polygon(&MonomialSupport::from_points(2, &[(0, 1), (1, 0)])).unwrap();
        assert_eq!(p.sides().len(), 1);
        assert!(qualifying_sides(&p).is_empty());
        // two lines y z = 0 and y (y - z) = 0: no side in the open range
        for pts in [&[(1, 1)][..], &[(2, 0), (1, 1)][..]] {
            let p = newton_polygon(&MonomialSupport::from_points(2, pts)).unwrap();
            assert!(qualifying_sides(&p).is_empty(), "{pts:?}");
        }
    }

    #[test]
    fn two_simple_roots() {
        let supp = MonomialSupport::new(4, vec![(0, 2, Rational::one()), (4, 0, Rational::from(-1))]);
        let sd = side_data(&supp, &Side { from: [0, 2], to: [4, 0] }).unwrap();
        assert_eq!(sd.gamma, vec![Rational::one(), Rational::zero(), Rational::from(-1)]);
        assert_eq!(sd.profile, vec![(1, 2)]);
        assert_eq!(sd.root_multiplicities(), vec![1, 1]);
    }

    #[test]
    fn line_divides_and_bad_input() {
        let supp = MonomialSupport::from_points(3, &[(0, 1), (1, 1)]);
        assert_eq!(local_invariants(&supp).unwrap().n, None);
        let supp = MonomialSupport::from_points(3, &[(0, 0), (1, 1)]);
        assert!(matches!(local_invariants(&supp), Err(Error::PointNotOnCurve)));
        assert!(matches!(newton_polygon(&MonomialSupport::new(3, vec![])), Err(Error::EmptySupport)));
        let supp = MonomialSupport::from_points(2, &[(2, 1)]);
        assert!(newton_polygon(&supp).is_err());
        let supp = MonomialSupport::from_points(2, &[(1, 1), (1, 1)]);
        assert!(newton_polygon(&supp).is_err());
    }

    #[test]
    fn serde_shape() {
        let s: MonomialSupport =
            serde_json::from_str(r#"{"degree": 4, "terms": [[4, 0, "1"], [2, 1, "-2"]]}"#).unwrap();
        assert_eq!(s.terms[1], (2, 1, Rational::from(-2)));
    }
}
