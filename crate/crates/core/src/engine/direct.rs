use super::assemble;
use crate::corrections::tables::SIDE_PREDEGREE;
use crate::corrections::{decompose, esym, eval_table};
use crate::error::{Error, Result};
use crate::model::{CurveDescriptor, IrreducibleSingularity, NewtonSide, PointFeature, TruncationSpec};
use crate::series::Rational;

fn r(x: impl Into<Rational>) -> Rational {
    x.into()
}

fn psum(xs: &[u32], p: u32) -> Rational {
    xs.iter().map(|&x| r(x).pow(p)).sum()
}

fn line(d: &Rational, m: u32, meets: &[u32]) -> Rational {
    let mm = r(m);
    let rest = d - &mm;
    let gap = |p: u32| rest.pow(p) - psum(meets, p);
    mm.pow(3)
        * (d.pow(3) * (r(10) * d.pow(2) - r(15) * d * &mm + r(6) * mm.pow(2))
            + r(10) * (r(28) * d.pow(2) - r(48) * d * &mm + r(21) * mm.pow(2)) * gap(3)
            - r(45) * (r(8) * d - r(7) * &mm) * gap(4)
            + r(126) * gap(5))
}

fn component(d: &Rational, e: u32, m: u32) -> Rational {
    let mm = r(m);
    r(16) * d * r(e) * mm.pow(5) * (r(7) * d.pow(2) - r(18) * d * &mm + r(12) * mm.pow(2))
}

fn tangent_cone(d: &Rational, lines: &[u32]) -> Rational {
    let e = esym(lines, 5);
    r(30)
        * &e[1]
        * (&e[2] * &e[3] - &e[1] * &e[4] - &e[5])
        * (r(28) * d.pow(2) - r(48) * d * &e[1] + r(21) * e[1].pow(2))
}

fn side(d: i64, s: &NewtonSide) -> Rational {
    let [j0, k0] = s.from.map(i64::from);
    let [j1, k1] = s.to.map(i64::from);
    let area = r(s.area2());
    let dd = r(d);
    let roots = r(7) * dd.pow(2) * psum(&s.s, 5) - r(18) * &dd * psum(&s.s, 6) + r(12) * psum(&s.s, 7);
    &area * eval_table(SIDE_PREDEGREE, [j0, k0, j1, k1, d]) - r(16) * &area / r(s.lattice_length()) * roots
}

fn truncation(d: &Rational, t: &TruncationSpec) -> Rational {
    let total = r(t.s.iter().sum::<u32>());
    let gap = |p: u32| total.pow(p) - psum(&t.s, p);
    r(t.ell) * &t.weight * (r(192) * gap(7) - r(288) * d * gap(6) + r(112) * d.pow(2) * gap(5))
}

fn flex_side(k: u32) -> NewtonSide {
    NewtonSide::new([0, 1], [k, 0], vec![1])
}

/// Predegree as `d^8` minus one closed-form contribution per feature,
/// bypassing the a.p.p. Only valid for orbits of dimension 8.
pub fn predegree_direct(c: &CurveDescriptor) -> Result<Rational> {
    let report = assemble(c)?;
    if report.orbit_dimension != 8 {
        return Err(Error::DirectFormulaInapplicable { dimension: report.orbit_dimension });
    }
    let di = i64::from(c.degree);
    let d = r(di);
    let mut total = Rational::zero();
    for l in &c.linear {
        total += line(&d, l.mult, &l.meets);
    }
    for n in &c.nonlinear {
        total += component(&d, n.deg, n.mult);
    }
    for pt in &c.points {
        match pt {
            PointFeature::Flex { contact, .. } => total += side(di, &flex_side(*contact)),
            PointFeature::Irreducible { m, n, essential, .. } => {
                let dec = decompose(&IrreducibleSingularity::new(*m, *n, essential.clone()))?;
                total += side(di, &dec.side);
                for t in &dec.truncations {
                    total += truncation(&d, t);
                }
            }
            PointFeature::Composite { tangent_cone: tc, sides, truncations, .. } => {
                if let Some(tc) = tc {
                    total += tangent_cone(&d, tc);
                }
                for s in sides.iter().filter(|s| !s.suppress) {
                    total += side(di, s);
                }
                for t in truncations {
                    total += truncation(&d, t);
                }
            }
            PointFeature::OrdinaryMultiplePoint { m, contacts, .. } => {
                total += tangent_cone(&d, &vec![1; *m as usize]);
                for &rr in contacts {
                    total += side(di, &NewtonSide::new([m - 1, 1], [rr, 0], vec![1]));
                }
            }
        }
    }
    let flexes = c.ordinary_flexes()?;
    total += r(flexes) * side(di, &flex_side(3));
    Ok(d.pow(8) - total)
}
