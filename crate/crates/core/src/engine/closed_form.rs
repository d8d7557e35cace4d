use crate::corrections::{base_jet, p_jet};
use crate::error::Result;
use crate::model::{CurveDescriptor, PointFeature};
use crate::series::{KJet2, Rational};

/// Predegree of a reduced irreducible curve of degree `d` whose only special
/// points are of type `(t^m, t^n)`, listed in `points` (ordinary flexes as
/// `(1, 3)`), assuming an orbit of dimension 8:
/// `d^8 - {(1+dk)^8 [4d^2 (1+k)^-3 (1+2k)^-3 + sum mn P(m,n)]}_2`.
pub fn closed_form_predegree(d: u32, points: &[(u32, u32)]) -> Rational {
    let dd = Rational::from(d);
    let mut bracket = base_jet().scale(&(Rational::from(4) * dd.pow(2)));
    for &(m, n) in points {
        bracket = &bracket + &p_jet(m, n).scale(&Rational::from(m * n));
    }
    let total = &KJet2::linear(&dd).pow(8) * &bracket;
    dd.pow(8) - total.coeff(2)
}

/// The `(m, n)` list for [`closed_form_predegree`], when the descriptor is
/// of that shape.
pub fn closed_form_points(c: &CurveDescriptor) -> Result<Option<Vec<(u32, u32)>>> {
    let shape_ok = c.linear.is_empty() && c.nonlinear.len() == 1 && c.nonlinear[0].mult == 1;
    if !shape_ok {
        return Ok(None);
    }
    let mut pts = Vec::new();
    for p in &c.points {
        match p {
            PointFeature::Flex { contact, .. } => pts.push((1, *contact)),
            PointFeature::Irreducible { m, n, essential, .. } => {
                let simple = if *m == 1 { essential.is_empty() } else { essential == &[*n] };
                if !simple || num_integer::gcd(*m, *n) != 1 {
                    return Ok(None);
                }
                pts.push((*m, *n));
            }
            _ => return Ok(None),
        }
    }
    let flexes = c.ordinary_flexes()?;
    pts.extend(std::iter::repeat_n((1, 3), flexes as usize));
    Ok(Some(pts))
}

/// [`closed_form_predegree`] applied to a descriptor of the right shape.
pub fn predegree_closed_form(c: &CurveDescriptor) -> Result<Option<Rational>> {
    Ok(closed_form_points(c)?.map(|pts| closed_form_predegree(c.degree, &pts)))
}
