//! Unions of lines: transversal arrangements and stars.

use orbitdeg::model::LinearComponent;
use orbitdeg::{assemble, CurveDescriptor, PointFeature};

fn transversal(mults: &[u32]) -> CurveDescriptor {
    let mut c = CurveDescriptor::new(mults.iter().sum());
    for (i, &m) in mults.iter().enumerate() {
        let meets = mults.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
        c.linear.push(LinearComponent { mult: m, meets });
    }
    c
}

fn star(d: u32) -> CurveDescriptor {
    let mut c = CurveDescriptor::new(d);
    c.linear = (0..d).map(|_| LinearComponent { mult: 1, meets: vec![d - 1] }).collect();
    c.points.push(PointFeature::Composite {
        label: "centre".into(),
        tangent_cone: Some(vec![1; d as usize]),
        sides: vec![],
        truncations: vec![],
        absorbed_flexes: 0,
    });
    c
}

fn main() -> orbitdeg::Result<()> {
    for mults in [vec![1, 1, 1], vec![1, 2], vec![1, 1, 1, 1]] {
        let r = assemble(&transversal(&mults))?;
        println!("lines {mults:?}: dimension {}, a.p.p. {}", r.orbit_dimension, r.app);
    }
    for d in 3..=6 {
        let r = assemble(&star(d))?;
        println!("{d} concurrent lines: dimension {}, predegree {}", r.orbit_dimension, r.predegree);
    }
    Ok(())
}
