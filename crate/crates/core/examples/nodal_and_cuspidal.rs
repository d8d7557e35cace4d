//! Curves with nodes and cusps, and orbit-closure degrees from stabilizers.

use orbitdeg::{assemble, CurveDescriptor, FlexCount, IrreducibleSingularity, PointFeature};

fn node() -> PointFeature {
    // both tangent lines meet the curve with multiplicity 3 at the node
    PointFeature::OrdinaryMultiplePoint { label: "node".into(), m: 2, contacts: vec![3, 3], absorbed_flexes: 6 }
}

fn cusp() -> PointFeature {
    PointFeature::irreducible("cusp", IrreducibleSingularity::new(2, 3, vec![3]))
}

fn main() -> orbitdeg::Result<()> {
    for n in 0..=3 {
        let quartic = CurveDescriptor::irreducible(4).with_flexes(FlexCount::Auto).with_points(node(), n);
        println!("quartic with {n} nodes: predegree {}", assemble(&quartic)?.predegree);
    }

    let cuspidal_cubic =
        CurveDescriptor::irreducible(3).with_point(cusp()).with_flexes(FlexCount::Auto).with_stabilizer(3);
    let r = assemble(&cuspidal_cubic)?;
    println!("cuspidal cubic: dimension {}, a.p.p. {}, degree {}", r.orbit_dimension, r.app, r.degree.unwrap());

    for (d, cusps, stab) in [(4, 3, 6), (6, 9, 18)] {
        let c = CurveDescriptor::irreducible(d)
            .with_flexes(FlexCount::Auto)
            .with_points(cusp(), cusps)
            .with_stabilizer(stab);
        let r = assemble(&c)?;
        println!(
            "degree {d} with {cusps} cusps: predegree {}, orbit closure degree {}",
            r.predegree,
            r.degree.unwrap()
        );
    }
    Ok(())
}
