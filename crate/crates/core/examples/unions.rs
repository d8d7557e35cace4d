//! Reducible curves assembled from their pieces and the way they meet.

use orbitdeg::{assemble, scale, union, CurveDescriptor, FlexCount};

fn main() -> orbitdeg::Result<()> {
    let conic = assemble(&CurveDescriptor::irreducible(2))?;
    let line = assemble(&CurveDescriptor::irreducible(1))?;
    let cubic = assemble(&CurveDescriptor::irreducible(3).with_flexes(FlexCount::Auto))?;

    let secant = union(&conic, &line, 0, 2, 0).with_stabilizer(4)?;
    println!("conic + secant line: dimension {}, degree {}", secant.orbit_dimension, secant.degree.unwrap());

    let tangent = union(&conic, &line, 0, 0, 1).with_stabilizer(4)?;
    println!("conic + tangent line: dimension {}, degree {}", tangent.orbit_dimension, tangent.degree.unwrap());

    println!("two conics: predegree {}", union(&conic, &conic, 4, 0, 0).predegree);
    println!("cubic + line: predegree {}", union(&cubic, &line, 0, 3, 0).predegree);
    println!("double conic: a.p.p. {}", scale(&conic, 2).app);

    let r = union(&conic, &conic, 4, 0, 0);
    for e in &r.breakdown {
        println!("  {:<28} {:?}  {}", e.label, e.correction.kind, e.correction.term);
    }
    Ok(())
}
