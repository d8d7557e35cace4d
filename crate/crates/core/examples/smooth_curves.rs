//! Predegree polynomials of smooth plane curves of low degree.

use orbitdeg::{assemble, CurveDescriptor, FlexCount};

fn main() -> orbitdeg::Result<()> {
    for d in 2..=7 {
        let curve = CurveDescriptor::irreducible(d).with_flexes(FlexCount::Auto);
        let r = assemble(&curve)?;
        println!(
            "degree {d}: {} ordinary flexes, orbit dimension {}, predegree {}",
            curve.ordinary_flexes()?,
            r.orbit_dimension,
            r.predegree
        );
        println!("  a.p.p. = {}", r.app);
    }
    Ok(())
}
