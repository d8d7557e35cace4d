//! From a local equation to a Newton polygon side and its correction.

use orbitdeg::corrections::type4_side;
use orbitdeg::local::{analyze, MonomialSupport};
use orbitdeg::Rational;

fn main() -> orbitdeg::Result<()> {
    // (y^2 - xz)^2 - y^3 z in the chart x = 1: terms (j, k, c) of y^j z^k
    let supp = MonomialSupport::new(
        4,
        vec![
            (4, 0, Rational::from(1)),
            (2, 1, Rational::from(-2)),
            (0, 2, Rational::from(1)),
            (3, 1, Rational::from(-1)),
        ],
    );
    let a = analyze(&supp)?;
    println!("multiplicity {}, contact with z = 0: {:?}", a.invariants.m, a.invariants.n);
    println!("polygon vertices {:?}", a.polygon.vertices);
    for side in &a.sides {
        println!(
            "side {:?} -> {:?}: S = {}, gamma = {:?}, profile {:?}",
            side.from, side.to, side.lattice_length, side.gamma, side.profile
        );
        println!("  correction {}", type4_side(&side.to_newton_side())?.term);
    }
    Ok(())
}
