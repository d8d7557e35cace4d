//! Unibranch singularities: local factors, absorbed flexes and the
//! decomposition into a polygon side plus truncations.

use orbitdeg::corrections::{decompose, flexes_absorbed, thm51};
use orbitdeg::IrreducibleSingularity;

fn main() -> orbitdeg::Result<()> {
    let cases =
        [(1, 3, vec![]), (2, 3, vec![3]), (2, 5, vec![5]), (2, 4, vec![5]), (2, 4, vec![7]), (4, 6, vec![6, 7])];
    for (m, n, essential) in cases {
        let s = IrreducibleSingularity::new(m, n, essential.clone());
        println!("(m, n) = ({m}, {n}), essential {essential:?}: absorbed flexes {}", flexes_absorbed(&s)?);
        println!("  factor {}", thm51(&s)?);
        let dec = decompose(&s)?;
        println!("  side {:?} -> {:?} with s = {:?}", dec.side.from, dec.side.to, dec.side.s);
        for t in &dec.truncations {
            println!("  truncation ell = {}, W = {}, s = {:?}", t.ell, t.weight, t.s);
        }
    }
    Ok(())
}
