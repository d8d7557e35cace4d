//! Reading a curve descriptor from JSON and printing the report as JSON.

use orbitdeg::{assemble, model};

const BIFLECNODE_QUARTIC: &str = r#"{
    "degree": 4,
    "stabilizer_degree": 24,
    "flexes": 0,
    "nonlinear": [{"deg": 4, "mult": 1}],
    "points": [
        {"label": "p1", "kind": "ordinary_multiple_point", "m": 2, "contacts": [4, 4], "absorbed_flexes": 8},
        {"label": "p2", "kind": "ordinary_multiple_point", "m": 2, "contacts": [4, 4], "absorbed_flexes": 8},
        {"label": "p3", "kind": "ordinary_multiple_point", "m": 2, "contacts": [4, 4], "absorbed_flexes": 8}
    ]
}"#;

fn main() -> orbitdeg::Result<()> {
    let curve = model::parse_valid(BIFLECNODE_QUARTIC)?;
    let report = assemble(&curve)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));

    match model::parse_valid(r#"{"degree": 4, "nonlinear": [{"deg": 3, "mult": 1}]}"#) {
        Ok(_) => unreachable!(),
        Err(e) => eprintln!("{e}"),
    }
    Ok(())
}
