use serde::{Deserialize, Serialize};

use super::{CurveDescriptor, FlexCount, IrreducibleSingularity, NewtonSide, PointFeature, TruncationSpec};
use crate::corrections::absorbed_count;

/// One broken invariant, located by a JSON-style field path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub path: String,
    pub message: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

#[derive(Default)]
struct Report(Vec<Violation>);

impl Report {
    fn push(&mut self, path: impl Into<String>, message: impl Into<String>) {
        self.0.push(Violation { path: path.into(), message: message.into() });
    }

    fn check(&mut self, ok: bool, path: impl Into<String>, message: impl FnOnce() -> String) {
        if !ok {
            self.push(path, message());
        }
    }
}

/// Check every descriptor invariant. An empty result means the descriptor
/// is valid.
pub fn validate(c: &CurveDescriptor) -> Vec<Violation> {
    let mut r = Report::default();
    let d = c.degree;
    r.check(d >= 1, "degree", || "degree must be positive".into());
    if let Some(k) = c.stabilizer_degree {
        r.check(k >= 1, "stabilizer_degree", || "stabilizer degree must be positive".into());
    }

    let mut total: u64 = 0;
    for (i, l) in c.linear.iter().enumerate() {
        let p = format!("linear[{i}]");
        r.check(l.mult >= 1, format!("{p}.mult"), || "multiplicity must be positive".into());
        total += u64::from(l.mult);
        if l.meets.contains(&0) {
            r.push(format!("{p}.meets"), "intersection multiplicities must be positive");
        }
        let sum: i64 = l.meets.iter().map(|&x| i64::from(x)).sum();
        let want = i64::from(d) - i64::from(l.mult);
        r.check(sum == want, format!("{p}.meets"), || {
            format!("sum of meets is {sum}, expected degree - mult = {want}")
        });
    }
    for (i, n) in c.nonlinear.iter().enumerate() {
        let p = format!("nonlinear[{i}]");
        r.check(n.deg >= 2, format!("{p}.deg"), || {
            format!("degree {} is not a nonlinear component; lines go in `linear`", n.deg)
        });
        r.check(n.mult >= 1, format!("{p}.mult"), || "multiplicity must be positive".into());
        total += u64::from(n.deg) * u64::from(n.mult);
    }
    r.check(total == u64::from(d), "degree", || format!("components have total degree {total}, expected {d}"));

    for (i, pt) in c.points.iter().enumerate() {
        check_point(&mut r, &format!("points[{i}]"), pt);
    }

    if c.flexes == FlexCount::Auto {
        let reduced_irreducible = c.linear.is_empty() && c.nonlinear.len() == 1 && c.nonlinear[0].mult == 1;
        r.check(reduced_irreducible, "flexes", || {
            "\"auto\" requires a single reduced nonlinear component and no lines".into()
        });
        let left = c.flex_budget() - c.absorbed_flexes();
        r.check(left >= 0, "flexes", || {
            format!("points absorb {} flexes, more than the budget {}", c.absorbed_flexes(), c.flex_budget())
        });
    }
    r.0
}

fn check_point(r: &mut Report, p: &str, pt: &PointFeature) {
    match pt {
        PointFeature::Flex { contact, .. } => {
            r.check(*contact >= 3, format!("{p}.contact"), || {
                format!("flex contact must be at least 3, got {contact}")
            });
        }
        PointFeature::Irreducible { m, n, essential, .. } => {
            let s = IrreducibleSingularity::new(*m, *n, essential.clone());
            check_irreducible(r, p, &s);
        }
        PointFeature::Composite { tangent_cone, sides, truncations, .. } => {
            if let Some(tc) = tangent_cone {
                r.check(!tc.contains(&0), format!("{p}.tangent_cone"), || {
                    "line multiplicities must be positive".into()
                });
            }
            for (i, s) in sides.iter().enumerate() {
                check_side(r, &format!("{p}.sides[{i}]"), s);
            }
            for (i, t) in truncations.iter().enumerate() {
                check_truncation(r, &format!("{p}.truncations[{i}]"), t);
            }
        }
        PointFeature::OrdinaryMultiplePoint { m, contacts, .. } => {
            r.check(*m >= 2, format!("{p}.m"), || format!("multiplicity must be at least 2, got {m}"));
            r.check(contacts.len() <= *m as usize, format!("{p}.contacts"), || {
                format!("{} contacts for only {m} branches", contacts.len())
            });
            for (i, &x) in contacts.iter().enumerate() {
                r.check(x > *m, format!("{p}.contacts[{i}]"), || {
                    format!("contact {x} must exceed the multiplicity {m}")
                });
            }
        }
    }
}

/// Invariants of a unibranch singularity.
pub(crate) fn irreducible_violations(s: &IrreducibleSingularity) -> Vec<Violation> {
    let mut r = Report::default();
    check_irreducible(&mut r, "", s);
    r.0
}

/// Invariants of a Newton side, ignoring the `suppress` flag.
pub(crate) fn side_violations(side: &NewtonSide) -> Vec<Violation> {
    let mut r = Report::default();
    check_side(&mut r, "", side);
    r.0
}

fn join(p: &str, field: &str) -> String {
    if p.is_empty() {
        field.to_string()
    } else {
        format!("{p}.{field}")
    }
}

fn check_irreducible(r: &mut Report, p: &str, s: &IrreducibleSingularity) {
    let IrreducibleSingularity { m, n, essential } = s;
    r.check(*m >= 1, join(p, "m"), || "multiplicity must be positive".into());
    r.check(n > m, join(p, "n"), || format!("n = {n} must exceed m = {m}"));
    if *m == 0 {
        return;
    }
    if n % m != 0 {
        r.check(essential.first() == Some(n), join(p, "essential"), || {
            format!("n = {n} is not a multiple of m = {m}, so it must be the first essential exponent")
        });
    }
    let ds = s.gcd_chain();
    let mut prev: Option<u32> = None;
    for (i, &e) in essential.iter().enumerate() {
        let at = join(p, &format!("essential[{i}]"));
        match prev {
            None => r.check(e >= *n, at.clone(), || format!("{e} is below n = {n}")),
            Some(q) => r.check(e > q, at.clone(), || format!("{e} does not exceed {q}")),
        }
        r.check(e % ds[i] != 0, at, || format!("{e} is a multiple of gcd {}, so it is not essential", ds[i]));
        prev = Some(e);
    }
    let last = *ds.last().unwrap();
    r.check(last == 1, join(p, "essential"), || {
        format!("gcd of m and the essential exponents is {last}; the branch must be reduced")
    });
}

fn check_side(r: &mut Report, p: &str, s: &NewtonSide) {
    let [j0, k0] = s.from;
    let [j1, k1] = s.to;
    r.check(j0 < j1, join(p, "to"), || format!("j1 = {j1} must exceed j0 = {j0}"));
    let (dj, dk) = (i64::from(j1) - i64::from(j0), i64::from(k0) - i64::from(k1));
    r.check(0 < dk && dk < dj, join(p, "to"), || format!("slope {}/{} is not strictly between -1 and 0", -dk, dj));
    r.check(!s.s.is_empty() && !s.s.contains(&0), join(p, "s"), || {
        "root multiplicities must be a non-empty list of positive integers".into()
    });
    if dj > 0 && dk > 0 {
        let want = s.lattice_length();
        let sum: u64 = s.s.iter().map(|&x| u64::from(x)).sum();
        r.check(sum == u64::from(want), join(p, "s"), || {
            format!("root multiplicities sum to {sum}, but the side has {want} lattice segments")
        });
    }
}

fn check_truncation(r: &mut Report, p: &str, t: &TruncationSpec) {
    r.check(t.ell >= 1, join(p, "ell"), || "ell must be positive".into());
    r.check(t.weight.is_positive(), join(p, "W"), || format!("W = {} must be positive", t.weight));
    r.check(!t.s.is_empty() && !t.s.contains(&0), join(p, "s"), || {
        "conic multiplicities must be a non-empty list of positive integers".into()
    });
}

/// Ordinary flexes absorbed by one point feature.
pub(crate) fn absorbed_by(pt: &PointFeature) -> i64 {
    match pt {
        PointFeature::Flex { contact, .. } => i64::from(*contact) - 2,
        PointFeature::Irreducible { m, n, essential, .. } => {
            absorbed_count(&IrreducibleSingularity::new(*m, *n, essential.clone()))
        }
        PointFeature::Composite { absorbed_flexes, .. }
        | PointFeature::OrdinaryMultiplePoint { absorbed_flexes, .. } => i64::from(*absorbed_flexes),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{parse, LinearComponent};

    fn messages(c: &CurveDescriptor) -> Vec<String> {
        validate(c).into_iter().map(|v| v.to_string()).collect()
    }

    #[test]
    fn smooth_conic_is_valid() {
        assert!(validate(&CurveDescriptor::irreducible(2)).is_empty());
    }

    #[test]
    fn line_meets_must_sum_to_residual_degree() {
        let mut c = CurveDescriptor::new(3);
        c.linear.push(LinearComponent { mult: 1, meets: vec![1] });
        let m = messages(&c);
        assert!(
            m.iter().any(|s| s.starts_with("linear[0].meets") && s.contains("expected degree - mult = 2")),
            "{m:?}"
        );
    }

    #[test]
    fn non_essential_exponent_rejected() {
        let c = CurveDescriptor::irreducible(4)
            .with_point(PointFeature::irreducible("p", IrreducibleSingularity::new(2, 4, vec![6])));
        let m = messages(&c);
        assert!(m.iter().any(|s| s.contains("essential[0]") && s.contains("not essential")), "{m:?}");
    }

    #[test]
    fn cusp_is_valid_and_needs_n_first() {
        assert!(irreducible_violations(&IrreducibleSingularity::new(2, 3, vec![3])).is_empty());
        assert!(!irreducible_violations(&IrreducibleSingularity::new(2, 3, vec![])).is_empty());
        assert!(!irreducible_violations(&IrreducibleSingularity::new(2, 3, vec![5])).is_empty());
        assert!(irreducible_violations(&IrreducibleSingularity::new(1, 4, vec![])).is_empty());
        assert!(irreducible_violations(&IrreducibleSingularity::new(4, 6, vec![6, 7])).is_empty());
        assert!(!irreducible_violations(&IrreducibleSingularity::new(4, 6, vec![6])).is_empty());
    }

    #[test]
    fn side_slope_and_lattice_length() {
        assert!(side_violations(&NewtonSide::new([0, 2], [4, 0], vec![2])).is_empty());
        assert!(side_violations(&NewtonSide::new([0, 2], [4, 0], vec![1, 1])).is_empty());
        assert!(!side_violations(&NewtonSide::new([0, 2], [4, 0], vec![1])).is_empty());
        // slope -1 is excluded
        assert!(!side_violations(&NewtonSide::new([0, 1], [1, 0], vec![1])).is_empty());
        assert!(!side_violations(&NewtonSide::new([0, 3], [1, 0], vec![1])).is_empty());
    }

    #[test]
    fn auto_flexes_restricted() {
        let c =
            parse(r#"{"degree": 4, "flexes": "auto", "nonlinear": [{"deg": 2, "mult": 1}, {"deg": 2, "mult": 1}]}"#)
                .unwrap();
        assert!(messages(&c).iter().any(|s| s.starts_with("flexes")));
        let c = parse(
            r#"{"degree": 3, "flexes": "auto", "nonlinear": [{"deg": 3, "mult": 1}],
            "points": [{"kind": "irreducible", "m": 2, "n": 3, "essential": [3]},
                       {"kind": "irreducible", "m": 2, "n": 3, "essential": [3]}]}"#,
        )
        .unwrap();
        assert!(messages(&c).iter().any(|s| s.contains("more than the budget")));
    }

    #[test]
    fn ordinary_multiple_point_contacts() {
        let c = CurveDescriptor::irreducible(4).with_point(PointFeature::OrdinaryMultiplePoint {
            label: "p".into(),
            m: 2,
            contacts: vec![2, 3, 3],
            absorbed_flexes: 6,
        });
        let m = messages(&c);
        assert_eq!(m.len(), 2, "{m:?}");
    }

    #[test]
    fn component_degrees_must_add_up() {
        let mut c = CurveDescriptor::irreducible(3);
        c.degree = 4;
        assert!(messages(&c).iter().any(|s| s.contains("total degree 3")));
    }
}
