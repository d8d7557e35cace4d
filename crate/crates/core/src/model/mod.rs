//! Curve descriptors: components, point features and the JSON input format.
//!
//! A descriptor never stores coordinates. Every local correction depends only
//! on discrete data at a point, so points are identified by label.

pub(crate) mod validate;

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::series::Rational;

pub use validate::{validate, Violation};

/// A line of the curve with multiplicity `mult`; `meets` lists the
/// intersection multiplicities of the line with the rest of the curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearComponent {
    pub mult: u32,
    #[serde(default)]
    pub meets: Vec<u32>,
}

/// An irreducible component of degree `deg >= 2` with multiplicity `mult`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NonlinearComponent {
    pub deg: u32,
    pub mult: u32,
}

/// A side of the Newton polygon at a point, from `(j0, k0)` to `(j1, k1)`,
/// with the multiplicities `s` of the roots of its side polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NewtonSide {
    pub from: [u32; 2],
    pub to: [u32; 2],
    pub s: Vec<u32>,
    /// Drop this side from the computation.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub suppress: bool,
}

impl NewtonSide {
    pub fn new(from: [u32; 2], to: [u32; 2], s: Vec<u32>) -> Self {
        NewtonSide { from, to, s, suppress: false }
    }

    /// `j1 k0 - j0 k1`, twice the area of the triangle spanned with the origin.
    pub fn area2(&self) -> i64 {
        let [j0, k0] = self.from.map(i64::from);
        let [j1, k1] = self.to.map(i64::from);
        j1 * k0 - j0 * k1
    }

    /// Number of lattice segments on the side.
    pub fn lattice_length(&self) -> u32 {
        let dj = self.to[0].abs_diff(self.from[0]);
        let dk = self.from[1].abs_diff(self.to[1]);
        num_integer::gcd(dj, dk)
    }
}

/// A truncation with coefficient `ell * W` whose limit is a union of conics
/// with multiplicities `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TruncationSpec {
    pub ell: u32,
    #[serde(rename = "W")]
    pub weight: Rational,
    pub s: Vec<u32>,
}

/// A unibranch singularity `(t^m, t^n + ...)` with essential exponents
/// `essential = [e_1, ..., e_r]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IrreducibleSingularity {
    pub m: u32,
    pub n: u32,
    #[serde(default)]
    pub essential: Vec<u32>,
}

impl IrreducibleSingularity {
    pub fn new(m: u32, n: u32, essential: Vec<u32>) -> Self {
        IrreducibleSingularity { m, n, essential }
    }

    /// `d_0 = m, d_j = gcd(m, e_1, ..., e_j)`.
    pub fn gcd_chain(&self) -> Vec<u32> {
        let mut ds = vec![self.m];
        for &e in &self.essential {
            let last = *ds.last().unwrap();
            ds.push(num_integer::gcd(last, e));
        }
        ds
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PointFeature {
    /// A smooth point whose tangent line has contact order `contact`.
    Flex {
        #[serde(default)]
        label: String,
        contact: u32,
    },
    Irreducible {
        #[serde(default)]
        label: String,
        m: u32,
        n: u32,
        #[serde(default)]
        essential: Vec<u32>,
    },
    /// Raw local data for an arbitrary singular point.
    Composite {
        #[serde(default)]
        label: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tangent_cone: Option<Vec<u32>>,
        #[serde(default)]
        sides: Vec<NewtonSide>,
        #[serde(default)]
        truncations: Vec<TruncationSpec>,
        absorbed_flexes: u32,
    },
    /// `m` smooth branches with distinct tangents. `contacts` gives, for each
    /// nonlinear branch, the intersection multiplicity at the point of its
    /// tangent line with the whole curve (3 for each branch of an ordinary
    /// node); linear branches are left out.
    OrdinaryMultiplePoint {
        #[serde(default)]
        label: String,
        m: u32,
        #[serde(default)]
        contacts: Vec<u32>,
        absorbed_flexes: u32,
    },
}

impl PointFeature {
    pub fn label(&self) -> &str {
        match self {
            PointFeature::Flex { label, .. }
            | PointFeature::Irreducible { label, .. }
            | PointFeature::Composite { label, .. }
            | PointFeature::OrdinaryMultiplePoint { label, .. } => label,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            PointFeature::Flex { .. } => "flex",
            PointFeature::Irreducible { .. } => "irreducible",
            PointFeature::Composite { .. } => "composite",
            PointFeature::OrdinaryMultiplePoint { .. } => "ordinary_multiple_point",
        }
    }

    pub fn irreducible(label: impl Into<String>, s: IrreducibleSingularity) -> Self {
        PointFeature::Irreducible { label: label.into(), m: s.m, n: s.n, essential: s.essential }
    }

    pub fn singularity(&self) -> Option<IrreducibleSingularity> {
        match self {
            PointFeature::Irreducible { m, n, essential, .. } => {
                Some(IrreducibleSingularity::new(*m, *n, essential.clone()))
            }
            _ => None,
        }
    }
}

/// Number of ordinary flexes, either given or derived from the flex budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlexCount {
    Count(u32),
    Auto,
}

impl Default for FlexCount {
    fn default() -> Self {
        FlexCount::Count(0)
    }
}

impl Serialize for FlexCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FlexCount::Count(n) => serializer.serialize_u32(*n),
            FlexCount::Auto => serializer.serialize_str("auto"),
        }
    }
}

impl<'de> Deserialize<'de> for FlexCount {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct FlexVisitor;

        impl Visitor<'_> for FlexVisitor {
            type Value = FlexCount;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a non-negative integer or \"auto\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<FlexCount, E> {
                u32::try_from(v).map(FlexCount::Count).map_err(|_| E::invalid_value(de::Unexpected::Unsigned(v), &self))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<FlexCount, E> {
                Err(E::invalid_value(de::Unexpected::Signed(v), &self))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<FlexCount, E> {
                match v {
                    "auto" => Ok(FlexCount::Auto),
                    _ => Err(E::invalid_value(de::Unexpected::Str(v), &self)),
                }
            }
        }

        deserializer.deserialize_any(FlexVisitor)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveDescriptor {
    pub degree: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stabilizer_degree: Option<u32>,
    #[serde(default)]
    pub flexes: FlexCount,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub linear: Vec<LinearComponent>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub nonlinear: Vec<NonlinearComponent>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<PointFeature>,
    /// Checked against the computed orbit dimension; a mismatch is a warning.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_dimension: Option<usize>,
}

impl CurveDescriptor {
    pub fn new(degree: u32) -> Self {
        CurveDescriptor {
            degree,
            stabilizer_degree: None,
            flexes: FlexCount::default(),
            linear: Vec::new(),
            nonlinear: Vec::new(),
            points: Vec::new(),
            expected_dimension: None,
        }
    }

    /// A reduced irreducible curve of degree `d` with no special points.
    pub fn irreducible(d: u32) -> Self {
        let mut c = CurveDescriptor::new(d);
        if d == 1 {
            c.linear.push(LinearComponent { mult: 1, meets: Vec::new() });
        } else {
            c.nonlinear.push(NonlinearComponent { deg: d, mult: 1 });
        }
        c
    }

    pub fn with_flexes(mut self, flexes: FlexCount) -> Self {
        self.flexes = flexes;
        self
    }

    pub fn with_point(mut self, p: PointFeature) -> Self {
        self.points.push(p);
        self
    }

    pub fn with_points(mut self, p: PointFeature, count: usize) -> Self {
        self.points.extend(std::iter::repeat_n(p, count));
        self
    }

    pub fn with_stabilizer(mut self, k: u32) -> Self {
        self.stabilizer_degree = Some(k);
        self
    }

    /// Total flexes absorbed by the point features.
    pub fn absorbed_flexes(&self) -> i64 {
        self.points.iter().map(validate::absorbed_by).sum()
    }

    /// `3d(d-2)`, the flex count of a smooth curve of degree `d`.
    pub fn flex_budget(&self) -> i64 {
        let d = i64::from(self.degree);
        3 * d * (d - 2)
    }

    /// The number of ordinary flexes, resolving `"auto"` against the budget.
    pub fn ordinary_flexes(&self) -> Result<u32> {
        match self.flexes {
            FlexCount::Count(n) => Ok(n),
            FlexCount::Auto => {
                let left = self.flex_budget() - self.absorbed_flexes();
                u32::try_from(left).map_err(|_| Error::precondition(format!("flex budget exhausted: {left} left")))
            }
        }
    }

    pub fn validate(&self) -> Vec<Violation> {
        validate(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor serialization cannot fail")
    }
}

/// Parse a descriptor from JSON text. Unknown fields are rejected; the
/// result is not validated.
pub fn parse(input: &str) -> Result<CurveDescriptor> {
    crate::error::parse_json(input)
}

/// Parse and validate.
pub fn parse_valid(input: &str) -> Result<CurveDescriptor> {
    let c = parse(input)?;
    let v = validate(&c);
    if v.is_empty() {
        Ok(c)
    } else {
        Err(Error::Invalid(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BIFLECNODE_QUARTIC: &str = r#"{
        "degree": 4, "stabilizer_degree": 24, "flexes": 0,
        "nonlinear": [{"deg": 4, "mult": 1}],
        "points": [
            {"label": "p1", "kind": "ordinary_multiple_point", "m": 2, "contacts": [4, 4], "absorbed_flexes": 8},
            {"label": "p2", "kind": "composite", "tangent_cone": [1, 1], "sides": [
                {"from": [1, 1], "to": [4, 0], "s": [1]},
                {"from": [1, 1], "to": [4, 0], "s": [1]}], "absorbed_flexes": 8},
            {"label": "p3", "kind": "ordinary_multiple_point", "m": 2, "contacts": [4, 4], "absorbed_flexes": 8}
        ]
    }"#;

    #[test]
    fn parses_biflecnode_fixture() {
        let c = parse(BIFLECNODE_QUARTIC).unwrap();
        assert_eq!(c.degree, 4);
        assert_eq!(c.points.len(), 3);
        assert_eq!(c.points[1].kind_name(), "composite");
        assert_eq!(c.points[0].label(), "p1");
        assert_eq!(c.stabilizer_degree, Some(24));
    }

    #[test]
    fn empty_object_is_missing_degree() {
        let e = parse("{}").unwrap_err();
        assert!(e.is_parse_error());
        assert!(e.to_string().contains("degree"), "{e}");
    }

    #[test]
    fn degree_as_string_is_type_error() {
        match parse(r#"{"degree": "4"}"#).unwrap_err() {
            Error::Schema { path, message } => {
                assert_eq!(path, "degree");
                assert!(message.contains("invalid type"), "{message}");
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn malformed_json_reports_position() {
        match parse("{\n  \"degree\": 4,\n  oops }").unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (3, 3)),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn unknown_fields_rejected() {
        assert!(parse(r#"{"degree": 2, "colour": "red"}"#).is_err());
        let p = r#"{"degree": 3, "points": [{"kind": "flex", "contact": 3, "x": 1}]}"#;
        assert!(parse(p).is_err());
    }

    #[test]
    fn flexes_accept_auto() {
        let c = parse(r#"{"degree": 4, "nonlinear": [{"deg": 4, "mult": 1}], "flexes": "auto"}"#).unwrap();
        assert_eq!(c.flexes, FlexCount::Auto);
        assert_eq!(c.ordinary_flexes().unwrap(), 24);
        assert!(parse(r#"{"degree": 4, "flexes": "many"}"#).is_err());
        assert!(parse(r#"{"degree": 4, "flexes": -1}"#).is_err());
    }

    #[test]
    fn round_trips_through_json() {
        let c = parse(BIFLECNODE_QUARTIC).unwrap();
        assert_eq!(parse(&c.to_json()).unwrap(), c);
    }

    #[test]
    fn truncation_weight_is_rational() {
        let t: TruncationSpec = serde_json::from_str(r#"{"ell": 2, "W": "7/2", "s": [1, 1]}"#).unwrap();
        assert_eq!(t.weight, Rational::new(7, 2));
    }
}
