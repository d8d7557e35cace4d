//! Assembly of the a.p.p. from a descriptor, and operations on the result.
//!
//! The a.p.p. of a degree-`d` curve is
//! `exp(dH) (1 + sum of global corrections) * prod of local factors`.
//! Global corrections are summed, never multiplied: two of them multiply to
//! something of order 6, which survives truncation.

mod closed_form;
mod direct;

use serde::{Deserialize, Serialize};

use crate::corrections::{
    flex_equivalent_with, flex_factor, ordinary_multiple_point, per_line_factor, thm51, type1, type2, type3,
    type4_side, type5, Correction, CorrectionKind, ErratumPolicy,
};
use crate::error::{Error, Result};
use crate::model::{validate, CurveDescriptor, IrreducibleSingularity, PointFeature};
use crate::series::{Rational, TruncSeries};

pub use closed_form::{closed_form_points, closed_form_predegree, predegree_closed_form};
pub use direct::predegree_direct;

/// One line of a report's breakdown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreakdownEntry {
    pub label: String,
    #[serde(flatten)]
    pub correction: Correction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub app: TruncSeries,
    /// `a_i = i! c_i`.
    pub predegree_poly: [Rational; 9],
    pub orbit_dimension: usize,
    pub predegree: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stabilizer_degree: Option<u32>,
    pub breakdown: Vec<BreakdownEntry>,
    #[serde(default)]
    pub warnings: Vec<String>,
    #[serde(default)]
    pub erratum_notes: Vec<String>,
}

impl OrbitReport {
    /// Report for a bare a.p.p.
    pub fn from_app(app: TruncSeries) -> Self {
        let dim = app.top_degree().unwrap_or(0);
        OrbitReport {
            predegree_poly: app.predegree_coeffs(),
            orbit_dimension: dim,
            predegree: app.app_coefficient(dim),
            degree: None,
            stabilizer_degree: None,
            app,
            breakdown: Vec::new(),
            warnings: Vec::new(),
            erratum_notes: Vec::new(),
        }
    }

    /// Attach a stabilizer degree and derive the orbit-closure degree.
    pub fn with_stabilizer(mut self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::precondition("stabilizer degree must be positive"));
        }
        let degree = &self.predegree / &Rational::from(k);
        if !degree.is_integer() {
            return Err(Error::NonIntegralDegree { predegree: self.predegree.clone(), stabilizer: k });
        }
        self.stabilizer_degree = Some(k);
        self.degree = Some(degree);
        Ok(self)
    }

    /// Integer predegree, when it is one.
    pub fn predegree_i64(&self) -> Option<i64> {
        self.predegree.to_i64()
    }
}

/// [`assemble_with`] under the default flex factor.
pub fn assemble(c: &CurveDescriptor) -> Result<OrbitReport> {
    assemble_with(c, ErratumPolicy::Derived)
}

/// Build the a.p.p. and derived invariants of a valid descriptor.
pub fn assemble_with(c: &CurveDescriptor, policy: ErratumPolicy) -> Result<OrbitReport> {
    let violations = validate(c);
    if !violations.is_empty() {
        return Err(Error::Invalid(violations));
    }
    let d = c.degree;
    let mut breakdown = Vec::new();
    let mut push = |label: String, correction: Correction| breakdown.push(BreakdownEntry { label, correction });

    for (i, l) in c.linear.iter().enumerate() {
        push(format!("linear[{i}]"), type1(l.mult, &l.meets, d)?);
    }
    for (i, n) in c.nonlinear.iter().enumerate() {
        push(format!("nonlinear[{i}]"), type2(d, n.deg, n.mult)?);
    }
    let mut flexes_used = false;
    for (i, pt) in c.points.iter().enumerate() {
        let label = if pt.label().is_empty() { format!("points[{i}]") } else { pt.label().to_string() };
        for (suffix, corr) in point_corrections(pt, policy)? {
            push(format!("{label}{suffix}"), corr);
        }
        flexes_used |= matches!(pt, PointFeature::Flex { contact: 3, .. });
    }
    let ordinary = c.ordinary_flexes()?;
    if ordinary > 0 {
        flexes_used = true;
        let term = flex_equivalent_with(u64::from(ordinary), policy) - TruncSeries::one();
        push(format!("ordinary flexes x{ordinary}"), Correction::new(term, CorrectionKind::Flex));
    }

    let mut global = TruncSeries::one();
    let mut local = TruncSeries::one();
    for e in &breakdown {
        if e.correction.kind.is_local() {
            local = &local * &e.correction.factor();
        } else {
            global = &global + &e.correction.term;
        }
    }
    let app = TruncSeries::exp_linear(&Rational::from(d)) * global * local;

    let mut report = OrbitReport::from_app(app);
    report.breakdown = breakdown;
    if flexes_used {
        report.erratum_notes.push(erratum_note(policy));
    }
    if let Some(want) = c.expected_dimension {
        if want != report.orbit_dimension {
            report.warnings.push(format!("expected orbit dimension {want}, computed {}", report.orbit_dimension));
        }
    }
    match c.stabilizer_degree {
        Some(k) => report.with_stabilizer(k),
        None => Ok(report),
    }
}

fn erratum_note(policy: ErratumPolicy) -> String {
    match policy {
        ErratumPolicy::Derived => {
            "ordinary flex factor 1 - H^6/48 + 3H^7/70 - 197H^8/4480 (derived); the value 1/42 printed for the H^6 term in some sources is a misprint".into()
        }
        ErratumPolicy::Strict => {
            "ordinary flex factor uses the printed H^6 coefficient -1/42 instead of the derived -1/48; results are not expected to be correct".into()
        }
    }
}

/// Corrections of one point feature, each with a label suffix.
fn point_corrections(pt: &PointFeature, policy: ErratumPolicy) -> Result<Vec<(String, Correction)>> {
    let mut out = Vec::new();
    match pt {
        PointFeature::Flex { contact: 3, .. } => {
            let term = flex_factor(policy) - TruncSeries::one();
            out.push((String::new(), Correction::new(term, CorrectionKind::Flex)));
        }
        PointFeature::Flex { contact, .. } => {
            let f = thm51(&IrreducibleSingularity::new(1, *contact, vec![]))?;
            out.push((String::new(), Correction::new(f - TruncSeries::one(), CorrectionKind::Thm51)));
        }
        PointFeature::Irreducible { m, n, essential, .. } => {
            let f = thm51(&IrreducibleSingularity::new(*m, *n, essential.clone()))?;
            out.push((String::new(), Correction::new(f - TruncSeries::one(), CorrectionKind::Thm51)));
        }
        PointFeature::Composite { tangent_cone, sides, truncations, .. } => {
            if let Some(tc) = tangent_cone {
                out.push(("/tangent_cone".into(), type3(tc)));
            }
            for (i, s) in sides.iter().enumerate().filter(|(_, s)| !s.suppress) {
                out.push((format!("/sides[{i}]"), type4_side(s)?));
            }
            for (i, t) in truncations.iter().enumerate() {
                out.push((format!("/truncations[{i}]"), type5(t)?));
            }
        }
        PointFeature::OrdinaryMultiplePoint { m, contacts, .. } => {
            // validates the point as a whole before splitting it up
            ordinary_multiple_point(*m, contacts)?;
            out.push(("/tangent_cone".into(), type3(&vec![1; *m as usize])));
            for (i, &r) in contacts.iter().enumerate() {
                let term = per_line_factor(*m, r) - TruncSeries::one();
                out.push((format!("/contacts[{i}]"), Correction::new(term, CorrectionKind::IV)));
            }
        }
    }
    Ok(out)
}

/// `1 - H^6/9 + 11H^7/40 - 311H^8/960`: a transversal crossing of two
/// nonlinear curves.
pub fn crossing_factor_nonlinear() -> TruncSeries {
    unit_plus((-1, 9), (11, 40), (-311, 960))
}

/// `1 - H^6/24 + 7H^7/60 - 13H^8/80`: a nonlinear curve crossing a line.
pub fn crossing_factor_line() -> TruncSeries {
    unit_plus((-1, 24), (7, 60), (-13, 80))
}

/// `1 - H^6/6 + 7H^7/15 - 13H^8/20`: a point of simple tangency.
pub fn tangency_factor() -> TruncSeries {
    unit_plus((-1, 6), (7, 15), (-13, 20))
}

fn unit_plus(c6: (i64, i64), c7: (i64, i64), c8: (i64, i64)) -> TruncSeries {
    TruncSeries::one()
        + TruncSeries::monomial(6, Rational::new(c6.0, c6.1))
        + TruncSeries::monomial(7, Rational::new(c7.0, c7.1))
        + TruncSeries::monomial(8, Rational::new(c8.0, c8.1))
}

/// Report of the union of two reduced curves meeting at `i` transversal
/// points between nonlinear components, `j` transversal points between a
/// nonlinear component and a line, and `tangencies` simple tangencies. The
/// crossing points must be nonsingular non-flex points of both curves; this
/// is not checked. The result carries no stabilizer degree.
pub fn union(r1: &OrbitReport, r2: &OrbitReport, i: u32, j: u32, tangencies: u32) -> OrbitReport {
    let mut breakdown = Vec::new();
    for (side, r) in [("a", r1), ("b", r2)] {
        for e in &r.breakdown {
            breakdown.push(BreakdownEntry { label: format!("{side}/{}", e.label), correction: e.correction.clone() });
        }
    }
    let mut app = &r1.app * &r2.app;
    for (count, factor, what) in [
        (i, crossing_factor_nonlinear(), "nonlinear crossings"),
        (j, crossing_factor_line(), "line crossings"),
        (tangencies, tangency_factor(), "simple tangencies"),
    ] {
        if count > 0 {
            let f = factor.pow(u64::from(count));
            app = &app * &f;
            let term = f - TruncSeries::one();
            breakdown.push(BreakdownEntry {
                label: format!("{what} x{count}"),
                correction: Correction::new(term, CorrectionKind::Union),
            });
        }
    }
    let mut report = OrbitReport::from_app(app);
    report.breakdown = breakdown;
    for r in [r1, r2] {
        report.warnings.extend(r.warnings.iter().cloned());
        for note in &r.erratum_notes {
            if !report.erratum_notes.contains(note) {
                report.erratum_notes.push(note.clone());
            }
        }
    }
    report
}

/// Report of the `m`-fold multiple of the curve: `H` becomes `mH`
/// throughout. The stabilizer is unchanged.
pub fn scale(r: &OrbitReport, m: u32) -> OrbitReport {
    let mut out = OrbitReport::from_app(r.app.substitute_scaled(m));
    out.breakdown = r
        .breakdown
        .iter()
        .map(|e| BreakdownEntry { label: e.label.clone(), correction: e.correction.scaled(m) })
        .collect();
    out.warnings = r.warnings.clone();
    out.erratum_notes = r.erratum_notes.clone();
    if let Some(k) = r.stabilizer_degree {
        // predegree picks up m^dim, so divisibility is preserved
        out = out.with_stabilizer(k).expect("scaling preserves divisibility");
    }
    out
}
