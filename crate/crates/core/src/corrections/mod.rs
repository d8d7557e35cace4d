//! Correction terms and local multiplicative factors.
//!
//! Global corrections (lines, nonlinear components) start at `H^3` and
//! `H^5` and must be summed. Local corrections start at `H^6`, so any two of
//! them multiply to zero and a local factor `1 + term` may be combined either
//! way.

mod global;
mod local;
mod multiple_point;
mod puiseux;
pub(crate) mod tables;

use serde::{Deserialize, Serialize};

use crate::series::{Rational, TruncSeries};

pub use global::{esym, type1, type1_closed_form, type2, type3};
pub(crate) use local::eval_table;
pub use local::{lemma331, type4_side, type5};
pub use multiple_point::{ordinary_multiple_point, ordinary_multiple_point_symmetric, per_line_factor};
pub(crate) use puiseux::{absorbed_count, base_jet, p_jet};
pub use puiseux::{
    decompose, flex_equivalent, flex_equivalent_with, flex_factor, flexes_absorbed, thm51, ErratumPolicy,
    IrreducibleDecomposition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CorrectionKind {
    /// A line component.
    I,
    /// A nonlinear component.
    II,
    /// A tangent cone on at least three lines.
    III,
    /// A Newton polygon side.
    IV,
    /// A truncation limiting to a union of conics.
    V,
    /// A unibranch singularity.
    Thm51,
    /// Ordinary flexes.
    Flex,
    /// Transversal or tangential crossings added when two curves are joined.
    Union,
}

impl CorrectionKind {
    pub fn is_local(self) -> bool {
        !matches!(self, CorrectionKind::I | CorrectionKind::II)
    }
}

/// An additive correction to the a.p.p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Correction {
    pub term: TruncSeries,
    pub kind: CorrectionKind,
}

impl Correction {
    pub fn new(term: TruncSeries, kind: CorrectionKind) -> Self {
        Correction { term, kind }
    }

    /// The local factor `1 + term`.
    pub fn factor(&self) -> TruncSeries {
        &TruncSeries::one() + &self.term
    }

    /// Correction of the `m`-fold multiple of the feature.
    pub fn scaled(&self, m: u32) -> Self {
        Correction { term: self.term.substitute_scaled(m), kind: self.kind }
    }
}

/// `c6 H^6/6! + c7 H^7/7! + c8 H^8/8!`.
pub(crate) fn top3(c6: Rational, c7: Rational, c8: Rational) -> TruncSeries {
    let mut coeffs = vec![Rational::zero(); 6];
    coeffs.push(c6 / Rational::factorial(6));
    coeffs.push(c7 / Rational::factorial(7));
    coeffs.push(c8 / Rational::factorial(8));
    TruncSeries::from_coeffs(coeffs)
}

/// `sum x^p` over `xs`.
pub(crate) fn power_sum(xs: &[u32], p: u32) -> Rational {
    xs.iter().map(|&x| Rational::from(x).pow(p)).sum()
}
