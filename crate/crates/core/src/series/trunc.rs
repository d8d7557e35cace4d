use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;

/// Number of stored coefficients: the ring is `Q[H]/(H^9)`.
pub const LEN: usize = 9;

/// Highest surviving power of `H`.
pub const TOP: usize = LEN - 1;

/// An element `c0 + c1 H + ... + c8 H^8` of `Q[H]/(H^9)`.
///
/// Every product drops the terms of degree 9 and above.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: [Rational; LEN],
}

impl TruncSeries {
    pub fn zero() -> Self {
        TruncSeries { coeffs: std::array::from_fn(|_| Rational::zero()) }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut s = Self::zero();
        s.coeffs[0] = c;
        s
    }

    /// `c * H^i`; zero when `i > 8`.
    pub fn monomial(i: usize, c: Rational) -> Self {
        let mut s = Self::zero();
        if i < LEN {
            s.coeffs[i] = c;
        }
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// anything past `H^8` is dropped.
    pub fn from_coeffs<I>(coeffs: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<Rational>,
    {
        let mut s = Self::zero();
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        s
    }

    /// Builds the series whose predegree-polynomial coefficients are `a`,
    /// i.e. `sum a_i H^i / i!`.
    pub fn from_predegree_coeffs<I>(a: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<Rational>,
    {
        let mut s = Self::zero();
        for (i, (slot, c)) in s.coeffs.iter_mut().zip(a).enumerate() {
            *slot = c.into() / Rational::factorial(i as u32);
        }
        s
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rational; LEN] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Least `i` with a nonzero coefficient, `None` for the zero series.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Largest `i` with a nonzero coefficient.
    pub fn top_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// `exp(dH) = sum_{i<=8} d^i H^i / i!`.
    pub fn exp_linear(d: &Rational) -> Self {
        let mut s = Self::zero();
        let mut term = Rational::one();
        for i in 0..LEN {
            s.coeffs[i] = term.clone();
            term = term * d / Rational::from((i + 1) as u32);
        }
        s
    }

    /// Antiderivative in `H` with zero constant term; the `H^8` input
    /// coefficient would land in degree 9 and is lost.
    pub fn antiderivative(&self) -> Self {
        let mut s = Self::zero();
        for i in 0..TOP {
            s.coeffs[i + 1] = &self.coeffs[i] / &Rational::from((i + 1) as u32);
        }
        s
    }

    /// Formal derivative in `H`.
    pub fn derivative(&self) -> Self {
        let mut s = Self::zero();
        for i in 1..LEN {
            s.coeffs[i - 1] = &self.coeffs[i] * &Rational::from(i as u32);
        }
        s
    }

    /// `P(H) -> P(mH)`.
    pub fn substitute_scaled(&self, m: u32) -> Self {
        let m = Rational::from(m);
        let mut s = self.clone();
        let mut scale = Rational::one();
        for c in s.coeffs.iter_mut() {
            *c *= &scale;
            scale *= &m;
        }
        s
    }

    pub fn scale(&self, k: &Rational) -> Self {
        TruncSeries { coeffs: std::array::from_fn(|i| &self.coeffs[i] * k) }
    }

    /// Truncated `n`-th power by repeated squaring.
    pub fn pow(&self, mut n: u64) -> Self {
        // (1 + t)^n = 1 + n t once t^2 vanishes
        let tail = self - &Self::one();
        if *self.coeff(0) == Rational::one() && tail.order().is_none_or(|o| 2 * o >= LEN) {
            return &Self::one() + &tail.scale(&Rational::from(n));
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `a_i = i! c_i`: reads the predegree-polynomial coefficient out of an
    /// adjusted predegree polynomial.
    pub fn app_coefficient(&self, i: usize) -> Rational {
        &self.coeffs[i] * &Rational::factorial(i as u32)
    }

    /// All nine `a_i`.
    pub fn predegree_coeffs(&self) -> [Rational; LEN] {
        std::array::from_fn(|i| self.app_coefficient(i))
    }

    /// Inverse of a unit `1 + O(H)`.
    pub fn inverse(&self) -> Option<Self> {
        if self.coeffs[0].is_zero() {
            return None;
        }
        let c0 = self.coeffs[0].recip();
        let mut inv = Self::zero();
        inv.coeffs[0] = c0.clone();
        for n in 1..LEN {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &inv.coeffs[n - k];
            }
            inv.coeffs[n] = -(acc * &c0);
        }
        Some(inv)
    }
}

impl Default for TruncSeries {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        TruncSeries { coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]) }
    }
}

impl Add for TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: TruncSeries) -> TruncSeries {
        &self + &rhs
    }
}

impl Sub<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        TruncSeries { coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]) }
    }
}

impl Sub for TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: TruncSeries) -> TruncSeries {
        &self - &rhs
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries { coeffs: std::array::from_fn(|i| -&self.coeffs[i]) }
    }
}

impl Neg for TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        -&self
    }
}

impl Mul<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let mut out = TruncSeries::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..LEN - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

impl Mul for TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: TruncSeries) -> TruncSeries {
        &self * &rhs
    }
}

impl std::iter::Sum for TruncSeries {
    fn sum<I: Iterator<Item = TruncSeries>>(iter: I) -> Self {
        iter.fold(TruncSeries::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for TruncSeries {
    fn product<I: Iterator<Item = TruncSeries>>(iter: I) -> Self {
        iter.fold(TruncSeries::one(), |acc, x| &acc * &x)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
            if wrote {
                write!(f, " {sign} ")?;
            } else if sign == "-" {
                write!(f, "-")?;
            }
            let unit = mag == Rational::one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "H")?,
                (1, false) => write!(f, "{mag} H")?,
                (_, true) => write!(f, "H^{i}")?,
                (_, false) => write!(f, "{mag} H^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries({self})")
    }
}

impl Serialize for TruncSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v: Vec<Rational> = Vec::deserialize(deserializer)?;
        if v.len() != LEN {
            return Err(D::Error::invalid_length(v.len(), &"exactly 9 coefficients"));
        }
        Ok(TruncSeries::from_coeffs(v))
    }
}
