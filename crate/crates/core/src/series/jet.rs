use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use super::Rational;

/// Order-2 jet `j0 + j1 k + j2 k^2` in an auxiliary indeterminate `k`;
/// products drop `k^3` and above.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KJet2(pub [Rational; 3]);

impl KJet2 {
    pub fn new(j0: impl Into<Rational>, j1: impl Into<Rational>, j2: impl Into<Rational>) -> Self {
        KJet2([j0.into(), j1.into(), j2.into()])
    }

    pub fn zero() -> Self {
        KJet2::new(0, 0, 0)
    }

    pub fn one() -> Self {
        KJet2::new(1, 0, 0)
    }

    /// Jet of `1 + a k`.
    pub fn linear(a: &Rational) -> Self {
        KJet2([Rational::one(), a.clone(), Rational::zero()])
    }

    /// Jet of `(1 + a k)^{-3}`, that is `(1, -3a, 6a^2)`.
    pub fn inverse_cube(a: &Rational) -> Self {
        KJet2([Rational::one(), Rational::from(-3) * a, Rational::from(6) * a * a])
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn scale(&self, c: &Rational) -> Self {
        KJet2(std::array::from_fn(|i| &self.0[i] * c))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(KJet2::one(), |acc, _| &acc * self)
    }
}

impl Mul<&KJet2> for &KJet2 {
    type Output = KJet2;
    fn mul(self, rhs: &KJet2) -> KJet2 {
        let [a0, a1, a2] = &self.0;
        let [b0, b1, b2] = &rhs.0;
        KJet2([a0 * b0, a0 * b1 + a1 * b0, a0 * b2 + a1 * b1 + a2 * b0])
    }
}

impl Add<&KJet2> for &KJet2 {
    type Output = KJet2;
    fn add(self, rhs: &KJet2) -> KJet2 {
        KJet2(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub<&KJet2> for &KJet2 {
    type Output = KJet2;
    fn sub(self, rhs: &KJet2) -> KJet2 {
        KJet2(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

/// Truncated product of two jets.
pub fn kjet_mul(a: &KJet2, b: &KJet2) -> KJet2 {
    a * b
}

/// Jet of `(1 + a k)^{-3}`.
pub fn kjet_inverse_cube(a: &Rational) -> KJet2 {
    KJet2::inverse_cube(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_cube_examples() {
        assert_eq!(kjet_inverse_cube(&Rational::zero()), KJet2::new(1, 0, 0));
        assert_eq!(kjet_inverse_cube(&Rational::one()), KJet2::new(1, -3, 6));
        assert_eq!(kjet_inverse_cube(&Rational::from(2)), KJet2::new(1, -6, 24));
    }

    // (1+k)^-3 (1+2k)^-3 expanded by multiplying truncated binomial
    // series coefficient lists directly
    #[test]
    fn product_matches_brute_force_expansion() {
        fn binom_series(a: i64) -> [i64; 3] {
            // (1+ak)^-3 = sum_n C(n+2,2) (-a)^n k^n
            [1, -3 * a, 6 * a * a]
        }
        let (x, y) = (binom_series(1), binom_series(2));
        let mut brute = [0i64; 3];
        for i in 0..3 {
            for j in 0..3 - i {
                brute[i + j] += x[i] * y[j];
            }
        }
        assert_eq!(brute, [1, -9, 48]);
        let got = kjet_mul(&KJet2::new(1, -3, 6), &KJet2::new(1, -6, 24));
        assert_eq!(got, KJet2::new(brute[0], brute[1], brute[2]));
    }

    #[test]
    fn linear_power() {
        // (1 + 4k)^8 = 1 + 32k + 448k^2 + ...
        assert_eq!(KJet2::linear(&Rational::from(4)).pow(8), KJet2::new(1, 32, 448));
    }
}
