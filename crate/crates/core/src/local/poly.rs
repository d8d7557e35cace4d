use std::fmt;
use std::ops::{Mul, Sub};

use crate::series::Rational;

/// Dense univariate polynomial over `Q`, constant term first, with no
/// trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::new(vec![Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from(i as u64)).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Poly::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] * &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &(&c * dc);
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact quotient; debug-asserts a zero remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, n: u32) -> Poly {
        (0..n).fold(Poly::one(), |acc, _| &acc * self)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &Poly, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
        Poly::new((0..n).map(|i| get(self, i) - get(rhs, i)).collect())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})t"),
                _ => format!("({c})t^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// Yun's squarefree decomposition: monic squarefree, pairwise coprime
/// factors `a_i` with `p = lc * prod a_i^i`, returned as `(i, a_i)` for the
/// non-constant `a_i`, in increasing `i`.
pub fn yun_factors(p: &Poly) -> Vec<(u32, Poly)> {
    assert!(!p.is_zero(), "squarefree decomposition of zero");
    let mut out = Vec::new();
    if p.degree() == Some(0) {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.exact_div(&a0);
    let c = dp.exact_div(&a0);
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().is_some_and(|n| n > 0) {
        let a = b.gcd(&d);
        b = b.exact_div(&a);
        let c = d.exact_div(&a);
        d = &c - &b.derivative();
        if a.degree().is_some_and(|n| n > 0) {
            out.push((i, a));
        }
        i += 1;
    }
    out
}

/// Multiplicity profile `(i, g_i)`: `g_i` distinct roots over the algebraic
/// closure have multiplicity `i`. Sorted by decreasing `i`.
pub fn yun_squarefree(p: &Poly) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = yun_factors(p).into_iter().map(|(i, a)| (i, a.degree().unwrap() as u32)).collect();
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        let f = Poly::from_ints(&[-1, 0, 1]); // t^2 - 1
        let g = Poly::from_ints(&[-1, 1]); // t - 1
        let (q, r) = f.div_rem(&g);
        assert_eq!(q, Poly::from_ints(&[1, 1]));
        assert!(r.is_zero());
        let h = Poly::from_ints(&[1, 2, 1]); // (t+1)^2
        assert_eq!(f.gcd(&h), Poly::from_ints(&[1, 1]));
        assert_eq!(f.gcd(&Poly::zero()), f.monic());
        let (q, r) = Poly::from_ints(&[3]).div_rem(&f);
        assert!(q.is_zero());
        assert_eq!(r, Poly::from_ints(&[3]));
    }

    #[test]
    fn yun_examples() {
        // t^2 (t - 1)
        assert_eq!(yun_squarefree(&Poly::from_ints(&[0, 0, -1, 1])), vec![(2, 1), (1, 1)]);
        // (t^2 - 2)^2
        assert_eq!(yun_squarefree(&Poly::from_ints(&[-2, 0, 1]).pow(2)), vec![(2, 2)]);
        // squarefree cubic
        assert_eq!(yun_squarefree(&Poly::from_ints(&[1, 1, 0, 1])), vec![(1, 3)]);
        assert!(yun_squarefree(&Poly::from_ints(&[7])).is_empty());
    }

    #[test]
    fn yun_reconstructs() {
        let a = Poly::from_ints(&[1, 0, 1]);
        let b = Poly::from_ints(&[-3, 1]);
        let c = Poly::from_ints(&[0, 1]);
        let p = &(&a.pow(3) * &b) * &c.pow(2);
        let p = &p * &Poly::from_ints(&[5]);
        let factors = yun_factors(&p);
        assert_eq!(factors.iter().map(|(i, _)| *i).collect::<Vec<_>>(), vec![1, 2, 3]);
        let rebuilt = factors.iter().fold(Poly::one(), |acc, (i, f)| &acc * &f.pow(*i));
        assert_eq!(rebuilt, p.monic());
    }
}
