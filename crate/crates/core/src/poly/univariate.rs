//! Dense univariate polynomials with rational coefficients, Lagrange
//! interpolation and generalized sums.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{fmt_rational, int, Rational};

/// `coeffs[k]` is the coefficient of `n^k`; trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<Rational>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `n`.
    pub fn identity() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, n: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * n + c)
    }

    pub fn eval_int(&self, n: i64) -> Rational {
        self.eval(&int(n))
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[Rational], i: usize| v.get(i).cloned().unwrap_or_else(Rational::zero);
        Self::new(
            (0..len)
                .map(|i| get(&self.coeffs, i) + get(&other.coeffs, i))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// The unique polynomial of degree `< points.len()` through the points.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let mut result = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Self::constant(Rational::one());
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&Self::new(vec![-xj.clone(), Rational::one()]));
                    denom *= xi - xj;
                }
            }
            result = result.add(&basis.scale(&(yi / denom)));
        }
        result
    }

    pub fn interpolate_int(points: &[(i64, Rational)]) -> Self {
        let pts: Vec<(Rational, Rational)> =
            points.iter().map(|(x, y)| (int(*x), y.clone())).collect();
        Self::interpolate(&pts)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => fmt_rational(c),
                1 => format!("{}*n", fmt_rational(c)),
                _ => format!("{}*n^{k}", fmt_rational(c)),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Generalized sum: the polynomial extension of `n -> sum_{m=1}^n p(m)`,
/// evaluated at any integer. For negative arguments it equals
/// `-sum_{k=0}^{|n|-1} p(-k)`, and it vanishes at zero.
pub fn gsum(p: &IntPolynomial, n: i64) -> Rational {
    gsum_polynomial(p).eval_int(n)
}

/// The polynomial `P` with `P(n) - P(n-1) = p(n)` and `P(0) = 0`.
pub fn gsum_polynomial(p: &IntPolynomial) -> IntPolynomial {
    let degree = p.degree().map_or(0, |d| d + 1);
    let mut points = Vec::with_capacity(degree + 1);
    let mut running = Rational::zero();
    points.push((0, running.clone()));
    for m in 1..=degree as i64 {
        running += p.eval_int(m);
        points.push((m, running.clone()));
    }
    IntPolynomial::interpolate_int(&points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;

    #[test]
    fn interpolation_roundtrip() {
        let p = IntPolynomial::new(vec![int(3), frac(-1, 2), int(2)]);
        let pts: Vec<(i64, Rational)> =
            (0..3).map(|x| (x * 2 + 1, p.eval_int(x * 2 + 1))).collect();
        assert_eq!(IntPolynomial::interpolate_int(&pts), p);
    }

    #[test]
    fn gsum_examples() {
        let square = IntPolynomial::new(vec![int(0), int(0), int(1)]);
        assert_eq!(gsum(&square, 3), int(14));
        assert_eq!(gsum(&square, 0), int(0));
        assert_eq!(gsum(&square, -2), int(-1));
        let constant = IntPolynomial::constant(int(1));
        assert_eq!(gsum(&constant, -3), int(-3));
    }
}
