//! Small exact-arithmetic helpers shared by every module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `(-1)^e` as a rational.
pub fn sign_pow(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        one()
    } else {
        -one()
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient with the conventions used by the loop-to-parabolic
/// coefficients: zero for a negative lower index, zero when the lower index
/// exceeds a non-negative upper index, and the falling-factorial extension
/// `m (m-1) ... (m-k+1) / k!` for a negative upper index.
pub fn binomial(m: i64, k: i64) -> BigInt {
    if k < 0 || (m >= 0 && k > m) {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for j in 0..k {
        num *= BigInt::from(m - j);
    }
    num / factorial(k as u64)
}

/// Multistep factorial `N!_(n)`: `N (N-n)!_(n)` for `N >= n`, `N` for
/// `1 <= N < n` and `1` for `N <= 0`.
pub fn multistep_factorial(big_n: i64, step: i64) -> BigInt {
    assert!(step > 0, "multistep factorial needs a positive step");
    let mut acc = BigInt::one();
    let mut k = big_n;
    while k >= 1 {
        acc *= BigInt::from(k);
        k -= step;
    }
    acc
}

/// Render a rational compactly: `3`, `-1/2`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Render `sum c_i * label_i` as `a - 2*b + 1/2*c`, or `0` when empty.
pub fn fmt_combination<'a>(terms: impl IntoIterator<Item = (&'a Rational, String)>) -> String {
    let mut out = String::new();
    for (i, (c, label)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        out.push_str(match (i, neg) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        });
        if mag.is_one() {
            out.push_str(&label);
        } else {
            out.push_str(&format!("{}*{label}", fmt_rational(&mag)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Floor of the square root of a non-negative rational, as an integer.
pub fn floor_sqrt(q: &Rational) -> i64 {
    if !q.is_positive() {
        return 0;
    }
    let approx = q.to_f64().unwrap_or(f64::MAX).sqrt().floor() as i64;
    let mut s = approx.max(0);
    while int(s + 1) * int(s + 1) <= *q {
        s += 1;
    }
    while s > 0 && int(s) * int(s) > *q {
        s -= 1;
    }
    s
}

pub fn to_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(-1, -1), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::one());
        assert_eq!(binomial(-2, 3), BigInt::from(-4));
    }

    #[test]
    fn multistep_factorial_values() {
        assert_eq!(multistep_factorial(2, 4), BigInt::from(2));
        assert_eq!(multistep_factorial(6, 4), BigInt::from(12));
        assert_eq!(multistep_factorial(0, 4), BigInt::one());
        assert_eq!(multistep_factorial(-3, 2), BigInt::one());
        assert_eq!(multistep_factorial(8, 2), BigInt::from(384));
    }

    #[test]
    fn floor_sqrt_is_exact() {
        assert_eq!(floor_sqrt(&int(16)), 4);
        assert_eq!(floor_sqrt(&frac(17, 1)), 4);
        assert_eq!(floor_sqrt(&frac(1, 4)), 0);
        assert_eq!(floor_sqrt(&frac(9, 2)), 2);
    }
}
