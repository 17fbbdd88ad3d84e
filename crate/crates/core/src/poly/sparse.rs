//! Sparse commutative polynomials over the rationals, generic in the
//! variable type. Every polynomial ring in the crate is an instance.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::{fmt_rational, Rational};

/// A variable carrying a positive grading weight (mode number or parabolic level).
pub trait Weighted {
    fn weight(&self) -> u32;
}

/// Product of variables with positive exponents, sorted by variable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial<V>(Vec<(V, u32)>);

impl<V: Ord + Clone> Monomial<V> {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: V) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (V, u32)>) -> Self {
        let mut map: BTreeMap<V, u32> = BTreeMap::new();
        for (v, e) in factors {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial(map.into_iter().collect())
    }

    pub fn factors(&self) -> &[(V, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: &V) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(v))
            .map_or(0, |i| self.0[i].1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Lower the exponent of `v` by one, or `None` if `v` does not occur.
    pub fn without_one(&self, v: &V) -> Option<Self> {
        let pos = self.0.iter().position(|(w, _)| w == v)?;
        let mut out = self.0.clone();
        if out[pos].1 == 1 {
            out.remove(pos);
        } else {
            out[pos].1 -= 1;
        }
        Some(Monomial(out))
    }

    /// Expand into a flat list of variables with multiplicity.
    pub fn flatten(&self) -> Vec<V> {
        self.0
            .iter()
            .flat_map(|(v, e)| std::iter::repeat_n(v.clone(), *e as usize))
            .collect()
    }
}

impl<V: Weighted> Monomial<V> {
    pub fn weight(&self) -> u32 {
        self.0.iter().map(|(v, e)| v.weight() * e).sum()
    }
}

/// Finite rational combination of monomials.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly<V: Ord> {
    terms: BTreeMap<Monomial<V>, Rational>,
}

impl<V: Ord + Clone> Default for Poly<V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V: Ord + Clone> Poly<V> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: V) -> Self {
        Self::term(Monomial::var(v), Rational::one())
    }

    pub fn term(m: Monomial<V>, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<V>, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial<V>, Rational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial<V>) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    pub fn add_term(&mut self, m: Monomial<V>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, k) in &other.terms {
            self.add_term(m.clone(), k * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn variables(&self) -> Vec<V> {
        let mut vs: Vec<V> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.clone()))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&Monomial<V>) -> bool) {
        self.terms.retain(|m, _| keep(m));
    }

    /// Product, keeping only monomials accepted by `keep`.
    pub fn mul_filtered(&self, other: &Self, keep: impl Fn(&Monomial<V>) -> bool) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                if keep(&m) {
                    out.add_term(m, c1 * c2);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Multiply every monomial by the monomial `m`.
    pub fn mul_monomial(&self, m: &Monomial<V>, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.mul(m), v * c);
        }
        out
    }

    /// Substitute each variable by a polynomial in another ring. `keep`
    /// filters intermediate products, so truncated targets stay small.
    pub fn compose<W: Ord + Clone>(
        &self,
        image: impl Fn(&V) -> Poly<W>,
        keep: impl Fn(&Monomial<W>) -> bool + Copy,
    ) -> Poly<W> {
        let mut cache: BTreeMap<V, Vec<Poly<W>>> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut acc = Poly::constant(c.clone());
            for (v, e) in &m.0 {
                let powers = cache
                    .entry(v.clone())
                    .or_insert_with(|| vec![Poly::one(), image(v)]);
                while powers.len() <= *e as usize {
                    let next = powers.last().unwrap().mul_filtered(&powers[1], keep);
                    powers.push(next);
                }
                acc = acc.mul_filtered(&powers[*e as usize], keep);
                if acc.is_zero() {
                    break;
                }
            }
            for (k, v) in acc.terms {
                out.add_term(k, v);
            }
        }
        out
    }

    /// Rename variables, merging terms that collide.
    pub fn map_vars<W: Ord + Clone>(&self, f: impl Fn(&V) -> W) -> Poly<W> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(
                Monomial::from_factors(m.0.iter().map(|(v, e)| (f(v), *e))),
                c.clone(),
            );
        }
        out
    }

    /// Partial derivative with respect to `v`.
    pub fn derivative(&self, v: &V) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e > 0 {
                out.add_term(
                    m.without_one(v).unwrap(),
                    c * Rational::from_integer(e.into()),
                );
            }
        }
        out
    }
}

impl<V: Ord + Clone + Weighted> Poly<V> {
    /// Maximal weight of a monomial (zero for constants and the zero polynomial).
    pub fn weight(&self) -> u32 {
        self.terms.keys().map(Monomial::weight).max().unwrap_or(0)
    }

    pub fn truncate_weight(&mut self, max: u32) -> usize {
        let before = self.terms.len();
        self.terms.retain(|m, _| m.weight() <= max);
        before - self.terms.len()
    }
}

impl<V: Ord + Clone> Add for &Poly<V> {
    type Output = Poly<V>;
    fn add(self, rhs: &Poly<V>) -> Poly<V> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<V: Ord + Clone> Sub for &Poly<V> {
    type Output = Poly<V>;
    fn sub(self, rhs: &Poly<V>) -> Poly<V> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<V: Ord + Clone> Neg for &Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<V: Ord + Clone> Mul for &Poly<V> {
    type Output = Poly<V>;
    fn mul(self, rhs: &Poly<V>) -> Poly<V> {
        self.mul_filtered(rhs, |_| true)
    }
}

impl<V: Ord + Clone + fmt::Display> fmt::Display for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono: Vec<String> =
                m.0.iter()
                    .map(|(v, e)| {
                        if *e == 1 {
                            v.to_string()
                        } else {
                            format!("{v}^{e}")
                        }
                    })
                    .collect();
            if m.is_one() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&mag), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    impl Weighted for u32 {
        fn weight(&self) -> u32 {
            *self
        }
    }

    #[test]
    fn ring_operations() {
        let x = Poly::var(1u32);
        let y = Poly::var(2u32);
        let s = &x + &y;
        let sq = &s * &s;
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coeff(&Monomial::from_factors([(1, 1), (2, 1)])), int(2));
        assert_eq!(sq.weight(), 4);
        assert!((&sq - &sq).is_zero());
        assert_eq!(sq.derivative(&1), &x.scale(&int(2)) + &y.scale(&int(2)));
    }

    #[test]
    fn compose_substitutes() {
        let x = Poly::var(1u32);
        let p = &x.pow(2) + &Poly::constant(int(3));
        let q = p.compose(|_| &Poly::var(5u32) + &Poly::one(), |_| true);
        assert_eq!(q.constant_term(), int(4));
        assert_eq!(q.coeff(&Monomial::var(5)), int(2));
        let truncated = p.compose(|_| Poly::var(5u32), |m| m.weight() <= 5);
        assert_eq!(truncated, Poly::constant(int(3)));
    }
}
