//! The double parabolic algebra `g (x) C[u] (x) C[r]/(r^2 - 1)` truncated at
//! parabolic level `N`, and the homomorphism `rho^N` from `k` into it.
//!
//! `rho` is induced by the loop substitution `t -> r (1-u)/(1+u)`: a loop
//! element `x (x) t^n` goes to `x (x) t(u)^n (x) r^n`. Elements of level
//! (power of `u`) above `N` are dropped, which realises the quotient by the
//! ideal `I_N`.
//!
//! Generators:
//! `P^alpha_{k,a} = (E^alpha + (-1)^k E^{-alpha}) (x) u^k (x) r^a` and
//! `Q^alpha_{2k+1,a} = H^alpha (x) u^{2k+1} (x) r^a`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{bracket_finite, FiniteElement};
use crate::arith::{binomial, fmt_combination, frac, int, Rational};
use crate::compact::{h_schur_generic, HeisenbergPoly, KElement, KGen};
use crate::lattice::{LatticeVector, RootSystem};
use crate::poly::{IntPolynomial, Monomial, Poly, Weighted};

/// Parity of the `r` exponent.
fn parity(n: i64) -> u8 {
    n.rem_euclid(2) as u8
}

/// Element of the truncated double parabolic algebra, stored as finite-algebra
/// components indexed by `(level, parity)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicElement {
    cap: u32,
    comps: BTreeMap<(u32, u8), FiniteElement>,
}

/// A named generator of the parabolic algebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParGen {
    /// `P^root_{level,parity}` with `root` positive.
    P {
        root: LatticeVector,
        level: u32,
        parity: u8,
    },
    /// `Q^{alpha_dir}_{level,parity}` with odd `level`.
    Q { dir: usize, level: u32, parity: u8 },
}

impl fmt::Display for ParGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParGen::P {
                root,
                level,
                parity,
            } => write!(f, "P{root}[{level},{parity}]"),
            ParGen::Q { dir, level, parity } => write!(f, "Q{}[{level},{parity}]", dir + 1),
        }
    }
}

impl ParabolicElement {
    pub fn zero(cap: u32) -> Self {
        ParabolicElement {
            cap,
            comps: BTreeMap::new(),
        }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&(u32, u8), &FiniteElement)> {
        self.comps.iter()
    }

    /// Add `c * x (x) u^level (x) r^parity`, dropping it above the cap.
    pub fn add_component(&mut self, level: u32, parity: u8, x: &FiniteElement, c: &Rational) {
        if level > self.cap || c.is_zero() || x.is_zero() {
            return;
        }
        let key = (level, parity % 2);
        let entry = self
            .comps
            .entry(key)
            .or_insert_with(|| FiniteElement::zero(x.cartan.len()));
        entry.add_scaled(x, c);
        if entry.is_zero() {
            self.comps.remove(&key);
        }
    }

    /// `P^alpha_{k,a}`.
    pub fn p(rs: &RootSystem, alpha: &LatticeVector, level: u32, par: i64, cap: u32) -> Self {
        let mut out = Self::zero(cap);
        out.add_component(level, parity(par), &p_finite(rs, alpha, level), &int(1));
        out
    }

    /// `Q^gamma_{level,a}`; `level` must be odd.
    pub fn q(gamma: &LatticeVector, level: u32, par: i64, cap: u32) -> Self {
        assert!(level % 2 == 1, "Q generators live at odd level");
        let mut out = Self::zero(cap);
        out.add_component(
            level,
            parity(par),
            &FiniteElement::cartan_vector(gamma),
            &int(1),
        );
        out
    }

    pub fn from_gen(rs: &RootSystem, g: &ParGen, cap: u32) -> Self {
        match g {
            ParGen::P {
                root,
                level,
                parity,
            } => Self::p(rs, root, *level, *parity as i64, cap),
            ParGen::Q { dir, level, parity } => {
                Self::q(&rs.simple_root(*dir), *level, *parity as i64, cap)
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        for ((l, a), x) in &other.comps {
            self.add_component(*l, *a, x, c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &int(1));
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &int(-1));
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.cap);
        out.add_scaled(self, c);
        out
    }

    /// Same element with the `r` parity of every component flipped.
    pub fn flip_parity(&self) -> Self {
        let mut out = Self::zero(self.cap);
        for ((l, a), x) in &self.comps {
            out.add_component(*l, 1 - a, x, &int(1));
        }
        out
    }

    /// Every even-level component lies in `span{E^a + E^{-a}}` and every
    /// odd-level component in `span{H, E^a - E^{-a}}`.
    pub fn respects_grading(&self) -> bool {
        self.comps.iter().all(|((l, _), x)| {
            let sign = if l % 2 == 0 { int(1) } else { int(-1) };
            let cartan_ok = l % 2 == 1 || x.cartan.iter().all(Zero::is_zero);
            cartan_ok
                && x.roots.iter().all(|(a, c)| {
                    let partner = x.roots.get(&-a).cloned().unwrap_or_else(Rational::zero);
                    partner == &sign * c
                })
        })
    }

    /// Coordinates in the `P`/`Q` generators. Requires [`Self::respects_grading`].
    pub fn decompose(&self) -> Vec<(ParGen, Rational)> {
        let mut out = Vec::new();
        for ((l, a), x) in &self.comps {
            for (i, c) in x.cartan.iter().enumerate() {
                if !c.is_zero() {
                    out.push((
                        ParGen::Q {
                            dir: i,
                            level: *l,
                            parity: *a,
                        },
                        c.clone(),
                    ));
                }
            }
            for (root, c) in &x.roots {
                if root.is_positive() {
                    out.push((
                        ParGen::P {
                            root: root.clone(),
                            level: *l,
                            parity: *a,
                        },
                        c.clone(),
                    ));
                }
            }
        }
        out
    }
}

impl fmt::Display for ParabolicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.decompose();
        write!(
            f,
            "{}",
            fmt_combination(terms.iter().map(|(g, c)| (c, g.to_string())))
        )
    }
}

fn p_finite(rs: &RootSystem, alpha: &LatticeVector, level: u32) -> FiniteElement {
    let r = rs.rank();
    let mut x = FiniteElement::root_vector(r, alpha);
    let sign = if level % 2 == 0 { int(1) } else { int(-1) };
    x.add_scaled(&FiniteElement::root_vector(r, &-alpha), &sign);
    x
}

/// `[x (x) u^k r^a, y (x) u^l r^b] = [x,y] (x) u^{k+l} r^{a+b}`, truncated.
pub fn bracket_parabolic(
    rs: &RootSystem,
    x: &ParabolicElement,
    y: &ParabolicElement,
) -> ParabolicElement {
    let cap = x.cap.min(y.cap);
    let mut out = ParabolicElement::zero(cap);
    for ((k, a), xa) in &x.comps {
        for ((l, b), yb) in &y.comps {
            if k + l > cap {
                continue;
            }
            out.add_component(k + l, a + b, &bracket_finite(rs, xa, yb), &int(1));
        }
    }
    out
}

/// `a^{(n)}_k`, twice the `u^k` coefficient of `((1-u)/(1+u))^n`:
///
/// `a^{(n)}_{2k} = 2 sum_{l=0}^{|n|} C(2|n|, 2l) C(k-l+|n|-1, k-l)` and
/// `a^{(n)}_{2k+1} = -2 sgn(n) sum_{l=0}^{|n|-1} C(2|n|, 2l+1) C(k-l+|n|-1, k-l)`,
/// with the binomial conventions of [`binomial`].
pub fn rho_coefficient(n: i64, k: u32) -> Rational {
    let m = n.abs();
    let j = (k / 2) as i64;
    let mut s = BigInt::zero();
    if k % 2 == 0 {
        for l in 0..=m {
            s += binomial(2 * m, 2 * l) * binomial(j - l + m - 1, j - l);
        }
        Rational::from_integer(s * 2)
    } else {
        for l in 0..m {
            s += binomial(2 * m, 2 * l + 1) * binomial(j - l + m - 1, j - l);
        }
        Rational::from_integer(s * (-2 * n.signum()))
    }
}

/// `a^{(n)}_k` from the power series `exp(n log((1-u)/(1+u)))` with
/// `log((1-u)/(1+u)) = -2 sum_j u^{2j+1}/(2j+1)`. Independent of the binomial
/// closed form in [`rho_coefficient`].
pub fn rho_coefficient_series(n: i64, k: u32) -> Rational {
    let k = k as usize;
    let mut log = vec![Rational::zero(); k + 1];
    for j in (1..=k).step_by(2) {
        log[j] = frac(-2 * n, j as i64);
    }
    // e = exp(log) via j e_j = sum_l l log_l e_{j-l}
    let mut e = vec![Rational::zero(); k + 1];
    e[0] = int(1);
    for i in 1..=k {
        let mut s = Rational::zero();
        for l in 1..=i {
            s += int(l as i64) * &log[l] * &e[i - l];
        }
        e[i] = s / int(i as i64);
    }
    &e[k] * int(2)
}

/// `rho^N(Ec^alpha_n) = 1/2 sum_{k<=N} a^{(n)}_k P^alpha_{k,n}`.
pub fn rho_ec(rs: &RootSystem, cap: u32, alpha: &LatticeVector, n: i64) -> ParabolicElement {
    let mut out = ParabolicElement::zero(cap);
    for k in 0..=cap {
        let c = rho_coefficient(n, k) * frac(1, 2);
        out.add_component(k, parity(n), &p_finite(rs, alpha, k), &c);
    }
    out
}

/// `rho^N(Hc^gamma_n) = 1/2 sum_{2k+1<=N} a^{(n)}_{2k+1} Q^gamma_{2k+1,n}`.
pub fn rho_hc(cap: u32, gamma: &LatticeVector, n: i64) -> ParabolicElement {
    let mut out = ParabolicElement::zero(cap);
    let mut level = 1;
    while level <= cap {
        let c = rho_coefficient(n, level) * frac(1, 2);
        out.add_component(level, parity(n), &FiniteElement::cartan_vector(gamma), &c);
        level += 2;
    }
    out
}

/// `rho^N` on an element of `k`.
pub fn rho(rs: &RootSystem, cap: u32, x: &KElement) -> ParabolicElement {
    let mut out = ParabolicElement::zero(cap);
    for (g, c) in x.terms() {
        let img = match g {
            KGen::Ec { root, mode } => rho_ec(rs, cap, root, *mode),
            KGen::Hc { dir, mode } => rho_hc(cap, &rs.simple_root(*dir), *mode as i64),
        };
        out.add_scaled(&img, c);
    }
    out
}

/// Witness of the ideal: `sum_{m=0}^{N+a} (-1)^m C(N+a, m) X_{n+2bm}` where
/// `X_j` is `Ec^alpha_j` (or `Hc^alpha_j` when `heisenberg` is set).
pub fn ideal_witness(
    alpha: &LatticeVector,
    cap: u32,
    a: u32,
    b: i64,
    n: i64,
    heisenberg: bool,
) -> KElement {
    let top = (cap + a) as i64;
    let mut out = KElement::zero();
    for m in 0..=top {
        let c =
            Rational::from_integer(binomial(top, m)) * if m % 2 == 0 { int(1) } else { int(-1) };
        let j = n + 2 * b * m;
        let x = if heisenberg {
            KElement::hc_vector(alpha, j)
        } else {
            KElement::ec(alpha, j)
        };
        out.add_scaled(&x, &c);
    }
    out
}

/// `rho^N` kills the ideal witness.
pub fn ideal_witness_check(
    rs: &RootSystem,
    alpha: &LatticeVector,
    cap: u32,
    a: u32,
    b: i64,
    n: i64,
) -> bool {
    [false, true]
        .iter()
        .all(|&h| rho(rs, cap, &ideal_witness(alpha, cap, a, b, n, h)).is_zero())
}

/// Variable `Q^{alpha_dir}_{level,parity}` of the commutative algebra `U(<Q>)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QVar {
    pub dir: usize,
    pub level: u32,
    pub parity: u8,
}

impl Weighted for QVar {
    fn weight(&self) -> u32 {
        self.level
    }
}

impl fmt::Display for QVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q{}[{},{}]", self.dir + 1, self.level, self.parity)
    }
}

/// Element of `U(<Q>)^N`: a polynomial in the commuting `Q` generators with
/// every monomial of level at most `N`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UQElement {
    cap: u32,
    poly: Poly<QVar>,
}

impl UQElement {
    pub fn new(cap: u32, mut poly: Poly<QVar>) -> Self {
        poly.truncate_weight(cap);
        UQElement { cap, poly }
    }

    pub fn zero(cap: u32) -> Self {
        UQElement {
            cap,
            poly: Poly::zero(),
        }
    }

    pub fn one(cap: u32) -> Self {
        UQElement {
            cap,
            poly: Poly::one(),
        }
    }

    pub fn constant(cap: u32, c: Rational) -> Self {
        UQElement {
            cap,
            poly: Poly::constant(c),
        }
    }

    pub fn var(cap: u32, v: QVar) -> Self {
        Self::new(cap, Poly::var(v))
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn poly(&self) -> &Poly<QVar> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        UQElement {
            cap: self.cap.min(other.cap),
            poly: &self.poly + &other.poly,
        }
        .retruncated()
    }

    pub fn sub(&self, other: &Self) -> Self {
        UQElement {
            cap: self.cap.min(other.cap),
            poly: &self.poly - &other.poly,
        }
        .retruncated()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UQElement {
            cap: self.cap,
            poly: self.poly.scale(c),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cap = self.cap.min(other.cap);
        UQElement {
            cap,
            poly: self.poly.mul_filtered(&other.poly, |m| m.weight() <= cap),
        }
    }

    fn retruncated(mut self) -> Self {
        self.poly.truncate_weight(self.cap);
        self
    }

    /// `exp(self)` for an element without constant term.
    pub fn exp(&self) -> Self {
        assert!(
            self.poly.constant_term().is_zero(),
            "exp needs a nilpotent argument"
        );
        let mut out = Self::one(self.cap);
        let mut power = Self::one(self.cap);
        for j in 1..=self.cap {
            power = power.mul(self).scale(&frac(1, j as i64));
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        out
    }

    /// The substitution `Q -> -Q`.
    pub fn negate_q(&self) -> Self {
        let mut poly = Poly::zero();
        for (m, c) in self.poly.terms() {
            let s = if m.degree() % 2 == 0 {
                c.clone()
            } else {
                -c.clone()
            };
            poly.add_term(m.clone(), s);
        }
        UQElement {
            cap: self.cap,
            poly,
        }
    }

    /// Substitute the single abstract direction `dir = 0` by `Q^alpha = sum_i alpha_i Q^{alpha_i}`.
    pub fn along(&self, alpha: &LatticeVector) -> Self {
        let cap = self.cap;
        let poly = self.poly.compose(
            |v| q_linear(alpha, v.level, v.parity),
            |m| m.weight() <= cap,
        );
        UQElement { cap, poly }
    }
}

impl fmt::Display for UQElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// `Q^gamma_{level,parity}` as a linear polynomial.
pub fn q_linear(gamma: &LatticeVector, level: u32, parity: u8) -> Poly<QVar> {
    let mut p = Poly::zero();
    for (i, c) in gamma.coords().iter().enumerate() {
        p.add_term(
            Monomial::var(QVar {
                dir: i,
                level,
                parity,
            }),
            int(*c),
        );
    }
    p
}

/// `rho^N(Hc^{alpha_dir}_n)` as a linear element of `U(<Q>)`.
pub fn rho_hc_linear(cap: u32, dir: usize, n: i64) -> Poly<QVar> {
    let mut p = Poly::zero();
    let mut level = 1;
    while level <= cap {
        let c = rho_coefficient(n, level) * frac(1, 2);
        p.add_term(
            Monomial::var(QVar {
                dir,
                level,
                parity: parity(n),
            }),
            c,
        );
        level += 2;
    }
    p
}

/// `rho^N` on the commutative algebra `U(<Hc>)`.
pub fn rho_heisenberg(cap: u32, u: &HeisenbergPoly) -> UQElement {
    let poly = u.compose(
        |h| rho_hc_linear(cap, h.dir, h.mode as i64),
        |m| m.weight() <= cap,
    );
    UQElement { cap, poly }
}

/// `omega_{alpha,N}^t = exp(t sum_k 2/(2k+1) Q^alpha_{2k+1,0})`.
pub fn omega_power(alpha: &LatticeVector, cap: u32, t: i64) -> UQElement {
    let mut x = Poly::zero();
    let mut level = 1;
    while level <= cap {
        x.add_scaled(&q_linear(alpha, level, 0), &frac(2 * t, level as i64));
        level += 2;
    }
    UQElement::new(cap, x).exp()
}

/// `omega_{alpha,N}`.
pub fn omega(alpha: &LatticeVector, cap: u32) -> UQElement {
    omega_power(alpha, cap, 1)
}

/// The exponent `sum_k 2/(2k+1) Q^alpha_{2k+1,0}` as a parabolic element.
fn omega_log(alpha: &LatticeVector, cap: u32) -> ParabolicElement {
    let mut out = ParabolicElement::zero(cap);
    let mut level = 1;
    while level <= cap {
        out.add_scaled(
            &ParabolicElement::q(alpha, level, 0, cap),
            &frac(2, level as i64),
        );
        level += 2;
    }
    out
}

/// `omega x omega^{-1} = exp(ad X) x` with `omega = exp(X)`.
pub fn conjugate_by_omega(
    rs: &RootSystem,
    alpha: &LatticeVector,
    cap: u32,
    x: &ParabolicElement,
) -> ParabolicElement {
    let log = omega_log(alpha, cap);
    let mut out = x.clone();
    let mut term = x.clone();
    for j in 1..=cap {
        term = bracket_parabolic(rs, &log, &term).scale(&frac(1, j as i64));
        if term.is_zero() {
            break;
        }
        out = out.add(&term);
    }
    out
}

/// `S^{N,Q}_n` in the abstract direction `dir = 0`.
fn q_schur_generic(cap: u32, n: i64) -> UQElement {
    if n < 0 {
        return UQElement::zero(cap);
    }
    let poly = h_schur_generic(n as u32)
        .compose(|l| rho_hc_linear(cap, 0, *l as i64), |m| m.weight() <= cap);
    UQElement { cap, poly }
}

/// `S^{N,Q}_n = rho^N(S^H_n)` along `alpha`.
pub fn q_schur(cap: u32, n: i64, alpha: &LatticeVector) -> UQElement {
    q_schur_generic(cap, n).along(alpha)
}

/// Extended Q-Schur polynomial `S-bar^{N,Q}_{alpha,a}(n)`: each monomial
/// coefficient of `S^{N,Q}_n` is interpolated as a polynomial in `n` on the
/// nodes `a, a+2, ..., a+2N`, and the interpolant is evaluated at any `n` of
/// parity `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedQSchur {
    alpha: LatticeVector,
    cap: u32,
    parity: u8,
    coeffs: BTreeMap<Monomial<QVar>, IntPolynomial>,
}

impl ExtendedQSchur {
    pub fn new(alpha: &LatticeVector, cap: u32, parity: u8) -> Self {
        let nodes: Vec<i64> = (0..=cap as i64).map(|j| parity as i64 + 2 * j).collect();
        let values: Vec<UQElement> = nodes.iter().map(|&n| q_schur_generic(cap, n)).collect();
        let mut monomials: Vec<Monomial<QVar>> = values
            .iter()
            .flat_map(|v| v.poly.terms().map(|(m, _)| m.clone()))
            .collect();
        monomials.sort();
        monomials.dedup();
        let coeffs = monomials
            .into_iter()
            .map(|m| {
                let pts: Vec<(i64, Rational)> = nodes
                    .iter()
                    .zip(&values)
                    .map(|(n, v)| (*n, v.poly.coeff(&m)))
                    .collect();
                (m, IntPolynomial::interpolate_int(&pts))
            })
            .filter(|(_, p)| !p.is_zero())
            .collect();
        ExtendedQSchur {
            alpha: alpha.clone(),
            cap,
            parity,
            coeffs,
        }
    }

    pub fn parity(&self) -> u8 {
        self.parity
    }

    /// Coefficient polynomials in the abstract direction, keyed by monomial.
    pub fn coefficients(&self) -> &BTreeMap<Monomial<QVar>, IntPolynomial> {
        &self.coeffs
    }

    /// Evaluate at `n`, which must have the parity of this family.
    pub fn eval(&self, n: i64) -> UQElement {
        assert_eq!(
            parity(n),
            self.parity,
            "argument parity does not match the extended Q-Schur family"
        );
        let mut poly = Poly::zero();
        for (m, p) in &self.coeffs {
            poly.add_term(m.clone(), p.eval_int(n));
        }
        UQElement {
            cap: self.cap,
            poly,
        }
        .along(&self.alpha)
    }
}

/// `S-bar^{N,Q}_alpha(n)` with the parity taken from `n`.
pub fn extended_q_schur(alpha: &LatticeVector, cap: u32, n: i64) -> UQElement {
    ExtendedQSchur::new(alpha, cap, parity(n)).eval(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compact::bracket_compact;

    fn a1() -> RootSystem {
        RootSystem::parse("A1").unwrap()
    }

    #[test]
    fn coefficients_match_series() {
        for n in -6..=6 {
            for k in 0..=12 {
                assert_eq!(
                    rho_coefficient(n, k),
                    rho_coefficient_series(n, k),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn rho_is_a_homomorphism_a1() {
        let rs = a1();
        let a = rs.simple_root(0);
        let mut gens = Vec::new();
        for n in -3..=3 {
            gens.push(KElement::ec(&a, n));
            gens.push(KElement::hc(0, n));
        }
        for cap in 0..=3 {
            for x in &gens {
                for y in &gens {
                    let lhs = rho(&rs, cap, &bracket_compact(&rs, x, y));
                    let rhs = bracket_parabolic(&rs, &rho(&rs, cap, x), &rho(&rs, cap, y));
                    assert_eq!(lhs, rhs);
                    assert!(lhs.respects_grading());
                }
            }
        }
    }

    #[test]
    fn q_and_p_commutator() {
        let rs = a1();
        let a = rs.simple_root(0);
        let c = bracket_parabolic(
            &rs,
            &ParabolicElement::q(&a, 1, 0, 3),
            &ParabolicElement::p(&rs, &a, 0, 0, 3),
        );
        assert_eq!(c, ParabolicElement::p(&rs, &a, 1, 0, 3).scale(&int(2)));
    }

    #[test]
    fn omega_level_one() {
        let a = a1().simple_root(0);
        let w = omega(&a, 1);
        let expected = UQElement::new(
            1,
            &Poly::one()
                + &Poly::var(QVar {
                    dir: 0,
                    level: 1,
                    parity: 0,
                })
                .scale(&int(2)),
        );
        assert_eq!(w, expected);
        assert_eq!(omega(&a, 3).mul(&omega(&a, 3)), omega_power(&a, 3, 2));
        assert_eq!(
            omega_power(&a, 3, 2).mul(&omega_power(&a, 3, -2)),
            UQElement::one(3)
        );
    }

    #[test]
    fn extended_schur_level_one_golden() {
        let a = a1().simple_root(0);
        let q10 = Poly::var(QVar {
            dir: 0,
            level: 1,
            parity: 0,
        });
        let q11 = Poly::var(QVar {
            dir: 0,
            level: 1,
            parity: 1,
        });
        for n in -4..=4 {
            let even = extended_q_schur(&a, 1, 2 * n);
            assert_eq!(
                even,
                UQElement::new(1, &Poly::one() + &q10.scale(&int(4 * n)))
            );
            let odd = extended_q_schur(&a, 1, 2 * n + 1);
            assert_eq!(odd, UQElement::new(1, q11.scale(&int(4 * (n + 1)))));
        }
    }

    #[test]
    fn extended_schur_agrees_beyond_nodes() {
        let a = a1().simple_root(0);
        for cap in 0..=3 {
            for par in 0..2u8 {
                let ext = ExtendedQSchur::new(&a, cap, par);
                for j in 0..4 {
                    let n = par as i64 + 2 * (cap as i64 + 1 + j);
                    assert_eq!(ext.eval(n), q_schur(cap, n, &a), "cap={cap} n={n}");
                }
                for (_, p) in ext.coefficients() {
                    assert!(p.degree().unwrap_or(0) <= cap as usize);
                }
            }
        }
    }
}
