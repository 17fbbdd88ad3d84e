//! The maximal compact subalgebra `k`: fixed points of the Chevalley
//! involution, spanned by
//! `Ec^alpha_n = E^alpha_n + E^{-alpha}_{-n}` and
//! `Hc^alpha_n = (H^alpha_n - H^alpha_{-n}) / 2`.
//!
//! Besides the bracket this module provides the commutative Heisenberg part
//! `U(<Hc>)`, normal ordering of `Ec` through it, the H-Schur polynomials and
//! the generating elements `F^H_f` with `F^H_f (e^gamma (x) 1) = e^gamma (x) f`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{AffineElement, FiniteElement};
use crate::arith::{factorial, fmt_combination, frac, int, multistep_factorial, Rational};
use crate::basicrep::{AffineGenerator, BasicElement, BasicRep};
use crate::error::{Error, Result};
use crate::lattice::{LatticeVector, RootSystem};
use crate::linalg;
use crate::poly::{heisenberg_mode, HVar, IndexedPoly, Monomial, Poly, Weighted};

/// Canonical generator of `k`.
///
/// `Ec` is stored with a positive mode, or mode zero and a positive root;
/// `Hc` with a positive mode, one per simple-root direction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KGen {
    Ec { root: LatticeVector, mode: i64 },
    Hc { dir: usize, mode: u32 },
}

impl fmt::Display for KGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KGen::Ec { root, mode } => write!(f, "Ec{root}[{mode}]"),
            KGen::Hc { dir, mode } => write!(f, "Hc{}[{mode}]", dir + 1),
        }
    }
}

/// Element of `k` as a combination of canonical generators.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct KElement {
    terms: BTreeMap<KGen, Rational>,
}

impl KElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `Ec^alpha_n`, using `Ec^alpha_n = Ec^{-alpha}_{-n}`.
    pub fn ec(alpha: &LatticeVector, n: i64) -> Self {
        let mut out = Self::zero();
        out.add_ec(alpha, n, &Rational::one());
        out
    }

    /// `Hc^{alpha_dir}_n`, using `Hc_{-n} = -Hc_n` and `Hc_0 = 0`.
    pub fn hc(dir: usize, n: i64) -> Self {
        let mut out = Self::zero();
        out.add_hc(dir, n, &Rational::one());
        out
    }

    /// `Hc^gamma_n = sum_i gamma_i Hc^{alpha_i}_n`.
    pub fn hc_vector(gamma: &LatticeVector, n: i64) -> Self {
        let mut out = Self::zero();
        for (i, c) in gamma.coords().iter().enumerate() {
            out.add_hc(i, n, &int(*c));
        }
        out
    }

    fn add_ec(&mut self, alpha: &LatticeVector, n: i64, c: &Rational) {
        let (root, mode) = if n < 0 || (n == 0 && !alpha.is_positive()) {
            (-alpha, -n)
        } else {
            (alpha.clone(), n)
        };
        self.add_gen(KGen::Ec { root, mode }, c.clone());
    }

    fn add_hc(&mut self, dir: usize, n: i64, c: &Rational) {
        match n.cmp(&0) {
            std::cmp::Ordering::Greater => self.add_gen(
                KGen::Hc {
                    dir,
                    mode: n as u32,
                },
                c.clone(),
            ),
            std::cmp::Ordering::Less => self.add_gen(
                KGen::Hc {
                    dir,
                    mode: (-n) as u32,
                },
                -c.clone(),
            ),
            std::cmp::Ordering::Equal => {}
        }
    }

    fn add_hc_vector(&mut self, gamma: &LatticeVector, n: i64, c: &Rational) {
        for (i, g) in gamma.coords().iter().enumerate() {
            if *g != 0 {
                self.add_hc(i, n, &(c * int(*g)));
            }
        }
    }

    fn add_gen(&mut self, g: KGen, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(g.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn from_gen(g: &KGen) -> Self {
        let mut out = Self::zero();
        out.add_gen(g.clone(), Rational::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&KGen, &Rational)> {
        self.terms.iter()
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        for (g, k) in &other.terms {
            self.add_gen(g.clone(), k * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Image in the affine algebra.
    pub fn to_affine(&self, rs: &RootSystem) -> AffineElement {
        let r = rs.rank();
        let mut out = AffineElement::zero();
        for (g, c) in &self.terms {
            match g {
                KGen::Ec { root, mode } => {
                    out.add_scaled(
                        &AffineElement::loop_element(FiniteElement::root_vector(r, root), *mode),
                        c,
                        r,
                    );
                    out.add_scaled(
                        &AffineElement::loop_element(FiniteElement::root_vector(r, &-root), -mode),
                        c,
                        r,
                    );
                }
                KGen::Hc { dir, mode } => {
                    let h = FiniteElement::cartan_vector(&rs.simple_root(*dir));
                    let half = c * frac(1, 2);
                    out.add_scaled(
                        &AffineElement::loop_element(h.clone(), *mode as i64),
                        &half,
                        r,
                    );
                    out.add_scaled(&AffineElement::loop_element(h, -(*mode as i64)), &-half, r);
                }
            }
        }
        out
    }
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            fmt_combination(self.terms.iter().map(|(g, c)| (c, g.to_string())))
        )
    }
}

/// Bracket on `k`:
///
/// - `[Hc^a_m, Hc^b_n] = 0`
/// - `[Hc^a_m, Ec^b_n] = (a|b)/2 (Ec^b_{n+m} - Ec^b_{n-m})`
/// - `[Ec^a_m, Ec^b_n] = -2 delta_{a,-b} Hc^a_{m+n} - 2 delta_{a,b} Hc^a_{m-n}
///   + eps(a,b) (Ec^{a+b}_{m+n} + Ec^{a-b}_{m-n})`
///
/// with `Ec^g = 0` whenever `g` is not a root.
pub fn bracket_compact(rs: &RootSystem, x: &KElement, y: &KElement) -> KElement {
    let mut out = KElement::zero();
    for (g1, c1) in &x.terms {
        for (g2, c2) in &y.terms {
            let c = c1 * c2;
            bracket_gens(rs, g1, g2, &c, &mut out);
        }
    }
    out
}

fn bracket_gens(rs: &RootSystem, g1: &KGen, g2: &KGen, c: &Rational, out: &mut KElement) {
    match (g1, g2) {
        (KGen::Hc { .. }, KGen::Hc { .. }) => {}
        (KGen::Hc { dir, mode }, KGen::Ec { root, mode: n }) => {
            let m = *mode as i64;
            let p = int(rs.inner(&rs.simple_root(*dir), root)) * frac(1, 2) * c;
            out.add_ec(root, n + m, &p);
            out.add_ec(root, n - m, &-p);
        }
        (KGen::Ec { .. }, KGen::Hc { .. }) => bracket_gens(rs, g2, g1, &-c.clone(), out),
        (KGen::Ec { root: a, mode: m }, KGen::Ec { root: b, mode: n }) => {
            let minus_two = c * int(-2);
            if a == &-b {
                out.add_hc_vector(a, m + n, &minus_two);
            }
            if a == b {
                out.add_hc_vector(a, m - n, &minus_two);
            }
            let eps = c * int(rs.cocycle(a, b));
            let sum = a + b;
            if rs.is_root(&sum) {
                out.add_ec(&sum, m + n, &eps);
            }
            let diff = a - b;
            if rs.is_root(&diff) {
                out.add_ec(&diff, m - n, &eps);
            }
        }
    }
}

/// Chevalley involution on a generator: `H^a_n -> -H^a_{-n}`,
/// `E^a_n -> E^{-a}_{-n}`, `K -> -K`, `d -> -d`.
pub fn chevalley_tau(g: &AffineGenerator) -> (Rational, AffineGenerator) {
    match g {
        AffineGenerator::E { root, mode } => (
            int(1),
            AffineGenerator::E {
                root: -root,
                mode: -mode,
            },
        ),
        AffineGenerator::H { direction, mode } => (
            int(-1),
            AffineGenerator::H {
                direction: direction.clone(),
                mode: -mode,
            },
        ),
        AffineGenerator::K => (int(-1), AffineGenerator::K),
        AffineGenerator::D => (int(-1), AffineGenerator::D),
    }
}

/// Chevalley involution extended linearly to affine elements.
pub fn chevalley_tau_element(x: &AffineElement) -> AffineElement {
    let mut out = AffineElement::zero();
    for (m, xm) in &x.loops {
        let mut y = FiniteElement::zero(xm.cartan.len());
        y.cartan = xm.cartan.iter().map(|c| -c.clone()).collect();
        for (a, c) in &xm.roots {
            y.roots.insert(-a, c.clone());
        }
        if !y.is_zero() {
            out.loops.insert(-m, y);
        }
    }
    out.central = -x.central.clone();
    out.derivation = -x.derivation.clone();
    out
}

/// Variable `Hc^{alpha_dir}_mode` of the commutative algebra `U(<Hc>)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HcVar {
    pub dir: usize,
    pub mode: u32,
}

impl Weighted for HcVar {
    fn weight(&self) -> u32 {
        self.mode
    }
}

impl fmt::Display for HcVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hc{}[{}]", self.dir + 1, self.mode)
    }
}

/// Polynomial in the commuting `Hc` generators.
pub type HeisenbergPoly = Poly<HcVar>;

/// `Hc^gamma_mode` as a linear polynomial.
pub fn hc_linear(gamma: &[Rational], mode: u32) -> HeisenbergPoly {
    let mut p = HeisenbergPoly::zero();
    for (i, c) in gamma.iter().enumerate() {
        p.add_term(Monomial::var(HcVar { dir: i, mode }), c.clone());
    }
    p
}

fn lattice_to_rational(v: &LatticeVector) -> Vec<Rational> {
    v.coords().iter().map(|&c| int(c)).collect()
}

/// Normal ordering `Ec^alpha_m U = sum_n U_n Ec^alpha_n`, returned as the map `n -> U_n`.
pub fn commute_through_heisenberg(
    rs: &RootSystem,
    alpha: &LatticeVector,
    m: i64,
    u: &HeisenbergPoly,
) -> BTreeMap<i64, HeisenbergPoly> {
    let pairings: Vec<Rational> = (0..rs.rank())
        .map(|i| int(rs.inner(&rs.simple_root(i), alpha)) * frac(1, 2))
        .collect();
    let mut out: BTreeMap<i64, HeisenbergPoly> = BTreeMap::new();
    for (mono, c) in u.terms() {
        let vars = mono.flatten();
        let mut memo = HashMap::new();
        for (n, p) in normal_order_monomial(&vars, 0, m, &pairings, &mut memo) {
            out.entry(n).or_default().add_scaled(&p, c);
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

fn normal_order_monomial(
    vars: &[HcVar],
    start: usize,
    m: i64,
    pairings: &[Rational],
    memo: &mut HashMap<(usize, i64), BTreeMap<i64, HeisenbergPoly>>,
) -> BTreeMap<i64, HeisenbergPoly> {
    if start == vars.len() {
        return BTreeMap::from([(m, HeisenbergPoly::one())]);
    }
    if let Some(hit) = memo.get(&(start, m)) {
        return hit.clone();
    }
    let h = vars[start];
    let mut out: BTreeMap<i64, HeisenbergPoly> = BTreeMap::new();
    // Ec_m h R = h (Ec_m R) - c (Ec_{m+n} R - Ec_{m-n} R),  c = (alpha_h|alpha)/2
    let hvar = HeisenbergPoly::var(h);
    for (n, p) in normal_order_monomial(vars, start + 1, m, pairings, memo) {
        out.entry(n)
            .or_default()
            .add_scaled(&(&hvar * &p), &Rational::one());
    }
    let c = &pairings[h.dir];
    if !c.is_zero() {
        let shift = h.mode as i64;
        for (sign, mm) in [(-c.clone(), m + shift), (c.clone(), m - shift)] {
            for (n, p) in normal_order_monomial(vars, start + 1, mm, pairings, memo) {
                out.entry(n).or_default().add_scaled(&p, &sign);
            }
        }
    }
    out.retain(|_, p| !p.is_zero());
    memo.insert((start, m), out.clone());
    out
}

/// H-Schur polynomials in a single abstract direction, `Hc_l` indexed by `l`:
/// `S^H_n = sum_{m=0}^{floor(n/2)} [x^{n-2m}] exp(-sum_l (2/l) Hc_l x^l)`.
pub fn h_schur_generic(n: u32) -> Poly<u32> {
    // E_j = [x^j] exp(...) satisfies j E_j = sum_{l=1}^j (-2 Hc_l) E_{j-l}.
    let mut e: Vec<Poly<u32>> = vec![Poly::one()];
    for j in 1..=n as usize {
        let mut acc = Poly::zero();
        for l in 1..=j {
            acc.add_scaled(&(&Poly::var(l as u32) * &e[j - l]), &int(-2));
        }
        e.push(acc.scale(&frac(1, j as i64)));
    }
    let mut out = Poly::zero();
    let mut k = n as i64;
    while k >= 0 {
        out = &out + &e[k as usize];
        k -= 2;
    }
    out
}

/// `S^H_n` in the direction `alpha`; zero for negative `n`.
pub fn h_schur(n: i64, alpha: &LatticeVector) -> HeisenbergPoly {
    if n < 0 {
        return HeisenbergPoly::zero();
    }
    let dir = lattice_to_rational(alpha);
    h_schur_generic(n as u32).compose(|l| hc_linear(&dir, *l), |_| true)
}

impl BasicRep {
    /// `Hc^{alpha_dir}_mode` on a basic state.
    pub fn act_hc(&self, dir: usize, mode: i64, v: &BasicElement) -> BasicElement {
        let a = self.root_system().simple_root(dir);
        let mut out = self.act_h(&a, mode, v);
        out.add_scaled(&self.act_h(&a, -mode, v), &int(-1));
        out.scale(&frac(1, 2))
    }

    pub fn act_kgen(&self, g: &KGen, v: &BasicElement) -> BasicElement {
        match g {
            KGen::Ec { root, mode } => self
                .act_e(root, *mode, v)
                .add(&self.act_e(&-root, -mode, v)),
            KGen::Hc { dir, mode } => self.act_hc(*dir, *mode as i64, v),
        }
    }

    pub fn act_compact(&self, x: &KElement, v: &BasicElement) -> BasicElement {
        let mut out = self.zero();
        for (g, c) in x.terms() {
            out.add_scaled(&self.act_kgen(g, v), c);
        }
        out
    }

    pub fn act_heisenberg(&self, u: &HeisenbergPoly, v: &BasicElement) -> BasicElement {
        let mut out = self.zero();
        for (m, c) in u.terms() {
            let mut w = v.clone();
            for h in m.flatten() {
                w = self.act_hc(h.dir, h.mode as i64, &w);
            }
            out.add_scaled(&w, c);
        }
        out
    }
}

/// `U (e^gamma (x) 1)` restricted to its polynomial part; independent of `gamma`.
fn heisenberg_on_vacuum(rs: &RootSystem, m: &Monomial<HcVar>) -> IndexedPoly {
    let mut f = IndexedPoly::one();
    for h in m.flatten() {
        let a = rs.simple_root(h.dir);
        let up = heisenberg_mode(rs, &a, h.mode as i64, &f);
        let down = heisenberg_mode(rs, &a, -(h.mode as i64), &f);
        f = (&up - &down).scale(&frac(1, 2));
    }
    f
}

/// All monomials in `vars` of total degree at most `max_degree`.
fn monomials_up_to<V: Ord + Clone>(vars: &[V], max_degree: u32) -> Vec<Monomial<V>> {
    let mut out = vec![Monomial::one()];
    let mut frontier = vec![(Monomial::one(), 0usize)];
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for (m, start) in &frontier {
            for (i, v) in vars.iter().enumerate().skip(*start) {
                let mm = m.mul(&Monomial::var(v.clone()));
                out.push(mm.clone());
                next.push((mm, i));
            }
        }
        frontier = next;
    }
    out
}

/// `F^H_f` by solving the finite linear system `U (e^gamma (x) 1) = e^gamma (x) f`
/// over the monomials of `U(<Hc>)` in the modes occurring in `f`.
pub fn generating_element_oracle(rs: &RootSystem, f: &IndexedPoly) -> Result<HeisenbergPoly> {
    if f.is_zero() {
        return Ok(HeisenbergPoly::zero());
    }
    let hc_vars: Vec<HcVar> = f
        .variables()
        .iter()
        .map(|v| HcVar {
            dir: v.dir,
            mode: v.depth,
        })
        .collect();
    let columns = monomials_up_to(&hc_vars, f.degree());
    let images: Vec<IndexedPoly> = columns
        .iter()
        .map(|m| heisenberg_on_vacuum(rs, m))
        .collect();
    let mut rows: Vec<Monomial<HVar>> = images
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect();
    rows.extend(f.terms().map(|(m, _)| m.clone()));
    rows.sort();
    rows.dedup();
    let matrix: linalg::Matrix = rows
        .iter()
        .map(|r| images.iter().map(|p| p.coeff(r)).collect())
        .collect();
    let rhs: Vec<Rational> = rows.iter().map(|r| f.coeff(r)).collect();
    let x =
        linalg::solve(&matrix, &rhs).ok_or_else(|| Error::Singular("generating element".into()))?;
    let mut out = HeisenbergPoly::zero();
    for (m, c) in columns.into_iter().zip(x) {
        out.add_term(m, c);
    }
    Ok(out)
}

/// Coefficient of `(Hc^v_l)^k` in `F^H_{(v_{-l})^n}` for a unit vector `v`:
/// `(-2)^k n! / (k! m!) (l/2)^m` with `m = (n-k)/2`, and zero when `n-k` is odd.
pub fn closed_form_coefficient(l: u32, n: u32, k: u32) -> Rational {
    closed_form_coefficient_scaled(l, n, k, &int(1))
}

/// The same coefficient for an orthogonal direction of norm `norm`:
/// `(-2)^k n! / (k! m!) (l norm / 2)^m`.
pub fn closed_form_coefficient_scaled(l: u32, n: u32, k: u32, norm: &Rational) -> Rational {
    if k > n || (n - k) % 2 == 1 {
        return Rational::zero();
    }
    let m = (n - k) / 2;
    let base = int(l as i64) * norm * frac(1, 2);
    let mut c = Rational::from_integer(factorial(n as u64))
        / Rational::from_integer(factorial(k as u64) * factorial(m as u64));
    c *= int(-2).pow(k as i32);
    c * base.pow(m as i32)
}

/// The closed form in its double-factorial presentation
/// `(-1)^n (2l(n-k-1))!_(4l) (2n)!_(2) / (k! (2n-2k)!_(2))`.
///
/// It reproduces [`closed_form_coefficient`] only up to the factor
/// `2^{(n-k)/2}`: for `F_{(v_{-1})^2} = 1 + 4 Hc_1^2` it yields the constant 2
/// instead of 1. The linear-solve oracle decides in favour of
/// [`closed_form_coefficient`].
pub fn uncorrected_closed_form_coefficient(l: u32, n: u32, k: u32) -> Rational {
    if k > n || (n - k) % 2 == 1 {
        return Rational::zero();
    }
    let (l, n, k) = (l as i64, n as i64, k as i64);
    let num = multistep_factorial(2 * l * (n - k - 1), 4 * l) * multistep_factorial(2 * n, 2);
    let den = factorial(k as u64) * multistep_factorial(2 * n - 2 * k, 2);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    int(sign) * Rational::new(num, den)
}

/// Rational orthogonal basis of the Cartan subalgebra obtained by Gram-Schmidt
/// on the simple roots. Returns `(basis, norms, transition)` where
/// `alpha_i = sum_j transition[i][j] u_j`.
pub fn orthogonal_basis(
    rs: &RootSystem,
) -> (Vec<Vec<Rational>>, Vec<Rational>, Vec<Vec<Rational>>) {
    let r = rs.rank();
    let gram: Vec<Vec<Rational>> = rs
        .cartan_matrix()
        .iter()
        .map(|row| row.iter().map(|&x| int(x)).collect())
        .collect();
    let inner = |a: &[Rational], b: &[Rational]| -> Rational {
        let mut s = Rational::zero();
        for i in 0..r {
            for j in 0..r {
                s += &a[i] * &gram[i][j] * &b[j];
            }
        }
        s
    };
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    let mut norms = Vec::new();
    let mut transition = vec![vec![Rational::zero(); r]; r];
    for i in 0..r {
        let alpha: Vec<Rational> = (0..r)
            .map(|j| if i == j { int(1) } else { int(0) })
            .collect();
        let mut u = alpha.clone();
        for (j, b) in basis.iter().enumerate() {
            let mu = inner(&alpha, b) / &norms[j];
            for (x, y) in u.iter_mut().zip(b) {
                *x -= &mu * y;
            }
            transition[i][j] = mu;
        }
        transition[i][i] = int(1);
        norms.push(inner(&u, &u));
        basis.push(u);
    }
    (basis, norms, transition)
}

/// `F^H_f` from the closed form: rewrite `f` in an orthogonal basis, factor
/// over (direction, mode) pairs and expand each factor with
/// [`closed_form_coefficient_scaled`]. With `max_degree` set, monomials of
/// higher degree in `Hc` are discarded as they are produced.
pub fn generating_element(
    rs: &RootSystem,
    f: &IndexedPoly,
    max_degree: Option<u32>,
) -> HeisenbergPoly {
    let (basis, norms, transition) = orthogonal_basis(rs);
    let r = rs.rank();
    let keep = |m: &Monomial<HcVar>| max_degree.is_none_or(|d| m.degree() <= d);
    // h^i_{-l} = sum_j transition[i][j] y^j_{-l}
    let orth = f.compose(
        |v| {
            let mut p = Poly::zero();
            for j in 0..r {
                if !transition[v.dir][j].is_zero() {
                    p.add_term(
                        Monomial::var(HVar::new(j, v.depth)),
                        transition[v.dir][j].clone(),
                    );
                }
            }
            p
        },
        |_| true,
    );
    let mut factor_memo: HashMap<(usize, u32, u32), HeisenbergPoly> = HashMap::new();
    let mut out = HeisenbergPoly::zero();
    for (m, c) in orth.terms() {
        let mut acc = HeisenbergPoly::constant(c.clone());
        for (v, e) in m.factors() {
            let factor = factor_memo.entry((v.dir, v.depth, *e)).or_insert_with(|| {
                let hc = hc_linear(&basis[v.dir], v.depth);
                let mut p = HeisenbergPoly::zero();
                let mut power = HeisenbergPoly::one();
                for k in 0..=*e {
                    if k > 0 {
                        power = power.mul_filtered(&hc, keep);
                    }
                    let coeff = closed_form_coefficient_scaled(v.depth, *e, k, &norms[v.dir]);
                    p.add_scaled(&power, &coeff);
                }
                p
            });
            acc = acc.mul_filtered(factor, keep);
            if acc.is_zero() {
                break;
            }
        }
        out = &out + &acc;
    }
    out
}
