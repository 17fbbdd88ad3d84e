//! The basic representation realised on `C[Q] (x) S(h^-)` through vertex
//! operators.
//!
//! A state `e^gamma (x) f` has loop level `(gamma|gamma)/2 + deg_w f`, the
//! eigenvalue of the derivation `d`. Every action drops terms whose level
//! exceeds the context cutoff and counts them in a diagnostics counter.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use num_traits::Zero;

use crate::algebra::AffineElement;
use crate::arith::{binomial, int, Rational};
use crate::error::{Error, Result};
use crate::lattice::{LatticeVector, RootSystem};
use crate::poly::{self, colored_partition_count, HVar, IndexedPoly, Monomial};

/// Cutoff value meaning "never truncate".
pub const NO_CUTOFF: i64 = i64::MAX;

/// Finite combination of states `e^gamma (x) f_gamma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicElement {
    cutoff: i64,
    components: BTreeMap<LatticeVector, IndexedPoly>,
}

impl BasicElement {
    pub fn zero(cutoff: i64) -> Self {
        BasicElement {
            cutoff,
            components: BTreeMap::new(),
        }
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&LatticeVector, &IndexedPoly)> {
        self.components.iter()
    }

    pub fn component(&self, gamma: &LatticeVector) -> IndexedPoly {
        self.components.get(gamma).cloned().unwrap_or_default()
    }

    /// Number of `(gamma, monomial)` terms.
    pub fn term_count(&self) -> usize {
        self.components.values().map(IndexedPoly::len).sum()
    }

    pub fn add_component(&mut self, gamma: LatticeVector, f: &IndexedPoly, c: &Rational) {
        if f.is_zero() || c.is_zero() {
            return;
        }
        let entry = self.components.entry(gamma.clone()).or_default();
        entry.add_scaled(f, c);
        if entry.is_zero() {
            self.components.remove(&gamma);
        }
    }

    pub fn add_scaled(&mut self, other: &BasicElement, c: &Rational) {
        for (g, f) in &other.components {
            self.add_component(g.clone(), f, c);
        }
    }

    pub fn add(&self, other: &BasicElement) -> BasicElement {
        let mut out = self.clone();
        out.add_scaled(other, &int(1));
        out
    }

    pub fn sub(&self, other: &BasicElement) -> BasicElement {
        let mut out = self.clone();
        out.add_scaled(other, &int(-1));
        out
    }

    pub fn scale(&self, c: &Rational) -> BasicElement {
        let mut out = BasicElement::zero(self.cutoff);
        out.add_scaled(self, c);
        out
    }

    /// Flat list of `(gamma, monomial, coefficient)` in canonical order.
    pub fn terms(&self) -> Vec<(LatticeVector, Monomial<HVar>, Rational)> {
        self.components
            .iter()
            .flat_map(|(g, f)| {
                f.terms()
                    .map(move |(m, c)| (g.clone(), m.clone(), c.clone()))
            })
            .collect()
    }
}

impl fmt::Display for BasicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(g, p)| format!("e{g} (x) ({p})"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A single generator of the affine algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AffineGenerator {
    /// `E^root_mode`.
    E {
        root: LatticeVector,
        mode: i64,
    },
    /// `H^direction_mode`, linear in the lattice vector `direction`.
    H {
        direction: LatticeVector,
        mode: i64,
    },
    K,
    D,
}

/// Evaluation context: root system, loop-level cutoff, diagnostics and memo tables.
pub struct BasicRep {
    rs: RootSystem,
    cutoff: i64,
    truncated: AtomicU64,
    schur_memo: Mutex<HashMap<(LatticeVector, i64), IndexedPoly>>,
}

impl BasicRep {
    pub fn new(rs: &RootSystem, cutoff: i64) -> Self {
        BasicRep {
            rs: rs.clone(),
            cutoff,
            truncated: AtomicU64::new(0),
            schur_memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    /// Number of terms discarded by the cutoff so far.
    pub fn truncated_terms(&self) -> u64 {
        self.truncated.load(Ordering::Relaxed)
    }

    /// Loop level of `e^gamma (x) m`.
    pub fn level(&self, gamma: &LatticeVector, m: &Monomial<HVar>) -> i64 {
        self.rs.norm(gamma) / 2 + m.weight() as i64
    }

    pub fn zero(&self) -> BasicElement {
        BasicElement::zero(self.cutoff)
    }

    pub fn maximal_state(&self, gamma: &LatticeVector) -> Result<BasicElement> {
        self.state(gamma, &IndexedPoly::one())
    }

    /// `e^gamma (x) f`; fails if any term lies above the cutoff.
    pub fn state(&self, gamma: &LatticeVector, f: &IndexedPoly) -> Result<BasicElement> {
        self.rs.check_vector(gamma)?;
        for (m, _) in f.terms() {
            if let Some((v, _)) = m.factors().iter().find(|(v, _)| v.dir >= self.rs.rank()) {
                return Err(Error::DirectionOutOfRange {
                    index: v.dir + 1,
                    rank: self.rs.rank(),
                });
            }
            let level = self.level(gamma, m);
            if level > self.cutoff {
                return Err(Error::AboveCutoff {
                    level,
                    cutoff: self.cutoff,
                });
            }
        }
        let mut out = self.zero();
        out.add_component(gamma.clone(), f, &int(1));
        Ok(out)
    }

    fn absorb(
        &self,
        out: &mut BasicElement,
        gamma: LatticeVector,
        mut f: IndexedPoly,
        c: &Rational,
    ) {
        if self.cutoff != NO_CUTOFF {
            let base = self.rs.norm(&gamma) / 2;
            let budget = self.cutoff - base;
            let before = f.len();
            if budget < 0 {
                f = IndexedPoly::zero();
            } else {
                f.truncate_weight(budget as u32);
            }
            let dropped = before - f.len();
            if dropped > 0 {
                self.truncated.fetch_add(dropped as u64, Ordering::Relaxed);
            }
        }
        out.add_component(gamma, &f, c);
    }

    /// `S_n({gamma})`, memoised.
    pub fn schur(&self, n: i64, gamma: &LatticeVector) -> IndexedPoly {
        if n < 0 {
            return IndexedPoly::zero();
        }
        let key = (gamma.clone(), n);
        if let Some(p) = self.schur_memo.lock().unwrap().get(&key) {
            return p.clone();
        }
        let p = poly::schur(n, gamma);
        self.schur_memo.lock().unwrap().insert(key, p.clone());
        p
    }

    /// `E^alpha_n`, the `z^{-n-1}` coefficient of the vertex operator.
    ///
    /// The annihilation half `exp(-sum_k z^{-k} alpha_k / k)` is a translation
    /// `h^j_{-k} -> h^j_{-k} - (alpha|alpha_j) z^{-k}`, so it is applied by
    /// substitution and the result is collected by powers of `z^{-1}`.
    pub fn act_e(&self, alpha: &LatticeVector, n: i64, v: &BasicElement) -> BasicElement {
        let mut out = self.zero();
        let shifts: Vec<i64> = (0..self.rs.rank())
            .map(|j| self.rs.inner(alpha, &self.rs.simple_root(j)))
            .collect();
        for (gamma, f) in &v.components {
            let pairing = self.rs.inner(alpha, gamma);
            let sign = int(self.rs.cocycle(alpha, gamma));
            let target = gamma + alpha;
            let translated = translate(f, &shifts);
            let mut acc = IndexedPoly::zero();
            for (q, g) in translated {
                let p = q as i64 - n - 1 - pairing;
                if p < 0 {
                    continue;
                }
                let s = self.schur(p, alpha);
                acc = &acc + &(&s * &g);
            }
            self.absorb(&mut out, target, acc, &sign);
        }
        out
    }

    /// `H^direction_n`: multiplication for `n < 0`, derivation for `n > 0`,
    /// and the pairing with the lattice part for `n = 0`.
    pub fn act_h(&self, direction: &LatticeVector, n: i64, v: &BasicElement) -> BasicElement {
        let mut out = self.zero();
        for (gamma, f) in &v.components {
            if n == 0 {
                let c = int(self.rs.inner(direction, gamma));
                out.add_component(gamma.clone(), f, &c);
            } else {
                let g = poly::heisenberg_mode(&self.rs, direction, n, f);
                self.absorb(&mut out, gamma.clone(), g, &int(1));
            }
        }
        out
    }

    pub fn act_k(&self, v: &BasicElement) -> BasicElement {
        v.clone()
    }

    /// The derivation `d`, diagonal with eigenvalue the loop level.
    pub fn act_d(&self, v: &BasicElement) -> BasicElement {
        let mut out = self.zero();
        for (gamma, f) in &v.components {
            let mut g = IndexedPoly::zero();
            for (m, c) in f.terms() {
                g.add_term(m.clone(), c * int(self.level(gamma, m)));
            }
            out.add_component(gamma.clone(), &g, &int(1));
        }
        out
    }

    pub fn act(&self, g: &AffineGenerator, v: &BasicElement) -> BasicElement {
        match g {
            AffineGenerator::E { root, mode } => self.act_e(root, *mode, v),
            AffineGenerator::H { direction, mode } => self.act_h(direction, *mode, v),
            AffineGenerator::K => self.act_k(v),
            AffineGenerator::D => self.act_d(v),
        }
    }

    /// Action of a general affine element.
    pub fn act_affine(&self, x: &AffineElement, v: &BasicElement) -> BasicElement {
        let mut out = self.zero();
        for (m, xm) in &x.loops {
            for (i, c) in xm.cartan.iter().enumerate() {
                if !c.is_zero() {
                    out.add_scaled(&self.act_h(&self.rs.simple_root(i), *m, v), c);
                }
            }
            for (root, c) in &xm.roots {
                out.add_scaled(&self.act_e(root, *m, v), c);
            }
        }
        out.add_scaled(v, &x.central);
        if !x.derivation.is_zero() {
            out.add_scaled(&self.act_d(v), &x.derivation);
        }
        out
    }

    /// Dimension of the level-`level` subspace, counted from lattice shells
    /// and coloured partitions.
    pub fn graded_dimension(&self, level: u32) -> u64 {
        self.rs
            .enumerate_lattice_vectors(2 * level as i64)
            .iter()
            .map(|g| colored_partition_count(self.rs.rank(), level - (self.rs.norm(g) / 2) as u32))
            .sum()
    }

    /// Basis states `e^gamma (x) m` of level `<= max_level`, ordered by level,
    /// lattice vector and monomial.
    pub fn basis_states(&self, max_level: u32) -> Vec<(LatticeVector, Monomial<HVar>)> {
        let mut out = Vec::new();
        for level in 0..=max_level {
            for g in self.rs.enumerate_lattice_vectors(2 * level as i64) {
                let base = (self.rs.norm(&g) / 2) as u32;
                for m in poly::monomials_of_weight(self.rs.rank(), level - base) {
                    out.push((g.clone(), m));
                }
            }
        }
        out
    }
}

/// Substitute `h^j_{-k} -> h^j_{-k} - shifts[j] w^k` and collect by powers of `w`.
fn translate(f: &IndexedPoly, shifts: &[i64]) -> BTreeMap<u32, IndexedPoly> {
    let mut out: BTreeMap<u32, IndexedPoly> = BTreeMap::new();
    for (m, c) in f.terms() {
        let mut series: BTreeMap<u32, IndexedPoly> = BTreeMap::new();
        series.insert(0, IndexedPoly::constant(c.clone()));
        for (v, e) in m.factors() {
            let shift = shifts[v.dir];
            let mut next: BTreeMap<u32, IndexedPoly> = BTreeMap::new();
            for t in 0..=*e {
                if t > 0 && shift == 0 {
                    break;
                }
                let coeff = Rational::from_integer(binomial(*e as i64, t as i64))
                    * int(-shift).pow(t as i32);
                let factor = IndexedPoly::term(Monomial::from_factors([(*v, e - t)]), coeff);
                let wpow = v.depth * t;
                for (p, g) in &series {
                    let entry = next.entry(p + wpow).or_default();
                    *entry = &*entry + &(g * &factor);
                }
            }
            series = next;
        }
        for (p, g) in series {
            let entry = out.entry(p).or_default();
            *entry = &*entry + &g;
        }
    }
    out.retain(|_, g| !g.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bracket_affine, finite_basis};
    use crate::arith::frac;
    use crate::linalg;

    fn a1() -> RootSystem {
        RootSystem::parse("A1").unwrap()
    }

    #[test]
    fn e_on_maximal_states_produces_schur() {
        let rs = a1();
        let rep = BasicRep::new(&rs, NO_CUTOFF);
        let alpha = rs.simple_root(0);
        let v = rep.maximal_state(&LatticeVector::zero(1)).unwrap();
        let w = rep.act_e(&alpha, -3, &v);
        // S_2({alpha}) = (alpha_{-2} + alpha_{-1}^2) / 2 at lattice point alpha, sign eps(alpha, 0) = 1.
        let s2 = w.component(&alpha);
        assert_eq!(s2.coeff(&Monomial::var(HVar::new(0, 2))), frac(1, 2));
        assert_eq!(
            s2.coeff(&Monomial::from_factors([(HVar::new(0, 1), 2)])),
            frac(1, 2)
        );
        assert_eq!(w.term_count(), 2);
    }

    #[test]
    fn d_matches_sugawara_quadratic_form() {
        // d = 1/2 sum H^i_0 G^{-1}_{ij} H^j_0 + sum_n sum H^i_{-n} G^{-1}_{ij} H^j_n
        for name in ["A1", "A2"] {
            let rs = RootSystem::parse(name).unwrap();
            let rep = BasicRep::new(&rs, NO_CUTOFF);
            let g: linalg::Matrix = rs
                .cartan_matrix()
                .iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect();
            let ginv = linalg::inverse(&g).unwrap();
            for (gamma, m) in rep.basis_states(3) {
                let v = rep.state(&gamma, &IndexedPoly::term(m, int(1))).unwrap();
                let mut q = rep.zero();
                for i in 0..rs.rank() {
                    for j in 0..rs.rank() {
                        let ai = rs.simple_root(i);
                        let aj = rs.simple_root(j);
                        let zero_mode = rep.act_h(&ai, 0, &rep.act_h(&aj, 0, &v));
                        q.add_scaled(&zero_mode, &(&ginv[i][j] * frac(1, 2)));
                        for n in 1..=3 {
                            let t = rep.act_h(&ai, -n, &rep.act_h(&aj, n, &v));
                            q.add_scaled(&t, &ginv[i][j]);
                        }
                    }
                }
                assert_eq!(q, rep.act_d(&v));
            }
        }
    }

    #[test]
    fn graded_dimensions_e8() {
        let rs = RootSystem::parse("E8").unwrap();
        let rep = BasicRep::new(&rs, 2);
        assert_eq!(rep.graded_dimension(0), 1);
        assert_eq!(rep.graded_dimension(1), 248);
        assert_eq!(rep.graded_dimension(2), 4124);
    }

    #[test]
    fn affine_bracket_fidelity_a1() {
        let rs = a1();
        let rep = BasicRep::new(&rs, NO_CUTOFF);
        let mut gens = Vec::new();
        for b in finite_basis(&rs) {
            for m in -2..=2 {
                gens.push(AffineElement::loop_element(b.clone(), m));
            }
        }
        gens.push(AffineElement::derivation());
        let states = rep.basis_states(2);
        for (gamma, m) in states.iter().take(6) {
            let v = rep
                .state(gamma, &IndexedPoly::term(m.clone(), int(1)))
                .unwrap();
            for x in &gens {
                for y in &gens {
                    let lhs = rep.act_affine(&bracket_affine(&rs, x, y), &v);
                    let rhs = rep
                        .act_affine(x, &rep.act_affine(y, &v))
                        .sub(&rep.act_affine(y, &rep.act_affine(x, &v)));
                    assert_eq!(lhs, rhs, "x={x:?} y={y:?} v={v}");
                }
            }
        }
        assert_eq!(rep.truncated_terms(), 0);
    }

    #[test]
    fn truncation_is_counted() {
        let rs = a1();
        let rep = BasicRep::new(&rs, 1);
        let v = rep.maximal_state(&LatticeVector::zero(1)).unwrap();
        let w = rep.act_h(&rs.simple_root(0), -2, &v);
        assert!(w.is_zero());
        assert_eq!(rep.truncated_terms(), 1);
        assert!(rep
            .state(&LatticeVector(vec![2]), &IndexedPoly::one())
            .is_err());
    }
}
