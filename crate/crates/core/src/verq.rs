//! The module `Ver_Q(N)`: the truncated commutative algebra `U(<Q>)^N`
//! tensored with the group algebra of the root lattice, modulo
//! `omega_alpha^2 e_beta ~ e_{beta + 2 alpha}`.
//!
//! Every class has a unique representative on the `2^r` coset representatives
//! with coordinates in `{0, 1}`. The compact algebra acts through `rho^N`: on
//! `e_gamma` by the extended Q-Schur rule
//! `Ec^alpha_n e_gamma = eps(alpha,gamma) S-bar_alpha(-n-(alpha|gamma)-1) e_{alpha+gamma}`,
//! and on dressed states `u e_gamma` by normal ordering `Ec` through a
//! preimage of `u` in `U(<Hc>)`.
//!
//! `G_N(e^gamma (x) f) = rho^N(F^H_f) e_gamma` projects the basic
//! representation onto `Ver_Q(N)`; its kernels form the filtration `W_N`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use serde::Serialize;

use crate::arith::{int, Rational};
use crate::basicrep::{BasicElement, BasicRep};
use crate::compact::{
    commute_through_heisenberg, generating_element, HcVar, HeisenbergPoly, KElement, KGen,
};
use crate::error::{Error, Result};
use crate::lattice::{CartanType, LatticeVector, RootSystem};
use crate::linalg;
use crate::parabolic::{
    omega_power, rho_coefficient, rho_hc_linear, rho_heisenberg, ExtendedQSchur, ParGen,
    ParabolicElement, QVar, UQElement,
};
use crate::poly::{IndexedPoly, Monomial, Poly};

/// Element of `Ver_Q(N)` in canonical form: coset representative -> coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerQElement {
    cap: u32,
    terms: BTreeMap<LatticeVector, UQElement>,
}

impl VerQElement {
    pub fn zero(cap: u32) -> Self {
        VerQElement {
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticeVector, &UQElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, coset: &LatticeVector) -> UQElement {
        self.terms
            .get(coset)
            .cloned()
            .unwrap_or_else(|| UQElement::zero(self.cap))
    }

    fn add_canonical(&mut self, coset: LatticeVector, u: &UQElement) {
        if u.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(coset.clone())
            .or_insert_with(|| UQElement::zero(self.cap));
        *entry = entry.add(u);
        if entry.is_zero() {
            self.terms.remove(&coset);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        for (g, u) in &other.terms {
            self.add_canonical(g.clone(), &u.scale(c));
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
}

impl fmt::Display for VerQElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(g, u)| format!("({u})*e{g}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A generator acting on `Ver_Q(N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerQGenerator {
    Compact(KGen),
    Parabolic(ParGen),
}

/// `Ver_Q(N)` for a fixed root system and level.
pub struct VerQModule {
    rs: RootSystem,
    cap: u32,
    cosets: Vec<LatticeVector>,
    monomials: Vec<Monomial<QVar>>,
    q_preimages: BTreeMap<QVar, HeisenbergPoly>,
    schur_memo: Mutex<HashMap<(LatticeVector, u8), ExtendedQSchur>>,
    p_memo: Mutex<HashMap<(LatticeVector, u32, u8), KElement>>,
}

impl VerQModule {
    pub fn build(rs: &RootSystem, cap: u32) -> Self {
        let r = rs.rank();
        let cosets: Vec<LatticeVector> = (0..1u64 << r)
            .map(|bits| LatticeVector((0..r).map(|i| ((bits >> (r - 1 - i)) & 1) as i64).collect()))
            .collect();
        let vars = q_variables(r, cap);
        let mut monomials = monomials_of_level_at_most(&vars, cap);
        monomials.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.cmp(b)));
        let q_preimages = vars.iter().map(|v| (*v, q_preimage(cap, *v))).collect();
        VerQModule {
            rs: rs.clone(),
            cap,
            cosets,
            monomials,
            q_preimages,
            schur_memo: Mutex::new(HashMap::new()),
            p_memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn level(&self) -> u32 {
        self.cap
    }

    pub fn dim(&self) -> usize {
        self.cosets.len() * self.monomials.len()
    }

    /// Dimension of each parabolic level `0..=N`.
    pub fn graded_dims(&self) -> Vec<u64> {
        let mut dims = vec![0u64; self.cap as usize + 1];
        for m in &self.monomials {
            dims[m.weight() as usize] += self.cosets.len() as u64;
        }
        dims
    }

    pub fn coset_representatives(&self) -> &[LatticeVector] {
        &self.cosets
    }

    pub fn zero(&self) -> VerQElement {
        VerQElement::zero(self.cap)
    }

    /// The class of `u e_gamma`: `gamma = c + 2k` with `c` in `{0,1}^r`, so
    /// `u e_gamma = u omega_k^2 e_c` where `omega_k^2 = prod_i (omega^2_{alpha_i})^{k_i}`.
    pub fn canonicalize(&self, gamma: &LatticeVector, u: &UQElement) -> VerQElement {
        let (coset, shift) = split_coset(gamma);
        let mut out = self.zero();
        let factor = if shift.is_zero() {
            UQElement::one(self.cap)
        } else {
            omega_power(&shift, self.cap, 2)
        };
        out.add_canonical(coset, &u.mul(&factor));
        out
    }

    /// Canonicalize by removing one simple-root direction at a time, in the
    /// given order. Agrees with [`Self::canonicalize`] for every order.
    pub fn canonicalize_in_order(
        &self,
        gamma: &LatticeVector,
        u: &UQElement,
        order: &[usize],
    ) -> VerQElement {
        let (coset, shift) = split_coset(gamma);
        let mut acc = u.clone();
        for &i in order {
            let k = shift.coords()[i];
            if k != 0 {
                acc = acc.mul(&omega_power(&self.rs.simple_root(i), self.cap, 2 * k));
            }
        }
        let mut out = self.zero();
        out.add_canonical(coset, &acc);
        out
    }

    pub fn basis_element(&self, gamma: &LatticeVector, m: &Monomial<QVar>) -> VerQElement {
        self.canonicalize(
            gamma,
            &UQElement::new(self.cap, Poly::term(m.clone(), int(1))),
        )
    }

    /// Dense coordinates in the basis (coset-major, then monomials by level).
    pub fn to_dense(&self, v: &VerQElement) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.dim());
        for c in &self.cosets {
            let u = v.coefficient(c);
            for m in &self.monomials {
                out.push(u.poly().coeff(m));
            }
        }
        out
    }

    fn extended_schur(&self, alpha: &LatticeVector, n: i64) -> UQElement {
        let parity = n.rem_euclid(2) as u8;
        let key = (alpha.clone(), parity);
        let mut memo = self.schur_memo.lock().unwrap();
        let ext = memo
            .entry(key)
            .or_insert_with(|| ExtendedQSchur::new(alpha, self.cap, parity));
        ext.eval(n)
    }

    /// Preimage of a `U(<Q>)^N` element in `U(<Hc>)` under `rho^N`.
    pub fn heisenberg_preimage(&self, u: &UQElement) -> HeisenbergPoly {
        u.poly().compose(|v| self.q_preimages[v].clone(), |_| true)
    }

    /// `Ec^alpha_m` on `u e_gamma`, with `gamma` already canonical.
    fn act_ec_on_term(
        &self,
        alpha: &LatticeVector,
        m: i64,
        gamma: &LatticeVector,
        u: &UQElement,
    ) -> VerQElement {
        let pre = self.heisenberg_preimage(u);
        let eps = int(self.rs.cocycle(alpha, gamma));
        let pairing = self.rs.inner(alpha, gamma);
        let target = alpha + gamma;
        let mut out = self.zero();
        for (n, coeff) in commute_through_heisenberg(&self.rs, alpha, m, &pre) {
            let schur = self.extended_schur(alpha, -n - pairing - 1);
            if schur.is_zero() {
                continue;
            }
            let dressed = rho_heisenberg(self.cap, &coeff).mul(&schur).scale(&eps);
            out = out.add(&self.canonicalize(&target, &dressed));
        }
        out
    }

    pub fn act_kgen(&self, g: &KGen, v: &VerQElement) -> VerQElement {
        let mut out = self.zero();
        match g {
            KGen::Ec { root, mode } => {
                for (gamma, u) in v.terms() {
                    out = out.add(&self.act_ec_on_term(root, *mode, gamma, u));
                }
            }
            KGen::Hc { dir, mode } => {
                let h = UQElement::new(self.cap, rho_hc_linear(self.cap, *dir, *mode as i64));
                for (gamma, u) in v.terms() {
                    out.add_canonical(gamma.clone(), &h.mul(u));
                }
            }
        }
        out
    }

    /// Action of an element of `k` through `rho^N`.
    pub fn act_compact(&self, x: &KElement, v: &VerQElement) -> VerQElement {
        let mut out = self.zero();
        for (g, c) in x.terms() {
            out.add_scaled(&self.act_kgen(g, v), c);
        }
        out
    }

    /// `P^alpha_{k,a}` written as a combination of `rho^N(Ec^alpha_n)`.
    pub fn p_preimage(&self, alpha: &LatticeVector, level: u32, parity: u8) -> KElement {
        let key = (alpha.clone(), level, parity);
        if let Some(hit) = self.p_memo.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let nodes: Vec<i64> = (0..=self.cap as i64)
            .map(|j| parity as i64 + 2 * j)
            .collect();
        let matrix: linalg::Matrix = (0..=self.cap)
            .map(|k| {
                nodes
                    .iter()
                    .map(|&n| rho_coefficient(n, k) / int(2))
                    .collect()
            })
            .collect();
        let rhs: Vec<Rational> = (0..=self.cap)
            .map(|k| if k == level { int(1) } else { int(0) })
            .collect();
        let coeffs =
            linalg::solve(&matrix, &rhs).expect("loop coefficients are a Vandermonde-type system");
        let mut out = KElement::zero();
        for (n, c) in nodes.iter().zip(coeffs) {
            out.add_scaled(&KElement::ec(alpha, *n), &c);
        }
        self.p_memo.lock().unwrap().insert(key, out.clone());
        out
    }

    pub fn act(&self, g: &VerQGenerator, v: &VerQElement) -> VerQElement {
        match g {
            VerQGenerator::Compact(k) => self.act_kgen(k, v),
            VerQGenerator::Parabolic(ParGen::P {
                root,
                level,
                parity,
            }) => {
                if *level > self.cap {
                    return self.zero();
                }
                self.act_compact(&self.p_preimage(root, *level, *parity), v)
            }
            VerQGenerator::Parabolic(ParGen::Q { dir, level, parity }) => {
                let q = UQElement::var(
                    self.cap,
                    QVar {
                        dir: *dir,
                        level: *level,
                        parity: *parity,
                    },
                );
                let mut out = self.zero();
                for (gamma, u) in v.terms() {
                    out.add_canonical(gamma.clone(), &q.mul(u));
                }
                out
            }
        }
    }

    /// Action of a parabolic element, expanded in `P`/`Q` generators.
    pub fn act_parabolic(&self, x: &ParabolicElement, v: &VerQElement) -> VerQElement {
        let mut out = self.zero();
        for (g, c) in x.decompose() {
            out.add_scaled(&self.act(&VerQGenerator::Parabolic(g), v), &c);
        }
        out
    }

    /// `G_N(v) = sum rho^N(F^H_f) e_gamma` over the components of `v`.
    pub fn project(&self, v: &BasicElement) -> VerQElement {
        let mut out = self.zero();
        for (gamma, f) in v.components() {
            let fh = generating_element(&self.rs, f, Some(self.cap));
            let u = rho_heisenberg(self.cap, &fh);
            out = out.add(&self.canonicalize(gamma, &u));
        }
        out
    }

    /// Membership in `W_N = ker G_N`.
    pub fn in_kernel(&self, v: &BasicElement) -> bool {
        self.project(v).is_zero()
    }

    /// Dimension of the span of `vectors`.
    pub fn span_rank(&self, vectors: &[VerQElement]) -> usize {
        let rows: linalg::Matrix = vectors.iter().map(|v| self.to_dense(v)).collect();
        if rows.is_empty() {
            return 0;
        }
        linalg::rank(&rows)
    }

    /// Dimension of the quotient of `Ver_Q(N)` by the span of `vectors`.
    /// Invariance of that span is the caller's responsibility.
    pub fn quotient_dim(&self, vectors: &[VerQElement]) -> usize {
        self.dim() - self.span_rank(vectors)
    }

    /// Rank of `G_N` on the basis states of `rep` up to loop level `max_level`.
    pub fn image_rank(&self, rep: &BasicRep, max_level: u32) -> usize {
        let images: Vec<VerQElement> = rep
            .basis_states(max_level)
            .into_iter()
            .map(|(gamma, m)| {
                self.project(
                    &rep.state(&gamma, &IndexedPoly::term(m, int(1)))
                        .expect("basis state below cutoff"),
                )
            })
            .collect();
        self.span_rank(&images)
    }
}

/// Split `gamma = coset + 2 shift` with `coset` in `{0,1}^r`.
fn split_coset(gamma: &LatticeVector) -> (LatticeVector, LatticeVector) {
    let coset = LatticeVector(gamma.coords().iter().map(|c| c.rem_euclid(2)).collect());
    let shift = LatticeVector(gamma.coords().iter().map(|c| c.div_euclid(2)).collect());
    (coset, shift)
}

/// The generators `Q^{alpha_i}_{2k+1,a}` with `2k+1 <= cap`.
pub fn q_variables(rank: usize, cap: u32) -> Vec<QVar> {
    let mut out = Vec::new();
    let mut level = 1;
    while level <= cap {
        for dir in 0..rank {
            for parity in 0..2 {
                out.push(QVar { dir, level, parity });
            }
        }
        level += 2;
    }
    out.sort();
    out
}

fn monomials_of_level_at_most(vars: &[QVar], cap: u32) -> Vec<Monomial<QVar>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(vars, 0, cap, &mut current, &mut out);
    out
}

fn fill(
    vars: &[QVar],
    start: usize,
    budget: u32,
    current: &mut Vec<QVar>,
    out: &mut Vec<Monomial<QVar>>,
) {
    out.push(Monomial::from_factors(current.iter().map(|v| (*v, 1))));
    for (i, v) in vars.iter().enumerate().skip(start) {
        if v.level <= budget {
            current.push(*v);
            fill(vars, i, budget - v.level, current, out);
            current.pop();
        }
    }
}

/// Linear combination of `Hc^{alpha_dir}_n` mapping to `Q^{alpha_dir}_{level,parity}` under `rho^N`.
fn q_preimage(cap: u32, q: QVar) -> HeisenbergPoly {
    let levels: Vec<u32> = (0..).map(|k| 2 * k + 1).take_while(|l| *l <= cap).collect();
    let nodes: Vec<i64> = (0..levels.len() as i64)
        .map(|j| if q.parity == 0 { 2 * j + 2 } else { 2 * j + 1 })
        .collect();
    let matrix: linalg::Matrix = levels
        .iter()
        .map(|&l| {
            nodes
                .iter()
                .map(|&n| rho_coefficient(n, l) / int(2))
                .collect()
        })
        .collect();
    let rhs: Vec<Rational> = levels
        .iter()
        .map(|&l| if l == q.level { int(1) } else { int(0) })
        .collect();
    let coeffs = linalg::solve(&matrix, &rhs).expect("odd loop coefficients are invertible");
    let mut out = HeisenbergPoly::zero();
    for (n, c) in nodes.iter().zip(coeffs) {
        out.add_term(
            Monomial::var(HcVar {
                dir: q.dir,
                mode: *n as u32,
            }),
            c,
        );
    }
    out
}

/// One row of the filtration report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosocleRow {
    pub level: u32,
    pub verq_dim: u64,
    pub top_graded_dim: u64,
    /// `dim W_{N-1} / W_N` (for `N = 0`, `dim R / W_0`).
    pub quotient_dim: u64,
    /// Rank of `G_N` on basic states up to loop level `N + 2`, when measured.
    pub measured_image_rank: Option<u64>,
}

/// Largest rank for which [`cosocle_report`] measures the image of `G_N` directly.
pub const MEASURED_RANK_LIMIT: usize = 2;

/// Dimensions of `Ver_Q(N)` and of the successive quotients of the kernel
/// filtration, `W_{N-1}/W_N ~ Ver_Q(N)_N`, for `N = 0..=max_level`.
///
/// For small ranks the image of `G_N` is also measured, which checks the
/// surjectivity the quotient dimensions rely on.
pub fn cosocle_report(rs: &RootSystem, max_level: u32) -> Vec<CosocleRow> {
    (0..=max_level)
        .map(|n| {
            let dims = graded_dims_formula(rs.rank(), n);
            let measured_image_rank = (rs.rank() <= MEASURED_RANK_LIMIT).then(|| {
                let rep = BasicRep::new(rs, n as i64 + 2);
                VerQModule::build(rs, n).image_rank(&rep, n + 2) as u64
            });
            CosocleRow {
                level: n,
                verq_dim: dims.iter().sum(),
                top_graded_dim: dims[n as usize],
                quotient_dim: dims[n as usize],
                measured_image_rank,
            }
        })
        .collect()
}

/// Graded dimensions of `Ver_Q(N)` without building the module.
pub fn graded_dims_formula(rank: usize, cap: u32) -> Vec<u64> {
    // monomials in 2*rank variables at each odd level
    let mut series = vec![0u64; cap as usize + 1];
    series[0] = 1;
    let mut level = 1usize;
    while level <= cap as usize {
        for _ in 0..2 * rank {
            for k in level..=cap as usize {
                series[k] += series[k - level];
            }
        }
        level += 2;
    }
    series.iter().map(|s| s << rank).collect()
}

/// One row of the `so(16)` tensor audit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub level: u32,
    pub verq_graded_dim: u64,
    pub so16_decomposition: String,
    pub so16_dim: u64,
    pub matches: bool,
}

/// Compare the graded dimensions of `Ver_Q(N)` for `E8` with tensor products
/// of `so(16)` representations (vector 16, spinor 128, and the 560).
pub fn tensor_audit_so16(rs: &RootSystem, max_level: u32) -> Result<Vec<AuditRow>> {
    if rs.kind() != CartanType::E || rs.rank() != 8 {
        return Err(Error::Config(format!(
            "the so(16) audit needs E8, got {}",
            rs.name()
        )));
    }
    let table: [(&str, u64); 3] = [
        ("16x16", 16 * 16),
        ("2x(16x128)", 2 * 16 * 128),
        (
            "16x16 + 16x560 + 128x128 + 16x16 + 560x16",
            16 * 16 + 16 * 560 + 128 * 128 + 16 * 16 + 560 * 16,
        ),
    ];
    if max_level as usize >= table.len() {
        return Err(Error::Config(format!(
            "the so(16) audit covers levels 0..=2, asked for {max_level}"
        )));
    }
    let dims = graded_dims_formula(rs.rank(), max_level);
    Ok((0..=max_level)
        .map(|n| {
            let (desc, value) = table[n as usize];
            AuditRow {
                level: n,
                verq_graded_dim: dims[n as usize],
                so16_decomposition: desc.to_string(),
                so16_dim: value,
                matches: dims[n as usize] == value,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basicrep::NO_CUTOFF;
    use crate::compact::bracket_compact;
    use crate::parabolic::bracket_parabolic;
    use crate::poly::HVar;

    #[test]
    fn dimensions() {
        for r in [1usize, 2, 8] {
            let rs = RootSystem::parse(&format!("{}{r}", if r == 8 { "E" } else { "A" })).unwrap();
            assert_eq!(VerQModule::build(&rs, 0).dim() as u64, 1 << r);
            assert_eq!(
                VerQModule::build(&rs, 1).dim() as u64,
                (1 << r) * (1 + 2 * r as u64)
            );
        }
        let e8 = RootSystem::parse("E8").unwrap();
        assert_eq!(VerQModule::build(&e8, 2).graded_dims()[2], 34816);
        for cap in 0..=3 {
            let rs = RootSystem::parse("A2").unwrap();
            assert_eq!(
                VerQModule::build(&rs, cap).graded_dims(),
                graded_dims_formula(2, cap)
            );
        }
    }

    #[test]
    fn level_zero_parity_rule() {
        let rs = RootSystem::parse("A2").unwrap();
        let module = VerQModule::build(&rs, 0);
        for gamma in module.coset_representatives().to_vec() {
            let v = module.canonicalize(&gamma, &UQElement::one(0));
            for alpha in rs.roots() {
                for a in 0..2u8 {
                    let out = module.act(
                        &VerQGenerator::Parabolic(ParGen::P {
                            root: alpha.clone(),
                            level: 0,
                            parity: a,
                        }),
                        &v,
                    );
                    let odd = (rs.inner(alpha, &gamma) + a as i64).rem_euclid(2) == 1;
                    let expected = if odd {
                        module
                            .canonicalize(&(alpha + &gamma), &UQElement::one(0))
                            .scale(&int(rs.cocycle(alpha, &gamma)))
                    } else {
                        module.zero()
                    };
                    let expected = if alpha.is_positive() {
                        expected
                    } else {
                        expected.scale(&int(1))
                    };
                    // P^{-alpha}_{0,a} = P^alpha_{0,a}, so only the positive representative is a generator.
                    if alpha.is_positive() {
                        assert_eq!(out, expected);
                    }
                }
            }
        }
    }

    #[test]
    fn level_one_parabolic_rules() {
        let rs = RootSystem::parse("A2").unwrap();
        let module = VerQModule::build(&rs, 1);
        let q = |parity: u8, alpha: &LatticeVector| {
            UQElement::var(
                1,
                QVar {
                    dir: 0,
                    level: 1,
                    parity,
                },
            )
            .along(alpha)
        };
        for gamma in module.coset_representatives().to_vec() {
            let v = module.canonicalize(&gamma, &UQElement::one(1));
            for alpha in rs.positive_roots() {
                let s = rs.inner(alpha, &gamma);
                let eps = int(rs.cocycle(alpha, &gamma));
                let target = alpha + &gamma;
                for a in 0..2u8 {
                    let p0 = module.act(
                        &VerQGenerator::Parabolic(ParGen::P {
                            root: alpha.clone(),
                            level: 0,
                            parity: a,
                        }),
                        &v,
                    );
                    let coeff = if (s + a as i64).rem_euclid(2) == 1 {
                        UQElement::one(1).sub(&q(0, alpha).scale(&int(2 * (s + 1))))
                    } else {
                        q(1, alpha).scale(&int(-2 * s))
                    };
                    assert_eq!(p0, module.canonicalize(&target, &coeff.scale(&eps)));
                    let p1 = module.act(
                        &VerQGenerator::Parabolic(ParGen::P {
                            root: alpha.clone(),
                            level: 1,
                            parity: a,
                        }),
                        &v,
                    );
                    let shifted = ((a as i64 + 1 + s).rem_euclid(2)) as u8;
                    assert_eq!(
                        p1,
                        module.canonicalize(&target, &q(shifted, alpha).scale(&eps))
                    );
                }
            }
        }
    }

    #[test]
    fn vacuum_examples() {
        let rs = RootSystem::parse("A2").unwrap();
        for cap in 0..=2 {
            let module = VerQModule::build(&rs, cap);
            let e0 = module.canonicalize(&LatticeVector::zero(2), &UQElement::one(cap));
            for alpha in rs.roots() {
                let expected = module.canonicalize(alpha, &UQElement::one(cap));
                assert_eq!(module.act_compact(&KElement::ec(alpha, -1), &e0), expected);
                // the finite compact subalgebra kills e_0
                let k0 = KElement::ec(alpha, 0);
                assert!(module.act_compact(&k0, &e0).is_zero());
            }
        }
        let m1 = VerQModule::build(&rs, 1);
        let a1 = rs.simple_root(0);
        let expected = UQElement::one(1).add(
            &UQElement::var(
                1,
                QVar {
                    dir: 0,
                    level: 1,
                    parity: 0,
                },
            )
            .scale(&int(4)),
        );
        assert_eq!(
            m1.canonicalize(&a1.scaled(2), &UQElement::one(1)),
            m1.canonicalize(&LatticeVector::zero(2), &expected)
        );
    }

    #[test]
    fn canonicalization_order_independent() {
        let rs = RootSystem::parse("A2").unwrap();
        let module = VerQModule::build(&rs, 3);
        let u = UQElement::var(
            3,
            QVar {
                dir: 1,
                level: 1,
                parity: 1,
            },
        );
        for g in rs.enumerate_lattice_vectors(12) {
            let a = module.canonicalize_in_order(&g, &u, &[0, 1]);
            let b = module.canonicalize_in_order(&g, &u, &[1, 0]);
            assert_eq!(a, b);
            assert_eq!(a, module.canonicalize(&g, &u));
        }
    }

    #[test]
    fn representation_property_a1() {
        let rs = RootSystem::parse("A1").unwrap();
        let a = rs.simple_root(0);
        for cap in 0..=2 {
            let module = VerQModule::build(&rs, cap);
            let mut gens = Vec::new();
            for n in -2..=2 {
                gens.push(KElement::ec(&a, n));
                gens.push(KElement::hc(0, n));
            }
            let states: Vec<VerQElement> = module
                .coset_representatives()
                .iter()
                .flat_map(|c| {
                    module
                        .monomials
                        .iter()
                        .map(|m| module.basis_element(c, m))
                        .collect::<Vec<_>>()
                })
                .collect();
            for v in &states {
                for x in &gens {
                    for y in &gens {
                        let lhs = module.act_compact(&bracket_compact(&rs, x, y), v);
                        let rhs = module
                            .act_compact(x, &module.act_compact(y, v))
                            .sub(&module.act_compact(y, &module.act_compact(x, v)));
                        assert_eq!(lhs, rhs, "cap={cap} x={x} y={y} v={v}");
                    }
                }
            }
            // parabolic generators
            let pgens: Vec<ParabolicElement> = (0..=cap)
                .flat_map(|k| (0..2).map(move |p| (k, p)))
                .map(|(k, p)| ParabolicElement::p(&rs, &a, k, p, cap))
                .chain(
                    (0..2)
                        .filter(|_| cap >= 1)
                        .map(|p| ParabolicElement::q(&a, 1, p, cap)),
                )
                .collect();
            for v in &states {
                for x in &pgens {
                    for y in &pgens {
                        let lhs = module.act_parabolic(&bracket_parabolic(&rs, x, y), v);
                        let rhs = module
                            .act_parabolic(x, &module.act_parabolic(y, v))
                            .sub(&module.act_parabolic(y, &module.act_parabolic(x, v)));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn projection_examples() {
        let rs = RootSystem::parse("A1").unwrap();
        let rep = BasicRep::new(&rs, NO_CUTOFF);
        let gamma = LatticeVector(vec![1]);
        let v = rep
            .state(&gamma, &IndexedPoly::var(HVar::new(0, 1)))
            .unwrap();
        assert!(VerQModule::build(&rs, 0).project(&v).is_zero());
        let g1 = VerQModule::build(&rs, 1).project(&v);
        let expected = VerQModule::build(&rs, 1).canonicalize(
            &gamma,
            &UQElement::var(
                1,
                QVar {
                    dir: 0,
                    level: 1,
                    parity: 1,
                },
            )
            .scale(&int(4)),
        );
        assert_eq!(g1, expected);
    }

    #[test]
    fn equivariance_smoke_a1() {
        let rs = RootSystem::parse("A1").unwrap();
        let rep = BasicRep::new(&rs, NO_CUTOFF);
        let a = rs.simple_root(0);
        for cap in 0..=2 {
            let module = VerQModule::build(&rs, cap);
            for (gamma, m) in rep.basis_states(3) {
                let v = rep.state(&gamma, &IndexedPoly::term(m, int(1))).unwrap();
                let gv = module.project(&v);
                for n in -2..=2 {
                    for x in [KElement::ec(&a, n), KElement::hc(0, n)] {
                        let lhs = module.project(&rep.act_compact(&x, &v));
                        let rhs = module.act_compact(&x, &gv);
                        assert_eq!(lhs, rhs, "cap={cap} x={x} v={v}");
                    }
                }
            }
        }
    }

    #[test]
    fn surjective_at_small_rank() {
        for name in ["A1", "A2"] {
            let rs = RootSystem::parse(name).unwrap();
            for row in cosocle_report(&rs, 2) {
                assert_eq!(
                    row.measured_image_rank,
                    Some(row.verq_dim),
                    "{name} N={}",
                    row.level
                );
            }
        }
        let a1 = cosocle_report(&RootSystem::parse("A1").unwrap(), 0);
        assert_eq!(a1[0].quotient_dim, 2);
    }

    #[test]
    fn so16_audit() {
        let rs = RootSystem::parse("E8").unwrap();
        let rows = tensor_audit_so16(&rs, 2).unwrap();
        assert!(rows.iter().all(|r| r.matches));
        assert_eq!(rows[1].verq_graded_dim, 4096);
        assert!(tensor_audit_so16(&RootSystem::parse("A2").unwrap(), 1).is_err());
    }
}
