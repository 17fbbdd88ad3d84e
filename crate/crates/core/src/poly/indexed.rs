//! Polynomials in the negative Heisenberg modes `h^i_{-n}` and the Schur
//! polynomials they carry.

use std::fmt;

use super::sparse::{Monomial, Poly, Weighted};
use crate::arith::{int, Rational};
use crate::lattice::{LatticeVector, RootSystem};

/// The mode `h^dir_{-depth}`, that is the simple root `alpha_dir` at mode `-depth`.
/// `dir` is zero-based internally and printed one-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HVar {
    pub dir: usize,
    pub depth: u32,
}

impl HVar {
    pub fn new(dir: usize, depth: u32) -> Self {
        assert!(depth >= 1, "Heisenberg creation modes start at depth 1");
        HVar { dir, depth }
    }
}

impl Weighted for HVar {
    fn weight(&self) -> u32 {
        self.depth
    }
}

impl fmt::Display for HVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h{}[-{}]", self.dir + 1, self.depth)
    }
}

/// Polynomial in the `h^i_{-n}`; its weight is the mode (weighted) degree.
pub type IndexedPoly = Poly<HVar>;

/// `gamma_{-depth} = sum_i gamma_i h^i_{-depth}`.
pub fn mode(gamma: &LatticeVector, depth: u32) -> IndexedPoly {
    let mut p = IndexedPoly::zero();
    for (i, c) in gamma.coords().iter().enumerate() {
        if *c != 0 {
            p.add_term(Monomial::var(HVar::new(i, depth)), int(*c));
        }
    }
    p
}

/// Schur polynomials in abstract power-sum variables `p_k` (indexed by `k`),
/// defined by `sum_N z^N S_N = exp(sum_k z^k p_k / k)`.
///
/// Built from `N S_N = sum_{k=1}^N p_k S_{N-k}`.
pub fn schur_table(max: usize) -> Vec<Poly<u32>> {
    let mut table: Vec<Poly<u32>> = vec![Poly::one()];
    for n in 1..=max {
        let mut acc = Poly::zero();
        for k in 1..=n {
            let term = &Poly::var(k as u32) * &table[n - k];
            acc = &acc + &term;
        }
        table.push(acc.scale(&(int(1) / int(n as i64))));
    }
    table
}

/// `S_n({gamma})`, the Schur polynomial in `gamma_{-k}`; zero for negative `n`.
pub fn schur(n: i64, gamma: &LatticeVector) -> IndexedPoly {
    if n < 0 {
        return IndexedPoly::zero();
    }
    let generic = schur_table(n as usize).pop().unwrap();
    generic.compose(|k| mode(gamma, *k), |_| true)
}

/// Action of the Heisenberg mode `gamma_n` (`n != 0`) on the polynomial part:
/// multiplication by `gamma_{-|n|}` for `n < 0`, and the derivation
/// `n sum_j (gamma|alpha_j) d/dh^j_{-n}` for `n > 0`.
pub fn heisenberg_mode(
    rs: &RootSystem,
    gamma: &LatticeVector,
    n: i64,
    f: &IndexedPoly,
) -> IndexedPoly {
    assert!(n != 0, "the zero mode acts on the lattice part");
    if n < 0 {
        return &mode(gamma, (-n) as u32) * f;
    }
    let mut out = IndexedPoly::zero();
    for j in 0..rs.rank() {
        let pairing = rs.inner(gamma, &rs.simple_root(j));
        if pairing == 0 {
            continue;
        }
        let d = f.derivative(&HVar::new(j, n as u32));
        out.add_scaled(&d, &int(pairing * n));
    }
    out
}

/// Enumerate every monomial of exact weighted degree `weight` in `rank`
/// directions, in a deterministic order.
pub fn monomials_of_weight(rank: usize, weight: u32) -> Vec<Monomial<HVar>> {
    let mut vars: Vec<HVar> = Vec::new();
    for depth in 1..=weight {
        for dir in 0..rank {
            vars.push(HVar::new(dir, depth));
        }
    }
    let mut out = Vec::new();
    let mut current: Vec<(HVar, u32)> = Vec::new();
    fill_monomials(&vars, 0, weight, &mut current, &mut out);
    out.sort();
    out
}

fn fill_monomials(
    vars: &[HVar],
    start: usize,
    remaining: u32,
    current: &mut Vec<(HVar, u32)>,
    out: &mut Vec<Monomial<HVar>>,
) {
    if remaining == 0 {
        out.push(Monomial::from_factors(current.iter().copied()));
        return;
    }
    for (idx, v) in vars.iter().enumerate().skip(start) {
        let w = v.depth;
        let mut e = 1;
        while w * e <= remaining {
            current.push((*v, e));
            fill_monomials(vars, idx + 1, remaining - w * e, current, out);
            current.pop();
            e += 1;
        }
    }
}

/// Number of monomials of weighted degree `weight` in `rank` directions,
/// i.e. the coefficient of `q^weight` in `prod_n (1 - q^n)^{-rank}`.
pub fn colored_partition_count(rank: usize, weight: u32) -> u64 {
    let w = weight as usize;
    let mut series = vec![0u64; w + 1];
    series[0] = 1;
    for _ in 0..rank {
        for part in 1..=w {
            for k in part..=w {
                series[k] += series[k - part];
            }
        }
    }
    series[w]
}

/// Coefficient helper for tests and reports.
pub fn coeff_of(p: &IndexedPoly, factors: &[(HVar, u32)]) -> Rational {
    p.coeff(&Monomial::from_factors(factors.iter().copied()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;

    fn x(depth: u32) -> HVar {
        HVar::new(0, depth)
    }

    #[test]
    fn low_schur_polynomials() {
        let a = LatticeVector(vec![1]);
        assert_eq!(schur(0, &a), IndexedPoly::one());
        assert_eq!(schur(1, &a), IndexedPoly::var(x(1)));
        assert!(schur(-1, &a).is_zero());
        let s2 = schur(2, &a);
        assert_eq!(coeff_of(&s2, &[(x(2), 1)]), frac(1, 2));
        assert_eq!(coeff_of(&s2, &[(x(1), 2)]), frac(1, 2));
    }

    #[test]
    fn schur_is_homogeneous() {
        let a = LatticeVector(vec![1, -1]);
        for n in 0..7 {
            let s = schur(n, &a);
            assert!(s.terms().all(|(m, _)| m.weight() == n as u32));
        }
    }

    #[test]
    fn partition_counts_match_enumeration() {
        for rank in 1..=3 {
            for w in 0..=6 {
                assert_eq!(
                    monomials_of_weight(rank, w).len() as u64,
                    colored_partition_count(rank, w),
                    "rank {rank} weight {w}"
                );
            }
        }
        assert_eq!(colored_partition_count(8, 2), 44);
    }
}
