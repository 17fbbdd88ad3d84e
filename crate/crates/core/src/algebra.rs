//! The finite simply-laced Lie algebra in its Chevalley-type basis
//! `{H^{alpha_i}, E^alpha}`, and the affine algebra built on its loops.
//!
//! Brackets:
//! `[H^a, E^b] = (a|b) E^b` and
//! `[E^a, E^b] = -delta_{a,-b} H^a + eps(a,b) E^{a+b}`,
//! where `E^g` vanishes unless `g` is a root. The invariant form is
//! `(H^a, H^b) = (a|b)` and `(E^a, E^b) = -delta_{a,-b}`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::arith::{fmt_combination, int, Rational};
use crate::lattice::{LatticeVector, RootSystem};

/// Element of the finite algebra: a Cartan part in the basis `H^{alpha_i}`
/// plus root-vector components.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteElement {
    pub cartan: Vec<Rational>,
    pub roots: BTreeMap<LatticeVector, Rational>,
}

impl FiniteElement {
    pub fn zero(rank: usize) -> Self {
        FiniteElement {
            cartan: vec![Rational::zero(); rank],
            roots: BTreeMap::new(),
        }
    }

    /// `H^gamma` for a lattice vector `gamma`.
    pub fn cartan_vector(gamma: &LatticeVector) -> Self {
        FiniteElement {
            cartan: gamma.coords().iter().map(|&c| int(c)).collect(),
            roots: BTreeMap::new(),
        }
    }

    pub fn root_vector(rank: usize, alpha: &LatticeVector) -> Self {
        let mut x = Self::zero(rank);
        x.roots.insert(alpha.clone(), int(1));
        x
    }

    pub fn is_zero(&self) -> bool {
        self.roots.is_empty() && self.cartan.iter().all(Zero::is_zero)
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.cartan.iter_mut().zip(&other.cartan) {
            *a += b * c;
        }
        for (r, v) in &other.roots {
            add_root_coeff(&mut self.roots, r, v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.cartan.len());
        out.add_scaled(self, c);
        out
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
}

pub(crate) fn add_root_coeff(
    map: &mut BTreeMap<LatticeVector, Rational>,
    r: &LatticeVector,
    c: Rational,
) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(r.clone()).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        map.remove(r);
    }
}

/// Basis `H^{alpha_1..alpha_r}` followed by the root vectors in root order.
pub fn finite_basis(rs: &RootSystem) -> Vec<FiniteElement> {
    let r = rs.rank();
    (0..r)
        .map(|i| FiniteElement::cartan_vector(&rs.simple_root(i)))
        .chain(rs.roots().iter().map(|a| FiniteElement::root_vector(r, a)))
        .collect()
}

/// Lie bracket of the finite algebra.
pub fn bracket_finite(rs: &RootSystem, x: &FiniteElement, y: &FiniteElement) -> FiniteElement {
    let r = rs.rank();
    let mut out = FiniteElement::zero(r);
    // [H, E^b] and [E^a, H]
    for (b, cb) in &y.roots {
        let p = rs.inner_rational(&x.cartan, b);
        add_root_coeff(&mut out.roots, b, p * cb);
    }
    for (a, ca) in &x.roots {
        let p = rs.inner_rational(&y.cartan, a);
        add_root_coeff(&mut out.roots, a, -(p * ca));
    }
    // [E^a, E^b]
    for (a, ca) in &x.roots {
        for (b, cb) in &y.roots {
            let c = ca * cb;
            let sum = a + b;
            if sum.is_zero() {
                for (h, ai) in out.cartan.iter_mut().zip(a.coords()) {
                    *h -= &c * int(*ai);
                }
            } else if rs.is_root(&sum) {
                add_root_coeff(&mut out.roots, &sum, c * int(rs.cocycle(a, b)));
            }
        }
    }
    out
}

/// Invariant bilinear form on the finite algebra.
pub fn killing_form(rs: &RootSystem, x: &FiniteElement, y: &FiniteElement) -> Rational {
    let mut s = Rational::zero();
    let r = rs.rank();
    for i in 0..r {
        for j in 0..r {
            if !x.cartan[i].is_zero() && !y.cartan[j].is_zero() {
                s += &x.cartan[i] * &y.cartan[j] * int(rs.cartan_matrix()[i][j]);
            }
        }
    }
    for (a, ca) in &x.roots {
        if let Some(cb) = y.roots.get(&-a) {
            s -= ca * cb;
        }
    }
    s
}

/// Element of the affine algebra: loop components `x_m` plus central `K`
/// and derivation `d` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineElement {
    pub loops: BTreeMap<i64, FiniteElement>,
    pub central: Rational,
    pub derivation: Rational,
}

impl AffineElement {
    pub fn zero() -> Self {
        AffineElement {
            loops: BTreeMap::new(),
            central: Rational::zero(),
            derivation: Rational::zero(),
        }
    }

    pub fn loop_element(x: FiniteElement, m: i64) -> Self {
        let mut out = Self::zero();
        if !x.is_zero() {
            out.loops.insert(m, x);
        }
        out
    }

    pub fn central() -> Self {
        AffineElement {
            central: int(1),
            ..Self::zero()
        }
    }

    pub fn derivation() -> Self {
        AffineElement {
            derivation: int(1),
            ..Self::zero()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.loops.values().all(FiniteElement::is_zero)
            && self.central.is_zero()
            && self.derivation.is_zero()
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational, rank: usize) {
        for (m, x) in &other.loops {
            let entry = self
                .loops
                .entry(*m)
                .or_insert_with(|| FiniteElement::zero(rank));
            entry.add_scaled(x, c);
            if entry.is_zero() {
                self.loops.remove(m);
            }
        }
        self.central += &other.central * c;
        self.derivation += &other.derivation * c;
    }
}

/// `[x_m, y_n] = [x,y]_{m+n} + m delta_{m,-n} (x,y) K`, `[d, x_m] = -m x_m`, `K` central.
pub fn bracket_affine(rs: &RootSystem, x: &AffineElement, y: &AffineElement) -> AffineElement {
    let r = rs.rank();
    let mut out = AffineElement::zero();
    for (m, xm) in &x.loops {
        for (n, yn) in &y.loops {
            let b = bracket_finite(rs, xm, yn);
            out.add_scaled(&AffineElement::loop_element(b, m + n), &int(1), r);
            if m + n == 0 {
                out.central += int(*m) * killing_form(rs, xm, yn);
            }
        }
    }
    if !x.derivation.is_zero() {
        for (n, yn) in &y.loops {
            let c = &x.derivation * int(-n);
            out.add_scaled(&AffineElement::loop_element(yn.clone(), *n), &c, r);
        }
    }
    if !y.derivation.is_zero() {
        for (m, xm) in &x.loops {
            let c = &y.derivation * int(*m);
            out.add_scaled(&AffineElement::loop_element(xm.clone(), *m), &c, r);
        }
    }
    out
}

impl fmt::Display for FiniteElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cartan = self
            .cartan
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c, format!("H{}", i + 1)));
        let roots = self.roots.iter().map(|(a, c)| (c, format!("E{a}")));
        write!(f, "{}", fmt_combination(cartan.chain(roots)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::standard_cocycle_table;

    fn jacobi_holds(rs: &RootSystem) -> bool {
        let basis = finite_basis(rs);
        for x in &basis {
            for y in &basis {
                let xy = bracket_finite(rs, x, y);
                let yx = bracket_finite(rs, y, x);
                if !xy.add(&yx).is_zero() {
                    return false;
                }
                for z in &basis {
                    let a = bracket_finite(rs, x, &bracket_finite(rs, y, z));
                    let b = bracket_finite(rs, y, &bracket_finite(rs, z, x));
                    let c = bracket_finite(rs, z, &xy);
                    if !a.add(&b).add(&c).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn jacobi_a1_a2() {
        for name in ["A1", "A2"] {
            assert!(jacobi_holds(&RootSystem::parse(name).unwrap()), "{name}");
        }
    }

    #[test]
    fn unsigned_diagonal_breaks_the_bracket() {
        // With eps(alpha_i, alpha_i) = +1 the sign rule eps(a,b)eps(b,a) = (-1)^{(a|b)}
        // fails and antisymmetry or Jacobi is lost.
        let rs = RootSystem::parse("A2").unwrap();
        let mut table = standard_cocycle_table(rs.cartan_matrix());
        for (i, row) in table.iter_mut().enumerate() {
            row[i] = 1;
        }
        let twisted = rs.with_cocycle_table(table);
        assert!(!jacobi_holds(&twisted));
    }

    #[test]
    fn killing_form_is_invariant() {
        let rs = RootSystem::parse("A2").unwrap();
        let basis = finite_basis(&rs);
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    let lhs = killing_form(&rs, &bracket_finite(&rs, x, y), z);
                    let rhs = killing_form(&rs, x, &bracket_finite(&rs, y, z));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn affine_jacobi_on_samples() {
        let rs = RootSystem::parse("A1").unwrap();
        let mut elems = Vec::new();
        for b in finite_basis(&rs) {
            for m in -2..=2 {
                elems.push(AffineElement::loop_element(b.clone(), m));
            }
        }
        elems.push(AffineElement::central());
        elems.push(AffineElement::derivation());
        for x in &elems {
            for y in &elems {
                let mut s = bracket_affine(&rs, x, y);
                s.add_scaled(&bracket_affine(&rs, y, x), &int(1), 1);
                assert!(s.is_zero());
                for z in elems.iter().step_by(3) {
                    let mut j = bracket_affine(&rs, x, &bracket_affine(&rs, y, z));
                    j.add_scaled(
                        &bracket_affine(&rs, y, &bracket_affine(&rs, z, x)),
                        &int(1),
                        1,
                    );
                    j.add_scaled(
                        &bracket_affine(&rs, z, &bracket_affine(&rs, x, y)),
                        &int(1),
                        1,
                    );
                    assert!(j.is_zero());
                }
            }
        }
    }
}
