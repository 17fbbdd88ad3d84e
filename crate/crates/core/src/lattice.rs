//! Simply-laced root lattices: Cartan data, bounded enumeration of lattice
//! vectors, and the bimultiplicative sign cocycle.
//!
//! Lattice vectors are written in the basis of simple roots, so the Gram
//! matrix of the lattice is the Cartan matrix itself.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::{floor_sqrt, int, Rational};
use crate::error::{Error, Result};

/// Dynkin type of a simply-laced finite root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CartanType {
    A,
    D,
    E,
}

/// Integer coordinates with respect to the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn zero(rank: usize) -> Self {
        LatticeVector(vec![0; rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        LatticeVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// First non-zero coordinate is positive. For roots this is the usual
    /// positivity with respect to the simple roots.
    pub fn is_positive(&self) -> bool {
        self.0.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }

    pub fn scaled(&self, k: i64) -> Self {
        LatticeVector(self.0.iter().map(|c| c * k).collect())
    }
}

impl From<Vec<i64>> for LatticeVector {
    fn from(v: Vec<i64>) -> Self {
        LatticeVector(v)
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// A simply-laced root system together with its sign cocycle.
#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: CartanType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    roots: Vec<LatticeVector>,
    root_index: HashMap<LatticeVector, usize>,
    cocycle_table: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(kind: CartanType, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(kind, rank)?;
        let cocycle_table = standard_cocycle_table(&cartan);
        let mut rs = RootSystem {
            kind,
            rank,
            cartan,
            roots: Vec::new(),
            root_index: HashMap::new(),
            cocycle_table,
        };
        rs.roots = rs
            .enumerate_lattice_vectors(2)
            .into_iter()
            .filter(|v| rs.norm(v) == 2)
            .collect();
        rs.root_index = rs
            .roots
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();
        Ok(rs)
    }

    /// Parse names such as `A2`, `d4`, `E8`.
    pub fn parse(name: &str) -> Result<Self> {
        let name = name.trim();
        let mut chars = name.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => CartanType::A,
            Some('D') => CartanType::D,
            Some('E') => CartanType::E,
            _ => return Err(Error::UnknownAlgebra(name.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownAlgebra(name.to_string()))?;
        Self::new(kind, rank).map_err(|_| Error::UnknownAlgebra(name.to_string()))
    }

    /// Replace the generator-level cocycle table. Used to probe alternative
    /// sign conventions; the bracket is only a Lie bracket for valid tables.
    pub fn with_cocycle_table(mut self, table: Vec<Vec<i64>>) -> Self {
        assert_eq!(table.len(), self.rank);
        self.cocycle_table = table;
        self
    }

    pub fn name(&self) -> String {
        format!("{:?}{}", self.kind, self.rank)
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cocycle_table(&self) -> &[Vec<i64>] {
        &self.cocycle_table
    }

    pub fn check_vector(&self, v: &LatticeVector) -> Result<()> {
        if v.len() == self.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                rank: self.rank,
                got: v.len(),
            })
        }
    }

    pub fn simple_root(&self, i: usize) -> LatticeVector {
        LatticeVector::unit(self.rank, i)
    }

    /// Inner product `(a|b)`.
    pub fn inner(&self, a: &LatticeVector, b: &LatticeVector) -> i64 {
        let mut s = 0;
        for (i, ai) in a.0.iter().enumerate() {
            if *ai == 0 {
                continue;
            }
            for (j, bj) in b.0.iter().enumerate() {
                s += ai * self.cartan[i][j] * bj;
            }
        }
        s
    }

    /// Inner product of a rational combination of simple roots with a lattice vector.
    pub fn inner_rational(&self, a: &[Rational], b: &LatticeVector) -> Rational {
        let mut s = Rational::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            let pairing: i64 = (0..self.rank).map(|j| self.cartan[i][j] * b.0[j]).sum();
            s += ai * int(pairing);
        }
        s
    }

    pub fn norm(&self, a: &LatticeVector) -> i64 {
        self.inner(a, a)
    }

    pub fn roots(&self) -> &[LatticeVector] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &LatticeVector> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    pub fn is_root(&self, v: &LatticeVector) -> bool {
        self.root_index.contains_key(v)
    }

    pub fn root_position(&self, v: &LatticeVector) -> Option<usize> {
        self.root_index.get(v).copied()
    }

    /// All lattice vectors with `(v|v) <= max_norm`, sorted by norm and then
    /// lexicographically by coordinates.
    ///
    /// The quadratic form is diagonalised as `sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2`
    /// and coordinates are chosen from the last one down, pruning with the
    /// remaining budget at each step.
    pub fn enumerate_lattice_vectors(&self, max_norm: i64) -> Vec<LatticeVector> {
        if max_norm < 0 {
            return Vec::new();
        }
        let (diag, upper) = ldl_upper(&self.cartan);
        let mut out = Vec::new();
        let mut coords = vec![0i64; self.rank];
        self.enumerate_level(
            self.rank,
            &int(max_norm),
            &diag,
            &upper,
            &mut coords,
            &mut out,
        );
        out.sort_by(|a, b| self.norm(a).cmp(&self.norm(b)).then_with(|| a.cmp(b)));
        out
    }

    fn enumerate_level(
        &self,
        level: usize,
        budget: &Rational,
        diag: &[Rational],
        upper: &[Vec<Rational>],
        coords: &mut Vec<i64>,
        out: &mut Vec<LatticeVector>,
    ) {
        if level == 0 {
            out.push(LatticeVector(coords.clone()));
            return;
        }
        let i = level - 1;
        let center: Rational = -(i + 1..self.rank)
            .map(|j| &upper[i][j] * int(coords[j]))
            .sum::<Rational>();
        let radius = floor_sqrt(&(budget / &diag[i])) + 1;
        let lo = center.floor().to_integer();
        let lo: i64 = num_traits::ToPrimitive::to_i64(&lo).unwrap_or(0) - radius;
        let hi = lo + 2 * radius + 1;
        for x in lo..=hi {
            let shift = int(x) - &center;
            let used = &diag[i] * &shift * &shift;
            if &used <= budget {
                coords[i] = x;
                let rest = budget - used;
                self.enumerate_level(i, &rest, diag, upper, coords, out);
            }
        }
        coords[i] = 0;
    }

    /// The sign cocycle `eps(a, b) = prod_{i,j} table[i][j]^(a_i b_j)`.
    pub fn cocycle(&self, a: &LatticeVector, b: &LatticeVector) -> i64 {
        let mut odd = 0i64;
        for (i, ai) in a.0.iter().enumerate() {
            if ai.rem_euclid(2) == 0 {
                continue;
            }
            for (j, bj) in b.0.iter().enumerate() {
                if self.cocycle_table[i][j] == -1 && bj.rem_euclid(2) == 1 {
                    odd += 1;
                }
            }
        }
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Symmetric elimination: returns `d` and unit upper-triangular `u` with
/// `x^T G x = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2`.
fn ldl_upper(gram: &[Vec<i64>]) -> (Vec<Rational>, Vec<Vec<Rational>>) {
    let n = gram.len();
    let mut g: Vec<Vec<Rational>> = gram
        .iter()
        .map(|r| r.iter().map(|&x| int(x)).collect())
        .collect();
    let mut diag = vec![Rational::zero(); n];
    let mut upper = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        let d = g[i][i].clone();
        assert!(d.is_positive(), "Cartan matrix must be positive definite");
        for j in i + 1..n {
            upper[i][j] = &g[i][j] / &d;
        }
        for j in i + 1..n {
            for k in i + 1..n {
                let delta = &d * &upper[i][j] * &upper[i][k];
                g[j][k] -= delta;
            }
        }
        diag[i] = d;
    }
    (diag, upper)
}

/// Generator-level cocycle: `-1` on the diagonal, `(-1)^{A_ij}` below it and
/// `1` above it.
pub fn standard_cocycle_table(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        -1
                    } else if i > j {
                        if cartan[i][j].rem_euclid(2) == 0 {
                            1
                        } else {
                            -1
                        }
                    } else {
                        1
                    }
                })
                .collect()
        })
        .collect()
}

fn cartan_matrix(kind: CartanType, rank: usize) -> Result<Vec<Vec<i64>>> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match kind {
        CartanType::A if rank >= 1 => edges.extend((1..rank).map(|i| (i - 1, i))),
        CartanType::D if rank >= 4 => {
            edges.extend((1..rank - 1).map(|i| (i - 1, i)));
            edges.push((rank - 3, rank - 1));
        }
        // Bourbaki labelling: the chain 1-3-4-5-...-r with node 2 attached to node 4.
        CartanType::E if (6..=8).contains(&rank) => {
            edges.push((0, 2));
            edges.push((1, 3));
            edges.extend((3..rank).map(|i| (i - 1, i)));
        }
        _ => return Err(Error::UnknownAlgebra(format!("{kind:?}{rank}"))),
    }
    let mut m = vec![vec![0i64; rank]; rank];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in edges {
        m[a][b] = -1;
        m[b][a] = -1;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg;

    fn box_enumeration(rs: &RootSystem, max_norm: i64) -> Vec<LatticeVector> {
        // Bound each coordinate by |x_i|^2 <= (G^-1)_ii (x|x).
        let g: linalg::Matrix = rs
            .cartan_matrix()
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        let inv = linalg::inverse(&g).unwrap();
        let bound = (0..rs.rank())
            .map(|i| floor_sqrt(&(&inv[i][i] * int(max_norm))))
            .max()
            .unwrap_or(0);
        let mut out = Vec::new();
        let width = (2 * bound + 1) as usize;
        let total = width.pow(rs.rank() as u32);
        for idx in 0..total {
            let mut k = idx;
            let v: Vec<i64> = (0..rs.rank())
                .map(|_| {
                    let c = (k % width) as i64 - bound;
                    k /= width;
                    c
                })
                .collect();
            let v = LatticeVector(v);
            if rs.norm(&v) <= max_norm {
                out.push(v);
            }
        }
        out.sort_by(|a, b| rs.norm(a).cmp(&rs.norm(b)).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn root_counts() {
        for (name, count) in [
            ("A1", 2),
            ("A2", 6),
            ("A4", 20),
            ("D4", 24),
            ("D5", 40),
            ("E6", 72),
            ("E7", 126),
            ("E8", 240),
        ] {
            let rs = RootSystem::parse(name).unwrap();
            assert_eq!(rs.roots().len(), count, "{name}");
            assert_eq!(rs.positive_roots().count() * 2, count);
        }
    }

    #[test]
    fn e8_norm_four_shell() {
        let rs = RootSystem::parse("E8").unwrap();
        let shell = rs
            .enumerate_lattice_vectors(4)
            .into_iter()
            .filter(|v| rs.norm(v) == 4)
            .count();
        assert_eq!(shell, 2160);
    }

    #[test]
    fn enumeration_matches_box_search() {
        for (name, n) in [("A1", 8), ("A2", 6), ("A3", 4), ("D4", 4)] {
            let rs = RootSystem::parse(name).unwrap();
            assert_eq!(
                rs.enumerate_lattice_vectors(n),
                box_enumeration(&rs, n),
                "{name}"
            );
        }
    }

    #[test]
    fn cocycle_properties() {
        for name in ["A3", "D4", "E6"] {
            let rs = RootSystem::parse(name).unwrap();
            let vs = rs.enumerate_lattice_vectors(4);
            for a in vs.iter().take(40) {
                assert_eq!(
                    rs.cocycle(a, a),
                    if (rs.norm(a) / 2) % 2 == 0 { 1 } else { -1 }
                );
                for b in vs.iter().take(40) {
                    let sym = rs.cocycle(a, b) * rs.cocycle(b, a);
                    assert_eq!(
                        sym,
                        if rs.inner(a, b).rem_euclid(2) == 0 {
                            1
                        } else {
                            -1
                        }
                    );
                    for c in vs.iter().take(10) {
                        assert_eq!(rs.cocycle(&(a + b), c), rs.cocycle(a, c) * rs.cocycle(b, c));
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_unknown_algebras() {
        assert!(RootSystem::parse("E9").is_err());
        assert!(RootSystem::parse("D3").is_err());
        assert!(RootSystem::parse("B2").is_err());
        assert!(RootSystem::parse("A0").is_err());
    }
}
