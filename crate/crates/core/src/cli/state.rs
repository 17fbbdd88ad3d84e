//! Parser for state expressions such as `e[1,0]*h1[-1]^2 + 1/2*h2[-2]`.
//!
//! ```text
//! expr     = term , { ( "+" | "-" ) , term } ;
//! term     = [ "-" ] , factor , { "*" , factor } ;
//! factor   = atom , [ "^" , natural ] ;
//! atom     = rational | lattice | mode | "(" , expr , ")" ;
//! lattice  = "e" , "[" , integer , { "," , integer } , "]" ;
//! mode     = "h" , natural , "[" , "-" , natural , "]" ;
//! rational = natural , [ "/" , natural ] ;
//! integer  = [ "-" ] , natural ;
//! ```
//!
//! Whitespace is ignored everywhere. `e[c]` is the group-algebra element of
//! the lattice vector with simple-root coordinates `c`, and products of them
//! add the vectors. `hi[-n]` is the mode `alpha_i(-n)` of the `i`-th simple
//! root (1-based). A term without a lattice factor sits on `e[0,...,0]`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::poly::{HVar, IndexedPoly};

/// A parsed state: lattice vector -> polynomial in the modes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateExpr {
    pub components: BTreeMap<Vec<i64>, IndexedPoly>,
}

impl StateExpr {
    fn scalar(c: Rational) -> Self {
        Self::single(Vec::new(), IndexedPoly::constant(c))
    }

    fn single(gamma: Vec<i64>, f: IndexedPoly) -> Self {
        let mut components = BTreeMap::new();
        if !f.is_zero() {
            components.insert(gamma, f);
        }
        StateExpr { components }
    }

    fn add(mut self, other: StateExpr, sign: &Rational) -> Self {
        for (g, f) in other.components {
            let entry = self
                .components
                .entry(g.clone())
                .or_insert_with(IndexedPoly::zero);
            entry.add_scaled(&f, sign);
            if entry.is_zero() {
                self.components.remove(&g);
            }
        }
        self
    }

    fn mul(&self, other: &StateExpr) -> Self {
        let mut out = StateExpr {
            components: BTreeMap::new(),
        };
        for (g1, f1) in &self.components {
            for (g2, f2) in &other.components {
                let gamma = add_coords(g1, g2);
                out = out.add(StateExpr::single(gamma, f1 * f2), &Rational::one());
            }
        }
        out
    }

    /// Lattice parts as vectors of the given rank; the empty coordinate list
    /// (no lattice factor) stands for the origin.
    pub fn resolve(&self, rank: usize) -> Result<Vec<(LatticeVector, IndexedPoly)>> {
        let mut merged: BTreeMap<LatticeVector, IndexedPoly> = BTreeMap::new();
        for (g, f) in &self.components {
            let coords = if g.is_empty() {
                vec![0; rank]
            } else {
                g.clone()
            };
            if coords.len() != rank {
                return Err(Error::RankMismatch {
                    rank,
                    got: coords.len(),
                });
            }
            for v in f.variables() {
                if v.dir >= rank {
                    return Err(Error::DirectionOutOfRange {
                        index: v.dir + 1,
                        rank,
                    });
                }
            }
            let entry = merged
                .entry(LatticeVector(coords))
                .or_insert_with(IndexedPoly::zero);
            *entry = &*entry + f;
        }
        Ok(merged.into_iter().filter(|(_, f)| !f.is_zero()).collect())
    }
}

fn add_coords(a: &[i64], b: &[i64]) -> Vec<i64> {
    match (a.is_empty(), b.is_empty()) {
        (true, _) => b.to_vec(),
        (_, true) => a.to_vec(),
        _ if a.len() != b.len() => {
            // Mismatched lengths are reported by `resolve`; keep the longer one
            // so the error mentions a real rank.
            if a.len() > b.len() {
                a.to_vec()
            } else {
                b.to_vec()
            }
        }
        _ => a.iter().zip(b).map(|(x, y)| x + y).collect(),
    }
}

pub fn parse_state(input: &str) -> Result<StateExpr> {
    let tokens: Vec<(usize, char)> = input
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut p = Parser {
        tokens,
        pos: 0,
        len: input.len(),
    };
    if p.tokens.is_empty() {
        return Err(p.error("empty state expression"));
    }
    let e = p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(p.error(&format!("unexpected '{}'", p.tokens[p.pos].1)));
    }
    Ok(e)
}

struct Parser {
    tokens: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.len, |t| t.0)
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.offset(),
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).map(|t| t.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<StateExpr> {
        let mut acc = self.term()?;
        loop {
            let sign = if self.eat('+') {
                Rational::one()
            } else if self.eat('-') {
                -Rational::one()
            } else {
                return Ok(acc);
            };
            let t = self.term()?;
            acc = acc.add(t, &sign);
        }
    }

    fn term(&mut self) -> Result<StateExpr> {
        let negate = self.eat('-');
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.mul(&self.factor()?);
        }
        if negate {
            acc = StateExpr {
                components: BTreeMap::new(),
            }
            .add(acc, &-Rational::one());
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<StateExpr> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = self.natural()?;
        let e = u32::try_from(e).map_err(|_| self.error("exponent too large"))?;
        let mut out = StateExpr::scalar(Rational::one());
        for _ in 0..e {
            out = out.mul(&base);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<StateExpr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('e') => {
                self.pos += 1;
                self.expect('[')?;
                let mut coords = vec![self.integer()?];
                while self.eat(',') {
                    coords.push(self.integer()?);
                }
                self.expect(']')?;
                Ok(StateExpr::single(coords, IndexedPoly::one()))
            }
            Some('h') => {
                self.pos += 1;
                let start = self.offset();
                let dir = self.natural()?;
                if dir == 0 {
                    return Err(Error::Parse {
                        offset: start,
                        message: "directions are numbered from 1".to_string(),
                    });
                }
                self.expect('[')?;
                self.expect('-')?;
                let depth = self.natural()?;
                if depth == 0 {
                    return Err(self.error("mode depth must be at least 1"));
                }
                self.expect(']')?;
                let var = HVar::new(
                    usize::try_from(dir - 1).map_err(|_| self.error("direction too large"))?,
                    u32::try_from(depth).map_err(|_| self.error("depth too large"))?,
                );
                Ok(StateExpr::single(Vec::new(), IndexedPoly::var(var)))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.natural()?;
                let den = if self.eat('/') { self.natural()? } else { 1 };
                if den == 0 {
                    return Err(self.error("division by zero"));
                }
                Ok(StateExpr::scalar(Rational::new(
                    BigInt::from(num),
                    BigInt::from(den),
                )))
            }
            Some(c) => Err(self.error(&format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn natural(&mut self) -> Result<u64> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(c.to_digit(10).unwrap_or(0) as u64))
                .ok_or_else(|| self.error("number too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        Ok(value)
    }

    fn integer(&mut self) -> Result<i64> {
        let negative = self.eat('-');
        let n = i64::try_from(self.natural()?).map_err(|_| self.error("number too large"))?;
        Ok(if negative { -n } else { n })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn h(dir: usize, depth: u32) -> IndexedPoly {
        IndexedPoly::var(HVar::new(dir, depth))
    }

    #[test]
    fn parses_products_and_powers() {
        let s = parse_state("e[1,0] * h1[-1]^2")
            .unwrap()
            .resolve(2)
            .unwrap();
        assert_eq!(s, vec![(LatticeVector(vec![1, 0]), h(0, 1).pow(2))]);
    }

    #[test]
    fn whitespace_and_rationals() {
        let a = parse_state(" 1/2 * h2[ - 2 ] + 1/2*h2[-1]^2 ").unwrap();
        let b = parse_state("1/2*h2[-2]+1/2*h2[-1]^2").unwrap();
        assert_eq!(a, b);
        let r = a.resolve(2).unwrap();
        assert_eq!(
            r[0].1,
            (&h(1, 2) + &h(1, 1).pow(2)).scale(&Rational::new(1.into(), 2.into()))
        );
    }

    #[test]
    fn lattice_factors_multiply() {
        let s = parse_state("e[1]^2*e[-1]*h1[-1] - e[1]*h1[-1]").unwrap();
        assert!(s.resolve(1).unwrap().is_empty());
        let t = parse_state("(e[1] + e[-1])*2").unwrap().resolve(1).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].1, IndexedPoly::constant(int(2)));
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_state("e[1,0]*h0[-1]") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 8),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_state("e[1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_state("h1[1]"), Err(Error::Parse { .. })));
        assert!(matches!(parse_state("1/0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_state(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_state("e[1]*h3[-1]").unwrap().resolve(2),
            Err(Error::RankMismatch { .. })
        ));
        assert!(matches!(
            parse_state("h3[-1]").unwrap().resolve(2),
            Err(Error::DirectionOutOfRange { .. })
        ));
    }
}
