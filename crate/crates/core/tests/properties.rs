use std::collections::BTreeMap;

use proptest::prelude::*;

use kstructure::arith::{int, Rational};
use kstructure::cli::parse_state;
use kstructure::compact::{bracket_compact, KElement};
use kstructure::lattice::{LatticeVector, RootSystem};
use kstructure::parabolic::{bracket_parabolic, rho, QVar, UQElement};
use kstructure::poly::{gsum, HVar, IndexedPoly, IntPolynomial, Monomial, Poly};
use kstructure::verq::VerQModule;

fn algebra(name: &str) -> RootSystem {
    RootSystem::parse(name).unwrap()
}

fn e8_vector() -> impl Strategy<Value = LatticeVector> {
    prop::collection::vec(-3i64..=3, 8).prop_map(LatticeVector)
}

fn small_poly() -> impl Strategy<Value = Poly<u32>> {
    prop::collection::vec(
        (prop::collection::vec((1u32..=3, 1u32..=2), 0..3), -5i64..=5),
        0..4,
    )
    .prop_map(|terms| {
        let mut p = Poly::zero();
        for (factors, c) in terms {
            p.add_term(Monomial::from_factors(factors), int(c));
        }
        p
    })
}

fn compact_element(rs: &RootSystem) -> impl Strategy<Value = KElement> {
    let roots = rs.roots().to_vec();
    let rank = rs.rank();
    prop::collection::vec((0..roots.len() + rank, -3i64..=3, -3i64..=3), 1..4).prop_map(
        move |parts| {
            let mut x = KElement::zero();
            for (g, n, c) in parts {
                let gen = if g < roots.len() {
                    KElement::ec(&roots[g], n)
                } else {
                    KElement::hc(g - roots.len(), n)
                };
                x.add_scaled(&gen, &int(c));
            }
            x
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn cocycle_is_bimultiplicative(a in e8_vector(), b in e8_vector(), c in e8_vector()) {
        let rs = algebra("E8");
        let sum = LatticeVector(a.coords().iter().zip(c.coords()).map(|(x, y)| x + y).collect());
        prop_assert_eq!(rs.cocycle(&sum, &b), rs.cocycle(&a, &b) * rs.cocycle(&c, &b));
        prop_assert_eq!(rs.cocycle(&b, &sum), rs.cocycle(&b, &a) * rs.cocycle(&b, &c));
        prop_assert_eq!(rs.cocycle(&a, &b) * rs.cocycle(&b, &a), if rs.inner(&a, &b) % 2 == 0 { 1 } else { -1 });
    }

    #[test]
    fn gsum_is_a_discrete_antiderivative(coeffs in prop::collection::vec(-6i64..=6, 0..5), n in -20i64..=20) {
        let p = IntPolynomial::new(coeffs.into_iter().map(int).collect());
        prop_assert_eq!(gsum(&p, n) - gsum(&p, n - 1), p.eval_int(n));
        prop_assert_eq!(gsum(&p, 0), int(0));
    }

    #[test]
    fn polynomial_ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn canonicalization_ignores_direction_order(
        coords in prop::collection::vec(-4i64..=4, 2),
        c in -3i64..=3,
        swap in any::<bool>(),
    ) {
        let rs = algebra("A2");
        let module = VerQModule::build(&rs, 2);
        let gamma = LatticeVector(coords);
        let u = UQElement::var(2, QVar { dir: 1, level: 1, parity: 0 }).scale(&int(c)).add(&UQElement::one(2));
        let order: &[usize] = if swap { &[1, 0] } else { &[0, 1] };
        prop_assert_eq!(module.canonicalize_in_order(&gamma, &u, order), module.canonicalize(&gamma, &u));
    }

    #[test]
    fn rho_preserves_brackets(x in compact_element(&algebra("A2")), y in compact_element(&algebra("A2")), cap in 0u32..=3) {
        let rs = algebra("A2");
        let lhs = rho(&rs, cap, &bracket_compact(&rs, &x, &y));
        let rhs = bracket_parabolic(&rs, &rho(&rs, cap, &x), &rho(&rs, cap, &y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn state_parser_matches_direct_construction(
        terms in prop::collection::vec((1i64..=9, -2i64..=2, -2i64..=2, 1usize..=2, 1u32..=3, 0u32..=3, any::<bool>()), 1..5),
        spaced in any::<bool>(),
    ) {
        let mut expected: BTreeMap<Vec<i64>, IndexedPoly> = BTreeMap::new();
        let mut text = String::new();
        for (i, (c, x, y, dir, depth, power, negative)) in terms.into_iter().enumerate() {
            let sign = if negative { "-" } else if i > 0 { "+" } else { "" };
            let sep = if spaced { " " } else { "" };
            text.push_str(&format!("{sep}{sign}{sep}{c}{sep}*{sep}e[{x},{sep}{y}]*h{dir}[-{depth}]^{power}"));
            let m = Monomial::from_factors([(HVar::new(dir - 1, depth), power)]);
            let coeff = if negative { int(-c) } else { int(c) };
            let entry = expected.entry(vec![x, y]).or_insert_with(IndexedPoly::zero);
            entry.add_term(m, coeff);
        }
        expected.retain(|_, f| !f.is_zero());
        let parsed = parse_state(&text).unwrap();
        prop_assert_eq!(&parsed.components, &expected);
        let resolved = parsed.resolve(2).unwrap();
        let total: Rational = resolved.iter().flat_map(|(_, f)| f.terms().map(|(_, c)| c.clone())).sum();
        let direct: Rational = expected.values().flat_map(|f| f.terms().map(|(_, c)| c.clone())).sum();
        prop_assert_eq!(total, direct);
    }
}
