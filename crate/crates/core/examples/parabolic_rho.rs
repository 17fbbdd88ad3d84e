// The truncated homomorphism `rho^N` from the compact subalgebra into the
// double parabolic algebra, and the coefficients behind it.

use kstructure::arith::fmt_rational;
use kstructure::compact::{bracket_compact, KElement};
use kstructure::lattice::RootSystem;
use kstructure::parabolic::{bracket_parabolic, rho, rho_coefficient, rho_coefficient_series};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("a^(n)_k for k = 0..6:");
    for n in -3..=3 {
        let row: Vec<String> = (0..=6)
            .map(|k| fmt_rational(&rho_coefficient(n, k)))
            .collect();
        println!("  n={n:>2}: {}", row.join(" "));
        if (0..=6).any(|k| rho_coefficient(n, k) != rho_coefficient_series(n, k)) {
            return Err("binomial coefficients disagree with the power series".into());
        }
    }

    let rs = RootSystem::parse("A2")?;
    let a = rs.simple_root(0);
    let b = rs.simple_root(1);
    let cap = 3;
    for n in [0, 1, -1, 2] {
        println!(
            "rho^{cap}(Ec^a_{n}) = {}",
            rho(&rs, cap, &KElement::ec(&a, n))
        );
    }
    println!("rho^{cap}(Hc^1_1) = {}", rho(&rs, cap, &KElement::hc(0, 1)));

    let x = KElement::ec(&a, 2);
    let y = KElement::ec(&b, -3);
    let lhs = rho(&rs, cap, &bracket_compact(&rs, &x, &y));
    let rhs = bracket_parabolic(&rs, &rho(&rs, cap, &x), &rho(&rs, cap, &y));
    if lhs != rhs {
        return Err("rho is not a homomorphism".into());
    }
    println!("rho([x,y]) = [rho x, rho y] = {lhs}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
