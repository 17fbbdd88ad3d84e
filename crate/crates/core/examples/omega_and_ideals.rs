// Ideals in the kernel of `rho^N`, the element `omega`, and conjugation by
// it. For odd pairings the shift in the loop index comes with an exchange
// of the r-parity.

use kstructure::compact::KElement;
use kstructure::lattice::RootSystem;
use kstructure::parabolic::{conjugate_by_omega, ideal_witness, ideal_witness_check, omega, rho};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rs = RootSystem::parse("A2")?;
    let a = rs.simple_root(0);
    let witness = ideal_witness(&a, 2, 1, 3, -5, false);
    println!("witness = {witness}");
    if !ideal_witness_check(&rs, &a, 2, 1, 3, -5) {
        return Err("rho^2 should kill the witness".into());
    }

    let cap = 2;
    println!("omega_a at N={cap}: {}", omega(&a, cap));

    for beta in [a.clone(), rs.simple_root(1)] {
        let s = rs.inner(&a, &beta);
        let conj = conjugate_by_omega(&rs, &a, cap, &rho(&rs, cap, &KElement::ec(&beta, 0)));
        let shifted = rho(&rs, cap, &KElement::ec(&beta, -s));
        let matches = if s % 2 == 0 {
            conj == shifted
        } else {
            conj == shifted.flip_parity()
        };
        println!("(a|b) = {s}: conjugated rho(Ec^b_0) = {conj}");
        println!(
            "  literal shift holds: {}, with parity exchange: {}",
            conj == shifted,
            conj == shifted.flip_parity()
        );
        if !matches {
            return Err("conjugation by omega does not shift the loop index".into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
