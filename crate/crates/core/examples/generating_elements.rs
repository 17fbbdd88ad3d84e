// Generating elements: for each state `e^gamma (x) f` the unique element
// `F` of the compact Heisenberg algebra with `F e^gamma = e^gamma (x) f`.
// The exact linear solve is compared with the closed form.

use kstructure::arith::fmt_rational;
use kstructure::compact::{
    closed_form_coefficient, generating_element, generating_element_oracle, h_schur,
    uncorrected_closed_form_coefficient,
};
use kstructure::lattice::RootSystem;
use kstructure::poly::{schur, HVar, IndexedPoly};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rs = RootSystem::parse("A2")?;
    let h11 = IndexedPoly::var(HVar::new(0, 1));
    let h21 = IndexedPoly::var(HVar::new(1, 1));
    let h12 = IndexedPoly::var(HVar::new(0, 2));
    for f in [&h11 * &h21, h11.pow(2), &h12 + &h11.pow(3)] {
        let oracle = generating_element_oracle(&rs, &f)?;
        let closed = generating_element(&rs, &f, None);
        println!("F[{f}] = {oracle}");
        if oracle != closed {
            return Err(format!("closed form disagrees for {f}").into());
        }
    }

    let alpha = rs.simple_root(0);
    for n in 0..=3 {
        let fh = generating_element_oracle(&rs, &schur(n, &alpha))?;
        println!("S^H_{n} = {fh}");
        if fh != h_schur(n, &alpha) {
            return Err("H-Schur polynomial is not the generating element of S_n".into());
        }
    }

    println!("coefficient table (l = 1): corrected vs uncorrected");
    for n in 0..=4 {
        for k in (n % 2..=n).step_by(2) {
            println!(
                "  n={n} k={k}: {} vs {}",
                fmt_rational(&closed_form_coefficient(1, n, k)),
                fmt_rational(&uncorrected_closed_form_coefficient(1, n, k))
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
