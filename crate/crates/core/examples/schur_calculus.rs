// Elementary Schur polynomials in the oscillator modes and the generalised
// sum that continues `sum_{k=1}^n p(k)` to negative `n`.

use kstructure::arith::{frac, int};
use kstructure::lattice::RootSystem;
use kstructure::poly::{gsum, gsum_polynomial, schur, schur_table, IntPolynomial};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (n, s) in schur_table(4).iter().enumerate() {
        println!("S_{n} = {s}");
    }

    let rs = RootSystem::parse("A2")?;
    let alpha = rs.simple_root(1);
    println!("S_2 along alpha_2 = {}", schur(2, &alpha));
    if !schur(-3, &alpha).is_zero() {
        return Err("negative Schur polynomials vanish".into());
    }

    let square = IntPolynomial::new(vec![int(0), int(0), int(1)]);
    let closed = gsum_polynomial(&square);
    println!("sum of squares up to n = {closed}");
    println!("continued to n = -2: {}", gsum(&square, -2));
    if closed.eval_int(3) != int(14) || gsum(&square, -2) != int(-1) {
        return Err("generalised sum disagrees with direct summation".into());
    }
    if closed.eval_int(1) != int(1) || closed.eval(&frac(1, 2)) != frac(1, 4) {
        return Err("closed form is not n(n+1)(2n+1)/6".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
