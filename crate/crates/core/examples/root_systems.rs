// Build the simply-laced root systems, count roots and short lattice
// vectors, and look at the sign cocycle.

use kstructure::lattice::RootSystem;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (name, expected) in [
        ("A1", 2),
        ("A2", 6),
        ("D4", 24),
        ("E6", 72),
        ("E7", 126),
        ("E8", 240),
    ] {
        let rs = RootSystem::parse(name)?;
        let roots = rs.roots().len();
        println!("{name}: rank {} with {roots} roots", rs.rank());
        if roots != expected {
            return Err(format!("{name}: expected {expected} roots, found {roots}").into());
        }
    }

    let e8 = RootSystem::parse("E8")?;
    let norm4 = e8
        .enumerate_lattice_vectors(4)
        .iter()
        .filter(|v| e8.norm(v) == 4)
        .count();
    println!("E8 vectors of norm 4: {norm4}");
    if norm4 != 2160 {
        return Err("wrong E8 norm-4 shell".into());
    }

    // eps(a, a) = (-1)^{(a|a)/2}, so every root pairs with itself to -1
    let a2 = RootSystem::parse("A2")?;
    for a in a2.roots() {
        for b in a2.roots() {
            print!("{:>3}", a2.cocycle(a, b));
        }
        println!();
        if a2.cocycle(a, a) != -1 {
            return Err(format!("eps({a},{a}) should be -1").into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
