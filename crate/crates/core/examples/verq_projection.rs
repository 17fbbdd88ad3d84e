// Project basic-representation states onto `Ver_Q(N)` and check that the
// projection intertwines the compact action.

use kstructure::basicrep::{BasicRep, NO_CUTOFF};
use kstructure::cli::parse_state;
use kstructure::compact::KElement;
use kstructure::lattice::RootSystem;
use kstructure::poly::{HVar, IndexedPoly};
use kstructure::verq::VerQModule;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rs = RootSystem::parse("A2")?;
    let rep = BasicRep::new(&rs, NO_CUTOFF);
    let module = VerQModule::build(&rs, 2);
    println!(
        "Ver_Q(2) for A2: dim {} graded {:?}",
        module.dim(),
        module.graded_dims()
    );

    let mut v = rep.zero();
    for (gamma, f) in parse_state("e[1,0]*h1[-1]^2 + 1/2*e[0,1]*h2[-2]")?.resolve(rs.rank())? {
        v = v.add(&rep.state(&gamma, &f)?);
    }
    let image = module.project(&v);
    println!("G_2({v}) = {image}");

    for x in [
        KElement::ec(&rs.simple_root(1), 1),
        KElement::hc(0, 2),
        KElement::ec(&rs.roots()[0], -3),
    ] {
        let lhs = module.project(&rep.act_compact(&x, &v));
        let rhs = module.act_compact(&x, &image);
        if lhs != rhs {
            return Err(format!("G_2 is not equivariant for {x}").into());
        }
        println!("G_2({x} v) = {x} G_2(v) holds");
    }

    let odd = rep.state(&rs.simple_root(0), &IndexedPoly::var(HVar::new(1, 1)))?;
    println!(
        "odd-degree state in W_0: {}",
        VerQModule::build(&rs, 0).in_kernel(&odd)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
