// The compact subalgebra fixed by the Chevalley involution: its bracket,
// its embedding into the affine algebra, and its action on basic states.

use kstructure::algebra::bracket_affine;
use kstructure::arith::int;
use kstructure::basicrep::{BasicRep, NO_CUTOFF};
use kstructure::compact::{
    bracket_compact, chevalley_tau_element, commute_through_heisenberg, hc_linear, KElement,
};
use kstructure::lattice::RootSystem;
use kstructure::poly::{HVar, IndexedPoly};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rs = RootSystem::parse("A2")?;
    let a = rs.simple_root(0);
    let b = rs.simple_root(1);

    let x = KElement::ec(&a, 2);
    let y = KElement::ec(&b, -1);
    let xy = bracket_compact(&rs, &x, &y);
    println!("[{x}, {y}] = {xy}");
    let same = bracket_compact(&rs, &x, &x);
    println!("[{x}, {x}] = {same}");
    let aa = bracket_compact(&rs, &KElement::ec(&a, 2), &KElement::ec(&a, 1));
    println!("[Ec^a_2, Ec^a_1] = {aa}");

    let affine = bracket_affine(&rs, &x.to_affine(&rs), &y.to_affine(&rs));
    if affine != xy.to_affine(&rs) || chevalley_tau_element(&affine) != affine {
        return Err("compact bracket does not match the affine one".into());
    }

    let rep = BasicRep::new(&rs, NO_CUTOFF);
    let v = rep.state(&a, &IndexedPoly::var(HVar::new(1, 1)))?;
    let lhs = rep.act_compact(&xy, &v);
    let rhs = rep
        .act_compact(&x, &rep.act_compact(&y, &v))
        .sub(&rep.act_compact(&y, &rep.act_compact(&x, &v)));
    println!("[x,y] on {v} has {} terms", lhs.term_count());
    if lhs != rhs {
        return Err("action is not a representation".into());
    }

    // Ec_m Hc^a_1 = Hc^a_1 Ec_m - Ec_{m+1} + Ec_{m-1}
    let u = hc_linear(&[int(1), int(0)], 1);
    for (mode, coeff) in commute_through_heisenberg(&rs, &a, 0, &u) {
        println!("  Ec^a_{mode} with coefficient {coeff}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
