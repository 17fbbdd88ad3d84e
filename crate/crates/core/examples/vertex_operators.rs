// The basic representation in its vertex-operator form: act with affine
// generators on `e^gamma (x) f` and count states level by level.

use kstructure::algebra::{bracket_affine, AffineElement, FiniteElement};
use kstructure::basicrep::{AffineGenerator, BasicRep, NO_CUTOFF};
use kstructure::lattice::{LatticeVector, RootSystem};
use kstructure::poly::{HVar, IndexedPoly};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let e8 = RootSystem::parse("E8")?;
    let rep = BasicRep::new(&e8, 2);
    let dims: Vec<u64> = (0..=2).map(|l| rep.graded_dimension(l)).collect();
    println!("E8 basic representation, levels 0..2: {dims:?}");
    if dims != [1, 248, 4124] {
        return Err("E8 graded dimensions should be 1, 248, 4124".into());
    }

    let a1 = RootSystem::parse("A1")?;
    let rep = BasicRep::new(&a1, NO_CUTOFF);
    let alpha = a1.simple_root(0);
    let vacuum = rep.maximal_state(&LatticeVector::zero(1))?;
    let v = rep.act(
        &AffineGenerator::E {
            root: alpha.clone(),
            mode: -1,
        },
        &vacuum,
    );
    println!("E^alpha_(-1) |0> = {v}");
    let w = rep.act(
        &AffineGenerator::H {
            direction: alpha.clone(),
            mode: -1,
        },
        &v,
    );
    println!("H^alpha_(-1) E^alpha_(-1) |0> = {w}");
    println!("d-eigenvalue: {}", rep.act(&AffineGenerator::D, &w));

    // the action respects the bracket: [E_1, E^{-alpha}_{-2}] acting on a level-two state
    let state = rep.state(&alpha, &IndexedPoly::var(HVar::new(0, 1)))?;
    let x = AffineElement::loop_element(FiniteElement::root_vector(1, &alpha), 1);
    let y = AffineElement::loop_element(FiniteElement::root_vector(1, &-&alpha), -2);
    let lhs = rep.act_affine(&bracket_affine(&a1, &x, &y), &state);
    let rhs = rep
        .act_affine(&x, &rep.act_affine(&y, &state))
        .sub(&rep.act_affine(&y, &rep.act_affine(&x, &state)));
    println!("[x,y] v = {lhs}");
    if lhs != rhs {
        return Err("the vertex operators do not represent the affine bracket".into());
    }
    if lhs.is_zero() {
        return Err("expected a nonzero commutator".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
