// For E8 the graded pieces of `Ver_Q(N)` are compared with tensor products
// of so(16) representations.

use kstructure::lattice::RootSystem;
use kstructure::verq::{tensor_audit_so16, VerQModule};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let e8 = RootSystem::parse("E8")?;
    for row in tensor_audit_so16(&e8, 2)? {
        println!(
            "level {}: {} vs {} = {} -> {}",
            row.level,
            row.verq_graded_dim,
            row.so16_decomposition,
            row.so16_dim,
            if row.matches { "ok" } else { "MISMATCH" }
        );
        if !row.matches {
            return Err("so(16) audit failed".into());
        }
    }
    let dims = VerQModule::build(&e8, 1).graded_dims();
    println!("Ver_Q(1) for E8 built explicitly: {dims:?}");
    if tensor_audit_so16(&RootSystem::parse("D4")?, 1).is_ok() {
        return Err("the audit is only defined for E8".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
