// Dimensions along the filtration `W_0 > W_1 > ...` of kernels of the
// projections, with the image rank measured directly for small rank.

use kstructure::lattice::RootSystem;
use kstructure::verq::cosocle_report;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["A1", "A2", "E8"] {
        let rs = RootSystem::parse(name)?;
        println!("{name}:");
        for row in cosocle_report(&rs, 2) {
            let measured = row
                .measured_image_rank
                .map_or("-".to_string(), |m| m.to_string());
            println!(
                "  N={} dim Ver_Q={} quotient={} measured rank={measured}",
                row.level, row.verq_dim, row.quotient_dim
            );
            if row.measured_image_rank.is_some_and(|m| m != row.verq_dim) {
                return Err("projection is not onto".into());
            }
        }
    }
    let e8 = cosocle_report(&RootSystem::parse("E8")?, 1);
    if e8[0].quotient_dim != 256 || e8[1].quotient_dim != 4096 {
        return Err("E8 quotients should be 256 and 4096".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
