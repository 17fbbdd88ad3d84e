//! Every example under `examples/` is compiled into this test and run.

mod root_systems {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/root_systems.rs"
    ));
}

#[test]
fn root_systems_runs() {
    root_systems::run_example().expect("root_systems example should run");
}

mod schur_calculus {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/schur_calculus.rs"
    ));
}

#[test]
fn schur_calculus_runs() {
    schur_calculus::run_example().expect("schur_calculus example should run");
}

mod vertex_operators {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/vertex_operators.rs"
    ));
}

#[test]
fn vertex_operators_runs() {
    vertex_operators::run_example().expect("vertex_operators example should run");
}

mod compact_action {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/compact_action.rs"
    ));
}

#[test]
fn compact_action_runs() {
    compact_action::run_example().expect("compact_action example should run");
}

mod generating_elements {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/generating_elements.rs"
    ));
}

#[test]
fn generating_elements_runs() {
    generating_elements::run_example().expect("generating_elements example should run");
}

mod parabolic_rho {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/parabolic_rho.rs"
    ));
}

#[test]
fn parabolic_rho_runs() {
    parabolic_rho::run_example().expect("parabolic_rho example should run");
}

mod omega_and_ideals {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/omega_and_ideals.rs"
    ));
}

#[test]
fn omega_and_ideals_runs() {
    omega_and_ideals::run_example().expect("omega_and_ideals example should run");
}

mod verq_projection {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/verq_projection.rs"
    ));
}

#[test]
fn verq_projection_runs() {
    verq_projection::run_example().expect("verq_projection example should run");
}

mod cosocle_filtration {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/cosocle_filtration.rs"
    ));
}

#[test]
fn cosocle_filtration_runs() {
    cosocle_filtration::run_example().expect("cosocle_filtration example should run");
}

mod e8_so16_audit {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/e8_so16_audit.rs"
    ));
}

#[test]
fn e8_so16_audit_runs() {
    e8_so16_audit::run_example().expect("e8_so16_audit example should run");
}
