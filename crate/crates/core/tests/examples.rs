mod exact_arithmetic {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/exact_arithmetic.rs"));
}

#[test]
fn exact_arithmetic_example_runs() {
    exact_arithmetic::main();
}

mod finite_fields {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/finite_fields.rs"));
}

#[test]
fn finite_fields_example_runs() {
    finite_fields::main();
}

mod polynomial_factoring {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/polynomial_factoring.rs"));
}

#[test]
fn polynomial_factoring_example_runs() {
    polynomial_factoring::main();
}

mod psl2_census {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/psl2_census.rs"));
}

#[test]
fn psl2_census_example_runs() {
    psl2_census::main();
}

mod commutant {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/commutant.rs"));
}

#[test]
fn commutant_example_runs() {
    commutant::main();
}

mod galois_evidence {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/galois_evidence.rs"));
}

#[test]
fn galois_evidence_example_runs() {
    galois_evidence::main();
}

mod goursat {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/goursat.rs"));
}

#[test]
fn goursat_example_runs() {
    goursat::main();
}

mod quadratic_orders {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/quadratic_orders.rs"));
}

#[test]
fn quadratic_orders_example_runs() {
    quadratic_orders::main();
}

mod j_invariants {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/j_invariants.rs"));
}

#[test]
fn j_invariants_example_runs() {
    j_invariants::main();
}

mod family_pipeline {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/family_pipeline.rs"));
}

#[test]
fn family_pipeline_example_runs() {
    family_pipeline::main();
}

mod exceptional_groups {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/exceptional_groups.rs"));
}

#[test]
fn exceptional_groups_example_runs() {
    exceptional_groups::main();
}
