mod mobius_axioms {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/mobius_axioms.rs"
    ));
}
mod einstein_velocity {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/einstein_velocity.rs"
    ));
}
mod finite_table {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/finite_table.rs"
    ));
}
mod prenorm_metric {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/prenorm_metric.rs"
    ));
}
mod quotient_cosets {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/quotient_cosets.rs"
    ));
}

#[test]
fn mobius_example_runs() {
    mobius_axioms::run_example().expect("mobius example should run");
}

#[test]
fn einstein_example_runs() {
    einstein_velocity::run_example().expect("einstein example should run");
}

#[test]
fn table_example_runs() {
    finite_table::run_example().expect("table example should run");
}

#[test]
fn prenorm_example_runs() {
    prenorm_metric::run_example().expect("prenorm example should run");
}

#[test]
fn quotient_example_runs() {
    quotient_cosets::run_example().expect("quotient example should run");
}
