// A non-associative gyrogroup of order 8 read from a Cayley table, side by
// side with the group adapter over Z₄.
//
// cargo run --example finite_table

use gyrometric::prelude::*;

const G8: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/g8.json"));

pub fn run_example() -> Result<()> {
    let table = CayleyTable::from_json(G8)?;
    let report = validate_table(&table)?;
    for c in &report.checks {
        println!(
            "{:<30} {}",
            c.property,
            if c.passed { "ok" } else { "FAILED" }
        );
    }
    let g8 = make_table_gyrogroup(table)?;

    let nontrivial = (0..8)
        .flat_map(|a| (0..8).flat_map(move |b| (0..8).map(move |z| (a, b, z))))
        .filter(|&(a, b, z)| g8.gyration(&a, &b, &z) != z)
        .count();
    println!("gyration values differing from the identity map: {nontrivial}");
    println!(
        "gyr[1, 2] = {:?}",
        (0..8).map(|z| g8.gyration(&1, &2, &z)).collect::<Vec<_>>()
    );

    let z4 = make_group_adapter(cyclic_group(4))?;
    println!("Z4: 1 ⊕ 3 = {}, ⊖1 = {}", z4.op(&1, &3)?, z4.inv(&1)?);

    let broken = CayleyTable::from_json(include_str!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/fixtures/broken.json"
    )))?;
    match make_table_gyrogroup(broken) {
        Err(e) => println!("broken table rejected: {e}"),
        Ok(_) => unreachable!("the order-5 loop is not a gyrogroup"),
    }
    assert!(nontrivial > 0);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("table example");
}
