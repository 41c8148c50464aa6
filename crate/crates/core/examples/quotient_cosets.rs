// L-subgyrogroups of the order-8 gyrogroup, their left cosets and the
// `q` map separation test.
//
// cargo run --example quotient_cosets

use gyrometric::prelude::*;

const G8: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/g8.json"));

pub fn run_example() -> Result<()> {
    let g8 = make_table_gyrogroup(CayleyTable::from_json(G8)?)?;
    let exhaustive = Sampling::new(0, 0);

    let mut found = 0;
    for mask in 1u32..256 {
        let members: Vec<usize> = (0..8).filter(|i| mask >> i & 1 == 1).collect();
        let h = SubgyroCandidate::from_elements(members.clone())?;
        if !is_subgyrogroup(&g8, &h).passed || !is_l_subgyrogroup(&g8, &h, &exhaustive).passed {
            continue;
        }
        let cosets = left_cosets(&g8, &h)?;
        println!("H = {members:?}: {}", cosets.to_json(&g8));
        found += 1;
    }
    println!("{found} L-subgyrogroups");

    let h = SubgyroCandidate::from_labels(&g8, &["0", "7"])?;
    let cosets = left_cosets(&g8, &h)?;
    println!("pi(5) = block {}", quotient_map(&cosets, 5)?);

    let off_diagonal: Vec<(usize, usize)> = (0..8)
        .flat_map(|x| (0..8).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let image = q_image(&g8, &off_diagonal)?;
    println!("q(off-diagonal) contains 0: {}", image.contains_identity);
    assert!(!image.contains_identity);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("quotient example");
}
