// BV checks on a weighted exterior algebra, in both sign conventions.

use loopforge::gbv::{Convention, GradedOperatorAlgebra, DELTA};
use loopforge::io::StructureConstants;

const WEIGHTED: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/bv_weighted.json"));
const SQUARE: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/bv_square_nonzero.json"));

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = GradedOperatorAlgebra::from_constants(&StructureConstants::parse(WEIGHTED)?)?;
    for c in Convention::ALL {
        let r = a.check_bv(DELTA, c)?;
        println!("{c:?}: {} of {} clauses pass", r.clauses.iter().filter(|c| c.passed).count(), r.clauses.len());
    }
    let b = a.derive_bracket(DELTA)?;
    println!("derived bracket is Gerstenhaber: {}", a.check_gerstenhaber(&b, 1)?.passed());

    let bad = GradedOperatorAlgebra::from_constants(&StructureConstants::parse(SQUARE)?)?;
    let r = bad.check_bv(DELTA, Convention::Gbv)?;
    if let Some(f) = r.first_failure() {
        println!("first failure: {} at {:?}", f.name, f.witness);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
