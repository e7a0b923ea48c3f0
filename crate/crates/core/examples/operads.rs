// Free operad on planar trees and a relation check in an endomorphism operad.

use loopforge::io::StructureConstants;
use loopforge::operad::{catalan, check_algebra, planar_binary_trees, EndomorphismAssignment, OperadElement, Preset};

const SL2: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/sl2.json"));

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = OperadElement::parse("dot(leaf1, leaf2) - dot(leaf2, leaf1)")?;
    let g = OperadElement::parse("dot(leaf1, leaf2)")?;
    println!("f ∘_2 g = {}", f.compose_i(2, &g)?);
    println!("(f ∘_2 g)·(1 3 2) = {}", f.compose_i(2, &g)?.sigma_action(&[1, 3, 2])?);

    for n in 1..=6 {
        println!("{n} leaves: {} planar binary trees (Catalan {})", planar_binary_trees(n, "dot").len(), catalan(n as u64 - 1));
    }

    let sl2 = EndomorphismAssignment::from_constants(&StructureConstants::parse(SL2)?)?;
    let report = check_algebra(Preset::Lie, &sl2)?;
    for c in &report.clauses {
        println!("sl2 {}: {}", c.name, if c.passed { "holds" } else { "fails" });
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
