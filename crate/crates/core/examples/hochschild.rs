// Hochschild homology and cohomology of the dual numbers.

use loopforge::exactq::format_rational;
use loopforge::hochschild::{cup_table, hochschild_cohomology, hochschild_homology, DGAlgebra, DGBimodule};
use loopforge::io::StructureConstants;

const DUAL_NUMBERS: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/dual_numbers.json"));

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = DGAlgebra::from_constants(&StructureConstants::parse(DUAL_NUMBERS)?)?;
    let m = DGBimodule::regular(&a);
    let hh = hochschild_homology(&a, &m, 8, 0..=4)?;
    println!("HH_0..4 = {:?} (stable: {})", hh.dims_in_order(), hh.stable);
    let hc = hochschild_cohomology(&a, &m, 8, 0..=4)?;
    println!("HH^0..4 = {:?} (stable: {})", hc.dims_in_order(), hc.stable);

    let t = cup_table(&a, 8, 2, 2)?;
    for (i, row) in t.entries.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let shown: Vec<String> = v.iter().map(format_rational).collect();
            println!("HH^2[{i}] ∪ HH^2[{j}] = ({})", shown.join(", "));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
