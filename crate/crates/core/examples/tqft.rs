// Cobordism words evaluated in a Frobenius algebra, and Dijkgraaf-Witten
// invariants against bundle counts.

use loopforge::exactq::format_rational;
use loopforge::frob2tqft::{dw_center_algebra, dw_partition_brute, CobordismWord, FiniteGroup, FrobeniusAlgebra};
use loopforge::io::StructureConstants;

const DUAL_NUMBERS: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/dual_numbers.json"));

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = FrobeniusAlgebra::from_constants(&StructureConstants::parse(DUAL_NUMBERS)?)?;
    let w = CobordismWord::parse_layers(&[&["pants"], &["copants"]])?;
    println!("{w}:");
    for row in f.eval(&w).to_rows() {
        let shown: Vec<String> = row.iter().map(format_rational).collect();
        println!("  [{}]", shown.join(" "));
    }
    for g in 0..4 {
        println!("closed genus {g}: {}", format_rational(&f.closed_surface_invariant(g)));
    }

    for name in ["z2", "s3"] {
        let group = FiniteGroup::builtin(name)?;
        let center = dw_center_algebra(&group);
        for genus in 0..=2 {
            let z = center.closed_surface_invariant(genus);
            let count = dw_partition_brute(&group, genus)?;
            println!("{name} genus {genus}: {} (bundles: {})", format_rational(&z), format_rational(&count));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
