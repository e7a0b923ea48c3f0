// Boundary cycles, genus and chord-diagram reduction.

use loopforge::fatgraph::{ChordDiagram, FatGraphJson};

const GAMMA2: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/gamma2.json"));
const FIGURE8: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/figure8.json"));

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = FatGraphJson::parse(GAMMA2)?;
    let cycles = g.boundary_cycles();
    let (genus, n) = g.genus()?;
    println!("gamma2: {}", g.format_cycles(&cycles));
    println!("  chi = {}, genus {genus}, {n} boundary components", g.euler_characteristic());

    // both loops of the figure eight as incoming circles
    let f = FatGraphJson::parse(FIGURE8)?;
    let d = ChordDiagram::validate(&f, &[0, 1])?;
    let (g, p, q) = d.diagram_type();
    println!("figure eight: chord diagram of type ({g}; {p}, {q})");
    let reduced = d.reduce()?;
    println!("  reduced: {}", reduced.format_cycles(&reduced.boundary_cycles()));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
