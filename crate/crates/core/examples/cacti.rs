// Pinching traces and operadic composition of cacti.

use loopforge::cacti::{CactusJson, TraceArc};
use loopforge::exactq::format_rational;

const FOUR: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/cactus_four_lobes.json"));
const TWO: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/cactus_two_lobes.json"));

fn show(arcs: &[TraceArc]) -> String {
    arcs.iter()
        .map(|a| format!("{}[{}+{}]", a.lobe, format_rational(&a.start), format_rational(&a.length)))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let four = CactusJson::parse(FOUR)?;
    let two = CactusJson::parse(TWO)?;
    println!("trace: {}", show(&four.pinching_trace().arcs));

    let c = four.compose(3, &two)?;
    println!("after ∘_3: {}", show(&c.pinching_trace().arcs));
    println!("total circumference {}", format_rational(&c.total_circumference()));
    println!("{}", c.canonical_form().to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
