// Rank, kernel and homology over ℚ.

use loopforge::exactq::{format_rational, homology_dimension, Matrix};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    println!("rank {}", a.rank());
    for v in a.kernel_basis() {
        let shown: Vec<String> = v.iter().map(format_rational).collect();
        println!("kernel vector ({})", shown.join(", "));
    }

    // ℚ → ℚ² → ℚ, exact in the middle
    let d_in = Matrix::from_i64(&[&[1], &[0]]);
    let d_out = Matrix::from_i64(&[&[0, 1]]);
    println!("middle homology has dimension {}", homology_dimension(&d_in, &d_out)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
