// Timing of the Chebyshev closed form against repeated squaring, with the
// coefficient size that drives the cost.

use gencheb::matrix_unit;

pub fn run_example() -> gencheb::Result<()> {
    let m = matrix_unit::from_ints(2, 1, 1, 1);
    let report = matrix_unit::bench_power(&m, &[16, 128, 512], 3)?;
    print!("{}", report.to_csv());
    println!("n values where the methods disagree: {:?}", report.disagreements);
    Ok(())
}

#[allow(dead_code)]
fn main() -> gencheb::Result<()> {
    run_example()
}
