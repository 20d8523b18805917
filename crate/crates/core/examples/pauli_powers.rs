// 2x2 matrices as alpha*1 + beta.sigma and their powers through the
// second-kind Chebyshev polynomials.

use gencheb::matrix_unit::{self, MatPowerMethod};

pub fn run_example() -> gencheb::Result<()> {
    let m = matrix_unit::from_ints(2, 1, 1, 1);
    let c = matrix_unit::pauli_decompose(&m);
    println!("alpha = {}, beta = ({}, {}, {}), gamma = {}", c.alpha, c.beta[0], c.beta[1], c.beta[2], c.gamma);
    println!("M^2 - 2 alpha M - gamma is zero: {}", matrix_unit::quadratic_residual(&m).is_zero());

    for method in MatPowerMethod::ALL {
        let p = matrix_unit::mat_power(&m, 10, method)?;
        println!("{:>18}: M^10 = [[{}, {}], [{}, {}]]", method.name(), p.m11, p.m12, p.m21, p.m22);
    }

    // det = 2: the Chebyshev route refuses, the general recurrence does not.
    let n = matrix_unit::from_ints(1, 1, 0, 2);
    if let Err(e) = matrix_unit::mat_power(&n, 5, MatPowerMethod::Chebyshev) {
        println!("chebyshev: {e}");
    }
    let p = matrix_unit::mat_power(&n, 5, MatPowerMethod::GeneralRecurrence)?;
    println!("general_recurrence: [[{}, {}], [{}, {}]]", p.m11, p.m12, p.m21, p.m22);
    Ok(())
}

#[allow(dead_code)]
fn main() -> gencheb::Result<()> {
    run_example()
}
