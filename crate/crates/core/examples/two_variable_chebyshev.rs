// U2_n(u, v) from 1/(1 - u t + v t^2 - t^3) three ways, and the cubic unit
// whose powers it describes.

use gencheb::higher_order::{self, CubicMethod, CubicUnit};
use gencheb::exact::MultiPoly;

pub fn run_example() -> gencheb::Result<()> {
    let series = higher_order::u2_by_series(8)?;
    let rec = higher_order::u2_by_recurrence(8)?;
    for n in 1..=8usize {
        let lap = higher_order::u2_by_laplace(n as u64 - 1);
        let agree = series[n].poly == rec[n].poly && rec[n].poly == lap.poly;
        println!("U2_{n} = {}  (three routes agree: {agree})", series[n].poly);
    }

    let unit = CubicUnit::<MultiPoly>::symbolic();
    let c = higher_order::cubic_power(&unit, 5, CubicMethod::Matrix);
    println!("k^5 = ({}) + ({})*k + ({})*k^2", c.alpha, c.beta, c.gamma);
    Ok(())
}

#[allow(dead_code)]
fn main() -> gencheb::Result<()> {
    run_example()
}
