// Third-order Hermite polynomials, their exponential generating function,
// and the Gamma integral that turns them into U2_n.

use gencheb::exact::parse_poly;
use gencheb::higher_order;

pub fn run_example() -> gencheb::Result<()> {
    for n in 0..=5 {
        println!("H3_{n} = {}", higher_order::hermite3(n));
    }
    let direct = higher_order::hermite3_exponential(8);
    let summed = higher_order::hermite3_generating_series(8);
    println!("exp(xt + yt^2 + zt^3) matches sum H3_n t^n/n! to order 8: {}", direct == summed);

    let p = parse_poly("u*s^2 + 3*s", &["u", "s"])?;
    println!("integral of e^-s ({p}) ds = {}", higher_order::gamma_integrate(&p, "s")?);

    let u2 = higher_order::u2_by_laplace(4);
    println!("U2_{} from the Laplace route: {}", u2.n, u2.poly);
    Ok(())
}

#[allow(dead_code)]
fn main() -> gencheb::Result<()> {
    run_example()
}
