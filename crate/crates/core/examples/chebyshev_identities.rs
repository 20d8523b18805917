// Chebyshev polynomials as power coefficients of H with H^2 = -1 + 2x*H.

use gencheb::chebyshev;

pub fn run_example() -> gencheb::Result<()> {
    for n in 0..=5 {
        println!("T_{n} = {:<24} U_{n} = {}", chebyshev::cheb_t(n).poly.to_string(), chebyshev::cheb_u(n).poly);
    }

    let ab = chebyshev::cheb_ab(4);
    println!("H^4 = ({}) + ({})*H", ab.a_n, ab.b_n);

    let q = chebyshev::cheb_companion_power(3);
    println!("Q(-1, 2x)^4 = [[{}, {}], [{}, {}]]", q.m11, q.m12, q.m21, q.m22);
    println!("det = {}", q.det());

    for n in [5, 10, 20] {
        println!(
            "n = {n}: Pell residual zero: {}, ODE residual zero: {}",
            chebyshev::pell_residual(n).is_zero(),
            chebyshev::u_ode_residual(n).is_zero()
        );
    }

    let theta = 0.4f64;
    let u7 = chebyshev::eval_at(&chebyshev::cheb_u(7).poly, theta.cos());
    println!("U_7(cos 0.4) sin 0.4 = {:.15}, sin 3.2 = {:.15}", u7 * theta.sin(), (8.0 * theta).sin());
    Ok(())
}

#[allow(dead_code)]
fn main() -> gencheb::Result<()> {
    run_example()
}
