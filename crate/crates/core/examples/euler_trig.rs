// The pair C, S with exp(h*phi) = C + h*S: circle, hyperbola, and a
// generic unit checked against its differential equations.

use gencheb::euler;
use gencheb::exact::BigRational;
use gencheb::gcn::GcnUnit;

pub fn run_example() -> gencheb::Result<()> {
    let tol = euler::DEFAULT_TOL;
    for (a, b, label) in [(-1, 0, "circle"), (1, 0, "hyperbola"), (1, 1, "golden")] {
        let unit = GcnUnit::<BigRational>::from_ints(a, b);
        let s = euler::euler_series(&unit, 1.0, tol)?;
        let c = euler::euler_closed_form(&unit, 1.0);
        println!(
            "{label:9} {unit}: series C(1) = {:.12}, S(1) = {:.12} ({} terms); closed C = {:.12}, S = {:.12}",
            s.c, s.s, s.terms, c.c, c.s
        );
    }
    println!("cos 1 = {:.12}, sin 1 = {:.12}", 1f64.cos(), 1f64.sin());

    let unit = GcnUnit::new(BigRational::new((-3).into(), 2.into()), BigRational::new(1.into(), 3.into()));
    let grid = euler::linspace(-2.0, 2.0, 41);
    let r = euler::ode_residual(&unit, &grid, tol)?;
    println!("{unit}: max |C' - aS| = {:.2e}, max |S' - C - bS| = {:.2e}", r.max_c, r.max_s);

    let mut series = euler::EulerSeries::new(&unit);
    let (rc, rs) = euler::addition_law_residual(&mut series, 0.7, -0.3, tol)?;
    println!("addition law residuals at (0.7, -0.3): {rc:.2e}, {rs:.2e}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> gencheb::Result<()> {
    run_example()
}
