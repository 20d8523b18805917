// Parse polynomials from text, do arithmetic, render back.

use gencheb::exact::{parse_poly, MultiPoly};

pub fn run_example() -> gencheb::Result<()> {
    let p = parse_poly("4*x^2 - 1", &["x"])?;
    let q = parse_poly("(x + 1/2)*(x - 1/2)", &["x"])?;
    println!("p = {p}");
    println!("q = {q}");
    println!("p - 4q = {}", &p - &(&q * &MultiPoly::from_int(&["x"], 4)));
    println!("dp/dx = {}", p.derivative("x")?);

    let w = parse_poly("u^3 - 2*u*v + 1", &["u", "v"])?;
    println!("w = {w}, degree {:?}", w.degree());

    let z = parse_poly("(1 + 2*i)*x", &["x"])?;
    println!("z^2 = {}", &z * &z);

    match parse_poly("x +", &["x"]) {
        Err(e) => println!("`x +` -> {e}"),
        Ok(p) => println!("unexpectedly parsed {p}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> gencheb::Result<()> {
    run_example()
}
