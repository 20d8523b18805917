// Powers of a unit h with h^2 = a + b*h by three routes, plus its roots.

use gencheb::exact::BigRational;
use gencheb::gcn::{self, GcnUnit, PowerMethod};

pub fn run_example() -> gencheb::Result<()> {
    // a = 1, b = 1: the coefficients are Fibonacci numbers.
    let unit = GcnUnit::<BigRational>::from_ints(1, 1);
    println!("{unit}, discriminant {}", unit.discriminant());
    for n in [1u64, 5, 10, 40] {
        let row: Vec<String> = PowerMethod::ALL
            .iter()
            .map(|&m| {
                let c = gcn::power_coeffs(&unit, n, m);
                format!("{}: ({}, {})", m.name(), c.a_n, c.b_n)
            })
            .collect();
        println!("h^{n}: {}", row.join("  "));
    }

    let roots = gcn::conjugate_roots(&unit);
    let (hp, hm) = roots.to_complex();
    println!("h+ = {hp}, h- = {hm}");
    println!("h+ + h- = {}, h+ * h- = {}", roots.sum().base_value()?, roots.product().base_value()?);

    // Zero discriminant: the roots coincide and Binet uses its limit form.
    let double = GcnUnit::<BigRational>::from_ints(-1, 2);
    let c = gcn::power_coeffs(&double, 12, PowerMethod::Binet);
    println!("{double}: h^12 = {} + {}*h", c.a_n, c.b_n);

    let (fa, fb) = gcn::binet_f64(&unit, 40);
    println!("floating Binet at n = 40: ({fa:.1}, {fb:.1})");
    Ok(())
}

#[allow(dead_code)]
fn main() -> gencheb::Result<()> {
    run_example()
}
