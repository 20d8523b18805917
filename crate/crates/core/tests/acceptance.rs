//! Acceptance criteria 1-8. Runs with a custom harness so each criterion
//! prints exactly one PASS/FAIL line.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use gencheb::chebyshev::{self, eval_at};
use gencheb::euler::{self, EulerSeries};
use gencheb::exact::{rational, BigRational, GaussianRational, MultiPoly};
use gencheb::gcn::{self, GcnUnit, PowerMethod};
use gencheb::higher_order::{self, CubicMethod, CubicUnit, UV, XYZ};
use gencheb::linalg::Mat2;
use gencheb::matrix_unit::{self, CMat2, MatPowerMethod};
use gencheb::sample;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

fn binom(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, j| acc * BigInt::from(n - j) / BigInt::from(j + 1))
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap()
}

/// `bₙ = Σₖ C(n−1−k, k)·b^{n−1−2k}·aᵏ`, `aₙ = a·bₙ₋₁`, from counting tilings.
fn power_oracle(a: &BigRational, b: &BigRational, n: u64) -> (BigRational, BigRational) {
    let b_coeff = |m: u64| -> BigRational {
        if m == 0 {
            return BigRational::zero();
        }
        let mut s = BigRational::zero();
        let mut k = 0;
        while 2 * k < m {
            let c = BigRational::from_integer(binom(m - 1 - k, k));
            s += c * b.pow((m - 1 - 2 * k) as i32) * a.pow(k as i32);
            k += 1;
        }
        s
    };
    if n == 0 {
        return (BigRational::one(), BigRational::zero());
    }
    (a * b_coeff(n - 1), b_coeff(n))
}

fn xvar() -> MultiPoly {
    MultiPoly::var(&["x"], "x").unwrap()
}

/// `Uₙ(x) = Σₖ (−1)ᵏ C(n−k, k) (2x)^{n−2k}`.
fn u_oracle(n: i64) -> MultiPoly {
    if n < 0 {
        return MultiPoly::zero(&["x"]);
    }
    let n = n as u64;
    let terms = (0..=n / 2).map(|k| {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let c = BigInt::from(sign) * binom(n - k, k) * (BigInt::one() << (n - 2 * k));
        (vec![(n - 2 * k) as u32], GaussianRational::real(BigRational::from_integer(c)))
    });
    MultiPoly::from_terms(&["x"], terms).unwrap()
}

fn t_oracle(n: i64) -> MultiPoly {
    if n == 0 {
        return MultiPoly::from_int(&["x"], 1);
    }
    &u_oracle(n) - &(&xvar() * &u_oracle(n - 1))
}

fn criterion_1() {
    let mut rng = sample::rng(11);
    for k in 0..50 {
        let unit = sample::unit(&mut rng, 5, 6);
        for n in 0..=64u64 {
            let (oa, ob) = power_oracle(&unit.a, &unit.b, n);
            for m in PowerMethod::ALL {
                let c = gcn::power_coeffs(&unit, n, m);
                assert_eq!((&c.a_n, &c.b_n), (&oa, &ob), "unit #{k} {unit} n={n} {}", m.name());
            }
            let (fa, fb) = gcn::binet_f64(&unit, n);
            let rho = {
                let (hp, hm) = gcn::conjugate_roots(&unit).to_complex();
                hp.norm().max(hm.norm())
            };
            let scale = 1f64.max(rho.powi(n as i32)).max(to_f64(&ob).abs());
            assert!(((fa - to_f64(&oa)) / scale).abs() <= 1e-10, "float a_n unit #{k} n={n}");
            assert!(((fb - to_f64(&ob)) / scale).abs() <= 1e-10, "float b_n unit #{k} n={n}");
        }
    }
    // Degenerate units (zero discriminant) go through the limit form.
    for (a, b) in [(-1, 2), (-4, 4), (0, 0), (-9, -6)] {
        let unit = GcnUnit::<BigRational>::from_ints(a, b);
        for n in 0..=64u64 {
            let c = gcn::power_coeffs(&unit, n, PowerMethod::Binet);
            assert_eq!((c.a_n, c.b_n), power_oracle(&unit.a, &unit.b, n), "({a},{b}) n={n}");
        }
    }
}

fn criterion_2() {
    let circle = GcnUnit::<BigRational>::from_ints(-1, 0);
    for phi in euler::linspace(-2.0 * std::f64::consts::PI, 2.0 * std::f64::consts::PI, 100) {
        let p = euler::euler_series(&circle, phi, euler::DEFAULT_TOL).unwrap();
        assert!((p.c - phi.cos()).abs() <= 1e-12, "cos at {phi}: {}", p.c);
        assert!((p.s - phi.sin()).abs() <= 1e-12, "sin at {phi}: {}", p.s);
    }

    let mut rng = sample::rng(12);
    let grid = euler::linspace(-2.0, 2.0, 41);
    for k in 0..20 {
        let unit = sample::unit(&mut rng, 2, 3);
        let (a, b) = (to_f64(&unit.a), to_f64(&unit.b));
        // Central differences of the series as an independent derivative.
        let mut series = EulerSeries::new(&unit);
        let eps = 1e-5;
        for &phi in &grid {
            let p = series.eval(phi, 1e-14).unwrap();
            let hi = series.eval(phi + eps, 1e-14).unwrap();
            let lo = series.eval(phi - eps, 1e-14).unwrap();
            let dc = (hi.c - lo.c) / (2.0 * eps);
            let ds = (hi.s - lo.s) / (2.0 * eps);
            let size = 1f64.max(p.c.abs()).max(p.s.abs());
            assert!((dc - a * p.s).abs() <= 1e-6 * size, "finite-difference C' unit #{k}");
            assert!((ds - p.c - b * p.s).abs() <= 1e-6 * size, "finite-difference S' unit #{k}");
        }
        let r = euler::ode_residual(&unit, &grid, euler::DEFAULT_TOL).unwrap();
        assert!(r.max() <= 1e-10, "unit #{k} {unit}: ODE residual {r:?}");
    }

    for k in 0..100 {
        let unit = sample::unit(&mut rng, 2, 3);
        let phi = rand::Rng::gen_range(&mut rng, -1.0..=1.0);
        let psi = rand::Rng::gen_range(&mut rng, -1.0..=1.0);
        let mut series = EulerSeries::new(&unit);
        let (rc, rs) = euler::addition_law_residual(&mut series, phi, psi, euler::DEFAULT_TOL).unwrap();
        assert!(rc <= 1e-10 && rs <= 1e-10, "#{k} {unit} ({phi}, {psi}): {rc} {rs}");
    }
}

fn criterion_3() {
    let x = xvar();
    let one = MultiPoly::from_int(&["x"], 1);
    let ab = chebyshev::cheb_ab_sequence(65);
    let u_lib = chebyshev::cheb_u_sequence(65);
    for n in 0..=64i64 {
        let nu = n as usize;
        assert_eq!(u_lib[nu], u_oracle(n), "U_{n}");
        let pell = &(&u_oracle(n) * &u_oracle(n)) - &(&u_oracle(n - 1) * &u_oracle(n + 1));
        assert_eq!(pell, one, "Pell n={n}");
        assert_eq!(ab[nu].b_n, u_oracle(n - 1), "B_n = U_(n-1), n={n}");
        assert_eq!(ab[nu].b_n, -&ab[nu + 1].a_n, "B_n = -A_(n+1), n={n}");
        let (a, b) = (&ab[nu].a_n, &ab[nu].b_n);
        let two_x = &x + &x;
        let norm = &(&(a * a) + &(&two_x * &(a * b))) + &(b * b);
        assert_eq!(norm, one, "A^2 + 2xAB + B^2, n={n}");

        let m = n as u64;
        let q = Mat2::new(MultiPoly::zero(&["x"]), MultiPoly::from_int(&["x"], -1), one.clone(), two_x)
            .pow(m + 1);
        let expected = Mat2::new(
            -&u_oracle(n - 1),
            -&u_oracle(n),
            u_oracle(n),
            u_oracle(n + 1),
        );
        assert_eq!(q, expected, "Q(-1,2x)^(n+1), n={n}");
        assert_eq!(chebyshev::cheb_companion_power(m), expected, "library companion power n={n}");
        assert_eq!(chebyshev::cheb_t(m).poly, t_oracle(n), "T_{n}");
    }
    for n in 0..=32i64 {
        let u = u_oracle(n);
        let d1 = u.derivative("x").unwrap();
        let d2 = d1.derivative("x").unwrap();
        let one_minus_x2 = &one - &(&x * &x);
        let three_x = MultiPoly::from_int(&["x"], 3);
        let eig = MultiPoly::from_int(&["x"], n * (n + 2));
        let op = &(&(&one_minus_x2 * &d2) - &(&(&three_x * &x) * &d1)) + &(&eig * &u);
        assert!(op.is_zero(), "U_n ODE n={n}: {op}");
        assert!(chebyshev::u_ode_residual(n as u64).is_zero(), "library U_n ODE n={n}");
    }
}

fn criterion_4() {
    for k in 0..50 {
        let theta = 0.05 + 3.0 * k as f64 / 50.0;
        let c = theta.cos();
        for n in 0..=32i64 {
            let un = eval_at(&chebyshev::cheb_u(n as u64).poly, c);
            let tn = eval_at(&chebyshev::cheb_t(n as u64).poly, c);
            let lhs = un * theta.sin();
            assert!((lhs - ((n + 1) as f64 * theta).sin()).abs() <= 1e-10, "U n={n} theta={theta}");
            assert!((tn - (n as f64 * theta).cos()).abs() <= 1e-10, "T n={n} theta={theta}");
        }
    }
}

fn criterion_5() {
    let mut rng = sample::rng(15);
    let two = GaussianRational::from_int(2);
    for k in 0..200 {
        let m = sample::matrix(&mut rng, 5, 4);
        let alpha = &m.trace() * &two.inv().unwrap();
        let gamma = -&m.det();
        let ch = m.mul(&m).sub(&m.scale(&(&two * &alpha))).sub(&Mat2::scalar(gamma.clone()));
        assert!(ch.is_zero(), "Cayley-Hamilton matrix #{k}");
        let c = matrix_unit::pauli_decompose(&m);
        assert_eq!((&c.alpha, &c.gamma), (&alpha, &gamma), "matrix #{k}");
        assert!(matrix_unit::quadratic_residual(&m).is_zero());
        if m.det() != GaussianRational::one() {
            assert!(matches!(
                matrix_unit::mat_power(&m, 3, MatPowerMethod::Chebyshev),
                Err(gencheb::Error::Precondition(_))
            ));
        }
    }
    let rejects = matrix_unit::mat_power(&matrix_unit::from_ints(1, 1, 0, 2), 2, MatPowerMethod::Chebyshev);
    assert!(matches!(rejects, Err(gencheb::Error::Precondition(_))));

    for k in 0..200 {
        let m = sample::unimodular(&mut rng, 3, 3);
        assert_eq!(m.det(), GaussianRational::one());
        let mut naive = matrix_unit::identity();
        for n in 0..=32u64 {
            let cheb = matrix_unit::mat_power(&m, n, MatPowerMethod::Chebyshev).unwrap();
            let sq = matrix_unit::mat_power(&m, n, MatPowerMethod::Squaring).unwrap();
            assert_eq!(cheb, sq, "unimodular #{k} n={n}");
            assert_eq!(sq, naive, "squaring vs repeated product #{k} n={n}");
            naive = naive.mul(&m);
        }
    }
}

/// Plain long division of 1 by `1 − u t + v t² − t³`, one coefficient at a time.
fn u2_division_oracle(count: usize) -> Vec<MultiPoly> {
    let u = MultiPoly::var(&UV, "u").unwrap();
    let v = MultiPoly::var(&UV, "v").unwrap();
    let den = [MultiPoly::from_int(&UV, 1), -&u, v, MultiPoly::from_int(&UV, -1)];
    let mut q: Vec<MultiPoly> = Vec::new();
    for n in 0..count {
        let mut rem = if n == 0 { MultiPoly::from_int(&UV, 1) } else { MultiPoly::zero(&UV) };
        for k in 1..den.len().min(n + 1) {
            rem = &rem - &(&den[k] * &q[n - k]);
        }
        q.push(rem);
    }
    q
}

/// `H₀ = 1`, `Hₙ₊₁ = x Hₙ + 2y n Hₙ₋₁ + 3z n(n−1) Hₙ₋₂`.
fn hermite_oracle(count: usize) -> Vec<MultiPoly> {
    let var = |s| MultiPoly::var(&XYZ, s).unwrap();
    let (x, y, z) = (var("x"), var("y"), var("z"));
    let mut h = vec![MultiPoly::from_int(&XYZ, 1)];
    for n in 0..count.saturating_sub(1) {
        let mut next = &x * &h[n];
        if n >= 1 {
            next = &next + &(&MultiPoly::from_int(&XYZ, 2 * n as i64) * &(&y * &h[n - 1]));
        }
        if n >= 2 {
            let c = MultiPoly::from_int(&XYZ, 3 * (n * (n - 1)) as i64);
            next = &next + &(&c * &(&z * &h[n - 2]));
        }
        h.push(next);
    }
    h
}

fn criterion_6() {
    let oracle = u2_division_oracle(24);
    let first = ["1", "u", "u^2 - v", "u^3 - 2*u*v + 1"];
    for (k, want) in first.iter().enumerate() {
        assert_eq!(oracle[k].to_string(), *want, "oracle U2_{}", k + 1);
    }
    let series = higher_order::u2_by_series(24).unwrap();
    let rec = higher_order::u2_by_recurrence(24).unwrap();
    for n in 1..=24usize {
        let lap = higher_order::u2_by_laplace(n as u64 - 1);
        assert_eq!(lap.n, n as u64);
        assert_eq!(series[n].poly, oracle[n - 1], "series n={n}");
        assert_eq!(rec[n].poly, oracle[n - 1], "recurrence n={n}");
        assert_eq!(lap.poly, oracle[n - 1], "Laplace n={n}");
    }
    let unit = CubicUnit::<MultiPoly>::symbolic();
    for n in 1..=24u64 {
        let c = higher_order::cubic_power(&unit, n, CubicMethod::Reduction);
        assert_eq!(c.gamma, series[n as usize - 1].poly, "gamma_n = U2_(n-1), n={n}");
        assert_eq!(c, higher_order::cubic_power(&unit, n, CubicMethod::Matrix), "cubic n={n}");
    }

    let herm = hermite_oracle(13);
    let expo = higher_order::hermite3_exponential(12);
    let gen = higher_order::hermite3_generating_series(12);
    assert_eq!(expo, gen);
    let mut fact = BigRational::one();
    for (n, h) in herm.iter().enumerate() {
        if n > 0 {
            fact *= rational(n as i64);
        }
        assert_eq!(&higher_order::hermite3(n as u64), h, "H3_{n}");
        assert_eq!(&expo.coeff(n).scale_by(&GaussianRational::real(fact.clone())), h, "t^{n}");
    }
}

/// Closed forms built from the roots `h± = (b ± √Δ)/2`, `Δ = b² + 4a`.
fn roots(a: f64, b: f64) -> (Complex64, Complex64) {
    let d = Complex64::new(b * b + 4.0 * a, 0.0).sqrt();
    ((b + d) / 2.0, (b - d) / 2.0)
}

fn criterion_7() {
    // Closed-form C/S: the sum forms C = h₊e^{h₊φ} + h₋e^{h₋φ} and
    // S = (e^{h₊φ} + e^{h₋φ})/(h₊ + h₋) break e^{h±φ} = C + h±·S.
    let unit = GcnUnit::<BigRational>::from_ints(1, 1);
    let (hp, hm) = roots(1.0, 1.0);
    for phi in [0.0, 0.5, 1.0] {
        let series = euler::euler_series(&unit, phi, 1e-14).unwrap();
        let (ep, em) = ((hp * phi).exp(), (hm * phi).exp());
        let c_sum = hp * ep + hm * em;
        let s_sum = (ep + em) / (hp + hm);
        let bad = (c_sum.re - series.c).abs() + (s_sum.re - series.s).abs();
        assert!(bad > 0.5, "sum forms unexpectedly agree at phi={phi}");
        let s_fix = (ep - em) / (hp - hm);
        let c_fix = (hp * em - hm * ep) / (hp - hm);
        assert!((c_fix.re - series.c).abs() <= 1e-12 && (s_fix.re - series.s).abs() <= 1e-12);
        let lib = euler::euler_closed_form(&unit, phi);
        assert!((lib.c - series.c).abs() <= 1e-12 && (lib.s - series.s).abs() <= 1e-12);
    }
    // For the circle unit the sum form of S divides by h₊ + h₋ = 0.
    let (cp, cm) = roots(-1.0, 0.0);
    assert_eq!((cp + cm).norm(), 0.0);

    // Companion matrix arguments: Q(1, −2x) has det −1 and does not give
    // [[−Uₙ₋₁, −Uₙ], [Uₙ, Uₙ₊₁]]; Q(−1, 2x) has det 1 and does.
    let x = xvar();
    let zero = MultiPoly::zero(&["x"]);
    let one = MultiPoly::from_int(&["x"], 1);
    let q_bad = Mat2::new(zero.clone(), one.clone(), one.clone(), -&(&x + &x));
    let q_good = Mat2::new(zero, -&one, one.clone(), &x + &x);
    assert_eq!(q_bad.det(), -&one);
    assert_eq!(q_good.det(), one);
    let n = 1u64;
    let target = Mat2::new(-&u_oracle(0), -&u_oracle(1), u_oracle(1), u_oracle(2));
    assert_ne!(q_bad.pow(n + 1), target);
    assert_eq!(q_good.pow(n + 1), target);
    assert_eq!(chebyshev::cheb_companion_power(n), target);

    // Matrix power: Mⁿ = Uₙ₋₁(α)M + Uₙ₋₂(α)·1 fails at n = 2 for a det-1
    // matrix, while the minus sign matches.
    let m: CMat2 = matrix_unit::from_ints(2, 1, 1, 1);
    let alpha = matrix_unit::pauli_decompose(&m).alpha;
    let (u1, u0) = matrix_unit::second_kind_pair(&alpha, 2);
    assert_eq!((&u1, &u0), (&(&alpha + &alpha), &GaussianRational::one()));
    let square = m.mul(&m);
    assert_ne!(m.scale(&u1).add(&Mat2::scalar(u0.clone())), square);
    assert_eq!(m.scale(&u1).sub(&Mat2::scalar(u0)), square);
    assert_eq!(matrix_unit::mat_power(&m, 2, MatPowerMethod::Chebyshev).unwrap(), square);

    // Bₙ ODE: eigenvalue (n−1)² leaves a residual, n² − 1 annihilates.
    for n in 2..=8i64 {
        let b = u_oracle(n - 1);
        let sq = chebyshev::second_kind_operator(&b, &rational((n - 1) * (n - 1)));
        let ok = chebyshev::second_kind_operator(&b, &rational(n * n - 1));
        assert!(!sq.is_zero(), "n={n}");
        assert!(ok.is_zero(), "n={n}");
    }
}

fn bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_gencheb")).args(args).output().unwrap()
}

fn criterion_8() {
    let first = bin(&["verify", "all", "--nmax", "24"]);
    assert_eq!(first.status.code(), Some(0), "{}", String::from_utf8_lossy(&first.stdout));
    let second = bin(&["verify", "all", "--nmax", "24"]);
    assert_eq!(first.stdout, second.stdout);
    let j1 = bin(&["--format", "json", "verify", "all", "--nmax", "24"]);
    let doc: serde_json::Value = serde_json::from_slice(&j1.stdout).unwrap();
    assert_eq!(doc["failures"].as_array().map(Vec::len), Some(0));
    for bad in [
        &["cheb", "u", "--n", "-1"][..],
        &["gcn", "powers", "--a", "1 +", "--b", "0", "--n", "3"],
        &["gcn", "powers", "--a", "1/0", "--b", "0", "--n", "3"],
        &["mat", "pow", "--m", "1,2;3", "--n", "2"],
        &["mat", "pow", "--m", "1,1;0,2", "--n", "2", "--method", "chebyshev"],
        &["euler", "series", "--a", "1", "--b", "0", "--phi", "1", "--tol", "0"],
        &["verify", "suite", "nope"],
        &["frobnicate"],
    ] {
        let out = bin(bad);
        assert_eq!(out.status.code(), Some(2), "{bad:?}");
        assert!(!out.stderr.is_empty(), "{bad:?}");
    }
}

fn main() {
    let criteria: [(&str, fn()); 8] = [
        ("1 power coefficients: recurrence = matrix = Binet, n <= 64", criterion_1),
        ("2 Euler pair: trig limit, ODE and addition law", criterion_2),
        ("3 Chebyshev exact identities, n <= 64", criterion_3),
        ("4 Chebyshev numerics at cos(theta)", criterion_4),
        ("5 matrix sector: Cayley-Hamilton and det-1 powers", criterion_5),
        ("6 two-variable Chebyshev and Hermite agreement", criterion_6),
        ("7 corrected forms against their uncorrected variants", criterion_7),
        ("8 command line: verify, determinism, exit codes", criterion_8),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, f) in criteria {
        if !filter.is_empty() && !filter.iter().any(|p| name.contains(p.as_str())) {
            continue;
        }
        let start = std::time::Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f));
        let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
        if outcome.is_err() {
            failed += 1;
        }
        println!("criterion {name}: {status} ({:.1}s)", start.elapsed().as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
