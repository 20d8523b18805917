//! Verification suites: every identity of the library checked on concrete
//! inputs, with each failing case recorded.

use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;

use crate::chebyshev;
use crate::euler::{self, EulerSeries};
use crate::exact::{rational, BigRational, GaussianRational, MultiPoly, Ring, TruncatedSeries};
use crate::gcn::{self, GcnUnit, PowerMethod};
use crate::higher_order::{self, CubicMethod, CubicUnit};
use crate::matrix_unit::{self, MatPowerMethod};
use crate::sample;

pub const SCHEMA_VERSION: u32 = 1;

/// Knobs shared by all suites.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub nmax: u64,
    pub seed: u64,
    /// Overrides every floating-point threshold when set.
    pub tol: Option<f64>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            nmax: 24,
            seed: 0,
            tol: None,
        }
    }
}

impl VerifyConfig {
    fn tol_or(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    /// Wall time, only filled in when timing was requested so that
    /// default output stays reproducible.
    pub millis: Option<u128>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub suites: Vec<VerificationReport>,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            suite: suite.to_string(),
            cases: 0,
            failures: Vec::new(),
            millis: None,
            suites: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn check_eq<T: PartialEq + Display>(
        &mut self,
        case: impl FnOnce() -> String,
        expected: &T,
        actual: &T,
    ) {
        self.cases += 1;
        if expected != actual {
            self.failures.push(Failure {
                case: case(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    pub fn check_zero(&mut self, case: impl FnOnce() -> String, residual: &MultiPoly) {
        self.check_eq(case, &MultiPoly::zero(residual.variables()), residual);
    }

    pub fn check_close(&mut self, case: impl FnOnce() -> String, expected: f64, actual: f64, tol: f64) {
        self.cases += 1;
        // NaN compares as unordered and counts as a failure.
        let within = matches!(
            (expected - actual).abs().partial_cmp(&tol),
            Some(std::cmp::Ordering::Less | std::cmp::Ordering::Equal)
        );
        if !within {
            self.failures.push(Failure {
                case: case(),
                expected: format!("{expected:e}"),
                actual: format!("{actual:e} (tolerance {tol:e})"),
            });
        }
    }

    pub fn check(&mut self, case: impl FnOnce() -> String, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure {
                case: case(),
                expected: "true".into(),
                actual: detail(),
            });
        }
    }

    /// Merges per-suite reports into one, keeping the breakdown.
    pub fn combine(suite: &str, parts: Vec<VerificationReport>) -> Self {
        let mut out = Self::new(suite);
        for p in &parts {
            out.cases += p.cases;
            out.failures.extend(p.failures.iter().map(|f| Failure {
                case: format!("{}: {}", p.suite, f.case),
                ..f.clone()
            }));
        }
        out.millis = parts
            .iter()
            .map(|p| p.millis)
            .sum::<Option<u128>>();
        out.suites = parts;
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for s in self.suites.iter().chain(std::iter::once(self)) {
            out.push_str(&format!(
                "{}: {} cases, {} failures{}\n",
                s.suite,
                s.cases,
                s.failures.len(),
                s.millis.map(|m| format!(", {m} ms")).unwrap_or_default()
            ));
        }
        for f in &self.failures {
            out.push_str(&format!(
                "FAIL {}\n  expected: {}\n  actual:   {}\n",
                f.case, f.expected, f.actual
            ));
        }
        out
    }
}

fn timed(timing: bool, f: impl FnOnce() -> VerificationReport) -> VerificationReport {
    let start = Instant::now();
    let mut r = f();
    if timing {
        r.millis = Some(start.elapsed().as_millis());
    }
    r
}

/// Names accepted by [`run_suite`].
pub const SUITES: [&str; 6] = ["exact", "gcn", "euler", "cheb", "mat", "u2"];

pub fn run_suite(name: &str, cfg: &VerifyConfig, timing: bool) -> Option<VerificationReport> {
    let f: fn(&VerifyConfig) -> VerificationReport = match name {
        "exact" => exact_suite,
        "gcn" => gcn_suite,
        "euler" => euler_suite,
        "cheb" => cheb_suite,
        "mat" => mat_suite,
        "u2" => u2_suite,
        _ => return None,
    };
    Some(timed(timing, || f(cfg)))
}

pub fn run_all(cfg: &VerifyConfig, timing: bool) -> VerificationReport {
    let parts = SUITES
        .iter()
        .map(|s| run_suite(s, cfg, timing).unwrap())
        .collect();
    VerificationReport::combine("all", parts)
}

/// Series inversion round trips on random invertible series over `(u, v)`.
pub fn exact_suite(cfg: &VerifyConfig) -> VerificationReport {
    let mut r = VerificationReport::new("exact");
    let mut rng = sample::rng(cfg.seed);
    let vars = ["u", "v"];
    for k in 0..100 {
        let order = rand::Rng::gen_range(&mut rng, 0..=16usize);
        let mut coeffs = vec![MultiPoly::constant(
            &vars,
            sample::nonzero_rational(&mut rng, 9, 5),
        )];
        coeffs.extend((0..order).map(|_| sample::poly(&mut rng, &vars, 2, 1)));
        let s = TruncatedSeries::new(&vars, order, coeffs).unwrap();
        let prod = s.mul(&s.inverse().unwrap());
        r.check(
            || format!("series #{k} (order {order}) times its inverse"),
            prod.is_one(),
            || format!("{:?}", prod.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()),
        );
    }
    r
}

fn to_f64(x: &BigRational) -> f64 {
    GaussianRational::real(x.clone()).to_complex().re
}

/// Random units: the three power routes agree, `aₙ = a·bₙ₋₁`,
/// `det Q̂ⁿ = (−a)ⁿ`, and double-precision Binet tracks the exact value.
pub fn gcn_suite(cfg: &VerifyConfig) -> VerificationReport {
    let mut r = VerificationReport::new("gcn");
    let mut rng = sample::rng(cfg.seed.wrapping_add(1));
    let tol = cfg.tol_or(1e-10);
    for k in 0..50 {
        let unit = sample::unit(&mut rng, 5, 6);
        let seq = gcn::power_sequence(&unit, cfg.nmax);
        let (hp, hm) = gcn::conjugate_roots(&unit).to_complex();
        let rho = hp.norm().max(hm.norm());
        for c in &seq {
            let n = c.n;
            for method in [PowerMethod::Matrix, PowerMethod::Binet] {
                let other = gcn::power_coeffs(&unit, n, method);
                r.check(
                    || format!("unit #{k} ({unit}) n={n}: recurrence = {}", method.name()),
                    other == *c,
                    || format!("{other:?} vs {c:?}"),
                );
            }
            if n >= 1 {
                let prev = &seq[n as usize - 1];
                r.check_eq(|| format!("unit #{k} n={n}: a_n = a*b_(n-1)"), &unit.a.mul(&prev.b_n), &c.a_n);
            }
            let q = gcn::companion_power(&unit, n);
            r.check_eq(|| format!("unit #{k} n={n}: det Q^n"), &(-&unit.a).pow(n as i32), &q.det());

            let (fa, fb) = gcn::binet_f64(&unit, n);
            let scale = 1f64.max(rho.powi(n as i32)).max(to_f64(&c.b_n).abs());
            r.check_close(|| format!("unit #{k} n={n}: float Binet a_n (scaled)"), to_f64(&c.a_n) / scale, fa / scale, tol);
            r.check_close(|| format!("unit #{k} n={n}: float Binet b_n (scaled)"), to_f64(&c.b_n) / scale, fb / scale, tol);
        }
    }
    r
}

pub fn euler_suite(cfg: &VerifyConfig) -> VerificationReport {
    let mut r = VerificationReport::new("euler");
    let mut rng = sample::rng(cfg.seed.wrapping_add(2));
    let trig_tol = cfg.tol_or(1e-12);
    let tol = cfg.tol_or(1e-10);
    let series_tol = 1e-14;

    let circle = GcnUnit::from_ints(-1, 0);
    let mut s = EulerSeries::new(&circle);
    for phi in euler::linspace(-std::f64::consts::PI, std::f64::consts::PI, 100) {
        let p = s.eval(phi, series_tol).unwrap();
        r.check_close(|| format!("C = cos at phi={phi}"), phi.cos(), p.c, trig_tol);
        r.check_close(|| format!("S = sin at phi={phi}"), phi.sin(), p.s, trig_tol);
    }

    let grid = euler::linspace(-2.0, 2.0, 41);
    for k in 0..20 {
        let unit = sample::unit(&mut rng, 2, 3);
        let res = euler::ode_residual(&unit, &grid, series_tol).unwrap();
        r.check_close(|| format!("unit #{k} ({unit}): C' = aS"), 0.0, res.max_c, tol);
        r.check_close(|| format!("unit #{k} ({unit}): S' = C + bS"), 0.0, res.max_s, tol);
        for &phi in &[-2.0, -0.5, 0.0, 0.7, 2.0] {
            let series = euler::euler_series(&unit, phi, series_tol).unwrap();
            let closed = euler::euler_closed_form(&unit, phi);
            r.check_close(|| format!("unit #{k} phi={phi}: closed-form C"), series.c, closed.c, tol);
            r.check_close(|| format!("unit #{k} phi={phi}: closed-form S"), series.s, closed.s, tol);
        }
        let zero = euler::euler_series(&unit, 0.0, series_tol).unwrap();
        r.check(|| format!("unit #{k}: C(0) = 1, S(0) = 0"), zero.c == 1.0 && zero.s == 0.0, || format!("{zero:?}"));
    }

    for k in 0..100 {
        let unit = sample::unit(&mut rng, 2, 3);
        let phi = rand::Rng::gen_range(&mut rng, -1.0..=1.0);
        let psi = rand::Rng::gen_range(&mut rng, -1.0..=1.0);
        let mut s = EulerSeries::new(&unit);
        let (rc, rs) = euler::addition_law_residual(&mut s, phi, psi, series_tol).unwrap();
        r.check_close(|| format!("#{k} ({unit}) C addition law at ({phi}, {psi})"), 0.0, rc, tol);
        r.check_close(|| format!("#{k} ({unit}) S addition law at ({phi}, {psi})"), 0.0, rs, tol);
    }
    r
}

pub fn cheb_suite(cfg: &VerifyConfig) -> VerificationReport {
    let mut r = VerificationReport::new("cheb");
    let nmax = cfg.nmax;
    let u = chebyshev::cheb_u_sequence(nmax + 2);
    let ab = chebyshev::cheb_ab_sequence(nmax + 1);
    let t = chebyshev::cheb_t_sequence(nmax);
    let x = chebyshev::x();
    let one = MultiPoly::from_int(&[chebyshev::VAR], 1);
    let ext = |k: i64| -> MultiPoly {
        if k >= 0 {
            u[k as usize].clone()
        } else {
            chebyshev::cheb_u_extended(k)
        }
    };

    for n in 0..=nmax {
        let k = n as i64;
        let pell = &(&(&ext(k) * &ext(k)) - &(&ext(k - 1) * &ext(k + 1))) - &one;
        r.check_zero(|| format!("n={n}: U_n^2 - U_(n-1) U_(n+1) - 1"), &pell);
        r.check_eq(|| format!("n={n}: B_n = U_(n-1)"), &ext(k - 1), &ab[n as usize].b_n);
        r.check_eq(|| format!("n={n}: B_n = -A_(n+1)"), &-&ab[n as usize + 1].a_n, &ab[n as usize].b_n);
        let (a_n, b_n) = (&ab[n as usize].a_n, &ab[n as usize].b_n);
        let norm = &(&(a_n * a_n) + &(&x * &(a_n * b_n)).scale(&rational(2))) + &(b_n * b_n);
        r.check_eq(|| format!("n={n}: A_n^2 + 2x A_n B_n + B_n^2 = 1"), &one, &norm);
        let q = chebyshev::cheb_companion_power(n);
        let closed = crate::linalg::Mat2::new(-&ext(k - 1), -&ext(k), ext(k), ext(k + 1));
        r.check(|| format!("n={n}: Q(-1,2x)^(n+1) closed form"), q == closed, || format!("{q:?}"));
        let t_norm = &(&t[n as usize] * &t[n as usize])
            - &(&(&(&x * &x) - &one) * &(&ext(k - 1) * &ext(k - 1)));
        r.check_eq(|| format!("n={n}: T_n^2 - (x^2-1) U_(n-1)^2 = 1"), &one, &t_norm);
        let t_binet = (&ab[n as usize].a_n + &(&x * &ab[n as usize].b_n)).clone();
        r.check_eq(|| format!("n={n}: T_n = A_n + x B_n"), &t_binet, &t[n as usize]);
        let sym = gcn::binet_exact(&chebyshev::cheb_unit(), n);
        r.check_eq(|| format!("n={n}: symbolic Binet B_n"), &ab[n as usize].b_n, &sym.b_n);
        if n >= 1 {
            r.check_zero(|| format!("n={n}: B_n ODE"), &chebyshev::b_ode_residual(n));
        }
        if n <= 32 {
            let op = chebyshev::second_kind_operator(&u[n as usize], &rational((n * (n + 2)) as i64));
            r.check_zero(|| format!("n={n}: U_n ODE"), &op);
        }
    }

    let tol = cfg.tol_or(1e-10);
    let thetas = euler::linspace(0.1, 3.0, 50);
    for n in 0..=nmax.min(32) {
        for &theta in &thetas {
            let un = chebyshev::eval_at(&u[n as usize], theta.cos());
            r.check_close(
                || format!("n={n} theta={theta}: U_n(cos) sin = sin((n+1) theta)"),
                ((n + 1) as f64 * theta).sin(),
                un * theta.sin(),
                tol,
            );
            let tn = chebyshev::eval_at(&t[n as usize], theta.cos());
            r.check_close(|| format!("n={n} theta={theta}: T_n(cos) = cos(n theta)"), (n as f64 * theta).cos(), tn, tol);
        }
    }
    r
}

pub fn mat_suite(cfg: &VerifyConfig) -> VerificationReport {
    let mut r = VerificationReport::new("mat");
    let mut rng = sample::rng(cfg.seed.wrapping_add(4));
    for k in 0..200 {
        let m = sample::matrix(&mut rng, 5, 4);
        let res = matrix_unit::quadratic_residual(&m);
        r.check(|| format!("matrix #{k}: M^2 - gamma - 2 alpha M = 0"), res.is_zero(), || format!("{res:?}"));
        let c = matrix_unit::pauli_decompose(&m);
        r.check_eq(|| format!("matrix #{k}: gamma = -det"), &-&m.det(), &c.gamma);
        r.check(|| format!("matrix #{k}: recompose"), matrix_unit::recompose(&c) == m, || format!("{c:?}"));
        if !m.det().is_one() {
            r.check(
                || format!("matrix #{k}: chebyshev rejects det != 1"),
                matrix_unit::mat_power(&m, 3, MatPowerMethod::Chebyshev).is_err(),
                || "accepted".into(),
            );
        }
    }
    let nmax = cfg.nmax.min(32);
    for k in 0..200 {
        let m = sample::unimodular(&mut rng, 5, 4);
        let mut sq = matrix_unit::identity();
        for n in 0..=nmax {
            let cheb = matrix_unit::mat_power(&m, n, MatPowerMethod::Chebyshev).unwrap();
            let rec = matrix_unit::mat_power(&m, n, MatPowerMethod::GeneralRecurrence).unwrap();
            let by_squaring = matrix_unit::mat_power(&m, n, MatPowerMethod::Squaring).unwrap();
            r.check(|| format!("unimodular #{k} n={n}: chebyshev = squaring"), cheb == by_squaring, || format!("{cheb:?}"));
            r.check(|| format!("unimodular #{k} n={n}: recurrence = squaring"), rec == by_squaring, || format!("{rec:?}"));
            r.check(|| format!("unimodular #{k} n={n}: squaring = repeated product"), sq == by_squaring, || format!("{sq:?}"));
            sq = sq.mul(&m);
        }
    }
    let s = matrix_unit::pauli_matrices();
    for i in 0..3 {
        for j in 0..3 {
            let ac = s[i].mul(&s[j]).add(&s[j].mul(&s[i]));
            let expected = crate::linalg::Mat2::scalar(GaussianRational::from_int(if i == j { 2 } else { 0 }));
            r.check(|| format!("{{sigma_{}, sigma_{}}} = 2 delta", i + 1, j + 1), ac == expected, || format!("{ac:?}"));
        }
    }
    r
}

pub fn u2_suite(cfg: &VerifyConfig) -> VerificationReport {
    let mut r = VerificationReport::new("u2");
    let nmax = cfg.nmax.max(4);
    let series = higher_order::u2_by_series(nmax).unwrap();
    let rec = higher_order::u2_by_recurrence(nmax).unwrap();
    let first = ["0", "1", "u", "u^2 - v", "u^3 - 2*u*v + 1"];
    for (k, want) in first.iter().enumerate() {
        r.check_eq(|| format!("U2_{k} by series"), &want.to_string(), &series[k].poly.to_string());
    }
    let unit = CubicUnit::symbolic();
    let cubic = higher_order::cubic_power_sequence(&unit, nmax + 1);
    for n in 0..=nmax {
        r.check_eq(|| format!("U2_{n}: series = recurrence"), &series[n as usize].poly, &rec[n as usize].poly);
        if n >= 1 {
            let lap = higher_order::u2_by_laplace(n - 1);
            r.check_eq(|| format!("U2_{n}: series = Laplace"), &series[n as usize].poly, &lap.poly);
        }
        r.check_eq(|| format!("gamma_{} = U2_{n}", n + 1), &series[n as usize].poly, &cubic[n as usize + 1].gamma);
        let m = higher_order::cubic_power(&unit, n, CubicMethod::Matrix);
        r.check(|| format!("Y^{n}: matrix = reduction"), m == cubic[n as usize], || format!("{m:?}"));
    }
    let order = 12;
    let lhs = higher_order::hermite3_generating_series(order);
    let rhs = higher_order::hermite3_exponential(order);
    for n in 0..=order {
        r.check_eq(|| format!("Hermite generating function t^{n}"), lhs.coeff(n), rhs.coeff(n));
    }
    r
}
