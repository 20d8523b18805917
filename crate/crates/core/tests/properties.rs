use gencheb::exact::{parse_poly, BigRational, GaussianRational, MultiPoly, TruncatedSeries};
use gencheb::gcn::{self, GcnUnit, PowerMethod};
use gencheb::matrix_unit::{self, MatPowerMethod};
use gencheb::sample;
use num_integer::Integer;
use num_traits::{One, Signed};
use proptest::prelude::*;

const VARS: [&str; 2] = ["x", "y"];

fn ratio() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (ratio(), ratio()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((0u32..4, 0u32..4, gaussian()), 0..6).prop_map(|terms| {
        MultiPoly::from_terms(&VARS, terms.into_iter().map(|(a, b, c)| (vec![a, b], c))).unwrap()
    })
}

fn reduced(r: &BigRational) -> bool {
    r.numer().gcd(r.denom()).is_one() && r.denom().is_positive()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn render_parse_round_trip(p in poly()) {
        let text = p.to_string();
        let back = parse_poly(&text, &VARS).unwrap();
        prop_assert_eq!(back, p, "{}", text);
    }

    #[test]
    fn coefficients_stay_reduced(p in poly(), q in poly()) {
        for (_, c) in (&p * &q).terms() {
            prop_assert!(reduced(&c.re) && reduced(&c.im));
        }
    }

    #[test]
    fn derivative_is_a_derivation(p in poly(), q in poly()) {
        let d = |f: &MultiPoly| f.derivative("x").unwrap();
        prop_assert_eq!(d(&(&p * &q)), &(&d(&p) * &q) + &(&p * &d(&q)));
    }

    #[test]
    fn series_inverse(rest in prop::collection::vec(poly(), 1..4), c0 in gaussian()) {
        prop_assume!(!c0.is_zero());
        let mut prefix = vec![MultiPoly::constant(&VARS, c0)];
        prefix.extend(rest);
        let s = TruncatedSeries::new(&VARS, 5, prefix).unwrap();
        let inv = s.inverse().unwrap();
        prop_assert!(s.mul(&inv).is_one());
    }

    #[test]
    fn power_methods_agree(a in ratio(), b in ratio(), n in 0u64..40) {
        let unit = GcnUnit::new(a, b);
        let rec = gcn::power_coeffs(&unit, n, PowerMethod::Recurrence);
        prop_assert_eq!(&rec, &gcn::power_coeffs(&unit, n, PowerMethod::Matrix));
        prop_assert_eq!(&rec, &gcn::power_coeffs(&unit, n, PowerMethod::Binet));
    }

    #[test]
    fn power_exponents_add(a in ratio(), b in ratio(), m in 0u64..20, n in 0u64..20) {
        let unit = GcnUnit::new(a, b);
        let h = unit.h();
        prop_assert_eq!(h.pow(m).mul(&h.pow(n)).unwrap(), h.pow(m + n));
    }

    #[test]
    fn unimodular_powers(seed in any::<u64>(), n in 0u64..24) {
        let mut rng = sample::rng(seed);
        let m = sample::unimodular(&mut rng, 4, 3);
        let cheb = matrix_unit::mat_power(&m, n, MatPowerMethod::Chebyshev).unwrap();
        prop_assert_eq!(cheb, m.pow(n));
    }

    #[test]
    fn pauli_round_trip(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let m = sample::matrix(&mut rng, 6, 5);
        prop_assert_eq!(matrix_unit::recompose(&matrix_unit::pauli_decompose(&m)), m);
    }
}
