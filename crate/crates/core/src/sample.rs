//! Seeded random inputs for the verification suites.
//!
//! ChaCha8 keeps the streams identical across platforms, so a suite run
//! with a given seed is reproducible byte for byte.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::{rational_frac, BigRational, GaussianRational, MultiPoly, Ring};
use crate::gcn::GcnUnit;
use crate::matrix_unit::CMat2;
use crate::linalg::Mat2;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ max_num` and `1 ≤ q ≤ max_den`.
pub fn rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> BigRational {
    rational_frac(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den))
}

pub fn nonzero_rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> BigRational {
    loop {
        let r = rational(rng, max_num, max_den);
        if !Ring::is_zero(&r) {
            return r;
        }
    }
}

pub fn gaussian(rng: &mut impl Rng, max_num: i64, max_den: i64) -> GaussianRational {
    GaussianRational::new(rational(rng, max_num, max_den), rational(rng, max_num, max_den))
}

pub fn nonzero_gaussian(rng: &mut impl Rng, max_num: i64, max_den: i64) -> GaussianRational {
    loop {
        let g = gaussian(rng, max_num, max_den);
        if !g.is_zero() {
            return g;
        }
    }
}

pub fn unit(rng: &mut impl Rng, max_num: i64, max_den: i64) -> GcnUnit<BigRational> {
    GcnUnit::new(rational(rng, max_num, max_den), rational(rng, max_num, max_den))
}

pub fn matrix(rng: &mut impl Rng, max_num: i64, max_den: i64) -> CMat2 {
    Mat2::new(
        gaussian(rng, max_num, max_den),
        gaussian(rng, max_num, max_den),
        gaussian(rng, max_num, max_den),
        gaussian(rng, max_num, max_den),
    )
}

/// A Gaussian-rational matrix with determinant exactly 1: three entries
/// are drawn and `m22 = (1 + m12·m21)/m11` is solved for.
pub fn unimodular(rng: &mut impl Rng, max_num: i64, max_den: i64) -> CMat2 {
    let m11 = nonzero_gaussian(rng, max_num, max_den);
    let m12 = gaussian(rng, max_num, max_den);
    let m21 = gaussian(rng, max_num, max_den);
    let m22 = &(&GaussianRational::one() + &(&m12 * &m21)) * &m11.inv().unwrap();
    Mat2::new(m11, m12, m21, m22)
}

/// A polynomial over `vars` with up to `max_terms` terms of total degree
/// at most `max_deg`.
pub fn poly(rng: &mut impl Rng, vars: &[&str], max_terms: usize, max_deg: u32) -> MultiPoly {
    let nterms = rng.gen_range(0..=max_terms);
    let terms: Vec<_> = (0..nterms)
        .map(|_| {
            let mut budget = max_deg;
            let exps = vars
                .iter()
                .map(|_| {
                    let e = rng.gen_range(0..=budget);
                    budget -= e;
                    e
                })
                .collect();
            (exps, GaussianRational::real(rational(rng, 9, 5)))
        })
        .collect();
    MultiPoly::from_terms(vars, terms).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unimodular_has_unit_determinant() {
        let mut r = rng(7);
        for _ in 0..50 {
            assert_eq!(unimodular(&mut r, 5, 4).det(), GaussianRational::one());
        }
    }

    #[test]
    fn streams_are_reproducible() {
        let a: Vec<_> = (0..5).map(|_| unit(&mut rng(3), 5, 5)).collect();
        let b: Vec<_> = (0..5).map(|_| unit(&mut rng(3), 5, 5)).collect();
        assert_eq!(a, b);
    }
}
