//! Small dense matrices over any [`Ring`].

use crate::exact::Ring;

/// A 2×2 matrix `[[m11, m12], [m21, m22]]`.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat2<R> {
    pub m11: R,
    pub m12: R,
    pub m21: R,
    pub m22: R,
}

impl<R: Ring> Mat2<R> {
    pub fn new(m11: R, m12: R, m21: R, m22: R) -> Self {
        Self { m11, m12, m21, m22 }
    }

    /// Identity matrix in the ring of `like`.
    pub fn identity_like(like: &R) -> Self {
        Self::scalar(like.one_like())
    }

    /// `c·1`.
    pub fn scalar(c: R) -> Self {
        let z = c.zero_like();
        Self::new(c.clone(), z.clone(), z, c)
    }

    pub fn trace(&self) -> R {
        self.m11.add(&self.m22)
    }

    pub fn det(&self) -> R {
        self.m11.mul(&self.m22).sub(&self.m12.mul(&self.m21))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            self.m11.add(&o.m11),
            self.m12.add(&o.m12),
            self.m21.add(&o.m21),
            self.m22.add(&o.m22),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(
            self.m11.sub(&o.m11),
            self.m12.sub(&o.m12),
            self.m21.sub(&o.m21),
            self.m22.sub(&o.m22),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            self.m11.mul(&o.m11).add(&self.m12.mul(&o.m21)),
            self.m11.mul(&o.m12).add(&self.m12.mul(&o.m22)),
            self.m21.mul(&o.m11).add(&self.m22.mul(&o.m21)),
            self.m21.mul(&o.m12).add(&self.m22.mul(&o.m22)),
        )
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(
            self.m11.mul(c),
            self.m12.mul(c),
            self.m21.mul(c),
            self.m22.mul(c),
        )
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &(R, R)) -> (R, R) {
        (
            self.m11.mul(&v.0).add(&self.m12.mul(&v.1)),
            self.m21.mul(&v.0).add(&self.m22.mul(&v.1)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.m11.is_zero() && self.m12.is_zero() && self.m21.is_zero() && self.m22.is_zero()
    }

    /// `self^n` by binary exponentiation.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = Self::identity_like(&self.m11);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn entries(&self) -> [&R; 4] {
        [&self.m11, &self.m12, &self.m21, &self.m22]
    }
}

/// A 3×3 matrix stored row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat3<R> {
    pub rows: [[R; 3]; 3],
}

impl<R: Ring> Mat3<R> {
    pub fn new(rows: [[R; 3]; 3]) -> Self {
        Self { rows }
    }

    pub fn identity_like(like: &R) -> Self {
        let o = like.one_like();
        let z = like.zero_like();
        Self::new([
            [o.clone(), z.clone(), z.clone()],
            [z.clone(), o.clone(), z.clone()],
            [z.clone(), z, o],
        ])
    }

    pub fn mul(&self, o: &Self) -> Self {
        let entry = |i: usize, j: usize| {
            (0..3)
                .map(|k| self.rows[i][k].mul(&o.rows[k][j]))
                .reduce(|a, b| a.add(&b))
                .unwrap()
        };
        Self::new([
            [entry(0, 0), entry(0, 1), entry(0, 2)],
            [entry(1, 0), entry(1, 1), entry(1, 2)],
            [entry(2, 0), entry(2, 1), entry(2, 2)],
        ])
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.rows[i][j].add(&o.rows[i][j]))
        }))
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.rows[i][j].mul(c))
        }))
    }

    pub fn column(&self, j: usize) -> [R; 3] {
        std::array::from_fn(|i| self.rows[i][j].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Ring::is_zero)
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = Self::identity_like(&self.rows[0][0]);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}
