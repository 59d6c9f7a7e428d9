//! Exact arithmetic in `Q(ζ_p)`.

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// `Σ_{k<p-1} c_k ζ^k`, reduced modulo the `p`-th cyclotomic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloScalar {
    p: usize,
    coeffs: Vec<BigRational>,
}

impl CycloScalar {
    pub fn zero(p: usize) -> Self {
        CycloScalar {
            p,
            coeffs: vec![BigRational::zero(); p - 1],
        }
    }

    pub fn rational(p: usize, c: BigRational) -> Self {
        let mut z = CycloScalar::zero(p);
        z.coeffs[0] = c;
        z
    }

    /// `Σ_k counts[k] ζ^k` for `k` in `0..p`.
    pub fn from_group_ring(p: usize, counts: &[BigRational]) -> Self {
        assert_eq!(counts.len(), p);
        // ζ^{p-1} = -(1 + ζ + … + ζ^{p-2})
        let top = counts[p - 1].clone();
        CycloScalar {
            p,
            coeffs: counts[..p - 1].iter().map(|c| c - &top).collect(),
        }
    }

    /// `ζ^k`.
    pub fn root(p: usize, k: usize) -> Self {
        let mut counts = vec![BigRational::zero(); p];
        counts[k % p] = BigRational::from_integer(1.into());
        CycloScalar::from_group_ring(p, &counts)
    }

    fn group_ring(&self) -> Vec<BigRational> {
        let mut v = self.coeffs.clone();
        v.push(BigRational::zero());
        v
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let g = self.group_ring();
        let flipped: Vec<BigRational> = (0..self.p)
            .map(|k| g[(self.p - k) % self.p].clone())
            .collect();
        CycloScalar::from_group_ring(self.p, &flipped)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        CycloScalar {
            p: self.p,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// The value, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    /// The value, if it is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }
}

impl Add for &CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: &CycloScalar) -> CycloScalar {
        assert_eq!(self.p, rhs.p);
        CycloScalar {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Mul for &CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: &CycloScalar) -> CycloScalar {
        assert_eq!(self.p, rhs.p);
        let p = self.p;
        let mut counts = vec![BigRational::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                counts[(i + j) % p] += a * b;
            }
        }
        CycloScalar::from_group_ring(p, &counts)
    }
}
