//! Small finite fields by lookup table.
//!
//! Elements of `F_{p^e}` are encoded as integers `0..q` whose base-`p`
//! digits are the coefficients of a polynomial in a root of a fixed monic
//! irreducible of degree `e`. The prime subfield is `0..p`.

use crate::error::{Error, Result};

pub type Elem = u8;

/// Largest field order supported.
pub const MAX_ORDER: u64 = 256;

#[derive(Clone, Debug)]
pub struct FiniteField {
    q: usize,
    p: usize,
    degree: u32,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

/// `(p, e)` with `q = p^e`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn digits(mut x: usize, p: usize, len: usize) -> Vec<usize> {
    (0..len)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[usize], p: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_ORDER {
            return Err(Error::NotPrimePower(q));
        }
        let (q, p, len) = (q as usize, p as usize, e as usize);
        let add: Vec<Elem> = (0..q * q)
            .map(|ab| {
                let (a, b) = (digits(ab / q, p, len), digits(ab % q, p, len));
                let s: Vec<usize> = a.iter().zip(&b).map(|(x, y)| (x + y) % p).collect();
                undigits(&s, p) as Elem
            })
            .collect();
        let neg: Vec<Elem> = (0..q)
            .map(|a| {
                let s: Vec<usize> = digits(a, p, len).iter().map(|x| (p - x) % p).collect();
                undigits(&s, p) as Elem
            })
            .collect();
        // try monic polynomials x^e + (lower) until the multiplication table is a field
        for tail in 0..q {
            let modulus = digits(tail, p, len);
            let mul = multiplication_table(q, p, len, &modulus);
            if let Some(inv) = inverses(q, &mul) {
                let field = FiniteField {
                    q,
                    p,
                    degree: e,
                    add,
                    mul,
                    neg,
                    inv,
                };
                field.check_axioms();
                return Ok(field);
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(|x| x as Elem)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q + b as usize]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q + b as usize]
    }

    /// `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let (mut base, mut acc) = (a, 1);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `x ↦ x^p`.
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.p as u64)
    }

    /// Absolute trace `Σ_k x^{p^k}`, returned as an integer in `0..p`.
    pub fn trace(&self, a: Elem) -> usize {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.degree {
            acc = self.add(acc, x);
            x = self.frobenius(x);
        }
        debug_assert!((acc as usize) < self.p);
        acc as usize
    }

    fn check_axioms(&self) {
        for a in self.elements() {
            assert_eq!(self.add(a, self.neg(a)), 0);
            assert_eq!(self.mul(a, 1), a);
            if a != 0 {
                assert_eq!(self.mul(a, self.inv[a as usize]), 1);
            }
            for b in self.elements() {
                assert_eq!(self.add(a, b), self.add(b, a));
                assert_eq!(self.mul(a, b), self.mul(b, a));
            }
        }
    }
}

fn multiplication_table(q: usize, p: usize, len: usize, modulus: &[usize]) -> Vec<Elem> {
    (0..q * q)
        .map(|ab| {
            let (a, b) = (digits(ab / q, p, len), digits(ab % q, p, len));
            let mut prod = vec![0; 2 * len];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            // reduce with x^len = -(modulus)
            for k in (len..2 * len).rev() {
                let c = prod[k];
                if c == 0 {
                    continue;
                }
                prod[k] = 0;
                for (i, m) in modulus.iter().enumerate() {
                    prod[k - len + i] = (prod[k - len + i] + p * p - c * m) % p;
                }
            }
            undigits(&prod[..len], p) as Elem
        })
        .collect()
}

fn inverses(q: usize, mul: &[Elem]) -> Option<Vec<Elem>> {
    let mut inv = vec![0; q];
    for a in 1..q {
        inv[a] = (1..q).find(|&b| mul[a * q + b] == 1)? as Elem;
    }
    Some(inv)
}
