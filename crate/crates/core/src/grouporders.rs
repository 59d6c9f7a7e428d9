//! Order polynomials in `q` for `GL_n` (`ε = +1`) and `GU_n` (`ε = -1`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::Result;
use crate::partitions::Partition;
use crate::polyring::{LaurentPoly, RationalPoly, Sign, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupKind {
    pub n: usize,
    #[serde(serialize_with = "serialize_sign")]
    pub eps: Sign,
}

fn serialize_sign<S: serde::Serializer>(eps: &Sign, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_i64(eps.value())
}

impl GroupKind {
    pub fn new(n: usize, eps: Sign) -> Self {
        assert!(n >= 1, "GroupKind needs n >= 1");
        GroupKind { n, eps }
    }

    pub fn name(&self) -> String {
        match self.eps {
            Sign::Plus => format!("GL_{}", self.n),
            Sign::Minus => format!("GU_{}", self.n),
        }
    }
}

fn int(c: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(c))
}

/// `q^a - c`.
fn binomial(a: usize, c: i64) -> RationalPoly {
    let mut coeffs = vec![BigRational::from_integer(0.into()); a + 1];
    coeffs[a] += int(1);
    coeffs[0] -= int(c);
    RationalPoly::new(Var::Q, coeffs)
}

/// `q^{n(n-1)/2} Π_{i=1}^n (q^i - ε^i)`.
pub fn group_order(kind: GroupKind) -> RationalPoly {
    let n = kind.n;
    let mut acc = RationalPoly::monomial(Var::Q, BigRational::one(), n * (n - 1) / 2);
    for i in 1..=n {
        acc = &acc * &binomial(i, kind.eps.pow(i as i64));
    }
    acc
}

/// `|T_ρ^F| = Π_i (q^{ρ_i} - ε^{ρ_i})`.
pub fn torus_order(rho: &Partition, eps: Sign) -> RationalPoly {
    rho.parts()
        .iter()
        .fold(RationalPoly::one(Var::Q), |acc, &k| {
            &acc * &binomial(k, eps.pow(k as i64))
        })
}

/// `e_λ(t) = Π_i (1 - t^{λ_i})`.
pub fn e_poly(lambda: &Partition) -> LaurentPoly {
    lambda
        .parts()
        .iter()
        .fold(LaurentPoly::one(Var::T), |acc, &k| {
            &acc * &(&LaurentPoly::one(Var::T) - &LaurentPoly::monomial(Var::T, int(1), k as i64))
        })
}

/// `q^n e_λ((εq)^{-1})`, the torus order written the way it enters
/// Kawanaka's formula.
pub fn torus_order_from_e(lambda: &Partition, eps: Sign) -> LaurentPoly {
    e_poly(lambda)
        .reciprocal_shift(0)
        .substitute_signed(eps)
        .shift(lambda.size() as i64)
}

/// `sgn_ε(λ) = ε^{⌊n/2⌋} (-1)^{n + r}` with `r` the number of parts.
pub fn sgn_eps(lambda: &Partition, eps: Sign) -> i64 {
    let n = lambda.size();
    let parity = if (n + lambda.len()).is_multiple_of(2) {
        1
    } else {
        -1
    };
    eps.pow((n / 2) as i64) * parity
}

/// `dim C_G(u) = n + 2 n(λ)` for `u` of Jordan type `λ`.
pub fn centralizer_dim(lambda: &Partition) -> usize {
    lambda.size() + 2 * lambda.n_stat()
}

/// `|C_{G^F}(u_λ)| = q^{Σ (λ'_i)^2} Π_i Π_{k=1}^{m_i} (1 - (εq)^{-k})`,
/// cleared to a polynomial and normalized to a positive leading coefficient.
pub fn unipotent_centralizer_order(lambda: &Partition, eps: Sign) -> RationalPoly {
    let exponent: usize = lambda.conjugate().parts().iter().map(|&c| c * c).sum();
    let mut acc = LaurentPoly::monomial(Var::Q, int(1), exponent as i64);
    for (_, m) in lambda.multiplicities() {
        for k in 1..=m as i64 {
            let factor = LaurentPoly::from_ints(Var::Q, -k, &[-eps.pow(k)]);
            acc = &acc * &(&LaurentPoly::one(Var::Q) + &factor);
        }
    }
    let poly = acc
        .to_poly()
        .expect("centralizer order has no negative powers of q");
    if poly.leading_coeff().is_negative() {
        -&poly
    } else {
        poly
    }
}

/// `|λ^F| = |G^F| / |C_{G^F}(u_λ)|`.
pub fn class_size(lambda: &Partition, eps: Sign) -> Result<RationalPoly> {
    let kind = GroupKind::new(lambda.size(), eps);
    group_order(kind).exact_div(
        &unipotent_centralizer_order(lambda, eps),
        &format!("class size of {lambda} in {}", kind.name()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use num_traits::Zero;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(coeffs: &[i64]) -> RationalPoly {
        RationalPoly::from_ints(Var::Q, coeffs)
    }

    const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    #[test]
    fn group_orders() {
        assert_eq!(group_order(GroupKind::new(1, Sign::Plus)), q(&[-1, 1]));
        assert_eq!(group_order(GroupKind::new(1, Sign::Minus)), q(&[1, 1]));
        let gl2 = group_order(GroupKind::new(2, Sign::Plus));
        assert_eq!(gl2.eval(&int(2)), int(6));
        assert_eq!(gl2.eval(&int(3)), int(48));
        assert_eq!(
            group_order(GroupKind::new(2, Sign::Minus)).eval(&int(2)),
            int(18)
        );
        assert_eq!(
            group_order(GroupKind::new(3, Sign::Plus)).eval(&int(2)),
            int(168)
        );
        for n in 1..=6 {
            for eps in BOTH {
                let g = group_order(GroupKind::new(n, eps));
                assert_eq!(g.degree(), Some(n * n));
                assert!(g.is_monic());
            }
        }
    }

    #[test]
    fn tori() {
        assert_eq!(torus_order(&p(&[1, 1]), Sign::Plus), q(&[1, -2, 1]));
        assert_eq!(torus_order(&p(&[2]), Sign::Plus), q(&[-1, 0, 1]));
        assert_eq!(torus_order(&p(&[2]), Sign::Minus), q(&[-1, 0, 1]));
        assert_eq!(torus_order(&p(&[1]), Sign::Minus), q(&[1, 1]));
        for n in 1..=6 {
            for eps in BOTH {
                let g = group_order(GroupKind::new(n, eps));
                for rho in partitions_of(n) {
                    let torus = torus_order(&rho, eps);
                    assert_eq!(torus.degree(), Some(n));
                    assert!(torus.is_monic());
                    assert_eq!(torus_order_from_e(&rho, eps).to_poly().unwrap(), torus);
                    assert!(g.div_rem(&torus).unwrap().1.is_zero(), "{rho}");
                }
            }
        }
    }

    #[test]
    fn e_polynomials() {
        let t = |c: &[i64]| LaurentPoly::from_ints(Var::T, 0, c);
        assert_eq!(e_poly(&p(&[1])), t(&[1, -1]));
        assert_eq!(e_poly(&p(&[2, 1])), &t(&[1, 0, -1]) * &t(&[1, -1]));
        for l in partitions_of(5) {
            assert_eq!(e_poly(&l).eval_int(0).unwrap(), int(1));
        }
    }

    #[test]
    fn signs() {
        assert_eq!(sgn_eps(&p(&[1]), Sign::Plus), 1);
        assert_eq!(sgn_eps(&p(&[2]), Sign::Plus), -1);
        assert_eq!(sgn_eps(&p(&[1, 1]), Sign::Minus), -1);
        assert_eq!(sgn_eps(&p(&[2]), Sign::Minus), 1);
    }

    #[test]
    fn centralizer_dimensions() {
        assert_eq!(centralizer_dim(&p(&[4])), 4);
        assert_eq!(centralizer_dim(&Partition::column(4)), 16);
        assert_eq!(centralizer_dim(&p(&[2, 1])), 5);
    }

    #[test]
    fn unipotent_centralizers() {
        assert_eq!(
            unipotent_centralizer_order(&p(&[1, 1]), Sign::Plus),
            group_order(GroupKind::new(2, Sign::Plus))
        );
        assert_eq!(
            unipotent_centralizer_order(&p(&[2]), Sign::Plus),
            q(&[0, -1, 1])
        );
        assert_eq!(
            unipotent_centralizer_order(&p(&[2]), Sign::Minus),
            q(&[0, 1, 1])
        );
        for n in 1..=6 {
            for eps in BOTH {
                assert_eq!(
                    unipotent_centralizer_order(&Partition::column(n), eps),
                    group_order(GroupKind::new(n, eps))
                );
                for l in partitions_of(n) {
                    let c = unipotent_centralizer_order(&l, eps);
                    assert_eq!(c.degree(), Some(centralizer_dim(&l)));
                    assert!(c.is_monic());
                }
            }
        }
    }

    #[test]
    fn class_sizes() {
        for n in 1..=6 {
            for eps in BOTH {
                assert_eq!(class_size(&Partition::column(n), eps).unwrap(), q(&[1]));
                for l in partitions_of(n) {
                    let size = class_size(&l, eps).unwrap();
                    for q0 in 2..=5 {
                        let v = size.eval(&int(q0));
                        assert!(v.is_integer() && v > BigRational::zero(), "{l} at {q0}");
                    }
                }
            }
        }
        assert_eq!(
            class_size(&p(&[2]), Sign::Plus).unwrap().eval(&int(2)),
            int(3)
        );
        assert_eq!(
            class_size(&p(&[2]), Sign::Plus).unwrap().eval(&int(3)),
            int(8)
        );
    }

    #[test]
    fn unipotent_count_is_q_to_the_n_n_minus_one() {
        // Steinberg: GL_n(q) has q^{n(n-1)} unipotent elements; the Ennola
        // dual statement holds for GU_n.
        for n in 1..=6 {
            for eps in BOTH {
                let total = partitions_of(n)
                    .iter()
                    .fold(RationalPoly::zero(Var::Q), |acc, l| {
                        &acc + &class_size(l, eps).unwrap()
                    });
                assert_eq!(total, RationalPoly::monomial(Var::Q, int(1), n * (n - 1)));
            }
        }
    }
}
