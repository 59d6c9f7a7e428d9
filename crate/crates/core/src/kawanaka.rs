//! Generalised Gelfand–Graev characters of `GL_n(q)` / `GU_n(q)` from
//! Kawanaka's formula, and the dimension of their endomorphism algebras.
//!
//! For `μ, λ ⊢ n` the character value of `γ_μ` on the unipotent class `λ` is
//!
//! ```text
//! γ_μ(λ) = ε^{n(μ)} Σ_ρ |W_ρ|^{-1} sgn_ε(ρ) q^n e_ρ((εq)^{-1}) X_ρ^μ(εq) Q_ρ^λ(εq)
//! ```
//!
//! and `γ_μ` vanishes off the unipotent elements, so
//!
//! ```text
//! dim End(Γ_μ) = ⟨γ_μ, γ_μ⟩ = |G^F|^{-1} Σ_λ |λ^F| γ_μ(λ)^2.
//! ```
//!
//! The numerator is a polynomial in `q`; [`endo_dim`] divides it by `|G^F|`
//! with exact long division and fails if anything is left over.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::green::{green_table, GreenTable};
use crate::grouporders::{
    centralizer_dim, class_size, group_order, sgn_eps, torus_order_from_e, GroupKind,
};
use crate::partitions::{Partition, PIPELINE_CAP};
use crate::polyring::{LaurentPoly, RationalPoly, Sign, Var};

/// Largest `n` accepted by the functions in this module.
pub const KAWANAKA_CAP: usize = PIPELINE_CAP;

/// Prime powers at which [`verify_theorem`] spot-checks integrality.
pub const SAMPLE_Q: [i64; 4] = [2, 3, 4, 5];

fn check_cap(n: usize) -> Result<()> {
    if n == 0 || n > KAWANAKA_CAP {
        Err(Error::CapExceeded {
            what: "Kawanaka pipeline",
            n,
            cap: KAWANAKA_CAP,
        })
    } else {
        Ok(())
    }
}

/// Values of `γ_μ` on every unipotent class, keyed by Jordan type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GGGRCharacter {
    pub mu: Partition,
    pub eps: Sign,
    pub values: BTreeMap<Partition, LaurentPoly>,
}

/// The `ρ`-dependent factor `|W_ρ|^{-1} sgn_ε(ρ) q^n e_ρ((εq)^{-1})`,
/// one entry per row of the Green table.
fn torus_weights(table: &GreenTable, eps: Sign) -> Vec<LaurentPoly> {
    table
        .labels
        .iter()
        .map(|rho| {
            let w = BigRational::new(
                BigInt::from(sgn_eps(rho, eps)),
                BigInt::from(rho.weyl_centralizer_order()),
            );
            torus_order_from_e(rho, eps).scale(&w)
        })
        .collect()
}

fn character_from_table(table: &GreenTable, mu_index: usize, eps: Sign) -> Result<GGGRCharacter> {
    let mu = &table.labels[mu_index];
    let weights = torus_weights(table, eps);
    let green = table.specialize(eps);
    let prefactor = BigRational::from_integer(eps.pow(mu.n_stat() as i64).into());
    // weight_ρ · X_ρ^μ(εq), shared by every column λ
    let row_factor: Vec<LaurentPoly> = weights
        .iter()
        .enumerate()
        .map(|(r, w)| w * &table.x(r, mu_index).to_laurent().substitute_signed(eps))
        .collect();
    let mut values = BTreeMap::new();
    for (l, lambda) in table.labels.iter().enumerate() {
        let sum = row_factor
            .iter()
            .enumerate()
            .fold(LaurentPoly::zero(Var::Q), |acc, (r, f)| {
                &acc + &(f * &green[r][l])
            });
        let value = sum.scale(&prefactor);
        if value.valuation() < 0 {
            return Err(Error::NonExactDivision(format!(
                "gamma_{mu}({lambda}) has negative powers of q: {value}"
            )));
        }
        values.insert(lambda.clone(), value);
    }
    Ok(GGGRCharacter {
        mu: mu.clone(),
        eps,
        values,
    })
}

/// `γ_μ` on all unipotent classes.
pub fn gggr_character(mu: &Partition, eps: Sign) -> Result<GGGRCharacter> {
    check_cap(mu.size())?;
    let table = green_table(mu.size())?;
    let index = table
        .index_of(mu)
        .expect("mu labels a row of its own table");
    character_from_table(&table, index, eps)
}

/// `γ_μ(λ)`.
pub fn gggr_value(mu: &Partition, lambda: &Partition, eps: Sign) -> Result<LaurentPoly> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch(mu.size(), lambda.size()));
    }
    Ok(gggr_character(mu, eps)?
        .values
        .remove(lambda)
        .expect("every class is present"))
}

fn endo_from_character(chi: &GGGRCharacter) -> Result<RationalPoly> {
    let n = chi.mu.size();
    let mut numerator = RationalPoly::zero(Var::Q);
    for (lambda, value) in &chi.values {
        let value = value.to_poly().expect("checked nonnegative valuation");
        numerator = &numerator + &(&class_size(lambda, chi.eps)? * &(&value * &value));
    }
    let (quotient, remainder) = numerator.div_rem(&group_order(GroupKind::new(n, chi.eps)))?;
    if !remainder.is_zero() {
        return Err(Error::NonzeroRemainder(chi.mu.clone()));
    }
    Ok(quotient)
}

/// `⟨γ_μ, γ_μ⟩` as a polynomial in `q`.
pub fn endo_dim(mu: &Partition, eps: Sign) -> Result<RationalPoly> {
    endo_from_character(&gggr_character(mu, eps)?)
}

/// Outcome for a single `μ` in [`verify_theorem`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuRecord {
    pub mu: Partition,
    pub poly: Option<RationalPoly>,
    pub degree: Option<usize>,
    pub leading_coeff: Option<String>,
    pub target_degree: usize,
    /// The numerator was divisible by `|G^F|` with zero remainder.
    pub polynomial: bool,
    pub monic: bool,
    pub degree_matches: bool,
    /// Positive integer values at every `q₀` in [`SAMPLE_Q`].
    pub integral_at_samples: bool,
    pub error: Option<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    #[serde(serialize_with = "serialize_sign")]
    pub eps: Sign,
    pub results: Vec<MuRecord>,
    pub pass: bool,
}

fn serialize_sign<S: serde::Serializer>(eps: &Sign, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_i64(eps.value())
}

fn positive_integer(x: &BigRational) -> bool {
    x.is_integer() && *x > BigRational::zero()
}

fn record_for(table: &GreenTable, index: usize, eps: Sign) -> MuRecord {
    let mu = table.labels[index].clone();
    let target_degree = centralizer_dim(&mu);
    let outcome = character_from_table(table, index, eps).and_then(|chi| endo_from_character(&chi));
    match outcome {
        Ok(poly) => {
            let degree = poly.degree();
            let monic = poly.is_monic();
            let degree_matches = degree == Some(target_degree);
            let integral_at_samples = SAMPLE_Q
                .iter()
                .all(|&q0| positive_integer(&poly.eval(&BigRational::from_integer(q0.into()))));
            let lead = poly.leading_coeff();
            MuRecord {
                mu,
                degree,
                leading_coeff: Some(lead.to_string()),
                target_degree,
                polynomial: true,
                monic,
                degree_matches,
                integral_at_samples,
                error: None,
                pass: monic && degree_matches && integral_at_samples,
                poly: Some(poly),
            }
        }
        Err(e) => MuRecord {
            mu,
            poly: None,
            degree: None,
            leading_coeff: None,
            target_degree,
            polynomial: false,
            monic: false,
            degree_matches: false,
            integral_at_samples: false,
            error: Some(e.to_string()),
            pass: false,
        },
    }
}

/// Runs the endomorphism-dimension computation for every `μ ⊢ n` and checks
/// that each result is a monic polynomial of degree `n + 2n(μ)`.
pub fn verify_theorem(n: usize, eps: Sign) -> Result<VerificationReport> {
    check_cap(n)?;
    let table = green_table(n)?;
    let results: Vec<MuRecord> = (0..table.labels.len())
        .into_par_iter()
        .map(|i| record_for(&table, i, eps))
        .collect();
    let pass = results.iter().all(|r| r.pass);
    Ok(VerificationReport {
        n,
        eps,
        results,
        pass,
    })
}

/// `(q - ε) q^{n-1}`, the expected value of `⟨γ_(n), γ_(n)⟩`: the
/// Gelfand–Graev representation is multiplicity free with `|Z^F| q^{l}`
/// constituents.
pub fn gelfand_graev_expected(n: usize, eps: Sign) -> RationalPoly {
    let center = RationalPoly::from_ints(Var::Q, &[-eps.value(), 1]);
    &center * &RationalPoly::monomial(Var::Q, BigRational::one(), n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(coeffs: &[i64]) -> RationalPoly {
        RationalPoly::from_ints(Var::Q, coeffs)
    }

    const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    #[test]
    fn rank_one() {
        assert_eq!(
            gggr_value(&p(&[1]), &p(&[1]), Sign::Plus).unwrap(),
            q(&[-1, 1]).to_laurent()
        );
        assert_eq!(
            gggr_value(&p(&[1]), &p(&[1]), Sign::Minus).unwrap(),
            q(&[1, 1]).to_laurent()
        );
        assert_eq!(endo_dim(&p(&[1]), Sign::Plus).unwrap(), q(&[-1, 1]));
    }

    #[test]
    fn gelfand_graev_of_gl2_by_hand() {
        // degree |G|/|U| = (q-1)(q^2-1); value -(q-1) on the regular class
        let chi = gggr_character(&p(&[2]), Sign::Plus).unwrap();
        assert_eq!(chi.values[&p(&[1, 1])], q(&[1, -1, -1, 1]).to_laurent());
        assert_eq!(chi.values[&p(&[2])], q(&[1, -1]).to_laurent());
        let chi = gggr_character(&p(&[2]), Sign::Minus).unwrap();
        assert_eq!(chi.values[&p(&[1, 1])], q(&[-1, -1, 1, 1]).to_laurent());
        assert_eq!(chi.values[&p(&[2])], q(&[-1, -1]).to_laurent());
    }

    #[test]
    fn trivial_class_is_the_regular_representation() {
        for n in 1..=4 {
            for eps in BOTH {
                let chi = gggr_character(&Partition::column(n), eps).unwrap();
                for (lambda, value) in &chi.values {
                    if *lambda == Partition::column(n) {
                        assert_eq!(
                            value.to_poly().unwrap(),
                            group_order(GroupKind::new(n, eps))
                        );
                    } else {
                        assert!(value.is_zero(), "{lambda}");
                    }
                }
            }
        }
    }

    #[test]
    fn values_are_integers_at_prime_powers() {
        for n in 1..=4 {
            for eps in BOTH {
                for mu in partitions_of(n) {
                    for value in gggr_character(&mu, eps).unwrap().values.values() {
                        for q0 in SAMPLE_Q {
                            assert!(value.eval_int(q0).unwrap().is_integer());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn regular_class_counts_constituents() {
        for n in 1..=4 {
            for eps in BOTH {
                assert_eq!(
                    endo_dim(&Partition::row(n), eps).unwrap(),
                    gelfand_graev_expected(n, eps)
                );
            }
        }
    }

    #[test]
    fn report_records() {
        let report = verify_theorem(3, Sign::Plus).unwrap();
        assert!(report.pass);
        assert_eq!(report.results.len(), 3);
        let mus: Vec<_> = report.results.iter().map(|r| r.mu.clone()).collect();
        assert_eq!(mus, partitions_of(3));
        assert_eq!(report.results[1].target_degree, 5);
        assert_eq!(report.results[1].degree, Some(5));
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["eps"], 1);
        assert_eq!(json["results"][2]["mu"], serde_json::json!([1, 1, 1]));
        assert_eq!(json["results"][2]["degree"], 9);
        assert_eq!(json["pass"], true);
        assert!(verify_theorem(0, Sign::Plus).is_err());
        assert!(verify_theorem(KAWANAKA_CAP + 1, Sign::Plus).is_err());
    }

    #[test]
    fn size_mismatch() {
        assert_eq!(
            gggr_value(&p(&[2]), &p(&[1]), Sign::Plus),
            Err(Error::SizeMismatch(2, 1))
        );
    }
}
