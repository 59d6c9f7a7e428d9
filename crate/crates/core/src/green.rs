//! Green polynomials of `GL_n` and their `ε`-specializations.
//!
//! `Q_ρ^λ(t) = t^{n(λ)} X_ρ^λ(t^{-1})`, with `X` from [`crate::symfunc`].
//! Tables are built once per `n` and shared.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grouporders::{class_size, group_order, torus_order, GroupKind};
use crate::partitions::{partitions_of, Partition, PIPELINE_CAP};
use crate::polyring::{LaurentPoly, RationalPoly, Sign, Var};
use crate::symfunc::{x_poly, x_table};

/// Largest `n` for which Green tables are built.
pub const GREEN_CAP: usize = PIPELINE_CAP;

pub fn green_poly(rho: &Partition, lambda: &Partition) -> Result<RationalPoly> {
    let x = x_poly(rho, lambda)?;
    Ok(reciprocal(&x, lambda))
}

fn reciprocal(x: &RationalPoly, lambda: &Partition) -> RationalPoly {
    x.to_laurent()
        .reciprocal_shift(lambda.n_stat() as i64)
        .to_poly()
        .expect("deg X_rho^lambda = n(lambda)")
}

/// `Q_ρ^λ(t)` for all `ρ, λ ⊢ n`, rows `ρ` and columns `λ` both in
/// [`partitions_of`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenTable {
    pub n: usize,
    pub labels: Vec<Partition>,
    entries: Vec<Vec<RationalPoly>>,
    x: Vec<Vec<RationalPoly>>,
}

impl GreenTable {
    fn build(n: usize) -> Result<Self> {
        let labels = partitions_of(n);
        let x = x_table(n)?;
        let entries = x
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&labels)
                    .map(|(x, l)| reciprocal(x, l))
                    .collect()
            })
            .collect();
        Ok(GreenTable {
            n,
            labels,
            entries,
            x,
        })
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.labels.iter().position(|l| l == lambda)
    }

    /// `Q_ρ^λ(t)` by row/column index.
    pub fn q(&self, rho: usize, lambda: usize) -> &RationalPoly {
        &self.entries[rho][lambda]
    }

    /// `X_ρ^λ(t)` by row/column index.
    pub fn x(&self, rho: usize, lambda: usize) -> &RationalPoly {
        &self.x[rho][lambda]
    }

    /// `Q_ρ^λ(εq)` for every entry.
    pub fn specialize(&self, eps: Sign) -> Vec<Vec<LaurentPoly>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|f| f.to_laurent().substitute_signed(eps))
                    .collect()
            })
            .collect()
    }

    /// The JSON dump `{"n", "eps", "rows": [{"rho", "cols": [{"lambda", "poly"}]}]}`
    /// with each `poly` the specialization `Q_ρ^λ(εq)`.
    pub fn to_json(&self, eps: Sign) -> GreenTableJson {
        let special = self.specialize(eps);
        GreenTableJson {
            n: self.n,
            eps: eps.value(),
            rows: self
                .labels
                .iter()
                .zip(special)
                .map(|(rho, row)| GreenRowJson {
                    rho: rho.clone(),
                    cols: self
                        .labels
                        .iter()
                        .zip(row)
                        .map(|(lambda, poly)| GreenCellJson {
                            lambda: lambda.clone(),
                            poly,
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GreenTableJson {
    pub n: usize,
    pub eps: i64,
    pub rows: Vec<GreenRowJson>,
}

#[derive(Debug, Serialize)]
pub struct GreenRowJson {
    pub rho: Partition,
    pub cols: Vec<GreenCellJson>,
}

#[derive(Debug, Serialize)]
pub struct GreenCellJson {
    pub lambda: Partition,
    pub poly: LaurentPoly,
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<GreenTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GreenTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The (cached) Green table for `n`.
pub fn green_table(n: usize) -> Result<Arc<GreenTable>> {
    if n == 0 || n > GREEN_CAP {
        return Err(Error::CapExceeded {
            what: "Green table",
            n,
            cap: GREEN_CAP,
        });
    }
    if let Some(table) = cache().lock().expect("green cache").get(&n) {
        return Ok(Arc::clone(table));
    }
    // built outside the lock; a concurrent builder produces an equal table
    let table = Arc::new(GreenTable::build(n)?);
    let mut guard = cache().lock().expect("green cache");
    Ok(Arc::clone(guard.entry(n).or_insert(table)))
}

/// A pair `(ρ, π)` at which the orthogonality relation fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityFailure {
    pub rho: Partition,
    pub pi: Partition,
    /// `Σ_λ |λ^F| Q_ρ^λ(εq) Q_π^λ(εq)`, to be divided by `|G^F|`.
    pub lhs_numerator: RationalPoly,
    /// `δ_{ρπ} |W_ρ|`, to be divided by `|T_ρ^F|`.
    pub rhs_numerator: RationalPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub n: usize,
    pub eps: Sign,
    pub pairs_checked: usize,
    pub failure: Option<OrthogonalityFailure>,
}

impl OrthogonalityReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks `|G^F|^{-1} Σ_λ |λ^F| Q_ρ^λ(εq) Q_π^λ(εq) = δ_{ρπ} |W_ρ| / |T_ρ^F|`
/// for all `ρ, π ⊢ n` as an identity of rational functions in `q`.
pub fn verify_orthogonality(n: usize, eps: Sign) -> Result<OrthogonalityReport> {
    let table = green_table(n)?;
    let special: Vec<Vec<RationalPoly>> = table
        .specialize(eps)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|f| f.to_poly().expect("polynomial"))
                .collect()
        })
        .collect();
    let sizes: Vec<RationalPoly> = table
        .labels
        .iter()
        .map(|l| class_size(l, eps))
        .collect::<Result<_>>()?;
    let group = group_order(GroupKind::new(n, eps));
    let mut report = OrthogonalityReport {
        n,
        eps,
        pairs_checked: 0,
        failure: None,
    };
    for (r, rho) in table.labels.iter().enumerate() {
        let torus = torus_order(rho, eps);
        for (s, pi) in table.labels.iter().enumerate() {
            let lhs = (0..table.labels.len()).fold(RationalPoly::zero(Var::Q), |acc, l| {
                &acc + &(&sizes[l] * &(&special[r][l] * &special[s][l]))
            });
            let rhs = if r == s {
                RationalPoly::constant(
                    Var::Q,
                    BigRational::from_integer(BigInt::from(rho.weyl_centralizer_order())),
                )
            } else {
                RationalPoly::zero(Var::Q)
            };
            report.pairs_checked += 1;
            if &lhs * &torus != &rhs * &group {
                report.failure = Some(OrthogonalityFailure {
                    rho: rho.clone(),
                    pi: pi.clone(),
                    lhs_numerator: lhs,
                    rhs_numerator: rhs,
                });
                return Ok(report);
            }
        }
    }
    Ok(report)
}
