//! Brute-force ground truth on groups small enough to list.
//!
//! Nothing here touches Green polynomials or Kawanaka's formula. The report
//! produced by [`run`] compares the enumerated data against the symbolic
//! pipeline evaluated at the same `q`.

mod cyclo;
mod field;
mod group;

pub use cyclo::CycloScalar;
pub use field::{prime_power, Elem, FiniteField};
pub use group::{ConjugacyClass, Matrix, MatrixGroup, ENUMERATION_CAP};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::Result;
use crate::grouporders::{class_size, group_order, GroupKind};
use crate::kawanaka::{endo_dim, KAWANAKA_CAP};
use crate::partitions::{partitions_of, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub partition: Partition,
    pub size: u64,
}

/// One oracle-versus-symbolic equality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub name: String,
    pub oracle: String,
    pub symbolic: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub q: u64,
    pub eps: i64,
    pub group_order: u64,
    pub classes: Vec<ClassEntry>,
    pub unipotent_count: u64,
    pub gelfand_graev_inner: String,
    pub regular_rep_inner: String,
    pub comparisons: Vec<Comparison>,
    pub pass: bool,
}

fn compare(name: impl Into<String>, oracle: &BigRational, symbolic: &BigRational) -> Comparison {
    Comparison {
        name: name.into(),
        oracle: oracle.to_string(),
        symbolic: symbolic.to_string(),
        pass: oracle == symbolic,
    }
}

fn int(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

/// Enumerates the group and checks its order, every unipotent class size,
/// the unipotent count, and both inner products against the symbolic
/// formulas at `q`.
pub fn run(kind: GroupKind, q: u64) -> Result<OracleReport> {
    let group = MatrixGroup::enumerate(kind, q)?;
    let n = kind.n;
    let q_rat = int(q);
    let mut comparisons = Vec::new();

    comparisons.push(compare(
        "group_order",
        &int(group.order()),
        &group_order(kind).eval(&q_rat),
    ));

    let sizes = group.unipotent_class_sizes();
    let mut classes = Vec::new();
    let mut unipotent_count = 0u64;
    for lambda in partitions_of(n) {
        let size = sizes.get(&lambda).copied().unwrap_or(0) as u64;
        unipotent_count += size;
        comparisons.push(compare(
            format!("class_size {lambda}"),
            &int(size),
            &class_size(&lambda, kind.eps)?.eval(&q_rat),
        ));
        classes.push(ClassEntry {
            partition: lambda,
            size,
        });
    }
    comparisons.push(compare(
        "unipotent_count",
        &int(unipotent_count),
        &num_traits::pow(q_rat.clone(), n * (n - 1)),
    ));

    let gg = group.gelfand_graev_inner()?;
    let reg = group.regular_rep_inner();
    if n <= KAWANAKA_CAP {
        comparisons.push(compare(
            "gelfand_graev_inner",
            &int(gg.clone()),
            &endo_dim(&Partition::row(n), kind.eps)?.eval(&q_rat),
        ));
        comparisons.push(compare(
            "regular_rep_inner",
            &int(reg.clone()),
            &endo_dim(&Partition::column(n), kind.eps)?.eval(&q_rat),
        ));
    }

    let pass = comparisons.iter().all(|c| c.pass);
    Ok(OracleReport {
        n,
        q,
        eps: kind.eps.value(),
        group_order: group.order() as u64,
        classes,
        unipotent_count,
        gelfand_graev_inner: gg.to_string(),
        regular_rep_inner: reg.to_string(),
        comparisons,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Sign;

    #[test]
    fn gl2_over_f3() {
        let report = run(GroupKind::new(2, Sign::Plus), 3).unwrap();
        assert!(report.pass, "{report:#?}");
        assert_eq!(report.group_order, 48);
        assert_eq!(report.gelfand_graev_inner, "6");
        assert_eq!(report.regular_rep_inner, "48");
        assert_eq!(report.unipotent_count, 9);
    }

    #[test]
    fn gu2_over_f2() {
        let report = run(GroupKind::new(2, Sign::Minus), 2).unwrap();
        assert!(report.pass, "{report:#?}");
        assert_eq!(
            report.classes[0],
            ClassEntry {
                partition: Partition::row(2),
                size: 3
            }
        );
    }
}
