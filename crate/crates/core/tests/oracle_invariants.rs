//! Brute-force enumeration against the symbolic formulas on a few more
//! groups than the acceptance suite covers.

use num_bigint::BigInt;
use num_rational::BigRational;

use gggr::grouporders::{class_size, group_order, GroupKind};
use gggr::kawanaka::endo_dim;
use gggr::oracle::{self, MatrixGroup};
use gggr::partitions::{partitions_of, Partition};
use gggr::polyring::Sign;

fn at(q: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(q))
}

#[test]
fn gl3_f2_inner_products() {
    let group = MatrixGroup::enumerate(GroupKind::new(3, Sign::Plus), 2).unwrap();
    assert_eq!(group.order(), 168);
    assert_eq!(group.gelfand_graev_inner().unwrap(), BigInt::from(4));
    assert_eq!(group.regular_rep_inner(), BigInt::from(168));
    let unipotent: usize = group.unipotent_class_sizes().values().sum();
    assert_eq!(unipotent, 64);
}

#[test]
fn further_groups() {
    for (n, q, eps) in [
        (2, 4, Sign::Plus),
        (2, 5, Sign::Plus),
        (2, 3, Sign::Minus),
        (3, 3, Sign::Plus),
        (3, 2, Sign::Minus),
    ] {
        let report = oracle::run(GroupKind::new(n, eps), q).unwrap();
        assert!(
            report.pass,
            "n={n} q={q} eps={eps}: {:#?}",
            report.comparisons
        );
    }
}

#[test]
fn class_sizes_sum_to_unipotent_count() {
    for eps in [Sign::Plus, Sign::Minus] {
        for n in 1..=5 {
            let total = partitions_of(n)
                .iter()
                .map(|l| class_size(l, eps).unwrap())
                .reduce(|a, c| &a + &c)
                .unwrap();
            for q in [2, 3, 4, 5] {
                assert_eq!(total.eval(&at(q)), num_traits::pow(at(q), n * (n - 1)));
            }
        }
    }
}

#[test]
fn endo_dim_matches_group_specializations() {
    for eps in [Sign::Plus, Sign::Minus] {
        for n in 1..=3 {
            let g = group_order(GroupKind::new(n, eps));
            let reg = endo_dim(&Partition::column(n), eps).unwrap();
            for q in [2, 3, 4, 5, 7, 8, 9] {
                assert_eq!(reg.eval(&at(q)), g.eval(&at(q)));
            }
        }
    }
}
