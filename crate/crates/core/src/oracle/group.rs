//! `GL_n(q)` and `GU_n(q)` as explicit lists of matrices.
//!
//! `GU_n(q)` is the fixed-point group of `g ↦ J ᵗ(g^{[q]})^{-1} J` inside
//! `GL_n(q^2)`, where `g^{[q]}` raises every entry to the `q`-th power and
//! `J` is the antidiagonal matrix of ones. With this form the upper
//! unitriangular matrices of the group form a Sylow `p`-subgroup, which the
//! Gelfand–Graev computation needs.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::cyclo::CycloScalar;
use super::field::{Elem, FiniteField};
use crate::error::{Error, Result};
use crate::grouporders::GroupKind;
use crate::partitions::Partition;
use crate::polyring::Sign;

/// Enumeration refuses to scan more candidate matrices than this.
pub const ENUMERATION_CAP: u64 = 10_000_000;

pub type Matrix = Vec<Elem>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Index into [`MatrixGroup::elements`].
    pub representative: usize,
    pub size: usize,
    /// Jordan type of a unipotent class; `None` otherwise.
    pub jordan_type: Option<Partition>,
}

#[derive(Debug)]
pub struct MatrixGroup {
    pub kind: GroupKind,
    pub q: u64,
    field: FiniteField,
    elements: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
    inverse: Vec<usize>,
    classes: OnceLock<(Vec<ConjugacyClass>, Vec<usize>)>,
}

/// Linear algebra over a table field on `n × n` row-major matrices.
struct Ops<'a> {
    f: &'a FiniteField,
    n: usize,
}

impl Ops<'_> {
    fn identity(&self) -> Matrix {
        let n = self.n;
        (0..n * n).map(|k| (k / n == k % n) as Elem).collect()
    }

    fn mul(&self, a: &[Elem], b: &[Elem]) -> Matrix {
        let n = self.n;
        let mut out = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = a[i * n + k];
                if aik == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = self.f.add(out[i * n + j], self.f.mul(aik, b[k * n + j]));
                }
            }
        }
        out
    }

    fn sub(&self, a: &[Elem], b: &[Elem]) -> Matrix {
        a.iter().zip(b).map(|(&x, &y)| self.f.sub(x, y)).collect()
    }

    fn rank(&self, a: &[Elem]) -> usize {
        let n = self.n;
        let mut m = a.to_vec();
        let mut rank = 0;
        for col in 0..n {
            let Some(pivot) = (rank..n).find(|&r| m[r * n + col] != 0) else {
                continue;
            };
            for j in 0..n {
                m.swap(rank * n + j, pivot * n + j);
            }
            let inv = self.f.inv(m[rank * n + col]).expect("nonzero pivot");
            for r in 0..n {
                if r == rank || m[r * n + col] == 0 {
                    continue;
                }
                let factor = self.f.mul(m[r * n + col], inv);
                for j in 0..n {
                    let delta = self.f.mul(factor, m[rank * n + j]);
                    m[r * n + j] = self.f.sub(m[r * n + j], delta);
                }
            }
            rank += 1;
        }
        rank
    }

    fn inverse(&self, a: &[Elem]) -> Option<Matrix> {
        let n = self.n;
        let mut m = a.to_vec();
        let mut inv = self.identity();
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[r * n + col] != 0)?;
            for j in 0..n {
                m.swap(col * n + j, pivot * n + j);
                inv.swap(col * n + j, pivot * n + j);
            }
            let s = self.f.inv(m[col * n + col])?;
            for j in 0..n {
                m[col * n + j] = self.f.mul(m[col * n + j], s);
                inv[col * n + j] = self.f.mul(inv[col * n + j], s);
            }
            for r in 0..n {
                let factor = m[r * n + col];
                if r == col || factor == 0 {
                    continue;
                }
                for j in 0..n {
                    let dm = self.f.mul(factor, m[col * n + j]);
                    let di = self.f.mul(factor, inv[col * n + j]);
                    m[r * n + j] = self.f.sub(m[r * n + j], dm);
                    inv[r * n + j] = self.f.sub(inv[r * n + j], di);
                }
            }
        }
        Some(inv)
    }

    /// `ᵗ(a^{[q]}) J a == J` for the antidiagonal `J`.
    fn is_unitary(&self, a: &[Elem], q: u64) -> bool {
        let n = self.n;
        let bar: Vec<Elem> = a.iter().map(|&x| self.f.pow(x, q)).collect();
        for i in 0..n {
            for j in 0..n {
                let mut s = 0;
                for k in 0..n {
                    s = self
                        .f
                        .add(s, self.f.mul(bar[k * n + i], a[(n - 1 - k) * n + j]));
                }
                if s != (i + j == n - 1) as Elem {
                    return false;
                }
            }
        }
        true
    }

    fn is_upper_unitriangular(&self, a: &[Elem]) -> bool {
        let n = self.n;
        (0..n).all(|i| a[i * n + i] == 1 && (0..i).all(|j| a[i * n + j] == 0))
    }

    /// Jordan type of a unipotent matrix from the ranks of `(a - 1)^k`.
    fn jordan_type(&self, a: &[Elem]) -> Option<Partition> {
        let n = self.n;
        let nil = self.sub(a, &self.identity());
        let mut ranks = vec![n];
        let mut power = self.identity();
        for _ in 0..n {
            power = self.mul(&power, &nil);
            ranks.push(self.rank(&power));
        }
        if ranks[n] != 0 {
            return None;
        }
        // ranks[k-1] - ranks[k] = number of blocks of size >= k
        let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        Some(Partition::from_unsorted(at_least).conjugate())
    }
}

impl MatrixGroup {
    /// All elements of `GL_n(q)` or `GU_n(q)` in lexicographic order of
    /// their entries.
    pub fn enumerate(kind: GroupKind, q: u64) -> Result<Self> {
        let ambient = match kind.eps {
            Sign::Plus => q,
            Sign::Minus => q.checked_mul(q).ok_or(Error::NotPrimePower(q))?,
        };
        let field = FiniteField::new(ambient)?;
        let n = kind.n;
        let candidates = (ambient as f64).powi((n * n) as i32);
        if candidates > ENUMERATION_CAP as f64 {
            return Err(Error::GroupTooLarge(candidates as u64));
        }
        let ops = Ops { f: &field, n };
        let size = field.order();
        let mut elements = Vec::new();
        let mut entries: Matrix = vec![0; n * n];
        'scan: loop {
            let keep = match kind.eps {
                Sign::Plus => ops.rank(&entries) == n,
                Sign::Minus => ops.is_unitary(&entries, q),
            };
            if keep {
                elements.push(entries.clone());
            }
            // odometer, last entry fastest
            let mut k = n * n;
            loop {
                if k == 0 {
                    break 'scan;
                }
                k -= 1;
                if (entries[k] as usize) + 1 < size {
                    entries[k] += 1;
                    break;
                }
                entries[k] = 0;
            }
        }
        MatrixGroup::finish(kind, q, field, elements)
    }

    fn finish(kind: GroupKind, q: u64, field: FiniteField, elements: Vec<Matrix>) -> Result<Self> {
        let index: HashMap<Matrix, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let ops = Ops {
            f: &field,
            n: kind.n,
        };
        let inverse = elements
            .iter()
            .map(|m| {
                let inv = ops.inverse(m).expect("group elements are invertible");
                *index.get(&inv).expect("closed under inverses")
            })
            .collect();
        // closure under products, spot-checked on a deterministic sample
        let stride = (elements.len() / 17).max(1);
        for a in elements.iter().step_by(stride) {
            for b in elements.iter().step_by(stride) {
                assert!(index.contains_key(&ops.mul(a, b)), "closed under products");
            }
        }
        Ok(MatrixGroup {
            kind,
            q,
            field,
            elements,
            index,
            inverse,
            classes: OnceLock::new(),
        })
    }

    fn ops(&self) -> Ops<'_> {
        Ops {
            f: &self.field,
            n: self.kind.n,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    /// The field the matrix entries live in (`F_q`, or `F_{q^2}` for `GU`).
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn contains(&self, m: &[Elem]) -> bool {
        self.index.contains_key(m)
    }

    fn conjugate_index(&self, x: usize, g: usize) -> usize {
        let ops = self.ops();
        let h = ops.mul(
            &ops.mul(&self.elements[x], &self.elements[g]),
            &self.elements[self.inverse[x]],
        );
        self.index[&h]
    }

    fn class_data(&self) -> &(Vec<ConjugacyClass>, Vec<usize>) {
        self.classes.get_or_init(|| {
            let mut class_of = vec![usize::MAX; self.order()];
            let mut classes = Vec::new();
            for g in 0..self.order() {
                if class_of[g] != usize::MAX {
                    continue;
                }
                let id = classes.len();
                let mut size = 0;
                for x in 0..self.order() {
                    let h = self.conjugate_index(x, g);
                    if class_of[h] == usize::MAX {
                        class_of[h] = id;
                        size += 1;
                    }
                }
                classes.push(ConjugacyClass {
                    representative: g,
                    size,
                    jordan_type: self.ops().jordan_type(&self.elements[g]),
                });
            }
            (classes, class_of)
        })
    }

    /// All conjugacy classes, ordered by their first element.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.class_data().0
    }

    /// Sizes of the unipotent classes keyed by Jordan type.
    pub fn unipotent_class_sizes(&self) -> HashMap<Partition, usize> {
        let mut out = HashMap::new();
        for c in self.conjugacy_classes() {
            if let Some(l) = &c.jordan_type {
                assert!(
                    out.insert(l.clone(), c.size).is_none(),
                    "one class per Jordan type"
                );
            }
        }
        out
    }

    /// Indices of the upper unitriangular elements.
    pub fn unitriangular(&self) -> Vec<usize> {
        let ops = self.ops();
        (0..self.order())
            .filter(|&i| ops.is_upper_unitriangular(&self.elements[i]))
            .collect()
    }

    /// Groups of superdiagonal positions permuted by the Frobenius.
    fn simple_root_orbits(&self) -> Vec<Vec<usize>> {
        let n = self.kind.n;
        let mut out: Vec<Vec<usize>> = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let orbit = match self.kind.eps {
                Sign::Plus => vec![i],
                Sign::Minus => {
                    let j = n - 2 - i;
                    if j < i {
                        continue;
                    }
                    if i == j {
                        vec![i]
                    } else {
                        vec![i, j]
                    }
                }
            };
            out.push(orbit);
        }
        out
    }

    fn superdiagonal(&self, u: usize) -> Vec<Elem> {
        let n = self.kind.n;
        let m = &self.elements[u];
        (0..n.saturating_sub(1)).map(|i| m[i * n + i + 1]).collect()
    }

    /// Exponent `k` with `ψ_c(u) = ζ_p^k`, where
    /// `ψ_c(u) = ζ_p^{Tr(c · Σ_i u_{i,i+1})}`.
    fn psi_exponent(&self, c: Elem, u: usize) -> usize {
        let f = &self.field;
        let s = self
            .superdiagonal(u)
            .into_iter()
            .fold(0, |acc, x| f.add(acc, x));
        f.trace(f.mul(c, s))
    }

    /// Whether `ψ_c` is nontrivial on every simple root subgroup.
    pub fn is_nondegenerate(&self, c: Elem) -> bool {
        let unitri = self.unitriangular();
        self.simple_root_orbits().iter().all(|orbit| {
            unitri.iter().any(|&u| {
                let sd = self.superdiagonal(u);
                let supported = sd
                    .iter()
                    .enumerate()
                    .all(|(i, &x)| x == 0 || orbit.contains(&i));
                supported && self.psi_exponent(c, u) != 0
            })
        })
    }

    /// The first `c` (in field-element order) giving a nondegenerate `ψ_c`.
    pub fn default_character(&self) -> Elem {
        self.field
            .elements()
            .skip(1)
            .find(|&c| self.is_nondegenerate(c))
            .expect("a nondegenerate character exists")
    }

    /// Values of `Ind_U^G ψ_c` on each conjugacy class.
    ///
    /// `χ(g) = |U|^{-1} Σ_{x : xgx^{-1} ∈ U} ψ(xgx^{-1})`; each `u ∈ U`
    /// conjugate to `g` is reached by exactly `|C_G(g)|` elements `x`, so the
    /// sum is collected over `U` and weighted by the centralizer order.
    pub fn gelfand_graev_character(&self, c: Elem) -> Vec<CycloScalar> {
        let p = self.field.characteristic();
        let (classes, class_of) = self.class_data();
        let unitri = self.unitriangular();
        let mut counts = vec![vec![BigRational::zero(); p]; classes.len()];
        for &u in &unitri {
            counts[class_of[u]][self.psi_exponent(c, u)] += BigRational::from_integer(1.into());
        }
        classes
            .iter()
            .zip(counts)
            .map(|(class, row)| {
                let weight = BigRational::new(
                    BigInt::from(self.order() / class.size),
                    BigInt::from(unitri.len()),
                );
                CycloScalar::from_group_ring(p, &row).scale(&weight)
            })
            .collect()
    }

    /// `⟨Ind_U^G ψ_c, Ind_U^G ψ_c⟩`.
    pub fn gelfand_graev_inner_with(&self, c: Elem) -> Result<BigInt> {
        let p = self.field.characteristic();
        let chi = self.gelfand_graev_character(c);
        let mut total = CycloScalar::zero(p);
        for (class, value) in self.conjugacy_classes().iter().zip(&chi) {
            let term = (value * &value.conj()).scale(&BigRational::from_integer(class.size.into()));
            total = &total + &term;
        }
        let total = total.scale(&BigRational::new(1.into(), self.order().into()));
        total
            .to_integer()
            .ok_or_else(|| Error::NonInteger(format!("{total:?}")))
    }

    pub fn gelfand_graev_inner(&self) -> Result<BigInt> {
        self.gelfand_graev_inner_with(self.default_character())
    }

    /// `⟨χ_reg, χ_reg⟩ = |G|`.
    pub fn regular_rep_inner(&self) -> BigInt {
        // χ_reg is |G| at the identity and 0 elsewhere
        let degree = BigInt::from(self.order());
        &degree * &degree / BigInt::from(self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn gl(n: usize, q: u64) -> MatrixGroup {
        MatrixGroup::enumerate(GroupKind::new(n, Sign::Plus), q).unwrap()
    }

    fn gu(n: usize, q: u64) -> MatrixGroup {
        MatrixGroup::enumerate(GroupKind::new(n, Sign::Minus), q).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(gl(1, 5).order(), 4);
        assert_eq!(gl(2, 2).order(), 6);
        assert_eq!(gl(2, 3).order(), 48);
        assert_eq!(gl(3, 2).order(), 168);
        assert_eq!(gu(1, 2).order(), 3);
        assert_eq!(gu(2, 2).order(), 18);
        assert_eq!(gu(2, 3).order(), 96);
    }

    #[test]
    fn size_cap() {
        assert!(matches!(
            MatrixGroup::enumerate(GroupKind::new(4, Sign::Plus), 3),
            Err(Error::GroupTooLarge(_))
        ));
        assert!(MatrixGroup::enumerate(GroupKind::new(2, Sign::Plus), 6).is_err());
    }

    #[test]
    fn classes_partition_the_group() {
        for g in [gl(2, 2), gl(2, 3), gu(2, 2)] {
            let total: usize = g.conjugacy_classes().iter().map(|c| c.size).sum();
            assert_eq!(total, g.order());
        }
        let sizes = gl(2, 2).unipotent_class_sizes();
        assert_eq!(sizes[&p(&[1, 1])], 1);
        assert_eq!(sizes[&p(&[2])], 3);
        assert_eq!(gl(2, 3).unipotent_class_sizes()[&p(&[2])], 8);
        assert_eq!(gl(2, 2).conjugacy_classes().len(), 3);
    }

    #[test]
    fn sylow_subgroup() {
        assert_eq!(gl(3, 2).unitriangular().len(), 8);
        assert_eq!(gu(2, 2).unitriangular().len(), 2);
        assert_eq!(gu(2, 3).unitriangular().len(), 3);
        assert_eq!(gu(3, 2).unitriangular().len(), 8);
    }

    #[test]
    fn gelfand_graev_small() {
        assert_eq!(gl(2, 2).gelfand_graev_inner().unwrap(), 2.into());
        assert_eq!(gl(2, 3).gelfand_graev_inner().unwrap(), 6.into());
        assert_eq!(gu(2, 2).gelfand_graev_inner().unwrap(), 6.into());
    }

    #[test]
    fn character_choice_does_not_matter() {
        let g = gl(2, 3);
        assert!(g.is_nondegenerate(1) && g.is_nondegenerate(2));
        assert!(!g.is_nondegenerate(0));
        assert_eq!(
            g.gelfand_graev_inner_with(1).unwrap(),
            g.gelfand_graev_inner_with(2).unwrap()
        );
        // the degenerate choice gives Ind_U^G 1, which is larger
        assert!(g.gelfand_graev_inner_with(0).unwrap() > 6.into());
    }

    #[test]
    fn gelfand_graev_degree() {
        // Ind_U^G ψ at the identity has degree |G|/|U|
        let g = gl(3, 2);
        let chi = g.gelfand_graev_character(g.default_character());
        let identity_class = g
            .conjugacy_classes()
            .iter()
            .position(|c| c.size == 1 && c.jordan_type == Some(Partition::column(3)))
            .unwrap();
        assert_eq!(chi[identity_class].to_integer(), Some(21.into()));
    }

    #[test]
    fn regular_representation() {
        assert_eq!(gl(2, 2).regular_rep_inner(), 6.into());
        assert_eq!(gl(2, 3).regular_rep_inner(), 48.into());
        assert_eq!(gu(2, 2).regular_rep_inner(), 18.into());
    }
}
