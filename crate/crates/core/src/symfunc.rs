//! The transition coefficients `X_ρ^λ(t)` defined by
//! `p_ρ = Σ_λ X_ρ^λ(t) P_λ(x; t)`.
//!
//! Two independent routes are provided:
//!
//! * [`x_poly`]: `X_ρ^λ(t) = Σ_μ χ^μ(ρ) K_{μλ}(t)`, with `χ^μ` from the
//!   Murnaghan–Nakayama rule and `K_{μλ}` the Kostka–Foulkes polynomial
//!   computed from the charge statistic on semistandard tableaux.
//! * [`hall_littlewood_expand`]: build `P_λ(x_1..x_n; t)` from its
//!   symmetrization formula, expand `p_ρ` in monomials, and solve the
//!   unitriangular system.
//!
//! The second route is exponential in `n` and exists to check the first.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::polyring::{RationalPoly, Var};

/// Largest `n` accepted by [`character_table`].
pub const CHARACTER_TABLE_CAP: usize = 12;

/// Largest `n` accepted by [`hall_littlewood_expand`].
pub const HALL_LITTLEWOOD_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    PowerSum,
    Schur,
    HallLittlewoodP,
}

/// A homogeneous symmetric function of degree `n` with coefficients in `Q[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    pub basis: Basis,
    pub degree: usize,
    coeffs: BTreeMap<Partition, RationalPoly>,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc {
            basis,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// Coefficient of the basis element indexed by `lambda`; zero if absent.
    pub fn coeff(&self, lambda: &Partition) -> RationalPoly {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(|| RationalPoly::zero(Var::T))
    }

    pub fn set(&mut self, lambda: Partition, c: RationalPoly) -> Result<()> {
        if lambda.size() != self.degree {
            return Err(Error::SizeMismatch(lambda.size(), self.degree));
        }
        if c.is_zero() {
            self.coeffs.remove(&lambda);
        } else {
            self.coeffs.insert(lambda, c);
        }
        Ok(())
    }

    /// Nonzero coefficients, ordered by partition.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &RationalPoly)> {
        self.coeffs.iter()
    }
}

fn check_sizes(a: &Partition, b: &Partition) -> Result<()> {
    if a.size() == b.size() {
        Ok(())
    } else {
        Err(Error::SizeMismatch(a.size(), b.size()))
    }
}

/// Irreducible character `χ^μ` of `S_n` at a permutation of cycle type `ρ`.
pub fn mn_character(mu: &Partition, rho: &Partition) -> Result<i64> {
    check_sizes(mu, rho)?;
    let len = mu.len();
    // beta-set of mu: positions of the beads on the abacus
    let mut beads: Vec<bool> = vec![false; mu.part(0) + len];
    for (i, &p) in mu.parts().iter().enumerate() {
        beads[p + len - 1 - i] = true;
    }
    Ok(strip_off(&mut beads, rho.parts()))
}

fn strip_off(beads: &mut [bool], hooks: &[usize]) -> i64 {
    let Some((&k, rest)) = hooks.split_first() else {
        return 1;
    };
    let mut total = 0;
    for b in k..beads.len() {
        if !beads[b] || beads[b - k] {
            continue;
        }
        let crossed = beads[b - k + 1..b].iter().filter(|&&x| x).count();
        beads[b] = false;
        beads[b - k] = true;
        let value = strip_off(beads, rest);
        beads[b - k] = false;
        beads[b] = true;
        total += if crossed % 2 == 0 { value } else { -value };
    }
    total
}

/// Character table of `S_n`: rows are irreducibles `μ`, columns cycle types
/// `ρ`, both in [`partitions_of`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub labels: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn value(&self, mu: usize, rho: usize) -> i64 {
        self.values[mu][rho]
    }
}

pub fn character_table(n: usize) -> Result<CharacterTable> {
    if n == 0 || n > CHARACTER_TABLE_CAP {
        return Err(Error::CapExceeded {
            what: "character table",
            n,
            cap: CHARACTER_TABLE_CAP,
        });
    }
    let labels = partitions_of(n);
    let values = labels
        .iter()
        .map(|mu| labels.iter().map(|rho| mn_character(mu, rho)).collect())
        .collect::<Result<_>>()?;
    Ok(CharacterTable { n, labels, values })
}

/// Semistandard tableaux of shape `shape` and content `content`, each given
/// as its rows.
fn semistandard_tableaux(shape: &Partition, content: &Partition) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    if shape.size() != content.size() || !shape.dominates(content) {
        return out;
    }
    let rows = vec![Vec::new(); shape.len()];
    place_letter(shape, content.parts(), 1, rows, &mut out);
    out
}

// Letter `letter` occupies a horizontal strip of length content[letter-1]
// added to the shape filled so far.
fn place_letter(
    shape: &Partition,
    content: &[usize],
    letter: usize,
    rows: Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    let Some(&count) = content.get(letter - 1) else {
        out.push(rows);
        return;
    };
    let inner: Vec<usize> = rows.iter().map(Vec::len).collect();
    let mut added = vec![0; rows.len()];
    strips(shape, &inner, count, 0, &mut added, &mut |added| {
        let mut next = rows.clone();
        for (row, &a) in next.iter_mut().zip(added) {
            row.extend(std::iter::repeat_n(letter, a));
        }
        place_letter(shape, content, letter + 1, next, out);
    });
}

fn strips(
    shape: &Partition,
    inner: &[usize],
    remaining: usize,
    row: usize,
    added: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if row == inner.len() {
        if remaining == 0 {
            emit(added);
        }
        return;
    }
    // a horizontal strip may not extend past the old end of the row above
    let ceiling = if row == 0 {
        shape.part(0)
    } else {
        inner[row - 1]
    }
    .min(shape.part(row));
    let room = ceiling.saturating_sub(inner[row]).min(remaining);
    for a in (0..=room).rev() {
        added[row] = a;
        strips(shape, inner, remaining - a, row + 1, added, emit);
    }
    added[row] = 0;
}

/// Row reading word: rows from the bottom of the diagram to the top, each
/// read left to right.
fn reading_word(rows: &[Vec<usize>]) -> Vec<usize> {
    rows.iter().rev().flatten().copied().collect()
}

/// Charge of a word whose content is a partition.
///
/// Standard subwords are peeled off one at a time: start from the rightmost
/// unused `1`, then repeatedly move left (cyclically) to the nearest unused
/// `k+1`. Each wrap-around increments the index; the charge is the sum of
/// the indices over all letters.
pub fn charge(word: &[usize]) -> usize {
    let mut used = vec![false; word.len()];
    let mut total = 0;
    while let Some(start) = (0..word.len()).rev().find(|&i| !used[i] && word[i] == 1) {
        used[start] = true;
        let mut pos = start;
        let mut index = 0;
        let mut letter = 1;
        loop {
            let next = letter + 1;
            let left = (0..pos).rev().find(|&i| !used[i] && word[i] == next);
            let found = match left {
                Some(i) => Some(i),
                None => {
                    let wrapped = (pos + 1..word.len())
                        .rev()
                        .find(|&i| !used[i] && word[i] == next);
                    if wrapped.is_some() {
                        index += 1;
                    }
                    wrapped
                }
            };
            let Some(i) = found else { break };
            used[i] = true;
            total += index;
            pos = i;
            letter = next;
        }
    }
    total
}

/// `K_{μλ}(t) = Σ_T t^{charge(T)}` over semistandard tableaux of shape `μ`
/// and content `λ`.
pub fn kostka_foulkes(mu: &Partition, lambda: &Partition) -> Result<RationalPoly> {
    check_sizes(mu, lambda)?;
    let mut counts: Vec<i64> = Vec::new();
    for tableau in semistandard_tableaux(mu, lambda) {
        let c = charge(&reading_word(&tableau));
        if counts.len() <= c {
            counts.resize(c + 1, 0);
        }
        counts[c] += 1;
    }
    Ok(RationalPoly::from_ints(Var::T, &counts))
}

/// `X_ρ^λ(t) = Σ_μ χ^μ(ρ) K_{μλ}(t)`.
pub fn x_poly(rho: &Partition, lambda: &Partition) -> Result<RationalPoly> {
    check_sizes(rho, lambda)?;
    let mut acc = RationalPoly::zero(Var::T);
    for mu in partitions_of(lambda.size()) {
        if !mu.dominates(lambda) {
            continue;
        }
        let chi = mn_character(&mu, rho)?;
        if chi == 0 {
            continue;
        }
        let k = kostka_foulkes(&mu, lambda)?;
        acc = &acc + &k.scale(&BigRational::from_integer(chi.into()));
    }
    Ok(acc)
}

/// The full grid `[ρ][λ] ↦ X_ρ^λ(t)` in [`partitions_of`] order, computing
/// each Kostka–Foulkes polynomial and character value once.
pub fn x_table(n: usize) -> Result<Vec<Vec<RationalPoly>>> {
    let labels = partitions_of(n);
    let kostka: Vec<Vec<RationalPoly>> = labels
        .par_iter()
        .map(|mu| labels.iter().map(|l| kostka_foulkes(mu, l)).collect())
        .collect::<Result<_>>()?;
    let chars: Vec<Vec<i64>> = labels
        .iter()
        .map(|mu| labels.iter().map(|rho| mn_character(mu, rho)).collect())
        .collect::<Result<_>>()?;
    Ok((0..labels.len())
        .into_par_iter()
        .map(|r| {
            (0..labels.len())
                .map(|l| {
                    (0..labels.len()).fold(RationalPoly::zero(Var::T), |acc, m| {
                        let chi = chars[m][r];
                        if chi == 0 || kostka[m][l].is_zero() {
                            acc
                        } else {
                            &acc + &kostka[m][l].scale(&BigRational::from_integer(chi.into()))
                        }
                    })
                })
                .collect()
        })
        .collect())
}

// ---------------------------------------------------------------------------
// Hall–Littlewood symmetrization route

type Exponent = Vec<u8>;
type MultiPoly = BTreeMap<Exponent, RationalPoly>;

fn add_term(p: &mut MultiPoly, e: Exponent, c: RationalPoly) {
    if c.is_zero() {
        return;
    }
    match p.entry(e) {
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            let sum = slot.get() + &c;
            if sum.is_zero() {
                slot.remove();
            } else {
                *slot.get_mut() = sum;
            }
        }
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(c);
        }
    }
}

fn multiply(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add_term(&mut out, e, ca * cb);
        }
    }
    out
}

fn unit_vector(n: usize, i: usize, power: u8) -> Exponent {
    let mut e = vec![0; n];
    e[i] = power;
    e
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut next = p.clone();
            next.insert(slot, n - 1);
            out.push(next);
        }
    }
    out
}

fn parity(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Monomial-basis coefficients of `P_λ(x_1, …, x_n; t)` at partition
/// exponents.
///
/// `v_λ(t) P_λ = A(x^λ Π_{i<j} (x_i - t x_j)) / Δ`, where `A` is
/// antisymmetrization and `Δ` the Vandermonde determinant; the quotient is
/// taken by multivariate division with respect to lex order.
fn hall_littlewood_p(
    lambda: &Partition,
    n: usize,
    vandermonde: &[(Exponent, i64)],
) -> Result<HashMap<Partition, RationalPoly>> {
    let t = RationalPoly::gen(Var::T);
    let one = RationalPoly::one(Var::T);
    let mut f: MultiPoly = MultiPoly::new();
    f.insert((0..n).map(|i| lambda.part(i) as u8).collect(), one.clone());
    for i in 0..n {
        for j in i + 1..n {
            let mut factor = MultiPoly::new();
            factor.insert(unit_vector(n, i, 1), one.clone());
            factor.insert(unit_vector(n, j, 1), -&t);
            f = multiply(&f, &factor);
        }
    }

    // A(f) = Σ_w sgn(w) w(f): collect by sorted exponent, discarding exponents
    // with repeated entries (they cancel).
    let mut alternant = MultiPoly::new();
    let mut reduced: BTreeMap<Exponent, RationalPoly> = BTreeMap::new();
    for (e, c) in &f {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| e[b].cmp(&e[a]));
        let sorted: Exponent = order.iter().map(|&i| e[i]).collect();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let sign = parity(&order);
        let term = if sign > 0 { c.clone() } else { -c };
        add_term(&mut reduced, sorted, term);
    }
    for (alpha, c) in &reduced {
        for (perm_exp, sign) in vandermonde_orbit(alpha, n) {
            add_term(
                &mut alternant,
                perm_exp,
                if sign > 0 { c.clone() } else { -c },
            );
        }
    }

    // Divide by Δ, whose lex-leading term is x^δ with coefficient 1.
    let delta: Exponent = (0..n).map(|i| (n - 1 - i) as u8).collect();
    let mut quotient = MultiPoly::new();
    while let Some((lead, c)) = alternant
        .iter()
        .next_back()
        .map(|(e, c)| (e.clone(), c.clone()))
    {
        let gamma: Option<Exponent> = lead
            .iter()
            .zip(&delta)
            .map(|(a, d)| a.checked_sub(*d))
            .collect();
        let gamma = gamma
            .ok_or_else(|| Error::NonExactDivision(format!("P_{lambda} by the Vandermonde")))?;
        for (e, s) in vandermonde {
            let shifted = e.iter().zip(&gamma).map(|(a, b)| a + b).collect();
            add_term(
                &mut alternant,
                shifted,
                if *s > 0 { -&c } else { c.clone() },
            );
        }
        add_term(&mut quotient, gamma, c);
    }

    let v = v_lambda(lambda, n);
    let mut coeffs = HashMap::new();
    for (e, c) in quotient {
        if e.windows(2).all(|w| w[0] >= w[1]) {
            let mu = Partition::from_unsorted(e.iter().map(|&x| x as usize).collect());
            let c = c.exact_div(&v, "Hall-Littlewood normalization")?;
            coeffs.insert(mu, c);
        }
    }
    Ok(coeffs)
}

fn vandermonde_orbit(alpha: &[u8], n: usize) -> Vec<(Exponent, i64)> {
    permutations(n)
        .into_iter()
        .map(|w| ((0..n).map(|i| alpha[w[i]]).collect(), parity(&w)))
        .collect()
}

/// `v_λ(t) = Π_{i ≥ 0} [m_i]_t!` with `m_0 = n - ℓ(λ)`.
fn v_lambda(lambda: &Partition, n: usize) -> RationalPoly {
    let mut mults: Vec<usize> = lambda.multiplicities().into_values().collect();
    mults.push(n - lambda.len());
    let mut v = RationalPoly::one(Var::T);
    for m in mults {
        for j in 1..=m {
            v = &v * &RationalPoly::from_ints(Var::T, &vec![1; j]);
        }
    }
    v
}

fn power_sum(rho: &Partition, n: usize) -> MultiPoly {
    let one = RationalPoly::one(Var::T);
    let mut acc = MultiPoly::new();
    acc.insert(vec![0; n], one.clone());
    for &k in rho.parts() {
        let p: MultiPoly = (0..n)
            .map(|i| (unit_vector(n, i, k as u8), one.clone()))
            .collect();
        acc = multiply(&acc, &p);
    }
    acc
}

/// Coefficients of `p_ρ` in the Hall–Littlewood `P` basis, computed by
/// symmetrization in `n = |ρ|` variables.
pub fn hall_littlewood_expand(rho: &Partition) -> Result<SymFunc> {
    let n = rho.size();
    if n > HALL_LITTLEWOOD_CAP {
        return Err(Error::CapExceeded {
            what: "Hall-Littlewood expansion",
            n,
            cap: HALL_LITTLEWOOD_CAP,
        });
    }
    let delta: Exponent = (0..n).map(|i| (n - 1 - i) as u8).collect();
    let vandermonde = vandermonde_orbit(&delta, n);
    let labels = partitions_of(n);
    let p_basis: Vec<HashMap<Partition, RationalPoly>> = labels
        .par_iter()
        .map(|l| hall_littlewood_p(l, n, &vandermonde))
        .collect::<Result<_>>()?;

    let ps = power_sum(rho, n);
    let mut residual: HashMap<Partition, RationalPoly> = labels
        .iter()
        .map(|mu| {
            let e: Exponent = (0..n).map(|i| mu.part(i) as u8).collect();
            let c = ps
                .get(&e)
                .cloned()
                .unwrap_or_else(|| RationalPoly::zero(Var::T));
            (mu.clone(), c)
        })
        .collect();

    // labels run in decreasing lex order, a linear extension of dominance,
    // and P_λ = m_λ + (terms strictly below λ)
    let mut out = SymFunc::zero(Basis::HallLittlewoodP, n);
    for (lambda, p_lambda) in labels.iter().zip(&p_basis) {
        let c = residual[lambda].clone();
        if c.is_zero() {
            continue;
        }
        for (mu, coeff) in p_lambda {
            let r = residual.get_mut(mu).expect("monomial index");
            *r = &*r - &(&c * coeff);
        }
        out.set(lambda.clone(), c)?;
    }
    debug_assert!(residual.values().all(RationalPoly::is_zero));
    Ok(out)
}

/// Kostka number `K_{μλ}(1)` as a big integer; used by tests.
pub fn kostka_number(mu: &Partition, lambda: &Partition) -> Result<BigInt> {
    let k = kostka_foulkes(mu, lambda)?;
    Ok(k.eval(&BigRational::one()).to_integer())
}
