//! Exact univariate polynomials and Laurent polynomials over `Q`.
//!
//! Every polynomial carries the name of its variable. Green polynomials live
//! in `t`; group orders and character values live in `q`. The only way to
//! move from `t` to `q` is [`LaurentPoly::substitute_signed`], and the
//! checked arithmetic refuses to mix the two.
//!
//! The operator impls (`&a + &b` and friends) panic on a variable mismatch;
//! the `checked_*` methods return [`Error::VariableMismatch`] instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Formal variable tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    Q,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::T => 't',
            Var::Q => 'q',
        }
    }

    fn from_symbol(s: &str) -> Option<Var> {
        match s {
            "t" => Some(Var::T),
            "q" => Some(Var::Q),
            _ => None,
        }
    }
}

/// The twist `ε`: `+1` for `GL_n` (split), `-1` for `GU_n` (non-split).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(e: i64) -> Option<Sign> {
        match e {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `ε^k`; negative exponents are allowed since `ε = ε^{-1}`.
    pub fn pow(self, k: i64) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus if k.rem_euclid(2) == 0 => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Dense polynomial `Σ coeffs[d] · var^d`; the top coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    var: Var,
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn new(var: Var, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { var, coeffs }
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        RationalPoly::new(var, coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(var: Var) -> Self {
        RationalPoly {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        RationalPoly::constant(var, BigRational::one())
    }

    pub fn constant(var: Var, c: BigRational) -> Self {
        RationalPoly::new(var, vec![c])
    }

    /// `c · var^d`.
    pub fn monomial(var: Var, c: BigRational, d: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); d + 1];
        coeffs[d] = c;
        RationalPoly::new(var, coeffs)
    }

    /// The polynomial `var`.
    pub fn gen(var: Var) -> Self {
        RationalPoly::monomial(var, BigRational::one(), 1)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigRational {
        self.coeffs
            .get(d)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Same coefficients, different variable name.
    pub fn retag(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalPoly::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = RationalPoly::one(self.var);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VariableMismatch(
                self.var.symbol(),
                other.var.symbol(),
            ))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|d| self.coeff(d) + other.coeff(d)).collect();
        Ok(RationalPoly::new(self.var, coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(RationalPoly::zero(self.var));
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(RationalPoly::new(self.var, coeffs))
    }

    /// Euclidean division: `self = quotient · divisor + remainder` with
    /// `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_var(divisor)?;
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let Some(top) = self.degree().filter(|&d| d >= dd) else {
            return Ok((RationalPoly::zero(self.var), self.clone()));
        };
        let mut quot = vec![BigRational::zero(); top - dd + 1];
        for k in (0..=top - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((
            RationalPoly::new(self.var, quot),
            RationalPoly::new(self.var, rem),
        ))
    }

    /// Quotient of an exact division; errors if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self, what: &str) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonExactDivision(what.to_string()))
        }
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::new(self.clone(), 0)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_ops {
    ($ty:ty) => {
        impl Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                self.checked_add(rhs).expect("polynomial addition")
            }
        }
        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                self.checked_sub(rhs).expect("polynomial subtraction")
            }
        }
        impl Mul for &$ty {
            type Output = $ty;
            fn mul(self, rhs: &$ty) -> $ty {
                self.checked_mul(rhs).expect("polynomial multiplication")
            }
        }
    };
}

forward_ops!(RationalPoly);
forward_ops!(LaurentPoly);

/// `var^valuation · poly` with `poly(0) != 0`, or zero with valuation 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    poly: RationalPoly,
    valuation: i64,
}

impl LaurentPoly {
    pub fn new(poly: RationalPoly, valuation: i64) -> Self {
        if poly.is_zero() {
            return LaurentPoly { poly, valuation: 0 };
        }
        let shift = poly.coeffs.iter().take_while(|c| c.is_zero()).count();
        let poly = RationalPoly {
            var: poly.var,
            coeffs: poly.coeffs[shift..].to_vec(),
        };
        LaurentPoly {
            poly,
            valuation: valuation + shift as i64,
        }
    }

    pub fn zero(var: Var) -> Self {
        LaurentPoly::new(RationalPoly::zero(var), 0)
    }

    pub fn one(var: Var) -> Self {
        LaurentPoly::new(RationalPoly::one(var), 0)
    }

    pub fn constant(var: Var, c: BigRational) -> Self {
        LaurentPoly::new(RationalPoly::constant(var, c), 0)
    }

    /// `c · var^d` for any integer `d`.
    pub fn monomial(var: Var, c: BigRational, d: i64) -> Self {
        LaurentPoly::new(RationalPoly::constant(var, c), d)
    }

    pub fn from_ints(var: Var, valuation: i64, coeffs: &[i64]) -> Self {
        LaurentPoly::new(RationalPoly::from_ints(var, coeffs), valuation)
    }

    pub fn var(&self) -> Var {
        self.poly.var
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// The normalized polynomial part (nonzero constant term).
    pub fn unit_part(&self) -> &RationalPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Highest exponent present; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.poly.degree().map(|d| d as i64 + self.valuation)
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.poly.leading_coeff()
    }

    /// Coefficient of `var^d`.
    pub fn coeff(&self, d: i64) -> BigRational {
        let k = d - self.valuation;
        if k < 0 {
            BigRational::zero()
        } else {
            self.poly.coeff(k as usize)
        }
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.poly
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (i as i64 + self.valuation, c))
    }

    /// The ordinary polynomial, when no negative powers occur.
    pub fn to_poly(&self) -> Option<RationalPoly> {
        if self.valuation < 0 {
            return None;
        }
        let mut coeffs = vec![BigRational::zero(); self.valuation as usize];
        coeffs.extend(self.poly.coeffs.iter().cloned());
        Some(RationalPoly::new(self.poly.var, coeffs))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        LaurentPoly::new(self.poly.scale(c), self.valuation)
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly::new(self.poly.clone(), self.valuation + k)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.poly.check_var(&other.poly)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let low = self.valuation.min(other.valuation);
        let lift = |f: &LaurentPoly| {
            let mut coeffs = vec![BigRational::zero(); (f.valuation - low) as usize];
            coeffs.extend(f.poly.coeffs.iter().cloned());
            RationalPoly::new(f.poly.var, coeffs)
        };
        Ok(LaurentPoly::new(lift(self).checked_add(&lift(other))?, low))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        Ok(LaurentPoly::new(
            self.poly.checked_mul(&other.poly)?,
            self.valuation + other.valuation,
        ))
    }

    pub fn pow(&self, k: u32) -> Self {
        LaurentPoly::new(self.poly.pow(k), self.valuation * k as i64)
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        if x.is_zero() {
            if self.valuation < 0 && !self.is_zero() {
                return Err(Error::ZeroEvaluation);
            }
            return Ok(if self.valuation == 0 {
                self.poly.coeff(0)
            } else {
                BigRational::zero()
            });
        }
        let base = self.poly.eval(x);
        let power = num_traits::pow::pow(x.clone(), self.valuation.unsigned_abs() as usize);
        Ok(if self.valuation >= 0 {
            base * power
        } else {
            base / power
        })
    }

    /// Evaluate at an integer point.
    pub fn eval_int(&self, x: i64) -> Result<BigRational> {
        self.eval(&rat(x))
    }

    /// `t ↦ ε·q`: the coefficient of `t^d` picks up `ε^d` and the result
    /// is tagged with `q`.
    pub fn substitute_signed(&self, eps: Sign) -> Self {
        let coeffs = self
            .poly
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if eps.pow(i as i64 + self.valuation) < 0 {
                    -c
                } else {
                    c.clone()
                }
            })
            .collect();
        LaurentPoly::new(RationalPoly::new(Var::Q, coeffs), self.valuation)
    }

    /// `var^d · f(var^{-1})`.
    pub fn reciprocal_shift(&self, d: i64) -> Self {
        let Some(top) = self.poly.degree() else {
            return self.clone();
        };
        let mut coeffs = self.poly.coeffs.clone();
        coeffs.reverse();
        // f = Σ c_i t^{v+i}, so f(1/t) t^d = Σ c_i t^{d-v-i}; lowest exponent d - v - top.
        LaurentPoly::new(
            RationalPoly::new(self.poly.var, coeffs),
            d - self.valuation - top as i64,
        )
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            poly: -&self.poly,
            valuation: self.valuation,
        }
    }
}

impl From<RationalPoly> for LaurentPoly {
    fn from(p: RationalPoly) -> Self {
        LaurentPoly::new(p, 0)
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    var: Var,
    terms: impl Iterator<Item = (i64, &'a BigRational)>,
) -> fmt::Result {
    let mut terms: Vec<_> = terms.collect();
    if terms.is_empty() {
        return f.write_str("0");
    }
    terms.reverse();
    for (k, (exp, c)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        match (k, negative) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let unit = abs.is_one();
        if !unit || exp == 0 {
            if abs.is_integer() {
                write!(f, "{}", abs.numer())?;
            } else {
                write!(f, "{}/{}", abs.numer(), abs.denom())?;
            }
        }
        match exp {
            0 => {}
            1 => write!(f, "{}", var.symbol())?,
            e => write!(f, "{}^{}", var.symbol(), e)?,
        }
    }
    Ok(())
}

/// Descending powers, e.g. `q^5 - q^4 + 2q^2 - 1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.var(), self.terms())
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64, c));
        write_terms(f, self.var, terms)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    var: String,
    val: i64,
    coeffs: Vec<[String; 2]>,
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        PolyJson {
            var: p.var().symbol().to_string(),
            val: p.valuation,
            coeffs: p
                .poly
                .coeffs
                .iter()
                .map(|c| [c.numer().to_string(), c.denom().to_string()])
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for LaurentPoly {
    type Error = String;
    fn try_from(j: PolyJson) -> std::result::Result<Self, String> {
        let var =
            Var::from_symbol(&j.var).ok_or_else(|| format!("unknown variable {:?}", j.var))?;
        let mut coeffs = Vec::with_capacity(j.coeffs.len());
        for [n, d] in j.coeffs {
            let n: BigInt = n.parse().map_err(|e| format!("numerator {n:?}: {e}"))?;
            let d: BigInt = d.parse().map_err(|e| format!("denominator {d:?}: {e}"))?;
            if d.is_zero() {
                return Err("zero denominator".into());
            }
            coeffs.push(BigRational::new(n, d));
        }
        Ok(LaurentPoly::new(RationalPoly::new(var, coeffs), j.val))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        LaurentPoly::try_from(PolyJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl Serialize for RationalPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_laurent().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        LaurentPoly::deserialize(d)?
            .to_poly()
            .ok_or_else(|| serde::de::Error::custom("negative powers in an ordinary polynomial"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(coeffs: &[i64]) -> RationalPoly {
        RationalPoly::from_ints(Var::T, coeffs)
    }

    fn q(coeffs: &[i64]) -> RationalPoly {
        RationalPoly::from_ints(Var::Q, coeffs)
    }

    fn lt(val: i64, coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(Var::T, val, coeffs)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&t(&[1, 1]) * &t(&[1, -1]), t(&[1, 0, -1]));
        assert_eq!(&t(&[3, 0, 2]) + &RationalPoly::zero(Var::T), t(&[3, 0, 2]));
        assert_eq!(&lt(-1, &[1, 1]) * &lt(1, &[1]), lt(0, &[1, 1]));
        assert_eq!(
            t(&[1]).checked_add(&q(&[1])),
            Err(Error::VariableMismatch('t', 'q'))
        );
        assert!(lt(0, &[1]).checked_mul(&LaurentPoly::one(Var::Q)).is_err());
    }

    #[test]
    fn division_examples() {
        let (quot, rem) = q(&[-1, 0, 1]).div_rem(&q(&[-1, 1])).unwrap();
        assert_eq!((quot, rem), (q(&[1, 1]), RationalPoly::zero(Var::Q)));
        let (quot, rem) = q(&[0, 0, 0, 1]).div_rem(&q(&[-1, 1])).unwrap();
        assert_eq!(quot, q(&[1, 1, 1]));
        assert_eq!(rem, q(&[1]));
        assert_eq!(&(&quot * &q(&[-1, 1])) + &rem, q(&[0, 0, 0, 1]));
        let f = q(&[4, -2, 0, 7]);
        assert_eq!(
            f.div_rem(&f).unwrap(),
            (q(&[1]), RationalPoly::zero(Var::Q))
        );
        assert_eq!(
            f.div_rem(&RationalPoly::zero(Var::Q)),
            Err(Error::DivisionByZero)
        );
        assert!(q(&[1, 1]).exact_div(&q(&[0, 1]), "test").is_err());
    }

    #[test]
    fn evaluation() {
        let three = BigRational::from_integer(3.into());
        assert_eq!(q(&[-1, 0, 1]).eval(&three), rat(8));
        assert_eq!(
            lt(-1, &[1, 1]).eval_int(2).unwrap(),
            BigRational::new(3.into(), 2.into())
        );
        assert_eq!(lt(-1, &[1, 1]).eval_int(0), Err(Error::ZeroEvaluation));
        assert_eq!(lt(0, &[5, 1]).eval_int(0).unwrap(), rat(5));
    }

    #[test]
    fn signed_substitution() {
        assert_eq!(
            lt(0, &[1, 1]).substitute_signed(Sign::Minus),
            LaurentPoly::from_ints(Var::Q, 0, &[1, -1])
        );
        assert_eq!(
            lt(0, &[-1, 0, 1]).substitute_signed(Sign::Minus),
            LaurentPoly::from_ints(Var::Q, 0, &[-1, 0, 1])
        );
        assert_eq!(
            lt(-3, &[2, 5, 1]).substitute_signed(Sign::Plus),
            LaurentPoly::from_ints(Var::Q, -3, &[2, 5, 1])
        );
        assert_eq!(
            lt(-1, &[1]).substitute_signed(Sign::Minus),
            LaurentPoly::from_ints(Var::Q, -1, &[-1])
        );
    }

    #[test]
    fn reciprocal() {
        assert_eq!(lt(0, &[1, 1]).reciprocal_shift(1), lt(0, &[1, 1]));
        assert_eq!(lt(0, &[-1, 1]).reciprocal_shift(1), lt(0, &[1, -1]));
        assert_eq!(lt(0, &[1, 2, 3]).reciprocal_shift(0), lt(-2, &[3, 2, 1]));
        assert!(LaurentPoly::zero(Var::T).reciprocal_shift(4).is_zero());
    }

    #[test]
    fn normal_form() {
        let f = LaurentPoly::new(t(&[0, 0, 3, 1]), -5);
        assert_eq!(f.valuation(), -3);
        assert_eq!(f.unit_part(), &t(&[3, 1]));
        assert_eq!(f.degree(), Some(-2));
        let z = &f - &f;
        assert!(z.is_zero());
        assert_eq!(z.valuation(), 0);
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(q(&[-1, 0, 2, 0, -1, 1]).to_string(), "q^5 - q^4 + 2q^2 - 1");
        assert_eq!(RationalPoly::zero(Var::T).to_string(), "0");
        assert_eq!(lt(-1, &[1, 1]).to_string(), "1 + t^-1");
        let half = RationalPoly::constant(Var::Q, BigRational::new(1.into(), 2.into()));
        assert_eq!((&half * &q(&[0, -1])).to_string(), "-1/2q");
    }

    #[test]
    fn json_format() {
        let f = LaurentPoly::new(
            RationalPoly::new(
                Var::Q,
                vec![BigRational::new((-1).into(), 2.into()), rat(3)],
            ),
            -1,
        );
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"var":"q","val":-1,"coeffs":[["-1","2"],["3","1"]]}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<RationalPoly>(&s).is_err());
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
        (prop::collection::vec(-20i64..20, 0..7), -4i64..4)
            .prop_map(|(c, v)| LaurentPoly::from_ints(Var::T, v, &c))
    }

    fn arb_poly() -> impl Strategy<Value = RationalPoly> {
        (prop::collection::vec(-9i64..9, 0..8), 1i64..5).prop_map(|(c, d)| {
            RationalPoly::new(
                Var::Q,
                c.into_iter()
                    .map(|n| BigRational::new(n.into(), d.into()))
                    .collect(),
            )
        })
    }

    fn normalized(f: &LaurentPoly) -> bool {
        if f.is_zero() {
            f.valuation() == 0
        } else {
            !f.unit_part().coeff(0).is_zero() && !f.leading_coeff().is_zero()
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            for f in [&a * &b, &a + &c, &b - &c] {
                prop_assert!(normalized(&f));
            }
        }

        #[test]
        fn division_reconstructs(f in arb_poly(), g in arb_poly()) {
            prop_assume!(!g.is_zero());
            let (quot, rem) = f.div_rem(&g).unwrap();
            prop_assert_eq!(&(&quot * &g) + &rem, f);
            prop_assert!(rem.degree().is_none_or(|d| d < g.degree().unwrap()));
        }

        #[test]
        fn substitution_commutes_with_evaluation(f in arb_laurent(), num in 1i64..30, den in 1i64..7, minus in any::<bool>()) {
            let eps = if minus { Sign::Minus } else { Sign::Plus };
            let x = BigRational::new(num.into(), den.into());
            let ex = &x * rat(eps.value());
            prop_assert_eq!(f.substitute_signed(eps).eval(&x).unwrap(), f.eval(&ex).unwrap());
        }

        #[test]
        fn reciprocal_is_involutive(f in arb_laurent(), d in -5i64..8) {
            prop_assert_eq!(f.reciprocal_shift(d).reciprocal_shift(d), f);
        }
    }
}
