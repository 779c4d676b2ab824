use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::conv::convolve_bigint;
use super::dissect::DissectionParts;
use super::modpoly::ModPoly;
use crate::error::{domain, Error, Result};

/// A dense polynomial in `q` with arbitrary-precision integer coefficients.
///
/// `coeffs[e]` is the coefficient of `q^e`. The vector never ends in a zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::new(coeffs.into_iter().map(Into::into).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        IntPoly { coeffs }
    }

    /// `q^n - 1`.
    pub fn q_pow_minus_one(n: usize) -> Self {
        Self::monomial(1, n) - Self::one()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^e` (zero beyond the degree).
    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Drops every term of exponent greater than `max_degree`.
    pub fn truncated(&self, max_degree: usize) -> Self {
        let len = self.coeffs.len().min(max_degree + 1);
        Self::new(self.coeffs[..len].to_vec())
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Product truncated to exponents `<= max_degree`, computed without
    /// forming the higher terms.
    pub fn mul_truncated(&self, other: &Self, max_degree: usize) -> Self {
        Self::new(convolve_bigint(&self.coeffs, &other.coeffs, max_degree + 1))
    }

    /// Integer power; negative exponents are rejected.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            return domain(format!("negative polynomial exponent {exp}"));
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// The `nu`-fold formal derivative `d^nu/dq^nu`.
    pub fn derivative(&self, nu: usize) -> Self {
        if nu == 0 {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(nu)
            .map(|(e, c)| {
                let falling: BigInt = (e - nu + 1..=e).map(BigInt::from).product();
                c * falling
            })
            .collect();
        Self::new(coeffs)
    }

    /// The `nu`-fold theta operator `(q d/dq)^nu`: `c q^k -> c k^nu q^k`.
    pub fn theta(&self, nu: u32) -> Self {
        if nu == 0 {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * BigInt::from(k).pow(nu))
            .collect();
        Self::new(coeffs)
    }

    /// Euclidean division by a divisor whose leading coefficient is `±1`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading_coeff().ok_or(Error::DivisionByZero)?;
        if !lead.abs().is_one() {
            return Err(Error::UnsupportedDivisor(lead.to_string()));
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = std::mem::take(&mut rem[k + dd]);
            if top.is_zero() {
                continue;
            }
            // lead is a unit: top / lead == top * lead
            let c = if lead.is_negative() { -top } else { top };
            for (j, d) in divisor.coeffs[..dd].iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// `P(q^t)`.
    pub fn substitute_power(&self, t: usize) -> Result<Self> {
        if t == 0 {
            return domain("power substitution needs t >= 1");
        }
        if self.is_zero() || t == 1 {
            return Ok(self.clone());
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * t + 1];
        for (e, c) in self.coeffs.iter().enumerate() {
            coeffs[e * t] = c.clone();
        }
        Ok(IntPoly { coeffs })
    }

    /// Splits `P(q) = Σ_{i<t} q^i A_i(q^t)`.
    pub fn dissect(&self, t: usize) -> Result<DissectionParts> {
        if t == 0 {
            return domain("dissection needs t >= 1");
        }
        let mut parts: Vec<Vec<BigInt>> = vec![Vec::new(); t];
        for (e, c) in self.coeffs.iter().enumerate() {
            let (m, i) = e.div_rem(&t);
            let part = &mut parts[i];
            if part.len() <= m {
                part.resize(m + 1, BigInt::zero());
            }
            part[m] = c.clone();
        }
        DissectionParts::new(parts.into_iter().map(Self::new).collect())
    }

    /// The terms of `P` whose exponents are `≡ i (mod t)`, exponents unchanged.
    pub fn extract_residue_class(&self, t: usize, i: usize) -> Result<Self> {
        if t == 0 {
            return domain("residue extraction needs t >= 1");
        }
        if i >= t {
            return domain(format!("residue {i} out of range for modulus {t}"));
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(e, c)| if e % t == i { c.clone() } else { BigInt::zero() })
            .collect();
        Ok(Self::new(coeffs))
    }

    /// `P(1 - q)`, optionally only modulo `q^(truncation + 1)`.
    ///
    /// Powers of `1 - q` are built one factor at a time and clipped at the
    /// truncation order, so the truncated result never expands the full
    /// composition.
    pub fn compose_one_minus_q(&self, truncation: Option<usize>) -> Self {
        let Some(deg) = self.degree() else {
            return Self::zero();
        };
        let cap = truncation.map_or(deg + 1, |t| (t + 1).min(deg + 1));
        let mut acc = vec![BigInt::zero(); cap];
        let mut power = vec![BigInt::one()];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                for (a, p) in acc.iter_mut().zip(&power) {
                    *a += c * p;
                }
            }
            if k < deg {
                power = times_one_minus_q(&power, cap);
            }
        }
        Self::new(acc)
    }

    /// Canonical representative modulo `q^n - 1` (degree below `n`).
    pub fn reduce_mod_qn_minus_1(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return domain("reduction modulo q^n - 1 needs n >= 1");
        }
        let mut coeffs = vec![BigInt::zero(); n.min(self.coeffs.len())];
        for (e, c) in self.coeffs.iter().enumerate() {
            coeffs[e % n] += c;
        }
        Ok(Self::new(coeffs))
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Coefficientwise reduction into `[0, modulus)`.
    pub fn reduce_coeffs(&self, modulus: u64) -> Result<ModPoly> {
        if modulus < 2 {
            return domain(format!("modulus must be at least 2, got {modulus}"));
        }
        let m = BigInt::from(modulus);
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let r = c.mod_floor(&m);
                // r < modulus <= u64::MAX
                u64::try_from(r).expect("residue fits in u64")
            })
            .collect();
        ModPoly::new(coeffs, modulus)
    }

    /// Decimal coefficient strings, ascending exponent; `[]` for zero.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        items
            .iter()
            .map(|s| {
                s.as_ref()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Domain(format!("bad coefficient {:?}", s.as_ref())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

fn times_one_minus_q(power: &[BigInt], cap: usize) -> Vec<BigInt> {
    let len = (power.len() + 1).min(cap);
    (0..len)
        .map(|e| {
            let hi = power.get(e).cloned().unwrap_or_default();
            match e.checked_sub(1) {
                Some(prev) => hi - &power[prev],
                None => hi,
            }
        })
        .collect()
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = e == 0 || !mag.is_one();
            match (e, show_mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "{mag}*q")?,
                (1, false) => write!(f, "q")?,
                (_, true) => write!(f, "{mag}*q^{e}")?,
                (_, false) => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct CoeffVisitor;

        impl<'de> Visitor<'de> for CoeffVisitor {
            type Value = IntPoly;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a sequence of decimal coefficient strings")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<IntPoly, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(s) = seq.next_element::<String>()? {
                    let c = s
                        .parse::<BigInt>()
                        .map_err(|_| de::Error::custom(format!("bad coefficient {s:?}")))?;
                    coeffs.push(c);
                }
                Ok(IntPoly::new(coeffs))
            }
        }

        deserializer.deserialize_seq(CoeffVisitor)
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::new(coeffs)
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        IntPoly::new(coeffs)
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(convolve_bigint(&self.coeffs, &rhs.coeffs, usize::MAX))
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<IntPoly> for &'a IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul);

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> Self {
        iter.fold(IntPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> Self {
        iter.fold(IntPoly::one(), |acc, p| acc * p)
    }
}
