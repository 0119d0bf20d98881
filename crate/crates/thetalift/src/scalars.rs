//! Exact scalars: big rationals, prime fields, p-adic valuation data and
//! roots of unity.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Common interface for the exact coefficient domains used by the matrix code.
///
/// A `Ctx` carries whatever runtime data a value needs to build constants
/// (the modulus for prime fields, nothing for rationals).
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    type Ctx: Clone + PartialEq + Eq + fmt::Debug;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(n: i64, ctx: &Self::Ctx) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }

    /// `num / den`, or `None` when `den` vanishes in the domain.
    fn from_ratio(num: i64, den: i64, ctx: &Self::Ctx) -> Option<Self> {
        Self::from_i64(den, ctx)
            .inv()
            .map(|d| Self::from_i64(num, ctx) * d)
    }

    fn half(ctx: &Self::Ctx) -> Self {
        Self::from_ratio(1, 2, ctx).expect("2 is invertible in every supported domain")
    }
}

impl Scalar for Rational {
    type Ctx = ();

    fn ctx(&self) {}
    fn zero(_: &()) -> Self {
        <Rational as Zero>::zero()
    }
    fn one(_: &()) -> Self {
        <Rational as One>::one()
    }
    fn from_i64(n: i64, _: &()) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Element of F_p for an odd prime p fixed at runtime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct PrimeFieldElement {
    residue: u64,
    modulus: u64,
}

pub type Fp = PrimeFieldElement;

impl PrimeFieldElement {
    pub fn new(value: i64, p: u64) -> Self {
        let m = p as i128;
        let residue = (value as i128).rem_euclid(m) as u64;
        Self { residue, modulus: p }
    }

    pub fn from_bigint(value: &BigInt, p: u64) -> Self {
        let r = value.mod_floor(&BigInt::from(p));
        Self {
            residue: r.to_u64().expect("residue fits"),
            modulus: p,
        }
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn pow(&self, e: u64) -> Self {
        Self {
            residue: pow_mod(self.residue, e, self.modulus),
            modulus: self.modulus,
        }
    }

    /// Signed representative in (-p/2, p/2].
    pub fn centered(&self) -> i64 {
        let r = self.residue as i64;
        let p = self.modulus as i64;
        if r > p / 2 {
            r - p
        } else {
            r
        }
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "prime field operands must share a modulus"
        );
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl Add for PrimeFieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.same_field(&rhs);
        Self {
            residue: ((self.residue as u128 + rhs.residue as u128) % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }
}

impl Sub for PrimeFieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for PrimeFieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            residue: (self.modulus - self.residue) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Mul for PrimeFieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.same_field(&rhs);
        Self {
            residue: mul_mod(self.residue, rhs.residue, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl Scalar for PrimeFieldElement {
    type Ctx = u64;

    fn ctx(&self) -> u64 {
        self.modulus
    }
    fn zero(p: &u64) -> Self {
        Self::new(0, *p)
    }
    fn one(p: &u64) -> Self {
        Self::new(1, *p)
    }
    fn from_i64(n: i64, p: &u64) -> Self {
        Self::new(n, *p)
    }
    fn is_zero(&self) -> bool {
        self.residue == 0
    }
    fn inv(&self) -> Option<Self> {
        if self.residue == 0 {
            return None;
        }
        Some(self.pow(self.modulus - 2))
    }
}

/// Nonzero element of Q_p stored as `p^valuation * unit`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PAdicScalar {
    valuation: i64,
    unit: Rational,
    prime: u64,
}

impl PAdicScalar {
    pub fn from_rational(x: &Rational, p: u64) -> Result<Self> {
        let v = val_p(x, p)?;
        let unit = x * pow_rat(p, -v);
        Ok(Self {
            valuation: v,
            unit,
            prime: p,
        })
    }

    /// Builds `p^v * unit`; the unit must be prime to p.
    pub fn new(valuation: i64, unit: Rational, p: u64) -> Result<Self> {
        if val_p(&unit, p)? != 0 {
            return Err(Error::Precondition(format!("{unit} is not a {p}-unit")));
        }
        Ok(Self {
            valuation,
            unit,
            prime: p,
        })
    }

    pub fn one(p: u64) -> Self {
        Self {
            valuation: 0,
            unit: <Rational as One>::one(),
            prime: p,
        }
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn unit(&self) -> &Rational {
        &self.unit
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn to_rational(&self) -> Rational {
        &self.unit * pow_rat(self.prime, self.valuation)
    }

    /// Residue of the unit part in F_p.
    pub fn unit_residue(&self) -> PrimeFieldElement {
        reduce_unit(&self.unit, self.prime)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.prime, other.prime, "p-adic operands must share a prime");
        Self {
            valuation: self.valuation + other.valuation,
            unit: &self.unit * &other.unit,
            prime: self.prime,
        }
    }

    pub fn inv(&self) -> Self {
        Self {
            valuation: -self.valuation,
            unit: self.unit.recip(),
            prime: self.prime,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            valuation: self.valuation,
            unit: -self.unit.clone(),
            prime: self.prime,
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = Self::one(self.prime);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }
}

impl fmt::Display for PAdicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{} * {}", self.prime, self.valuation, self.unit)
    }
}

/// r-th root of unity `zeta^exponent`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct MuR {
    exponent: u64,
    order: u64,
}

impl MuR {
    pub fn new(exponent: i64, order: u64) -> Self {
        assert!(order > 0, "mu_r needs r >= 1");
        Self {
            exponent: exponent.rem_euclid(order as i64) as u64,
            order,
        }
    }

    pub fn identity(order: u64) -> Self {
        Self::new(0, order)
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.exponent == 0
    }

    pub fn inv(&self) -> Self {
        Self::new(-(self.exponent as i64), self.order)
    }

    pub fn pow(&self, e: i64) -> Self {
        let r = self.order as i128;
        let x = (self.exponent as i128 * e as i128).rem_euclid(r);
        Self::new(x as i64, self.order)
    }
}

impl fmt::Display for MuR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta_{}^{}", self.order, self.exponent)
    }
}

pub fn mu_r_mul(a: MuR, b: MuR) -> Result<MuR> {
    if a.order != b.order {
        return Err(Error::OrderMismatch(a.order, b.order));
    }
    Ok(MuR::new((a.exponent + b.exponent) as i64, a.order))
}

/// p-adic valuation of a nonzero rational.
pub fn val_p(x: &Rational, p: u64) -> Result<i64> {
    if Zero::is_zero(x) {
        return Err(Error::ValuationOfZero);
    }
    Ok(int_val(x.numer(), p) - int_val(x.denom(), p))
}

/// Reduction mod p of `x * p^{-val_p(x)}`.
pub fn unit_part(x: &Rational, p: u64) -> Result<PrimeFieldElement> {
    let v = val_p(x, p)?;
    Ok(reduce_unit(&(x * pow_rat(p, -v)), p))
}

fn int_val(n: &BigInt, p: u64) -> i64 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

fn reduce_unit(u: &Rational, p: u64) -> PrimeFieldElement {
    let num = PrimeFieldElement::from_bigint(u.numer(), p);
    let den = PrimeFieldElement::from_bigint(u.denom(), p);
    num * den.inv().expect("unit denominators are prime to p")
}

fn pow_rat(p: u64, e: i64) -> Rational {
    let base = Rational::from_integer(BigInt::from(p));
    if e >= 0 {
        num_traits::pow(base, e as usize)
    } else {
        num_traits::pow(base.recip(), e.unsigned_abs() as usize)
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn check_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    Ok(())
}

/// Smallest generator of F_p^x.
pub fn smallest_primitive_root(p: u64) -> Result<u64> {
    check_odd_prime(p)?;
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .ok_or(Error::NotOddPrime(p))
}

/// Legendre symbol of a nonzero residue, as +1 or -1.
pub fn legendre(a: PrimeFieldElement) -> i64 {
    let p = a.modulus();
    match pow_mod(a.residue(), (p - 1) / 2, p) {
        1 => 1,
        _ => -1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations() {
        assert_eq!(val_p(&rat(1, 1), 7).unwrap(), 0);
        assert_eq!(val_p(&rat(49, 3), 7).unwrap(), 2);
        assert_eq!(val_p(&rat(6, 27), 3).unwrap(), -2);
        assert_eq!(val_p(&rat(0, 1), 3), Err(Error::ValuationOfZero));
    }

    #[test]
    fn unit_parts() {
        assert_eq!(unit_part(&rat(3, 1), 7).unwrap().residue(), 3);
        assert_eq!(unit_part(&rat(49, 3), 7).unwrap().residue(), 5);
        assert_eq!(unit_part(&rat(-1, 1), 5).unwrap().residue(), 4);
        assert!(unit_part(&rat(0, 1), 5).is_err());
    }

    #[test]
    fn roots_of_unity() {
        let z = |e| MuR::new(e, 3);
        assert_eq!(mu_r_mul(z(1), z(2)).unwrap(), z(0));
        assert_eq!(mu_r_mul(z(0), z(2)).unwrap(), z(2));
        assert_eq!(mu_r_mul(z(2), z(2)).unwrap(), z(1));
        assert!(mu_r_mul(z(1), MuR::new(1, 5)).is_err());
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(smallest_primitive_root(7).unwrap(), 3);
        assert_eq!(smallest_primitive_root(13).unwrap(), 2);
        assert_eq!(smallest_primitive_root(23).unwrap(), 5);
        assert!(smallest_primitive_root(9).is_err());
    }

    #[test]
    fn padic_roundtrip() {
        let x = rat(-98, 15);
        let a = PAdicScalar::from_rational(&x, 7).unwrap();
        assert_eq!(a.valuation(), 2);
        assert_eq!(a.to_rational(), x);
        assert_eq!(a.mul(&a.inv()), PAdicScalar::one(7));
    }
}
