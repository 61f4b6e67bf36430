//! Exact coefficient fields.
//!
//! Two families are supported: the rationals (characteristic zero) and prime
//! fields `F_p` for odd primes `p`. [`FieldElement`] is the dynamically tagged
//! element type used for polynomial coefficients; the [`Scalar`] trait is the
//! arithmetic interface the matrix and rank code is generic over, so that the
//! hot loops can run on the unboxed [`Zp`] and [`crate::gf::GfElem`] types.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Commutative ring arithmetic with value-level context.
///
/// Elements of `F_p` and `GF(q)` carry their modulus, so constants are built
/// from an existing element (`zero_like`, `int_like`) rather than from a
/// context-free `zero()`.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn int_like(&self, v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse; `None` for zero.
    fn inverse(&self) -> Option<Self>;
}

/// Coefficient field descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum Field {
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "Fp")]
    Prime { p: u64 },
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// `F_p`, rejecting even or composite moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if p.is_multiple_of(2) {
            return Err(Error::InvalidField(format!("p must be odd, got {p}")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("p must be prime, got {p}")));
        }
        Ok(Field::Prime { p })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime { p } => *p,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Field::Rational => Ok(()),
            Field::Prime { p } => Field::prime(*p).map(|_| ()),
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(v.into())),
            Field::Prime { p } => FieldElement::Prime(Zp::from_i64(v, *p)),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(v.clone())),
            Field::Prime { p } => {
                let r = v.mod_floor(&BigInt::from(*p));
                FieldElement::Prime(Zp::new(r.to_u64().unwrap(), *p))
            }
        }
    }

    /// Maps a rational into the field. Fails over `F_p` when `p` divides the
    /// denominator.
    pub fn from_rational(&self, v: &BigRational) -> Result<FieldElement> {
        match self {
            Field::Rational => Ok(FieldElement::Rational(v.clone())),
            Field::Prime { p } => {
                let num = self.from_bigint(v.numer());
                let den = self.from_bigint(v.denom());
                let inv = den.inverse().ok_or_else(|| {
                    Error::InvalidField(format!("denominator {} vanishes mod {p}", v.denom()))
                })?;
                Ok(num * inv)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime { p } => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `q` / `Q` or `fp:P`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let rest = s
            .strip_prefix("fp:")
            .or_else(|| s.strip_prefix("Fp:"))
            .ok_or_else(|| Error::InvalidField(format!("expected `q` or `fp:P`, got `{s}`")))?;
        let p: u64 = rest
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad modulus `{rest}`")))?;
        Field::prime(p)
    }
}

/// Residue modulo a prime `p < 2^63`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Zp {
    v: u64,
    p: u64,
}

impl Zp {
    /// Mersenne prime 2^61 - 1, the working modulus for characteristic-zero
    /// rank computations.
    pub const MERSENNE_61: u64 = (1 << 61) - 1;

    pub fn new(v: u64, p: u64) -> Self {
        Zp { v: v % p, p }
    }

    pub fn from_i64(v: i64, p: u64) -> Self {
        let r = (v as i128).rem_euclid(p as i128) as u64;
        Zp { v: r, p }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn symmetric(&self) -> i128 {
        if self.v > self.p / 2 {
            self.v as i128 - self.p as i128
        } else {
            self.v as i128
        }
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Zp { v: 1 % self.p, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl Add for Zp {
    type Output = Zp;
    fn add(self, o: Zp) -> Zp {
        debug_assert_eq!(self.p, o.p);
        let s = self.v + o.v;
        Zp { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }
}

impl Sub for Zp {
    type Output = Zp;
    fn sub(self, o: Zp) -> Zp {
        debug_assert_eq!(self.p, o.p);
        let v = if self.v >= o.v { self.v - o.v } else { self.v + self.p - o.v };
        Zp { v, p: self.p }
    }
}

impl Mul for Zp {
    type Output = Zp;
    fn mul(self, o: Zp) -> Zp {
        debug_assert_eq!(self.p, o.p);
        let prod = self.v as u128 * o.v as u128;
        if self.p == Self::MERSENNE_61 {
            let m = Self::MERSENNE_61 as u128;
            let r = ((prod & m) + (prod >> 61)) as u64;
            return Zp { v: if r >= self.p { r - self.p } else { r }, p: self.p };
        }
        Zp { v: (prod % self.p as u128) as u64, p: self.p }
    }
}

impl Neg for Zp {
    type Output = Zp;
    fn neg(self) -> Zp {
        Zp { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }
}

impl Scalar for Zp {
    fn zero_like(&self) -> Self {
        Zp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Zp { v: 1, p: self.p }
    }
    fn int_like(&self, v: i64) -> Self {
        Zp::from_i64(v, self.p)
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn inverse(&self) -> Option<Self> {
        if self.v == 0 {
            None
        } else {
            Some(self.pow(self.p - 2))
        }
    }
}

/// Element of either `Q` or `F_p`, tagged at runtime.
///
/// Mixing elements of different fields in arithmetic is a logic error and
/// panics; public polynomial operations check fields first and report
/// [`Error::FieldMismatch`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FieldElement {
    Rational(BigRational),
    Prime(Zp),
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rational,
            FieldElement::Prime(z) => Field::Prime { p: z.p },
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Prime(z) => z.v == 1,
        }
    }

    pub fn pow(&self, e: u32) -> FieldElement {
        match self {
            FieldElement::Rational(r) => FieldElement::Rational(num_traits::pow(r.clone(), e as usize)),
            FieldElement::Prime(z) => FieldElement::Prime(z.pow(e as u64)),
        }
    }

    /// Sign used when printing: rationals by sign, residues by their
    /// symmetric representative.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_negative(),
            FieldElement::Prime(z) => z.symmetric() < 0,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(r) => Some(r),
            FieldElement::Prime(_) => None,
        }
    }

    /// Reduces a rational-field element into `target`.
    pub fn coerce(&self, target: Field) -> Result<FieldElement> {
        match (self, target) {
            (FieldElement::Rational(r), t) => t.from_rational(r),
            (FieldElement::Prime(z), Field::Prime { p }) if z.p == p => Ok(self.clone()),
            (s, t) => Err(Error::FieldMismatch { left: s.field(), right: t }),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::Prime(z) => write!(f, "{}", z.symmetric()),
        }
    }
}

macro_rules! fe_binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: FieldElement) -> FieldElement {
                match (self, o) {
                    (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a $op b),
                    (FieldElement::Prime(a), FieldElement::Prime(b)) if a.p == b.p => FieldElement::Prime(a $op b),
                    (a, b) => panic!("field mismatch: {:?} vs {:?}", a.field(), b.field()),
                }
            }
        }
        impl<'a> $tr<&'a FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $m(self, o: &'a FieldElement) -> FieldElement {
                match (self, o) {
                    (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a $op b),
                    (FieldElement::Prime(a), FieldElement::Prime(b)) if a.p == b.p => FieldElement::Prime(*a $op *b),
                    (a, b) => panic!("field mismatch: {:?} vs {:?}", a.field(), b.field()),
                }
            }
        }
    };
}

fe_binop!(Add, add, +);
fe_binop!(Sub, sub, -);
fe_binop!(Mul, mul, *);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Prime(a) => FieldElement::Prime(-a),
        }
    }
}

/// Integers, for exact evaluation at integer points. Only units invert.
impl Scalar for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn int_like(&self, v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inverse(&self) -> Option<Self> {
        self.abs().is_one().then(|| self.clone())
    }
}

impl Scalar for FieldElement {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
    fn int_like(&self, v: i64) -> Self {
        self.field().from_i64(v)
    }
    fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Prime(z) => z.v == 0,
        }
    }
    fn inverse(&self) -> Option<Self> {
        match self {
            FieldElement::Rational(r) if r.is_zero() => None,
            FieldElement::Rational(r) => Some(FieldElement::Rational(r.recip())),
            FieldElement::Prime(z) => z.inverse().map(FieldElement::Prime),
        }
    }
}

/// Parses `a` or `a/b` (decimal integers, optional sign).
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if Zero::is_zero(&d) {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
    }
}
