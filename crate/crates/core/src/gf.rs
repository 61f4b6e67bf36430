//! Finite fields `GF(p^k)` for small odd `p`, in Zech-logarithm form.
//!
//! Random points over a tiny prime field are not generic (every element of
//! `F_3` is a root of `x^3 - x`), so rank computations in small
//! characteristic sample from an extension field of the same characteristic.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use rand::Rng;

use crate::field::Scalar;

/// Largest field order built by [`Gf::for_prime`].
pub const MAX_ORDER: u64 = 1 << 23;

const ZERO: u32 = u32::MAX;

/// Tables for one `GF(q)`, `q = p^k`, relative to a fixed primitive element
/// `g` (a root of [`Gf::modulus`]).
pub struct Gf {
    p: u64,
    k: u32,
    q: u64,
    /// Monic primitive polynomial, low coefficient first (length `k + 1`).
    modulus: Vec<u64>,
    /// `zech[i] = log_g(1 + g^i)`, or `ZERO`.
    zech: Vec<u32>,
    /// `log_g(c)` for `c = 0..p` (entry 0 is `ZERO`).
    const_log: Vec<u32>,
}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.k)
    }
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let k = m.len() - 1;
    let mut prod = vec![0u64; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for i in (k..prod.len()).rev() {
        let c = prod[i];
        if c != 0 {
            for j in 0..k {
                prod[i - k + j] = (prod[i - k + j] + (p - c) * m[j]) % p;
            }
            prod[i] = 0;
        }
    }
    prod.truncate(k);
    prod
}

fn poly_powmod_x(e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let k = m.len() - 1;
    let mut one = vec![0; k];
    one[0] = 1;
    let mut base = vec![0; k];
    if k == 1 {
        base[0] = (p - m[0]) % p;
    } else {
        base[1] = 1;
    }
    let (mut acc, mut e) = (one, e);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &base, m, p);
        }
        base = poly_mulmod(&base, &base, m, p);
        e >>= 1;
    }
    acc
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// First monic polynomial of degree `k` (in lexicographic order of its
/// coefficients) for which `x` has multiplicative order `p^k - 1`.
fn primitive_polynomial(p: u64, k: u32) -> Vec<u64> {
    let q = p.pow(k);
    let factors = prime_factors(q - 1);
    let mut coeffs = vec![0u64; k as usize];
    loop {
        // Increment the low coefficients as a base-p counter.
        for c in coeffs.iter_mut() {
            *c += 1;
            if *c < p {
                break;
            }
            *c = 0;
        }
        if coeffs[0] == 0 {
            continue;
        }
        let mut m = coeffs.clone();
        m.push(1);
        let is_one = |v: &[u64]| v[0] == 1 && v[1..].iter().all(|&c| c == 0);
        if is_one(&poly_powmod_x(q - 1, &m, p)) && factors.iter().all(|&r| !is_one(&poly_powmod_x((q - 1) / r, &m, p))) {
            return m;
        }
    }
}

impl Gf {
    pub fn new(p: u64, k: u32) -> Gf {
        assert!(p % 2 == 1 && crate::field::is_prime(p), "GF(p^k) needs an odd prime p");
        let q = p.checked_pow(k).filter(|&q| q <= MAX_ORDER).expect("field order too large");
        let modulus = primitive_polynomial(p, k);
        let ku = k as usize;
        let encode = |v: &[u64]| v.iter().rev().fold(0u64, |acc, &c| acc * p + c) as usize;
        // exp[i] = g^i as a base-p integer.
        let mut exp = vec![0u32; (q - 1) as usize];
        let mut log = vec![ZERO; q as usize];
        let mut cur = vec![0u64; ku];
        cur[0] = 1;
        for (i, slot) in exp.iter_mut().enumerate() {
            let code = encode(&cur);
            *slot = code as u32;
            log[code] = i as u32;
            // cur *= x
            let top = cur[ku - 1];
            for j in (1..ku).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..ku {
                    cur[j] = (cur[j] + (p - top) * modulus[j]) % p;
                }
            }
        }
        let zech = exp
            .iter()
            .map(|&code| {
                // Adding 1 touches only the constant digit.
                let c0 = code as u64 % p;
                let bumped = code as u64 - c0 + (c0 + 1) % p;
                log[bumped as usize]
            })
            .collect();
        let const_log = (0..p).map(|c| log[c as usize]).collect();
        Gf { p, k, q, modulus, zech, const_log }
    }

    /// Shared tables for the largest `GF(p^k)` of order at most
    /// [`MAX_ORDER`]; `None` when even `p^2` exceeds it.
    pub fn for_prime(p: u64) -> Option<&'static Gf> {
        static TABLES: OnceLock<Mutex<HashMap<u64, &'static Gf>>> = OnceLock::new();
        if p.checked_mul(p).is_none_or(|q| q > MAX_ORDER) {
            return None;
        }
        let mut map = TABLES.get_or_init(|| Mutex::new(HashMap::new())).lock().unwrap();
        let gf = map.entry(p).or_insert_with(|| {
            let mut k = 1;
            while p.pow(k + 1) <= MAX_ORDER {
                k += 1;
            }
            Box::leak(Box::new(Gf::new(p, k)))
        });
        Some(*gf)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&'static self) -> GfElem {
        GfElem { log: ZERO, gf: self }
    }

    pub fn from_i64(&'static self, v: i64) -> GfElem {
        let c = v.rem_euclid(self.p as i64) as usize;
        GfElem { log: self.const_log[c], gf: self }
    }

    /// The primitive element `g`.
    pub fn generator(&'static self) -> GfElem {
        GfElem { log: 1 % self.units(), gf: self }
    }

    /// Uniform over all `q` elements.
    pub fn random<R: Rng>(&'static self, rng: &mut R) -> GfElem {
        let i = rng.gen_range(0..self.q) as u32;
        GfElem { log: if i as u64 == self.q - 1 { ZERO } else { i }, gf: self }
    }

    fn units(&self) -> u32 {
        (self.q - 1) as u32
    }
}

/// Element of a [`Gf`], stored as a discrete logarithm.
#[derive(Clone, Copy)]
pub struct GfElem {
    log: u32,
    gf: &'static Gf,
}

impl GfElem {
    fn unit(&self, log: u64) -> GfElem {
        GfElem { log: (log % self.gf.units() as u64) as u32, gf: self.gf }
    }
}

impl PartialEq for GfElem {
    fn eq(&self, o: &Self) -> bool {
        debug_assert!(std::ptr::eq(self.gf, o.gf));
        self.log == o.log
    }
}

impl fmt::Debug for GfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log == ZERO {
            write!(f, "0")
        } else {
            write!(f, "g^{}", self.log)
        }
    }
}

impl Add for GfElem {
    type Output = GfElem;
    fn add(self, o: GfElem) -> GfElem {
        if self.log == ZERO {
            return o;
        }
        if o.log == ZERO {
            return self;
        }
        let u = self.gf.units();
        let diff = if o.log >= self.log { o.log - self.log } else { o.log + u - self.log };
        match self.gf.zech[diff as usize] {
            ZERO => self.gf.zero(),
            z => self.unit(self.log as u64 + z as u64),
        }
    }
}

impl Neg for GfElem {
    type Output = GfElem;
    fn neg(self) -> GfElem {
        if self.log == ZERO {
            return self;
        }
        self.unit(self.log as u64 + (self.gf.units() / 2) as u64)
    }
}

impl Sub for GfElem {
    type Output = GfElem;
    fn sub(self, o: GfElem) -> GfElem {
        self + (-o)
    }
}

impl Mul for GfElem {
    type Output = GfElem;
    fn mul(self, o: GfElem) -> GfElem {
        if self.log == ZERO || o.log == ZERO {
            return self.gf.zero();
        }
        self.unit(self.log as u64 + o.log as u64)
    }
}

impl Scalar for GfElem {
    fn zero_like(&self) -> Self {
        self.gf.zero()
    }
    fn one_like(&self) -> Self {
        GfElem { log: 0, gf: self.gf }
    }
    fn int_like(&self, v: i64) -> Self {
        self.gf.from_i64(v)
    }
    fn is_zero(&self) -> bool {
        self.log == ZERO
    }
    fn inverse(&self) -> Option<Self> {
        if self.log == ZERO {
            None
        } else {
            Some(self.unit((self.gf.units() - self.log) as u64))
        }
    }
}
