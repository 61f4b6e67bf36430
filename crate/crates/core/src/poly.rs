//! Sparse commutative polynomials over a set of symbolic generators.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, Scalar};
use crate::syntax::Alphabet;

/// A polynomial generator `σ_t(·)`. The `Ord` impl must order by degree
/// first; monomials and printed output follow it.
pub trait Generator: Ord + Clone + Hash + fmt::Debug {
    fn degree(&self) -> usize;
    fn write(&self, f: &mut fmt::Formatter<'_>, alphabet: Alphabet) -> fmt::Result;
}

/// Sorted multiset of generators. Ordered by total degree, then
/// lexicographically on the sorted generator list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial<G> {
    gens: Vec<G>,
    degree: usize,
}

impl<G: Generator> Monomial<G> {
    pub fn one() -> Self {
        Monomial { gens: Vec::new(), degree: 0 }
    }

    pub fn from_gens(mut gens: Vec<G>) -> Self {
        gens.sort();
        let degree = gens.iter().map(G::degree).sum();
        Monomial { gens, degree }
    }

    pub fn gens(&self) -> &[G] {
        &self.gens
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        let (mut i, mut j) = (0, 0);
        while i < self.gens.len() && j < other.gens.len() {
            if self.gens[i] <= other.gens[j] {
                gens.push(self.gens[i].clone());
                i += 1;
            } else {
                gens.push(other.gens[j].clone());
                j += 1;
            }
        }
        gens.extend_from_slice(&self.gens[i..]);
        gens.extend_from_slice(&other.gens[j..]);
        Monomial { gens, degree: self.degree + other.degree }
    }

    /// Runs of equal generators as `(generator, multiplicity)`.
    pub fn powers(&self) -> Vec<(&G, usize)> {
        let mut out: Vec<(&G, usize)> = Vec::new();
        for g in &self.gens {
            match out.last_mut() {
                Some((h, k)) if *h == g => *k += 1,
                _ => out.push((g, 1)),
            }
        }
        out
    }
}

impl<G: Generator> Ord for Monomial<G> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.gens.cmp(&other.gens))
    }
}

impl<G: Generator> PartialOrd for Monomial<G> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<G: Generator> {
    field: Field,
    terms: BTreeMap<Monomial<G>, FieldElement>,
}

impl<G: Generator> Poly<G> {
    pub fn zero(field: Field) -> Self {
        Poly { field, terms: BTreeMap::new() }
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: FieldElement) -> Self {
        let mut p = Poly::zero(c.field());
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn generator(g: G, field: Field) -> Self {
        let mut p = Poly::zero(field);
        p.add_term(Monomial::from_gens(vec![g]), field.one());
        p
    }

    pub fn monomial(m: Monomial<G>, c: FieldElement) -> Self {
        let mut p = Poly::zero(c.field());
        p.add_term(m, c);
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<G>, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial<G>) -> Option<&FieldElement> {
        self.terms.get(m)
    }

    /// Maximum monomial degree, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial<G>, c: FieldElement) {
        debug_assert_eq!(c.field(), self.field);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e = &*e + &c;
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check(&self, other: Field) -> Result<()> {
        if self.field != other {
            Err(Error::FieldMismatch { left: self.field, right: other })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other.field)?;
        Ok(self.plus(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other.field)?;
        Ok(self.plus(&other.neg()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other.field)?;
        Ok(self.times(other))
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Self> {
        self.check(c.field())?;
        Ok(self.scaled(c))
    }

    pub fn neg(&self) -> Self {
        self.scaled(&self.field.from_i64(-1))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Poly::one(self.field);
        for _ in 0..k {
            acc = acc.times(self);
        }
        acc
    }

    pub(crate) fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.plus_assign(other);
        out
    }

    pub(crate) fn plus_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub(crate) fn times(&self, other: &Self) -> Self {
        let mut out = Poly::zero(self.field);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub(crate) fn scaled(&self, c: &FieldElement) -> Self {
        let mut out = Poly::zero(self.field);
        if c.is_zero() {
            return out;
        }
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a * c);
        }
        out
    }

    /// Ring homomorphism sending each generator `g` to `image(g)`.
    pub fn map_generators<H: Generator>(&self, field: Field, mut image: impl FnMut(&G) -> Result<Poly<H>>) -> Result<Poly<H>> {
        let mut out = Poly::zero(field);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.coerce(field)?);
            for (g, k) in m.powers() {
                let img = image(g)?;
                img.check(field)?;
                term = term.times(&img.pow(k as u32));
            }
            out.plus_assign(&term);
        }
        Ok(out)
    }

    /// Reduces rational coefficients into `field`.
    pub fn coerce(&self, field: Field) -> Result<Self> {
        if field == self.field {
            return Ok(self.clone());
        }
        let mut out = Poly::zero(field);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.coerce(field)?);
        }
        Ok(out)
    }

    pub fn display(&self, alphabet: Alphabet) -> PolyDisplay<'_, G> {
        PolyDisplay { poly: self, alphabet }
    }
}

pub struct PolyDisplay<'a, G: Generator> {
    poly: &'a Poly<G>,
    alphabet: Alphabet,
}

impl<G: Generator> fmt::Display for PolyDisplay<'_, G> {
    /// Every term carries an explicit coefficient: `-1*s1(y z)+1*s1(y z')`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.poly.terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let abs = if neg { -c.clone() } else { c.clone() };
            write!(f, "{abs}")?;
            for (g, k) in m.powers() {
                f.write_str("*")?;
                g.write(f, self.alphabet)?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl<G: Generator> fmt::Display for Poly<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(Alphabet::Indexed).fmt(f)
    }
}
