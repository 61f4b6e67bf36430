//! Finite linear combinations of words (elements of the span of the monoid).

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, Scalar};
use crate::syntax::Alphabet;
use crate::word::Word;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinWord {
    field: Field,
    terms: BTreeMap<Word, FieldElement>,
}

impl LinWord {
    pub fn zero(field: Field) -> Self {
        LinWord { field, terms: BTreeMap::new() }
    }

    pub fn word(w: Word, field: Field) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, field.one());
        LinWord { field, terms }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &FieldElement)> {
        self.terms.iter()
    }

    pub fn max_index(&self) -> u32 {
        self.terms.keys().map(Word::max_index).max().unwrap_or(0)
    }

    fn check(&self, other: &LinWord) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field, right: other.field });
        }
        Ok(())
    }

    pub(crate) fn add_term(&mut self, w: Word, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                *e = &*e + &c;
                if e.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &LinWord) -> Result<LinWord> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElement) -> Result<LinWord> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch { left: self.field, right: c.field() });
        }
        let mut out = LinWord::zero(self.field);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a * c);
        }
        Ok(out)
    }

    /// Noncommutative product, distributed over both sums.
    pub fn mul(&self, other: &LinWord) -> Result<LinWord> {
        self.check(other)?;
        let mut out = LinWord::zero(self.field);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> LinWord {
        assert!(k >= 1, "the monoid has no unity; exponents start at 1");
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self).expect("same field");
        }
        acc
    }

    /// Termwise transpose.
    pub fn transpose(&self) -> LinWord {
        let mut out = LinWord::zero(self.field);
        for (w, c) in &self.terms {
            out.add_term(w.transpose(), c.clone());
        }
        out
    }

    pub fn display(&self, alphabet: Alphabet) -> LinWordDisplay<'_> {
        LinWordDisplay { lw: self, alphabet }
    }
}

pub struct LinWordDisplay<'a> {
    lw: &'a LinWord,
    alphabet: Alphabet,
}

impl fmt::Display for LinWordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lw.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.lw.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                f.write_str(if neg { "-" } else { "+" })?;
            } else if neg {
                f.write_str("-")?;
            }
            let abs = if neg { -c.clone() } else { c.clone() };
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{}", w.display(self.alphabet))?;
        }
        Ok(())
    }
}

impl fmt::Display for LinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(Alphabet::Indexed).fmt(f)
    }
}
