//! Field-agnostic syntax trees for elements of the free ring on symbols
//! `σ_t(α)`, `α` an arbitrary linear combination of words.

use num_rational::BigRational;

use crate::error::Result;
use crate::field::Field;
use crate::linword::LinWord;
use crate::word::Word;

/// Argument of a `σ` symbol: sums, scalar multiples, products and powers of
/// words.
#[derive(Clone, Debug, PartialEq)]
pub enum ArgExpr {
    Word(Word),
    Scale(BigRational, Box<ArgExpr>),
    Sum(Vec<ArgExpr>),
    Product(Vec<ArgExpr>),
    Power(Box<ArgExpr>, u32),
}

impl ArgExpr {
    /// Expands the argument into a linear combination of words over `field`.
    pub fn to_linword(&self, field: Field) -> Result<LinWord> {
        Ok(match self {
            ArgExpr::Word(w) => LinWord::word(w.clone(), field),
            ArgExpr::Scale(c, a) => a.to_linword(field)?.scale(&field.from_rational(c)?)?,
            ArgExpr::Sum(items) => {
                let mut acc = LinWord::zero(field);
                for it in items {
                    acc = acc.add(&it.to_linword(field)?)?;
                }
                acc
            }
            ArgExpr::Product(items) => {
                let mut it = items.iter();
                let mut acc = it.next().expect("nonempty product").to_linword(field)?;
                for x in it {
                    acc = acc.mul(&x.to_linword(field)?)?;
                }
                acc
            }
            ArgExpr::Power(a, k) => a.to_linword(field)?.pow(*k),
        })
    }

    pub fn max_index(&self) -> u32 {
        match self {
            ArgExpr::Word(w) => w.max_index(),
            ArgExpr::Scale(_, a) | ArgExpr::Power(a, _) => a.max_index(),
            ArgExpr::Sum(v) | ArgExpr::Product(v) => v.iter().map(ArgExpr::max_index).max().unwrap_or(0),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SigmaExpr {
    Const(BigRational),
    /// `σ_t(arg)`, `t >= 1`.
    Sigma { t: usize, arg: ArgExpr },
    Sum(Vec<SigmaExpr>),
    Product(Vec<SigmaExpr>),
    Power(Box<SigmaExpr>, u32),
}

impl SigmaExpr {
    pub fn sigma(t: usize, arg: ArgExpr) -> Self {
        assert!(t >= 1, "σ_t requires t >= 1");
        SigmaExpr::Sigma { t, arg }
    }

    pub fn int(v: i64) -> Self {
        SigmaExpr::Const(BigRational::from_integer(v.into()))
    }

    pub fn max_index(&self) -> u32 {
        match self {
            SigmaExpr::Const(_) => 0,
            SigmaExpr::Sigma { arg, .. } => arg.max_index(),
            SigmaExpr::Power(e, _) => e.max_index(),
            SigmaExpr::Sum(v) | SigmaExpr::Product(v) => v.iter().map(SigmaExpr::max_index).max().unwrap_or(0),
        }
    }
}
