//! The polynomial ring on symbols `σ_t(class)` and normalization of
//! σ-expressions into it.
//!
//! Normalization applies, in order:
//! 1. Amitsur's formula to `σ_t` of a sum and `σ_t(a α) = a^t σ_t(α)` to
//!    scalar multiples;
//! 2. the power formula `P_{t,l}` to `σ_t(u^l)`, `u` primitive;
//! 3. cyclic and transpose invariance, by replacing each primitive word with
//!    its [`NecklaceClass`].
//!
//! Every stage produces only `σ_t` of primitive classes, so one pass reaches
//! the normal form.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::expansion::{amitsur_terms, power_terms};
use crate::expr::SigmaExpr;
use crate::field::{Field, FieldElement};
use crate::linword::LinWord;
use crate::poly::{Generator, Monomial, Poly};
use crate::syntax::{self, Alphabet};
use crate::word::{NecklaceClass, Word};

/// The generator `σ_t(class)`, `t >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SigmaGen {
    t: usize,
    class: NecklaceClass,
}

impl SigmaGen {
    pub fn new(t: usize, class: NecklaceClass) -> Self {
        assert!(t >= 1, "σ_t requires t >= 1");
        SigmaGen { t, class }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn class(&self) -> &NecklaceClass {
        &self.class
    }
}

impl Ord for SigmaGen {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then(self.t.cmp(&o.t))
            .then_with(|| self.class.rep().cmp(o.class.rep()))
    }
}

impl PartialOrd for SigmaGen {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Generator for SigmaGen {
    fn degree(&self) -> usize {
        self.t * self.class.len()
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, alphabet: Alphabet) -> fmt::Result {
        write!(f, "s{}({})", self.t, self.class.rep().display(alphabet))
    }
}

pub type SigmaPoly = Poly<SigmaGen>;
pub type SigmaMonomial = Monomial<SigmaGen>;

/// `σ_t(w)` for a single word: power reduction, then canonicalization.
pub fn sigma_of_word(t: usize, w: &Word, field: Field) -> SigmaPoly {
    let (root, l) = w.primitive_root();
    let class = root.canonical();
    if l == 1 {
        return SigmaPoly::generator(SigmaGen::new(t, class), field);
    }
    let mut out = SigmaPoly::zero(field);
    for (c, parts) in power_terms(t, l).iter() {
        let gens = parts.iter().map(|&i| SigmaGen::new(i, class.clone())).collect();
        out.add_term(Monomial::from_gens(gens), field.from_bigint(c));
    }
    out
}

/// `σ_t(α)` for a linear combination of words.
pub fn sigma_of_linword(t: usize, a: &LinWord) -> SigmaPoly {
    assert!(t >= 1);
    let field = a.field();
    let terms: Vec<(&Word, &FieldElement)> = a.terms().collect();
    match terms.len() {
        0 => SigmaPoly::zero(field),
        1 => sigma_of_word(t, terms[0].0, field).scaled(&terms[0].1.pow(t as u32)),
        p => {
            let mut out = SigmaPoly::zero(field);
            for term in amitsur_terms(t, p).iter() {
                let mut acc = SigmaPoly::constant(field.from_i64(term.sign as i64));
                for (j, cycle) in &term.factors {
                    let mut coeff = field.one();
                    let mut word: Option<Word> = None;
                    for &s in cycle {
                        let (w, c) = terms[s as usize];
                        coeff = coeff * c.clone();
                        word = Some(match word {
                            None => w.clone(),
                            Some(prev) => prev.concat(w),
                        });
                    }
                    let factor = sigma_of_word(*j, &word.unwrap(), field).scaled(&coeff.pow(*j as u32));
                    acc = acc.times(&factor);
                    if acc.is_zero() {
                        break;
                    }
                }
                out.plus_assign(&acc);
            }
            out
        }
    }
}

/// Normal form of `e` over `field`. Fails only when a rational constant of
/// `e` cannot be reduced into `field`.
pub fn normalize(e: &SigmaExpr, field: Field) -> Result<SigmaPoly> {
    field.validate()?;
    Ok(match e {
        SigmaExpr::Const(c) => SigmaPoly::constant(field.from_rational(c)?),
        SigmaExpr::Sigma { t, arg } => sigma_of_linword(*t, &arg.to_linword(field)?),
        SigmaExpr::Sum(v) => {
            let mut acc = SigmaPoly::zero(field);
            for x in v {
                acc.plus_assign(&normalize(x, field)?);
            }
            acc
        }
        SigmaExpr::Product(v) => {
            let mut acc = SigmaPoly::one(field);
            for x in v {
                acc = acc.times(&normalize(x, field)?);
            }
            acc
        }
        SigmaExpr::Power(x, k) => normalize(x, field)?.pow(*k),
    })
}

/// Parses and normalizes.
pub fn parse_poly(src: &str, field: Field) -> Result<(SigmaPoly, Alphabet)> {
    let (e, alphabet) = syntax::parse_expr(src)?;
    Ok((normalize(&e, field)?, alphabet))
}

/// Replaces letter `x_k` by `images[k-1]` and `x_k^T` by its transpose in
/// every generator, then normalizes.
pub fn substitute(p: &SigmaPoly, images: &[LinWord]) -> Result<SigmaPoly> {
    let field = images.first().map_or(p.field(), LinWord::field);
    for im in images {
        if im.field() != field {
            return Err(Error::FieldMismatch { left: field, right: im.field() });
        }
    }
    let transposed: Vec<LinWord> = images.iter().map(LinWord::transpose).collect();
    p.map_generators(field, |g| {
        let mut arg: Option<LinWord> = None;
        for l in g.class().rep().letters() {
            let k = (l.index() - 1) as usize;
            let img = if l.is_transposed() { transposed.get(k) } else { images.get(k) };
            let img = img.ok_or(Error::IndexOutOfRange { index: l.index(), d: images.len() })?;
            arg = Some(match arg {
                None => img.clone(),
                Some(a) => a.mul(img)?,
            });
        }
        Ok(sigma_of_linword(g.t(), &arg.unwrap()))
    })
}

/// All generators occurring in `p`, sorted and deduplicated.
pub fn generators(p: &SigmaPoly) -> Vec<SigmaGen> {
    let mut v: Vec<SigmaGen> = p.terms().flat_map(|(m, _)| m.gens().iter().cloned()).collect();
    v.sort();
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(src: &str) -> SigmaPoly {
        parse_poly(src, Field::Rational).unwrap().0
    }

    fn show(p: &SigmaPoly) -> String {
        p.to_string()
    }

    #[test]
    fn ring_ops() {
        let a = q("s1(x1)");
        assert_eq!(a.add(&SigmaPoly::zero(Field::Rational)).unwrap(), a);
        assert_eq!(show(&a.mul(&a).unwrap()), "1*s1(x1)^2");
        let minus = a.scale(&Field::Rational.from_i64(-1)).unwrap();
        assert!(minus.add(&a).unwrap().is_zero());
        let f7 = SigmaPoly::one(Field::prime(7).unwrap());
        assert!(matches!(a.add(&f7), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn amitsur_two_terms() {
        assert_eq!(show(&q("s2(x1+x2)")), "1*s1(x1)*s1(x2)-1*s1(x1 x2)+1*s2(x1)+1*s2(x2)");
    }

    #[test]
    fn trace_of_square() {
        assert_eq!(show(&q("s1(x1 x1)")), "1*s1(x1)^2-2*s2(x1)");
    }

    #[test]
    fn homogeneity() {
        assert_eq!(show(&q("s3(2*x1)")), "8*s3(x1)");
        assert_eq!(show(&q("s2(-1/2*x1 x2)")), "1/4*s2(x1 x2)");
    }

    #[test]
    fn cyclic_and_transpose() {
        assert_eq!(q("s1(x2 x1)"), q("s1(x1 x2)"));
        assert_eq!(q("s1(x1')"), q("s1(x1)"));
        assert_eq!(q("s2(x1 x2' x2)"), q("s2(x2' x2 x1')"));
    }

    #[test]
    fn zero_argument() {
        assert!(q("s2(x1 - x1)").is_zero());
    }

    #[test]
    fn idempotent_on_normal_forms() {
        for src in ["s2(x1+x2)*s1(x1 x1' x2)", "s3(x1 x2 x1 x2) - 3/2", "(s1(x1)+s2(x2'))^3"] {
            let p = q(src);
            assert_eq!(q(&p.to_string()), p, "{src}");
        }
        let f = Field::prime(5).unwrap();
        let (p, _) = parse_poly("3*s1(x1)^2 - s2(x1 x1)", f).unwrap();
        assert_eq!(parse_poly(&p.to_string(), f).unwrap().0, p);
    }

    #[test]
    fn transpose_rule_on_all_short_words() {
        use crate::word::Letter;
        let mut words = vec![];
        for len in 1..=4 {
            let total = 4usize.pow(len);
            for code in 0..total {
                let mut c = code;
                let letters = (0..len).map(|_| {
                    let l = Letter::from_code((c % 4) as u32);
                    c /= 4;
                    l
                });
                words.push(Word::new(letters.collect()));
            }
        }
        for w in &words {
            for t in 1..=4 {
                assert_eq!(
                    sigma_of_word(t, w, Field::Rational),
                    sigma_of_word(t, &w.transpose(), Field::Rational),
                    "t={t} w={w}"
                );
            }
        }
    }

    #[test]
    fn substitution_renames_letters() {
        let f = Field::Rational;
        let p = q("s1(x1 x2) + s2(x2')");
        let img = |s: &str| LinWord::word(s.parse().unwrap(), f);
        let r = substitute(&p, &[img("x2"), img("x1 x3")]).unwrap();
        assert_eq!(r, q("s1(x2 x1 x3) + s2(x3' x1')"));
    }
}
