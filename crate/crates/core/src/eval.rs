//! Evaluation of σ-polynomials on concrete matrix tuples, random exact
//! tuples, and randomized verification of the relations `σ_{t,r}`.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{ArgExpr, SigmaExpr};
use crate::field::{parse_rational, Field, FieldElement, Scalar};
use crate::linword::LinWord;
use crate::matrix::{char_coeffs, faddeev_leverrier_integer, Matrix};
use crate::quiver::sigma_tr_subst;
use crate::sigma::SigmaPoly;
use crate::word::{NecklaceClass, Word};

/// `d` square `n x n` matrices over one field.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixTuple {
    n: usize,
    field: Field,
    matrices: Vec<Matrix<FieldElement>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Serialize, Deserialize)]
struct TupleJson {
    n: usize,
    d: usize,
    field: Field,
    matrices: Vec<Vec<Vec<Entry>>>,
}

impl MatrixTuple {
    pub fn new(field: Field, matrices: Vec<Matrix<FieldElement>>) -> Result<Self> {
        field.validate()?;
        let first = matrices.first().ok_or_else(|| Error::Matrix("empty tuple".into()))?;
        let n = first.n();
        for m in &matrices {
            if m.n() != n {
                return Err(Error::Matrix(format!("mixed sizes {n} and {}", m.n())));
            }
            if let Some(e) = m.entries().iter().find(|e| e.field() != field) {
                return Err(Error::FieldMismatch { left: field, right: e.field() });
            }
        }
        Ok(MatrixTuple { n, field, matrices })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.matrices.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn matrices(&self) -> &[Matrix<FieldElement>] {
        &self.matrices
    }

    /// `X_k -> g X_k g^T`.
    pub fn conjugate_orthogonal(&self, g: &Matrix<FieldElement>) -> MatrixTuple {
        let gt = g.transpose();
        let matrices = self.matrices.iter().map(|x| &(g * x) * &gt).collect();
        MatrixTuple { n: self.n, field: self.field, matrices }
    }

    pub fn from_json(src: &str) -> Result<Self> {
        let raw: TupleJson = serde_json::from_str(src)?;
        raw.field.validate()?;
        if raw.n == 0 {
            return Err(Error::Matrix("n must be positive".into()));
        }
        if raw.matrices.len() != raw.d {
            return Err(Error::Matrix(format!("d = {} but {} matrices given", raw.d, raw.matrices.len())));
        }
        let mut mats = Vec::with_capacity(raw.d);
        for (k, m) in raw.matrices.iter().enumerate() {
            if m.len() != raw.n || m.iter().any(|row| row.len() != raw.n) {
                return Err(Error::Matrix(format!("matrix {} is not {}x{}", k + 1, raw.n, raw.n)));
            }
            let mut data = Vec::with_capacity(raw.n * raw.n);
            for e in m.iter().flatten() {
                let q = match e {
                    Entry::Int(v) => raw.field.from_i64(*v),
                    Entry::Text(s) => {
                        let r = parse_rational(s).ok_or_else(|| Error::Matrix(format!("bad entry {s:?}")))?;
                        raw.field.from_rational(&r)?
                    }
                };
                data.push(q);
            }
            mats.push(Matrix::from_rows(raw.n, data));
        }
        MatrixTuple::new(raw.field, mats)
    }

    pub fn to_json(&self) -> String {
        let entry = |e: &FieldElement| match e {
            FieldElement::Rational(r) if r.is_integer() => match r.numer().to_i64() {
                Some(v) => Entry::Int(v),
                None => Entry::Text(r.to_string()),
            },
            FieldElement::Rational(r) => Entry::Text(r.to_string()),
            FieldElement::Prime(z) => Entry::Int(z.symmetric() as i64),
        };
        let raw = TupleJson {
            n: self.n,
            d: self.d(),
            field: self.field,
            matrices: self
                .matrices
                .iter()
                .map(|m| m.entries().chunks(self.n).map(|row| row.iter().map(entry).collect()).collect())
                .collect(),
        };
        serde_json::to_string(&raw).expect("tuple serializes")
    }
}

/// Product of `X_k` / `X_k^T` along `w`, given the matrices and their
/// transposes.
pub(crate) fn word_product<S: Scalar>(w: &Word, mats: &[Matrix<S>], trans: &[Matrix<S>]) -> Result<Matrix<S>> {
    let mut acc: Option<Matrix<S>> = None;
    for l in w.letters() {
        let k = l.index() as usize - 1;
        let m = if l.is_transposed() { trans.get(k) } else { mats.get(k) };
        let m = m.ok_or(Error::IndexOutOfRange { index: l.index(), d: mats.len() })?;
        acc = Some(match acc {
            None => m.clone(),
            Some(a) => &a * m,
        });
    }
    Ok(acc.expect("words are nonempty"))
}

pub fn eval_word(w: &Word, tuple: &MatrixTuple) -> Result<Matrix<FieldElement>> {
    let trans: Vec<_> = tuple.matrices.iter().map(Matrix::transpose).collect();
    word_product(w, &tuple.matrices, &trans)
}

/// Caches `σ_1..σ_n` of word products on one fixed tuple.
pub struct Evaluator<S: Scalar> {
    mats: Vec<Matrix<S>>,
    trans: Vec<Matrix<S>>,
    coeffs: fn(&Matrix<S>) -> Vec<S>,
    cache: HashMap<NecklaceClass, Vec<S>>,
}

impl<S: Scalar> Evaluator<S> {
    /// `coeffs` must return `σ_1..σ_n` of its argument.
    pub fn with(mats: Vec<Matrix<S>>, coeffs: fn(&Matrix<S>) -> Vec<S>) -> Self {
        assert!(!mats.is_empty());
        let trans = mats.iter().map(Matrix::transpose).collect();
        Evaluator { mats, trans, coeffs, cache: HashMap::new() }
    }

    /// `σ_t(X_class)`, zero for `t > n`.
    pub fn sigma(&mut self, t: usize, class: &NecklaceClass) -> Result<S> {
        if t > self.mats[0].n() {
            return Ok(self.mats[0].get(0, 0).zero_like());
        }
        if let Some(c) = self.cache.get(class) {
            return Ok(c[t - 1].clone());
        }
        let m = word_product(class.rep(), &self.mats, &self.trans)?;
        let c = (self.coeffs)(&m);
        let v = c[t - 1].clone();
        self.cache.insert(class.clone(), c);
        Ok(v)
    }
}

enum Backend {
    /// Rational tuple with integer entries, evaluated in `Z`.
    Integer(Evaluator<BigInt>),
    Field(Evaluator<FieldElement>),
}

/// Evaluates many polynomials on one tuple, sharing `σ` values between
/// them. Integral tuples over `Q` are evaluated in exact integer
/// arithmetic.
pub struct PolyEvaluator {
    field: Field,
    backend: Backend,
}

impl PolyEvaluator {
    pub fn new(tuple: &MatrixTuple) -> Self {
        let field = tuple.field;
        let ints: Option<Vec<Matrix<BigInt>>> = tuple
            .matrices
            .iter()
            .map(|m| m.entries().iter().map(as_integer).collect::<Option<Vec<_>>>().map(|e| Matrix::from_rows(tuple.n, e)))
            .collect();
        let backend = match ints {
            Some(mats) if field == Field::Rational => Backend::Integer(Evaluator::with(mats, faddeev_leverrier_integer)),
            _ => Backend::Field(Evaluator::with(tuple.matrices.clone(), char_coeffs)),
        };
        PolyEvaluator { field, backend }
    }

    pub fn sigma(&mut self, t: usize, class: &NecklaceClass) -> Result<FieldElement> {
        Ok(match &mut self.backend {
            Backend::Integer(ev) => self.field.from_bigint(&ev.sigma(t, class)?),
            Backend::Field(ev) => ev.sigma(t, class)?,
        })
    }

    pub fn eval_poly(&mut self, p: &SigmaPoly) -> Result<FieldElement> {
        if p.field() != self.field {
            return Err(Error::FieldMismatch { left: p.field(), right: self.field });
        }
        let mut acc = self.field.zero();
        for (m, c) in p.terms() {
            let value = match &mut self.backend {
                Backend::Integer(ev) => {
                    let mut prod = BigInt::from(1);
                    for g in m.gens() {
                        prod *= ev.sigma(g.t(), g.class())?;
                        if Zero::is_zero(&prod) {
                            break;
                        }
                    }
                    self.field.from_bigint(&prod)
                }
                Backend::Field(ev) => {
                    let mut prod = self.field.one();
                    for g in m.gens() {
                        prod = &prod * &ev.sigma(g.t(), g.class())?;
                        if prod.is_zero() {
                            break;
                        }
                    }
                    prod
                }
            };
            acc = &acc + &(c * &value);
        }
        Ok(acc)
    }
}

/// `Ψ_n(p)` at `tuple`: `σ_t(class) -> σ_t(X_rep)` for `t <= n`, else `0`.
pub fn eval_poly(p: &SigmaPoly, tuple: &MatrixTuple) -> Result<FieldElement> {
    PolyEvaluator::new(tuple).eval_poly(p)
}

fn eval_arg(a: &ArgExpr, tuple: &MatrixTuple, trans: &[Matrix<FieldElement>]) -> Result<Matrix<FieldElement>> {
    let field = tuple.field;
    Ok(match a {
        ArgExpr::Word(w) => word_product(w, &tuple.matrices, trans)?,
        ArgExpr::Scale(c, x) => eval_arg(x, tuple, trans)?.scale(&field.from_rational(c)?),
        ArgExpr::Sum(v) => {
            let mut it = v.iter();
            let mut acc = eval_arg(it.next().expect("nonempty sum"), tuple, trans)?;
            for x in it {
                acc = &acc + &eval_arg(x, tuple, trans)?;
            }
            acc
        }
        ArgExpr::Product(v) => {
            let mut it = v.iter();
            let mut acc = eval_arg(it.next().expect("nonempty product"), tuple, trans)?;
            for x in it {
                acc = &acc * &eval_arg(x, tuple, trans)?;
            }
            acc
        }
        ArgExpr::Power(x, k) => eval_arg(x, tuple, trans)?.pow(*k),
    })
}

/// Evaluates the syntax tree directly: arguments become concrete matrices and
/// `σ_t` is read off their characteristic polynomial. No symbolic rewriting.
pub fn eval_direct(e: &SigmaExpr, tuple: &MatrixTuple) -> Result<FieldElement> {
    let trans: Vec<_> = tuple.matrices.iter().map(Matrix::transpose).collect();
    eval_direct_with(e, tuple, &trans)
}

fn eval_direct_with(e: &SigmaExpr, tuple: &MatrixTuple, trans: &[Matrix<FieldElement>]) -> Result<FieldElement> {
    let field = tuple.field;
    Ok(match e {
        SigmaExpr::Const(c) => field.from_rational(c)?,
        SigmaExpr::Sigma { t, arg } => {
            if *t > tuple.n {
                field.zero()
            } else {
                char_coeffs(&eval_arg(arg, tuple, trans)?)[t - 1].clone()
            }
        }
        SigmaExpr::Sum(v) => {
            let mut acc = field.zero();
            for x in v {
                acc = &acc + &eval_direct_with(x, tuple, trans)?;
            }
            acc
        }
        SigmaExpr::Product(v) => {
            let mut acc = field.one();
            for x in v {
                acc = &acc * &eval_direct_with(x, tuple, trans)?;
            }
            acc
        }
        SigmaExpr::Power(x, k) => eval_direct_with(x, tuple, trans)?.pow(*k),
    })
}

pub const DEFAULT_SAMPLES: usize = 20;
pub const DEFAULT_BOUND: i64 = 10;

/// `d` matrices with entries uniform in `[-bound, bound]`, determined by
/// `seed` alone.
pub fn random_tuple(n: usize, d: usize, field: Field, seed: u64, bound: i64) -> MatrixTuple {
    assert!(n >= 1 && d >= 1 && bound >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let matrices = (0..d)
        .map(|_| Matrix::from_rows(n, (0..n * n).map(|_| field.from_i64(rng.gen_range(-bound..=bound))).collect()))
        .collect();
    MatrixTuple { n, field, matrices }
}

/// A uniformly random signed permutation matrix, exactly orthogonal.
pub fn random_signed_permutation(n: usize, field: Field, seed: u64) -> Matrix<FieldElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut data = vec![field.zero(); n * n];
    for (i, &j) in perm.iter().enumerate() {
        data[i * n + j] = field.from_i64(if rng.gen() { 1 } else { -1 });
    }
    Matrix::from_rows(n, data)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub seed: u64,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EvalReport {
    pub samples: usize,
    pub zero_count: usize,
    /// First sample (lowest seed) with a nonzero value.
    pub witness: Option<Witness>,
    #[serde(serialize_with = "seconds")]
    pub elapsed: Duration,
}

fn seconds<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl EvalReport {
    pub fn all_zero(&self) -> bool {
        self.zero_count == self.samples
    }
}

/// Seed of the `i`-th sample tuple of a run seeded with `seed`.
pub fn sample_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_add(i as u64)
}

/// Evaluates `p` on the tuples `random_tuple(n, d, field, sample_seed(seed, i), DEFAULT_BOUND)`.
pub fn sample_poly(p: &SigmaPoly, n: usize, d: usize, samples: usize, seed: u64) -> Result<EvalReport> {
    let start = Instant::now();
    let values: Vec<FieldElement> = (0..samples)
        .into_par_iter()
        .map(|i| eval_poly(p, &random_tuple(n, d, p.field(), sample_seed(seed, i), DEFAULT_BOUND)))
        .collect::<Result<_>>()?;
    let zero_count = values.iter().filter(|v| v.is_zero()).count();
    let witness = values
        .iter()
        .position(|v| !v.is_zero())
        .map(|i| Witness { seed: sample_seed(seed, i), value: values[i].to_string() });
    Ok(EvalReport { samples, zero_count, witness, elapsed: start.elapsed() })
}

fn letters_used(a: &[&LinWord]) -> usize {
    a.iter().map(|x| x.max_index()).max().unwrap_or(0).max(1) as usize
}

/// Evaluates `σ_{t,r}(a, b, c)` on `samples` random `n x n` tuples. The
/// tuple size `d` is the largest letter index among `a, b, c`.
#[allow(clippy::too_many_arguments)]
pub fn verify_relation(
    t: usize,
    r: usize,
    a: &LinWord,
    b: &LinWord,
    c: &LinWord,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<EvalReport> {
    assert!(samples >= 1);
    let p = sigma_tr_subst(t, r, a, b, c)?;
    sample_poly(&p, n, letters_used(&[a, b, c]), samples, seed)
}

/// Parameters of a relation sweep over substitution words.
#[derive(Clone, Debug, Serialize)]
pub struct SweepConfig {
    pub n: usize,
    pub max_excess: usize,
    pub word_len: usize,
    pub d: u32,
    pub samples: usize,
    pub seed: u64,
    pub field: Field,
    /// Extra substitutions tried in the `a` slot alongside plain words.
    #[serde(skip)]
    pub extra_a: Vec<LinWord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepCase {
    pub t: usize,
    pub r: usize,
    pub a: String,
    pub b: String,
    pub c: String,
    pub zero_count: usize,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    /// `(t, r)` pairs checked, `n < t + 2r <= n + max_excess`.
    pub pairs: Vec<(usize, usize)>,
    pub cases: usize,
    pub samples: usize,
    /// Cases with some nonzero evaluation.
    pub failures: Vec<SweepCase>,
    #[serde(serialize_with = "seconds")]
    pub elapsed: Duration,
}

/// Every word of length `1..=max_len` over `x_1..x_d` and their transposes.
pub fn all_words(d: u32, max_len: usize) -> Vec<Word> {
    let letters: Vec<_> = (1..=d).flat_map(|k| [crate::word::Letter::new(k, false), crate::word::Letter::new(k, true)]).collect();
    let mut out = Vec::new();
    let mut layer: Vec<Vec<crate::word::Letter>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| letters.iter().map(move |&l| [w.as_slice(), &[l]].concat()))
            .collect();
        out.extend(layer.iter().cloned().map(Word::new));
    }
    out
}

/// Checks `σ_{t,r}(a, b, c) = 0` on shared random tuples for every
/// `(t, r)` with `n < t + 2r <= n + max_excess` and every substitution of
/// words of length `<= word_len` over `d` letters. Arguments `b, c` do not
/// occur in `σ_{t,0}`, so for `r = 0` only `a` varies.
pub fn sweep_relations(cfg: &SweepConfig) -> Result<SweepReport> {
    let start = Instant::now();
    let n = cfg.n;
    let field = cfg.field;
    let mut pairs = Vec::new();
    for total in n + 1..=n + cfg.max_excess {
        for r in 0..=total / 2 {
            pairs.push((total - 2 * r, r));
        }
    }
    let words: Vec<LinWord> = all_words(cfg.d, cfg.word_len).into_iter().map(|w| LinWord::word(w, field)).collect();
    let mut a_slot = words.clone();
    a_slot.extend(cfg.extra_a.iter().cloned());

    let mut cases: Vec<(usize, usize, usize, usize, usize)> = Vec::new();
    for &(t, r) in &pairs {
        for ia in 0..a_slot.len() {
            if r == 0 {
                cases.push((t, r, ia, 0, 0));
                continue;
            }
            for ib in 0..words.len() {
                for ic in 0..words.len() {
                    cases.push((t, r, ia, ib, ic));
                }
            }
        }
    }

    let d = a_slot.iter().map(|w| w.max_index()).max().unwrap_or(1).max(cfg.d) as usize;
    let tuples: Vec<MatrixTuple> =
        (0..cfg.samples).map(|i| random_tuple(n, d, field, sample_seed(cfg.seed, i), DEFAULT_BOUND)).collect();

    let outcomes: Vec<Option<SweepCase>> = cases
        .par_iter()
        .map_init(
            || tuples.iter().map(PolyEvaluator::new).collect::<Vec<_>>(),
            |evals, &(t, r, ia, ib, ic)| -> Result<Option<SweepCase>> {
                let (a, b, c) = (&a_slot[ia], &words[ib], &words[ic]);
                let p = sigma_tr_subst(t, r, a, b, c)?;
                let mut zero_count = 0;
                let mut witness = None;
                for (i, ev) in evals.iter_mut().enumerate() {
                    let v = ev.eval_poly(&p)?;
                    if v.is_zero() {
                        zero_count += 1;
                    } else if witness.is_none() {
                        witness = Some(Witness { seed: sample_seed(cfg.seed, i), value: v.to_string() });
                    }
                }
                Ok(witness.is_some().then(|| SweepCase {
                    t,
                    r,
                    a: a.to_string(),
                    b: if r == 0 { "-".into() } else { b.to_string() },
                    c: if r == 0 { "-".into() } else { c.to_string() },
                    zero_count,
                    witness,
                }))
            },
        )
        .collect::<Result<_>>()?;

    Ok(SweepReport {
        config: cfg.clone(),
        pairs,
        cases: cases.len(),
        samples: cfg.samples,
        failures: outcomes.into_iter().flatten().collect(),
        elapsed: start.elapsed(),
    })
}

/// Integer value of an element of `Q`, if it is one.
pub fn as_integer(v: &FieldElement) -> Option<BigInt> {
    v.as_rational().filter(|r| r.is_integer()).map(|r| r.numer().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sigma::parse_poly;

    fn q() -> Field {
        Field::Rational
    }

    fn tuple_1234() -> MatrixTuple {
        let m = Matrix::from_rows(2, [1, 2, 3, 4].iter().map(|&v| q().from_i64(v)).collect());
        MatrixTuple::new(q(), vec![m]).unwrap()
    }

    #[test]
    fn word_products() {
        let t = tuple_1234();
        let w: Word = "x1 x1'".parse().unwrap();
        let m = eval_word(&w, &t).unwrap();
        let want: Vec<_> = [5, 11, 11, 25].iter().map(|&v| q().from_i64(v)).collect();
        assert_eq!(m.entries(), &want[..]);
        assert_eq!(char_coeffs(&m)[0], q().from_i64(30));
        let bad: Word = "x2".parse().unwrap();
        assert!(matches!(eval_word(&bad, &t), Err(Error::IndexOutOfRange { index: 2, d: 1 })));
    }

    #[test]
    fn truncation_and_constants() {
        let t = tuple_1234();
        let p = |s: &str| parse_poly(s, q()).unwrap().0;
        assert!(eval_poly(&p("s3(x1)"), &t).unwrap().is_zero());
        assert_eq!(eval_poly(&p("1"), &t).unwrap(), q().one());
        assert!(eval_poly(&p("s1(x1) - s1(x1')"), &t).unwrap().is_zero());
        let f5 = Field::prime(5).unwrap();
        assert!(matches!(eval_poly(&parse_poly("s1(x1)", f5).unwrap().0, &t), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn random_tuples_are_reproducible() {
        let a = random_tuple(3, 2, q(), 1, 10);
        assert_eq!(a, random_tuple(3, 2, q(), 1, 10));
        assert_ne!(a, random_tuple(3, 2, q(), 2, 10));
        let small = random_tuple(4, 3, q(), 5, 1);
        for m in small.matrices() {
            for e in m.entries() {
                let v = as_integer(e).unwrap();
                assert!((-1..=1).contains(&v.to_i64().unwrap()));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let src = r#"{"n":2,"d":1,"field":{"type":"Q"},"matrices":[[[1,"1/2"],[-3,"4"]]]}"#;
        let t = MatrixTuple::from_json(src).unwrap();
        assert_eq!(t.matrices()[0].get(0, 1).to_string(), "1/2");
        assert_eq!(MatrixTuple::from_json(&t.to_json()).unwrap(), t);
        let even = r#"{"n":1,"d":1,"field":{"type":"Fp","p":4},"matrices":[[[1]]]}"#;
        let err = MatrixTuple::from_json(even).unwrap_err().to_string();
        assert!(err.contains("p must be odd"), "{err}");
        let ragged = r#"{"n":2,"d":1,"field":{"type":"Q"},"matrices":[[[1,2],[3]]]}"#;
        assert!(MatrixTuple::from_json(ragged).is_err());
    }

    #[test]
    fn signed_permutations_are_orthogonal() {
        for seed in 0..10 {
            let g = random_signed_permutation(4, q(), seed);
            let id = g.identity_like();
            assert_eq!(&g * &g.transpose(), id);
        }
    }

    #[test]
    fn relation_reports() {
        let f = q();
        let x = |k: u32| LinWord::word(Word::letter(crate::word::Letter::x(k)), f);
        let rep = verify_relation(1, 1, &x(1), &x(2), &x(3), 2, 10, 3).unwrap();
        assert!(rep.all_zero() && rep.witness.is_none());
        let rep = verify_relation(0, 1, &x(1), &x(2), &x(3), 1, 10, 3).unwrap();
        assert!(rep.all_zero());
        let rep = verify_relation(1, 1, &x(1), &x(2), &x(3), 3, 20, 3).unwrap();
        assert!(rep.witness.is_some());
        assert!(rep.zero_count <= rep.samples);
    }

    #[test]
    fn word_enumeration() {
        assert_eq!(all_words(2, 2).len(), 4 + 16);
        assert_eq!(all_words(1, 3).len(), 2 + 4 + 8);
    }
}
