//! Expansion formulas used by normalization:
//!
//! * Amitsur's formula `F_{t,p}`: `σ_t(A_1 + ... + A_p)` as a signed sum over
//!   sets of pairwise different primitive cycles in `A_1..A_p`;
//! * the power formula `P_{t,l}`: `σ_t(A^l)` as an integer polynomial in
//!   `σ_1(A), σ_2(A), ...`, found by rewriting `e_t(a_1^l, ..., a_N^l)` in
//!   the elementary symmetric basis;
//! * Newton's identities writing `σ_t(A)` through traces of powers.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::memo::Memo;
use crate::poly::{Generator, Monomial, Poly};
use crate::sigma::{SigmaGen, SigmaPoly};
use crate::syntax::{self, Alphabet};
use crate::word::{lyndon_words, Letter, Word};

/// `σ_t(w)` where `w` is taken up to rotation only. Used for Amitsur cycles
/// (no transpose identification) and for traces of powers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycleGen {
    pub t: usize,
    pub word: Word,
}

impl Ord for CycleGen {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        (self.degree(), self.t, &self.word).cmp(&(o.degree(), o.t, &o.word))
    }
}

impl PartialOrd for CycleGen {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl Generator for CycleGen {
    fn degree(&self) -> usize {
        self.t * self.word.len()
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, alphabet: Alphabet) -> fmt::Result {
        write!(f, "s{}(", self.t)?;
        for (i, l) in self.word.letters().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            syntax::write_letter(f, *l, alphabet)?;
        }
        f.write_str(")")
    }
}

pub type CyclePoly = Poly<CycleGen>;

/// One summand of `F_{t,p}`: `sign * Π σ_{j}(cycle)`, cycles as Lyndon words
/// over symbols `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmitsurTerm {
    pub sign: i8,
    pub factors: Vec<(usize, Vec<u32>)>,
}

static AMITSUR: Memo<(usize, usize), Vec<AmitsurTerm>> = Memo::new();
/// `(coefficient, exponents of σ_1..σ_{tl})`.
pub type PowerTerm = (BigInt, Vec<usize>);

static POWER: Memo<(usize, usize), Vec<PowerTerm>> = Memo::new();

/// Terms of `F_{t,p}` (memoized).
pub fn amitsur_terms(t: usize, p: usize) -> Arc<Vec<AmitsurTerm>> {
    assert!(t >= 1 && p >= 1);
    AMITSUR.get_or_insert_with((t, p), || {
        let mut cycles = lyndon_words(p as u32, t);
        cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        amitsur_rec(&cycles, 0, t, t, &mut chosen, &mut out);
        out
    })
}

fn amitsur_rec(
    cycles: &[Vec<u32>],
    from: usize,
    t: usize,
    remaining: usize,
    chosen: &mut Vec<(usize, Vec<u32>)>,
    out: &mut Vec<AmitsurTerm>,
) {
    if remaining == 0 {
        let js: usize = chosen.iter().map(|(j, _)| j).sum();
        let sign = if (t - js).is_multiple_of(2) { 1 } else { -1 };
        out.push(AmitsurTerm { sign, factors: chosen.clone() });
        return;
    }
    for i in from..cycles.len() {
        let len = cycles[i].len();
        if len > remaining {
            break;
        }
        for j in 1..=remaining / len {
            chosen.push((j, cycles[i].clone()));
            amitsur_rec(cycles, i + 1, t, remaining - j * len, chosen, out);
            chosen.pop();
        }
    }
}

fn symbol_word(cycle: &[u32]) -> Word {
    Word::new(cycle.iter().map(|&s| Letter::x(s + 1)).collect())
}

/// `F_{t,p}` as a formal polynomial in `σ_j(γ)`, `γ` primitive cycles in
/// `A_1..A_p` (printed with [`Alphabet::Symbol`]).
pub fn amitsur_expand(t: usize, p: usize) -> CyclePoly {
    let q = Field::Rational;
    let mut out = Poly::zero(q);
    for term in amitsur_terms(t, p).iter() {
        let gens = term.factors.iter().map(|(j, c)| CycleGen { t: *j, word: symbol_word(c) }).collect();
        out.add_term(Monomial::from_gens(gens), q.from_i64(term.sign as i64));
    }
    out
}

type Partition = Vec<u32>;

fn partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Partition, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn conjugate(p: &[u32]) -> Partition {
    let m = p.first().copied().unwrap_or(0);
    (1..=m).map(|i| p.iter().filter(|&&x| x >= i).count() as u32).collect()
}

fn binom(n: u32, k: u32) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// Number of 0-1 matrices with row sums `rows` and column sums `cols`,
/// i.e. the coefficient of `m_cols` in `e_rows`.
fn zero_one_count(rows: &[u32], cols: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), BigInt>) -> BigInt {
    // State: multiplicities of remaining column sums, index v -> count.
    let maxc = cols.iter().copied().max().unwrap_or(0) as usize;
    let mut cnt = vec![0u32; maxc + 1];
    for &c in cols {
        cnt[c as usize] += 1;
    }
    count_rows(rows, 0, &cnt, memo)
}

fn count_rows(rows: &[u32], i: usize, cnt: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), BigInt>) -> BigInt {
    if i == rows.len() {
        return if cnt.iter().skip(1).all(|&c| c == 0) { BigInt::one() } else { BigInt::zero() };
    }
    let mut cols = cnt.to_vec();
    cols[0] = 0;
    let key = (rows[i..].to_vec(), cols);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    // Remaining capacity check.
    let need: u32 = rows[i..].iter().sum();
    let have: u32 = cnt.iter().enumerate().map(|(v, &c)| v as u32 * c).sum();
    let res = if need != have {
        BigInt::zero()
    } else {
        let mut total = BigInt::zero();
        let mut next = cnt.to_vec();
        choose_columns(rows, i, cnt, 1, rows[i], BigInt::one(), &mut next, memo, &mut total);
        total
    };
    memo.insert(key, res.clone());
    res
}

#[allow(clippy::too_many_arguments)]
fn choose_columns(
    rows: &[u32],
    i: usize,
    cnt: &[u32],
    v: usize,
    left: u32,
    ways: BigInt,
    next: &mut Vec<u32>,
    memo: &mut HashMap<(Vec<u32>, Vec<u32>), BigInt>,
    total: &mut BigInt,
) {
    if left == 0 {
        *total += ways * count_rows(rows, i + 1, next, memo);
        return;
    }
    if v >= cnt.len() {
        return;
    }
    for k in 0..=cnt[v].min(left) {
        next[v] -= k;
        next[v - 1] += k;
        choose_columns(rows, i, cnt, v + 1, left - k, &ways * binom(cnt[v], k), next, memo, total);
        next[v] += k;
        next[v - 1] -= k;
    }
}

/// Rewrites `m_{(l^t)} = e_t(a_1^l, ..., a_N^l)`, `N = t l`, in the basis of
/// products of elementary symmetric polynomials by leading-term
/// elimination. Returns `(coefficient, parts)` meaning
/// `coefficient * Π e_{part}`.
fn power_terms_uncached(t: usize, l: usize) -> Vec<(BigInt, Vec<usize>)> {
    let n = (t * l) as u32;
    let all = partitions(n);
    // m-basis coefficients, keyed so that iteration yields lex-largest first.
    let mut f: BTreeMap<Reverse<Partition>, BigRational> = BTreeMap::new();
    f.insert(Reverse(vec![l as u32; t]), BigRational::one());
    let mut result: Vec<(BigInt, Vec<usize>)> = Vec::new();
    let mut memo = HashMap::new();
    while let Some((Reverse(lead), c)) = f.iter().next().map(|(k, v)| (k.clone(), v.clone())) {
        let mu = conjugate(&lead);
        // e_mu = m_lead + lower terms.
        for nu in all.iter().filter(|nu| **nu <= lead) {
            let k = zero_one_count(&mu, nu, &mut memo);
            if k.is_zero() {
                continue;
            }
            let key = Reverse(nu.clone());
            let e = f.entry(key.clone()).or_insert_with(BigRational::zero);
            *e -= &c * BigRational::from_integer(k);
            if e.is_zero() {
                f.remove(&key);
            }
        }
        assert!(c.is_integer(), "power formula coefficient {c} is not integral");
        result.push((c.to_integer(), mu.iter().map(|&x| x as usize).collect()));
    }
    result
}

/// Terms of `P_{t,l}` as `(integer coefficient, [i_1, i_2, ...])` meaning
/// `coefficient * σ_{i_1}(A) σ_{i_2}(A) ...` (memoized).
pub fn power_terms(t: usize, l: usize) -> Arc<Vec<PowerTerm>> {
    assert!(t >= 1 && l >= 2);
    POWER.get_or_insert_with((t, l), || power_terms_uncached(t, l))
}

/// `P_{t,l}` as a polynomial in `σ_i(A)`, with `A` the letter `x1`.
pub fn power_expand(t: usize, l: usize) -> SigmaPoly {
    let q = Field::Rational;
    let a = Word::letter(Letter::x(1)).canonical();
    let mut out = Poly::zero(q);
    for (c, parts) in power_terms(t, l).iter() {
        let gens = parts.iter().map(|&i| SigmaGen::new(i, a.clone())).collect();
        out.add_term(Monomial::from_gens(gens), q.from_bigint(c));
    }
    out
}

/// `σ_t(A)` through the traces `σ_1(A^i)`, `1 <= i <= t`, by Newton's
/// identities. Needs division by `1..t`, so over `F_p` requires `p > t`.
pub fn newton_traces(t: usize, field: Field) -> Result<CyclePoly> {
    assert!(t >= 1);
    if let Field::Prime { p } = field {
        if p as usize <= t {
            return Err(Error::Unsupported(format!(
                "Newton's identities for t = {t} divide by {p}; need p > t"
            )));
        }
    }
    let q = Field::Rational;
    let trace = |i: usize| CyclePoly::generator(CycleGen { t: 1, word: Word::letter(Letter::x(1)).pow(i) }, q);
    // e_k = (1/k) Σ_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    let mut e: Vec<CyclePoly> = vec![CyclePoly::one(q)];
    for k in 1..=t {
        let mut acc = CyclePoly::zero(q);
        for i in 1..=k {
            let term = e[k - i].times(&trace(i));
            let s = if i % 2 == 1 { 1 } else { -1 };
            acc.plus_assign(&term.scaled(&q.from_i64(s)));
        }
        let inv_k = FieldElement::Rational(BigRational::new(BigInt::one(), BigInt::from(k)));
        e.push(acc.scaled(&inv_k));
    }
    e.pop().unwrap().coerce(field)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn amitsur_two_two() {
        let f = amitsur_expand(2, 2);
        assert_eq!(
            f.display(Alphabet::Symbol).to_string(),
            "1*s1(A1)*s1(A2)-1*s1(A1 A2)+1*s2(A1)+1*s2(A2)"
        );
        assert_eq!(amitsur_expand(1, 2).display(Alphabet::Symbol).to_string(), "1*s1(A1)+1*s1(A2)");
        assert_eq!(amitsur_expand(3, 1).display(Alphabet::SingleSymbol).to_string(), "1*s3(A)");
    }

    #[test]
    fn amitsur_structure() {
        for t in 1..=5 {
            for p in 1..=3 {
                for term in amitsur_terms(t, p).iter() {
                    let total: usize = term.factors.iter().map(|(j, c)| j * c.len()).sum();
                    assert_eq!(total, t);
                    let mut reps: Vec<_> = term.factors.iter().map(|(_, c)| c.clone()).collect();
                    let n = reps.len();
                    reps.sort();
                    reps.dedup();
                    assert_eq!(reps.len(), n, "cycles must be pairwise different");
                }
            }
        }
    }

    #[test]
    fn power_small() {
        assert_eq!(power_expand(1, 2).display(Alphabet::SingleSymbol).to_string(), "1*s1(A)^2-2*s2(A)");
        assert_eq!(
            power_expand(2, 2).display(Alphabet::SingleSymbol).to_string(),
            "-2*s1(A)*s3(A)+1*s2(A)^2+2*s4(A)"
        );
    }

    #[test]
    fn conjugate_partition() {
        assert_eq!(conjugate(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(partitions(4).len(), 5);
    }

    #[test]
    fn zero_one_counts() {
        let mut memo = HashMap::new();
        // e_1^2 = m_2 + 2 m_11
        assert_eq!(zero_one_count(&[1, 1], &[1, 1], &mut memo), BigInt::from(2));
        assert_eq!(zero_one_count(&[1, 1], &[2], &mut memo), BigInt::from(1));
        assert_eq!(zero_one_count(&[2], &[2], &mut memo), BigInt::from(0));
    }

    #[test]
    fn newton_small() {
        let q = Field::Rational;
        assert_eq!(newton_traces(1, q).unwrap().display(Alphabet::SingleSymbol).to_string(), "1*s1(A)");
        assert_eq!(
            newton_traces(2, q).unwrap().display(Alphabet::SingleSymbol).to_string(),
            "1/2*s1(A)^2-1/2*s1(A A)"
        );
        assert_eq!(
            newton_traces(3, q).unwrap().display(Alphabet::SingleSymbol).to_string(),
            "1/6*s1(A)^3-1/2*s1(A)*s1(A A)+1/3*s1(A A A)"
        );
        assert!(newton_traces(3, Field::prime(3).unwrap()).is_err());
        assert!(newton_traces(3, Field::prime(5).unwrap()).is_ok());
    }
}
