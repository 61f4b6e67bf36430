#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use orthoinv::matrix::Matrix;
use orthoinv::{ArgExpr, FieldElement, Letter, SigmaExpr, Word};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn word(letters: &[(u32, bool)]) -> Word {
    Word::new(letters.iter().map(|&(i, t)| Letter::new(i, t)).collect())
}

fn rand_word(rng: &mut ChaCha8Rng, d: u32, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    Word::new((0..len).map(|_| Letter::new(rng.gen_range(1..=d), rng.gen_bool(0.5))).collect())
}

fn rand_arg(rng: &mut ChaCha8Rng, d: u32, max_len: usize) -> ArgExpr {
    let terms = rng.gen_range(1..=2);
    let mut items: Vec<ArgExpr> = (0..terms)
        .map(|_| {
            let w = ArgExpr::Word(rand_word(rng, d, max_len));
            match rng.gen_range(0..4) {
                0 => ArgExpr::Scale(rat(rng.gen_range(-3..=3)), Box::new(w)),
                1 => ArgExpr::Power(Box::new(ArgExpr::Word(rand_word(rng, d, max_len.div_ceil(2)))), 2),
                _ => w,
            }
        })
        .collect();
    if items.len() == 1 {
        items.pop().unwrap()
    } else {
        ArgExpr::Sum(items)
    }
}

/// Random σ-expression of nesting depth at most `depth`, words of length at
/// most `max_len` over `x1..xd`.
pub fn rand_expr(rng: &mut ChaCha8Rng, depth: usize, d: u32, max_len: usize) -> SigmaExpr {
    if depth == 0 || rng.gen_bool(0.3) {
        return if rng.gen_bool(0.1) {
            SigmaExpr::int(rng.gen_range(-4..=4))
        } else {
            SigmaExpr::sigma(rng.gen_range(1..=3), rand_arg(rng, d, max_len))
        };
    }
    match rng.gen_range(0..3) {
        0 => SigmaExpr::Sum((0..rng.gen_range(2..=3)).map(|_| rand_expr(rng, depth - 1, d, max_len)).collect()),
        1 => SigmaExpr::Product((0..2).map(|_| rand_expr(rng, depth - 1, d, max_len)).collect()),
        _ => SigmaExpr::Power(Box::new(rand_expr(rng, depth - 1, d, max_len)), 2),
    }
}

fn det(m: &[Vec<FieldElement>], zero: &FieldElement) -> FieldElement {
    let k = m.len();
    if k == 0 {
        return zero.field().one();
    }
    let mut acc = zero.clone();
    for j in 0..k {
        let minor: Vec<Vec<FieldElement>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = m[0][j].clone() * det(&minor, zero);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// `σ_t(A)` as the sum of principal `t x t` minors.
pub fn sigma_by_minors(a: &Matrix<FieldElement>, t: usize) -> FieldElement {
    let n = a.n();
    let zero = a.get(0, 0).field().zero();
    let mut acc = zero.clone();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != t {
            continue;
        }
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let sub: Vec<Vec<FieldElement>> = idx.iter().map(|&i| idx.iter().map(|&j| a.get(i, j).clone()).collect()).collect();
        acc = acc + det(&sub, &zero);
    }
    acc
}

/// Letters as plain codes: `2 * (index - 1) + transposed`.
pub type Code = Vec<u8>;

pub fn codes(w: &Word) -> Code {
    w.letters().iter().map(|l| (2 * (l.index() - 1) + l.is_transposed() as u32) as u8).collect()
}

fn transpose_code(w: &[u8]) -> Code {
    w.iter().rev().map(|c| c ^ 1).collect()
}

fn primitive_code(w: &[u8]) -> bool {
    let n = w.len();
    (1..n).filter(|p| n.is_multiple_of(*p)).all(|p| (0..n).any(|i| w[i] != w[i % p]))
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// All words of length `len` over `alphabet` letters accepted by `keep`,
/// grouped into classes by union-find under one-step rotation and transpose.
/// Returns a map from each kept primitive word to its class id.
pub fn brute_classes(alphabet: u8, len: usize, keep: impl Fn(&[u8]) -> bool) -> HashMap<Code, usize> {
    let mut words: Vec<Code> = vec![vec![]];
    for _ in 0..len {
        words = words.iter().flat_map(|w| (0..alphabet).map(move |c| [w.as_slice(), &[c]].concat())).collect();
    }
    words.retain(|w| keep(w));
    let index: HashMap<Code, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    for (i, w) in words.iter().enumerate() {
        let mut rot = w[1..].to_vec();
        rot.push(w[0]);
        for other in [rot, transpose_code(w)] {
            let j = *index.get(&other).expect("kept words are closed under rotation and transpose");
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a] = b;
        }
    }
    let mut out = HashMap::new();
    for (i, w) in words.iter().enumerate() {
        if primitive_code(w) {
            out.insert(w.clone(), find(&mut parent, i));
        }
    }
    out
}

pub fn class_count(classes: &HashMap<Code, usize>) -> usize {
    let mut ids: Vec<usize> = classes.values().copied().collect();
    ids.sort_unstable();
    ids.dedup();
    ids.len()
}

/// Quiver letters as codes 0..6: x, x', y, y', z, z'.
pub fn quiver_head(c: u8) -> u8 {
    [1, 2, 1, 1, 2, 2][c as usize]
}

pub fn quiver_tail(c: u8) -> u8 {
    [1, 2, 2, 2, 1, 1][c as usize]
}

pub fn quiver_closed(w: &[u8]) -> bool {
    (0..w.len()).all(|i| quiver_tail(w[i]) == quiver_head(w[(i + 1) % w.len()]))
}

pub fn quiver_mdeg(w: &[u8]) -> [u32; 3] {
    let mut m = [0; 3];
    for &c in w {
        m[(c / 2) as usize] += 1;
    }
    m
}

/// Dimension of the degree-`k` invariants of `O(3)` acting by conjugation on
/// `d` copies of 3x3 matrices, from torus weights: multisets of weight 0 minus
/// multisets of weight 1.
pub fn hilbert_o3(d: usize, k: usize) -> u64 {
    let weights: Vec<i32> = (0..d).flat_map(|_| [-2, -1, -1, 0, 0, 0, 1, 1, 2]).collect();
    // table[(size, weight)] = number of multisets
    let mut table: BTreeMap<(usize, i32), u64> = BTreeMap::new();
    table.insert((0, 0), 1);
    for &w in &weights {
        let mut next = table.clone();
        for size in 1..=k {
            for weight in -2 * k as i32..=2 * k as i32 {
                let add = next.get(&(size - 1, weight - w)).copied().unwrap_or(0);
                if add > 0 {
                    *next.entry((size, weight)).or_insert(0) += add;
                }
            }
        }
        table = next;
    }
    let at = |w| table.get(&(k, w)).copied().unwrap_or(0);
    at(0) - at(1)
}

pub fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = std::time::Instant::now();
    let v = f();
    (v, start.elapsed().as_secs_f64())
}
