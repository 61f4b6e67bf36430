//! Letters, words of the free monoid on `x_1..x_d, x_1^T..x_d^T`, the
//! transpose involution and canonical forms of cyclic/transpose classes.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::syntax::{self, Alphabet};

/// A letter `x_k` or `x_k^T`, stored as `2(k-1) + transposed` so that the
/// derived order is `x_1 < x_1^T < x_2 < x_2^T < ...`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(u32);

impl Letter {
    /// Panics if `index == 0`.
    pub fn new(index: u32, transposed: bool) -> Self {
        assert!(index >= 1, "letter index starts at 1");
        Letter(2 * (index - 1) + transposed as u32)
    }

    pub fn x(index: u32) -> Self {
        Letter::new(index, false)
    }

    pub fn index(self) -> u32 {
        self.0 / 2 + 1
    }

    pub fn is_transposed(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn transpose(self) -> Self {
        Letter(self.0 ^ 1)
    }

    pub(crate) fn from_code(code: u32) -> Self {
        Letter(code)
    }
}

/// A nonempty word. Ordered by length first, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word(Vec<Letter>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    /// Panics on an empty letter sequence: the monoid has no unity.
    pub fn new(letters: Vec<Letter>) -> Self {
        assert!(!letters.is_empty(), "words are nonempty");
        Word(letters)
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(a_1 ... a_p)^T = a_p^T ... a_1^T`.
    pub fn transpose(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.transpose()).collect())
    }

    /// Cyclic shift moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        v.rotate_left(k % self.0.len());
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, k: usize) -> Word {
        assert!(k >= 1);
        Word(self.0.repeat(k))
    }

    /// Largest letter index occurring in the word.
    pub fn max_index(&self) -> u32 {
        self.0.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    /// Minimal `u`, `k` with `self = u^k`.
    pub fn primitive_root(&self) -> (Word, usize) {
        let n = self.0.len();
        for period in 1..=n {
            if n.is_multiple_of(period) && (period..n).all(|i| self.0[i] == self.0[i - period]) {
                return (Word(self.0[..period].to_vec()), n / period);
            }
        }
        unreachable!()
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive_root().1 == 1
    }

    /// Least word among all rotations of `self` and of `self^T`.
    pub fn canonical_word(&self) -> Word {
        let n = self.0.len();
        let t = self.transpose();
        let mut best = least_rotation(&self.0);
        let tb = least_rotation(&t.0);
        if tb < best {
            best = tb;
        }
        debug_assert_eq!(best.len(), n);
        Word(best)
    }

    /// The `~`-class of the word. Imprimitive words are accepted and
    /// canonicalized as they are; use [`NecklaceClass::primitive`] when a
    /// primitive class is required.
    pub fn canonical(&self) -> NecklaceClass {
        NecklaceClass { rep: self.canonical_word() }
    }

    pub fn display(&self, alphabet: Alphabet) -> WordDisplay<'_> {
        WordDisplay { word: self, alphabet }
    }
}

fn least_rotation(v: &[Letter]) -> Vec<Letter> {
    let n = v.len();
    let mut best: Option<Vec<Letter>> = None;
    for k in 0..n {
        let cand: Vec<Letter> = v[k..].iter().chain(v[..k].iter()).copied().collect();
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.unwrap()
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            syntax::write_letter(f, *l, self.alphabet)?;
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(Alphabet::Indexed).fmt(f)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        syntax::parse_word(s).map(|(w, _)| w)
    }
}

/// Canonical representative of a `~`-class: the least rotation of `w` or
/// `w^T` under the letter order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct NecklaceClass {
    rep: Word,
}

impl NecklaceClass {
    /// Class of a primitive word; `None` for imprimitive input.
    pub fn primitive(w: &Word) -> Option<Self> {
        if w.is_primitive() {
            Some(w.canonical())
        } else {
            None
        }
    }

    pub fn rep(&self) -> &Word {
        &self.rep
    }

    pub fn len(&self) -> usize {
        self.rep.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Per-index letter counts (`x_k` and `x_k^T` together), length `d`.
    pub fn multidegree(&self, d: usize) -> Vec<u32> {
        let mut m = vec![0u32; d];
        for l in self.rep.letters() {
            m[(l.index() - 1) as usize] += 1;
        }
        m
    }
}

/// Lyndon words over `k` symbols `0..k` of length at most `n`, in
/// lexicographic order (Fredricksen-Kessler-Maiorana / Duval generation).
pub fn lyndon_words(k: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if k == 0 || n == 0 {
        return out;
    }
    let mut w: Vec<u32> = vec![0];
    while !w.is_empty() {
        out.push(w.clone());
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&(k - 1)) {
            w.pop();
        }
        if let Some(last) = w.last_mut() {
            *last += 1;
        }
    }
    out
}

/// All primitive `~`-classes over `x_1..x_d` (with transposes) of length
/// `<= max_length`, sorted by `(length, representative)`.
pub fn enumerate_classes(d: u32, max_length: usize) -> Vec<NecklaceClass> {
    let mut set = BTreeSet::new();
    for lw in lyndon_words(2 * d, max_length) {
        let w = Word(lw.into_iter().map(Letter::from_code).collect());
        // A Lyndon word is its own least rotation; keep it iff the
        // transposed necklace is not smaller.
        let c = w.canonical();
        if c.rep == w {
            set.insert(c);
        }
    }
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn letter_order() {
        let mut v = vec![Letter::new(2, false), Letter::new(1, true), Letter::new(2, true), Letter::new(1, false)];
        v.sort();
        assert_eq!(v, vec![Letter::new(1, false), Letter::new(1, true), Letter::new(2, false), Letter::new(2, true)]);
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(w("x1 x2").transpose(), w("x2' x1'"));
        assert_eq!(w("x1").transpose(), w("x1'"));
        assert_eq!(w("x1 x2' x3").transpose().transpose(), w("x1 x2' x3"));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(w("x2 x1").canonical().rep(), &w("x1 x2"));
        assert_eq!(w("x1 x2'").canonical(), w("x2 x1'").canonical());
        assert_eq!(w("x1'").canonical().rep(), &w("x1"));
        // yz' ~ y'z over the three-letter alphabet
        assert_eq!(w("x2 x3'").canonical(), w("x2' x3").canonical());
    }

    #[test]
    fn primitivity() {
        assert!(w("x1 x2").is_primitive());
        assert!(!w("x1 x1").is_primitive());
        assert_eq!(w("x1 x2 x1 x2").primitive_root(), (w("x1 x2"), 2));
        assert_eq!(w("x1 x1 x1").primitive_root(), (w("x1"), 3));
        assert_eq!(w("x1 x2").primitive_root(), (w("x1 x2"), 1));
        assert_eq!(w("x1 x2' x1 x2'").primitive_root(), (w("x1 x2'"), 2));
        assert!(NecklaceClass::primitive(&w("x1 x1")).is_none());
    }

    #[test]
    fn small_enumerations() {
        let c1: Vec<_> = enumerate_classes(1, 1).into_iter().map(|c| c.rep().clone()).collect();
        assert_eq!(c1, vec![w("x1")]);
        let c2: Vec<_> = enumerate_classes(1, 2).into_iter().map(|c| c.rep().clone()).collect();
        assert_eq!(c2, vec![w("x1"), w("x1 x1'")]);
    }

    #[test]
    fn lyndon_counts() {
        // Number of binary Lyndon words of length 1..=6: 2,1,2,3,6,9.
        let ws = lyndon_words(2, 6);
        let mut counts = [0usize; 7];
        for l in &ws {
            counts[l.len()] += 1;
        }
        assert_eq!(&counts[1..], &[2, 1, 2, 3, 6, 9]);
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec(0u32..6, 1..8).prop_map(|v| Word(v.into_iter().map(Letter::from_code).collect()))
    }

    proptest! {
        #[test]
        fn canonical_is_class_invariant(word in arb_word(), k in 0usize..8) {
            let c = word.canonical();
            prop_assert_eq!(&word.rotate(k).canonical(), &c);
            prop_assert_eq!(&word.transpose().canonical(), &c);
            prop_assert_eq!(&c.rep().canonical(), &c);
        }

        #[test]
        fn primitive_root_reconstructs(word in arb_word()) {
            let (u, k) = word.primitive_root();
            prop_assert_eq!(u.pow(k), word.clone());
            prop_assert_eq!(word.is_primitive(), k == 1);
            prop_assert!(u.is_primitive());
        }

        #[test]
        fn text_round_trip(word in arb_word()) {
            prop_assert_eq!(word.to_string().parse::<Word>().unwrap(), word);
        }
    }
}
