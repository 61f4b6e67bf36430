//! The mixed quiver with two vertices and arrows `x`, `y`, `z`, and the
//! partial linearizations `σ_{t,r}` read off its closed paths.
//!
//! Letters are the indexed letters `x1 = x`, `x2 = y`, `x3 = z`, so the
//! quiver order `x < x' < y < y' < z < z'` is the ordinary letter order.
//! `x` is a loop at vertex 1 and `x'` a loop at vertex 2; `y, y'` go from
//! vertex 2 to vertex 1, `z, z'` from vertex 1 to vertex 2. A word
//! `a_1 ... a_k` is a path when `tail(a_i) = head(a_{i+1})`.

use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::field::Field;
use crate::linword::LinWord;
use crate::memo::Memo;
use crate::poly::Monomial;
use crate::sigma::{self, SigmaGen, SigmaPoly};
use crate::syntax::Alphabet;
use crate::word::{Letter, NecklaceClass, Word};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Arrow {
    X,
    Y,
    Z,
}

impl Arrow {
    pub fn letter(self, transposed: bool) -> Letter {
        Letter::new(self as u32 + 1, transposed)
    }

    pub fn of(l: Letter) -> Option<Arrow> {
        match l.index() {
            1 => Some(Arrow::X),
            2 => Some(Arrow::Y),
            3 => Some(Arrow::Z),
            _ => None,
        }
    }
}

/// Head vertex of a quiver letter.
pub fn head(l: Letter) -> u8 {
    match (Arrow::of(l).expect("quiver letter"), l.is_transposed()) {
        (Arrow::X, false) | (Arrow::Y, _) => 1,
        (Arrow::X, true) | (Arrow::Z, _) => 2,
    }
}

/// Tail vertex of a quiver letter.
pub fn tail(l: Letter) -> u8 {
    match (Arrow::of(l).expect("quiver letter"), l.is_transposed()) {
        (Arrow::X, false) | (Arrow::Z, _) => 1,
        (Arrow::X, true) | (Arrow::Y, _) => 2,
    }
}

pub fn is_closed_path(w: &Word) -> bool {
    let ls = w.letters();
    if ls.iter().any(|&l| Arrow::of(l).is_none()) {
        return false;
    }
    (0..ls.len()).all(|i| tail(ls[i]) == head(ls[(i + 1) % ls.len()]))
}

/// A `~`-class of primitive closed paths.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QuiverClass {
    class: NecklaceClass,
    mdeg: [u32; 3],
    /// Untransposed `y` plus untransposed `z` in the canonical rep.
    parity_count: u32,
}

impl QuiverClass {
    pub fn class(&self) -> &NecklaceClass {
        &self.class
    }

    /// Degrees in `x`, `y`, `z`.
    pub fn mdeg(&self) -> [u32; 3] {
        self.mdeg
    }

    /// `deg_y + deg_z` counted on untransposed letters of the canonical rep.
    /// Its parity is the same on every closed-path representative.
    pub fn parity_count(&self) -> u32 {
        self.parity_count
    }
}

impl fmt::Display for QuiverClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.class.rep().display(Alphabet::Quiver))
    }
}

fn untransposed_yz(w: &Word) -> u32 {
    w.letters()
        .iter()
        .filter(|l| !l.is_transposed() && matches!(Arrow::of(**l), Some(Arrow::Y | Arrow::Z)))
        .count() as u32
}

fn mdeg_of(w: &Word) -> [u32; 3] {
    let mut m = [0; 3];
    for &l in w.letters() {
        m[Arrow::of(l).unwrap() as usize] += 1;
    }
    m
}

/// All classes of primitive closed paths with multidegree bounded by `bound`
/// componentwise (including those with `deg_y = deg_z = 0`).
///
/// Panics if the parity of untransposed `y, z` differs between two
/// representatives of one class; that would make the sign ill-defined.
pub fn enumerate_closed_classes(bound: [u32; 3]) -> Vec<QuiverClass> {
    fn dfs(
        start: u8,
        at: u8,
        path: &mut Vec<Letter>,
        used: &mut [u32; 3],
        bound: [u32; 3],
        out: &mut std::collections::BTreeMap<NecklaceClass, u32>,
    ) {
        if !path.is_empty() && at == start {
            let w = Word::new(path.clone());
            if w.is_primitive() {
                let parity = untransposed_yz(&w) % 2;
                let class = w.canonical();
                let prev = *out.entry(class).or_insert(parity);
                assert_eq!(prev, parity, "sign parity is not a class invariant for {w}");
            }
        }
        for arrow in [Arrow::X, Arrow::Y, Arrow::Z] {
            if used[arrow as usize] == bound[arrow as usize] {
                continue;
            }
            for tr in [false, true] {
                let l = arrow.letter(tr);
                if head(l) != at {
                    continue;
                }
                used[arrow as usize] += 1;
                path.push(l);
                dfs(start, tail(l), path, used, bound, out);
                path.pop();
                used[arrow as usize] -= 1;
            }
        }
    }

    let mut seen = std::collections::BTreeMap::new();
    for start in [1, 2] {
        dfs(start, start, &mut Vec::new(), &mut [0; 3], bound, &mut seen);
    }
    let mut out: Vec<QuiverClass> = seen
        .into_keys()
        .map(|class| {
            let mdeg = mdeg_of(class.rep());
            assert_eq!(mdeg[1], mdeg[2], "closed path with unequal y and z degrees");
            let parity_count = untransposed_yz(class.rep());
            QuiverClass { class, mdeg, parity_count }
        })
        .collect();
    out.sort_by(|a, b| a.class.rep().cmp(b.class.rep()));
    out
}

static SIGMA_TR: Memo<(usize, usize), SigmaPoly> = Memo::new();

/// `σ_{t,r}` over `Q` as a polynomial in `σ_j(x, y, z)` of closed-path
/// classes: the sum over `Σ j_i mdeg(α_i) = (t, r, r)` of
/// `(-1)^ξ Π σ_{j_i}(α_i)` with `ξ = t + Σ j_i (deg_y α_i + deg_z α_i + 1)`.
pub fn sigma_tr(t: usize, r: usize) -> Arc<SigmaPoly> {
    SIGMA_TR.get_or_insert_with((t, r), || sigma_tr_uncached(t, r))
}

fn sigma_tr_uncached(t: usize, r: usize) -> SigmaPoly {
    let field = Field::Rational;
    let target = [t as u32, r as u32, r as u32];
    let classes = enumerate_closed_classes(target);
    let mut out = SigmaPoly::zero(field);

    fn go(
        classes: &[QuiverClass],
        i: usize,
        rest: [u32; 3],
        xi: u32,
        gens: &mut Vec<SigmaGen>,
        field: Field,
        out: &mut SigmaPoly,
    ) {
        if rest == [0; 3] {
            let sign = if xi.is_multiple_of(2) { 1 } else { -1 };
            out.add_term(Monomial::from_gens(gens.clone()), field.from_i64(sign));
            return;
        }
        if i == classes.len() {
            return;
        }
        go(classes, i + 1, rest, xi, gens, field, out);
        let c = &classes[i];
        let m = c.mdeg;
        let mut rem = rest;
        let mut j = 0;
        while (0..3).all(|k| rem[k] >= m[k]) {
            for k in 0..3 {
                rem[k] -= m[k];
            }
            j += 1;
            gens.push(SigmaGen::new(j, c.class.clone()));
            go(classes, i + 1, rem, xi + j as u32 * (c.parity_count + 1), gens, field, out);
            gens.pop();
        }
    }

    go(&classes, 0, target, t as u32, &mut Vec::new(), field, &mut out);
    out
}

/// `σ_{t,r}(a, b, c)`: substitutes `x -> a`, `y -> b`, `z -> c` (and their
/// transposes) and normalizes over the field of the arguments.
pub fn sigma_tr_subst(t: usize, r: usize, a: &LinWord, b: &LinWord, c: &LinWord) -> Result<SigmaPoly> {
    let field = a.field();
    let base = sigma_tr(t, r).coerce(field)?;
    sigma::substitute(&base, &[a.clone(), b.clone(), c.clone()])
}
