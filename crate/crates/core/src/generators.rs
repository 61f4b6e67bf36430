//! Counting indecomposable invariants degree by degree.
//!
//! The invariants of multidegree `m` are spanned by the candidates
//! `σ_t(class)` of that multidegree together with products of invariants of
//! multidegrees `e` and `m - e`. Every element is represented by its values
//! at a fixed set of random matrix tuples; a candidate is a new generator
//! when it raises the rank beyond that of the products.
//!
//! Characteristic zero is sampled in `F_P`, `P = 2^61 - 1`; characteristic
//! `p` in the largest `GF(p^k)` with a Zech table (or in `F_p` itself when
//! `p` is large). The exact mode evaluates at integer points over `Q` and
//! checks every rank with Bareiss elimination.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::{as_integer, Evaluator};
use crate::field::{Field, FieldElement, Scalar, Zp};
use crate::gf::Gf;
use crate::linalg::{bareiss_rank, EchelonBasis};
use crate::matrix::{berkowitz, char_coeffs, Matrix};
use crate::sigma::SigmaGen;
use crate::word::enumerate_classes;

/// Rows kept free above the observed rank before samples are doubled.
pub const SAMPLE_MARGIN: usize = 16;

/// All `σ_t(class)` with `t <= n` and `t * len(class) <= max_deg`.
pub fn candidates(n: usize, d: u32, max_deg: usize) -> Vec<SigmaGen> {
    let mut out: Vec<SigmaGen> = enumerate_classes(d, max_deg)
        .into_iter()
        .flat_map(|c| {
            let len = c.len();
            (1..=n).take_while(move |t| t * len <= max_deg).map(move |t| SigmaGen::new(t, c.clone()))
        })
        .collect();
    out.sort();
    out
}

fn mdeg(g: &SigmaGen, d: u32) -> Vec<u32> {
    g.class().multidegree(d as usize).into_iter().map(|k| k * g.t() as u32).collect()
}

/// Counts within one multidegree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRow {
    pub mdeg: Vec<u32>,
    pub candidate_count: usize,
    pub decomposable_rank: usize,
    pub rank: usize,
    pub new_generator_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRow {
    pub degree: usize,
    pub candidate_count: usize,
    pub decomposable_rank: usize,
    /// Dimension of the degree-`D` invariants found.
    pub rank: usize,
    pub new_generator_count: usize,
    /// Multidegrees with new generators.
    pub new_by_multidegree: Vec<(Vec<u32>, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeLedger {
    pub n: usize,
    pub d: u32,
    pub field: Field,
    pub seed: u64,
    pub exact: bool,
    /// Field the sample points were drawn from.
    pub sample_field: String,
    pub samples: usize,
    pub search_bound: usize,
    pub degrees: Vec<DegreeRow>,
    pub max_indecomposable_degree_found: Option<usize>,
    pub warnings: Vec<String>,
}

impl DegreeLedger {
    pub fn row(&self, degree: usize) -> Option<&DegreeRow> {
        self.degrees.iter().find(|r| r.degree == degree)
    }

    pub fn new_generators(&self, degree: usize) -> usize {
        self.row(degree).map_or(0, |r| r.new_generator_count)
    }
}

#[derive(Clone, Debug)]
pub struct AnalysisConfig {
    pub n: usize,
    pub d: u32,
    pub max_deg: usize,
    pub field: Field,
    pub samples: usize,
    pub seed: u64,
    /// Exact rational points and Bareiss-certified ranks; `Q` only.
    pub exact: bool,
}

/// Every multidegree in `N^d` with total degree `1..=max_deg`, ordered by
/// total degree then lexicographically.
fn multidegrees(d: u32, max_deg: usize) -> Vec<Vec<u32>> {
    fn rec(d: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(d, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d as usize, max_deg as u32, &mut Vec::new(), &mut out);
    out.retain(|m| m.iter().any(|&k| k > 0));
    out.sort_by(|a, b| a.iter().sum::<u32>().cmp(&b.iter().sum()).then_with(|| a.cmp(b)));
    out
}

/// Sub-multidegrees `e` with `0 < e < m` and `e <= m - e` lexicographically.
fn splits(m: &[u32]) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out = Vec::new();
    let mut e = vec![0u32; m.len()];
    loop {
        let mut i = 0;
        while i < m.len() && e[i] == m[i] {
            e[i] = 0;
            i += 1;
        }
        if i == m.len() {
            break;
        }
        e[i] += 1;
        if e.as_slice() == m {
            continue;
        }
        let f: Vec<u32> = m.iter().zip(&e).map(|(a, b)| a - b).collect();
        if e <= f {
            out.push((e.clone(), f));
        }
    }
    out
}

struct Engine<S> {
    points: Vec<Vec<Matrix<S>>>,
    coeffs: fn(&Matrix<S>) -> Vec<S>,
    /// Bareiss cross-check of each block; integer-valued points only.
    certify: Option<fn(&S) -> BigInt>,
}

struct Outcome {
    blocks: Vec<BlockRow>,
    max_rank: usize,
}

impl<S: Scalar> Engine<S> {
    fn run(&self, gens: &[SigmaGen], d: u32, max_deg: usize) -> Result<Outcome> {
        // values[g][i] = g at point i
        let values: Vec<Vec<S>> = {
            let per_point: Vec<Vec<S>> = self
                .points
                .par_iter()
                .map(|mats| {
                    let mut ev = Evaluator::with(mats.clone(), self.coeffs);
                    gens.iter().map(|g| ev.sigma(g.t(), g.class())).collect::<Result<Vec<S>>>()
                })
                .collect::<Result<_>>()?;
            (0..gens.len()).map(|g| per_point.iter().map(|v| v[g].clone()).collect()).collect()
        };
        let mut by_mdeg: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
        for (i, g) in gens.iter().enumerate() {
            by_mdeg.entry(mdeg(g, d)).or_default().push(i);
        }
        let width = self.points.len();
        // Independent spanning vectors of each finished block.
        let mut spans: HashMap<Vec<u32>, Vec<Vec<S>>> = HashMap::new();
        let mut blocks = Vec::new();
        let mut max_rank = 0;
        for m in multidegrees(d, max_deg) {
            let mut basis = EchelonBasis::new(width);
            let mut kept: Vec<Vec<S>> = Vec::new();
            for (e, f) in splits(&m) {
                let (ue, uf) = (&spans[&e], &spans[&f]);
                for (i, u) in ue.iter().enumerate() {
                    let start = if e == f { i } else { 0 };
                    for v in &uf[start..] {
                        let prod: Vec<S> = u.iter().zip(v).map(|(a, b)| a.clone() * b.clone()).collect();
                        if basis.insert(prod.clone()) {
                            kept.push(prod);
                        }
                    }
                }
            }
            let decomposable_rank = basis.rank();
            let cands = by_mdeg.get(&m).map_or(&[][..], Vec::as_slice);
            for &g in cands {
                if basis.insert(values[g].clone()) {
                    kept.push(values[g].clone());
                }
            }
            let rank = basis.rank();
            if let Some(to_int) = self.certify {
                let ints = |rows: &[Vec<S>]| rows.iter().map(|r| r.iter().map(to_int).collect()).collect();
                let cand_rows: Vec<Vec<S>> = cands.iter().map(|&g| values[g].clone()).collect();
                let dec_rank = bareiss_rank(ints(&kept[..decomposable_rank]));
                let all: Vec<Vec<S>> = kept[..decomposable_rank].iter().cloned().chain(cand_rows).collect();
                if dec_rank != decomposable_rank || bareiss_rank(ints(&all)) != rank {
                    return Err(Error::Unsupported(format!("Bareiss rank disagrees at multidegree {m:?}")));
                }
            }
            max_rank = max_rank.max(rank);
            blocks.push(BlockRow {
                mdeg: m.clone(),
                candidate_count: cands.len(),
                decomposable_rank,
                rank,
                new_generator_count: rank - decomposable_rank,
            });
            if (m.iter().sum::<u32>() as usize) < max_deg {
                spans.insert(m, kept);
            }
        }
        Ok(Outcome { blocks, max_rank })
    }
}

fn random_points<S: Scalar>(n: usize, d: u32, samples: usize, seed: u64, mut draw: impl FnMut(&mut ChaCha8Rng) -> S) -> Vec<Vec<Matrix<S>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| (0..d).map(|_| Matrix::from_rows(n, (0..n * n).map(|_| draw(&mut rng)).collect())).collect())
        .collect()
}

/// Integer sample range for exact mode.
const EXACT_BOUND: i64 = 10;

fn run_once(cfg: &AnalysisConfig, samples: usize, gens: &[SigmaGen]) -> Result<(Outcome, String)> {
    let (n, d, seed) = (cfg.n, cfg.d, cfg.seed);
    match cfg.field {
        Field::Rational if cfg.exact => {
            let q = Field::Rational;
            let engine = Engine {
                points: random_points(n, d, samples, seed, |r| q.from_i64(r.gen_range(-EXACT_BOUND..=EXACT_BOUND))),
                coeffs: char_coeffs,
                certify: Some(|v: &FieldElement| as_integer(v).expect("integer points give integer values")),
            };
            Ok((engine.run(gens, d, cfg.max_deg)?, "Q".into()))
        }
        Field::Rational => {
            let p = Zp::MERSENNE_61;
            let engine = Engine {
                points: random_points(n, d, samples, seed, |r| Zp::new(r.gen_range(0..p), p)),
                coeffs: berkowitz,
                certify: None,
            };
            Ok((engine.run(gens, d, cfg.max_deg)?, format!("F_{p}")))
        }
        Field::Prime { p } => match Gf::for_prime(p) {
            Some(gf) => {
                let engine = Engine { points: random_points(n, d, samples, seed, |r| gf.random(r)), coeffs: berkowitz, certify: None };
                Ok((engine.run(gens, d, cfg.max_deg)?, format!("GF({p}^{})", gf.degree())))
            }
            None => {
                let engine =
                    Engine { points: random_points(n, d, samples, seed, |r| Zp::new(r.gen_range(0..p), p)), coeffs: berkowitz, certify: None };
                Ok((engine.run(gens, d, cfg.max_deg)?, format!("F_{p}")))
            }
        },
    }
}

/// Builds the ledger, doubling the number of sample points until every
/// block's rank stays [`SAMPLE_MARGIN`] below it.
pub fn analyze(cfg: &AnalysisConfig) -> Result<DegreeLedger> {
    cfg.field.validate()?;
    if cfg.n == 0 || cfg.d == 0 || cfg.max_deg == 0 || cfg.samples == 0 {
        return Err(Error::Unsupported("n, d, max_deg and samples must be positive".into()));
    }
    if cfg.exact && cfg.field != Field::Rational {
        return Err(Error::Unsupported("exact mode is only available over Q".into()));
    }
    let gens = candidates(cfg.n, cfg.d, cfg.max_deg);
    let mut samples = cfg.samples;
    let mut warnings = Vec::new();
    let (outcome, sample_field) = loop {
        let (out, sf) = run_once(cfg, samples, &gens)?;
        if out.max_rank + SAMPLE_MARGIN <= samples {
            break (out, sf);
        }
        warnings.push(format!(
            "rank {} within {SAMPLE_MARGIN} of {samples} samples; rerun with {}",
            out.max_rank,
            samples * 2
        ));
        samples *= 2;
    };

    let mut rows: BTreeMap<usize, DegreeRow> = BTreeMap::new();
    for b in &outcome.blocks {
        let deg = b.mdeg.iter().sum::<u32>() as usize;
        let row = rows.entry(deg).or_insert_with(|| DegreeRow {
            degree: deg,
            candidate_count: 0,
            decomposable_rank: 0,
            rank: 0,
            new_generator_count: 0,
            new_by_multidegree: Vec::new(),
        });
        row.candidate_count += b.candidate_count;
        row.decomposable_rank += b.decomposable_rank;
        row.rank += b.rank;
        row.new_generator_count += b.new_generator_count;
        if b.new_generator_count > 0 {
            row.new_by_multidegree.push((b.mdeg.clone(), b.new_generator_count));
        }
    }
    let degrees: Vec<DegreeRow> = rows.into_values().collect();
    let max_found = degrees.iter().filter(|r| r.new_generator_count > 0).map(|r| r.degree).max();
    Ok(DegreeLedger {
        n: cfg.n,
        d: cfg.d,
        field: cfg.field,
        seed: cfg.seed,
        exact: cfg.exact,
        sample_field,
        samples,
        search_bound: cfg.max_deg,
        degrees,
        max_indecomposable_degree_found: max_found,
        warnings,
    })
}

/// Window for the largest indecomposable degree of `3 x 3` invariants in
/// characteristic 3, `[2d + 4, 2d + 7]`.
pub fn char3_window(d: u32) -> (usize, usize) {
    (2 * d as usize + 4, 2 * d as usize + 7)
}

/// Expected range for the largest degree found, given the search bound.
/// `None` when no claim applies.
pub fn expected_max_degree(ledger: &DegreeLedger) -> Option<(usize, usize)> {
    if ledger.n != 3 {
        return None;
    }
    let cap = |lo: usize, hi: usize| (lo.min(ledger.search_bound), hi.min(ledger.search_bound));
    match ledger.field {
        Field::Prime { p: 3 } => {
            let (lo, hi) = char3_window(ledger.d);
            Some(cap(lo, hi))
        }
        Field::Rational => Some(cap(6, 6)),
        Field::Prime { .. } => Some(cap(6, 6)),
    }
}

/// Human-readable ledger.
pub fn render(ledger: &DegreeLedger) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "n={} d={} field={} seed={} samples={} points in {}{}",
        ledger.n,
        ledger.d,
        ledger.field,
        ledger.seed,
        ledger.samples,
        ledger.sample_field,
        if ledger.exact { " (exact)" } else { "" }
    );
    let _ = writeln!(s, "{:>6} {:>10} {:>10} {:>8} {:>5}  by multidegree", "degree", "candidates", "decomp", "dim", "new");
    for r in &ledger.degrees {
        let by: Vec<String> = r.new_by_multidegree.iter().map(|(m, k)| format!("{m:?}:{k}")).collect();
        let _ = writeln!(
            s,
            "{:>6} {:>10} {:>10} {:>8} {:>5}  {}",
            r.degree,
            r.candidate_count,
            r.decomposable_rank,
            r.rank,
            r.new_generator_count,
            by.join(" ")
        );
    }
    match ledger.max_indecomposable_degree_found {
        Some(m) => {
            let _ = writeln!(s, "max indecomposable degree found: {m} (search bound {})", ledger.search_bound);
        }
        None => {
            let _ = writeln!(s, "no indecomposables found (search bound {})", ledger.search_bound);
        }
    }
    if let Some((lo, hi)) = expected_max_degree(ledger) {
        let ok = ledger.max_indecomposable_degree_found.is_some_and(|m| (lo..=hi).contains(&m));
        let _ = writeln!(s, "expected range [{lo}, {hi}]: {}", if ok { "consistent" } else { "NOT consistent" });
    }
    for w in &ledger.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    s
}

/// Runs [`analyze`] and renders it as text and JSON.
pub fn dmax_report(cfg: &AnalysisConfig) -> Result<(DegreeLedger, String, String)> {
    let ledger = analyze(cfg)?;
    let text = render(&ledger);
    let json = serde_json::to_string_pretty(&ledger)?;
    Ok((ledger, text, json))
}
