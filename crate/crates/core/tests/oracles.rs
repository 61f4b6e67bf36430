mod common;

use common::*;
use orthoinv::eval::{self, eval_poly, eval_word, random_signed_permutation, random_tuple, MatrixTuple};
use orthoinv::expansion::{amitsur_expand, newton_traces, power_expand, power_terms, CyclePoly};
use orthoinv::generators::{analyze, candidates, AnalysisConfig};
use orthoinv::matrix::{char_coeffs, faddeev_leverrier_integer, Matrix};
use orthoinv::quiver::sigma_tr_subst;
use orthoinv::word::enumerate_classes;
use orthoinv::{normalize, ArgExpr, Field, FieldElement, LinWord, SigmaExpr};
use orthoinv::field::Scalar;

const Q: Field = Field::Rational;

fn sigma_of(m: &Matrix<FieldElement>, t: usize) -> FieldElement {
    if t > m.n() {
        m.get(0, 0).field().zero()
    } else {
        sigma_by_minors(m, t)
    }
}

fn eval_cycle_poly(p: &CyclePoly, tuple: &MatrixTuple) -> FieldElement {
    let field = tuple.field();
    let mut acc = field.zero();
    for (mono, c) in p.terms() {
        let mut term = c.coerce(field).unwrap();
        for g in mono.gens() {
            term = term * sigma_of(&eval_word(&g.word, tuple).unwrap(), g.t);
        }
        acc = acc + term;
    }
    acc
}

fn trace(m: &Matrix<FieldElement>) -> FieldElement {
    m.trace()
}

#[test]
fn char_coeffs_agree_with_principal_minors() {
    for field in [Q, Field::prime(7).unwrap(), Field::prime(3).unwrap()] {
        for seed in 0..6 {
            let n = 2 + seed as usize % 4;
            let tuple = random_tuple(n, 1, field, seed, 10);
            let a = &tuple.matrices()[0];
            let cc = char_coeffs(a);
            for t in 1..=n {
                assert_eq!(cc[t - 1], sigma_by_minors(a, t), "field {field} n {n} t {t}");
            }
        }
    }
}

#[test]
fn integer_char_coeffs_match_rational() {
    for seed in 0..10 {
        let tuple = random_tuple(5, 1, Q, seed, 50);
        let a = &tuple.matrices()[0];
        let ints = Matrix::from_rows(5, a.entries().iter().map(|x| eval::as_integer(x).unwrap()).collect());
        let got: Vec<FieldElement> = faddeev_leverrier_integer(&ints).iter().map(|v| Q.from_bigint(v)).collect();
        assert_eq!(got, char_coeffs(a));
    }
}

#[test]
fn amitsur_t3_p2_is_sigma3_of_sum() {
    let f = amitsur_expand(3, 2);
    for seed in 0..20 {
        let tuple = random_tuple(4, 2, Q, seed, 10);
        let sum = &tuple.matrices()[0] + &tuple.matrices()[1];
        assert_eq!(eval_cycle_poly(&f, &tuple), sigma_by_minors(&sum, 3));
    }
}

#[test]
fn amitsur_three_summands() {
    for t in 1..=3 {
        let f = amitsur_expand(t, 3);
        for seed in 0..5 {
            let tuple = random_tuple(3, 3, Q, seed, 6);
            let m = tuple.matrices();
            let sum = &(&m[0] + &m[1]) + &m[2];
            assert_eq!(eval_cycle_poly(&f, &tuple), sigma_by_minors(&sum, t), "t={t}");
        }
    }
}

#[test]
fn e2_of_squares_in_four_variables() {
    let p = power_expand(2, 2);
    for seed in 0..10u64 {
        let vals: Vec<i64> = (0..4).map(|i| ((seed * 7 + i * 13) % 11) as i64 - 5).collect();
        let mut diag = vec![Q.zero(); 16];
        for i in 0..4 {
            diag[i * 5] = Q.from_i64(vals[i]);
        }
        let tuple = MatrixTuple::new(Q, vec![Matrix::from_rows(4, diag)]).unwrap();
        let mut e2 = 0i64;
        for i in 0..4 {
            for j in i + 1..4 {
                e2 += vals[i] * vals[i] * vals[j] * vals[j];
            }
        }
        assert_eq!(eval_poly(&p, &tuple).unwrap(), Q.from_i64(e2));
    }
}

#[test]
fn power_coefficients_are_integers_up_to_degree_8() {
    for t in 1..=8 {
        for l in 2..=8 / t {
            let terms = power_terms(t, l);
            assert!(!terms.is_empty());
            for (mono, c) in power_expand(t, l).terms() {
                assert!(c.as_rational().unwrap().is_integer(), "t={t} l={l}");
                assert_eq!(mono.degree(), t * l);
            }
        }
    }
}

#[test]
fn power_composes_with_normalization() {
    // σ_t(u^l) for a primitive word u, evaluated via the normal form.
    let u = word(&[(1, false), (2, true)]);
    for (t, l) in [(1, 2), (2, 2), (1, 3), (3, 2)] {
        let e = SigmaExpr::sigma(t, ArgExpr::Power(Box::new(ArgExpr::Word(u.clone())), l as u32));
        let p = normalize(&e, Q).unwrap();
        for seed in 0..4 {
            let tuple = random_tuple(4, 2, Q, seed, 5);
            let m = eval_word(&u, &tuple).unwrap().pow(l as u32);
            assert_eq!(eval_poly(&p, &tuple).unwrap(), sigma_of(&m, t), "t={t} l={l}");
        }
    }
}

#[test]
fn newton_identity_for_sigma3() {
    let p = newton_traces(3, Q).unwrap();
    for seed in 0..10 {
        let tuple = random_tuple(3, 1, Q, seed, 10);
        let a = &tuple.matrices()[0];
        let (p1, p2, p3) = (trace(a), trace(&a.pow(2)), trace(&a.pow(3)));
        let six = Q.from_i64(6);
        let closed = (p1.clone().pow(3) - Q.from_i64(3) * p1 * p2 + Q.from_i64(2) * p3) * six.inverse().unwrap();
        assert_eq!(eval_cycle_poly(&p, &tuple), sigma_by_minors(a, 3));
        assert_eq!(closed, sigma_by_minors(a, 3));
    }
    assert!(newton_traces(3, Field::prime(3).unwrap()).is_err());
    assert!(newton_traces(3, Field::prime(5).unwrap()).is_ok());
}

#[test]
fn signed_permutations_are_orthogonal() {
    for field in [Q, Field::prime(5).unwrap()] {
        for seed in 0..10 {
            let g = random_signed_permutation(4, field, seed);
            let gt = g.transpose();
            assert_eq!(&g * &gt, g.identity_like());
        }
    }
}

#[test]
fn random_tuple_fixture() {
    let t = random_tuple(3, 2, Q, 1, 10);
    assert_eq!(t.to_json(), FIXTURE_N3_D2_SEED1);
    assert_eq!(MatrixTuple::from_json(FIXTURE_N3_D2_SEED1).unwrap(), t);
}

const FIXTURE_N3_D2_SEED1: &str = r#"{"n":3,"d":2,"field":{"type":"Q"},"matrices":[[[-2,2,-6],[-7,8,0],[2,-8,-5]],[[-1,9,-3],[0,-2,-10],[-9,1,-5]]]}"#;

#[test]
fn word_evaluation_respects_transpose() {
    let w = word(&[(1, false), (2, true), (2, false), (1, true)]);
    for seed in 0..5 {
        let tuple = random_tuple(3, 2, Q, seed, 10);
        assert_eq!(eval_word(&w.transpose(), &tuple).unwrap(), eval_word(&w, &tuple).unwrap().transpose());
    }
}

#[test]
fn sigma11_substitution_matches_trace_formula() {
    let x1 = LinWord::word(word(&[(1, false)]), Q);
    let x2 = LinWord::word(word(&[(2, false)]), Q);
    let a = x1.add(&x2).unwrap();
    let p = sigma_tr_subst(1, 1, &a, &x1, &x1).unwrap();
    for seed in 0..10 {
        let tuple = random_tuple(3, 2, Q, seed, 10);
        let m = tuple.matrices();
        let (x, y, z) = (&m[0] + &m[1], m[0].clone(), m[0].clone());
        let (yt, zt) = (y.transpose(), z.transpose());
        let expected = trace(&x) * trace(&(&y * &zt)) - trace(&x) * trace(&(&y * &z)) + trace(&(&(&x * &y) * &z))
            - trace(&(&(&x * &y) * &zt))
            - trace(&(&(&x * &yt) * &z))
            + trace(&(&(&x * &yt) * &zt));
        assert_eq!(eval_poly(&p, &tuple).unwrap(), expected);
    }
}

#[test]
fn candidate_count_matches_class_recount() {
    let (n, d, max_deg) = (3, 2, 6);
    let mut expected = 0;
    for len in 1..=max_deg {
        let classes = brute_classes(2 * d as u8, len, |_| true);
        expected += class_count(&classes) * n.min(max_deg / len);
    }
    assert_eq!(candidates(n, d, max_deg).len(), expected);
}

#[test]
fn classes_are_canonical_and_primitive() {
    for c in enumerate_classes(2, 5) {
        let w = c.rep();
        assert!(w.is_primitive());
        assert_eq!(&w.canonical_word(), w);
        for k in 0..w.len() {
            assert!(codes(w) <= codes(&w.rotate(k)));
            assert!(codes(w) <= codes(&w.transpose().rotate(k)));
        }
    }
}

fn config(n: usize, d: u32, max_deg: usize, field: Field, samples: usize) -> AnalysisConfig {
    AnalysisConfig { n, d, max_deg, field, samples, seed: 0, exact: false }
}

#[test]
fn invariant_dimensions_match_weight_count() {
    for (d, max_deg, samples) in [(1, 9, 64), (2, 5, 256)] {
        let ledger = analyze(&config(3, d, max_deg, Q, samples)).unwrap();
        for k in 1..=max_deg {
            assert_eq!(ledger.row(k).unwrap().rank as u64, hilbert_o3(d as usize, k), "d={d} degree {k}");
        }
    }
}

#[test]
fn weight_count_small_values() {
    // One 3x3 matrix: tr X; tr X^2, tr XX^T, (tr X)^2.
    assert_eq!(hilbert_o3(1, 1), 1);
    assert_eq!(hilbert_o3(1, 2), 3);
    assert_eq!(hilbert_o3(0, 0), 1);
}

#[test]
fn two_by_two_ledger_stabilizes() {
    let ledger = analyze(&config(2, 1, 9, Q, 64)).unwrap();
    let last = ledger.max_indecomposable_degree_found.unwrap();
    assert!(last < 8, "new generators up to degree {last}");
    for k in last + 1..=9 {
        assert_eq!(ledger.new_generators(k), 0);
    }
}

#[test]
fn prime_field_integer_relation() {
    // Over F_p the integral identity σ_1(A)^2 - 2σ_2(A) = σ_1(A^2) reduces.
    let field = Field::prime(5).unwrap();
    let p = power_expand(1, 2).coerce(field).unwrap();
    for seed in 0..5 {
        let tuple = random_tuple(3, 1, field, seed, 10);
        let a = &tuple.matrices()[0];
        assert_eq!(eval_poly(&p, &tuple).unwrap(), trace(&a.pow(2)));
    }
}
