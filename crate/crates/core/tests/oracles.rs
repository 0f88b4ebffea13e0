mod common;

use common::{brute_weakly_round, max_line_minor, subsets, Columns};
use dense_matroids::analysis::{line_minor, weakly_round};
use dense_matroids::geometry::{principal_extension, truncate};
use dense_matroids::harness::corpus;
use dense_matroids::{ElemSet, VerdictKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_columns(rng: &mut ChaCha8Rng, max_n: usize) -> Columns {
    let p = [2, 3, 5][rng.gen_range(0..3)];
    let rows = rng.gen_range(2..=4);
    let n = rng.gen_range(3..=max_n);
    Columns::random(p, rows, n, rng)
}

#[test]
fn span_and_elimination_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..40 {
        let c = random_columns(&mut rng, 8);
        for x in subsets(ElemSet::range(c.cols.len())) {
            assert_eq!(c.span_rank(x), c.gauss_rank(x), "{c:?} {x}");
        }
    }
}

#[test]
fn rank_matches_span_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..60 {
        let c = random_columns(&mut rng, 10);
        let m = c.matroid();
        for x in subsets(m.ground()) {
            assert_eq!(m.rank_of(&x).unwrap(), c.span_rank(x), "{c:?} {x}");
        }
    }
}

#[test]
fn derived_ranks_match_formulas() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let c = random_columns(&mut rng, 8);
        let m = c.matroid();
        let n = c.cols.len();
        let r = c.gauss_rank(m.ground());
        let seed: ElemSet = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
        let rs = c.gauss_rank(seed);
        let flat: ElemSet = (0..n).filter(|&x| c.gauss_rank(seed.with(x)) == rs).collect();

        let (ext, e) = principal_extension(&m, &flat).unwrap();
        assert_eq!(e, n);
        for x in subsets(m.ground()) {
            let rx = c.gauss_rank(x);
            let grows = c.gauss_rank(x | flat) > rx;
            assert_eq!(ext.rank_of(&x.with(e)).unwrap(), rx + grows as usize);
        }

        let t = truncate(&m, 1).unwrap();
        let contracted = m.contract(&ElemSet::singleton(0)).unwrap();
        let r0 = c.gauss_rank(ElemSet::singleton(0));
        for x in subsets(m.ground()) {
            let rx = c.gauss_rank(x);
            assert_eq!(t.rank_of(&x).unwrap(), rx.min(r.saturating_sub(1)));
            if !x.contains(0) {
                assert_eq!(contracted.rank_of(&x).unwrap(), c.gauss_rank(x.with(0)) - r0);
            }
        }
    }
}

#[test]
fn line_minor_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..40 {
        let c = random_columns(&mut rng, 12);
        let m = c.matroid();
        let best = max_line_minor(c.cols.len(), |x| c.gauss_rank(x));
        for points in 2..=8 {
            let found = line_minor(&m, points).unwrap().kind == VerdictKind::MinorFound;
            assert_eq!(found, best >= points, "{c:?}: U_(2,{points}), brute force max {best}");
        }
    }
}

#[test]
fn weak_roundness_matches_brute_force_on_corpus() {
    let mut checked = 0;
    for (label, doc) in corpus(5, 80).unwrap() {
        let m = doc.replay().unwrap().matroid;
        if m.len() > 10 {
            continue;
        }
        let fast = weakly_round(&m).unwrap().holds();
        assert_eq!(fast, brute_weakly_round(&m), "{label}");
        checked += 1;
    }
    assert!(checked >= 20, "only {checked} small instances");
}
