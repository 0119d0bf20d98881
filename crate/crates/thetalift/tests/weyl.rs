use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thetalift::groups::{inversion_count, is_symplectic, WeylElement};
use thetalift::matrix::block_diag;
use thetalift::scalars::{rat, Rational};
use thetalift::suites::{conjugator_patterns, levi_rearrangement_patterns};
use thetalift::weyl::{
    block_map_inversions, coordinate_permutation, shortest_conjugator, weyl_cusp, weyl_theta02,
    weyl_theta03, BlockPattern,
};
use thetalift::Matrix;

fn symplectic(w: &WeylElement) -> bool {
    is_symplectic(&w.matrix::<Rational>(&()), w.size()).unwrap()
}

#[test]
fn interleave_examples() {
    assert_eq!(weyl_theta03(1).unwrap().entry(0, 0), 1);
    let w = weyl_theta03(2).unwrap();
    assert_eq!((w.entry(0, 0), w.entry(1, 2)), (1, 1));
    for l in 1..=6 {
        let w = weyl_theta03(l).unwrap();
        assert!(symplectic(&w));
        for i in 0..l {
            assert_eq!(w.entry(i, 2 * i), 1);
        }
    }
    assert!(weyl_theta03(0).is_err());
}

#[test]
fn interleave_permutes_the_torus() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for l in 1..=5 {
        let w = weyl_theta03(l).unwrap();
        let m = w.matrix::<Rational>(&());
        let half: Vec<Rational> = (0..l).map(|_| rat(rng.gen_range(2..50), rng.gen_range(1..9))).collect();
        let mut diag = half.clone();
        diag.extend(half.iter().rev().map(|x| rat(1, 1) / x));
        let d = Matrix::diag(&diag, &());
        let conj = &(&m * &d) * &m.inverse().unwrap();
        assert!(conj.is_diagonal());
        for i in 0..2 * l {
            assert_eq!(conj[(i, i)], diag[w.perm()[i]]);
        }
        for i in 0..l {
            assert_eq!(conj[(i, i)], diag[2 * i]);
        }
    }
}

#[test]
fn split_examples() {
    let w = weyl_theta02(3, 1).unwrap();
    assert_eq!(&w.perm()[..4], &[0, 2, 6, 3]);
    assert_eq!((w.entry(0, 0), w.entry(1, 2)), (1, 1));
    assert!(symplectic(&w));
    for r in [3, 5, 7] {
        for l in 0..=3 {
            let w = weyl_theta02(r, l).unwrap();
            let size = 2 * (l + r);
            assert!(symplectic(&w));
            for i in 1..=r.div_ceil(2) {
                assert_eq!(w.entry(i - 1, 2 * i - 2), 1);
            }
            for i in 0..=(r - 3) / 2 {
                assert_eq!(w.entry(i + (r + 3) / 2 - 1, size - r + 2 * i + 1), 1);
            }
            for i in r..r + 2 * l {
                assert_eq!(w.entry(i, i), 1);
            }
        }
    }
    assert!(weyl_theta02(4, 1).is_err());
}

/// Block layout of `w_1` and `w_2` at `r = 7`, one character per block:
/// block rows are `alpha x 6, beta x 3`, block columns `(alpha, beta, alpha) x 3`.
const R7_W1: [&str; 9] = [
    "I........",
    "...I.....",
    "......I..",
    ".........",
    ".........",
    ".........",
    ".I.......",
    "....I....",
    ".......I.",
];
const R7_W2: [&str; 9] = [
    ".........",
    ".........",
    ".........",
    "I........",
    "...I.....",
    "......I..",
    ".........",
    ".........",
    ".........",
];

fn expand(layout: &[&str; 9], alpha: usize, beta: usize) -> Matrix<Rational> {
    let rows: Vec<usize> = [alpha; 6].into_iter().chain([beta; 3]).collect();
    let cols: Vec<usize> = [alpha, beta, alpha].repeat(3);
    let size: usize = rows.iter().sum();
    let mut m = Matrix::zeros(size, size, &());
    let mut r0 = 0;
    for (bi, line) in layout.iter().enumerate() {
        let mut c0 = 0;
        for (bj, ch) in line.chars().enumerate() {
            if ch == 'I' {
                assert_eq!(rows[bi], cols[bj]);
                for t in 0..rows[bi] {
                    m[(r0 + t, c0 + t)] = rat(1, 1);
                }
            }
            c0 += cols[bj];
        }
        r0 += rows[bi];
    }
    m
}

#[test]
fn cusp_r7_layout() {
    for alpha in 1..=3 {
        for beta in 0..=3 {
            for n in 0..=2 {
                let k = 2 * alpha + beta;
                let kr1 = 3 * k;
                let w = weyl_cusp(alpha, beta, 7, n).unwrap();
                let m = w.matrix::<Rational>(&());
                assert_eq!(m.block(0, 0, kr1, kr1), expand(&R7_W1, alpha, beta), "alpha={alpha} beta={beta}");
                assert_eq!(m.block(0, kr1 + 2 * n, kr1, kr1), expand(&R7_W2, alpha, beta));
            }
        }
    }
}

#[test]
fn cusp_small_example() {
    let w = weyl_cusp(1, 1, 3, 1).unwrap();
    assert_eq!(w.size(), 8);
    assert!(symplectic(&w));
    assert_eq!(w.entry(0, 0), 1);
    assert_eq!(w.entry(1, 5), 1);
    assert_eq!(w.entry(2, 1), 1);
    assert_eq!(w.entry(3, 3), 1);
}

#[test]
fn cusp_placements_are_consistent() {
    for r in [3, 5, 7] {
        let r1 = (r - 1) / 2;
        for alpha in 1..=3 {
            for beta in 0..=3 {
                for n in 0..=3 {
                    let k = 2 * alpha + beta;
                    let kr1 = k * r1;
                    let w = weyl_cusp(alpha, beta, r, n).unwrap();
                    assert!(symplectic(&w));
                    let m = w.matrix::<Rational>(&());
                    let (w1, w2) = (m.block(0, 0, kr1, kr1), m.block(0, kr1 + 2 * n, kr1, kr1));
                    assert!(w2.block(0, 0, alpha * r1, kr1).is_zero());
                    assert!(w1.block(alpha * r1, 0, alpha * r1, kr1).is_zero());
                    assert_eq!(m.block(kr1, kr1, 2 * n, 2 * n), Matrix::identity(2 * n, &()));
                }
            }
        }
    }
    assert!(weyl_cusp(0, 1, 3, 1).is_err());
}

/// All bijections of source blocks onto target blocks with equal label and
/// size whose coordinate permutation respects the form.
fn admissible_maps(src: &BlockPattern, dst: &BlockPattern) -> Vec<Vec<usize>> {
    fn rec(j: usize, src: &BlockPattern, dst: &BlockPattern, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if j == src.blocks.len() {
            out.push(cur.clone());
            return;
        }
        for t in 0..dst.blocks.len() {
            if !used[t] && dst.blocks[t] == src.blocks[j] {
                used[t] = true;
                cur.push(t);
                rec(j + 1, src, dst, used, cur, out);
                cur.pop();
                used[t] = false;
            }
        }
    }
    let mut all = Vec::new();
    rec(0, src, dst, &mut vec![false; dst.blocks.len()], &mut Vec::new(), &mut all);
    let size = src.size();
    all.retain(|map| {
        let pi = coordinate_permutation(src, dst, map);
        (0..size).all(|c| pi[size - 1 - c] == size - 1 - pi[c])
    });
    all
}

fn fill(pattern: &BlockPattern, values: &HashMap<String, Matrix<Rational>>) -> Matrix<Rational> {
    let blocks: Vec<_> = pattern.blocks.iter().map(|(l, _)| values[l].clone()).collect();
    block_diag(&blocks, &())
}

#[test]
fn conjugators_conjugate_and_are_shortest() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (src, dst) in conjugator_patterns() {
        let w = shortest_conjugator(&src, &dst).unwrap();
        assert!(symplectic(&w));
        let maps = admissible_maps(&src, &dst);
        assert!(!maps.is_empty());
        let best = maps.iter().map(|m| block_map_inversions(&src, &dst, m)).min().unwrap();
        assert_eq!(inversion_count(w.perm()), best, "{src:?}");

        let m = w.matrix::<Rational>(&());
        let m_inv = w.inverse().matrix::<Rational>(&());
        for _ in 0..50 {
            let mut values = HashMap::new();
            for (label, size) in &src.blocks {
                values.entry(label.clone()).or_insert_with(|| {
                    Matrix::from_fn(*size, *size, &(), |_, _| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
                });
            }
            let conj = &(&m * &fill(&src, &values)) * &m_inv;
            assert_eq!(conj, fill(&dst, &values));
        }
    }
}

#[test]
fn conjugator_examples() {
    let p = BlockPattern::from_pairs(&[("x", 1), ("g", 2), ("x*", 1)]);
    assert_eq!(shortest_conjugator(&p, &p).unwrap(), WeylElement::identity(4));
    let (src, dst) = levi_rearrangement_patterns(3, 3, 1);
    let labels: Vec<&str> = dst.blocks.iter().map(|b| b.0.as_str()).collect();
    assert_eq!(labels, ["b", "b", "a", "h'", "h'*", "a^-1", "b^-1", "b^-1"]);
    assert!(shortest_conjugator(&src, &dst).is_ok());
    let bad = BlockPattern::from_pairs(&[("x", 1), ("y", 2), ("x*", 1)]);
    assert!(shortest_conjugator(&p, &bad).is_err());
}
