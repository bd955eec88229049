//! Independent oracles shared by the integration tests. Nothing here calls
//! into matrix products, stars or solvers.

#![allow(dead_code)]

use idempotent::{Matrix, ScalarRing, Semiring};
use rand::Rng;

/// `⊕` over every walk `i → j` with fewer than `n` edges of the `⊙`-product
/// of its weights, by depth-first enumeration.
pub fn brute_force_paths(h: &Matrix<ScalarRing>) -> Vec<Vec<f64>> {
    let ring = *h.ring();
    let n = h.rows();
    let mut best = vec![vec![ring.zero(); n]; n];
    fn walk(
        h: &Matrix<ScalarRing>,
        ring: ScalarRing,
        start: usize,
        at: usize,
        len: usize,
        weight: f64,
        best: &mut [Vec<f64>],
    ) {
        best[start][at] = ring.add(&best[start][at], &weight);
        if len + 1 >= h.rows() {
            return;
        }
        for next in 0..h.rows() {
            let w = *h.get(at, next);
            if !ring.is_zero(&w) {
                walk(h, ring, start, next, len + 1, ring.mul(&weight, &w), best);
            }
        }
    }
    for s in 0..n {
        walk(h, ring, s, s, 0, ring.one(), &mut best);
    }
    best
}

/// Random digraph weight matrix: each off-zero entry present with
/// probability `density`, weight from `weight`.
pub fn random_graph<R: Rng>(
    ring: ScalarRing,
    n: usize,
    density: f64,
    rng: &mut R,
    mut weight: impl FnMut(&mut R) -> f64,
) -> Matrix<ScalarRing> {
    let mut m = Matrix::zeros(ring, n, n).unwrap();
    for i in 0..n {
        for j in 0..n {
            if rng.random_bool(density) {
                let w = weight(rng);
                m.set(i, j, w).unwrap();
            }
        }
    }
    m
}

/// Entrywise `H ⊙ X ⊕ F` written out with explicit loops.
pub fn bellman_rhs(h: &Matrix<ScalarRing>, x: &Matrix<ScalarRing>, f: &Matrix<ScalarRing>) -> Vec<Vec<f64>> {
    let ring = *h.ring();
    let mut out = vec![vec![ring.zero(); f.cols()]; f.rows()];
    for i in 0..f.rows() {
        for j in 0..f.cols() {
            let mut acc = *f.get(i, j);
            for k in 0..h.cols() {
                acc = ring.add(&acc, &ring.mul(h.get(i, k), x.get(k, j)));
            }
            out[i][j] = acc;
        }
    }
    out
}
