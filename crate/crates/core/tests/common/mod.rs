#![allow(dead_code)]

use maxplus::{ExtReal, MpMatrix, MpVector};
use rand::rngs::StdRng;
use rand::Rng;

/// Square matrix with integer entries in `lo..=hi`, each −∞ with probability `density_neg_inf`.
pub fn random_matrix(rng: &mut StdRng, n: usize, lo: i64, hi: i64, density_neg_inf: f64) -> MpMatrix {
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    if rng.gen_bool(density_neg_inf) {
                        ExtReal::NegInf
                    } else {
                        ExtReal::from_int(rng.gen_range(lo..=hi))
                    }
                })
                .collect()
        })
        .collect();
    MpMatrix::square(rows).unwrap()
}

pub fn random_vector(rng: &mut StdRng, n: usize, lo: i64, hi: i64, density_neg_inf: f64) -> MpVector {
    MpVector::new(
        (0..n)
            .map(|_| {
                if rng.gen_bool(density_neg_inf) {
                    ExtReal::NegInf
                } else {
                    ExtReal::from_int(rng.gen_range(lo..=hi))
                }
            })
            .collect(),
    )
}

/// Every elementary cycle by plain DFS from each start node over larger
/// nodes; returns `(weight, length)` pairs.
pub fn brute_force_cycles(a: &MpMatrix) -> Vec<(num_rational::BigRational, usize)> {
    fn dfs(
        a: &MpMatrix,
        start: usize,
        path: &mut Vec<usize>,
        weight: num_rational::BigRational,
        out: &mut Vec<(num_rational::BigRational, usize)>,
    ) {
        let last = *path.last().unwrap();
        for next in 0..a.n() {
            let Some(w) = a.get(last, next).as_rational() else { continue };
            if next == start {
                out.push((&weight + w, path.len()));
            } else if next > start && !path.contains(&next) {
                path.push(next);
                dfs(a, start, path, &weight + w, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..a.n() {
        dfs(a, s, &mut vec![s], num_rational::BigRational::from_integer(0.into()), &mut out);
    }
    out
}
