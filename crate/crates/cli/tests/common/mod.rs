#![allow(dead_code)]

use maxplus::{ExtReal, MpMatrix};
use rand::rngs::StdRng;
use rand::Rng;

pub const EXAMPLE: &str = include_str!("../../data/example.txt");

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs `supereig <args>` in-process with `stdin` as standard input.
pub fn run(args: &[&str], stdin: &str) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("supereig").chain(args.iter().copied());
    let code = maxplus_cli::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

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

pub fn random_vector(rng: &mut StdRng, n: usize, lo: i64, hi: i64, density_neg_inf: f64) -> maxplus::MpVector {
    maxplus::MpVector::new(
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
