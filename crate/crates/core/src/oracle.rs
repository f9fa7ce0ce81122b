//! Independent reference constructions used to cross-check the extremal
//! generation: the cycle/path generating set, the tropical double
//! description of a two-sided system, and extremal filtering.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{
    build_digraph, enumerate_max_jsigma_paths, enumerate_nonneg_elementary_cycles, Cycle,
    JSigmaPath,
};
use crate::matrix::MpMatrix;
use crate::scalar::ExtReal;
use crate::supereig::{Config, ScaledBasis};
use crate::vector::{in_span, MpVector};

/// Where a generator came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorSource {
    /// `j`-th generator (0-based) of the cycle with these nodes.
    Cycle { cycle: Vec<usize>, index: usize },
    /// `step`-th generator (1-based) grown along a path into a cycle.
    Path {
        cycle: Vec<usize>,
        path: Vec<usize>,
        step: usize,
    },
    /// Member of the final double-description set.
    DoubleDescription,
}

/// Vectors generating a cone, possibly unscaled and redundant.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneratorSet {
    vectors: Vec<MpVector>,
    sources: Vec<GeneratorSource>,
}

impl GeneratorSet {
    pub fn push(&mut self, v: MpVector, source: GeneratorSource) {
        self.vectors.push(v);
        self.sources.push(source);
    }

    pub fn vectors(&self) -> &[MpVector] {
        &self.vectors
    }

    pub fn sources(&self) -> &[GeneratorSource] {
        &self.sources
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MpVector, &GeneratorSource)> {
        self.vectors.iter().zip(&self.sources)
    }

    /// Scaled and deduplicated, without extremal filtering.
    pub fn scaled(&self) -> Result<ScaledBasis> {
        ScaledBasis::from_vectors(&self.vectors)
    }
}

/// The `t` generators of a nonnegative cycle `(i_1, …, i_t)`, in the given
/// rotation.
///
/// Generator `j` has `(x_j)_{i_1} = 0` and
/// `(x_j)_{i_{s+1}} = (x_j)_{i_s} + α_s − a_{i_s i_{s+1}}` where `α_j = ω(σ)`
/// and every other `α_s = 0`.
pub fn cycle_generators(a: &MpMatrix, cycle: &Cycle) -> Vec<MpVector> {
    let nodes = cycle.nodes();
    let t = nodes.len();
    let weight = cycle.weight();
    (0..t)
        .map(|j| {
            let mut x = MpVector::neg_inf(a.n());
            let mut value = num_rational::BigRational::zero();
            x.set(nodes[0], ExtReal::Finite(value.clone()));
            for s in 0..t.saturating_sub(1) {
                let arc = a
                    .get(nodes[s], nodes[s + 1])
                    .as_rational()
                    .expect("cycle arc is finite");
                if s == j {
                    value += weight;
                }
                value -= arc;
                x.set(nodes[s + 1], ExtReal::Finite(value.clone()));
            }
            x
        })
        .collect()
}

/// Generators grown along a path ending at `i_k`, starting from the cycle
/// generator `x_{k−1}` (cyclically, so `x_t` when the path ends at `i_1`).
pub fn path_generators(a: &MpMatrix, cycle_gens: &[MpVector], cycle: &Cycle, path: &JSigmaPath) -> Vec<MpVector> {
    let end = path.endnode();
    let k = cycle.position(end).expect("path ends on the cycle");
    let t = cycle.len();
    let mut x = cycle_gens[(k + t - 1) % t].clone();
    let mut c = x.get(end).clone();
    let nodes = path.nodes();
    let mut out = Vec::with_capacity(nodes.len() - 1);
    for p in (0..nodes.len() - 1).rev() {
        c = c.otimes(a.get(nodes[p], nodes[p + 1]));
        x = x
            .join(&MpVector::single(a.n(), nodes[p], c.clone()))
            .expect("same length");
        out.push(x.clone());
    }
    out
}

/// Generating set of `X ∪ {−∞}` from all nonnegative elementary cycles and
/// their maximum J-paths. Empty when there are no nonnegative cycles.
pub fn alg4_generators(a: &MpMatrix, config: &Config) -> Result<GeneratorSet> {
    let graph = build_digraph(a)?;
    let cycles = enumerate_nonneg_elementary_cycles(&graph, config.max_cycles)?;
    let mut set = GeneratorSet::default();
    for cycle in &cycles {
        let gens = cycle_generators(a, cycle);
        for (index, g) in gens.iter().enumerate() {
            set.push(
                g.clone(),
                GeneratorSource::Cycle {
                    cycle: cycle.nodes().to_vec(),
                    index,
                },
            );
        }
        for path in enumerate_max_jsigma_paths(&graph, cycle, config.maximality, config.max_cycles)? {
            for (step, g) in path_generators(a, &gens, cycle, &path).into_iter().enumerate() {
                set.push(
                    g,
                    GeneratorSource::Path {
                        cycle: cycle.nodes().to_vec(),
                        path: path.nodes().to_vec(),
                        step: step + 1,
                    },
                );
            }
        }
    }
    Ok(set)
}

/// The cone `{x : B ⊗ x ≤ A ⊗ x}` with `A, B` of equal shape `p × d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSidedSystem {
    a: MpMatrix,
    b: MpMatrix,
}

impl TwoSidedSystem {
    pub fn new(a: MpMatrix, b: MpMatrix) -> Result<Self> {
        if a.rows() != b.rows() || a.cols() != b.cols() {
            return Err(Error::DimensionMismatch {
                expected: a.rows() * a.cols(),
                found: b.rows() * b.cols(),
            });
        }
        Ok(TwoSidedSystem { a, b })
    }

    /// `x ≤ A ⊗ x` for square `A`.
    pub fn supereigen(a: &MpMatrix) -> Result<Self> {
        a.require_square()?;
        Self::new(a.clone(), MpMatrix::identity(a.n()))
    }

    pub fn rows(&self) -> usize {
        self.a.rows()
    }

    pub fn dim(&self) -> usize {
        self.a.cols()
    }

    /// `B_k ⊗ x ≤ A_k ⊗ x`.
    pub fn row_holds(&self, k: usize, x: &MpVector) -> Result<bool> {
        Ok(self.b.row_apply(k, x)? <= self.a.row_apply(k, x)?)
    }

    pub fn holds(&self, x: &MpVector) -> Result<bool> {
        for k in 0..self.rows() {
            if !self.row_holds(k, x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DdOptions {
    /// Drop generators in the span of the others after each row.
    pub prune: bool,
    /// Abort once an intermediate set exceeds this many vectors.
    pub max_generators: usize,
}

impl Default for DdOptions {
    fn default() -> Self {
        DdOptions {
            prune: true,
            max_generators: 1_000_000,
        }
    }
}

/// Tropical double description.
///
/// Starts from the unit vectors and, for each row `k`, keeps the satisfiers
/// `v` of `B_k ⊗ v ≤ A_k ⊗ v` and adds `(B_k ⊗ w) ⊗ v ⊕ (A_k ⊗ v) ⊗ w` for
/// every satisfier `v` and strict violator `w`. Each intermediate set is
/// scaled and deduplicated.
pub fn double_description(sys: &TwoSidedSystem) -> Result<GeneratorSet> {
    double_description_with(sys, DdOptions::default())
}

pub fn double_description_with(sys: &TwoSidedSystem, options: DdOptions) -> Result<GeneratorSet> {
    let d = sys.dim();
    let mut current: Vec<MpVector> = (0..d).map(|i| MpVector::unit(d, i)).collect();
    for k in 0..sys.rows() {
        current = dd_step(sys, k, &current, options)?;
    }
    let mut set = GeneratorSet::default();
    for v in current {
        set.push(v, GeneratorSource::DoubleDescription);
    }
    Ok(set)
}

/// Intermediate sets `V_0, …, V_p`; `V_k` generates the cone cut out by the
/// first `k` rows.
pub fn double_description_trace(sys: &TwoSidedSystem, options: DdOptions) -> Result<Vec<Vec<MpVector>>> {
    let d = sys.dim();
    let mut sets = vec![(0..d).map(|i| MpVector::unit(d, i)).collect::<Vec<_>>()];
    for k in 0..sys.rows() {
        let next = dd_step(sys, k, sets.last().expect("nonempty"), options)?;
        sets.push(next);
    }
    Ok(sets)
}

fn dd_step(
    sys: &TwoSidedSystem,
    k: usize,
    generators: &[MpVector],
    options: DdOptions,
) -> Result<Vec<MpVector>> {
    let mut satisfiers = Vec::new();
    let mut violators = Vec::new();
    for v in generators {
        let lhs = sys.b.row_apply(k, v)?;
        let rhs = sys.a.row_apply(k, v)?;
        if lhs <= rhs {
            satisfiers.push((v, rhs));
        } else {
            violators.push((v, lhs));
        }
    }
    let mut next: BTreeSet<MpVector> = BTreeSet::new();
    for (v, _) in &satisfiers {
        next.insert(v.scaled()?);
    }
    for (v, a_v) in &satisfiers {
        for (w, b_w) in &violators {
            let combo = v.scale(b_w).join(&w.scale(a_v))?;
            if combo.is_proper() {
                next.insert(combo.scaled()?);
            }
            if next.len() > options.max_generators {
                return Err(Error::ResourceLimit {
                    what: "double description generator",
                    limit: options.max_generators,
                });
            }
        }
    }
    let next: Vec<MpVector> = next.into_iter().collect();
    if options.prune {
        non_redundant(&next)
    } else {
        Ok(next)
    }
}

// `vectors` must be scaled and distinct.
fn non_redundant(vectors: &[MpVector]) -> Result<Vec<MpVector>> {
    let mut keep = Vec::with_capacity(vectors.len());
    for (i, v) in vectors.iter().enumerate() {
        let others = vectors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, w)| w);
        if !in_span(v, others)? {
            keep.push(v.clone());
        }
    }
    Ok(keep)
}

/// Scales, deduplicates, and keeps exactly the vectors that are not
/// max-combinations of the others. When `generators` generates a cone, the
/// result is its scaled basis.
pub fn extremal_filter(generators: &GeneratorSet) -> Result<ScaledBasis> {
    let scaled = generators.scaled()?.to_vec();
    ScaledBasis::from_vectors(&non_redundant(&scaled)?)
}

pub fn bases_equal(lhs: &ScaledBasis, rhs: &ScaledBasis) -> bool {
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example_matrix;
    use crate::graph::build_digraph;

    const N: Option<i64> = None;

    fn v(entries: &[Option<i64>]) -> MpVector {
        MpVector::from_ints(entries)
    }

    #[test]
    fn two_cycle_generators() {
        let a = example_matrix();
        let g = build_digraph(&a).unwrap();
        let sigma2 = Cycle::new(&g, vec![1, 0]).unwrap();
        let gens = cycle_generators(&a, &sigma2);
        assert_eq!(
            gens,
            vec![v(&[Some(1), Some(0), N, N, N]), v(&[Some(-1), Some(0), N, N, N])]
        );
    }

    #[test]
    fn loop_generator_is_unit_vector() {
        let a = example_matrix();
        let g = build_digraph(&a).unwrap();
        let sigma1 = Cycle::new(&g, vec![1]).unwrap();
        assert_eq!(cycle_generators(&a, &sigma1), vec![MpVector::unit(5, 1)]);
    }

    #[test]
    fn generators_satisfy_system() {
        let a = example_matrix();
        let set = alg4_generators(&a, &Config::default()).unwrap();
        assert!(!set.is_empty());
        for g in set.vectors() {
            assert!(crate::supereig::in_supereig(&a, g).unwrap(), "{g}");
        }
    }

    #[test]
    fn path_generators_follow_the_path() {
        let a = example_matrix();
        let g = build_digraph(&a).unwrap();
        let sigma1 = Cycle::new(&g, vec![1]).unwrap();
        let gens = cycle_generators(&a, &sigma1);
        let paths = enumerate_max_jsigma_paths(&g, &sigma1, Default::default(), 100).unwrap();
        let pi2 = paths.iter().find(|p| p.nodes() == [4, 3, 0, 1]).unwrap();
        assert_eq!(
            path_generators(&a, &gens, &sigma1, pi2),
            vec![
                v(&[Some(1), Some(0), N, N, N]),
                v(&[Some(1), Some(0), N, Some(2), N]),
                v(&[Some(1), Some(0), N, Some(2), Some(3)]),
            ]
        );
    }

    #[test]
    fn double_description_small_cases() {
        let one = TwoSidedSystem::supereigen(&MpMatrix::from_ints(&[&[Some(0)]]).unwrap()).unwrap();
        assert_eq!(double_description(&one).unwrap().vectors(), &[MpVector::unit(1, 0)]);

        let neg = MpMatrix::from_ints(&[&[Some(-1), N], &[N, Some(-1)]]).unwrap();
        let sys = TwoSidedSystem::supereigen(&neg).unwrap();
        assert!(double_description(&sys).unwrap().is_empty());
    }

    #[test]
    fn zero_rows_gives_unit_vectors() {
        let sys = TwoSidedSystem::new(
            MpMatrix::filled(0, 3, ExtReal::NegInf),
            MpMatrix::filled(0, 3, ExtReal::NegInf),
        )
        .unwrap();
        let set = double_description(&sys).unwrap();
        assert_eq!(set.len(), 3);
    }

    #[test]
    fn shape_mismatch_rejected() {
        assert!(TwoSidedSystem::new(MpMatrix::identity(2), MpMatrix::identity(3)).is_err());
    }

    #[test]
    fn extremal_filter_examples() {
        let mut g = GeneratorSet::default();
        for x in [v(&[Some(0), Some(-1)]), v(&[Some(-1), Some(0)]), v(&[Some(0), Some(0)])] {
            g.push(x, GeneratorSource::DoubleDescription);
        }
        let basis = extremal_filter(&g).unwrap();
        assert_eq!(
            basis.to_vec(),
            vec![v(&[Some(-1), Some(0)]), v(&[Some(0), Some(-1)])]
        );

        let mut single = GeneratorSet::default();
        single.push(MpVector::unit(1, 0), GeneratorSource::DoubleDescription);
        assert_eq!(extremal_filter(&single).unwrap().len(), 1);
    }

    #[test]
    fn bases_equal_examples() {
        let e1 = ScaledBasis::from_vectors(&[MpVector::unit(2, 0)]).unwrap();
        let e2 = ScaledBasis::from_vectors(&[MpVector::unit(2, 1)]).unwrap();
        assert!(!bases_equal(&e1, &e2));
        assert!(bases_equal(&ScaledBasis::new(), &ScaledBasis::new()));
    }
}
