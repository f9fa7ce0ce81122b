//! Extremal generation for `X = {x ≠ −∞ : A ⊗ x ≥ x}`.
//!
//! Every nonnegative elementary cycle yields one candidate per rotation
//! ([`alg1_cycle`]); every maximum J-path into the cycle grows an extremal
//! rotation candidate backwards along the path, one node at a time
//! ([`alg2_path`]). [`alg3_basis`] runs both over the whole digraph and keeps
//! the candidates an [`ExtremalityOracle`] accepts. With a correct oracle the
//! result is the unique scaled basis of `X ∪ {−∞}`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{
    build_digraph, enumerate_max_jsigma_paths, enumerate_nonneg_elementary_cycles,
    graph_max_cycle_mean, rotations, Cycle, Digraph, JSigmaPath, PathMaximality,
    DEFAULT_MAX_CYCLES,
};
use crate::matrix::MpMatrix;
use crate::oracle::alg4_generators;
use crate::scalar::{is_nonnegative, ExtReal};
use crate::vector::{in_span, MpVector};

/// Enumeration limits and the J-path maximality reading.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub max_cycles: usize,
    pub maximality: PathMaximality,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_cycles: DEFAULT_MAX_CYCLES,
            maximality: PathMaximality::default(),
        }
    }
}

/// Decides whether a member of `X` is an extremal of `X ∪ {−∞}`.
///
/// Implementations receive unscaled vectors and must be scale-invariant.
pub trait ExtremalityOracle: Send + Sync {
    fn is_extremal(&self, v: &MpVector) -> bool;
}

impl<T: ExtremalityOracle + ?Sized> ExtremalityOracle for &T {
    fn is_extremal(&self, v: &MpVector) -> bool {
        (**self).is_extremal(v)
    }
}

/// Accepts everything. Running the algorithms with it yields the unfiltered
/// generating set instead of the basis.
#[derive(Clone, Copy, Debug, Default)]
pub struct AcceptAll;

impl ExtremalityOracle for AcceptAll {
    fn is_extremal(&self, _v: &MpVector) -> bool {
        true
    }
}

/// Span-exclusion test against a cached, scaled generating set of the space.
#[derive(Clone, Debug)]
pub struct ReferenceOracle {
    generators: Vec<MpVector>,
}

impl ReferenceOracle {
    /// Caches the scaled cycle/path generators of `a`.
    pub fn new(a: &MpMatrix, config: &Config) -> Result<Self> {
        let set = alg4_generators(a, config)?;
        Self::from_generators(set.vectors())
    }

    /// `generators` must generate the whole solution space.
    pub fn from_generators(generators: &[MpVector]) -> Result<Self> {
        let scaled: BTreeSet<MpVector> = generators
            .iter()
            .map(MpVector::scaled)
            .collect::<Result<_>>()?;
        Ok(ReferenceOracle {
            generators: scaled.into_iter().collect(),
        })
    }

    pub fn generators(&self) -> &[MpVector] {
        &self.generators
    }
}

impl ExtremalityOracle for ReferenceOracle {
    fn is_extremal(&self, v: &MpVector) -> bool {
        excluded_from_span(v, &self.generators).unwrap_or(false)
    }
}

fn excluded_from_span(v: &MpVector, generators: &[MpVector]) -> Result<bool> {
    let s = v.scaled()?;
    let others = generators.iter().filter(|g| **g != s);
    Ok(!in_span(&s, others)?)
}

/// Extremality of `v ∈ X` relative to a scaled generating set `generators` of
/// `X ∪ {−∞}`: `v` is extremal iff its scaled copy is not a max-combination of
/// the other generators.
pub fn is_extremal_ref(a: &MpMatrix, v: &MpVector, generators: &[MpVector]) -> Result<bool> {
    if !v.is_proper() {
        return Err(Error::ImproperVector);
    }
    if !in_supereig(a, v)? {
        return Err(Error::Contract("vector does not satisfy A ⊗ v ≥ v".into()));
    }
    excluded_from_span(v, generators)
}

/// Deduplicated scaled vectors in ascending lexicographic order (−∞ lowest).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ScaledBasis {
    vectors: BTreeSet<MpVector>,
}

impl ScaledBasis {
    pub fn new() -> Self {
        Self::default()
    }

    /// Scales and inserts; returns `false` if the scaled vector was present.
    pub fn insert(&mut self, v: &MpVector) -> Result<bool> {
        Ok(self.vectors.insert(v.scaled()?))
    }

    pub fn from_vectors<'a, I>(vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a MpVector>,
    {
        let mut basis = Self::new();
        for v in vectors {
            basis.insert(v)?;
        }
        Ok(basis)
    }

    pub fn contains(&self, v: &MpVector) -> bool {
        v.scaled().is_ok_and(|s| self.vectors.contains(&s))
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &MpVector> {
        self.vectors.iter()
    }

    pub fn to_vec(&self) -> Vec<MpVector> {
        self.vectors.iter().cloned().collect()
    }
}

impl<'a> IntoIterator for &'a ScaledBasis {
    type Item = &'a MpVector;
    type IntoIter = std::collections::btree_set::Iter<'a, MpVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.vectors.iter()
    }
}

/// `x ∈ X_i`, i.e. `A_i ⊗ x ≥ x_i`.
pub fn row_satisfied(a: &MpMatrix, i: usize, x: &MpVector) -> Result<bool> {
    Ok(a.row_apply(i, x)? >= *x.get(i))
}

/// `x ≠ −∞` and `A ⊗ x ≥ x`. Rows outside the support hold trivially.
pub fn in_supereig(a: &MpMatrix, x: &MpVector) -> Result<bool> {
    a.require_square()?;
    if x.len() != a.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            found: x.len(),
        });
    }
    if !x.is_proper() {
        return Ok(false);
    }
    for i in x.support() {
        if !row_satisfied(a, i, x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `y_i ⊗ x ⊕ (A_i ⊗ x) ⊗ y`, which stays in `X_i` whenever `x` does.
pub fn combine_row(a: &MpMatrix, i: usize, x: &MpVector, y: &MpVector) -> Result<MpVector> {
    if !row_satisfied(a, i, x)? {
        return Err(Error::Contract(format!(
            "combine_row needs x in X_{}",
            i + 1
        )));
    }
    let ax = a.row_apply(i, x)?;
    x.scale(y.get(i)).join(&y.scale(&ax))
}

/// Result of the cycle walk for one rotation `σ(i_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Terminal {
    /// Rotation start `i_k`.
    pub start: usize,
    /// Unscaled `v^{σ(i_k)}`.
    pub vector: MpVector,
    /// Number of vectors built, `1 ≤ p ≤ t`.
    pub iterations: usize,
    pub extremal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleRun {
    pub cycle: Cycle,
    /// One terminal per rotation, in cycle order.
    pub terminals: Vec<Terminal>,
    /// Scaled terminals the oracle accepted.
    pub accepted: Vec<MpVector>,
}

impl CycleRun {
    pub fn terminal_at(&self, start: usize) -> Option<&Terminal> {
        self.terminals.iter().find(|t| t.start == start)
    }
}

/// Walks one rotation `(j_1, …, j_t)`: start from `e^{j_1}` and, while the
/// current vector violates row `j_p`, absorb the next cycle node.
pub fn rotation_terminal(a: &MpMatrix, rotation: &[usize]) -> Result<(MpVector, usize)> {
    let n = a.n();
    let t = rotation.len();
    let mut v = MpVector::unit(n, rotation[0]);
    let mut p = 0;
    while p + 1 < t && !row_satisfied(a, rotation[p], &v)? {
        let next = rotation[p + 1];
        let arc = a.get(rotation[p], next);
        v = MpVector::unit(n, next).join(&v.scale(arc))?;
        p += 1;
    }
    Ok((v, p + 1))
}

/// Candidates from every rotation of a nonnegative elementary cycle.
pub fn alg1_cycle(
    a: &MpMatrix,
    cycle: &Cycle,
    oracle: &dyn ExtremalityOracle,
) -> Result<CycleRun> {
    if !is_nonnegative(&ExtReal::Finite(cycle.weight().clone())) {
        return Err(Error::Contract(format!(
            "cycle {:?} has negative weight",
            cycle.nodes()
        )));
    }
    let mut terminals = Vec::with_capacity(cycle.len());
    let mut accepted = Vec::new();
    for rotation in rotations(cycle) {
        let (vector, iterations) = rotation_terminal(a, rotation.nodes())?;
        let extremal = oracle.is_extremal(&vector);
        if extremal {
            accepted.push(vector.scaled()?);
        }
        terminals.push(Terminal {
            start: rotation.nodes()[0],
            vector,
            iterations,
            extremal,
        });
    }
    Ok(CycleRun {
        cycle: cycle.clone(),
        terminals,
        accepted,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepOutcome {
    /// The new vector passed the oracle.
    Accepted,
    /// The new vector failed the oracle; the walk stops.
    Rejected,
    /// `e^l ∈ X_l`, so no extremal can follow; the walk stops without
    /// building a vector.
    UnitSatisfied,
}

/// One step of a path walk at node `l_{m−q}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathStep {
    pub node: usize,
    /// Unscaled `v^{l_{m−q}}`; `None` when the walk stopped on the unit test.
    pub vector: Option<MpVector>,
    pub outcome: StepOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathRun {
    pub path: JSigmaPath,
    pub steps: Vec<PathStep>,
    /// Scaled accepted vectors, in walk order.
    pub emitted: Vec<MpVector>,
}

/// Grows an extremal rotation candidate backwards along a maximum J-path.
///
/// `terminal` must be the candidate of the rotation starting at the path's
/// endnode and must have passed the oracle.
pub fn alg2_path(
    a: &MpMatrix,
    path: &JSigmaPath,
    terminal: &Terminal,
    oracle: &dyn ExtremalityOracle,
) -> Result<PathRun> {
    if terminal.start != path.endnode() {
        return Err(Error::Contract(format!(
            "terminal starts at node {} but the path ends at node {}",
            terminal.start + 1,
            path.endnode() + 1
        )));
    }
    if !terminal.extremal {
        return Err(Error::Contract(
            "path walk needs an extremal rotation candidate".into(),
        ));
    }
    let n = a.n();
    let mut v = terminal.vector.clone();
    let mut steps = Vec::new();
    let mut emitted = Vec::new();
    for &node in path.nodes().iter().rev().skip(1) {
        let unit = MpVector::unit(n, node);
        if row_satisfied(a, node, &unit)? {
            steps.push(PathStep {
                node,
                vector: None,
                outcome: StepOutcome::UnitSatisfied,
            });
            break;
        }
        let lift = a.row_apply(node, &v)?;
        v = v.join(&unit.scale(&lift))?;
        if oracle.is_extremal(&v) {
            emitted.push(v.scaled()?);
            steps.push(PathStep {
                node,
                vector: Some(v.clone()),
                outcome: StepOutcome::Accepted,
            });
        } else {
            steps.push(PathStep {
                node,
                vector: Some(v.clone()),
                outcome: StepOutcome::Rejected,
            });
            break;
        }
    }
    Ok(PathRun {
        path: path.clone(),
        steps,
        emitted,
    })
}

/// Counters reported alongside a basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    /// Nonnegative elementary cycles processed.
    pub cycles: usize,
    /// Maximum J-paths walked.
    pub paths: usize,
    /// Vectors built (rotation candidates plus path vectors).
    pub candidates: usize,
    /// Accepted vectors whose scaled form was already present.
    pub duplicates: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisReport {
    /// `λ(A)`.
    pub lambda: ExtReal,
    pub basis: ScaledBasis,
    pub stats: Stats,
}

impl BasisReport {
    pub fn solvable(&self) -> bool {
        is_nonnegative(&self.lambda)
    }
}

struct CycleOutput {
    accepted: Vec<MpVector>,
    paths: usize,
    candidates: usize,
}

fn process_cycle(
    a: &MpMatrix,
    graph: &Digraph,
    cycle: &Cycle,
    oracle: &dyn ExtremalityOracle,
    config: &Config,
) -> Result<CycleOutput> {
    let run = alg1_cycle(a, cycle, oracle)?;
    let mut accepted = run.accepted.clone();
    let mut candidates = run.terminals.len();
    let paths = enumerate_max_jsigma_paths(graph, cycle, config.maximality, config.max_cycles)?;
    let mut walked = 0;
    for path in &paths {
        let terminal = run
            .terminal_at(path.endnode())
            .expect("path ends on the cycle");
        if !terminal.extremal {
            continue;
        }
        walked += 1;
        let walk = alg2_path(a, path, terminal, oracle)?;
        candidates += walk.steps.iter().filter(|s| s.vector.is_some()).count();
        accepted.extend(walk.emitted);
    }
    Ok(CycleOutput {
        accepted,
        paths: walked,
        candidates,
    })
}

/// Runs the cycle and path walks over every nonnegative elementary cycle and
/// collects the accepted candidates. An empty basis is returned when
/// `λ(A) < 0`.
pub fn alg3_basis(
    a: &MpMatrix,
    oracle: &dyn ExtremalityOracle,
    config: &Config,
) -> Result<BasisReport> {
    let graph = build_digraph(a)?;
    let lambda = graph_max_cycle_mean(&graph);
    if !is_nonnegative(&lambda) {
        return Ok(BasisReport {
            lambda,
            basis: ScaledBasis::new(),
            stats: Stats::default(),
        });
    }
    let cycles = enumerate_nonneg_elementary_cycles(&graph, config.max_cycles)?;
    let outputs: Vec<CycleOutput> = cycles
        .par_iter()
        .map(|c| process_cycle(a, &graph, c, oracle, config))
        .collect::<Result<_>>()?;

    let mut basis = ScaledBasis::new();
    let mut stats = Stats {
        cycles: cycles.len(),
        ..Stats::default()
    };
    for out in outputs {
        stats.paths += out.paths;
        stats.candidates += out.candidates;
        for v in &out.accepted {
            if !basis.insert(v)? {
                stats.duplicates += 1;
            }
        }
    }
    Ok(BasisReport {
        lambda,
        basis,
        stats,
    })
}

/// The scaled unfiltered set: every rotation candidate and every path vector
/// up to the first self-satisfying unit vector.
pub fn alg3_generators(a: &MpMatrix, config: &Config) -> Result<BasisReport> {
    alg3_basis(a, &AcceptAll, config)
}

/// Basis with the reference oracle built from the cycle/path generators.
pub fn scaled_basis(a: &MpMatrix, config: &Config) -> Result<BasisReport> {
    let oracle = ReferenceOracle::new(a, config)?;
    alg3_basis(a, &oracle, config)
}
