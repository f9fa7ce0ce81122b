//! The weighted digraph of a max-plus matrix: maximum cycle mean, elementary
//! cycles and maximum J-paths into a cycle.
//!
//! Nodes are 0-based here. Arc `(i, j)` exists iff `a_ij` is finite and
//! carries weight `a_ij`.

use std::collections::{BTreeSet, VecDeque};

use num_rational::BigRational;
use num_traits::Zero;
use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::error::{Error, Result};
use crate::matrix::MpMatrix;
use crate::scalar::ExtReal;

/// Default cap on the number of enumerated cycles (and paths).
pub const DEFAULT_MAX_CYCLES: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub weight: BigRational,
}

#[derive(Clone, Debug)]
pub struct Digraph {
    n: usize,
    // weights[i][j] = a_ij when finite
    weights: Vec<Vec<Option<BigRational>>>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self, from: usize, to: usize) -> Option<&BigRational> {
        self.weights[from][to].as_ref()
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.weights[from][to].is_some()
    }

    pub fn successors(&self, node: usize) -> &[usize] {
        &self.succ[node]
    }

    pub fn predecessors(&self, node: usize) -> &[usize] {
        &self.pred[node]
    }

    /// All arcs in row-major order.
    pub fn arcs(&self) -> Vec<Arc> {
        let mut out = Vec::new();
        for (from, row) in self.weights.iter().enumerate() {
            for (to, w) in row.iter().enumerate() {
                if let Some(w) = w {
                    out.push(Arc {
                        from,
                        to,
                        weight: w.clone(),
                    });
                }
            }
        }
        out
    }

    /// Sum of arc weights along a closed walk `nodes[0] → … → nodes[t-1] → nodes[0]`.
    fn closed_walk_weight(&self, nodes: &[usize]) -> Option<BigRational> {
        let mut total = BigRational::zero();
        for (k, &from) in nodes.iter().enumerate() {
            let to = nodes[(k + 1) % nodes.len()];
            total += self.weight(from, to)?;
        }
        Some(total)
    }

    /// Strongly connected components restricted to nodes `>= lo`.
    fn components_from(&self, lo: usize) -> Vec<Vec<usize>> {
        let mut g = DiGraph::<usize, ()>::with_capacity(self.n - lo, 0);
        let idx: Vec<NodeIndex> = (lo..self.n).map(|v| g.add_node(v)).collect();
        for from in lo..self.n {
            for &to in &self.succ[from] {
                if to >= lo {
                    g.add_edge(idx[from - lo], idx[to - lo], ());
                }
            }
        }
        tarjan_scc(&g)
            .into_iter()
            .map(|comp| {
                let mut nodes: Vec<usize> = comp.into_iter().map(|i| g[i]).collect();
                nodes.sort_unstable();
                nodes
            })
            .collect()
    }
}

/// The digraph `D_A` of a square matrix.
pub fn build_digraph(a: &MpMatrix) -> Result<Digraph> {
    a.require_square()?;
    let n = a.n();
    let mut weights = vec![vec![None; n]; n];
    let mut succ = vec![Vec::new(); n];
    let mut pred = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if let ExtReal::Finite(w) = a.get(i, j) {
                weights[i][j] = Some(w.clone());
                succ[i].push(j);
                pred[j].push(i);
            }
        }
    }
    Ok(Digraph {
        n,
        weights,
        succ,
        pred,
    })
}

/// Elementary cycle, stored as the node sequence `(i_1, …, i_t)` with the
/// closing arc `i_t → i_1` implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    nodes: Vec<usize>,
    weight: BigRational,
}

impl Cycle {
    /// Validates distinctness and arcs; the nodes are kept in the given rotation.
    pub fn new(graph: &Digraph, nodes: Vec<usize>) -> Result<Cycle> {
        if nodes.is_empty() {
            return Err(Error::Contract("cycle must have at least one node".into()));
        }
        if let Some(&bad) = nodes.iter().find(|&&v| v >= graph.n()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                dim: graph.n(),
            });
        }
        let distinct: BTreeSet<_> = nodes.iter().collect();
        if distinct.len() != nodes.len() {
            return Err(Error::Contract(format!("cycle {nodes:?} repeats a node")));
        }
        let weight = graph
            .closed_walk_weight(&nodes)
            .ok_or_else(|| Error::Contract(format!("cycle {nodes:?} uses a missing arc")))?;
        Ok(Cycle { nodes, weight })
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `ω(σ)`.
    pub fn weight(&self) -> &BigRational {
        &self.weight
    }

    pub fn contains(&self, node: usize) -> bool {
        self.nodes.contains(&node)
    }

    /// `J_σ`.
    pub fn node_set(&self) -> BTreeSet<usize> {
        self.nodes.iter().copied().collect()
    }

    /// Position of `node` in this rotation.
    pub fn position(&self, node: usize) -> Option<usize> {
        self.nodes.iter().position(|&v| v == node)
    }

    /// The rotation `σ(node)` starting at `node`.
    pub fn rotation_at(&self, node: usize) -> Option<Cycle> {
        let k = self.position(node)?;
        Some(self.rotate(k))
    }

    fn rotate(&self, k: usize) -> Cycle {
        let mut nodes = self.nodes.clone();
        nodes.rotate_left(k);
        Cycle {
            nodes,
            weight: self.weight.clone(),
        }
    }

    /// Rotation starting at the smallest node.
    pub fn canonical(&self) -> Cycle {
        let k = (0..self.nodes.len())
            .min_by_key(|&k| self.nodes[k])
            .unwrap_or(0);
        self.rotate(k)
    }
}

/// The `t` rotations `σ(i_1), …, σ(i_t)` in cycle order.
pub fn rotations(cycle: &Cycle) -> Vec<Cycle> {
    (0..cycle.len()).map(|k| cycle.rotate(k)).collect()
}

/// Maximum cycle mean `λ(A)`, or −∞ when `D_A` is acyclic.
///
/// Karp's recurrence on each strongly connected component.
pub fn max_cycle_mean(a: &MpMatrix) -> Result<ExtReal> {
    let graph = build_digraph(a)?;
    Ok(graph_max_cycle_mean(&graph))
}

pub fn graph_max_cycle_mean(graph: &Digraph) -> ExtReal {
    let mut best = ExtReal::NegInf;
    if graph.n() == 0 {
        return best;
    }
    for comp in graph.components_from(0) {
        let nontrivial = comp.len() > 1 || graph.has_arc(comp[0], comp[0]);
        if !nontrivial {
            continue;
        }
        let mean = karp_component(graph, &comp);
        best = best.oplus(&ExtReal::Finite(mean));
    }
    best
}

fn karp_component(graph: &Digraph, comp: &[usize]) -> BigRational {
    let c = comp.len();
    let local = |v: usize| comp.binary_search(&v).ok();
    // walk[k][v]: maximum weight of a k-arc walk from comp[0] to comp[v]
    let mut walk: Vec<Vec<Option<BigRational>>> = vec![vec![None; c]; c + 1];
    walk[0][0] = Some(BigRational::zero());
    for k in 1..=c {
        for (v, &node) in comp.iter().enumerate() {
            let mut best: Option<BigRational> = None;
            for &u in graph.predecessors(node) {
                let Some(lu) = local(u) else { continue };
                let Some(prev) = &walk[k - 1][lu] else { continue };
                let cand = prev + graph.weight(u, node).expect("predecessor arc");
                if best.as_ref().is_none_or(|b| cand > *b) {
                    best = Some(cand);
                }
            }
            walk[k][v] = best;
        }
    }
    let mut result: Option<BigRational> = None;
    for v in 0..c {
        let Some(full) = &walk[c][v] else { continue };
        let mut worst: Option<BigRational> = None;
        for (k, row) in walk.iter().enumerate().take(c) {
            if let Some(dk) = &row[v] {
                let mean = (full - dk) / BigRational::from_integer(((c - k) as i64).into());
                if worst.as_ref().is_none_or(|w| mean < *w) {
                    worst = Some(mean);
                }
            }
        }
        if let Some(w) = worst {
            if result.as_ref().is_none_or(|r| w > *r) {
                result = Some(w);
            }
        }
    }
    result.expect("strongly connected component with an arc has a closed walk")
}

struct Johnson<'g, F> {
    graph: &'g Digraph,
    in_comp: Vec<bool>,
    blocked: Vec<bool>,
    blocked_by: Vec<BTreeSet<usize>>,
    stack: Vec<usize>,
    start: usize,
    found: usize,
    limit: usize,
    visit: F,
}

impl<F: FnMut(&[usize])> Johnson<'_, F> {
    fn unblock(&mut self, u: usize) {
        self.blocked[u] = false;
        let waiting = std::mem::take(&mut self.blocked_by[u]);
        for w in waiting {
            if self.blocked[w] {
                self.unblock(w);
            }
        }
    }

    fn circuit(&mut self, v: usize) -> Result<bool> {
        let mut closed = false;
        self.stack.push(v);
        self.blocked[v] = true;
        for &w in self.graph.successors(v) {
            if !self.in_comp[w] {
                continue;
            }
            if w == self.start {
                self.found += 1;
                if self.found > self.limit {
                    return Err(Error::ResourceLimit {
                        what: "elementary cycle",
                        limit: self.limit,
                    });
                }
                (self.visit)(&self.stack);
                closed = true;
            } else if !self.blocked[w] && self.circuit(w)? {
                closed = true;
            }
        }
        if closed {
            self.unblock(v);
        } else {
            for &w in self.graph.successors(v) {
                if self.in_comp[w] {
                    self.blocked_by[w].insert(v);
                }
            }
        }
        self.stack.pop();
        Ok(closed)
    }
}

/// Visits every elementary cycle once, starting at its smallest node.
/// Returns the number visited, or a resource error past `limit`.
pub fn visit_elementary_cycles<F>(graph: &Digraph, limit: usize, visit: F) -> Result<usize>
where
    F: FnMut(&[usize]),
{
    let n = graph.n();
    let mut state = Johnson {
        graph,
        in_comp: vec![false; n],
        blocked: vec![false; n],
        blocked_by: vec![BTreeSet::new(); n],
        stack: Vec::new(),
        start: 0,
        found: 0,
        limit,
        visit,
    };
    for s in 0..n {
        let comps = graph.components_from(s);
        let Some(comp) = comps.into_iter().find(|c| c.contains(&s)) else {
            continue;
        };
        if comp.len() == 1 && !graph.has_arc(s, s) {
            continue;
        }
        state.in_comp.iter_mut().for_each(|b| *b = false);
        for &v in &comp {
            state.in_comp[v] = true;
            state.blocked[v] = false;
            state.blocked_by[v].clear();
        }
        state.start = s;
        state.circuit(s)?;
    }
    Ok(state.found)
}

/// All elementary cycles in canonical form, sorted by node sequence.
pub fn enumerate_elementary_cycles(graph: &Digraph, limit: usize) -> Result<Vec<Cycle>> {
    let mut out = Vec::new();
    visit_elementary_cycles(graph, limit, |nodes| {
        let weight = graph.closed_walk_weight(nodes).expect("cycle arcs exist");
        out.push(Cycle {
            nodes: nodes.to_vec(),
            weight,
        });
    })?;
    out.sort_by(|a, b| a.nodes.cmp(&b.nodes));
    Ok(out)
}

/// Elementary cycles with `ω(σ) ≥ 0`, canonical and sorted.
pub fn enumerate_nonneg_elementary_cycles(graph: &Digraph, limit: usize) -> Result<Vec<Cycle>> {
    let mut all = enumerate_elementary_cycles(graph, limit)?;
    all.retain(|c| c.weight >= BigRational::zero());
    Ok(all)
}

/// Nodes `u` with a path `u → … → v` of at least one arc.
pub fn reverse_reachable(graph: &Digraph, v: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::new();
    let mut queue: VecDeque<usize> = graph.predecessors(v).iter().copied().collect();
    while let Some(u) = queue.pop_front() {
        if seen.insert(u) {
            queue.extend(graph.predecessors(u).iter().copied());
        }
    }
    seen
}

/// How condition (3) of a maximum J-path is read: "no path from any node
/// `l` outside `J_σ ∪ π` into `l_1`".
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PathMaximality {
    /// The forbidden path runs through outside nodes only. Since any such
    /// path ends with an arc from an outside node, this is the same as
    /// requiring every predecessor of `l_1` to lie in `J_σ ∪ π`.
    #[default]
    OutsideNodes,
    /// The forbidden path may run anywhere in `D_A`, including through
    /// `J_σ` and the path itself.
    FullGraph,
}

/// A maximum J-path `(l_1, …, l_m)` ending at a node of its cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JSigmaPath {
    nodes: Vec<usize>,
    endnode_rotation: usize,
}

impl JSigmaPath {
    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// `l_m`.
    pub fn endnode(&self) -> usize {
        *self.nodes.last().expect("path has at least two nodes")
    }

    /// Index `k` into the cycle's node sequence with `l_m = i_k`.
    pub fn endnode_rotation(&self) -> usize {
        self.endnode_rotation
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// All maximum J-paths of `cycle`, sorted by node sequence.
pub fn enumerate_max_jsigma_paths(
    graph: &Digraph,
    cycle: &Cycle,
    rule: PathMaximality,
    limit: usize,
) -> Result<Vec<JSigmaPath>> {
    let mut in_cycle = vec![false; graph.n()];
    for &v in cycle.nodes() {
        in_cycle[v] = true;
    }
    let mut search = PathSearch {
        graph,
        in_cycle,
        on_path: vec![false; graph.n()],
        reversed: Vec::new(),
        rule,
        limit,
        out: Vec::new(),
    };
    for (k, &end) in cycle.nodes().iter().enumerate() {
        search.reversed.push(end);
        search.on_path[end] = true;
        search.extend(k)?;
        search.on_path[end] = false;
        search.reversed.pop();
    }
    let mut out = search.out;
    out.sort();
    Ok(out)
}

struct PathSearch<'g> {
    graph: &'g Digraph,
    in_cycle: Vec<bool>,
    on_path: Vec<bool>,
    // l_m, l_{m-1}, …, l_1
    reversed: Vec<usize>,
    rule: PathMaximality,
    limit: usize,
    out: Vec<JSigmaPath>,
}

impl PathSearch<'_> {
    fn extend(&mut self, endnode_rotation: usize) -> Result<()> {
        let head = *self.reversed.last().expect("nonempty");
        for &p in self.graph.predecessors(head) {
            if self.in_cycle[p] || self.on_path[p] {
                continue;
            }
            self.reversed.push(p);
            self.on_path[p] = true;
            if self.is_maximal(p) {
                if self.out.len() >= self.limit {
                    return Err(Error::ResourceLimit {
                        what: "maximum J-path",
                        limit: self.limit,
                    });
                }
                self.out.push(JSigmaPath {
                    nodes: self.reversed.iter().rev().copied().collect(),
                    endnode_rotation,
                });
            }
            self.extend(endnode_rotation)?;
            self.on_path[p] = false;
            self.reversed.pop();
        }
        Ok(())
    }

    fn is_maximal(&self, first: usize) -> bool {
        let inside = |u: usize| self.in_cycle[u] || self.on_path[u];
        match self.rule {
            PathMaximality::OutsideNodes => {
                self.graph.predecessors(first).iter().all(|&u| inside(u))
            }
            PathMaximality::FullGraph => reverse_reachable(self.graph, first)
                .into_iter()
                .all(inside),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example_matrix;

    const N: Option<i64> = None;

    fn one_based(nodes: &[usize]) -> Vec<usize> {
        nodes.iter().map(|v| v + 1).collect()
    }

    #[test]
    fn example_digraph_arcs() {
        let g = build_digraph(&example_matrix()).unwrap();
        let arcs = g.arcs();
        assert_eq!(arcs.len(), 14);
        let has = |i: usize, j: usize, w: i64| {
            arcs.iter()
                .any(|a| a.from == i - 1 && a.to == j - 1 && a.weight == BigRational::from_integer(w.into()))
        };
        assert!(has(1, 1, -3) && has(1, 2, 1) && has(3, 4, 2) && has(5, 4, 1));
    }

    #[test]
    fn trivial_digraphs() {
        let empty = MpMatrix::filled(3, 3, ExtReal::NegInf);
        assert!(build_digraph(&empty).unwrap().arcs().is_empty());
        let id = build_digraph(&MpMatrix::identity(3)).unwrap();
        let arcs = id.arcs();
        assert_eq!(arcs.len(), 3);
        assert!(arcs.iter().all(|a| a.from == a.to && a.weight.is_zero()));
    }

    #[test]
    fn max_cycle_mean_examples() {
        assert_eq!(
            max_cycle_mean(&example_matrix()).unwrap(),
            ExtReal::from_ratio(5, 4)
        );
        assert_eq!(
            max_cycle_mean(&MpMatrix::identity(4)).unwrap(),
            ExtReal::zero()
        );
        assert_eq!(
            max_cycle_mean(&MpMatrix::from_ints(&[&[N]]).unwrap()).unwrap(),
            ExtReal::NegInf
        );
    }

    #[test]
    fn example_nonneg_cycles() {
        let g = build_digraph(&example_matrix()).unwrap();
        let cycles = enumerate_nonneg_elementary_cycles(&g, DEFAULT_MAX_CYCLES).unwrap();
        let got: Vec<_> = cycles.iter().map(|c| one_based(c.nodes())).collect();
        assert_eq!(
            got,
            vec![vec![1, 2], vec![1, 2, 3, 4], vec![2], vec![2, 3]]
        );
        let weights: Vec<_> = cycles.iter().map(|c| c.weight().to_string()).collect();
        assert_eq!(weights, ["2", "5", "1", "1"]);
    }

    #[test]
    fn identity_and_acyclic_cycles() {
        let g = build_digraph(&MpMatrix::identity(2)).unwrap();
        let got: Vec<_> = enumerate_nonneg_elementary_cycles(&g, 10)
            .unwrap()
            .iter()
            .map(|c| one_based(c.nodes()))
            .collect();
        assert_eq!(got, vec![vec![1], vec![2]]);

        let single = MpMatrix::from_ints(&[&[N, Some(0)], &[N, N]]).unwrap();
        let g = build_digraph(&single).unwrap();
        assert!(enumerate_nonneg_elementary_cycles(&g, 10).unwrap().is_empty());
    }

    #[test]
    fn cycle_cap_is_enforced() {
        let full = MpMatrix::filled(5, 5, ExtReal::zero());
        let g = build_digraph(&full).unwrap();
        // the complete digraph with loops on 5 nodes has 89 elementary cycles
        assert_eq!(enumerate_elementary_cycles(&g, 1000).unwrap().len(), 89);
        assert_eq!(
            enumerate_elementary_cycles(&g, 88),
            Err(Error::ResourceLimit {
                what: "elementary cycle",
                limit: 88
            })
        );
    }

    #[test]
    fn rotation_views() {
        let g = build_digraph(&example_matrix()).unwrap();
        let sigma4 = Cycle::new(&g, vec![1, 2, 3, 0]).unwrap();
        let starts: Vec<_> = rotations(&sigma4).iter().map(|c| c.nodes()[0] + 1).collect();
        assert_eq!(starts, [2, 3, 4, 1]);
        assert!(rotations(&sigma4).iter().all(|r| r.weight() == sigma4.weight()));
        assert_eq!(sigma4.canonical().nodes(), &[0, 1, 2, 3]);

        let lp = Cycle::new(&g, vec![1]).unwrap();
        assert_eq!(rotations(&lp).len(), 1);
        let two = Cycle::new(&g, vec![0, 1]).unwrap();
        let views: Vec<_> = rotations(&two).iter().map(|c| one_based(c.nodes())).collect();
        assert_eq!(views, vec![vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn cycle_validation() {
        let g = build_digraph(&example_matrix()).unwrap();
        assert!(Cycle::new(&g, vec![0, 2]).is_err());
        assert!(Cycle::new(&g, vec![0, 1, 0]).is_err());
        assert!(Cycle::new(&g, vec![]).is_err());
        assert!(Cycle::new(&g, vec![9]).is_err());
    }

    #[test]
    fn example_loop_paths() {
        let g = build_digraph(&example_matrix()).unwrap();
        let sigma1 = Cycle::new(&g, vec![1]).unwrap();
        let paths =
            enumerate_max_jsigma_paths(&g, &sigma1, PathMaximality::OutsideNodes, 100).unwrap();
        let got: BTreeSet<_> = paths.iter().map(|p| one_based(p.nodes())).collect();
        let want: BTreeSet<Vec<usize>> = [
            vec![5, 3, 4, 1, 2],
            vec![5, 4, 1, 2],
            vec![3, 4, 5, 1, 2],
            vec![5, 4, 3, 2],
            vec![4, 5, 3, 2],
            vec![3, 4, 5, 2],
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
        assert!(paths.iter().all(|p| p.endnode_rotation() == 0));
    }

    #[test]
    fn full_graph_reading_drops_paths_reentered_through_the_path() {
        // 3 → 4 → 5 reaches the start of (5, 4, 1, 2) through a path node
        let g = build_digraph(&example_matrix()).unwrap();
        let sigma1 = Cycle::new(&g, vec![1]).unwrap();
        let paths =
            enumerate_max_jsigma_paths(&g, &sigma1, PathMaximality::FullGraph, 100).unwrap();
        let got: Vec<_> = paths.iter().map(|p| one_based(p.nodes())).collect();
        assert!(!got.contains(&vec![5, 4, 1, 2]));
        assert!(got.contains(&vec![5, 3, 4, 1, 2]));
    }

    #[test]
    fn identity_loops_have_no_paths() {
        let g = build_digraph(&MpMatrix::identity(3)).unwrap();
        for v in 0..3 {
            let c = Cycle::new(&g, vec![v]).unwrap();
            assert!(enumerate_max_jsigma_paths(&g, &c, PathMaximality::OutsideNodes, 10)
                .unwrap()
                .is_empty());
        }
    }

    #[test]
    fn two_node_path_into_loop() {
        // arc 1 → 2 and loop at 2
        let a = MpMatrix::from_ints(&[&[N, Some(0)], &[N, Some(0)]]).unwrap();
        let g = build_digraph(&a).unwrap();
        let c = Cycle::new(&g, vec![1]).unwrap();
        let paths = enumerate_max_jsigma_paths(&g, &c, PathMaximality::OutsideNodes, 10).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].nodes(), &[0, 1]);

        // arcs run 2 → 1 instead, so nothing enters the loop node
        let a = MpMatrix::from_ints(&[&[N, N], &[Some(0), Some(0)]]).unwrap();
        let g = build_digraph(&a).unwrap();
        let c = Cycle::new(&g, vec![1]).unwrap();
        assert!(enumerate_max_jsigma_paths(&g, &c, PathMaximality::OutsideNodes, 10)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn reverse_reachability() {
        let g = build_digraph(&example_matrix()).unwrap();
        let r = reverse_reachable(&g, 4);
        assert!(r.contains(&3));
        assert_eq!(r, (0..5).collect());

        let iso = build_digraph(&MpMatrix::filled(2, 2, ExtReal::NegInf)).unwrap();
        assert!(reverse_reachable(&iso, 0).is_empty());
        let id = build_digraph(&MpMatrix::identity(2)).unwrap();
        assert_eq!(reverse_reachable(&id, 1), BTreeSet::from([1]));
    }
}
