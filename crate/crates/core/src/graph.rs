//! Graphs with loops, K′-type block specifications, and edge ideals.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// An undirected graph on vertices `1..=n` with simple edges and loops.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct LoopGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    loops: BTreeSet<usize>,
}

impl LoopGraph {
    /// Edge endpoints are stored as `(min, max)`; repeated edges or loops
    /// collapse. A pair `{i, i}` is rejected: loops go in `loops`.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        loops: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::Validation("graph needs at least one vertex".into()));
        }
        let in_range = |v: usize| (1..=n).contains(&v);
        let mut edge_set = BTreeSet::new();
        for (a, b) in edges {
            if !in_range(a) || !in_range(b) {
                return Err(Error::Validation(format!(
                    "edge {{{a},{b}}} has an endpoint outside 1..={n}"
                )));
            }
            if a == b {
                return Err(Error::Validation(format!(
                    "edge {{{a},{a}}} joins a vertex to itself; list it as a loop"
                )));
            }
            edge_set.insert((a.min(b), a.max(b)));
        }
        let mut loop_set = BTreeSet::new();
        for v in loops {
            if !in_range(v) {
                return Err(Error::Validation(format!("loop at {v} outside 1..={n}")));
            }
            loop_set.insert(v);
        }
        Ok(LoopGraph {
            n,
            edges: edge_set,
            loops: loop_set,
        })
    }

    /// `K_m` on `1..=m` with loops at the given vertices.
    pub fn complete(m: usize, loops: impl IntoIterator<Item = usize>) -> Result<Self> {
        let edges = (1..=m).flat_map(|i| (i + 1..=m).map(move |j| (i, j)));
        LoopGraph::new(m, edges, loops)
    }

    /// The star `K_{1,n-1}` with center `n` and leaves `1..n`.
    pub fn star(n: usize, loops: impl IntoIterator<Item = usize>) -> Result<Self> {
        LoopGraph::new(n, (1..n).map(|v| (v, n)), loops)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn loops(&self) -> &BTreeSet<usize> {
        &self.loops
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// The same graph with its loop set replaced.
    pub fn with_loops(&self, loops: impl IntoIterator<Item = usize>) -> Result<Self> {
        LoopGraph::new(self.n, self.edges.iter().copied(), loops)
    }

    /// Whether `vertices` meets every edge and contains every looped vertex.
    pub fn is_vertex_cover(&self, vertices: &BTreeSet<usize>) -> bool {
        self.loops.is_subset(vertices)
            && self
                .edges
                .iter()
                .all(|(a, b)| vertices.contains(a) || vertices.contains(b))
    }

    /// A cover from which no single vertex can be dropped.
    pub fn is_minimal_vertex_cover(&self, vertices: &BTreeSet<usize>) -> bool {
        self.is_vertex_cover(vertices)
            && vertices.iter().all(|v| {
                let mut smaller = vertices.clone();
                smaller.remove(v);
                !self.is_vertex_cover(&smaller)
            })
    }

    /// `I(G)`: `X_i X_j` per edge and `X_k^2` per loop.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let edge_gens = self
            .edges
            .iter()
            .map(|&(a, b)| Monomial::from_indices(self.n, &[a, b]));
        let loop_gens = self
            .loops
            .iter()
            .map(|&k| Monomial::from_indices(self.n, &[k, k]));
        let gens = edge_gens
            .chain(loop_gens)
            .collect::<Result<Vec<_>>>()
            .expect("graph indices are validated on construction");
        MonomialIdeal::new(self.n, gens).expect("generators share the graph's n")
    }
}

/// Wire form: `{"n": 11, "edges": [[1,2], ...], "loops": [2,5,7,11]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub loops: Vec<usize>,
}

impl TryFrom<GraphJson> for LoopGraph {
    type Error = Error;

    fn try_from(value: GraphJson) -> Result<Self> {
        LoopGraph::new(value.n, value.edges.into_iter().map(|[a, b]| (a, b)), value.loops)
    }
}

impl From<LoopGraph> for GraphJson {
    fn from(g: LoopGraph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(),
            loops: g.loops.iter().copied().collect(),
        }
    }
}

/// A K′-type graph: centers `α_1 < … < α_m = n` forming `K_m`, where block
/// `i` is the interval `(α_{i-1}, α_i]` and every non-center vertex of a block
/// hangs off its center. Loops may sit anywhere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "KPrimeJson", into = "KPrimeJson")]
pub struct KPrimeSpec {
    alphas: Vec<usize>,
    loops: BTreeSet<usize>,
}

impl KPrimeSpec {
    pub fn new(alphas: Vec<usize>, loops: impl IntoIterator<Item = usize>) -> Result<Self> {
        if alphas.len() < 2 {
            return Err(Error::Validation(format!(
                "a K′ graph needs m >= 2 centers, got {}",
                alphas.len()
            )));
        }
        if alphas[0] == 0 {
            return Err(Error::Validation("centers must be positive (α_1 >= 1)".into()));
        }
        if let Some(w) = alphas.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::Validation(format!(
                "centers must be strictly increasing, found {} then {}",
                w[0], w[1]
            )));
        }
        let n = *alphas.last().unwrap();
        let loops: BTreeSet<usize> = loops.into_iter().collect();
        if let Some(&bad) = loops.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::Validation(format!("loop at {bad} outside 1..={n}")));
        }
        Ok(KPrimeSpec { alphas, loops })
    }

    pub fn with_loops(&self, loops: impl IntoIterator<Item = usize>) -> Result<Self> {
        KPrimeSpec::new(self.alphas.clone(), loops)
    }

    /// The vertex count `n = α_m`.
    pub fn n(&self) -> usize {
        *self.alphas.last().unwrap()
    }

    /// Number of centers.
    pub fn m(&self) -> usize {
        self.alphas.len()
    }

    pub fn centers(&self) -> &[usize] {
        &self.alphas
    }

    pub fn loops(&self) -> &BTreeSet<usize> {
        &self.loops
    }

    pub fn is_center(&self, v: usize) -> bool {
        self.alphas.binary_search(&v).is_ok()
    }

    /// Vertex intervals of the blocks, center last in each.
    pub fn blocks(&self) -> impl Iterator<Item = RangeInclusive<usize>> + '_ {
        std::iter::once(0)
            .chain(self.alphas.iter().copied())
            .zip(self.alphas.iter().copied())
            .map(|(prev, alpha)| prev + 1..=alpha)
    }

    /// σ: the largest block (star) size.
    pub fn max_block_size(&self) -> usize {
        self.blocks().map(|b| b.count()).max().unwrap()
    }

    pub fn looped_center_count(&self) -> usize {
        self.alphas.iter().filter(|a| self.loops.contains(a)).count()
    }

    /// The explicit graph: `K_m` on the centers plus the star edges.
    pub fn expand(&self) -> LoopGraph {
        let centers = &self.alphas;
        let complete = centers
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| centers[i + 1..].iter().map(move |&b| (a, b)));
        let stars = self
            .blocks()
            .flat_map(|block| {
                let center = *block.end();
                block.filter(move |&v| v != center).map(move |v| (v, center))
            })
            .collect::<Vec<_>>();
        LoopGraph::new(self.n(), complete.chain(stars), self.loops.iter().copied())
            .expect("a valid spec expands to a valid graph")
    }
}

/// Wire form: `{"alphas": [3,6,8,9,12], "loops": [5,8,12]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KPrimeJson {
    pub alphas: Vec<usize>,
    #[serde(default)]
    pub loops: Vec<usize>,
}

impl TryFrom<KPrimeJson> for KPrimeSpec {
    type Error = Error;

    fn try_from(value: KPrimeJson) -> Result<Self> {
        KPrimeSpec::new(value.alphas, value.loops)
    }
}

impl From<KPrimeSpec> for KPrimeJson {
    fn from(spec: KPrimeSpec) -> Self {
        KPrimeJson {
            alphas: spec.alphas,
            loops: spec.loops.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn edges_of(g: &LoopGraph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn expand_five_center_example() {
        let spec = KPrimeSpec::new(vec![3, 6, 8, 9, 12], [5, 8, 12]).unwrap();
        let g = spec.expand();
        assert_eq!(g.n(), 12);
        let centers = [3, 6, 8, 9, 12];
        let mut expected: Vec<(usize, usize)> = Vec::new();
        for (i, &a) in centers.iter().enumerate() {
            for &b in &centers[i + 1..] {
                expected.push((a, b));
            }
        }
        expected.extend([(1, 3), (2, 3), (4, 6), (5, 6), (7, 8), (10, 12), (11, 12)]);
        expected.sort();
        assert_eq!(edges_of(&g), expected);
        assert_eq!(g.loops().iter().copied().collect::<Vec<_>>(), [5, 8, 12]);
    }

    #[test]
    fn expand_three_center_example() {
        let spec = KPrimeSpec::new(vec![4, 8, 11], [2, 5, 7, 11]).unwrap();
        let g = spec.expand();
        assert_eq!(g.n(), 11);
        assert_eq!(
            edges_of(&g),
            [
                (1, 4),
                (2, 4),
                (3, 4),
                (4, 8),
                (4, 11),
                (5, 8),
                (6, 8),
                (7, 8),
                (8, 11),
                (9, 11),
                (10, 11)
            ]
        );
        let ideal = g.edge_ideal();
        assert_eq!(ideal.len(), 15);
        for k in [2, 5, 7, 11] {
            let sq = Monomial::from_indices(11, &[k, k]).unwrap();
            assert!(ideal.gens().contains(&sq));
        }
        assert_eq!(ideal.gens().iter().filter(|g| g.is_squarefree()).count(), 11);
    }

    #[test]
    fn smallest_spec_is_a_single_edge() {
        let g = KPrimeSpec::new(vec![1, 2], []).unwrap().expand();
        assert_eq!(edges_of(&g), [(1, 2)]);
        assert!(g.loops().is_empty());
    }

    #[test]
    fn spec_validation_names_the_condition() {
        let err = KPrimeSpec::new(vec![4], []).unwrap_err();
        assert!(err.to_string().contains("m >= 2"), "{err}");
        let err = KPrimeSpec::new(vec![4, 4], []).unwrap_err();
        assert!(err.to_string().contains("strictly increasing"), "{err}");
        let err = KPrimeSpec::new(vec![0, 3], []).unwrap_err();
        assert!(err.to_string().contains("positive"), "{err}");
        let err = KPrimeSpec::new(vec![2, 3], [4]).unwrap_err();
        assert!(err.to_string().contains("loop at 4"), "{err}");
    }

    #[test]
    fn graph_validation() {
        assert!(LoopGraph::new(3, [(1, 1)], []).is_err());
        assert!(LoopGraph::new(3, [(1, 4)], []).is_err());
        assert!(LoopGraph::new(3, [], [0]).is_err());
        let g = LoopGraph::new(3, [(2, 1), (1, 2)], [3, 3]).unwrap();
        assert_eq!(edges_of(&g), [(1, 2)]);
        assert_eq!(g.loops().len(), 1);
    }

    #[test]
    fn edge_ideal_examples() {
        let tri = LoopGraph::complete(3, []).unwrap();
        assert_eq!(tri.edge_ideal().to_string(), "(X1*X2, X1*X3, X2*X3)");
        let lone = LoopGraph::new(1, [], [1]).unwrap();
        assert_eq!(lone.edge_ideal().to_string(), "(X1^2)");
    }

    #[test]
    fn json_forms() {
        let g: LoopGraph =
            serde_json::from_str(r#"{"n": 3, "edges": [[1,2],[2,3]], "loops": [2]}"#).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"n":3,"edges":[[1,2],[2,3]],"loops":[2]}"#
        );
        let s: KPrimeSpec = serde_json::from_str(r#"{"alphas": [3,6,8,9,12], "loops": [5,8,12]}"#).unwrap();
        assert_eq!(s.m(), 5);
        assert_eq!(s.max_block_size(), 3);
        assert!(serde_json::from_str::<KPrimeSpec>(r#"{"alphas": [3]}"#).is_err());
    }

    fn arb_spec() -> impl Strategy<Value = KPrimeSpec> {
        proptest::collection::vec(1usize..=4, 2..=5)
            .prop_flat_map(|sizes| {
                let n: usize = sizes.iter().sum();
                (Just(sizes), proptest::collection::btree_set(1..=n, 0..=n))
            })
            .prop_map(|(sizes, loops)| {
                let alphas = sizes
                    .iter()
                    .scan(0, |acc, s| {
                        *acc += s;
                        Some(*acc)
                    })
                    .collect();
                KPrimeSpec::new(alphas, loops).unwrap()
            })
    }

    proptest! {
        #[test]
        fn expansion_shape(spec in arb_spec()) {
            let g = spec.expand();
            let m = spec.m();
            let star_edges: usize = spec.blocks().map(|b| b.count() - 1).sum();
            prop_assert_eq!(g.edge_count(), m * (m - 1) / 2 + star_edges);
            for &c in spec.centers() {
                prop_assert!(g.degree(c) >= m - 1);
            }
            let ideal = g.edge_ideal();
            prop_assert_eq!(ideal.len(), g.edge_count() + g.loops().len());
            for gen in ideal.gens() {
                prop_assert_eq!(gen.degree(), 2);
                let squarefree = gen.is_squarefree();
                let loop_square = gen.support().len() == 1;
                prop_assert!(squarefree != loop_square);
            }
        }
    }
}
