//! Loop-free undirected multigraphs and their Laplacians.
//!
//! This is the neutral ground the verification oracles work on: they never
//! see a wheel as anything other than an ordinary multigraph, which is what
//! makes their answers independent of the closed forms.

use std::collections::BTreeMap;

use num::BigRational;

use crate::matrix::RationalMatrix;
use crate::Error;

/// An undirected multigraph on vertices `0..vertex_count`, without loops.
/// Parallel edges are stored as multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    adjacency: Vec<Vec<(usize, u64)>>,
}

impl MultiGraph {
    /// An edgeless graph on `vertex_count` vertices.
    pub fn new(vertex_count: usize) -> Self {
        MultiGraph {
            adjacency: vec![Vec::new(); vertex_count],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Adds one edge between distinct vertices `u` and `v`, on top of any
    /// parallel edges already present.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.add_parallel_edges(u, v, 1);
    }

    /// Adds `count` parallel edges between distinct vertices `u` and `v`.
    pub fn add_parallel_edges(&mut self, u: usize, v: usize, count: u64) {
        let n = self.vertex_count();
        assert!(u < n && v < n, "edge endpoint out of range");
        assert_ne!(u, v, "loops are not allowed");
        if count == 0 {
            return;
        }
        for (a, b) in [(u, v), (v, u)] {
            match self.adjacency[a].iter_mut().find(|(w, _)| *w == b) {
                Some((_, multiplicity)) => *multiplicity += count,
                None => self.adjacency[a].push((b, count)),
            }
        }
    }

    /// Neighbours of `v` with multiplicities, in insertion order.
    pub fn neighbors(&self, v: usize) -> &[(usize, u64)] {
        &self.adjacency[v]
    }

    /// Number of parallel edges between `u` and `v` (zero if none).
    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        self.adjacency[u]
            .iter()
            .find(|(w, _)| *w == v)
            .map_or(0, |(_, m)| *m)
    }

    /// Degree of `v`, counting each parallel edge separately.
    pub fn degree(&self, v: usize) -> u64 {
        self.adjacency[v].iter().map(|(_, m)| m).sum()
    }

    /// Total number of edges, counting multiplicities.
    pub fn edge_count(&self) -> u64 {
        let double: u64 = (0..self.vertex_count()).map(|v| self.degree(v)).sum();
        double / 2
    }

    /// Iterates over distinct vertex pairs with an edge, as `(u, v, count)`
    /// with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |(v, _)| u < *v)
                .map(move |&(v, m)| (u, v, m))
        })
    }

    /// Breadth-first connectivity check. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        let mut visited = 1;
        while let Some(v) = queue.pop_front() {
            for &(w, _) in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    visited += 1;
                    queue.push_back(w);
                }
            }
        }
        visited == n
    }

    fn check_vertex(&self, v: usize) -> Result<(), Error> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        }
    }
}

/// The graph Laplacian D - A as an exact rational matrix, with multiplicities
/// counted in both the degree diagonal and the adjacency entries.
pub fn laplacian(g: &MultiGraph) -> RationalMatrix {
    let n = g.vertex_count();
    assert!(n > 0, "Laplacian of the empty graph");
    RationalMatrix::from_fn(n, n, |i, j| {
        if i == j {
            BigRational::from_integer(g.degree(i).into())
        } else {
            -BigRational::from_integer(g.multiplicity(i, j).into())
        }
    })
}

/// The Laplacian with row and column `removed` deleted. Row/column `i` of the
/// result corresponds to original vertex `i` when `i < removed` and `i + 1`
/// otherwise.
pub fn reduced_laplacian(g: &MultiGraph, removed: usize) -> Result<RationalMatrix, Error> {
    g.check_vertex(removed)?;
    assert!(g.vertex_count() >= 2, "nothing left after deleting the row");
    let unmap = |i: usize| i + usize::from(i >= removed);
    Ok(RationalMatrix::from_fn(
        g.vertex_count() - 1,
        g.vertex_count() - 1,
        |i, j| {
            let (vi, vj) = (unmap(i), unmap(j));
            if vi == vj {
                BigRational::from_integer(g.degree(vi).into())
            } else {
                -BigRational::from_integer(g.multiplicity(vi, vj).into())
            }
        },
    ))
}

/// Merges vertices `u` and `v` into one, keeping all other edges.
///
/// Edges formerly running between the pair disappear (they would become
/// loops); edges to a common neighbour pile up as multiplicities. The merged
/// vertex takes the smaller of the two indices and everything above the
/// larger index shifts down by one.
pub fn identify_vertices(g: &MultiGraph, u: usize, v: usize) -> Result<MultiGraph, Error> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex);
    }
    let (low, high) = (u.min(v), u.max(v));
    let map = |w: usize| {
        if w == high {
            low
        } else if w > high {
            w - 1
        } else {
            w
        }
    };

    let mut merged: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for (a, b, count) in g.edges() {
        let (ma, mb) = (map(a), map(b));
        if ma == mb {
            continue; // the identified pair's own edges become loops and drop
        }
        *merged.entry((ma.min(mb), ma.max(mb))).or_insert(0) += count;
    }

    let mut result = MultiGraph::new(g.vertex_count() - 1);
    for ((a, b), count) in merged {
        result.add_parallel_edges(a, b, count);
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;

    fn triangle() -> MultiGraph {
        let mut g = MultiGraph::new(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 0);
        g
    }

    #[test]
    fn multiplicities_accumulate() {
        let mut g = MultiGraph::new(2);
        g.add_edge(0, 1);
        g.add_parallel_edges(1, 0, 2);
        assert_eq!(g.multiplicity(0, 1), 3);
        assert_eq!(g.multiplicity(1, 0), 3);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1, 3)]);
    }

    #[test]
    fn connectivity() {
        assert!(triangle().is_connected());
        let mut g = MultiGraph::new(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        assert!(!g.is_connected());
        assert!(MultiGraph::new(1).is_connected());
    }

    #[test]
    fn laplacian_of_triangle() {
        let l = laplacian(&triangle());
        let expected =
            RationalMatrix::from_integer_rows(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        assert_eq!(l, expected);
        // Row sums of a Laplacian vanish.
        for i in 0..3 {
            let sum = (0..3).fold(BigRational::zero(), |acc, j| acc + &l[(i, j)]);
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn reduced_laplacian_deletes_row_and_column() {
        let r = reduced_laplacian(&triangle(), 1).unwrap();
        assert_eq!(
            r,
            RationalMatrix::from_integer_rows(&[vec![2, -1], vec![-1, 2]])
        );
        assert!(matches!(
            reduced_laplacian(&triangle(), 3),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn identify_merges_and_drops_internal_edges() {
        // Square 0-1-2-3 plus diagonal 0-2; identify 0 and 2.
        let mut g = MultiGraph::new(4);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 0);
        g.add_edge(0, 2);
        let merged = identify_vertices(&g, 0, 2).unwrap();
        assert_eq!(merged.vertex_count(), 3);
        // Old vertex 3 becomes 2; vertex 1 keeps its index.
        assert_eq!(merged.multiplicity(0, 1), 2);
        assert_eq!(merged.multiplicity(0, 2), 2);
        assert_eq!(merged.multiplicity(1, 2), 0);
        assert_eq!(merged.edge_count(), 4);
    }

    #[test]
    fn identify_rejects_bad_input() {
        let g = triangle();
        assert_eq!(identify_vertices(&g, 1, 1).unwrap_err(), Error::SameVertex);
        assert!(matches!(
            identify_vertices(&g, 0, 9),
            Err(Error::VertexOutOfRange { vertex: 9, .. })
        ));
    }

    mod random_graphs {
        use super::*;
        use proptest::prelude::*;

        fn build(n: usize, raw: Vec<(usize, usize, u64)>) -> MultiGraph {
            let mut g = MultiGraph::new(n);
            for (a, b, multiplicity) in raw {
                let (a, b) = (a % n, b % n);
                if a != b {
                    g.add_parallel_edges(a, b, multiplicity);
                }
            }
            g
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn laplacian_is_symmetric_with_zero_row_sums(
                n in 2usize..=7,
                raw in proptest::collection::vec((0usize..7, 0usize..7, 1u64..=3), 0..12),
            ) {
                let g = build(n, raw);
                let l = laplacian(&g);
                for i in 0..n {
                    let mut row_sum = BigRational::zero();
                    for j in 0..n {
                        prop_assert_eq!(&l[(i, j)], &l[(j, i)]);
                        row_sum += &l[(i, j)];
                    }
                    prop_assert!(row_sum.is_zero());
                }
            }

            #[test]
            fn identification_conserves_the_other_edges(
                n in 3usize..=7,
                raw in proptest::collection::vec((0usize..7, 0usize..7, 1u64..=3), 0..12),
                u in 0usize..7,
                v in 0usize..7,
            ) {
                let g = build(n, raw);
                let (u, v) = (u % n, v % n);
                prop_assume!(u != v);
                let merged = identify_vertices(&g, u, v).unwrap();
                // Merging keeps every edge except the u-v bundle, which
                // would become loops.
                prop_assert_eq!(
                    merged.edge_count(),
                    g.edge_count() - g.multiplicity(u, v)
                );
                prop_assert_eq!(merged.vertex_count(), g.vertex_count() - 1);
            }
        }
    }
}
