//! Independent oracles that recompute everything from the raw graph.
//!
//! Nothing in this module knows about wheels or Fibonacci numbers: hitting
//! times come from solving the Laplacian system exactly, spanning trees from
//! a fraction-free determinant, and (for tiny graphs) from literally trying
//! every edge subset. The closed forms are only trusted because they agree
//! with these.

use num::{BigInt, BigRational, One, Zero};

use crate::graph::{reduced_laplacian, MultiGraph};
use crate::Error;

/// Expected hitting times to `target` from every vertex, by solving the
/// linear system the walk satisfies: at the target the time is zero, and at
/// any other vertex it is one step plus the multiplicity-weighted average
/// over the neighbours. Equivalently, the Laplacian with the target row and
/// column deleted, against the degree vector.
pub fn solve_hitting_system(g: &MultiGraph, target: usize) -> Result<Vec<BigRational>, Error> {
    let n = g.vertex_count();
    if target >= n {
        return Err(Error::VertexOutOfRange {
            vertex: target,
            vertex_count: n,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n == 1 {
        return Ok(vec![BigRational::zero()]);
    }

    let matrix = reduced_laplacian(g, target)?;
    let unmap = |i: usize| i + usize::from(i >= target);
    let rhs: Vec<BigRational> = (0..n - 1)
        .map(|i| BigRational::from_integer(g.degree(unmap(i)).into()))
        .collect();
    let solution = matrix.solve(&rhs)?;

    let mut times = vec![BigRational::zero(); n];
    for (i, value) in solution.into_iter().enumerate() {
        times[unmap(i)] = value;
    }
    Ok(times)
}

/// Effective resistance between `a` and `b` from hitting times alone: the
/// commute time `h(a, b) + h(b, a)` divided by twice the edge count.
pub fn commute_time_resistance(
    g: &MultiGraph,
    a: usize,
    b: usize,
) -> Result<BigRational, Error> {
    for v in [a, b] {
        if v >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: g.vertex_count(),
            });
        }
    }
    if a == b {
        return Err(Error::SameVertex);
    }
    let to_b = solve_hitting_system(g, b)?;
    let to_a = solve_hitting_system(g, a)?;
    let commute = &to_b[a] + &to_a[b];
    Ok(commute / BigRational::from_integer((2 * g.edge_count()).into()))
}

/// Number of spanning trees via the Laplacian cofactor, evaluated with the
/// fraction-free (Bareiss) elimination so every intermediate stays an
/// integer. Which row and column are deleted does not matter; this uses the
/// first. A single-vertex graph has exactly one spanning tree (the empty
/// one).
pub fn matrix_tree_count(g: &MultiGraph) -> BigInt {
    let n = g.vertex_count();
    assert!(n > 0, "tree count of the empty graph");
    if n == 1 {
        return BigInt::one();
    }
    laplacian_cofactor(g, 0)
}

/// The cofactor of the Laplacian with row and column `removed` deleted.
/// Every choice of `removed` yields the same value — the spanning-tree
/// count — which the tests exploit as a cross-check.
fn laplacian_cofactor(g: &MultiGraph, removed: usize) -> BigInt {
    let n = g.vertex_count();
    let size = n - 1;
    let keep: Vec<usize> = (0..n).filter(|&v| v != removed).collect();
    let mut minor: Vec<BigInt> = Vec::with_capacity(size * size);
    for &i in &keep {
        for &j in &keep {
            minor.push(if i == j {
                g.degree(i).into()
            } else {
                -BigInt::from(g.multiplicity(i, j))
            });
        }
    }
    bareiss_determinant(minor, size)
}

/// Fraction-free determinant of a flat row-major integer matrix. Interior
/// divisions are exact by construction, so the arithmetic never leaves the
/// integers.
fn bareiss_determinant(mut m: Vec<BigInt>, n: usize) -> BigInt {
    let mut sign = BigInt::one();
    let mut previous_pivot = BigInt::one();
    for k in 0..n {
        if m[k * n + k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for c in 0..n {
                m.swap(swap * n + c, k * n + c);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let numerator = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                debug_assert!((&numerator % &previous_pivot).is_zero());
                m[i * n + j] = numerator / &previous_pivot;
            }
            m[i * n + k] = BigInt::zero();
        }
        previous_pivot = m[k * n + k].clone();
    }
    sign * m[(n - 1) * n + (n - 1)].clone()
}

/// Maximum vertex count [`enumerate_spanning_trees`] accepts.
pub const ENUMERATION_MAX_VERTICES: usize = 8;
/// Maximum edge count (with multiplicity) [`enumerate_spanning_trees`] accepts.
pub const ENUMERATION_MAX_EDGES: u64 = 24;

/// Counts spanning trees by brute force: every edge, parallel copies
/// included, is a distinct labelled object, and every subset of size
/// `vertices - 1` is tested for being a spanning tree. Exponential on
/// purpose — it exists to check the determinant on small graphs — so inputs
/// beyond [`ENUMERATION_MAX_VERTICES`] / [`ENUMERATION_MAX_EDGES`] are
/// rejected.
pub fn enumerate_spanning_trees(g: &MultiGraph) -> Result<BigInt, Error> {
    let n = g.vertex_count();
    let e = g.edge_count();
    if n > ENUMERATION_MAX_VERTICES || e > ENUMERATION_MAX_EDGES {
        return Err(Error::EnumerationGuard {
            vertices: n,
            edges: e,
            max_vertices: ENUMERATION_MAX_VERTICES,
            max_edges: ENUMERATION_MAX_EDGES,
        });
    }
    if n <= 1 {
        return Ok(BigInt::one());
    }

    let edges: Vec<(usize, usize)> = g
        .edges()
        .flat_map(|(u, v, count)| std::iter::repeat((u, v)).take(count as usize))
        .collect();
    let want = (n - 1) as u32;
    let mut count = 0u64;
    for mask in 0u32..1u32 << edges.len() {
        if mask.count_ones() == want && selection_spans(mask, &edges, n) {
            count += 1;
        }
    }
    Ok(count.into())
}

/// Union-find over at most [`ENUMERATION_MAX_VERTICES`] vertices: a selection
/// of `n - 1` edges spans exactly when no edge closes a cycle.
fn selection_spans(mask: u32, edges: &[(usize, usize)], n: usize) -> bool {
    let mut parent: [usize; ENUMERATION_MAX_VERTICES] = [0, 1, 2, 3, 4, 5, 6, 7];
    fn root(parent: &mut [usize; ENUMERATION_MAX_VERTICES], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    debug_assert!(n <= ENUMERATION_MAX_VERTICES);
    for (k, &(u, v)) in edges.iter().enumerate() {
        if mask & (1 << k) == 0 {
            continue;
        }
        let (ru, rv) = (root(&mut parent, u), root(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wheel::{build_wheel, WheelSpec};

    fn rat(s: &str) -> BigRational {
        s.parse().unwrap()
    }

    fn path(n: usize) -> MultiGraph {
        let mut g = MultiGraph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    #[test]
    fn hitting_times_on_a_path_are_quadratic() {
        // On the path 0-1-2, the walk from 0 to 2 takes 4 steps on average.
        let times = solve_hitting_system(&path(3), 2).unwrap();
        assert_eq!(times, vec![rat("4"), rat("3"), rat("0")]);
    }

    #[test]
    fn hitting_times_on_the_square_wheel() {
        let g = build_wheel(WheelSpec::new(4).unwrap());
        let times = solve_hitting_system(&g, 0).unwrap();
        assert_eq!(times[4], rat("67/15"), "centre");
        assert_eq!(times[1], rat("64/15"));
        assert_eq!(times[2], rat("16/3"));
        assert_eq!(times[3], rat("64/15"));
        assert_eq!(times[0], rat("0"));
    }

    #[test]
    fn disconnected_graphs_are_rejected() {
        let mut g = MultiGraph::new(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        assert_eq!(solve_hitting_system(&g, 0).unwrap_err(), Error::Disconnected);
        assert!(matches!(
            solve_hitting_system(&path(3), 7),
            Err(Error::VertexOutOfRange { vertex: 7, .. })
        ));
    }

    #[test]
    fn commute_resistance_matches_series_circuits() {
        // A path of unit resistors: resistance between the ends is the length.
        assert_eq!(
            commute_time_resistance(&path(4), 0, 3).unwrap(),
            rat("3")
        );
        // Two parallel edges halve the resistance.
        let mut g = MultiGraph::new(2);
        g.add_parallel_edges(0, 1, 2);
        assert_eq!(commute_time_resistance(&g, 0, 1).unwrap(), rat("1/2"));
        assert_eq!(
            commute_time_resistance(&g, 1, 1).unwrap_err(),
            Error::SameVertex
        );
    }

    #[test]
    fn matrix_tree_small_cases() {
        // Complete graph on 4 vertices: 4^2 = 16 spanning trees.
        let k4 = build_wheel(WheelSpec::new(3).unwrap());
        assert_eq!(matrix_tree_count(&k4), BigInt::from(16));
        // A tree has exactly one spanning tree; a single vertex too.
        assert_eq!(matrix_tree_count(&path(5)), BigInt::one());
        assert_eq!(matrix_tree_count(&MultiGraph::new(1)), BigInt::one());
        // Cycle of length 5: five trees. parallel pair doubles a cut edge.
        let mut c5 = path(5);
        c5.add_edge(4, 0);
        assert_eq!(matrix_tree_count(&c5), BigInt::from(5));
        // Identifying two vertices of K4 leaves det [[3,-1],[-1,3]] = 8.
        let merged = crate::graph::identify_vertices(&k4, 0, 1).unwrap();
        assert_eq!(matrix_tree_count(&merged), BigInt::from(8));
    }

    #[test]
    fn four_cycle_has_four_trees() {
        let mut g = MultiGraph::new(4);
        g.add_edge(0, 3);
        g.add_edge(3, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 0);
        assert_eq!(matrix_tree_count(&g), BigInt::from(4));
    }

    #[test]
    fn disconnected_graph_has_no_spanning_tree() {
        let mut g = MultiGraph::new(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        assert_eq!(matrix_tree_count(&g), BigInt::zero());
        assert_eq!(enumerate_spanning_trees(&g).unwrap(), BigInt::zero());
    }

    #[test]
    fn enumeration_agrees_with_determinant() {
        for n in 3..=6 {
            let g = build_wheel(WheelSpec::new(n).unwrap());
            assert_eq!(
                enumerate_spanning_trees(&g).unwrap(),
                matrix_tree_count(&g),
                "wheel with cycle {n}"
            );
        }
        // Multigraph: doubled triangle edge.
        let mut g = MultiGraph::new(3);
        g.add_parallel_edges(0, 1, 2);
        g.add_edge(1, 2);
        g.add_edge(2, 0);
        assert_eq!(enumerate_spanning_trees(&g).unwrap(), BigInt::from(5));
        assert_eq!(matrix_tree_count(&g), BigInt::from(5));
    }

    #[test]
    fn enumeration_guard_reports_limits() {
        let g = build_wheel(WheelSpec::new(13).unwrap());
        let err = enumerate_spanning_trees(&g).unwrap_err();
        assert_eq!(
            err,
            Error::EnumerationGuard {
                vertices: 14,
                edges: 26,
                max_vertices: 8,
                max_edges: 24
            }
        );
    }

    #[test]
    fn any_deleted_row_gives_the_same_cofactor() {
        let g = build_wheel(WheelSpec::new(6).unwrap());
        let expected = matrix_tree_count(&g);
        for removed in [2, 4, 6] {
            assert_eq!(laplacian_cofactor(&g, removed), expected);
        }
    }

    mod random_graphs {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn enumeration_matches_determinant_on_small_multigraphs(
                n in 2usize..=6,
                raw in proptest::collection::vec((0usize..6, 0usize..6, 1u64..=2), 0..10),
            ) {
                let mut g = MultiGraph::new(n);
                let mut budget = ENUMERATION_MAX_EDGES;
                for (a, b, multiplicity) in raw {
                    let (a, b) = (a % n, b % n);
                    if a == b || multiplicity > budget {
                        continue;
                    }
                    g.add_parallel_edges(a, b, multiplicity);
                    budget -= multiplicity;
                }
                // Disconnected graphs agree too: both sides count zero.
                prop_assert_eq!(enumerate_spanning_trees(&g).unwrap(), matrix_tree_count(&g));
            }
        }
    }
}
