//! Wheel graphs: an n-cycle of peripheral vertices plus a hub joined to all
//! of them, and the folded linear system behind their hitting times.

use num::BigRational;

use crate::graph::{self, MultiGraph};
use crate::matrix::RationalMatrix;
use crate::Error;

/// A validated wheel size: `n` peripheral vertices on the cycle plus the
/// centre, so `n + 1` vertices and `2n` edges in total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WheelSpec {
    n: usize,
}

/// A vertex of a wheel: the k-th cycle vertex (index taken mod the cycle
/// length) or the centre.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Vertex {
    Peripheral(usize),
    Center,
}

impl WheelSpec {
    /// Smallest supported cycle; anything shorter is not a wheel.
    pub const MIN_CYCLE: usize = 3;
    /// Largest supported cycle, chosen so that every sequence index the
    /// closed forms touch (at most 2n) stays inside the sequence bound.
    pub const MAX_CYCLE: usize = 500_000;

    pub fn new(n: usize) -> Result<Self, Error> {
        if (Self::MIN_CYCLE..=Self::MAX_CYCLE).contains(&n) {
            Ok(WheelSpec { n })
        } else {
            Err(Error::InvalidCycleLength {
                n,
                min: Self::MIN_CYCLE,
                max: Self::MAX_CYCLE,
            })
        }
    }

    /// Number of peripheral vertices.
    pub fn cycle_len(self) -> usize {
        self.n
    }

    /// Peripheral vertices plus the centre.
    pub fn vertex_count(self) -> usize {
        self.n + 1
    }

    /// Index of the centre in the flat vertex numbering `0..=n`.
    pub fn center_index(self) -> usize {
        self.n
    }

    pub fn is_odd(self) -> bool {
        self.n % 2 == 1
    }

    /// The k-th peripheral vertex, with `k` reduced modulo the cycle length.
    pub fn peripheral(self, k: i64) -> Vertex {
        Vertex::Peripheral(k.rem_euclid(self.n as i64) as usize)
    }

    /// Flat index of a vertex: peripheral `k` maps to `k mod n`, the centre
    /// to `n`.
    pub fn vertex_index(self, v: Vertex) -> usize {
        match v {
            Vertex::Peripheral(k) => k % self.n,
            Vertex::Center => self.n,
        }
    }

    /// Cycle distance from `a` round to `b` in the positive direction.
    pub fn cycle_offset(self, a: usize, b: usize) -> usize {
        (b % self.n + self.n - a % self.n) % self.n
    }

    /// Size of the folded hitting-time system: one unknown per cycle
    /// distance `1..=floor(n/2)` plus one for the centre.
    pub fn folded_size(self) -> usize {
        self.n / 2 + 1
    }
}

impl std::fmt::Display for Vertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Vertex::Peripheral(k) => write!(f, "p{k}"),
            Vertex::Center => f.write_str("center"),
        }
    }
}

/// Builds the wheel as a plain multigraph: cycle edges `k ~ k+1 (mod n)` and
/// a spoke from every peripheral vertex to the centre.
pub fn build_wheel(spec: WheelSpec) -> MultiGraph {
    let n = spec.cycle_len();
    let mut g = MultiGraph::new(n + 1);
    for k in 0..n {
        g.add_edge(k, (k + 1) % n);
        g.add_edge(k, spec.center_index());
    }
    g
}

/// The folded coefficient matrix of the hitting-time system with target
/// vertex 0.
///
/// Fixing the target at cycle vertex 0, the reflection `k -> n - k` preserves
/// hitting times, so unknowns pair up by cycle distance and the reduced
/// Laplacian folds to a system of size `floor(n/2) + 1`: rows are the first
/// unknown of each pair (distance `1..=floor(n/2)`) and the centre last.
/// Entries are written out case by case; [`folded_from_reduced`] rebuilds the
/// same matrix from the wheel's Laplacian and pins the two routes together.
pub fn folded_matrix(spec: WheelSpec) -> RationalMatrix {
    let n = spec.cycle_len();
    let m = spec.folded_size();
    let last = m - 1;
    let from_int = |v: i64| BigRational::from_integer(v.into());

    if spec.is_odd() {
        // The deepest cycle row sees its own mirror as a neighbour, hence the
        // smaller diagonal; the centre row sees every pair doubled.
        RationalMatrix::from_fn(m, m, |i, j| {
            from_int(if i == last {
                if j == last {
                    n as i64
                } else {
                    -2
                }
            } else if j == last {
                -1
            } else if i == j {
                if i + 1 == last {
                    2
                } else {
                    3
                }
            } else if i.abs_diff(j) == 1 {
                -1
            } else {
                0
            })
        })
    } else {
        // Even cycles have a self-paired vertex opposite the target: its
        // column stays single (centre row -1) and the row before it reaches
        // it along both arcs at once (-2).
        let opposite = last - 1;
        RationalMatrix::from_fn(m, m, |i, j| {
            from_int(if i == last {
                if j == last {
                    n as i64
                } else if j == opposite {
                    -1
                } else {
                    -2
                }
            } else if j == last {
                -1
            } else if i == opposite && j + 1 == opposite {
                -2
            } else if i == j {
                3
            } else if i.abs_diff(j) == 1 {
                -1
            } else {
                0
            })
        })
    }
}

/// Right-hand side of the folded system: 3 for each cycle row (that vertex's
/// degree) and `n` for the centre row.
pub fn folded_rhs(spec: WheelSpec) -> Vec<BigRational> {
    let m = spec.folded_size();
    (0..m)
        .map(|i| {
            if i + 1 == m {
                BigRational::from_integer(spec.cycle_len().into())
            } else {
                BigRational::from_integer(3.into())
            }
        })
        .collect()
}

/// Rebuilds [`folded_matrix`] directly from the wheel's reduced Laplacian by
/// merging each column with its mirror (`j` with `n - j`) in every row.
///
/// This keeps the hand-written case tables honest: the two constructions must
/// agree entry for entry.
pub fn folded_from_reduced(spec: WheelSpec) -> RationalMatrix {
    let n = spec.cycle_len();
    let reduced = graph::reduced_laplacian(&build_wheel(spec), 0)
        .expect("wheel has more than one vertex");
    // Row/column r of the reduced matrix is wheel vertex r + 1; the last one
    // (index n - 1) is the centre.
    let m = spec.folded_size();
    RationalMatrix::from_fn(m, m, |i, j| {
        let row = if i + 1 == m { n - 1 } else { i };
        if j + 1 == m {
            reduced[(row, n - 1)].clone()
        } else {
            let mirror = n - j - 2; // column of the vertex paired with j + 1
            if mirror == j {
                reduced[(row, j)].clone()
            } else {
                &reduced[(row, j)] + &reduced[(row, mirror)]
            }
        }
    })
}

/// Solves the folded system directly. Entry `d - 1` of the result is the
/// hitting time to vertex 0 from cycle distance `d`; the last entry is the
/// hitting time from the centre.
pub fn solve_folded_system(spec: WheelSpec) -> Vec<BigRational> {
    folded_matrix(spec)
        .solve(&folded_rhs(spec))
        .expect("folded matrix is nonsingular")
}
