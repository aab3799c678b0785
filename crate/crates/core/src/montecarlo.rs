//! Monte Carlo estimation of hitting times by simulating the walk itself.
//!
//! The estimator is deterministic given `(seed, walks)`: each walk gets its
//! own stream cipher keyed by the seed and the walk index, and aggregation
//! happens in exact integer arithmetic, so neither thread count nor
//! completion order can change the result.

use num::BigRational;
use num::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::graph::MultiGraph;
use crate::Error;

/// A walk that has not reached its target after this many steps aborts.
/// Hitting times on desk-scale connected graphs are orders of magnitude
/// smaller, so tripping the cap means the target is unreachable.
pub const STEP_CAP: u64 = 1_000_000_000;

/// Sample summary of repeated hitting-time walks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WalkEstimate {
    /// Vertex every walk started from.
    pub source: usize,
    /// Vertex the walks ran until reaching.
    pub target: usize,
    /// Sample mean of the step counts.
    pub mean: f64,
    /// Standard error of the mean (unbiased sample variance over the walk
    /// count, square-rooted).
    pub std_error: f64,
    /// Number of walks behind the estimate.
    pub walks: u64,
    /// Seed the estimate is reproducible from.
    pub seed: u64,
}

impl WalkEstimate {
    /// Whether `exact` lies within `width` standard errors of the mean.
    pub fn covers(&self, exact: &BigRational, width: f64) -> bool {
        let exact = exact.to_f64().expect("hitting times fit in f64");
        (self.mean - exact).abs() <= width * self.std_error
    }
}

/// Runs one walk from `source` until it first reaches `target`, returning
/// the number of steps. Steps move to a neighbour with probability
/// proportional to edge multiplicity.
pub fn simulate_walk<R: Rng>(
    g: &MultiGraph,
    source: usize,
    target: usize,
    rng: &mut R,
) -> Result<u64, Error> {
    for v in [source, target] {
        if v >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: g.vertex_count(),
            });
        }
    }
    let mut at = source;
    let mut steps = 0u64;
    while at != target {
        if steps == STEP_CAP {
            return Err(Error::StepCapExceeded { cap: STEP_CAP });
        }
        let degree = g.degree(at);
        if degree == 0 {
            return Err(Error::Disconnected);
        }
        let mut pick = rng.random_range(0..degree);
        for &(neighbor, multiplicity) in g.neighbors(at) {
            if pick < multiplicity {
                at = neighbor;
                break;
            }
            pick -= multiplicity;
        }
        steps += 1;
    }
    Ok(steps)
}

/// Estimates the expected hitting time from `source` to `target` over
/// `walks` independent walks.
///
/// Walks run in parallel; determinism survives because walk `i` draws from
/// [`walk_rng`]`(seed, i)` and the per-walk step counts are combined by
/// exact integer sums before any floating-point arithmetic happens.
pub fn estimate_hitting_time(
    g: &MultiGraph,
    source: usize,
    target: usize,
    walks: u64,
    seed: u64,
) -> Result<WalkEstimate, Error> {
    if walks < 2 {
        return Err(Error::TooFewWalks(walks));
    }
    let (sum, sum_of_squares) = (0..walks)
        .into_par_iter()
        .map(|walk| {
            let mut rng = walk_rng(seed, walk);
            let steps = simulate_walk(g, source, target, &mut rng)? as u128;
            Ok((steps, steps * steps))
        })
        .try_reduce(|| (0u128, 0u128), |a, b| Ok((a.0 + b.0, a.1 + b.1)))?;

    let count = walks as f64;
    let mean = sum as f64 / count;
    // Unbiased sample variance from the exact sums; clamp tiny negative
    // floating-point residue when all walks took the same number of steps.
    let variance =
        ((sum_of_squares as f64) - (sum as f64) * (sum as f64) / count) / (count - 1.0);
    let std_error = (variance.max(0.0) / count).sqrt();
    Ok(WalkEstimate {
        source,
        target,
        mean,
        std_error,
        walks,
        seed,
    })
}

/// The random stream for one walk: ChaCha8 keyed directly by the seed and
/// the walk index in disjoint key bytes, so distinct walks can never share a
/// stream and the assignment is independent of scheduling.
fn walk_rng(seed: u64, walk: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&walk.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}
