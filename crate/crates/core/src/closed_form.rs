//! Closed-form answers on wheels: hitting times, effective resistances, and
//! spanning-tree counts, all expressed through Fibonacci and Lucas numbers.
//!
//! Each quantity comes in two parities — odd cycles work in Fibonacci
//! numbers, even cycles in Lucas numbers — with the same shape. The
//! verification oracles recompute every one of these from the raw graph.

use num::{BigInt, BigRational, Zero};

use crate::sequences::{fib, luc};
use crate::wheel::{Vertex, WheelSpec};
use crate::{matrix::RationalMatrix, Error};

/// F_k or L_k depending on the parity the wheel works in.
fn seq(odd: bool, k: i64) -> BigInt {
    if odd {
        fib(k)
    } else {
        luc(k)
    }
}

/// The common denominator S_{n-1} + S_{n+1} (S = F for odd cycles, L for
/// even ones).
fn parity_denominator(spec: WheelSpec) -> BigInt {
    let n = spec.cycle_len() as i64;
    seq(spec.is_odd(), n - 1) + seq(spec.is_odd(), n + 1)
}

/// Expected number of steps for the simple random walk started at `source`
/// to first reach `target`.
///
/// Peripheral indices reduce modulo the cycle length; a walk already at its
/// target has hitting time zero. Rotation symmetry reduces any peripheral
/// pair to the cycle distance between them, and a start at the centre sees
/// every target the same way, so three formulas cover the whole wheel:
///
/// * peripheral to peripheral at distance l: `4n (S_n - S_{n-2l}) /
///   (S_{n-1} + S_{n+1})`,
/// * centre to peripheral: `((4n-3) S_{n+1} - (4n+3) S_{n-1}) /
///   (S_{n-1} + S_{n+1})`,
/// * peripheral to centre: exactly 3, for every wheel — the centre pulls on
///   every vertex equally.
pub fn hitting_time(spec: WheelSpec, source: Vertex, target: Vertex) -> BigRational {
    let n = spec.cycle_len() as i64;
    let odd = spec.is_odd();
    let s = |k: i64| seq(odd, k);

    if spec.vertex_index(source) == spec.vertex_index(target) {
        return BigRational::zero();
    }
    match (source, target) {
        (Vertex::Peripheral(a), Vertex::Peripheral(b)) => {
            let l = spec.cycle_offset(a, b) as i64;
            let numerator = 4 * n * (s(n) - s(n - 2 * l));
            BigRational::new(numerator, parity_denominator(spec))
        }
        (Vertex::Center, Vertex::Peripheral(_)) => {
            let numerator = (4 * n - 3) * s(n + 1) - (4 * n + 3) * s(n - 1);
            BigRational::new(numerator, parity_denominator(spec))
        }
        (Vertex::Peripheral(_), Vertex::Center) => BigRational::from_integer(3.into()),
        (Vertex::Center, Vertex::Center) => unreachable!("equal vertices handled above"),
    }
}

/// Effective resistance between two distinct wheel vertices when every edge
/// is a unit resistor: `2 (S_n - S_{n-2l}) / (S_{n-1} + S_{n+1})` across the
/// cycle, `S_n / (S_{n-1} + S_{n+1})` from the centre.
pub fn effective_resistance(spec: WheelSpec, a: Vertex, b: Vertex) -> Result<BigRational, Error> {
    let n = spec.cycle_len() as i64;
    let odd = spec.is_odd();
    let s = |k: i64| seq(odd, k);

    if spec.vertex_index(a) == spec.vertex_index(b) {
        return Err(Error::SameVertex);
    }
    let numerator = match (a, b) {
        (Vertex::Peripheral(a), Vertex::Peripheral(b)) => {
            let l = spec.cycle_offset(a, b) as i64;
            2 * (s(n) - s(n - 2 * l))
        }
        _ => s(n), // one endpoint is the centre
    };
    Ok(BigRational::new(numerator, parity_denominator(spec)))
}

/// Number of spanning trees of the wheel: `L_{2n} - 2`.
pub fn spanning_tree_count(spec: WheelSpec) -> BigInt {
    luc(2 * spec.cycle_len() as i64) - 2
}

/// Number of spanning trees of the graph obtained by identifying two
/// distinct wheel vertices.
///
/// Odd cycles give products of Fibonacci numbers outright; even cycles give
/// a Lucas expression with the parity denominator, which always divides out
/// — a remainder would mean the formula was transcribed wrong, and is
/// reported as an error rather than rounded away.
pub fn identified_tree_count(spec: WheelSpec, a: Vertex, b: Vertex) -> Result<BigInt, Error> {
    let n = spec.cycle_len() as i64;

    if spec.vertex_index(a) == spec.vertex_index(b) {
        return Err(Error::SameVertex);
    }
    match (a, b) {
        (Vertex::Peripheral(a), Vertex::Peripheral(b)) => {
            let l = spec.cycle_offset(a, b) as i64;
            if spec.is_odd() {
                Ok(2 * (fib(n) - fib(n - 2 * l)) * (fib(n - 1) + fib(n + 1)))
            } else {
                let numerator =
                    2 * (luc(n) - luc(n - 2 * l)) * (luc(n) - 2) * (luc(n) + 2);
                exact_integer(BigRational::new(numerator, parity_denominator(spec)))
            }
        }
        _ => {
            // One endpoint is the centre.
            if spec.is_odd() {
                Ok(fib(n) * (fib(n - 1) + fib(n + 1)))
            } else {
                let numerator = luc(n) * (luc(n) - 2) * (luc(n) + 2);
                exact_integer(BigRational::new(numerator, parity_denominator(spec)))
            }
        }
    }
}

fn exact_integer(value: BigRational) -> Result<BigInt, Error> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegerTreeCount(value.to_string()))
    }
}

/// The inverse of the folded hitting-time matrix, written entry by entry.
///
/// Indices below are 1-based to match the natural statement: row/column
/// `floor(n/2) + 1` is the centre, and for even cycles column `n/2` (the
/// self-paired vertex opposite the target) gets its own cases. Multiplying
/// by [`crate::wheel::folded_matrix`] must give the identity exactly.
pub fn inverse_folded_matrix(spec: WheelSpec) -> RationalMatrix {
    let n = spec.cycle_len() as i64;
    let m = spec.folded_size();
    let den = parity_denominator(spec);
    let last = m as i64;

    if spec.is_odd() {
        RationalMatrix::from_fn(m, m, |i0, j0| {
            let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
            let numerator = if i == last && j == last {
                fib(n)
            } else if i == last {
                2 * (fib(n) - fib(n - 2 * j))
            } else if j == last {
                fib(n) - fib(n - 2 * i)
            } else if i < j {
                2 * (fib(n) - fib(n - 2 * i)) + fib(n - 2 * j) * (luc(2 * i) - 2)
            } else {
                2 * (fib(n) - fib(n - 2 * j)) + fib(n - 2 * i) * (luc(2 * j) - 2)
            };
            BigRational::new(numerator, den.clone())
        })
    } else {
        let mid = last - 1; // column of the vertex opposite the target
        RationalMatrix::from_fn(m, m, |i0, j0| {
            let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
            let numerator = if i == last && j == last {
                luc(n)
            } else if i == last && j == mid {
                luc(n) - 2
            } else if i == last {
                2 * (luc(n) - luc(n - 2 * j))
            } else if j == last {
                luc(n) - luc(n - 2 * i)
            } else if j == mid {
                luc(n) - luc(n - 2 * i) + luc(2 * i) - 2
            } else if j < i {
                2 * (luc(n) - luc(n - 2 * j)) + luc(n - 2 * i) * (luc(2 * j) - 2)
            } else {
                2 * (luc(n) - luc(n - 2 * i)) + luc(n - 2 * j) * (luc(2 * i) - 2)
            };
            BigRational::new(numerator, den.clone())
        })
    }
}
