//! Fibonacci and Lucas numbers on signed indices, plus a catalogue of
//! identities relating them.
//!
//! Everything downstream (folded matrices, closed-form hitting times,
//! spanning-tree counts) reduces to these two sequences, so the checkable
//! identity catalogue doubles as a self-test surface: `verify` sweeps it over
//! index ranges and expects each identity to hold exactly as advertised.

use num::{BigInt, One, Zero};

use crate::Error;

/// Signed index into the Fibonacci or Lucas sequence.
pub type SeqIndex = i64;

/// Largest |index| accepted by [`fibonacci`] and [`lucas`]. Indices beyond
/// this produce numbers of hundreds of kilobytes and are rejected rather than
/// silently ground through.
pub const INDEX_BOUND: i64 = 1_000_000;

fn check_index(k: SeqIndex) -> Result<(), Error> {
    if k.unsigned_abs() > INDEX_BOUND as u64 {
        Err(Error::IndexOutOfRange {
            index: k,
            bound: INDEX_BOUND,
        })
    } else {
        Ok(())
    }
}

/// F_k for any signed k, with F_0 = 0, F_1 = 1, F_{k+2} = F_{k+1} + F_k.
/// Negative indices follow the reflection F_{-k} = (-1)^{k+1} F_k.
pub fn fibonacci(k: SeqIndex) -> Result<BigInt, Error> {
    check_index(k)?;
    let magnitude = iterate(k.unsigned_abs(), BigInt::zero(), BigInt::one());
    if k < 0 && k % 2 == 0 {
        Ok(-magnitude)
    } else {
        Ok(magnitude)
    }
}

/// L_k for any signed k, with L_0 = 2, L_1 = 1 and the same recurrence.
/// Negative indices follow the reflection L_{-k} = (-1)^k L_k.
pub fn lucas(k: SeqIndex) -> Result<BigInt, Error> {
    check_index(k)?;
    let magnitude = iterate(k.unsigned_abs(), BigInt::from(2), BigInt::one());
    if k < 0 && k % 2 != 0 {
        Ok(-magnitude)
    } else {
        Ok(magnitude)
    }
}

/// Runs the shared recurrence `n` steps from the given seeds and returns the
/// n-th term. Linear in `n`; exactness matters here more than speed.
fn iterate(n: u64, mut a: BigInt, mut b: BigInt) -> BigInt {
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Infallible F_k for indices the caller already knows are in range.
pub(crate) fn fib(k: SeqIndex) -> BigInt {
    fibonacci(k).expect("sequence index within bound")
}

/// Infallible L_k for indices the caller already knows are in range.
pub(crate) fn luc(k: SeqIndex) -> BigInt {
    lucas(k).expect("sequence index within bound")
}

/// Identities over the Fibonacci and Lucas sequences.
///
/// Most hold for every integer assignment of their parameters; the two
/// exceptions are kept in the catalogue precisely because they circulate in
/// print and do *not* hold in general. [`Identity::always_holds`] separates
/// the two groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// F_{2n-2} - 3 F_{2n} + F_{2n+2} = 0
    FibDoubleStep,
    /// F_{-n} = (-1)^{n+1} F_n
    FibNegation,
    /// L_{-n} = (-1)^n L_n
    LucasNegation,
    /// L_{2n} = L_n^2 - 2 (-1)^n
    LucasDoubling,
    /// L_{2n} - 2 = L_n^2 — the odd-n restriction of [`Identity::LucasDoubling`];
    /// fails for every even n (already at n = 2: 45 vs 49).
    LucasDoublingOddIndex,
    /// L_{2n-2} - 3 L_{2n} + L_{2n+2} = 0
    LucasDoubleStep,
    /// F_m L_n = F_{m+n} + (-1)^n F_{m-n}
    FibLucasProduct,
    /// F_n L_{m+1} + F_{n-1} L_m = L_{m+n}
    LucasAddition,
    /// F_n^2 - F_{n-r} F_{n+r} = (-1)^{n-r} F_r^2
    Catalan,
    /// F_n - F_{n-r} F_{n+r} = (-1)^{n-r} F_r^2 — a misprint of
    /// [`Identity::Catalan`] with the square dropped from the leading term;
    /// fails already at n = 3, r = 1.
    CatalanUnsquared,
    /// F_n^2 + F_{n+1}^2 = F_{2n+1}
    FibSquareSum,
    /// sum_{k=1}^{n-l} F_{2k-1} = F_{2n-2l}, for n - l >= 0
    OddFibSum,
    /// sum_{k=1}^{l} L_{2k} = L_{2l+1} - 1, for l >= 0
    EvenLucasSum,
}

impl Identity {
    /// Every identity in the catalogue, in a stable reporting order.
    pub const ALL: [Identity; 13] = [
        Identity::FibDoubleStep,
        Identity::FibNegation,
        Identity::LucasNegation,
        Identity::LucasDoubling,
        Identity::LucasDoublingOddIndex,
        Identity::LucasDoubleStep,
        Identity::FibLucasProduct,
        Identity::LucasAddition,
        Identity::Catalan,
        Identity::CatalanUnsquared,
        Identity::FibSquareSum,
        Identity::OddFibSum,
        Identity::EvenLucasSum,
    ];

    /// Stable name used in error messages and reports.
    pub fn name(self) -> &'static str {
        match self {
            Identity::FibDoubleStep => "fib-double-step",
            Identity::FibNegation => "fib-negation",
            Identity::LucasNegation => "lucas-negation",
            Identity::LucasDoubling => "lucas-doubling",
            Identity::LucasDoublingOddIndex => "lucas-doubling-odd-index",
            Identity::LucasDoubleStep => "lucas-double-step",
            Identity::FibLucasProduct => "fib-lucas-product",
            Identity::LucasAddition => "lucas-addition",
            Identity::Catalan => "catalan",
            Identity::CatalanUnsquared => "catalan-unsquared",
            Identity::FibSquareSum => "fib-square-sum",
            Identity::OddFibSum => "odd-fib-sum",
            Identity::EvenLucasSum => "even-lucas-sum",
        }
    }

    /// Parameter names [`check_identity`] expects for this identity.
    pub fn parameter_names(self) -> &'static [&'static str] {
        match self {
            Identity::FibDoubleStep
            | Identity::FibNegation
            | Identity::LucasNegation
            | Identity::LucasDoubling
            | Identity::LucasDoublingOddIndex
            | Identity::LucasDoubleStep
            | Identity::FibSquareSum => &["n"],
            Identity::FibLucasProduct | Identity::LucasAddition => &["m", "n"],
            Identity::Catalan | Identity::CatalanUnsquared => &["n", "r"],
            Identity::OddFibSum => &["n", "l"],
            Identity::EvenLucasSum => &["l"],
        }
    }

    /// Whether the identity is true for every in-range parameter assignment.
    /// The two `false` entries are known-bad printed forms kept so that
    /// verification can demonstrate where they break.
    pub fn always_holds(self) -> bool {
        !matches!(
            self,
            Identity::LucasDoublingOddIndex | Identity::CatalanUnsquared
        )
    }
}

impl std::fmt::Display for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Evaluates both sides of `identity` at the given parameters and reports
/// whether they agree.
///
/// Parameters are name/value pairs; extras are ignored, missing ones are an
/// error naming the parameter. The summation identities additionally reject
/// assignments that would give the sum a negative upper limit.
pub fn check_identity(identity: Identity, params: &[(&str, SeqIndex)]) -> Result<bool, Error> {
    let get = |name: &'static str| -> Result<i64, Error> {
        params
            .iter()
            .find(|(key, _)| *key == name)
            .map(|(_, value)| *value)
            .ok_or(Error::MissingParameter {
                identity: identity.name(),
                name,
            })
    };
    // Reject out-of-bound parameters up front: every identity evaluates the
    // sequences at an index at least as large as its raw parameters, and the
    // early check keeps the small index arithmetic below overflow-free.
    for (_, value) in params {
        check_index(*value)?;
    }

    let sign = |exponent: i64| -> BigInt {
        if exponent.rem_euclid(2) == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };

    match identity {
        Identity::FibDoubleStep => {
            let n = get("n")?;
            let value: BigInt =
                fibonacci(2 * n - 2)? - 3 * fibonacci(2 * n)? + fibonacci(2 * n + 2)?;
            Ok(value.is_zero())
        }
        Identity::FibNegation => {
            let n = get("n")?;
            Ok(fibonacci(-n)? == sign(n + 1) * fibonacci(n)?)
        }
        Identity::LucasNegation => {
            let n = get("n")?;
            Ok(lucas(-n)? == sign(n) * lucas(n)?)
        }
        Identity::LucasDoubling => {
            let n = get("n")?;
            let l = lucas(n)?;
            Ok(lucas(2 * n)? == &l * &l - 2 * sign(n))
        }
        Identity::LucasDoublingOddIndex => {
            let n = get("n")?;
            let l = lucas(n)?;
            Ok(lucas(2 * n)? - 2 == &l * &l)
        }
        Identity::LucasDoubleStep => {
            let n = get("n")?;
            let value: BigInt = lucas(2 * n - 2)? - 3 * lucas(2 * n)? + lucas(2 * n + 2)?;
            Ok(value.is_zero())
        }
        Identity::FibLucasProduct => {
            let m = get("m")?;
            let n = get("n")?;
            Ok(fibonacci(m)? * lucas(n)? == fibonacci(m + n)? + sign(n) * fibonacci(m - n)?)
        }
        Identity::LucasAddition => {
            let m = get("m")?;
            let n = get("n")?;
            let lhs = fibonacci(n)? * lucas(m + 1)? + fibonacci(n - 1)? * lucas(m)?;
            Ok(lhs == lucas(m + n)?)
        }
        Identity::Catalan => {
            let n = get("n")?;
            let r = get("r")?;
            let f_n = fibonacci(n)?;
            let f_r = fibonacci(r)?;
            let lhs = &f_n * &f_n - fibonacci(n - r)? * fibonacci(n + r)?;
            Ok(lhs == sign(n - r) * &f_r * &f_r)
        }
        Identity::CatalanUnsquared => {
            let n = get("n")?;
            let r = get("r")?;
            let f_r = fibonacci(r)?;
            let lhs = fibonacci(n)? - fibonacci(n - r)? * fibonacci(n + r)?;
            Ok(lhs == sign(n - r) * &f_r * &f_r)
        }
        Identity::FibSquareSum => {
            let n = get("n")?;
            let a = fibonacci(n)?;
            let b = fibonacci(n + 1)?;
            Ok(&a * &a + &b * &b == fibonacci(2 * n + 1)?)
        }
        Identity::OddFibSum => {
            let n = get("n")?;
            let l = get("l")?;
            let limit = n - l;
            if limit < 0 {
                return Err(Error::NegativeUpperLimit {
                    identity: identity.name(),
                    limit,
                });
            }
            // Literal term-by-term summation of F_1 + F_3 + ... + F_{2(n-l)-1},
            // advancing the recurrence two steps per term.
            let mut sum = BigInt::zero();
            let mut a = BigInt::one(); // F_{2k-1}, starting at F_1
            let mut b = BigInt::one(); // F_{2k}
            for _ in 0..limit {
                sum += &a;
                let odd = &a + &b;
                let even = &b + &odd;
                a = odd;
                b = even;
            }
            Ok(sum == fibonacci(2 * limit)?)
        }
        Identity::EvenLucasSum => {
            let l = get("l")?;
            if l < 0 {
                return Err(Error::NegativeUpperLimit {
                    identity: identity.name(),
                    limit: l,
                });
            }
            let mut sum = BigInt::zero();
            let mut a = lucas(2)?; // L_{2k}, starting at L_2
            let mut b = lucas(3)?;
            for _ in 0..l {
                sum += &a;
                let even = &a + &b;
                let odd = &b + &even;
                a = even;
                b = odd;
            }
            Ok(sum == lucas(2 * l + 1)? - 1)
        }
    }
}
