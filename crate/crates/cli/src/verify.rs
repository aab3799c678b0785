//! The verification sweep: every closed form cross-checked against the
//! independent oracles over a range of wheel sizes, reported one line per
//! check class.

use num::{BigRational, ToPrimitive};
use rayon::prelude::*;

use wheel_core::closed_form::{
    effective_resistance, hitting_time, identified_tree_count, inverse_folded_matrix,
    spanning_tree_count,
};
use wheel_core::graph::identify_vertices;
use wheel_core::montecarlo::estimate_hitting_time;
use wheel_core::oracle::{enumerate_spanning_trees, matrix_tree_count, solve_hitting_system};
use wheel_core::sequences::{check_identity, lucas, Identity};
use wheel_core::wheel::{build_wheel, folded_matrix, Vertex, WheelSpec};

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub n_min: usize,
    pub n_max: usize,
    pub seed: u64,
    pub skip_montecarlo: bool,
}

/// Outcome of one check class.
#[derive(Debug, Clone)]
pub struct ClassReport {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<String>,
    pub skipped: bool,
}

impl ClassReport {
    pub fn ok(&self) -> bool {
        self.skipped || self.failures.is_empty()
    }

    fn exact(name: &'static str, total: usize, failures: Vec<String>) -> Self {
        ClassReport {
            name,
            passed: total - failures.len(),
            total,
            failures,
            skipped: false,
        }
    }
}

/// Runs every class and returns the reports in a fixed order.
pub fn run(options: &Options) -> Vec<ClassReport> {
    let sizes: Vec<WheelSpec> = (options.n_min..=options.n_max)
        .map(|n| WheelSpec::new(n).expect("range validated by the caller"))
        .collect();
    vec![
        identities(),
        folded_inverse(&sizes),
        hitting_vs_solver(&sizes),
        tree_count(&sizes),
        identified_tree_counts(&sizes),
        commute_resistance(&sizes),
        resistance_tree_product(&sizes),
        enumeration(&sizes),
        monte_carlo(&sizes, options),
    ]
}

/// Sweeps the identity catalogue: every universally valid identity over its
/// index range, plus the two documented counterexamples of the known-bad
/// printed forms.
fn identities() -> ClassReport {
    let mut total = 0usize;
    let mut failures = Vec::new();
    let mut expect = |identity: Identity, params: &[(&str, i64)], want: bool| {
        total += 1;
        match check_identity(identity, params) {
            Ok(got) if got == want => {}
            Ok(got) => failures.push(format!("{identity} at {params:?}: got {got}")),
            Err(e) => failures.push(format!("{identity} at {params:?}: {e}")),
        }
    };

    for n in 1..=200 {
        expect(Identity::FibDoubleStep, &[("n", n)], true);
        expect(Identity::LucasDoubleStep, &[("n", n)], true);
    }
    for n in -200..=200 {
        expect(Identity::FibNegation, &[("n", n)], true);
        expect(Identity::LucasNegation, &[("n", n)], true);
    }
    for n in -100..=100 {
        expect(Identity::LucasDoubling, &[("n", n)], true);
    }
    for n in 0..=200 {
        expect(Identity::FibSquareSum, &[("n", n)], true);
    }
    for m in -50..=50 {
        for n in -50..=50 {
            expect(Identity::FibLucasProduct, &[("m", m), ("n", n)], true);
            expect(Identity::LucasAddition, &[("m", m), ("n", n)], true);
        }
    }
    for n in -100..=100 {
        for r in -20..=20 {
            expect(Identity::Catalan, &[("n", n), ("r", r)], true);
        }
    }
    for n in 0..=100i64 {
        for l in 0..=n {
            expect(Identity::OddFibSum, &[("n", n), ("l", l)], true);
        }
    }
    for l in 0..=200 {
        expect(Identity::EvenLucasSum, &[("l", l)], true);
    }
    expect(Identity::CatalanUnsquared, &[("n", 3), ("r", 1)], false);
    expect(Identity::LucasDoublingOddIndex, &[("n", 2)], false);

    ClassReport::exact("identities", total, failures)
}

/// The folded matrix against its closed-form inverse, both product orders.
fn folded_inverse(sizes: &[WheelSpec]) -> ClassReport {
    let failures: Vec<String> = sizes
        .par_iter()
        .flat_map(|&w| {
            let n = w.cycle_len();
            let mut bad = Vec::new();
            if !folded_matrix(w).mul(&inverse_folded_matrix(w)).is_identity() {
                bad.push(format!("n={n}: H * K is not the identity"));
            }
            if !inverse_folded_matrix(w).mul(&folded_matrix(w)).is_identity() {
                bad.push(format!("n={n}: K * H is not the identity"));
            }
            bad
        })
        .collect();
    ClassReport::exact("folded inverse", sizes.len() * 2, failures)
}

/// Closed-form hitting times against the exact linear-system oracle, every
/// ordered vertex pair.
fn hitting_vs_solver(sizes: &[WheelSpec]) -> ClassReport {
    let targets: Vec<(WheelSpec, usize)> = sizes
        .iter()
        .flat_map(|&w| (0..=w.cycle_len()).map(move |t| (w, t)))
        .collect();
    let total: usize = sizes.iter().map(|w| (w.cycle_len() + 1).pow(2)).sum();
    let failures: Vec<String> = targets
        .par_iter()
        .flat_map(|&(w, target)| {
            let solved = solve_hitting_system(&build_wheel(w), target).unwrap();
            let to = flat_vertex(w, target);
            (0..=w.cycle_len())
                .filter_map(|source| {
                    let closed = hitting_time(w, flat_vertex(w, source), to);
                    (closed != solved[source]).then(|| {
                        format!(
                            "n={}: h({source} -> {target}) = {closed} but solver says {}",
                            w.cycle_len(),
                            solved[source]
                        )
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    ClassReport::exact("hitting times vs solver", total, failures)
}

/// Spanning-tree closed form against the Laplacian cofactor and the Lucas
/// expression.
fn tree_count(sizes: &[WheelSpec]) -> ClassReport {
    let failures: Vec<String> = sizes
        .par_iter()
        .flat_map(|&w| {
            let n = w.cycle_len();
            let closed = spanning_tree_count(w);
            let mut bad = Vec::new();
            if closed != matrix_tree_count(&build_wheel(w)) {
                bad.push(format!("n={n}: closed form disagrees with the determinant"));
            }
            if closed != lucas(2 * n as i64).unwrap() - 2 {
                bad.push(format!("n={n}: closed form disagrees with L_2n - 2"));
            }
            bad
        })
        .collect();
    ClassReport::exact("tree count", sizes.len() * 2, failures)
}

/// Identified-pair tree counts against the determinant of the merged graph,
/// every unordered vertex pair.
fn identified_tree_counts(sizes: &[WheelSpec]) -> ClassReport {
    let pairs: Vec<(WheelSpec, usize, usize)> = sizes
        .iter()
        .flat_map(|&w| {
            let n = w.cycle_len();
            (0..=n).flat_map(move |a| (a + 1..=n).map(move |b| (w, a, b)))
        })
        .collect();
    let total = pairs.len();
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(w, a, b)| {
            let closed =
                identified_tree_count(w, flat_vertex(w, a), flat_vertex(w, b)).unwrap();
            let merged = identify_vertices(&build_wheel(w), a, b).unwrap();
            let counted = matrix_tree_count(&merged);
            (closed != counted).then(|| {
                format!(
                    "n={}: identifying ({a},{b}) counts {counted}, closed form {closed}",
                    w.cycle_len()
                )
            })
        })
        .collect();
    ClassReport::exact("identified tree counts", total, failures)
}

/// Closed-form resistance against commute time over twice the edge count,
/// plus the constant spoke hitting time.
fn commute_resistance(sizes: &[WheelSpec]) -> ClassReport {
    let mut total = 0usize;
    let mut failures = Vec::new();
    for &w in sizes {
        let n = w.cycle_len();
        let four_n = BigRational::from_integer((4 * n).into());
        for (a, b) in distinct_pair_classes(w) {
            total += 1;
            let commute = hitting_time(w, a, b) + hitting_time(w, b, a);
            if effective_resistance(w, a, b).unwrap() != commute / &four_n {
                failures.push(format!("n={n}: commute-time identity broke at {a}, {b}"));
            }
        }
        for k in 0..n {
            total += 1;
            if hitting_time(w, Vertex::Peripheral(k), Vertex::Center)
                != BigRational::from_integer(3.into())
            {
                failures.push(format!("n={n}: spoke hitting time from p{k} is not 3"));
            }
        }
    }
    ClassReport::exact("commute resistance", total, failures)
}

/// The product rule tau = r * T connecting identified counts, resistances,
/// and the total tree count.
fn resistance_tree_product(sizes: &[WheelSpec]) -> ClassReport {
    let mut total = 0usize;
    let mut failures = Vec::new();
    for &w in sizes {
        let trees = BigRational::from_integer(spanning_tree_count(w));
        for (a, b) in distinct_pair_classes(w) {
            total += 1;
            let tau = BigRational::from_integer(identified_tree_count(w, a, b).unwrap());
            let r = effective_resistance(w, a, b).unwrap();
            if tau != r * &trees {
                failures.push(format!(
                    "n={}: tau != r * T at {a}, {b}",
                    w.cycle_len()
                ));
            }
        }
    }
    ClassReport::exact("resistance-tree product", total, failures)
}

/// Brute-force enumeration against the determinant on the wheels small
/// enough to enumerate, including all identified variants.
fn enumeration(sizes: &[WheelSpec]) -> ClassReport {
    let mut total = 0usize;
    let mut failures = Vec::new();
    for &w in sizes.iter().filter(|w| w.cycle_len() <= 6) {
        let n = w.cycle_len();
        let g = build_wheel(w);
        total += 1;
        if enumerate_spanning_trees(&g).unwrap() != matrix_tree_count(&g) {
            failures.push(format!("n={n}: enumeration disagrees on the wheel itself"));
        }
        for a in 0..=n {
            for b in a + 1..=n {
                total += 1;
                let merged = identify_vertices(&g, a, b).unwrap();
                if enumerate_spanning_trees(&merged).unwrap() != matrix_tree_count(&merged) {
                    failures.push(format!("n={n}: enumeration disagrees after identifying ({a},{b})"));
                }
            }
        }
    }
    ClassReport::exact("enumeration", total, failures)
}

const MONTE_CARLO_WALKS: u64 = 20_000;
/// A statistical class is allowed a small fraction of 3-standard-error
/// misses before it counts as a failure.
const MONTE_CARLO_MISS_BUDGET: f64 = 0.15;

/// Seeded sampling against the exact values: each configuration must land
/// within three standard errors, with a small miss budget across the sweep.
fn monte_carlo(sizes: &[WheelSpec], options: &Options) -> ClassReport {
    if options.skip_montecarlo {
        return ClassReport {
            name: "monte carlo bands",
            passed: 0,
            total: 0,
            failures: Vec::new(),
            skipped: true,
        };
    }
    let mut configs: Vec<(WheelSpec, Vertex, Vertex)> = Vec::new();
    for &w in spread(sizes, 7) {
        let n = w.cycle_len();
        configs.push((w, Vertex::Peripheral(0), Vertex::Peripheral(1)));
        configs.push((w, Vertex::Center, Vertex::Peripheral(0)));
        configs.push((w, Vertex::Peripheral(0), Vertex::Center));
        if n >= 4 {
            configs.push((w, Vertex::Peripheral(0), Vertex::Peripheral(n / 2)));
        }
    }

    let misses: Vec<String> = configs
        .par_iter()
        .filter_map(|&(w, source, target)| {
            let exact = hitting_time(w, source, target);
            let estimate = estimate_hitting_time(
                &build_wheel(w),
                w.vertex_index(source),
                w.vertex_index(target),
                MONTE_CARLO_WALKS,
                options.seed,
            )
            .unwrap();
            (!estimate.covers(&exact, 3.0)).then(|| {
                format!(
                    "n={}: {source} -> {target} estimated {} +/- {}, exact {} ({:.6})",
                    w.cycle_len(),
                    estimate.mean,
                    estimate.std_error,
                    exact,
                    exact.to_f64().unwrap_or(f64::NAN)
                )
            })
        })
        .collect();

    let total = configs.len();
    let over_budget = misses.len() as f64 > MONTE_CARLO_MISS_BUDGET * total as f64;
    ClassReport {
        name: "monte carlo bands",
        passed: total - misses.len(),
        total,
        // Within the miss budget the class still passes; the near-misses are
        // informational only.
        failures: if over_budget { misses } else { Vec::new() },
        skipped: false,
    }
}

/// Vertex for a flat index in `0..=n` (centre last).
fn flat_vertex(w: WheelSpec, index: usize) -> Vertex {
    if index == w.center_index() {
        Vertex::Center
    } else {
        Vertex::Peripheral(index)
    }
}

/// One representative pair per symmetry class: the centre against a cycle
/// vertex, and vertex 0 against each cycle distance.
fn distinct_pair_classes(w: WheelSpec) -> Vec<(Vertex, Vertex)> {
    let mut pairs = vec![(Vertex::Center, Vertex::Peripheral(0))];
    pairs.extend((1..w.cycle_len()).map(|l| (Vertex::Peripheral(0), Vertex::Peripheral(l))));
    pairs
}

/// At most `count` sizes spread evenly across the range, endpoints included.
fn spread(sizes: &[WheelSpec], count: usize) -> Vec<&WheelSpec> {
    if sizes.len() <= count {
        return sizes.iter().collect();
    }
    let mut picked: Vec<&WheelSpec> = (0..count)
        .map(|i| &sizes[(sizes.len() - 1) * i / (count - 1)])
        .collect();
    picked.dedup_by_key(|w| w.cycle_len());
    picked
}
