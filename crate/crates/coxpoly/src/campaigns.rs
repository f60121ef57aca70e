//! Verification campaigns: exhaustive and seeded-random sweeps that check
//! every identity the library implements against independent routes.
//!
//! Each campaign builds its instance list up front (enumerated, or drawn
//! sequentially from a seeded RNG), then maps a pure checker over it via
//! [`crate::par::map_ordered`], so results arrive in instance order and the
//! output is identical for one worker or many.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::enumerate::{
    all_graphs, bipartite_quivers, labeled_trees, MAX_BIPARTITE_N, MAX_GRAPH_N, MAX_TREE_N,
};
use crate::error::Error;
use crate::formulas::{bipartite_orientation, tree_a2, verify_theorem1};
use crate::graph::Graph;
use crate::matrix::IntMatrix;
use crate::par;
use crate::poly::AmbientPolynomial;
use crate::quiver::Quiver;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Campaign {
    Acampo,
    Theorem1,
    CorollaryTrees,
    Reflections,
    NewtonVsDet,
    N1N2,
    RepresentRoundtrip,
    Congruence,
    Walks,
}

impl Campaign {
    pub const ALL: [Campaign; 9] = [
        Campaign::Acampo,
        Campaign::Theorem1,
        Campaign::CorollaryTrees,
        Campaign::Reflections,
        Campaign::NewtonVsDet,
        Campaign::N1N2,
        Campaign::RepresentRoundtrip,
        Campaign::Congruence,
        Campaign::Walks,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Campaign::Acampo => "acampo",
            Campaign::Theorem1 => "theorem1",
            Campaign::CorollaryTrees => "corollary-trees",
            Campaign::Reflections => "reflections",
            Campaign::NewtonVsDet => "newton-vs-det",
            Campaign::N1N2 => "n1n2",
            Campaign::RepresentRoundtrip => "represent-roundtrip",
            Campaign::Congruence => "congruence",
            Campaign::Walks => "walks",
        }
    }

    pub fn parse(s: &str) -> Result<Campaign, Error> {
        Campaign::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCampaign(s.to_string()))
    }
}

/// Sweep configuration. `n` pins a single size, `n_max` the top of a size
/// range; campaigns fall back to their documented defaults when both are
/// absent. Randomized campaigns draw `cases` instances from the `seed`.
#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    pub n: Option<usize>,
    pub n_max: Option<usize>,
    /// Defaults to 0, so campaigns are deterministic out of the box.
    pub seed: u64,
    pub cases: Option<u64>,
    /// `Some(1)` forces the sequential path; `None` uses all cores (when
    /// the `parallel` feature is on).
    pub workers: Option<usize>,
}

/// One mismatch: the offending instance in its text format, plus what was
/// expected and what came out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of a campaign. The JSON serialization omits `elapsed` so that
/// output is byte-stable across runs under a fixed seed.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationSummary {
    pub campaign: String,
    pub instances_checked: u64,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run_campaign(campaign: Campaign, opts: &SweepOptions) -> Result<VerificationSummary, Error> {
    let start = Instant::now();
    let (instances_checked, failures) = match campaign {
        Campaign::Acampo => run_acampo(opts)?,
        Campaign::Theorem1 => run_theorem1(opts)?,
        Campaign::CorollaryTrees => run_corollary_trees(opts)?,
        Campaign::Reflections => run_reflections(opts),
        Campaign::NewtonVsDet => run_newton_vs_det(opts),
        Campaign::N1N2 => run_n1n2(opts),
        Campaign::RepresentRoundtrip => run_represent_roundtrip(opts),
        Campaign::Congruence => run_congruence(opts),
        Campaign::Walks => run_walks(opts)?,
    };
    Ok(VerificationSummary {
        campaign: campaign.name().to_string(),
        instances_checked,
        failures,
        elapsed: start.elapsed(),
    })
}

// ---- per-instance checks ----

pub fn check_theorem1(quiver: &Quiver) -> Option<Failure> {
    match verify_theorem1(quiver) {
        Ok(report) if report.verdict => None,
        Ok(report) => Some(Failure {
            instance: quiver.to_string(),
            expected: format!("a1={} a2={}", report.a1_closed, report.a2_closed),
            actual: format!(
                "a1={} a2={} (alt a2={})",
                report.a1_det, report.a2_det, report.a2_closed_alt
            ),
        }),
        Err(e) => Some(fail_error(quiver, e)),
    }
}

pub fn check_acampo(quiver: &Quiver) -> Option<Failure> {
    match quiver.verify_acampo() {
        Ok(true) => None,
        Ok(false) => Some(Failure {
            instance: quiver.to_string(),
            expected: "S(phi_Q) == T(p_G)".to_string(),
            actual: "transforms differ".to_string(),
        }),
        Err(e) => Some(fail_error(quiver, e)),
    }
}

/// Checks one tree; the boolean reports whether `a_2` hit its maximum of 1,
/// which the campaign cross-counts against the number of labeled paths.
pub fn check_tree(tree: &Graph) -> (Option<Failure>, bool) {
    let fail = |expected: String, actual: String| Failure {
        instance: tree.to_string(),
        expected,
        actual,
    };
    let oriented = match bipartite_orientation(tree) {
        Ok(q) => q,
        Err(e) => return (Some(fail("orientation".into(), e.to_string())), false),
    };
    let report = match verify_theorem1(&oriented) {
        Ok(r) => r,
        Err(e) => return (Some(fail("report".into(), e.to_string())), false),
    };
    let expected_a2 = match tree_a2(tree) {
        Ok(v) => v,
        Err(e) => return (Some(fail("tree a2".into(), e.to_string())), false),
    };
    let ok = report.verdict && report.a1_det == 1 && report.a2_det == expected_a2 && expected_a2 <= 1;
    if !ok {
        let failure = fail(
            format!("a1=1 a2={expected_a2} (<= 1)"),
            format!("a1={} a2={} verdict={}", report.a1_det, report.a2_det, report.verdict),
        );
        return (Some(failure), false);
    }
    (None, report.a2_det == 1)
}

pub fn check_newton_vs_det(m: &IntMatrix) -> Option<Failure> {
    let newton = m.char_poly_newton();
    let det = m.char_poly_det();
    (newton != det).then(|| Failure {
        instance: m.to_string(),
        expected: newton.to_string(),
        actual: det.to_string(),
    })
}

/// `det((x²+1)I - xN₁ - xN₂) == det((x²+1)I - x²N₁ - N₂)` for square-zero
/// `N₁, N₂`, compared at the `2n + 1` integer points `0..=2n`.
pub fn check_n1n2(pair: &(IntMatrix, IntMatrix)) -> Option<Failure> {
    let (n1, n2) = pair;
    let n = n1.size();
    debug_assert!(n1.is_square_zero() && n2.is_square_zero());
    for t in 0..=(2 * n as i64) {
        let t2p1 = BigInt::from(t * t + 1);
        let scaled_identity = IntMatrix::identity(n).scale(&t2p1);
        let lhs = scaled_identity
            .sub(&n1.scale(&BigInt::from(t)))
            .sub(&n2.scale(&BigInt::from(t)))
            .bareiss_det();
        let rhs = scaled_identity
            .sub(&n1.scale(&BigInt::from(t * t)))
            .sub(n2)
            .bareiss_det();
        if lhs != rhs {
            return Some(Failure {
                instance: format!("N1:\n{n1}\nN2:\n{n2}"),
                expected: format!("equal determinants at x = {t}"),
                actual: format!("{lhs} vs {rhs}"),
            });
        }
    }
    None
}

pub fn check_reflection(case: &(Quiver, usize)) -> Option<Failure> {
    let (quiver, s) = case;
    let instance = || format!("{quiver}\nreflect at {s}");
    let reflected = match quiver.reflect(*s) {
        Ok(r) => r,
        Err(e) => {
            return Some(Failure {
                instance: instance(),
                expected: "reflection defined".to_string(),
                actual: e.to_string(),
            })
        }
    };
    if !reflected.is_acyclic() {
        return Some(Failure {
            instance: instance(),
            expected: "reflected quiver stays acyclic".to_string(),
            actual: "cycle introduced".to_string(),
        });
    }
    let before = quiver.coxeter_poly().expect("generated quiver is acyclic");
    let after = reflected.coxeter_poly().expect("checked acyclic above");
    (before != after).then(|| Failure {
        instance: instance(),
        expected: before.to_string(),
        actual: after.to_string(),
    })
}

/// Congruence invariance for a pair `(C, P)` with `P` unimodular:
/// `φ_{PCPᵀ} == φ_C` together with the determinant relation, the
/// inverse/transpose chain on `P`, and the same chain on `C` whenever `C`
/// happens to be unimodular too.
pub fn check_congruence(pair: &(IntMatrix, IntMatrix)) -> Option<Failure> {
    let (c, p) = pair;
    let instance = || format!("C:\n{c}\nP:\n{p}");
    let transformed = c.congruence(p).expect("sizes match by construction");
    let phi = c.coxeter_poly();
    let phi_t = transformed.coxeter_poly();
    if phi != phi_t {
        return Some(Failure {
            instance: instance(),
            expected: phi.to_string(),
            actual: phi_t.to_string(),
        });
    }
    let dp = p.bareiss_det();
    if transformed.bareiss_det() != &dp * &dp * c.bareiss_det() {
        return Some(Failure {
            instance: instance(),
            expected: "det(PCP^T) = det(P)^2 det(C)".to_string(),
            actual: "determinant relation broken".to_string(),
        });
    }
    if let Some(f) = unimodular_chain(p) {
        return Some(f);
    }
    if c.bareiss_det().abs().is_one() {
        if let Some(f) = unimodular_chain(c) {
            return Some(f);
        }
    }
    None
}

/// `φ_{C⁻¹} == φ_{Cᵀ} == φ_C` for unimodular `C`.
fn unimodular_chain(c: &IntMatrix) -> Option<Failure> {
    let inv = c.unimodular_inverse().expect("caller checked unimodularity");
    let phi = c.coxeter_poly();
    let chain_holds = inv.coxeter_poly() == phi && c.transpose().coxeter_poly() == phi;
    (!chain_holds).then(|| Failure {
        instance: c.to_string(),
        expected: "phi(C^{-1}) == phi(C^T) == phi(C)".to_string(),
        actual: "chain broken".to_string(),
    })
}

pub fn check_represent_roundtrip(p: &AmbientPolynomial) -> Option<Failure> {
    let q = match p.represent() {
        Ok(q) => q,
        Err(e) => {
            return Some(Failure {
                instance: p.to_string(),
                expected: "representable".to_string(),
                actual: e.to_string(),
            })
        }
    };
    if !q.is_even_space() {
        return Some(Failure {
            instance: p.to_string(),
            expected: "representation in U_n".to_string(),
            actual: q.to_string(),
        });
    }
    let lhs = q.t_transform();
    let rhs = p.s_transform();
    (lhs != rhs).then(|| Failure {
        instance: p.to_string(),
        expected: rhs.to_string(),
        actual: lhs.to_string(),
    })
}

/// Walk-count checks for one graph: the trace of `A⁴` along three routes,
/// and the closed forms for `c_1, c_2, c_4` against the characteristic
/// polynomial.
pub fn check_walks(g: &Graph) -> Option<Failure> {
    let fail = |expected: String, actual: String| Failure {
        instance: g.to_string(),
        expected,
        actual,
    };
    let matrix_route = g.closed_walks(4);
    let formula = BigInt::from(g.trace_a4_closed_form());
    let brute = BigInt::from(closed_walk_enumeration(g, 4));
    if matrix_route != formula || matrix_route != brute {
        return Some(fail(
            format!("tr A^4 = {matrix_route} on all routes"),
            format!("formula {formula}, enumeration {brute}"),
        ));
    }
    let p = g.adjacency().char_poly_newton();
    let (c2, c4) = g.coeffs_c2_c4();
    if !p.coeff(1).is_zero() {
        return Some(fail("c1 = 0".to_string(), p.coeff(1).to_string()));
    }
    if g.vertex_count() >= 2 && p.coeff(2) != &BigInt::from(c2) {
        return Some(fail(format!("c2 = {c2}"), p.coeff(2).to_string()));
    }
    if g.vertex_count() >= 4 && p.coeff(4) != &BigInt::from(c4) {
        return Some(fail(format!("c4 = {c4}"), p.coeff(4).to_string()));
    }
    None
}

/// Independent closed-walk recount by explicit walk enumeration; this is
/// the oracle side of the `tr A^k` comparisons.
pub fn closed_walk_enumeration(g: &Graph, k: usize) -> u64 {
    fn go(nbrs: &[Vec<usize>], start: usize, at: usize, left: usize) -> u64 {
        if left == 0 {
            return (at == start) as u64;
        }
        nbrs[at].iter().map(|&w| go(nbrs, start, w, left - 1)).sum()
    }
    let nbrs = g.neighbor_lists();
    (1..=g.vertex_count()).map(|v| go(&nbrs, v, v, k)).sum()
}

fn fail_error(quiver: &Quiver, e: Error) -> Failure {
    Failure {
        instance: quiver.to_string(),
        expected: "checkable instance".to_string(),
        actual: e.to_string(),
    }
}

// ---- campaign bodies ----

fn size_range(
    opts: &SweepOptions,
    lo: usize,
    default_hi: usize,
    hard_max: usize,
    estimate: impl Fn(usize) -> f64,
) -> Result<std::ops::RangeInclusive<usize>, Error> {
    let (from, to) = match (opts.n, opts.n_max) {
        (Some(n), _) => (n, n),
        (None, Some(hi)) => (lo, hi),
        (None, None) => (lo, default_hi),
    };
    if to > hard_max {
        return Err(Error::BoundExceeded(format!(
            "n = {to} exceeds the supported bound {hard_max}; \
             the sweep would cover about {:.2e} instances",
            estimate(to)
        )));
    }
    if from < lo || from > to {
        return Err(Error::BoundExceeded(format!(
            "size range {from}..={to} is outside {lo}..={hard_max}"
        )));
    }
    Ok(from..=to)
}

fn run_theorem1(opts: &SweepOptions) -> Result<(u64, Vec<Failure>), Error> {
    let range = size_range(opts, 2, 6, MAX_BIPARTITE_N, |n| {
        (0..=n).map(|m| 2f64.powi((m * (n - m)) as i32)).sum::<f64>() * 2f64.powi(n as i32)
    })?;
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for n in range {
        let quivers = bipartite_quivers(n)?;
        checked += quivers.len() as u64;
        failures.extend(
            par::map_ordered(&quivers, opts.workers, check_theorem1)
                .into_iter()
                .flatten(),
        );
    }
    Ok((checked, failures))
}

fn run_acampo(opts: &SweepOptions) -> Result<(u64, Vec<Failure>), Error> {
    let range = size_range(opts, 1, 6, MAX_BIPARTITE_N, |n| {
        (0..=n).map(|m| 2f64.powi((m * (n - m)) as i32)).sum::<f64>() * 2f64.powi(n as i32)
    })?;
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for n in range {
        let quivers = bipartite_quivers(n)?;
        checked += quivers.len() as u64;
        failures.extend(
            par::map_ordered(&quivers, opts.workers, check_acampo)
                .into_iter()
                .flatten(),
        );
    }
    Ok((checked, failures))
}

fn run_corollary_trees(opts: &SweepOptions) -> Result<(u64, Vec<Failure>), Error> {
    let range = size_range(opts, 2, 8, MAX_TREE_N, |n| (n as f64).powi(n as i32 - 2))?;
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for n in range {
        let trees = labeled_trees(n)?;
        checked += trees.len() as u64;
        let results = par::map_ordered(&trees, opts.workers, check_tree);
        let mut extremal = 0u64;
        for (failure, is_path_value) in results {
            if let Some(f) = failure {
                failures.push(f);
            }
            extremal += is_path_value as u64;
        }
        // a2 attains its maximum of 1 exactly for paths, of which there
        // are n!/2 labeled ones.
        let expected_paths = factorial(n as u64) / 2;
        if extremal != expected_paths {
            failures.push(Failure {
                instance: format!("n={n} census of a2 = 1 cases"),
                expected: expected_paths.to_string(),
                actual: extremal.to_string(),
            });
        }
    }
    Ok((checked, failures))
}

fn run_reflections(opts: &SweepOptions) -> (u64, Vec<Failure>) {
    let cases = opts.cases.unwrap_or(500);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let instances: Vec<(Quiver, usize)> = (0..cases)
        .map(|_| {
            let n = rng.gen_range(1..=7);
            let quiver = random_acyclic_quiver(&mut rng, n);
            let admissible = sink_or_source_vertices(&quiver);
            let s = *admissible.choose(&mut rng).expect("acyclic quivers have a sink");
            (quiver, s)
        })
        .collect();
    let failures = par::map_ordered(&instances, opts.workers, check_reflection)
        .into_iter()
        .flatten()
        .collect();
    (cases, failures)
}

fn run_newton_vs_det(opts: &SweepOptions) -> (u64, Vec<Failure>) {
    let cases = opts.cases.unwrap_or(500);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let instances: Vec<IntMatrix> = (0..cases)
        .map(|_| {
            let n = rng.gen_range(1..=8);
            random_matrix(&mut rng, n, 3)
        })
        .collect();
    let failures = par::map_ordered(&instances, opts.workers, check_newton_vs_det)
        .into_iter()
        .flatten()
        .collect();
    (cases, failures)
}

fn run_n1n2(opts: &SweepOptions) -> (u64, Vec<Failure>) {
    let cases = opts.cases.unwrap_or(500);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let instances: Vec<(IntMatrix, IntMatrix)> = (0..cases)
        .map(|_| {
            let n = rng.gen_range(1..=6);
            (random_square_zero(&mut rng, n), random_square_zero(&mut rng, n))
        })
        .collect();
    let failures = par::map_ordered(&instances, opts.workers, check_n1n2)
        .into_iter()
        .flatten()
        .collect();
    (cases, failures)
}

fn run_represent_roundtrip(opts: &SweepOptions) -> (u64, Vec<Failure>) {
    let cases = opts.cases.unwrap_or(500);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let instances: Vec<AmbientPolynomial> = (0..cases)
        .map(|_| random_palindromic(&mut rng, 24, 1_000_000))
        .collect();
    let failures = par::map_ordered(&instances, opts.workers, check_represent_roundtrip)
        .into_iter()
        .flatten()
        .collect();
    (cases, failures)
}

fn run_congruence(opts: &SweepOptions) -> (u64, Vec<Failure>) {
    let cases = opts.cases.unwrap_or(500);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let instances: Vec<(IntMatrix, IntMatrix)> = (0..cases)
        .map(|_| {
            let n = rng.gen_range(1..=6);
            (random_matrix(&mut rng, n, 3), random_unimodular(&mut rng, n))
        })
        .collect();
    let failures = par::map_ordered(&instances, opts.workers, check_congruence)
        .into_iter()
        .flatten()
        .collect();
    (cases, failures)
}

fn run_walks(opts: &SweepOptions) -> Result<(u64, Vec<Failure>), Error> {
    let range = size_range(opts, 1, 5, MAX_GRAPH_N, |n| {
        2f64.powi((n * (n - 1) / 2) as i32)
    })?;
    let mut instances = Vec::new();
    for n in range {
        instances.extend(all_graphs(n)?);
    }
    let cases = opts.cases.unwrap_or(200);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..cases {
        let n = rng.gen_range(1..=7);
        instances.push(random_graph(&mut rng, n));
    }
    let checked = instances.len() as u64;
    let failures = par::map_ordered(&instances, opts.workers, check_walks)
        .into_iter()
        .flatten()
        .collect();
    Ok((checked, failures))
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

// ---- seeded instance generators ----

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> IntMatrix {
    let entries = (0..n * n)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect();
    IntMatrix::new(n, entries)
}

/// Random product of elementary row operations applied to the identity:
/// determinant is always ±1.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut rows = vec![vec![0i64; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = 1;
    }
    for _ in 0..2 * n {
        match rng.gen_range(0..3) {
            0 if n >= 2 => {
                // row_j += ±row_i
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n - 1);
                if j >= i {
                    j += 1;
                }
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                let source = rows[i].clone();
                for (dst, src) in rows[j].iter_mut().zip(&source) {
                    *dst += sign * src;
                }
            }
            1 if n >= 2 => {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n - 1);
                if j >= i {
                    j += 1;
                }
                rows.swap(i, j);
            }
            _ => {
                let i = rng.gen_range(0..n);
                for x in rows[i].iter_mut() {
                    *x = -*x;
                }
            }
        }
    }
    IntMatrix::from_fn(n, |i, j| BigInt::from(rows[i][j]))
}

/// Random square-zero matrix: a strictly off-diagonal block conjugated by
/// a random unimodular matrix.
pub fn random_square_zero(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let k = rng.gen_range(0..=n);
    let mut entries = vec![BigInt::zero(); n * n];
    for i in 0..k {
        for j in k..n {
            entries[i * n + j] = BigInt::from(rng.gen_range(-2i64..=2));
        }
    }
    let block = IntMatrix::new(n, entries);
    let p = random_unimodular(rng, n);
    let p_inv = p.unimodular_inverse().expect("construction is unimodular");
    let result = p.mul(&block).mul(&p_inv);
    debug_assert!(result.is_square_zero());
    result
}

/// Random acyclic quiver: arrows only go forward along a shuffled vertex
/// order; an occasional parallel copy exercises multi-arrow handling.
pub fn random_acyclic_quiver(rng: &mut ChaCha8Rng, n: usize) -> Quiver {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.5) {
                arrows.push((order[i], order[j]));
                if rng.gen_bool(0.1) {
                    arrows.push((order[i], order[j]));
                }
            }
        }
    }
    Quiver::new(n, arrows).expect("generated arrows are in range")
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are simple")
}

/// Random element of `W_n` with the given coefficient bound, `n <= max_n`.
pub fn random_palindromic(rng: &mut ChaCha8Rng, max_n: usize, bound: i64) -> AmbientPolynomial {
    let n = rng.gen_range(0..=max_n);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for k in 0..=n / 2 {
        let v = BigInt::from(rng.gen_range(-bound..=bound));
        coeffs[k] = v.clone();
        coeffs[n - k] = v;
    }
    AmbientPolynomial::new(n, coeffs)
}

fn sink_or_source_vertices(quiver: &Quiver) -> Vec<usize> {
    let n = quiver.vertex_count();
    let mut has_out = vec![false; n + 1];
    let mut has_in = vec![false; n + 1];
    for &(u, v) in quiver.arrows() {
        has_out[u] = true;
        has_in[v] = true;
    }
    (1..=n).filter(|&v| !(has_out[v] && has_in[v])).collect()
}
