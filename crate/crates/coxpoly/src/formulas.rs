//! Closed forms for the first two nontrivial Coxeter-polynomial
//! coefficients of a bipartite quiver, the tree specialization, and the
//! report object that compares the closed forms against determinant-level
//! truth.
//!
//! For a bipartite quiver without parallel arrows on `n >= 2` vertices with
//! `e` arrows, `q` counts of the doubled-pair subquiver and underlying
//! degrees `d_i`:
//!
//! ```text
//! a_1 = n - e
//! a_2 = (n-e)(n-1-e)/2 + e - 2q - Σ binom(d_i, 2)
//!     = (n-e)(n+1-e)/2 - v - 2q - Σ binom(d_i - 1, 2)   (non-isolated i)
//! ```
//!
//! where `v` is the number of isolated vertices. For a tree these collapse
//! to `a_1 = 1` and `a_2 = 1 - Σ binom(d_i - 1, 2)`.

use serde::Serialize;

use crate::error::Error;
use crate::graph::{choose2, Graph};
use crate::quiver::Quiver;

/// Side-by-side record of closed-form versus determinant-computed
/// coefficients. Serializes to JSON as part of the CLI contract.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientReport {
    pub n: usize,
    pub e: u64,
    pub q: u64,
    pub degrees: Vec<usize>,
    pub isolated_count: usize,
    pub a1_closed: i64,
    pub a2_closed: i64,
    pub a2_closed_alt: i64,
    pub a1_det: i64,
    pub a2_det: i64,
    pub verdict: bool,
    /// Full coefficient list of the Coxeter polynomial, highest power
    /// first, as decimal strings.
    pub coxeter_coefficients: Vec<String>,
}

fn theorem_inputs(q: &Quiver) -> Result<(i64, i64, i64, Vec<usize>), Error> {
    if q.vertex_count() < 2 {
        return Err(Error::TooSmall {
            min: 2,
            got: q.vertex_count(),
        });
    }
    let a22 = q.count_a22()?; // also enforces bipartite + no parallel arrows
    let degrees = q.underlying_graph()?.degrees();
    Ok((
        q.vertex_count() as i64,
        q.arrow_count() as i64,
        a22 as i64,
        degrees,
    ))
}

fn exact_half(x: i64) -> i64 {
    assert_eq!(x % 2, 0, "closed form produced an odd value before /2");
    x / 2
}

/// `(a_1, a_2)` of the Coxeter polynomial from the primary closed form.
pub fn theorem1_coefficients(quiver: &Quiver) -> Result<(i64, i64), Error> {
    let (n, e, q, degrees) = theorem_inputs(quiver)?;
    let stars: i64 = degrees.iter().map(|&d| choose2(d as i64)).sum();
    let a1 = n - e;
    let a2 = exact_half((n - e) * (n - 1 - e)) + e - 2 * q - stars;
    Ok((a1, a2))
}

/// `(a_1, a_2)` from the rewritten closed form in terms of isolated
/// vertices; always equal to [`theorem1_coefficients`].
pub fn theorem1_coefficients_alt(quiver: &Quiver) -> Result<(i64, i64), Error> {
    let (n, e, q, degrees) = theorem_inputs(quiver)?;
    let isolated = degrees.iter().filter(|&&d| d == 0).count() as i64;
    let reduced: i64 = degrees
        .iter()
        .filter(|&&d| d > 0)
        .map(|&d| choose2(d as i64 - 1))
        .sum();
    let a1 = n - e;
    let a2 = exact_half((n - e) * (n + 1 - e)) - isolated - 2 * q - reduced;
    Ok((a1, a2))
}

/// `a_2 = 1 - Σ binom(d_i - 1, 2)` for a tree on at least two vertices.
/// Always at most 1, with equality exactly for paths.
pub fn tree_a2(tree: &Graph) -> Result<i64, Error> {
    if tree.vertex_count() < 2 {
        return Err(Error::TooSmall {
            min: 2,
            got: tree.vertex_count(),
        });
    }
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let reduced: i64 = tree.degrees().iter().map(|&d| choose2(d as i64 - 1)).sum();
    Ok(1 - reduced)
}

/// Orients every edge of a 2-colorable graph from the first color class to
/// the second; the smallest vertex of each component lands in the first
/// class, so the orientation is deterministic. Every vertex of the result
/// is a sink or a source.
pub fn bipartite_orientation(graph: &Graph) -> Result<Quiver, Error> {
    let colors = graph.two_coloring().ok_or(Error::NotBipartiteGraph)?;
    let arrows = graph.edges().iter().map(|&(u, v)| {
        if colors[u - 1] {
            (v, u)
        } else {
            (u, v)
        }
    });
    Quiver::new(graph.vertex_count(), arrows)
}

/// Computes `a_1` and `a_2` along every route — both closed forms, the
/// coefficients of `det(x·C_Q + C_Qᵀ)`, and the walk-count chain
/// `a_1 = n + c_2`, `a_2 = binom(n,2) + (n-2)·c_2 + c_4` — and returns the
/// comparison report. The walk-count route agreeing with the closed forms
/// is asserted outright; the closed-vs-determinant comparison lands in the
/// verdict.
pub fn verify_theorem1(quiver: &Quiver) -> Result<CoefficientReport, Error> {
    let (a1_closed, a2_closed) = theorem1_coefficients(quiver)?;
    let (a1_alt, a2_closed_alt) = theorem1_coefficients_alt(quiver)?;
    assert_eq!(a1_closed, a1_alt);

    let n = quiver.vertex_count();
    let graph = quiver.underlying_graph()?;
    let degrees = graph.degrees();
    let isolated_count = degrees.iter().filter(|&&d| d == 0).count();

    let phi = quiver.coxeter_poly()?;
    let coeff_i64 = |k: usize| -> i64 {
        i64::try_from(phi.coeff(k)).expect("coefficient exceeds i64 range")
    };
    let a1_det = coeff_i64(1);
    let a2_det = coeff_i64(2);

    // Replay of the derivation: c_2, c_4 of the underlying graph transfer
    // to a_1, a_2 through the first rows of the coefficient-transfer
    // matrix (with c_4 = 0 when n < 4).
    let (c2, c4_formula) = graph.coeffs_c2_c4();
    let c4 = if n >= 4 { c4_formula } else { 0 };
    let ni = n as i64;
    let a1_walks = ni + c2;
    let a2_walks = choose2(ni) + (ni - 2) * c2 + c4;
    assert_eq!(
        (a1_walks, a2_walks),
        (a1_closed, a2_closed),
        "walk-count route disagrees with the closed form"
    );

    let verdict =
        a1_closed == a1_det && a2_closed == a2_det && a2_closed == a2_closed_alt;
    Ok(CoefficientReport {
        n,
        e: quiver.arrow_count() as u64,
        q: quiver.count_a22()?,
        degrees,
        isolated_count,
        a1_closed,
        a2_closed,
        a2_closed_alt,
        a1_det,
        a2_det,
        verdict,
        coxeter_coefficients: phi.coeffs().iter().map(|c| c.to_string()).collect(),
    })
}
