//! Directed quivers, their Euler and Cartan matrices, Coxeter polynomials,
//! bipartite structure and reflections.
//!
//! The type is deliberately permissive: loops and parallel arrows are
//! representable so that parsers can load anything, and each operation
//! validates exactly the hypotheses it needs, returning a precise error
//! otherwise.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError};
use crate::graph::{parse_header, parse_pair, Graph};
use crate::matrix::IntMatrix;
use crate::poly::AmbientPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    n: usize,
    /// Multiset of arrows, kept sorted; repetition encodes parallel arrows.
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(n: usize, arrows: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, Error> {
        assert!(n >= 1, "quivers have at least one vertex");
        let mut arrows: Vec<(usize, usize)> = arrows.into_iter().collect();
        for &(u, v) in &arrows {
            for w in [u, v] {
                if w < 1 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
        }
        arrows.sort_unstable();
        Ok(Quiver { n, arrows })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Adjacency matrix `N_Q`; entry `(i-1, j-1)` counts arrows `i -> j`.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.n);
        for &(u, v) in &self.arrows {
            let cur = m.get(u - 1, v - 1).clone();
            m.set(u - 1, v - 1, cur + 1);
        }
        m
    }

    /// True when the quiver has no oriented cycle (Kahn's algorithm); for
    /// such quivers `N_Q` is nilpotent.
    pub fn is_acyclic(&self) -> bool {
        let mut indeg = vec![0usize; self.n + 1];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); self.n + 1];
        for &(u, v) in &self.arrows {
            indeg[v] += 1;
            out[u].push(v);
        }
        let mut stack: Vec<usize> = (1..=self.n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = stack.pop() {
            removed += 1;
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        removed == self.n
    }

    /// Splits the vertices into sources and sinks if every vertex is one or
    /// the other; isolated vertices go to the sink side by convention.
    /// Every arrow then runs from the first component into the second.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut has_out = vec![false; self.n + 1];
        let mut has_in = vec![false; self.n + 1];
        for &(u, v) in &self.arrows {
            has_out[u] = true;
            has_in[v] = true;
        }
        let mut sources = Vec::new();
        let mut sinks = Vec::new();
        for v in 1..=self.n {
            match (has_out[v], has_in[v]) {
                (true, true) => return None,
                (true, false) => sources.push(v),
                _ => sinks.push(v),
            }
        }
        Some((sources, sinks))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// First offending parallel pair, if any.
    pub fn parallel_arrows(&self) -> Option<(usize, usize)> {
        self.arrows
            .windows(2)
            .find(|w| w[0] == w[1])
            .map(|w| w[0])
    }

    /// Euler matrix `C_Q = I - N_Q`.
    pub fn euler_matrix(&self) -> IntMatrix {
        IntMatrix::identity(self.n).sub(&self.adjacency_matrix())
    }

    /// Cartan matrix `I + N + N² + ... + N^(n-1)`; entry `(i, j)` counts
    /// directed paths from `i` to `j`. Inverse of the Euler matrix.
    pub fn cartan_matrix(&self) -> Result<IntMatrix, Error> {
        if !self.is_acyclic() {
            return Err(Error::NotAcyclic);
        }
        let nq = self.adjacency_matrix();
        let mut acc = IntMatrix::identity(self.n);
        let mut power = IntMatrix::identity(self.n);
        for _ in 1..self.n {
            power = power.mul(&nq);
            acc = acc.add(&power);
        }
        Ok(acc)
    }

    /// Coxeter polynomial `φ_Q(x) = det(x·C_Q + C_Qᵀ)` of an acyclic quiver.
    pub fn coxeter_poly(&self) -> Result<AmbientPolynomial, Error> {
        if !self.is_acyclic() {
            return Err(Error::NotAcyclic);
        }
        Ok(self.euler_matrix().coxeter_poly())
    }

    /// Reverses all arrows incident to `s`, which must be a sink or a
    /// source. Vertex labels are preserved; acyclicity and the Coxeter
    /// polynomial are invariant (checked in tests, not here).
    pub fn reflect(&self, s: usize) -> Result<Quiver, Error> {
        if s < 1 || s > self.n {
            return Err(Error::VertexOutOfRange { vertex: s, n: self.n });
        }
        let outgoing = self.arrows.iter().any(|&(u, _)| u == s);
        let incoming = self.arrows.iter().any(|&(_, v)| v == s);
        if outgoing && incoming {
            return Err(Error::NotSinkOrSource { vertex: s });
        }
        let arrows = self.arrows.iter().map(|&(u, v)| {
            if u == s || v == s {
                (v, u)
            } else {
                (u, v)
            }
        });
        Quiver::new(self.n, arrows)
    }

    /// Forgets orientations. Defined only when the result is simple: loops
    /// and any two arrows joining the same vertex pair (parallel or
    /// antiparallel) are rejected.
    pub fn underlying_graph(&self) -> Result<Graph, Error> {
        let mut seen = BTreeMap::new();
        for &(u, v) in &self.arrows {
            if u == v {
                return Err(Error::NotSimple { u, v });
            }
            if seen.insert((u.min(v), u.max(v)), ()).is_some() {
                return Err(Error::NotSimple { u: u.min(v), v: u.max(v) });
            }
        }
        Graph::new(self.n, seen.into_keys())
    }

    /// Out-neighborhood of a vertex, sorted.
    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        self.arrows
            .iter()
            .filter(|&&(u, _)| u == v)
            .map(|&(_, w)| w)
            .collect()
    }

    /// Counts full subquivers formed by two sources pointing at the same
    /// two sinks, i.e. `Σ_{i<j} binom(|B_i ∩ B_j|, 2)` over pairs of
    /// sources with out-neighborhoods `B_i`. Equals the number of 4-cycles
    /// of the underlying graph for bipartite quivers.
    pub fn count_a22(&self) -> Result<u64, Error> {
        let (sources, _) = self.require_bipartite_simple()?;
        let hoods: Vec<Vec<usize>> = sources.iter().map(|&s| self.out_neighbors(s)).collect();
        let mut q = 0u64;
        for i in 0..hoods.len() {
            for j in i + 1..hoods.len() {
                let common = hoods[i].iter().filter(|v| hoods[j].contains(v)).count() as u64;
                q += common * common.saturating_sub(1) / 2;
            }
        }
        Ok(q)
    }

    /// Checks the representability identity for this bipartite quiver:
    /// `S(φ_Q) == T(p_G)` where `G` is the underlying graph. Always true;
    /// a `false` return signals a bug, and the verification harness runs
    /// this over every small bipartite quiver to certify exactly that.
    pub fn verify_acampo(&self) -> Result<bool, Error> {
        self.require_bipartite_simple()?;
        let g = self.underlying_graph()?;
        let lhs = self.coxeter_poly()?.s_transform();
        let rhs = g.adjacency().char_poly_newton().t_transform();
        Ok(lhs == rhs)
    }

    fn require_bipartite_simple(&self) -> Result<(Vec<usize>, Vec<usize>), Error> {
        let parts = self.bipartition().ok_or_else(|| {
            let vertex = self.first_mixed_vertex();
            Error::NotBipartite { vertex }
        })?;
        if let Some((u, v)) = self.parallel_arrows() {
            return Err(Error::HasParallelArrows { u, v });
        }
        Ok(parts)
    }

    fn first_mixed_vertex(&self) -> usize {
        let mut has_out = vec![false; self.n + 1];
        let mut has_in = vec![false; self.n + 1];
        for &(u, v) in &self.arrows {
            has_out[u] = true;
            has_in[v] = true;
        }
        (1..=self.n)
            .find(|&v| has_out[v] && has_in[v])
            .unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&QuiverRepr {
            n: self.n,
            arrows: self.arrows.clone(),
        })
        .expect("quiver serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Quiver, ParseError> {
        let repr: QuiverRepr =
            serde_json::from_str(s).map_err(|e| ParseError::new(e.line(), e.to_string()))?;
        Quiver::new(repr.n, repr.arrows).map_err(|e| ParseError::new(1, e.to_string()))
    }
}

/// JSON shape: `{"n": 4, "arrows": [[1,3],[1,4],[2,3],[2,4]]}`.
#[derive(Serialize, Deserialize)]
struct QuiverRepr {
    n: usize,
    arrows: Vec<(usize, usize)>,
}

impl fmt::Display for Quiver {
    /// Text format: a `quiver n` header, then one `i -> j` line per arrow;
    /// repeated lines encode parallel arrows.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "quiver {}", self.n)?;
        for &(u, v) in &self.arrows {
            write!(f, "\n{u} -> {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Quiver {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut lines = s.lines().enumerate();
        let (_, head) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, "empty quiver file"))?;
        let n = parse_header(head, "quiver")?;
        let mut arrows = Vec::new();
        for (idx, line) in lines {
            let line_no = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let (u, v) = parse_pair(line, line_no, "->")?;
            if u > n || v > n || u < 1 || v < 1 {
                return Err(ParseError::new(
                    line_no,
                    format!("vertex out of range 1..={n} in `{}`", line.trim()),
                ));
            }
            arrows.push((u, v));
        }
        Quiver::new(n, arrows).map_err(|e| ParseError::new(1, e.to_string()))
    }
}

/// The bipartite orientation of `K_{2,2}`: two sources, two sinks, all four
/// arrows. Its count in a bipartite quiver is the `q` of the coefficient
/// formulas.
pub fn a22_quiver() -> Quiver {
    Quiver::new(4, [(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::new(2, [(1, 2)]).unwrap()
    }

    fn star_source() -> Quiver {
        Quiver::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn acyclicity_examples() {
        assert!(a2().is_acyclic());
        assert!(!Quiver::new(2, [(1, 2), (2, 1)]).unwrap().is_acyclic());
        assert!(!Quiver::new(1, [(1, 1)]).unwrap().is_acyclic());
    }

    #[test]
    fn acyclic_iff_adjacency_nilpotent() {
        let quivers = [
            a2(),
            a22_quiver(),
            Quiver::new(3, [(1, 2), (2, 3), (3, 1)]).unwrap(),
            Quiver::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap(),
            Quiver::new(2, [(1, 2), (1, 2)]).unwrap(),
            Quiver::new(1, [(1, 1)]).unwrap(),
        ];
        for q in quivers {
            let n = q.vertex_count();
            let nilpotent = q.adjacency_matrix().pow(n).is_zero();
            assert_eq!(q.is_acyclic(), nilpotent, "{q}");
        }
    }

    #[test]
    fn bipartition_examples() {
        assert_eq!(
            a22_quiver().bipartition(),
            Some((vec![1, 2], vec![3, 4]))
        );
        assert_eq!(Quiver::new(3, [(1, 2), (2, 3)]).unwrap().bipartition(), None);
        assert_eq!(Quiver::new(1, []).unwrap().bipartition(), Some((vec![], vec![1])));
        assert_eq!(Quiver::new(1, [(1, 1)]).unwrap().bipartition(), None);
    }

    #[test]
    fn euler_and_cartan_matrices() {
        assert_eq!(a2().euler_matrix(), IntMatrix::from_rows(&[&[1, -1], &[0, 1]]));
        assert_eq!(Quiver::new(3, []).unwrap().euler_matrix(), IntMatrix::identity(3));
        assert_eq!(a2().cartan_matrix().unwrap(), IntMatrix::from_rows(&[&[1, 1], &[0, 1]]));
        let path = Quiver::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(
            path.cartan_matrix().unwrap(),
            IntMatrix::from_rows(&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]])
        );
        let cyclic = Quiver::new(2, [(1, 2), (2, 1)]).unwrap();
        assert_eq!(cyclic.cartan_matrix(), Err(Error::NotAcyclic));
    }

    #[test]
    fn coxeter_poly_fixtures() {
        let fixture = |q: &Quiver| q.coxeter_poly().unwrap().to_string();
        assert_eq!(fixture(&a2()), "2 | 1 1 1");
        assert_eq!(fixture(&a22_quiver()), "4 | 1 0 -2 0 1");
        assert_eq!(fixture(&star_source()), "4 | 1 1 0 1 1");
        let cyclic = Quiver::new(2, [(1, 2), (2, 1)]).unwrap();
        assert_eq!(cyclic.coxeter_poly(), Err(Error::NotAcyclic));
    }

    #[test]
    fn coxeter_poly_agrees_with_transformation_route() {
        for q in [a2(), a22_quiver(), star_source(), Quiver::new(3, [(1, 2), (3, 2)]).unwrap()] {
            let c = q.euler_matrix();
            let via_det = q.coxeter_poly().unwrap();
            let via_newton = c.coxeter_transformation().unwrap().char_poly_newton();
            assert_eq!(via_det, via_newton, "{q}");
        }
    }

    #[test]
    fn cartan_inverts_euler() {
        for q in [a2(), a22_quiver(), star_source()] {
            let prod = q.euler_matrix().mul(&q.cartan_matrix().unwrap());
            assert_eq!(prod, IntMatrix::identity(q.vertex_count()));
        }
    }

    #[test]
    fn reflection_examples() {
        assert_eq!(a2().reflect(2).unwrap(), Quiver::new(2, [(2, 1)]).unwrap());
        let path_to_sink = Quiver::new(3, [(1, 2), (3, 2)]).unwrap();
        assert_eq!(
            path_to_sink.reflect(2).unwrap(),
            Quiver::new(3, [(2, 1), (2, 3)]).unwrap()
        );
        let mixed = Quiver::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(mixed.reflect(2), Err(Error::NotSinkOrSource { vertex: 2 }));
    }

    #[test]
    fn reflection_preserves_coxeter_poly() {
        let q = a22_quiver();
        let r = q.reflect(3).unwrap();
        assert!(r.is_acyclic());
        assert_eq!(r.coxeter_poly().unwrap(), q.coxeter_poly().unwrap());
        assert_eq!(q.coxeter_poly().unwrap().to_string(), "4 | 1 0 -2 0 1");
    }

    #[test]
    fn underlying_graph_examples() {
        assert_eq!(a2().underlying_graph().unwrap(), Graph::new(2, [(1, 2)]).unwrap());
        let c4 = Graph::new(4, [(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        assert_eq!(a22_quiver().underlying_graph().unwrap(), c4);
        let anti = Quiver::new(2, [(1, 2), (2, 1)]).unwrap();
        assert_eq!(anti.underlying_graph(), Err(Error::NotSimple { u: 1, v: 2 }));
        let lp = Quiver::new(1, [(1, 1)]).unwrap();
        assert_eq!(lp.underlying_graph(), Err(Error::NotSimple { u: 1, v: 1 }));
        // N_Q + N_Q^T is the adjacency matrix of the underlying graph
        let nq = a22_quiver().adjacency_matrix();
        assert_eq!(nq.add(&nq.transpose()), c4.adjacency());
    }

    #[test]
    fn a22_counting() {
        assert_eq!(a22_quiver().count_a22().unwrap(), 1);
        assert_eq!(star_source().count_a22().unwrap(), 0);
        let k23 = Quiver::new(5, [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        assert_eq!(k23.count_a22().unwrap(), 3);
        assert_eq!(
            k23.count_a22().unwrap(),
            k23.underlying_graph().unwrap().count_4cycles()
        );
        let path = Quiver::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(path.count_a22(), Err(Error::NotBipartite { vertex: 2 }));
        let parallel = Quiver::new(2, [(1, 2), (1, 2)]).unwrap();
        assert_eq!(parallel.count_a22(), Err(Error::HasParallelArrows { u: 1, v: 2 }));
    }

    #[test]
    fn acampo_identity_examples() {
        assert!(a2().verify_acampo().unwrap());
        assert!(a22_quiver().verify_acampo().unwrap());
        assert!(Quiver::new(3, []).unwrap().verify_acampo().unwrap());
    }

    #[test]
    fn source_and_sink_degrees_match_the_underlying_graph() {
        // In a bipartite quiver the degree of a source is the size of its
        // out-neighborhood and the degree of a sink is the number of
        // sources pointing at it.
        for q in crate::enumerate::bipartite_quivers(4).unwrap() {
            let (sources, sinks) = q.bipartition().unwrap();
            let degrees = q.underlying_graph().unwrap().degrees();
            for &s in &sources {
                assert_eq!(q.out_neighbors(s).len(), degrees[s - 1]);
            }
            for &t in &sinks {
                let indeg = sources
                    .iter()
                    .filter(|&&s| q.out_neighbors(s).contains(&t))
                    .count();
                assert_eq!(indeg, degrees[t - 1]);
            }
        }
    }

    #[test]
    fn text_and_json_round_trip() {
        let q = a22_quiver();
        let text = q.to_string();
        assert_eq!(text, "quiver 4\n1 -> 3\n1 -> 4\n2 -> 3\n2 -> 4");
        assert_eq!(text.parse::<Quiver>().unwrap(), q);
        // parallel arrows survive the round trip
        let p = Quiver::new(2, [(1, 2), (1, 2)]).unwrap();
        assert_eq!(p.to_string().parse::<Quiver>().unwrap(), p);

        let json = q.to_json();
        assert_eq!(json, r#"{"n":4,"arrows":[[1,3],[1,4],[2,3],[2,4]]}"#);
        assert_eq!(Quiver::from_json(&json).unwrap(), q);
        assert!(Quiver::from_json(r#"{"n":1,"arrows":[[1,2]]}"#).is_err());

        let bad = "quiver 2\n1 => 2".parse::<Quiver>().unwrap_err();
        assert_eq!(bad.line, 2);
    }
}
