//! Simple undirected graphs and the walk-count coefficient formulas.
//!
//! Vertices are labeled `1..=n`. The type only admits simple graphs: loops
//! are rejected at construction and edges live in a set, so the closed
//! forms for the characteristic-polynomial coefficients `c_2` and `c_4`
//! (which assume simplicity) apply to every representable value.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, ParseError};
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Sorted, deduplicated, each pair stored as (min, max).
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a simple graph on vertices `1..=n`.
    ///
    /// Edges are normalized to `(min, max)` and deduplicated (set
    /// semantics); loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, Error> {
        assert!(n >= 1, "graphs have at least one vertex");
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for w in [u, v] {
                if w < 1 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub fn edgeless(n: usize) -> Self {
        Self::new(n, []).unwrap()
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i, i + 1))).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Degree sequence; index `v - 1` holds the degree of vertex `v`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            d[u - 1] += 1;
            d[v - 1] += 1;
        }
        d
    }

    /// Symmetric 0/1 adjacency matrix with zero diagonal.
    pub fn adjacency(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.n);
        for &(u, v) in &self.edges {
            m.set(u - 1, v - 1, BigInt::one());
            m.set(v - 1, u - 1, BigInt::one());
        }
        m
    }

    /// `tr A^k`, the number of closed walks of length `k`.
    pub fn closed_walks(&self, k: usize) -> BigInt {
        self.adjacency().pow(k).trace()
    }

    /// Number of 4-cycles of `G`, counted as subgraphs (each cycle once,
    /// not once per traversal).
    ///
    /// A 4-cycle is determined by its two diagonal pairs, so summing
    /// `binom(codeg(u, w), 2)` over unordered vertex pairs counts every
    /// cycle exactly twice; the enumeration oracle in the tests pins this
    /// convention down.
    pub fn count_4cycles(&self) -> u64 {
        let adj = self.adjacency_bools();
        let mut doubled = 0u64;
        for u in 0..self.n {
            for w in u + 1..self.n {
                let codeg = (0..self.n).filter(|&x| adj[u][x] && adj[w][x]).count() as u64;
                doubled += codeg * codeg.saturating_sub(1) / 2;
            }
        }
        debug_assert_eq!(doubled % 2, 0);
        doubled / 2
    }

    /// `2e + 4·Σ binom(d_i, 2) + 8q`, the closed form for `tr A^4`.
    pub fn trace_a4_closed_form(&self) -> u64 {
        let e = self.edge_count() as u64;
        let stars: u64 = self.degrees().iter().map(|&d| choose2_u64(d as u64)).sum();
        2 * e + 4 * stars + 8 * self.count_4cycles()
    }

    /// The closed forms `c_2 = -e` and
    /// `c_4 = binom(e, 2) - Σ binom(d_i, 2) - 2q`.
    ///
    /// The second component is only meaningful against the characteristic
    /// polynomial when `n >= 4`; callers ignore it below that.
    pub fn coeffs_c2_c4(&self) -> (i64, i64) {
        let e = self.edge_count() as i64;
        let stars: i64 = self.degrees().iter().map(|&d| choose2(d as i64)).sum();
        let q = self.count_4cycles() as i64;
        (-e, choose2(e) - stars - 2 * q)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1usize];
        seen[1] = true;
        let nbrs = self.neighbor_lists();
        while let Some(v) = stack.pop() {
            for &w in &nbrs[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        (1..=self.n).all(|v| seen[v])
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n && self.is_connected()
    }

    /// Proper 2-coloring if one exists; `colors[v - 1]` is the color of
    /// vertex `v`, and the smallest vertex of each component gets `false`.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let nbrs = self.neighbor_lists();
        let mut color: Vec<Option<bool>> = vec![None; self.n + 1];
        for start in 1..=self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].unwrap();
                for &w in &nbrs[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some((1..=self.n).map(|v| color[v].unwrap()).collect())
    }

    fn adjacency_bools(&self) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.n]; self.n];
        for &(u, v) in &self.edges {
            adj[u - 1][v - 1] = true;
            adj[v - 1][u - 1] = true;
        }
        adj
    }

    /// Neighbor lists indexed by vertex label (entry 0 unused).
    pub fn neighbor_lists(&self) -> Vec<Vec<usize>> {
        let mut nbrs = vec![Vec::new(); self.n + 1];
        for &(u, v) in &self.edges {
            nbrs[u].push(v);
            nbrs[v].push(u);
        }
        nbrs
    }
}

pub(crate) fn choose2(x: i64) -> i64 {
    x * (x - 1) / 2
}

fn choose2_u64(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

impl fmt::Display for Graph {
    /// Text format: a `graph n` header, then one `i -- j` line per edge.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph {}", self.n)?;
        for &(u, v) in &self.edges {
            write!(f, "\n{u} -- {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut lines = s.lines().enumerate();
        let (_, head) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, "empty graph file"))?;
        let n = parse_header(head, "graph")?;
        let mut seen = BTreeSet::new();
        let mut edges = Vec::new();
        for (idx, line) in lines {
            let line_no = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let (u, v) = parse_pair(line, line_no, "--")?;
            if u == v {
                return Err(ParseError::new(line_no, format!("loop edge {u} -- {v}")));
            }
            if u > n || v > n || u < 1 || v < 1 {
                return Err(ParseError::new(
                    line_no,
                    format!("vertex out of range 1..={n} in `{}`", line.trim()),
                ));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(ParseError::new(line_no, format!("duplicate edge {u} -- {v}")));
            }
            edges.push((u, v));
        }
        Graph::new(n, edges).map_err(|e| ParseError::new(1, e.to_string()))
    }
}

pub(crate) fn parse_header(line: &str, keyword: &str) -> Result<usize, ParseError> {
    let mut it = line.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(k), Some(num), None) if k == keyword => num.parse().map_err(|_| {
            ParseError::new(1, format!("invalid vertex count `{num}`"))
        }),
        _ => Err(ParseError::new(
            1,
            format!("expected header `{keyword} <n>`, got `{}`", line.trim()),
        )),
    }
}

pub(crate) fn parse_pair(line: &str, line_no: usize, arrow: &str) -> Result<(usize, usize), ParseError> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != 3 || toks[1] != arrow {
        return Err(ParseError::new(
            line_no,
            format!("expected `i {arrow} j`, got `{}`", line.trim()),
        ));
    }
    let u = toks[0]
        .parse()
        .map_err(|_| ParseError::new(line_no, format!("invalid vertex `{}`", toks[0])))?;
    let v = toks[2]
        .parse()
        .map_err(|_| ParseError::new(line_no, format!("invalid vertex `{}`", toks[2])))?;
    Ok((u, v))
}
