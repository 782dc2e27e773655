//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Three families are supported: circulants `C(n; S)`, generalized Petersen
//! graphs `P(n, k)` and custom edge lists. The family tag is kept on the
//! graph so that structure-aware solvers can dispatch on it.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Construction parameters of a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    /// `C(n; jumps)`, jumps strictly increasing.
    Circulant {
        n: usize,
        jumps: Vec<usize>,
    },
    /// `P(n, k)`: outer cycle `0..n`, inner vertices `n..2n`, spokes `i ~ n + i`.
    Petersen {
        n: usize,
        k: usize,
    },
    Custom,
}

impl Family {
    /// The `(n, s)` pair when this is a circulant with jumps exactly `{1, s}`.
    pub fn one_jump_circulant(&self) -> Option<(usize, usize)> {
        match self {
            Family::Circulant { n, jumps } if jumps.len() == 2 && jumps[0] == 1 => {
                Some((*n, jumps[1]))
            }
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Circulant { n, jumps } => {
                write!(f, "circulant:{n}:")?;
                for (i, j) in jumps.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{j}")?;
                }
                Ok(())
            }
            Family::Petersen { n, k } => write!(f, "petersen:{n}:{k}"),
            Family::Custom => f.write_str("custom"),
        }
    }
}

/// Immutable simple undirected graph with sorted, duplicate-free adjacency
/// lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    family: Family,
}

impl Graph {
    /// Builds the circulant graph `C(n; jumps)`: vertex `i` is adjacent to
    /// `i ± s (mod n)` for every jump `s`. A jump with `2s = n` contributes a
    /// single antipodal edge.
    pub fn circulant(n: usize, jumps: &[usize]) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("circulant needs n >= 3, got {n}")));
        }
        if jumps.is_empty() {
            return Err(Error::invalid("circulant needs at least one jump"));
        }
        let mut sorted = jumps.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("duplicate jump"));
        }
        if let Some(&s) = sorted.iter().find(|&&s| s == 0 || s > n / 2) {
            return Err(Error::invalid(format!("jump {s} outside 1..={}", n / 2)));
        }

        let mut adjacency: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                let mut nb: Vec<usize> =
                    sorted.iter().flat_map(|&s| [(i + s) % n, (i + n - s) % n]).collect();
                nb.sort_unstable();
                nb.dedup();
                nb
            })
            .collect();
        adjacency.shrink_to_fit();
        Ok(Graph { adjacency, family: Family::Circulant { n, jumps: sorted } })
    }

    /// Builds the generalized Petersen graph `P(n, k)` on `2n` vertices.
    pub fn generalized_petersen(n: usize, k: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("P(n, k) needs n >= 3, got {n}")));
        }
        if k == 0 || 2 * k >= n {
            return Err(Error::invalid(format!("P({n}, k) needs 1 <= k < n/2, got k = {k}")));
        }
        let mut edges = Vec::with_capacity(3 * n);
        for i in 0..n {
            edges.push((i, (i + 1) % n));
            edges.push((i, n + i));
            edges.push((n + i, n + (i + k) % n));
        }
        let mut g = Graph::from_edges(2 * n, &edges)?;
        g.family = Family::Petersen { n, k };
        Ok(g)
    }

    /// Builds a custom graph from an undirected edge list. Duplicate edges are
    /// merged; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = alloc::vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge ({u}, {v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nb in &mut adjacency {
            nb.sort_unstable();
            nb.dedup();
        }
        Ok(Graph { adjacency, family: Family::Custom })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// Sorted neighbor list of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Iterates each undirected edge once as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// `N(v)`.
    pub fn open_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].clone())
    }

    /// `N[v] = N(v) ∪ {v}`, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let mut nb = self.adjacency[v].clone();
        let at = nb.partition_point(|&u| u < v);
        nb.insert(at, v);
        Ok(nb)
    }

    /// `Some(K)` when every vertex has degree `K`.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency.iter().all(|nb| nb.len() == first).then_some(first)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::invalid(format!("vertex {v} outside 0..{}", self.vertex_count())))
        }
    }
}

/// Parses `circulant:<n>:<j1>,<j2>,...` (jumps strictly increasing positive
/// decimals) or `petersen:<n>:<k>`.
///
/// Syntax problems are reported as [`Error::Parse`] with the character offset;
/// parameter problems detected by the constructors are forwarded unchanged.
pub fn parse_graph_spec(text: &str) -> Result<Graph> {
    let mut cursor = Cursor { text, pos: 0 };
    let family = cursor.word()?;
    cursor.expect(':')?;
    match family {
        "circulant" => {
            let n = cursor.number()?;
            cursor.expect(':')?;
            let mut jumps: Vec<usize> = Vec::new();
            loop {
                let at = cursor.pos;
                let j = cursor.number()?;
                if j == 0 {
                    return Err(Error::parse(at, "jump must be positive"));
                }
                if jumps.last().is_some_and(|&prev| prev >= j) {
                    return Err(Error::parse(at, "jumps must be strictly increasing"));
                }
                jumps.push(j);
                if !cursor.eat(',') {
                    break;
                }
            }
            cursor.end()?;
            Graph::circulant(n, &jumps)
        }
        "petersen" => {
            let n = cursor.number()?;
            cursor.expect(':')?;
            let k = cursor.number()?;
            cursor.end()?;
            Graph::generalized_petersen(n, k)
        }
        other => Err(Error::parse(0, format!("unknown graph family {other:?}"))),
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn word(&mut self) -> Result<&'a str> {
        let len = self.rest().bytes().take_while(u8::is_ascii_lowercase).count();
        if len == 0 {
            return Err(Error::parse(self.pos, "expected a graph family name"));
        }
        let w = &self.rest()[..len];
        self.pos += len;
        Ok(w)
    }

    fn number(&mut self) -> Result<usize> {
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(Error::parse(self.pos, "expected a decimal integer"));
        }
        let digits = &self.rest()[..len];
        let value =
            digits.parse().map_err(|_| Error::parse(self.pos, String::from("integer overflow")))?;
        self.pos += len;
        Ok(value)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected {c:?}")))
        }
    }

    fn end(&self) -> Result<()> {
        if self.rest().is_empty() {
            Ok(())
        } else {
            Err(Error::parse(self.pos, "unexpected trailing input"))
        }
    }
}
