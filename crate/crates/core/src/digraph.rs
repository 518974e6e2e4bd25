//! Dense digraphs without loops or 2-cycles, and their regularity
//! classification.
//!
//! Every digraph handled by this crate is an *orientation*: for distinct
//! vertices `x`, `y` at most one of the arcs `(x, y)`, `(y, x)` is present and
//! no vertex has a loop. Vertices are labelled `0..v`.

use serde::Serialize;
use thiserror::Error;

use crate::bitset::BitSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DigraphError {
    #[error("adjacency matrix is empty")]
    Empty,
    #[error("row {row} has length {found}, expected {expected} (matrix must be square)")]
    NotSquare { row: usize, found: usize, expected: usize },
    #[error("loop at ({vertex},{vertex})")]
    Loop { vertex: usize },
    #[error("2-cycle at ({x},{y})")]
    TwoCycle { x: usize, y: usize },
    #[error("vertex {vertex} out of range for {v} vertices")]
    VertexOutOfRange { vertex: usize, v: usize },
}

/// A digraph on vertices `0..v` stored as out- and in-neighbourhood bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: Vec<BitSet>,
    inn: Vec<BitSet>,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Digraph")
            .field("v", &self.v())
            .field("out", &self.out)
            .finish()
    }
}

/// Validates a square 0/1 matrix and builds the digraph it describes.
///
/// `adj[x][y] == true` means the arc `(x, y)` is present.
pub fn validate_digraph<R: AsRef<[bool]>>(adj: &[R]) -> Result<Digraph, DigraphError> {
    let v = adj.len();
    if v == 0 {
        return Err(DigraphError::Empty);
    }
    for (row, r) in adj.iter().enumerate() {
        let found = r.as_ref().len();
        if found != v {
            return Err(DigraphError::NotSquare {
                row,
                found,
                expected: v,
            });
        }
    }
    Digraph::from_fn(v, |x, y| adj[x].as_ref()[y])
}

impl Digraph {
    /// Builds a digraph from an arc predicate, rejecting loops and 2-cycles.
    #[allow(clippy::needless_range_loop)]
    pub fn from_fn(v: usize, mut arc: impl FnMut(usize, usize) -> bool) -> Result<Self, DigraphError> {
        if v == 0 {
            return Err(DigraphError::Empty);
        }
        let mut out = vec![BitSet::new(v); v];
        let mut inn = vec![BitSet::new(v); v];
        for x in 0..v {
            for y in 0..v {
                if arc(x, y) {
                    if x == y {
                        return Err(DigraphError::Loop { vertex: x });
                    }
                    out[x].insert(y);
                    inn[y].insert(x);
                }
            }
        }
        for x in 0..v {
            if let Some(y) = out[x].intersection(&inn[x]).iter().next() {
                let (a, b) = if x < y { (x, y) } else { (y, x) };
                return Err(DigraphError::TwoCycle { x: a, y: b });
            }
        }
        Ok(Self { out, inn })
    }

    pub fn from_edges<I>(v: usize, edges: I) -> Result<Self, DigraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if v == 0 {
            return Err(DigraphError::Empty);
        }
        let mut adj = vec![vec![false; v]; v];
        for (x, y) in edges {
            for vertex in [x, y] {
                if vertex >= v {
                    return Err(DigraphError::VertexOutOfRange { vertex, v });
                }
            }
            adj[x][y] = true;
        }
        validate_digraph(&adj)
    }

    /// The transitive tournament on `s` vertices in which `x` dominates `y`
    /// exactly when `y < x`, so vertex 0 is the sink.
    pub fn transitive(s: usize) -> Result<Self, DigraphError> {
        Self::from_fn(s, |x, y| y < x)
    }

    /// The directed cycle `0 → 1 → … → n-1 → 0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, DigraphError> {
        Self::from_fn(n, |x, y| (x + 1) % n == y)
    }

    /// Number of vertices.
    #[inline]
    pub fn v(&self) -> usize {
        self.out.len()
    }

    #[inline]
    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.out[x].contains(y)
    }

    /// Vertices dominated by `x`.
    #[inline]
    pub fn out_neighbors(&self, x: usize) -> &BitSet {
        &self.out[x]
    }

    /// Vertices dominating `x`.
    #[inline]
    pub fn in_neighbors(&self, x: usize) -> &BitSet {
        &self.inn[x]
    }

    pub fn out_degree(&self, x: usize) -> usize {
        self.out[x].count()
    }

    pub fn in_degree(&self, x: usize) -> usize {
        self.inn[x].count()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(BitSet::count).sum()
    }

    /// Arcs in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.iter().map(move |y| (x, y)))
    }

    pub fn adjacency_rows(&self) -> Vec<Vec<bool>> {
        (0..self.v())
            .map(|x| (0..self.v()).map(|y| self.has_edge(x, y)).collect())
            .collect()
    }

    /// Induced subdigraph on `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self, DigraphError> {
        let v = self.v();
        if let Some(&vertex) = vertices.iter().find(|&&x| x >= v) {
            return Err(DigraphError::VertexOutOfRange { vertex, v });
        }
        Self::from_fn(vertices.len(), |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    /// The digraph with vertex `x` removed; higher labels shift down by one.
    pub fn delete_vertex(&self, x: usize) -> Result<Self, DigraphError> {
        let keep: Vec<usize> = (0..self.v()).filter(|&y| y != x).collect();
        if x >= self.v() {
            return Err(DigraphError::VertexOutOfRange { vertex: x, v: self.v() });
        }
        self.induced(&keep)
    }

    /// Reverses every arc.
    pub fn converse(&self) -> Self {
        Self {
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// Relabels so that new vertex `i` is old vertex `order[i]`.
    pub(crate) fn permuted(&self, order: &[usize]) -> Self {
        debug_assert_eq!(order.len(), self.v());
        Self::from_fn(self.v(), |i, j| self.has_edge(order[i], order[j])).expect("relabelling preserves validity")
    }
}

/// Regularity flags of a digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DigraphClass {
    pub is_tournament: bool,
    pub is_regular: bool,
    /// Common in- and out-degree when regular.
    pub regular_degree: Option<usize>,
    pub is_doubly_regular: bool,
    /// Number of vertices dominated by every pair, when doubly regular.
    pub lambda: Option<usize>,
    /// `(v + 1) / 4` when doubly regular.
    pub m: Option<usize>,
}

pub fn classify(g: &Digraph) -> DigraphClass {
    let v = g.v();
    let is_tournament = (0..v).all(|x| g.out_degree(x) + g.in_degree(x) == v - 1);

    let k = g.out_degree(0);
    let is_regular = (0..v).all(|x| g.out_degree(x) == k && g.in_degree(x) == k);
    let regular_degree = is_regular.then_some(k);

    let mut lambda = None;
    let mut is_doubly_regular = false;
    if is_tournament && is_regular && v >= 3 && v % 4 == 3 {
        let first = g.out_neighbors(0).intersection_count(g.out_neighbors(1));
        let constant =
            (0..v).all(|a| ((a + 1)..v).all(|b| g.out_neighbors(a).intersection_count(g.out_neighbors(b)) == first));
        if constant {
            is_doubly_regular = true;
            lambda = Some(first);
        }
    }

    DigraphClass {
        is_tournament,
        is_regular,
        regular_degree,
        is_doubly_regular,
        lambda,
        m: is_doubly_regular.then_some((v + 1) / 4),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_cycle() -> Digraph {
        validate_digraph(&[[false, true, false], [false, false, true], [true, false, false]]).unwrap()
    }

    #[test]
    fn single_vertex() {
        let g = validate_digraph(&[[false]]).unwrap();
        assert_eq!(g.v(), 1);
        let c = classify(&g);
        assert!(c.is_tournament && c.is_regular && !c.is_doubly_regular);
    }

    #[test]
    fn rejects_bad_matrices() {
        let two_cycle = validate_digraph(&[[false, true], [true, false]]).unwrap_err();
        assert_eq!(two_cycle, DigraphError::TwoCycle { x: 0, y: 1 });
        assert_eq!(two_cycle.to_string(), "2-cycle at (0,1)");

        let looped = validate_digraph(&[[false, false], [false, true]]).unwrap_err();
        assert_eq!(looped, DigraphError::Loop { vertex: 1 });

        let ragged: Vec<Vec<bool>> = vec![vec![false, true], vec![false]];
        assert!(matches!(
            validate_digraph(&ragged),
            Err(DigraphError::NotSquare {
                row: 1,
                found: 1,
                expected: 2
            })
        ));
        let empty: Vec<Vec<bool>> = vec![];
        assert_eq!(validate_digraph(&empty), Err(DigraphError::Empty));
    }

    #[test]
    fn three_cycle_is_doubly_regular() {
        let g = three_cycle();
        assert_eq!(g, Digraph::cycle(3).unwrap());
        let c = classify(&g);
        assert!(c.is_doubly_regular);
        assert_eq!(c.regular_degree, Some(1));
        assert_eq!(c.lambda, Some(0));
        assert_eq!(c.m, Some(1));
    }

    #[test]
    fn transitive_tournament_is_not_regular() {
        let g = Digraph::transitive(4).unwrap();
        assert_eq!(g.out_degree(0), 0);
        assert_eq!(g.out_degree(3), 3);
        let c = classify(&g);
        assert!(c.is_tournament);
        assert!(!c.is_regular);
        assert_eq!(c.regular_degree, None);
    }

    #[test]
    fn cycles_are_regular_but_not_tournaments() {
        let c = classify(&Digraph::cycle(5).unwrap());
        assert!(c.is_regular && !c.is_tournament);
        assert!(matches!(Digraph::cycle(2), Err(DigraphError::TwoCycle { .. })));
        assert!(matches!(Digraph::cycle(1), Err(DigraphError::Loop { .. })));
    }

    #[test]
    fn induced_and_delete() {
        let g = Digraph::transitive(5).unwrap();
        let h = g.delete_vertex(2).unwrap();
        assert_eq!(h, Digraph::transitive(4).unwrap());
        assert!(g.induced(&[0, 9]).is_err());
        assert_eq!(g.converse().out_degree(0), 4);
    }

    // Exhaustive check of the classification flags against the literal
    // definitions on every orientation with at most 5 vertices.
    #[test]
    fn classification_matches_definitions_exhaustively() {
        for v in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| ((a + 1)..v).map(move |b| (a, b))).collect();
            // each pair: absent, a->b, or b->a
            let total = 3usize.pow(pairs.len() as u32);
            for code in 0..total {
                let mut adj = vec![vec![false; v]; v];
                let mut c = code;
                for &(a, b) in &pairs {
                    match c % 3 {
                        1 => adj[a][b] = true,
                        2 => adj[b][a] = true,
                        _ => {}
                    }
                    c /= 3;
                }
                let g = validate_digraph(&adj).unwrap();
                let cls = classify(&g);

                let tournament =
                    (0..v).all(|x| (0..v).all(|y| (adj[x][y] as u8 + adj[y][x] as u8) == u8::from(x != y)));
                assert_eq!(cls.is_tournament, tournament);

                let dominated_by_both = |a: usize, b: usize| (0..v).filter(|&c| adj[a][c] && adj[b][c]).count();
                let outdeg = |x: usize| (0..v).filter(|&y| adj[x][y]).count();
                let indeg = |x: usize| (0..v).filter(|&y| adj[y][x]).count();
                let regular = (0..v).all(|x| outdeg(x) == outdeg(0) && indeg(x) == outdeg(0));
                assert_eq!(cls.is_regular, regular);
                let drt = tournament
                    && regular
                    && v >= 3
                    && pairs
                        .iter()
                        .all(|&(a, b)| dominated_by_both(a, b) == dominated_by_both(0, 1));
                assert_eq!(cls.is_doubly_regular, drt, "v={v} code={code}");
            }
        }
    }
}
