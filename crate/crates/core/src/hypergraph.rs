//! k-uniform hypergraphs with incidence structure and incremental vertex
//! deletion.

use crate::binomial::binomial;
use crate::error::Error;

/// Immutable k-uniform hypergraph on vertex set `0..n`.
///
/// Edges are stored as strictly increasing k-tuples and the edge list is
/// sorted lexicographically, so equal hypergraphs have identical canonical
/// form. Isolated vertices are first-class: `n` may exceed the number of
/// vertices covered by edges. `n < k` is allowed and simply means no edge
/// can exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformHypergraph {
    n: usize,
    k: usize,
    edges: Vec<Vec<u32>>,
    incidence: Vec<Vec<u32>>,
    degree: Vec<usize>,
}

impl UniformHypergraph {
    /// Builds a validated, canonicalized instance.
    pub fn new(n: usize, k: usize, edges: Vec<Vec<u32>>) -> Result<Self, Error> {
        if k < 2 {
            return Err(Error::UniformityTooSmall { k });
        }
        let mut edges = edges;
        for (idx, e) in edges.iter_mut().enumerate() {
            if e.len() != k {
                return Err(Error::WrongEdgeArity {
                    edge_index: idx,
                    expected: k,
                    found: e.len(),
                });
            }
            e.sort_unstable();
            for w in e.windows(2) {
                if w[0] == w[1] {
                    let mut distinct = e.clone();
                    distinct.dedup();
                    return Err(Error::WrongEdgeArity {
                        edge_index: idx,
                        expected: k,
                        found: distinct.len(),
                    });
                }
            }
            if let Some(&v) = e.last() {
                if v as usize >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge { edge: w[0].clone() });
            }
        }
        let mut incidence = vec![Vec::new(); n];
        for (idx, e) in edges.iter().enumerate() {
            for &v in e {
                incidence[v as usize].push(idx as u32);
            }
        }
        let degree = incidence.iter().map(|l| l.len()).collect();
        Ok(Self {
            n,
            k,
            edges,
            incidence,
            degree,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = &[u32]> {
        self.edges.iter().map(|e| e.as_slice())
    }

    pub fn edge(&self, idx: usize) -> &[u32] {
        &self.edges[idx]
    }

    /// Edge indices incident to `v`.
    pub fn incidence(&self, v: u32) -> &[u32] {
        &self.incidence[v as usize]
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: u32) -> Result<usize, Error> {
        if v as usize >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.degree[v as usize])
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    /// C(n, k), the number of possible edges.
    pub fn max_edge_count(&self) -> Result<i128, Error> {
        binomial(self.n as i64, self.k as i64)
    }

    /// Number of edges with all k vertices inside `s`.
    pub fn induced_edge_count(&self, s: &[u32]) -> Result<usize, Error> {
        let mut inside = vec![false; self.n];
        for &v in s {
            if v as usize >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            inside[v as usize] = true;
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| inside[v as usize]))
            .count())
    }

    pub fn begin_deletion(&self) -> DeletionState<'_> {
        DeletionState::new(self)
    }
}

/// Mutable single-owner state for one backward deletion run over a shared
/// immutable hypergraph.
#[derive(Debug)]
pub struct DeletionState<'a> {
    graph: &'a UniformHypergraph,
    live: Vec<bool>,
    live_count: usize,
    /// Per edge: how many of its vertices are still live.
    live_edge_vertices: Vec<u32>,
    /// Per vertex: incident edges whose vertices are all live.
    live_degree: Vec<usize>,
    live_edges: usize,
}

impl<'a> DeletionState<'a> {
    pub fn new(graph: &'a UniformHypergraph) -> Self {
        let n = graph.vertex_count();
        DeletionState {
            graph,
            live: vec![true; n],
            live_count: n,
            live_edge_vertices: vec![graph.uniformity() as u32; graph.edge_count()],
            live_degree: graph.degrees().to_vec(),
            live_edges: graph.edge_count(),
        }
    }

    pub fn live_count(&self) -> usize {
        self.live_count
    }

    pub fn live_edges(&self) -> usize {
        self.live_edges
    }

    pub fn is_live(&self, v: u32) -> bool {
        self.live[v as usize]
    }

    /// Incident edges of `v` that are fully live.
    pub fn live_degree(&self, v: u32) -> usize {
        self.live_degree[v as usize]
    }

    pub fn live_vertices(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.graph.vertex_count() as u32).filter(|&v| self.live[v as usize])
    }

    /// Deletes `v`, returning its live degree at deletion time (= the number
    /// of induced edges removed).
    pub fn delete_vertex(&mut self, v: u32) -> Result<usize, Error> {
        self.delete_vertex_with(v, |_, _| {})
    }

    /// Deletes `v`, invoking `on_degree_drop(u, old_live_degree)` once per
    /// unit decrement of a co-member's live degree. A co-member shared by
    /// several dying edges is reported once per dying edge.
    pub fn delete_vertex_with(
        &mut self,
        v: u32,
        mut on_degree_drop: impl FnMut(u32, usize),
    ) -> Result<usize, Error> {
        let n = self.graph.vertex_count();
        if v as usize >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if !self.live[v as usize] {
            return Err(Error::VertexAlreadyDeleted { vertex: v });
        }
        let removed = self.live_degree[v as usize];
        self.live[v as usize] = false;
        self.live_count -= 1;
        let k = self.graph.uniformity() as u32;
        for &ei in self.graph.incidence(v) {
            let c = self.live_edge_vertices[ei as usize];
            self.live_edge_vertices[ei as usize] = c - 1;
            if c == k {
                // The edge was fully live and dies with v.
                self.live_edges -= 1;
                for &u in self.graph.edge(ei as usize) {
                    if self.live[u as usize] {
                        on_degree_drop(u, self.live_degree[u as usize]);
                        self.live_degree[u as usize] -= 1;
                    }
                }
            }
        }
        self.live_degree[v as usize] = 0;
        Ok(removed)
    }
}
