//! Signed graphs as oriented incidence structures.
//!
//! A structure holds an ordered vertex list and an ordered edge list; each
//! edge is an ordered list of incidences `(vertex, sigma)` with
//! `sigma ∈ {+1, -1}`. Two incidences of one edge form an adjacency whose
//! sign is `-sigma(i) * sigma(j)`; for edges of size 2 that adjacency sign
//! is the signed-graph edge sign. Edges of size 3 or more are stored and
//! fed to the matrix and contributor kernels, while every other consumer
//! insists on 2-uniform input.
//!
//! Structures are immutable after construction, so shared read-only use
//! from many threads is safe.

use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::matrix::IntMatrix;
use crate::Result;

/// One endpoint record of an edge: the vertex it sits at and its sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Incidence {
    pub vertex: usize,
    pub sigma: i8,
}

/// An edge: an id plus its ordered incidences (at least two, all at
/// distinct vertices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub incidences: Vec<Incidence>,
}

impl Edge {
    pub fn arity(&self) -> usize {
        self.incidences.len()
    }
}

/// An oriented incidence structure over named vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    index: HashMap<String, usize>,
    /// Per vertex: (edge index, incidence slot) pairs in edge order.
    incident: Vec<Vec<(usize, usize)>>,
}

impl IncidenceStructure {
    fn empty(vertices: &[&str]) -> Result<Self> {
        let mut index = HashMap::new();
        let mut names = Vec::with_capacity(vertices.len());
        for &v in vertices {
            if index.insert(v.to_owned(), names.len()).is_some() {
                return Err(Error::DuplicateVertex(v.to_owned()));
            }
            names.push(v.to_owned());
        }
        let n = names.len();
        Ok(IncidenceStructure {
            vertices: names,
            edges: Vec::new(),
            index,
            incident: vec![Vec::new(); n],
        })
    }

    fn push_edge(&mut self, id: &str, incidences: Vec<Incidence>) -> Result<usize> {
        if self.edges.iter().any(|e| e.id == id) {
            return Err(Error::DuplicateEdge(id.to_owned()));
        }
        if incidences.len() < 2 {
            return Err(Error::EdgeTooSmall {
                edge: id.to_owned(),
                got: incidences.len(),
            });
        }
        for (k, inc) in incidences.iter().enumerate() {
            if inc.sigma != 1 && inc.sigma != -1 {
                return Err(Error::InvalidSign {
                    edge: id.to_owned(),
                    value: inc.sigma as i64,
                });
            }
            if incidences[..k].iter().any(|other| other.vertex == inc.vertex) {
                return Err(Error::LoopEdge { edge: id.to_owned() });
            }
        }
        let e = self.edges.len();
        for (k, inc) in incidences.iter().enumerate() {
            self.incident[inc.vertex].push((e, k));
        }
        self.edges.push(Edge {
            id: id.to_owned(),
            incidences,
        });
        Ok(e)
    }

    /// Build a signed graph from `(id, end1, end2, sign)` records.
    ///
    /// Orientation is deterministic: the first incidence gets `sigma = +1`
    /// and the second gets `sigma = -sign`, so the adjacency sign
    /// `-sigma(i) sigma(j)` reproduces the requested edge sign and equal
    /// inputs produce identical structures.
    pub fn from_signed_edges(
        vertices: &[&str],
        edges: &[(&str, &str, &str, i8)],
    ) -> Result<Self> {
        let mut g = Self::empty(vertices)?;
        for &(id, a, b, sign) in edges {
            if sign != 1 && sign != -1 {
                return Err(Error::InvalidSign {
                    edge: id.to_owned(),
                    value: sign as i64,
                });
            }
            let va = g.vertex_index(a)?;
            let vb = g.vertex_index(b)?;
            g.push_edge(
                id,
                vec![
                    Incidence { vertex: va, sigma: 1 },
                    Incidence { vertex: vb, sigma: -sign },
                ],
            )?;
        }
        Ok(g)
    }

    /// Build from explicit incidence lists `(id, [(vertex, sigma), ...])`.
    /// Edges may have any arity of 2 or more; vertices within an edge must
    /// be distinct.
    pub fn from_incidence_lists(
        vertices: &[&str],
        edges: &[(&str, Vec<(&str, i8)>)],
    ) -> Result<Self> {
        let mut g = Self::empty(vertices)?;
        for (id, incs) in edges {
            let mut resolved = Vec::with_capacity(incs.len());
            for &(v, sigma) in incs {
                resolved.push(Incidence {
                    vertex: g.vertex_index(v)?,
                    sigma,
                });
            }
            g.push_edge(id, resolved)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_owned()))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn edge_id(&self, e: usize) -> &str {
        &self.edges[e].id
    }

    /// Incidences at a vertex as (edge index, slot) pairs, in edge order.
    pub fn incidences_at(&self, v: usize) -> &[(usize, usize)] {
        &self.incident[v]
    }

    /// Number of incidences at a vertex.
    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    pub fn is_two_uniform(&self) -> bool {
        self.edges.iter().all(|e| e.arity() == 2)
    }

    pub fn require_two_uniform(&self) -> Result<()> {
        match self.edges.iter().find(|e| e.arity() != 2) {
            None => Ok(()),
            Some(e) => Err(Error::NotTwoUniform {
                edge: e.id.clone(),
                arity: e.arity(),
            }),
        }
    }

    /// Adjacency sign `-sigma(i) sigma(j)` between two slots of an edge.
    pub fn adjacency_sign(&self, e: usize, slot_i: usize, slot_j: usize) -> i8 {
        let edge = &self.edges[e];
        -edge.incidences[slot_i].sigma * edge.incidences[slot_j].sigma
    }

    /// Edge sign of a 2-edge.
    pub fn edge_sign(&self, e: usize) -> i8 {
        debug_assert_eq!(self.edges[e].arity(), 2);
        self.adjacency_sign(e, 0, 1)
    }

    /// Endpoints of a 2-edge in incidence order.
    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        let edge = &self.edges[e];
        debug_assert_eq!(edge.arity(), 2);
        (edge.incidences[0].vertex, edge.incidences[1].vertex)
    }

    /// True when every adjacency sign is `+1` (a plain graph); requires
    /// 2-uniform structure to be meaningful.
    pub fn all_adjacencies_positive(&self) -> bool {
        self.is_two_uniform() && (0..self.edge_count()).all(|e| self.edge_sign(e) == 1)
    }

    /// True when every adjacency sign is `-1`: all incidences of each edge
    /// carry the same sigma.
    pub fn all_adjacencies_negative(&self) -> bool {
        self.edges
            .iter()
            .all(|e| e.incidences.iter().all(|i| i.sigma == e.incidences[0].sigma))
    }

    /// The same structure with every incidence re-signed `+1`, which makes
    /// every adjacency negative.
    pub fn all_negative_reorientation(&self) -> IncidenceStructure {
        let mut out = self.clone();
        for e in &mut out.edges {
            for inc in &mut e.incidences {
                inc.sigma = 1;
            }
        }
        out
    }

    /// V x E incidence matrix; the (v, e) entry sums sigma over the
    /// incidences of v in e.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let mut h = IntMatrix::zeros(self.vertex_count(), self.edge_count());
        for (e, edge) in self.edges.iter().enumerate() {
            for inc in &edge.incidences {
                h.add_to(inc.vertex, e, &num_bigint::BigInt::from(inc.sigma));
            }
        }
        h
    }

    /// Diagonal matrix of incidence counts.
    pub fn degree_matrix(&self) -> IntMatrix {
        let n = self.vertex_count();
        let mut d = IntMatrix::zeros(n, n);
        for v in 0..n {
            d.set(v, v, num_bigint::BigInt::from(self.degree(v)));
        }
        d
    }

    /// Adjacency matrix: entry (v, w) sums the adjacency sign over every
    /// incidence pair of an edge with one end at v and the other at w.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let n = self.vertex_count();
        let mut a = IntMatrix::zeros(n, n);
        for (e, edge) in self.edges.iter().enumerate() {
            for (si, inc_i) in edge.incidences.iter().enumerate() {
                for (sj, inc_j) in edge.incidences.iter().enumerate() {
                    if si == sj {
                        continue;
                    }
                    let sign = self.adjacency_sign(e, si, sj);
                    a.add_to(inc_i.vertex, inc_j.vertex, &num_bigint::BigInt::from(sign));
                }
            }
        }
        a
    }

    /// Laplacian `D - A`; equals `H * H^T` entrywise.
    pub fn laplacian(&self) -> IntMatrix {
        let n = self.vertex_count();
        let d = self.degree_matrix();
        let a = self.adjacency_matrix();
        let mut l = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                l.set(i, j, d.get(i, j) - a.get(i, j));
            }
        }
        l
    }

    /// Laplacian of the all-negative reorientation.
    pub fn signless_laplacian(&self) -> IntMatrix {
        self.all_negative_reorientation().laplacian()
    }

    /// Neighbors of v as (edge index, neighbor vertex) pairs, in edge
    /// order, one entry per parallel edge. Requires 2-uniform structure.
    pub fn edge_neighbors(&self, v: usize) -> Vec<(usize, usize)> {
        self.incident[v]
            .iter()
            .map(|&(e, slot)| {
                let other = &self.edges[e].incidences[1 - slot];
                (e, other.vertex)
            })
            .collect()
    }

    /// Every edge joining v and w, in edge order. 2-uniform only.
    pub fn edges_between(&self, v: usize, w: usize) -> Vec<usize> {
        self.incident[v]
            .iter()
            .filter_map(|&(e, slot)| {
                (self.edges[e].arity() == 2 && self.edges[e].incidences[1 - slot].vertex == w)
                    .then_some(e)
            })
            .collect()
    }

    /// Distinct neighbor vertices of v in vertex order. 2-uniform only.
    pub fn neighbor_vertices(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edge_neighbors(v)
            .into_iter()
            .map(|(_, w)| w)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// All ordered adjacent vertex pairs (w1, w2), sorted by index.
    pub fn ordered_adjacencies(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.vertex_count() {
            for w in self.neighbor_vertices(v) {
                out.push((v, w));
            }
        }
        out
    }

    /// Ensure a w1-w2 edge exists, adding a positive one when absent.
    ///
    /// Returns the possibly extended structure plus the index of the edge:
    /// the earliest declared w1-w2 edge when one exists, otherwise the
    /// fresh edge. Requires 2-uniform input and distinct endpoints.
    pub fn local_loading(&self, w1: usize, w2: usize) -> Result<(IncidenceStructure, usize)> {
        self.require_two_uniform()?;
        if w1 == w2 {
            return Err(Error::LoopEdge {
                edge: format!("local loading at {}", self.vertex_name(w1)),
            });
        }
        for (e, edge) in self.edges.iter().enumerate() {
            let (a, b) = (edge.incidences[0].vertex, edge.incidences[1].vertex);
            if (a, b) == (w1, w2) || (a, b) == (w2, w1) {
                return Ok((self.clone(), e));
            }
        }
        let mut g = self.clone();
        let mut id = format!("load_{}_{}", self.vertex_name(w1), self.vertex_name(w2));
        while g.edges.iter().any(|e| e.id == id) {
            id.push('+');
        }
        let e = g.push_edge(
            &id,
            vec![
                Incidence { vertex: w1, sigma: 1 },
                Incidence { vertex: w2, sigma: -1 },
            ],
        )?;
        Ok((g, e))
    }

    /// Signed-graph view; fails on non-2-uniform input.
    pub fn signed_view(&self) -> Result<SignedGraphView<'_>> {
        self.require_two_uniform()?;
        Ok(SignedGraphView { graph: self })
    }
}

/// Read-only signed-graph interpretation of a 2-uniform structure.
#[derive(Clone, Copy)]
pub struct SignedGraphView<'a> {
    graph: &'a IncidenceStructure,
}

impl<'a> SignedGraphView<'a> {
    pub fn structure(&self) -> &'a IncidenceStructure {
        self.graph
    }

    /// `(edge index, end1, end2, sign)` for every edge, in edge order.
    pub fn signed_edges(&self) -> Vec<(usize, usize, usize, i8)> {
        (0..self.graph.edge_count())
            .map(|e| {
                let (a, b) = self.graph.edge_endpoints(e);
                (e, a, b, self.graph.edge_sign(e))
            })
            .collect()
    }

    pub fn sign(&self, e: usize) -> i8 {
        self.graph.edge_sign(e)
    }
}

/// Reproducible random signed graph: every unordered pair becomes an edge
/// with probability `edge_prob`, and each edge is negative with
/// probability `neg_prob`. The underlying graph is simple.
pub fn random_signed_graph(
    n: usize,
    edge_prob: f64,
    neg_prob: f64,
    seed: u64,
) -> IncidenceStructure {
    assert!(n >= 1, "need at least one vertex");
    assert!((0.0..=1.0).contains(&edge_prob) && (0.0..=1.0).contains(&neg_prob));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut edges: Vec<(String, usize, usize, i8)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(edge_prob) {
                let sign = if rng.random_bool(neg_prob) { -1 } else { 1 };
                edges.push((format!("e{}", edges.len() + 1), i, j, sign));
            }
        }
    }
    let edge_refs: Vec<(&str, &str, &str, i8)> = edges
        .iter()
        .map(|(id, i, j, s)| (id.as_str(), name_refs[*i], name_refs[*j], *s))
        .collect();
    IncidenceStructure::from_signed_edges(&name_refs, &edge_refs)
        .expect("generated graph is always valid")
}
