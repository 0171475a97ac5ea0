//! Contributors: incidence-based cycle covers and their signed sums.
//!
//! A contributor assigns one move to every participating vertex. A move
//! exits the vertex through a tail incidence and either returns on the
//! same incidence (a backstep) or continues to another incidence of the
//! same edge (an adjacency move). The heads of the chosen moves must cover
//! the required vertex set bijectively.
//!
//! Reduced contributors drop prescribed `u_i -> w_i` maps: moves are
//! assigned to every vertex outside `u` and heads must cover the
//! complement of `w`. The dropped maps need not exist in the graph; every
//! stored move must.
//!
//! Enumeration is a deterministic backtracking over vertices in index
//! order, keeping memory proportional to the vertex count and streaming
//! results to a visitor.

use crate::error::Error;
use crate::incidence::IncidenceStructure;
use crate::Result;

/// Default cap on enumerated contributors per query.
pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;

/// One vertex move: `(tail, tail_slot, edge, head_slot, head)`. A backstep
/// reuses its tail incidence (`tail_slot == head_slot`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Move {
    pub tail: usize,
    pub edge: usize,
    pub tail_slot: usize,
    pub head_slot: usize,
    pub head: usize,
}

impl Move {
    pub fn is_backstep(&self) -> bool {
        self.tail_slot == self.head_slot
    }

    /// Adjacency sign of the move; backsteps do not complete an adjacency
    /// and count as positive.
    pub fn sign(&self, g: &IncidenceStructure) -> i8 {
        if self.is_backstep() {
            1
        } else {
            g.adjacency_sign(self.edge, self.tail_slot, self.head_slot)
        }
    }
}

/// A total contributor: one move per vertex, heads covering all vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contributor {
    pub moves: Vec<Move>,
}

/// A reduced contributor together with the ordered lists it was reduced
/// against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedContributor {
    pub moves: Vec<Move>,
    pub u: Vec<usize>,
    pub w: Vec<usize>,
}

/// A reduced contributor completed by its virtual `u_i -> w_i` maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnreducedContributor {
    pub real: Vec<Move>,
    pub virtual_maps: Vec<(usize, usize)>,
}

/// All moves available at a vertex, in deterministic order: incidences in
/// edge order, backstep before the adjacency continuations of each.
pub fn moves_from(g: &IncidenceStructure, v: usize) -> Vec<Move> {
    let mut out = Vec::new();
    for &(e, slot) in g.incidences_at(v) {
        out.push(Move {
            tail: v,
            edge: e,
            tail_slot: slot,
            head_slot: slot,
            head: v,
        });
        for (other, inc) in g.edge(e).incidences.iter().enumerate() {
            if other != slot {
                out.push(Move {
                    tail: v,
                    edge: e,
                    tail_slot: slot,
                    head_slot: other,
                    head: inc.vertex,
                });
            }
        }
    }
    out
}

fn has_duplicates(list: &[usize]) -> bool {
    list.iter()
        .enumerate()
        .any(|(i, v)| list[..i].contains(v))
}

struct Enumerator<'a> {
    catalogs: Vec<Vec<Move>>,
    free: Vec<usize>,
    head_used: Vec<bool>,
    chosen: Vec<Move>,
    count: u64,
    cap: u64,
    _g: &'a IncidenceStructure,
}

impl<'a> Enumerator<'a> {
    fn new(g: &'a IncidenceStructure, u: &[usize], w: &[usize], cap: u64) -> Self {
        let n = g.vertex_count();
        let in_u = mark(n, u);
        let in_w = mark(n, w);
        let free: Vec<usize> = (0..n).filter(|v| !in_u[*v]).collect();
        // A head is admissible when it lies outside w; filtering the
        // catalogs up front keeps the search loop tight.
        let catalogs = free
            .iter()
            .map(|&v| {
                moves_from(g, v)
                    .into_iter()
                    .filter(|m| !in_w[m.head])
                    .collect()
            })
            .collect();
        Enumerator {
            catalogs,
            free,
            head_used: vec![false; n],
            chosen: Vec::new(),
            count: 0,
            cap,
            _g: g,
        }
    }

    fn run(&mut self, f: &mut dyn FnMut(&[Move])) -> Result<u64> {
        self.recurse(0, f)?;
        Ok(self.count)
    }

    fn recurse(&mut self, level: usize, f: &mut dyn FnMut(&[Move])) -> Result<()> {
        if level == self.free.len() {
            self.count += 1;
            if self.count > self.cap {
                return Err(Error::CapacityExceeded { cap: self.cap as usize });
            }
            f(&self.chosen);
            return Ok(());
        }
        for idx in 0..self.catalogs[level].len() {
            let mv = self.catalogs[level][idx];
            if self.head_used[mv.head] {
                continue;
            }
            self.head_used[mv.head] = true;
            self.chosen.push(mv);
            let res = self.recurse(level + 1, f);
            self.chosen.pop();
            self.head_used[mv.head] = false;
            res?;
        }
        Ok(())
    }
}

fn mark(n: usize, list: &[usize]) -> Vec<bool> {
    let mut out = vec![false; n];
    for &v in list {
        out[v] = true;
    }
    out
}

fn check_query(g: &IncidenceStructure, u: &[usize], w: &[usize]) -> Result<()> {
    if u.len() != w.len() {
        return Err(Error::ArityMismatch {
            left: u.len(),
            right: w.len(),
        });
    }
    let n = g.vertex_count();
    for &v in u.iter().chain(w) {
        if v >= n {
            return Err(Error::BadIndex(format!("vertex index {v} of {n}")));
        }
    }
    Ok(())
}

/// Stream every total contributor to `f`; returns the count.
pub fn visit_contributors(
    g: &IncidenceStructure,
    cap: u64,
    f: &mut dyn FnMut(&[Move]),
) -> Result<u64> {
    Enumerator::new(g, &[], &[], cap).run(f)
}

/// Stream every reduced non-zero contributor for `(u, w)` to `f`.
///
/// Duplicate entries inside `u` or inside `w` make the set empty (a
/// degenerate query, not an error).
pub fn visit_reduced_nonzero(
    g: &IncidenceStructure,
    u: &[usize],
    w: &[usize],
    cap: u64,
    f: &mut dyn FnMut(&[Move]),
) -> Result<u64> {
    check_query(g, u, w)?;
    if has_duplicates(u) || has_duplicates(w) {
        return Ok(0);
    }
    Enumerator::new(g, u, w, cap).run(f)
}

/// Materialize all total contributors.
pub fn enumerate_contributors(g: &IncidenceStructure, cap: u64) -> Result<Vec<Contributor>> {
    let mut out = Vec::new();
    visit_contributors(g, cap, &mut |moves| {
        out.push(Contributor {
            moves: moves.to_vec(),
        });
    })?;
    Ok(out)
}

/// Materialize all reduced non-zero contributors for `(u, w)`.
pub fn enumerate_reduced_nonzero(
    g: &IncidenceStructure,
    u: &[usize],
    w: &[usize],
    cap: u64,
) -> Result<Vec<ReducedContributor>> {
    let mut out = Vec::new();
    visit_reduced_nonzero(g, u, w, cap, &mut |moves| {
        out.push(ReducedContributor {
            moves: moves.to_vec(),
            u: u.to_vec(),
            w: w.to_vec(),
        });
    })?;
    Ok(out)
}

/// A circle: a closed walk of at least two moves, all adjacency moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circle {
    /// Moves in traversal order, starting from the smallest vertex.
    pub moves: Vec<Move>,
    /// Product of the adjacency signs along the walk.
    pub sign: i8,
}

impl Circle {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Identity for order comparisons: the set of (edge, tail slot, head
    /// slot) steps of the walk.
    pub fn key(&self) -> Vec<(usize, usize, usize)> {
        let mut k: Vec<(usize, usize, usize)> = self
            .moves
            .iter()
            .map(|m| (m.edge, m.tail_slot, m.head_slot))
            .collect();
        k.sort_unstable();
        k
    }
}

/// A maximal run of adjacency moves from a vertex of `w \ u` to a vertex
/// of `u \ w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenPath {
    pub from: usize,
    pub to: usize,
    pub moves: Vec<Move>,
    pub sign: i8,
}

/// Component decomposition of a (possibly reduced) contributor, with the
/// three counters that drive the sign functions.
#[derive(Clone, Debug)]
pub struct ComponentDecomposition {
    pub circles: Vec<Circle>,
    pub open_paths: Vec<OpenPath>,
    pub backsteps: Vec<Move>,
    /// Even-length circles of the completion, where each reinstated
    /// `u_i -> w_i` hop extends the length by one and a `u_i = w_i`
    /// self-map stays a fixed point.
    pub ec: usize,
    /// Components (circles and open paths) whose adjacency-sign product is
    /// negative. Backsteps and virtual hops never contribute.
    pub nc: usize,
    /// Backsteps of the reduced object.
    pub bs: usize,
}

impl ComponentDecomposition {
    pub fn sgn_d(&self) -> i64 {
        if (self.ec + self.nc + self.bs) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn sgn_p(&self) -> i64 {
        if (self.nc + self.bs) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

fn validate_reduced(
    g: &IncidenceStructure,
    moves: &[Move],
    u: &[usize],
    w: &[usize],
) -> Result<()> {
    check_query(g, u, w)?;
    if has_duplicates(u) || has_duplicates(w) {
        return Err(Error::InvalidContributor(
            "query with repeated u or w entries has no contributors".into(),
        ));
    }
    let n = g.vertex_count();
    let in_u = mark(n, u);
    let in_w = mark(n, w);
    let mut tail_seen = vec![false; n];
    let mut head_seen = vec![false; n];
    for m in moves {
        let edge = g.edge(m.edge);
        let ok = m.tail_slot < edge.arity()
            && m.head_slot < edge.arity()
            && edge.incidences[m.tail_slot].vertex == m.tail
            && edge.incidences[m.head_slot].vertex == m.head;
        if !ok {
            return Err(Error::InvalidContributor(format!(
                "move at {} does not exist in the graph",
                g.vertex_name(m.tail)
            )));
        }
        if in_u[m.tail] || tail_seen[m.tail] {
            return Err(Error::InvalidContributor(format!(
                "unexpected or repeated tail {}",
                g.vertex_name(m.tail)
            )));
        }
        if in_w[m.head] || head_seen[m.head] {
            return Err(Error::InvalidContributor(format!(
                "unexpected or repeated head {}",
                g.vertex_name(m.head)
            )));
        }
        tail_seen[m.tail] = true;
        head_seen[m.head] = true;
    }
    for v in 0..n {
        if !in_u[v] && !tail_seen[v] {
            return Err(Error::InvalidContributor(format!(
                "vertex {} has no move",
                g.vertex_name(v)
            )));
        }
    }
    Ok(())
}

/// Decompose a reduced contributor (pass empty `u`, `w` for a total one)
/// into circles, backsteps, and open paths, and compute the counters.
pub fn decompose(
    g: &IncidenceStructure,
    moves: &[Move],
    u: &[usize],
    w: &[usize],
) -> Result<ComponentDecomposition> {
    validate_reduced(g, moves, u, w)?;
    let n = g.vertex_count();
    let in_u = mark(n, u);

    let mut move_at: Vec<Option<Move>> = vec![None; n];
    for m in moves {
        move_at[m.tail] = Some(*m);
    }

    let mut backsteps = Vec::new();
    let mut open_paths = Vec::new();
    let mut circles = Vec::new();
    let mut on_component = vec![false; n];

    for m in moves {
        if m.is_backstep() {
            backsteps.push(*m);
            on_component[m.tail] = true;
        }
    }
    // Open paths start exactly at the vertices of w that keep a move.
    for &start in w {
        if in_u[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut sign = 1i8;
        let mut cur = start;
        while !in_u[cur] {
            let m = move_at[cur].expect("validated: every free vertex moves");
            sign *= m.sign(g);
            on_component[cur] = true;
            walk.push(m);
            cur = m.head;
        }
        open_paths.push(OpenPath {
            from: start,
            to: cur,
            moves: walk,
            sign,
        });
    }
    // What remains (moves not on a path and not backsteps) closes into
    // circles.
    for v in 0..n {
        if in_u[v] || on_component[v] {
            continue;
        }
        let mut cur = v;
        let mut walk = Vec::new();
        let mut sign = 1i8;
        loop {
            let m = move_at[cur].expect("validated");
            on_component[cur] = true;
            sign *= m.sign(g);
            walk.push(m);
            cur = m.head;
            if cur == v {
                break;
            }
        }
        circles.push(Circle { moves: walk, sign });
    }

    // Completion cycles: follow real heads, jumping w_i -> (next) via the
    // virtual u_i -> w_i hops.
    let mut succ: Vec<usize> = vec![usize::MAX; n];
    let mut is_virtual_hop = vec![false; n];
    for v in 0..n {
        if let Some(m) = move_at[v] {
            succ[v] = m.head;
        }
    }
    for (i, &ui) in u.iter().enumerate() {
        succ[ui] = w[i];
        is_virtual_hop[ui] = true;
    }
    let mut ec = 0usize;
    let mut seen = vec![false; n];
    for v in 0..n {
        if seen[v] || succ[v] == usize::MAX {
            continue;
        }
        let mut len = 0usize;
        let mut cur = v;
        loop {
            seen[cur] = true;
            len += 1;
            cur = succ[cur];
            if cur == v {
                break;
            }
        }
        // Length-1 cycles are backsteps or virtual self-maps, not circles.
        if len >= 2 && len % 2 == 0 {
            // Backsteps are their own completion cycles of length 1, so a
            // length >= 2 cycle here is a genuine circle.
            ec += 1;
        }
    }
    // Real backsteps should not have been merged into longer cycles.
    debug_assert!(backsteps.iter().all(|b| succ[b.tail] == b.tail));

    let nc = circles.iter().filter(|c| c.sign < 0).count()
        + open_paths.iter().filter(|p| p.sign < 0).count();
    let bs = backsteps.len();
    Ok(ComponentDecomposition {
        circles,
        open_paths,
        backsteps,
        ec,
        nc,
        bs,
    })
}

/// Reinstate the dropped `u_i -> w_i` maps.
pub fn unreduce(c: &ReducedContributor) -> UnreducedContributor {
    UnreducedContributor {
        real: c.moves.clone(),
        virtual_maps: c.u.iter().copied().zip(c.w.iter().copied()).collect(),
    }
}

/// Determinant sign of a reduced contributor.
pub fn sgn_d(g: &IncidenceStructure, c: &ReducedContributor) -> Result<i64> {
    Ok(decompose(g, &c.moves, &c.u, &c.w)?.sgn_d())
}

/// Permanent sign of a reduced contributor.
pub fn sgn_p(g: &IncidenceStructure, c: &ReducedContributor) -> Result<i64> {
    Ok(decompose(g, &c.moves, &c.u, &c.w)?.sgn_p())
}

fn signed_sum(
    g: &IncidenceStructure,
    u1: usize,
    u2: usize,
    w1: usize,
    w2: usize,
    cap: u64,
    det: bool,
) -> Result<i64> {
    let u = [u1, u2];
    let w = [w1, w2];
    let mut total = 0i64;
    let mut bad = None;
    visit_reduced_nonzero(g, &u, &w, cap, &mut |moves| {
        match decompose(g, moves, &u, &w) {
            Ok(d) => total += if det { d.sgn_d() } else { d.sgn_p() },
            Err(e) => bad = Some(e),
        }
    })?;
    match bad {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// Signed contributor sum with the determinant sign; exhaustive over the
/// reduced non-zero set. Degenerate queries return 0.
pub fn transpedance_d_bruteforce(
    g: &IncidenceStructure,
    u1: usize,
    u2: usize,
    w1: usize,
    w2: usize,
    cap: u64,
) -> Result<i64> {
    signed_sum(g, u1, u2, w1, w2, cap, true)
}

/// Signed contributor sum with the permanent sign.
pub fn transpedance_p_bruteforce(
    g: &IncidenceStructure,
    u1: usize,
    u2: usize,
    w1: usize,
    w2: usize,
    cap: u64,
) -> Result<i64> {
    signed_sum(g, u1, u2, w1, w2, cap, false)
}

/// Size of the reduced non-zero contributor set.
pub fn reduced_count(
    g: &IncidenceStructure,
    u: &[usize],
    w: &[usize],
    cap: u64,
) -> Result<u64> {
    visit_reduced_nonzero(g, u, w, cap, &mut |_| {})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::{random_signed_graph, IncidenceStructure};
    use num_bigint::BigInt;

    fn k3() -> IncidenceStructure {
        IncidenceStructure::from_signed_edges(
            &["a", "b", "c"],
            &[("ab", "a", "b", 1), ("bc", "b", "c", 1), ("ca", "c", "a", 1)],
        )
        .unwrap()
    }

    fn c5() -> IncidenceStructure {
        IncidenceStructure::from_signed_edges(
            &["1", "2", "3", "4", "5"],
            &[
                ("e12", "1", "2", 1),
                ("e23", "2", "3", 1),
                ("e34", "3", "4", 1),
                ("e45", "4", "5", 1),
                ("e51", "5", "1", 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn single_edge_has_two_contributors() {
        let g = IncidenceStructure::from_signed_edges(&["a", "b"], &[("e", "a", "b", 1)])
            .unwrap();
        let all = enumerate_contributors(&g, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(all.len(), 2);
    }

    #[test]
    fn k3_contributor_census() {
        let all = enumerate_contributors(&k3(), DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(all.len(), 16);
        let backstep_counts: Vec<usize> = all
            .iter()
            .map(|c| c.moves.iter().filter(|m| m.is_backstep()).count())
            .collect();
        // 8 identity clones, 6 transposition realizations, 2 three-circles.
        assert_eq!(backstep_counts.iter().filter(|&&b| b == 3).count(), 8);
        assert_eq!(backstep_counts.iter().filter(|&&b| b == 1).count(), 6);
        assert_eq!(backstep_counts.iter().filter(|&&b| b == 0).count(), 2);
    }

    #[test]
    fn path_contributor_count_matches_permanent() {
        let p3 = IncidenceStructure::from_signed_edges(
            &["a", "b", "c"],
            &[("ab", "a", "b", 1), ("bc", "b", "c", 1)],
        )
        .unwrap();
        let all = enumerate_contributors(&p3, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(all.len(), 4);
        assert_eq!(
            BigInt::from(all.len()),
            p3.signless_laplacian().permanent().unwrap()
        );
    }

    #[test]
    fn contributor_count_equals_signless_permanent_on_random_graphs() {
        for seed in 0..15 {
            let g = random_signed_graph(5, 0.7, 0.4, seed);
            let count = visit_contributors(&g, DEFAULT_ENUM_CAP, &mut |_| {}).unwrap();
            assert_eq!(
                BigInt::from(count),
                g.signless_laplacian().permanent().unwrap(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn reduced_sets_on_k3() {
        let g = k3();
        // u = (a,b), w = (a,b): only c keeps a move and must head itself.
        let set = enumerate_reduced_nonzero(&g, &[0, 1], &[0, 1], DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(set.len(), 2);
        assert!(set.iter().all(|c| c.moves.len() == 1 && c.moves[0].is_backstep()));
        // u = (a,b), w = (a,c): c must head b.
        let set = enumerate_reduced_nonzero(&g, &[0, 1], &[0, 2], DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(set.len(), 1);
        assert_eq!(set[0].moves[0].head, 1);
        // Repeated u entries: empty, not an error.
        let set = enumerate_reduced_nonzero(&g, &[0, 0], &[0, 1], DEFAULT_ENUM_CAP).unwrap();
        assert!(set.is_empty());
    }

    #[test]
    fn unknown_vertices_rejected() {
        let g = k3();
        assert!(enumerate_reduced_nonzero(&g, &[0, 9], &[0, 1], DEFAULT_ENUM_CAP).is_err());
    }

    #[test]
    fn decomposition_counters_match_worked_examples() {
        let g = k3();
        // c backstep under u=(a,b), w=(a,b): both virtual maps are
        // self-maps.
        let c = &enumerate_reduced_nonzero(&g, &[0, 1], &[0, 1], DEFAULT_ENUM_CAP).unwrap()[0];
        let d = decompose(&g, &c.moves, &c.u, &c.w).unwrap();
        assert_eq!((d.ec, d.nc, d.bs), (0, 0, 1));
        assert_eq!(d.sgn_d(), -1);

        // c -> b under u=(a,b), w=(a,c): the virtual b -> c hop closes an
        // even circle.
        let c = &enumerate_reduced_nonzero(&g, &[0, 1], &[0, 2], DEFAULT_ENUM_CAP).unwrap()[0];
        let d = decompose(&g, &c.moves, &c.u, &c.w).unwrap();
        assert_eq!((d.ec, d.nc, d.bs), (1, 0, 0));
        assert_eq!(d.open_paths.len(), 1);
        assert_eq!((d.open_paths[0].from, d.open_paths[0].to), (2, 1));

        // C5, u=(1,3), w=(1,2), element {2->3, 4<->5}: two even circles.
        let g5 = c5();
        let set = enumerate_reduced_nonzero(&g5, &[0, 2], &[0, 1], DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(set.len(), 5);
        let two_circle = set
            .iter()
            .find(|c| c.moves.iter().all(|m| !m.is_backstep()))
            .expect("the 4<->5 element exists");
        let d = decompose(&g5, &two_circle.moves, &two_circle.u, &two_circle.w).unwrap();
        assert_eq!((d.ec, d.nc, d.bs), (2, 0, 0));
        assert_eq!(d.sgn_d(), 1);
        assert_eq!(d.circles.len(), 1);
        assert_eq!(d.circles[0].len(), 2);
    }

    #[test]
    fn identity_clone_permanent_sign() {
        let g = k3();
        let all = enumerate_contributors(&g, DEFAULT_ENUM_CAP).unwrap();
        let id = all
            .iter()
            .find(|c| c.moves.iter().all(Move::is_backstep))
            .unwrap();
        let d = decompose(&g, &id.moves, &[], &[]).unwrap();
        assert_eq!(d.sgn_p(), -1);
        assert_eq!(d.bs, 3);
    }

    #[test]
    fn brute_force_transpedances_on_worked_graphs() {
        let g = k3();
        assert_eq!(
            transpedance_d_bruteforce(&g, 0, 1, 0, 1, DEFAULT_ENUM_CAP).unwrap(),
            -2
        );
        let g5 = c5();
        assert_eq!(
            transpedance_d_bruteforce(&g5, 0, 2, 0, 1, DEFAULT_ENUM_CAP).unwrap(),
            -3
        );
    }

    #[test]
    fn degenerate_transpedance_is_zero() {
        let g = k3();
        assert_eq!(
            transpedance_d_bruteforce(&g, 0, 0, 0, 1, DEFAULT_ENUM_CAP).unwrap(),
            0
        );
        assert_eq!(
            transpedance_d_bruteforce(&g, 0, 1, 2, 2, DEFAULT_ENUM_CAP).unwrap(),
            0
        );
        assert_eq!(
            transpedance_p_bruteforce(&g, 0, 0, 0, 1, DEFAULT_ENUM_CAP).unwrap(),
            0
        );
    }

    #[test]
    fn open_paths_link_w_to_u() {
        let g5 = c5();
        let u = [0usize, 2];
        let w = [3usize, 4];
        let set = enumerate_reduced_nonzero(&g5, &u, &w, DEFAULT_ENUM_CAP).unwrap();
        assert!(!set.is_empty());
        for c in &set {
            let d = decompose(&g5, &c.moves, &c.u, &c.w).unwrap();
            let mut froms: Vec<usize> = d.open_paths.iter().map(|p| p.from).collect();
            let mut tos: Vec<usize> = d.open_paths.iter().map(|p| p.to).collect();
            froms.sort_unstable();
            tos.sort_unstable();
            assert_eq!(froms, vec![3, 4], "paths start at w \\ u");
            assert_eq!(tos, vec![0, 2], "paths end in u \\ w");
        }
    }

    #[test]
    fn capacity_guard_trips() {
        let g = random_signed_graph(6, 1.0, 0.0, 1);
        let err = visit_contributors(&g, 10, &mut |_| {});
        assert!(matches!(err, Err(Error::CapacityExceeded { .. })));
    }

    #[test]
    fn signed_transpedance_matches_matrix_coefficient_spot_check() {
        // K3 with a negative bc edge: the open-path sign must flip the
        // contributor, matching the matrix coefficient.
        let g = IncidenceStructure::from_signed_edges(
            &["a", "b", "c"],
            &[("ab", "a", "b", 1), ("bc", "b", "c", -1), ("ca", "c", "a", 1)],
        )
        .unwrap();
        let l = g.laplacian();
        for (u1, u2, w1, w2) in [(0, 1, 0, 2), (0, 1, 0, 1), (0, 2, 1, 2), (1, 2, 0, 2)] {
            let brute = transpedance_d_bruteforce(&g, u1, u2, w1, w2, DEFAULT_ENUM_CAP).unwrap();
            let coeff = l.totalminor_coeff2_det(u1, w1, u2, w2).unwrap();
            assert_eq!(BigInt::from(brute), coeff, "({u1},{u2},{w1},{w2})");
        }
    }
}
