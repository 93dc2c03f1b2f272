//! Labeled simple undirected graphs and the surgeries the reduction
//! identities and family builders need.
//!
//! Graphs are immutable after construction; every surgery returns a new
//! graph. Surgeries that relabel vertices also return the old-to-new index
//! map so callers can track named pivot vertices across steps.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

pub const ISOMORPHISM_GUARD: usize = 10;

/// Simple undirected graph on vertices `0..order`, adjacency by index.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

/// Subset of a graph's vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexSet {
    members: BTreeSet<usize>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet::default()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn insert(&mut self, v: usize) {
        self.members.insert(v);
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet {
            members: iter.into_iter().collect(),
        }
    }
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges collapse silently.
    pub fn build(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![BTreeSet::new(); order];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { index: w, order });
                }
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    pub fn empty(order: usize) -> Graph {
        Graph {
            adj: vec![BTreeSet::new(); order],
        }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::build(n, &edges).expect("valid edges")
    }

    /// Path `P_n` on vertices `0..n` in index order.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::build(n, &edges).expect("valid edges")
    }

    /// Cycle `C_n` (requires n >= 3).
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::build(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(&v)
    }

    /// Edges as pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            return Err(Error::VertexOutOfRange {
                index: v,
                order: self.order(),
            });
        }
        Ok(())
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        for v in s.iter() {
            self.check_vertex(v)?;
        }
        Ok(())
    }

    /// Open neighborhood `N(S)` or, with `closed`, `N[S] = N(S) ∪ S`.
    pub fn neighborhood(&self, s: &VertexSet, closed: bool) -> Result<VertexSet> {
        self.check_set(s)?;
        let mut out = BTreeSet::new();
        for v in s.iter() {
            out.extend(self.adj[v].iter().copied());
        }
        if closed {
            out.extend(s.iter());
        }
        Ok(VertexSet { members: out })
    }

    /// Induced subgraph on `V \ S`. Survivors are relabeled `0..` in
    /// ascending original-index order; the returned map sends old index to
    /// its new label (None for deleted vertices).
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        self.check_set(s)?;
        let mut map = vec![None; self.order()];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !s.contains(v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut adj = vec![BTreeSet::new(); next];
        for v in 0..self.order() {
            if let Some(nv) = map[v] {
                for &w in &self.adj[v] {
                    if let Some(nw) = map[w] {
                        adj[nv].insert(nw);
                    }
                }
            }
        }
        Ok((Graph { adj }, map))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<Option<usize>>)> {
        self.delete_vertices(&[v].into_iter().collect())
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge { u, v });
        }
        let mut adj = self.adj.clone();
        adj[u].remove(&v);
        adj[v].remove(&u);
        Ok(Graph { adj })
    }

    /// Vertex contraction `G/u`: all of `N(u)` joined pairwise, then `u`
    /// deleted, with the same relabeling as `delete_vertices`.
    pub fn contract_vertex(&self, u: usize) -> Result<(Graph, Vec<Option<usize>>)> {
        self.check_vertex(u)?;
        let mut joined = self.clone();
        let nbrs: Vec<usize> = self.adj[u].iter().copied().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                joined.adj[a].insert(b);
                joined.adj[b].insert(a);
            }
        }
        joined.delete_vertex(u)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|s| s.is_empty())
    }

    /// Brute-force isomorphism test, guarded to small orders. Vertices are
    /// matched by backtracking with a degree prefilter.
    pub fn isomorphic_small(&self, other: &Graph) -> Result<bool> {
        let n = self.order();
        for g in [self, other] {
            if g.order() > ISOMORPHISM_GUARD {
                return Err(Error::IsomorphismGuardExceeded {
                    order: g.order(),
                    guard: ISOMORPHISM_GUARD,
                });
            }
        }
        if n != other.order() || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        let mut deg_a: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut deg_b: Vec<usize> = (0..n).map(|v| other.degree(v)).collect();
        deg_a.sort_unstable();
        deg_b.sort_unstable();
        if deg_a != deg_b {
            return Ok(false);
        }

        fn extend(a: &Graph, b: &Graph, map: &mut Vec<Option<usize>>, used: &mut Vec<bool>) -> bool {
            let u = match map.iter().position(|m| m.is_none()) {
                Some(u) => u,
                None => return true,
            };
            for cand in 0..b.order() {
                if used[cand] || a.degree(u) != b.degree(cand) {
                    continue;
                }
                let consistent = (0..a.order()).all(|w| match map[w] {
                    Some(mw) => a.has_edge(u, w) == b.has_edge(cand, mw),
                    None => true,
                });
                if consistent {
                    map[u] = Some(cand);
                    used[cand] = true;
                    if extend(a, b, map, used) {
                        return true;
                    }
                    map[u] = None;
                    used[cand] = false;
                }
            }
            false
        }

        let mut map = vec![None; n];
        let mut used = vec![false; n];
        Ok(extend(self, other, &mut map, &mut used))
    }
}

/// One identification step for `point_attach`: merge `vertex_a` of part
/// `part_a` with `vertex_b` of part `part_b` (part-local vertex indices).
#[derive(Clone, Copy, Debug)]
pub struct Attachment {
    pub part_a: usize,
    pub vertex_a: usize,
    pub part_b: usize,
    pub vertex_b: usize,
}

/// Builds a point-attaching of the given parts: each step identifies one
/// vertex of two previously disjoint merged components, so the steps must
/// form a tree over the parts. Resulting order is the sum of part orders
/// minus the number of steps. Final labels follow ascending smallest
/// original (concatenated) index per merged vertex class.
pub fn point_attach(parts: &[Graph], steps: &[Attachment]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::InvalidParameter("point_attach needs at least one part".into()));
    }
    let mut offsets = Vec::with_capacity(parts.len());
    let mut total = 0;
    for p in parts {
        offsets.push(total);
        total += p.order();
    }

    // union-find over global vertex ids, rooted at the smallest member
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    // component tracking over parts, to enforce the tree shape
    let mut part_comp: Vec<usize> = (0..parts.len()).collect();
    fn pfind(comp: &mut [usize], mut x: usize) -> usize {
        while comp[x] != x {
            comp[x] = comp[comp[x]];
            x = comp[x];
        }
        x
    }

    for step in steps {
        for (part, vertex) in [(step.part_a, step.vertex_a), (step.part_b, step.vertex_b)] {
            if part >= parts.len() {
                return Err(Error::InvalidParameter(format!(
                    "attachment references missing part {part}"
                )));
            }
            if vertex >= parts[part].order() {
                return Err(Error::VertexOutOfRange {
                    index: vertex,
                    order: parts[part].order(),
                });
            }
        }
        let ca = pfind(&mut part_comp, step.part_a);
        let cb = pfind(&mut part_comp, step.part_b);
        if ca == cb {
            return Err(Error::InvalidParameter(
                "identifications must form a tree over the parts".into(),
            ));
        }
        part_comp[ca] = cb;
        let ga = offsets[step.part_a] + step.vertex_a;
        let gb = offsets[step.part_b] + step.vertex_b;
        let (ra, rb) = (find(&mut parent, ga), find(&mut parent, gb));
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        parent[hi] = lo;
    }
    if (0..parts.len()).map(|p| pfind(&mut part_comp, p)).collect::<BTreeSet<_>>().len() != 1 {
        return Err(Error::InvalidParameter(
            "identifications must connect all parts into one tree".into(),
        ));
    }

    // relabel classes in ascending order of their smallest global id
    let mut label = vec![None; total];
    let mut next = 0;
    for g in 0..total {
        let r = find(&mut parent, g);
        if label[r].is_none() {
            label[r] = Some(next);
            next += 1;
        }
        label[g] = label[r];
    }

    let mut adj = vec![BTreeSet::new(); next];
    for (pi, p) in parts.iter().enumerate() {
        for (u, v) in p.edges() {
            let (gu, gv) = (
                label[offsets[pi] + u].unwrap(),
                label[offsets[pi] + v].unwrap(),
            );
            if gu == gv {
                return Err(Error::SelfLoop { v: gu });
            }
            adj[gu].insert(gv);
            adj[gv].insert(gu);
        }
    }
    Ok(Graph { adj })
}

/// Parses the edge-list interchange format: first non-comment line `n m`,
/// then `m` lines `u v` with 0-based indices; `#` starts a comment line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing header line".into()))?;
    let mut it = header.split_whitespace();
    let order: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad header: {header:?}")))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad header: {header:?}")))?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {m} edge lines")))?;
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge line: {line:?}")))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge line: {line:?}")))?;
        edges.push((u, v));
    }
    Graph::build(order, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vs(items: &[usize]) -> VertexSet {
        items.iter().copied().collect()
    }

    #[test]
    fn build_examples() {
        let p3 = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        let c4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!(matches!(
            Graph::build(2, &[(0, 0)]),
            Err(Error::SelfLoop { v: 0 })
        ));
        assert!(matches!(
            Graph::build(2, &[(0, 5)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        // duplicates collapse
        let g = Graph::build(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn neighborhood_examples() {
        let p3 = Graph::path(3);
        assert_eq!(p3.neighborhood(&vs(&[1]), false).unwrap(), vs(&[0, 2]));
        assert_eq!(p3.neighborhood(&vs(&[0]), true).unwrap(), vs(&[0, 1]));
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.neighborhood(&vs(&[0, 2]), false).unwrap(), vs(&[1, 3]));
    }

    #[test]
    fn delete_vertices_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let (g, map) = c4.delete_vertex(0).unwrap();
        assert!(g.isomorphic_small(&Graph::path(3)).unwrap());
        assert_eq!(map, vec![None, Some(0), Some(1), Some(2)]);

        let (g, _) = Graph::path(3).delete_vertex(1).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.edge_count(), 0);

        let closed = c4.neighborhood(&vs(&[0, 1]), true).unwrap();
        let (g, _) = c4.delete_vertices(&closed).unwrap();
        assert_eq!(g.order(), 0);
    }

    #[test]
    fn delete_edge_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let g = c4.delete_edge(0, 1).unwrap();
        assert!(g.isomorphic_small(&Graph::path(4)).unwrap());
        let k3 = Graph::complete(3);
        assert!(k3
            .delete_edge(1, 2)
            .unwrap()
            .isomorphic_small(&Graph::path(3))
            .unwrap());
        assert!(matches!(
            Graph::path(3).delete_edge(0, 2),
            Err(Error::MissingEdge { u: 0, v: 2 })
        ));
    }

    #[test]
    fn contract_examples() {
        let p3 = Graph::path(3);
        let (g, _) = p3.contract_vertex(1).unwrap();
        assert!(g.isomorphic_small(&Graph::complete(2)).unwrap());
        let (g, _) = p3.contract_vertex(0).unwrap();
        assert!(g.isomorphic_small(&Graph::path(2)).unwrap());
        let c4 = Graph::cycle(4).unwrap();
        let (g, _) = c4.contract_vertex(0).unwrap();
        assert!(g.isomorphic_small(&Graph::complete(3)).unwrap());
    }

    #[test]
    fn isolated_examples() {
        assert!(Graph::empty(1).has_isolated_vertex());
        assert!(!Graph::path(2).has_isolated_vertex());
        let (g, _) = Graph::path(3).delete_vertex(1).unwrap();
        assert!(g.has_isolated_vertex());
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(!c4.isomorphic_small(&Graph::path(4)).unwrap());
        let p3_relabeled = Graph::build(3, &[(2, 1), (1, 0)]).unwrap();
        assert!(Graph::path(3).isomorphic_small(&p3_relabeled).unwrap());
        assert!(matches!(
            Graph::empty(11).isomorphic_small(&Graph::empty(11)),
            Err(Error::IsomorphismGuardExceeded { .. })
        ));
    }

    #[test]
    fn point_attach_bowtie() {
        let bowtie = point_attach(
            &[Graph::complete(3), Graph::complete(3)],
            &[Attachment {
                part_a: 0,
                vertex_a: 0,
                part_b: 1,
                vertex_b: 0,
            }],
        )
        .unwrap();
        assert_eq!(bowtie.order(), 5);
        assert_eq!(bowtie.edge_count(), 6);
        assert_eq!(bowtie.degree(0), 4);
    }

    #[test]
    fn point_attach_rejects_non_tree() {
        let err = point_attach(
            &[Graph::complete(3), Graph::complete(3)],
            &[
                Attachment { part_a: 0, vertex_a: 0, part_b: 1, vertex_b: 0 },
                Attachment { part_a: 0, vertex_a: 1, part_b: 1, vertex_b: 1 },
            ],
        );
        assert!(matches!(err, Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        let commented = format!("# a comment\n{text}");
        assert_eq!(parse_edge_list(&commented).unwrap(), g);
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 1\n0 0\n").is_err());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            prop::collection::vec(prop::bool::ANY, pairs.len()).prop_map(move |mask| {
                let edges: Vec<_> = pairs
                    .iter()
                    .zip(&mask)
                    .filter(|(_, keep)| **keep)
                    .map(|(e, _)| *e)
                    .collect();
                Graph::build(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn surgery_orders(g in arb_graph(7), pick in 0usize..7) {
            let u = pick % g.order();
            let (d, _) = g.delete_vertex(u).unwrap();
            let (c, _) = g.contract_vertex(u).unwrap();
            prop_assert_eq!(d.order(), g.order() - 1);
            prop_assert_eq!(c.order(), g.order() - 1);
            // simplicity invariants survive
            for h in [&d, &c] {
                for v in 0..h.order() {
                    prop_assert!(!h.has_edge(v, v));
                    for &w in h.neighbors(v) {
                        prop_assert!(h.has_edge(w, v));
                    }
                }
            }
        }

        #[test]
        fn closed_neighborhood_contains_open_and_set(g in arb_graph(7), picks in prop::collection::btree_set(0usize..7, 0..4)) {
            let s: VertexSet = picks.into_iter().filter(|&v| v < g.order()).collect();
            let open = g.neighborhood(&s, false).unwrap();
            let closed = g.neighborhood(&s, true).unwrap();
            for v in open.iter() {
                prop_assert!(closed.contains(v));
            }
            for v in s.iter() {
                prop_assert!(closed.contains(v));
            }
        }

        #[test]
        fn contracting_a_leaf_matches_deleting_it(g in arb_graph(7)) {
            if let Some(leaf) = (0..g.order()).find(|&v| g.degree(v) == 1) {
                let (c, _) = g.contract_vertex(leaf).unwrap();
                let (d, _) = g.delete_vertex(leaf).unwrap();
                prop_assert!(c.isomorphic_small(&d).unwrap());
            }
        }
    }
}
