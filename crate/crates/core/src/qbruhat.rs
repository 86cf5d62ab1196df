//! The quantum Bruhat graph `D(W)`, tilted Bruhat orders, and their
//! embedding into the superregular affine Bruhat order.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::cartan::{CorootVec, RootSystem};
use crate::error::{Error, Result};
use crate::weyl::{format_word, AffineElt, CoverKind, WeylElt};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EdgeKind {
    Bruhat,
    Quantum,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct QBEdge {
    pub from: usize,
    pub to: usize,
    /// Index into the positive roots.
    pub root: usize,
    pub kind: EdgeKind,
}

/// A path in `D(W)`, given by its start vertex and edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QBPath {
    pub start: usize,
    pub edges: Vec<QBEdge>,
}

impl QBPath {
    pub fn end(&self) -> usize {
        self.edges.last().map_or(self.start, |e| e.to)
    }
}

pub struct QBGraph<'a> {
    pub rs: &'a RootSystem,
    pub vertices: Vec<WeylElt>,
    index: HashMap<WeylElt, usize>,
    pub out: Vec<Vec<QBEdge>>,
    dist: Vec<Vec<usize>>,
}

const UNREACHED: usize = usize::MAX;

impl<'a> QBGraph<'a> {
    pub fn build(rs: &'a RootSystem) -> Self {
        let vertices = rs.weyl_elements().to_vec();
        let index: HashMap<WeylElt, usize> = vertices.iter().enumerate().map(|(k, w)| (*w, k)).collect();
        let refl: Vec<WeylElt> = rs.positive_roots().iter().map(|a| rs.reflection(a).expect("root")).collect();
        let lens: Vec<i64> = vertices.iter().map(|w| rs.weyl_length(w) as i64).collect();
        let mut out = vec![Vec::new(); vertices.len()];
        for (k, w) in vertices.iter().enumerate() {
            for (a, ra) in refl.iter().enumerate() {
                let h = 2 * rs.positive_coroots()[a].coord_sum();
                let u = index[&w.mul(ra)];
                let kind = if lens[u] == lens[k] + 1 {
                    EdgeKind::Bruhat
                } else if lens[u] == lens[k] + 1 - h {
                    EdgeKind::Quantum
                } else {
                    continue;
                };
                out[k].push(QBEdge { from: k, to: u, root: a, kind });
            }
        }
        let dist = (0..vertices.len()).map(|s| bfs(&out, s)).collect();
        QBGraph { rs, vertices, index, out, dist }
    }

    pub fn index_of(&self, w: &WeylElt) -> usize {
        self.index[w]
    }

    pub fn num_edges(&self, kind: EdgeKind) -> usize {
        self.out.iter().flatten().filter(|e| e.kind == kind).count()
    }

    pub fn edges(&self) -> impl Iterator<Item = &QBEdge> {
        self.out.iter().flatten()
    }

    /// Directed distance in `D(W)`.
    pub fn distance(&self, u: &WeylElt, w: &WeylElt) -> usize {
        self.dist[self.index[u]][self.index[w]]
    }

    /// `w ⪯_u v`: some shortest path from `u` to `v` passes through `w`.
    pub fn tilted_leq(&self, u: &WeylElt, w: &WeylElt, v: &WeylElt) -> bool {
        let (u, w, v) = (self.index[u], self.index[w], self.index[v]);
        self.dist[u][w] + self.dist[w][v] == self.dist[u][v]
    }

    /// Every shortest path from `u` to `w`.
    pub fn shortest_paths(&self, u: usize, w: usize) -> Vec<QBPath> {
        let d = &self.dist[u];
        let mut done = Vec::new();
        let mut stack = vec![QBPath { start: u, edges: Vec::new() }];
        while let Some(p) = stack.pop() {
            let at = p.end();
            if at == w {
                done.push(p);
                continue;
            }
            for e in &self.out[at] {
                if d[e.to] == d[at] + 1 && self.dist[e.to][w] != UNREACHED && d[e.to] + self.dist[e.to][w] == d[w] {
                    let mut q = p.clone();
                    q.edges.push(*e);
                    stack.push(q);
                }
            }
        }
        done.reverse();
        done
    }

    /// Endpoint of the affine path induced by `P` inside the chamber of
    /// `t_{vλ}` (`v` the start of `P`): every edge becomes a near cocover.
    pub fn path_endpoint(&self, p: &QBPath, lambda: &CorootVec) -> Result<AffineElt> {
        let rs = self.rs;
        let v = self.vertices[p.start];
        match rs.budget(lambda) {
            Some(b) if b >= p.edges.len() as i64 && rs.is_antidominant(lambda) => {}
            _ => return Err(Error::Budget(format!("path of length {} too long for {:?}", p.edges.len(), lambda))),
        }
        let mut x = rs.aff_translation(rs.act_coroot(&v, lambda));
        let mut mu = *lambda;
        for e in &p.edges {
            let alpha = rs.positive_roots()[e.root];
            let vee = rs.positive_coroots()[e.root];
            if e.kind == EdgeKind::Quantum {
                mu += vee;
            }
            let w = x.w.mul(&rs.reflection(&v.act_root(&alpha))?);
            let y = AffineElt { w, t: rs.act_coroot(&v, &mu) };
            let covers = rs.cocovers_superregular(&x)?;
            let expected_case = if e.kind == EdgeKind::Bruhat { 1 } else { 2 };
            let hits = covers
                .iter()
                .filter(|c| c.kind == CoverKind::Near && c.target == y && c.case == expected_case && c.alpha == Some(e.root))
                .count();
            if hits != 1 {
                return Err(Error::Invariant(format!("edge {:?} does not match a unique near cocover", e)));
            }
            x = y;
        }
        Ok(x)
    }

    /// `x(u, w)` for all `w`, checking along the way that every shortest path
    /// gives the same endpoint.
    pub fn tilted_embedding(&self, u: &WeylElt, lambda: &CorootVec) -> Result<Vec<AffineElt>> {
        let ui = self.index[u];
        let mut xs = Vec::with_capacity(self.vertices.len());
        for w in 0..self.vertices.len() {
            let paths = self.shortest_paths(ui, w);
            let first = self.path_endpoint(&paths[0], lambda)?;
            for p in &paths[1..] {
                if self.path_endpoint(p, lambda)? != first {
                    return Err(Error::Invariant(format!(
                        "shortest paths from {} to {} disagree",
                        self.label(ui),
                        self.label(w)
                    )));
                }
            }
            xs.push(first);
        }
        Ok(xs)
    }

    /// Checks that `w ↦ x(u, w)` is an order-reversing embedding of `D_u(W)`
    /// onto an induced suborder.  Returns the number of comparisons made.
    pub fn verify_tilted_embedding(&self, u: &WeylElt) -> Result<usize> {
        let rs = self.rs;
        let longest = (0..self.vertices.len()).map(|w| self.dist[self.index[u]][w]).max().unwrap_or(0);
        let lambda = rs.deep_antidominant(longest as i64);
        let xs = self.tilted_embedding(u, &lambda)?;
        let n = self.vertices.len();
        let mut comparisons = 0;
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                let tilted = self.tilted_leq(u, &self.vertices[a], &self.vertices[b]);
                let affine = rs.bruhat_leq(&xs[b], &xs[a]);
                comparisons += 2;
                if tilted != affine {
                    return Err(Error::Invariant(format!(
                        "u = {}: {} ⪯ {} is {tilted} but the affine comparison is {affine}",
                        self.label(self.index[u]),
                        self.label(a),
                        self.label(b)
                    )));
                }
            }
        }
        Ok(comparisons)
    }

    pub fn label(&self, k: usize) -> String {
        format_word(&self.rs.weyl_reduced_word(&self.vertices[k]), "s").replace(' ', "")
    }

    pub fn to_dot(&self) -> String {
        let r = self.rs.rank();
        let mut s = String::from("digraph QBG {\n");
        for k in 0..self.vertices.len() {
            let _ = writeln!(s, "  v{k} [label=\"{}\"];", self.label(k));
        }
        for e in self.edges() {
            let style = if e.kind == EdgeKind::Bruhat { "solid" } else { "dashed" };
            let vee = self.rs.positive_coroots()[e.root].to_csv(r);
            let _ = writeln!(s, "  v{} -> v{} [style={style}, label=\"{vee}\"];", e.from, e.to);
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        let r = self.rs.rank();
        let adj: Vec<Value> = (0..self.vertices.len())
            .map(|k| {
                json!({
                    "vertex": self.label(k),
                    "edges": self.out[k].iter().map(|e| json!({
                        "to": self.label(e.to),
                        "kind": if e.kind == EdgeKind::Bruhat { "bruhat" } else { "quantum" },
                        "coroot": self.rs.positive_coroots()[e.root].to_csv(r),
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({ "type": self.rs.label(), "vertices": self.vertices.len(), "adjacency": adj })
    }
}

fn bfs(out: &[Vec<QBEdge>], s: usize) -> Vec<usize> {
    let mut d = vec![UNREACHED; out.len()];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(a) = q.pop_front() {
        for e in &out[a] {
            if d[e.to] == UNREACHED {
                d[e.to] = d[a] + 1;
                q.push_back(e.to);
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_graph() {
        let a1 = RootSystem::build("A1").unwrap();
        let g = QBGraph::build(&a1);
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.num_edges(EdgeKind::Bruhat), 1);
        assert_eq!(g.num_edges(EdgeKind::Quantum), 1);
    }

    #[test]
    fn a2_graph() {
        let a2 = RootSystem::build("A2").unwrap();
        let g = QBGraph::build(&a2);
        assert_eq!(g.num_edges(EdgeKind::Bruhat), 8);
        assert_eq!(g.num_edges(EdgeKind::Quantum), 7);
        let w0 = a2.longest_element();
        assert_eq!(g.distance(&w0, &a2.weyl_identity()), 1);
        for w in &g.vertices[1..] {
            assert!(g.edges().any(|e| e.kind == EdgeKind::Bruhat && g.vertices[e.to] == *w));
        }
    }

    #[test]
    fn tilted_at_identity_is_bruhat() {
        let a2 = RootSystem::build("A2").unwrap();
        let g = QBGraph::build(&a2);
        let id = a2.weyl_identity();
        for w in &g.vertices {
            for v in &g.vertices {
                let bruhat = a2.bruhat_leq(&a2.aff_finite(*w), &a2.aff_finite(*v));
                assert_eq!(g.tilted_leq(&id, w, v), bruhat);
            }
            assert!(g.tilted_leq(w, w, &g.vertices[3]));
        }
    }

    #[test]
    fn quantum_edge_endpoint_shifts_translation() {
        let a1 = RootSystem::build("A1").unwrap();
        let g = QBGraph::build(&a1);
        let s = g.index_of(&a1.simple_reflection(1));
        let lambda = a1.deep_antidominant(2);
        let p = QBPath { start: s, edges: g.out[s].clone() };
        assert_eq!(p.edges[0].kind, EdgeKind::Quantum);
        let x = g.path_endpoint(&p, &lambda).unwrap();
        let v = a1.simple_reflection(1);
        assert_eq!(x.t, a1.act_coroot(&v, &(lambda + a1.simple_coroot(1))));
        assert_eq!(x.w.mul(&v), a1.weyl_identity());
    }

    #[test]
    fn embedding_small_cases() {
        let a2 = RootSystem::build("A2").unwrap();
        let g = QBGraph::build(&a2);
        assert_eq!(g.verify_tilted_embedding(&a2.weyl_identity()).unwrap(), 60);
        g.verify_tilted_embedding(&a2.longest_element()).unwrap();
        let a1 = RootSystem::build("A1").unwrap();
        let g1 = QBGraph::build(&a1);
        for u in &g1.vertices {
            g1.verify_tilted_embedding(u).unwrap();
        }
    }
}
