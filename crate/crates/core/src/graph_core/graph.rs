use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const UNREACHED: u32 = u32::MAX;

/// A finite simple undirected graph on `0..vertex_count` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<u32>>,
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n_vertices: usize,
    edges: Vec<[u32; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    labels: Option<Vec<String>>,
}

impl SimpleGraph {
    pub fn empty(vertex_count: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); vertex_count],
            labels: None,
        }
    }

    /// Duplicate edges are merged; loops and out-of-range endpoints are rejected.
    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::PreconditionViolated(format!(
                    "edge ({u}, {v}) outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::PreconditionViolated(format!("loop at vertex {u}")));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        Ok(Self::from_adjacency_unchecked(adj))
    }

    /// Sorts and deduplicates each list; the caller guarantees symmetry and no loops.
    pub(crate) fn from_adjacency_unchecked(mut adj: Vec<Vec<u32>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        SimpleGraph { adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::PreconditionViolated(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&v| v as usize > u)
                .map(move |&v| (u, v as usize))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// Valency if regular; `None` for irregular or empty vertex sets.
    pub fn valency(&self) -> Option<usize> {
        let first = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == first).then_some(first)
    }

    /// Breadth-first distances from `source`, stopping after `max_depth` levels.
    pub fn distances_from(&self, source: usize, max_depth: Option<u32>) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.vertex_count()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u];
            if max_depth.is_some_and(|m| d >= m) {
                continue;
            }
            for &w in &self.adj[u] {
                if dist[w as usize] == UNREACHED {
                    dist[w as usize] = d + 1;
                    queue.push_back(w as usize);
                }
            }
        }
        dist
    }

    /// Vertices at distance exactly `level` from `source`, ascending.
    pub fn sphere(&self, source: usize, level: u32) -> Vec<usize> {
        self.distances_from(source, Some(level))
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == level)
            .map(|(v, _)| v)
            .collect()
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.vertex_count()];
        let mut out = Vec::new();
        for s in 0..self.vertex_count() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut k = 0;
            while k < members.len() {
                let u = members[k];
                k += 1;
                for &w in &self.adj[u] {
                    if comp[w as usize] == usize::MAX {
                        comp[w as usize] = id;
                        members.push(w as usize);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced on `vertices` (in the given order); labels carry over.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> SimpleGraph {
        let mut index = vec![u32::MAX; self.vertex_count()];
        for (k, &v) in vertices.iter().enumerate() {
            index[v] = k as u32;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w as usize] != u32::MAX)
                    .map(|&w| index[w as usize])
                    .collect()
            })
            .collect();
        let mut g = Self::from_adjacency_unchecked(adj);
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.vertex_count();
        let adj = (0..n)
            .map(|u| {
                (0..n as u32)
                    .filter(|&v| v as usize != u && !self.has_edge(u, v as usize))
                    .collect()
            })
            .collect();
        SimpleGraph {
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[u32]) -> SimpleGraph {
        let n = self.vertex_count();
        assert_eq!(perm.len(), n);
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            adj[perm[u] as usize] = self.adj[u].iter().map(|&w| perm[w as usize]).collect();
        }
        let mut g = Self::from_adjacency_unchecked(adj);
        if let Some(labels) = &self.labels {
            let mut out = vec![String::new(); n];
            for u in 0..n {
                out[perm[u] as usize] = labels[u].clone();
            }
            g.labels = Some(out);
        }
        g
    }

    /// True iff `map` (vertex of `self` ↦ vertex of `other`) is an isomorphism.
    pub fn is_isomorphism(&self, other: &SimpleGraph, map: &[u32]) -> bool {
        let n = self.vertex_count();
        if other.vertex_count() != n || map.len() != n || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut hit = vec![false; n];
        for &m in map {
            if m as usize >= n || std::mem::replace(&mut hit[m as usize], true) {
                return false;
            }
        }
        self.edges()
            .all(|(u, v)| other.has_edge(map[u] as usize, map[v] as usize))
    }

    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            n_vertices: self.vertex_count(),
            edges: self.edges().map(|(u, v)| [u as u32, v as u32]).collect(),
            labels: self.labels.clone(),
        };
        serde_json::to_string(&doc).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        let g = Self::from_edges(
            doc.n_vertices,
            doc.edges.iter().map(|e| (e[0] as usize, e[1] as usize)),
        )?;
        match doc.labels {
            Some(labels) => g.with_labels(labels),
            None => Ok(g),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        if let Some(labels) = &self.labels {
            for (v, l) in labels.iter().enumerate() {
                let _ = writeln!(out, "  {v} [label=\"{}\"];", l.replace('"', "\\\""));
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> SimpleGraph {
        SimpleGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn adjacency_is_sorted_and_symmetric() {
        let g = SimpleGraph::from_edges(4, [(3, 0), (0, 1), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(3, 0) && g.has_edge(0, 3));
        assert!(SimpleGraph::from_edges(2, [(1, 1)]).is_err());
        assert!(SimpleGraph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn json_is_deterministic_and_parses_back() {
        let g = path3()
            .with_labels(vec!["a".into(), "b".into(), "c".into()])
            .unwrap();
        let text = g.to_json();
        assert_eq!(
            text,
            r#"{"n_vertices":3,"edges":[[0,1],[1,2]],"labels":["a","b","c"]}"#
        );
        assert_eq!(SimpleGraph::from_json(&text).unwrap(), g);
        assert_eq!(path3().to_json(), r#"{"n_vertices":3,"edges":[[0,1],[1,2]]}"#);
    }

    #[test]
    fn dot_export() {
        assert_eq!(path3().to_dot(), "graph G {\n  0 -- 1;\n  1 -- 2;\n}\n");
    }

    #[test]
    fn distances_and_components() {
        let g = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.distances_from(0, None), vec![0, 1, 2, UNREACHED, UNREACHED]);
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(!g.is_connected());
        assert_eq!(g.sphere(0, 2), vec![2]);
    }

    #[test]
    fn relabel_preserves_structure() {
        let g = path3();
        let h = g.relabel(&[2, 0, 1]);
        assert!(g.is_isomorphism(&h, &[2, 0, 1]));
        assert!(!g.is_isomorphism(&h, &[0, 1, 2]));
    }
}
