use super::graph::{SimpleGraph, UNREACHED};
use crate::cube_symmetry::BitVector;
use crate::error::{Error, Result};
use crate::iso_aut;

pub fn complete_graph(k: usize) -> SimpleGraph {
    SimpleGraph::from_edges(k, (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v)))).unwrap()
}

pub fn cycle_graph(k: usize) -> SimpleGraph {
    assert!(k >= 3);
    SimpleGraph::from_edges(k, (0..k).map(|u| (u, (u + 1) % k))).unwrap()
}

pub fn path_graph(k: usize) -> SimpleGraph {
    SimpleGraph::from_edges(k, (1..k).map(|u| (u - 1, u))).unwrap()
}

/// `Q_n`; vertex `v` is the vector with bits `v`, labelled by its bit string.
pub fn hypercube(n: usize) -> SimpleGraph {
    assert!((1..=20).contains(&n), "hypercube dimension {n} out of range");
    let size = 1usize << n;
    let adj = (0..size)
        .map(|v| (0..n).map(|i| (v ^ (1 << i)) as u32).collect())
        .collect();
    let labels = (0..size)
        .map(|v| BitVector::masked(n, v as u32).to_string())
        .collect();
    SimpleGraph::from_adjacency_unchecked(adj)
        .with_labels(labels)
        .unwrap()
}

/// `T_n`: 2-subsets of `[n]`, adjacent when they meet in one point. Vertices are
/// ordered lexicographically and labelled `{i,j}`.
pub fn triangular_graph(n: usize) -> Result<SimpleGraph> {
    if n < 2 {
        return Err(Error::BadDimension(n));
    }
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut edges = Vec::new();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate().skip(a + 1) {
            let common = [k, l].iter().filter(|&&x| x == i || x == j).count();
            if common == 1 {
                edges.push((a, b));
            }
        }
    }
    let labels = pairs.iter().map(|(i, j)| format!("{{{i},{j}}}")).collect();
    SimpleGraph::from_edges(pairs.len(), edges)?.with_labels(labels)
}

/// Same vertex set; `u ~ v` iff `d(u, v) = 2`.
pub fn distance2_graph(g: &SimpleGraph) -> SimpleGraph {
    let adj = (0..g.vertex_count())
        .map(|u| {
            let dist = g.distances_from(u, Some(2));
            dist.iter()
                .enumerate()
                .filter(|(_, &d)| d == 2)
                .map(|(v, _)| v as u32)
                .collect()
        })
        .collect();
    let h = SimpleGraph::from_adjacency_unchecked(adj);
    match g.labels() {
        Some(l) => h.with_labels(l.to_vec()).unwrap(),
        None => h,
    }
}

/// 2-colouring of a connected graph, `part0` containing vertex 0.
///
/// On failure the error carries an odd closed walk starting and ending at 0.
pub fn bipartite_parts(g: &SimpleGraph) -> Result<(Vec<usize>, Vec<usize>)> {
    if g.vertex_count() == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let dist = g.distances_from(0, None);
    let mut parent = vec![usize::MAX; g.vertex_count()];
    for v in 1..g.vertex_count() {
        parent[v] = g
            .neighbors(v)
            .iter()
            .map(|&w| w as usize)
            .find(|&w| dist[w] + 1 == dist[v])
            .unwrap();
    }
    for (u, v) in g.edges() {
        if dist[u] % 2 == dist[v] % 2 {
            let to_root = |mut x: usize| {
                let mut path = vec![x];
                while x != 0 {
                    x = parent[x];
                    path.push(x);
                }
                path
            };
            let mut walk = to_root(u);
            walk.reverse();
            walk.extend(to_root(v));
            return Err(Error::NotBipartite { witness: walk });
        }
    }
    debug_assert!(dist.iter().all(|&d| d != UNREACHED));
    let (even, odd): (Vec<usize>, Vec<usize>) =
        (0..g.vertex_count()).partition(|&v| dist[v].is_multiple_of(2));
    Ok((even, odd))
}

/// The two halved graphs of a connected bipartite graph.
#[derive(Clone, Debug)]
pub struct HalvedGraphs {
    /// `graphs[0]` lives on the part containing vertex 0.
    pub graphs: [SimpleGraph; 2],
    /// `vertices[k][i]` is the vertex of the source graph behind vertex `i` of `graphs[k]`.
    pub vertices: [Vec<usize>; 2],
}

pub fn halved_graphs(g: &SimpleGraph) -> Result<HalvedGraphs> {
    let (p0, p1) = bipartite_parts(g)?;
    let d2 = distance2_graph(g);
    let h0 = d2.induced_subgraph(&p0);
    let h1 = d2.induced_subgraph(&p1);
    if !h0.is_connected() || !h1.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(HalvedGraphs {
        graphs: [h0, h1],
        vertices: [p0, p1],
    })
}

/// `Γ.2`: vertex `(u, a)` is `2u + a`; `(u,a) ~ (v,b)` iff `u ~ v` and `a ≠ b`.
pub fn bipartite_double(g: &SimpleGraph) -> SimpleGraph {
    let mut adj = vec![Vec::new(); 2 * g.vertex_count()];
    for u in 0..g.vertex_count() {
        for &w in g.neighbors(u) {
            adj[2 * u].push(2 * w + 1);
            adj[2 * u + 1].push(2 * w);
        }
    }
    let h = SimpleGraph::from_adjacency_unchecked(adj);
    match g.labels() {
        Some(labels) => {
            let l = labels
                .iter()
                .flat_map(|s| [format!("({s},0)"), format!("({s},1)")])
                .collect();
            h.with_labels(l).unwrap()
        }
        None => h,
    }
}

/// Every vertex neighbourhood induces a graph isomorphic to `target`.
pub fn is_locally(g: &SimpleGraph, target: &SimpleGraph) -> bool {
    let k = target.vertex_count();
    let target = target.clone().without_labels();
    let target_degrees = target.degree_sequence();
    (0..g.vertex_count()).all(|u| {
        if g.degree(u) != k {
            return false;
        }
        let nbrs: Vec<usize> = g.neighbors(u).iter().map(|&w| w as usize).collect();
        let local = g.induced_subgraph(&nbrs).without_labels();
        local.degree_sequence() == target_degrees
            && matches!(iso_aut::are_isomorphic(&local, &target), Ok(Some(_)))
    })
}
