//! Graph isomorphism and automorphism groups by individualization and refinement.
//!
//! A reference path through the search tree of the first graph is fixed by
//! always individualizing the smallest vertex of the first largest non-singleton
//! cell. Isomorphisms (and automorphisms) are found by searching the other
//! tree for a leaf whose refinement traces match the reference path.

mod partition;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph_core::SimpleGraph;
use crate::perm_group::{self, Perm, StabChain};
use partition::{Partition, Refiner};

pub const MAX_ISO_VERTICES: usize = 2000;
pub const MAX_AUT_VERTICES: usize = 512;

/// Automorphism group of a graph as generators plus exact order.
#[derive(Clone, Debug, Serialize)]
pub struct PermGroupOnGraph {
    pub degree: usize,
    pub generators: Vec<Perm>,
    #[serde(serialize_with = "serialize_big")]
    pub order: BigUint,
    /// Base from the search: the individualized vertices.
    pub search_base: Vec<u32>,
    /// `|v_k^{Aut_(v_1..v_{k-1})}|` along the search base.
    pub search_orbit_lengths: Vec<usize>,
}

fn serialize_big<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl PermGroupOnGraph {
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        perm_group::orbits(self.degree, &self.generators)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits().len() == 1
    }

    pub fn stab_chain(&self) -> StabChain {
        StabChain::new(self.degree, &self.generators)
    }
}

/// The reference path through the first graph's search tree.
struct RefPath {
    partitions: Vec<Partition>,
    traces: Vec<u64>,
    targets: Vec<u32>,
    chosen: Vec<u32>,
    leaf: Vec<u32>,
}

impl RefPath {
    fn build(g: &SimpleGraph) -> RefPath {
        let mut refiner = Refiner::new(g);
        let (mut p, t) = refiner.root();
        let mut path = RefPath {
            partitions: vec![p.clone()],
            traces: vec![t],
            targets: Vec::new(),
            chosen: Vec::new(),
            leaf: Vec::new(),
        };
        while let Some(c) = p.target_cell() {
            let v = *p.cell(c).iter().min().unwrap();
            let t = refiner.individualize(&mut p, v);
            path.targets.push(c);
            path.chosen.push(v);
            path.traces.push(t);
            path.partitions.push(p.clone());
        }
        path.leaf = p.order.clone();
        path
    }

    fn depth(&self) -> usize {
        self.chosen.len()
    }
}

/// Depth-first search below `node` (at `depth`) in `h`'s tree for a leaf that
/// maps the reference leaf onto `h` isomorphically.
fn find_leaf(
    g: &SimpleGraph,
    h: &SimpleGraph,
    refiner: &mut Refiner<'_>,
    reference: &RefPath,
    node: &Partition,
    depth: usize,
) -> Option<Vec<u32>> {
    if depth == reference.depth() {
        if !node.is_discrete() {
            return None;
        }
        let mut map = vec![0u32; g.vertex_count()];
        for (pos, &v) in reference.leaf.iter().enumerate() {
            map[v as usize] = node.order[pos];
        }
        return g.is_isomorphism(h, &map).then_some(map);
    }
    let target = node.target_cell()?;
    if target != reference.targets[depth] {
        return None;
    }
    for w in node.cell_sorted(target) {
        let mut child = node.clone();
        let t = refiner.individualize(&mut child, w);
        if t != reference.traces[depth + 1] {
            continue;
        }
        if let Some(map) = find_leaf(g, h, refiner, reference, &child, depth + 1) {
            return Some(map);
        }
    }
    None
}

/// An isomorphism `G → H` as a vertex map (`map[u]` is the image of `u`), or `None`.
pub fn are_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Result<Option<Vec<u32>>> {
    let n = g.vertex_count();
    for size in [n, h.vertex_count()] {
        if size > MAX_ISO_VERTICES {
            return Err(Error::TooLarge {
                vertices: size,
                max: MAX_ISO_VERTICES,
            });
        }
    }
    if n != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let reference = RefPath::build(g);
    let mut refiner = Refiner::new(h);
    let (root, trace) = refiner.root();
    if trace != reference.traces[0] {
        return Ok(None);
    }
    let found = find_leaf(g, h, &mut refiner, &reference, &root, 0);
    debug_assert!(found.as_ref().is_none_or(|m| g.is_isomorphism(h, m)));
    Ok(found)
}

fn orbit_of(degree: usize, gens: &[Perm], v: u32) -> Vec<bool> {
    let mut seen = vec![false; degree];
    seen[v as usize] = true;
    let mut stack = vec![v];
    while let Some(p) = stack.pop() {
        for g in gens {
            let q = g[p as usize];
            if !seen[q as usize] {
                seen[q as usize] = true;
                stack.push(q);
            }
        }
    }
    seen
}

/// Generators and exact order of `Aut(G)`.
///
/// Generators are found level by level from the deepest search level up; the
/// order is then computed independently by Schreier–Sims and checked against
/// the product of the basic orbit lengths seen during the search.
pub fn automorphism_group(g: &SimpleGraph) -> Result<PermGroupOnGraph> {
    let n = g.vertex_count();
    if n > MAX_AUT_VERTICES {
        return Err(Error::TooLarge {
            vertices: n,
            max: MAX_AUT_VERTICES,
        });
    }
    if n == 0 {
        return Ok(PermGroupOnGraph {
            degree: 0,
            generators: Vec::new(),
            order: BigUint::from(1u32),
            search_base: Vec::new(),
            search_orbit_lengths: Vec::new(),
        });
    }
    let reference = RefPath::build(g);
    let mut refiner = Refiner::new(g);
    let mut gens: Vec<Perm> = Vec::new();
    let mut orbit_lengths = vec![0usize; reference.depth()];
    for d in (0..reference.depth()).rev() {
        let v = reference.chosen[d];
        let node = &reference.partitions[d];
        let mut orbit = orbit_of(n, &gens, v);
        // every generator so far fixes the prefix, so a failed w fails with its orbit
        let mut failed = vec![false; n];
        for w in node.cell_sorted(reference.targets[d]) {
            if orbit[w as usize] || failed[w as usize] {
                continue;
            }
            let mut child = node.clone();
            let t = refiner.individualize(&mut child, w);
            let found = if t == reference.traces[d + 1] {
                find_leaf(g, g, &mut refiner, &reference, &child, d + 1)
            } else {
                None
            };
            match found {
                Some(map) => {
                    gens.push(map);
                    orbit = orbit_of(n, &gens, v);
                }
                None => {
                    for (slot, hit) in failed.iter_mut().zip(orbit_of(n, &gens, w)) {
                        *slot |= hit;
                    }
                }
            }
        }
        orbit_lengths[d] = orbit.iter().filter(|&&b| b).count();
    }
    let chain = StabChain::new(n, &gens);
    let order = chain.order();
    let product = orbit_lengths
        .iter()
        .fold(BigUint::from(1u32), |acc, &l| acc * BigUint::from(l));
    if order != product {
        return Err(Error::ReconstructionFailed(format!(
            "Schreier-Sims order {order} differs from search orbit product {product}"
        )));
    }
    Ok(PermGroupOnGraph {
        degree: n,
        generators: gens,
        order,
        search_base: reference.chosen.clone(),
        search_orbit_lengths: orbit_lengths,
    })
}

pub fn is_vertex_transitive(g: &SimpleGraph) -> Result<bool> {
    Ok(automorphism_group(g)?.is_transitive())
}
