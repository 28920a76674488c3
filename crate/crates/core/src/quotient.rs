//! Orbit partitions of `VQ_n` and the normal quotient `(Q_n)_K`.

use crate::cube_symmetry::{BitVector, CubeGroup};
use crate::error::{Error, Result};
use crate::graph_core::SimpleGraph;

pub const MAX_QUOTIENT_DIM: usize = 20;

/// `(Q_n)_K`. Orbit ids are sorted by their numerically minimal vertex.
#[derive(Clone, Debug)]
pub struct QuotientGraph {
    pub n: usize,
    pub group: CubeGroup,
    /// Minimal vertex of each orbit, ascending.
    pub reps: Vec<u32>,
    /// Orbit id of every vertex of `Q_n`.
    pub orbit_index: Vec<u32>,
    /// Labelled by the representatives' bit strings.
    pub graph: SimpleGraph,
}

pub fn build_quotient(k: &CubeGroup) -> Result<QuotientGraph> {
    let n = k.dim();
    if n > MAX_QUOTIENT_DIM {
        return Err(Error::DimensionTooLarge {
            n,
            max: MAX_QUOTIENT_DIM,
        });
    }
    let size = 1usize << n;
    let mut orbit_index = vec![u32::MAX; size];
    let mut reps = Vec::new();
    for v in 0..size as u32 {
        if orbit_index[v as usize] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(v);
        for g in k.elements() {
            orbit_index[g.act_bits(v) as usize] = id;
        }
    }
    let mut adj = vec![Vec::new(); reps.len()];
    for v in 0..size {
        let a = orbit_index[v];
        for i in 0..n {
            let b = orbit_index[v ^ (1 << i)];
            if a != b {
                adj[a as usize].push(b);
            }
        }
    }
    let labels = reps
        .iter()
        .map(|&r| BitVector::masked(n, r).to_string())
        .collect();
    let graph = SimpleGraph::from_adjacency_unchecked(adj).with_labels(labels)?;
    Ok(QuotientGraph {
        n,
        group: k.clone(),
        reps,
        orbit_index,
        graph,
    })
}

impl QuotientGraph {
    pub fn vertex_count(&self) -> usize {
        self.reps.len()
    }

    /// `π(v) = v^K` as an orbit id.
    pub fn natural_map(&self, v: &BitVector) -> Result<u32> {
        if v.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: v.dim(),
            });
        }
        Ok(self.orbit_index[v.bits() as usize])
    }

    pub fn orbit_of_bits(&self, v: u32) -> u32 {
        self.orbit_index[v as usize]
    }

    /// Orbit ids at distance exactly `level` from `base`, ascending.
    pub fn sphere(&self, base: u32, level: u32) -> Vec<u32> {
        self.graph
            .sphere(base as usize, level)
            .into_iter()
            .map(|v| v as u32)
            .collect()
    }

    /// Members of every orbit, each list ascending.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.reps.len()];
        for (v, &id) in self.orbit_index.iter().enumerate() {
            out[id as usize].push(v as u32);
        }
        out
    }

    pub fn to_json(&self) -> String {
        self.graph.to_json()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube_symmetry::{antipodal_group, quaternion_generators, translation_group};
    use crate::graph_core::hypercube;

    #[test]
    fn trivial_group_gives_the_cube() {
        let q = build_quotient(&CubeGroup::trivial(4)).unwrap();
        assert_eq!(q.graph, hypercube(4));
        assert_eq!(q.reps, (0..16).collect::<Vec<_>>());
    }

    #[test]
    fn folded_eight_cube() {
        let q = build_quotient(&antipodal_group(8)).unwrap();
        assert_eq!(q.vertex_count(), 128);
        assert_eq!(q.graph.edge_count(), 512);
        assert_eq!(q.graph.valency(), Some(8));
        assert!(q.reps.iter().all(|&r| r < 128));
    }

    #[test]
    fn quaternion_spheres() {
        let k = CubeGroup::generate(8, &quaternion_generators(), 1000).unwrap();
        let q = build_quotient(&k).unwrap();
        assert_eq!(q.vertex_count(), 32);
        let zero = q.natural_map(&BitVector::zero(8)).unwrap();
        let e1 = q.natural_map(&BitVector::unit(8, 1)).unwrap();
        assert_eq!(q.sphere(zero, 2).len(), 13);
        assert_eq!(q.sphere(e1, 2).len(), 14);
        assert_eq!(q.sphere(zero, 0), vec![zero]);
    }

    #[test]
    fn orbits_are_constant_under_the_group() {
        let k = CubeGroup::generate(8, &quaternion_generators(), 1000).unwrap();
        let q = build_quotient(&k).unwrap();
        for v in 0..256u32 {
            for g in k.elements() {
                assert_eq!(q.orbit_of_bits(v), q.orbit_of_bits(g.act_bits(v)));
            }
            assert!(q.reps[q.orbit_of_bits(v) as usize] <= v);
        }
        assert!(q.orbits().iter().all(|o| o.len() == 8));
    }

    #[test]
    fn valency_m_example() {
        // even-weight vectors on the last n-m+1 coordinates give Q_m
        for (m, n) in [(2usize, 4usize), (3, 5), (3, 6)] {
            let tail: Vec<usize> = (m..=n).collect();
            let gens: Vec<BitVector> = tail
                .windows(2)
                .map(|w| BitVector::from_coords(n, w).unwrap())
                .collect();
            let k = translation_group(n, &gens, 1 << n).unwrap();
            assert_eq!(k.min_distance().finite(), Some(2));
            let q = build_quotient(&k).unwrap();
            assert_eq!(q.vertex_count(), 1 << m);
            let g = q.graph.clone().without_labels();
            let cube = hypercube(m).without_labels();
            assert!(crate::iso_aut::are_isomorphic(&g, &cube).unwrap().is_some());
        }
    }

    #[test]
    fn dimension_cap() {
        let k = CubeGroup::trivial(21);
        assert!(matches!(build_quotient(&k), Err(Error::DimensionTooLarge { n: 21, .. })));
    }
}
