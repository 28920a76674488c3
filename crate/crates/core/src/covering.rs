//! Coverings `Q_n → Π`: checking them, lifting a rectagraph to one, and
//! recovering the deck group `K^π`.

use crate::cube_symmetry::{CubeAutomorphism, CubeGroup, Permutation};
use crate::error::{Error, Result};
use crate::graph_core::{local_params, SimpleGraph};
use crate::quotient::{QuotientGraph, MAX_QUOTIENT_DIM};

/// A map from `VQ_n` (vertex = bits as integer) to the vertices of `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringMap {
    pub n: usize,
    pub target: SimpleGraph,
    pub image: Vec<u32>,
}

impl CoveringMap {
    /// The natural map `x ↦ x^K`. A covering only when `d_K ≥ 3`.
    pub fn natural(q: &QuotientGraph) -> CoveringMap {
        CoveringMap {
            n: q.n,
            target: q.graph.clone(),
            image: q.orbit_index.clone(),
        }
    }

    /// Surjective, and a bijection from the neighbours of every `x` onto the
    /// neighbours of its image.
    pub fn verify(&self) -> bool {
        self.first_defect().is_none()
    }

    /// A vertex of `Q_n` where local bijectivity fails, or `Some(u32::MAX)`
    /// when the map is merely not surjective.
    fn first_defect(&self) -> Option<u32> {
        let size = 1usize << self.n;
        let m = self.target.vertex_count();
        if self.image.len() != size || self.image.iter().any(|&t| t as usize >= m) {
            return Some(u32::MAX);
        }
        let mut hit = vec![false; m];
        for &t in &self.image {
            hit[t as usize] = true;
        }
        if hit.contains(&false) {
            return Some(u32::MAX);
        }
        let mut around = Vec::with_capacity(self.n);
        for x in 0..size {
            around.clear();
            around.extend((0..self.n).map(|i| self.image[x ^ (1 << i)]));
            around.sort_unstable();
            if around != self.target.neighbors(self.image[x] as usize) {
                return Some(x as u32);
            }
        }
        None
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.image).expect("integer array serializes")
    }
}

pub fn verify_covering(c: &CoveringMap) -> bool {
    c.verify()
}

/// Builds a covering `π: Q_n → Π` with `π(0) = base` and `π(e_i) = neighbor_order[i-1]`.
///
/// `Π` must be a rectagraph of valency `n` with `a_2 = 0` and `c_3 = 3`.
/// Vertices of weight at least 2 are placed by completing the quadrangle on
/// their two lowest set bits; every other bit pair is then checked.
/// Without `neighbor_order`, the neighbours of `base` are taken ascending.
pub fn lift_covering(
    pi: &SimpleGraph,
    base: usize,
    neighbor_order: Option<&[u32]>,
) -> Result<CoveringMap> {
    if base >= pi.vertex_count() {
        return Err(Error::PreconditionViolated(format!(
            "base vertex {base} outside 0..{}",
            pi.vertex_count()
        )));
    }
    let n = pi
        .valency()
        .ok_or_else(|| Error::NotRectagraph("graph is not regular".into()))?;
    if n == 0 || n > MAX_QUOTIENT_DIM {
        return Err(Error::NotRectagraph(format!("valency {n} is out of range")));
    }
    if !pi.is_connected() {
        return Err(Error::NotRectagraph("graph is disconnected".into()));
    }
    let params = local_params(pi, 3);
    let checks = [
        (params[1].a_value.is(0), "a_1", 0),
        (params[2].c_value.is(2), "c_2", 2),
        (params[2].a_value.is(0), "a_2", 0),
        (params[3].c_value.is(3), "c_3", 3),
    ];
    for (ok, name, want) in checks {
        if !ok {
            return Err(Error::NotRectagraph(format!("{name} is not {want}")));
        }
    }
    let first: Vec<u32> = match neighbor_order {
        Some(order) => {
            let mut sorted = order.to_vec();
            sorted.sort_unstable();
            if sorted != pi.neighbors(base) {
                return Err(Error::PreconditionViolated(
                    "neighbor order is not a permutation of the base neighbourhood".into(),
                ));
            }
            order.to_vec()
        }
        None => pi.neighbors(base).to_vec(),
    };

    let size = 1usize << n;
    let mut image = vec![u32::MAX; size];
    image[0] = base as u32;
    for (i, &t) in first.iter().enumerate() {
        image[1 << i] = t;
    }
    let mut by_weight: Vec<usize> = (0..size).filter(|y| y.count_ones() >= 2).collect();
    by_weight.sort_by_key(|y| (y.count_ones(), *y));
    for &y in &by_weight {
        let i = y.trailing_zeros();
        let j = (y & !(1 << i)).trailing_zeros();
        let x = y ^ (1 << i) ^ (1 << j);
        let (a, b, c) = (image[x ^ (1 << i)], image[x], image[x ^ (1 << j)]);
        let fourth: Vec<u32> = common_neighbors(pi, a, c)
            .into_iter()
            .filter(|&d| d != b)
            .collect();
        if fourth.len() != 1 {
            return Err(Error::QuadrangleAmbiguous {
                path: [a as usize, b as usize, c as usize],
                count: fourth.len(),
            });
        }
        image[y] = fourth[0];
    }
    // every set bit pair must close the same quadrangle
    for &y in &by_weight {
        let bits: Vec<usize> = (0..n).filter(|&i| y >> i & 1 == 1).collect();
        let consistent = bits
            .iter()
            .all(|&i| pi.has_edge(image[y] as usize, image[y ^ (1 << i)] as usize))
            && bits.iter().enumerate().all(|(s, &i)| {
                bits[s + 1..]
                    .iter()
                    .all(|&j| image[y] != image[y ^ (1 << i) ^ (1 << j)])
            });
        if !consistent {
            return Err(Error::InconsistentLift { vertex: y as u32 });
        }
    }
    let map = CoveringMap {
        n,
        target: pi.clone(),
        image,
    };
    match map.first_defect() {
        None => Ok(map),
        Some(u32::MAX) => Err(Error::NotCovering("lift is not surjective".into())),
        Some(x) => Err(Error::InconsistentLift { vertex: x }),
    }
}

fn common_neighbors(g: &SimpleGraph, a: u32, c: u32) -> Vec<u32> {
    let (na, nc) = (g.neighbors(a as usize), g.neighbors(c as usize));
    let (mut p, mut q) = (0, 0);
    let mut out = Vec::new();
    while p < na.len() && q < nc.len() {
        match na[p].cmp(&nc[q]) {
            std::cmp::Ordering::Less => p += 1,
            std::cmp::Ordering::Greater => q += 1,
            std::cmp::Ordering::Equal => {
                out.push(na[p]);
                p += 1;
                q += 1;
            }
        }
    }
    out
}

/// `K^π = {g ∈ Aut(Q_n) : gπ = π}`.
///
/// For each `y` in the fibre over `π(0)` the only candidate with `0^g = y`
/// is read off the neighbour fibres and then checked on all of `Q_n`.
/// A covering whose deck group does not act transitively on that fibre
/// is reported as [`Error::ReconstructionFailed`].
pub fn deck_group(c: &CoveringMap) -> Result<CubeGroup> {
    if let Some(x) = c.first_defect() {
        return Err(Error::NotCovering(if x == u32::MAX {
            "map is not surjective onto the target".into()
        } else {
            format!("not locally bijective at vertex {x}")
        }));
    }
    let n = c.n;
    let size = 1usize << n;
    let fibre: Vec<usize> = (0..size).filter(|&y| c.image[y] == c.image[0]).collect();
    let mut kept = Vec::with_capacity(fibre.len());
    for &y in &fibre {
        let mut images = vec![0usize; n];
        for (i, slot) in images.iter_mut().enumerate() {
            let want = c.image[1 << i];
            *slot = (0..n)
                .find(|&j| c.image[y ^ (1 << j)] == want)
                .expect("local bijectivity gives a unique neighbour");
        }
        let sigma = Permutation::from_images(&images).map_err(|_| {
            Error::ReconstructionFailed(format!(
                "neighbour fibres at vertex {y} do not define a permutation"
            ))
        })?;
        let g = CubeAutomorphism::new(crate::cube_symmetry::BitVector::masked(n, y as u32), sigma)?;
        if (0..size as u32).all(|v| c.image[g.act_bits(v) as usize] == c.image[v as usize]) {
            kept.push(g);
        }
    }
    if kept.len() != fibre.len() {
        return Err(Error::ReconstructionFailed(format!(
            "only {} of {} fibre elements extend to deck transformations",
            kept.len(),
            fibre.len()
        )));
    }
    CubeGroup::from_closed_set(n, &kept)
        .map_err(|e| Error::ReconstructionFailed(format!("deck transformations: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube_symmetry::{antipodal_group, quaternion_generators, BitVector};
    use crate::graph_core::{complete_graph, cycle_graph, hypercube};
    use crate::quotient::build_quotient;

    #[test]
    fn identity_covering() {
        let q = hypercube(3);
        let c = lift_covering(&q, 0, None).unwrap();
        assert_eq!(c.image, (0..8).collect::<Vec<_>>());
        assert!(c.verify());
        assert!(deck_group(&c).unwrap().is_trivial());
    }

    #[test]
    fn natural_map_depends_on_distance() {
        let folded = build_quotient(&antipodal_group(6)).unwrap();
        assert!(CoveringMap::natural(&folded).verify());
        let k = CubeGroup::generate(8, &quaternion_generators(), 100).unwrap();
        let quat = build_quotient(&k).unwrap();
        // d_K = 4 is still a covering
        assert!(CoveringMap::natural(&quat).verify());
        let e12 = BitVector::from_coords(5, &[1, 2]).unwrap();
        let d2 = build_quotient(&crate::cube_symmetry::translation_group(5, &[e12], 4).unwrap()).unwrap();
        assert!(!CoveringMap::natural(&d2).verify());
    }

    #[test]
    fn deck_group_of_natural_map_is_the_group() {
        let k = CubeGroup::generate(8, &quaternion_generators(), 100).unwrap();
        let q = build_quotient(&k).unwrap();
        let deck = deck_group(&CoveringMap::natural(&q)).unwrap();
        assert!(deck.same_elements(&k));
    }

    #[test]
    fn lift_of_folded_cube_has_deck_group_of_order_two() {
        let q = build_quotient(&antipodal_group(8)).unwrap();
        let c = lift_covering(&q.graph, 0, None).unwrap();
        assert!(c.verify());
        let deck = deck_group(&c).unwrap();
        assert_eq!(deck.order(), 2);
        assert_eq!(deck.min_distance().finite(), Some(8));
    }

    #[test]
    fn lift_rejects_non_rectagraphs() {
        assert!(matches!(lift_covering(&complete_graph(4), 0, None), Err(Error::NotRectagraph(_))));
        assert!(matches!(lift_covering(&cycle_graph(6), 0, None), Err(Error::NotRectagraph(_))));
        // the folded 5-cube has a_2 = 0 or c_3 = 3 failing
        let q = build_quotient(&antipodal_group(5)).unwrap();
        assert!(lift_covering(&q.graph, 0, None).is_err());
    }

    #[test]
    fn json_is_an_index_array() {
        let c = lift_covering(&hypercube(2), 0, None).unwrap();
        assert_eq!(c.to_json(), "[0,1,2,3]");
    }
}
