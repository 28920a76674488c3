//! Single-group properties shared by the claim checks. Each returns the data
//! a claim needs; deciding pass or fail is left to the caller.

use crate::cube_symmetry::{CubeAutomorphism, CubeGroup, MinDistance, Permutation};
use crate::graph_core::{cube_like_from_params, local_params, LocalParams};
use crate::quotient::QuotientGraph;

/// All `n`-bit masks of weight `w`, ascending.
pub fn weight_masks(n: usize, w: u32) -> Vec<u32> {
    (0u32..1 << n).filter(|m| m.count_ones() == w).collect()
}

/// `{(x + e)^K : wt(e) = ℓ}` as sorted orbit ids.
pub fn shifted_orbits(q: &QuotientGraph, x: u32, ell: u32) -> Vec<u32> {
    let mut out: Vec<u32> = weight_masks(q.n, ell)
        .into_iter()
        .map(|e| q.orbit_of_bits(x ^ e))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Local parameters of the quotient up to `levels`.
pub fn quotient_params(q: &QuotientGraph, levels: u32) -> Vec<LocalParams> {
    local_params(&q.graph, levels)
}

/// Condition (i) of the distance classification for `ℓ = 1..=ell_max`: regular
/// of valency `n` with `a_{i-1} = 0` and `c_i = i` for `i ≤ ℓ`.
pub fn cube_like_levels(q: &QuotientGraph, params: &[LocalParams], ell_max: u32) -> Vec<bool> {
    (1..=ell_max)
        .map(|ell| cube_like_from_params(&params[..=ell as usize], q.n as u32, ell))
        .collect()
}

/// Two distinct vertices in one orbit closer than `d_K`.
pub fn close_collision(k: &CubeGroup, d: MinDistance) -> Option<(u32, u32)> {
    let bound = d.finite()?;
    let n = k.dim();
    for x in 0u32..1 << n {
        for g in k.elements() {
            let y = g.act_bits(x);
            if y != x && (x ^ y).count_ones() < bound {
                return Some((x, y));
            }
        }
    }
    None
}

/// A cycle of length exactly `d_K` in the quotient, found by projecting a
/// geodesic from `x` to `x^k` for a pair realising `d_K`.
pub fn minimum_distance_cycle(q: &QuotientGraph, d: u32) -> Option<Vec<u32>> {
    let n = q.n;
    for k in q.group.elements().iter().filter(|g| !g.is_identity()) {
        for x in 0u32..1 << n {
            let y = k.act_bits(x);
            if (x ^ y).count_ones() != d {
                continue;
            }
            let mut walk = vec![x];
            let mut cur = x;
            for i in 0..n {
                if (x ^ y) >> i & 1 == 1 {
                    cur ^= 1 << i;
                    walk.push(cur);
                }
            }
            walk.pop();
            let cycle: Vec<u32> = walk.iter().map(|&v| q.orbit_of_bits(v)).collect();
            if is_simple_cycle(q, &cycle) {
                return Some(cycle);
            }
        }
    }
    None
}

pub fn is_simple_cycle(q: &QuotientGraph, cycle: &[u32]) -> bool {
    let len = cycle.len();
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    len >= 3
        && sorted.len() == len
        && (0..len).all(|i| q.graph.has_edge(cycle[i] as usize, cycle[(i + 1) % len] as usize))
}

/// `Π` is bipartite with parts `{x^K : wt(x) ≡ i mod 2}`: no orbit mixes
/// parities and every edge joins the two classes.
pub fn parity_bipartition(q: &QuotientGraph) -> bool {
    let mut parity = vec![u8::MAX; q.vertex_count()];
    for (v, &id) in q.orbit_index.iter().enumerate() {
        let p = (v.count_ones() % 2) as u8;
        match parity[id as usize] {
            u8::MAX => parity[id as usize] = p,
            old if old != p => return false,
            _ => {}
        }
    }
    q.graph.edges().all(|(u, v)| parity[u] != parity[v])
}

/// Orbit of `0^K` under a group of automorphisms of `Q_n` normalising `K`,
/// acting on the quotient by `(x^K)^g = (x^g)^K`.
pub fn orbit_of_zero(q: &QuotientGraph, gens: &[CubeAutomorphism]) -> Vec<u32> {
    let mut seen = vec![false; q.vertex_count()];
    let start = q.orbit_of_bits(0);
    seen[start as usize] = true;
    let mut stack = vec![start];
    let mut out = vec![start];
    while let Some(b) = stack.pop() {
        for g in gens {
            let c = q.orbit_of_bits(g.act_bits(q.reps[b as usize]));
            if !seen[c as usize] {
                seen[c as usize] = true;
                stack.push(c);
                out.push(c);
            }
        }
    }
    out.sort_unstable();
    out
}

/// For `L = g⁻¹Kg`, the map `x^K ↦ (x^g)^L`, or the first vertex where it
/// is not constant on a `K`-orbit.
pub fn conjugation_map(
    qk: &QuotientGraph,
    ql: &QuotientGraph,
    g: &CubeAutomorphism,
) -> Result<Vec<u32>, u32> {
    let mut map = vec![u32::MAX; qk.vertex_count()];
    for x in 0u32..1 << qk.n {
        let a = qk.orbit_of_bits(x) as usize;
        let b = ql.orbit_of_bits(g.act_bits(x));
        if map[a] == u32::MAX {
            map[a] = b;
        } else if map[a] != b {
            return Err(x);
        }
    }
    Ok(map)
}

/// Given an isomorphism `φ: (Q_n)_K → (Q_n)_L` and a covering `π_L`, the
/// element `h ∈ Aut(Q_n)` with `π_K φ = h π_L`, read off at `0` and its
/// neighbours and then checked everywhere.
pub fn lift_isomorphism(qk: &QuotientGraph, ql: &QuotientGraph, phi: &[u32]) -> Option<CubeAutomorphism> {
    let n = qk.n;
    let target0 = phi[qk.orbit_of_bits(0) as usize];
    let y = (0u32..1 << n).find(|&y| ql.orbit_of_bits(y) == target0)?;
    let mut images = vec![0usize; n];
    for (i, slot) in images.iter_mut().enumerate() {
        let want = phi[qk.orbit_of_bits(1 << i) as usize];
        *slot = (0..n).find(|&j| ql.orbit_of_bits(y ^ (1 << j)) == want)?;
    }
    let sigma = Permutation::from_images(&images).ok()?;
    let h = CubeAutomorphism::new(crate::cube_symmetry::BitVector::masked(n, y), sigma).ok()?;
    (0u32..1 << n)
        .all(|x| phi[qk.orbit_of_bits(x) as usize] == ql.orbit_of_bits(h.act_bits(x)))
        .then_some(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube_symmetry::{antipodal_group, quaternion_generators};
    use crate::quotient::build_quotient;

    #[test]
    fn folded_cube_has_an_n_cycle() {
        let q = build_quotient(&antipodal_group(6)).unwrap();
        let c = minimum_distance_cycle(&q, 6).unwrap();
        assert_eq!(c.len(), 6);
        assert!(is_simple_cycle(&q, &c));
    }

    #[test]
    fn quaternion_quotient_is_parity_bipartite() {
        let k = CubeGroup::generate(8, &quaternion_generators(), 100).unwrap();
        let q = build_quotient(&k).unwrap();
        assert!(parity_bipartition(&q));
        assert_eq!(close_collision(&k, k.min_distance()), None);
    }

    #[test]
    fn antipodal_orbit_under_full_group() {
        let q = build_quotient(&antipodal_group(5)).unwrap();
        let gens = crate::cube_symmetry::normalizer::ambient_generators(5, crate::cube_symmetry::Ambient::Full);
        assert_eq!(orbit_of_zero(&q, &gens).len(), 16);
    }

    #[test]
    fn weight_mask_counts() {
        assert_eq!(weight_masks(6, 2).len(), 15);
        assert_eq!(weight_masks(5, 0), vec![0]);
    }
}
