//! The worked examples, each rebuilt from its printed data.

use num_bigint::BigUint;
use rand::Rng;
use serde_json::json;

use super::checks::{halved_iso_on, main_even_on};
use super::grid::{all_order_two_subgroups, describe_group, random_involution, stream_rng};
use super::props;
use super::report::{ClaimReport, Tally};
use crate::cube_symmetry::{
    brute_force_element_distance, element_min_distance, normalizer, quaternion_generators,
    translation_group, Ambient, BitVector, CubeAutomorphism, CubeGroup, Permutation,
};
use crate::cube_symmetry::normalizer::ambient_elements;
use crate::error::{Error, Result};
use crate::graph_core::{
    bipartite_parts, complete_graph, halved_graphs, hypercube, local_params, SimpleGraph,
};
use crate::iso_aut::{are_isomorphic, automorphism_group};
use crate::quotient::build_quotient;

pub const EXAMPLES: &[&str] = &[
    "exp-halved",
    "K2",
    "large",
    "not-vt",
    "lt-not-vt",
    "valency-m",
    "even-involution",
    "halved-small-n",
];

pub fn run_example(name: &str, seed: u64) -> Result<ClaimReport> {
    match name {
        "exp-halved" => exp_halved(),
        "K2" => k2(seed, 200, 4..=10),
        "large" => large(4..=8),
        "not-vt" => not_vt(),
        "lt-not-vt" => lt_not_vt(),
        "valency-m" => valency_m(),
        "even-involution" => even_involution(),
        "halved-small-n" => halved_small_n(),
        other => Err(Error::UnknownExample(other.to_string())),
    }
}

/// The quaternion group in Aut(Q_8) with non-isomorphic halves.
fn exp_halved() -> Result<ClaimReport> {
    let mut t = Tally::new("ex-exp-halved");
    let k = CubeGroup::generate(8, &quaternion_generators(), 64)?;
    let d = k.min_distance();
    let involutions = k
        .elements()
        .iter()
        .filter(|g| !g.is_identity() && g.compose(g).is_identity())
        .count();
    t.check(k.order() == 8 && involutions == 1, || {
        json!({"order": k.order(), "involutions": involutions})
    });
    t.check(k.is_even(), || json!({"even": false}));
    t.check(d.finite() == Some(4), || json!({"d_K": d}));
    let q = build_quotient(&k)?;
    let bipartite = bipartite_parts(&q.graph).is_ok();
    t.check(q.vertex_count() == 32 && bipartite, || {
        json!({"vertices": q.vertex_count(), "bipartite": bipartite})
    });
    let zero = q.orbit_of_bits(0);
    let e1 = q.orbit_of_bits(1);
    let s0 = q.sphere(zero, 2).len();
    let s1 = q.sphere(e1, 2).len();
    t.check(s0 == 13 && s1 == 14, || json!({"sphere_0": s0, "sphere_e1": s1}));
    let halves = halved_graphs(&q.graph)?;
    let iso = are_isomorphic(
        &halves.graphs[0].clone().without_labels(),
        &halves.graphs[1].clone().without_labels(),
    )?;
    t.check(iso.is_none(), || json!({"halves_isomorphic": true}));
    t.note("order", k.order());
    t.note("d_K", d);
    t.note("vertices", q.vertex_count());
    t.note("sphere_sizes", [s0, s1]);
    t.note("halves_isomorphic", iso.is_some());
    Ok(t.finish(json!({"group": describe_group(&k)})))
}

/// `d_K = |{i ∈ fix(σ) : x_i = 1}|` for `K = {1, (x, σ)}`.
pub(crate) fn k2(
    seed: u64,
    per_dim: usize,
    dims: std::ops::RangeInclusive<usize>,
) -> Result<ClaimReport> {
    let mut t = Tally::new("ex-K2");
    for n in dims.clone() {
        let mut rng = stream_rng(seed, 0x4b32_0000 + n as u64);
        for _ in 0..per_dim {
            let g = random_involution(n, &mut rng);
            let formula = g
                .perm()
                .fixed_points()
                .into_iter()
                .filter(|&i| g.translation().get(i))
                .count() as u32;
            let brute = brute_force_element_distance(&g);
            let closed = element_min_distance(&g)?;
            let k = CubeGroup::generate(n, &[g], 2)?;
            let d = k.min_distance().finite();
            t.check(formula == brute && brute == closed && d == Some(formula), || {
                json!({"element": g.to_string(), "formula": formula, "brute_force": brute, "d_K": d})
            });
        }
    }
    Ok(t.finish(json!({"seed": seed, "per_dim": per_dim, "dims": [dims.start(), dims.end()]})))
}

/// `d_K ≥ n - 1` forces `K = {0, x}` with `wt(x) ∈ {n-1, n}`. Every `K`
/// with `d_K ≥ n - 1` has `d_⟨g⟩ ≥ n - 1` for each `g ∈ K`, so it is enough
/// to scan cyclic groups, then pairs of the surviving translations.
pub(crate) fn large(dims: std::ops::RangeInclusive<usize>) -> Result<ClaimReport> {
    let mut t = Tally::new("ex-large");
    let mut rows = Vec::new();
    for n in dims.clone() {
        let bound = n as u32 - 1;
        let mut element_level = 0u64;
        let mut survivors = Vec::new();
        for g in ambient_elements(n, false) {
            if g.is_identity() || element_min_distance(&g)? < bound {
                continue;
            }
            element_level += 1;
            if cyclic_distance(&g)? >= bound {
                survivors.push(g);
            }
        }
        let translations = survivors
            .iter()
            .all(|g| g.perm().is_identity() && g.translation().weight() >= bound);
        t.check(translations && survivors.len() == n + 1, || {
            json!({"n": n, "survivors": survivors.iter().map(|g| g.to_string()).collect::<Vec<_>>()})
        });
        // no two of them together
        for (i, a) in survivors.iter().enumerate() {
            for b in &survivors[i + 1..] {
                let d = CubeGroup::generate(n, &[*a, *b], 1 << n)?.min_distance();
                t.check(!d.at_least(bound), || {
                    json!({"n": n, "x": a.to_string(), "y": b.to_string(), "d_K": d})
                });
            }
        }
        // K = {0, x} is a code, so its quotient is vertex-transitive
        for x in [BitVector::all_ones(n), BitVector::masked(n, (1 << (n - 1)) - 1)] {
            let k = translation_group(n, &[x], 2)?;
            let q = build_quotient(&k)?;
            let vt = automorphism_group(&q.graph)?.is_transitive();
            t.check(vt, || json!({"n": n, "x": x.to_string(), "vertex_transitive": false}));
        }
        rows.push(json!({
            "n": n,
            "elements_with_distance_at_least_n_minus_1": element_level,
            "cyclic_groups_with_d_at_least_n_minus_1": survivors.len(),
        }));
    }
    t.note("scan", rows);
    Ok(t.finish(json!({"dims": [dims.start(), dims.end()]})))
}

/// `d_⟨g⟩`: the least element distance over the non-trivial powers of `g`.
fn cyclic_distance(g: &CubeAutomorphism) -> Result<u32> {
    let mut best = element_min_distance(g)?;
    let mut p = g.compose(g);
    while !p.is_identity() && best > 0 {
        best = best.min(element_min_distance(&p)?);
        p = p.compose(g);
    }
    Ok(best)
}

/// Count of `{(y, τ) : y^σ = y, x^τ = x, στ = τσ}` by running over `S_n`.
fn described_normalizer_order(x: &BitVector, sigma: &Permutation) -> BigUint {
    let n = x.dim();
    let taus = Permutation::all(n)
        .filter(|tau| sigma.then(tau) == tau.then(sigma) && tau.apply(x) == *x)
        .count();
    BigUint::from(taus) * BigUint::from(2u32).pow(sigma.cycles().len() as u32)
}

fn described_member(g: &CubeAutomorphism, x: &BitVector, sigma: &Permutation) -> bool {
    let tau = g.perm();
    sigma.apply(&g.translation()) == g.translation()
        && tau.apply(x) == *x
        && sigma.then(tau) == tau.then(sigma)
}

/// `K = {0, (x, (1 2))}` with `wt(x) ∈ {n-1, n}`: non-vertex-transitive quotient.
fn not_vt() -> Result<ClaimReport> {
    let mut t = Tally::new("ex-not-vt");
    let n = 8;
    let sigma = Permutation::parse_cycles(n, "(1 2)")?;
    let mut rows = Vec::new();
    for weight in [n, n - 1] {
        let x = BitVector::masked(n, ((1u64 << weight) - 1) as u32);
        let k = CubeGroup::generate(n, &[CubeAutomorphism::new(x, sigma)?], 2)?;
        let d = k.min_distance();
        let expected = if weight == n { n - 2 } else { n - 3 };
        t.check(d.finite() == Some(expected as u32), || {
            json!({"x": x.to_string(), "d_K": d, "expected": expected})
        });
        let nk = normalizer(&k, Ambient::Full, 0)?;
        let described = described_normalizer_order(&x, &sigma);
        t.check(nk.order == described, || {
            json!({"x": x.to_string(), "normalizer": nk.order.to_string(), "described": described.to_string()})
        });
        for g in &nk.generators {
            t.check(described_member(g, &x, &sigma), || {
                json!({"x": x.to_string(), "generator": g.to_string()})
            });
        }
        let q = build_quotient(&k)?;
        let orbit = props::orbit_of_zero(&q, &nk.generators);
        let e1 = q.orbit_of_bits(1);
        t.check(orbit.binary_search(&e1).is_err(), || {
            json!({"x": x.to_string(), "reason": "e_1^K in the N-orbit of 0^K"})
        });
        let aut = automorphism_group(&q.graph)?;
        let orbits = aut.orbits().len();
        t.check(orbits > 1, || json!({"x": x.to_string(), "aut_orbits": orbits}));
        let quotient_order = &nk.order / BigUint::from(2u32);
        t.check(aut.order == quotient_order, || {
            json!({"x": x.to_string(), "aut": aut.order.to_string(), "normalizer_over_k": quotient_order.to_string()})
        });
        rows.push(json!({
            "x": x.to_string(),
            "d_K": d,
            "normalizer_order": nk.order.to_string(),
            "aut_order": aut.order.to_string(),
            "aut_orbits": orbits,
            "zero_orbit_size": orbit.len(),
        }));
    }
    t.note("cases", rows);
    Ok(t.finish(json!({"n": n, "sigma": "(1 2)"})))
}

/// `n = 10`, `K = {0, (1…1, (1 2))}`: even, `d_K = 8`, halves locally `T_10`
/// but not vertex-transitive.
fn lt_not_vt() -> Result<ClaimReport> {
    let mut t = Tally::new("ex-lt-not-vt");
    let n = 10;
    let sigma = Permutation::parse_cycles(n, "(1 2)")?;
    let x = BitVector::all_ones(n);
    let k = CubeGroup::generate(n, &[CubeAutomorphism::new(x, sigma)?], 2)?;
    let d = k.min_distance();
    t.check(k.is_even() && d.finite() == Some(8), || json!({"even": k.is_even(), "d_K": d}));
    let q = build_quotient(&k)?;
    main_even_on(&q, &mut t)?;
    let halves = halved_graphs(&q.graph)?;
    // the half on even-weight vertices contains 0^K
    let gamma = halves.graphs[0].clone().without_labels();
    let aut = automorphism_group(&gamma)?;
    let orbits = aut.orbits();
    t.check(orbits.len() > 1, || json!({"aut_orbits": orbits.len()}));
    let ne = normalizer(&k, Ambient::Even, 0)?;
    let expected = &ne.order / BigUint::from(2u32);
    t.check(aut.order == expected, || {
        json!({"aut": aut.order.to_string(), "even_normalizer_over_k": expected.to_string()})
    });
    let nk = normalizer(&k, Ambient::Full, 0)?;
    let orbit = props::orbit_of_zero(&q, &nk.generators);
    for ell in 3..=n {
        let v = q.orbit_of_bits(1 | 1 << (ell - 1));
        t.check(orbit.binary_search(&v).is_err(), || {
            json!({"reason": "e_{1,l}^K in the N-orbit of 0^K", "l": ell})
        });
    }
    t.note("d_K", d);
    t.note("half_vertices", gamma.vertex_count());
    t.note("aut_order", aut.order.to_string());
    t.note("aut_orbit_sizes", orbits.iter().map(Vec::len).collect::<Vec<_>>());
    t.note("zero_orbit_size", orbit.len());
    Ok(t.finish(json!({"n": n, "x": x.to_string(), "sigma": "(1 2)"})))
}

/// Even vectors supported on the last `n - m + 1` coordinates: `d_K = 2` and
/// `Q_m → (Q_n)_K` is an isomorphism.
pub(crate) fn valency_m() -> Result<ClaimReport> {
    let mut t = Tally::new("ex-valency-m");
    let pairs = [(2usize, 4usize), (3, 5), (3, 6), (2, 6), (4, 7)];
    for (m, n) in pairs {
        let tail: Vec<usize> = (m..=n).collect();
        let gens: Vec<BitVector> = tail
            .windows(2)
            .map(|w| BitVector::from_coords(n, w))
            .collect::<Result<_>>()?;
        let k = translation_group(n, &gens, 1 << n)?;
        let d = k.min_distance();
        t.check(d.finite() == Some(2), || json!({"m": m, "n": n, "d_K": d}));
        let q = build_quotient(&k)?;
        // Q_m sits in Q_n as the vectors supported on the first m coordinates
        let map: Vec<u32> = (0u32..1 << m).map(|v| q.orbit_of_bits(v)).collect();
        let cube = hypercube(m).without_labels();
        let graph = q.graph.clone().without_labels();
        t.check(cube.is_isomorphism(&graph, &map), || json!({"m": m, "n": n}));
        let params = local_params(&graph, m as u32);
        let cube_like = crate::graph_core::cube_like_from_params(&params, m as u32, m as u32);
        t.check(cube_like, || json!({"m": m, "n": n, "reason": "not cube-like of valency m"}));
    }
    Ok(t.finish(json!({"pairs": pairs})))
}

/// Even `K` of order 2 with `d_K ≥ 2`: some `e_i` normalises `K` and the halves
/// are isomorphic. Exhaustive for `n ≤ 6`.
pub(crate) fn even_involution() -> Result<ClaimReport> {
    let mut t = Tally::new("ex-even-involution");
    let mut counts = Vec::new();
    for n in 2..=6 {
        let mut count = 0;
        for k in all_order_two_subgroups(n) {
            if !k.is_even() || !k.min_distance().at_least(2) {
                continue;
            }
            count += 1;
            let g = k.generators()[0];
            let fixed = g.perm().fixed_points();
            let normalising = fixed.iter().any(|&i| {
                k.is_normalized_by(&CubeAutomorphism::translation_by(BitVector::unit(n, i)))
            });
            t.check(!fixed.is_empty() && normalising, || {
                json!({"element": g.to_string(), "fixed_points": fixed})
            });
            let q = build_quotient(&k)?;
            let iso = halved_iso_on(&q, false, &mut Tally::new("scratch"))?;
            t.check(iso, || json!({"element": g.to_string(), "halves_isomorphic": false}));
        }
        counts.push(count);
    }
    t.note("groups_per_dim", counts);
    Ok(t.finish(json!({"dims": [2, 6]})))
}

/// Halved `n`-cubes for `n ≤ 4` are `K_2`, `K_4`, `K_{4[2]}` with automorphism
/// groups of order 2, 24, 384; only `n = 3` matches `|E_n:S_n|`.
pub(crate) fn halved_small_n() -> Result<ClaimReport> {
    let mut t = Tally::new("ex-halved-small-n");
    let cocktail = SimpleGraph::from_edges(8, [(0, 1), (2, 3), (4, 5), (6, 7)])?.complement();
    let expected: [(usize, SimpleGraph, u64); 3] = [
        (2, complete_graph(2), 2),
        (3, complete_graph(4), 24),
        (4, cocktail, 384),
    ];
    let mut rows = Vec::new();
    for (n, shape, order) in expected {
        let halves = halved_graphs(&hypercube(n))?;
        let even_ambient = crate::cube_symmetry::normalizer::ambient_order(n, Ambient::Even);
        for g in &halves.graphs {
            let g = g.clone().without_labels();
            t.check(are_isomorphic(&g, &shape)?.is_some(), || json!({"n": n, "reason": "shape"}));
            let aut = automorphism_group(&g)?;
            t.check(aut.order == BigUint::from(order), || {
                json!({"n": n, "aut": aut.order.to_string(), "expected": order})
            });
            let matches = aut.order == even_ambient;
            t.check(matches == (n == 3), || {
                json!({"n": n, "aut": aut.order.to_string(), "even_ambient": even_ambient.to_string()})
            });
        }
        rows.push(json!({"n": n, "aut_order": order, "even_ambient_order": even_ambient.to_string()}));
    }
    t.note("cases", rows);
    Ok(t.finish(json!({"dims": [2, 3, 4]})))
}

/// Random translation codes plus the `[7,4]` Hamming code: `d_K` is the
/// minimum non-zero weight, and conjugates of codes are codes.
pub(crate) fn code_distance(seed: u64) -> Result<ClaimReport> {
    let mut t = Tally::new("rem-code-distance");
    let hamming: Vec<BitVector> = ["1000110", "0100101", "0010011", "0001111"]
        .iter()
        .map(|s| BitVector::parse(s))
        .collect::<Result<_>>()?;
    let k = translation_group(7, &hamming, 16)?;
    let min_weight = min_codeword_weight(&k);
    t.check(k.min_distance().finite() == Some(3) && min_weight == Some(3), || {
        json!({"code": "hamming", "d_K": k.min_distance(), "min_weight": min_weight})
    });
    t.note("hamming_d_K", k.min_distance());
    // every order-2 translation group
    for n in 1..=10usize {
        for x in 1u32..1 << n {
            let v = BitVector::masked(n, x);
            let d = translation_group(n, &[v], 2)?.min_distance();
            t.check(d.finite() == Some(v.weight()), || json!({"x": v.to_string(), "d_K": d}));
        }
    }
    let mut rng = stream_rng(seed, 0x636f_6465);
    for _ in 0..100 {
        let n = rng.gen_range(4..=10);
        let dim = rng.gen_range(1..=4);
        let vectors: Vec<BitVector> = (0..dim).map(|_| BitVector::masked(n, rng.gen())).collect();
        let code = translation_group(n, &vectors, 1 << n)?;
        let d = code.min_distance();
        let w = min_codeword_weight(&code);
        t.check(d.finite() == w, || {
            json!({"code": describe_group(&code), "d_K": d, "min_weight": w})
        });
        let g = super::grid::random_automorphism(n, &mut rng);
        let conj = code.conjugate(&g)?;
        t.check(conj.is_translation_group() && conj.min_distance() == d, || {
            json!({"code": describe_group(&code), "g": g.to_string()})
        });
    }
    Ok(t.finish(json!({"seed": seed})))
}

fn min_codeword_weight(k: &CubeGroup) -> Option<u32> {
    k.elements()
        .iter()
        .filter(|g| !g.is_identity())
        .map(|g| g.translation().weight())
        .min()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::report::Status;

    #[test]
    fn unknown_names_are_rejected() {
        assert!(matches!(run_example("nope", 0), Err(Error::UnknownExample(_))));
    }

    #[test]
    fn quaternion_example() {
        let r = run_example("exp-halved", 0).unwrap();
        assert_eq!(r.status, Status::Holds, "{:?}", r.witnesses);
        assert_eq!(r.witnesses["sphere_sizes"], json!([13, 14]));
    }

    #[test]
    fn small_examples_hold() {
        for name in ["valency-m", "even-involution", "halved-small-n"] {
            let r = run_example(name, 0).unwrap();
            assert_eq!(r.status, Status::Holds, "{name}: {:?}", r.witnesses);
        }
        for r in [k2(3, 20, 4..=6), large(4..=5), code_distance(1)] {
            let r = r.unwrap();
            assert_eq!(r.status, Status::Holds, "{}: {}", r.claim_id, r.witnesses);
        }
    }
}
