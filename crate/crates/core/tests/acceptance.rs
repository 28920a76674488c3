//! Acceptance criteria. One PASS/FAIL line each; non-zero exit on any FAIL.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cubequot::covering::{deck_group, lift_covering};
use cubequot::cube_symmetry::normalizer::ambient_order;
use cubequot::cube_symmetry::{
    antipodal_group, brute_force_element_distance, normalizer, translation_group, Ambient,
    BitVector, CubeAutomorphism, CubeGroup, Permutation,
};
use cubequot::graph_core::{
    bipartite_double, bipartite_parts, distance2_graph, halved_graphs, hypercube, is_locally,
    triangular_graph, SimpleGraph,
};
use cubequot::iso_aut::{are_isomorphic, automorphism_group};
use cubequot::quotient::build_quotient;
use cubequot::verify::grid::{random_involution, stream_rng};
use cubequot::verify::{run_example, Status, Suite, DEFAULT_SEED};

const SEED: u64 = DEFAULT_SEED;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn unlabelled(g: &SimpleGraph) -> SimpleGraph {
    g.clone().without_labels()
}

fn iso_witness(a: &SimpleGraph, b: &SimpleGraph) -> Result<bool, String> {
    let (a, b) = (unlabelled(a), unlabelled(b));
    Ok(are_isomorphic(&a, &b)
        .map_err(err)?
        .is_some_and(|m| a.is_isomorphism(&b, &m)))
}

fn quaternion() -> Outcome {
    let x = BitVector::from_coords(8, &[1, 2, 3, 4]).map_err(err)?;
    let sigma = Permutation::parse_cycles(8, "(1 5)(2 6)(3 7)(4 8)").map_err(err)?;
    let y = BitVector::from_coords(8, &[1, 3, 6, 8]).map_err(err)?;
    let tau = Permutation::parse_cycles(8, "(1 2)(3 4)(5 6)(7 8)").map_err(err)?;
    let gens = [
        CubeAutomorphism::new(x, sigma).map_err(err)?,
        CubeAutomorphism::new(y, tau).map_err(err)?,
    ];
    let k = CubeGroup::generate(8, &gens, 64).map_err(err)?;
    let d = k.min_distance();
    ensure(k.order() == 8 && k.is_even() && d.finite() == Some(4), || {
        format!("order {} even {} d_K {d}", k.order(), k.is_even())
    })?;
    let q = build_quotient(&k).map_err(err)?;
    ensure(q.vertex_count() == 32 && bipartite_parts(&q.graph).is_ok(), || {
        format!("{} vertices", q.vertex_count())
    })?;
    let s0 = q.sphere(q.orbit_of_bits(0), 2).len();
    let s1 = q.sphere(q.orbit_of_bits(1), 2).len();
    ensure(s0 == 13 && s1 == 14, || format!("spheres {s0}, {s1}"))?;
    let h = halved_graphs(&q.graph).map_err(err)?;
    let iso = are_isomorphic(&unlabelled(&h.graphs[0]), &unlabelled(&h.graphs[1])).map_err(err)?;
    ensure(iso.is_none(), || "halves isomorphic".into())?;
    Ok(format!("|K|=8 even d_K=4 |V|=32 spheres {s0}/{s1} halves non-isomorphic"))
}

fn grid_claim(suite: &Suite, id: &str) -> Outcome {
    let r = suite.run(id).map_err(err)?;
    let w = &r.witnesses;
    ensure(r.status == Status::Holds, || format!("{}: {}", r.status, w))?;
    Ok(format!(
        "{} checks over {} groups, 0 discrepancies",
        w["checked"],
        r.parameters["groups"]
    ))
}

fn locally_triangular() -> Outcome {
    // Petersen graph: outer 5-cycle, inner pentagram, spokes
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.extend([(i, (i + 1) % 5), (5 + i, 5 + (i + 2) % 5), (i, 5 + i)]);
    }
    let petersen = SimpleGraph::from_edges(10, edges).map_err(err)?;
    let t5 = triangular_graph(5).map_err(err)?;
    ensure(iso_witness(&t5, &petersen.complement())?, || "T_5 is not the Petersen complement".into())?;
    for side in halved_graphs(&hypercube(5)).map_err(err)?.graphs {
        ensure(side.is_connected() && is_locally(&side, &t5), || "half of Q_5".into())?;
    }
    let folded = build_quotient(&antipodal_group(8)).map_err(err)?;
    let t8 = triangular_graph(8).map_err(err)?;
    for side in halved_graphs(&folded.graph).map_err(err)?.graphs {
        ensure(side.is_connected(), || "half of folded 8-cube disconnected".into())?;
        for u in 0..side.vertex_count() {
            let nbrs: Vec<usize> = side.neighbors(u).iter().map(|&w| w as usize).collect();
            let local = side.induced_subgraph(&nbrs);
            ensure(local.vertex_count() == 28 && iso_witness(&local, &t8)?, || {
                format!("neighbourhood of {u}")
            })?;
        }
    }
    Ok("halves of Q_5 locally T_5 (Petersen complement); folded 8-cube halves locally T_8".into())
}

fn conjugate_simple(suite: &Suite) -> Outcome {
    let r = suite.run("thm-conjugate-simple").map_err(err)?;
    ensure(r.status == Status::Holds, || format!("{}", r.witnesses))?;
    let k = antipodal_group(6);
    let q = build_quotient(&k).map_err(err)?;
    let aut = automorphism_group(&q.graph).map_err(err)?.order;
    let nk = normalizer(&k, Ambient::Full, 0).map_err(err)?.order / BigUint::from(2u32);
    ensure(aut == nk && aut == BigUint::from(23040u32), || format!("aut {aut}, N/K {nk}"))?;
    Ok(format!("{} pairs with witnesses; |Aut| = |N|/|K| = {aut} for the folded 6-cube", r.witnesses["pairs"]))
}

fn main_aut() -> Outcome {
    let q = build_quotient(&antipodal_group(8)).map_err(err)?;
    let expected = ambient_order(8, Ambient::Even) / BigUint::from(2u32);
    ensure(expected == BigUint::from(2_580_480u32), || format!("|E_8:S_8|/2 = {expected}"))?;
    for side in halved_graphs(&q.graph).map_err(err)?.graphs {
        let order = automorphism_group(&side).map_err(err)?.order;
        ensure(order == expected, || format!("|Aut| = {order}"))?;
    }
    Ok(format!("|Aut(half)| = {expected}"))
}

fn transposition_group(n: usize) -> Result<CubeGroup, String> {
    let g = CubeAutomorphism::new(
        BitVector::all_ones(n),
        Permutation::parse_cycles(n, "(1 2)").map_err(err)?,
    )
    .map_err(err)?;
    CubeGroup::generate(n, &[g], 2).map_err(err)
}

fn not_vertex_transitive() -> Outcome {
    let k8 = transposition_group(8)?;
    ensure(k8.min_distance().finite() == Some(6), || format!("d_K = {}", k8.min_distance()))?;
    let orbits8 = automorphism_group(&build_quotient(&k8).map_err(err)?.graph)
        .map_err(err)?
        .orbits()
        .len();
    let k10 = transposition_group(10)?;
    ensure(k10.is_even() && k10.min_distance().finite() == Some(8), || {
        format!("even {} d_K {}", k10.is_even(), k10.min_distance())
    })?;
    let q10 = build_quotient(&k10).map_err(err)?;
    let half = &halved_graphs(&q10.graph).map_err(err)?.graphs[0];
    let orbits10 = automorphism_group(half).map_err(err)?.orbits().len();
    ensure(orbits8 > 1 && orbits10 > 1, || format!("orbits {orbits8}, {orbits10}"))?;
    Ok(format!("n=8 quotient: {orbits8} orbits; n=10 half: {orbits10} orbits"))
}

fn bipartite_double_cover() -> Outcome {
    let k = antipodal_group(7);
    ensure(!k.is_even() && k.min_distance().finite() == Some(7), || "group".into())?;
    let q = build_quotient(&k).map_err(err)?;
    let double = bipartite_double(&q.graph);
    ensure(iso_witness(&double, &hypercube(7))?, || "double is not Q_7".into())?;
    let pi2 = distance2_graph(&q.graph);
    for side in halved_graphs(&double).map_err(err)?.graphs {
        ensure(iso_witness(&side, &pi2)?, || "half of the double is not Π_2".into())?;
    }
    Ok("Π.2 ≅ Q_7 and both halves ≅ Π_2, witnesses verified".into())
}

fn round_trip() -> Outcome {
    let q = build_quotient(&antipodal_group(8)).map_err(err)?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut perm: Vec<u32> = (0..q.vertex_count() as u32).collect();
    perm.shuffle(&mut rng);
    let pi = unlabelled(&q.graph).relabel(&perm);
    let c = lift_covering(&pi, 0, None).map_err(err)?;
    ensure(c.verify(), || "lift is not a covering".into())?;
    let deck = deck_group(&c).map_err(err)?;
    ensure(deck.order() == 2, || format!("deck order {}", deck.order()))?;
    let rebuilt = build_quotient(&deck).map_err(err)?;
    ensure(iso_witness(&rebuilt.graph, &pi)?, || "rebuilt quotient differs".into())?;
    Ok(format!("deck group {} rebuilds the relabelled folded 8-cube", deck.generators()[0]))
}

fn code_specialization() -> Outcome {
    // G = [I | P], rows of P: 110, 101, 011, 111
    let rows = ["1000110", "0100101", "0010011", "0001111"];
    let gens: Vec<BitVector> = rows.iter().map(|r| BitVector::parse(r)).collect::<Result<_, _>>().map_err(err)?;
    let code = translation_group(7, &gens, 16).map_err(err)?;
    let mut min_weight = u32::MAX;
    for m in 1u32..16 {
        let w = (0..4)
            .filter(|i| m >> i & 1 == 1)
            .fold(0u32, |acc, i| acc ^ gens[i].bits())
            .count_ones();
        min_weight = min_weight.min(w);
    }
    let d = code.min_distance();
    ensure(code.order() == 16 && d.finite() == Some(3) && min_weight == 3, || {
        format!("d_K {d}, min weight {min_weight}")
    })?;
    let mut count = 0;
    for n in 1..=10usize {
        for x in 1u32..1 << n {
            let v = BitVector::masked(n, x);
            let d = translation_group(n, &[v], 2).map_err(err)?.min_distance();
            ensure(d.finite() == Some(v.weight()), || format!("x = {v}: d_K = {d}"))?;
            count += 1;
        }
    }
    Ok(format!("Hamming d_K = 3 = min weight; {count} order-2 translation groups"))
}

fn involution_formula() -> Outcome {
    let mut count = 0;
    for n in 4..=10 {
        let mut rng = stream_rng(SEED, 0xacce_0000 + n as u64);
        for _ in 0..200 {
            let g = random_involution(n, &mut rng);
            let formula = g
                .perm()
                .fixed_points()
                .into_iter()
                .filter(|&i| g.translation().get(i))
                .count() as u32;
            let brute = brute_force_element_distance(&g);
            let d = CubeGroup::generate(n, &[g], 2).map_err(err)?.min_distance();
            ensure(formula == brute && d.finite() == Some(brute), || {
                format!("{g}: formula {formula}, brute force {brute}, d_K {d}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} involutions"))
}

fn large() -> Outcome {
    let r = run_example("large", SEED).map_err(err)?;
    ensure(r.status == Status::Holds, || format!("{}", r.witnesses))?;
    let scan = r.witnesses["scan"].as_array().cloned().unwrap_or_default();
    let summary: Vec<String> = scan
        .iter()
        .map(|s| format!("n={}: {}", s["n"], s["cyclic_groups_with_d_at_least_n_minus_1"]))
        .collect();
    Ok(format!("only weight n-1, n translations reach d ≥ n-1 ({})", summary.join(", ")))
}

fn main() -> ExitCode {
    let suite = Suite::new(SEED);
    let criteria: Vec<Criterion> = vec![
        ("quaternion example", Duration::from_secs(1), Box::new(quaternion)),
        ("distance classification on the grid", Duration::from_secs(120), Box::new(|| grid_claim(&suite, "thm-class-dist"))),
        ("covering trichotomy on the grid", Duration::from_secs(120), Box::new(|| grid_claim(&suite, "lem-covering"))),
        ("locally T_n halves", Duration::from_secs(30), Box::new(locally_triangular)),
        ("isomorphic quotients from conjugates", Duration::from_secs(120), Box::new(|| conjugate_simple(&suite))),
        ("Aut of the halved folded 8-cube", Duration::from_secs(60), Box::new(main_aut)),
        ("non-vertex-transitive quotients", Duration::from_secs(60), Box::new(not_vertex_transitive)),
        ("bipartite double of the folded 7-cube", Duration::from_secs(30), Box::new(bipartite_double_cover)),
        ("covering round trip", Duration::from_secs(10), Box::new(round_trip)),
        ("code minimum distance", Duration::from_secs(30), Box::new(code_specialization)),
        ("order-2 distance formula", Duration::from_secs(30), Box::new(involution_formula)),
        ("largest minimum distance", Duration::from_secs(60), Box::new(large)),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= *limit => (true, d),
            Ok(d) => (false, format!("{d}; took {elapsed:.2?}, limit {limit:?}")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "{} {:>2} {name}: {detail} [{elapsed:.2?}]",
            if ok { "PASS" } else { "FAIL" },
            i + 1
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
