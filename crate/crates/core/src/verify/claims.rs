//! One runner per claim id. Universally quantified statements are checked on
//! the grid, plus the specific instances they are usually quoted with.

use num_bigint::BigUint;
use rand::Rng;
use serde_json::json;

use super::checks::{
    aut_feasible, class_dist_sides, even_lemma_on, halved_iso_on, main_even_on,
};
use super::examples;
use super::grid::{all_order_two_subgroups, describe_group, random_automorphism, random_subgroup, stream_rng, GridEntry};
use super::props;
use super::report::{ClaimReport, Tally};
use super::Suite;
use crate::covering::{deck_group, lift_covering, CoveringMap};
use crate::cube_symmetry::{
    antipodal_group, normalizer, quaternion_generators, Ambient, BitVector, CubeAutomorphism,
    CubeGroup, Normalizer, Permutation,
};
use crate::error::{Error, Result};
use crate::graph_core::{
    distance2_graph, halved_graphs, is_locally, is_rectagraph, local_params,
    triangular_graph, SimpleGraph,
};
use crate::iso_aut::{are_isomorphic, automorphism_group, MAX_ISO_VERTICES};
use crate::quotient::{build_quotient, QuotientGraph};

/// Runs `body` on every grid entry and reports over the whole grid.
fn over_grid(
    suite: &Suite,
    id: &str,
    mut body: impl FnMut(usize, &GridEntry, &mut Tally) -> Result<()>,
) -> Result<ClaimReport> {
    let grid = suite.grid()?;
    let mut t = Tally::new(id);
    for (i, e) in grid.entries.iter().enumerate() {
        body(i, e, &mut t)?;
    }
    Ok(t.finish(grid.parameters()))
}

fn unlabelled(g: &SimpleGraph) -> SimpleGraph {
    g.clone().without_labels()
}

/// The normaliser when one of the fast tiers applies.
fn cheap_normalizer(k: &CubeGroup, ambient: Ambient) -> Result<Option<Normalizer>> {
    if k.order() <= 2 || k.dim() <= 6 {
        match normalizer(k, ambient, 0) {
            Ok(nk) => Ok(Some(nk)),
            Err(Error::Unsupported(_)) => Ok(None),
            Err(e) => Err(e),
        }
    } else {
        Ok(None)
    }
}

fn sample_bases(n: usize, i: usize, suite: &Suite) -> Vec<u32> {
    let mut rng = stream_rng(suite.seed, 0x6261_7365_0000 + i as u64);
    let top = (1u32 << n) - 1;
    let mut bases = vec![0, 1, top, rng.gen::<u32>() & top];
    bases.sort_unstable();
    bases.dedup();
    bases
}

pub(crate) fn dk_basic(suite: &Suite) -> Result<ClaimReport> {
    let mut rng = stream_rng(suite.seed, 0x6f_6273);
    over_grid(suite, "obs-dk-basic", |_, e, t| {
        let k = &e.group;
        let n = e.n();
        let semi = k.is_semiregular();
        let positive = e.d.at_least(1);
        let full_size = e.quotient.vertex_count() * k.order() == 1 << n;
        t.check(semi == positive && positive == full_size, || {
            json!({"group": e.describe(), "semiregular": semi, "d_K": e.d, "full_size": full_size})
        });
        let bounded = match e.d.finite() {
            Some(d) => !k.is_trivial() && d as usize <= n,
            None => k.is_trivial(),
        };
        t.check(bounded, || json!({"group": e.describe(), "d_K": e.d}));
        let g = random_automorphism(n, &mut rng);
        let d_conj = k.conjugate(&g)?.min_distance();
        t.check(d_conj == e.d, || {
            json!({"group": e.describe(), "g": g.to_string(), "d_K": e.d, "d_conjugate": d_conj})
        });
        Ok(())
    })
}

pub(crate) fn nbd(suite: &Suite) -> Result<ClaimReport> {
    over_grid(suite, "lem-nbd", |i, e, t| {
        let q = &e.quotient;
        for x in sample_bases(e.n(), i, suite) {
            for ell in 1..=3.min(e.n() as u32) {
                let mut sphere = q.sphere(q.orbit_of_bits(x), ell);
                sphere.sort_unstable();
                let shifted = props::shifted_orbits(q, x, ell);
                let inside = sphere.iter().all(|v| shifted.binary_search(v).is_ok());
                t.check(inside, || json!({"group": e.describe(), "x": x, "ell": ell}));
            }
        }
        Ok(())
    })
}

pub(crate) fn trick(suite: &Suite) -> Result<ClaimReport> {
    over_grid(suite, "lem-trick", |_, e, t| {
        let hit = props::close_collision(&e.group, e.d);
        t.check(hit.is_none(), || {
            let (x, y) = hit.unwrap();
            json!({"group": e.describe(), "x": x, "y": y, "d_K": e.d})
        });
        Ok(())
    })
}

pub(crate) fn cycle(suite: &Suite) -> Result<ClaimReport> {
    let mut lengths = std::collections::BTreeMap::<u32, usize>::new();
    let mut r = over_grid(suite, "lem-cycle", |_, e, t| {
        match e.d.finite() {
            Some(d) if d >= 3 => {
                let c = props::minimum_distance_cycle(&e.quotient, d);
                let ok = c.as_ref().is_some_and(|c| c.len() == d as usize);
                if ok {
                    *lengths.entry(d).or_default() += 1;
                }
                t.check(ok, || json!({"group": e.describe(), "d_K": d}));
            }
            _ => t.skip(),
        }
        Ok(())
    })?;
    r.witnesses["cycles_by_length"] = json!(lengths);
    Ok(r)
}

pub(crate) fn nbd2(suite: &Suite) -> Result<ClaimReport> {
    over_grid(suite, "lem-nbd2", |i, e, t| {
        let q = &e.quotient;
        let levels: Vec<u32> = (1..=3.min(e.n() as u32)).filter(|&l| e.d.at_least(2 * l)).collect();
        if levels.is_empty() {
            t.skip();
            return Ok(());
        }
        for x in sample_bases(e.n(), i, suite) {
            for &ell in &levels {
                let mut sphere = q.sphere(q.orbit_of_bits(x), ell);
                sphere.sort_unstable();
                let shifted = props::shifted_orbits(q, x, ell);
                t.check(sphere == shifted, || {
                    json!({"group": e.describe(), "x": x, "ell": ell, "sphere": sphere.len(), "shifted": shifted.len()})
                });
            }
        }
        Ok(())
    })
}

pub(crate) fn covering_trichotomy(suite: &Suite) -> Result<ClaimReport> {
    over_grid(suite, "lem-covering", |_, e, t| {
        let q = &e.quotient;
        let covering = CoveringMap::natural(q).verify();
        let regular = q.graph.valency() == Some(e.n());
        let distance = e.d.at_least(3);
        t.check(covering == regular && regular == distance, || {
            json!({"group": e.describe(), "covering": covering, "regular_n": regular, "d_K": e.d})
        });
        Ok(())
    })
}

pub(crate) fn a_c(suite: &Suite) -> Result<ClaimReport> {
    over_grid(suite, "lem-a-c", |_, e, t| {
        if !e.d.at_least(2) {
            t.skip();
            return Ok(());
        }
        let params = local_params(&e.quotient.graph, 3);
        for ell in 1..=3u32 {
            let p = &params[ell as usize];
            let prev = &params[ell as usize - 1];
            if e.d.at_least(2 * ell) {
                t.check(prev.a_value.is(0), || {
                    json!({"group": e.describe(), "ell": ell, "a": prev.a_value.to_string()})
                });
            }
            if e.d.at_least(2 * ell + 1) {
                t.check(p.c_value.is(ell), || {
                    json!({"group": e.describe(), "ell": ell, "c": p.c_value.to_string()})
                });
            }
        }
        Ok(())
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub(crate) fn counting(suite: &Suite) -> Result<ClaimReport> {
    over_grid(suite, "lem-counting", |_, e, t| {
        let q = &e.quotient;
        let params = local_params(&q.graph, 3);
        let levels = props::cube_like_levels(q, &params, 3);
        let Some(top) = levels.iter().rposition(|&b| b) else {
            t.skip();
            return Ok(());
        };
        let ell = top as u32 + 1;
        for u in 0..q.vertex_count() as u32 {
            for l in 1..=ell {
                let size = q.sphere(u, l).len() as u64;
                let want = binomial(e.n() as u64, l as u64);
                t.check(size == want, || {
                    json!({"group": e.describe(), "vertex": u, "ell": l, "size": size, "expected": want})
                });
            }
        }
        Ok(())
    })
}

pub(crate) fn class_dist(suite: &Suite) -> Result<ClaimReport> {
    let mut agree_true = [0usize; 3];
    let mut r = over_grid(suite, "thm-class-dist", |_, e, t| {
        for ell in 1..=3u32 {
            let (i, ii) = class_dist_sides(&e.quotient, e.d, ell);
            if i && ii {
                agree_true[ell as usize - 1] += 1;
            }
            t.check(i == ii, || {
                json!({"group": e.describe(), "ell": ell, "cube_like": i, "d_K": e.d})
            });
        }
        Ok(())
    })?;
    r.witnesses["both_true_by_ell"] = json!(agree_true);
    Ok(r)
}

/// A randomly relabelled quotient is lifted, and its deck group rebuilds it.
fn lift_round_trip(q: &QuotientGraph, seed: u64, t: &mut Tally) -> Result<Option<CubeGroup>> {
    let mut rng = stream_rng(seed, 0x6c69_6674);
    let mut perm: Vec<u32> = (0..q.vertex_count() as u32).collect();
    rand::seq::SliceRandom::shuffle(&mut perm[..], &mut rng);
    let pi = unlabelled(&q.graph).relabel(&perm);
    let base = rng.gen_range(0..pi.vertex_count());
    let c = lift_covering(&pi, base, None)?;
    t.check(c.verify(), || json!({"group": describe_group(&q.group), "reason": "lift is not a covering"}));
    let deck = deck_group(&c)?;
    t.check(deck.order() == q.group.order(), || {
        json!({"group": describe_group(&q.group), "deck_order": deck.order()})
    });
    let rebuilt = build_quotient(&deck)?;
    let iso = are_isomorphic(&unlabelled(&rebuilt.graph), &pi)?;
    let witnessed = iso
        .as_ref()
        .is_some_and(|m| unlabelled(&rebuilt.graph).is_isomorphism(&pi, m));
    t.check(witnessed, || json!({"group": describe_group(&q.group), "reason": "rebuilt quotient differs"}));
    Ok(Some(deck))
}

pub(crate) fn main_rect(suite: &Suite) -> Result<ClaimReport> {
    let grid = suite.grid()?;
    let mut t = Tally::new("cor-main-rect");
    let mut round_trips = 0;
    for (i, e) in grid.entries.iter().enumerate() {
        let q = &e.quotient;
        let params = local_params(&q.graph, 3);
        // at the graph's own valency, which may be below n
        let own = is_rectagraph(&q.graph)
            && q.graph.valency().is_some()
            && params[2].a_value.is(0)
            && params[3].c_value.is(3);
        let rect = own && q.graph.valency() == Some(e.n());
        t.check(rect == e.d.at_least(7), || {
            json!({"group": e.describe(), "rectagraph": rect, "d_K": e.d})
        });
        if !own {
            let refused = matches!(lift_covering(&q.graph, 0, None), Err(Error::NotRectagraph(_)));
            t.check(refused, || json!({"group": e.describe(), "reason": "lifted a non-rectagraph"}));
        }
        if !rect {
            continue;
        }
        round_trips += 1;
        let Some(deck) = lift_round_trip(q, suite.seed ^ i as u64, &mut t)? else {
            continue;
        };
        if e.n() <= 7 {
            let conj = deck.conjugating_element(&e.group)?;
            t.check(conj.is_some(), || json!({"group": e.describe(), "reason": "deck group not conjugate"}));
        }
    }
    // the folded 8-cube, relabelled
    let folded = build_quotient(&antipodal_group(8))?;
    let deck = lift_round_trip(&folded, suite.seed, &mut t)?.expect("lifted");
    let antipodal = antipodal_group(8);
    t.check(deck.same_elements(&antipodal), || {
        json!({"reason": "folded 8-cube deck group", "deck": describe_group(&deck)})
    });
    // d_K = 4 is too small to lift
    let quaternion = build_quotient(&CubeGroup::generate(8, &quaternion_generators(), 8)?)?;
    let refused = matches!(lift_covering(&quaternion.graph, 0, None), Err(Error::NotRectagraph(_)));
    t.check(refused, || json!({"reason": "quaternion quotient lifted"}));
    t.note("round_trips", round_trips + 1);
    Ok(t.finish(grid.parameters()))
}

/// Conjugation by `g` induces an isomorphism; an isomorphism found by search
/// comes from a conjugating element when `d_K ≥ 5`.
fn conjugate_pair(qk: &QuotientGraph, g: &CubeAutomorphism, search: bool, t: &mut Tally) -> Result<()> {
    let k = &qk.group;
    let l = k.conjugate(g)?;
    let ql = build_quotient(&l)?;
    let gk = unlabelled(&qk.graph);
    let gl = unlabelled(&ql.graph);
    let commutes = props::conjugation_map(qk, &ql, g).is_ok_and(|m| gk.is_isomorphism(&gl, &m));
    t.check(commutes, || json!({"group": describe_group(k), "g": g.to_string(), "part": "ii"}));
    if !search || !k.min_distance().at_least(5) || qk.vertex_count() > MAX_ISO_VERTICES {
        return Ok(());
    }
    let phi = are_isomorphic(&gk, &gl)?;
    let lifted = phi
        .as_ref()
        .filter(|m| gk.is_isomorphism(&gl, m))
        .and_then(|m| props::lift_isomorphism(qk, &ql, m));
    let ok = match &lifted {
        Some(h) => k.conjugate(h)?.same_elements(&l),
        None => false,
    };
    t.check(ok, || {
        json!({"group": describe_group(k), "g": g.to_string(), "part": "i", "found": phi.is_some()})
    });
    Ok(())
}

pub(crate) fn conjugate(suite: &Suite) -> Result<ClaimReport> {
    let mut rng = stream_rng(suite.seed, 0x636f_6e6a);
    over_grid(suite, "prop-conjugate", |_, e, t| {
        let g = random_automorphism(e.n(), &mut rng);
        conjugate_pair(&e.quotient, &g, true, t)?;
        // K = K^{π_K}
        if e.d.at_least(3) {
            let deck = deck_group(&CoveringMap::natural(&e.quotient))?;
            t.check(deck.same_elements(&e.group), || {
                json!({"group": e.describe(), "deck": describe_group(&deck)})
            });
        }
        Ok(())
    })
}

/// A subgroup with `d_K ≥ 5` from the random sampler.
fn sample_distant(n: usize, order: usize, rng: &mut impl Rng) -> CubeGroup {
    for _ in 0..100 {
        let k = random_subgroup(n, order, rng);
        if k.min_distance().at_least(5) {
            return k;
        }
    }
    loop {
        let k = random_subgroup(n, 2, rng);
        if k.min_distance().at_least(5) {
            return k;
        }
    }
}

fn aut_matches_normalizer(
    q: &QuotientGraph,
    graph: &SimpleGraph,
    nk: &Normalizer,
    t: &mut Tally,
) -> Result<(BigUint, BigUint)> {
    let aut = automorphism_group(&unlabelled(graph))?;
    let expected = &nk.order / BigUint::from(q.group.order());
    t.check(aut.order == expected, || {
        json!({"group": describe_group(&q.group), "aut": aut.order.to_string(), "expected": expected.to_string()})
    });
    Ok((aut.order, expected))
}

pub(crate) fn conjugate_simple(suite: &Suite) -> Result<ClaimReport> {
    let mut t = Tally::new("thm-conjugate-simple");
    let mut rng = stream_rng(suite.seed, 0x7369_6d70);
    let mut pairs = Vec::new();
    for i in 0..50 {
        let n = [6, 7, 8][i % 3];
        let k = sample_distant(n, [2, 4, 8][i / 3 % 3], &mut rng);
        let g = random_automorphism(n, &mut rng);
        conjugate_pair(&build_quotient(&k)?, &g, true, &mut t)?;
        pairs.push(json!({"n": n, "order": k.order(), "d_K": k.min_distance()}));
    }
    // the converse at n = 6, where conjugacy is decided by brute force: every
    // order-2 K with d_K ≥ 5 against every order-2 L with d_L ≥ 3
    let grid = suite.grid()?;
    let mut converse = 0;
    let mut conjugate_pairs = 0;
    let candidates: Vec<QuotientGraph> = all_order_two_subgroups(6)
        .into_iter()
        .filter(|l| l.min_distance().at_least(3))
        .map(|l| build_quotient(&l))
        .collect::<Result<_>>()?;
    for qk in candidates.iter().filter(|q| q.group.min_distance().at_least(5)) {
        for ql in &candidates {
            let iso = are_isomorphic(&unlabelled(&qk.graph), &unlabelled(&ql.graph))?.is_some();
            let conj = qk.group.conjugating_element(&ql.group)?.is_some();
            converse += 1;
            conjugate_pairs += usize::from(conj);
            t.check(iso == conj, || {
                json!({"k": describe_group(&qk.group), "l": describe_group(&ql.group), "isomorphic": iso, "conjugate": conj})
            });
        }
    }
    // Aut = N/K on the folded 6-cube and on feasible grid groups
    let folded = build_quotient(&antipodal_group(6))?;
    let nk = normalizer(&folded.group, Ambient::Full, 0)?;
    let (aut, expected) = aut_matches_normalizer(&folded, &folded.graph, &nk, &mut t)?;
    t.check(aut == BigUint::from(23040u32), || json!({"folded_6_cube_aut": aut.to_string()}));
    let mut aut_checked = 0;
    for e in grid.entries.iter().filter(|e| e.d.at_least(5) && aut_feasible(e.quotient.vertex_count())) {
        if let Some(nk) = cheap_normalizer(&e.group, Ambient::Full)? {
            aut_matches_normalizer(&e.quotient, &e.quotient.graph, &nk, &mut t)?;
            aut_checked += 1;
        }
    }
    t.note("pairs", pairs.len());
    t.note("converse_pairs", converse);
    t.note("converse_conjugate", conjugate_pairs);
    t.note("folded_6_cube", json!({"aut": aut.to_string(), "normalizer_over_k": expected.to_string()}));
    t.note("aut_checked", aut_checked);
    Ok(t.finish(json!({"seed": suite.seed, "pairs": pairs, "grid": grid.parameters()})))
}

pub(crate) fn even_lemma(suite: &Suite) -> Result<ClaimReport> {
    over_grid(suite, "lem-even", |_, e, t| {
        if e.d.at_least(2) {
            even_lemma_on(&e.quotient, e.d, t)
        } else {
            t.skip();
            Ok(())
        }
    })
}

pub(crate) fn halved(suite: &Suite) -> Result<ClaimReport> {
    let mut verdicts = [0usize; 2];
    let mut r = over_grid(suite, "prop-halved", |_, e, t| {
        if !e.group.is_even() || !e.d.at_least(2) {
            t.skip();
            return Ok(());
        }
        let use_normalizer = e.group.order() == 2 || e.n() <= 6;
        let iso = halved_iso_on(&e.quotient, use_normalizer, t)?;
        verdicts[iso as usize] += 1;
        Ok(())
    })?;
    r.witnesses["halves_isomorphic"] = json!(verdicts[1]);
    r.witnesses["halves_not_isomorphic"] = json!(verdicts[0]);
    if let Some(w) = r.witnesses.as_object_mut() {
        w.remove("normalizer_non_even");
        w.remove("normalizer");
    }
    Ok(r)
}

pub(crate) fn odd_iso(suite: &Suite) -> Result<ClaimReport> {
    let mut t = Tally::new("cor-odd-iso");
    let mut exhaustive = 0;
    for k in all_order_two_subgroups(7) {
        if !k.is_even() || !k.min_distance().at_least(2) {
            continue;
        }
        exhaustive += 1;
        halved_iso_on(&build_quotient(&k)?, false, &mut t)?;
    }
    let grid = suite.grid()?;
    for e in &grid.entries {
        if e.n() % 2 == 1 && e.group.is_even() && e.d.at_least(2) {
            halved_iso_on(&e.quotient, false, &mut t)?;
        }
    }
    t.note("exhaustive_n7", exhaustive);
    Ok(t.finish(json!({"exhaustive_dim": 7, "grid": grid.parameters()})))
}

fn petersen() -> Result<SimpleGraph> {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    SimpleGraph::from_edges(10, edges)
}

pub(crate) fn loc_tn(suite: &Suite) -> Result<ClaimReport> {
    let mut t = Tally::new("lem-loc-tn");
    let t5 = triangular_graph(5)?;
    let complement = petersen()?.complement();
    t.check(are_isomorphic(&t5, &complement)?.is_some(), || json!({"reason": "T_5 is not the Petersen complement"}));
    for (name, k) in [("Q_5", CubeGroup::trivial(5)), ("folded 8-cube", antipodal_group(8))] {
        let q = build_quotient(&k)?;
        let target = triangular_graph(q.n)?;
        for (side, half) in halved_graphs(&q.graph)?.graphs.iter().enumerate() {
            t.check(half.is_connected() && is_locally(half, &target), || {
                json!({"graph": name, "half": side})
            });
        }
    }
    let grid = suite.grid()?;
    for e in grid.entries.iter().filter(|e| e.d.at_least(7)) {
        let pi2 = distance2_graph(&e.quotient.graph);
        let target = triangular_graph(e.n())?;
        for comp in pi2.components() {
            let g = pi2.induced_subgraph(&comp);
            t.check(is_locally(&g, &target), || json!({"group": e.describe()}));
        }
    }
    Ok(t.finish(json!({"grid": grid.parameters()})))
}

fn lt_group() -> Result<CubeGroup> {
    let x = BitVector::all_ones(10);
    let g = CubeAutomorphism::new(x, Permutation::parse_cycles(10, "(1 2)")?)?;
    CubeGroup::generate(10, &[g], 2)
}

pub(crate) fn main_even(suite: &Suite) -> Result<ClaimReport> {
    let mut t = Tally::new("thm-main-even");
    let named = [CubeGroup::trivial(5), antipodal_group(8), lt_group()?];
    for k in &named {
        main_even_on(&build_quotient(k)?, &mut t)?;
    }
    let grid = suite.grid()?;
    for e in &grid.entries {
        if e.group.is_even() && e.d.at_least(7) {
            main_even_on(&e.quotient, &mut t)?;
        } else {
            t.skip();
        }
    }
    let names: Vec<_> = named.iter().map(describe_group).collect();
    let mut r = t.finish(json!({"groups": names, "grid": grid.parameters()}));
    if let Some(w) = r.witnesses.as_object_mut() {
        w.remove("half_sizes");
    }
    Ok(r)
}

pub(crate) fn main_aut(suite: &Suite) -> Result<ClaimReport> {
    let mut t = Tally::new("thm-main-aut");
    let mut rows = Vec::new();
    let mut named = vec![antipodal_group(8), lt_group()?];
    let grid = suite.grid()?;
    for e in &grid.entries {
        if e.group.is_even() && e.d.at_least(7) && e.n() >= 5 && aut_feasible(e.quotient.vertex_count() / 2) {
            named.push(e.group.clone());
        }
    }
    for k in &named {
        let Some(ne) = cheap_normalizer(k, Ambient::Even)? else {
            t.skip();
            continue;
        };
        let q = build_quotient(k)?;
        let halves = halved_graphs(&q.graph)?;
        for half in &halves.graphs {
            let (aut, expected) = aut_matches_normalizer(&q, half, &ne, &mut t)?;
            if rows.len() < 4 {
                rows.push(json!({"group": describe_group(k), "aut": aut.to_string(), "expected": expected.to_string()}));
            }
        }
    }
    t.note("cases", rows);
    Ok(t.finish(json!({"grid": grid.parameters()})))
}

pub(crate) fn code_distance(suite: &Suite) -> Result<ClaimReport> {
    examples::code_distance(suite.seed)
}
