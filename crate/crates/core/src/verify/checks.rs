//! Checks of single statements on one group `K`.

use serde_json::json;

use super::grid::describe_group;
use super::props;
use super::report::{ClaimReport, Tally};
use crate::cube_symmetry::{normalizer, Ambient, CubeGroup, MinDistance};
use crate::error::{Error, Result};
use crate::graph_core::{bipartite_double, distance2_graph, halved_graphs, is_locally, triangular_graph};
use crate::iso_aut::{are_isomorphic, MAX_AUT_VERTICES, MAX_ISO_VERTICES};
use crate::quotient::{build_quotient, QuotientGraph};

/// Both sides of the distance classification for one `ℓ`:
/// (quotient is cube-like to level `ℓ`, `d_K ≥ 2ℓ + 1`).
pub fn class_dist_sides(q: &QuotientGraph, d: MinDistance, ell: u32) -> (bool, bool) {
    let params = props::quotient_params(q, ell);
    let cond_i = props::cube_like_levels(q, &params, ell)[ell as usize - 1];
    (cond_i, d.at_least(2 * ell + 1))
}

pub fn check_theorem_class_dist(k: &CubeGroup, ell: u32) -> Result<ClaimReport> {
    if ell == 0 {
        return Err(Error::PreconditionViolated("ℓ must be positive".into()));
    }
    let q = build_quotient(k)?;
    let d = k.min_distance();
    let mut t = Tally::new("thm-class-dist");
    let (cond_i, cond_ii) = class_dist_sides(&q, d, ell);
    t.note("cube_like", cond_i);
    t.note("distance_bound", cond_ii);
    t.note("d_K", d);
    t.check(cond_i == cond_ii, || json!({"group": describe_group(k), "ell": ell}));
    Ok(t.finish(json!({"group": describe_group(k), "ell": ell})))
}

/// Both halves of `(Q_n)_K` are connected and locally `T_n`.
pub fn check_main_even(k: &CubeGroup) -> Result<ClaimReport> {
    let n = k.dim();
    let d = k.min_distance();
    if !k.is_even() || !d.at_least(7) || n < 2 {
        return Err(Error::PreconditionViolated(format!(
            "needs K even, d_K ≥ 7 and n ≥ 2 (even: {}, d_K = {d}, n = {n})",
            k.is_even()
        )));
    }
    let q = build_quotient(k)?;
    let mut t = Tally::new("thm-main-even");
    main_even_on(&q, &mut t)?;
    Ok(t.finish(json!({"group": describe_group(k)})))
}

pub(crate) fn main_even_on(q: &QuotientGraph, t: &mut Tally) -> Result<()> {
    let target = triangular_graph(q.n)?;
    match halved_graphs(&q.graph) {
        Ok(h) => {
            let mut sizes = Vec::new();
            for (side, g) in h.graphs.iter().enumerate() {
                sizes.push(g.vertex_count());
                t.check(is_locally(g, &target), || {
                    json!({"group": describe_group(&q.group), "half": side, "reason": "not locally T_n"})
                });
            }
            t.note("half_sizes", sizes);
        }
        Err(e) => {
            t.check(false, || {
                json!({"group": describe_group(&q.group), "reason": e.to_string()})
            });
        }
    }
    Ok(())
}

/// Parts (i)–(iii) of the bipartite/double/halves lemma.
pub fn check_even_lemma(k: &CubeGroup) -> Result<ClaimReport> {
    let d = k.min_distance();
    if !d.at_least(2) {
        return Err(Error::PreconditionViolated(format!("needs d_K ≥ 2, got {d}")));
    }
    let q = build_quotient(k)?;
    let mut t = Tally::new("lem-even");
    even_lemma_on(&q, d, &mut t)?;
    Ok(t.finish(json!({"group": describe_group(k)})))
}

pub(crate) fn even_lemma_on(q: &QuotientGraph, d: MinDistance, t: &mut Tally) -> Result<()> {
    let k = &q.group;
    let even = k.is_even();
    let parts = props::parity_bipartition(q);
    t.check(parts == even, || {
        json!({"group": describe_group(k), "part": "i", "even": even, "parity_bipartite": parts})
    });
    if even {
        return Ok(());
    }
    // (ii): x^L ↦ (x^K, wt(x) mod 2) is an isomorphism (Q_n)_L → Π.2
    let l = k.intersect_even();
    let ql = build_quotient(&l)?;
    let double = bipartite_double(&q.graph).without_labels();
    let mut map = vec![u32::MAX; ql.vertex_count()];
    let mut well_defined = true;
    for x in 0u32..1 << q.n {
        let image = 2 * q.orbit_of_bits(x) + x.count_ones() % 2;
        let slot = &mut map[ql.orbit_of_bits(x) as usize];
        if *slot != u32::MAX && *slot != image {
            well_defined = false;
        }
        *slot = image;
    }
    let lg = ql.graph.clone().without_labels();
    let explicit = well_defined && lg.is_isomorphism(&double, &map);
    t.check(explicit, || json!({"group": describe_group(k), "part": "ii", "map": "explicit"}));
    if double.vertex_count() <= MAX_ISO_VERTICES {
        let found = are_isomorphic(&lg, &double)?.is_some();
        t.check(found, || json!({"group": describe_group(k), "part": "ii", "map": "search"}));
    }
    if !d.at_least(4) {
        return Ok(());
    }
    // (iii): each half of Π.2 is Π_2 via (x^K, i) ↦ x^K
    let pi2 = distance2_graph(&q.graph).without_labels();
    let halves = halved_graphs(&double)?;
    for side in 0..2 {
        let g = &halves.graphs[side];
        let map: Vec<u32> = halves.vertices[side].iter().map(|&v| (v / 2) as u32).collect();
        t.check(g.is_isomorphism(&pi2, &map), || {
            json!({"group": describe_group(k), "part": "iii", "half": side})
        });
    }
    Ok(())
}

/// Isomorphism verdict for the halves of a bipartite quotient, checked
/// against a non-even normaliser and against odd `n`.
pub fn check_halved_iso(k: &CubeGroup) -> Result<ClaimReport> {
    let d = k.min_distance();
    if !k.is_even() || !d.at_least(2) {
        return Err(Error::PreconditionViolated(format!(
            "needs K even and d_K ≥ 2 (even: {}, d_K = {d})",
            k.is_even()
        )));
    }
    let q = build_quotient(k)?;
    let mut t = Tally::new("prop-halved");
    halved_iso_on(&q, true, &mut t)?;
    Ok(t.finish(json!({"group": describe_group(k)})))
}

/// Returns the verdict. With `use_normalizer` false only the odd-`n` rule
/// is asserted.
pub(crate) fn halved_iso_on(q: &QuotientGraph, use_normalizer: bool, t: &mut Tally) -> Result<bool> {
    let k = &q.group;
    let halves = halved_graphs(&q.graph)?;
    let [h0, h1] = &halves.graphs;
    let iso = if h0.vertex_count().max(h1.vertex_count()) <= MAX_ISO_VERTICES {
        are_isomorphic(&h0.clone().without_labels(), &h1.clone().without_labels())?.is_some()
    } else {
        return Err(Error::TooLarge {
            vertices: h0.vertex_count(),
            max: MAX_ISO_VERTICES,
        });
    };
    t.note("halves_isomorphic", iso);
    if use_normalizer {
        match normalizer(k, Ambient::Full, 0) {
            Ok(nk) => {
                let non_even = nk.contains_non_even();
                t.note("normalizer_non_even", non_even);
                t.check(iso || !non_even, || {
                    json!({"group": describe_group(k), "reason": "normaliser not even but halves differ"})
                });
            }
            Err(Error::Unsupported(_)) => t.note("normalizer", "unsupported"),
            Err(e) => return Err(e),
        }
    }
    if q.n % 2 == 1 {
        t.check(iso, || json!({"group": describe_group(k), "reason": "n odd but halves differ"}));
    }
    Ok(iso)
}

/// Quotient and graph sizes that keep automorphism searches in range.
pub(crate) fn aut_feasible(vertices: usize) -> bool {
    vertices <= MAX_AUT_VERTICES
}
