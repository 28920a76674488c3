//! Seeded checks of every statement about `d_K`, quotients, halves and
//! coverings, each producing a [`ClaimReport`].

mod checks;
mod claims;
mod examples;
pub mod grid;
mod props;
mod report;

use std::cell::OnceCell;

pub use checks::{check_even_lemma, check_halved_iso, check_main_even, check_theorem_class_dist};
pub use examples::{run_example, EXAMPLES};
pub use grid::{Grid, GridSpec};
pub use report::{reports_to_json, ClaimReport, Status};

use crate::error::{Error, Result};

pub const DEFAULT_SEED: u64 = 20240229;

/// Shared state for one run: the seed and the grid, built on first use.
pub struct Suite {
    pub seed: u64,
    spec: GridSpec,
    grid: OnceCell<Grid>,
}

impl Suite {
    pub fn new(seed: u64) -> Self {
        Suite::with_spec(GridSpec::default(), seed)
    }

    pub fn with_spec(spec: GridSpec, seed: u64) -> Self {
        Suite {
            seed,
            spec,
            grid: OnceCell::new(),
        }
    }

    pub fn grid(&self) -> Result<&Grid> {
        if let Some(g) = self.grid.get() {
            return Ok(g);
        }
        let g = Grid::build(self.spec.clone(), self.seed)?;
        Ok(self.grid.get_or_init(|| g))
    }

    pub fn run(&self, id: &str) -> Result<ClaimReport> {
        let entry = CLAIMS
            .iter()
            .find(|c| c.id == id)
            .ok_or_else(|| Error::UnknownClaim(id.to_string()))?;
        (entry.run)(self)
    }
}

pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    run: fn(&Suite) -> Result<ClaimReport>,
}

macro_rules! ex {
    ($name:literal) => {
        |s: &Suite| run_example($name, s.seed)
    };
}

pub const CLAIMS: &[Claim] = &[
    Claim { id: "obs-dk-basic", statement: "d_K ≥ 1 iff K semiregular iff |V| = 2^n/|K|; d_K ≤ n for K ≠ 1; d_K conjugation invariant", run: claims::dk_basic },
    Claim { id: "lem-nbd", statement: "Π_ℓ(x^K) ⊆ {(x+e)^K : wt(e) = ℓ}", run: claims::nbd },
    Claim { id: "lem-trick", statement: "x^K = y^K with x ≠ y implies wt(x+y) ≥ d_K", run: claims::trick },
    Claim { id: "lem-cycle", statement: "K ≠ 1 and d_K ≥ 3 give a cycle of length d_K", run: claims::cycle },
    Claim { id: "lem-nbd2", statement: "d_K ≥ 2ℓ gives Π_ℓ(x^K) = {(x+e)^K : wt(e) = ℓ}", run: claims::nbd2 },
    Claim { id: "lem-covering", statement: "natural map a covering iff Π regular of valency n iff d_K ≥ 3", run: claims::covering_trichotomy },
    Claim { id: "lem-a-c", statement: "d_K ≥ 2ℓ gives a_{ℓ-1} = 0; d_K ≥ 2ℓ+1 gives c_ℓ = ℓ", run: claims::a_c },
    Claim { id: "lem-counting", statement: "cube-like to level ℓ gives |Π_ℓ(u)| = C(n, ℓ)", run: claims::counting },
    Claim { id: "thm-class-dist", statement: "Π cube-like to level ℓ iff d_K ≥ 2ℓ+1", run: claims::class_dist },
    Claim { id: "cor-main-rect", statement: "rectagraph of valency n with a_2 = 0, c_3 = 3 iff (Q_n)_K with d_K ≥ 7", run: claims::main_rect },
    Claim { id: "prop-conjugate", statement: "conjugate groups give isomorphic quotients; for d_K ≥ 5 every isomorphism lifts", run: claims::conjugate },
    Claim { id: "thm-conjugate-simple", statement: "for d_K ≥ 5, quotients isomorphic iff groups conjugate; Aut = N(K)/K", run: claims::conjugate_simple },
    Claim { id: "rem-code-distance", statement: "for a binary linear code, d_K is its minimum distance", run: claims::code_distance },
    Claim { id: "ex-large", statement: "d_K ∈ {n-1, n} forces K = {0, x} with wt(x) = d_K", run: ex!("large") },
    Claim { id: "ex-K2", statement: "|K| = 2 gives d_K = |{i ∈ fix(σ) : x_i = 1}|", run: ex!("K2") },
    Claim { id: "ex-not-vt", statement: "K = {0, (x, (i j))} with wt(x) ≥ n-1 gives a non-vertex-transitive quotient", run: ex!("not-vt") },
    Claim { id: "ex-valency-m", statement: "an even-weight code on n-m+1 coordinates gives (Q_n)_K ≅ Q_m", run: ex!("valency-m") },
    Claim { id: "lem-even", statement: "Π bipartite iff K even; Π.2 ≅ (Q_n)_L; halves of Π.2 ≅ Π_2 when d_K ≥ 4", run: claims::even_lemma },
    Claim { id: "prop-halved", statement: "K even, d_K ≥ 2, normaliser not even gives isomorphic halves", run: claims::halved },
    Claim { id: "cor-odd-iso", statement: "K even, d_K ≥ 2, n odd gives isomorphic halves", run: claims::odd_iso },
    Claim { id: "ex-exp-halved", statement: "the quaternion group in Aut(Q_8) has non-isomorphic halves", run: ex!("exp-halved") },
    Claim { id: "ex-even-involution", statement: "even K of order 2 with d_K ≥ 2 has isomorphic halves", run: ex!("even-involution") },
    Claim { id: "lem-loc-tn", statement: "d_K ≥ 7 gives every component of Π_2 locally T_n", run: claims::loc_tn },
    Claim { id: "thm-main-even", statement: "K even with d_K ≥ 7 gives connected locally T_n halves", run: claims::main_even },
    Claim { id: "thm-main-aut", statement: "K even, d_K ≥ 7, n ≥ 5 gives Aut(half) = N_{E_n:S_n}(K)/K", run: claims::main_aut },
    Claim { id: "ex-halved-small-n", statement: "halved n-cubes for n ≤ 4 have Aut of order 2, 24, 384", run: ex!("halved-small-n") },
    Claim { id: "ex-lt-not-vt", statement: "a locally T_10 halved graph that is not vertex-transitive", run: ex!("lt-not-vt") },
];

pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.id).collect()
}

/// Runs `ids` in order, stopping after the first `FAILS`.
pub fn run_claims(ids: &[&str], seed: u64) -> Result<Vec<ClaimReport>> {
    for id in ids {
        if !CLAIMS.iter().any(|c| c.id == *id) {
            return Err(Error::UnknownClaim(id.to_string()));
        }
    }
    let suite = Suite::new(seed);
    let mut out = Vec::new();
    for id in ids {
        let r = suite.run(id)?;
        let failed = r.status == Status::Fails;
        out.push(r);
        if failed {
            break;
        }
    }
    Ok(out)
}

pub fn run_all(seed: u64) -> Result<Vec<ClaimReport>> {
    run_claims(&claim_ids(), seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique() {
        let mut ids = claim_ids();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), before);
        for name in EXAMPLES {
            let id = format!("ex-{name}");
            assert!(CLAIMS.iter().any(|c| c.id == id), "{id} missing");
        }
    }

    #[test]
    fn unknown_claims_are_rejected_before_running() {
        assert!(matches!(run_claims(&["lem-trick", "nonsense"], 1), Err(Error::UnknownClaim(_))));
    }

    #[test]
    fn small_grid_claims_hold() {
        let spec = GridSpec {
            exhaustive_dims: vec![2, 3, 4],
            random_dims: vec![6, 8],
            random_per_dim: 6,
            random_orders: vec![2, 4, 8],
        };
        let suite = Suite::with_spec(spec, 3);
        for id in [
            "obs-dk-basic",
            "lem-nbd",
            "lem-trick",
            "lem-cycle",
            "lem-nbd2",
            "lem-covering",
            "lem-a-c",
            "lem-counting",
            "thm-class-dist",
            "lem-even",
            "prop-halved",
        ] {
            let r = suite.run(id).unwrap();
            assert_ne!(r.status, Status::Fails, "{id}: {}", r.witnesses);
        }
    }
}
