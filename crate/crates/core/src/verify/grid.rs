//! The seeded parameter grid the universally quantified claims are checked on.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cube_symmetry::{BitVector, CubeAutomorphism, CubeGroup, MinDistance, Permutation};
use crate::error::Result;
use crate::quotient::{build_quotient, QuotientGraph};

/// A deterministic RNG for one named stream under `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

pub fn random_permutation(n: usize, rng: &mut impl Rng) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(&images).expect("shuffle is a bijection")
}

/// Uniform element of Aut(Q_n).
pub fn random_automorphism(n: usize, rng: &mut impl Rng) -> CubeAutomorphism {
    let perm = random_permutation(n, rng);
    let bits = rng.gen::<u32>();
    CubeAutomorphism::new(BitVector::masked(n, bits), perm).expect("same dimension")
}

/// Permutation built from a shuffled coordinate list cut into cycles whose
/// lengths are drawn from `lengths`.
fn random_cycle_type(n: usize, lengths: &[usize], rng: &mut impl Rng) -> Permutation {
    let mut coords: Vec<usize> = (1..=n).collect();
    coords.shuffle(rng);
    let mut cycles = Vec::new();
    let mut rest = &coords[..];
    while !rest.is_empty() {
        let fits: Vec<usize> = lengths.iter().copied().filter(|&l| l <= rest.len()).collect();
        let len = *fits.choose(rng).unwrap_or(&1);
        cycles.push(rest[..len].to_vec());
        rest = &rest[len..];
    }
    Permutation::from_cycles(n, &cycles).expect("disjoint cycles")
}

/// A non-identity involution `(x, σ)`. Fixed coordinates of `σ` carry a 1
/// with a per-sample probability in `[1/2, 1)`, so large `d_K` shows up.
pub fn random_involution(n: usize, rng: &mut impl Rng) -> CubeAutomorphism {
    loop {
        let mut coords: Vec<usize> = (1..=n).collect();
        coords.shuffle(rng);
        let swaps = rng.gen_range(0..=n / 2);
        let cycles: Vec<Vec<usize>> = coords[..2 * swaps].chunks(2).map(|c| c.to_vec()).collect();
        let sigma = Permutation::from_cycles(n, &cycles).expect("disjoint transpositions");
        let p: f64 = rng.gen_range(0.5..1.0);
        let mut x = 0u32;
        for c in &cycles {
            if rng.gen_bool(0.5) {
                x |= (1 << (c[0] - 1)) | (1 << (c[1] - 1));
            }
        }
        for &i in &coords[2 * swaps..] {
            if rng.gen_bool(p) {
                x |= 1 << (i - 1);
            }
        }
        let g = CubeAutomorphism::new(BitVector::masked(n, x), sigma).expect("same dimension");
        if !g.is_identity() {
            return g;
        }
    }
}

/// A non-identity element whose order is a power of 2 at most 8.
pub fn random_two_element(n: usize, rng: &mut impl Rng) -> CubeAutomorphism {
    loop {
        let sigma = random_cycle_type(n, &[1, 2, 4], rng);
        let g = CubeAutomorphism::new(BitVector::masked(n, rng.gen()), sigma).unwrap();
        if !g.is_identity() {
            return g;
        }
    }
}

/// A subgroup of Aut(Q_n) of order exactly `order` (a power of 2), grown by
/// adding random 2-elements and rejecting any step that overshoots.
pub fn random_subgroup(n: usize, order: usize, rng: &mut impl Rng) -> CubeGroup {
    assert!(order.is_power_of_two() && order >= 1);
    'restart: loop {
        let mut gens = Vec::new();
        let mut group = CubeGroup::trivial(n);
        for _ in 0..200 {
            if group.order() == order {
                return group;
            }
            let g = if rng.gen_bool(0.6) {
                random_involution(n, rng)
            } else {
                random_two_element(n, rng)
            };
            if group.contains(&g) {
                continue;
            }
            gens.push(g);
            match CubeGroup::generate(n, &gens, order) {
                Ok(h) if order.is_multiple_of(h.order()) => group = h,
                _ => {
                    gens.pop();
                }
            }
        }
        if group.order() == order {
            return group;
        }
        continue 'restart;
    }
}

/// Every subgroup of order 2 of Aut(Q_n): one per involution.
pub fn all_order_two_subgroups(n: usize) -> Vec<CubeGroup> {
    let mut out = Vec::new();
    for sigma in Permutation::all(n) {
        if !sigma.then(&sigma).is_identity() {
            continue;
        }
        let masks = sigma.cycle_masks();
        for choice in 0u32..1 << masks.len() {
            let x = masks
                .iter()
                .enumerate()
                .filter(|(c, _)| choice >> c & 1 == 1)
                .fold(0u32, |acc, (_, &m)| acc | m);
            let g = CubeAutomorphism::new(BitVector::masked(n, x), sigma).unwrap();
            if !g.is_identity() {
                out.push(CubeGroup::generate(n, &[g], 2).expect("involution"));
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Exhaustive,
    Random,
}

#[derive(Clone, Debug)]
pub struct GridEntry {
    pub group: CubeGroup,
    pub d: MinDistance,
    pub quotient: QuotientGraph,
    pub origin: Origin,
}

impl GridEntry {
    pub fn new(group: CubeGroup, origin: Origin) -> Result<Self> {
        let quotient = build_quotient(&group)?;
        Ok(GridEntry {
            d: group.min_distance(),
            group,
            quotient,
            origin,
        })
    }

    pub fn n(&self) -> usize {
        self.group.dim()
    }

    /// Generators in group-file syntax, for witnesses.
    pub fn describe(&self) -> Value {
        describe_group(&self.group)
    }
}

pub fn describe_group(k: &CubeGroup) -> Value {
    json!({
        "n": k.dim(),
        "order": k.order(),
        "generators": k.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GridSpec {
    /// Dimensions where every order-2 subgroup is taken.
    pub exhaustive_dims: Vec<usize>,
    /// Dimensions with seeded random subgroups.
    pub random_dims: Vec<usize>,
    pub random_per_dim: usize,
    /// Orders of the random subgroups, used in rotation.
    pub random_orders: Vec<usize>,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            exhaustive_dims: vec![2, 3, 4, 5],
            random_dims: (6..=10).collect(),
            random_per_dim: 100,
            random_orders: vec![2, 4, 8],
        }
    }
}

#[derive(Clone, Debug)]
pub struct Grid {
    pub seed: u64,
    pub spec: GridSpec,
    pub entries: Vec<GridEntry>,
}

impl Grid {
    pub fn build(spec: GridSpec, seed: u64) -> Result<Grid> {
        let mut entries = Vec::new();
        for &n in &spec.exhaustive_dims {
            for k in all_order_two_subgroups(n) {
                entries.push(GridEntry::new(k, Origin::Exhaustive)?);
            }
        }
        for &n in &spec.random_dims {
            let mut rng = stream_rng(seed, 0x6772_6964_0000 + n as u64);
            for i in 0..spec.random_per_dim {
                let order = spec.random_orders[i % spec.random_orders.len()];
                let k = random_subgroup(n, order, &mut rng);
                entries.push(GridEntry::new(k, Origin::Random)?);
            }
        }
        Ok(Grid {
            seed,
            spec,
            entries,
        })
    }

    pub fn parameters(&self) -> Value {
        json!({
            "seed": self.seed,
            "grid": self.spec,
            "groups": self.entries.len(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two_subgroups_of_small_cubes() {
        // involutions of Aut(Q_2) = D_8: five of them
        assert_eq!(all_order_two_subgroups(2).len(), 5);
        for k in all_order_two_subgroups(4) {
            assert_eq!(k.order(), 2);
        }
    }

    #[test]
    fn random_subgroups_have_the_requested_order() {
        let mut rng = stream_rng(11, 1);
        for order in [1, 2, 4, 8] {
            for n in [6, 9] {
                assert_eq!(random_subgroup(n, order, &mut rng).order(), order);
            }
        }
    }

    #[test]
    fn random_involutions_are_involutions() {
        let mut rng = stream_rng(5, 2);
        for _ in 0..100 {
            let g = random_involution(7, &mut rng);
            assert!(!g.is_identity() && g.compose(&g).is_identity());
        }
    }

    #[test]
    fn grid_is_deterministic() {
        let spec = GridSpec {
            exhaustive_dims: vec![3],
            random_dims: vec![6],
            random_per_dim: 6,
            random_orders: vec![2, 4, 8],
        };
        let a = Grid::build(spec.clone(), 9).unwrap();
        let b = Grid::build(spec, 9).unwrap();
        let gens = |g: &Grid| -> Vec<Value> { g.entries.iter().map(|e| e.describe()).collect() };
        assert_eq!(gens(&a), gens(&b));
    }
}
