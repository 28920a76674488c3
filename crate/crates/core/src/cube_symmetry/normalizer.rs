//! Normalizers `N_A(K)` of subgroups `K ≤ Aut(Q_n)` in `A = Aut(Q_n)` or `A = E_n : S_n`.
//!
//! Two tiers. Brute force scans all of `A` when `2^n · n! ≤ 10^8`. For `|K| = 2`
//! the normalizer is the centralizer of the involution `(x, σ)`, found by
//! enumerating the permutations commuting with `σ` and solving
//! `y + y^σ = x + x^τ` over F_2 for each.

use num_bigint::BigUint;
use serde::Serialize;

use super::automorphism::CubeAutomorphism;
use super::bitvec::BitVector;
use super::group::CubeGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::perm_group::StabChain;

const BRUTE_FORCE_LIMIT: u128 = 100_000_000;
const CENTRALIZER_LIMIT: u128 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    /// Aut(Q_n)
    Full,
    /// E_n : S_n
    Even,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalizerTier {
    Trivial,
    BruteForce,
    InvolutionCentralizer,
}

#[derive(Clone, Debug)]
pub struct Normalizer {
    pub n: usize,
    pub ambient: Ambient,
    pub tier: NormalizerTier,
    pub generators: Vec<CubeAutomorphism>,
    pub order: BigUint,
    /// Full element list, present when the order is at most the requested cap.
    pub group: Option<CubeGroup>,
}

impl Normalizer {
    pub fn contains_non_even(&self) -> bool {
        self.generators.iter().any(|g| !g.is_even())
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `|Aut(Q_n)| = 2^n · n!`.
pub fn aut_order(n: usize) -> BigUint {
    BigUint::from(2u32).pow(n as u32) * (1..=n as u64).fold(BigUint::from(1u32), |a, k| a * k)
}

pub fn brute_force_feasible(n: usize) -> bool {
    n <= 20 && (1u128 << n) * factorial(n) <= BRUTE_FORCE_LIMIT
}

/// Every element of Aut(Q_n) (or E_n : S_n), permutations in lexicographic
/// order, translations ascending within each.
pub fn ambient_elements(n: usize, even_only: bool) -> impl Iterator<Item = CubeAutomorphism> {
    Permutation::all(n).flat_map(move |perm| {
        (0u32..1 << n)
            .filter(move |y| !even_only || y.count_ones() % 2 == 0)
            .map(move |y| CubeAutomorphism::new(BitVector::masked(n, y), perm).unwrap())
    })
}

/// Generators of the whole ambient group.
pub fn ambient_generators(n: usize, ambient: Ambient) -> Vec<CubeAutomorphism> {
    let mut gens = Vec::new();
    match ambient {
        Ambient::Full => gens.push(CubeAutomorphism::translation_by(BitVector::unit(n, 1))),
        Ambient::Even if n >= 2 => {
            gens.push(CubeAutomorphism::translation_by(BitVector::from_coords(n, &[1, 2]).unwrap()))
        }
        Ambient::Even => {}
    }
    if n >= 2 {
        gens.push(CubeAutomorphism::permutation(
            Permutation::from_cycles(n, &[vec![1, 2]]).unwrap(),
        ));
    }
    if n >= 3 {
        gens.push(CubeAutomorphism::permutation(
            Permutation::from_cycles(n, &[(1..=n).collect()]).unwrap(),
        ));
    }
    gens
}

pub fn ambient_order(n: usize, ambient: Ambient) -> BigUint {
    match ambient {
        Ambient::Full => aut_order(n),
        Ambient::Even => aut_order(n) / 2u32,
    }
}

/// `N_A(K)`. Uses the involution tier for `|K| = 2`, brute force when small enough,
/// and reports `Unsupported` otherwise.
pub fn normalizer(k: &CubeGroup, ambient: Ambient, cap: usize) -> Result<Normalizer> {
    let n = k.dim();
    if k.is_trivial() {
        let generators = ambient_generators(n, ambient);
        let order = ambient_order(n, ambient);
        let group = finish_group(n, &generators, &order, cap)?;
        return Ok(Normalizer {
            n,
            ambient,
            tier: NormalizerTier::Trivial,
            generators,
            order,
            group,
        });
    }
    if k.order() == 2 && centralizer_size(&involution_of(k).perm().cycles()) <= CENTRALIZER_LIMIT
    {
        return involution_normalizer(k, ambient, cap);
    }
    if brute_force_feasible(n) {
        return brute_force_normalizer(k, ambient, cap);
    }
    Err(Error::Unsupported(format!(
        "normalizer of a group of order {} in Aut(Q_{n})",
        k.order()
    )))
}

fn involution_of(k: &CubeGroup) -> CubeAutomorphism {
    *k.elements().iter().find(|g| !g.is_identity()).unwrap()
}

fn finish_group(
    n: usize,
    generators: &[CubeAutomorphism],
    order: &BigUint,
    cap: usize,
) -> Result<Option<CubeGroup>> {
    if *order <= BigUint::from(cap) {
        Ok(Some(CubeGroup::generate(n, generators, cap)?))
    } else {
        Ok(None)
    }
}

/// Accumulates normalizer generators as `T` (translations) and reps of the
/// projection `P ≤ S_n`.
struct GeneratorBuilder {
    n: usize,
    translation_basis: Vec<u32>,
    perm_chain: StabChain,
    perm_gens: Vec<Vec<u32>>,
    generators: Vec<CubeAutomorphism>,
}

impl GeneratorBuilder {
    fn new(n: usize) -> Self {
        GeneratorBuilder {
            n,
            translation_basis: Vec::new(),
            perm_chain: StabChain::new(n, &[]),
            perm_gens: Vec::new(),
            generators: Vec::new(),
        }
    }

    fn add_translation(&mut self, y: u32) {
        let mut r = y;
        for &b in &self.translation_basis {
            r = r.min(r ^ b);
        }
        if r != 0 {
            self.translation_basis.push(r);
            self.translation_basis.sort_unstable_by(|a, b| b.cmp(a));
            self.generators
                .push(CubeAutomorphism::translation_by(BitVector::masked(self.n, y)));
        }
    }

    fn add_perm_rep(&mut self, g: CubeAutomorphism) {
        if g.perm().is_identity() {
            return;
        }
        let images: Vec<u32> = g.perm().images().iter().map(|&x| x as u32).collect();
        if !self.perm_chain.contains(&images) {
            self.perm_gens.push(images);
            self.perm_chain = StabChain::new(self.n, &self.perm_gens);
            self.generators.push(g);
        }
    }

    fn order(&self) -> BigUint {
        BigUint::from(2u32).pow(self.translation_basis.len() as u32) * self.perm_chain.order()
    }
}

/// Exhaustive scan of the ambient group.
pub fn brute_force_normalizer(k: &CubeGroup, ambient: Ambient, cap: usize) -> Result<Normalizer> {
    let n = k.dim();
    if !brute_force_feasible(n) {
        return Err(Error::Unsupported(format!(
            "brute-force normalizer over Aut(Q_{n}) exceeds 10^8 elements"
        )));
    }
    let even_only = ambient == Ambient::Even;
    let mut builder = GeneratorBuilder::new(n);
    let mut count: u64 = 0;
    for perm in Permutation::all(n) {
        let mut first: Option<CubeAutomorphism> = None;
        for y in 0u32..1 << n {
            if even_only && y.count_ones() % 2 == 1 {
                continue;
            }
            let g = CubeAutomorphism::new(BitVector::masked(n, y), perm).unwrap();
            if k.is_normalized_by(&g) {
                count += 1;
                if perm.is_identity() {
                    builder.add_translation(y);
                }
                first.get_or_insert(g);
            }
        }
        if let Some(g) = first {
            builder.add_perm_rep(g);
        }
    }
    let order = BigUint::from(count);
    debug_assert_eq!(order, builder.order());
    if order != builder.order() {
        return Err(Error::ReconstructionFailed(format!(
            "normalizer count {count} disagrees with generated order {}",
            builder.order()
        )));
    }
    let group = finish_group(n, &builder.generators, &order, cap)?;
    Ok(Normalizer {
        n,
        ambient,
        tier: NormalizerTier::BruteForce,
        generators: builder.generators,
        order,
        group,
    })
}

/// `Π_L L^{m_L} m_L!` over the cycle type of `σ`.
fn centralizer_size(cycles: &[Vec<usize>]) -> u128 {
    let mut counts = std::collections::BTreeMap::<usize, u32>::new();
    for c in cycles {
        *counts.entry(c.len()).or_default() += 1;
    }
    counts.into_iter().fold(1u128, |acc, (len, m)| {
        acc.saturating_mul((len as u128).saturating_pow(m))
            .saturating_mul(factorial(m as usize))
    })
}

/// Calls `visit` for every permutation commuting with `sigma`.
fn for_each_commuting(sigma: &Permutation, mut visit: impl FnMut(&Permutation)) {
    let n = sigma.degree();
    let cycles = sigma.cycles();
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; cycles.len()];
    fn rec(
        idx: usize,
        sigma: &Permutation,
        cycles: &[Vec<usize>],
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&Permutation),
    ) {
        if idx == cycles.len() {
            visit(&Permutation::from_images(images).unwrap());
            return;
        }
        let src = &cycles[idx];
        for (d, dst) in cycles.iter().enumerate() {
            if used[d] || dst.len() != src.len() {
                continue;
            }
            used[d] = true;
            for &start in dst {
                let mut q = start;
                for &p in src {
                    images[p] = q;
                    q = sigma.image(q);
                }
                rec(idx + 1, sigma, cycles, images, used, visit);
            }
            used[d] = false;
        }
    }
    rec(0, sigma, &cycles, &mut images, &mut used, &mut visit);
}

/// Particular solution of `y + y^σ = c`, or `None` when `c` is not in the image.
fn solve_translation(cycles: &[Vec<usize>], c: u32) -> Option<u32> {
    let mut y = 0u32;
    for cycle in cycles {
        if cycle.len() == 1 {
            if c >> cycle[0] & 1 == 1 {
                return None;
            }
            continue;
        }
        // (y^σ)_{σ(p)} = y_p, so y_{σ(p)} = y_p + c_{σ(p)}
        let mut bit = 0u32;
        for w in cycle.windows(2) {
            bit ^= c >> w[1] & 1;
            y |= bit << w[1];
        }
        bit ^= c >> cycle[0] & 1;
        if bit != 0 {
            return None;
        }
    }
    Some(y)
}

/// Centralizer of the involution generating `K`, `|K| = 2`.
pub fn involution_normalizer(k: &CubeGroup, ambient: Ambient, cap: usize) -> Result<Normalizer> {
    if k.order() != 2 {
        return Err(Error::PreconditionViolated(format!(
            "involution tier needs |K| = 2, got {}",
            k.order()
        )));
    }
    let n = k.dim();
    let inv = involution_of(k);
    let sigma = *inv.perm();
    let x = inv.translation().bits();
    let cycle_masks = sigma.cycle_masks();
    let odd_cycle = cycle_masks.iter().copied().find(|m| m.count_ones() % 2 == 1);
    let even_only = ambient == Ambient::Even;

    let mut builder = GeneratorBuilder::new(n);
    // kernel of y ↦ y + y^σ: vectors constant on cycles
    match ambient {
        Ambient::Full => cycle_masks.iter().for_each(|&m| builder.add_translation(m)),
        Ambient::Even => {
            let odd: Vec<u32> = cycle_masks.iter().copied().filter(|m| m.count_ones() % 2 == 1).collect();
            cycle_masks
                .iter()
                .filter(|m| m.count_ones() % 2 == 0)
                .for_each(|&m| builder.add_translation(m));
            for w in odd.windows(2) {
                builder.add_translation(w[0] ^ w[1]);
            }
        }
    }
    let kernel_dim = cycle_masks.len() as u32;

    let mut per_perm_full = BigUint::from(2u32).pow(kernel_dim);
    let per_perm_even_mixed = BigUint::from(2u32).pow(kernel_dim - 1);
    if even_only && odd_cycle.is_some() {
        per_perm_full = per_perm_even_mixed.clone();
    }
    let sigma_cycles = sigma.cycles();
    let rep = |tau: &Permutation| -> Option<CubeAutomorphism> {
        let c = x ^ tau.apply_bits(x);
        let mut y = solve_translation(&sigma_cycles, c)?;
        if even_only && y.count_ones() % 2 == 1 {
            y ^= odd_cycle?;
        }
        Some(CubeAutomorphism::new(BitVector::masked(n, y), *tau).unwrap())
    };
    // Sifting every rep dominates for large centralizers, so only a hashed
    // sample is sifted; a second full pass runs if the sample falls short.
    let mut solvable = 0u64;
    let mut index = 0u64;
    for_each_commuting(&sigma, |tau| {
        index += 1;
        let Some(g) = rep(tau) else {
            return;
        };
        solvable += 1;
        debug_assert!(k.is_normalized_by(&g));
        if index <= 64 || index.wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 58 == 0 {
            builder.add_perm_rep(g);
        }
    });
    let count = per_perm_full * BigUint::from(solvable);
    if count != builder.order() {
        for_each_commuting(&sigma, |tau| {
            if let Some(g) = rep(tau) {
                builder.add_perm_rep(g);
            }
        });
    }
    if count != builder.order() {
        return Err(Error::ReconstructionFailed(format!(
            "centralizer count {count} disagrees with generated order {}",
            builder.order()
        )));
    }
    let group = finish_group(n, &builder.generators, &count, cap)?;
    Ok(Normalizer {
        n,
        ambient,
        tier: NormalizerTier::InvolutionCentralizer,
        generators: builder.generators,
        order: count,
        group,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube_symmetry::group::{involution_group, translation_group};

    #[test]
    fn ambient_sizes() {
        assert_eq!(ambient_elements(3, false).count(), 48);
        assert_eq!(ambient_elements(3, true).count(), 24);
        assert_eq!(aut_order(8), BigUint::from(10_321_920u64));
        assert!(brute_force_feasible(8));
        assert!(!brute_force_feasible(9));
    }

    #[test]
    fn trivial_group_normalizer_is_ambient() {
        let k = CubeGroup::trivial(4);
        let full = normalizer(&k, Ambient::Full, 1 << 12).unwrap();
        assert_eq!(full.order, BigUint::from(384u32));
        assert_eq!(full.group.unwrap().order(), 384);
        let even = normalizer(&k, Ambient::Even, 1 << 12).unwrap();
        assert_eq!(even.group.unwrap().order(), 192);
    }

    #[test]
    fn antipodal_translation_is_central() {
        let k = translation_group(5, &[BitVector::all_ones(5)], 4).unwrap();
        let n = normalizer(&k, Ambient::Full, 0).unwrap();
        assert_eq!(n.tier, NormalizerTier::InvolutionCentralizer);
        assert_eq!(n.order, aut_order(5));
        let b = brute_force_normalizer(&k, Ambient::Full, 0).unwrap();
        assert_eq!(b.order, aut_order(5));
    }

    #[test]
    fn tiers_agree_on_all_involutions_n4() {
        let n = 4;
        for g in ambient_elements(n, false) {
            if g.is_identity() || !g.compose(&g).is_identity() {
                continue;
            }
            let k = CubeGroup::generate(n, &[g], 2).unwrap();
            for ambient in [Ambient::Full, Ambient::Even] {
                let a = involution_normalizer(&k, ambient, 1 << 10).unwrap();
                let b = brute_force_normalizer(&k, ambient, 1 << 10).unwrap();
                assert_eq!(a.order, b.order, "{g:?} {ambient:?}");
                assert!(a.group.unwrap().same_elements(&b.group.unwrap()));
            }
        }
    }

    #[test]
    fn generators_normalize() {
        let x = BitVector::parse("111110").unwrap();
        let k = involution_group(x, Permutation::parse_cycles(6, "(1 2)").unwrap()).unwrap();
        let nz = normalizer(&k, Ambient::Full, 1 << 16).unwrap();
        for g in &nz.generators {
            assert!(k.is_normalized_by(g));
        }
        let grp = nz.group.unwrap();
        assert_eq!(BigUint::from(grp.order()), nz.order);
        // K is normal in N
        for g in grp.elements() {
            assert!(k.is_normalized_by(g));
        }
    }

    #[test]
    fn solver_rejects_fixed_point_mismatch() {
        let s = Permutation::parse_cycles(3, "(1 2)").unwrap();
        assert_eq!(solve_translation(&s.cycles(), 0b100), None);
        assert_eq!(solve_translation(&s.cycles(), 0b001), None);
        let y = solve_translation(&s.cycles(), 0b011).unwrap();
        assert_eq!(y ^ s.apply_bits(y), 0b011);
    }

    #[test]
    fn larger_groups_use_brute_force_or_fail() {
        let k = translation_group(
            10,
            &[BitVector::parse("1111100000").unwrap(), BitVector::parse("0000011111").unwrap()],
            8,
        )
        .unwrap();
        assert!(matches!(normalizer(&k, Ambient::Full, 0), Err(Error::Unsupported(_))));
    }
}
