use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use super::automorphism::CubeAutomorphism;
use super::bitvec::BitVector;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// Default closure cap for [`CubeGroup::generate`].
pub const DEFAULT_GROUP_CAP: usize = 1 << 20;

/// The minimum distance `d_K`: a value in `0..=n`, or infinite for the trivial group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MinDistance {
    Finite(u32),
    Infinite,
}

impl MinDistance {
    pub fn at_least(&self, bound: u32) -> bool {
        match self {
            MinDistance::Finite(d) => *d >= bound,
            MinDistance::Infinite => true,
        }
    }

    pub fn finite(&self) -> Option<u32> {
        match self {
            MinDistance::Finite(d) => Some(*d),
            MinDistance::Infinite => None,
        }
    }
}

impl fmt::Display for MinDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinDistance::Finite(d) => write!(f, "{d}"),
            MinDistance::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for MinDistance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            MinDistance::Finite(d) => s.serialize_u32(*d),
            MinDistance::Infinite => s.serialize_str("inf"),
        }
    }
}

/// `min_v wt(v + v^g)` for `g ≠ 1`, via the cycle decomposition of the
/// coordinate permutation.
///
/// A fixed coordinate `i` contributes `y_i`. On a cycle `C` of length at least
/// two the map `v ↦ v + v^σ` restricted to `C` has image the even-weight
/// vectors supported on `C`, so the cycle contributes the parity of `y` on `C`.
pub fn element_min_distance(g: &CubeAutomorphism) -> Result<u32> {
    if g.is_identity() {
        return Err(Error::IdentityElement);
    }
    Ok(element_distance_unchecked(g))
}

#[inline]
pub(crate) fn element_distance_unchecked(g: &CubeAutomorphism) -> u32 {
    let y = g.translation().bits();
    let perm = g.perm();
    let n = perm.degree();
    let mut seen = 0u32;
    let mut total = 0u32;
    for start in 0..n {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut mask = 0u32;
        let mut p = start;
        while mask >> p & 1 == 0 {
            mask |= 1 << p;
            p = perm.image(p);
        }
        seen |= mask;
        total += (y & mask).count_ones() & 1;
    }
    total
}

/// Exhaustive `min_v wt(v + v^g)` over all `2^n` vertices. Independent of the
/// closed form; used by the verification suite.
pub fn brute_force_element_distance(g: &CubeAutomorphism) -> u32 {
    let n = g.dim();
    assert!(n <= 24, "brute force over 2^{n} vertices refused");
    (0u32..1 << n)
        .map(|v| (v ^ g.act_bits(v)).count_ones())
        .min()
        .unwrap()
}

/// A finite subgroup of Aut(Q_n), kept as generators plus its full element list.
#[derive(Clone)]
pub struct CubeGroup {
    n: usize,
    generators: Vec<CubeAutomorphism>,
    elements: Vec<CubeAutomorphism>,
    members: HashSet<CubeAutomorphism>,
}

impl CubeGroup {
    pub fn trivial(n: usize) -> Self {
        let id = CubeAutomorphism::identity(n);
        CubeGroup {
            n,
            generators: Vec::new(),
            elements: vec![id],
            members: HashSet::from([id]),
        }
    }

    /// Closure of `gens`, breadth first from the identity with generators
    /// applied on the right in input order.
    pub fn generate(n: usize, gens: &[CubeAutomorphism], cap: usize) -> Result<Self> {
        super::bitvec::check_dim(n)?;
        for g in gens {
            if g.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: g.dim(),
                });
            }
        }
        let id = CubeAutomorphism::identity(n);
        let mut elements = vec![id];
        let mut members = HashSet::from([id]);
        let mut queue = VecDeque::from([id]);
        while let Some(h) = queue.pop_front() {
            for g in gens {
                let next = h.compose(g);
                if members.insert(next) {
                    if members.len() > cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    elements.push(next);
                    queue.push_back(next);
                }
            }
        }
        Ok(CubeGroup {
            n,
            generators: gens.to_vec(),
            elements,
            members,
        })
    }

    /// The subgroup with exactly the given elements. Generators are picked
    /// greedily in input order; the result fails if `elements` is not closed.
    pub fn from_closed_set(n: usize, elements: &[CubeAutomorphism]) -> Result<Self> {
        let mut group = CubeGroup::trivial(n);
        let mut gens = Vec::new();
        for e in elements {
            if !group.contains(e) {
                gens.push(*e);
                group = CubeGroup::generate(n, &gens, elements.len().max(1))?;
            }
        }
        if group.order() != elements.len().max(1) && !elements.is_empty() {
            return Err(Error::PreconditionViolated(
                "element set is not closed under composition".into(),
            ));
        }
        Ok(group)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[CubeAutomorphism] {
        &self.generators
    }

    pub fn elements(&self) -> &[CubeAutomorphism] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, g: &CubeAutomorphism) -> bool {
        self.members.contains(g)
    }

    pub fn same_elements(&self, other: &CubeGroup) -> bool {
        self.n == other.n
            && self.order() == other.order()
            && self.elements.iter().all(|g| other.contains(g))
    }

    /// `d_K`.
    pub fn min_distance(&self) -> MinDistance {
        self.elements
            .iter()
            .filter(|g| !g.is_identity())
            .map(element_distance_unchecked)
            .min()
            .map_or(MinDistance::Infinite, MinDistance::Finite)
    }

    /// `K ≤ E_n : S_n`.
    pub fn is_even(&self) -> bool {
        self.elements.iter().all(|g| g.is_even())
    }

    pub fn is_semiregular(&self) -> bool {
        self.min_distance().at_least(1)
    }

    /// `K ≤ F_2^n`.
    pub fn is_translation_group(&self) -> bool {
        self.elements.iter().all(|g| g.perm().is_identity())
    }

    /// `g⁻¹ K g`.
    pub fn conjugate(&self, g: &CubeAutomorphism) -> Result<CubeGroup> {
        if g.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: g.dim(),
            });
        }
        let gens: Vec<_> = self.generators.iter().map(|k| k.conjugate_by(g)).collect();
        CubeGroup::generate(self.n, &gens, self.order())
    }

    /// `K ∩ (E_n : S_n)`.
    pub fn intersect_even(&self) -> CubeGroup {
        if self.is_even() {
            return self.clone();
        }
        let even: Vec<_> = self.elements.iter().copied().filter(|g| g.is_even()).collect();
        CubeGroup::from_closed_set(self.n, &even).expect("even part of a group is a subgroup")
    }

    /// `g⁻¹ K g = K`.
    pub fn is_normalized_by(&self, g: &CubeAutomorphism) -> bool {
        self.generators
            .iter()
            .all(|k| self.contains(&k.conjugate_by(g)))
    }

    /// Sorted (element distance, cycle type) over the non-identity elements;
    /// equal for conjugate groups.
    fn class_profile(&self) -> Vec<(u32, Vec<usize>)> {
        let mut out: Vec<(u32, Vec<usize>)> = self
            .elements
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| {
                let mut lens: Vec<usize> = g.perm().cycles().iter().map(Vec::len).collect();
                lens.sort_unstable();
                (element_min_distance(g).unwrap_or(0), lens)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// `K` and `L` conjugate in Aut(Q_n), by exhaustive search of Aut(Q_n).
    /// Returns a conjugating element `g` with `g⁻¹Kg = L`.
    pub fn conjugating_element(&self, other: &CubeGroup) -> Result<Option<CubeAutomorphism>> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        if self.order() != other.order() {
            return Ok(None);
        }
        if !super::normalizer::brute_force_feasible(self.n) {
            return Err(Error::Unsupported(format!(
                "conjugacy search over Aut(Q_{}) is too large",
                self.n
            )));
        }
        if self.class_profile() != other.class_profile() {
            return Ok(None);
        }
        Ok(super::normalizer::ambient_elements(self.n, false).find(|g| {
            self.generators
                .iter()
                .all(|k| other.contains(&k.conjugate_by(g)))
        }))
    }
}

impl fmt::Debug for CubeGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CubeGroup")
            .field("n", &self.n)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Group generated by translations, i.e. a binary linear code.
pub fn translation_group(n: usize, vectors: &[BitVector], cap: usize) -> Result<CubeGroup> {
    let gens: Vec<_> = vectors
        .iter()
        .map(|v| {
            if v.dim() != n {
                Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.dim(),
                })
            } else {
                Ok(CubeAutomorphism::translation_by(*v))
            }
        })
        .collect::<Result<_>>()?;
    CubeGroup::generate(n, &gens, cap)
}

/// `{1, (x, σ)}` for an involution; errors if `(x, σ)` is not one.
pub fn involution_group(x: BitVector, sigma: Permutation) -> Result<CubeGroup> {
    let g = CubeAutomorphism::new(x, sigma)?;
    if g.is_identity() || !g.compose(&g).is_identity() {
        return Err(Error::PreconditionViolated(format!("{g:?} is not an involution")));
    }
    CubeGroup::generate(x.dim(), &[g], 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quaternion() -> CubeGroup {
        let x = BitVector::from_coords(8, &[1, 2, 3, 4]).unwrap();
        let s = Permutation::parse_cycles(8, "(1 5)(2 6)(3 7)(4 8)").unwrap();
        let y = BitVector::from_coords(8, &[1, 3, 6, 8]).unwrap();
        let t = Permutation::parse_cycles(8, "(1 2)(3 4)(5 6)(7 8)").unwrap();
        CubeGroup::generate(
            8,
            &[
                CubeAutomorphism::new(x, s).unwrap(),
                CubeAutomorphism::new(y, t).unwrap(),
            ],
            DEFAULT_GROUP_CAP,
        )
        .unwrap()
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = CubeGroup::generate(5, &[], 10).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.min_distance(), MinDistance::Infinite);
        assert!(g.is_even());
        assert!(g.is_semiregular());
    }

    #[test]
    fn quaternion_example() {
        let k = quaternion();
        assert_eq!(k.order(), 8);
        assert!(k.is_even());
        assert_eq!(k.min_distance(), MinDistance::Finite(4));
        assert!(k.is_semiregular());
        // exactly one involution, the rest of order 4
        let involutions = k
            .elements()
            .iter()
            .filter(|g| !g.is_identity() && g.compose(g).is_identity())
            .count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn antipodal_translation() {
        let k = translation_group(8, &[BitVector::all_ones(8)], 16).unwrap();
        assert_eq!(k.order(), 2);
        assert_eq!(k.min_distance(), MinDistance::Finite(8));
    }

    #[test]
    fn cap_is_enforced() {
        let gens = [
            CubeAutomorphism::permutation(Permutation::parse_cycles(6, "(1 2)").unwrap()),
            CubeAutomorphism::permutation(Permutation::parse_cycles(6, "(1 2 3 4 5 6)").unwrap()),
        ];
        assert_eq!(
            CubeGroup::generate(6, &gens, 100).unwrap_err(),
            Error::GroupTooLarge { cap: 100 }
        );
        assert_eq!(CubeGroup::generate(6, &gens, 720).unwrap().order(), 720);
    }

    #[test]
    fn mixed_dimensions_rejected() {
        let gens = [CubeAutomorphism::identity(4), CubeAutomorphism::identity(5)];
        assert!(matches!(
            CubeGroup::generate(4, &gens, 10),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn identity_has_no_element_distance() {
        assert_eq!(
            element_min_distance(&CubeAutomorphism::identity(3)),
            Err(Error::IdentityElement)
        );
    }

    #[test]
    fn fixed_vertex_means_not_semiregular() {
        let k = CubeGroup::generate(
            4,
            &[CubeAutomorphism::permutation(
                Permutation::parse_cycles(4, "(1 2)").unwrap(),
            )],
            4,
        )
        .unwrap();
        assert_eq!(k.min_distance(), MinDistance::Finite(0));
        assert!(!k.is_semiregular());
    }

    #[test]
    fn even_part() {
        let k = translation_group(4, &[BitVector::unit(4, 1)], 4).unwrap();
        assert!(!k.is_even());
        assert!(k.intersect_even().is_trivial());
        let q = quaternion();
        assert!(q.intersect_even().same_elements(&q));

        let k = translation_group(6, &[BitVector::parse("111000").unwrap(), BitVector::parse("000111").unwrap()], 8)
            .unwrap();
        let l = k.intersect_even();
        assert_eq!(l.order(), 2);
        assert!(l.is_even());
        assert_eq!(l.min_distance(), MinDistance::Finite(6));
    }

    #[test]
    fn conjugating_a_code_stays_a_code() {
        let k = translation_group(5, &[BitVector::parse("11100").unwrap()], 4).unwrap();
        let g = CubeAutomorphism::new(
            BitVector::parse("10011").unwrap(),
            Permutation::parse_cycles(5, "(1 4 2)(3 5)").unwrap(),
        )
        .unwrap();
        let c = k.conjugate(&g).unwrap();
        assert!(c.is_translation_group());
        assert_eq!(c.min_distance(), k.min_distance());
        assert!(k.conjugate(&CubeAutomorphism::identity(5)).unwrap().same_elements(&k));
    }

    #[test]
    fn involution_group_validates() {
        let x = BitVector::all_ones(4);
        assert!(involution_group(x, Permutation::parse_cycles(4, "(1 2)").unwrap()).is_ok());
        // x not fixed by σ
        let x = BitVector::parse("1000").unwrap();
        assert!(involution_group(x, Permutation::parse_cycles(4, "(1 2)").unwrap()).is_err());
    }
}
