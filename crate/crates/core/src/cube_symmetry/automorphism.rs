use std::fmt;

use super::bitvec::BitVector;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// An element `(y, σ)` of Aut(Q_n) = F_2^n : S_n acting on the right by
/// `v^(y,σ) = v^σ + y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeAutomorphism {
    translation: BitVector,
    perm: Permutation,
}

impl CubeAutomorphism {
    pub fn new(translation: BitVector, perm: Permutation) -> Result<Self> {
        if translation.dim() != perm.degree() {
            return Err(Error::DimensionMismatch {
                expected: translation.dim(),
                found: perm.degree(),
            });
        }
        Ok(CubeAutomorphism { translation, perm })
    }

    pub fn identity(n: usize) -> Self {
        CubeAutomorphism {
            translation: BitVector::zero(n),
            perm: Permutation::identity(n),
        }
    }

    pub fn translation_by(v: BitVector) -> Self {
        CubeAutomorphism {
            translation: v,
            perm: Permutation::identity(v.dim()),
        }
    }

    pub fn permutation(perm: Permutation) -> Self {
        CubeAutomorphism {
            translation: BitVector::zero(perm.degree()),
            perm,
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.perm.degree()
    }

    #[inline]
    pub fn translation(&self) -> BitVector {
        self.translation
    }

    #[inline]
    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.translation.is_zero() && self.perm.is_identity()
    }

    /// Lies in E_n : S_n.
    pub fn is_even(&self) -> bool {
        self.translation.is_even()
    }

    #[inline]
    pub fn act_bits(&self, v: u32) -> u32 {
        self.perm.apply_bits(v) ^ self.translation.bits()
    }

    pub fn act(&self, v: &BitVector) -> Result<BitVector> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            });
        }
        Ok(BitVector::masked(self.dim(), self.act_bits(v.bits())))
    }

    /// `self · other`: apply `self` first. `(y,σ)(z,τ) = (y^τ + z, στ)`.
    pub fn compose(&self, other: &CubeAutomorphism) -> CubeAutomorphism {
        debug_assert_eq!(self.dim(), other.dim());
        CubeAutomorphism {
            translation: other.perm.apply(&self.translation) ^ other.translation,
            perm: self.perm.then(&other.perm),
        }
    }

    pub fn try_compose(&self, other: &CubeAutomorphism) -> Result<CubeAutomorphism> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> CubeAutomorphism {
        let inv = self.perm.inverse();
        CubeAutomorphism {
            translation: inv.apply(&self.translation),
            perm: inv,
        }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &CubeAutomorphism) -> CubeAutomorphism {
        g.inverse().compose(self).compose(g)
    }

    /// Image of the facet `{x : x_i = b}` (0-based `i`) as point `2i + b`.
    /// Aut(Q_n) acts faithfully on these `2n` points.
    pub fn facet_image(&self, point: usize) -> usize {
        let (i, b) = (point / 2, (point % 2) as u32);
        let j = self.perm.image(i);
        let flip = (self.translation.bits() >> j) & 1;
        2 * j + (b ^ flip) as usize
    }

    pub fn facet_images(&self) -> Vec<u32> {
        (0..2 * self.dim())
            .map(|p| self.facet_image(p) as u32)
            .collect()
    }

    /// Inverse of [`facet_images`](Self::facet_images).
    pub fn from_facet_images(images: &[u32]) -> Option<CubeAutomorphism> {
        let n = images.len() / 2;
        if n == 0 || images.len() != 2 * n {
            return None;
        }
        let mut perm_images = vec![0usize; n];
        let mut bits = 0u32;
        for i in 0..n {
            let a = images[2 * i] as usize;
            let b = images[2 * i + 1] as usize;
            if a / 2 != b / 2 || a == b {
                return None;
            }
            perm_images[i] = a / 2;
            if a % 2 == 1 {
                bits |= 1 << (a / 2);
            }
        }
        let perm = Permutation::from_images(&perm_images).ok()?;
        Some(CubeAutomorphism {
            translation: BitVector::masked(n, bits),
            perm,
        })
    }
}

impl fmt::Display for CubeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={} perm={}", self.translation, self.perm)
    }
}

impl fmt::Debug for CubeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.translation, self.perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quaternion_gens() -> [CubeAutomorphism; 2] {
        let x = BitVector::from_coords(8, &[1, 2, 3, 4]).unwrap();
        let s = Permutation::parse_cycles(8, "(1 5)(2 6)(3 7)(4 8)").unwrap();
        let y = BitVector::from_coords(8, &[1, 3, 6, 8]).unwrap();
        let t = Permutation::parse_cycles(8, "(1 2)(3 4)(5 6)(7 8)").unwrap();
        [
            CubeAutomorphism::new(x, s).unwrap(),
            CubeAutomorphism::new(y, t).unwrap(),
        ]
    }

    #[test]
    fn pure_translation_adds() {
        let x = BitVector::parse("10100").unwrap();
        let v = BitVector::parse("11000").unwrap();
        let g = CubeAutomorphism::translation_by(x);
        assert_eq!(g.act(&v).unwrap(), v ^ x);
    }

    #[test]
    fn action_on_zero_is_translation_part() {
        let [g, _] = quaternion_gens();
        let zero = BitVector::zero(8);
        assert_eq!(g.act(&zero).unwrap(), BitVector::from_coords(8, &[1, 2, 3, 4]).unwrap());
    }

    #[test]
    fn moved_neighbour_of_fixed_vertex() {
        // x fixed by g = (y, σ); then (x + e_i)^g = x + e_{i^σ}
        let n = 6;
        let sigma = Permutation::parse_cycles(n, "(1 2)(3 4 5)").unwrap();
        let x = BitVector::parse("110110").unwrap();
        let y = sigma.apply(&x) ^ x;
        let g = CubeAutomorphism::new(y, sigma).unwrap();
        assert_eq!(g.act(&x).unwrap(), x);
        for i in 1..=n {
            let z = x ^ BitVector::unit(n, i);
            let expected = x ^ BitVector::unit(n, sigma.image(i - 1) + 1);
            assert_eq!(g.act(&z).unwrap(), expected);
        }
    }

    #[test]
    fn facet_representation_round_trips() {
        let [g, h] = quaternion_gens();
        for a in [g, h, g.compose(&h)] {
            assert_eq!(CubeAutomorphism::from_facet_images(&a.facet_images()), Some(a));
        }
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let g = CubeAutomorphism::identity(4);
        assert!(matches!(
            g.act(&BitVector::zero(5)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(CubeAutomorphism::new(BitVector::zero(3), Permutation::identity(4)).is_err());
    }
}
