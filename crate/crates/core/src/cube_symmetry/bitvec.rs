use std::fmt;
use std::ops::BitXor;

use crate::error::{Error, Result};

/// Largest supported hypercube dimension; a vertex fits in one `u32`.
pub const MAX_DIM: usize = 32;

/// An element of F_2^n. Coordinate `i` (1-based) lives at bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    n: u8,
    bits: u32,
}

#[inline]
pub(crate) fn dim_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

impl BitVector {
    pub fn new(n: usize, bits: u32) -> Result<Self> {
        check_dim(n)?;
        if bits & !dim_mask(n) != 0 {
            return Err(Error::PreconditionViolated(format!(
                "bits {bits:#x} have set positions beyond n={n}"
            )));
        }
        Ok(BitVector { n: n as u8, bits })
    }

    /// Builds a vector, silently dropping bits at positions >= n.
    pub fn masked(n: usize, bits: u32) -> Self {
        assert!((1..=MAX_DIM).contains(&n), "dimension {n} out of range");
        BitVector {
            n: n as u8,
            bits: bits & dim_mask(n),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self::masked(n, 0)
    }

    pub fn all_ones(n: usize) -> Self {
        Self::masked(n, u32::MAX)
    }

    /// `e_{i_1,...,i_m}` from 1-based coordinates.
    pub fn from_coords(n: usize, coords: &[usize]) -> Result<Self> {
        check_dim(n)?;
        let mut bits = 0u32;
        for &i in coords {
            if i == 0 || i > n {
                return Err(Error::BadDimension(i));
            }
            bits |= 1 << (i - 1);
        }
        Ok(BitVector { n: n as u8, bits })
    }

    /// Unit vector `e_i`, 1-based.
    pub fn unit(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "coordinate {i} outside [1, {n}]");
        Self::masked(n, 1 << (i - 1))
    }

    /// Parses a bit string with coordinate 1 leftmost.
    pub fn parse(s: &str) -> Result<Self> {
        let n = s.len();
        check_dim(n)?;
        let mut bits = 0u32;
        for (k, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << k,
                _ => {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("invalid bit character '{c}' in '{s}'"),
                    })
                }
            }
        }
        Ok(BitVector { n: n as u8, bits })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn bits(&self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Coordinate `i`, 1-based.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        (self.bits >> (i - 1)) & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_even(&self) -> bool {
        self.weight().is_multiple_of(2)
    }

    pub fn hamming(&self, other: &BitVector) -> u32 {
        (self.bits ^ other.bits).count_ones()
    }

    /// 1-based support.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.dim()).filter(|&i| self.get(i)).collect()
    }

    pub fn xor(&self, other: &BitVector) -> Result<BitVector> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(BitVector {
            n: self.n,
            bits: self.bits ^ other.bits,
        })
    }
}

impl BitXor for BitVector {
    type Output = BitVector;

    /// Panics on mismatched dimensions; use [`BitVector::xor`] for a checked version.
    fn bitxor(self, rhs: BitVector) -> BitVector {
        assert_eq!(self.n, rhs.n, "dimension mismatch in xor");
        BitVector {
            n: self.n,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.dim() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::BadDimension(n));
    }
    if n > MAX_DIM {
        return Err(Error::DimensionTooLarge { n, max: MAX_DIM });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let v = BitVector::parse("11110000").unwrap();
        assert_eq!(v.dim(), 8);
        assert_eq!(v.bits(), 0b1111);
        assert_eq!(v.to_string(), "11110000");
        assert_eq!(v, BitVector::from_coords(8, &[1, 2, 3, 4]).unwrap());
    }

    #[test]
    fn xor_is_group_operation() {
        let v = BitVector::parse("10110").unwrap();
        assert!((v ^ v).is_zero());
        assert_eq!(v.weight(), 3);
        assert!(v.xor(&BitVector::zero(4)).is_err());
    }

    #[test]
    fn rejects_out_of_range_bits() {
        assert!(BitVector::new(3, 0b1000).is_err());
        assert!(BitVector::new(33, 0).is_err());
        assert!(BitVector::parse("10a").is_err());
        assert_eq!(BitVector::all_ones(32).weight(), 32);
    }
}
