use std::fmt;

use super::bitvec::{check_dim, BitVector, MAX_DIM};
use crate::error::{Error, Result};

/// A permutation of the coordinates `[n]`.
///
/// Stored 0-based: `images[i]` is the image of coordinate `i + 1`, minus one.
/// Products compose left to right (`i^(στ) = (i^σ)^τ`), matching the right action.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    images: [u8; MAX_DIM],
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&n), "dimension {n} out of range");
        let mut images = [0u8; MAX_DIM];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = i as u8;
        }
        Permutation {
            n: n as u8,
            images,
        }
    }

    /// From 0-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        check_dim(n)?;
        let mut seen = [false; MAX_DIM];
        let mut out = Self::identity(n);
        for (i, &img) in images.iter().enumerate() {
            if img >= n || seen[img] {
                return Err(Error::InvalidPermutation(format!(
                    "images {images:?} are not a bijection of 0..{n}"
                )));
            }
            seen[img] = true;
            out.images[i] = img as u8;
        }
        Ok(out)
    }

    /// From 1-based cycles, e.g. `[[1, 5], [2, 6]]`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        check_dim(n)?;
        let mut out = Self::identity(n);
        let mut used = [false; MAX_DIM];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > n {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} outside [1, {n}]"
                    )));
                }
                if used[p - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} appears more than once"
                    )));
                }
                used[p - 1] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                out.images[p - 1] = (next - 1) as u8;
            }
        }
        Ok(out)
    }

    /// Parses cycle notation such as `(1 5)(2 6)` or `id`.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "id" || text == "()" {
            return Ok(Self::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let Some(inner) = rest.strip_prefix('(') else {
                return Err(Error::InvalidPermutation(format!(
                    "expected '(' in cycle notation '{text}'"
                )));
            };
            let Some(close) = inner.find(')') else {
                return Err(Error::InvalidPermutation(format!(
                    "unterminated cycle in '{text}'"
                )));
            };
            let body = &inner[..close];
            let points = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>().map_err(|_| {
                        Error::InvalidPermutation(format!("bad point '{s}' in '{text}'"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if points.is_empty() {
                return Err(Error::InvalidPermutation(format!(
                    "empty cycle in '{text}'"
                )));
            }
            cycles.push(points);
            rest = inner[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.n as usize
    }

    /// 0-based image.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images[..self.degree()]
    }

    pub fn is_identity(&self) -> bool {
        (0..self.degree()).all(|i| self.image(i) == i)
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n, other.n);
        let mut out = *self;
        for i in 0..self.degree() {
            out.images[i] = other.images[self.image(i)];
        }
        out
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = *self;
        for i in 0..self.degree() {
            out.images[self.image(i)] = i as u8;
        }
        out
    }

    /// `v^σ`: the bit at coordinate `i` moves to coordinate `i^σ`.
    #[inline]
    pub fn apply_bits(&self, bits: u32) -> u32 {
        let mut out = 0u32;
        let mut rest = bits;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << self.images[i];
        }
        out
    }

    pub fn apply(&self, v: &BitVector) -> BitVector {
        BitVector::masked(self.degree(), self.apply_bits(v.bits()))
    }

    /// 1-based fixed points.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree())
            .filter(|&i| self.image(i) == i)
            .map(|i| i + 1)
            .collect()
    }

    /// Disjoint cycles as 0-based point lists, including fixed points, each
    /// cycle starting at its least point, cycles ordered by least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; MAX_DIM];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.image(p);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycles as bit masks over 0-based points.
    pub fn cycle_masks(&self) -> Vec<u32> {
        self.cycles()
            .into_iter()
            .map(|c| c.into_iter().fold(0u32, |m, p| m | (1 << p)))
            .collect()
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, |acc, len| acc / gcd(acc, len) * len)
    }

    /// Iterates all `n!` permutations in lexicographic order of images.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            current: Some(Self::identity(n)),
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub struct AllPermutations {
    current: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let out = self.current?;
        let mut next = out;
        let n = next.degree();
        let a = &mut next.images[..n];
        // next_permutation
        let pivot = (0..n.saturating_sub(1)).rev().find(|&i| a[i] < a[i + 1]);
        self.current = match pivot {
            Some(i) => {
                let j = (i + 1..n).rev().find(|&j| a[j] > a[i]).unwrap();
                a.swap(i, j);
                a[i + 1..].reverse();
                Some(next)
            }
            None => None,
        };
        Some(out)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("id");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}
