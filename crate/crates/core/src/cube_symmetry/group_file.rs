//! Text format for generator lists.
//!
//! ```text
//! n=8
//! x=11110000 perm=(1 5)(2 6)(3 7)(4 8)
//! x=10100101 perm=(1 2)(3 4)(5 6)(7 8)
//! ```
//!
//! Coordinate 1 is the leftmost bit. Blank lines are ignored.

use super::automorphism::CubeAutomorphism;
use super::bitvec::BitVector;
use super::group::CubeGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub n: usize,
    pub generators: Vec<CubeAutomorphism>,
}

impl GroupSpec {
    pub fn build(&self, cap: usize) -> Result<CubeGroup> {
        CubeGroup::generate(self.n, &self.generators, cap)
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_group_file(text: &str) -> Result<GroupSpec> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (first_no, first) = lines
        .by_ref()
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| parse_err(1, "empty group file"))?;
    let n: usize = first
        .strip_prefix("n=")
        .ok_or_else(|| parse_err(first_no, format!("expected 'n=<int>', found '{first}'")))?
        .trim()
        .parse()
        .map_err(|_| parse_err(first_no, format!("bad dimension in '{first}'")))?;
    if n == 0 || n > super::bitvec::MAX_DIM {
        return Err(parse_err(first_no, format!("dimension {n} outside 1..=32")));
    }

    let mut generators = Vec::new();
    for (line_no, line) in lines {
        if line.is_empty() {
            continue;
        }
        let rest = line
            .strip_prefix("x=")
            .ok_or_else(|| parse_err(line_no, "expected 'x=<bits> perm=<cycles>'"))?;
        let (bits, perm_part) = rest
            .split_once(char::is_whitespace)
            .ok_or_else(|| parse_err(line_no, "missing 'perm=' field"))?;
        let perm_text = perm_part
            .trim_start()
            .strip_prefix("perm=")
            .ok_or_else(|| parse_err(line_no, "missing 'perm=' field"))?;
        if bits.len() != n || !bits.chars().all(|c| c == '0' || c == '1') {
            return Err(parse_err(
                line_no,
                format!("translation '{bits}' is not a {n}-bit string"),
            ));
        }
        let x = BitVector::parse(bits).map_err(|e| parse_err(line_no, e.to_string()))?;
        let perm = Permutation::parse_cycles(n, perm_text)
            .map_err(|e| parse_err(line_no, e.to_string()))?;
        generators.push(CubeAutomorphism::new(x, perm)?);
    }
    Ok(GroupSpec { n, generators })
}

pub fn write_group_file(n: usize, generators: &[CubeAutomorphism]) -> String {
    let mut out = format!("n={n}\n");
    for g in generators {
        out.push_str(&format!("{g}\n"));
    }
    out
}
