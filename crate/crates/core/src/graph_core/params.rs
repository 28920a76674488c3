use std::fmt;

use serde::{Serialize, Serializer};

use super::graph::{SimpleGraph, UNREACHED};

/// The value of `c_i` or `a_i` across all pairs at distance `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamValue {
    /// Same value for every pair.
    Value(u32),
    /// Different pairs give different values.
    Varies,
    /// No pair lies at this distance.
    Vacuous,
}

impl ParamValue {
    /// Equals `expected`; vacuous levels count as satisfied.
    pub fn is(&self, expected: u32) -> bool {
        match self {
            ParamValue::Value(v) => *v == expected,
            ParamValue::Varies => false,
            ParamValue::Vacuous => true,
        }
    }

    fn absorb(&mut self, value: u32) {
        *self = match *self {
            ParamValue::Vacuous => ParamValue::Value(value),
            ParamValue::Value(v) if v == value => ParamValue::Value(v),
            _ => ParamValue::Varies,
        };
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Value(v) => write!(f, "{v}"),
            ParamValue::Varies => f.write_str("undefined"),
            ParamValue::Vacuous => f.write_str("vacuous"),
        }
    }
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ParamValue::Value(v) => s.serialize_u32(*v),
            ParamValue::Varies => s.serialize_str("undefined"),
            ParamValue::Vacuous => s.serialize_str("vacuous"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalParams {
    pub level: u32,
    pub c_value: ParamValue,
    pub a_value: ParamValue,
    pub is_regular: bool,
    pub valency: Option<u32>,
}

/// `c_i` and `a_i` for `0 ≤ i ≤ max_level`, one entry per level.
///
/// `c_i(u,v) = |Γ_{i-1}(u) ∩ Γ(v)|` and `a_i(u,v) = |Γ_i(u) ∩ Γ(v)|` for every
/// pair with `d(u,v) = i`.
pub fn local_params(g: &SimpleGraph, max_level: u32) -> Vec<LocalParams> {
    let levels = max_level as usize + 1;
    let mut c = vec![ParamValue::Vacuous; levels];
    let mut a = vec![ParamValue::Vacuous; levels];
    for u in 0..g.vertex_count() {
        let dist = g.distances_from(u, Some(max_level));
        for v in 0..g.vertex_count() {
            let i = dist[v];
            if i == UNREACHED || i > max_level {
                continue;
            }
            let (mut cv, mut av) = (0u32, 0u32);
            for &w in g.neighbors(v) {
                let dw = dist[w as usize];
                if i > 0 && dw == i - 1 {
                    cv += 1;
                } else if dw == i {
                    av += 1;
                }
            }
            c[i as usize].absorb(cv);
            a[i as usize].absorb(av);
        }
    }
    let valency = g.valency().map(|k| k as u32);
    (0..levels)
        .map(|i| LocalParams {
            level: i as u32,
            c_value: c[i],
            a_value: a[i],
            is_regular: valency.is_some(),
            valency,
        })
        .collect()
}

/// Regular of valency `n` with `a_{i-1} = 0` and `c_i = i` for `1 ≤ i ≤ ell`.
pub fn is_cube_like(g: &SimpleGraph, n: u32, ell: u32) -> bool {
    if g.valency() != Some(n as usize) {
        return false;
    }
    cube_like_from_params(&local_params(g, ell), n, ell)
}

pub fn cube_like_from_params(params: &[LocalParams], n: u32, ell: u32) -> bool {
    params.first().is_some_and(|p| p.valency == Some(n))
        && (1..=ell).all(|i| {
            params[i as usize - 1].a_value.is(0) && params[i as usize].c_value.is(i)
        })
}

/// Connected, triangle-free, and every 2-path in a unique quadrangle
/// (`a_1 = 0`, `c_2 = 2`).
pub fn is_rectagraph(g: &SimpleGraph) -> bool {
    if g.vertex_count() == 0 || !g.is_connected() {
        return false;
    }
    let p = local_params(g, 2);
    p[1].a_value.is(0) && p[2].c_value.is(2)
}
