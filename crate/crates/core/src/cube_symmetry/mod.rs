//! Arithmetic in the hyperoctahedral group Aut(Q_n) = F_2^n : S_n.

mod automorphism;
mod bitvec;
mod group;
pub mod group_file;
pub mod normalizer;
mod perm;

pub use automorphism::CubeAutomorphism;
pub use bitvec::{BitVector, MAX_DIM};
pub use group::{
    brute_force_element_distance, element_min_distance, involution_group, translation_group,
    CubeGroup, MinDistance, DEFAULT_GROUP_CAP,
};
pub use normalizer::{normalizer, Ambient, Normalizer, NormalizerTier};
pub use perm::Permutation;

/// The quaternion subgroup of Aut(Q_8) generated by
/// `(e_{1,2,3,4}, (15)(26)(37)(48))` and `(e_{1,3,6,8}, (12)(34)(56)(78))`.
pub fn quaternion_generators() -> [CubeAutomorphism; 2] {
    let x = BitVector::from_coords(8, &[1, 2, 3, 4]).unwrap();
    let s = Permutation::parse_cycles(8, "(1 5)(2 6)(3 7)(4 8)").unwrap();
    let y = BitVector::from_coords(8, &[1, 3, 6, 8]).unwrap();
    let t = Permutation::parse_cycles(8, "(1 2)(3 4)(5 6)(7 8)").unwrap();
    [
        CubeAutomorphism::new(x, s).unwrap(),
        CubeAutomorphism::new(y, t).unwrap(),
    ]
}

/// `{1, (1,…,1)}`, whose quotient is the folded n-cube.
pub fn antipodal_group(n: usize) -> CubeGroup {
    translation_group(n, &[BitVector::all_ones(n)], 2).expect("order 2")
}
