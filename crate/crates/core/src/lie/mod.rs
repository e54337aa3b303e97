//! Root systems, weights, coweights and Weyl group combinatorics.

mod root_system;
mod weyl;

pub use root_system::{format_type_list, parse_type_list, RootSystem, Series, SimpleType};
pub use weyl::{
    coset_reps_min_length, dominant_coweight_conjugator, dominant_coweight_rep, dominant_weight_rep, dual_weight,
    enumerate_weyl, grade_roots, graded_inversion_set, longest_element, negative_grading,
    reflect_coweight, reflect_root, reflect_weight, weyl_group_order, weyl_orbit, CosetRep,
    WeylElement,
};

/// Character of a maximal torus in fundamental-weight coordinates.
pub type Weight = Vec<i64>;
/// One-parameter subgroup of a maximal torus in simple-coroot coordinates.
pub type Coweight = Vec<i64>;

pub fn build_root_system(spec: &[(Series, usize)]) -> crate::Result<RootSystem> {
    let factors = spec
        .iter()
        .map(|&(s, r)| SimpleType::new(s, r))
        .collect::<crate::Result<Vec<_>>>()?;
    RootSystem::new(&factors)
}
