//! Dominant indivisible one-parameter subgroups orthogonal to hyperplanes
//! spanned by tangent weights.

use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;

use crate::arith::{kernel_i64, rank_i64};
use crate::embedding::EmbeddedPair;
use crate::lie::{dominant_coweight_rep, Coweight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleSet {
    pub lambdas: Vec<Coweight>,
    /// Set when `rank G < 2`: the hyperplane is `{0}` and the single returned
    /// coweight is the positive generator of `Y(T)`.
    pub degenerate: bool,
}

pub fn admissible_one_param_subgroups(pair: &EmbeddedPair) -> AdmissibleSet {
    let r = pair.g.rank();
    if r < 2 {
        let lambda = vec![1; r];
        return AdmissibleSet { lambdas: vec![lambda], degenerate: true };
    }
    let weights: Vec<Vec<i64>> = pair.tangent_weight_counts().into_keys().collect();
    let combos: Vec<Vec<usize>> = (0..weights.len()).combinations(r - 1).collect();
    let normals: BTreeSet<Vec<i64>> = combos
        .par_iter()
        .filter_map(|c| {
            let rows: Vec<Vec<i64>> = c.iter().map(|&i| weights[i].clone()).collect();
            let k = kernel_i64(&rows, r);
            (k.len() == 1).then(|| canonical_sign(k.into_iter().next().unwrap()))
        })
        .collect();
    let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();
    for n in normals {
        let neg: Vec<i64> = n.iter().map(|x| -x).collect();
        out.insert(dominant_coweight_rep(&pair.g, &n));
        out.insert(dominant_coweight_rep(&pair.g, &neg));
    }
    AdmissibleSet { lambdas: out.into_iter().collect(), degenerate: false }
}

fn canonical_sign(v: Vec<i64>) -> Vec<i64> {
    match v.iter().find(|&&x| x != 0) {
        Some(&x) if x < 0 => v.iter().map(|y| -y).collect(),
        _ => v,
    }
}

/// Whether the tangent weights orthogonal to `lambda` span a hyperplane.
pub fn is_admissible(pair: &EmbeddedPair, lambda: &[i64]) -> bool {
    let zeros: Vec<Vec<i64>> = pair
        .tangent_weights
        .iter()
        .filter(|w| crate::arith::dot(w, lambda) == 0)
        .cloned()
        .collect();
    rank_i64(&zeros) + 1 == pair.g.rank()
}
