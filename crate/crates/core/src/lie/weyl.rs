use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::root_system::RootSystem;
use crate::error::{Error, Result};

/// A Weyl group element with one reduced word and its action on weights.
///
/// The word `[i1, ..., il]` stands for `s_{i1} ... s_{il}`. Equality is
/// equality of the action matrices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WeylElement {
    pub word: Vec<usize>,
    /// Column action on fundamental-weight coordinates: `w mu = action * mu`.
    pub action: Vec<Vec<i64>>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.action.hash(state)
    }
}

pub fn reflect_weight(rs: &RootSystem, i: usize, mu: &mut [i64]) {
    let c = mu[i];
    if c != 0 {
        for (m, &a) in mu.iter_mut().zip(&rs.cartan()[i]) {
            *m -= c * a;
        }
    }
}

pub fn reflect_coweight(rs: &RootSystem, i: usize, lambda: &mut [i64]) {
    let c = crate::arith::dot(lambda, &rs.cartan()[i]);
    lambda[i] -= c;
}

pub fn reflect_root(rs: &RootSystem, i: usize, beta: &mut [i64]) {
    let c = rs.root_pair_coroot(beta, i);
    beta[i] -= c;
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let action = (0..rank)
            .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
            .collect();
        WeylElement { word: vec![], action }
    }

    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Self {
        let mut w = WeylElement::identity(rs.rank());
        for &i in word.iter().rev() {
            w = w.left_mul_simple(rs, i);
        }
        w.word = word.to_vec();
        w
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `s_i * self`; the word is extended on the left without reduction.
    pub fn left_mul_simple(&self, rs: &RootSystem, i: usize) -> Self {
        let mut action = self.action.clone();
        // rows: (s_i M)_k = M_k - C[i][k] M_i
        let row_i = action[i].clone();
        for (k, row) in action.iter_mut().enumerate() {
            let c = rs.cartan()[i][k];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&row_i) {
                    *x -= c * y;
                }
            }
        }
        let mut word = Vec::with_capacity(self.word.len() + 1);
        word.push(i);
        word.extend_from_slice(&self.word);
        WeylElement { word, action }
    }

    pub fn act_weight(&self, mu: &[i64]) -> Vec<i64> {
        self.action
            .iter()
            .map(|row| crate::arith::dot(row, mu))
            .collect()
    }

    pub fn act_coweight(&self, rs: &RootSystem, lambda: &[i64]) -> Vec<i64> {
        let mut v = lambda.to_vec();
        for &i in self.word.iter().rev() {
            reflect_coweight(rs, i, &mut v);
        }
        v
    }

    pub fn act_root(&self, rs: &RootSystem, beta: &[i64]) -> Vec<i64> {
        let mut v = beta.to_vec();
        for &i in self.word.iter().rev() {
            reflect_root(rs, i, &mut v);
        }
        v
    }

    pub fn act_root_inverse(&self, rs: &RootSystem, beta: &[i64]) -> Vec<i64> {
        let mut v = beta.to_vec();
        for &i in &self.word {
            reflect_root(rs, i, &mut v);
        }
        v
    }

    pub fn inverse(&self, rs: &RootSystem) -> Self {
        let w: Vec<usize> = self.word.iter().rev().copied().collect();
        WeylElement::from_word(rs, &w)
    }

    /// `Phi(w) = Phi+ ∩ w^{-1} Phi-`, as indices into `rs.roots()`.
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<usize> {
        (0..rs.num_positive_roots())
            .filter(|&i| {
                let img = self.act_root(rs, rs.root(i));
                img.iter().any(|&x| x < 0)
            })
            .collect()
    }

    pub fn determinant_sign(&self) -> i64 {
        if self.word.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// All elements of `W`, breadth first from the identity.
pub fn enumerate_weyl(rs: &RootSystem) -> Vec<WeylElement> {
    let id = WeylElement::identity(rs.rank());
    let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::new();
    seen.insert(id.action.clone());
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        let cur = out[head].clone();
        head += 1;
        for i in 0..rs.rank() {
            let next = cur.left_mul_simple(rs, i);
            if seen.insert(next.action.clone()) {
                out.push(next);
            }
        }
    }
    out
}

/// Order of the Weyl group, as the size of the regular orbit of `rho`.
pub fn weyl_group_order(rs: &RootSystem) -> usize {
    weyl_orbit(rs, &rs.rho()).len()
}

pub fn weyl_orbit(rs: &RootSystem, chi: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(chi.to_vec());
    let mut out = vec![chi.to_vec()];
    let mut queue = VecDeque::from([chi.to_vec()]);
    while let Some(mu) = queue.pop_front() {
        for i in 0..rs.rank() {
            if mu[i] == 0 {
                continue;
            }
            let mut nu = mu.clone();
            reflect_weight(rs, i, &mut nu);
            if seen.insert(nu.clone()) {
                out.push(nu.clone());
                queue.push_back(nu);
            }
        }
    }
    out
}

/// Dominant element of the orbit of a weight together with the word
/// `[i1, ..., il]` such that `s_{i1} ... s_{il} chi` is dominant.
pub fn dominant_weight_rep(rs: &RootSystem, chi: &[i64]) -> (Vec<i64>, Vec<usize>) {
    let mut mu = chi.to_vec();
    let mut word = Vec::new();
    while let Some(i) = mu.iter().position(|&x| x < 0) {
        reflect_weight(rs, i, &mut mu);
        word.insert(0, i);
    }
    (mu, word)
}

/// Dominant element of the orbit of a coweight.
pub fn dominant_coweight_rep(rs: &RootSystem, lambda: &[i64]) -> Vec<i64> {
    let mut v = lambda.to_vec();
    loop {
        let vals = rs.coweight_on_simple_roots(&v);
        match vals.iter().position(|&x| x < 0) {
            Some(i) => reflect_coweight(rs, i, &mut v),
            None => return v,
        }
    }
}

/// Dominant representative `v lambda` together with `v`.
pub fn dominant_coweight_conjugator(rs: &RootSystem, lambda: &[i64]) -> (Vec<i64>, WeylElement) {
    let mut v = lambda.to_vec();
    let mut word = vec![];
    loop {
        let vals = rs.coweight_on_simple_roots(&v);
        match vals.iter().position(|&x| x < 0) {
            Some(i) => {
                reflect_coweight(rs, i, &mut v);
                word.insert(0, i);
            }
            None => return (v, WeylElement::from_word(rs, &word)),
        }
    }
}

/// `nu* = -w0 nu`.
pub fn dual_weight(rs: &RootSystem, nu: &[i64]) -> Vec<i64> {
    let neg: Vec<i64> = nu.iter().map(|x| -x).collect();
    dominant_weight_rep(rs, &neg).0
}

/// Longest element `w0`.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    let neg_rho: Vec<i64> = rs.rho().iter().map(|x| -x).collect();
    let (_, word) = dominant_weight_rep(rs, &neg_rho);
    // s_{i1}..s_{il} (-rho) = rho, so w0 = that product
    WeylElement::from_word(rs, &word)
}

/// Element of `W^P` with its inversion set, as built by [`coset_reps_min_length`].
#[derive(Clone, Debug)]
pub struct CosetRep {
    pub element: WeylElement,
    /// `w lambda` in simple-coroot coordinates.
    pub image: Vec<i64>,
    /// `Phi(w)` as root indices, in the order they were added.
    pub inversions: Vec<usize>,
}

/// Minimal length representatives of `W / W_{P(lambda)}` in breadth-first order.
pub fn coset_reps_min_length(rs: &RootSystem, lambda: &[i64]) -> Result<Vec<CosetRep>> {
    if lambda.len() != rs.rank() {
        return Err(Error::DimensionError { expected: rs.rank(), got: lambda.len() });
    }
    if !rs.is_dominant_coweight(lambda) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    let start = CosetRep {
        element: WeylElement::identity(rs.rank()),
        image: lambda.to_vec(),
        inversions: vec![],
    };
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    index.insert(start.image.clone(), 0);
    let mut out = vec![start];
    let mut head = 0;
    while head < out.len() {
        let cur = out[head].clone();
        head += 1;
        let vals = rs.coweight_on_simple_roots(&cur.image);
        for (i, &v) in vals.iter().enumerate() {
            if v <= 0 {
                continue;
            }
            let mut image = cur.image.clone();
            reflect_coweight(rs, i, &mut image);
            if index.contains_key(&image) {
                continue;
            }
            let mut alpha = vec![0; rs.rank()];
            alpha[i] = 1;
            let new_root = cur.element.act_root_inverse(rs, &alpha);
            let ridx = rs.root_index(&new_root).expect("image of a root is a root");
            debug_assert!(rs.is_positive(ridx));
            let mut inversions = cur.inversions.clone();
            inversions.push(ridx);
            index.insert(image.clone(), out.len());
            out.push(CosetRep {
                element: cur.element.left_mul_simple(rs, i),
                image,
                inversions,
            });
        }
    }
    Ok(out)
}

/// `Phi(w)^k` keyed by `k = -<lambda, alpha>` (all keys negative for `w` in `W^P`).
pub fn graded_inversion_set(
    rs: &RootSystem,
    w: &WeylElement,
    lambda: &[i64],
) -> BTreeMap<i64, Vec<usize>> {
    grade_roots(rs, &w.inversion_set(rs), lambda)
}

pub fn grade_roots(rs: &RootSystem, roots: &[usize], lambda: &[i64]) -> BTreeMap<i64, Vec<usize>> {
    let mut out: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for &r in roots {
        let k = -rs.pair_root(lambda, rs.root(r));
        out.entry(k).or_default().push(r);
    }
    for v in out.values_mut() {
        v.sort_unstable();
    }
    out
}

/// Roots `beta` with `<lambda, beta> = k` for each `k < 0`.
pub fn negative_grading(rs: &RootSystem, lambda: &[i64]) -> BTreeMap<i64, Vec<usize>> {
    let mut out: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (idx, r) in rs.roots().iter().enumerate() {
        let k = rs.pair_root(lambda, r);
        if k < 0 {
            out.entry(k).or_default().push(idx);
        }
    }
    out
}
