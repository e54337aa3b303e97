//! Candidate Schubert pairs, Levi-movability certificates and the resulting
//! inequalities.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{independent_q, Q};
use crate::chevalley::{random_levi_element, random_torus_element, AdjointOperator, Element};
use crate::embedding::EmbeddedPair;
use crate::error::{Error, Result};
use crate::lie::{coset_reps_min_length, dominant_coweight_conjugator, grade_roots, negative_grading, Coweight, CosetRep, WeylElement};

pub const DEFAULT_MAX_ATTEMPTS: usize = 5;

/// Per-degree data `(k, |Φ(w)^k|, |Φ̂(ŵ)^k|, |Φ̂^k|)`.
pub type GradedDims = Vec<(i64, usize, usize, usize)>;

#[derive(Clone, Debug)]
pub struct CandidatePair {
    pub lambda: Coweight,
    /// `ρ*(λ)`, possibly not dominant for `Ĝ`.
    pub lambda_hat: Coweight,
    /// `v` with `vλ̂` dominant. `ŵ` and `Φ̂(ŵ)` are taken with respect to
    /// `vλ̂`; the tangent space of the Schubert variety at `λ̂` is `v⁻¹` of it.
    pub hat_twist: WeylElement,
    pub w: WeylElement,
    pub w_hat: WeylElement,
    /// `wλ` in simple-coroot coordinates of `G`.
    pub w_lambda: Vec<i64>,
    /// `ŵλ̂` in simple-coroot coordinates of `Ĝ`.
    pub w_hat_lambda: Vec<i64>,
    pub phi_w: BTreeMap<i64, Vec<usize>>,
    pub phi_w_hat: BTreeMap<i64, Vec<usize>>,
    pub graded_dims: GradedDims,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Movability {
    Movable(Certificate),
    Unknown,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub attempt: usize,
    pub seed: u64,
    /// `ĥ` as a torus element times root exponentials in `ĝ`.
    pub h_hat: AdjointOperator,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Candidate,
    CertifiedMovable,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    Pair {
        lambda: Vec<i64>,
        w: Vec<usize>,
        w_hat: Vec<usize>,
    },
    /// `-ν_i ≤ 0` for `i < rank G`, `-ν̂_{i - rank G} ≤ 0` otherwise.
    Dominance(usize),
}

/// `coeffs · (ν, ν̂) ≤ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityRecord {
    pub coeffs: Vec<i64>,
    pub provenance: Provenance,
    pub status: Status,
}

/// Seed of attempt `t` derived from the run seed; independent of the attempt budget.
pub fn attempt_seed(run_seed: u64, attempt: usize) -> u64 {
    let mut z = run_seed.wrapping_add((attempt as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// `ρ*(λ)` after checking that `λ` is dominant.
pub fn lambda_hat(pair: &EmbeddedPair, lambda: &[i64]) -> Result<Coweight> {
    if lambda.len() != pair.g.rank() {
        return Err(Error::DimensionError { expected: pair.g.rank(), got: lambda.len() });
    }
    if !pair.g.is_dominant_coweight(lambda) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    Ok(pair.embed_coweight(lambda))
}

pub fn candidate_pairs(pair: &EmbeddedPair, lambda: &[i64]) -> Result<Vec<CandidatePair>> {
    let raw_hat = lambda_hat(pair, lambda)?;
    let (lam_hat, twist) = dominant_coweight_conjugator(&pair.ghat, &raw_hat);
    let g_reps = coset_reps_min_length(&pair.g, lambda)?;
    let hat_reps = coset_reps_min_length(&pair.ghat, &lam_hat)?;
    let grading = negative_grading(&pair.ghat, &lam_hat);
    let full: BTreeMap<i64, usize> = grading.iter().map(|(k, v)| (*k, v.len())).collect();

    let signature = |m: &BTreeMap<i64, Vec<usize>>| -> Vec<(i64, usize)> {
        m.iter().map(|(k, v)| (*k, v.len())).collect()
    };
    let hat_graded: Vec<BTreeMap<i64, Vec<usize>>> = hat_reps
        .iter()
        .map(|r| grade_roots(&pair.ghat, &r.inversions, &lam_hat))
        .collect();
    let mut by_sig: HashMap<Vec<(i64, usize)>, Vec<usize>> = HashMap::new();
    for (i, g) in hat_graded.iter().enumerate() {
        by_sig.entry(signature(g)).or_default().push(i);
    }

    let mut out = vec![];
    for rep in &g_reps {
        let phi_w = grade_roots(&pair.g, &rep.inversions, lambda);
        if phi_w.keys().any(|k| !full.contains_key(k)) {
            continue;
        }
        let mut need = vec![];
        let mut ok = true;
        for (k, &n) in &full {
            let d = phi_w.get(k).map_or(0, Vec::len);
            if d > n {
                ok = false;
                break;
            }
            if n > d {
                need.push((*k, n - d));
            }
        }
        if !ok {
            continue;
        }
        for &hi in by_sig.get(&need).map(Vec::as_slice).unwrap_or(&[]) {
            out.push(make_candidate(lambda, &raw_hat, &twist, rep, &hat_reps[hi], phi_w.clone(), hat_graded[hi].clone(), &full));
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn make_candidate(
    lambda: &[i64],
    lam_hat: &[i64],
    twist: &WeylElement,
    rep: &CosetRep,
    hat: &CosetRep,
    phi_w: BTreeMap<i64, Vec<usize>>,
    phi_w_hat: BTreeMap<i64, Vec<usize>>,
    full: &BTreeMap<i64, usize>,
) -> CandidatePair {
    let graded_dims = full
        .iter()
        .map(|(k, &n)| {
            (*k, phi_w.get(k).map_or(0, Vec::len), phi_w_hat.get(k).map_or(0, Vec::len), n)
        })
        .collect();
    CandidatePair {
        lambda: lambda.to_vec(),
        lambda_hat: lam_hat.to_vec(),
        hat_twist: twist.clone(),
        w: rep.element.clone(),
        w_hat: hat.element.clone(),
        w_lambda: rep.image.clone(),
        w_hat_lambda: hat.image.clone(),
        phi_w,
        phi_w_hat,
        graded_dims,
    }
}

/// Movability tests for one `λ`, caching `ĥ` applied to every negative-degree
/// basis vector of `ĝ`, per attempt.
pub struct MovabilityTester<'a> {
    pair: &'a EmbeddedPair,
    lambda_hat: Coweight,
    run_seed: u64,
    /// Basis indices of `T̂^k` per degree.
    degree_basis: BTreeMap<i64, Vec<usize>>,
    position: HashMap<usize, usize>,
    /// Root index of `v⁻¹β` for every root `β` of `Ĝ`.
    twist: Vec<usize>,
    attempts: Vec<OnceLock<(AdjointOperator, HashMap<usize, Element>)>>,
}

impl<'a> MovabilityTester<'a> {
    pub fn new(pair: &'a EmbeddedPair, lambda: &[i64], run_seed: u64, max_attempts: usize) -> Result<Self> {
        let lambda_hat = lambda_hat(pair, lambda)?;
        let degree_basis = negative_grading(&pair.ghat, &lambda_hat);
        let mut position = HashMap::new();
        for idxs in degree_basis.values() {
            for (p, &i) in idxs.iter().enumerate() {
                position.insert(i, p);
            }
        }
        let ghat = &pair.ghat;
        let (_, v) = dominant_coweight_conjugator(ghat, &lambda_hat);
        let twist = ghat
            .roots()
            .iter()
            .map(|r| ghat.root_index(&v.act_root_inverse(ghat, r)).expect("Weyl image of a root"))
            .collect();
        Ok(MovabilityTester {
            pair,
            lambda_hat,
            twist,
            run_seed,
            degree_basis,
            position,
            attempts: (0..max_attempts).map(|_| OnceLock::new()).collect(),
        })
    }

    fn h_hat(&self, attempt: usize) -> &(AdjointOperator, HashMap<usize, Element>) {
        self.attempts[attempt].get_or_init(|| {
            let seed = attempt_seed(self.run_seed, attempt);
            let l = &self.pair.lie_hat;
            let unip = random_levi_element(l, &self.lambda_hat, seed);
            let torus = random_torus_element(l, seed ^ 0x5555_5555_5555_5555);
            let op = torus.compose(&unip);
            let images = self
                .degree_basis
                .values()
                .flatten()
                .map(|&i| (i, op.apply(l, &l.basis(i))))
                .collect();
            (op, images)
        })
    }

    pub fn test(&self, cand: &CandidatePair) -> Movability {
        for attempt in 0..self.attempts.len() {
            if self.transverse(cand, attempt) {
                let (op, _) = self.h_hat(attempt);
                return Movability::Movable(Certificate {
                    attempt,
                    seed: attempt_seed(self.run_seed, attempt),
                    h_hat: op.clone(),
                });
            }
        }
        Movability::Unknown
    }

    fn transverse(&self, cand: &CandidatePair, attempt: usize) -> bool {
        let (_, images) = self.h_hat(attempt);
        let g = &self.pair.g;
        let ghat = &self.pair.ghat;
        for (k, basis) in &self.degree_basis {
            let restrict = |v: &Element| -> Vec<Q> {
                let mut out = vec![Q::zero(); basis.len()];
                for (i, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        if let Some(&p) = self.position.get(&i).filter(|_| basis.contains(&i)) {
                            out[p] = x.clone();
                        }
                    }
                }
                out
            };
            let mut rows = vec![];
            for &a in cand.phi_w.get(k).map(Vec::as_slice).unwrap_or(&[]) {
                let neg = g.negate_index(a);
                rows.push(restrict(&self.pair.g_root_images.roots[neg]));
            }
            for &b in cand.phi_w_hat.get(k).map(Vec::as_slice).unwrap_or(&[]) {
                let neg = self.twist[ghat.negate_index(b)];
                rows.push(restrict(&images[&neg]));
            }
            if !independent_q(&rows) {
                return false;
            }
        }
        true
    }
}

pub fn is_levi_movable(pair: &EmbeddedPair, cand: &CandidatePair, seed: u64, max_attempts: usize) -> Result<Movability> {
    Ok(MovabilityTester::new(pair, &cand.lambda, seed, max_attempts)?.test(cand))
}

pub fn inequality(cand: &CandidatePair, status: Status) -> InequalityRecord {
    let mut coeffs = cand.w_lambda.clone();
    coeffs.extend_from_slice(&cand.w_hat_lambda);
    InequalityRecord {
        coeffs,
        provenance: Provenance::Pair {
            lambda: cand.lambda.clone(),
            w: cand.w.word.clone(),
            w_hat: cand.w_hat.word.clone(),
        },
        status,
    }
}

pub fn dominance_inequalities(pair: &EmbeddedPair) -> Vec<InequalityRecord> {
    let n = pair.g.rank() + pair.ghat.rank();
    (0..n)
        .map(|i| {
            let mut coeffs = vec![0; n];
            coeffs[i] = -1;
            InequalityRecord { coeffs, provenance: Provenance::Dominance(i), status: Status::CertifiedMovable }
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaStats {
    pub lambda: Vec<i64>,
    pub candidates: usize,
    pub movable: usize,
}

#[derive(Clone, Debug)]
pub struct HRepresentation {
    /// Certified inequalities (in candidate order) followed by dominance rows.
    pub records: Vec<InequalityRecord>,
    /// Candidates left undecided after the attempt budget.
    pub unknown: Vec<CandidatePair>,
    pub stats: Vec<LambdaStats>,
}

impl HRepresentation {
    pub fn movable_count(&self) -> usize {
        self.stats.iter().map(|s| s.movable).sum()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.records.iter().map(|r| r.coeffs.clone()).collect()
    }

    pub fn unknown_records(&self) -> Vec<InequalityRecord> {
        self.unknown.iter().map(|c| inequality(c, Status::Unknown)).collect()
    }

    /// Retests the undecided candidates with a larger attempt budget and
    /// returns how many became certified. New rows go before the dominance rows.
    pub fn retry(&mut self, pair: &EmbeddedPair, seed: u64, max_attempts: usize) -> Result<usize> {
        let pending = std::mem::take(&mut self.unknown);
        let mut fresh = vec![];
        let mut start = 0;
        while start < pending.len() {
            let lambda = &pending[start].lambda;
            let end = start + pending[start..].iter().take_while(|c| &c.lambda == lambda).count();
            let tester = MovabilityTester::new(pair, lambda, seed, max_attempts)?;
            let verdicts: Vec<Movability> = pending[start..end].par_iter().map(|c| tester.test(c)).collect();
            for (c, v) in pending[start..end].iter().zip(verdicts) {
                match v {
                    Movability::Movable(_) => {
                        fresh.push(inequality(c, Status::CertifiedMovable));
                        if let Some(s) = self.stats.iter_mut().find(|s| &s.lambda == lambda) {
                            s.movable += 1;
                        }
                    }
                    Movability::Unknown => self.unknown.push(c.clone()),
                }
            }
            start = end;
        }
        let n = fresh.len();
        let dom = self
            .records
            .iter()
            .position(|r| matches!(r.provenance, Provenance::Dominance(_)))
            .unwrap_or(self.records.len());
        self.records.splice(dom..dom, fresh);
        Ok(n)
    }
}

pub fn generate_h_representation(
    pair: &EmbeddedPair,
    lambdas: &[Coweight],
    seed: u64,
    max_attempts: usize,
) -> Result<HRepresentation> {
    let mut records = vec![];
    let mut unknown = vec![];
    let mut stats = vec![];
    for lambda in lambdas {
        let cands = candidate_pairs(pair, lambda)?;
        let tester = MovabilityTester::new(pair, lambda, seed, max_attempts)?;
        let verdicts: Vec<Movability> = cands.par_iter().map(|c| tester.test(c)).collect();
        let mut movable = 0;
        for (c, v) in cands.iter().zip(verdicts) {
            match v {
                Movability::Movable(_) => {
                    movable += 1;
                    records.push(inequality(c, Status::CertifiedMovable));
                }
                Movability::Unknown => unknown.push(c.clone()),
            }
        }
        stats.push(LambdaStats { lambda: lambda.clone(), candidates: cands.len(), movable });
    }
    records.extend(dominance_inequalities(pair));
    Ok(HRepresentation { records, unknown, stats })
}
