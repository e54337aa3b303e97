//! End-to-end cone computation with ray verification, Hilbert basis and the
//! saturation verdict.

use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::admissible::admissible_one_param_subgroups;
use crate::arith::gcd_slice;
use crate::branching::{Brancher, CharacterCache};
use crate::embedding::{EmbeddedPair, LatticeDescription};
use crate::error::{Error, Result};
use crate::levimov::{generate_h_representation, InequalityRecord, LambdaStats, Provenance, DEFAULT_MAX_ATTEMPTS};
use crate::lie::RootSystem;
use crate::polycone::{extreme_rays, facet_indices, hilbert_basis, Cone};

pub const REPORT_FORMAT: &str = "satcone-report/1";
/// Setting this variable to `1` enables long computations by default.
pub const LONG_ENV: &str = "SATCONE_ALLOW_LONG";
/// Attempt budgets of the successive movability rounds.
pub const RETRY_BUDGETS: [usize; 3] = [DEFAULT_MAX_ATTEMPTS, 25, 125];

#[derive(Clone, Debug)]
pub struct Options {
    pub seed: u64,
    pub allow_long: bool,
    pub cache: Arc<CharacterCache>,
    /// Replaces `ZLR` in the Hilbert basis computation.
    pub lattice: Option<LatticeDescription>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: 0,
            allow_long: std::env::var(LONG_ENV).is_ok_and(|v| v == "1"),
            cache: Arc::new(CharacterCache::in_memory()),
            lattice: None,
        }
    }
}

/// Pairs whose ray verification and Hilbert basis take more than a few minutes.
pub fn is_long(pair: &EmbeddedPair) -> bool {
    pair.name().starts_with("sp_sl") && pair.g.rank() >= 5
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayReport {
    /// `(ν, ν̂)` in fundamental-weight coordinates.
    pub ray: Vec<i64>,
    /// Branching multiplicity, absent when verification was skipped.
    pub multiplicity: Option<u64>,
    /// ε-coordinate rendering where available.
    pub eps: String,
}

impl RayReport {
    pub fn verified(&self) -> bool {
        self.multiplicity.is_some_and(|m| m > 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RetryEntry {
    pub max_attempts: usize,
    pub newly_certified: usize,
    pub still_unknown: usize,
    pub failing_rays: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeReport {
    pub format: String,
    pub pair: String,
    pub g: String,
    pub ghat: String,
    pub seed: u64,
    pub lambdas: Vec<Vec<i64>>,
    pub stats: Vec<LambdaStats>,
    /// Certified and dominance rows before redundancy removal.
    pub total_inequalities: usize,
    pub inequalities: Vec<InequalityRecord>,
    pub redundant: Vec<InequalityRecord>,
    pub unknown_candidates: usize,
    pub rays: Vec<RayReport>,
    pub retry_log: Vec<RetryEntry>,
    pub incomplete: Option<String>,
}

impl ConeReport {
    pub fn rank_g(&self) -> usize {
        self.stats.first().map_or(0, |s| s.lambda.len())
    }

    pub fn ray_vectors(&self) -> Vec<Vec<i64>> {
        self.rays.iter().map(|r| r.ray.clone()).collect()
    }

    pub fn inequality_rows(&self) -> Vec<Vec<i64>> {
        self.inequalities.iter().map(|r| r.coeffs.clone()).collect()
    }

    pub fn movable_count(&self) -> usize {
        self.stats.iter().map(|s| s.movable).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Saturated,
    Counterexample(Vec<i64>),
    Incomplete(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertElement {
    pub element: Vec<i64>,
    pub multiplicity: u64,
    pub is_ray: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationReport {
    pub format: String,
    pub cone: ConeReport,
    pub lattice: LatticeDescription,
    pub hilbert_basis: Vec<HilbertElement>,
    /// Whether the Hilbert basis consists exactly of the primitive ray generators.
    pub hilbert_equals_rays: bool,
    pub verdict: Verdict,
}

/// Multiplicity of every `(ν, ν̂)`; inputs must be primitive and nonzero.
pub fn verify_rays(pair: &EmbeddedPair, rays: &[Vec<i64>], brancher: &Brancher) -> Result<Vec<RayReport>> {
    let r = pair.g.rank();
    for ray in rays {
        if ray.len() != r + pair.ghat.rank() {
            return Err(Error::DimensionError { expected: r + pair.ghat.rank(), got: ray.len() });
        }
        if gcd_slice(ray) != 1 {
            return Err(Error::NotPrimitive(ray.clone()));
        }
    }
    rays.par_iter()
        .map(|ray| {
            let m = brancher.multiplicity(&ray[..r], &ray[r..])?;
            Ok(RayReport { ray: ray.clone(), multiplicity: Some(m), eps: render_weight_pair(pair, ray, Coords::Epsilon) })
        })
        .collect()
}

pub fn compute_cone(pair: &EmbeddedPair, opts: &Options) -> Result<ConeReport> {
    let dim = pair.g.rank() + pair.ghat.rank();
    let lambdas = admissible_one_param_subgroups(pair).lambdas;
    let mut h = generate_h_representation(pair, &lambdas, opts.seed, RETRY_BUDGETS[0])?;
    let brancher = Brancher::new(pair, opts.cache.clone());
    let verify = opts.allow_long || !is_long(pair);
    let mut retry_log = vec![];
    let mut round = 0;
    loop {
        let rows = h.rows();
        let rays = extreme_rays(&rows, dim)?;
        let reports = if verify {
            verify_rays(pair, &rays, &brancher)?
        } else {
            rays.iter()
                .map(|r| RayReport { ray: r.clone(), multiplicity: None, eps: render_weight_pair(pair, r, Coords::Epsilon) })
                .collect()
        };
        let failing = reports.iter().filter(|r| r.multiplicity == Some(0)).count();
        let next_budget = RETRY_BUDGETS.get(round + 1).copied();
        let incomplete = match (failing, next_budget) {
            (0, _) if !verify => Some("ray verification skipped for a long-running pair".to_string()),
            (0, _) => None,
            (_, Some(_)) if !h.unknown.is_empty() => {
                let budget = next_budget.unwrap();
                let n = h.retry(pair, opts.seed, budget)?;
                retry_log.push(RetryEntry {
                    max_attempts: budget,
                    newly_certified: n,
                    still_unknown: h.unknown.len(),
                    failing_rays: failing,
                });
                round += 1;
                continue;
            }
            (_, _) if h.unknown.is_empty() => {
                Some(format!("{failing} rays fail verification with every candidate certified"))
            }
            _ => Some(format!("{failing} rays fail verification after the largest attempt budget")),
        };
        let facets = facet_indices(&rows, &rays, dim);
        let mut keep = vec![false; rows.len()];
        for &i in &facets {
            keep[i] = true;
        }
        let (inequalities, redundant): (Vec<_>, Vec<_>) =
            h.records.iter().cloned().zip(keep).partition(|(_, k)| *k);
        return Ok(ConeReport {
            format: REPORT_FORMAT.into(),
            pair: pair.name().into(),
            g: pair.g.type_name(),
            ghat: pair.ghat.type_name(),
            seed: opts.seed,
            lambdas,
            stats: h.stats.clone(),
            total_inequalities: rows.len(),
            inequalities: inequalities.into_iter().map(|(r, _)| r).collect(),
            redundant: redundant.into_iter().map(|(r, _)| r).collect(),
            unknown_candidates: h.unknown.len(),
            rays: reports,
            retry_log,
            incomplete,
        });
    }
}

pub fn check_saturation(pair: &EmbeddedPair, opts: &Options) -> Result<SaturationReport> {
    let cone = compute_cone(pair, opts)?;
    let lattice = opts.lattice.clone().unwrap_or_else(|| pair.lr_lattice());
    let mut report = SaturationReport {
        format: REPORT_FORMAT.into(),
        lattice,
        hilbert_basis: vec![],
        hilbert_equals_rays: false,
        verdict: Verdict::Incomplete(String::new()),
        cone,
    };
    if let Some(reason) = &report.cone.incomplete {
        report.verdict = Verdict::Incomplete(reason.clone());
        return Ok(report);
    }
    if is_long(pair) && !opts.allow_long {
        report.verdict = Verdict::Incomplete("Hilbert basis skipped for a long-running pair".into());
        return Ok(report);
    }
    let dim = pair.g.rank() + pair.ghat.rank();
    let mut cone = Cone { dim, h_rep: Some(report.cone.inequality_rows()), v_rep: Some(report.cone.ray_vectors()) };
    let basis = hilbert_basis(&mut cone, &report.lattice)?;
    let brancher = Brancher::new(pair, opts.cache.clone());
    let rays: Vec<Vec<i64>> =
        report.cone.ray_vectors().iter().map(|v| lattice_generator(&report.lattice, v)).collect();
    let r = pair.g.rank();
    report.hilbert_basis = basis
        .elements
        .par_iter()
        .map(|e| {
            Ok(HilbertElement {
                element: e.clone(),
                multiplicity: brancher.multiplicity(&e[..r], &e[r..])?,
                is_ray: rays.contains(e),
            })
        })
        .collect::<Result<_>>()?;
    report.hilbert_equals_rays =
        report.hilbert_basis.len() == rays.len() && report.hilbert_basis.iter().all(|e| e.is_ray);
    report.verdict = match report.hilbert_basis.iter().find(|e| e.multiplicity == 0) {
        Some(e) => Verdict::Counterexample(e.element.clone()),
        None => Verdict::Saturated,
    };
    Ok(report)
}

/// Smallest positive multiple of a primitive vector lying in the lattice.
pub fn lattice_generator(lattice: &LatticeDescription, ray: &[i64]) -> Vec<i64> {
    (1..=lattice.index.max(1) as i64)
        .map(|k| ray.iter().map(|x| k * x).collect::<Vec<_>>())
        .find(|v| lattice.contains(v))
        .unwrap_or_else(|| ray.to_vec())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Coords {
    #[default]
    Fundamental,
    Epsilon,
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn render_part(rs: &RootSystem, w: &[i64], coords: Coords) -> String {
    match coords {
        Coords::Epsilon => match rs.fw_to_eps(w) {
            Some(e) => format!("[{}]", join(&e)),
            None => format!("({})", join(w)),
        },
        Coords::Fundamental => format!("({})", join(w)),
    }
}

/// `(ν | ν̂)` in the chosen coordinates.
pub fn render_weight_pair(pair: &EmbeddedPair, v: &[i64], coords: Coords) -> String {
    let r = pair.g.rank();
    format!("{} {}", render_part(&pair.g, &v[..r], coords), render_part(&pair.ghat, &v[r..], coords))
}

pub fn render_provenance(p: &Provenance) -> String {
    match p {
        Provenance::Pair { lambda, w, w_hat } => {
            format!("lambda=({}) w=[{}] w_hat=[{}]", join(lambda), join(w), join(w_hat))
        }
        Provenance::Dominance(i) => format!("dominance {i}"),
    }
}

pub fn render_cone_text(pair: &EmbeddedPair, c: &ConeReport, coords: Coords) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "pair {} ({} in {}), seed {}", c.pair, c.g, c.ghat, c.seed);
    for st in &c.stats {
        let _ = writeln!(s, "lambda ({}): {} candidates, {} movable", join(&st.lambda), st.candidates, st.movable);
    }
    let _ = writeln!(
        s,
        "inequalities: {} total, {} irredundant, {} redundant, {} undecided candidates",
        c.total_inequalities,
        c.inequalities.len(),
        c.redundant.len(),
        c.unknown_candidates
    );
    let _ = writeln!(s, "rays: {}", c.rays.len());
    for r in &c.rays {
        let m = r.multiplicity.map_or("unverified".into(), |m| format!("multiplicity {m}"));
        let _ = writeln!(s, "  {}  {}", render_weight_pair(pair, &r.ray, coords), m);
    }
    for e in &c.retry_log {
        let _ = writeln!(
            s,
            "retry with {} attempts: {} certified, {} unknown, {} failing rays",
            e.max_attempts, e.newly_certified, e.still_unknown, e.failing_rays
        );
    }
    if let Some(reason) = &c.incomplete {
        let _ = writeln!(s, "incomplete: {reason}");
    }
    s
}

pub fn render_inequalities_text(c: &ConeReport, redundant_too: bool) -> String {
    let mut s = String::new();
    let rows = c.inequalities.iter().map(|r| (r, "")).chain(
        c.redundant.iter().filter(|_| redundant_too).map(|r| (r, " redundant")),
    );
    for (r, tag) in rows {
        let _ = writeln!(s, "{} <= 0  # {}{}", join(&r.coeffs), render_provenance(&r.provenance), tag);
    }
    s
}

pub fn render_saturation_text(pair: &EmbeddedPair, r: &SaturationReport, coords: Coords) -> String {
    let mut s = render_cone_text(pair, &r.cone, coords);
    let _ = writeln!(s, "lattice index {}", r.lattice.index);
    let _ = writeln!(s, "hilbert basis: {} elements", r.hilbert_basis.len());
    for e in &r.hilbert_basis {
        let tag = if e.is_ray { "" } else { " (not a ray)" };
        let _ = writeln!(s, "  {}  multiplicity {}{}", render_weight_pair(pair, &e.element, coords), e.multiplicity, tag);
    }
    let _ = writeln!(s, "hilbert basis equals ray generators: {}", r.hilbert_equals_rays);
    let verdict = match &r.verdict {
        Verdict::Saturated => "saturated".to_string(),
        Verdict::Counterexample(e) => format!("not saturated, witness {}", render_weight_pair(pair, e, coords)),
        Verdict::Incomplete(reason) => format!("incomplete: {reason}"),
    };
    let _ = writeln!(s, "verdict: {verdict}");
    s
}
