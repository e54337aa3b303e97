//! Characters by Freudenthal's recursion and branching multiplicities through
//! the restriction map.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::Q64;
use crate::embedding::EmbeddedPair;
use crate::error::{Error, Result};
use crate::lie::{dual_weight, enumerate_weyl, weyl_orbit, RootSystem, Weight, WeylElement};

/// Environment variable naming the default character cache directory.
pub const CACHE_ENV: &str = "SATCONE_CACHE_DIR";
const CACHE_HEADER: &str = "satcone-character/1";

/// Character of an irreducible module, one entry per dominant weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantCharacter {
    pub highest_weight: Weight,
    pub mults: BTreeMap<Weight, u64>,
}

impl DominantCharacter {
    pub fn mult(&self, mu: &[i64]) -> u64 {
        self.mults.get(mu).copied().unwrap_or(0)
    }

    /// Sum of multiplicities times orbit sizes.
    pub fn dimension(&self, rs: &RootSystem) -> u64 {
        self.mults.iter().map(|(mu, m)| m * weyl_orbit(rs, mu).len() as u64).sum()
    }
}

/// Weyl dimension formula.
pub fn weyl_dimension(rs: &RootSystem, lambda: &[i64]) -> u64 {
    let mut num = num_bigint::BigInt::from(1);
    let mut den = num_bigint::BigInt::from(1);
    for beta in rs.positive_roots() {
        let c = rs.coroot(beta);
        let top: i64 = c.iter().zip(lambda).map(|(ci, li)| ci * (li + 1)).sum();
        let bottom: i64 = c.iter().sum();
        num *= top;
        den *= bottom;
    }
    use num_traits::ToPrimitive;
    (num / den).to_u64().expect("dimension fits in u64")
}

pub fn dominant_character(rs: &RootSystem, lambda: &[i64]) -> Result<DominantCharacter> {
    if lambda.len() != rs.rank() {
        return Err(Error::DimensionError { expected: rs.rank(), got: lambda.len() });
    }
    if !rs.is_dominant_weight(lambda) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    let pos: Vec<Vec<i64>> = rs.positive_roots().iter().map(|r| rs.root_to_fw(r)).collect();

    // dominant weights below lambda, by depth
    let mut depth: HashMap<Weight, usize> = HashMap::from([(lambda.to_vec(), 0)]);
    let heights: Vec<usize> = rs.positive_roots().iter().map(|r| r.iter().sum::<i64>() as usize).collect();
    let mut frontier: BTreeMap<usize, Vec<Weight>> = BTreeMap::from([(0, vec![lambda.to_vec()])]);
    while let Some((d, ws)) = frontier.pop_first() {
        for mu in ws {
            for (a, h) in pos.iter().zip(&heights) {
                let nu: Weight = mu.iter().zip(a).map(|(x, y)| x - y).collect();
                if nu.iter().all(|&x| x >= 0) && !depth.contains_key(&nu) {
                    depth.insert(nu.clone(), d + h);
                    frontier.entry(d + h).or_default().push(nu);
                }
            }
        }
    }
    let mut order: Vec<(usize, Weight)> = depth.into_iter().map(|(w, d)| (d, w)).collect();
    order.sort();

    let shifted = |mu: &[i64]| -> Weight { mu.iter().map(|x| x + 1).collect() };
    let lr = shifted(lambda);
    let top = rs.weight_form(&lr, &lr);
    let forms: Vec<Q64> = pos.iter().map(|a| rs.weight_form(a, a)).collect();

    let mut mults: BTreeMap<Weight, u64> = BTreeMap::new();
    mults.insert(lambda.to_vec(), 1);
    let dominant_of = |mu: &mut Weight| {
        while let Some(i) = mu.iter().position(|&x| x < 0) {
            crate::lie::reflect_weight(rs, i, mu);
        }
    };
    for (_, mu) in order.into_iter().skip(1) {
        let mut sum = Q64::zero();
        for (a, aa) in pos.iter().zip(&forms) {
            let mu_a = rs.weight_form(&mu, a);
            let mut k = 1;
            loop {
                let mut nu: Weight = mu.iter().zip(a).map(|(x, y)| x + k * y).collect();
                let pair = mu_a + *aa * k;
                dominant_of(&mut nu);
                let m = mults.get(&nu).copied().unwrap_or(0);
                if m == 0 {
                    break;
                }
                sum += pair * Q64::from(m as i64);
                k += 1;
            }
        }
        let mr = shifted(&mu);
        let den = top - rs.weight_form(&mr, &mr);
        let m = sum * 2 / den;
        debug_assert!(m.is_integer());
        let m = *m.numer();
        if m > 0 {
            mults.insert(mu, m as u64);
        }
    }
    Ok(DominantCharacter { highest_weight: lambda.to_vec(), mults })
}

/// Memory and optional on-disk cache of characters keyed by type and highest
/// weight.
#[derive(Debug, Default)]
pub struct CharacterCache {
    dir: Option<PathBuf>,
    mem: Mutex<HashMap<(String, Weight), Arc<DominantCharacter>>>,
}

impl CharacterCache {
    pub fn in_memory() -> Self {
        CharacterCache::default()
    }

    pub fn on_disk(dir: impl Into<PathBuf>) -> Self {
        CharacterCache { dir: Some(dir.into()), mem: Mutex::default() }
    }

    /// Disk cache at the directory named by [`CACHE_ENV`], if set.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_ENV) {
            Some(d) if !d.is_empty() => CharacterCache::on_disk(d),
            _ => CharacterCache::in_memory(),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn get(&self, rs: &RootSystem, lambda: &[i64]) -> Result<Arc<DominantCharacter>> {
        let key = (rs.type_name(), lambda.to_vec());
        if let Some(c) = self.mem.lock().unwrap().get(&key) {
            return Ok(c.clone());
        }
        let path = self.dir.as_ref().map(|d| d.join(cache_file_name(&key.0, lambda)));
        let loaded = path
            .as_ref()
            .filter(|p| p.exists())
            .and_then(|p| fs::read_to_string(p).ok())
            .and_then(|s| parse_character(&s, &key.0).ok());
        let ch = match loaded {
            Some(c) if c.highest_weight == lambda => c,
            _ => {
                let c = dominant_character(rs, lambda)?;
                if let Some(p) = &path {
                    write_atomic(p, &format_character(&c, &key.0))?;
                }
                c
            }
        };
        let ch = Arc::new(ch);
        Ok(self.mem.lock().unwrap().entry(key).or_insert(ch).clone())
    }
}

fn cache_file_name(type_name: &str, lambda: &[i64]) -> String {
    let w: Vec<String> = lambda.iter().map(i64::to_string).collect();
    format!("{}_{}.chr", type_name, w.join("_"))
}

fn write_atomic(path: &Path, text: &str) -> Result<()> {
    if let Some(d) = path.parent() {
        fs::create_dir_all(d)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Text form: header line, `type` line, `highest` line, then
/// `weight : multiplicity` per dominant weight.
pub fn format_character(c: &DominantCharacter, type_name: &str) -> String {
    let join = |w: &[i64]| w.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
    let mut s = format!("{CACHE_HEADER}\ntype {type_name}\nhighest {}\n", join(&c.highest_weight));
    for (mu, m) in &c.mults {
        s.push_str(&format!("{} : {m}\n", join(mu)));
    }
    s
}

pub fn parse_character(text: &str, type_name: &str) -> Result<DominantCharacter> {
    let bad = |what: &str| Error::Parse(format!("character file: {what}"));
    let ints = |s: &str| -> Result<Vec<i64>> {
        s.split_whitespace().map(|t| t.parse().map_err(|_| bad("integer"))).collect()
    };
    let mut lines = text.lines();
    if lines.next() != Some(CACHE_HEADER) {
        return Err(bad("header"));
    }
    if lines.next().and_then(|l| l.strip_prefix("type ")) != Some(type_name) {
        return Err(bad("type"));
    }
    let highest = ints(lines.next().and_then(|l| l.strip_prefix("highest ")).ok_or_else(|| bad("highest"))?)?;
    let mut mults = BTreeMap::new();
    for l in lines {
        let (w, m) = l.split_once(':').ok_or_else(|| bad("entry"))?;
        mults.insert(ints(w)?, m.trim().parse().map_err(|_| bad("multiplicity"))?);
    }
    Ok(DominantCharacter { highest_weight: highest, mults })
}

/// Branching multiplicities for one embedded pair.
pub struct Brancher<'a> {
    pair: &'a EmbeddedPair,
    weyl: Vec<(i64, WeylElement)>,
    cache: Arc<CharacterCache>,
}

impl<'a> Brancher<'a> {
    pub fn new(pair: &'a EmbeddedPair, cache: Arc<CharacterCache>) -> Self {
        let weyl = enumerate_weyl(&pair.g).into_iter().map(|w| (w.determinant_sign(), w)).collect();
        Brancher { pair, weyl, cache }
    }

    fn check(&self, nu: &[i64], nu_hat: &[i64]) -> Result<()> {
        let (g, gh) = (&self.pair.g, &self.pair.ghat);
        if nu.len() != g.rank() {
            return Err(Error::DimensionError { expected: g.rank(), got: nu.len() });
        }
        if nu_hat.len() != gh.rank() {
            return Err(Error::DimensionError { expected: gh.rank(), got: nu_hat.len() });
        }
        if !g.is_dominant_weight(nu) {
            return Err(Error::NotDominant(nu.to_vec()));
        }
        if !gh.is_dominant_weight(nu_hat) {
            return Err(Error::NotDominant(nu_hat.to_vec()));
        }
        Ok(())
    }

    /// `D(μ)` for every `μ` in `wanted`, or for the whole support when `None`.
    fn restricted(&self, nu_hat: &[i64], wanted: Option<&HashSet<Weight>>) -> Result<HashMap<Weight, u64>> {
        let ch = self.cache.get(&self.pair.ghat, nu_hat)?;
        let parts: Vec<HashMap<Weight, u64>> = ch
            .mults
            .par_iter()
            .map(|(mu_hat, m)| {
                let mut out: HashMap<Weight, u64> = HashMap::new();
                for x in weyl_orbit(&self.pair.ghat, mu_hat) {
                    let r = self.pair.restrict(&x);
                    if wanted.is_none_or(|w| w.contains(&r)) {
                        *out.entry(r).or_default() += m;
                    }
                }
                out
            })
            .collect();
        let mut total: HashMap<Weight, u64> = HashMap::new();
        for p in parts {
            for (k, v) in p {
                *total.entry(k).or_default() += v;
            }
        }
        Ok(total)
    }

    fn alternating(&self, d: &HashMap<Weight, u64>, sigma: &[i64]) -> i64 {
        let shifted: Weight = sigma.iter().map(|x| x + 1).collect();
        self.weyl
            .iter()
            .map(|(s, w)| {
                let mu: Weight = w.act_weight(&shifted).iter().map(|x| x - 1).collect();
                s * d.get(&mu).copied().unwrap_or(0) as i64
            })
            .sum()
    }

    fn targets(&self, sigma: &[i64]) -> HashSet<Weight> {
        let shifted: Weight = sigma.iter().map(|x| x + 1).collect();
        self.weyl
            .iter()
            .map(|(_, w)| w.act_weight(&shifted).iter().map(|x| x - 1).collect())
            .collect()
    }

    /// `dim Hom_G(V(ν)*, V̂(ν̂))`.
    pub fn multiplicity(&self, nu: &[i64], nu_hat: &[i64]) -> Result<u64> {
        self.check(nu, nu_hat)?;
        let sigma = dual_weight(&self.pair.g, nu);
        let d = self.restricted(nu_hat, Some(&self.targets(&sigma)))?;
        let m = self.alternating(&d, &sigma);
        debug_assert!(m >= 0);
        Ok(m.max(0) as u64)
    }

    /// Decomposition of `V̂(ν̂)` restricted to `G`: highest weight to multiplicity.
    pub fn decompose(&self, nu_hat: &[i64]) -> Result<BTreeMap<Weight, u64>> {
        self.check(&vec![0; self.pair.g.rank()], nu_hat)?;
        let d = self.restricted(nu_hat, None)?;
        let mut out = BTreeMap::new();
        for mu in d.keys().filter(|m| m.iter().all(|&x| x >= 0)) {
            let m = self.alternating(&d, mu);
            if m > 0 {
                out.insert(mu.clone(), m as u64);
            }
        }
        Ok(out)
    }

    pub fn in_lr(&self, nu: &[i64], nu_hat: &[i64]) -> Result<bool> {
        let m = self.multiplicity(nu, nu_hat)?;
        if m > 0 {
            let mut v = nu.to_vec();
            v.extend_from_slice(nu_hat);
            assert!(self.pair.lr_lattice().contains(&v), "LR member outside the lattice");
        }
        Ok(m > 0)
    }
}

pub fn branch_multiplicity(pair: &EmbeddedPair, nu: &[i64], nu_hat: &[i64]) -> Result<u64> {
    Brancher::new(pair, Arc::new(CharacterCache::in_memory())).multiplicity(nu, nu_hat)
}

pub fn in_lr(pair: &EmbeddedPair, nu: &[i64], nu_hat: &[i64]) -> Result<bool> {
    Brancher::new(pair, Arc::new(CharacterCache::in_memory())).in_lr(nu, nu_hat)
}
