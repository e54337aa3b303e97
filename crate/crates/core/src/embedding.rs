//! Embedded pairs `g ⊂ ĝ`: catalog, validation, restriction of characters,
//! tangent weights and the lattice of pairs with trivial central character.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{hnf_rows, in_hnf_lattice, parse_q, q, q_to_string, rank_q, Q};
use crate::chevalley::{build_lie_algebra, generate_root_vectors, proportionality, Element, LieAlgebra, RootImages};
use crate::error::{Error, Result};
use crate::lie::{format_type_list, parse_type_list, RootSystem, Series, SimpleType};

/// Image of one Chevalley generator: a combination of root vectors of `ĝ`.
pub type GeneratorImage = Vec<(Vec<i64>, Q)>;

#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingSpec {
    pub name: String,
    pub g: Vec<SimpleType>,
    pub ghat: Vec<SimpleType>,
    /// Restriction `X(T̂) → X(T)` in fundamental-weight bases, `rank g` rows.
    /// Derived from the generator images when absent.
    pub rho: Option<Vec<Vec<i64>>>,
    pub e: Vec<GeneratorImage>,
    /// Images of the `f_i`; by default the same coefficients on opposite roots.
    pub f: Option<Vec<GeneratorImage>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validation {
    Pass,
    Fail(String),
}

impl Validation {
    pub fn is_pass(&self) -> bool {
        matches!(self, Validation::Pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDescription {
    pub ambient_rank: usize,
    /// Rows generate `ZLR` inside `X(T) x X(T̂)` (Hermite normal form).
    pub basis: Vec<Vec<i64>>,
    pub index: u64,
}

impl LatticeDescription {
    pub fn from_generators(ambient_rank: usize, gens: &[Vec<i64>]) -> Self {
        let basis = hnf_rows(gens);
        let index = if basis.len() < ambient_rank {
            0
        } else {
            basis
                .iter()
                .map(|row| row.iter().find(|&&x| x != 0).map_or(0, |x| x.unsigned_abs()))
                .product()
        };
        LatticeDescription { ambient_rank, basis, index }
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        v.len() == self.ambient_rank && in_hnf_lattice(&self.basis, v)
    }

    /// Sublattice `{x : coeffs·x ≡ 0 mod modulus}`.
    pub fn with_congruence(&self, coeffs: &[i64], modulus: i64) -> Self {
        let n = self.basis.len();
        // rows (c·b_i | e_i) and (m | 0); the HNF rows with leading zero span the kernel
        let mut rows: Vec<Vec<i64>> = self
            .basis
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let mut r = vec![crate::arith::dot(coeffs, b).rem_euclid(modulus)];
                r.extend((0..n).map(|j| i64::from(i == j)));
                r
            })
            .collect();
        let mut last = vec![0; n + 1];
        last[0] = modulus;
        rows.push(last);
        let gens: Vec<Vec<i64>> = hnf_rows(&rows)
            .into_iter()
            .filter(|r| r[0] == 0)
            .map(|r| {
                (0..self.ambient_rank)
                    .map(|k| (0..n).map(|i| r[i + 1] * self.basis[i][k]).sum())
                    .collect()
            })
            .collect();
        LatticeDescription::from_generators(self.ambient_rank, &gens)
    }
}

#[derive(Clone, Debug)]
pub struct EmbeddedPair {
    pub spec: EmbeddingSpec,
    pub g: RootSystem,
    pub ghat: RootSystem,
    pub lie_hat: LieAlgebra,
    /// Root vectors and simple coroots of `g` inside `ĝ`.
    pub g_root_images: RootImages,
    pub rho: Vec<Vec<i64>>,
    /// Nonzero T-weights of `ĝ/g` with multiplicity, sorted.
    pub tangent_weights: Vec<Vec<i64>>,
    pub zero_weights: usize,
}

impl EmbeddedPair {
    pub fn name(&self) -> &str {
        &self.spec.name
    }

    /// `ρ(μ̂)` for a weight of `T̂`.
    pub fn restrict(&self, mu_hat: &[i64]) -> Vec<i64> {
        restrict_with(&self.rho, mu_hat)
    }

    /// `ρ*(λ)`, the image of a coweight of `T` in `Y(T̂)`.
    pub fn embed_coweight(&self, lambda: &[i64]) -> Vec<i64> {
        (0..self.ghat.rank())
            .map(|j| lambda.iter().zip(&self.rho).map(|(l, row)| l * row[j]).sum())
            .collect()
    }

    /// Distinct tangent weights with multiplicities.
    pub fn tangent_weight_counts(&self) -> BTreeMap<Vec<i64>, usize> {
        let mut m = BTreeMap::new();
        for w in &self.tangent_weights {
            *m.entry(w.clone()).or_insert(0) += 1;
        }
        m
    }

    /// `ZLR = {(ν, ν̂) : ν + ρ(ν̂) ∈ L}` with `L` spanned by `ρ` of the simple roots of `Ĝ`.
    pub fn lr_lattice(&self) -> LatticeDescription {
        let r = self.g.rank();
        let rh = self.ghat.rank();
        let mut gens = vec![];
        for j in 0..rh {
            let mut row = vec![0; r + rh];
            for i in 0..r {
                row[i] = -self.rho[i][j];
            }
            row[r + j] = 1;
            gens.push(row);
        }
        let mut l_gens = vec![];
        for j in 0..rh {
            let ell = self.restrict(self.ghat.simple_root_fw(j));
            let mut row = vec![0; r + rh];
            row[..r].copy_from_slice(&ell);
            gens.push(row);
            l_gens.push(ell);
        }
        let basis = hnf_rows(&gens);
        let l_basis = hnf_rows(&l_gens);
        let index = if l_basis.len() < r {
            0
        } else {
            l_basis.iter().enumerate().map(|(i, row)| row[i].unsigned_abs()).product()
        };
        LatticeDescription { ambient_rank: r + rh, basis, index }
    }
}

pub fn restrict_with(rho: &[Vec<i64>], mu_hat: &[i64]) -> Vec<i64> {
    rho.iter().map(|row| crate::arith::dot(row, mu_hat)).collect()
}

fn default_f(e: &[GeneratorImage]) -> Vec<GeneratorImage> {
    e.iter()
        .map(|img| {
            img.iter()
                .map(|(r, c)| (r.iter().map(|x| -x).collect(), c.clone()))
                .collect()
        })
        .collect()
}

fn image_element(l: &LieAlgebra, img: &GeneratorImage) -> Result<Element> {
    let mut v = l.zero();
    for (root, c) in img {
        let idx = l
            .root_system()
            .root_index(root)
            .ok_or_else(|| Error::InvalidEmbedding(format!("{root:?} is not a root")))?;
        v[idx] += c;
    }
    Ok(v)
}

struct Built {
    g: RootSystem,
    ghat: RootSystem,
    lie_hat: LieAlgebra,
    images: RootImages,
    rho: Vec<Vec<i64>>,
}

fn fail<T>(msg: impl Into<String>) -> std::result::Result<T, String> {
    Err(msg.into())
}

fn build(spec: &EmbeddingSpec) -> std::result::Result<Built, String> {
    let g = RootSystem::new(&spec.g).map_err(|e| e.to_string())?;
    let ghat = RootSystem::new(&spec.ghat).map_err(|e| e.to_string())?;
    let r = g.rank();
    if spec.e.len() != r {
        return fail(format!("expected {r} generator images, got {}", spec.e.len()));
    }
    let f_imgs = spec.f.clone().unwrap_or_else(|| default_f(&spec.e));
    if f_imgs.len() != r {
        return fail("wrong number of f images");
    }
    let lie_hat = build_lie_algebra(&ghat);
    let to_el = |img: &GeneratorImage| image_element(&lie_hat, img).map_err(|e| e.to_string());
    let e: Vec<Element> = spec.e.iter().map(to_el).collect::<std::result::Result<_, _>>()?;
    let f: Vec<Element> = f_imgs.iter().map(to_el).collect::<std::result::Result<_, _>>()?;
    let nr = ghat.num_roots();
    for (i, img) in spec.e.iter().enumerate() {
        if img.is_empty() {
            return fail(format!("image of e_{} is zero", i + 1));
        }
        for (root, _) in img {
            if root.iter().any(|&x| x < 0) {
                return fail(format!("image of e_{} uses negative root {root:?}", i + 1));
            }
        }
    }
    // Cartan images and the derived restriction map
    let mut rho = vec![vec![0i64; ghat.rank()]; r];
    let mut h = vec![];
    for i in 0..r {
        let hi = lie_hat.bracket(&e[i], &f[i]);
        if hi[..nr].iter().any(|x| !x.is_zero()) {
            return fail(format!("[e_{0}, f_{0}] is not in the Cartan subalgebra", i + 1));
        }
        for j in 0..ghat.rank() {
            let c = &hi[nr + j];
            if !c.is_integer() {
                return fail(format!("[e_{0}, f_{0}] is not integral", i + 1));
            }
            rho[i][j] = c.to_integer().to_i64().ok_or("coefficient overflow")?;
        }
        h.push(hi);
    }
    if let Some(given) = &spec.rho {
        if given != &rho {
            return fail(format!("restriction map {given:?} disagrees with bracket data {rho:?}"));
        }
    }
    for i in 0..r {
        for j in 0..r {
            let c = g.cartan()[j][i];
            let he = lie_hat.bracket(&h[i], &e[j]);
            let expect: Element = e[j].iter().map(|x| x * q(c)).collect();
            if he != expect {
                return fail(format!("[h_{}, e_{}] != {c} e_{}", i + 1, j + 1, j + 1));
            }
            let hf = lie_hat.bracket(&h[i], &f[j]);
            let expect: Element = f[j].iter().map(|x| x * q(-c)).collect();
            if hf != expect {
                return fail(format!("[h_{}, f_{}] != {} f_{}", i + 1, j + 1, -c, j + 1));
            }
            if i != j && lie_hat.bracket(&e[i], &f[j]).iter().any(|x| !x.is_zero()) {
                return fail(format!("[e_{}, f_{}] != 0", i + 1, j + 1));
            }
        }
        for (root, _) in &spec.e[i] {
            let w = restrict_with(&rho, &ghat.root_to_fw(root));
            if w != g.simple_root_fw(i) {
                return fail(format!("root {root:?} in the image of e_{} restricts to {w:?}", i + 1));
            }
        }
    }
    let images = generate_root_vectors(&g, &lie_hat, &e, &f).map_err(|e| e.to_string())?;
    // closure under the generators
    for i in 0..r {
        for (sign, gen) in [(1i64, &e[i]), (-1, &f[i])] {
            for b in 0..g.num_roots() {
                let br = lie_hat.bracket(gen, &images.roots[b]);
                let mut target = g.root(b).to_vec();
                target[i] += sign;
                let ok = if target.iter().all(|&x| x == 0) {
                    true
                } else if let Some(t) = g.root_index(&target) {
                    br.iter().all(Zero::is_zero) || proportionality(&br, &images.roots[t]).is_some()
                } else {
                    br.iter().all(Zero::is_zero)
                };
                if !ok {
                    return fail(format!("generated algebra is not closed at root {:?}", g.root(b)));
                }
            }
        }
    }
    let mut all = images.roots.clone();
    all.extend(images.coroots.iter().cloned());
    if rank_q(&all) != g.dimension() {
        return fail("image of g has the wrong dimension");
    }
    Ok(Built { g, ghat, lie_hat, images, rho })
}

pub fn validate_embedding(spec: &EmbeddingSpec) -> Validation {
    match build(spec) {
        Ok(_) => Validation::Pass,
        Err(m) => Validation::Fail(m),
    }
}

/// Validate, check the hypothesis on normal subgroups and derive tangent weights.
pub fn embed(spec: EmbeddingSpec) -> Result<EmbeddedPair> {
    let b = build(&spec).map_err(Error::InvalidEmbedding)?;
    check_hypothesis(&b)?;
    let mut counts: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for root in b.ghat.roots() {
        *counts.entry(restrict_with(&b.rho, &b.ghat.root_to_fw(root))).or_insert(0) += 1;
    }
    let zero = vec![0; b.g.rank()];
    *counts.entry(zero.clone()).or_insert(0) += b.ghat.rank() as i64;
    for root in b.g.roots() {
        *counts.entry(b.g.root_to_fw(root)).or_insert(0) -= 1;
    }
    *counts.entry(zero.clone()).or_insert(0) -= b.g.rank() as i64;
    let mut tangent = vec![];
    let mut zero_weights = 0;
    for (w, c) in counts {
        if c < 0 {
            return Err(Error::InvalidEmbedding(format!("weight {w:?} of g missing from ĝ")));
        }
        if w == zero {
            zero_weights = c as usize;
        } else {
            tangent.extend(std::iter::repeat_n(w, c as usize));
        }
    }
    Ok(EmbeddedPair {
        g: b.g,
        ghat: b.ghat,
        lie_hat: b.lie_hat,
        g_root_images: b.images,
        rho: b.rho,
        tangent_weights: tangent,
        zero_weights,
        spec,
    })
}

fn check_hypothesis(b: &Built) -> Result<()> {
    let mut span = b.images.roots.clone();
    span.extend(b.images.coroots.iter().cloned());
    let base = rank_q(&span);
    let mut off = 0;
    for f in b.ghat.factors() {
        let mut ext = span.clone();
        for (idx, root) in b.ghat.roots().iter().enumerate() {
            if root[off..off + f.rank].iter().any(|&x| x != 0) {
                ext.push(b.lie_hat.basis(idx));
            }
        }
        if rank_q(&ext) == base {
            return Err(Error::HypothesisViolated(format!(
                "the simple factor {f} of {} lies inside {}",
                b.ghat.type_name(),
                b.g.type_name()
            )));
        }
        off += f.rank;
    }
    Ok(())
}

fn st(series: Series, rank: usize) -> SimpleType {
    SimpleType { series, rank }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn orbit_images(n_hat: usize, orbits: &[Vec<usize>]) -> Vec<GeneratorImage> {
    orbits
        .iter()
        .map(|o| o.iter().map(|&j| (unit(n_hat, j), q(1))).collect())
        .collect()
}

fn folding(name: String, g: SimpleType, ghat: SimpleType, orbits: &[Vec<usize>]) -> EmbeddingSpec {
    EmbeddingSpec {
        name,
        g: vec![g],
        ghat: vec![ghat],
        rho: None,
        e: orbit_images(ghat.rank, orbits),
        f: None,
    }
}

/// Names accepted by [`builtin_spec`], with their argument placeholders.
pub const CATALOG: &[&str] = &[
    "spin_odd_even(n)",
    "sl3_g2",
    "g2_spin7",
    "spin9_f4",
    "f4_e6",
    "sp_sl(n)",
    "diagonal(type,rank)",
];

/// Split `name(a,b)` or `name:a,b` into the name and its arguments.
pub fn parse_pair_name(s: &str) -> (String, Vec<String>) {
    let s = s.trim();
    let (name, rest) = if let Some(i) = s.find(['(', ':']) {
        (&s[..i], s[i + 1..].trim_end_matches(')'))
    } else {
        (s, "")
    };
    let args = rest
        .split(',')
        .map(|a| a.trim().to_string())
        .filter(|a| !a.is_empty())
        .collect();
    (name.trim().to_lowercase(), args)
}

pub fn builtin_spec(full: &str) -> Result<EmbeddingSpec> {
    let (name, args) = parse_pair_name(full);
    let unknown = || Error::UnknownPair(full.to_string());
    let int_arg = |k: usize| -> Result<usize> {
        args.get(k).and_then(|a| a.parse().ok()).ok_or_else(unknown)
    };
    let canonical = |n: &str| if args.is_empty() { n.to_string() } else { format!("{n}({})", args.join(",")) };
    let spec = match name.as_str() {
        "sl3_g2" if args.is_empty() => EmbeddingSpec {
            name: canonical("sl3_g2"),
            g: vec![st(Series::A, 2)],
            ghat: vec![st(Series::G, 2)],
            rho: Some(vec![vec![0, 1], vec![1, 1]]),
            e: vec![vec![(vec![0, 1], q(1))], vec![(vec![3, 1], q(1))]],
            f: None,
        },
        "g2_spin7" if args.is_empty() => EmbeddingSpec {
            name: canonical("g2_spin7"),
            g: vec![st(Series::G, 2)],
            ghat: vec![st(Series::B, 3)],
            rho: Some(vec![vec![1, 0, 1], vec![0, 1, 0]]),
            e: vec![
                vec![(vec![1, 0, 0], q(1)), (vec![0, 0, 1], q(1))],
                vec![(vec![0, 1, 0], q(1))],
            ],
            f: None,
        },
        "spin9_f4" if args.is_empty() => EmbeddingSpec {
            name: canonical("spin9_f4"),
            g: vec![st(Series::B, 4)],
            ghat: vec![st(Series::F, 4)],
            rho: None,
            e: vec![
                vec![(vec![0, 1, 2, 2], q(1))],
                vec![(vec![1, 0, 0, 0], q(1))],
                vec![(vec![0, 1, 0, 0], q(1))],
                vec![(vec![0, 0, 1, 0], q(1))],
            ],
            f: None,
        },
        "f4_e6" if args.is_empty() => folding(
            canonical("f4_e6"),
            st(Series::F, 4),
            st(Series::E, 6),
            &[vec![1], vec![3], vec![2, 4], vec![0, 5]],
        ),
        "sp_sl" => {
            let n = int_arg(0)?;
            if n < 1 || args.len() != 1 {
                return Err(unknown());
            }
            let orbits: Vec<Vec<usize>> = (0..n)
                .map(|i| if i == n - 1 { vec![i] } else { vec![i, 2 * n - 2 - i] })
                .collect();
            folding(canonical("sp_sl"), st(Series::C, n), st(Series::A, 2 * n - 1), &orbits)
        }
        "spin_odd_even" => {
            let n = int_arg(0)?;
            if n < 2 || args.len() != 1 {
                return Err(unknown());
            }
            let mut orbits: Vec<Vec<usize>> = (0..n - 2).map(|i| vec![i]).collect();
            orbits.push(vec![n - 2, n - 1]);
            folding(canonical("spin_odd_even"), st(Series::B, n - 1), st(Series::D, n), &orbits)
        }
        "diagonal" => {
            if args.len() != 2 {
                return Err(unknown());
            }
            let t: SimpleType = format!("{}{}", args[0], args[1]).parse().map_err(|_| unknown())?;
            let r = t.rank;
            let e = (0..r)
                .map(|i| vec![(unit(2 * r, i), q(1)), (unit(2 * r, i + r), q(1))])
                .collect();
            EmbeddingSpec {
                name: format!("diagonal({},{})", t.series.letter(), t.rank),
                g: vec![t],
                ghat: vec![t, t],
                rho: None,
                e,
                f: None,
            }
        }
        _ => return Err(unknown()),
    };
    Ok(spec)
}

pub fn builtin_pair(name: &str) -> Result<EmbeddedPair> {
    embed(builtin_spec(name)?)
}

fn format_image(img: &GeneratorImage) -> String {
    img.iter()
        .map(|(r, c)| {
            let coords: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            format!("{}:{}", q_to_string(c), coords.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl EmbeddingSpec {
    /// Text form:
    ///
    /// ```text
    /// name sl3_g2
    /// g A2
    /// ghat G2
    /// rho
    /// 0 1
    /// 1 1
    /// e 1 1:0,1
    /// e 2 1:3,1
    /// ```
    ///
    /// Each `e`/`f` line lists `coefficient:root` terms, roots in simple-root
    /// coordinates of `ĝ`. The `rho` block and `f` lines are optional.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "name {}", self.name);
        let _ = writeln!(s, "g {}", format_type_list(&self.g));
        let _ = writeln!(s, "ghat {}", format_type_list(&self.ghat));
        if let Some(rho) = &self.rho {
            let _ = writeln!(s, "rho");
            for row in rho {
                let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(s, "{}", r.join(" "));
            }
        }
        for (i, img) in self.e.iter().enumerate() {
            let _ = writeln!(s, "e {} {}", i + 1, format_image(img));
        }
        if let Some(f) = &self.f {
            for (i, img) in f.iter().enumerate() {
                let _ = writeln!(s, "f {} {}", i + 1, format_image(img));
            }
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let perr = |m: String| Error::Parse(m);
        let mut name = None;
        let mut g = None;
        let mut ghat = None;
        let mut rho: Option<Vec<Vec<i64>>> = None;
        let mut in_rho = false;
        let mut e: BTreeMap<usize, GeneratorImage> = BTreeMap::new();
        let mut f: BTreeMap<usize, GeneratorImage> = BTreeMap::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            let key = words.next().unwrap();
            match key {
                "name" => {
                    name = Some(words.collect::<Vec<_>>().join(" "));
                    in_rho = false;
                }
                "g" => {
                    g = Some(parse_type_list(&words.collect::<String>())?);
                    in_rho = false;
                }
                "ghat" => {
                    ghat = Some(parse_type_list(&words.collect::<String>())?);
                    in_rho = false;
                }
                "rho" => {
                    rho = Some(vec![]);
                    in_rho = true;
                }
                "e" | "f" => {
                    in_rho = false;
                    let idx: usize = words
                        .next()
                        .and_then(|w| w.parse().ok())
                        .filter(|&i: &usize| i >= 1)
                        .ok_or_else(|| perr(format!("line {}: bad generator index", ln + 1)))?;
                    let mut img = vec![];
                    for term in words {
                        let (c, r) = term
                            .split_once(':')
                            .ok_or_else(|| perr(format!("line {}: expected coeff:root", ln + 1)))?;
                        let c = parse_q(c).ok_or_else(|| perr(format!("line {}: bad coefficient", ln + 1)))?;
                        let root = r
                            .split(',')
                            .map(|x| x.trim().parse::<i64>())
                            .collect::<std::result::Result<Vec<_>, _>>()
                            .map_err(|_| perr(format!("line {}: bad root", ln + 1)))?;
                        img.push((root, c));
                    }
                    let target = if key == "e" { &mut e } else { &mut f };
                    target.insert(idx - 1, img);
                }
                _ if in_rho => {
                    let row = line
                        .split_whitespace()
                        .map(|x| x.parse::<i64>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(|_| perr(format!("line {}: bad rho row", ln + 1)))?;
                    rho.as_mut().unwrap().push(row);
                }
                other => return Err(perr(format!("line {}: unknown key {other}", ln + 1))),
            }
        }
        let contiguous = |m: &BTreeMap<usize, GeneratorImage>| m.keys().copied().eq(0..m.len());
        if !contiguous(&e) || !contiguous(&f) {
            return Err(perr("generator indices must be 1..rank".into()));
        }
        Ok(EmbeddingSpec {
            name: name.ok_or_else(|| perr("missing name".into()))?,
            g: g.ok_or_else(|| perr("missing g".into()))?,
            ghat: ghat.ok_or_else(|| perr("missing ghat".into()))?,
            rho,
            e: e.into_values().collect(),
            f: if f.is_empty() { None } else { Some(f.into_values().collect()) },
        })
    }
}
