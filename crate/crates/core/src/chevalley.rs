//! Lie algebras in a Chevalley basis with integer structure constants.
//!
//! Simply-laced algebras use the Frenkel–Kac sign cocycle. The others are
//! realised as fixed points of a diagram automorphism of a simply-laced
//! algebra, and their structure constants are read off in that model.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::arith::{q, Q};
use crate::error::{Error, Result};
use crate::lie::{RootSystem, Series, SimpleType};

pub type Element = Vec<Q>;

/// Basis: `e_alpha` for every root (indexed as in `RootSystem::roots`), then
/// the simple coroots `h_1, ..., h_r`.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    rs: RootSystem,
    sum: Vec<Vec<Option<usize>>>,
    n: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
}

/// Images in an ambient algebra of all root vectors and simple coroots of a
/// smaller algebra, normalised as a Chevalley basis.
#[derive(Clone, Debug)]
pub struct RootImages {
    pub roots: Vec<Element>,
    pub coroots: Vec<Element>,
}

impl LieAlgebra {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.rs.num_roots() + self.rs.rank()
    }

    pub fn num_roots(&self) -> usize {
        self.rs.num_roots()
    }

    pub fn cartan_index(&self, i: usize) -> usize {
        self.rs.num_roots() + i
    }

    /// `N_{a,b}` with `[e_a, e_b] = N_{a,b} e_{a+b}`; zero when `a+b` is not a root.
    pub fn structure_constant(&self, a: usize, b: usize) -> i64 {
        self.n[a][b]
    }

    pub fn zero(&self) -> Element {
        vec![Q::zero(); self.dim()]
    }

    pub fn basis(&self, i: usize) -> Element {
        let mut v = self.zero();
        v[i] = Q::one();
        v
    }

    /// Element `h` for a coweight given in simple-coroot coordinates.
    pub fn cartan_element(&self, coweight: &[i64]) -> Element {
        let mut v = self.zero();
        for (i, &c) in coweight.iter().enumerate() {
            v[self.cartan_index(i)] = q(c);
        }
        v
    }

    /// Bracket of two basis vectors as a sparse integer combination.
    pub fn bracket_basis(&self, a: usize, b: usize) -> Vec<(usize, i64)> {
        let nr = self.rs.num_roots();
        match (a < nr, b < nr) {
            (true, true) => {
                if let Some(c) = self.sum[a][b] {
                    vec![(c, self.n[a][b])]
                } else if self.rs.negate_index(a) == b {
                    self.coroots[a]
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(i, &c)| (nr + i, c))
                        .collect()
                } else {
                    vec![]
                }
            }
            (false, true) => {
                let c = self.rs.root_pair_coroot(self.rs.root(b), a - nr);
                if c == 0 {
                    vec![]
                } else {
                    vec![(b, c)]
                }
            }
            (true, false) => {
                let c = self.rs.root_pair_coroot(self.rs.root(a), b - nr);
                if c == 0 {
                    vec![]
                } else {
                    vec![(a, -c)]
                }
            }
            (false, false) => vec![],
        }
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Element {
        let mut out = self.zero();
        let ys: Vec<usize> = (0..y.len()).filter(|&j| !y[j].is_zero()).collect();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &j in &ys {
                for (k, c) in self.bracket_basis(i, j) {
                    out[k] += xi * &y[j] * q(c);
                }
            }
        }
        out
    }

    /// `ad(e_gamma)(v)`.
    pub fn ad_root(&self, gamma: usize, v: &[Q]) -> Element {
        let mut out = self.zero();
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (k, c) in self.bracket_basis(gamma, j) {
                out[k] += vj * q(c);
            }
        }
        out
    }

    /// `exp(ad t e_gamma)(v)`, a finite sum since `ad e_gamma` is nilpotent.
    pub fn exp_apply(&self, gamma: usize, t: &Q, v: &[Q]) -> Element {
        let mut acc = v.to_vec();
        let mut term = v.to_vec();
        let mut n = 1i64;
        loop {
            term = self.ad_root(gamma, &term);
            if term.iter().all(Zero::is_zero) {
                break;
            }
            let f = t / q(n);
            for x in term.iter_mut() {
                *x *= &f;
            }
            for (a, x) in acc.iter_mut().zip(&term) {
                *a += x;
            }
            n += 1;
        }
        acc
    }

    pub fn adjoint_exp(&self, gamma: usize, t: Q) -> AdjointOperator {
        AdjointOperator { factors: vec![(gamma, t)], torus: None }
    }
}

/// Product of root exponentials, optionally preceded by a torus element.
///
/// The operator is `torus * exp(ad t_1 e_1) * ... * exp(ad t_m e_m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AdjointOperator {
    pub factors: Vec<(usize, Q)>,
    /// Value of the torus element on each simple root.
    pub torus: Option<Vec<Q>>,
}

impl AdjointOperator {
    pub fn identity() -> Self {
        AdjointOperator { factors: vec![], torus: None }
    }

    pub fn is_unipotent(&self) -> bool {
        self.torus.is_none()
    }

    pub fn compose(&self, other: &AdjointOperator) -> AdjointOperator {
        assert!(other.torus.is_none(), "right factor must be unipotent");
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        AdjointOperator { factors, torus: self.torus.clone() }
    }

    pub fn apply(&self, l: &LieAlgebra, v: &[Q]) -> Element {
        let mut x = v.to_vec();
        for (g, t) in self.factors.iter().rev() {
            x = l.exp_apply(*g, t, &x);
        }
        if let Some(torus) = &self.torus {
            for (i, xi) in x.iter_mut().enumerate().take(l.num_roots()) {
                if !xi.is_zero() {
                    *xi *= torus_character(torus, l.root_system().root(i));
                }
            }
        }
        x
    }

    /// Dense matrix; column `j` is the image of basis vector `j`.
    pub fn matrix(&self, l: &LieAlgebra) -> Vec<Vec<Q>> {
        let d = l.dim();
        let cols: Vec<Element> = (0..d).map(|j| self.apply(l, &l.basis(j))).collect();
        (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect()
    }
}

fn torus_character(values: &[Q], root: &[i64]) -> Q {
    let mut r = Q::one();
    for (v, &a) in values.iter().zip(root) {
        if a > 0 {
            for _ in 0..a {
                r *= v;
            }
        } else {
            for _ in 0..-a {
                r /= v;
            }
        }
    }
    r
}

/// Roots `gamma` with `<lambda, gamma> = 0`, negative ones first.
pub fn levi_roots(rs: &RootSystem, lambda: &[i64]) -> Vec<usize> {
    let mut neg = vec![];
    let mut pos = vec![];
    for (i, r) in rs.roots().iter().enumerate() {
        if rs.pair_root(lambda, r) == 0 {
            if rs.is_positive(i) {
                pos.push(i);
            } else {
                neg.push(i);
            }
        }
    }
    neg.extend(pos);
    neg
}

/// Unipotent element of the Levi subgroup of `lambda` with coefficients in
/// `{1, ..., 9}` drawn from a generator seeded with `seed`.
pub fn random_levi_element(l: &LieAlgebra, lambda: &[i64], seed: u64) -> AdjointOperator {
    let mut rng = SplitMix64::seed_from_u64(seed);
    let factors = levi_roots(l.root_system(), lambda)
        .into_iter()
        .map(|g| (g, q(rng.gen_range(1..=9))))
        .collect();
    AdjointOperator { factors, torus: None }
}

/// Torus element with values in `{2, ..., 9}` on the simple roots.
pub fn random_torus_element(l: &LieAlgebra, seed: u64) -> AdjointOperator {
    let mut rng = SplitMix64::seed_from_u64(seed);
    let torus = (0..l.root_system().rank())
        .map(|_| q(rng.gen_range(2..=9)))
        .collect();
    AdjointOperator { factors: vec![], torus: Some(torus) }
}

pub fn build_lie_algebra(rs: &RootSystem) -> LieAlgebra {
    let factors = rs.factors();
    if factors.len() == 1 {
        return build_simple(rs);
    }
    let parts: Vec<LieAlgebra> = factors
        .iter()
        .map(|f| build_simple(&RootSystem::new(&[*f]).expect("valid factor")))
        .collect();
    let nr = rs.num_roots();
    let mut n = vec![vec![0i64; nr]; nr];
    let mut offsets = vec![];
    let mut off = 0;
    for f in factors {
        offsets.push(off);
        off += f.rank;
    }
    let locate = |root: &[i64]| -> (usize, usize) {
        for (fi, f) in factors.iter().enumerate() {
            let slice = &root[offsets[fi]..offsets[fi] + f.rank];
            if slice.iter().any(|&x| x != 0) {
                let idx = parts[fi].rs.root_index(slice).expect("factor root");
                return (fi, idx);
            }
        }
        unreachable!("zero root")
    };
    let sum = sum_table(rs);
    for a in 0..nr {
        for b in 0..nr {
            if sum[a][b].is_some() {
                let (fa, ia) = locate(rs.root(a));
                let (_, ib) = locate(rs.root(b));
                n[a][b] = parts[fa].n[ia][ib];
            }
        }
    }
    let coroots = rs.roots().iter().map(|r| rs.coroot(r)).collect();
    LieAlgebra { rs: rs.clone(), sum, n, coroots }
}

fn sum_table(rs: &RootSystem) -> Vec<Vec<Option<usize>>> {
    let nr = rs.num_roots();
    (0..nr)
        .map(|a| {
            (0..nr)
                .map(|b| {
                    let s: Vec<i64> = rs.root(a).iter().zip(rs.root(b)).map(|(x, y)| x + y).collect();
                    rs.root_index(&s)
                })
                .collect()
        })
        .collect()
}

fn build_simple(rs: &RootSystem) -> LieAlgebra {
    let f = rs.factors()[0];
    if f.is_simply_laced() {
        return frenkel_kac(rs);
    }
    let (ambient, orbits): (SimpleType, Vec<Vec<usize>>) = match f.series {
        Series::B => {
            let n = f.rank;
            let mut o: Vec<Vec<usize>> = (0..n - 1).map(|i| vec![i]).collect();
            o.push(vec![n - 1, n]);
            (SimpleType { series: Series::D, rank: n + 1 }, o)
        }
        Series::C => {
            let n = f.rank;
            let o = (0..n)
                .map(|i| if i == n - 1 { vec![i] } else { vec![i, 2 * n - 2 - i] })
                .collect();
            (SimpleType { series: Series::A, rank: 2 * n - 1 }, o)
        }
        Series::F => (
            SimpleType { series: Series::E, rank: 6 },
            vec![vec![1], vec![3], vec![2, 4], vec![0, 5]],
        ),
        Series::G => (
            SimpleType { series: Series::D, rank: 4 },
            vec![vec![0, 2, 3], vec![1]],
        ),
        _ => unreachable!("simply-laced handled above"),
    };
    let amb_rs = RootSystem::new(&[ambient]).expect("valid ambient type");
    let amb = frenkel_kac(&amb_rs);
    let mut e = vec![];
    let mut fgen = vec![];
    for orbit in &orbits {
        let mut x = amb.zero();
        let mut y = amb.zero();
        for &j in orbit {
            x[amb_rs.simple_root_index(j)] = Q::one();
            y[amb_rs.negate_index(amb_rs.simple_root_index(j))] = Q::one();
        }
        e.push(x);
        fgen.push(y);
    }
    let images = generate_root_vectors(rs, &amb, &e, &fgen).expect("folding yields a Chevalley basis");
    from_images(rs, &amb, &images)
}

/// Structure constants of `rs` read off from root vectors inside `amb`.
fn from_images(rs: &RootSystem, amb: &LieAlgebra, images: &RootImages) -> LieAlgebra {
    let nr = rs.num_roots();
    let sum = sum_table(rs);
    let mut n = vec![vec![0i64; nr]; nr];
    for a in 0..nr {
        for b in 0..nr {
            if let Some(c) = sum[a][b] {
                let br = amb.bracket(&images.roots[a], &images.roots[b]);
                let ratio = proportionality(&br, &images.roots[c]).expect("bracket lies in root space");
                assert!(ratio.is_integer());
                n[a][b] = num_traits::ToPrimitive::to_i64(&ratio.to_integer()).unwrap();
            }
        }
    }
    let coroots = rs.roots().iter().map(|r| rs.coroot(r)).collect();
    LieAlgebra { rs: rs.clone(), sum, n, coroots }
}

/// `c` with `x = c y`, if it exists.
pub fn proportionality(x: &[Q], y: &[Q]) -> Option<Q> {
    let k = y.iter().position(|v| !v.is_zero())?;
    let c = &x[k] / &y[k];
    x.iter()
        .zip(y)
        .all(|(a, b)| *a == &c * b)
        .then_some(c)
}

fn frenkel_kac(rs: &RootSystem) -> LieAlgebra {
    let r = rs.rank();
    let c = rs.cartan();
    let odd = |a: &[i64], b: &[i64]| -> bool {
        let mut s = 0i64;
        for i in 0..r {
            for j in 0..r {
                if i == j || (i < j && c[i][j] == -1) {
                    s += a[i] * b[j];
                }
            }
        }
        s.rem_euclid(2) == 1
    };
    let nr = rs.num_roots();
    let sum = sum_table(rs);
    let sign = |i: usize| if rs.is_positive(i) { 1 } else { -1 };
    let mut n = vec![vec![0i64; nr]; nr];
    for a in 0..nr {
        for b in 0..nr {
            if let Some(s) = sum[a][b] {
                let eps = if odd(rs.root(a), rs.root(b)) { -1 } else { 1 };
                n[a][b] = sign(a) * sign(b) * sign(s) * eps;
            }
        }
    }
    let coroots = rs.roots().iter().map(|x| rs.coroot(x)).collect();
    LieAlgebra { rs: rs.clone(), sum, n, coroots }
}

/// Root vectors of `g` inside `amb` generated from images of its Chevalley
/// generators, normalised so that `[x_gamma, x_{-gamma}] = h_gamma`.
pub fn generate_root_vectors(
    g: &RootSystem,
    amb: &LieAlgebra,
    e: &[Element],
    f: &[Element],
) -> Result<RootImages> {
    let r = g.rank();
    if e.len() != r || f.len() != r {
        return Err(Error::DimensionError { expected: r, got: e.len().min(f.len()) });
    }
    let coroots: Vec<Element> = (0..r).map(|i| amb.bracket(&e[i], &f[i])).collect();
    let h_of = |coroot: &[i64]| -> Element {
        let mut v = amb.zero();
        for (i, &c) in coroot.iter().enumerate() {
            if c != 0 {
                for (x, y) in v.iter_mut().zip(&coroots[i]) {
                    *x += y * q(c);
                }
            }
        }
        v
    };
    let np = g.num_positive_roots();
    let mut roots: Vec<Option<Element>> = vec![None; g.num_roots()];
    for gi in 0..np {
        let gamma = g.root(gi).to_vec();
        let neg = g.negate_index(gi);
        if let Some(i) = (0..r).find(|&i| {
            let mut v = gamma.clone();
            v[i] = 1 - v[i];
            v.iter().all(|&x| x == 0)
        }) {
            roots[gi] = Some(e[i].clone());
            roots[neg] = Some(f[i].clone());
            continue;
        }
        let (i, beta) = (0..r)
            .find_map(|i| {
                let mut b = gamma.clone();
                b[i] -= 1;
                g.root_index(&b).map(|bi| (i, bi))
            })
            .expect("every non-simple positive root has a predecessor");
        let mut p = 0i64;
        let mut probe = g.root(beta).to_vec();
        loop {
            probe[i] -= 1;
            if g.root_index(&probe).is_some() {
                p += 1;
            } else {
                break;
            }
        }
        let div = q(p + 1);
        let x: Element = amb
            .bracket(&e[i], roots[beta].as_ref().unwrap())
            .into_iter()
            .map(|v| v / &div)
            .collect();
        let y: Element = amb
            .bracket(&f[i], roots[g.negate_index(beta)].as_ref().unwrap())
            .into_iter()
            .map(|v| v / &div)
            .collect();
        let target = h_of(&g.coroot(&gamma));
        let got = amb.bracket(&x, &y);
        let c = proportionality(&got, &target).filter(|c| c.abs() == Q::one()).ok_or_else(|| {
            Error::InvalidEmbedding(format!("root vector for {gamma:?} is not normalisable"))
        })?;
        roots[gi] = Some(x);
        roots[neg] = Some(y.into_iter().map(|v| v * &c).collect());
    }
    Ok(RootImages { roots: roots.into_iter().map(Option::unwrap).collect(), coroots })
}
