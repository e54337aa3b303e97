//! Exact pointed polyhedral cones: double description, irredundant facets,
//! Smith normal form, triangulation and Hilbert bases.
//!
//! Inequality rows `a` describe `{x : a·x ≤ 0}`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{bareiss_det, inverse_q, primitive, rank_i64, rational_to_primitive, rational_to_primitive_big, Q};
use crate::embedding::LatticeDescription;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cone {
    pub dim: usize,
    pub h_rep: Option<Vec<Vec<i64>>>,
    pub v_rep: Option<Vec<Vec<i64>>>,
}

impl Cone {
    pub fn from_inequalities(dim: usize, rows: Vec<Vec<i64>>) -> Self {
        Cone { dim, h_rep: Some(rows), v_rep: None }
    }

    pub fn from_rays(dim: usize, rays: Vec<Vec<i64>>) -> Self {
        Cone { dim, h_rep: None, v_rep: Some(rays) }
    }

    /// Generators as given, or the extreme rays when only inequalities are known.
    pub fn rays(&mut self) -> Result<&[Vec<i64>]> {
        if self.v_rep.is_none() {
            let h = self.h_rep.as_deref().unwrap_or(&[]);
            self.v_rep = Some(extreme_rays(h, self.dim)?);
        }
        Ok(self.v_rep.as_deref().unwrap())
    }

    pub fn inequalities(&mut self) -> Result<&[Vec<i64>]> {
        if self.h_rep.is_none() {
            let v = self.v_rep.as_deref().unwrap_or(&[]);
            self.h_rep = Some(minimal_h_representation(v, self.dim)?);
        }
        Ok(self.h_rep.as_deref().unwrap())
    }

    /// Membership through the H-representation.
    pub fn contains(&mut self, point: &[i64]) -> Result<bool> {
        if point.len() != self.dim {
            return Err(Error::DimensionError { expected: self.dim, got: point.len() });
        }
        Ok(cone_contains(self.inequalities()?, point))
    }
}

pub fn cone_contains(h_rep: &[Vec<i64>], point: &[i64]) -> bool {
    h_rep.iter().all(|a| dot128(a, point) <= 0)
}

fn dot128(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| i128::from(x) * i128::from(y)).sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }

    fn subset_of(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Ray coordinates for double description: checked `i128`, or `BigInt` when
/// intermediate values overflow.
trait DdNum: Clone + Send + Sync + Sized {
    fn from_big(x: BigInt) -> Option<Self>;
    fn eval(a: &[i64], v: &[Self]) -> Option<Self>;
    /// `s * y - t * x`
    fn combine(s: &Self, y: &Self, t: &Self, x: &Self) -> Option<Self>;
    fn signum(&self) -> i8;
    fn primitive(v: Vec<Self>) -> Vec<Self>;
    fn to_small(&self) -> Option<i64>;
}

impl DdNum for i128 {
    fn from_big(x: BigInt) -> Option<Self> {
        x.to_i128()
    }

    fn eval(a: &[i64], v: &[Self]) -> Option<Self> {
        a.iter().zip(v).try_fold(0i128, |acc, (&x, &y)| i128::from(x).checked_mul(y).and_then(|p| acc.checked_add(p)))
    }

    fn combine(s: &Self, y: &Self, t: &Self, x: &Self) -> Option<Self> {
        s.checked_mul(*y).zip(t.checked_mul(*x)).and_then(|(a, b)| a.checked_sub(b))
    }

    fn signum(&self) -> i8 {
        i128::signum(*self) as i8
    }

    fn primitive(v: Vec<Self>) -> Vec<Self> {
        let g = v.iter().fold(0i128, |g, &x| g.gcd(&x));
        if g <= 1 {
            v
        } else {
            v.into_iter().map(|x| x / g).collect()
        }
    }

    fn to_small(&self) -> Option<i64> {
        i64::try_from(*self).ok()
    }
}

impl DdNum for BigInt {
    fn from_big(x: BigInt) -> Option<Self> {
        Some(x)
    }

    fn eval(a: &[i64], v: &[Self]) -> Option<Self> {
        Some(a.iter().zip(v).map(|(&x, y)| y * x).sum())
    }

    fn combine(s: &Self, y: &Self, t: &Self, x: &Self) -> Option<Self> {
        Some(s * y - t * x)
    }

    fn signum(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }

    fn primitive(v: Vec<Self>) -> Vec<Self> {
        let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if g <= BigInt::one() {
            v
        } else {
            v.into_iter().map(|x| x / &g).collect()
        }
    }

    fn to_small(&self) -> Option<i64> {
        ToPrimitive::to_i64(self)
    }
}

struct DdRay<T> {
    coords: Vec<T>,
    zeros: Bits,
}

const OVERFLOW: Error = Error::Overflow("extreme_rays");

/// Extreme rays of `{x : a·x ≤ 0 for every row a}` by double description.
///
/// After a lexicographically first independent set, the next row inserted is
/// the one cutting off the most current rays, ties broken lexicographically.
/// Adjacency uses the combinatorial zero-set test. Output rays are primitive and sorted.
/// Runs in checked `i128` and repeats with big integers if an intermediate overflows.
pub fn extreme_rays(h_rep: &[Vec<i64>], dim: usize) -> Result<Vec<Vec<i64>>> {
    if let Some(r) = h_rep.iter().find(|r| r.len() != dim) {
        return Err(Error::DimensionError { expected: dim, got: r.len() });
    }
    if dim == 0 {
        return Ok(vec![]);
    }
    let rows: BTreeSet<Vec<i64>> = h_rep
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .map(|r| primitive(r))
        .collect();
    let rows: Vec<Vec<i64>> = rows.into_iter().collect();
    if rank_i64(&rows) < dim {
        return Err(Error::NotPointed);
    }
    match double_description::<i128>(&rows, dim) {
        Err(Error::Overflow(_)) => double_description::<BigInt>(&rows, dim),
        r => r,
    }
}

fn double_description<T: DdNum>(rows: &[Vec<i64>], dim: usize) -> Result<Vec<Vec<i64>>> {
    // greedy independent prefix, then the rest in order
    let mut initial: Vec<usize> = vec![];
    let mut basis: Vec<Vec<i64>> = vec![];
    for (i, r) in rows.iter().enumerate() {
        basis.push(r.clone());
        if rank_i64(&basis) == basis.len() {
            initial.push(i);
            if initial.len() == dim {
                break;
            }
        } else {
            basis.pop();
        }
    }
    let mut remaining: Vec<usize> = (0..rows.len()).filter(|i| !initial.contains(i)).collect();
    let m = rows.len();

    let inv = inverse_q(&basis).expect("independent rows");
    let mut rays: Vec<DdRay<T>> = (0..dim)
        .map(|j| {
            let col: Vec<Q> = inv.iter().map(|row| -row[j].clone()).collect();
            let coords = rational_to_primitive_big(&col).into_iter().map(T::from_big).collect::<Option<_>>();
            let mut zeros = Bits::new(m);
            // bit p marks the p-th inserted row
            for p in (0..dim).filter(|&p| p != j) {
                zeros.set(p);
            }
            coords.map(|coords| DdRay { coords, zeros }).ok_or(OVERFLOW)
        })
        .collect::<Result<_>>()?;

    for p in dim..m {
        // max cutoff, ties to the lexicographically first row
        let cut: Vec<usize> = remaining
            .par_iter()
            .map(|&ri| rays.iter().filter(|r| T::eval(&rows[ri], &r.coords).is_none_or(|v| v.signum() > 0)).count())
            .collect();
        let pick = (0..remaining.len()).max_by_key(|&k| (cut[k], std::cmp::Reverse(k))).unwrap();
        let ri = remaining.remove(pick);
        let a = &rows[ri];
        let vals: Vec<T> = rays.iter().map(|r| T::eval(a, &r.coords).ok_or(OVERFLOW)).collect::<Result<_>>()?;
        let signs: Vec<i8> = vals.iter().map(T::signum).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| signs[i] > 0).collect();
        if pos.is_empty() {
            for (r, s) in rays.iter_mut().zip(&signs) {
                if *s == 0 {
                    r.zeros.set(p);
                }
            }
            continue;
        }
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| signs[i] < 0).collect();
        let created: Vec<Result<DdRay<T>>> = pos
            .par_iter()
            .flat_map_iter(|&i| neg.iter().map(move |&j| (i, j)))
            .filter_map(|(i, j)| {
                let z = rays[i].zeros.and(&rays[j].zeros);
                if z.count() + 2 < dim {
                    return None;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, r)| k != i && k != j && z.subset_of(&r.zeros));
                if blocked {
                    return None;
                }
                let coords = rays[i]
                    .coords
                    .iter()
                    .zip(&rays[j].coords)
                    .map(|(x, y)| T::combine(&vals[i], y, &vals[j], x).ok_or(OVERFLOW))
                    .collect::<Result<Vec<T>>>();
                let mut zeros = z;
                zeros.set(p);
                Some(coords.map(|c| DdRay { coords: T::primitive(c), zeros }))
            })
            .collect();
        let mut next = Vec::with_capacity(rays.len());
        for (mut r, s) in rays.into_iter().zip(signs) {
            if s <= 0 {
                if s == 0 {
                    r.zeros.set(p);
                }
                next.push(r);
            }
        }
        for c in created {
            next.push(c?);
        }
        rays = next;
    }

    let mut out = rays
        .into_iter()
        .map(|r| r.coords.iter().map(|x| x.to_small().ok_or(OVERFLOW)).collect::<Result<Vec<i64>>>())
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// Facet normals of the cone spanned by `rays`, computed as the extreme rays
/// of the dual cone.
pub fn minimal_h_representation(rays: &[Vec<i64>], dim: usize) -> Result<Vec<Vec<i64>>> {
    extreme_rays(rays, dim)
}

/// Indices of the rows that define facets, given the extreme rays. Rows that
/// repeat an earlier facet up to a positive scalar are dropped too.
pub fn facet_indices(h_rep: &[Vec<i64>], rays: &[Vec<i64>], dim: usize) -> Vec<usize> {
    let mut seen = BTreeSet::new();
    let flags: Vec<bool> = h_rep
        .par_iter()
        .map(|a| {
            let tight: Vec<Vec<i64>> =
                rays.iter().filter(|r| dot128(a, r) == 0).cloned().collect();
            dim > 0 && rank_i64(&tight) == dim - 1
        })
        .collect();
    (0..h_rep.len())
        .filter(|&i| flags[i] && seen.insert(primitive(&h_rep[i])))
        .collect()
}

/// `U·M·V = D` with `D` diagonal, `d_1 | d_2 | …`, and `U`, `V` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: Vec<Vec<i64>>,
    pub d: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.len().min(self.d.first().map_or(0, Vec::len)))
            .map(|i| self.d[i][i])
            .collect()
    }
}

fn identity_big(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn to_i64_matrix(m: Vec<Vec<BigInt>>) -> Result<Vec<Vec<i64>>> {
    m.into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| x.to_i64().ok_or(Error::Overflow("smith_normal_form")))
                .collect()
        })
        .collect()
}

pub fn smith_normal_form(m: &[Vec<i64>]) -> Result<SmithForm> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut u = identity_big(rows);
    let mut v = identity_big(cols);

    let row_op = |a: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, f: &BigInt| {
        for k in 0..a[dst].len() {
            let t = &a[src][k] * f;
            a[dst][k] -= t;
        }
        for k in 0..u[dst].len() {
            let t = &u[src][k] * f;
            u[dst][k] -= t;
        }
    };
    let col_op = |a: &mut Vec<Vec<BigInt>>, v: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, f: &BigInt| {
        for r in a.iter_mut() {
            let t = &r[src] * f;
            r[dst] -= t;
        }
        for r in v.iter_mut() {
            let t = &r[src] * f;
            r[dst] -= t;
        }
    };

    for t in 0..rows.min(cols) {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
            let Some((pi, pj)) = pivot else {
                return Ok(SmithForm { u: to_i64_matrix(u)?, d: to_i64_matrix(a)?, v: to_i64_matrix(v)? });
            };
            a.swap(t, pi);
            u.swap(t, pi);
            for r in a.iter_mut() {
                r.swap(t, pj);
            }
            for r in v.iter_mut() {
                r.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                let f = a[i][t].div_floor(&a[t][t]);
                row_op(&mut a, &mut u, i, t, &f);
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                let f = a[t][j].div_floor(&a[t][t]);
                col_op(&mut a, &mut v, j, t, &f);
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            if let Some(i) = bad {
                row_op(&mut a, &mut u, t, i, &BigInt::from(-1));
                continue;
            }
            break;
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut().chain(u[t].iter_mut()) {
                *x = -x.clone();
            }
        }
    }
    Ok(SmithForm { u: to_i64_matrix(u)?, d: to_i64_matrix(a)?, v: to_i64_matrix(v)? })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertBasis {
    /// Elements in ambient coordinates, sorted.
    pub elements: Vec<Vec<i64>>,
    /// The same elements in coordinates of the lattice basis.
    pub lattice_coords: Vec<Vec<i64>>,
    pub minimal: bool,
}

/// Simplicial cones (as index lists into `rays`) of a pulling triangulation.
///
/// `facets` lists, for each facet of the cone, the rays lying on it.
pub fn triangulate(rays: &[Vec<i64>], facets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = rays.len();
    let facet_bits: Vec<Bits> = facets
        .iter()
        .map(|f| {
            let mut b = Bits::new(n);
            for &i in f {
                b.set(i);
            }
            b
        })
        .collect();
    let all: Vec<usize> = (0..n).collect();
    let d = rank_i64(rays);
    let mut out = vec![];
    pull(rays, &facet_bits, &all, d, &mut out);
    for s in &mut out {
        s.sort_unstable();
    }
    out.sort();
    out
}

fn pull(rays: &[Vec<i64>], facets: &[Bits], face: &[usize], d: usize, out: &mut Vec<Vec<usize>>) {
    if face.len() == d {
        out.push(face.to_vec());
        return;
    }
    let apex = face[0];
    let mut sub: BTreeSet<Vec<usize>> = BTreeSet::new();
    for f in facets {
        if f.get(apex) {
            continue;
        }
        let t: Vec<usize> = face.iter().copied().filter(|&i| f.get(i)).collect();
        if t.len() + 1 < d || sub.contains(&t) {
            continue;
        }
        let vecs: Vec<Vec<i64>> = t.iter().map(|&i| rays[i].clone()).collect();
        if rank_i64(&vecs) == d - 1 {
            sub.insert(t);
        }
    }
    for t in sub {
        let start = out.len();
        pull(rays, facets, &t, d - 1, out);
        for s in &mut out[start..] {
            s.push(apex);
        }
    }
}

/// Nonzero lattice points `Σ t_i v_i` with `0 ≤ t_i < 1`, for linearly
/// independent rows `v_i` of a square integer matrix.
pub fn parallelepiped_points(gens: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let d = gens.len();
    let det = bareiss_det(gens.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect());
    if det.abs().is_one() {
        return Ok(vec![]);
    }
    let snf = smith_normal_form(gens)?;
    let diag = snf.diagonal();
    let v_inv = inverse_q(&snf.v).expect("unimodular");
    let m_inv = inverse_q(gens).expect("independent generators");
    let mut out = vec![];
    let mut c = vec![0i64; d];
    loop {
        if c.iter().any(|&x| x != 0) {
            // x = c V^{-1}, t = frac(x M^{-1}), point = t M
            let x: Vec<Q> = (0..d)
                .map(|j| (0..d).map(|i| &v_inv[i][j] * BigInt::from(c[i])).sum())
                .collect();
            let t: Vec<Q> = (0..d)
                .map(|j| {
                    let s: Q = (0..d).map(|i| &x[i] * &m_inv[i][j]).sum();
                    &s - s.floor()
                })
                .collect();
            let p = (0..d)
                .map(|j| {
                    let s: Q = (0..d).map(|i| &t[i] * BigInt::from(gens[i][j])).sum();
                    s.to_integer().to_i64().ok_or(Error::Overflow("parallelepiped_points"))
                })
                .collect::<Result<Vec<i64>>>()?;
            out.push(p);
        }
        let mut k = 0;
        loop {
            if k == d {
                return Ok(out);
            }
            c[k] += 1;
            if c[k] < diag[k] {
                break;
            }
            c[k] = 0;
            k += 1;
        }
    }
}

/// Hilbert basis of `cone ∩ lattice` for a pointed full-dimensional cone.
pub fn hilbert_basis(cone: &mut Cone, lattice: &LatticeDescription) -> Result<HilbertBasis> {
    let dim = cone.dim;
    let h = cone.inequalities()?.to_vec();
    // generators may include zero, repeated or non-extreme vectors
    let rays: Vec<Vec<i64>> = cone
        .rays()?
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .map(|r| primitive(r))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .filter(|r| {
            let tight: Vec<Vec<i64>> = h.iter().filter(|a| dot128(a, r) == 0).cloned().collect();
            rank_i64(&tight) + 1 == dim
        })
        .collect();
    if rank_i64(&rays) < dim {
        return Err(Error::DimensionError { expected: dim, got: rank_i64(&rays) });
    }
    let basis = &lattice.basis;
    if basis.len() != dim || lattice.ambient_rank != dim {
        return Err(Error::DimensionError { expected: dim, got: basis.len() });
    }
    let b_inv = inverse_q(basis).ok_or(Error::DimensionError { expected: dim, got: rank_i64(basis) })?;

    // x = y B
    let to_lattice = |x: &[i64]| -> Vec<i64> {
        let y: Vec<Q> = (0..dim)
            .map(|j| (0..dim).map(|i| &b_inv[i][j] * BigInt::from(x[i])).sum())
            .collect();
        rational_to_primitive(&y)
    };
    let from_lattice = |y: &[i64]| -> Vec<i64> {
        (0..dim).map(|j| (0..dim).map(|i| y[i] * basis[i][j]).sum()).collect()
    };
    let yrays: Vec<Vec<i64>> = rays.iter().map(|r| to_lattice(r)).collect();
    // a·(yB) = (B a)·y
    let yh: Vec<Vec<i64>> = facet_indices(&h, &rays, dim)
        .into_iter()
        .map(|k| (0..dim).map(|i| crate::arith::dot(&basis[i], &h[k])).collect())
        .collect();
    let facets: Vec<Vec<usize>> = yh
        .iter()
        .map(|a| (0..yrays.len()).filter(|&r| dot128(a, &yrays[r]) == 0).collect())
        .collect();

    let simplices = triangulate(&yrays, &facets);
    let points: Vec<Vec<Vec<i64>>> = simplices
        .par_iter()
        .map(|s| parallelepiped_points(&s.iter().map(|&i| yrays[i].clone()).collect::<Vec<_>>()))
        .collect::<Result<_>>()?;
    let mut cands: BTreeSet<Vec<i64>> = yrays.iter().cloned().collect();
    cands.extend(points.into_iter().flatten());

    let degree = |y: &[i64]| -> i128 { -yh.iter().map(|a| dot128(a, y)).sum::<i128>() };
    let mut sorted: Vec<(i128, Vec<i64>)> = cands.into_iter().map(|y| (degree(&y), y)).collect();
    sorted.sort();
    let mut reduced: Vec<Vec<i64>> = vec![];
    for (deg, y) in sorted {
        let reducible = reduced.iter().any(|g| {
            degree(g) < deg && {
                let diff: Vec<i64> = y.iter().zip(g).map(|(a, b)| a - b).collect();
                cone_contains(&yh, &diff)
            }
        });
        if !reducible {
            reduced.push(y);
        }
    }
    let mut pairs: Vec<(Vec<i64>, Vec<i64>)> = reduced.into_iter().map(|y| (from_lattice(&y), y)).collect();
    pairs.sort();
    let (elements, lattice_coords) = pairs.into_iter().unzip();
    Ok(HilbertBasis { elements, lattice_coords, minimal: true })
}

/// `rows cols` header followed by one whitespace-separated row per line.
pub fn format_matrix(rows: &[Vec<i64>], cols: usize) -> String {
    let mut s = format!("{} {}\n", rows.len(), cols);
    for r in rows {
        s.push_str(&r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "));
        s.push('\n');
    }
    s
}

pub fn parse_matrix(text: &str) -> Result<Vec<Vec<i64>>> {
    let mut tokens = text.split_whitespace();
    let mut next = |what: &str| -> Result<i64> {
        let t = tokens.next().ok_or_else(|| Error::Parse(format!("missing {what}")))?;
        t.parse().map_err(|_| Error::Parse(format!("bad integer {t:?}")))
    };
    let r = next("row count")?;
    let c = next("column count")?;
    if r < 0 || c < 0 {
        return Err(Error::Parse("negative dimensions".into()));
    }
    let mut out = Vec::with_capacity(r as usize);
    for _ in 0..r {
        out.push((0..c).map(|_| next("entry")).collect::<Result<Vec<i64>>>()?);
    }
    if tokens.next().is_some() {
        return Err(Error::Parse("trailing entries".into()));
    }
    Ok(out)
}
