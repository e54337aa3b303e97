use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{inverse_q, Q64};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// One simple (or, for `D2`, semisimple) factor in Bourbaki labelling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    pub series: Series,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A | Series::B | Series::C => rank >= 1,
            Series::D => rank >= 2,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { series, rank })
        } else {
            Err(Error::InvalidType(format!("{}{}", series.letter(), rank)))
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.series, Series::A | Series::D | Series::E) || self.rank == 1
    }

    /// `cartan[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.series {
            Series::A | Series::B | Series::C => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1);
                }
            }
            Series::D => {
                for i in 0..n.saturating_sub(3) {
                    link(i, i + 1);
                }
                if n >= 3 {
                    link(n - 3, n - 2);
                    link(n - 3, n - 1);
                }
            }
            Series::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Series::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Series::G => link(0, 1),
        }
        match self.series {
            // alpha_n short
            Series::B if n >= 2 => c[n - 2][n - 1] = -2,
            // alpha_n long
            Series::C if n >= 2 => c[n - 1][n - 2] = -2,
            Series::F => c[1][2] = -2,
            Series::G => c[1][0] = -3,
            _ => {}
        }
        c
    }

    /// Simple roots in the standard epsilon coordinates, when the type has them.
    pub fn simple_roots_eps(&self) -> Option<Vec<Vec<Q64>>> {
        let n = self.rank;
        let z = Q64::zero;
        let one = Q64::one;
        let unit_diff = |i: usize, len: usize| {
            let mut v = vec![z(); len];
            v[i] = one();
            v[i + 1] = -one();
            v
        };
        match self.series {
            Series::A => Some((0..n).map(|i| unit_diff(i, n + 1)).collect()),
            Series::B | Series::C | Series::D => {
                let mut rows: Vec<Vec<Q64>> = (0..n - 1).map(|i| unit_diff(i, n)).collect();
                let mut last = vec![z(); n];
                match self.series {
                    Series::B => last[n - 1] = one(),
                    Series::C => last[n - 1] = Q64::from_integer(2),
                    _ => {
                        last[n - 2] = one();
                        last[n - 1] = one();
                    }
                }
                rows.push(last);
                Some(rows)
            }
            Series::F => {
                let h = Q64::new(1, 2);
                Some(vec![
                    vec![z(), one(), -one(), z()],
                    vec![z(), z(), one(), -one()],
                    vec![z(), z(), z(), one()],
                    vec![h, -h, -h, -h],
                ])
            }
            Series::G => Some(vec![
                vec![one(), -one(), z()],
                vec![Q64::from_integer(-2), one(), one()],
            ]),
            Series::E => None,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| Error::InvalidType(s.to_string()))?;
        let series = Series::from_letter(letter).ok_or_else(|| Error::InvalidType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidType(s.to_string()))?;
        SimpleType::new(series, rank)
    }
}

/// Parse `"A2"`, `"B3xB3"`, `"A1 x A1"`.
pub fn parse_type_list(s: &str) -> Result<Vec<SimpleType>> {
    s.split(['x', '×', '*'])
        .map(|p| p.trim())
        .filter(|p| !p.is_empty())
        .map(SimpleType::from_str)
        .collect()
}

pub fn format_type_list(t: &[SimpleType]) -> String {
    t.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("x")
}

/// Combinatorial data of a (semi)simple root system.
///
/// Weights are integer vectors in the fundamental-weight basis, coweights in
/// the simple-coroot basis, roots in the simple-root basis.
#[derive(Clone, Debug)]
pub struct RootSystem {
    factors: Vec<SimpleType>,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// `(alpha_i, alpha_i) / 2`, scaled so the shortest root of each factor has 1.
    sym: Vec<i64>,
    /// Positive roots followed by their negatives, in the same order.
    roots: Vec<Vec<i64>>,
    n_pos: usize,
    index: HashMap<Vec<i64>, usize>,
    simple_roots_eps: Option<Vec<Vec<Q64>>>,
    fw_to_eps: Option<Vec<Vec<Q64>>>,
    /// Gram matrix of the fundamental weights for the invariant form.
    fw_form: Vec<Vec<Q64>>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl RootSystem {
    pub fn new(factors: &[SimpleType]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidType("empty type".into()));
        }
        let rank: usize = factors.iter().map(|f| f.rank).sum();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut off = 0;
        for f in factors {
            SimpleType::new(f.series, f.rank)?;
            let c = f.cartan();
            for i in 0..f.rank {
                for j in 0..f.rank {
                    cartan[off + i][off + j] = c[i][j];
                }
            }
            off += f.rank;
        }
        let sym = symmetrizer(&cartan);
        let positive = positive_roots(&cartan);
        let n_pos = positive.len();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();

        let simple_roots_eps = factors
            .iter()
            .map(|f| f.simple_roots_eps())
            .collect::<Option<Vec<_>>>()
            .map(|blocks| block_diag_q(&blocks));
        let fw_to_eps = fw_to_eps(factors, &cartan, simple_roots_eps.as_ref());

        let cinv = inverse_small(&cartan);
        // (alpha_i, alpha_j) = cartan[i][j] * sym[j]
        let root_form: Vec<Vec<Q64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| Q64::from_integer(cartan[i][j] * sym[j]))
                    .collect()
            })
            .collect();
        let fw_form = mat_mul(&mat_mul(&cinv, &root_form), &transpose(&cinv));

        Ok(RootSystem {
            factors: factors.to_vec(),
            rank,
            cartan,
            sym,
            roots,
            n_pos,
            index,
            simple_roots_eps,
            fw_to_eps,
            fw_form,
        })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(&parse_type_list(s)?)
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn type_name(&self) -> String {
        format_type_list(&self.factors)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn half_norms(&self) -> &[i64] {
        &self.sym
    }

    pub fn num_positive_roots(&self) -> usize {
        self.n_pos
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// Dimension of the Lie algebra.
    pub fn dimension(&self) -> usize {
        self.roots.len() + self.rank
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots[..self.n_pos]
    }

    /// All roots, positive ones first; root `i + n_pos` is the negative of root `i`.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root(&self, idx: usize) -> &[i64] {
        &self.roots[idx]
    }

    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        idx < self.n_pos
    }

    pub fn negate_index(&self, idx: usize) -> usize {
        if idx < self.n_pos {
            idx + self.n_pos
        } else {
            idx - self.n_pos
        }
    }

    pub fn simple_root_index(&self, i: usize) -> usize {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        self.index[&v]
    }

    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }

    /// The simple root `alpha_i` in fundamental-weight coordinates.
    pub fn simple_root_fw(&self, i: usize) -> &[i64] {
        &self.cartan[i]
    }

    /// A root (simple-root coordinates) in fundamental-weight coordinates.
    pub fn root_to_fw(&self, root: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.rank];
        for (j, &a) in root.iter().enumerate() {
            if a != 0 {
                for (k, o) in out.iter_mut().enumerate() {
                    *o += a * self.cartan[j][k];
                }
            }
        }
        out
    }

    /// `<beta, alpha_i^vee>` for a root in simple-root coordinates.
    pub fn root_pair_coroot(&self, root: &[i64], i: usize) -> i64 {
        root.iter()
            .enumerate()
            .map(|(j, &a)| a * self.cartan[j][i])
            .sum()
    }

    /// Half the squared length, in units where the shortest root of its factor has 1.
    pub fn root_half_norm(&self, root: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += root[i] * root[j] * self.cartan[i][j] * self.sym[j];
            }
        }
        s / 2
    }

    /// Coroot of `root` in simple-coroot coordinates.
    pub fn coroot(&self, root: &[i64]) -> Vec<i64> {
        let d = self.root_half_norm(root);
        root.iter()
            .zip(&self.sym)
            .map(|(&a, &s)| {
                debug_assert_eq!((a * s) % d, 0);
                a * s / d
            })
            .collect()
    }

    /// Pairing between a coweight (simple-coroot coordinates) and a weight
    /// (fundamental-weight coordinates).
    pub fn pair(&self, coweight: &[i64], weight: &[i64]) -> Result<i64> {
        if coweight.len() != self.rank {
            return Err(Error::DimensionError { expected: self.rank, got: coweight.len() });
        }
        if weight.len() != self.rank {
            return Err(Error::DimensionError { expected: self.rank, got: weight.len() });
        }
        Ok(crate::arith::dot(coweight, weight))
    }

    /// `<lambda, beta>` for a coweight and a root in simple-root coordinates.
    pub fn pair_root(&self, coweight: &[i64], root: &[i64]) -> i64 {
        let mut s = 0;
        for (j, &a) in root.iter().enumerate() {
            if a != 0 {
                s += a * crate::arith::dot(coweight, &self.cartan[j]);
            }
        }
        s
    }

    /// Values `<lambda, alpha_j>` on the simple roots.
    pub fn coweight_on_simple_roots(&self, coweight: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|j| crate::arith::dot(coweight, &self.cartan[j]))
            .collect()
    }

    pub fn is_dominant_weight(&self, w: &[i64]) -> bool {
        w.iter().all(|&x| x >= 0)
    }

    pub fn is_dominant_coweight(&self, c: &[i64]) -> bool {
        self.coweight_on_simple_roots(c).iter().all(|&x| x >= 0)
    }

    /// Invariant form on weights in fundamental-weight coordinates.
    pub fn weight_form(&self, a: &[i64], b: &[i64]) -> Q64 {
        let mut s = Q64::zero();
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if b[j] != 0 {
                    s += self.fw_form[i][j] * (a[i] * b[j]);
                }
            }
        }
        s
    }

    pub fn fw_form(&self) -> &[Vec<Q64>] {
        &self.fw_form
    }

    /// Half sum of positive roots, which is the all-ones weight.
    pub fn rho(&self) -> Vec<i64> {
        vec![1; self.rank]
    }

    pub fn simple_roots_eps(&self) -> Option<&[Vec<Q64>]> {
        self.simple_roots_eps.as_deref()
    }

    pub fn fw_to_eps_matrix(&self) -> Option<&[Vec<Q64>]> {
        self.fw_to_eps.as_deref()
    }

    pub fn has_eps(&self) -> bool {
        self.fw_to_eps.is_some()
    }

    pub fn fw_to_eps(&self, w: &[i64]) -> Option<Vec<Q64>> {
        let m = self.fw_to_eps.as_ref()?;
        let ncols = m.first().map_or(0, |r| r.len());
        let mut out = vec![Q64::zero(); ncols];
        for (i, &a) in w.iter().enumerate() {
            for (o, x) in out.iter_mut().zip(&m[i]) {
                *o += *x * a;
            }
        }
        Some(out)
    }

    /// Inverse of [`fw_to_eps`]: `w_i = (x, alpha_i^vee)` in the Euclidean form.
    pub fn eps_to_fw(&self, x: &[Q64]) -> Option<Vec<i64>> {
        let roots = self.simple_roots_eps.as_ref()?;
        let mut out = Vec::with_capacity(self.rank);
        for a in roots {
            let norm: Q64 = a.iter().map(|v| v * v).sum();
            let ip: Q64 = a.iter().zip(x).map(|(u, v)| u * v).sum();
            let v = ip * Q64::from_integer(2) / norm;
            if !v.is_integer() {
                return None;
            }
            out.push(v.to_integer());
        }
        Some(out)
    }
}

fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<Q64>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Q64::one());
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i != j && cartan[i][j] != 0 && d[j].is_none() {
                    // (a_i,a_j) = c[i][j] d_j = c[j][i] d_i
                    d[j] = Some(d[i].unwrap() * Q64::new(cartan[j][i], cartan[i][j]));
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        let den = comp.iter().fold(1i64, |acc, &i| acc.lcm(d[i].unwrap().denom()));
        let scaled: Vec<i64> = comp
            .iter()
            .map(|&i| (d[i].unwrap() * den).to_integer())
            .collect();
        let g = scaled.iter().fold(0i64, |a, &b| a.gcd(&b));
        for (&i, s) in comp.iter().zip(scaled) {
            d[i] = Some(Q64::from_integer(s / g));
        }
    }
    d.into_iter().map(|x| x.unwrap().to_integer()).collect()
}

fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut all: Vec<Vec<i64>> = Vec::new();
    let mut known: std::collections::HashSet<Vec<i64>> = Default::default();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    for r in &layer {
        known.insert(r.clone());
    }
    while !layer.is_empty() {
        layer.sort_by(|a, b| b.cmp(a));
        all.extend(layer.iter().cloned());
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // p = max k with beta - k alpha_i a root
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    all
}

fn inverse_small(m: &[Vec<i64>]) -> Vec<Vec<Q64>> {
    let inv = inverse_q(m).expect("Cartan matrix is invertible");
    inv.iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    use num_traits::ToPrimitive;
                    Q64::new(x.numer().to_i64().unwrap(), x.denom().to_i64().unwrap())
                })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &[Vec<Q64>], b: &[Vec<Q64>]) -> Vec<Vec<Q64>> {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum())
                .collect()
        })
        .collect()
}

fn transpose(a: &[Vec<Q64>]) -> Vec<Vec<Q64>> {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

fn block_diag_q(blocks: &[Vec<Vec<Q64>>]) -> Vec<Vec<Q64>> {
    let total_cols: usize = blocks.iter().map(|b| b[0].len()).sum();
    let mut out = Vec::new();
    let mut col = 0;
    for b in blocks {
        let w = b[0].len();
        for r in b {
            let mut row = vec![Q64::zero(); total_cols];
            row[col..col + w].copy_from_slice(r);
            out.push(row);
        }
        col += w;
    }
    out
}

fn fw_to_eps(
    factors: &[SimpleType],
    cartan: &[Vec<i64>],
    simple_eps: Option<&Vec<Vec<Q64>>>,
) -> Option<Vec<Vec<Q64>>> {
    let simple_eps = simple_eps?;
    let cinv = inverse_small(cartan);
    let mut m = mat_mul(&cinv, simple_eps);
    // type A: use the partition convention varpi_i = e_1 + ... + e_i
    let mut row = 0;
    let mut col = 0;
    for f in factors {
        let width = simple_eps_width(f);
        if f.series == Series::A {
            for i in 0..f.rank {
                for j in 0..width {
                    m[row + i][col + j] = if j <= i { Q64::one() } else { Q64::zero() };
                }
            }
        }
        row += f.rank;
        col += width;
    }
    Some(m)
}

fn simple_eps_width(f: &SimpleType) -> usize {
    match f.series {
        Series::A => f.rank + 1,
        Series::G => 3,
        _ => f.rank,
    }
}
