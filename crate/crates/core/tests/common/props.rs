//! Property checks with brute-force oracles.

use std::cell::Cell;
use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use satcone::branching::{weyl_dimension, Brancher};
use satcone::embedding::builtin_pair;
use satcone::pipeline::{check_saturation, Options};
use satcone::polycone::{cone_contains, extreme_rays, minimal_h_representation};

use super::{ensure, fw_to_eps2, primitive, Check};

pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config { cases, failure_persistence: None, ..Config::default() },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn det(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    let (mut sign, mut prev) = (1, 1);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| a[i][k] != 0) else { return 0 };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Generalized cross product of `d - 1` vectors in dimension `d`.
fn normal(rows: &[&Vec<i64>], d: usize) -> Vec<i64> {
    let n: Vec<i64> = (0..d)
        .map(|j| {
            let minor = rows
                .iter()
                .map(|r| (0..d).filter(|&c| c != j).map(|c| r[c] as i128).collect())
                .collect();
            let m = det(minor);
            (if j % 2 == 0 { m } else { -m }) as i64
        })
        .collect();
    primitive(&n)
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Vectors `v` orthogonal to some `d - 1` of `vecs` with `sign·(w·v) ≤ 0` for all `w`.
fn brute_dual(vecs: &[Vec<i64>], d: usize, sign: i64) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    for sub in vecs.iter().combinations(d - 1) {
        let n = normal(&sub, d);
        if n.iter().all(|&x| x == 0) {
            continue;
        }
        for s in [1, -1] {
            let v: Vec<i64> = n.iter().map(|x| s * x).collect();
            if vecs.iter().all(|w| sign * dot(w, &v) <= 0) {
                out.insert(v);
            }
        }
    }
    out
}

fn rank(vecs: &[Vec<i64>], d: usize) -> usize {
    let mut m: Vec<Vec<BigRational>> =
        vecs.iter().map(|v| v.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let mut r = 0;
    for c in 0..d {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in r + 1..m.len() {
            let f = &m[i][c] / &m[r][c];
            let (top, bottom) = m.split_at_mut(i);
            for (x, y) in bottom[0][c..d].iter_mut().zip(&top[r][c..d]) {
                *x -= &f * y;
            }
        }
        r += 1;
    }
    r
}

fn pointed_generators() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (2usize..=8)
        .prop_flat_map(|d| (Just(d), d..=d + 3))
        .prop_flat_map(|(d, k)| (Just(d), proptest::collection::vec(proptest::collection::vec(-2i64..=3, d), k)))
        .prop_map(|(d, gens)| {
            // lift into the half-space where the coordinate sum is positive
            let gens = gens
                .into_iter()
                .map(|mut g| {
                    let s: i64 = g.iter().sum();
                    if s <= 0 {
                        g[0] += 1 - s;
                    }
                    g
                })
                .collect();
            (d, gens)
        })
}

/// Facets of random generated cones against enumeration of hyperplanes through
/// `d - 1` generators, and rays against the rank of their tight facets.
pub fn dd_round_trip(cases: u32) -> Check {
    let tested = Cell::new(0u32);
    let result = runner(cases).run(&pointed_generators(), |(d, gens)| {
        if rank(&gens, d) < d {
            return Ok(());
        }
        tested.set(tested.get() + 1);
        let h = minimal_h_representation(&gens, d).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let want_h = brute_dual(&gens, d, 1);
        prop_assert_eq!(h.iter().cloned().collect::<BTreeSet<_>>(), want_h.clone());
        let mut rows = h.clone();
        for (a, b) in h.iter().tuple_windows().take(3) {
            rows.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
        }
        let rays = extreme_rays(&rows, d).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let want_rays: BTreeSet<Vec<i64>> = gens
            .iter()
            .map(|g| primitive(g))
            .filter(|g| {
                let tight: Vec<Vec<i64>> = want_h.iter().filter(|f| dot(f, g) == 0).cloned().collect();
                rank(&tight, d) == d - 1
            })
            .collect();
        prop_assert_eq!(rays.iter().cloned().collect::<BTreeSet<_>>(), want_rays);
        prop_assert!(gens.iter().all(|g| cone_contains(&h, g)));
        Ok(())
    });
    result.map_err(|e| e.to_string())?;
    Ok(format!("{cases} random cones of dimension 2..8 ({} full-dimensional) match brute force", tested.get()))
}

fn points_with_sum(dim: usize, max_sum: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                let used: i64 = p.iter().sum();
                (0..=max_sum - used).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Every cone lattice point of coordinate sum at most `max_sum` is an
/// ℕ-combination of the Hilbert basis, and no basis element splits.
pub fn hilbert_generation(name: &str, max_sum: i64) -> Check {
    let pair = builtin_pair(name).map_err(|e| e.to_string())?;
    let r = check_saturation(&pair, &Options::default()).map_err(|e| e.to_string())?;
    let rows = r.cone.inequality_rows();
    let hb: Vec<Vec<i64>> = r.hilbert_basis.iter().map(|e| e.element.clone()).collect();
    let dim = rows[0].len();
    let in_semigroup = |x: &[i64]| cone_contains(&rows, x) && r.lattice.contains(x);
    let mut memo: HashMap<Vec<i64>, bool> = HashMap::new();
    fn representable(x: &[i64], hb: &[Vec<i64>], memo: &mut HashMap<Vec<i64>, bool>) -> bool {
        if x.iter().all(|&c| c == 0) {
            return true;
        }
        if let Some(&v) = memo.get(x) {
            return v;
        }
        let v = hb.iter().any(|h| {
            let y: Vec<i64> = x.iter().zip(h).map(|(a, b)| a - b).collect();
            y.iter().all(|&c| c >= 0) && representable(&y, hb, memo)
        });
        memo.insert(x.to_vec(), v);
        v
    }
    let mut count = 0;
    for x in points_with_sum(dim, max_sum) {
        if x.iter().all(|&c| c == 0) || !in_semigroup(&x) {
            continue;
        }
        count += 1;
        ensure(representable(&x, &hb, &mut memo), || format!("{name}: {x:?} is not generated"))?;
    }
    for h in &hb {
        let splits = points_with_sum(dim, h.iter().sum()).into_iter().any(|y| {
            let z: Vec<i64> = h.iter().zip(&y).map(|(a, b)| a - b).collect();
            y.iter().any(|&c| c != 0) && z.iter().any(|&c| c != 0) && in_semigroup(&y) && in_semigroup(&z)
        });
        ensure(!splits, || format!("{name}: basis element {h:?} is reducible"))?;
    }
    Ok(format!("{name}: {count} points generated by {} elements", hb.len()))
}

const SMALL_PAIRS: [&str; 6] = ["sl3_g2", "g2_spin7", "sp_sl(2)", "sp_sl(3)", "spin_odd_even(3)", "diagonal(A,2)"];

/// Dimension of `V(ν̂)` equals the dimension of its restriction.
pub fn branching_dimensions(cases: u32) -> Check {
    let strategy = (0..SMALL_PAIRS.len()).prop_flat_map(|i| {
        let pair = builtin_pair(SMALL_PAIRS[i]).unwrap();
        (Just(i), proptest::collection::vec(0i64..=2, pair.ghat.rank()))
    });
    runner(cases)
        .run(&strategy, |(i, nu_hat)| {
            let pair = builtin_pair(SMALL_PAIRS[i]).unwrap();
            let brancher = Brancher::new(&pair, Options::default().cache);
            let parts = brancher.decompose(&nu_hat).map_err(|e| TestCaseError::fail(e.to_string()))?;
            let total: u64 = parts.iter().map(|(nu, m)| m * weyl_dimension(&pair.g, nu)).sum();
            prop_assert_eq!(total, weyl_dimension(&pair.ghat, &nu_hat));
            for (nu, m) in parts.iter().take(3) {
                prop_assert_eq!(brancher.multiplicity(nu, &nu_hat).unwrap(), *m);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(format!("{cases} random highest weights over {} pairs", SMALL_PAIRS.len()))
}

/// `V(a) ⊗ V(b)` for SL2 contains `V(c)` once iff `|a-b| ≤ c ≤ a+b` and `a+b+c` is even.
pub fn clebsch_gordan(max: i64) -> Check {
    let pair = builtin_pair("diagonal(A,1)").map_err(|e| e.to_string())?;
    let brancher = Brancher::new(&pair, Options::default().cache);
    let mut n = 0;
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=2 * max {
                let want = u64::from((a - b).abs() <= c && c <= a + b && (a + b + c) % 2 == 0);
                let got = brancher.multiplicity(&[c], &[a, b]).map_err(|e| e.to_string())?;
                ensure(got == want, || format!("c={c} in {a}⊗{b}: got {got}, expected {want}"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} triples with a, b ≤ {max}"))
}

fn grid(dim: usize, max: i64) -> Vec<Vec<i64>> {
    (0..dim).map(|_| 0..=max).multi_cartesian_product().collect()
}

/// Lattice membership against the parity rules: for the spin family all doubled
/// ε-coordinates share a parity; for the symplectic family the sum of all
/// ε-coordinates is even.
pub fn zlr_parity() -> Check {
    let mut n = 0;
    for k in 2..=5 {
        let pair = builtin_pair(&format!("spin_odd_even({k})")).map_err(|e| e.to_string())?;
        let lat = pair.lr_lattice();
        let (r, s, sh) = (pair.g.rank(), pair.g.factors()[0].series, pair.ghat.factors()[0].series);
        for x in grid(r + pair.ghat.rank(), if k <= 4 { 2 } else { 1 }) {
            let mut e = fw_to_eps2(s, &x[..r]);
            e.extend(fw_to_eps2(sh, &x[r..]));
            let want = e.iter().all(|v| v.rem_euclid(2) == e[0].rem_euclid(2));
            ensure(lat.contains(&x) == want, || format!("spin_odd_even({k}) {x:?}"))?;
            n += 1;
        }
    }
    for k in 2..=4 {
        let pair = builtin_pair(&format!("sp_sl({k})")).map_err(|e| e.to_string())?;
        let lat = pair.lr_lattice();
        let (r, s, sh) = (pair.g.rank(), pair.g.factors()[0].series, pair.ghat.factors()[0].series);
        for x in grid(r + pair.ghat.rank(), if k <= 3 { 2 } else { 1 }) {
            let sum: i64 = fw_to_eps2(s, &x[..r]).iter().chain(&fw_to_eps2(sh, &x[r..])).sum::<i64>() / 2;
            ensure(lat.contains(&x) == (sum % 2 == 0), || format!("sp_sl({k}) {x:?}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} weight pairs in the spin and symplectic families"))
}
