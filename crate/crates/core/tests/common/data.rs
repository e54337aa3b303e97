//! Published cone data. Ray lists are in fundamental-weight coordinates
//! `(ν | ν̂)` unless the name says ε-coordinates (type A drops the last one).

pub const SL3_G2_RAYS: [[i64; 4]; 6] =
    [[0, 0, 1, 0], [0, 1, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0], [1, 0, 0, 1], [1, 1, 0, 1]];

pub const G2_SPIN7_RAYS: [[i64; 5]; 7] = [
    [1, 0, 1, 0, 0],
    [1, 0, 0, 1, 0],
    [0, 1, 0, 1, 0],
    [0, 0, 0, 0, 1],
    [1, 0, 0, 0, 1],
    [0, 1, 1, 0, 1],
    [0, 1, 1, 1, 0],
];

/// Hilbert basis elements for the SO7 weight lattice that are not ray generators.
pub const G2_SO7_EXTRA: [[i64; 5]; 3] = [[1, 0, 0, 0, 2], [0, 1, 1, 0, 2], [1, 1, 1, 0, 2]];

pub const SPIN9_F4_RAYS: [[i64; 8]; 20] = [
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 1, 0, 0],
    [0, 0, 1, 0, 1, 0, 0, 1],
    [0, 0, 1, 0, 1, 0, 1, 0],
    [0, 1, 0, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 1, 0, 0],
    [0, 1, 0, 0, 1, 0, 0, 0],
    [0, 1, 0, 1, 0, 1, 0, 0],
    [0, 1, 1, 0, 0, 1, 0, 1],
    [1, 0, 0, 0, 0, 0, 0, 1],
    [1, 0, 0, 0, 0, 0, 1, 0],
    [1, 0, 0, 1, 0, 0, 1, 0],
    [1, 0, 0, 1, 0, 1, 0, 0],
    [1, 0, 1, 0, 0, 1, 0, 0],
    [1, 0, 1, 0, 1, 0, 1, 0],
    [1, 0, 1, 0, 1, 1, 0, 0],
];

pub const F4_E6_RAYS: [[i64; 10]; 37] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 0, 1, 0, 1, 0],
    [0, 0, 1, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 1, 0, 1, 0, 0, 0, 0, 1],
    [0, 1, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 1, 0, 0, 0, 0, 1, 0, 0, 1],
    [0, 1, 0, 0, 0, 0, 1, 1, 0, 0],
    [0, 1, 0, 0, 0, 1, 0, 1, 0, 0],
    [0, 1, 0, 0, 0, 1, 1, 0, 1, 0],
    [0, 1, 0, 0, 1, 1, 0, 0, 0, 1],
    [0, 1, 0, 1, 0, 0, 1, 0, 1, 0],
    [1, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [1, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0, 0, 1, 0, 1],
    [1, 1, 0, 0, 1, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 1, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 1, 0, 1, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 1, 1, 0],
    [0, 1, 0, 0, 0, 0, 1, 0, 1, 0],
    [0, 1, 0, 0, 0, 1, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 1, 1, 0, 0, 0],
    [0, 1, 0, 0, 1, 0, 0, 0, 1, 0],
    [0, 1, 0, 1, 0, 0, 0, 2, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [1, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 0, 1, 0, 0],
    [1, 0, 1, 0, 1, 0, 0, 1, 0, 0],
];

/// `(f_ν, f_ν̂)` with `f_ν·ν + f_ν̂·ν̂ ≥ 0` in ε-coordinates.
pub type EpsInequality = (&'static [i64], &'static [i64]);

pub const SP_SL2_INEQUALITIES: [EpsInequality; 5] = [
    (&[1, 1], &[-1, 1, -1]),
    (&[-1, -1], &[1, 1, -1]),
    (&[1, -1], &[1, -1, -1]),
    (&[1, -1], &[-1, 1, 1]),
    (&[-1, 1], &[1, -1, 1]),
];

pub const SP_SL3_INEQUALITIES: [EpsInequality; 32] = [
    (&[1, 0, 0], &[-1, 1, 0, 0, 0]),
    (&[1, 0, 0], &[0, 0, -1, 1, 0]),
    (&[1, 0, 0], &[0, 0, 0, 0, -1]),
    (&[-1, 0, 0], &[1, 0, 0, 0, 0]),
    (&[0, -1, 0], &[1, 0, 0, 0, -1]),
    (&[0, -1, 0], &[0, 1, 0, 0, 0]),
    (&[0, 0, -1], &[1, 0, 0, -1, 0]),
    (&[0, 0, -1], &[0, 1, 0, 0, -1]),
    (&[0, 0, -1], &[0, 0, 1, 0, 0]),
    (&[1, 1, 1], &[-1, 1, -1, 1, -1]),
    (&[-1, -1, -1], &[1, 1, 1, -1, -1]),
    (&[1, -1, -1], &[1, 1, -1, -1, -1]),
    (&[1, -1, -1], &[-1, 1, 1, 1, -1]),
    (&[1, -1, -1], &[1, -1, 1, -1, 1]),
    (&[-1, 1, 1], &[1, -1, 1, -1, 1]),
    (&[1, -1, 1], &[1, -1, 1, -1, -1]),
    (&[1, -1, 1], &[-1, 1, 1, -1, 1]),
    (&[1, -1, 1], &[1, -1, -1, 1, 1]),
    (&[-1, 1, -1], &[1, -1, 1, 1, -1]),
    (&[-1, 1, -1], &[1, 1, -1, -1, 1]),
    (&[1, 1, -1], &[-1, 1, 1, -1, -1]),
    (&[1, 1, -1], &[1, -1, -1, 1, -1]),
    (&[1, 1, -1], &[-1, 1, -1, 1, 1]),
    (&[-1, -1, 1], &[1, 1, -1, 1, -1]),
    (&[1, -1, 0], &[0, 0, 0, 0, 0]),
    (&[0, 1, -1], &[0, 0, 0, 0, 0]),
    (&[0, 0, 1], &[0, 0, 0, 0, 0]),
    (&[0, 0, 0], &[1, -1, 0, 0, 0]),
    (&[0, 0, 0], &[0, 1, -1, 0, 0]),
    (&[0, 0, 0], &[0, 0, 1, -1, 0]),
    (&[0, 0, 0], &[0, 0, 0, 1, -1]),
    (&[0, 0, 0], &[0, 0, 0, 0, 1]),
];

pub const SP_SL3_RAYS_EPS: [[i64; 8]; 15] = [
    [0, 0, 0, 1, 1, 1, 1, 0],
    [1, 1, 1, 3, 2, 2, 1, 1],
    // (ϖ₂, ϖ̂₁ + ϖ̂₃)
    [1, 1, 0, 2, 1, 1, 0, 0],
    [0, 0, 0, 1, 1, 0, 0, 0],
    [1, 1, 0, 1, 1, 1, 1, 0],
    [1, 0, 0, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 0, 0],
    [1, 1, 0, 2, 2, 2, 1, 1],
    [1, 0, 0, 1, 1, 1, 0, 0],
    [1, 1, 1, 2, 2, 1, 1, 1],
    [1, 1, 0, 1, 1, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 0, 0],
    [1, 1, 1, 2, 1, 1, 1, 0],
    [1, 1, 0, 2, 1, 1, 1, 1],
    [2, 1, 1, 2, 2, 1, 1, 0],
];

pub const SP_SL4_FACE_EPS: [[i64; 11]; 8] = [
    [0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0],
    [1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 0],
    [1, 1, 0, 0, 1, 1, 1, 1, 1, 1, 0],
    [1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0],
    [1, 1, 1, 1, 2, 2, 1, 1, 1, 1, 0],
];

pub const SP_SL4_HIGHLIGHTED_EPS: [[i64; 11]; 4] = [
    [1, 1, 1, 1, 2, 2, 2, 1, 1, 0, 0],
    [2, 2, 2, 0, 3, 3, 2, 2, 1, 1, 0],
    [2, 2, 1, 1, 3, 3, 2, 2, 2, 0, 0],
    [2, 2, 1, 1, 3, 3, 3, 1, 1, 1, 0],
];
