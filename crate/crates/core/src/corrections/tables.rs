//! Integer coefficient tables for the long closed-form polynomials.
//!
//! Each entry is `(coefficient, exponents)`; a table evaluates to
//! `sum coefficient * prod var_i^exponent_i`.

/// `H^6` coefficient of the side polynomial `L`, in `(j0, k0, j1, k1)`; enters as `L6 H^6/6!`.
pub(crate) const L6: &[(i64, [u32; 4])] = &[
    (6, [2, 2, 0, 0]),
    (3, [2, 1, 0, 1]),
    (1, [2, 0, 0, 2]),
    (3, [1, 2, 1, 0]),
    (4, [1, 1, 1, 1]),
    (3, [1, 0, 1, 2]),
    (1, [0, 2, 2, 0]),
    (3, [0, 1, 2, 1]),
    (6, [0, 0, 2, 2]),
];

/// `H^7` coefficient of `L`; enters as `-L7 H^7/7!`.
pub(crate) const L7: &[(i64, [u32; 4])] = &[
    (30, [3, 2, 0, 0]),
    (12, [3, 1, 0, 1]),
    (3, [3, 0, 0, 2]),
    (30, [2, 3, 0, 0]),
    (18, [2, 2, 1, 0]),
    (18, [2, 2, 0, 1]),
    (18, [2, 1, 1, 1]),
    (9, [2, 1, 0, 2]),
    (9, [2, 0, 1, 2]),
    (3, [2, 0, 0, 3]),
    (12, [1, 3, 1, 0]),
    (9, [1, 2, 2, 0]),
    (18, [1, 2, 1, 1]),
    (18, [1, 1, 2, 1]),
    (18, [1, 1, 1, 2]),
    (18, [1, 0, 2, 2]),
    (12, [1, 0, 1, 3]),
    (3, [0, 3, 2, 0]),
    (3, [0, 2, 3, 0]),
    (9, [0, 2, 2, 1]),
    (12, [0, 1, 3, 1]),
    (18, [0, 1, 2, 2]),
    (30, [0, 0, 3, 2]),
    (30, [0, 0, 2, 3]),
];

/// `H^8` coefficient of `L`; enters as `L8 H^8/8!`.
pub(crate) const L8: &[(i64, [u32; 4])] = &[
    (90, [4, 2, 0, 0]),
    (30, [4, 1, 0, 1]),
    (6, [4, 0, 0, 2]),
    (180, [3, 3, 0, 0]),
    (60, [3, 2, 1, 0]),
    (90, [3, 2, 0, 1]),
    (48, [3, 1, 1, 1]),
    (36, [3, 1, 0, 2]),
    (18, [3, 0, 1, 2]),
    (9, [3, 0, 0, 3]),
    (90, [2, 4, 0, 0]),
    (90, [2, 3, 1, 0]),
    (60, [2, 3, 0, 1]),
    (36, [2, 2, 2, 0]),
    (108, [2, 2, 1, 1]),
    (36, [2, 2, 0, 2]),
    (54, [2, 1, 2, 1]),
    (81, [2, 1, 1, 2]),
    (18, [2, 1, 0, 3]),
    (36, [2, 0, 2, 2]),
    (36, [2, 0, 1, 3]),
    (6, [2, 0, 0, 4]),
    (30, [1, 4, 1, 0]),
    (36, [1, 3, 2, 0]),
    (48, [1, 3, 1, 1]),
    (18, [1, 2, 3, 0]),
    (81, [1, 2, 2, 1]),
    (54, [1, 2, 1, 2]),
    (48, [1, 1, 3, 1]),
    (108, [1, 1, 2, 2]),
    (48, [1, 1, 1, 3]),
    (60, [1, 0, 3, 2]),
    (90, [1, 0, 2, 3]),
    (30, [1, 0, 1, 4]),
    (6, [0, 4, 2, 0]),
    (9, [0, 3, 3, 0]),
    (18, [0, 3, 2, 1]),
    (6, [0, 2, 4, 0]),
    (36, [0, 2, 3, 1]),
    (36, [0, 2, 2, 2]),
    (30, [0, 1, 4, 1]),
    (90, [0, 1, 3, 2]),
    (60, [0, 1, 2, 3]),
    (90, [0, 0, 4, 2]),
    (180, [0, 0, 3, 3]),
    (90, [0, 0, 2, 4]),
];

/// Predegree contribution of a side per unit of `R`, in `(j0, k0, j1, k1, d)`, before the root-multiplicity term.
pub(crate) const SIDE_PREDEGREE: &[(i64, [u32; 5])] = &[
    (90, [4, 2, 0, 0, 0]),
    (30, [4, 1, 0, 1, 0]),
    (6, [4, 0, 0, 2, 0]),
    (180, [3, 3, 0, 0, 0]),
    (60, [3, 2, 1, 0, 0]),
    (90, [3, 2, 0, 1, 0]),
    (-240, [3, 2, 0, 0, 1]),
    (48, [3, 1, 1, 1, 0]),
    (36, [3, 1, 0, 2, 0]),
    (-96, [3, 1, 0, 1, 1]),
    (18, [3, 0, 1, 2, 0]),
    (9, [3, 0, 0, 3, 0]),
    (-24, [3, 0, 0, 2, 1]),
    (90, [2, 4, 0, 0, 0]),
    (90, [2, 3, 1, 0, 0]),
    (60, [2, 3, 0, 1, 0]),
    (-240, [2, 3, 0, 0, 1]),
    (36, [2, 2, 2, 0, 0]),
    (108, [2, 2, 1, 1, 0]),
    (-144, [2, 2, 1, 0, 1]),
    (36, [2, 2, 0, 2, 0]),
    (-144, [2, 2, 0, 1, 1]),
    (168, [2, 2, 0, 0, 2]),
    (54, [2, 1, 2, 1, 0]),
    (81, [2, 1, 1, 2, 0]),
    (-144, [2, 1, 1, 1, 1]),
    (18, [2, 1, 0, 3, 0]),
    (-72, [2, 1, 0, 2, 1]),
    (84, [2, 1, 0, 1, 2]),
    (36, [2, 0, 2, 2, 0]),
    (36, [2, 0, 1, 3, 0]),
    (-72, [2, 0, 1, 2, 1]),
    (6, [2, 0, 0, 4, 0]),
    (-24, [2, 0, 0, 3, 1]),
    (28, [2, 0, 0, 2, 2]),
    (30, [1, 4, 1, 0, 0]),
    (36, [1, 3, 2, 0, 0]),
    (48, [1, 3, 1, 1, 0]),
    (-96, [1, 3, 1, 0, 1]),
    (18, [1, 2, 3, 0, 0]),
    (81, [1, 2, 2, 1, 0]),
    (-72, [1, 2, 2, 0, 1]),
    (54, [1, 2, 1, 2, 0]),
    (-144, [1, 2, 1, 1, 1]),
    (84, [1, 2, 1, 0, 2]),
    (48, [1, 1, 3, 1, 0]),
    (108, [1, 1, 2, 2, 0]),
    (-144, [1, 1, 2, 1, 1]),
    (48, [1, 1, 1, 3, 0]),
    (-144, [1, 1, 1, 2, 1]),
    (112, [1, 1, 1, 1, 2]),
    (60, [1, 0, 3, 2, 0]),
    (90, [1, 0, 2, 3, 0]),
    (-144, [1, 0, 2, 2, 1]),
    (30, [1, 0, 1, 4, 0]),
    (-96, [1, 0, 1, 3, 1]),
    (84, [1, 0, 1, 2, 2]),
    (6, [0, 4, 2, 0, 0]),
    (9, [0, 3, 3, 0, 0]),
    (18, [0, 3, 2, 1, 0]),
    (-24, [0, 3, 2, 0, 1]),
    (6, [0, 2, 4, 0, 0]),
    (36, [0, 2, 3, 1, 0]),
    (-24, [0, 2, 3, 0, 1]),
    (36, [0, 2, 2, 2, 0]),
    (-72, [0, 2, 2, 1, 1]),
    (28, [0, 2, 2, 0, 2]),
    (30, [0, 1, 4, 1, 0]),
    (90, [0, 1, 3, 2, 0]),
    (-96, [0, 1, 3, 1, 1]),
    (60, [0, 1, 2, 3, 0]),
    (-144, [0, 1, 2, 2, 1]),
    (84, [0, 1, 2, 1, 2]),
    (90, [0, 0, 4, 2, 0]),
    (180, [0, 0, 3, 3, 0]),
    (-240, [0, 0, 3, 2, 1]),
    (90, [0, 0, 2, 4, 0]),
    (-240, [0, 0, 2, 3, 1]),
    (168, [0, 0, 2, 2, 2]),
];

/// Ordinary multiple point factor, `H^6/6!` coefficient, in `(m, e1..e5)` of the branch contacts.
pub(crate) const OMP6: &[(i64, [u32; 6])] = &[
    (-1, [6, 0, 0, 0, 0, 0]),
    (10, [4, 0, 0, 0, 0, 0]),
    (-15, [3, 0, 0, 0, 0, 0]),
    (-6, [2, 1, 0, 0, 0, 0]),
    (-3, [1, 2, 0, 0, 0, 0]),
    (-1, [0, 3, 0, 0, 0, 0]),
    (6, [2, 0, 0, 0, 0, 0]),
    (12, [1, 1, 0, 0, 0, 0]),
    (6, [1, 0, 1, 0, 0, 0]),
    (3, [0, 2, 0, 0, 0, 0]),
    (3, [0, 1, 1, 0, 0, 0]),
    (-2, [0, 1, 0, 0, 0, 0]),
    (-6, [0, 0, 1, 0, 0, 0]),
    (-3, [0, 0, 0, 1, 0, 0]),
];

/// As [`OMP6`], `H^7/7!` coefficient.
pub(crate) const OMP7: &[(i64, [u32; 6])] = &[
    (6, [7, 0, 0, 0, 0, 0]),
    (-60, [5, 0, 0, 0, 0, 0]),
    (90, [4, 0, 0, 0, 0, 0]),
    (30, [3, 1, 0, 0, 0, 0]),
    (18, [2, 2, 0, 0, 0, 0]),
    (9, [1, 3, 0, 0, 0, 0]),
    (3, [0, 4, 0, 0, 0, 0]),
    (-36, [3, 0, 0, 0, 0, 0]),
    (-60, [2, 1, 0, 0, 0, 0]),
    (-36, [2, 0, 1, 0, 0, 0]),
    (-24, [1, 2, 0, 0, 0, 0]),
    (-27, [1, 1, 1, 0, 0, 0]),
    (-6, [0, 3, 0, 0, 0, 0]),
    (-12, [0, 2, 1, 0, 0, 0]),
    (30, [1, 1, 0, 0, 0, 0]),
    (48, [1, 0, 1, 0, 0, 0]),
    (27, [1, 0, 0, 1, 0, 0]),
    (6, [0, 2, 0, 0, 0, 0]),
    (18, [0, 1, 1, 0, 0, 0]),
    (12, [0, 1, 0, 1, 0, 0]),
    (6, [0, 0, 2, 0, 0, 0]),
    (-36, [0, 1, 0, 0, 0, 0]),
    (-12, [0, 0, 1, 0, 0, 0]),
    (-18, [0, 0, 0, 1, 0, 0]),
    (-12, [0, 0, 0, 0, 1, 0]),
];

/// As [`OMP6`], `H^8/8!` coefficient.
pub(crate) const OMP8: &[(i64, [u32; 6])] = &[
    (-21, [8, 0, 0, 0, 0, 0]),
    (210, [6, 0, 0, 0, 0, 0]),
    (-315, [5, 0, 0, 0, 0, 0]),
    (-90, [4, 1, 0, 0, 0, 0]),
    (-60, [3, 2, 0, 0, 0, 0]),
    (-36, [2, 3, 0, 0, 0, 0]),
    (-18, [1, 4, 0, 0, 0, 0]),
    (-6, [0, 5, 0, 0, 0, 0]),
    (126, [4, 0, 0, 0, 0, 0]),
    (180, [3, 1, 0, 0, 0, 0]),
    (120, [3, 0, 1, 0, 0, 0]),
    (90, [2, 2, 0, 0, 0, 0]),
    (108, [2, 1, 1, 0, 0, 0]),
    (36, [1, 3, 0, 0, 0, 0]),
    (72, [1, 2, 1, 0, 0, 0]),
    (9, [0, 4, 0, 0, 0, 0]),
    (30, [0, 3, 1, 0, 0, 0]),
    (-90, [2, 1, 0, 0, 0, 0]),
    (-180, [2, 0, 1, 0, 0, 0]),
    (-108, [2, 0, 0, 1, 0, 0]),
    (-30, [1, 2, 0, 0, 0, 0]),
    (-108, [1, 1, 1, 0, 0, 0]),
    (-72, [1, 1, 0, 1, 0, 0]),
    (-36, [1, 0, 2, 0, 0, 0]),
    (-6, [0, 3, 0, 0, 0, 0]),
    (-36, [0, 2, 1, 0, 0, 0]),
    (-30, [0, 2, 0, 1, 0, 0]),
    (-30, [0, 1, 2, 0, 0, 0]),
    (60, [1, 0, 1, 0, 0, 0]),
    (108, [1, 0, 0, 1, 0, 0]),
    (72, [1, 0, 0, 0, 1, 0]),
    (18, [0, 1, 1, 0, 0, 0]),
    (36, [0, 1, 0, 1, 0, 0]),
    (30, [0, 1, 0, 0, 1, 0]),
    (18, [0, 0, 2, 0, 0, 0]),
    (30, [0, 0, 1, 1, 0, 0]),
    (192, [0, 1, 0, 0, 0, 0]),
    (-18, [0, 0, 0, 1, 0, 0]),
    (-36, [0, 0, 0, 0, 1, 0]),
    (-30, [0, 0, 0, 0, 0, 1]),
];
