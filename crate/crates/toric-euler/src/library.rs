//! Built-in example fans, matching the fan files bundled with the CLI.

use crate::fan::Fan;

/// The projective plane: three rays, three maximal cones.
pub fn projective_plane() -> Fan {
    Fan::new(
        2,
        vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
        vec![vec![0, 1], vec![1, 2], vec![2, 0]],
    )
    .expect("static fan")
}

/// Product of two projective lines; rays are the four coordinate directions.
pub fn p1_x_p1() -> Fan {
    Fan::new(
        2,
        vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]],
        vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]],
    )
    .expect("static fan")
}

/// The Hirzebruch surface with parameter `a >= 0`.
pub fn hirzebruch(a: i64) -> Fan {
    Fan::new(
        2,
        vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]],
        vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
    )
    .expect("static fan")
}

/// Weighted projective space with weights (1,1,2), up to ray reordering.
pub fn weighted_p112() -> Fan {
    Fan::new(
        2,
        vec![vec![1, 0], vec![0, 1], vec![-1, -2]],
        vec![vec![0, 1], vec![1, 2], vec![2, 0]],
    )
    .expect("static fan")
}

/// A simplicial surface with class group Z + Z/3: combinatorially the
/// projective plane, but with torsion in the divisor class group.
pub fn fake_projective_plane() -> Fan {
    Fan::new(
        2,
        vec![vec![1, 2], vec![1, -1], vec![-2, -1]],
        vec![vec![0, 1], vec![1, 2], vec![2, 0]],
    )
    .expect("static fan")
}

/// Projective 3-space: the boundary of the 3-simplex.
pub fn projective_3space() -> Fan {
    Fan::new(
        3,
        vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![-1, -1, -1],
        ],
        vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
    )
    .expect("static fan")
}

/// Every bundled fan with its file-stem name.
pub fn all() -> Vec<(&'static str, Fan)> {
    vec![
        ("p2", projective_plane()),
        ("p1xp1", p1_x_p1()),
        ("hirzebruch1", hirzebruch(1)),
        ("hirzebruch2", hirzebruch(2)),
        ("hirzebruch3", hirzebruch(3)),
        ("p112", weighted_p112()),
        ("fake_p2", fake_projective_plane()),
        ("p3", projective_3space()),
    ]
}
