//! Standard smooth complete fans used by tests, fixtures and the demo.

use super::Fan;

/// Two-dimensional fan from rays listed counterclockwise; cones are
/// consecutive pairs.
pub fn polygon_fan(rays: Vec<Vec<i64>>) -> Fan {
    let n = rays.len();
    let cones = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
    Fan::new(2, rays, cones)
}

pub fn point() -> Fan {
    Fan::new(0, Vec::new(), vec![Vec::new()])
}

/// Rays `+1`, `-1`.
pub fn p1() -> Fan {
    Fan::new(1, vec![vec![1], vec![-1]], vec![vec![0], vec![1]])
}

/// Rays `e1, e2, -e1-e2`.
pub fn p2() -> Fan {
    polygon_fan(vec![vec![1, 0], vec![0, 1], vec![-1, -1]])
}

/// Rays `(1,0), (-1,0), (0,1), (0,-1)`: the first two span the first factor.
pub fn p1xp1() -> Fan {
    Fan::new(
        2,
        vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]],
        vec![vec![0, 2], vec![1, 2], vec![1, 3], vec![0, 3]],
    )
}

/// Hirzebruch surface `F_a`: rays `(1,0), (0,1), (-1,a), (0,-1)`.
/// Ray 1 is the negative section (self-intersection `-a`).
pub fn hirzebruch(a: i64) -> Fan {
    polygon_fan(vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]])
}

/// Rays `e1, e2, e3, -e1-e2-e3`.
pub fn p3() -> Fan {
    let rays = vec![
        vec![1, 0, 0],
        vec![0, 1, 0],
        vec![0, 0, 1],
        vec![-1, -1, -1],
    ];
    let cones = (0..4)
        .map(|skip| (0..4).filter(|&r| r != skip).collect())
        .collect();
    Fan::new(3, rays, cones)
}

/// `P^2` blown up at `points` (1 to 3) torus-fixed points.
pub fn blowup_p2(points: usize) -> Fan {
    let rays = match points {
        1 => vec![vec![1, 0], vec![1, 1], vec![0, 1], vec![-1, -1]],
        2 => vec![
            vec![1, 0],
            vec![1, 1],
            vec![0, 1],
            vec![-1, 0],
            vec![-1, -1],
        ],
        3 => vec![
            vec![1, 0],
            vec![1, 1],
            vec![0, 1],
            vec![-1, 0],
            vec![-1, -1],
            vec![0, -1],
        ],
        _ => panic!("blowup_p2 supports 1 to 3 points"),
    };
    polygon_fan(rays)
}

/// The eight fans of the oracle sweep.
pub fn sweep() -> Vec<(&'static str, Fan)> {
    vec![
        ("P1", p1()),
        ("P2", p2()),
        ("P1xP1", p1xp1()),
        ("F1", hirzebruch(1)),
        ("F2", hirzebruch(2)),
        ("F3", hirzebruch(3)),
        ("P3", p3()),
        ("Bl1P2", blowup_p2(1)),
    ]
}

/// Sweep corpus plus the extra blow-ups.
pub fn all() -> Vec<(&'static str, Fan)> {
    let mut fans = sweep();
    fans.push(("Bl2P2", blowup_p2(2)));
    fans.push(("Bl3P2", blowup_p2(3)));
    fans
}
