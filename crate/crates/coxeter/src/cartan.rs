//! Integer Cartan data for the supported crystallographic types.
//!
//! Node labelings (validated against the double-coset representative
//! words each type must reproduce):
//!
//! * `A_l`: chain `1 - 2 - ... - l`.
//! * `B_l`: chain `1 = 2 - 3 - ... - l` with node 1 the short root
//!   (the double bond sits at the low end).
//! * `D_l`: fork prongs `1`, `2` joined to `3`, then the chain
//!   `3 - 4 - ... - l`; node 2 is the sign-flip prong.
//! * `E6/E7/E8`: chain `1 - 2 - 3 - 5 - 6 (- 7 (- 8))` with node 4
//!   attached to node 3.
//! * `F4`: chain `1 - 2 = 3 - 4`, nodes 3 and 4 short.

/// Entry `a[i][j] = 2(α_i, α_j) / (α_j, α_j)` (0-indexed nodes).
pub type Cartan = Vec<Vec<i64>>;

fn simply_laced(rank: usize, edges: &[(usize, usize)]) -> Cartan {
    let mut a = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        a[i][i] = 2;
    }
    for &(x, y) in edges {
        a[x - 1][y - 1] = -1;
        a[y - 1][x - 1] = -1;
    }
    a
}

pub fn type_a(rank: usize) -> Cartan {
    let edges: Vec<(usize, usize)> = (1..rank).map(|i| (i, i + 1)).collect();
    simply_laced(rank, &edges)
}

pub fn type_b(rank: usize) -> Cartan {
    let edges: Vec<(usize, usize)> = (1..rank).map(|i| (i, i + 1)).collect();
    let mut a = simply_laced(rank, &edges);
    // node 1 short, node 2 long: a[long][short] = -2
    a[1][0] = -2;
    a[0][1] = -1;
    a
}

pub fn type_d(rank: usize) -> Cartan {
    let mut edges: Vec<(usize, usize)> = vec![(1, 3), (2, 3)];
    edges.extend((3..rank).map(|i| (i, i + 1)));
    simply_laced(rank, &edges)
}

pub fn type_e(rank: usize) -> Cartan {
    let mut edges: Vec<(usize, usize)> = vec![(1, 2), (2, 3), (3, 5), (5, 6), (3, 4)];
    if rank >= 7 {
        edges.push((6, 7));
    }
    if rank >= 8 {
        edges.push((7, 8));
    }
    simply_laced(rank, &edges)
}

pub fn type_f4() -> Cartan {
    let mut a = simply_laced(4, &[(1, 2), (2, 3), (3, 4)]);
    // nodes 1, 2 long; nodes 3, 4 short
    a[1][2] = -2;
    a[2][1] = -1;
    a
}

/// Classical positive-root counts, used to validate construction.
pub fn positive_root_count(letter: char, rank: usize) -> usize {
    match (letter, rank) {
        ('A', l) => l * (l + 1) / 2,
        ('B', l) => l * l,
        ('D', l) => l * (l - 1),
        ('E', 6) => 36,
        ('E', 7) => 63,
        ('E', 8) => 120,
        ('F', 4) => 24,
        _ => unreachable!(),
    }
}
