//! Tabulated F-triangles of rank 3 and 4, as integer term lists `(i, j, c)`
//! for `c·x^i·y^j`, together with their A-parts.

pub type Terms = &'static [(u32, u32, i64)];

#[derive(Clone, Copy, Debug)]
pub struct TableRow {
    pub name: &'static str,
    pub rank: u32,
    pub expanded: Terms,
    pub a_part: Terms,
}

pub const A3: TableRow = TableRow {
    name: "A3",
    rank: 3,
    expanded: &[
        (0, 0, 1), (1, 0, -6), (0, 1, -3), (2, 0, 10), (1, 1, 8), (0, 2, 3),
        (3, 0, -5), (2, 1, -5), (1, 2, -3), (0, 3, -1),
    ],
    a_part: &[(0, 0, 5), (1, 0, -5), (0, 1, -5)],
};

pub const B3: TableRow = TableRow {
    name: "B3",
    rank: 3,
    expanded: &[
        (0, 0, 1), (1, 0, -9), (0, 1, -3), (2, 0, 18), (1, 1, 9), (0, 2, 3),
        (3, 0, -10), (2, 1, -6), (1, 2, -3), (0, 3, -1),
    ],
    a_part: &[(0, 0, 8), (1, 0, -10), (0, 1, -6)],
};

pub const H3: TableRow = TableRow {
    name: "H3",
    rank: 3,
    expanded: &[
        (0, 0, 1), (1, 0, -15), (0, 1, -3), (2, 0, 35), (1, 1, 10), (0, 2, 3),
        (3, 0, -21), (2, 1, -7), (1, 2, -3), (0, 3, -1),
    ],
    a_part: &[(0, 0, 14), (1, 0, -21), (0, 1, -7)],
};

pub const A4: TableRow = TableRow {
    name: "A4",
    rank: 4,
    expanded: &[
        (0, 0, 1), (1, 0, -10), (2, 0, 30), (3, 0, -35), (4, 0, 14),
        (0, 1, -4), (1, 1, 20), (2, 1, -30), (3, 1, 14),
        (0, 2, 6), (1, 2, -15), (2, 2, 9), (0, 3, -4), (1, 3, 4), (0, 4, 1),
    ],
    a_part: &[(0, 0, 9), (1, 0, -21), (2, 0, 14), (0, 1, -16), (1, 1, 14), (0, 2, 9)],
};

pub const B4: TableRow = TableRow {
    name: "B4",
    rank: 4,
    expanded: &[
        (0, 0, 1), (1, 0, -16), (2, 0, 60), (3, 0, -80), (4, 0, 35),
        (0, 1, -4), (1, 1, 24), (2, 1, -40), (3, 1, 20),
        (0, 2, 6), (1, 2, -16), (2, 2, 10), (0, 3, -4), (1, 3, 4), (0, 4, 1),
    ],
    a_part: &[(0, 0, 15), (1, 0, -45), (2, 0, 35), (0, 1, -20), (1, 1, 20), (0, 2, 10)],
};

pub const D4: TableRow = TableRow {
    name: "D4",
    rank: 4,
    expanded: &[
        (0, 0, 1), (1, 0, -12), (2, 0, 39), (3, 0, -48), (4, 0, 20),
        (0, 1, -4), (1, 1, 21), (2, 1, -33), (3, 1, 16),
        (0, 2, 6), (1, 2, -15), (2, 2, 9), (0, 3, -4), (1, 3, 4), (0, 4, 1),
    ],
    a_part: &[(0, 0, 11), (1, 0, -28), (2, 0, 20), (0, 1, -17), (1, 1, 16), (0, 2, 9)],
};

pub const F4: TableRow = TableRow {
    name: "F4",
    rank: 4,
    expanded: &[
        (0, 0, 1), (1, 0, -24), (2, 0, 101), (3, 0, -144), (4, 0, 66),
        (0, 1, -4), (1, 1, 26), (2, 1, -46), (3, 1, 24),
        (0, 2, 6), (1, 2, -16), (2, 2, 10), (0, 3, -4), (1, 3, 4), (0, 4, 1),
    ],
    a_part: &[(0, 0, 23), (1, 0, -78), (2, 0, 66), (0, 1, -22), (1, 1, 24), (0, 2, 10)],
};

pub const H4: TableRow = TableRow {
    name: "H4",
    rank: 4,
    expanded: &[
        (0, 0, 1), (1, 0, -60), (2, 0, 307), (3, 0, -480), (4, 0, 232),
        (0, 1, -4), (1, 1, 31), (2, 1, -59), (3, 1, 32),
        (0, 2, 6), (1, 2, -17), (2, 2, 11), (0, 3, -4), (1, 3, 4), (0, 4, 1),
    ],
    a_part: &[(0, 0, 59), (1, 0, -248), (2, 0, 232), (0, 1, -27), (1, 1, 32), (0, 2, 11)],
};

pub const A1A3: TableRow = TableRow {
    name: "A1*A3",
    rank: 4,
    expanded: &[
        (0, 0, 1), (1, 0, -7), (2, 0, 16), (3, 0, -15), (4, 0, 5),
        (0, 1, -4), (1, 1, 17), (2, 1, -23), (3, 1, 10),
        (0, 2, 6), (1, 2, -14), (2, 2, 8), (0, 3, -4), (1, 3, 4), (0, 4, 1),
    ],
    a_part: &[(0, 0, 6), (1, 0, -10), (2, 0, 5), (0, 1, -13), (1, 1, 10), (0, 2, 8)],
};

pub const A1B3: TableRow = TableRow {
    name: "A1*B3",
    rank: 4,
    expanded: &[
        (0, 0, 1), (1, 0, -10), (2, 0, 27), (3, 0, -28), (4, 0, 10),
        (0, 1, -4), (1, 1, 21), (2, 1, -33), (3, 1, 16),
        (0, 2, 6), (1, 2, -15), (2, 2, 9), (0, 3, -4), (1, 3, 4), (0, 4, 1),
    ],
    a_part: &[(0, 0, 9), (1, 0, -18), (2, 0, 10), (0, 1, -17), (1, 1, 16), (0, 2, 9)],
};

/// The A-part is the one determined by the expanded line; the printed A-part
/// line for this row repeats the `A1*B3` entry, see [`A1H3_PRINTED_A_PART`].
pub const A1H3: TableRow = TableRow {
    name: "A1*H3",
    rank: 4,
    expanded: &[
        (0, 0, 1), (1, 0, -16), (2, 0, 50), (3, 0, -56), (4, 0, 21),
        (0, 1, -4), (1, 1, 28), (2, 1, -52), (3, 1, 28),
        (0, 2, 6), (1, 2, -16), (2, 2, 10), (0, 3, -4), (1, 3, 4), (0, 4, 1),
    ],
    a_part: &[(0, 0, 15), (1, 0, -35), (2, 0, 21), (0, 1, -24), (1, 1, 28), (0, 2, 10)],
};

pub const A1H3_PRINTED_A_PART: Terms =
    &[(0, 0, 9), (1, 0, -18), (2, 0, 10), (0, 1, -17), (1, 1, 16), (0, 2, 9)];

pub const IRREDUCIBLE_ROWS: [TableRow; 8] = [A3, B3, H3, A4, B4, D4, F4, H4];

pub const PRODUCT_ROWS: [TableRow; 3] = [A1A3, A1B3, A1H3];
