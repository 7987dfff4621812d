//! Tabulated label data for W(F4). Everything here is transcribed; the rest
//! of the crate recomputes as much of it as can be recomputed.

use serde::Serialize;

use super::names::{CarterLabel, KondoLabel, Prime};

/// One row of the table of irreducible characters: Kondo and Carter names,
/// a-value, and the values on the classes of `d, a`, of `τ, τσ`, and of `aτ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LabelRow {
    pub kondo: KondoLabel,
    pub carter: CarterLabel,
    pub a_value: u32,
    pub val_da: i64,
    pub val_tt: i64,
    pub val_at: i64,
}

const fn row(
    n: u32,
    j: u32,
    d: u32,
    b: u32,
    prime: Prime,
    a_value: u32,
    vals: [i64; 3],
) -> LabelRow {
    LabelRow {
        kondo: KondoLabel::new(n, j),
        carter: CarterLabel::new(d, b, prime),
        a_value,
        val_da: vals[0],
        val_tt: vals[1],
        val_at: vals[2],
    }
}

use Prime::{Double as DD, None as NP, Single as SG};

pub const TABLE1: [LabelRow; 25] = [
    row(1, 1, 1, 0, NP, 0, [1, 1, 1]),
    row(4, 2, 4, 1, NP, 1, [2, 2, 2]),
    row(2, 1, 2, 4, DD, 1, [2, 0, 0]),
    row(2, 3, 2, 4, SG, 1, [0, 2, 0]),
    row(9, 1, 9, 2, NP, 2, [3, 3, 1]),
    row(8, 1, 8, 3, DD, 3, [4, 0, 0]),
    row(8, 3, 8, 3, SG, 3, [0, 4, 0]),
    row(12, 1, 12, 4, NP, 4, [0, 0, 0]),
    row(16, 1, 16, 5, NP, 4, [0, 0, 0]),
    row(9, 2, 9, 6, DD, 4, [3, -3, -1]),
    row(6, 2, 6, 6, DD, 4, [0, 0, 2]),
    row(9, 3, 9, 6, SG, 4, [-3, 3, -1]),
    row(6, 1, 6, 6, SG, 4, [0, 0, -2]),
    row(4, 4, 4, 7, SG, 4, [-2, 2, -2]),
    row(4, 3, 4, 7, DD, 4, [2, -2, -2]),
    row(4, 1, 4, 8, NP, 4, [0, 0, 0]),
    row(1, 3, 1, 12, SG, 4, [-1, 1, -1]),
    row(1, 2, 1, 12, DD, 4, [1, -1, -1]),
    row(8, 2, 8, 9, SG, 9, [-4, 0, 0]),
    row(8, 4, 8, 9, DD, 9, [0, -4, 0]),
    row(9, 4, 9, 10, NP, 10, [-3, -3, 1]),
    row(4, 5, 4, 13, NP, 13, [-2, -2, 2]),
    row(2, 2, 2, 16, SG, 13, [-2, 0, 0]),
    row(2, 4, 2, 16, DD, 13, [0, -2, 0]),
    row(1, 4, 1, 24, NP, 24, [-1, -1, 1]),
];

const fn pair(d: u32, b: u32, prime: Prime, n: u32, j: u32) -> (CarterLabel, KondoLabel) {
    (CarterLabel::new(d, b, prime), KondoLabel::new(n, j))
}

/// The conversion scheme as printed: Carter name against the Kondo name in
/// the convention with `d, a` reflections in short roots.
pub const TABLE2: [(CarterLabel, KondoLabel); 25] = [
    pair(1, 0, NP, 1, 1),
    pair(1, 12, DD, 1, 3),
    pair(1, 12, SG, 1, 2),
    pair(1, 24, NP, 1, 4),
    pair(2, 4, DD, 2, 3),
    pair(2, 16, SG, 2, 4),
    pair(2, 4, SG, 2, 1),
    pair(2, 16, DD, 2, 2),
    pair(4, 8, NP, 4, 1),
    pair(9, 2, NP, 9, 1),
    pair(9, 6, DD, 9, 3),
    pair(9, 6, SG, 9, 2),
    pair(9, 10, NP, 9, 4),
    pair(6, 6, SG, 6, 1),
    pair(6, 6, DD, 6, 2),
    pair(12, 4, NP, 12, 1),
    pair(4, 1, NP, 4, 2),
    pair(4, 7, DD, 4, 4),
    pair(4, 7, SG, 4, 3),
    pair(4, 13, NP, 4, 5),
    pair(8, 3, DD, 8, 3),
    pair(8, 9, SG, 8, 4),
    pair(8, 3, SG, 8, 1),
    pair(8, 9, DD, 8, 2),
    pair(16, 5, NP, 16, 1),
];

/// The seven swaps induced by the graph automorphism `s1 ↔ s4, s2 ↔ s3`.
pub const IOTA_SWAPS: [(KondoLabel, KondoLabel); 7] = [
    (KondoLabel::new(1, 2), KondoLabel::new(1, 3)),
    (KondoLabel::new(2, 1), KondoLabel::new(2, 3)),
    (KondoLabel::new(2, 2), KondoLabel::new(2, 4)),
    (KondoLabel::new(4, 3), KondoLabel::new(4, 4)),
    (KondoLabel::new(8, 1), KondoLabel::new(8, 3)),
    (KondoLabel::new(8, 2), KondoLabel::new(8, 4)),
    (KondoLabel::new(9, 2), KondoLabel::new(9, 3)),
];

pub fn row_by_kondo(k: KondoLabel) -> Option<&'static LabelRow> {
    TABLE1.iter().find(|r| r.kondo == k)
}

pub fn row_by_carter(c: CarterLabel) -> Option<&'static LabelRow> {
    TABLE1.iter().find(|r| r.carter == c)
}
