//! Reference values transcribed from the published tables of `𝒥_g^0`
//! (`2 ≤ g ≤ 9`) and `𝒥_g^top` (`2 ≤ g ≤ 4`), stored in the Laurent
//! polynomial JSON schema.

use crate::error::Result;
use crate::formulas::Kind;
use crate::plaurent::PLaurent;

const WEIGHT_ZERO: [(u32, &str); 8] = [
    (2, include_str!("../golden/wt0_g2.json")),
    (3, include_str!("../golden/wt0_g3.json")),
    (4, include_str!("../golden/wt0_g4.json")),
    (5, include_str!("../golden/wt0_g5.json")),
    (6, include_str!("../golden/wt0_g6.json")),
    (7, include_str!("../golden/wt0_g7.json")),
    (8, include_str!("../golden/wt0_g8.json")),
    (9, include_str!("../golden/wt0_g9.json")),
];

const TOPOLOGICAL: [(u32, &str); 3] = [
    (2, include_str!("../golden/top_g2.json")),
    (3, include_str!("../golden/top_g3.json")),
    (4, include_str!("../golden/top_g4.json")),
];

/// Genera with a transcribed reference row.
pub fn genera(kind: Kind) -> Vec<u32> {
    rows(kind).iter().map(|&(g, _)| g).collect()
}

fn rows(kind: Kind) -> &'static [(u32, &'static str)] {
    match kind {
        Kind::WeightZero => &WEIGHT_ZERO,
        Kind::Topological => &TOPOLOGICAL,
    }
}

/// Raw JSON text of a reference row.
pub fn golden_json(kind: Kind, g: u32) -> Option<&'static str> {
    rows(kind).iter().find(|&&(h, _)| h == g).map(|&(_, s)| s)
}

pub fn golden(kind: Kind, g: u32) -> Option<Result<PLaurent>> {
    golden_json(kind, g).map(PLaurent::from_json)
}
