//! Reference values for the J(2n, -2m) family.
#![allow(dead_code)]

use jknot_cs::KnotParams;

pub fn knot(n: u32, m: u32) -> KnotParams {
    KnotParams::new(n, m).unwrap()
}

/// `(n, m, alpha0, cs mod 1/2)` for `1 <= m <= n <= 4`.
pub const KNOTS: [(u32, u32, f64, f64); 10] = [
    (1, 1, 2.094395102393195, 0.0),
    (2, 1, 2.574_140_778_131_84, 0.34402298),
    (3, 1, 2.750_685_152_010_28, 0.27786688),
    (4, 1, 2.843209532683532, 0.24222232),
    (2, 2, 2.847642272262783, 0.0),
    (3, 2, 2.942465754372979, 0.42782933),
    (4, 2, 2.990_939_179_603_15, 0.38923730),
    (3, 3, 3.007_517_657_179_94, 0.0),
    (4, 3, 3.040474611156828, 0.46103929),
    (4, 4, 3.065453796328835, 0.0),
];

/// One block per knot: `(n, m, [(k, orbifold cs, cover cs); k = 3..=10])`.
pub type OrbifoldBlock = (u32, u32, [(u32, f64, f64); 8]);

pub const ORBIFOLDS: [OrbifoldBlock; 6] = [
    (
        2,
        1,
        [
            (3, 0.0875301, 0.26259),
            (4, 0.144925, 0.579699),
            (5, 0.0784576, 0.392288),
            (6, 0.0351571, 0.210943),
            (7, 0.00506505, 0.0354553),
            (8, 0.108039, 0.864313),
            (9, 0.0218112, 0.196301),
            (10, 0.0530574, 0.530574),
        ],
    ),
    (
        3,
        1,
        [
            (3, 0.0449535, 0.13486),
            (4, 0.0876043, 0.350417),
            (5, 0.0165337, 0.0826684),
            (6, 0.138167, 0.829004),
            (7, 0.0120078, 0.0840545),
            (8, 0.0430876, 0.3447),
            (9, 0.012125, 0.109125),
            (10, 0.0876213, 0.876213),
        ],
    ),
    (
        4,
        1,
        [
            (3, 0.0161266, 0.0483799),
            (4, 0.0536832, 0.214733),
            (5, 0.0817026, 0.408513),
            (6, 0.103012, 0.618074),
            (7, 0.0481239, 0.336867),
            (8, 0.00768503, 0.0614802),
            (9, 0.032221, 0.289989),
            (10, 0.0521232, 0.521232),
        ],
    ),
    (
        3,
        2,
        [
            (3, 0.125912, 0.377736),
            (4, 0.192764, 0.771058),
            (5, 0.0360431, 0.180216),
            (6, 0.0996796, 0.598077),
            (7, 0.00284328, 0.0199029),
            (8, 0.0554674, 0.443739),
            (9, 0.0409685, 0.368717),
            (10, 0.0294401, 0.294401),
        ],
    ),
    (
        4,
        2,
        [
            (3, 0.098074, 0.294222),
            (4, 0.157843, 0.631371),
            (5, 0.0993608, 0.496804),
            (6, 0.0622858, 0.373715),
            (7, 0.0365103, 0.255572),
            (8, 0.0174882, 0.139906),
            (9, 0.00284881, 0.0256393),
            (10, 0.091224, 0.91224),
        ],
    ),
    (
        4,
        3,
        [
            (3, 0.138854, 0.416562),
            (4, 0.214725, 0.858898),
            (5, 0.0628859, 0.31443),
            (6, 0.128841, 0.773046),
            (7, 0.0332457, 0.23272),
            (8, 0.0866094, 0.692875),
            (9, 0.0170324, 0.153291),
            (10, 0.0613865, 0.613865),
        ],
    ),
];
