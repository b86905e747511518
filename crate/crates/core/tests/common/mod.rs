#![allow(dead_code)]

pub mod taylor;

use rovib::centrifugal::Blend;
use rovib::potentials::{MrParams, PtParams};

/// Manning-Rosen reference set: ħ = μ = 1, α = 1.5, b = 40, A = 2b.
pub fn mr_params() -> MrParams<f64> {
    MrParams::new(80.0, 1.5, 40.0)
}

/// Pöschl-Teller reference set: ħ = μ = 1, ξ₁ = 4, ξ₂ = 2, α = 0.05.
pub fn pt_params() -> PtParams<f64> {
    PtParams::new(4.0, 2.0, 0.05)
}

pub const MR_BLENDS: [(f64, f64); 5] = [(1.0, 1.0), (0.0, 1.0), (1.0, 0.0), (-1.5, 1.0), (-2.5, 1.0)];
pub const PT_BLENDS: [(f64, f64); 5] = [(1.0, 1.0), (0.0, 1.0), (1.0, 0.0), (0.5, -1.0), (0.5, -2.0)];

pub fn blend((l, n): (f64, f64)) -> Blend<f64> {
    Blend::new(l, n)
}

/// `(n_r, l, −E per blend, |E| reference)`
pub type Row = (u32, u32, [f64; 5], f64);

pub const MR_TABLE: [Row; 8] = [
    (1, 1, [0.036913014, 0.036913019, 0.069378105, 0.036913027, 0.036913032], 0.036913922),
    (1, 2, [0.018208662, 0.018208677, 0.069378064, 0.0182087, 0.018208715], 0.0182117637),
    (1, 3, [0.0086497057, 0.0086497369, 0.069378003, 0.0086497836, 0.0086498148], 0.0086619417),
    (1, 4, [0.003521352, 0.0035214045, 0.069377922, 0.0035214833, 0.0035215358], 0.0035623305),
    (2, 1, [0.017172833, 0.017172838, 0.029925043, 0.017172846, 0.017172851], 0.0171740303),
    (2, 2, [0.0085339943, 0.0085340099, 0.029925003, 0.0085340333, 0.0085340489], 0.0085414805),
    (2, 3, [0.0036481309, 0.0036481624, 0.029924942, 0.0036482097, 0.0036482412], 0.0036774476),
    (2, 4, [0.00093625137, 0.00093630425, 0.02992486, 0.00093638357, 0.00093643645], 0.0010296092),
];

pub const PT_TABLE: [Row; 8] = [
    (1, 1, [0.21560894, 0.21540061, 0.21524815, 0.21499153, 0.21473492], 0.215258812),
    (1, 2, [0.21478931, 0.21416431, 0.2137065, 0.21293627, 0.21216612], 0.2141062447),
    (1, 3, [0.2135647, 0.2123147, 0.21139777, 0.20985618, 0.20831492], 0.212382835),
    (1, 4, [0.21194083, 0.2098575, 0.20832642, 0.2057546, 0.20318371], 0.2100950625),
    (2, 1, [0.18400157, 0.18379323, 0.18363528, 0.18337317, 0.18311107], 0.1836932855),
    (2, 2, [0.18324436, 0.18261936, 0.18214507, 0.18135837, 0.18057175], 0.1826114098),
    (2, 3, [0.18211323, 0.18086323, 0.17991337, 0.17833885, 0.17676468], 0.180993962),
    (2, 4, [0.18061374, 0.17853041, 0.17694447, 0.17431782, 0.17169211], 0.178847328),
];
