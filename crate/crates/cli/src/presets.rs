use clap::ValueEnum;
use serde::Serialize;

/// Parameter sets of the published figures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Preset {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
    Fig7,
    Fig8,
    Fig9,
    Fig10,
}

#[derive(Debug, Clone, Default)]
pub struct PresetValues {
    pub theta: Option<f64>,
    pub alpha: Option<f64>,
    pub rayleigh: Option<bool>,
    pub lambda: Option<f64>,
    pub p: Option<f64>,
    pub nu: Option<f64>,
    pub eps: Option<f64>,
    pub eps_grid: Option<&'static str>,
    pub grid: Option<&'static str>,
}

const TENTH: f64 = 0.1;

impl Preset {
    pub fn values(self) -> PresetValues {
        let base = PresetValues { theta: Some(TENTH), alpha: Some(4.0), rayleigh: Some(false), ..Default::default() };
        match self {
            // histogram of link success probabilities, λp = 1/3
            Preset::Fig1 => PresetValues { nu: Some(1.0 / 3.0), p: Some(1.0), eps: Some(0.1), ..base },
            // λ_ε against p at λp = 1/10
            Preset::Fig2 => PresetValues {
                nu: Some(0.1),
                eps_grid: Some("0.05,0.1,0.15,0.2,0.25,0.3"),
                grid: Some("0.01:1:100"),
                ..base
            },
            // λ_ε against λp
            Preset::Fig3 => PresetValues { eps: Some(0.1), p: Some(1.0), grid: Some("log:1e-3:1:61"), ..base },
            // λ_ε over (λ, p)
            Preset::Fig4 | Preset::Fig5 => PresetValues { eps: Some(0.1), grid: Some("log:1e-2:10:31"), ..base },
            // diversity polynomial against b
            Preset::Fig6 => PresetValues { alpha: Some(4.0), grid: Some("log:1:1e3:31"), ..base },
            Preset::Fig7 => PresetValues { eps_grid: Some("0.01:0.99:50"), ..base },
            Preset::Fig8 => PresetValues {
                theta: Some(1.0),
                lambda: Some(0.5),
                p: Some(1.0 / 3.0),
                eps_grid: Some("log:1e-3:0.5:40"),
                ..base
            },
            Preset::Fig9 => PresetValues { eps: Some(0.007), ..base },
            Preset::Fig10 => PresetValues { rayleigh: Some(true), eps_grid: Some("0.01:0.99:50"), ..base },
        }
    }
}
