//! The twelve anisotropy parameter sets shipped with the tool.

use serde::Deserialize;

const PRESETS_TOML: &str = include_str!("../presets.toml");

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
pub struct Preset {
    pub id: u32,
    /// Uniaxial anisotropy constant, erg/cm³.
    pub k_u: f64,
    /// Fourth-order anisotropy constant, erg/cm³.
    pub k_4: f64,
}

#[derive(Deserialize)]
struct PresetFile {
    preset: Vec<Preset>,
}

/// All presets, ordered by id.
pub fn presets() -> Vec<Preset> {
    let file: PresetFile =
        toml::from_str(PRESETS_TOML).expect("bundled presets file is valid TOML");
    let mut list = file.preset;
    list.sort_by_key(|p| p.id);
    list
}

pub fn preset(id: u32) -> Option<Preset> {
    presets().into_iter().find(|p| p.id == id)
}
