//! Bundled fixture documents.

use crate::error::{Error, Result};
use crate::functionals::{FlagCase, VolumeCase};
use crate::toric::ToricModel;
use crate::zariski::ThreefoldFamily;

/// Toric models keyed by their fixture name.
pub const MODELS: &[(&str, &str)] = &[
    ("Y0-A1", include_str!("../fixtures/a1_y0.json")),
    ("Y1-A1", include_str!("../fixtures/a1_y1.json")),
    ("Y0-A2", include_str!("../fixtures/a2_y0.json")),
    ("Y1-A2", include_str!("../fixtures/a2_y1.json")),
    ("Y2-A2", include_str!("../fixtures/a2_y2.json")),
    ("Ytilde-A2", include_str!("../fixtures/a2_ytilde.json")),
    ("F0tilde-A2", include_str!("../fixtures/a2_f0tilde.json")),
    ("X42-toric", include_str!("../fixtures/x42_toric.json")),
];

pub fn model(name: &str) -> Result<ToricModel> {
    let (_, text) = MODELS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Fixture {
            name: name.to_string(),
            reason: "no such model".into(),
        })?;
    ToricModel::from_json(text).map_err(|e| match e {
        Error::Fixture { reason, .. } => Error::Fixture {
            name: name.to_string(),
            reason,
        },
        other => other,
    })
}

pub fn model_names() -> impl Iterator<Item = &'static str> {
    MODELS.iter().map(|(n, _)| *n)
}

/// Threefold families with their claimed chambers.
pub const FAMILIES: &[(&str, &str)] = &[
    ("a1", include_str!("../fixtures/a1_volume.json")),
    ("a2", include_str!("../fixtures/a2_volume.json")),
];

pub fn family(name: &str) -> Result<ThreefoldFamily> {
    let (_, text) = FAMILIES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Fixture {
            name: name.to_string(),
            reason: "no such family".into(),
        })?;
    ThreefoldFamily::from_json(text)
}

/// Every bundled model, loaded.
pub fn all_models() -> Result<Vec<ToricModel>> {
    model_names().map(model).collect()
}

/// Nested flag computations.
pub const FLAGS: &[(&str, &str)] = &[
    (
        "family39/flag_s",
        include_str!("../fixtures/flags/family39_s.json"),
    ),
    ("a1/flag_e", include_str!("../fixtures/flags/a1_e.json")),
    (
        "a1/flag_C_ordinary",
        include_str!("../fixtures/flags/a1_ordinary.json"),
    ),
    (
        "a1/flag_C_weighted",
        include_str!("../fixtures/flags/a1_weighted.json"),
    ),
    ("a2/flag_C1", include_str!("../fixtures/flags/a2_c1.json")),
    ("a2/flag_C3", include_str!("../fixtures/flags/a2_c3.json")),
    (
        "a2/flag_pencil",
        include_str!("../fixtures/flags/a2_general.json"),
    ),
];

pub fn flag(name: &str) -> Result<FlagCase> {
    let (_, text) = FLAGS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Fixture {
            name: name.to_string(),
            reason: "no such flag case".into(),
        })?;
    FlagCase::from_json(text)
}

pub fn flag_names() -> impl Iterator<Item = &'static str> {
    FLAGS.iter().map(|(n, _)| *n)
}

/// Divisors given by printed volume functions.
pub fn volume_cases() -> Result<Vec<VolumeCase>> {
    serde_json::from_str(include_str!("../fixtures/volume_cases.json")).map_err(|e| {
        Error::Fixture {
            name: "volume cases".into(),
            reason: e.to_string(),
        }
    })
}

pub fn volume_case(label: &str) -> Result<VolumeCase> {
    volume_cases()?
        .into_iter()
        .find(|c| c.label == label)
        .ok_or_else(|| Error::Fixture {
            name: label.to_string(),
            reason: "no such volume case".into(),
        })
}
