//! Group and model files.
//!
//! Both are TOML documents with cycle-notation generators:
//!
//! ```toml
//! degree = 4
//! generators = ["(1 2 3 4)", "(1 3)"]
//! subgroup_generators = ["(2 4)"]
//! ```
//!
//! A group file omits `subgroup_generators`. The formatters below emit the
//! canonical form, which parses back to identical text.

use serde::{Deserialize, Serialize};

use crate::cluster::ExtensionModel;
use crate::error::{Error, Result};
use crate::permcore::{Caps, PermGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub degree: usize,
    pub generators: Vec<String>,
    pub subgroup_generators: Vec<String>,
}

fn parse_gens(degree: usize, gens: &[String]) -> Result<Vec<Permutation>> {
    gens.iter().map(|s| Permutation::parse(s, degree)).collect()
}

fn show_gens(g: &PermGroup) -> Vec<String> {
    g.generators().iter().map(|p| p.to_string()).collect()
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Format(e.message().to_string()))
    }

    pub fn to_group(&self, caps: Caps) -> Result<PermGroup> {
        PermGroup::from_generators_with_caps(
            self.degree,
            parse_gens(self.degree, &self.generators)?,
            caps,
        )
    }

    pub fn from_group(g: &PermGroup) -> Self {
        GroupFile {
            degree: g.degree(),
            generators: show_gens(g),
        }
    }

    pub fn to_text(&self) -> String {
        toml::to_string(self).expect("plain data serializes")
    }
}

impl ModelFile {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Format(e.message().to_string()))
    }

    pub fn to_model(&self, caps: Caps) -> Result<ExtensionModel> {
        let g = PermGroup::from_generators_with_caps(
            self.degree,
            parse_gens(self.degree, &self.generators)?,
            caps,
        )?;
        let h = PermGroup::from_generators_with_caps(
            self.degree,
            parse_gens(self.degree, &self.subgroup_generators)?,
            caps,
        )?;
        ExtensionModel::new(g, h)
    }

    pub fn from_model(m: &ExtensionModel) -> Self {
        ModelFile {
            degree: m.group().degree(),
            generators: show_gens(m.group()),
            subgroup_generators: show_gens(m.sub()),
        }
    }

    pub fn to_text(&self) -> String {
        toml::to_string(self).expect("plain data serializes")
    }
}

pub fn read_model(text: &str, caps: Caps) -> Result<ExtensionModel> {
    ModelFile::parse(text)?.to_model(caps)
}

pub fn write_model(m: &ExtensionModel) -> String {
    ModelFile::from_model(m).to_text()
}
