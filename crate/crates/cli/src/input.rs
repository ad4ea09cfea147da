//! Model inputs on the command line.
//!
//! An input is either a path to a model file or a family spec such as
//! `family=borel p=7 r=2` (the `family=` prefix is optional). Several
//! inputs may follow one another; a token without `=`, or one starting with
//! `family=`, opens the next input. Quoted specs are split on whitespace.

use std::path::{Path, PathBuf};

use galmag::{io, Caps, ExtensionModel, FamilySpec};

use crate::{CmdResult, Failure};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelInput {
    File(PathBuf),
    Family(FamilySpec),
}

impl ModelInput {
    pub fn label(&self) -> String {
        match self {
            ModelInput::File(p) => p.display().to_string(),
            ModelInput::Family(f) => f.to_string(),
        }
    }

    pub fn load(&self, caps: Caps) -> CmdResult<ExtensionModel> {
        match self {
            ModelInput::File(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| Failure::parse(format!("{}: {e}", p.display())))?;
                Ok(io::read_model(&text, caps)?)
            }
            ModelInput::Family(f) => Ok(f.build(&caps)?),
        }
    }
}

pub fn split_inputs<S: AsRef<str>>(args: &[S]) -> CmdResult<Vec<ModelInput>> {
    let tokens: Vec<&str> = args
        .iter()
        .flat_map(|a| a.as_ref().split_whitespace())
        .collect();
    let mut groups: Vec<Vec<&str>> = Vec::new();
    for tok in tokens {
        let opens = !tok.contains('=') || tok.starts_with("family=");
        match groups.last_mut() {
            Some(g) if !opens => g.push(tok),
            _ if opens => groups.push(vec![tok]),
            _ => {
                return Err(Failure::parse(format!(
                    "parameter {tok:?} before any model"
                )))
            }
        }
    }
    groups
        .into_iter()
        .map(|g| {
            if g.len() == 1 && !g[0].contains('=') && Path::new(g[0]).is_file() {
                Ok(ModelInput::File(PathBuf::from(g[0])))
            } else {
                Ok(ModelInput::Family(FamilySpec::from_tokens(&g)?))
            }
        })
        .collect()
}

/// Exactly `n` inputs.
pub fn expect_inputs<S: AsRef<str>>(args: &[S], n: usize) -> CmdResult<Vec<ModelInput>> {
    let inputs = split_inputs(args)?;
    if inputs.len() != n {
        return Err(Failure::parse(format!(
            "expected {n} model input(s), got {}",
            inputs.len()
        )));
    }
    Ok(inputs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_sequential_specs() {
        let got = split_inputs(&["family=cyclic", "n=6", "semidirect r=2 s=3"]).unwrap();
        assert_eq!(
            got,
            vec![
                ModelInput::Family(FamilySpec::CyclicGalois { n: 6 }),
                ModelInput::Family(FamilySpec::SemidirectCluster { r: 2, s: 3 }),
            ]
        );
    }

    #[test]
    fn rejects_orphan_parameter() {
        assert_eq!(split_inputs(&["n=6"]).unwrap_err().code, crate::EXIT_PARSE);
        assert_eq!(
            split_inputs(&["nosuchfamily"]).unwrap_err().code,
            crate::EXIT_PARSE
        );
    }
}
