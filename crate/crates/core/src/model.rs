//! Model files and the built-in corpus.
//!
//! A model file is a flat list of `key = value` lines:
//!
//! ```text
//! # comment
//! name = example4
//! dim = 6
//! structure = 0,12-45,-13+46,0,15-24,-16+34
//! omega = 14+35+62
//! flag = assert-completely-solvable
//! form.re_psi = 136+125+234-456
//! ```
//!
//! Values are syntax-checked while reading, so every error carries a line
//! number. Semantic checks (Jacobi, closedness and non-degeneracy of `ω`)
//! happen in [`ModelFile::build`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lie::{LieAlgebra, LieError, StructureEquations};
use crate::notation::{parse_differentials, parse_form, ParseError};
use crate::symplectic::{SymplecticError, SymplecticStructure};
use crate::{QForm, QLieAlgebra, QSymplectic, Rational};

/// How an error should be reported to a user.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Unreadable file, syntax error, unknown key.
    Input,
    /// Well-formed input that is not a valid Lie algebra or symplectic form.
    Validation,
    /// A statement that must hold failed.
    Inconsistent,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: `{key}`: {source}")]
    Value { line: usize, key: String, source: ParseError },
    #[error("missing required key `{0}`")]
    Missing(&'static str),
    #[error("unknown corpus model `{0}`")]
    UnknownCorpus(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Symplectic(#[from] SymplecticError),
}

impl ModelError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            ModelError::Lie(LieError::Parse(_)) => ErrorKind::Input,
            ModelError::Lie(_) => ErrorKind::Validation,
            ModelError::Symplectic(SymplecticError::Inconsistent { .. }) => ErrorKind::Inconsistent,
            ModelError::Symplectic(_) => ErrorKind::Validation,
            _ => ErrorKind::Input,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flag {
    AssertCompletelySolvable,
    AssertLattice,
}

impl Flag {
    pub fn as_str(self) -> &'static str {
        match self {
            Flag::AssertCompletelySolvable => "assert-completely-solvable",
            Flag::AssertLattice => "assert-lattice",
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Flag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "assert-completely-solvable" => Ok(Flag::AssertCompletelySolvable),
            "assert-lattice" => Ok(Flag::AssertLattice),
            other => Err(format!("unknown flag `{other}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelFile {
    pub name: String,
    pub dim: usize,
    pub structure: String,
    pub omega: Option<String>,
    pub flags: BTreeSet<Flag>,
    pub extra_forms: BTreeMap<String, String>,
}

/// A model with its strings parsed into exact objects.
#[derive(Clone, Debug)]
pub struct Model {
    pub file: ModelFile,
    pub algebra: QLieAlgebra,
    pub omega: Option<QForm>,
    pub forms: BTreeMap<String, QForm>,
}

impl Model {
    /// The validated symplectic structure.
    pub fn symplectic(&self) -> Result<QSymplectic, ModelError> {
        let omega = self.omega.clone().ok_or(ModelError::Missing("omega"))?;
        Ok(SymplecticStructure::new(self.algebra.clone(), omega)?)
    }
}

fn value_error(line: usize, key: &str, source: ParseError) -> ModelError {
    ModelError::Value { line, key: key.to_string(), source }
}

impl ModelFile {
    pub fn parse(text: &str) -> Result<Self, ModelError> {
        let mut name = None;
        let mut dim: Option<(usize, usize)> = None;
        let mut structure: Option<(usize, String)> = None;
        let mut omega: Option<(usize, String)> = None;
        let mut flags = BTreeSet::new();
        let mut forms: BTreeMap<String, (usize, String)> = BTreeMap::new();

        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| ModelError::Syntax { line, msg: format!("expected `key = value`, found `{content}`") })?;
            let (key, value) = (key.trim(), value.trim());
            if value.is_empty() {
                return Err(ModelError::Syntax { line, msg: format!("empty value for `{key}`") });
            }
            let duplicate = || ModelError::Syntax { line, msg: format!("duplicate key `{key}`") };
            match key {
                "name" => {
                    if name.replace(value.to_string()).is_some() {
                        return Err(duplicate());
                    }
                }
                "dim" => {
                    let d = value
                        .parse::<usize>()
                        .map_err(|_| ModelError::Syntax { line, msg: format!("`dim` must be a non-negative integer, found `{value}`") })?;
                    if dim.replace((line, d)).is_some() {
                        return Err(duplicate());
                    }
                }
                "structure" => {
                    if structure.replace((line, value.to_string())).is_some() {
                        return Err(duplicate());
                    }
                }
                "omega" => {
                    if omega.replace((line, value.to_string())).is_some() {
                        return Err(duplicate());
                    }
                }
                "flag" => {
                    let flag = value.parse::<Flag>().map_err(|msg| ModelError::Syntax { line, msg })?;
                    flags.insert(flag);
                }
                _ => match key.strip_prefix("form.") {
                    Some(form_name) if !form_name.is_empty() && form_name.chars().all(|c| c.is_alphanumeric() || c == '_') => {
                        if forms.insert(form_name.to_string(), (line, value.to_string())).is_some() {
                            return Err(duplicate());
                        }
                    }
                    _ => return Err(ModelError::Syntax { line, msg: format!("unknown key `{key}`") }),
                },
            }
        }

        let name = name.ok_or(ModelError::Missing("name"))?;
        let (structure_line, structure) = structure.ok_or(ModelError::Missing("structure"))?;
        let declared = dim.map(|(_, d)| d);
        let equations = parse_differentials::<Rational>(&structure, declared)
            .map_err(|e| value_error(structure_line, "structure", e))?;
        let dim = equations.len();
        if let Some((line, _)) = omega.as_ref() {
            if dim % 2 != 0 {
                return Err(ModelError::Syntax { line: *line, msg: format!("a symplectic form needs even dimension, found {dim}") });
            }
        }
        if let Some((line, text)) = &omega {
            parse_form::<Rational>(text, dim).map_err(|e| value_error(*line, "omega", e))?;
        }
        for (form_name, (line, text)) in &forms {
            parse_form::<Rational>(text, dim).map_err(|e| value_error(*line, &format!("form.{form_name}"), e))?;
        }
        Ok(ModelFile {
            name,
            dim,
            structure,
            omega: omega.map(|(_, t)| t),
            flags,
            extra_forms: forms.into_iter().map(|(k, (_, v))| (k, v)).collect(),
        })
    }

    pub fn load(path: &Path) -> Result<Self, ModelError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ModelError::Io { path: path.display().to_string(), msg: e.to_string() })?;
        Self::parse(&text)
    }

    /// The text form read back by [`ModelFile::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("name = {}\ndim = {}\nstructure = {}\n", self.name, self.dim, self.structure);
        if let Some(omega) = &self.omega {
            out.push_str(&format!("omega = {omega}\n"));
        }
        for flag in &self.flags {
            out.push_str(&format!("flag = {flag}\n"));
        }
        for (k, v) in &self.extra_forms {
            out.push_str(&format!("form.{k} = {v}\n"));
        }
        out
    }

    pub fn has_flag(&self, flag: Flag) -> bool {
        self.flags.contains(&flag)
    }

    /// Parses every string and checks the Jacobi identity. `ω` is validated
    /// later, by [`Model::symplectic`].
    pub fn build(&self) -> Result<Model, ModelError> {
        let equations = StructureEquations::parse(&self.structure, Some(self.dim)).map_err(LieError::from)?;
        let algebra = LieAlgebra::new(equations)?;
        let omega = match &self.omega {
            Some(text) => Some(parse_form(text, self.dim).map_err(LieError::from)?),
            None => None,
        };
        let mut forms = BTreeMap::new();
        for (k, v) in &self.extra_forms {
            forms.insert(k.clone(), parse_form(v, self.dim).map_err(LieError::from)?);
        }
        Ok(Model { file: self.clone(), algebra, omega, forms })
    }
}

const CORPUS: &[&str] = &[
    "name = example1\ndim = 6\nstructure = 0,0,0,12,14-23,15+34\nomega = 16+35+24\n",
    "name = example2\ndim = 6\nstructure = -13,23,0,-56,46,0\nomega = 12+36+45\n",
    "name = example3\ndim = 6\nstructure = -23,0,0,-46,56,0\nomega = 12+36+45\nflag = assert-completely-solvable\n",
    "name = example4\ndim = 6\nstructure = 0,12-45,-13+46,0,15-24,-16+34\nomega = 14+35+62\nform.re_psi = 136+125+234-456\n",
    "name = torus6\ndim = 6\nstructure = 0^6\nomega = 14+25+36\n",
];

/// The built-in models, ordered by name.
pub fn corpus() -> Vec<ModelFile> {
    CORPUS.iter().map(|t| ModelFile::parse(t).expect("built-in model parses")).collect()
}

pub fn corpus_model(name: &str) -> Result<ModelFile, ModelError> {
    corpus()
        .into_iter()
        .find(|m| m.name == name)
        .ok_or_else(|| ModelError::UnknownCorpus(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_round_trips_through_text() {
        let models = corpus();
        let names: Vec<_> = models.iter().map(|m| m.name.as_str()).collect();
        assert_eq!(names, ["example1", "example2", "example3", "example4", "torus6"]);
        for m in &models {
            assert_eq!(&ModelFile::parse(&m.to_text()).unwrap(), m);
            m.build().unwrap().symplectic().unwrap();
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = ModelFile::parse("name = x\n\nstructure = 0,0,1x\n").unwrap_err();
        assert!(matches!(err, ModelError::Value { line: 3, .. }), "{err}");
        let err = ModelFile::parse("name = x\nstructure = 0,0\nbogus = 1\n").unwrap_err();
        assert!(matches!(err, ModelError::Syntax { line: 3, .. }));
        let err = ModelFile::parse("name = x\nstructure = 0,0,0\nomega = 12\n").unwrap_err();
        assert!(matches!(err, ModelError::Syntax { line: 3, .. }));
        let err = ModelFile::parse("structure = 0,0\n").unwrap_err();
        assert_eq!(err, ModelError::Missing("name"));
        let err = ModelFile::parse("name = x\ndim = 3\nstructure = 0,0\n").unwrap_err();
        assert!(matches!(err, ModelError::Value { line: 3, .. }));
    }

    #[test]
    fn semantic_errors_are_validation_errors() {
        let m = ModelFile::parse("name = bad\nstructure = 0,0,12,13+24\nomega = 12+34\n").unwrap();
        let err = m.build().unwrap_err();
        assert!(matches!(err, ModelError::Lie(LieError::JacobiViolation { .. })), "{err}");
        assert_eq!(err.kind(), ErrorKind::Validation);

        let m = ModelFile::parse("name = degenerate\nstructure = 0^4\nomega = 12\n").unwrap();
        let err = m.build().unwrap().symplectic().unwrap_err();
        assert_eq!(err.kind(), ErrorKind::Validation);
    }
}
