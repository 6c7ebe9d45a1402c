// SPDX-License-Identifier: Apache-2.0

//! Model selector mini-grammar: `name[:hyperparameter]`.
//!
//! | selector            | model                                              |
//! |---------------------|----------------------------------------------------|
//! | `bsim`              | exact reference expression                         |
//! | `linear`            | least-squares regression line                      |
//! | `quad`, `cubic`, `quartic`, `poly:N` | least-squares polynomial          |
//! | `pwl:N`             | N equal-width independently fitted segments        |
//! | `taylor[:T_C]`      | tangent line at `T_C` °C (default: ambient)        |
//! | `liu[:T_C]`         | frozen-exponential linearization at `T_C` °C       |
//! | `exp1`, `exp2`      | exponential families, nonlinear least squares      |
//! | `adaptive[:dT_K]`   | re-linearizing line, threshold `dT_K` (default 10) |
//! | `file:PATH`         | values read from a sweep CSV                       |

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum ModelSelector {
    Bsim,
    Linear,
    /// `None` when the degree comes from `--degree`.
    Poly(Option<usize>),
    /// `None` when the count comes from `--segments`.
    Pwl(Option<usize>),
    Taylor(Option<f64>),
    Liu(Option<f64>),
    Exp1,
    Exp2,
    Adaptive(Option<f64>),
    File(PathBuf),
}

impl ModelSelector {
    /// Parses a comma-separated list.
    pub fn parse_list(s: &str) -> Result<Vec<ModelSelector>> {
        Ok(Self::parse_named_list(s)?
            .into_iter()
            .map(|(_, m)| m)
            .collect())
    }

    /// Like [`parse_list`](Self::parse_list), keeping each selector's text
    /// as written for use as a display name.
    pub fn parse_named_list(s: &str) -> Result<Vec<(String, ModelSelector)>> {
        let list = s
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| Ok((p.to_string(), p.parse()?)))
            .collect::<Result<Vec<_>>>()?;
        if list.is_empty() {
            return Err(Error::usage("empty model list"));
        }
        Ok(list)
    }

    /// Whether `fit` can produce this model from samples alone.
    pub fn is_fittable(&self) -> bool {
        matches!(
            self,
            ModelSelector::Linear
                | ModelSelector::Poly(_)
                | ModelSelector::Pwl(_)
                | ModelSelector::Exp1
                | ModelSelector::Exp2
        )
    }

    /// Fills in degree/segment counts from flags and validates them.
    pub fn resolve(&self, degree: Option<usize>, segments: Option<usize>) -> Result<ModelSelector> {
        let pick = |inline: Option<usize>, flag: Option<usize>, what: &str| match (inline, flag) {
            (Some(a), Some(b)) if a != b => Err(Error::usage(format!(
                "conflicting {what}: {a} in the selector, {b} from the flag"
            ))),
            (Some(a), _) | (None, Some(a)) => Ok(a),
            (None, None) => Err(Error::usage(format!("{self} needs a {what}"))),
        };
        match self {
            ModelSelector::Poly(d) => {
                let d = pick(*d, degree, "degree")?;
                if d == 0 {
                    return Err(Error::usage("polynomial degree must be at least 1"));
                }
                Ok(ModelSelector::Poly(Some(d)))
            }
            ModelSelector::Pwl(n) => {
                let n = pick(*n, segments, "segment count")?;
                if n == 0 {
                    return Err(Error::usage("segment count must be at least 1"));
                }
                Ok(ModelSelector::Pwl(Some(n)))
            }
            other => Ok(other.clone()),
        }
    }
}

fn parse_arg<T: FromStr>(name: &str, arg: &str) -> Result<T> {
    arg.parse()
        .map_err(|_| Error::usage(format!("invalid hyperparameter `{arg}` for `{name}`")))
}

impl FromStr for ModelSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let no_arg = |sel: ModelSelector| match arg {
            None => Ok(sel),
            Some(a) => Err(Error::usage(format!(
                "`{name}` takes no hyperparameter (got `{a}`)"
            ))),
        };
        let count = |a: Option<&str>| a.map(|a| parse_arg::<usize>(name, a)).transpose();
        let real = |a: Option<&str>| a.map(|a| parse_arg::<f64>(name, a)).transpose();
        match name {
            "bsim" => no_arg(ModelSelector::Bsim),
            "linear" => no_arg(ModelSelector::Linear),
            "quad" | "quadratic" => no_arg(ModelSelector::Poly(Some(2))),
            "cubic" => no_arg(ModelSelector::Poly(Some(3))),
            "quartic" => no_arg(ModelSelector::Poly(Some(4))),
            "poly" => Ok(ModelSelector::Poly(count(arg)?)),
            "pwl" => Ok(ModelSelector::Pwl(count(arg)?)),
            "taylor" => Ok(ModelSelector::Taylor(real(arg)?)),
            "liu" => Ok(ModelSelector::Liu(real(arg)?)),
            "exp1" => no_arg(ModelSelector::Exp1),
            "exp2" => no_arg(ModelSelector::Exp2),
            "adaptive" => Ok(ModelSelector::Adaptive(real(arg)?)),
            "file" => match arg {
                Some(p) if !p.is_empty() => Ok(ModelSelector::File(PathBuf::from(p))),
                _ => Err(Error::usage("`file` needs a path, e.g. file:data.csv")),
            },
            other => Err(Error::usage(format!("unknown model `{other}`"))),
        }
    }
}

impl fmt::Display for ModelSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |f: &mut fmt::Formatter<'_>, name: &str, v: Option<String>| match v {
            Some(v) => write!(f, "{name}:{v}"),
            None => write!(f, "{name}"),
        };
        match self {
            ModelSelector::Bsim => write!(f, "bsim"),
            ModelSelector::Linear => write!(f, "linear"),
            ModelSelector::Poly(d) => opt(f, "poly", d.map(|d| d.to_string())),
            ModelSelector::Pwl(n) => opt(f, "pwl", n.map(|n| n.to_string())),
            ModelSelector::Taylor(t) => opt(f, "taylor", t.map(|t| t.to_string())),
            ModelSelector::Liu(t) => opt(f, "liu", t.map(|t| t.to_string())),
            ModelSelector::Exp1 => write!(f, "exp1"),
            ModelSelector::Exp2 => write!(f, "exp2"),
            ModelSelector::Adaptive(t) => opt(f, "adaptive", t.map(|t| t.to_string())),
            ModelSelector::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}
