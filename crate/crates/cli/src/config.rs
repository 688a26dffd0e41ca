//! Verification suite settings, read from a `key = value` text file.
//!
//! ```text
//! # comments start with '#'
//! max_n = 7
//! corpus_n = 6
//! families = 8:4, 9:6
//! bases = s,e,h,p
//! spectral_tol = 1e-8
//! enumeration_cap = 100000000
//! output_dir = out
//! ```

use std::path::PathBuf;

use lapimm::combinat::Basis;
use lapimm::graph::MAX_CORPUS_N;
use lapimm::orient::DEFAULT_ENUMERATION_CAP;
use lapimm::poset::{FamilySpec, DEFAULT_MAX_TREE_N};

use crate::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    /// Trees are checked up to this many vertices.
    pub max_n: usize,
    /// Connected bipartite graphs are generated exhaustively up to this size.
    pub corpus_n: usize,
    /// Unicyclic families, as `(n, k)`.
    pub families: Vec<FamilySpec>,
    /// Bases for the coefficient checks; the monomial basis is checked separately.
    pub bases: Vec<Basis>,
    pub spectral_tol: f64,
    pub enumeration_cap: u128,
    pub output_dir: PathBuf,
    /// Flip the lowest bit of every Laplacian's first entry.
    pub inject_fault: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 7,
            corpus_n: 6,
            families: vec![
                FamilySpec::Unicyclic { n: 8, k: 4 },
                FamilySpec::Unicyclic { n: 9, k: 6 },
            ],
            bases: vec![Basis::Schur, Basis::Elementary, Basis::Homogeneous, Basis::PowerSum],
            spectral_tol: 1e-8,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            output_dir: PathBuf::from("."),
            inject_fault: false,
        }
    }
}

pub fn parse_families(value: &str) -> Result<Vec<FamilySpec>, String> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let (n, k) = item
                .split_once(':')
                .ok_or_else(|| format!("family {item:?} is not n:k"))?;
            let n = n.trim().parse().map_err(|_| format!("bad n in {item:?}"))?;
            let k = k.trim().parse().map_err(|_| format!("bad k in {item:?}"))?;
            let spec = FamilySpec::Unicyclic { n, k };
            spec.validate().map_err(|e| e.to_string())?;
            Ok(spec)
        })
        .collect()
}

pub fn parse_bases(value: &str) -> Result<Vec<Basis>, String> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|b| b.parse::<Basis>().map_err(|e| e.to_string()))
        .collect()
}

impl SuiteConfig {
    /// Starts from the defaults and applies every `key = value` line.
    pub fn parse(text: &str) -> CliResult<Self> {
        let mut cfg = SuiteConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| CliError::Config { line: i + 1, message };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected key = value, found {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            let number = |what: &str| err(format!("{what} {value:?} is not a valid number"));
            match key {
                "max_n" => cfg.max_n = value.parse().map_err(|_| number("max_n"))?,
                "corpus_n" => cfg.corpus_n = value.parse().map_err(|_| number("corpus_n"))?,
                "families" => cfg.families = parse_families(value).map_err(err)?,
                "bases" => cfg.bases = parse_bases(value).map_err(err)?,
                "spectral_tol" => cfg.spectral_tol = value.parse().map_err(|_| number("spectral_tol"))?,
                "enumeration_cap" => cfg.enumeration_cap = value.parse().map_err(|_| number("enumeration_cap"))?,
                "output_dir" => cfg.output_dir = PathBuf::from(value),
                other => return Err(err(format!("unknown key {other:?}"))),
            }
        }
        Ok(cfg)
    }

    pub fn validate(&self) -> CliResult<()> {
        let usage = |m: String| Err(CliError::Usage(m));
        if self.max_n < 2 {
            return usage(format!("max_n must be at least 2, got {}", self.max_n));
        }
        if self.max_n > DEFAULT_MAX_TREE_N {
            return usage(format!(
                "max_n must be at most {DEFAULT_MAX_TREE_N}, got {}",
                self.max_n
            ));
        }
        if self.corpus_n == 0 || self.corpus_n > MAX_CORPUS_N {
            return usage(format!(
                "corpus_n must lie in 1..={MAX_CORPUS_N}, got {}",
                self.corpus_n
            ));
        }
        if self.spectral_tol.is_nan() || self.spectral_tol <= 0.0 {
            return usage(format!("spectral_tol must be positive, got {}", self.spectral_tol));
        }
        Ok(())
    }

    /// Flags that reproduce this configuration on the command line.
    pub fn to_flags(&self) -> String {
        let defaults = SuiteConfig::default();
        let mut flags = Vec::new();
        if self.max_n != defaults.max_n {
            flags.push(format!("--max-n {}", self.max_n));
        }
        if self.corpus_n != defaults.corpus_n {
            flags.push(format!("--corpus-n {}", self.corpus_n));
        }
        if self.families != defaults.families {
            let list: Vec<String> = self
                .families
                .iter()
                .map(|f| match *f {
                    FamilySpec::Unicyclic { n, k } => format!("{n}:{k}"),
                    FamilySpec::Trees { n } => format!("trees:{n}"),
                })
                .collect();
            flags.push(format!("--families {}", list.join(",")));
        }
        if self.bases != defaults.bases {
            let list: Vec<&str> = self.bases.iter().map(|b| b.tag()).collect();
            flags.push(format!("--bases {}", list.join(",")));
        }
        if self.spectral_tol != defaults.spectral_tol {
            flags.push(format!("--tol {}", self.spectral_tol));
        }
        if self.enumeration_cap != defaults.enumeration_cap {
            flags.push(format!("--cap {}", self.enumeration_cap));
        }
        if self.inject_fault {
            flags.push("--inject-fault".into());
        }
        flags.join(" ")
    }
}
