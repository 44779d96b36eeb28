use std::net::{IpAddr, Ipv4Addr};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use swabhasha::coder::CodeTable;
use swabhasha::expander::{default_rules, RuleSet};
use swabhasha::lexicon::Lexicon;
use swabhasha::matcher::{DEFAULT_THRESHOLD, DEFAULT_TOP_K};
use swabhasha::pipeline::Engine;
use swabhasha::bundled;

pub const DEFAULT_PORT: u16 = 8765;

/// Where the data files come from. `None` means the bundled copy.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DataPaths {
    pub lexicon: Option<PathBuf>,
    pub rules: Option<PathBuf>,
    pub code_table: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ServiceConfig {
    pub data: DataPaths,
    pub bind: IpAddr,
    /// 0 asks the OS for a free port.
    pub port: u16,
    pub top_k_default: usize,
    pub threshold_default: u8,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        Self {
            data: DataPaths::default(),
            bind: IpAddr::V4(Ipv4Addr::LOCALHOST),
            port: DEFAULT_PORT,
            top_k_default: DEFAULT_TOP_K,
            threshold_default: DEFAULT_THRESHOLD,
        }
    }
}

impl ServiceConfig {
    pub fn validate(&self) -> Result<()> {
        if self.top_k_default == 0 {
            bail!("default top must be at least 1");
        }
        if self.threshold_default > 100 {
            bail!("default threshold must be within 0..=100");
        }
        Ok(())
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

impl DataPaths {
    pub fn code_table(&self) -> Result<CodeTable> {
        match &self.code_table {
            Some(p) => CodeTable::parse(&read(p)?).with_context(|| format!("in {}", p.display())),
            None => Ok(CodeTable::default()),
        }
    }

    pub fn rules(&self) -> Result<RuleSet> {
        match &self.rules {
            Some(p) => RuleSet::parse(&read(p)?).with_context(|| format!("in {}", p.display())),
            None => Ok(default_rules()),
        }
    }

    pub fn lexicon(&self, table: &CodeTable) -> Result<Lexicon> {
        let (text, name) = match &self.lexicon {
            Some(p) => (read(p)?, p.display().to_string()),
            None => (bundled::LEXICON.to_string(), "bundled lexicon".to_string()),
        };
        Lexicon::parse(&text, table).with_context(|| format!("in {name}"))
    }

    pub fn engine(&self) -> Result<Engine> {
        let table = self.code_table()?;
        let lexicon = self.lexicon(&table)?;
        Ok(Engine::new(lexicon, self.rules()?, table))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_bundled_and_valid() {
        let c = ServiceConfig::default();
        assert_eq!(c.port, DEFAULT_PORT);
        assert!(c.validate().is_ok());
        let engine = c.data.engine().unwrap();
        assert_eq!(engine.lexicon.len(), bundled::lexicon(&CodeTable::default()).len());
    }

    #[test]
    fn rejects_bad_defaults() {
        let c = ServiceConfig { top_k_default: 0, ..Default::default() };
        assert!(c.validate().is_err());
        let c = ServiceConfig { threshold_default: 101, ..Default::default() };
        assert!(c.validate().is_err());
    }

    #[test]
    fn missing_file_names_the_path() {
        let d = DataPaths { lexicon: Some("/nonexistent/lex.tsv".into()), ..Default::default() };
        let e = d.engine().unwrap_err();
        assert!(format!("{e:#}").contains("/nonexistent/lex.tsv"));
    }
}
