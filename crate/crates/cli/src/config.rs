//! `key=value` config files whose keys are long flag names.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::SizeFlags;

const KEYS: &[&str] =
    &["lambda", "mu", "max-weight", "m1", "m2", "cap", "order", "method", "format", "compare", "seed", "jobs"];

#[derive(Default)]
pub struct Settings {
    values: BTreeMap<String, String>,
}

impl Settings {
    pub fn load(path: Option<&Path>) -> Result<Self, String> {
        match path {
            None => Ok(Settings::default()),
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| format!("config {}: {e}", p.display()))?;
                Settings::parse(&text)
            }
        }
    }

    /// Blank lines and `#` comments are skipped; a leading `--` on keys is accepted.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut values = BTreeMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| format!("config line {}: expected key=value", n + 1))?;
            let k = k.trim().trim_start_matches("--").replace('_', "-");
            if !KEYS.contains(&k.as_str()) {
                return Err(format!("config line {}: unknown key `{k}`", n + 1));
            }
            values.insert(k, v.trim().to_string());
        }
        Ok(Settings { values })
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, String> {
        self.raw(key).map(|v| v.parse::<T>().map_err(|_| format!("config `{key}`: bad value `{v}`"))).transpose()
    }

    /// Explicit flags win; config values fill the gaps.
    pub fn fill(&self, flags: SizeFlags) -> Result<SizeFlags, String> {
        Ok(SizeFlags {
            max_weight: flags.max_weight.or(self.get("max-weight")?),
            m1: flags.m1.or(self.get("m1")?),
            m2: flags.m2.or(self.get("m2")?),
            cap: flags.cap.or(self.get("cap")?),
            order: flags.order.or(self.get("order")?),
            seed: flags.seed.or(self.get("seed")?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_config() {
        let s = Settings::parse("# sizes\nm1 = 2\n--cap=4\nmax_weight=1\n").unwrap();
        let got = s.fill(SizeFlags { m1: Some(3), ..Default::default() }).unwrap();
        assert_eq!(got.m1, Some(3));
        assert_eq!(got.cap, Some(4));
        assert_eq!(got.max_weight, Some(1));
        assert_eq!(got.m2, None);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        assert!(Settings::parse("colour=red").is_err());
        assert!(Settings::parse("m1").is_err());
        let s = Settings::parse("m1=x").unwrap();
        assert!(s.get::<usize>("m1").is_err());
    }
}
