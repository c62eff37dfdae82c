//! On-disk universal-character cache: one JSON document per `(lambda, mu, cutoffs)`,
//! named by the SHA-256 of the key. Unreadable or mismatched entries are recomputed.

use serde_json::json;
use sha2::{Digest, Sha256};
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use ucphase::partitions::Partition;
use ucphase::polyring::{Cutoffs, Poly};
use ucphase::symfunc::universal_character_jt;

pub fn cache_dir() -> PathBuf {
    if let Some(d) = std::env::var_os("UCPHASE_CACHE_DIR") {
        return PathBuf::from(d);
    }
    let home = std::env::var_os("HOME").map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    home.join(".cache").join("ucphase")
}

fn key(lam: &Partition, mu: &Partition, cut: Cutoffs) -> String {
    format!("uc|{lam}|{mu}|{},{}", cut.x, cut.y)
}

fn entry_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{}.json", hex::encode(Sha256::digest(key.as_bytes()))))
}

fn read(path: &Path, key: &str) -> Option<Poly> {
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(path).ok()?).ok()?;
    if doc["key"] != key {
        return None;
    }
    Poly::from_json(&doc["poly"]).ok()
}

fn write(dir: &Path, path: &Path, key: &str, lam: &Partition, mu: &Partition, poly: &Poly) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let doc = json!({"key": key, "lambda": lam, "mu": mu, "poly": poly.to_json()});
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, serde_json::to_string(&doc).expect("json"))?;
    fs::rename(&tmp, path)
}

/// `S[lam, mu]` in the ring with `|lam| + |mu|` variables of each kind, through the cache.
pub fn universal_character(dir: &Path, lam: &Partition, mu: &Partition) -> ucphase::Result<Poly> {
    let n = (lam.weight() + mu.weight()).max(1);
    let cut = Cutoffs::new(n, n);
    let key = key(lam, mu, cut);
    let path = entry_path(dir, &key);
    if let Some(p) = read(&path, &key) {
        return Ok(p);
    }
    let poly = universal_character_jt(lam, mu, cut)?;
    // A read-only or missing cache only costs recomputation.
    let _ = write(dir, &path, &key, lam, mu, &poly);
    Ok(poly)
}

fn entries(dir: &Path) -> io::Result<Vec<PathBuf>> {
    match fs::read_dir(dir) {
        Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(Vec::new()),
        Err(e) => Err(e),
        Ok(rd) => {
            let mut out = Vec::new();
            for e in rd {
                let p = e?.path();
                if p.extension().is_some_and(|x| x == "json") {
                    out.push(p);
                }
            }
            Ok(out)
        }
    }
}

pub fn clear(dir: &Path) -> io::Result<usize> {
    let all = entries(dir)?;
    for p in &all {
        fs::remove_file(p)?;
    }
    Ok(all.len())
}

pub fn stats(dir: &Path) -> io::Result<(usize, u64)> {
    let all = entries(dir)?;
    let mut bytes = 0;
    for p in &all {
        bytes += fs::metadata(p)?.len();
    }
    Ok((all.len(), bytes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ucphase::part;

    #[test]
    fn cache_is_transparent() {
        let dir = tempfile::tempdir().unwrap();
        let lam = part![2, 1];
        let mu = part![1];
        let first = universal_character(dir.path(), &lam, &mu).unwrap();
        assert_eq!(stats(dir.path()).unwrap().0, 1);
        let second = universal_character(dir.path(), &lam, &mu).unwrap();
        assert_eq!(first, second);
        assert_eq!(first, universal_character_jt(&lam, &mu, Cutoffs::new(4, 4)).unwrap());
    }

    #[test]
    fn corrupt_entries_are_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let lam = part![1];
        let good = universal_character(dir.path(), &lam, &lam).unwrap();
        let path = entry_path(dir.path(), &key(&lam, &lam, Cutoffs::new(2, 2)));
        fs::write(&path, "not json").unwrap();
        assert_eq!(universal_character(dir.path(), &lam, &lam).unwrap(), good);
        assert_eq!(clear(dir.path()).unwrap(), 1);
        assert_eq!(stats(dir.path()).unwrap(), (0, 0));
    }
}
