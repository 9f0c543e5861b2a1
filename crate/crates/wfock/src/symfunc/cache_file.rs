//! Line-oriented cache file for Jack expansions.
//!
//! Format (version 1):
//!
//! ```text
//! WFOCK-JACK-CACHE v1
//! JACK [1,1] := (1/2)*p[1,1] + (-1/2)*p[2]
//! ...
//! ```
//!
//! Entries are validated on read: each must parse, be homogeneous of the
//! right degree, be monic on its leading monomial and satisfy the norm
//! identity `<J, J> b_lambda = 1`.  The cache is advisory: a cold cache
//! recomputes the same values, so results never depend on its presence.

use super::jack::{install_jack, jack};
use super::SymFunc;
use crate::error::{Error, Result};
use crate::partition::{partitions_up_to, Partition};
use std::io::Write;
use std::path::Path;

const HEADER: &str = "WFOCK-JACK-CACHE v1";

/// Write every Jack expansion of weight at most `max_degree` to `path`.
pub fn save_jack_cache(path: &Path, max_degree: u64) -> Result<usize> {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    let mut count = 0;
    for lam in partitions_up_to(max_degree) {
        let j = jack(&lam);
        out.push_str(&format!("JACK {lam} := {j}\n"));
        count += 1;
    }
    let mut file = std::fs::File::create(path)?;
    file.write_all(out.as_bytes())?;
    Ok(count)
}

/// Load and validate a cache file, installing entries into the process
/// memo; returns the number of entries installed.
pub fn load_jack_cache(path: &Path) -> Result<usize> {
    let text = std::fs::read_to_string(path)?;
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h.trim() == HEADER => {}
        other => {
            return Err(Error::CacheInvalid(format!(
                "bad header {:?}, expected {HEADER:?}",
                other.unwrap_or("")
            )))
        }
    }
    let mut count = 0;
    for (lineno, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let rest = line
            .strip_prefix("JACK ")
            .ok_or_else(|| Error::CacheInvalid(format!("line {}: missing JACK tag", lineno + 2)))?;
        let (lam_str, expr) = rest
            .split_once(":=")
            .ok_or_else(|| Error::CacheInvalid(format!("line {}: missing :=", lineno + 2)))?;
        let lam: Partition = lam_str.trim().parse()?;
        let f: SymFunc = expr.trim().parse()?;
        if !install_jack(&lam, f) {
            return Err(Error::CacheInvalid(format!(
                "line {}: entry for {lam} failed validation",
                lineno + 2
            )));
        }
        count += 1;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_validation() {
        let dir = std::env::temp_dir().join("wfock-cache-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("jack.cache");
        let written = save_jack_cache(&path, 3).unwrap();
        assert_eq!(written, 1 + 1 + 2 + 3);
        let loaded = load_jack_cache(&path).unwrap();
        assert_eq!(loaded, written);

        // corrupt one coefficient: validation must reject the file
        let text = std::fs::read_to_string(&path).unwrap();
        let bad = text.replace("(1/2)*p[1,1]", "(1/3)*p[1,1]");
        assert_ne!(text, bad);
        std::fs::write(&path, bad).unwrap();
        assert!(matches!(
            load_jack_cache(&path),
            Err(Error::CacheInvalid(_))
        ));
        std::fs::remove_dir_all(&dir).ok();
    }
}
