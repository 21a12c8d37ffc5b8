use std::path::PathBuf;
use std::{env, fs};

use magickit::{calibrate, AlgebraTag, CalibrationConstants};

/// Directory holding `calibration-<tag>.json` files.
pub fn cache_dir() -> Option<PathBuf> {
    if let Some(d) = env::var_os("MAGICKIT_CACHE_DIR").filter(|d| !d.is_empty()) {
        return Some(PathBuf::from(d));
    }
    if let Some(d) = env::var_os("XDG_CACHE_HOME").filter(|d| !d.is_empty()) {
        return Some(PathBuf::from(d).join("magickit"));
    }
    env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("magickit"))
}

pub fn cache_file(tag: AlgebraTag) -> Option<PathBuf> {
    cache_dir().map(|d| d.join(format!("calibration-{tag}.json")))
}

fn read_cached(tag: AlgebraTag) -> Option<CalibrationConstants> {
    let text = fs::read_to_string(cache_file(tag)?).ok()?;
    let cal: CalibrationConstants = serde_json::from_str(&text).ok()?;
    (cal.tag == tag).then_some(cal)
}

/// Best effort: an unwritable cache only costs a recomputation next time.
fn write_cached(cal: &CalibrationConstants) {
    let Some(path) = cache_file(cal.tag) else { return };
    if let Some(dir) = path.parent() {
        let _ = fs::create_dir_all(dir);
    }
    if let Ok(text) = serde_json::to_string_pretty(cal) {
        let _ = fs::write(path, text + "\n");
    }
}

/// Calibrates `tag` afresh and stores the result.
pub fn recalibrate(tag: AlgebraTag) -> magickit::Result<CalibrationConstants> {
    let cal = calibrate(tag)?;
    write_cached(&cal);
    Ok(cal)
}

/// Cached constants, or a fresh calibration if none are stored (or `no_cache`).
pub fn load(tag: AlgebraTag, no_cache: bool) -> magickit::Result<CalibrationConstants> {
    if !no_cache {
        if let Some(cal) = read_cached(tag) {
            return Ok(cal);
        }
    }
    recalibrate(tag)
}
