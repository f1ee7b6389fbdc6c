//! Optional on-disk persistence for the expensive memo tables (character
//! tables and monomial-basis matrices). The file is versioned by a schema
//! tag; anything with the wrong tag or shape is ignored and recomputed.

use std::fs;
use std::io;
use std::path::Path;

use serde_json::{json, Value};

use crate::symfunc::cache_hooks;

pub const CACHE_SCHEMA: &str = "littlewood-cache-v1";
const CACHE_FILE: &str = "tables.json";

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "LITTLEWOOD_CACHE_DIR";

/// Loads previously saved tables, if a compatible cache file exists.
/// Returns whether anything was installed. Unreadable or mismatched files
/// are treated as absent.
pub fn load_from_dir(dir: &Path) -> bool {
    let path = dir.join(CACHE_FILE);
    let Ok(text) = fs::read_to_string(&path) else {
        return false;
    };
    let Ok(doc) = serde_json::from_str::<Value>(&text) else {
        return false;
    };
    if doc.get("schema").and_then(Value::as_str) != Some(CACHE_SCHEMA) {
        return false;
    }
    let mut installed = false;
    if let Some(tables) = doc.get("char_tables").and_then(Value::as_object) {
        for (degree, rows) in tables {
            let Ok(n) = degree.parse::<usize>() else { continue };
            let Some(values) = parse_int_matrix(rows) else { continue };
            installed |= cache_hooks::install_char_table(n, values);
        }
    }
    if let Some(tables) = doc.get("monomial_tables").and_then(Value::as_object) {
        for (degree, entry) in tables {
            let Ok(n) = degree.parse::<usize>() else { continue };
            let Some(p_to_m) = entry.get("p_to_m").and_then(parse_rat_matrix) else {
                continue;
            };
            let Some(m_to_p) = entry.get("m_to_p").and_then(parse_rat_matrix) else {
                continue;
            };
            installed |= cache_hooks::install_monomial_tables(n, p_to_m, m_to_p);
        }
    }
    installed
}

/// Writes the currently memoized tables to the cache file, replacing any
/// previous contents. The directory is created if needed.
pub fn save_to_dir(dir: &Path) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut char_tables = serde_json::Map::new();
    for (n, values) in cache_hooks::snapshot_char_tables() {
        char_tables.insert(n.to_string(), json!(values));
    }
    let mut monomial = serde_json::Map::new();
    for (n, p_to_m, m_to_p) in cache_hooks::snapshot_monomial_tables() {
        monomial.insert(
            n.to_string(),
            json!({
                "p_to_m": rat_matrix_to_json(&p_to_m),
                "m_to_p": rat_matrix_to_json(&m_to_p),
            }),
        );
    }
    let doc = json!({
        "schema": CACHE_SCHEMA,
        "char_tables": Value::Object(char_tables),
        "monomial_tables": Value::Object(monomial),
    });
    let tmp = dir.join(format!("{CACHE_FILE}.tmp"));
    fs::write(&tmp, serde_json::to_string(&doc)?)?;
    fs::rename(&tmp, dir.join(CACHE_FILE))
}

/// Loads from the directory named by LITTLEWOOD_CACHE_DIR, when set.
pub fn load_from_env() -> bool {
    match std::env::var_os(CACHE_DIR_ENV) {
        Some(dir) => load_from_dir(Path::new(&dir)),
        None => false,
    }
}

/// Saves to the directory named by LITTLEWOOD_CACHE_DIR, when set.
pub fn save_to_env() -> io::Result<()> {
    match std::env::var_os(CACHE_DIR_ENV) {
        Some(dir) => save_to_dir(Path::new(&dir)),
        None => Ok(()),
    }
}

fn parse_int_matrix(v: &Value) -> Option<Vec<Vec<i64>>> {
    v.as_array()?
        .iter()
        .map(|row| row.as_array()?.iter().map(Value::as_i64).collect::<Option<Vec<i64>>>())
        .collect()
}

fn parse_rat_matrix(v: &Value) -> Option<Vec<Vec<crate::symfunc::Rat>>> {
    v.as_array()?
        .iter()
        .map(|row| {
            row.as_array()?
                .iter()
                .map(|x| x.as_str()?.parse().ok())
                .collect::<Option<Vec<crate::symfunc::Rat>>>()
        })
        .collect()
}

fn rat_matrix_to_json(m: &[Vec<crate::symfunc::Rat>]) -> Value {
    json!(m
        .iter()
        .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}
