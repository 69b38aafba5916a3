//! Persistent key/value cache for table generation.
//!
//! Layout: one JSON header line, then `entries` records, each a
//! little-endian `u32` length and UTF-8 key followed by the same for the
//! value. A file with another magic or version, a wrong record count or
//! trailing bytes is treated as empty. Writes go to a sibling temporary
//! file that is renamed over the target.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const MAGIC: &str = "gontet-cache";
pub const VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct Header {
    magic: String,
    version: u32,
    entries: usize,
}

#[derive(Debug, Default)]
pub struct Cache {
    path: PathBuf,
    entries: BTreeMap<String, String>,
    dirty: bool,
}

fn take<'a>(buf: &mut &'a [u8]) -> Option<&'a str> {
    if buf.len() < 4 {
        return None;
    }
    let (len, rest) = buf.split_at(4);
    let len = u32::from_le_bytes(len.try_into().ok()?) as usize;
    if rest.len() < len {
        return None;
    }
    let (item, rest) = rest.split_at(len);
    *buf = rest;
    std::str::from_utf8(item).ok()
}

fn parse(bytes: &[u8]) -> Option<BTreeMap<String, String>> {
    let newline = bytes.iter().position(|&b| b == b'\n')?;
    let header: Header = serde_json::from_slice(&bytes[..newline]).ok()?;
    if header.magic != MAGIC || header.version != VERSION {
        return None;
    }
    let mut rest = &bytes[newline + 1..];
    let mut out = BTreeMap::new();
    for _ in 0..header.entries {
        let k = take(&mut rest)?;
        let v = take(&mut rest)?;
        out.insert(k.to_string(), v.to_string());
    }
    rest.is_empty().then_some(out)
}

fn put(buf: &mut Vec<u8>, s: &str) {
    buf.extend_from_slice(&(s.len() as u32).to_le_bytes());
    buf.extend_from_slice(s.as_bytes());
}

impl Cache {
    /// Loads `path`; a missing or invalid file gives an empty cache.
    pub fn open(path: &Path) -> Result<Self, CliError> {
        let entries = match fs::read(path) {
            Ok(bytes) => parse(&bytes).unwrap_or_default(),
            Err(e) if e.kind() == io::ErrorKind::NotFound => BTreeMap::new(),
            Err(e) => return Err(CliError::io(path, e)),
        };
        Ok(Cache {
            path: path.to_path_buf(),
            entries,
            dirty: false,
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &str) -> Option<&String> {
        self.entries.get(key)
    }

    pub fn insert(&mut self, key: String, value: String) {
        if self.entries.get(&key) != Some(&value) {
            self.entries.insert(key, value);
            self.dirty = true;
        }
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let header = Header {
            magic: MAGIC.to_string(),
            version: VERSION,
            entries: self.entries.len(),
        };
        let mut buf = serde_json::to_vec(&header).expect("header serializes");
        buf.push(b'\n');
        for (k, v) in &self.entries {
            put(&mut buf, k);
            put(&mut buf, v);
        }
        buf
    }

    /// Writes the cache back if anything changed.
    pub fn flush(&mut self) -> Result<(), CliError> {
        if !self.dirty {
            return Ok(());
        }
        let mut tmp = self.path.clone().into_os_string();
        tmp.push(format!(".tmp{}", std::process::id()));
        let tmp = PathBuf::from(tmp);
        let write = || -> io::Result<()> {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(&self.to_bytes())?;
            f.sync_all()?;
            fs::rename(&tmp, &self.path)
        };
        write().map_err(|e| {
            let _ = fs::remove_file(&tmp);
            CliError::io(&self.path, e)
        })?;
        self.dirty = false;
        Ok(())
    }
}
