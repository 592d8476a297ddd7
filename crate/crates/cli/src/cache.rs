//! On-disk sequence cache, one file per generator:
//!
//! ```text
//! qmf-sequence v1 generator=fishburn count=5 sha256=<hex of the payload>
//! 1
//! 1
//! 2
//! 5
//! 15
//! ```
//!
//! Files are replaced atomically, and a longer recomputation must agree with
//! the prefix already on disk before it is written.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use sha2::{Digest, Sha256};

const MAGIC: &str = "qmf-sequence";
const VERSION: &str = "v1";

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache file: {0}")]
    Malformed(String),
    #[error("checksum mismatch: header {expected}, payload {actual}")]
    Checksum { expected: String, actual: String },
    #[error("recomputed {generator} disagrees with the cache at index {index}")]
    Conflict { generator: String, index: usize },
    #[error("cache I/O: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheEntry {
    pub generator: String,
    pub values: Vec<BigInt>,
}

fn payload(values: &[BigInt]) -> String {
    let mut out = String::new();
    for v in values {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}

fn checksum(payload: &str) -> String {
    hex::encode(Sha256::digest(payload.as_bytes()))
}

fn valid_generator(id: &str) -> bool {
    !id.is_empty() && id.bytes().all(|c| c.is_ascii_alphanumeric() || c == b'-' || c == b'_')
}

impl CacheEntry {
    pub fn render(&self) -> String {
        let body = payload(&self.values);
        format!(
            "{MAGIC} {VERSION} generator={} count={} sha256={}\n{body}",
            self.generator,
            self.values.len(),
            checksum(&body)
        )
    }
}

pub fn parse_cache(text: &str) -> Result<CacheEntry, CacheError> {
    let bad = |m: &str| CacheError::Malformed(m.to_string());
    let (header, body) = text.split_once('\n').ok_or_else(|| bad("missing header line"))?;
    let mut fields = header.split(' ');
    if fields.next() != Some(MAGIC) || fields.next() != Some(VERSION) {
        return Err(bad("unrecognised header"));
    }
    let (mut generator, mut count, mut sum) = (None, None, None);
    for field in fields {
        let (key, value) = field.split_once('=').ok_or_else(|| bad("header field without '='"))?;
        let slot = match key {
            "generator" => &mut generator,
            "count" => &mut count,
            "sha256" => &mut sum,
            _ => return Err(bad("unknown header field")),
        };
        if slot.replace(value).is_some() {
            return Err(bad("repeated header field"));
        }
    }
    let generator = generator
        .filter(|g| valid_generator(g))
        .ok_or_else(|| bad("missing or invalid generator"))?;
    let count: usize = count
        .and_then(|c| c.parse().ok())
        .ok_or_else(|| bad("missing or invalid count"))?;
    let expected = sum.ok_or_else(|| bad("missing checksum"))?;
    let actual = checksum(body);
    if actual != expected {
        return Err(CacheError::Checksum {
            expected: expected.to_string(),
            actual,
        });
    }
    let values = body
        .lines()
        .map(|line| {
            let digits = line.strip_prefix('-').unwrap_or(line);
            if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
                return Err(bad("payload line is not a decimal integer"));
            }
            line.parse::<BigInt>()
                .map_err(|_| bad("payload line is not a decimal integer"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != count || !body.is_empty() && !body.ends_with('\n') {
        return Err(bad("payload length does not match count"));
    }
    Ok(CacheEntry {
        generator: generator.to_string(),
        values,
    })
}

pub struct SequenceCache {
    dir: PathBuf,
}

impl SequenceCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        SequenceCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, generator: &str) -> PathBuf {
        self.dir.join(format!("{generator}.seq"))
    }

    /// The cached values, or `None` if the file is absent. A corrupt file is
    /// an error so the caller can decide whether to overwrite it.
    pub fn load(&self, generator: &str) -> Result<Option<Vec<BigInt>>, CacheError> {
        let text = match fs::read_to_string(self.path(generator)) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let entry = parse_cache(&text)?;
        if entry.generator != generator {
            return Err(CacheError::Malformed(format!(
                "file for {generator} names {}",
                entry.generator
            )));
        }
        Ok(Some(entry.values))
    }

    /// Writes `values` unless a longer or equal prefix is already stored.
    /// Any overlap with the stored values must agree exactly.
    pub fn store(&self, generator: &str, values: &[BigInt]) -> Result<(), CacheError> {
        assert!(valid_generator(generator), "generator id {generator:?}");
        if let Ok(Some(old)) = self.load(generator) {
            if let Some(index) = old.iter().zip(values).position(|(a, b)| a != b) {
                return Err(CacheError::Conflict {
                    generator: generator.into(),
                    index,
                });
            }
            if old.len() >= values.len() {
                return Ok(());
            }
        }
        fs::create_dir_all(&self.dir)?;
        let entry = CacheEntry {
            generator: generator.to_string(),
            values: values.to_vec(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(entry.render().as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(self.path(generator)).map_err(|e| CacheError::Io(e.error))?;
        Ok(())
    }

    /// First `count` values from the cache, computing and storing them on a miss.
    pub fn get_or_compute<E>(
        &self,
        generator: &str,
        count: usize,
        compute: impl FnOnce(usize) -> Result<Vec<BigInt>, E>,
    ) -> Result<Vec<BigInt>, CacheLookupError<E>> {
        match self.load(generator) {
            Ok(Some(values)) if values.len() >= count => return Ok(values[..count].to_vec()),
            Ok(_) => {}
            Err(e) => eprintln!("warning: ignoring unreadable cache for {generator}: {e}"),
        }
        let values = compute(count).map_err(CacheLookupError::Compute)?;
        match self.store(generator, &values) {
            Ok(()) => {}
            Err(e @ CacheError::Conflict { .. }) => return Err(CacheLookupError::Cache(e)),
            Err(e) => eprintln!("warning: could not write cache for {generator}: {e}"),
        }
        Ok(values)
    }
}

#[derive(Debug)]
pub enum CacheLookupError<E> {
    Compute(E),
    Cache(CacheError),
}
