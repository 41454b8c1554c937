//! Character rows persisted between runs.
//!
//! One file per `λ` under a cache directory. Each file starts with a magic
//! tag, a format number and the crate version; a file whose header does not
//! match exactly is treated as absent and overwritten on the next store.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;

use crate::characters::{char_row, ClassFunction};
use crate::partitions::Partition;

const MAGIC: &[u8; 4] = b"FKCR";
const FORMAT: u16 = 1;
const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable naming the cache directory.
pub const CACHE_DIR_VAR: &str = "FOULKES_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct RowCache {
    dir: PathBuf,
}

impl RowCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// The cache named by `FOULKES_CACHE_DIR`, if set and non-empty.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_DIR_VAR)
            .filter(|v| !v.is_empty())
            .map(Self::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, lambda: &Partition) -> PathBuf {
        let name: Vec<String> = lambda.parts().iter().map(|p| p.to_string()).collect();
        self.dir.join(format!("chi-{}.bin", name.join("_")))
    }

    /// The stored row for `λ`, or `None` when missing, stale or unreadable.
    pub fn load(&self, lambda: &Partition) -> Option<ClassFunction> {
        let bytes = fs::read(self.path(lambda)).ok()?;
        decode(&bytes, lambda)
    }

    pub fn store(&self, lambda: &Partition, row: &ClassFunction) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path(lambda);
        let tmp = path.with_extension("tmp");
        let mut f = fs::File::create(&tmp)?;
        f.write_all(&encode(lambda, row))?;
        f.sync_all()?;
        fs::rename(tmp, path)
    }

    /// Loads the row for `λ`, computing and storing it on a miss. Failure to
    /// write is not an error; the row is still returned.
    pub fn row(&self, lambda: &Partition) -> (ClassFunction, bool) {
        if let Some(row) = self.load(lambda) {
            return (row, true);
        }
        let row = char_row(lambda);
        let _ = self.store(lambda, &row);
        (row, false)
    }
}

fn put_partition(out: &mut Vec<u8>, p: &Partition) {
    out.extend_from_slice(&(p.len() as u32).to_le_bytes());
    for &part in p.parts() {
        out.extend_from_slice(&(part as u32).to_le_bytes());
    }
}

fn encode(lambda: &Partition, row: &ClassFunction) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&FORMAT.to_le_bytes());
    out.extend_from_slice(&(VERSION.len() as u16).to_le_bytes());
    out.extend_from_slice(VERSION.as_bytes());
    put_partition(&mut out, lambda);
    out.extend_from_slice(&(row.support_len() as u32).to_le_bytes());
    for (mu, v) in row.values() {
        put_partition(&mut out, mu);
        let bytes = v.to_signed_bytes_le();
        out.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
        out.extend_from_slice(&bytes);
    }
    out
}

struct Reader<'a>(&'a [u8]);

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Option<&'a [u8]> {
        if self.0.len() < n {
            return None;
        }
        let (head, rest) = self.0.split_at(n);
        self.0 = rest;
        Some(head)
    }

    fn u16(&mut self) -> Option<u16> {
        Some(u16::from_le_bytes(self.take(2)?.try_into().ok()?))
    }

    fn u32(&mut self) -> Option<usize> {
        Some(u32::from_le_bytes(self.take(4)?.try_into().ok()?) as usize)
    }

    fn partition(&mut self) -> Option<Partition> {
        let len = self.u32()?;
        let parts = (0..len).map(|_| self.u32()).collect::<Option<Vec<_>>>()?;
        Partition::new(parts).ok()
    }
}

fn decode(bytes: &[u8], lambda: &Partition) -> Option<ClassFunction> {
    let mut r = Reader(bytes);
    if r.take(4)? != MAGIC || r.u16()? != FORMAT {
        return None;
    }
    let len = r.u16()? as usize;
    if r.take(len)? != VERSION.as_bytes() || r.partition()? != *lambda {
        return None;
    }
    let mut row = ClassFunction::zero(lambda.weight());
    for _ in 0..r.u32()? {
        let mu = r.partition()?;
        let n = r.u32()?;
        let v = BigInt::from_signed_bytes_le(r.take(n)?);
        if mu.weight() != lambda.weight() {
            return None;
        }
        row.set(mu, v);
    }
    r.0.is_empty().then_some(row)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = RowCache::new(dir.path());
        let lambda: Partition = "4,2,1".parse().unwrap();
        assert!(cache.load(&lambda).is_none());
        let (row, hit) = cache.row(&lambda);
        assert!(!hit);
        assert_eq!(row, char_row(&lambda));
        let (again, hit) = cache.row(&lambda);
        assert!(hit);
        assert_eq!(again, row);
    }

    #[test]
    fn stale_files_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let cache = RowCache::new(dir.path());
        let lambda: Partition = "3,1".parse().unwrap();
        cache.store(&lambda, &char_row(&lambda)).unwrap();
        let path = cache.path(&lambda);

        let mut bytes = fs::read(&path).unwrap();
        bytes[4] ^= 0xff;
        fs::write(&path, &bytes).unwrap();
        assert!(cache.load(&lambda).is_none());

        let mut bytes = encode(&lambda, &char_row(&lambda));
        bytes.pop();
        fs::write(&path, &bytes).unwrap();
        assert!(cache.load(&lambda).is_none());

        let other: Partition = "2,2".parse().unwrap();
        fs::write(&path, encode(&other, &char_row(&other))).unwrap();
        assert!(cache.load(&lambda).is_none());

        let (row, hit) = cache.row(&lambda);
        assert!(!hit);
        assert_eq!(cache.load(&lambda), Some(row));
    }
}
