//! Binary catalog files (little-endian):
//!
//! ```text
//! "VKCAT1" | u8 class | u8 n | u64 count
//! count x ( u16 k | k x u32 shift-minimal winning coalition )
//! ```
//!
//! The library only encodes and decodes; callers own the files.

use std::io::{self, Read, Seek, SeekFrom, Write};

use crate::coalition::Coalition;
use crate::enumeration::{CatalogEntry, GameCatalog, GameClass, MAX_POSET_VOTERS};
use crate::error::{Error, Result};
use crate::games::{CompleteGame, Game};

pub const CATALOG_MAGIC: &[u8; 6] = b"VKCAT1";
const COUNT_OFFSET: u64 = 8;

fn write_game<W: Write>(w: &mut W, shift_min: &[Coalition]) -> Result<()> {
    let k = u16::try_from(shift_min.len()).map_err(|_| Error::Overflow("coalition list"))?;
    w.write_all(&k.to_le_bytes())?;
    for s in shift_min {
        w.write_all(&(s.bits() as u32).to_le_bytes())?;
    }
    Ok(())
}

/// Writes a catalog of complete games.
pub fn write_catalog<W: Write>(cat: &GameCatalog, mut w: W) -> Result<()> {
    if cat.class == GameClass::Simple {
        return Err(Error::Unsupported(
            "only complete and weighted catalogs are cached".into(),
        ));
    }
    w.write_all(CATALOG_MAGIC)?;
    w.write_all(&[cat.class.code(), cat.n as u8])?;
    w.write_all(&(cat.len() as u64).to_le_bytes())?;
    for e in &cat.entries {
        let Game::Complete(c) = &e.game else {
            return Err(Error::Unsupported(
                "catalog entry is not a complete game".into(),
            ));
        };
        write_game(&mut w, c.shift_minimal_winning())?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a catalog. Weighted catalogs get their certificates recomputed, and
/// an entry that turns out not to be weighted marks the file as corrupt.
pub fn read_catalog<R: Read>(r: R) -> Result<GameCatalog> {
    let reader = CatalogReader::new(r)?;
    let (class, n) = (reader.class(), reader.n());
    let mut entries = Vec::with_capacity(reader.declared_count().min(1 << 24) as usize);
    for g in reader {
        let g = g?;
        let certificate = if class == GameClass::Weighted {
            Some(
                g.is_weighted()
                    .ok_or_else(|| Error::CorruptCache(format!("{g} is not weighted")))?,
            )
        } else {
            None
        };
        entries.push(CatalogEntry {
            game: Game::Complete(g),
            certificate,
            vector: None,
        });
    }
    Ok(GameCatalog { n, class, entries })
}

/// Streaming writer; the header count is patched in by [`CatalogWriter::finish`].
pub struct CatalogWriter<W: Write + Seek> {
    inner: W,
    count: u64,
}

impl<W: Write + Seek> CatalogWriter<W> {
    pub fn new(mut inner: W, class: GameClass, n: usize) -> Result<Self> {
        inner.write_all(CATALOG_MAGIC)?;
        inner.write_all(&[class.code(), n as u8])?;
        inner.write_all(&0u64.to_le_bytes())?;
        Ok(CatalogWriter { inner, count: 0 })
    }

    pub fn push(&mut self, shift_min: &[Coalition]) -> Result<()> {
        write_game(&mut self.inner, shift_min)?;
        self.count += 1;
        Ok(())
    }

    /// Games pushed so far.
    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn finish(mut self) -> Result<W> {
        self.inner.seek(SeekFrom::Start(COUNT_OFFSET))?;
        self.inner.write_all(&self.count.to_le_bytes())?;
        self.inner.seek(SeekFrom::End(0))?;
        self.inner.flush()?;
        Ok(self.inner)
    }
}

/// Streaming reader over the games of a catalog file.
pub struct CatalogReader<R: Read> {
    inner: R,
    class: GameClass,
    n: usize,
    count: u64,
    read: u64,
    failed: bool,
}

impl<R: Read> CatalogReader<R> {
    pub fn new(mut inner: R) -> Result<Self> {
        let mut header = [0u8; 16];
        inner
            .read_exact(&mut header)
            .map_err(|_| Error::CorruptCache("truncated header".into()))?;
        if &header[..6] != CATALOG_MAGIC {
            return Err(Error::CorruptCache("bad magic".into()));
        }
        let class = GameClass::from_code(header[6])
            .ok_or_else(|| Error::CorruptCache("bad class tag".into()))?;
        let n = header[7] as usize;
        if !(1..=MAX_POSET_VOTERS).contains(&n) {
            return Err(Error::CorruptCache(format!("bad voter count {n}")));
        }
        let count = u64::from_le_bytes(header[8..16].try_into().unwrap());
        Ok(CatalogReader {
            inner,
            class,
            n,
            count,
            read: 0,
            failed: false,
        })
    }

    pub fn class(&self) -> GameClass {
        self.class
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn declared_count(&self) -> u64 {
        self.count
    }

    /// Walks the record framing without decoding games: every declared
    /// record must be present and nothing may follow the last one.
    pub fn verify_framing(mut self) -> Result<u64> {
        let truncated = || Error::CorruptCache("truncated entry".into());
        for _ in 0..self.count {
            let mut k = [0u8; 2];
            self.inner.read_exact(&mut k).map_err(|_| truncated())?;
            let len = 4 * u16::from_le_bytes(k) as u64;
            let skipped = io::copy(&mut (&mut self.inner).take(len), &mut io::sink())?;
            if skipped != len {
                return Err(truncated());
            }
        }
        let mut probe = [0u8; 1];
        match self.inner.read(&mut probe)? {
            0 => Ok(self.count),
            _ => Err(Error::CorruptCache(
                "trailing data after declared count".into(),
            )),
        }
    }

    fn next_game(&mut self) -> Result<CompleteGame> {
        let mut k = [0u8; 2];
        self.inner
            .read_exact(&mut k)
            .map_err(|_| Error::CorruptCache("truncated entry".into()))?;
        let k = u16::from_le_bytes(k) as usize;
        let mut buf = vec![0u8; 4 * k];
        self.inner
            .read_exact(&mut buf)
            .map_err(|_| Error::CorruptCache("truncated entry".into()))?;
        let list = buf
            .chunks_exact(4)
            .map(|c| Coalition(u32::from_le_bytes(c.try_into().unwrap()) as u64))
            .collect();
        CompleteGame::new(self.n, list).map_err(|e| Error::CorruptCache(e.to_string()))
    }
}

impl<R: Read> Iterator for CatalogReader<R> {
    type Item = Result<CompleteGame>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        if self.read == self.count {
            // the declared count must match the payload exactly
            let mut probe = [0u8; 1];
            return match self.inner.read(&mut probe) {
                Ok(0) => None,
                _ => {
                    self.failed = true;
                    Some(Err(Error::CorruptCache(
                        "trailing data after declared count".into(),
                    )))
                }
            };
        }
        self.read += 1;
        let r = self.next_game();
        self.failed = r.is_err();
        Some(r)
    }
}
