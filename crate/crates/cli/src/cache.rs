//! Catalog files under the cache directory, one per (class, n).

use std::fs::{self, File};
use std::io::{BufReader, BufWriter};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use anyhow::{bail, Context, Result};
use votekit::enumeration::{
    certified_count, fold_complete, CatalogReader, CatalogWriter, GameClass,
};
use votekit::CompleteGame;

pub struct Cache {
    dir: PathBuf,
}

/// Outcome of making sure a catalog file exists.
pub struct Prepared {
    pub path: PathBuf,
    pub count: u64,
    pub reused: bool,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    pub fn path(&self, class: GameClass, n: usize) -> PathBuf {
        self.dir.join(format!("{}{n}.vkcat", class.name()))
    }

    /// Reuses a cache file whose header and record framing check out, rebuilding it otherwise.
    pub fn prepare(&self, class: GameClass, n: usize) -> Result<Prepared> {
        if class == GameClass::Simple {
            bail!("simple-game catalogs are not cached");
        }
        let path = self.path(class, n);
        if let Some(count) = valid(&path, class, n) {
            return Ok(Prepared {
                path,
                count,
                reused: true,
            });
        }
        fs::create_dir_all(&self.dir)
            .with_context(|| format!("creating cache directory {}", self.dir.display()))?;
        let tmp = path.with_extension("partial");
        let file = File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?;
        let writer = Mutex::new(CatalogWriter::new(BufWriter::new(file), class, n)?);
        let failure = fold_complete(
            n,
            || None::<votekit::Error>,
            |err, poset, u| {
                if err.is_some() || (class == GameClass::Weighted && u.certificate(poset).is_none())
                {
                    return;
                }
                if let Err(e) = writer.lock().unwrap().push(u.shift_min) {
                    *err = Some(e);
                }
            },
            |a, b| a.or(b),
        )?;
        if let Some(e) = failure {
            return Err(e.into());
        }
        let writer = writer.into_inner().unwrap();
        let count = writer.count();
        writer.finish()?;
        fs::rename(&tmp, &path)?;
        Ok(Prepared {
            path,
            count,
            reused: false,
        })
    }

    /// Folds over every game of a prepared catalog; a file that turns out to
    /// be damaged is rebuilt once and the fold restarted.
    pub fn fold<T>(
        &self,
        class: GameClass,
        n: usize,
        init: impl Fn() -> T,
        mut f: impl FnMut(&mut T, &CompleteGame),
    ) -> Result<(T, Prepared)> {
        for attempt in 0..2 {
            let prepared = self.prepare(class, n)?;
            let mut acc = init();
            match stream(&prepared.path, |g| f(&mut acc, g)) {
                Ok(()) => return Ok((acc, prepared)),
                Err(e) if attempt == 0 => {
                    eprintln!(
                        "warning: discarding damaged cache {}: {e}",
                        prepared.path.display()
                    );
                    fs::remove_file(&prepared.path).ok();
                }
                Err(e) => return Err(e.into()),
            }
        }
        unreachable!("the second attempt returns")
    }
}

fn valid(path: &Path, class: GameClass, n: usize) -> Option<u64> {
    let file = File::open(path).ok()?;
    let reader = CatalogReader::new(BufReader::new(file)).ok()?;
    if reader.class() != class || reader.n() != n {
        return None;
    }
    let count = reader.declared_count();
    if certified_count(class, n).is_some_and(|c| c != count) {
        return None;
    }
    reader.verify_framing().ok()
}

fn stream(path: &Path, mut f: impl FnMut(&CompleteGame)) -> votekit::Result<()> {
    let reader = CatalogReader::new(BufReader::new(File::open(path)?))?;
    for g in reader {
        f(&g?);
    }
    Ok(())
}
