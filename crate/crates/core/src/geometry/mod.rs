//! Distances between power vectors, nearest-neighbour search over the
//! vectors of weighted games, and the worst-case approximation gap.

mod census;
mod gap;
pub(crate) mod metric;
mod store;
mod vecfile;

pub use census::{census, count_distinct, known_distinct_count, Census, VectorKey};
pub use gap::{omega, GapAnalysis, GapReport};
pub use metric::{distance, Metric};
pub use store::{Neighbor, VectorStore};
pub use vecfile::{read_vectors, write_vectors, VECTOR_MAGIC};

use rayon::prelude::*;

use crate::enumeration::GameCatalog;
use crate::error::{Error, Result};
use crate::indices::IndexKind;

/// Store over the distinct vectors of a catalog. The payload is the index of
/// the first (smallest) catalog entry carrying the vector.
pub fn build_store(catalog: &GameCatalog, kind: IndexKind) -> Result<VectorStore<usize>> {
    if catalog.is_empty() {
        return Err(Error::EmptyStore);
    }
    let vectors = catalog
        .entries
        .par_iter()
        .map(|e| match &e.vector {
            Some(v) if v.kind() == kind => Ok(v.clone()),
            _ => crate::indices::power_vector(&e.game, kind, crate::indices::Engine::Direct),
        })
        .collect::<Result<Vec<_>>>()?;
    VectorStore::build(
        kind,
        catalog.n,
        vectors.into_iter().enumerate().map(|(i, v)| (v, i)),
    )
}
