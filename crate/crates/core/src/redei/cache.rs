use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::{classify_with, AdmissiblePair, TripleVerdict};
use crate::error::Result;

/// Memo of admissible pairs keyed by the ordered pair `(p1, p2)`.
///
/// Reads are concurrent; inserts take the write lock. Two threads racing on
/// the same key both solve, and the first insert wins; values are identical.
#[derive(Debug, Default)]
pub struct PairCache {
    pairs: RwLock<HashMap<(u64, u64), Arc<AdmissiblePair>>>,
}

impl PairCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, p1: u64, p2: u64) -> Result<Arc<AdmissiblePair>> {
        if let Some(pair) = self.pairs.read().unwrap().get(&(p1, p2)) {
            return Ok(Arc::clone(pair));
        }
        let pair = Arc::new(AdmissiblePair::new(p1, p2)?);
        let mut map = self.pairs.write().unwrap();
        Ok(Arc::clone(map.entry((p1, p2)).or_insert(pair)))
    }

    pub fn len(&self) -> usize {
        self.pairs.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn classify(&self, p1: u64, p2: u64, p3: u64) -> Result<TripleVerdict> {
        classify_with(p1, p2, p3, |a, b| self.get(a, b).map(|p| (*p).clone()))
    }
}
