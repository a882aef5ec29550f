use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use lru::LruCache;

use super::{buchberger, GroebnerBasis};
use crate::field::FieldSpec;
use crate::poly::{MonomialOrder, PolySystem, Polynomial};

#[derive(Clone, PartialEq, Eq, Hash)]
struct Key {
    digests: Vec<u64>,
    order: MonomialOrder,
    field: FieldSpec,
    nvars: usize,
}

struct Entry {
    source: Vec<Polynomial>,
    basis: Arc<GroebnerBasis>,
}

/// Bounded LRU cache of reduced Groebner bases, keyed by the generating set
/// (as a set of polynomial digests), the order and the field.
///
/// Safe to share between threads; bases are computed outside the lock, so two
/// threads missing on the same key may both compute it.
pub struct GbCache {
    entries: Mutex<LruCache<Key, Arc<Entry>>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl Default for GbCache {
    fn default() -> Self {
        GbCache::new(256)
    }
}

impl GbCache {
    pub fn new(capacity: usize) -> Self {
        GbCache {
            entries: Mutex::new(LruCache::new(NonZeroUsize::new(capacity.max(1)).unwrap())),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
        }
    }

    pub fn basis(&self, system: &PolySystem, order: MonomialOrder) -> Arc<GroebnerBasis> {
        let mut keyed: Vec<(u64, &Polynomial)> = system.iter().map(|p| (p.digest(), p)).collect();
        keyed.sort_by_key(|(d, _)| *d);
        keyed.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
        let key = Key {
            digests: keyed.iter().map(|(d, _)| *d).collect(),
            order,
            field: system.field(),
            nvars: system.nvars(),
        };
        let hit = self.entries.lock().unwrap().get(&key).cloned();
        if let Some(entry) = hit {
            // guard against digest collisions
            if entry.source.iter().eq(keyed.iter().map(|(_, p)| *p)) {
                self.hits.fetch_add(1, Ordering::Relaxed);
                return entry.basis.clone();
            }
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        let basis = Arc::new(buchberger(system, order));
        let entry = Arc::new(Entry {
            source: keyed.iter().map(|(_, p)| (*p).clone()).collect(),
            basis: basis.clone(),
        });
        self.entries.lock().unwrap().put(key, entry);
        basis
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    pub fn len(&self) -> usize {
        self.entries.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
