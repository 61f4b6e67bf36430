use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, OnceLock, RwLock};

/// Thread-safe once-per-key cache for pure functions.
pub(crate) struct Memo<K, V> {
    map: OnceLock<RwLock<HashMap<K, Arc<V>>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo { map: OnceLock::new() }
    }

    pub(crate) fn get_or_insert_with(&self, key: K, f: impl FnOnce() -> V) -> Arc<V> {
        let map = self.map.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(v) = map.read().unwrap().get(&key) {
            return Arc::clone(v);
        }
        // Computed outside the lock; a racing thread may compute the same
        // value, the first insert wins.
        let v = Arc::new(f());
        Arc::clone(map.write().unwrap().entry(key).or_insert(v))
    }
}
