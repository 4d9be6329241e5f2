//! Memoization of irreducible characters, optionally persisted on disk.
//!
//! Files are named `<TYPE>_<c1>_<c2>_..._<cl>.json` and hold
//! `{"type": "A2", "lambda": [1,1], "entries": [[[c1,...,cl], mult], ...]}`
//! with entries sorted by coordinates. Writes go to a temporary file in the
//! same directory and are renamed into place, so concurrent writers of the
//! same (identical) content are safe.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::cartan::CartanType;
use crate::character::{irreducible_character, Character};
use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::weight::Weight;

/// Serialized form of an irreducible character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterFile {
    #[serde(rename = "type")]
    pub cartan_type: CartanType,
    pub lambda: Weight,
    pub entries: Vec<(Weight, u64)>,
}

impl CharacterFile {
    pub fn new(lambda: &Weight, ch: &Character) -> CharacterFile {
        CharacterFile {
            cartan_type: ch.cartan_type(),
            lambda: lambda.clone(),
            entries: ch.sorted_entries(),
        }
    }

    pub fn file_name(cartan_type: CartanType, lambda: &Weight) -> String {
        let mut name = cartan_type.to_string();
        for c in lambda.coords() {
            name.push('_');
            name.push_str(&c.to_string());
        }
        name.push_str(".json");
        name
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }
}

type Key = (CartanType, Weight);

#[derive(Debug, Default)]
pub struct CharacterCache {
    memory: Mutex<HashMap<Key, Arc<Character>>>,
    dir: Option<PathBuf>,
}

static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

impl CharacterCache {
    pub fn in_memory() -> CharacterCache {
        CharacterCache::default()
    }

    /// Cache backed by `dir`, created if missing.
    pub fn on_disk(dir: impl Into<PathBuf>) -> Result<CharacterCache> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|source| Error::Cache {
            path: dir.clone(),
            source,
        })?;
        Ok(CharacterCache {
            memory: Mutex::default(),
            dir: Some(dir),
        })
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn irreducible(&self, rs: &RootSystem, lambda: &Weight) -> Result<Arc<Character>> {
        let key = (rs.cartan_type(), lambda.clone());
        if let Some(hit) = self.memory.lock().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let ch = match self.load(rs, lambda) {
            Some(ch) => ch,
            None => {
                let ch = irreducible_character(rs, lambda)?;
                self.store(lambda, &ch)?;
                ch
            }
        };
        let ch = Arc::new(ch);
        self.memory
            .lock()
            .expect("cache lock")
            .entry(key)
            .or_insert_with(|| ch.clone());
        Ok(ch)
    }

    fn path_for(&self, cartan_type: CartanType, lambda: &Weight) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(CharacterFile::file_name(cartan_type, lambda)))
    }

    // Unreadable or mismatching files count as misses.
    fn load(&self, rs: &RootSystem, lambda: &Weight) -> Option<Character> {
        let path = self.path_for(rs.cartan_type(), lambda)?;
        let text = fs::read_to_string(path).ok()?;
        let file: CharacterFile = serde_json::from_str(&text).ok()?;
        if file.cartan_type != rs.cartan_type() || &file.lambda != lambda {
            return None;
        }
        Character::from_entries(rs, file.entries).ok()
    }

    fn store(&self, lambda: &Weight, ch: &Character) -> Result<()> {
        let Some(path) = self.path_for(ch.cartan_type(), lambda) else {
            return Ok(());
        };
        let body = CharacterFile::new(lambda, ch).to_json()?;
        let tmp = path.with_extension(format!(
            "tmp.{}.{}",
            std::process::id(),
            TMP_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        let io = |source| Error::Cache {
            path: path.clone(),
            source,
        };
        let mut f = fs::File::create(&tmp).map_err(io)?;
        f.write_all(body.as_bytes()).map_err(io)?;
        f.sync_all().map_err(io)?;
        drop(f);
        fs::rename(&tmp, &path).map_err(io)?;
        Ok(())
    }
}
