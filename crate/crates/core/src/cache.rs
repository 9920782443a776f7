//! On-disk cache of generator matrices. A missing, stale or unreadable file
//! is recomputed and rewritten, so deleting the directory only costs time.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::hecke_clifford::{hc_tensor_action, HcAction, HcSpec};
use crate::scalars::RatFunc;
use crate::superlinalg::{SOp, SOpRecord};
use crate::uq_queer::{tensor_rep, vector_rep, AlgebraSpec, Param, QueerRep};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    key: String,
    #[serde(default)]
    clifford_square: i64,
    ops: Vec<(String, SOpRecord)>,
}

#[derive(Debug, Clone)]
pub struct OpCache {
    dir: PathBuf,
}

impl OpCache {
    pub fn new(dir: impl AsRef<Path>) -> io::Result<Self> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(OpCache { dir: dir.as_ref().to_path_buf() })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    fn load(&self, key: &str) -> Option<CacheFile> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let file: CacheFile = serde_json::from_str(&text).ok()?;
        (file.version == FORMAT_VERSION && file.key == key).then_some(file)
    }

    fn store(&self, file: &CacheFile) -> io::Result<()> {
        let text = serde_json::to_string(file).map_err(io::Error::other)?;
        fs::write(self.path(&file.key), text)
    }

    /// `V^{⊗m}` for the rank-`n` algebra, keyed by `(n, param, m, version)`.
    pub fn tensor_rep(&self, n: usize, m: usize, param: Param) -> QueerRep {
        let key = format!("rep-n{n}-{param}-m{m}-v{FORMAT_VERSION}");
        if let Some(rep) = self.load(&key).and_then(|f| rep_from_file(n, param, &f)) {
            return rep;
        }
        let rep = tensor_rep(&vector_rep(n, param), m);
        let ops = rep
            .gens()
            .iter()
            .map(|(&(i, j), op)| (format!("{i},{j}"), op.to_record()))
            .collect();
        // a failed write leaves the cache cold, nothing else
        let _ = self.store(&CacheFile { version: FORMAT_VERSION, key, clifford_square: 0, ops });
        rep
    }

    /// The tensor Hecke–Clifford action, keyed by `(n, m, param, "tensor")`.
    pub fn hc_action(&self, n: usize, m: usize, param: Param) -> HcAction {
        let key = format!("hc-n{n}-m{m}-{param}-tensor-v{FORMAT_VERSION}");
        if let Some(hc) = self.load(&key).and_then(|f| hc_from_file(m, param, &f)) {
            return hc;
        }
        let hc = hc_tensor_action(n, m, param);
        let ops = hc.generators().into_iter().map(|(name, op)| (name, op.to_record())).collect();
        let _ = self.store(&CacheFile {
            version: FORMAT_VERSION,
            key,
            clifford_square: hc.clifford_square,
            ops,
        });
        hc
    }
}

fn rep_from_file(n: usize, param: Param, file: &CacheFile) -> Option<QueerRep> {
    let mut gens = std::collections::BTreeMap::new();
    let mut space = None;
    for (name, rec) in &file.ops {
        let (i, j) = name.split_once(',')?;
        let op = SOp::<RatFunc>::from_record(rec).ok()?;
        let sp = space.get_or_insert_with(|| op.domain().clone()).clone();
        gens.insert((i.parse().ok()?, j.parse().ok()?), op.with_spaces(sp.clone(), sp));
    }
    QueerRep::new(AlgebraSpec::new(n, param), space?, gens).ok()
}

fn hc_from_file(m: usize, param: Param, file: &CacheFile) -> Option<HcAction> {
    let mut t = Vec::new();
    let mut c = Vec::new();
    let mut space = None;
    for (name, rec) in &file.ops {
        let op = SOp::<RatFunc>::from_record(rec).ok()?;
        let sp = space.get_or_insert_with(|| op.domain().clone()).clone();
        let op = op.with_spaces(sp.clone(), sp);
        match name.chars().next()? {
            'T' => t.push(op),
            'C' => c.push(op),
            _ => return None,
        }
    }
    (t.len() + 1 == m && c.len() == m).then(|| HcAction {
        spec: HcSpec { m, param },
        space: space.expect("nonempty"),
        t,
        c,
        q: param.q(),
        clifford_square: file.clifford_square,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_stale_files() {
        let dir = tempfile::tempdir().unwrap();
        let cache = OpCache::new(dir.path()).unwrap();
        let fresh = tensor_rep(&vector_rep(2, Param::Q), 2);
        let cold = cache.tensor_rep(2, 2, Param::Q);
        let warm = cache.tensor_rep(2, 2, Param::Q);
        for (k, op) in fresh.gens() {
            assert_eq!(cold.gen(k.0, k.1), op);
            assert_eq!(warm.gen(k.0, k.1), op);
        }
        let key = format!("rep-n2-q-m2-v{FORMAT_VERSION}");
        let bytes = fs::read(cache.path(&key)).unwrap();
        cache.tensor_rep(2, 2, Param::Q);
        assert_eq!(fs::read(cache.path(&key)).unwrap(), bytes, "deterministic bytes");

        fs::write(cache.path(&key), "not json").unwrap();
        let again = cache.tensor_rep(2, 2, Param::Q);
        assert_eq!(again.gen(1, 2), fresh.gen(1, 2));

        let hc = cache.hc_action(2, 3, Param::QInv);
        let hc2 = cache.hc_action(2, 3, Param::QInv);
        assert_eq!(hc.t, hc2.t);
        assert_eq!(hc.c, hc2.c);
        assert_eq!(hc.clifford_square, hc2.clifford_square);
    }
}
