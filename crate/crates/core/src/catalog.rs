//! Bounded catalogs of isomorphism classes, short exact sequences, and the on-disk cache.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::envelopes::{is_injective, is_projective};
use crate::error::{Error, Result};
use crate::hom::ModuleHom;
use crate::iso::{fingerprint_with, isomorphic_with_equal_fingerprints, Fingerprint};
use crate::lattice::{simple_modules, submodules};
use crate::module::{FiniteModule, ModuleDoc, SubmoduleHandle};
use crate::ring::{FiniteRing, RingDoc};

pub const DEFAULT_MAX_SIZE: u64 = 64;
pub const DEFAULT_MAX_GENS: usize = 2;
/// Cap on the submodule lattice of `R^g` walked while building a catalog.
pub const CATALOG_LATTICE_BOUND: usize = 200_000;
pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    pub size: u64,
    pub injective: bool,
    pub projective: bool,
    pub simple: bool,
    pub cyclic: bool,
    pub semisimple: bool,
    pub length: usize,
    pub min_generators: usize,
}

impl ClassFlags {
    pub fn compute(m: &FiniteModule) -> Self {
        ClassFlags {
            size: m.size() as u64,
            injective: is_injective(m),
            projective: is_projective(m),
            simple: m.is_simple(),
            cyclic: m.min_generator_count() <= 1,
            semisimple: m.is_semisimple(),
            length: m.composition_length(),
            min_generators: m.min_generator_count(),
        }
    }
}

/// Representatives of the modules `R^g / K` (`g <= max_gens`, size `<= max_size`)
/// up to isomorphism, in a deterministic order. Class ids are indices.
#[derive(Debug, Clone)]
pub struct Catalog {
    ring: Arc<FiniteRing>,
    max_size: u64,
    max_gens: usize,
    classes: Vec<FiniteModule>,
    flags: Vec<ClassFlags>,
    fingerprints: Vec<Fingerprint>,
    simples: Vec<FiniteModule>,
}

impl Catalog {
    pub fn build(ring: &Arc<FiniteRing>, max_size: u64, max_gens: usize) -> Result<Self> {
        if max_size == 0 || max_gens == 0 {
            return Err(Error::MalformedSpec("catalog bounds must be positive".into()));
        }
        let simples = simple_modules(ring);
        let mut quotients: Vec<FiniteModule> = Vec::new();
        for g in 1..=max_gens {
            let free = FiniteModule::free(ring, g);
            let min_log = free.size_log().saturating_sub(log_floor(ring.zm().prime(), max_size));
            let lattice = submodules(&free, CATALOG_LATTICE_BOUND)?;
            quotients.extend(
                lattice
                    .into_iter()
                    .filter(|k| free.sub_size_log(k) >= min_log)
                    .map(|k| free.quotient_module(&k)),
            );
        }
        let prints: Vec<Fingerprint> = quotients.par_iter().map(|q| fingerprint_with(q, &simples)).collect();
        let mut buckets: BTreeMap<Fingerprint, Vec<usize>> = BTreeMap::new();
        for (i, fp) in prints.iter().enumerate() {
            buckets.entry(fp.clone()).or_default().push(i);
        }
        let reps: Vec<Vec<usize>> = buckets
            .into_par_iter()
            .map(|(fp, members)| {
                let mut reps: Vec<usize> = Vec::new();
                for i in members {
                    let dup = reps.iter().any(|&j| {
                        isomorphic_with_equal_fingerprints(&quotients[j], &quotients[i], &fp).expect("same ring")
                    });
                    if !dup {
                        reps.push(i);
                    }
                }
                reps
            })
            .collect();
        let mut chosen: Vec<(Fingerprint, String, FiniteModule)> = reps
            .into_iter()
            .flatten()
            .map(|i| {
                let doc = serde_json::to_string(&quotients[i].to_doc()).expect("serializable");
                (prints[i].clone(), doc, quotients[i].clone())
            })
            .collect();
        chosen.sort_by(|a, b| (a.0.structure.size_log, &a.0, &a.1).cmp(&(b.0.structure.size_log, &b.0, &b.1)));
        let classes: Vec<FiniteModule> = chosen.iter().map(|c| c.2.clone()).collect();
        let fingerprints = chosen.into_iter().map(|c| c.0).collect();
        let flags = classes.par_iter().map(ClassFlags::compute).collect();
        Ok(Catalog {
            ring: ring.clone(),
            max_size,
            max_gens,
            classes,
            flags,
            fingerprints,
            simples,
        })
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn max_size(&self) -> u64 {
        self.max_size
    }

    pub fn max_gens(&self) -> usize {
        self.max_gens
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[FiniteModule] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &FiniteModule {
        &self.classes[id]
    }

    pub fn flags(&self, id: usize) -> &ClassFlags {
        &self.flags[id]
    }

    pub fn fingerprint(&self, id: usize) -> &Fingerprint {
        &self.fingerprints[id]
    }

    /// The simple modules of the ring, in the order used by fingerprints.
    pub fn simples(&self) -> &[FiniteModule] {
        &self.simples
    }

    pub fn ids(&self) -> impl Iterator<Item = usize> {
        0..self.classes.len()
    }

    pub fn ids_where(&self, pred: impl Fn(&ClassFlags) -> bool) -> Vec<usize> {
        self.ids().filter(|&i| pred(&self.flags[i])).collect()
    }

    pub fn label(&self, id: usize) -> String {
        format!("c{id}")
    }

    /// Fingerprint of an arbitrary module over this ring, comparable with the catalog's.
    pub fn fingerprint_of(&self, m: &FiniteModule) -> Fingerprint {
        fingerprint_with(m, &self.simples)
    }

    /// The class id of `m`, if `m` is isomorphic to a catalog class.
    pub fn identify(&self, m: &FiniteModule) -> Result<Option<usize>> {
        m.same_ring(self.classes.first().unwrap_or(m))?;
        let fp = self.fingerprint_of(m);
        self.identify_with(m, &fp)
    }

    pub fn identify_with(&self, m: &FiniteModule, fp: &Fingerprint) -> Result<Option<usize>> {
        for (i, f) in self.fingerprints.iter().enumerate() {
            if f == fp && isomorphic_with_equal_fingerprints(&self.classes[i], m, fp)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

fn log_floor(p: u64, n: u64) -> u32 {
    let mut e = 0;
    let mut acc = 1u64;
    while acc.saturating_mul(p) <= n {
        acc *= p;
        e += 1;
    }
    e
}

/// `0 -> A -> B -> B/A -> 0`.
#[derive(Debug, Clone)]
pub struct ShortExact {
    pub sub: SubmoduleHandle,
    pub a: FiniteModule,
    pub c: FiniteModule,
    pub projection: ModuleHom,
}

/// One sequence per submodule of `b`, in lattice order.
pub fn short_exact_sequences(b: &FiniteModule, bound: usize) -> Result<Vec<ShortExact>> {
    Ok(submodules(b, bound)?
        .into_iter()
        .map(|sub| ShortExact {
            a: b.submodule(&sub),
            c: b.quotient_module(&sub),
            projection: ModuleHom::projection(b, &sub),
            sub,
        })
        .collect())
}

// ---- cache ----

/// A memoized pairwise predicate on catalog classes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MemoEntry {
    pub op: String,
    pub a: usize,
    pub b: usize,
    pub value: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheManifest {
    pub version: u32,
    pub ring_hash: String,
    pub ring: RingDoc,
    pub max_size: u64,
    pub max_gens: usize,
    pub classes: Vec<ModuleDoc>,
    pub flags: Vec<ClassFlags>,
    pub fingerprints: Vec<Fingerprint>,
    pub memo: Vec<MemoEntry>,
}

/// Cache file for a ring and bounds, addressed by the ring's content hash.
pub fn cache_path(dir: &Path, ring: &FiniteRing, max_size: u64, max_gens: usize) -> PathBuf {
    let hash = ring.content_hash();
    dir.join(format!("catalog-{}-s{max_size}-g{max_gens}.json", &hash[..16]))
}

pub fn cache_store(dir: &Path, cat: &Catalog, memo: &[MemoEntry]) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let mut memo = memo.to_vec();
    memo.sort();
    let manifest = CacheManifest {
        version: CACHE_VERSION,
        ring_hash: cat.ring.content_hash(),
        ring: cat.ring.to_doc(),
        max_size: cat.max_size,
        max_gens: cat.max_gens,
        classes: cat.classes.iter().map(|m| m.to_doc()).collect(),
        flags: cat.flags.clone(),
        fingerprints: cat.fingerprints.clone(),
        memo,
    };
    let path = cache_path(dir, &cat.ring, cat.max_size, cat.max_gens);
    let tmp = path.with_extension("json.tmp");
    std::fs::write(&tmp, serde_json::to_vec(&manifest)?)?;
    std::fs::rename(&tmp, &path)?;
    Ok(path)
}

/// Load a cache file, refusing it if it was built for a different ring, bounds or version.
pub fn cache_load(
    path: &Path,
    ring: &Arc<FiniteRing>,
    max_size: u64,
    max_gens: usize,
) -> Result<(Catalog, Vec<MemoEntry>)> {
    let text = std::fs::read(path)?;
    let manifest: CacheManifest = serde_json::from_slice(&text)?;
    if manifest.version != CACHE_VERSION {
        return Err(Error::VersionMismatch(format!(
            "cache version {} != {}",
            manifest.version, CACHE_VERSION
        )));
    }
    if manifest.ring_hash != ring.content_hash() {
        return Err(Error::VersionMismatch("ring definition changed".into()));
    }
    if manifest.max_size != max_size || manifest.max_gens != max_gens {
        return Err(Error::VersionMismatch("catalog bounds differ".into()));
    }
    let classes = manifest
        .classes
        .iter()
        .map(|d| FiniteModule::from_doc(ring, d))
        .collect::<Result<Vec<_>>>()?;
    if classes.len() != manifest.flags.len() || classes.len() != manifest.fingerprints.len() {
        return Err(Error::VersionMismatch("cache tables have inconsistent lengths".into()));
    }
    let cat = Catalog {
        ring: ring.clone(),
        max_size,
        max_gens,
        classes,
        flags: manifest.flags,
        fingerprints: manifest.fingerprints,
        simples: simple_modules(ring),
    };
    Ok((cat, manifest.memo))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::fixtures::*;

    #[test]
    fn small_catalogs() {
        assert_eq!(Catalog::build(&f2(), 64, 2).unwrap().len(), 3);
        assert_eq!(Catalog::build(&z4(), 64, 2).unwrap().len(), 6);
    }

    #[test]
    fn ses_counts() {
        let m = FiniteModule::regular(&r8());
        let seqs = short_exact_sequences(&m, 100).unwrap();
        assert_eq!(seqs.len(), 6);
        let first = &seqs[0];
        assert!(first.a.is_zero());
        assert!(first.projection.is_iso());
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let r = z4();
        let cat = Catalog::build(&r, 16, 2).unwrap();
        let memo = vec![MemoEntry {
            op: "subinjective".into(),
            a: 1,
            b: 2,
            value: true,
        }];
        let path = cache_store(dir.path(), &cat, &memo).unwrap();
        let (back, memo_back) = cache_load(&path, &r, 16, 2).unwrap();
        assert_eq!(memo_back, memo);
        assert_eq!(back.len(), cat.len());
        for i in cat.ids() {
            assert_eq!(back.flags(i), cat.flags(i));
            assert_eq!(back.class(i).v_basis(), cat.class(i).v_basis());
        }
        assert!(matches!(
            cache_load(&path, &z8(), 16, 2),
            Err(Error::VersionMismatch(_))
        ));
        assert!(matches!(cache_load(&path, &r, 32, 2), Err(Error::VersionMismatch(_))));
    }
}
