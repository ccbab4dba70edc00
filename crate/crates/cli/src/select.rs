//! Module selectors: `R`, `J`, `R/J`, `soc`, `simple:<i>`, `c<id>`, `sum:<sel>+<sel>...`, `all`.

use std::sync::Arc;

use sier_core::{simple_modules, Error, FiniteModule, FiniteRing, Lab, Result};

/// Build the module a selector names. `all` is handled by the caller.
pub fn resolve(sel: &str, ring: &Arc<FiniteRing>, lab: &Lab) -> Result<FiniteModule> {
    let reg = FiniteModule::regular(ring);
    let sel = sel.trim();
    match sel {
        "R" => return Ok(reg),
        "J" => return Ok(reg.submodule(&reg.radical())),
        "R/J" => return Ok(reg.quotient_module(&reg.radical())),
        "soc" => return Ok(reg.submodule(&reg.socle())),
        "0" => return Ok(FiniteModule::zero(ring)),
        _ => {}
    }
    if let Some(i) = sel.strip_prefix("simple:") {
        let i: usize = i.parse().map_err(|_| Error::UnknownSelector(sel.to_string()))?;
        return simple_modules(ring)
            .get(i)
            .cloned()
            .ok_or_else(|| Error::UnknownSelector(sel.to_string()));
    }
    if let Some(parts) = sel.strip_prefix("sum:") {
        let mut acc = FiniteModule::zero(ring);
        for p in parts.split('+') {
            acc = acc.direct_sum(&resolve(p, ring, lab)?)?;
        }
        return Ok(acc);
    }
    if let Some(id) = sel.strip_prefix('c') {
        if let Ok(id) = id.parse::<usize>() {
            if id < lab.catalog().len() {
                return Ok(lab.catalog().class(id).clone());
            }
        }
    }
    Err(Error::UnknownSelector(sel.to_string()))
}

/// Human names for the distinguished classes, used in place of `c<id>` labels.
pub struct Names {
    named: Vec<(usize, String)>,
}

impl Names {
    pub fn new(ring: &Arc<FiniteRing>, lab: &Lab) -> Result<Self> {
        let mut named: Vec<(usize, String)> = Vec::new();
        let mut add = |k: usize, n: String| match named.iter_mut().find(|(x, _)| *x == k) {
            Some((_, old)) => {
                old.push('=');
                old.push_str(&n);
            }
            None => named.push((k, n)),
        };
        for s in ["0", "R", "J", "R/J"] {
            add(lab.key_of(&resolve(s, ring, lab)?)?, s.to_string());
        }
        let simples = simple_modules(ring);
        if simples.len() > 1 {
            for (i, s) in simples.iter().enumerate() {
                add(lab.key_of(s)?, format!("simple:{i}"));
            }
        }
        Ok(Names { named })
    }

    pub fn is_named(&self, key: usize) -> bool {
        self.named.iter().any(|(k, _)| *k == key)
    }

    pub fn label(&self, lab: &Lab, key: usize) -> String {
        let id = if key < lab.catalog().len() {
            format!("c{key}")
        } else {
            format!("x{}", key - lab.catalog().len())
        };
        match self.named.iter().find(|(k, _)| *k == key) {
            Some((_, n)) => format!("{n} ({id})"),
            None => id,
        }
    }

    pub fn short(&self, lab: &Lab, key: usize) -> String {
        match self.named.iter().find(|(k, _)| *k == key) {
            Some((_, n)) => n.clone(),
            None if key < lab.catalog().len() => format!("c{key}"),
            None => format!("x{}", key - lab.catalog().len()),
        }
    }
}
