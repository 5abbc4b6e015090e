//! Resource caps for the enumeration-heavy operations.
//!
//! Caps are process-wide so the CLI can install overrides from the
//! `MONOGRAD_CAPS` environment variable once at startup. Library callers that
//! need a specific bound for a single call use the `*_with_cap` variants.

use std::sync::RwLock;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest ambient size after polarization accepted by the Hochster engine.
    pub polarized_vars: usize,
    /// Largest number of degree-j monomials `degree_component` may enumerate.
    pub component_enum: u128,
    /// Largest generator count for the linear-quotients search.
    pub lq_generators: usize,
    /// Largest layer size `C(N, d)` the colex shadow oracle may enumerate.
    pub colex_enum: u128,
    /// Largest number of multidegrees the Koszul oracle may visit.
    pub koszul_enum: u128,
    /// Largest exponent accepted anywhere.
    pub max_exponent: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            polarized_vars: 24,
            component_enum: 1_000_000,
            lq_generators: 64,
            colex_enum: 1_000_000,
            koszul_enum: 1_000_000,
            max_exponent: i32::MAX as u32,
        }
    }
}

impl Caps {
    /// Parses overrides of the form `polarized-vars=30,colex-enum=2000000`
    /// on top of the defaults.
    pub fn from_overrides(spec: &str) -> Result<Caps> {
        let mut caps = Caps::default();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("cap override `{item}` is not key=value")))?;
            let value: u128 = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("cap `{key}` has a non-integer value")))?;
            let small = |v: u128| {
                usize::try_from(v).map_err(|_| Error::Parse(format!("cap `{key}` too large")))
            };
            match key.trim() {
                "polarized-vars" => caps.polarized_vars = small(value)?.min(64),
                "component-enum" => caps.component_enum = value,
                "lq-generators" => caps.lq_generators = small(value)?.min(64),
                "colex-enum" => caps.colex_enum = value,
                "koszul-enum" => caps.koszul_enum = value,
                other => return Err(Error::Parse(format!("unknown cap `{other}`"))),
            }
        }
        Ok(caps)
    }
}

static GLOBAL: RwLock<Option<Caps>> = RwLock::new(None);

/// The caps currently in force.
pub fn current() -> Caps {
    GLOBAL
        .read()
        .map(|g| g.unwrap_or_default())
        .unwrap_or_default()
}

/// Replaces the process-wide caps.
pub fn install(caps: Caps) {
    if let Ok(mut g) = GLOBAL.write() {
        *g = Some(caps);
    }
}
