//! Size caps guarding the exponential parts of the library.
//!
//! The defaults can be replaced process-wide with [`Limits::install`]. The
//! environment variable [`SIZE_CAP_ENV`] overrides the enumeration cap when the
//! limits are first read.

use std::sync::RwLock;

use crate::error::{Error, Result};

/// Environment variable overriding the global enumeration cap.
pub const SIZE_CAP_ENV: &str = "SYMREP_SIZE_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest n accepted by partition and tableau enumeration.
    pub enumeration: usize,
    /// Largest n for full character tables.
    pub character_table: usize,
    /// Largest degree for subspace computations in the group algebra.
    pub subalgebra: usize,
    /// Largest degree for the brute-force regular-representation spectrum.
    pub spectrum: usize,
    /// Largest degree for the conjugating-element search.
    pub conjugation: usize,
    /// Largest n for exact checks over every seminormal generator matrix.
    pub matrices: usize,
    /// Largest n for checks that multiply out whole permutation matrices.
    pub traces: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: 20,
            character_table: 8,
            subalgebra: 6,
            spectrum: 5,
            conjugation: 7,
            matrices: 7,
            traces: 6,
        }
    }
}

static INSTALLED: RwLock<Option<Limits>> = RwLock::new(None);

impl Limits {
    /// Defaults with the environment override applied.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(SIZE_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            limits.enumeration = cap;
        }
        limits
    }

    /// The limits currently in force.
    pub fn current() -> Self {
        if let Some(l) = *INSTALLED.read().unwrap_or_else(|e| e.into_inner()) {
            return l;
        }
        let mut slot = INSTALLED.write().unwrap_or_else(|e| e.into_inner());
        *slot.get_or_insert_with(Limits::from_env)
    }

    /// Replace the process-wide limits.
    pub fn install(self) {
        *INSTALLED.write().unwrap_or_else(|e| e.into_inner()) = Some(self);
    }

    /// Every cap raised by one.
    pub fn deeper(self) -> Self {
        Limits {
            enumeration: self.enumeration + 1,
            character_table: self.character_table + 1,
            subalgebra: self.subalgebra + 1,
            spectrum: self.spectrum + 1,
            conjugation: self.conjugation + 1,
            matrices: self.matrices + 1,
            traces: self.traces + 1,
        }
    }
}

pub(crate) fn check(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::SizeCap { what, n, cap })
    } else {
        Ok(())
    }
}
