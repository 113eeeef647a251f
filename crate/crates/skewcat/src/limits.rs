//! Process-wide size caps.
//!
//! Caps are read far below the point where a fixture is parsed (hom objects
//! enumerate lazily), so they live in atomics rather than being threaded
//! through every constructor. They only ever get raised, never lowered, by
//! the command line front end.

use std::sync::atomic::{AtomicUsize, Ordering};

pub const DEFAULT_MAX_SET: usize = 4;
pub const DEFAULT_MAX_DIM: usize = 3;
pub const DEFAULT_MAX_HOM: usize = 4096;

static MAX_SET: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_SET);
static MAX_DIM: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_DIM);
static MAX_HOM: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_HOM);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_set: usize,
    pub max_dim: usize,
    pub max_hom: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_set: DEFAULT_MAX_SET,
            max_dim: DEFAULT_MAX_DIM,
            max_hom: DEFAULT_MAX_HOM,
        }
    }
}

pub fn caps() -> Caps {
    Caps {
        max_set: MAX_SET.load(Ordering::Relaxed),
        max_dim: MAX_DIM.load(Ordering::Relaxed),
        max_hom: MAX_HOM.load(Ordering::Relaxed),
    }
}

/// Raise the caps to at least `c`. Lower values are ignored.
pub fn raise(c: Caps) {
    MAX_SET.fetch_max(c.max_set, Ordering::Relaxed);
    MAX_DIM.fetch_max(c.max_dim, Ordering::Relaxed);
    MAX_HOM.fetch_max(c.max_hom, Ordering::Relaxed);
}

pub fn max_hom() -> usize {
    MAX_HOM.load(Ordering::Relaxed)
}
