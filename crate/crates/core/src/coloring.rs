use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// Which transition rule drives the dynamics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynamicsKind {
    /// Cyclic cellular automaton: `i` advances to `i+1` iff a neighbor holds `i+1`.
    Cca,
    /// Greenberg–Hastings: `0` advances iff a neighbor holds `1`; other colors always advance.
    Ghm,
}

impl DynamicsKind {
    pub const ALL: [DynamicsKind; 2] = [DynamicsKind::Cca, DynamicsKind::Ghm];

    pub fn as_str(self) -> &'static str {
        match self {
            DynamicsKind::Cca => "cca",
            DynamicsKind::Ghm => "ghm",
        }
    }

    /// The 3-color increment `dX(u, v)` given the colors at `u` and `v`.
    #[inline]
    pub fn increment(self, from: u8, to: u8) -> i8 {
        match self {
            DynamicsKind::Cca => match (to + 3 - from) % 3 {
                0 => 0,
                1 => 1,
                _ => -1,
            },
            DynamicsKind::Ghm => match (from, to) {
                (0, 1) => 1,
                (1, 0) => -1,
                _ => 0,
            },
        }
    }
}

impl fmt::Display for DynamicsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DynamicsKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cca" | "CCA" => Ok(DynamicsKind::Cca),
            "ghm" | "GHM" => Ok(DynamicsKind::Ghm),
            _ => Err(Error::Domain("dynamics kind must be `cca` or `ghm`")),
        }
    }
}

/// A κ-coloring `X: V → Z_κ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    kappa: u8,
    colors: Vec<u8>,
}

impl Coloring {
    pub fn new(kappa: u8, colors: Vec<u8>) -> Result<Self> {
        if kappa < 2 {
            return Err(Error::BadKappa(kappa));
        }
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= kappa) {
            return Err(Error::BadColor { vertex, color, kappa });
        }
        Ok(Coloring { kappa, colors })
    }

    pub fn monochromatic(kappa: u8, n: usize, color: u8) -> Result<Self> {
        Self::new(kappa, alloc::vec![color; n])
    }

    #[inline]
    pub fn kappa(&self) -> u8 {
        self.kappa
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    #[inline]
    pub fn get(&self, v: usize) -> u8 {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.colors
    }

    pub fn into_vec(self) -> Vec<u8> {
        self.colors
    }

    pub fn is_monochromatic(&self) -> bool {
        self.colors.windows(2).all(|w| w[0] == w[1])
    }

    /// `X - shift (mod κ)` at every vertex.
    pub fn shifted_down(&self, shift: u8) -> Coloring {
        let k = self.kappa;
        let s = shift % k;
        Coloring { kappa: k, colors: self.colors.iter().map(|&c| (c + k - s) % k).collect() }
    }

    pub fn require_kappa3(&self) -> Result<()> {
        if self.kappa == 3 {
            Ok(())
        } else {
            Err(Error::UnsupportedKappa(self.kappa))
        }
    }

    pub(crate) fn require_len(&self, n: usize) -> Result<()> {
        if self.colors.len() == n {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: n, got: self.colors.len() })
        }
    }
}
