//! Decorated patterns: barred and vincular.

use std::fmt;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// A permutation with a nonempty, proper subset of its positions barred.
///
/// Ordering is by the underlying permutation, then by the bar mask read
/// left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarredPattern {
    base: Permutation,
    barred: Vec<bool>,
}

impl BarredPattern {
    /// `barred` holds zero-based positions into `base`.
    pub fn new(base: Permutation, barred: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = vec![false; base.len()];
        for pos in barred {
            if pos >= base.len() {
                return Err(Error::invalid(format!(
                    "barred position {pos} is outside 0..{}",
                    base.len()
                )));
            }
            mask[pos] = true;
        }
        Self::from_mask(base, mask)
    }

    pub fn from_mask(base: Permutation, barred: Vec<bool>) -> Result<Self> {
        if barred.len() != base.len() {
            return Err(Error::invalid(
                "bar mask length differs from the pattern length",
            ));
        }
        let bars = barred.iter().filter(|&&b| b).count();
        if bars == 0 {
            return Err(Error::invalid(
                "a barred pattern needs at least one bar; use a classical pattern",
            ));
        }
        if bars == base.len() {
            return Err(Error::invalid(
                "bars must cover a proper subset of the letters",
            ));
        }
        Ok(BarredPattern { base, barred })
    }

    /// The underlying classical permutation.
    pub fn class(&self) -> &Permutation {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_barred(&self, pos: usize) -> bool {
        self.barred[pos]
    }

    pub fn bar_mask(&self) -> &[bool] {
        &self.barred
    }

    pub fn bar_count(&self) -> usize {
        self.barred.iter().filter(|&&b| b).count()
    }

    pub fn barred_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.barred[i]).collect()
    }

    pub fn unbarred_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.barred[i]).collect()
    }

    /// The unbarred letters, normalized, in their original order.
    pub fn unbarred_pattern(&self) -> Permutation {
        self.base.restrict(&self.unbarred_positions())
    }
}

impl fmt::Display for BarredPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_barred(self))
    }
}

/// A permutation with bonds between adjacent symbols.
///
/// Sites run over `0..=n`: site `i` (for `1 <= i < n`) joins the letters at
/// zero-based positions `i - 1` and `i`; site 0 ties the first letter to the
/// left end of the host and site `n` ties the last letter to the right end.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VincularPattern {
    base: Permutation,
    bonds: Vec<bool>,
}

impl VincularPattern {
    pub fn new(base: Permutation, sites: impl IntoIterator<Item = usize>) -> Result<Self> {
        let n = base.len();
        let mut bonds = vec![false; n + 1];
        for s in sites {
            if s > n {
                return Err(Error::invalid(format!("bond site {s} is outside 0..={n}")));
            }
            bonds[s] = true;
        }
        Ok(VincularPattern { base, bonds })
    }

    pub fn from_mask(base: Permutation, bonds: Vec<bool>) -> Result<Self> {
        if bonds.len() != base.len() + 1 {
            return Err(Error::invalid("bond mask must have n + 1 entries"));
        }
        Ok(VincularPattern { base, bonds })
    }

    pub fn class(&self) -> &Permutation {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_bonded(&self, site: usize) -> bool {
        self.bonds[site]
    }

    pub fn bond_mask(&self) -> &[bool] {
        &self.bonds
    }

    pub fn bond_sites(&self) -> Vec<usize> {
        (0..self.bonds.len()).filter(|&s| self.bonds[s]).collect()
    }

    pub fn bond_count(&self) -> usize {
        self.bonds.iter().filter(|&&b| b).count()
    }

    /// At least one bond, and the inner sites are not all bonded.
    pub fn is_proper(&self) -> bool {
        let n = self.len();
        self.bond_count() > 0 && !(1..n).all(|s| self.bonds[s])
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_vincular(self))
    }
}

/// Any of the three pattern kinds.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    Classical(Permutation),
    Barred(BarredPattern),
    Vincular(VincularPattern),
}

impl Pattern {
    pub fn class(&self) -> &Permutation {
        match self {
            Pattern::Classical(p) => p,
            Pattern::Barred(b) => b.class(),
            Pattern::Vincular(v) => v.class(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Pattern::Classical(_) => "classical",
            Pattern::Barred(_) => "barred",
            Pattern::Vincular(_) => "vincular",
        }
    }
}

impl From<Permutation> for Pattern {
    fn from(p: Permutation) -> Self {
        Pattern::Classical(p)
    }
}

impl From<BarredPattern> for Pattern {
    fn from(b: BarredPattern) -> Self {
        Pattern::Barred(b)
    }
}

impl From<VincularPattern> for Pattern {
    fn from(v: VincularPattern) -> Self {
        Pattern::Vincular(v)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Classical(p) => p.fmt(f),
            Pattern::Barred(b) => b.fmt(f),
            Pattern::Vincular(v) => v.fmt(f),
        }
    }
}
