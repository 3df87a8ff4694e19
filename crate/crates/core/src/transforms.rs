//! Boycotts and the two pattern transforms: bonding the bars of a barred
//! pattern, and barring the bonds of a vincular pattern.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::matcher::contains_vincular;
use crate::pattern::{BarredPattern, VincularPattern};

/// A maximal factor of barred letters together with the unbarred letters
/// immediately flanking it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Boycott {
    /// Zero-based positions of the first and last barred letter.
    pub start: usize,
    pub end: usize,
    /// Flank values, left then right; absent at the pattern boundary.
    pub left: Option<u32>,
    pub right: Option<u32>,
    /// Barred values in positional order.
    pub barred: Vec<u32>,
}

impl Boycott {
    /// The whole value set X.
    pub fn values(&self) -> BTreeSet<u32> {
        let mut x = self.unbarred_values();
        x.extend(self.barred.iter().copied());
        x
    }

    /// U(X).
    pub fn unbarred_values(&self) -> BTreeSet<u32> {
        self.left.into_iter().chain(self.right).collect()
    }

    /// B(X).
    pub fn barred_values(&self) -> BTreeSet<u32> {
        self.barred.iter().copied().collect()
    }
}

/// One boycott per maximal barred factor, left to right.
pub fn boycotts(b: &BarredPattern) -> Vec<Boycott> {
    let letters = b.class().letters();
    let n = letters.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        if !b.is_barred(i) {
            i += 1;
            continue;
        }
        let start = i;
        while i + 1 < n && b.is_barred(i + 1) {
            i += 1;
        }
        let end = i;
        out.push(Boycott {
            start,
            end,
            left: start.checked_sub(1).map(|p| letters[p]),
            right: (end + 1 < n).then(|| letters[end + 1]),
            barred: letters[start..=end].to_vec(),
        });
        i += 1;
    }
    out
}

/// Vincular patterns obtained by deleting a nonempty subset of the barred
/// letters and bonding across each deletion gap.
///
/// Barred letters that are kept become plain letters. A gap at either end
/// of the pattern becomes an anchor bond. Results are keyed and ordered by
/// canonical text.
pub fn bond_set(b: &BarredPattern) -> Vec<VincularPattern> {
    let barred = b.barred_positions();
    let n = b.len();
    let mut seen: BTreeMap<String, VincularPattern> = BTreeMap::new();
    for subset in 1u64..(1u64 << barred.len()) {
        let mut deleted = vec![false; n];
        for (bit, &pos) in barred.iter().enumerate() {
            if subset >> bit & 1 == 1 {
                deleted[pos] = true;
            }
        }
        let v = bond_deletion(b, &deleted);
        seen.entry(v.to_string()).or_insert(v);
    }
    seen.into_values().collect()
}

fn bond_deletion(b: &BarredPattern, deleted: &[bool]) -> VincularPattern {
    let drop: Vec<usize> = (0..deleted.len()).filter(|&i| deleted[i]).collect();
    let base = b
        .class()
        .delete_positions(&drop)
        .expect("a proper barred pattern keeps at least one letter");
    let mut sites = Vec::new();
    let mut survivors = 0;
    let mut in_run = false;
    for &d in deleted {
        if d {
            if !in_run {
                sites.push(survivors);
                in_run = true;
            }
        } else {
            survivors += 1;
            in_run = false;
        }
    }
    VincularPattern::new(base, sites).expect("sites lie within 0..=n")
}

/// Barred patterns obtained by replacing one bond of `v` with an inserted
/// barred letter whose presence breaks containment of `v`. Remaining bonds
/// are dropped. Anchor bonds insert outside the pattern.
pub fn bar_set(v: &VincularPattern) -> Result<Vec<BarredPattern>> {
    let sites = v.bond_sites();
    if sites.is_empty() {
        return Err(Error::invalid("bar(v) needs at least one bond"));
    }
    let n = v.len();
    let mut seen: BTreeMap<String, BarredPattern> = BTreeMap::new();
    for &site in &sites {
        for rank in 1..=(n as u32 + 1) {
            let host = v
                .class()
                .insert_at_site(site, rank)
                .expect("site and rank are in range");
            if contains_vincular(&host, v) {
                continue;
            }
            let b = BarredPattern::new(host, [site]).expect("one bar on n + 1 letters is proper");
            seen.entry(b.to_string()).or_insert(b);
        }
    }
    Ok(seen.into_values().collect())
}
