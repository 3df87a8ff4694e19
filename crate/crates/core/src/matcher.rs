//! Containment and occurrence enumeration for classical, vincular and
//! barred patterns.
//!
//! All searches are backtracking over increasing position tuples, with the
//! candidate value window narrowed by the nearest already-placed pattern
//! letters above and below. Occurrences come out in lexicographic order of
//! their position tuples.

use std::ops::ControlFlow;

use crate::pattern::{BarredPattern, Pattern, VincularPattern};
use crate::permutation::Permutation;

/// Zero-based host positions of one occurrence, strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occurrence(pub Vec<usize>);

impl Occurrence {
    pub fn positions(&self) -> &[usize] {
        &self.0
    }
}

/// How "part of an occurrence" is read for barred patterns.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum BarredSemantics {
    /// An occurrence of the unbarred portion is excused when its position
    /// set is contained in some occurrence of the full pattern.
    #[default]
    Subset,
    /// It is excused only when some full occurrence places exactly these
    /// positions on the unbarred letters.
    Role,
}

impl BarredSemantics {
    pub fn as_str(self) -> &'static str {
        match self {
            BarredSemantics::Subset => "subset",
            BarredSemantics::Role => "role",
        }
    }
}

impl std::str::FromStr for BarredSemantics {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "subset" => Ok(BarredSemantics::Subset),
            "role" => Ok(BarredSemantics::Role),
            _ => Err(crate::Error::invalid(format!(
                "unknown barred semantics {s:?}"
            ))),
        }
    }
}

/// Per-letter value window: indices of the already placed pattern letters
/// immediately below and above.
struct Plan<'a> {
    pattern: &'a [u32],
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl<'a> Plan<'a> {
    fn new(pattern: &'a [u32]) -> Self {
        let k = pattern.len();
        let mut below = vec![None; k];
        let mut above = vec![None; k];
        for i in 0..k {
            for j in 0..i {
                if pattern[j] < pattern[i] {
                    if below[i].is_none_or(|b: usize| pattern[b] < pattern[j]) {
                        below[i] = Some(j);
                    }
                } else if above[i].is_none_or(|a: usize| pattern[a] > pattern[j]) {
                    above[i] = Some(j);
                }
            }
        }
        Plan {
            pattern,
            below,
            above,
        }
    }
}

#[derive(Default)]
struct Constraints<'a> {
    /// Bond mask of length `k + 1`.
    bonds: Option<&'a [bool]>,
    /// Pattern letter `i` must land on host position `pinned[i]`.
    pinned: Option<&'a [Option<usize>]>,
}

fn search<F>(host: &[u32], pattern: &[u32], cons: &Constraints<'_>, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let k = pattern.len();
    let m = host.len();
    if k == 0 || k > m {
        return ControlFlow::Continue(());
    }
    let plan = Plan::new(pattern);
    let mut chosen = vec![0usize; k];
    descend(host, &plan, cons, 0, &mut chosen, &mut visit)
}

fn descend<F>(
    host: &[u32],
    plan: &Plan<'_>,
    cons: &Constraints<'_>,
    depth: usize,
    chosen: &mut [usize],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let k = plan.pattern.len();
    let m = host.len();
    if depth == k {
        return visit(chosen);
    }
    let mut lo = if depth == 0 { 0 } else { chosen[depth - 1] + 1 };
    let mut hi = m - (k - depth); // inclusive
    if let Some(bonds) = cons.bonds {
        if depth == 0 && bonds[0] {
            hi = 0;
        }
        if depth > 0 && bonds[depth] {
            hi = hi.min(lo);
        }
        if depth == k - 1 && bonds[k] {
            lo = lo.max(m - 1);
        }
    }
    if let Some(pinned) = cons.pinned {
        if let Some(p) = pinned[depth] {
            lo = lo.max(p);
            hi = hi.min(p);
        }
    }
    if lo > hi {
        return ControlFlow::Continue(());
    }
    let floor = plan.below[depth].map(|j| host[chosen[j]]);
    let ceil = plan.above[depth].map(|j| host[chosen[j]]);
    for pos in lo..=hi {
        let val = host[pos];
        if floor.is_some_and(|f| val < f) || ceil.is_some_and(|c| val > c) {
            continue;
        }
        chosen[depth] = pos;
        descend(host, plan, cons, depth + 1, chosen, visit)?;
    }
    ControlFlow::Continue(())
}

fn collect(host: &[u32], pattern: &[u32], cons: &Constraints<'_>) -> Vec<Occurrence> {
    let mut out = Vec::new();
    let _ = search(host, pattern, cons, |pos| {
        out.push(Occurrence(pos.to_vec()));
        ControlFlow::Continue(())
    });
    out
}

fn exists(host: &[u32], pattern: &[u32], cons: &Constraints<'_>) -> bool {
    search(host, pattern, cons, |_| ControlFlow::Break(())).is_break()
}

/// Every subsequence of `w` order-isomorphic to `p`.
pub fn classical_occurrences(w: &Permutation, p: &Permutation) -> Vec<Occurrence> {
    collect(w.letters(), p.letters(), &Constraints::default())
}

pub fn contains_classical(w: &Permutation, p: &Permutation) -> bool {
    exists(w.letters(), p.letters(), &Constraints::default())
}

/// Occurrences of `class(v)` whose bonded letters sit in adjacent host
/// positions and whose anchored ends touch the ends of `w`.
pub fn vincular_occurrences(w: &Permutation, v: &VincularPattern) -> Vec<Occurrence> {
    let cons = Constraints {
        bonds: Some(v.bond_mask()),
        pinned: None,
    };
    collect(w.letters(), v.class().letters(), &cons)
}

pub fn contains_vincular(w: &Permutation, v: &VincularPattern) -> bool {
    let cons = Constraints {
        bonds: Some(v.bond_mask()),
        pinned: None,
    };
    exists(w.letters(), v.class().letters(), &cons)
}

/// The lexicographically least occurrence of the unbarred portion of `b`
/// that is not excused by an occurrence of `class(b)`, if any.
pub fn barred_witness(
    w: &Permutation,
    b: &BarredPattern,
    semantics: BarredSemantics,
) -> Option<Occurrence> {
    let host = w.letters();
    let unbarred = b.unbarred_pattern();
    let unbarred_idx = b.unbarred_positions();
    let full = collect(host, b.class().letters(), &Constraints::default());

    let excused = |o: &[usize]| -> bool {
        full.iter().any(|f| match semantics {
            BarredSemantics::Subset => is_subsequence(o, f.positions()),
            BarredSemantics::Role => unbarred_idx
                .iter()
                .zip(o)
                .all(|(&i, &pos)| f.positions()[i] == pos),
        })
    };

    let mut witness = None;
    let _ = search(host, unbarred.letters(), &Constraints::default(), |o| {
        if excused(o) {
            ControlFlow::Continue(())
        } else {
            witness = Some(Occurrence(o.to_vec()));
            ControlFlow::Break(())
        }
    });
    witness
}

pub fn contains_barred(w: &Permutation, b: &BarredPattern, semantics: BarredSemantics) -> bool {
    barred_witness(w, b, semantics).is_some()
}

/// Both slices strictly increasing.
fn is_subsequence(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|s| it.any(|b| b == s))
}

pub fn contains(w: &Permutation, pattern: &Pattern, semantics: BarredSemantics) -> bool {
    match pattern {
        Pattern::Classical(p) => contains_classical(w, p),
        Pattern::Barred(b) => contains_barred(w, b, semantics),
        Pattern::Vincular(v) => contains_vincular(w, v),
    }
}

/// True when `w` avoids every pattern in `patterns` (vacuously for none).
pub fn avoids_all(w: &Permutation, patterns: &[Pattern], semantics: BarredSemantics) -> bool {
    patterns.iter().all(|p| !contains(w, p, semantics))
}

/// Pattern letter `i` pinned to host position `pins[i]`; used to test
/// whether a partial embedding extends.
pub fn extends_to_occurrence(w: &Permutation, p: &Permutation, pins: &[Option<usize>]) -> bool {
    assert_eq!(pins.len(), p.len());
    let cons = Constraints {
        bonds: None,
        pinned: Some(pins),
    };
    exists(w.letters(), p.letters(), &cons)
}
