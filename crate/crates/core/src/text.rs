//! Text grammar for patterns.
//!
//! Compact form concatenates single-digit letters (`413'52`, `3[14]2`);
//! spaced form separates decimal letters by spaces (`10 1' 2 ...`). A
//! trailing apostrophe bars a letter. Square brackets enclose a maximal
//! bonded run; `*` opening the first bracket is the left anchor and `*`
//! closing the last bracket is the right anchor (`[*3][14]2`, `[21][3*]`).
//! Brackets never nest and hold at least two symbols. Bars and bonds never
//! appear in the same pattern.

use crate::error::{Error, Result};
use crate::pattern::{BarredPattern, Pattern, VincularPattern};
use crate::permutation::Permutation;

/// Parses any pattern kind. Undecorated text yields a classical pattern.
pub fn parse_pattern(text: &str) -> Result<Pattern> {
    let raw = scan(text)?;
    let base = Permutation::new(raw.letters).map_err(|e| Error::parse(0, e.to_string()))?;
    match (raw.any_bar, raw.any_bond) {
        (true, true) => unreachable!("scan rejects mixed decorations"),
        (true, false) => BarredPattern::from_mask(base, raw.barred)
            .map(Pattern::Barred)
            .map_err(|e| Error::parse(0, e.to_string())),
        (false, true) => VincularPattern::from_mask(base, raw.bonds)
            .map(Pattern::Vincular)
            .map_err(|e| Error::parse(0, e.to_string())),
        (false, false) => Ok(Pattern::Classical(base)),
    }
}

pub fn parse_permutation(text: &str) -> Result<Permutation> {
    match parse_pattern(text)? {
        Pattern::Classical(p) => Ok(p),
        other => Err(Error::parse(
            0,
            format!(
                "expected a plain permutation, found a {} pattern",
                other.kind()
            ),
        )),
    }
}

pub fn parse_barred(text: &str) -> Result<BarredPattern> {
    match parse_pattern(text)? {
        Pattern::Barred(b) => Ok(b),
        other => Err(Error::parse(
            0,
            format!(
                "expected a barred pattern, found a {} pattern",
                other.kind()
            ),
        )),
    }
}

pub fn parse_vincular(text: &str) -> Result<VincularPattern> {
    match parse_pattern(text)? {
        Pattern::Vincular(v) => Ok(v),
        other => Err(Error::parse(
            0,
            format!(
                "expected a vincular pattern, found a {} pattern",
                other.kind()
            ),
        )),
    }
}

/// Canonical text of any pattern.
pub fn format_pattern(pattern: &Pattern) -> String {
    pattern.to_string()
}

pub(crate) fn format_barred(b: &BarredPattern) -> String {
    format_letters(
        b.class().letters(),
        |i| if b.is_barred(i) { "'" } else { "" },
    )
}

pub(crate) fn format_vincular(v: &VincularPattern) -> String {
    let letters = v.class().letters();
    let n = letters.len();
    let mut prefix = vec![""; n];
    let mut suffix = vec![""; n];
    let mut s = 0;
    while s <= n {
        if !v.is_bonded(s) {
            s += 1;
            continue;
        }
        let mut t = s;
        while t < n && v.is_bonded(t + 1) {
            t += 1;
        }
        if s == 0 {
            prefix[0] = "[*";
        } else {
            prefix[s - 1] = "[";
        }
        if t == n {
            suffix[n - 1] = "*]";
        } else {
            suffix[t] = "]";
        }
        s = t + 1;
    }
    let compact = letters.iter().all(|&l| l <= 9);
    let tokens = letters
        .iter()
        .enumerate()
        .map(|(i, l)| format!("{}{}{}", prefix[i], l, suffix[i]));
    join_tokens(tokens, compact)
}

pub(crate) fn format_letters<'a>(letters: &[u32], suffix: impl Fn(usize) -> &'a str) -> String {
    let compact = letters.iter().all(|&l| l <= 9);
    let tokens = letters
        .iter()
        .enumerate()
        .map(|(i, l)| format!("{}{}", l, suffix(i)));
    join_tokens(tokens, compact)
}

fn join_tokens(tokens: impl Iterator<Item = String>, compact: bool) -> String {
    let tokens: Vec<String> = tokens.collect();
    if compact {
        tokens.concat()
    } else {
        tokens.join(" ")
    }
}

struct Scanned {
    letters: Vec<u32>,
    barred: Vec<bool>,
    bonds: Vec<bool>,
    any_bar: bool,
    any_bond: bool,
}

#[derive(Default)]
struct Bracket {
    symbols: usize,
    first_letter: Option<usize>,
    left_star: bool,
    right_star: bool,
}

fn scan(text: &str) -> Result<Scanned> {
    let text = text.trim();
    let spaced = text.contains(' ');
    let bytes = text.as_bytes();

    let mut letters: Vec<u32> = Vec::new();
    let mut barred: Vec<bool> = Vec::new();
    // Inner sites and anchors collected as (site, is_right_anchor).
    let mut sites: Vec<usize> = Vec::new();
    let mut right_anchor = false;
    let mut left_anchor = false;
    let mut bracket: Option<Bracket> = None;
    let mut any_bracket = false;
    let mut closed_right = false;

    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b'[' => {
                if bracket.is_some() {
                    return Err(Error::parse(i, "brackets cannot nest"));
                }
                if barred.iter().any(|&b| b) {
                    return Err(Error::parse(i, "bars and bonds cannot be mixed"));
                }
                if closed_right {
                    return Err(Error::parse(i, "nothing may follow the right anchor"));
                }
                bracket = Some(Bracket::default());
                any_bracket = true;
                i += 1;
            }
            b']' => {
                let br = bracket
                    .take()
                    .ok_or_else(|| Error::parse(i, "unmatched closing bracket"))?;
                if br.symbols < 2 {
                    return Err(Error::parse(i, "a bracket must hold at least two symbols"));
                }
                if let Some(first) = br.first_letter {
                    let last = letters.len() - 1;
                    sites.extend(first + 1..=last);
                }
                if br.left_star {
                    left_anchor = true;
                }
                if br.right_star {
                    right_anchor = true;
                    closed_right = true;
                }
                i += 1;
            }
            b'*' => {
                let br = bracket
                    .as_mut()
                    .ok_or_else(|| Error::parse(i, "'*' must sit inside a bracket"))?;
                if br.right_star {
                    return Err(Error::parse(i, "misplaced '*'"));
                }
                if br.symbols == 0 {
                    if !letters.is_empty() {
                        return Err(Error::parse(
                            i,
                            "the left anchor '*' must open the first bracket",
                        ));
                    }
                    br.left_star = true;
                } else {
                    br.right_star = true;
                }
                br.symbols += 1;
                i += 1;
            }
            b'\'' => {
                if bracket.is_some() || any_bracket {
                    return Err(Error::parse(i, "bars and bonds cannot be mixed"));
                }
                if i == 0 || !bytes[i - 1].is_ascii_digit() {
                    return Err(Error::parse(i, "an apostrophe must follow a letter"));
                }
                *barred.last_mut().expect("apostrophe follows a letter") = true;
                i += 1;
            }
            b' ' => {
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                let end = if spaced {
                    let mut j = i;
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    j
                } else {
                    i + 1
                };
                if bytes[start] == b'0' {
                    return Err(Error::parse(start, "letters start at 1"));
                }
                if closed_right {
                    return Err(Error::parse(start, "nothing may follow the right anchor"));
                }
                let value: u32 = text[start..end]
                    .parse()
                    .map_err(|_| Error::parse(start, "letter out of range"))?;
                if let Some(br) = bracket.as_mut() {
                    if br.right_star {
                        return Err(Error::parse(start, "'*' must close the bracket"));
                    }
                    br.symbols += 1;
                    br.first_letter.get_or_insert(letters.len());
                }
                letters.push(value);
                barred.push(false);
                i = end;
            }
            _ => {
                return Err(Error::parse(
                    i,
                    format!(
                        "unexpected character {:?}",
                        text[i..].chars().next().unwrap()
                    ),
                ));
            }
        }
    }
    if bracket.is_some() {
        return Err(Error::parse(bytes.len(), "unclosed bracket"));
    }
    if letters.is_empty() {
        return Err(Error::parse(0, "a pattern needs at least one letter"));
    }
    let n = letters.len();
    let mut bonds = vec![false; n + 1];
    for s in sites {
        bonds[s] = true;
    }
    if left_anchor {
        bonds[0] = true;
    }
    if right_anchor {
        bonds[n] = true;
    }
    let any_bar = barred.iter().any(|&b| b);
    Ok(Scanned {
        letters,
        barred,
        bonds,
        any_bar,
        any_bond: any_bracket,
    })
}
