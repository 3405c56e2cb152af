//! Bouquets as signed rotations.
//!
//! A bouquet with `n` edges is stored as a word of `2n` half-edge tokens read
//! around the single vertex. An untwisted edge carries `+` on both ends, a
//! twisted edge carries `-` on exactly one end. Edges are indexed in
//! first-occurrence order, which is also the bit order used by [`EdgeSubset`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// One entry of the word: an edge index and the sign written on that end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Token {
    pub edge: usize,
    pub sign: Sign,
}

/// Borrowed view of a half-edge with its label and position in the word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfEdge<'a> {
    pub label: &'a str,
    pub sign: Sign,
    pub position: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bouquet {
    labels: Vec<String>,
    word: Vec<Token>,
    ends: Vec<[usize; 2]>,
    twisted: Vec<bool>,
}

pub(crate) fn is_valid_label(label: &str) -> bool {
    !label.is_empty() && label.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl Bouquet {
    pub fn empty() -> Self {
        Bouquet {
            labels: Vec::new(),
            word: Vec::new(),
            ends: Vec::new(),
            twisted: Vec::new(),
        }
    }

    /// Builds a bouquet from `(label, sign)` pairs in word order.
    pub fn from_signed_labels<I, S>(tokens: I) -> Result<Self, ParseError>
    where
        I: IntoIterator<Item = (S, Sign)>,
        S: AsRef<str>,
    {
        let mut labels: Vec<String> = Vec::new();
        let mut word = Vec::new();
        let mut counts: Vec<usize> = Vec::new();
        let mut lookup = std::collections::HashMap::new();
        for (label, sign) in tokens {
            let label = label.as_ref();
            if !is_valid_label(label) {
                return Err(ParseError::InvalidLabel {
                    label: label.to_string(),
                });
            }
            let edge = *lookup.entry(label.to_string()).or_insert_with(|| {
                labels.push(label.to_string());
                counts.push(0);
                labels.len() - 1
            });
            counts[edge] += 1;
            word.push(Token { edge, sign });
        }
        if let Some(edge) = counts.iter().position(|&c| c != 2) {
            return Err(ParseError::Multiplicity {
                label: labels[edge].clone(),
                count: counts[edge],
            });
        }
        Self::from_parts(labels, word)
    }

    /// Builds a bouquet from half-edges given with explicit positions.
    pub fn from_half_edges<I, S>(half_edges: I) -> Result<Self, ParseError>
    where
        I: IntoIterator<Item = (S, Sign, usize)>,
        S: AsRef<str>,
    {
        let items: Vec<(S, Sign, usize)> = half_edges.into_iter().collect();
        let len = items.len();
        let mut slots: Vec<Option<(&str, Sign)>> = vec![None; len];
        for (label, sign, position) in &items {
            if *position >= len {
                return Err(ParseError::PositionGap { len });
            }
            if slots[*position].is_some() {
                return Err(ParseError::DuplicatePosition {
                    position: *position,
                });
            }
            slots[*position] = Some((label.as_ref(), *sign));
        }
        Self::from_signed_labels(slots.into_iter().map(|s| s.expect("every slot filled")))
    }

    /// `labels` must be in first-occurrence order and every edge must occur twice.
    fn from_parts(labels: Vec<String>, word: Vec<Token>) -> Result<Self, ParseError> {
        let n = labels.len();
        let mut ends = vec![[usize::MAX; 2]; n];
        let mut signs = vec![[Sign::Plus; 2]; n];
        for (pos, tok) in word.iter().enumerate() {
            let slot = if ends[tok.edge][0] == usize::MAX { 0 } else { 1 };
            ends[tok.edge][slot] = pos;
            signs[tok.edge][slot] = tok.sign;
        }
        let mut twisted = Vec::with_capacity(n);
        for (edge, s) in signs.iter().enumerate() {
            match (s[0], s[1]) {
                (Sign::Minus, Sign::Minus) => {
                    return Err(ParseError::DoubleNegative {
                        label: labels[edge].clone(),
                    })
                }
                (Sign::Plus, Sign::Plus) => twisted.push(false),
                _ => twisted.push(true),
            }
        }
        Ok(Bouquet {
            labels,
            word,
            ends,
            twisted,
        })
    }

    /// Builds from edge indices that are already in first-occurrence order.
    pub(crate) fn from_tokens_unchecked(labels: Vec<String>, word: Vec<Token>) -> Self {
        Self::from_parts(labels, word).expect("internally generated word is valid")
    }

    /// Number of edges `e(B)`.
    pub fn edge_count(&self) -> usize {
        self.labels.len()
    }

    /// Length of the word, `2 e(B)`.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, edge: usize) -> &str {
        &self.labels[edge]
    }

    pub fn edge_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub(crate) fn require_edge(&self, label: &str) -> Result<usize> {
        self.edge_index(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn word(&self) -> &[Token] {
        &self.word
    }

    /// Positions of the two ends of `edge`, in increasing order.
    pub fn ends(&self, edge: usize) -> [usize; 2] {
        self.ends[edge]
    }

    pub fn partner(&self, position: usize) -> usize {
        let [p, q] = self.ends[self.word[position].edge];
        if p == position {
            q
        } else {
            p
        }
    }

    pub fn is_twisted(&self, edge: usize) -> bool {
        self.twisted[edge]
    }

    pub fn twisted_count(&self) -> usize {
        self.twisted.iter().filter(|&&t| t).count()
    }

    pub fn half_edges(&self) -> impl Iterator<Item = HalfEdge<'_>> + '_ {
        self.word.iter().enumerate().map(move |(position, t)| HalfEdge {
            label: &self.labels[t.edge],
            sign: t.sign,
            position,
        })
    }

    /// Rotates the word so that position `k` comes first.
    pub fn rotated(&self, k: usize) -> Bouquet {
        if self.is_empty() {
            return self.clone();
        }
        let m = self.len();
        self.rebuild((0..m).map(|i| self.word[(i + k) % m]))
    }

    pub fn reversed(&self) -> Bouquet {
        self.rebuild(self.word.iter().rev().copied())
    }

    /// Rebuilds from a permutation of this bouquet's tokens, reindexing edges
    /// into first-occurrence order.
    pub(crate) fn rebuild<I: IntoIterator<Item = Token>>(&self, tokens: I) -> Bouquet {
        let mut remap = vec![usize::MAX; self.edge_count()];
        let mut labels = Vec::with_capacity(self.edge_count());
        let word = tokens
            .into_iter()
            .map(|t| {
                if remap[t.edge] == usize::MAX {
                    remap[t.edge] = labels.len();
                    labels.push(self.labels[t.edge].clone());
                }
                Token {
                    edge: remap[t.edge],
                    sign: t.sign,
                }
            })
            .collect();
        Bouquet::from_tokens_unchecked(labels, word)
    }

    /// Renames every label through `f`; the names produced must stay distinct.
    pub fn relabeled<F: FnMut(&str) -> String>(&self, mut f: F) -> Result<Bouquet, ParseError> {
        Bouquet::from_signed_labels(self.half_edges().map(|h| (f(h.label), h.sign)))
    }

    pub fn parse(text: &str) -> Result<Bouquet, ParseError> {
        parse_rotation(text)
    }

    fn display_cmp_key(&self) -> impl Iterator<Item = (&str, Sign)> + '_ {
        self.word
            .iter()
            .map(|t| (self.labels[t.edge].as_str(), t.sign))
    }
}

impl Ord for Bouquet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.display_cmp_key().cmp(other.display_cmp_key()))
    }
}

impl PartialOrd for Bouquet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Bouquet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, h) in self.half_edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if h.sign.is_minus() {
                f.write_str("-")?;
            }
            f.write_str(h.label)?;
        }
        f.write_str(")")
    }
}

impl FromStr for Bouquet {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rotation(s)
    }
}

impl Serialize for Bouquet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Bouquet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_rotation(&text).map_err(serde::de::Error::custom)
    }
}

/// Parses `(a, c, -a, d, b, d, c, -b)`. Whitespace is ignored everywhere.
pub fn parse_rotation(text: &str) -> Result<Bouquet, ParseError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or(ParseError::MissingParens)?;
    if inner.is_empty() {
        return Ok(Bouquet::empty());
    }
    let mut tokens = Vec::new();
    for (index, raw) in inner.split(',').enumerate() {
        let (sign, label) = match raw.strip_prefix('-') {
            Some(rest) => (Sign::Minus, rest),
            None => (Sign::Plus, raw),
        };
        if label.is_empty() {
            return Err(ParseError::EmptyToken { index });
        }
        tokens.push((label, sign));
    }
    Bouquet::from_signed_labels(tokens)
}

/// A subset of the edges of a bouquet, one bit per edge in first-occurrence
/// order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    bits: u64,
    width: usize,
}

impl EdgeSubset {
    pub const MAX_WIDTH: usize = 64;

    fn width_mask(width: usize) -> u64 {
        if width >= 64 {
            u64::MAX
        } else {
            (1u64 << width) - 1
        }
    }

    pub fn from_bits(bits: u64, width: usize) -> Self {
        assert!(width <= Self::MAX_WIDTH, "edge subset wider than 64 bits");
        EdgeSubset {
            bits: bits & Self::width_mask(width),
            width,
        }
    }

    pub fn empty(width: usize) -> Self {
        Self::from_bits(0, width)
    }

    pub fn full(width: usize) -> Self {
        Self::from_bits(u64::MAX, width)
    }

    pub fn from_labels<S: AsRef<str>>(bouquet: &Bouquet, labels: &[S]) -> Result<Self> {
        let mut bits = 0u64;
        for l in labels {
            bits |= 1 << bouquet.require_edge(l.as_ref())?;
        }
        Ok(Self::from_bits(bits, bouquet.edge_count()))
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn contains(&self, edge: usize) -> bool {
        edge < self.width && self.bits >> edge & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn complement(&self) -> Self {
        Self::from_bits(!self.bits, self.width)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.width).filter(move |&e| self.contains(e))
    }
}

/// Keeps the half-edges whose edge lies in `subset`, in their original order.
pub fn induced_sub_bouquet(bouquet: &Bouquet, subset: EdgeSubset) -> Result<Bouquet> {
    if subset.width() != bouquet.edge_count() {
        return Err(Error::SubsetWidth {
            got: subset.width(),
            expected: bouquet.edge_count(),
        });
    }
    Ok(bouquet.rebuild(
        bouquet
            .word
            .iter()
            .copied()
            .filter(|t| subset.contains(t.edge)),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CanonOptions {
    /// Rename edges `1..=n` in first-occurrence order.
    pub relabel: bool,
    /// Allow the reversed word as a candidate.
    pub reversal: bool,
}

impl Default for CanonOptions {
    fn default() -> Self {
        CanonOptions {
            relabel: false,
            reversal: true,
        }
    }
}

/// Lexicographically minimal presentation over cyclic shifts, reversal (when
/// enabled), moving each `-` to the second occurrence, and optionally
/// relabeling.
pub fn canonical_form(bouquet: &Bouquet, relabel: bool) -> Bouquet {
    canonical_form_with(
        bouquet,
        CanonOptions {
            relabel,
            ..CanonOptions::default()
        },
    )
}

pub fn canonical_form_with(bouquet: &Bouquet, opts: CanonOptions) -> Bouquet {
    let (start, reverse) = best_presentation(bouquet, opts);
    let m = bouquet.len();
    let mut seen = vec![false; bouquet.edge_count()];
    let tokens = (0..m).map(|i| {
        let t = bouquet.word[presentation_index(start, reverse, i, m)];
        let sign = normalized_sign(bouquet, &mut seen, t.edge);
        Token { edge: t.edge, sign }
    });
    let out = bouquet.rebuild(tokens.collect::<Vec<_>>());
    if opts.relabel {
        let labels = (1..=out.edge_count()).map(|i| i.to_string()).collect();
        Bouquet::from_tokens_unchecked(labels, out.word)
    } else {
        out
    }
}

/// Packed canonical key; equal keys mean equivalent bouquets. With
/// `relabel = false` keys are only comparable between bouquets sharing a
/// label set.
pub fn canonical_key(bouquet: &Bouquet, opts: CanonOptions) -> Vec<u32> {
    let (start, reverse) = best_presentation(bouquet, opts);
    let mut buf = Vec::with_capacity(bouquet.len());
    let mut seen = vec![false; bouquet.edge_count()];
    let mut ids = vec![u32::MAX; bouquet.edge_count()];
    let ranks = label_ranks(bouquet);
    write_key(bouquet, opts.relabel, &ranks, start, reverse, &mut seen, &mut ids, &mut buf);
    buf
}

pub fn equivalent(a: &Bouquet, b: &Bouquet) -> bool {
    equivalent_with(a, b, true)
}

/// Equivalence with reversal optionally excluded from the symmetry group.
pub fn equivalent_with(a: &Bouquet, b: &Bouquet, reversal: bool) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let opts = CanonOptions {
        relabel: false,
        reversal,
    };
    canonical_form_with(a, opts) == canonical_form_with(b, opts)
}

fn presentation_index(start: usize, reverse: bool, i: usize, m: usize) -> usize {
    if reverse {
        (start + m - i % m) % m
    } else {
        (start + i) % m
    }
}

fn normalized_sign(bouquet: &Bouquet, seen: &mut [bool], edge: usize) -> Sign {
    if seen[edge] {
        if bouquet.twisted[edge] {
            Sign::Minus
        } else {
            Sign::Plus
        }
    } else {
        seen[edge] = true;
        Sign::Plus
    }
}

fn label_ranks(bouquet: &Bouquet) -> Vec<u32> {
    let mut order: Vec<usize> = (0..bouquet.edge_count()).collect();
    order.sort_by(|&a, &b| bouquet.labels[a].cmp(&bouquet.labels[b]));
    let mut ranks = vec![0u32; order.len()];
    for (r, e) in order.into_iter().enumerate() {
        ranks[e] = r as u32;
    }
    ranks
}

#[allow(clippy::too_many_arguments)]
fn write_key(
    bouquet: &Bouquet,
    relabel: bool,
    ranks: &[u32],
    start: usize,
    reverse: bool,
    seen: &mut [bool],
    ids: &mut [u32],
    buf: &mut Vec<u32>,
) {
    let m = bouquet.len();
    buf.clear();
    seen.iter_mut().for_each(|s| *s = false);
    ids.iter_mut().for_each(|s| *s = u32::MAX);
    let mut next = 0u32;
    for i in 0..m {
        let t = bouquet.word[presentation_index(start, reverse, i, m)];
        let minus = normalized_sign(bouquet, seen, t.edge).is_minus() as u32;
        let id = if relabel {
            if ids[t.edge] == u32::MAX {
                ids[t.edge] = next;
                next += 1;
            }
            ids[t.edge]
        } else {
            ranks[t.edge]
        };
        buf.push(id << 1 | minus);
    }
}

fn best_presentation(bouquet: &Bouquet, opts: CanonOptions) -> (usize, bool) {
    let m = bouquet.len();
    if m == 0 {
        return (0, false);
    }
    let ranks = label_ranks(bouquet);
    let mut seen = vec![false; bouquet.edge_count()];
    let mut ids = vec![u32::MAX; bouquet.edge_count()];
    let mut best = Vec::with_capacity(m);
    let mut cand = Vec::with_capacity(m);
    let mut best_at = (0, false);
    write_key(bouquet, opts.relabel, &ranks, 0, false, &mut seen, &mut ids, &mut best);
    let directions: &[bool] = if opts.reversal { &[false, true] } else { &[false] };
    for &reverse in directions {
        for start in 0..m {
            if (start, reverse) == (0, false) {
                continue;
            }
            write_key(bouquet, opts.relabel, &ranks, start, reverse, &mut seen, &mut ids, &mut cand);
            if cand < best {
                std::mem::swap(&mut best, &mut cand);
                best_at = (start, reverse);
            }
        }
    }
    best_at
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> Bouquet {
        s.parse().unwrap()
    }

    #[test]
    fn parses_figure_one_word() {
        let fig = b("(a, c, -a, d, b, d, c, -b)");
        assert_eq!(fig.edge_count(), 4);
        for (label, twisted) in [("a", true), ("b", true), ("c", false), ("d", false)] {
            let e = fig.edge_index(label).unwrap();
            assert_eq!(fig.is_twisted(e), twisted, "{label}");
        }
        assert_eq!(fig.to_string(), "(a, c, -a, d, b, d, c, -b)");
    }

    #[test]
    fn parses_empty_and_whitespace() {
        assert!(b("()").is_empty());
        assert!(b(" ( ) ").is_empty());
        assert_eq!(b("(1,2, - 1 ,2)").to_string(), "(1, 2, -1, 2)");
    }

    #[test]
    fn rejects_bad_rotations() {
        assert_eq!(
            parse_rotation("(e, -e, e)"),
            Err(ParseError::Multiplicity {
                label: "e".into(),
                count: 3
            })
        );
        assert_eq!(
            parse_rotation("(-e, -e)"),
            Err(ParseError::DoubleNegative { label: "e".into() })
        );
        assert_eq!(parse_rotation("(e,,e)"), Err(ParseError::EmptyToken { index: 1 }));
        assert_eq!(parse_rotation("(e, -)"), Err(ParseError::EmptyToken { index: 1 }));
        assert_eq!(parse_rotation("e, e"), Err(ParseError::MissingParens));
        assert!(matches!(
            parse_rotation("(e, f)"),
            Err(ParseError::Multiplicity { .. })
        ));
        assert!(matches!(
            parse_rotation("(e-, e-)"),
            Err(ParseError::InvalidLabel { .. })
        ));
    }

    #[test]
    fn half_edge_positions_are_checked() {
        let ok = Bouquet::from_half_edges([("e", Sign::Plus, 1), ("e", Sign::Minus, 0)]).unwrap();
        assert_eq!(ok.to_string(), "(-e, e)");
        assert_eq!(
            Bouquet::from_half_edges([("e", Sign::Plus, 0), ("e", Sign::Plus, 0)]),
            Err(ParseError::DuplicatePosition { position: 0 })
        );
        assert_eq!(
            Bouquet::from_half_edges([("e", Sign::Plus, 0), ("e", Sign::Plus, 5)]),
            Err(ParseError::PositionGap { len: 2 })
        );
    }

    #[test]
    fn canonical_moves_twist_to_second_occurrence() {
        let c = canonical_form(&b("(-a, b, a, b)"), true);
        assert_eq!(c, canonical_form(&b("(a, b, -a, b)"), true));
        let twisted = (0..c.edge_count()).find(|&e| c.is_twisted(e)).unwrap();
        let [_, second] = c.ends(twisted);
        assert_eq!(c.word()[second].sign, Sign::Minus);
        assert_eq!(c.labels(), ["1", "2"]);
    }

    #[test]
    fn canonical_fixed_point() {
        let w = b("(e, f, e, f)");
        assert_eq!(canonical_form(&w, false), w);
    }

    #[test]
    fn induced_restriction() {
        let w = b("(e, f, e, f)");
        let a = EdgeSubset::from_labels(&w, &["e"]).unwrap();
        assert_eq!(induced_sub_bouquet(&w, a).unwrap(), b("(e, e)"));

        let fig = b("(a, c, -a, d, b, d, c, -b)");
        let ab = EdgeSubset::from_labels(&fig, &["a", "b"]).unwrap();
        assert_eq!(induced_sub_bouquet(&fig, ab).unwrap(), b("(a, -a, b, -b)"));
        let all = EdgeSubset::full(4);
        assert_eq!(induced_sub_bouquet(&fig, all).unwrap(), fig);
        assert!(induced_sub_bouquet(&fig, EdgeSubset::full(3)).is_err());
    }

    #[test]
    fn equivalence_examples() {
        assert!(equivalent(&b("(e, f, e, f)"), &b("(f, e, f, e)")));
        assert!(equivalent(&b("(e, -e)"), &b("(-e, e)")));
        assert!(!equivalent(&b("(e, f, e, f)"), &b("(e, e, f, f)")));
        assert!(!equivalent(&b("(e, e)"), &b("(f, f)")));
    }

    #[test]
    fn reversal_flag() {
        // with labels fixed, (3, 2, 1, 3, 2, 1) is not a cyclic shift of B_3
        let w = b("(1, 2, 3, 1, 2, 3)");
        let r = w.reversed();
        assert!(equivalent_with(&w, &r, true));
        assert!(!equivalent_with(&w, &r, false));
    }

    #[test]
    fn subset_complement() {
        let s = EdgeSubset::from_bits(0b0101, 4);
        assert_eq!(s.complement().bits(), 0b1010);
        assert_eq!(s.len(), 2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert!(EdgeSubset::empty(0).complement().is_empty());
    }
}
