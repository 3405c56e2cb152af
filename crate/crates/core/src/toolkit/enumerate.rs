//! Exhaustive and random generation of bouquets.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rotation::{canonical_key, Bouquet, CanonOptions, Sign, Token};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dedup {
    /// Every chord diagram (edges named `1..=n` in first-occurrence order)
    /// with every twist pattern; `(2n-1)!! 2^n` words.
    Raw,
    /// One representative per class under shifts, reversal, sign
    /// normalization and relabeling.
    Relabeled,
    /// Labels `1..=n` fixed: one representative per class under shifts,
    /// reversal and sign normalization, over every labeling.
    FixedLabels,
}

/// All perfect matchings of `2n` positions as words over edge indices, each
/// edge numbered in first-occurrence order.
pub fn chord_diagrams(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, word: &mut Vec<usize>, open: &mut Vec<usize>, next: usize, out: &mut Vec<Vec<usize>>) {
        if word.len() == 2 * n {
            out.push(word.clone());
            return;
        }
        if next < n {
            word.push(next);
            open.push(next);
            go(n, word, open, next + 1, out);
            open.pop();
            word.pop();
        }
        for i in 0..open.len() {
            let e = open.remove(i);
            word.push(e);
            go(n, word, open, next, out);
            word.pop();
            open.insert(i, e);
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::with_capacity(2 * n), &mut Vec::new(), 0, &mut out);
    out
}

fn numbered_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// The word with edges `edges[i]` and a `-` on the second end of every edge
/// whose bit is set in `twists`; labels are `names[edge]`.
fn signed_word(diagram: &[usize], twists: u64, names: &[String]) -> Bouquet {
    let mut seen = vec![false; names.len()];
    let tokens = diagram.iter().map(|&e| {
        let sign = if seen[e] && twists >> e & 1 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        };
        seen[e] = true;
        (names[e].as_str(), sign)
    });
    Bouquet::from_signed_labels(tokens).expect("generated word is valid")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// Rebuilds a bouquet from a canonical key. `names[id]` is the label of key
/// id `id` (first-occurrence index when relabeled, label rank otherwise).
fn bouquet_from_key(key: &[u32], names: &[String]) -> Bouquet {
    let tokens = key.iter().map(|&k| {
        let sign = if k & 1 == 1 { Sign::Minus } else { Sign::Plus };
        (names[(k >> 1) as usize].as_str(), sign)
    });
    Bouquet::from_signed_labels(tokens).expect("canonical key encodes a valid word")
}

pub fn all_bouquets(n: usize, dedup: Dedup) -> Result<Vec<Bouquet>> {
    all_bouquets_with(n, dedup, &Limits::DEFAULT)
}

/// Every bouquet with `n` edges, sorted. Deduplicated modes return canonical
/// representatives.
pub fn all_bouquets_with(n: usize, dedup: Dedup, limits: &Limits) -> Result<Vec<Bouquet>> {
    if n > limits.max_enumerate {
        return Err(Error::Cap {
            what: "enumeration size n",
            value: n,
            cap: limits.max_enumerate,
        });
    }
    let names = numbered_labels(n);
    let diagrams = chord_diagrams(n);
    let masks = 0..1u64 << n;
    let mut out: Vec<Bouquet> = match dedup {
        Dedup::Raw => diagrams
            .iter()
            .flat_map(|d| masks.clone().map(|t| signed_word(d, t, &names)))
            .collect(),
        Dedup::Relabeled | Dedup::FixedLabels => {
            let perms = if dedup == Dedup::FixedLabels {
                permutations(n)
            } else {
                vec![(0..n).collect()]
            };
            let opts = CanonOptions {
                relabel: dedup == Dedup::Relabeled,
                reversal: true,
            };
            let keys: HashSet<Vec<u32>> = diagrams
                .par_iter()
                .fold(HashSet::new, |mut acc, d| {
                    for perm in &perms {
                        let relabeled: Vec<usize> = d.iter().map(|&e| perm[e]).collect();
                        for t in masks.clone() {
                            let b = signed_word(&relabeled, t, &names);
                            acc.insert(canonical_key(&b, opts));
                        }
                    }
                    acc
                })
                .reduce(HashSet::new, |mut a, b| {
                    a.extend(b);
                    a
                });
            // key ids are label ranks (fixed labels) or first-occurrence ids
            let mut id_names = names.clone();
            if dedup == Dedup::FixedLabels {
                id_names.sort();
            }
            keys.iter().map(|k| bouquet_from_key(k, &id_names)).collect()
        }
    };
    out.par_sort();
    Ok(out)
}

/// Uniform chord diagram on `n` edges named `{prefix}1..`, each edge twisted
/// with probability 1/2 and the `-` placed on a random end.
pub fn random_bouquet<R: Rng + ?Sized>(n: usize, prefix: &str, rng: &mut R) -> Bouquet {
    let mut slots: Vec<usize> = (0..n).flat_map(|e| [e, e]).collect();
    slots.shuffle(rng);
    let twisted: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let minus_first: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let mut seen = vec![false; n];
    let tokens = slots.into_iter().map(|e| {
        let first = !seen[e];
        seen[e] = true;
        let sign = if twisted[e] && first == minus_first[e] {
            Sign::Minus
        } else {
            Sign::Plus
        };
        (format!("{prefix}{}", e + 1), sign)
    });
    Bouquet::from_signed_labels(tokens).expect("generated word is valid")
}

/// Tokens of `bouquet` with edge indices permuted, for label-permutation tests.
pub fn permute_labels(bouquet: &Bouquet, perm: &[usize]) -> Bouquet {
    let names: Vec<String> = (0..bouquet.edge_count())
        .map(|e| bouquet.label(perm[e]).to_string())
        .collect();
    let word: Vec<(String, Sign)> = bouquet
        .word()
        .iter()
        .map(|&Token { edge, sign }| (names[edge].clone(), sign))
        .collect();
    Bouquet::from_signed_labels(word).expect("permutation keeps labels distinct")
}
