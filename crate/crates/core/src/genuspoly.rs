//! Partial-dual genus polynomials.
//!
//! For a bouquet `B` and `A ⊆ E(B)` the partial dual `B^A` has Euler genus
//! `ε(A) + ε(A^c)`, where `ε(S)` is the Euler genus of the sub-bouquet on `S`.
//! The Euler genus of every sub-bouquet is tabulated once, then each subset is
//! paired with its complement.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{GenusPolynomial, PolyKind};
use crate::rotation::{Bouquet, Sign, Token};
use crate::surface::{is_orientable, MaskedTracer};

const PARALLEL_FROM: usize = 14;

/// `ε` of the sub-bouquet on every edge subset, indexed by bit mask.
pub fn subset_genus_table(bouquet: &Bouquet) -> Vec<u32> {
    let n = bouquet.edge_count();
    let total = 1usize << n;
    if n < PARALLEL_FROM {
        let mut tracer = MaskedTracer::new(bouquet);
        return (0..total as u64).map(|m| tracer.euler_genus(m)).collect();
    }
    let mut table = vec![0u32; total];
    table
        .par_chunks_mut(1 << 12)
        .enumerate()
        .for_each(|(chunk, out)| {
            let mut tracer = MaskedTracer::new(bouquet);
            let base = (chunk as u64) << 12;
            for (i, slot) in out.iter_mut().enumerate() {
                *slot = tracer.euler_genus(base + i as u64);
            }
        });
    table
}

pub fn partial_dual_euler_polynomial(bouquet: &Bouquet) -> Result<GenusPolynomial> {
    partial_dual_euler_polynomial_with(bouquet, &Limits::DEFAULT)
}

pub fn partial_dual_euler_polynomial_with(
    bouquet: &Bouquet,
    limits: &Limits,
) -> Result<GenusPolynomial> {
    let n = bouquet.edge_count();
    if n > limits.max_edges || n >= 63 {
        return Err(Error::EdgeCap {
            edges: n,
            cap: limits.max_edges,
        });
    }
    let table = subset_genus_table(bouquet);
    let full = (1usize << n) - 1;
    let mut counts = vec![0u64; 2 * n + 1];
    for (a, &g) in table.iter().enumerate() {
        counts[(g + table[full ^ a]) as usize] += 1;
    }
    Ok(GenusPolynomial::from_counts(PolyKind::Euler, &counts))
}

pub fn partial_dual_orientable_polynomial(bouquet: &Bouquet) -> Result<GenusPolynomial> {
    partial_dual_orientable_polynomial_with(bouquet, &Limits::DEFAULT)
}

pub fn partial_dual_orientable_polynomial_with(
    bouquet: &Bouquet,
    limits: &Limits,
) -> Result<GenusPolynomial> {
    if !is_orientable(bouquet) {
        return Err(Error::NonOrientable);
    }
    partial_dual_euler_polynomial_with(bouquet, limits)?.halve_exponents()
}

/// The word `(1, 2, …, t, 1, 2, …, t)`.
pub fn bt_bouquet(t: usize) -> Bouquet {
    let labels = (1..=t).map(|i| i.to_string()).collect();
    let word = (0..2 * t)
        .map(|i| Token {
            edge: i % t,
            sign: Sign::Plus,
        })
        .collect();
    Bouquet::from_tokens_unchecked(labels, word)
}

/// The single twisted loop `(1, -1)`.
pub fn twisted_loop() -> Bouquet {
    Bouquet::from_tokens_unchecked(
        vec!["1".into()],
        vec![
            Token {
                edge: 0,
                sign: Sign::Plus,
            },
            Token {
                edge: 0,
                sign: Sign::Minus,
            },
        ],
    )
}

/// Closed form for the Euler polynomial of `(1, …, t, 1, …, t)`:
/// `2^t z^(t-1)` for odd `t`, `2^(t-1) (z^t + z^(t-2))` for even `t`.
pub fn bt_closed_form(t: u32) -> Result<GenusPolynomial> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be at least 1".into()));
    }
    if t >= 64 {
        return Err(Error::InvalidArgument("t must be below 64".into()));
    }
    let p = if t % 2 == 1 {
        GenusPolynomial::monomial(PolyKind::Euler, 1u64 << t, t - 1)
    } else {
        let half = 1u64 << (t - 1);
        GenusPolynomial::from_terms(PolyKind::Euler, [(t, half), (t - 2, half)])
    };
    Ok(p)
}

pub fn poly_multiply(p: &GenusPolynomial, q: &GenusPolynomial) -> Result<GenusPolynomial> {
    p.try_mul(q)
}

/// Ribbon join of two bouquets with disjoint labels: the concatenated word.
pub fn join_concat(first: &Bouquet, second: &Bouquet) -> Result<Bouquet> {
    if let Some(l) = second.labels().iter().find(|l| first.edge_index(l).is_some()) {
        return Err(Error::LabelCollision(l.clone()));
    }
    let tokens = first
        .half_edges()
        .chain(second.half_edges())
        .map(|h| (h.label, h.sign));
    Ok(Bouquet::from_signed_labels(tokens)?)
}
