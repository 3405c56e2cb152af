//! Intersection polynomials of signed graphs.
//!
//! The intersection polynomial of a signed graph is the partial-dual Euler
//! genus polynomial of any bouquet whose signed intersection graph it is.
//! Graphs are reduced by component factorization and the positive pendant
//! recursion before falling back on a realization search.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::genuspoly::partial_dual_euler_polynomial_with;
use crate::intersection::SignedGraph;
use crate::limits::Limits;
use crate::poly::{GenusPolynomial, PolyKind};
use crate::rotation::{Bouquet, Sign};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationResult {
    pub realizable: bool,
    pub witness: Option<Bouquet>,
}

struct Search<'a> {
    g: &'a SignedGraph,
    open_at: Vec<Option<usize>>,
    close_at: Vec<Option<usize>>,
    word: Vec<usize>,
}

impl Search<'_> {
    fn new(g: &SignedGraph) -> Search<'_> {
        let v = g.vertex_count();
        Search {
            g,
            open_at: vec![None; v],
            close_at: vec![None; v],
            word: Vec::with_capacity(2 * v),
        }
    }

    /// Whether closing `x` at the current position gives it exactly its
    /// neighborhood in the target graph.
    fn close_ok(&self, x: usize) -> bool {
        let p = self.open_at[x].expect("x is open");
        let q = self.word.len();
        (0..self.g.vertex_count()).filter(|&y| y != x).all(|y| {
            let crossing = match (self.open_at[y], self.close_at[y]) {
                (Some(r), Some(s)) => (p < r && r < q) != (p < s && s < q),
                (Some(r), None) => r > p,
                _ => false,
            };
            crossing == self.g.adjacent(x, y)
        })
    }

    fn run<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let v = self.g.vertex_count();
        let pos = self.word.len();
        if pos == 2 * v {
            return visit(&self.word);
        }
        // a rotation puts the first end of vertex 0 at position 0
        let candidates = if pos == 0 { 0..1 } else { 0..v };
        for x in candidates {
            match (self.open_at[x], self.close_at[x]) {
                (None, _) => {
                    self.open_at[x] = Some(pos);
                    self.word.push(x);
                    let flow = self.run(visit);
                    self.word.pop();
                    self.open_at[x] = None;
                    flow?;
                }
                (Some(_), None) => {
                    if !self.close_ok(x) {
                        continue;
                    }
                    self.close_at[x] = Some(pos);
                    self.word.push(x);
                    let flow = self.run(visit);
                    self.word.pop();
                    self.close_at[x] = None;
                    flow?;
                }
                _ => {}
            }
        }
        ControlFlow::Continue(())
    }
}

fn witness_from(g: &SignedGraph, word: &[usize]) -> Bouquet {
    let mut seen = vec![false; g.vertex_count()];
    let tokens = word.iter().map(|&x| {
        let sign = if seen[x] { g.sign(x) } else { Sign::Plus };
        seen[x] = true;
        (g.label(x), sign)
    });
    Bouquet::from_signed_labels(tokens).expect("search emits valid words")
}

fn check_size(g: &SignedGraph, max_n: usize) -> Result<()> {
    if g.vertex_count() > max_n {
        return Err(Error::RealizeCap {
            vertices: g.vertex_count(),
            cap: max_n,
        });
    }
    Ok(())
}

/// Searches for a bouquet whose signed intersection graph equals `g` with the
/// same labels. Candidates are tried in label order, so the witness is
/// deterministic.
pub fn realize(g: &SignedGraph, max_n: usize) -> Result<RealizationResult> {
    check_size(g, max_n)?;
    let mut found = None;
    let _ = Search::new(g).run(&mut |w: &[usize]| {
        found = Some(witness_from(g, w));
        ControlFlow::Break(())
    });
    Ok(RealizationResult {
        realizable: found.is_some(),
        witness: found,
    })
}

/// Every realizing word that starts with the first end of the first vertex.
pub fn all_witnesses(g: &SignedGraph, max_n: usize) -> Result<Vec<Bouquet>> {
    check_size(g, max_n)?;
    let mut out = Vec::new();
    let _ = Search::new(g).run(&mut |w: &[usize]| {
        out.push(witness_from(g, w));
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// Checks the pendant preconditions and returns `(G - v1, G - v1 - v2)`.
/// The caller combines `IP(G) = IP(G - v1) + 2z² IP(G - v1 - v2)`.
pub fn pendant_recursion_step(g: &SignedGraph, v1: &str, v2: &str) -> Result<(SignedGraph, SignedGraph)> {
    let a = g
        .index_of(v1)
        .ok_or_else(|| Error::Pendant(format!("unknown vertex {v1:?}")))?;
    let b = g
        .index_of(v2)
        .ok_or_else(|| Error::Pendant(format!("unknown vertex {v2:?}")))?;
    if g.degree(a) != 1 {
        return Err(Error::Pendant(format!("{v1:?} has degree {}", g.degree(a))));
    }
    if g.sign(a) != Sign::Plus {
        return Err(Error::Pendant(format!("{v1:?} is negative")));
    }
    if !g.adjacent(a, b) {
        return Err(Error::Pendant(format!("{v1:?} is not adjacent to {v2:?}")));
    }
    Ok((g.without(&[a]), g.without(&[a, b])))
}

fn positive_pendant(g: &SignedGraph) -> Option<(usize, usize)> {
    (0..g.vertex_count())
        .find(|&v| g.degree(v) == 1 && g.sign(v) == Sign::Plus)
        .map(|v| (v, *g.neighbors(v).iter().next().expect("degree one")))
}

pub fn intersection_polynomial(g: &SignedGraph) -> Result<GenusPolynomial> {
    intersection_polynomial_with(g, &Limits::DEFAULT)
}

pub fn intersection_polynomial_with(g: &SignedGraph, limits: &Limits) -> Result<GenusPolynomial> {
    if g.is_empty() {
        return Ok(GenusPolynomial::one(PolyKind::Euler));
    }
    let comps = g.components();
    if comps.len() > 1 {
        let mut acc = GenusPolynomial::one(PolyKind::Euler);
        for c in comps {
            acc = acc.try_mul(&intersection_polynomial_with(&g.induced(&c), limits)?)?;
        }
        return Ok(acc);
    }
    if let Some((v1, v2)) = positive_pendant(g) {
        let (without_leaf, without_both) = pendant_recursion_step(g, g.label(v1), g.label(v2))?;
        let first = intersection_polynomial_with(&without_leaf, limits)?;
        let second = intersection_polynomial_with(&without_both, limits)?;
        return first.try_add(&second.scale_shift(2, 2));
    }
    direct_intersection_polynomial(g, limits)
}

/// Realizes `g` and computes the polynomial of the witness, with no reduction.
pub fn direct_intersection_polynomial(g: &SignedGraph, limits: &Limits) -> Result<GenusPolynomial> {
    let witness = realize(g, limits.max_realize)?
        .witness
        .ok_or(Error::Unrealizable)?;
    partial_dual_euler_polynomial_with(&witness, limits)
}

/// Groups `graphs` by intersection polynomial. Each group lists indices into
/// `graphs` in input order; groups are ordered by their first index.
pub fn ip_equivalence_classes(graphs: &[SignedGraph], limits: &Limits) -> Result<Vec<Vec<usize>>> {
    let mut slot: HashMap<GenusPolynomial, usize> = HashMap::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let p = intersection_polynomial_with(g, limits)?;
        let k = *slot.entry(p).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[k].push(i);
    }
    Ok(groups)
}
