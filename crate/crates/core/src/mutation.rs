//! Mutations of bouquets.
//!
//! Reading the word as `M P N Q` from some starting position, where every edge
//! has both ends in `M ∪ N` or both in `P ∪ Q`, a mutation rewrites it as
//! `M⁻¹ P N⁻¹ Q` or `N P M Q`. Signs travel with their half-edges.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::rotation::{canonical_form, Bouquet, Token};

/// Four consecutive cyclic blocks `M, P, N, Q` covering the word, starting at
/// `start`. Any block may be empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ShareDecomposition {
    pub start: usize,
    /// Lengths of `M, P, N, Q`.
    pub lens: [usize; 4],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// `M⁻¹ P N⁻¹ Q`
    Reverse,
    /// `N P M Q`
    Swap,
}

impl ShareDecomposition {
    pub fn word_len(&self) -> usize {
        self.lens.iter().sum()
    }

    /// Positions of block `i` (0 = M, 1 = P, 2 = N, 3 = Q) in word order.
    pub fn block(&self, i: usize) -> Vec<usize> {
        let m = self.word_len();
        let offset: usize = self.lens[..i].iter().sum();
        (0..self.lens[i])
            .map(|j| (self.start + offset + j) % m.max(1))
            .collect()
    }

    pub fn m(&self) -> Vec<usize> {
        self.block(0)
    }

    pub fn p(&self) -> Vec<usize> {
        self.block(1)
    }

    pub fn n(&self) -> Vec<usize> {
        self.block(2)
    }

    pub fn q(&self) -> Vec<usize> {
        self.block(3)
    }

    pub fn is_valid_for(&self, bouquet: &Bouquet) -> bool {
        let m = bouquet.len();
        if self.word_len() != m || (m > 0 && self.start >= m) {
            return false;
        }
        let mut in_share = vec![false; m];
        for p in self.m().into_iter().chain(self.n()) {
            in_share[p] = true;
        }
        (0..m).all(|p| in_share[p] == in_share[bouquet.partner(p)])
    }
}

/// Every valid decomposition, deduplicated by the four position lists.
pub fn share_decompositions(bouquet: &Bouquet) -> Vec<ShareDecomposition> {
    let m = bouquet.len();
    if m == 0 {
        return vec![ShareDecomposition {
            start: 0,
            lens: [0; 4],
        }];
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut in_share = vec![false; m];
    for start in 0..m {
        for lm in 0..=m {
            for lp in 0..=m - lm {
                for ln in 0..=m - lm - lp {
                    let d = ShareDecomposition {
                        start,
                        lens: [lm, lp, ln, m - lm - lp - ln],
                    };
                    in_share.iter_mut().for_each(|x| *x = false);
                    for i in (0..lm).chain(lm + lp..lm + lp + ln) {
                        in_share[(start + i) % m] = true;
                    }
                    if !(0..m).all(|p| in_share[p] == in_share[bouquet.partner(p)]) {
                        continue;
                    }
                    if seen.insert([d.m(), d.p(), d.n(), d.q()]) {
                        out.push(d);
                    }
                }
            }
        }
    }
    out
}

pub fn mutate(bouquet: &Bouquet, d: &ShareDecomposition, mv: Move) -> Result<Bouquet> {
    if !d.is_valid_for(bouquet) {
        return Err(Error::InvalidDecomposition);
    }
    Ok(apply(bouquet, d, mv))
}

fn apply(bouquet: &Bouquet, d: &ShareDecomposition, mv: Move) -> Bouquet {
    let w = bouquet.word();
    let take = |ps: Vec<usize>| -> Vec<Token> { ps.into_iter().map(|p| w[p]).collect() };
    let (mut m, p, mut n, q) = (take(d.m()), take(d.p()), take(d.n()), take(d.q()));
    let tokens: Vec<Token> = match mv {
        Move::Reverse => {
            m.reverse();
            n.reverse();
            [m, p, n, q].concat()
        }
        Move::Swap => [n, p, m, q].concat(),
    };
    bouquet.rebuild(tokens)
}

/// Orbit states visited before the cap was hit.
#[derive(Clone, Debug)]
pub struct PartialOrbit {
    pub states: Vec<Bouquet>,
}

/// Breadth-first closure under all mutations, with states keyed by canonical
/// form (labels kept). Returns the orbit sorted, or the partial orbit when
/// more than `cap` states are reached.
pub fn mutation_orbit(bouquet: &Bouquet, cap: usize) -> std::result::Result<Vec<Bouquet>, (Error, PartialOrbit)> {
    let start = canonical_form(bouquet, false);
    let mut visited: HashSet<Bouquet> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        for d in share_decompositions(&state) {
            for mv in [Move::Reverse, Move::Swap] {
                let next = canonical_form(&apply(&state, &d, mv), false);
                if visited.contains(&next) {
                    continue;
                }
                if visited.len() >= cap {
                    let mut states: Vec<Bouquet> = visited.into_iter().collect();
                    states.sort();
                    let visited = states.len();
                    return Err((Error::OrbitCap { cap, visited }, PartialOrbit { states }));
                }
                visited.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut states: Vec<Bouquet> = visited.into_iter().collect();
    states.sort();
    Ok(states)
}

/// Whether `b` lies in the mutation orbit of `a`. Bouquets on different label
/// sets are never mutant. Hitting the cap is an error, not `false`.
pub fn are_mutant(a: &Bouquet, b: &Bouquet, cap: usize) -> Result<bool> {
    let mut la = a.labels().to_vec();
    let mut lb = b.labels().to_vec();
    la.sort();
    lb.sort();
    if la != lb {
        return Ok(false);
    }
    let target = canonical_form(b, false);
    mutation_orbit(a, cap)
        .map(|orbit| orbit.binary_search(&target).is_ok())
        .map_err(|(e, _)| e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intersection::signed_intersection_graph;

    fn b(s: &str) -> Bouquet {
        s.parse().unwrap()
    }

    fn dec(start: usize, lens: [usize; 4]) -> ShareDecomposition {
        ShareDecomposition { start, lens }
    }

    #[test]
    fn decomposition_validity() {
        let alt = b("(e, f, e, f)");
        assert!(dec(0, [0, 2, 0, 2]).is_valid_for(&alt));
        assert!(dec(0, [1, 1, 1, 1]).is_valid_for(&alt));
        assert!(!dec(0, [2, 0, 0, 2]).is_valid_for(&alt));
        let nested = b("(e, e, f, f)");
        assert!(dec(0, [2, 0, 0, 2]).is_valid_for(&nested));
        assert!(!dec(0, [1, 1, 1, 1]).is_valid_for(&nested));

        let all = share_decompositions(&alt);
        assert!(all.contains(&dec(0, [1, 1, 1, 1])));
        assert!(all.iter().all(|d| d.is_valid_for(&alt)));
    }

    #[test]
    fn moves_on_small_words() {
        let alt = b("(e, f, e, f)");
        assert_eq!(mutate(&alt, &dec(0, [1, 1, 1, 1]), Move::Swap).unwrap(), alt);
        let nested = b("(e, e, f, f)");
        assert_eq!(mutate(&nested, &dec(0, [2, 0, 0, 2]), Move::Reverse).unwrap(), nested);
        assert!(matches!(
            mutate(&alt, &dec(0, [2, 0, 0, 2]), Move::Reverse),
            Err(Error::InvalidDecomposition)
        ));
    }

    #[test]
    fn reverse_is_an_involution() {
        let w = b("(a, c, -a, d, b, d, c, -b)");
        for d in share_decompositions(&w) {
            let once = mutate(&w, &d, Move::Reverse).unwrap();
            // the result is written from M onwards
            let again = dec(0, d.lens);
            let twice = mutate(&once, &again, Move::Reverse).unwrap();
            assert_eq!(twice, w.rotated(d.start), "{d:?}");
        }
    }

    #[test]
    fn mutations_preserve_signed_graph() {
        let w = b("(1, 2, -3, 4, 1, 3, 5, -2, 4, 5)");
        let sg = signed_intersection_graph(&w);
        for d in share_decompositions(&w) {
            for mv in [Move::Reverse, Move::Swap] {
                assert_eq!(signed_intersection_graph(&mutate(&w, &d, mv).unwrap()), sg);
            }
        }
    }

    #[test]
    fn small_orbits() {
        let orbit = mutation_orbit(&b("(e, -e)"), 100).unwrap();
        assert_eq!(orbit, vec![b("(e, -e)")]);
        let orbit = mutation_orbit(&b("(e, f, e, f)"), 100).unwrap();
        assert_eq!(orbit, vec![b("(e, f, e, f)")]);
    }

    #[test]
    fn mutant_queries() {
        let w = b("(a, c, -a, d, b, d, c, -b)");
        assert!(are_mutant(&w, &w, 1000).unwrap());
        assert!(are_mutant(&w, &w.rotated(3), 1000).unwrap());
        assert!(!are_mutant(&b("(1, 2, -1, 2)"), &b("(1, 2, -1, -2)"), 1000).unwrap());
        assert!(!are_mutant(&b("(1, 1)"), &b("(2, 2)"), 1000).unwrap());
    }

    #[test]
    fn cap_is_reported() {
        // chord 1 separates 2 from 3; mutation reaches (1, 1, 2, 2, 3, 3)
        let w = b("(1, 2, 2, 1, 3, 3)");
        let full = mutation_orbit(&w, 1_000_000).unwrap();
        assert!(full.contains(&b("(1, 1, 2, 2, 3, 3)")));
        match mutation_orbit(&w, 1) {
            Err((Error::OrbitCap { cap: 1, visited: 1 }, partial)) => assert_eq!(partial.states.len(), 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(are_mutant(&w, &full[0], 1), Err(Error::OrbitCap { .. })));
    }
}
