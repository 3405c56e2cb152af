//! Exhaustive checks of the structural theorems on small bouquets.

use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genuspoly::{bt_bouquet, bt_closed_form, join_concat, partial_dual_euler_polynomial_with, twisted_loop};
use crate::intersection::{classify_one_term, predict_constant_term, signed_intersection_graph, SignedGraph};
use crate::limits::Limits;
use crate::mutation::mutation_orbit;
use crate::poly::GenusPolynomial;
use crate::rotation::{canonical_form, induced_sub_bouquet, Bouquet, EdgeSubset, Sign};
use crate::toolkit::enumerate::{all_bouquets_with, random_bouquet, Dedup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    /// Equal labeled signed intersection graphs give equal polynomials.
    #[serde(rename = "main1")]
    Main1,
    /// Mutation orbits coincide with signed-intersection-graph classes.
    #[serde(rename = "mutantEquiv")]
    MutantEquiv,
    /// Nonzero constant term exactly for positive bipartite graphs.
    #[serde(rename = "constantTerm")]
    ConstantTerm,
    /// One-term polynomials exactly for joins of odd `B_t` and twisted loops.
    #[serde(rename = "oneTerm")]
    OneTerm,
    /// Closed form for `(1, …, t, 1, …, t)`.
    #[serde(rename = "btForm")]
    BtForm,
    /// Polynomials multiply under joins.
    #[serde(rename = "joinLaw")]
    JoinLaw,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::Main1,
        Theorem::MutantEquiv,
        Theorem::ConstantTerm,
        Theorem::OneTerm,
        Theorem::BtForm,
        Theorem::JoinLaw,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Main1 => "main1",
            Theorem::MutantEquiv => "mutantEquiv",
            Theorem::ConstantTerm => "constantTerm",
            Theorem::OneTerm => "oneTerm",
            Theorem::BtForm => "btForm",
            Theorem::JoinLaw => "joinLaw",
        }
    }

    /// Largest `n` accepted by default.
    pub fn default_cap(self) -> usize {
        match self {
            Theorem::Main1 | Theorem::MutantEquiv => 4,
            Theorem::ConstantTerm | Theorem::OneTerm => 5,
            Theorem::BtForm => 8,
            Theorem::JoinLaw => 10,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown theorem {s:?}")))
    }
}

/// Offending words with what was expected and what was computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub words: Vec<String>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub n: usize,
    pub instances: usize,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub limits: Limits,
    /// Overrides [`Theorem::default_cap`].
    pub cap: Option<usize>,
    /// Seed for the random joins of `joinLaw`.
    pub seed: u64,
    /// Number of random pairs for `joinLaw`.
    pub join_pairs: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            limits: Limits::DEFAULT,
            cap: None,
            seed: 0x5eed,
            join_pairs: 200,
        }
    }
}

pub fn verify(theorem: Theorem, n: usize) -> Result<VerificationReport> {
    verify_with(theorem, n, &VerifyOptions::default())
}

pub fn verify_with(theorem: Theorem, n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let cap = opts.cap.unwrap_or(theorem.default_cap());
    if n > cap {
        return Err(Error::Cap {
            what: "verification size n",
            value: n,
            cap,
        });
    }
    let started = Instant::now();
    let mut ctx = Ctx {
        limits: opts.limits,
        instances: 0,
        counterexamples: Vec::new(),
    };
    match theorem {
        Theorem::Main1 => ctx.main1(n)?,
        Theorem::MutantEquiv => ctx.mutant_equiv(n)?,
        Theorem::ConstantTerm => ctx.constant_term(n)?,
        Theorem::OneTerm => ctx.one_term(n)?,
        Theorem::BtForm => ctx.bt_form(n)?,
        Theorem::JoinLaw => ctx.join_law(n, opts.seed, opts.join_pairs)?,
    }
    Ok(VerificationReport {
        theorem,
        n,
        instances: ctx.instances,
        counterexamples: ctx.counterexamples,
        elapsed_ms: started.elapsed().as_millis(),
    })
}

struct Ctx {
    limits: Limits,
    instances: usize,
    counterexamples: Vec<Counterexample>,
}

impl Ctx {
    fn poly(&self, b: &Bouquet) -> Result<GenusPolynomial> {
        partial_dual_euler_polynomial_with(b, &self.limits)
    }

    fn fail(&mut self, words: &[&Bouquet], expected: impl ToString, actual: impl ToString) {
        self.counterexamples.push(Counterexample {
            words: words.iter().map(|b| b.to_string()).collect(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn main1(&mut self, n: usize) -> Result<()> {
        for m in 0..=n {
            let mut by_graph: HashMap<SignedGraph, (Bouquet, GenusPolynomial)> = HashMap::new();
            for b in all_bouquets_with(m, Dedup::FixedLabels, &self.limits)? {
                self.instances += 1;
                let p = self.poly(&b)?;
                let sg = signed_intersection_graph(&b);
                match by_graph.get(&sg) {
                    Some((first, q)) if *q != p => {
                        let (first, q) = (first.clone(), q.clone());
                        self.fail(&[&first, &b], q, p);
                    }
                    Some(_) => {}
                    None => {
                        by_graph.insert(sg, (b, p));
                    }
                }
            }
        }
        Ok(())
    }

    fn mutant_equiv(&mut self, n: usize) -> Result<()> {
        for m in 0..=n {
            let classes = all_bouquets_with(m, Dedup::FixedLabels, &self.limits)?;
            let index: HashMap<Bouquet, usize> =
                classes.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
            let mut orbit_of = vec![usize::MAX; classes.len()];
            let mut orbits = 0;
            for i in 0..classes.len() {
                if orbit_of[i] != usize::MAX {
                    continue;
                }
                let orbit = mutation_orbit(&classes[i], self.limits.orbit_cap).map_err(|(e, _)| e)?;
                for state in orbit {
                    let j = index[&state];
                    orbit_of[j] = orbits;
                }
                orbits += 1;
            }
            let mut orbit_graph: HashMap<usize, (usize, SignedGraph)> = HashMap::new();
            let mut graph_orbit: HashMap<SignedGraph, (usize, usize)> = HashMap::new();
            for (i, b) in classes.iter().enumerate() {
                self.instances += 1;
                let sg = signed_intersection_graph(b);
                match orbit_graph.get(&orbit_of[i]) {
                    Some((first, g)) if *g != sg => {
                        let first = classes[*first].clone();
                        self.fail(&[&first, b], "same signed intersection graph within an orbit", "graphs differ");
                    }
                    Some(_) => {}
                    None => {
                        orbit_graph.insert(orbit_of[i], (i, sg.clone()));
                    }
                }
                match graph_orbit.get(&sg) {
                    Some(&(first, o)) if o != orbit_of[i] => {
                        let first = classes[first].clone();
                        self.fail(&[&first, b], "mutant (equal signed intersection graphs)", "different mutation orbits");
                    }
                    Some(_) => {}
                    None => {
                        graph_orbit.insert(sg, (i, orbit_of[i]));
                    }
                }
            }
        }
        Ok(())
    }

    fn constant_term(&mut self, n: usize) -> Result<()> {
        for m in 0..=n {
            for b in all_bouquets_with(m, Dedup::Relabeled, &self.limits)? {
                self.instances += 1;
                let p = self.poly(&b)?;
                let predicted = predict_constant_term(&signed_intersection_graph(&b));
                let actual = p.coefficient(0) != BigUint::from(0u32);
                if predicted != actual {
                    self.fail(&[&b], format!("nonzero constant term: {predicted}"), p);
                }
            }
        }
        Ok(())
    }

    fn one_term(&mut self, n: usize) -> Result<()> {
        let twisted = canonical_form(&twisted_loop(), true);
        for m in 1..=n {
            for b in all_bouquets_with(m, Dedup::Relabeled, &self.limits)? {
                self.instances += 1;
                let p = self.poly(&b)?;
                let sg = signed_intersection_graph(&b);
                let class = classify_one_term(&sg);
                let full = BigUint::from(1u32) << m;
                let monomial = p.as_monomial().map(|(c, e)| (c.clone(), e));
                match (class.is_one_term, monomial) {
                    (true, Some((c, e))) if c == full && e as usize == class.b => {}
                    (false, None) => {}
                    (true, _) => self.fail(&[&b], format!("{full}z^{}", class.b), p),
                    (false, Some(_)) => self.fail(&[&b], "more than one term", p),
                }
                if !class.is_one_term {
                    continue;
                }
                // every prime factor is an odd B_t or the twisted loop
                for comp in sg.components() {
                    let bits = comp
                        .iter()
                        .map(|&v| 1u64 << b.edge_index(sg.label(v)).expect("vertex is an edge"))
                        .sum();
                    let factor = induced_sub_bouquet(&b, EdgeSubset::from_bits(bits, m))?;
                    let factor = canonical_form(&factor, true);
                    let expected = if comp.len() == 1 && sg.sign(comp[0]) == Sign::Minus {
                        twisted.clone()
                    } else {
                        canonical_form(&bt_bouquet(comp.len()), true)
                    };
                    if factor != expected {
                        self.fail(&[&b], format!("prime factor {expected}"), factor);
                    }
                }
            }
        }
        Ok(())
    }

    fn bt_form(&mut self, n: usize) -> Result<()> {
        for t in 1..=n {
            self.instances += 1;
            let b = bt_bouquet(t);
            let p = self.poly(&b)?;
            let q = bt_closed_form(t as u32)?;
            if p != q {
                self.fail(&[&b], q, p);
            }
        }
        Ok(())
    }

    fn join_law(&mut self, n: usize, seed: u64, pairs: usize) -> Result<()> {
        if n < 2 {
            return Err(Error::InvalidArgument("joinLaw needs n >= 2".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..pairs {
            self.instances += 1;
            let n1 = rng.gen_range(1..n);
            let n2 = rng.gen_range(1..=n - n1);
            let a = random_bouquet(n1, "a", &mut rng);
            let b = random_bouquet(n2, "b", &mut rng);
            let joined = join_concat(&a, &b)?;
            let expected = self.poly(&a)?.try_mul(&self.poly(&b)?)?;
            let actual = self.poly(&joined)?;
            if expected != actual {
                self.fail(&[&a, &b], expected, actual);
            }
        }
        Ok(())
    }
}
