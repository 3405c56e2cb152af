//! Intersection graphs of bouquets and signed graphs in general.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rotation::{Bouquet, Sign};

/// Simple graph on labeled vertices, each carrying a sign. Vertices are kept
/// sorted by label, so derived equality is labeled equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    labels: Vec<String>,
    signs: Vec<Sign>,
    adj: Vec<BTreeSet<usize>>,
}

pub type SignedIntersectionGraph = SignedGraph;

impl SignedGraph {
    pub fn new<L, E>(vertices: impl IntoIterator<Item = (L, Sign)>, edges: impl IntoIterator<Item = (E, E)>) -> Result<Self>
    where
        L: Into<String>,
        E: AsRef<str>,
    {
        let mut by_label: BTreeMap<String, Sign> = BTreeMap::new();
        for (label, sign) in vertices {
            let label = label.into();
            if label.is_empty() {
                return Err(Error::InvalidGraph("empty vertex label".into()));
            }
            if by_label.insert(label.clone(), sign).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex {label:?}")));
            }
        }
        let labels: Vec<String> = by_label.keys().cloned().collect();
        let signs = by_label.into_values().collect();
        let mut g = SignedGraph {
            adj: vec![BTreeSet::new(); labels.len()],
            labels,
            signs,
        };
        for (u, v) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let a = g
                .index_of(u)
                .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex {u:?}")))?;
            let b = g
                .index_of(v)
                .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex {v:?}")))?;
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {u:?}")));
            }
            g.adj[a].insert(b);
            g.adj[b].insert(a);
        }
        Ok(g)
    }

    pub fn empty() -> Self {
        SignedGraph {
            labels: Vec::new(),
            signs: Vec::new(),
            adj: Vec::new(),
        }
    }

    /// Complete graph on `1..=n`, every vertex positive.
    pub fn positive_complete(n: usize) -> Self {
        let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((vs[i].clone(), vs[j].clone()));
            }
        }
        Self::new(vs.into_iter().map(|l| (l, Sign::Plus)), edges).expect("well-formed")
    }

    /// Star `K_{1,n}`: hub `h`, positive leaves `1..=n`.
    pub fn positive_star(n: usize) -> Self {
        let vertices = std::iter::once(("h".to_string(), Sign::Plus))
            .chain((1..=n).map(|i| (i.to_string(), Sign::Plus)));
        let edges = (1..=n).map(|i| ("h".to_string(), i.to_string()));
        Self::new(vertices, edges).expect("well-formed")
    }

    /// Path `1 - 2 - … - n`, every vertex positive.
    pub fn positive_path(n: usize) -> Self {
        let vertices = (1..=n).map(|i| (i.to_string(), Sign::Plus));
        let edges = (1..n).map(|i| (i.to_string(), (i + 1).to_string()));
        Self::new(vertices, edges).expect("well-formed")
    }

    /// Disjoint union; labels must not collide.
    pub fn disjoint_union(&self, other: &SignedGraph) -> Result<Self> {
        let vertices = self
            .vertices()
            .chain(other.vertices())
            .map(|(l, s)| (l.to_string(), s));
        let edges = self.edge_list().into_iter().chain(other.edge_list());
        Self::new(vertices, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn sign(&self, v: usize) -> Sign {
        self.signs[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = (&str, Sign)> + '_ {
        self.labels.iter().map(String::as_str).zip(self.signs.iter().copied())
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    /// Edges as label pairs, each listed once with the smaller index first.
    pub fn edge_list(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for (u, ns) in self.adj.iter().enumerate() {
            for &v in ns.range(u + 1..) {
                out.push((self.labels[u].clone(), self.labels[v].clone()));
            }
        }
        out
    }

    /// Subgraph induced on the given vertex indices.
    pub fn induced(&self, keep: &[usize]) -> Self {
        let keep: BTreeSet<usize> = keep.iter().copied().collect();
        let vertices = keep.iter().map(|&v| (self.labels[v].clone(), self.signs[v]));
        let mut edges = Vec::new();
        for &u in &keep {
            for &v in self.adj[u].range(u + 1..) {
                if keep.contains(&v) {
                    edges.push((self.labels[u].as_str(), self.labels[v].as_str()));
                }
            }
        }
        Self::new(vertices, edges).expect("induced subgraph of a valid graph")
    }

    pub fn without(&self, remove: &[usize]) -> Self {
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|v| !remove.contains(v)).collect();
        self.induced(&keep)
    }

    pub fn is_positive(&self) -> bool {
        self.signs.iter().all(|&s| s == Sign::Plus)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![None; self.vertex_count()];
        for s in 0..self.vertex_count() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Connected components as sorted vertex index lists, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for s in 0..self.vertex_count() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_labels(&self) -> Vec<BTreeSet<String>> {
        self.components()
            .into_iter()
            .map(|c| c.into_iter().map(|v| self.labels[v].clone()).collect())
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Whether the vertices in `set` are pairwise adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .all(|&u| set.iter().all(|&v| u == v || self.adjacent(u, v)))
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self
                .vertices()
                .map(|(label, sign)| VertexJson {
                    label: label.to_string(),
                    sign,
                })
                .collect(),
            edges: self.edge_list().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        Self::new(
            json.vertices.iter().map(|v| (v.label.clone(), v.sign)),
            json.edges.iter().map(|[u, v]| (u.as_str(), v.as_str())),
        )
    }

    /// Graphviz rendering; each vertex shows its sign as a suffix.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph SI {\n");
        for (label, sign) in self.vertices() {
            let _ = writeln!(out, "  \"{label}\" [label=\"{label}{}\"];", sign.as_char());
        }
        for (u, v) in self.edge_list() {
            let _ = writeln!(out, "  \"{u}\" -- \"{v}\";");
        }
        out.push_str("}\n");
        out
    }
}

/// Wire form: `{"vertices":[{"label":"a","sign":"+"}],"edges":[["a","b"]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub label: String,
    pub sign: Sign,
}

impl Serialize for SignedGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = GraphJson::deserialize(d)?;
        SignedGraph::from_json(&json).map_err(serde::de::Error::custom)
    }
}

fn interlaced_edges(bouquet: &Bouquet, e: usize, f: usize) -> bool {
    let [p, q] = bouquet.ends(e);
    let inside = |x: usize| p < x && x < q;
    let [r, s] = bouquet.ends(f);
    inside(r) != inside(s)
}

/// Whether the ends of `e` and `f` alternate around the vertex.
pub fn interlaced(bouquet: &Bouquet, e: &str, f: &str) -> Result<bool> {
    let e = bouquet.require_edge(e)?;
    let f = bouquet.require_edge(f)?;
    Ok(e != f && interlaced_edges(bouquet, e, f))
}

pub fn signed_intersection_graph(bouquet: &Bouquet) -> SignedGraph {
    let n = bouquet.edge_count();
    let vertices = (0..n).map(|e| {
        let sign = if bouquet.is_twisted(e) {
            Sign::Minus
        } else {
            Sign::Plus
        };
        (bouquet.label(e).to_string(), sign)
    });
    let mut edges = Vec::new();
    for e in 0..n {
        for f in e + 1..n {
            if interlaced_edges(bouquet, e, f) {
                edges.push((bouquet.label(e), bouquet.label(f)));
            }
        }
    }
    SignedGraph::new(vertices, edges).expect("bouquet labels are distinct")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InterlaceSequences {
    /// Signed interlace numbers in nondecreasing order.
    pub signed: Vec<i64>,
    /// Signed interlace number at each word position.
    pub cyclic: Vec<i64>,
}

/// Signed interlace number: degree in the intersection graph, negated for
/// twisted edges. An isolated twisted edge gets 0.
pub fn interlace_sequences(bouquet: &Bouquet) -> InterlaceSequences {
    let n = bouquet.edge_count();
    let beta: Vec<i64> = (0..n)
        .map(|e| {
            let deg = (0..n)
                .filter(|&f| f != e && interlaced_edges(bouquet, e, f))
                .count() as i64;
            if bouquet.is_twisted(e) {
                -deg
            } else {
                deg
            }
        })
        .collect();
    let cyclic = bouquet.word().iter().map(|t| beta[t.edge]).collect();
    let mut signed = beta;
    signed.sort_unstable();
    InterlaceSequences { signed, cyclic }
}

pub fn is_positive(sg: &SignedGraph) -> bool {
    sg.is_positive()
}

pub fn is_bipartite(sg: &SignedGraph) -> bool {
    sg.is_bipartite()
}

pub fn components(sg: &SignedGraph) -> Vec<BTreeSet<String>> {
    sg.component_labels()
}

/// A bouquet is prime when its intersection graph is connected; the empty
/// bouquet is not prime.
pub fn is_prime(bouquet: &Bouquet) -> bool {
    !bouquet.is_empty() && signed_intersection_graph(bouquet).is_connected()
}

pub fn predict_constant_term(sg: &SignedGraph) -> bool {
    sg.is_positive() && sg.is_bipartite()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneTermClassification {
    pub is_one_term: bool,
    /// Number of components.
    pub k: usize,
    /// Number of negative isolated vertices.
    pub k2: usize,
    /// Predicted exponent `v - k + k2`.
    pub b: usize,
}

/// One-term test on the signed graph: every component is a complete graph of
/// odd order and every non-isolated vertex is positive.
pub fn classify_one_term(sg: &SignedGraph) -> OneTermClassification {
    let comps = sg.components();
    let k = comps.len();
    let k2 = comps
        .iter()
        .filter(|c| c.len() == 1 && sg.sign(c[0]) == Sign::Minus)
        .count();
    let is_one_term = comps.iter().all(|c| {
        c.len() % 2 == 1 && sg.is_clique(c) && (c.len() == 1 || c.iter().all(|&v| sg.sign(v) == Sign::Plus))
    });
    OneTermClassification {
        is_one_term,
        k,
        k2,
        b: sg.vertex_count() - k + k2,
    }
}
