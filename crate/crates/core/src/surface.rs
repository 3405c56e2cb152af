//! Boundary components and Euler genus of a bouquet.
//!
//! Each word position `p` carries two boundary points: `p-` where the vertex
//! boundary enters the half-edge and `p+` where it leaves. Point `2p` is `p-`
//! and `2p + 1` is `p+`. Two perfect matchings on these `4n` points describe
//! the surface boundary:
//!
//! * the arc matching joins `p+` to `(p + 1)-` along the vertex disk;
//! * the ribbon matching joins the sides of each edge ribbon, `{p-, q+}` and
//!   `{p+, q-}` when untwisted, `{p-, q-}` and `{p+, q+}` when twisted.
//!
//! Their union is a disjoint union of cycles, one per boundary component.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rotation::Bouquet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryPairing {
    arc: Vec<usize>,
    ribbon: Vec<usize>,
}

impl BoundaryPairing {
    pub fn point_count(&self) -> usize {
        self.arc.len()
    }

    /// Partner of `point` along the vertex boundary.
    pub fn arc_partner(&self, point: usize) -> usize {
        self.arc[point]
    }

    /// Partner of `point` along a ribbon side.
    pub fn ribbon_partner(&self, point: usize) -> usize {
        self.ribbon[point]
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.arc.len()];
        let mut cycles = 0;
        for start in 0..self.arc.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            loop {
                seen[x] = true;
                let y = self.ribbon[x];
                seen[y] = true;
                x = self.arc[y];
                if x == start {
                    break;
                }
            }
        }
        cycles
    }
}

pub const fn entering(position: usize) -> usize {
    2 * position
}

pub const fn leaving(position: usize) -> usize {
    2 * position + 1
}

pub fn boundary_pairing(bouquet: &Bouquet) -> Result<BoundaryPairing> {
    if bouquet.is_empty() {
        return Err(Error::InvalidArgument(
            "boundary pairing of the empty bouquet".into(),
        ));
    }
    let m = bouquet.len();
    let mut arc = vec![0; 2 * m];
    for p in 0..m {
        let next = (p + 1) % m;
        arc[leaving(p)] = entering(next);
        arc[entering(next)] = leaving(p);
    }
    let mut ribbon = vec![0; 2 * m];
    for e in 0..bouquet.edge_count() {
        let [p, q] = bouquet.ends(e);
        let pairs = if bouquet.is_twisted(e) {
            [(entering(p), entering(q)), (leaving(p), leaving(q))]
        } else {
            [(entering(p), leaving(q)), (leaving(p), entering(q))]
        };
        for (a, b) in pairs {
            ribbon[a] = b;
            ribbon[b] = a;
        }
    }
    Ok(BoundaryPairing { arc, ribbon })
}

/// `f(B)`; 1 for the empty bouquet.
pub fn count_boundary_components(bouquet: &Bouquet) -> usize {
    match boundary_pairing(bouquet) {
        Ok(pairing) => pairing.cycle_count(),
        Err(_) => 1,
    }
}

/// `1 + e(B) - f(B)`, and 0 for the empty bouquet.
pub fn euler_genus(bouquet: &Bouquet) -> usize {
    if bouquet.is_empty() {
        return 0;
    }
    1 + bouquet.edge_count() - count_boundary_components(bouquet)
}

pub fn is_orientable(bouquet: &Bouquet) -> bool {
    bouquet.twisted_count() == 0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceSummary {
    pub edge_count: usize,
    pub boundary_count: usize,
    pub euler_genus: usize,
    pub orientable: bool,
}

pub fn surface_summary(bouquet: &Bouquet) -> SurfaceSummary {
    let f = count_boundary_components(bouquet);
    let e = bouquet.edge_count();
    SurfaceSummary {
        edge_count: e,
        boundary_count: f,
        euler_genus: if e == 0 { 0 } else { 1 + e - f },
        orientable: is_orientable(bouquet),
    }
}

/// Face tracer for many sub-bouquets of one bouquet, reusing its buffers.
pub(crate) struct MaskedTracer<'a> {
    bouquet: &'a Bouquet,
    kept: Vec<usize>,
    slot: Vec<usize>,
    seen: Vec<bool>,
}

impl<'a> MaskedTracer<'a> {
    pub(crate) fn new(bouquet: &'a Bouquet) -> Self {
        let m = bouquet.len();
        MaskedTracer {
            bouquet,
            kept: Vec::with_capacity(m),
            slot: vec![usize::MAX; m],
            seen: vec![false; 2 * m],
        }
    }

    /// Euler genus of the sub-bouquet on the edges whose bits are set.
    pub(crate) fn euler_genus(&mut self, mask: u64) -> u32 {
        let edges = mask.count_ones() as usize;
        if edges == 0 {
            return 0;
        }
        let b = self.bouquet;
        self.kept.clear();
        for (pos, t) in b.word().iter().enumerate() {
            if mask >> t.edge & 1 == 1 {
                self.slot[pos] = self.kept.len();
                self.kept.push(pos);
            }
        }
        let m = self.kept.len();
        let seen = &mut self.seen[..2 * m];
        seen.iter_mut().for_each(|s| *s = false);
        let mut faces = 0;
        for start in 0..2 * m {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut x = start;
            loop {
                seen[x] = true;
                // ribbon side
                let i = x / 2;
                let orig = self.kept[i];
                let j = self.slot[b.partner(orig)];
                let side = if b.is_twisted(b.word()[orig].edge) {
                    x & 1
                } else {
                    1 - (x & 1)
                };
                let y = 2 * j + side;
                seen[y] = true;
                // vertex arc
                x = if y & 1 == 1 {
                    2 * ((j + 1) % m)
                } else {
                    2 * ((j + m - 1) % m) + 1
                };
                if x == start {
                    break;
                }
            }
        }
        (1 + edges - faces) as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotation::{induced_sub_bouquet, EdgeSubset};

    fn b(s: &str) -> Bouquet {
        s.parse().unwrap()
    }

    #[test]
    fn anchor_boundary_counts() {
        assert_eq!(count_boundary_components(&b("(e, e)")), 2);
        assert_eq!(count_boundary_components(&b("(e, -e)")), 1);
        assert_eq!(count_boundary_components(&b("(e, f, e, f)")), 1);
        assert_eq!(count_boundary_components(&b("(e, e, f, f)")), 3);
        assert_eq!(count_boundary_components(&b("(e, f, -e, f)")), 1);
        assert_eq!(count_boundary_components(&Bouquet::empty()), 1);
    }

    #[test]
    fn pairing_matches_hand_trace() {
        let p = boundary_pairing(&b("(e, e)")).unwrap();
        assert_eq!(p.arc_partner(leaving(0)), entering(1));
        assert_eq!(p.arc_partner(leaving(1)), entering(0));
        assert_eq!(p.ribbon_partner(entering(0)), leaving(1));
        assert_eq!(p.ribbon_partner(leaving(0)), entering(1));

        let t = boundary_pairing(&b("(e, -e)")).unwrap();
        assert_eq!(t.ribbon_partner(entering(0)), entering(1));
        assert_eq!(t.ribbon_partner(leaving(0)), leaving(1));
        assert_eq!(t.cycle_count(), 1);

        assert_eq!(boundary_pairing(&b("(e, f, e, f)")).unwrap().point_count(), 8);
        assert!(boundary_pairing(&Bouquet::empty()).is_err());
    }

    #[test]
    fn genus_examples() {
        assert_eq!(euler_genus(&b("(e, -e)")), 1);
        assert_eq!(euler_genus(&b("(1, 2, 3, 1, 2, 3)")), 2);
        assert_eq!(euler_genus(&b("(e, f, e, f)")), 2);
        assert_eq!(euler_genus(&b("(e, e, f, f)")), 0);
        assert_eq!(euler_genus(&Bouquet::empty()), 0);
        let s = surface_summary(&Bouquet::empty());
        assert_eq!((s.boundary_count, s.euler_genus, s.orientable), (1, 0, true));
    }

    #[test]
    fn orientability() {
        assert!(is_orientable(&b("(e, f, e, f)")));
        assert!(!is_orientable(&b("(e, -e)")));
        assert!(!is_orientable(&b("(a, c, -a, d, b, d, c, -b)")));
    }

    #[test]
    fn masked_tracer_agrees_with_induced_sub_bouquet() {
        let w = b("(a, c, -a, d, b, d, c, -b, e, f, -e, f)");
        let mut tracer = MaskedTracer::new(&w);
        for mask in 0..1u64 << w.edge_count() {
            let sub = induced_sub_bouquet(&w, EdgeSubset::from_bits(mask, w.edge_count())).unwrap();
            assert_eq!(tracer.euler_genus(mask) as usize, euler_genus(&sub), "mask {mask:b}");
        }
    }
}
