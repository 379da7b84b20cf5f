//! State-space dimensions of closed surfaces by counting admissible
//! labelings of trivalent graphs, and the Verlinde formula as a cross-check.

use super::{index_set, kirby_color};
use crate::error::Result;
use crate::hopf::QuantumGroup;
use crate::scalar::CycScalar;

/// A trivalent graph: each vertex lists its three incident edges, with a
/// loop edge listed twice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivalentGraph {
    pub edges: usize,
    pub vertices: Vec<[usize; 3]>,
}

impl TrivalentGraph {
    /// The caterpillar of genus `g`: a path with a loop at each end and a
    /// loop on a leg at every interior vertex. For `g = 1` it is a single
    /// loop edge without vertices, for `g = 0` the empty graph.
    pub fn caterpillar(g: usize) -> TrivalentGraph {
        match g {
            0 => return TrivalentGraph { edges: 0, vertices: Vec::new() },
            1 => return TrivalentGraph { edges: 1, vertices: Vec::new() },
            _ => {}
        }
        // edges 0..g are loops; spine edges follow, then legs
        let loops = g;
        let spine = g - 1;
        let spine_edge = |k: usize| loops + k;
        let leg = |k: usize| loops + spine + k;
        let mut vertices = vec![[0, 0, spine_edge(0)]];
        for k in 0..g - 2 {
            vertices.push([spine_edge(k), spine_edge(k + 1), leg(k)]);
            vertices.push([1 + k, 1 + k, leg(k)]);
        }
        vertices.push([g - 1, g - 1, spine_edge(g - 2)]);
        TrivalentGraph { edges: 3 * g - 3, vertices }
    }

    /// The theta graph: two vertices joined by three edges (genus 2).
    pub fn theta() -> TrivalentGraph {
        TrivalentGraph { edges: 3, vertices: vec![[0, 1, 2], [0, 1, 2]] }
    }

    /// Number of labelings by `I` that are `r`-triangular at every vertex.
    pub fn count_labelings(&self, r: u32) -> u64 {
        let labels = index_set(r);
        let mut lab = vec![0u32; self.edges];
        let mut count = 0;
        self.extend(r, &labels, &mut lab, 0, &mut count);
        count
    }

    fn extend(&self, r: u32, labels: &[u32], lab: &mut Vec<u32>, e: usize, count: &mut u64) {
        // prune at vertices whose edges are all labelled
        let ok = self.vertices.iter().filter(|v| v.iter().all(|&x| x < e)).all(|v| {
            let [a, b, c] = v.map(|x| lab[x]);
            r_triangular(r, a, b, c)
        });
        if !ok {
            return;
        }
        if e == self.edges {
            *count += 1;
            return;
        }
        for &l in labels {
            lab[e] = l;
            self.extend(r, labels, lab, e + 1, count);
        }
    }
}

/// `|b − c| ≤ a ≤ b + c` and `a + b + c < 2r − 2`.
pub(crate) fn r_triangular(r: u32, a: u32, b: u32, c: u32) -> bool {
    b.abs_diff(c) <= a && a <= b + c && a + b + c < 2 * r - 2
}

/// Dimension of the state space of the closed genus-`g` surface.
pub fn verlinde_dim(r: u32, g: usize) -> u64 {
    TrivalentGraph::caterpillar(g).count_labelings(r)
}

/// `Σ_{j∈I} (𝒟²/[j+1]²)^{g−1}` with `𝒟² = Σ_{j∈I} [j+1]²`.
pub fn verlinde_formula(h: &QuantumGroup, g: usize) -> Result<CycScalar> {
    let fl = h.field();
    let kirby = kirby_color(h);
    let mut d2 = fl.zero();
    for (_, w) in &kirby {
        d2 += &(w * w);
    }
    let mut acc = fl.zero();
    for (_, w) in &kirby {
        acc += &(&d2 / &(w * w)).pow(g as i64 - 1)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_shapes() {
        for g in 2..6 {
            let t = TrivalentGraph::caterpillar(g);
            assert_eq!(t.vertices.len(), 2 * g - 2);
            assert_eq!(t.edges, 3 * g - 3);
            let mut deg = vec![0; t.edges];
            for v in &t.vertices {
                for &e in v {
                    deg[e] += 1;
                }
            }
            assert!(deg.iter().all(|&d| d == 2));
        }
    }

    #[test]
    fn low_genus() {
        for r in [3, 5, 7, 9] {
            assert_eq!(verlinde_dim(r, 0), 1);
            assert_eq!(verlinde_dim(r, 1), ((r - 1) / 2) as u64);
        }
    }

    #[test]
    fn genus_two_by_enumeration() {
        for r in [3, 5, 7] {
            let idx = index_set(r);
            let mut dumbbell = 0;
            let mut theta = 0;
            for &a in &idx {
                for &b in &idx {
                    for &c in &idx {
                        if r_triangular(r, c, a, a) && r_triangular(r, c, b, b) {
                            dumbbell += 1;
                        }
                        if r_triangular(r, a, b, c) {
                            theta += 1;
                        }
                    }
                }
            }
            assert_eq!(verlinde_dim(r, 2), dumbbell);
            assert_eq!(TrivalentGraph::theta().count_labelings(r), theta);
            assert_eq!(dumbbell, theta);
        }
        assert_eq!(verlinde_dim(5, 2), 5);
    }

    #[test]
    fn counts_match_the_formula() {
        for r in [3, 5, 7] {
            let h = QuantumGroup::new(r).unwrap();
            for g in 0..5 {
                let f = verlinde_formula(h, g).unwrap();
                assert_eq!(f, h.field().int(verlinde_dim(r, g) as i64), "r={} g={}", r, g);
            }
        }
    }
}
