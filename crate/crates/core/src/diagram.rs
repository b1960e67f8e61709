//! The closure of a braid drawn in the annulus, and its resolutions.
//!
//! Points of the diagram are the `n` strand positions on each of the `c + 1`
//! levels between consecutive crossings (level 0 is the top, level `c` the
//! bottom). Node `(level, p)` has id `level * n + p`. Each resolution joins
//! these nodes into circles through three kinds of arcs:
//!
//! * straight arcs `(t, p) - (t + 1, p)` for strands not involved in crossing `t`;
//! * the two arcs of the chosen smoothing at crossing `t`;
//! * closure arcs `(c, p) - (0, p)`, which are exactly the arcs meeting the
//!   radial cut from the inner basepoint to the outer one.
//!
//! The winding number of a circle around the braid axis is the signed count
//! of closure arcs it traverses.

use alloc::vec;
use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    /// 1-based position `i` of the generator `σ_i^{±1}`.
    pub position: usize,
    pub positive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnularClosureDiagram {
    strands: usize,
    crossings: Vec<Crossing>,
    n_plus: usize,
    n_minus: usize,
}

/// One circle of a resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circle {
    /// Node ids in traversal order, starting at the smallest.
    pub nodes: Vec<u32>,
    /// Winding number around the axis. Circles are oriented so that it is
    /// nonnegative; only `0` (trivial) and `1` (essential) occur.
    pub winding: i32,
    /// Number of closure arcs on the circle, i.e. geometric intersections
    /// with the cut arc.
    pub cut_crossings: usize,
}

impl Circle {
    pub fn is_essential(&self) -> bool {
        self.winding.abs() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionState {
    pub vertex: u64,
    /// Circles sorted by their smallest node id.
    pub circles: Vec<Circle>,
    /// Circle index of every node.
    pub node_circle: Vec<u16>,
}

impl ResolutionState {
    pub fn essential_count(&self) -> usize {
        self.circles.iter().filter(|c| c.is_essential()).count()
    }

    pub fn windings(&self) -> Vec<i32> {
        self.circles.iter().map(|c| c.winding).collect()
    }
}

pub fn closure_diagram(w: &BraidWord) -> AnnularClosureDiagram {
    AnnularClosureDiagram::new(w)
}

impl AnnularClosureDiagram {
    pub fn new(w: &BraidWord) -> Self {
        let crossings: Vec<Crossing> = w
            .letters()
            .iter()
            .map(|&g| Crossing {
                position: g.unsigned_abs() as usize,
                positive: g > 0,
            })
            .collect();
        let n_plus = crossings.iter().filter(|x| x.positive).count();
        AnnularClosureDiagram {
            strands: w.strands(),
            n_minus: crossings.len() - n_plus,
            n_plus,
            crossings,
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn n_plus(&self) -> usize {
        self.n_plus
    }

    pub fn n_minus(&self) -> usize {
        self.n_minus
    }

    pub fn writhe(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn node_count(&self) -> usize {
        self.strands * (self.crossings.len() + 1)
    }

    pub fn node_id(&self, level: usize, position: usize) -> u32 {
        (level * self.strands + position) as u32
    }

    /// The vertex whose every smoothing is braid-like: bit 0 at positive
    /// crossings and bit 1 at negative ones.
    pub fn braidlike_vertex(&self) -> u64 {
        self.crossings
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.positive)
            .fold(0, |acc, (t, _)| acc | (1u64 << t))
    }

    /// Whether the resolution bit `bit` at crossing `t` is the braid-like
    /// smoothing.
    pub fn is_braidlike(&self, t: usize, bit: bool) -> bool {
        self.crossings[t].positive != bit
    }

    /// The four endpoints of crossing `t`: top-left, top-right, bottom-left,
    /// bottom-right.
    pub fn crossing_nodes(&self, t: usize) -> [u32; 4] {
        let a = self.crossings[t].position - 1;
        [
            self.node_id(t, a),
            self.node_id(t, a + 1),
            self.node_id(t + 1, a),
            self.node_id(t + 1, a + 1),
        ]
    }

    pub fn resolve(&self, vertex: u64) -> Result<ResolutionState> {
        let c = self.crossings.len();
        if c < 64 && vertex >> c != 0 {
            return Err(Error::VertexOutOfRange {
                vertex,
                crossings: c,
            });
        }
        Ok(self.trace(vertex))
    }

    /// Traces the circles of a resolution. `vertex` must fit in `c` bits.
    pub(crate) fn trace(&self, vertex: u64) -> ResolutionState {
        let n = self.strands;
        let c = self.crossings.len();
        let nodes = self.node_count();

        // Edges as (from, to, cut sign when traversed from -> to).
        let mut edges: Vec<(u32, u32, i32)> = Vec::with_capacity(nodes);
        for (t, x) in self.crossings.iter().enumerate() {
            let a = x.position - 1;
            for p in (0..n).filter(|&p| p != a && p != a + 1) {
                edges.push((self.node_id(t, p), self.node_id(t + 1, p), 0));
            }
            let [tl, tr, bl, br] = self.crossing_nodes(t);
            if self.is_braidlike(t, vertex >> t & 1 == 1) {
                edges.push((tl, bl, 0));
                edges.push((tr, br, 0));
            } else {
                edges.push((tl, tr, 0));
                edges.push((bl, br, 0));
            }
        }
        for p in 0..n {
            edges.push((self.node_id(c, p), self.node_id(0, p), 1));
        }
        debug_assert_eq!(edges.len(), nodes);

        // Two (edge, end) slots per node.
        const EMPTY: (u32, u8) = (u32::MAX, 0);
        let mut slots = vec![[EMPTY; 2]; nodes];
        let mut attach = |node: u32, half: (u32, u8)| {
            let s = &mut slots[node as usize];
            if s[0] == EMPTY {
                s[0] = half;
            } else {
                debug_assert_eq!(s[1], EMPTY);
                s[1] = half;
            }
        };
        for (e, &(from, to, _)) in edges.iter().enumerate() {
            attach(from, (e as u32, 0));
            attach(to, (e as u32, 1));
        }

        let mut node_circle = vec![u16::MAX; nodes];
        let mut circles = Vec::new();
        for start in 0..nodes {
            if node_circle[start] != u16::MAX {
                continue;
            }
            let id = circles.len() as u16;
            let mut members = Vec::new();
            let mut winding = 0i32;
            let mut cut_crossings = 0usize;
            let first = slots[start][0];
            let mut leave = first;
            let mut node = start as u32;
            loop {
                node_circle[node as usize] = id;
                members.push(node);
                let (e, end) = leave;
                let (from, to, cut) = edges[e as usize];
                if cut != 0 {
                    cut_crossings += 1;
                    winding += if end == 0 { cut } else { -cut };
                }
                let arrive = (e, 1 - end);
                node = if end == 0 { to } else { from };
                let s = slots[node as usize];
                leave = if s[0] == arrive { s[1] } else { s[0] };
                if leave == first {
                    break;
                }
            }
            assert!(
                winding.abs() <= 1,
                "circle with winding {winding}: resolution is not embedded"
            );
            circles.push(Circle {
                nodes: members,
                winding: winding.abs(),
                cut_crossings,
            });
        }
        ResolutionState {
            vertex,
            circles,
            node_circle,
        }
    }
}
