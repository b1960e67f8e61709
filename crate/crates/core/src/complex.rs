//! The triple-graded Khovanov chain complex of a braid closure over F2.
//!
//! Generators are enhanced resolutions `(vertex, labels)`: a vertex of the
//! cube and a `v+`/`v-` label on each of its circles (bit set means `v+`).
//! The differential sums over cube edges `v → v | 1 << t` with the F2
//! Frobenius maps
//!
//! ```text
//! merge: v+ v+ → v+,  v+ v- → v-,  v- v+ → v-,  v- v- → 0
//! split: v+ → v+ v- + v- v+,  v- → v- v-
//! ```
//!
//! The full differential never raises the annular grading `k`; the part that
//! preserves `k` is the associated-graded differential whose homology is the
//! sutured annular Khovanov homology.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::AnnularClosureDiagram;
use crate::f2::F2Matrix;
use crate::{Error, Result};

/// Which differential to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Every component of the Khovanov differential (ordinary Kh).
    Full,
    /// Only the `k`-preserving components (SKh).
    AssociatedGraded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplexOptions {
    pub max_crossings: usize,
}

pub const DEFAULT_MAX_CROSSINGS: usize = 20;

impl Default for ComplexOptions {
    fn default() -> Self {
        ComplexOptions {
            max_crossings: DEFAULT_MAX_CROSSINGS,
        }
    }
}

/// Triple grading of a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grading {
    pub i: i32,
    pub j: i32,
    pub k: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EnhancedGenerator {
    pub vertex: u64,
    /// Bit `c` set means circle `c` (canonical order) carries `v+`.
    pub labels: u64,
    pub i: i32,
    pub j: i32,
    pub k: i32,
}

impl EnhancedGenerator {
    /// Builds the generator with the given labels, one per circle of the
    /// resolution at `vertex` (`true` is `v+`).
    pub fn new(d: &AnnularClosureDiagram, vertex: u64, labels: &[bool]) -> Result<Self> {
        let state = d.resolve(vertex)?;
        if labels.len() != state.circles.len() {
            return Err(Error::LabelWidth {
                expected: state.circles.len(),
                found: labels.len(),
            });
        }
        let essential = state
            .circles
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_essential())
            .fold(0u64, |m, (idx, _)| m | 1 << idx);
        let mask = labels
            .iter()
            .enumerate()
            .filter(|(_, &plus)| plus)
            .fold(0u64, |m, (idx, _)| m | 1 << idx);
        let g = grading(d, vertex, labels.len() as u32, essential, mask);
        Ok(EnhancedGenerator {
            vertex,
            labels: mask,
            i: g.i,
            j: g.j,
            k: g.k,
        })
    }

    pub fn gradings(&self) -> (i32, i32, i32) {
        (self.i, self.j, self.k)
    }
}

fn grading(
    d: &AnnularClosureDiagram,
    vertex: u64,
    circles: u32,
    essential: u64,
    labels: u64,
) -> Grading {
    let r = vertex.count_ones() as i32;
    let n_plus = d.n_plus() as i32;
    let n_minus = d.n_minus() as i32;
    let plus = labels.count_ones() as i32;
    let ess_plus = (labels & essential).count_ones() as i32;
    let ess = essential.count_ones() as i32;
    Grading {
        i: r - n_minus,
        j: (2 * plus - circles as i32) + r + n_plus - 2 * n_minus,
        k: 2 * ess_plus - ess,
    }
}

/// The all-braid-like resolution with every circle labelled `v-`; it
/// represents the Plamenevskaya class and sits in grading
/// `(0, writhe - n, -n)`.
pub fn plamenevskaya_generator(d: &AnnularClosureDiagram) -> EnhancedGenerator {
    let vertex = d.braidlike_vertex();
    let labels = vec![false; d.strands()];
    EnhancedGenerator::new(d, vertex, &labels).expect("braid-like vertex has n circles")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct VertexInfo {
    offset: usize,
    circles: u32,
    essential: u64,
}

/// Crude size estimate reported when a diagram is refused.
pub fn estimated_states(d: &AnnularClosureDiagram) -> u128 {
    let c = d.crossing_count() as u32;
    let circles = d.strands() as u32 + c / 2;
    1u128.checked_shl(c + circles).unwrap_or(u128::MAX)
}

/// All enhanced generators of a diagram together with the full differential.
#[derive(Debug, Clone)]
pub struct AnnularComplex {
    strands: usize,
    crossings: usize,
    n_plus: usize,
    n_minus: usize,
    vertices: Vec<VertexInfo>,
    gradings: Vec<Grading>,
    // CSR adjacency: targets of generator g are
    // targets[edge_start[g]..edge_start[g + 1]].
    edge_start: Vec<usize>,
    targets: Vec<u32>,
    filtration_violations: usize,
}

pub fn build_complex(d: &AnnularClosureDiagram, options: ComplexOptions) -> Result<AnnularComplex> {
    build_complex_with_progress(d, options, &mut |_, _| {})
}

/// As [`build_complex`], calling `progress(done, total)` after each vertex
/// whose outgoing edges are assembled.
pub fn build_complex_with_progress(
    d: &AnnularClosureDiagram,
    options: ComplexOptions,
    progress: &mut dyn FnMut(usize, usize),
) -> Result<AnnularComplex> {
    let c = d.crossing_count();
    if c > options.max_crossings || c >= 48 {
        return Err(Error::CrossingLimit {
            crossings: c,
            limit: options.max_crossings.min(47),
            estimated_states: estimated_states(d),
        });
    }
    let node_count = d.node_count();
    let vertex_count = 1usize << c;

    let mut node_circle: Vec<u16> = Vec::with_capacity(vertex_count * node_count);
    let mut vertices = Vec::with_capacity(vertex_count);
    let mut gradings = Vec::new();
    for v in 0..vertex_count as u64 {
        let state = d.trace(v);
        let circles = state.circles.len() as u32;
        assert!(circles < 64, "too many circles for a 64-bit label mask");
        let essential = state
            .circles
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_essential())
            .fold(0u64, |m, (idx, _)| m | 1 << idx);
        vertices.push(VertexInfo {
            offset: gradings.len(),
            circles,
            essential,
        });
        for labels in 0..1u64 << circles {
            gradings.push(grading(d, v, circles, essential, labels));
        }
        node_circle.extend_from_slice(&state.node_circle);
    }

    let mut edge_start = Vec::with_capacity(gradings.len() + 1);
    let mut targets: Vec<u32> = Vec::new();
    let mut filtration_violations = 0;
    let mut cube_edges: Vec<CubeEdge> = Vec::with_capacity(c);
    let mut circle_map: Vec<u32> = Vec::new();

    for v in 0..vertex_count {
        let src = vertices[v];
        let src_nodes = &node_circle[v * node_count..(v + 1) * node_count];
        cube_edges.clear();
        for t in (0..c).filter(|&t| v >> t & 1 == 0) {
            let w = v | 1 << t;
            let dst_nodes = &node_circle[w * node_count..(w + 1) * node_count];
            let ends = d.crossing_nodes(t);
            let touched = |nodes: &[u16]| {
                let mut out: Vec<u32> = ends.iter().map(|&x| nodes[x as usize] as u32).collect();
                out.sort_unstable();
                out.dedup();
                out
            };
            let src_touched = touched(src_nodes);
            let dst_touched = touched(dst_nodes);

            // Untouched circles keep their node sets, so any node identifies them.
            circle_map.clear();
            circle_map.resize(src.circles as usize, u32::MAX);
            for (node, &sc) in src_nodes.iter().enumerate() {
                let sc = sc as usize;
                if circle_map[sc] == u32::MAX && !src_touched.contains(&(sc as u32)) {
                    circle_map[sc] = dst_nodes[node] as u32;
                }
            }
            let fixed: Vec<(u32, u32)> = circle_map
                .iter()
                .enumerate()
                .filter(|(_, &dc)| dc != u32::MAX)
                .map(|(sc, &dc)| (sc as u32, dc))
                .collect();
            let kind = match (src_touched.as_slice(), dst_touched.as_slice()) {
                (&[a, b], &[to]) => EdgeKind::Merge { a, b, to },
                (&[from], &[a, b]) => EdgeKind::Split { from, a, b },
                other => panic!("crossing change neither merges nor splits: {other:?}"),
            };
            cube_edges.push(CubeEdge {
                target_offset: vertices[w].offset,
                fixed,
                kind,
            });
        }

        for labels in 0..1u64 << src.circles {
            let g = src.offset + labels as usize;
            edge_start.push(targets.len());
            let source_k = gradings[g].k;
            for edge in &cube_edges {
                let base = edge
                    .fixed
                    .iter()
                    .filter(|(sc, _)| labels >> sc & 1 == 1)
                    .fold(0u64, |m, (_, dc)| m | 1 << dc);
                let mut emit = |mask: u64| {
                    let target = edge.target_offset + mask as usize;
                    if gradings[target].k > source_k {
                        filtration_violations += 1;
                    }
                    targets.push(target as u32);
                };
                match edge.kind {
                    EdgeKind::Merge { a, b, to } => match (labels >> a & 1, labels >> b & 1) {
                        (1, 1) => emit(base | 1 << to),
                        (0, 0) => {}
                        _ => emit(base),
                    },
                    EdgeKind::Split { from, a, b } => {
                        if labels >> from & 1 == 1 {
                            emit(base | 1 << a);
                            emit(base | 1 << b);
                        } else {
                            emit(base);
                        }
                    }
                }
            }
        }
        progress(v + 1, vertex_count);
    }
    edge_start.push(targets.len());
    debug_assert_eq!(filtration_violations, 0);

    Ok(AnnularComplex {
        strands: d.strands(),
        crossings: c,
        n_plus: d.n_plus(),
        n_minus: d.n_minus(),
        vertices,
        gradings,
        edge_start,
        targets,
        filtration_violations,
    })
}

#[derive(Debug, Clone, Copy)]
enum EdgeKind {
    Merge { a: u32, b: u32, to: u32 },
    Split { from: u32, a: u32, b: u32 },
}

#[derive(Debug, Clone)]
struct CubeEdge {
    target_offset: usize,
    /// Untouched circles: (source index, target index).
    fixed: Vec<(u32, u32)>,
    kind: EdgeKind,
}

/// Identifies a homology block: quantum grading, plus the annular grading in
/// [`Mode::AssociatedGraded`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockKey {
    pub j: i32,
    pub k: Option<i32>,
}

/// The generators of one `(j)` or `(j, k)` block, split by homological degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub key: BlockKey,
    pub i_min: i32,
    /// `chains[idx]` lists the generators in degree `i_min + idx`, ascending.
    pub chains: Vec<Vec<u32>>,
}

impl Block {
    pub fn i_max(&self) -> i32 {
        self.i_min + self.chains.len() as i32 - 1
    }

    pub fn chain(&self, i: i32) -> &[u32] {
        let idx = i - self.i_min;
        if idx < 0 || idx as usize >= self.chains.len() {
            &[]
        } else {
            &self.chains[idx as usize]
        }
    }
}

/// Block decomposition of the complex for one mode.
#[derive(Debug, Clone)]
pub struct Blocks {
    pub mode: Mode,
    pub blocks: Vec<Block>,
    /// Position of each generator inside its chain group.
    local: Vec<u32>,
}

impl Blocks {
    pub fn local_index(&self, generator: u32) -> usize {
        self.local[generator as usize] as usize
    }
}

impl AnnularComplex {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings
    }

    pub fn n_plus(&self) -> usize {
        self.n_plus
    }

    pub fn n_minus(&self) -> usize {
        self.n_minus
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn generator_count(&self) -> usize {
        self.gradings.len()
    }

    /// Number of nonzero components of the full differential.
    pub fn edge_count(&self) -> usize {
        self.targets.len()
    }

    /// Differential components with `k(target) > k(source)`; always zero for
    /// a filtered differential.
    pub fn filtration_violations(&self) -> usize {
        self.filtration_violations
    }

    pub fn circle_count(&self, vertex: u64) -> u32 {
        self.vertices[vertex as usize].circles
    }

    pub fn essential_count(&self, vertex: u64) -> u32 {
        self.vertices[vertex as usize].essential.count_ones()
    }

    pub fn grading(&self, generator: u32) -> Grading {
        self.gradings[generator as usize]
    }

    /// Global index of the generator `(vertex, labels)`.
    pub fn index_of(&self, vertex: u64, labels: u64) -> u32 {
        let info = &self.vertices[vertex as usize];
        assert!(
            labels >> info.circles == 0,
            "label mask wider than the resolution"
        );
        (info.offset + labels as usize) as u32
    }

    pub fn generator(&self, generator: u32) -> EnhancedGenerator {
        let g = generator as usize;
        let vertex = self.vertices.partition_point(|info| info.offset <= g) - 1;
        let labels = (g - self.vertices[vertex].offset) as u64;
        let grading = self.gradings[g];
        EnhancedGenerator {
            vertex: vertex as u64,
            labels,
            i: grading.i,
            j: grading.j,
            k: grading.k,
        }
    }

    /// Components of the differential of `generator` in the given mode.
    pub fn boundary(&self, mode: Mode, generator: u32) -> impl Iterator<Item = u32> + '_ {
        let g = generator as usize;
        let k = self.gradings[g].k;
        self.targets[self.edge_start[g]..self.edge_start[g + 1]]
            .iter()
            .copied()
            .filter(move |&t| mode == Mode::Full || self.gradings[t as usize].k == k)
    }

    /// Generators whose annular grading is `k`.
    pub fn generators_with_k(&self, k: i32) -> Vec<u32> {
        (0..self.gradings.len() as u32)
            .filter(|&g| self.gradings[g as usize].k == k)
            .collect()
    }

    pub fn key(&self, mode: Mode, generator: u32) -> BlockKey {
        let g = self.gradings[generator as usize];
        BlockKey {
            j: g.j,
            k: match mode {
                Mode::Full => None,
                Mode::AssociatedGraded => Some(g.k),
            },
        }
    }

    pub fn blocks(&self, mode: Mode) -> Blocks {
        let mut by_key: BTreeMap<BlockKey, BTreeMap<i32, Vec<u32>>> = BTreeMap::new();
        for g in 0..self.gradings.len() as u32 {
            by_key
                .entry(self.key(mode, g))
                .or_default()
                .entry(self.gradings[g as usize].i)
                .or_default()
                .push(g);
        }
        let mut local = vec![0u32; self.gradings.len()];
        let mut blocks = Vec::with_capacity(by_key.len());
        for (key, by_i) in by_key {
            let i_min = *by_i.keys().next().expect("nonempty block");
            let i_max = *by_i.keys().next_back().expect("nonempty block");
            let mut chains = vec![Vec::new(); (i_max - i_min + 1) as usize];
            for (i, gens) in by_i {
                for (pos, &g) in gens.iter().enumerate() {
                    local[g as usize] = pos as u32;
                }
                chains[(i - i_min) as usize] = gens;
            }
            blocks.push(Block { key, i_min, chains });
        }
        Blocks {
            mode,
            blocks,
            local,
        }
    }

    /// The differential from degree `i` to `i + 1` inside a block, one row
    /// per source generator, columns indexed by the target chain group.
    pub fn boundary_matrix(&self, blocks: &Blocks, block: &Block, i: i32) -> F2Matrix {
        let sources = block.chain(i);
        let target_len = block.chain(i + 1).len();
        let mut m = F2Matrix::zeros(sources.len(), target_len);
        for (row, &g) in sources.iter().enumerate() {
            for t in self.boundary(blocks.mode, g) {
                m.flip(row, blocks.local_index(t));
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use alloc::vec::Vec;

    fn diagram(n: usize, letters: &[i32]) -> AnnularClosureDiagram {
        AnnularClosureDiagram::new(&BraidWord::new(n, letters.to_vec()).unwrap())
    }

    fn complex(n: usize, letters: &[i32]) -> AnnularComplex {
        build_complex(&diagram(n, letters), ComplexOptions::default()).unwrap()
    }

    fn triples(cx: &AnnularComplex) -> Vec<(i32, i32, i32)> {
        let mut out: Vec<_> = (0..cx.generator_count() as u32)
            .map(|g| {
                let gr = cx.grading(g);
                (gr.i, gr.j, gr.k)
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn trivial_two_braid_generators() {
        let cx = complex(2, &[]);
        assert_eq!(triples(&cx), [(0, -2, -2), (0, 0, 0), (0, 0, 0), (0, 2, 2)]);
        assert_eq!(cx.edge_count(), 0);
    }

    #[test]
    fn one_crossing_complex() {
        let cx = complex(2, &[1]);
        assert_eq!(
            triples(&cx),
            [
                (0, -1, -2),
                (0, 1, 0),
                (0, 1, 0),
                (0, 3, 2),
                (1, 1, 0),
                (1, 3, 0)
            ]
        );
        assert_eq!(cx.edge_count(), 3);
        let graded: usize = (0..cx.generator_count() as u32)
            .map(|g| cx.boundary(Mode::AssociatedGraded, g).count())
            .sum();
        assert_eq!(graded, 2);
        // (v+, v+) -> v+ is the component that drops k.
        let top = cx.index_of(0, 0b11);
        let image: Vec<u32> = cx.boundary(Mode::Full, top).collect();
        assert_eq!(image, [cx.index_of(1, 1)]);
        assert_eq!(cx.boundary(Mode::AssociatedGraded, top).count(), 0);
    }

    #[test]
    fn generator_gradings() {
        let g = EnhancedGenerator::new(&diagram(1, &[]), 0, &[true]).unwrap();
        assert_eq!(g.gradings(), (0, 1, 1));
        let g = EnhancedGenerator::new(&diagram(2, &[1]), 1, &[false]).unwrap();
        assert_eq!(g.gradings(), (1, 1, 0));
        let g = EnhancedGenerator::new(&diagram(2, &[-1]), 0, &[false]).unwrap();
        assert_eq!(g.gradings(), (-1, -3, 0));
        assert_eq!(
            EnhancedGenerator::new(&diagram(2, &[1]), 1, &[false, true]),
            Err(Error::LabelWidth {
                expected: 1,
                found: 2
            })
        );
    }

    #[test]
    fn plamenevskaya_generator_gradings() {
        assert_eq!(
            plamenevskaya_generator(&diagram(2, &[1])).gradings(),
            (0, -1, -2)
        );
        assert_eq!(
            plamenevskaya_generator(&diagram(3, &[])).gradings(),
            (0, -3, -3)
        );
        assert_eq!(
            plamenevskaya_generator(&diagram(2, &[-1])).gradings(),
            (0, -3, -2)
        );
    }

    #[test]
    fn crossing_limit_is_enforced() {
        let d = diagram(2, &[1; 5]);
        let err = build_complex(&d, ComplexOptions { max_crossings: 4 }).unwrap_err();
        assert!(matches!(
            err,
            Error::CrossingLimit {
                crossings: 5,
                limit: 4,
                ..
            }
        ));
    }

    #[test]
    fn generator_lookup_roundtrips() {
        let cx = complex(3, &[1, -2, 1]);
        for g in 0..cx.generator_count() as u32 {
            let e = cx.generator(g);
            assert_eq!(cx.index_of(e.vertex, e.labels), g);
        }
        let total: usize = (0..cx.vertex_count() as u64)
            .map(|v| 1usize << cx.circle_count(v))
            .sum();
        assert_eq!(total, cx.generator_count());
    }

    #[test]
    fn progress_reports_every_vertex() {
        let mut seen = Vec::new();
        build_complex_with_progress(
            &diagram(2, &[1, 1]),
            ComplexOptions::default(),
            &mut |done, total| seen.push((done, total)),
        )
        .unwrap();
        assert_eq!(seen, [(1, 4), (2, 4), (3, 4), (4, 4)]);
    }
}
