//! Shared fixtures, seeded word generators and a brute-force homology oracle.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use braidkh_core::{BraidWord, Degree, GradedDims};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn word(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).unwrap()
}

/// Small named braid words used by the "for every fixture" properties. All
/// have at most 8 crossings.
pub fn fixtures() -> Vec<(&'static str, BraidWord)> {
    let table: &[(&str, usize, &[i32])] = &[
        ("trivial-1", 1, &[]),
        ("trivial-2", 2, &[]),
        ("trivial-3", 3, &[]),
        ("trivial-4", 4, &[]),
        ("s1", 2, &[1]),
        ("s1-inv", 2, &[-1]),
        ("s1-s1-inv", 2, &[1, -1]),
        ("hopf", 2, &[1, 1]),
        ("neg-hopf", 2, &[-1, -1]),
        ("right-trefoil", 2, &[1, 1, 1]),
        ("left-trefoil", 2, &[-1, -1, -1]),
        ("torus-2-4", 2, &[1, 1, 1, 1]),
        ("torus-2-5", 2, &[1, 1, 1, 1, 1]),
        ("b3-s1s2", 3, &[1, 2]),
        ("b3-mixed", 3, &[1, -2]),
        ("b3-delta", 3, &[1, 2, 1]),
        ("b3-neg-delta", 3, &[-1, -2, -1]),
        ("figure-eight", 3, &[1, -2, 1, -2]),
        ("b3-positive-4", 3, &[1, 2, 1, 2]),
        ("b3-s1-neg", 3, &[-1, 2, 2]),
        ("b3-twist", 3, &[1, 1, 2, -1, 2]),
        ("b3-alternating-6", 3, &[1, -2, 1, -2, 1, -2]),
        ("b3-full-twist", 3, &[1, 2, 1, 1, 2, 1]),
        ("b3-pure", 3, &[1, 1, 2, 2]),
        ("b4-s1s2s3", 4, &[1, 2, 3]),
        ("b4-mixed", 4, &[1, -2, 3]),
        ("b4-neg", 4, &[-1, -2, -3]),
        ("b4-mixed-4", 4, &[1, -2, 3, 1]),
        ("b4-commuting", 4, &[1, 3, -1, -3]),
        ("b4-positive-6", 4, &[1, 2, 3, 1, 2, 3]),
        ("b5-stabilized", 5, &[1, 2, 3, 4]),
        ("b5-mixed", 5, &[1, -2, 3, -4]),
    ];
    table
        .iter()
        .map(|&(name, n, letters)| (name, word(n, letters)))
        .collect()
}

/// Whether some generator occurs only inverted (at least once).
pub fn is_sigma_negative(w: &BraidWord) -> bool {
    (1..w.strands() as i32).any(|i| w.letters().contains(&-i) && !w.letters().contains(&i))
}

pub fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

/// Applies one braid relation (or inserts a cancelling pair) at a position
/// chosen by `seed`, without changing the braid.
pub fn rewrite(w: &BraidWord, seed: usize) -> BraidWord {
    let l = w.letters();
    let n = w.strands() as i32;
    for offset in 0..=l.len() {
        let p = (seed + offset) % (l.len() + 1);
        if p + 3 <= l.len() {
            let (a, b, c) = (l[p], l[p + 1], l[p + 2]);
            if a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1 {
                let mut out = l.to_vec();
                out[p..p + 3].copy_from_slice(&[b, a, b]);
                return BraidWord::new(w.strands(), out).unwrap();
            }
        }
        if p + 2 <= l.len() && (l[p].abs() - l[p + 1].abs()).abs() >= 2 {
            let mut out = l.to_vec();
            out.swap(p, p + 1);
            return BraidWord::new(w.strands(), out).unwrap();
        }
    }
    let g = (seed as i32 % (n - 1)) + 1;
    let p = seed % (l.len() + 1);
    let mut out = l.to_vec();
    out.splice(p..p, [g, -g]);
    BraidWord::new(w.strands(), out).unwrap()
}

// ---------------------------------------------------------------------------
// Brute-force oracle.
//
// Points (level, position) of the closed diagram are joined by straight arcs,
// by the chosen smoothing at each crossing and by the closure arcs (the
// seam). Circles come from union-find; a circle is essential exactly when it
// uses an odd number of seam arcs. Differentials apply the Frobenius merge
// and split maps to explicit labelings and homology is computed from dense
// matrices with a separate elimination routine.

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut x = x;
        while self.0[x] != root {
            let next = self.0[x];
            self.0[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a] = b;
        }
    }
}

struct Smoothing {
    /// Circle index of every point.
    circle_of: Vec<usize>,
    essential: Vec<bool>,
}

fn smooth(w: &BraidWord, vertex: u64) -> Smoothing {
    let n = w.strands();
    let c = w.len();
    let point = |level: usize, pos: usize| level * n + pos;
    let mut uf = UnionFind::new((c + 1) * n);
    for (t, &letter) in w.letters().iter().enumerate() {
        let a = letter.unsigned_abs() as usize - 1;
        for p in (0..n).filter(|&p| p != a && p != a + 1) {
            uf.union(point(t, p), point(t + 1, p));
        }
        let bit = vertex >> t & 1 == 1;
        let oriented = (letter > 0) != bit;
        if oriented {
            uf.union(point(t, a), point(t + 1, a));
            uf.union(point(t, a + 1), point(t + 1, a + 1));
        } else {
            uf.union(point(t, a), point(t, a + 1));
            uf.union(point(t + 1, a), point(t + 1, a + 1));
        }
    }
    for p in 0..n {
        uf.union(point(c, p), point(0, p));
    }
    let mut index: BTreeMap<usize, usize> = BTreeMap::new();
    let mut circle_of = Vec::with_capacity((c + 1) * n);
    for x in 0..(c + 1) * n {
        let root = uf.find(x);
        let next = index.len();
        circle_of.push(*index.entry(root).or_insert(next));
    }
    let mut seam_count = vec![0usize; index.len()];
    for p in 0..n {
        seam_count[circle_of[point(c, p)]] += 1;
    }
    Smoothing {
        circle_of,
        essential: seam_count.iter().map(|s| s % 2 == 1).collect(),
    }
}

#[derive(Clone, Copy)]
struct Generator {
    vertex: u64,
    labels: u64,
    i: i32,
    j: i32,
    k: i32,
}

/// `SKh` (with `graded`) or `Kh` of the closure, computed from scratch.
pub fn oracle_homology(w: &BraidWord, graded: bool) -> GradedDims {
    let n = w.strands();
    let c = w.len();
    assert!(c <= 10, "oracle is exponential");
    let n_plus = w.letters().iter().filter(|&&g| g > 0).count() as i32;
    let n_minus = c as i32 - n_plus;
    let smoothings: Vec<Smoothing> = (0..1u64 << c).map(|v| smooth(w, v)).collect();

    let mut generators = Vec::new();
    let mut index: HashMap<(u64, u64), usize> = HashMap::new();
    for (v, s) in smoothings.iter().enumerate() {
        let circles = s.essential.len();
        let r = (v as u64).count_ones() as i32;
        for labels in 0..1u64 << circles {
            let plus = labels.count_ones() as i32;
            let mut k = 0;
            for (idx, &e) in s.essential.iter().enumerate() {
                if e {
                    k += if labels >> idx & 1 == 1 { 1 } else { -1 };
                }
            }
            index.insert((v as u64, labels), generators.len());
            generators.push(Generator {
                vertex: v as u64,
                labels,
                i: r - n_minus,
                j: 2 * plus - circles as i32 + r + n_plus - 2 * n_minus,
                k,
            });
        }
    }

    let boundary = |g: &Generator| -> Vec<usize> {
        let mut out = Vec::new();
        let src = &smoothings[g.vertex as usize];
        for t in (0..c).filter(|&t| g.vertex >> t & 1 == 0) {
            let target_vertex = g.vertex | 1 << t;
            let dst = &smoothings[target_vertex as usize];
            let a = w.letters()[t].unsigned_abs() as usize - 1;
            let touched = [
                t * n + a,
                t * n + a + 1,
                (t + 1) * n + a,
                (t + 1) * n + a + 1,
            ];
            let src_touched: Vec<usize> = dedup(touched.iter().map(|&p| src.circle_of[p]));
            let dst_touched: Vec<usize> = dedup(touched.iter().map(|&p| dst.circle_of[p]));
            let label = |circle: usize| g.labels >> circle & 1 == 1;
            // Labels of untouched target circles, read through any point.
            let mut base = 0u64;
            let dst_circles = dst.essential.len();
            for circle in 0..dst_circles {
                if dst_touched.contains(&circle) {
                    continue;
                }
                let p = dst.circle_of.iter().position(|&x| x == circle).unwrap();
                if label(src.circle_of[p]) {
                    base |= 1 << circle;
                }
            }
            let mut images: Vec<u64> = Vec::new();
            match (src_touched.len(), dst_touched.len()) {
                (2, 1) => {
                    let (x, y) = (label(src_touched[0]), label(src_touched[1]));
                    let m = dst_touched[0];
                    match (x, y) {
                        (true, true) => images.push(base | 1 << m),
                        (true, false) | (false, true) => images.push(base),
                        (false, false) => {}
                    }
                }
                (1, 2) => {
                    let (p, q) = (dst_touched[0], dst_touched[1]);
                    if label(src_touched[0]) {
                        images.push(base | 1 << p);
                        images.push(base | 1 << q);
                    } else {
                        images.push(base);
                    }
                }
                shape => panic!("a saddle is a merge or a split, got {shape:?}"),
            }
            for labels in images {
                let target = index[&(target_vertex, labels)];
                if !graded || generators[target].k == g.k {
                    out.push(target);
                }
            }
        }
        out
    };

    // Group by (j, k) or j, then by i.
    let mut groups: BTreeMap<(i32, Option<i32>), BTreeMap<i32, Vec<usize>>> = BTreeMap::new();
    for (idx, g) in generators.iter().enumerate() {
        let key = (g.j, if graded { Some(g.k) } else { None });
        groups
            .entry(key)
            .or_default()
            .entry(g.i)
            .or_default()
            .push(idx);
    }
    let mut out = GradedDims::new();
    for ((j, k), by_i) in groups {
        let rank_from = |i: i32| -> usize {
            let (Some(src), Some(dst)) = (by_i.get(&i), by_i.get(&(i + 1))) else {
                return 0;
            };
            let mut rows: Vec<Vec<bool>> = Vec::new();
            for &s in src {
                let mut row = vec![false; dst.len()];
                for t in boundary(&generators[s]) {
                    let col = dst
                        .iter()
                        .position(|&x| x == t)
                        .expect("differential preserves j");
                    row[col] ^= true;
                }
                rows.push(row);
            }
            bool_rank(rows)
        };
        for (&i, gens) in &by_i {
            let dim = gens.len() - rank_from(i) - rank_from(i - 1);
            out.add(Degree { i, j, k }, dim as u64);
        }
    }
    out
}

fn dedup(it: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = it.collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Rank over F2 of a matrix of booleans, by reduced row echelon form.
pub fn bool_rank(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col]) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Prints one status line and returns whether it passed.
pub fn report(label: &str, passed: bool, detail: &str) -> bool {
    let status = if passed { "PASS" } else { "FAIL" };
    println!("[{status}] {label}: {detail}");
    passed
}
