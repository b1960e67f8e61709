//! Dense matrices over the two-element field, rows packed into `u64` words.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        F2Matrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = F2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 entries.
    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = F2Matrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &x) in row.iter().enumerate() {
                m.set(r, c, x & 1 == 1);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn row_slice(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let bit = 1u64 << (c % 64);
        let word = &mut self.data[r * self.words + c / 64];
        if value {
            *word |= bit;
        } else {
            *word &= !bit;
        }
    }

    /// Adds one to entry `(r, c)`.
    pub fn flip(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.words + c / 64] ^= 1u64 << (c % 64);
    }

    pub fn push_row(&mut self, entries: &[usize]) {
        self.data.extend(core::iter::repeat_n(0, self.words));
        self.rows += 1;
        for &c in entries {
            self.flip(self.rows - 1, c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.ones_in_row(r) {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Column indices of the nonzero entries of row `r`.
    pub fn ones_in_row(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        self.row_slice(r).iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            core::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + tz)
            })
        })
    }

    /// Matrix product over F2.
    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = F2Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in self.ones_in_row(r) {
                let (dst, src) = (r * out.words, k * other.words);
                for w in 0..out.words {
                    out.data[dst + w] ^= other.data[src + w];
                }
            }
        }
        out
    }

    /// Rank over F2 by Gaussian elimination, pivoting on columns in index
    /// order.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.eliminate()
    }

    /// Forward elimination in place; returns the rank.
    ///
    /// Pivots are gathered a panel at a time (up to [`PANEL`] of them inside
    /// one 64-column word) and the rows below are cleared with a table of all
    /// combinations of the panel's pivot rows, one XOR per row.
    fn eliminate(&mut self) -> usize {
        let words = self.words;
        let mut rank = 0;
        let mut col = 0;
        let mut table: Vec<u64> = Vec::new();
        while col < self.cols && rank < self.rows {
            let w = col / 64;
            let word_end = ((w + 1) * 64).min(self.cols);
            // Pivot columns (bit offsets within word w), in order.
            let mut pivots: Vec<u32> = Vec::with_capacity(PANEL);
            while col < word_end && pivots.len() < PANEL && rank + pivots.len() < self.rows {
                let bit = (col % 64) as u32;
                let base = rank + pivots.len();
                let found = (base..self.rows)
                    .find(|&r| self.reduced_panel_word(r, w, rank, &pivots) >> bit & 1 == 1);
                col += 1;
                let Some(r) = found else { continue };
                self.reduce_row_by_pivots(r, w, rank, &pivots);
                self.swap_rows(r, base);
                // Keep earlier pivots clear in the new pivot column.
                for p in rank..base {
                    if self.data[p * words + w] >> bit & 1 == 1 {
                        self.xor_rows(p, base, w);
                    }
                }
                pivots.push(bit);
            }
            if pivots.is_empty() {
                continue;
            }
            let m = pivots.len();
            let span = words - w;
            table.clear();
            table.resize(span << m, 0);
            for (idx, p) in (rank..rank + m).enumerate() {
                let src = p * words + w;
                let half = 1usize << idx;
                for combo in 0..half {
                    for x in 0..span {
                        table[(combo | half) * span + x] =
                            table[combo * span + x] ^ self.data[src + x];
                    }
                }
            }
            let end = rank + m;
            for row in self.data[end * words..].chunks_exact_mut(words) {
                let word = row[w];
                let mut idx = 0usize;
                for (i, &bit) in pivots.iter().enumerate() {
                    idx |= ((word >> bit & 1) as usize) << i;
                }
                if idx != 0 {
                    let entry = &table[idx * span..(idx + 1) * span];
                    for (dst, src) in row[w..].iter_mut().zip(entry) {
                        *dst ^= src;
                    }
                }
            }
            rank = end;
        }
        rank
    }

    /// Word `w` of row `r` after reducing by the pending panel pivots (stored
    /// in rows `first..first + pivots.len()`).
    fn reduced_panel_word(&self, r: usize, w: usize, first: usize, pivots: &[u32]) -> u64 {
        let words = self.words;
        let mut word = self.data[r * words + w];
        for (i, &bit) in pivots.iter().enumerate() {
            if word >> bit & 1 == 1 {
                word ^= self.data[(first + i) * words + w];
            }
        }
        word
    }

    fn reduce_row_by_pivots(&mut self, r: usize, w: usize, first: usize, pivots: &[u32]) {
        for (i, &bit) in pivots.iter().enumerate() {
            if self.data[r * self.words + w] >> bit & 1 == 1 {
                self.xor_rows(r, first + i, w);
            }
        }
    }

    /// `row[dst] ^= row[src]` from word `w` on.
    fn xor_rows(&mut self, dst: usize, src: usize, w: usize) {
        let words = self.words;
        for x in w..words {
            let v = self.data[src * words + x];
            self.data[dst * words + x] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for x in 0..self.words {
                self.data.swap(a * self.words + x, b * self.words + x);
            }
        }
    }
}

/// Pivots per elimination panel.
const PANEL: usize = 8;

/// Rank over F2.
pub fn f2_rank(m: &F2Matrix) -> usize {
    m.rank()
}

/// Rank of a sparse matrix given as rows of column indices (repeated
/// indices cancel in pairs).
///
/// Pivots that cause no fill-in (a column with a single entry, or a row with
/// a single entry) are eliminated sparsely, repeatedly; what survives goes to
/// dense elimination.
pub fn sparse_rank(rows: Vec<Vec<u32>>, cols: usize) -> usize {
    SparseEliminator::new(rows, cols).rank()
}

struct SparseEliminator {
    rows: Vec<Vec<u32>>,
    row_alive: Vec<bool>,
    col_alive: Vec<bool>,
    // May hold stale entries; membership is re-checked on use.
    col_rows: Vec<Vec<u32>>,
    col_count: Vec<usize>,
    worklist: Vec<u32>,
    scratch: Vec<u32>,
}

impl SparseEliminator {
    fn new(rows: Vec<Vec<u32>>, cols: usize) -> Self {
        let rows: Vec<Vec<u32>> = rows
            .into_iter()
            .map(|mut r| {
                r.sort_unstable();
                let mut out: Vec<u32> = Vec::with_capacity(r.len());
                for c in r {
                    if out.last() == Some(&c) {
                        out.pop();
                    } else {
                        out.push(c);
                    }
                }
                out
            })
            .collect();
        let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); cols];
        let mut col_count = vec![0usize; cols];
        for (r, row) in rows.iter().enumerate() {
            for &c in row {
                col_rows[c as usize].push(r as u32);
                col_count[c as usize] += 1;
            }
        }
        let row_alive = rows.iter().map(|r| !r.is_empty()).collect();
        SparseEliminator {
            rows,
            row_alive,
            col_alive: vec![true; cols],
            col_rows,
            col_count,
            worklist: (0..cols as u32).rev().collect(),
            scratch: Vec::new(),
        }
    }

    /// Live rows meeting column `c`, compacting the index as a side effect.
    fn live_rows(&mut self, c: usize) -> &[u32] {
        let rows = &self.rows;
        let alive = &self.row_alive;
        let list = &mut self.col_rows[c];
        list.sort_unstable();
        list.dedup();
        list.retain(|&r| alive[r as usize] && rows[r as usize].binary_search(&(c as u32)).is_ok());
        list
    }

    /// A pivot row in column `c` whose elimination creates no fill-in.
    fn free_pivot(&mut self, c: usize) -> Option<u32> {
        if !self.col_alive[c] || self.col_count[c] == 0 {
            return None;
        }
        let single_column = self.col_count[c] == 1;
        self.live_rows(c);
        let rows = &self.rows;
        self.col_rows[c]
            .iter()
            .copied()
            .find(|&r| single_column || rows[r as usize].len() == 1)
    }

    fn rank(mut self) -> usize {
        let mut rank = 0;
        let mut touched: Vec<u32> = Vec::new();
        while let Some(c) = self.worklist.pop() {
            let c = c as usize;
            let Some(pivot) = self.free_pivot(c) else {
                continue;
            };
            let others: Vec<u32> = self
                .live_rows(c)
                .iter()
                .copied()
                .filter(|&r| r != pivot)
                .collect();
            let pivot_row = core::mem::take(&mut self.rows[pivot as usize]);
            self.row_alive[pivot as usize] = false;
            self.col_alive[c] = false;
            for &x in &pivot_row {
                self.col_count[x as usize] -= 1;
            }
            touched.clear();
            touched.extend(pivot_row.iter().copied());
            for &r in &others {
                let row = &mut self.rows[r as usize];
                self.scratch.clear();
                let (mut a, mut b) = (0, 0);
                while a < row.len() || b < pivot_row.len() {
                    let x = row.get(a).copied().unwrap_or(u32::MAX);
                    let y = pivot_row.get(b).copied().unwrap_or(u32::MAX);
                    if x == y {
                        self.col_count[x as usize] -= 1;
                        a += 1;
                        b += 1;
                    } else if x < y {
                        self.scratch.push(x);
                        a += 1;
                    } else {
                        self.scratch.push(y);
                        self.col_count[y as usize] += 1;
                        self.col_rows[y as usize].push(r);
                        b += 1;
                    }
                }
                core::mem::swap(row, &mut self.scratch);
                if row.is_empty() {
                    self.row_alive[r as usize] = false;
                }
                touched.extend(self.rows[r as usize].iter().copied());
            }
            rank += 1;
            touched.sort_unstable();
            touched.dedup();
            self.worklist.extend(touched.iter().rev());
        }

        let cols = self.col_alive.len();
        let mut col_index = vec![u32::MAX; cols];
        let mut remaining_cols = 0usize;
        for (c, index) in col_index.iter_mut().enumerate() {
            if self.col_alive[c] && self.col_count[c] > 0 {
                *index = remaining_cols as u32;
                remaining_cols += 1;
            }
        }
        let remaining: Vec<&Vec<u32>> = self
            .rows
            .iter()
            .enumerate()
            .filter(|(r, _)| self.row_alive[*r])
            .map(|(_, row)| row)
            .collect();
        if remaining.is_empty() {
            return rank;
        }
        let mut dense = F2Matrix::zeros(remaining.len(), remaining_cols);
        for (r, row) in remaining.iter().enumerate() {
            for &c in row.iter() {
                dense.flip(r, col_index[c as usize] as usize);
            }
        }
        rank + dense.rank()
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                f.write_str(if self.get(r, c) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    #[test]
    fn rank_examples() {
        assert_eq!(f2_rank(&F2Matrix::identity(3)), 3);
        assert_eq!(f2_rank(&F2Matrix::zeros(4, 7)), 0);
        assert_eq!(f2_rank(&F2Matrix::from_rows(&[&[1, 1], &[1, 1]])), 1);
        assert_eq!(f2_rank(&F2Matrix::zeros(0, 5)), 0);
        assert_eq!(
            f2_rank(&F2Matrix::from_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])),
            2
        );
    }

    #[test]
    fn rank_across_word_boundaries() {
        let mut m = F2Matrix::zeros(3, 130);
        m.set(0, 0, true);
        m.set(0, 129, true);
        m.set(1, 129, true);
        m.set(2, 0, true);
        assert_eq!(m.rank(), 2);
        m.set(2, 64, true);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn product_and_transpose() {
        let a = F2Matrix::from_rows(&[&[1, 1, 0], &[0, 1, 1]]);
        let b = F2Matrix::from_rows(&[&[1, 0], &[1, 1], &[0, 1]]);
        assert_eq!(a.mul(&b), F2Matrix::from_rows(&[&[0, 1], &[1, 0]]));
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(
            a.transpose(),
            F2Matrix::from_rows(&[&[1, 0], &[1, 1], &[0, 1]])
        );
    }

    #[test]
    fn push_row_extends() {
        let mut m = F2Matrix::zeros(0, 4);
        m.push_row(&[1, 3]);
        m.push_row(&[1, 3]);
        assert_eq!(m.rows(), 2);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.ones_in_row(0).collect::<alloc::vec::Vec<_>>(), [1, 3]);
    }

    // Brute-force rank: the size of the row span, by enumerating subsets.
    fn span_rank(rows: &[u16]) -> usize {
        let mut span = alloc::collections::BTreeSet::new();
        for subset in 0u32..1 << rows.len() {
            let v = rows
                .iter()
                .enumerate()
                .filter(|(i, _)| subset >> i & 1 == 1)
                .fold(0u16, |acc, (_, r)| acc ^ r);
            span.insert(v);
        }
        span.len().trailing_zeros() as usize
    }

    proptest! {
        #[test]
        fn rank_matches_span_size(rows in proptest::collection::vec(0u16..1 << 10, 0..9)) {
            let mut m = F2Matrix::zeros(rows.len(), 10);
            for (r, &bits) in rows.iter().enumerate() {
                for c in 0..10 {
                    m.set(r, c, bits >> c & 1 == 1);
                }
            }
            prop_assert_eq!(m.rank(), span_rank(&rows));
            prop_assert_eq!(m.transpose().rank(), m.rank());
            let sparse: Vec<Vec<u32>> = (0..m.rows()).map(|r| m.ones_in_row(r).map(|c| c as u32).collect()).collect();
            prop_assert_eq!(sparse_rank(sparse, 10), m.rank());
        }

        #[test]
        fn sparse_rank_matches_dense(entries in proptest::collection::vec((0usize..30, 0usize..25), 0..80)) {
            let mut m = F2Matrix::zeros(30, 25);
            let mut rows = vec![Vec::new(); 30];
            for &(r, c) in &entries {
                m.flip(r, c);
                rows[r].push(c as u32);
            }
            prop_assert_eq!(sparse_rank(rows, 25), m.rank());
        }
    }
}
