//! Longest-common-extension oracles.
//!
//! [`LceOracle`] concatenates a batch of integer strings with per-string
//! unique separators, builds a suffix array by prefix doubling with radix
//! sorting, the LCP array by Kasai's algorithm, and a sparse-table RMQ on
//! top. After `O(N log N)` preprocessing, the longest common prefix of any
//! two suffixes of the concatenation is answered in `O(1)`.
//!
//! [`StripLceOracle`] layers the column-strip reduction on top: for every
//! power-of-two width it holds one oracle over the rank strings induced by
//! the strips of that width (and one over the vertically reversed text), and
//! answers LCE queries between strips of *arbitrary* width as the minimum of
//! two power-of-two queries covering the window.

use crate::kmr::KmrTable;

/// Suffix array of `seq` (0-based start positions, lexicographic order of
/// suffixes), built by prefix doubling with counting sorts.
pub fn suffix_array(seq: &[u64]) -> Vec<u32> {
    let n = seq.len();
    if n == 0 {
        return Vec::new();
    }
    // Dense initial ranks from the sorted symbol set.
    let mut symbols: Vec<u64> = seq.to_vec();
    symbols.sort_unstable();
    symbols.dedup();
    let mut rank: Vec<u32> = seq
        .iter()
        .map(|s| symbols.partition_point(|x| x < s) as u32)
        .collect();
    let mut classes = symbols.len();
    drop(symbols);

    let mut sa: Vec<u32> = vec![0; n];
    let mut count: Vec<u32> = vec![0; classes.max(1) + 1];
    for &r in &rank {
        count[r as usize + 1] += 1;
    }
    for i in 1..count.len() {
        count[i] += count[i - 1];
    }
    for i in 0..n as u32 {
        let r = rank[i as usize] as usize;
        sa[count[r] as usize] = i;
        count[r] += 1;
    }

    let mut by_second: Vec<u32> = vec![0; n];
    let mut new_rank: Vec<u32> = vec![0; n];
    let mut len = 1usize;
    while classes < n {
        // Stable order by the second half of the doubled key: suffixes that
        // run off the end come first, the rest inherit the previous order
        // shifted left by `len`.
        let mut idx = 0;
        for i in n - len..n {
            by_second[idx] = i as u32;
            idx += 1;
        }
        for &s in &sa {
            if s as usize >= len {
                by_second[idx] = s - len as u32;
                idx += 1;
            }
        }
        // Stable counting sort by the first half.
        count.clear();
        count.resize(classes + 1, 0);
        for &s in by_second.iter() {
            count[rank[s as usize] as usize + 1] += 1;
        }
        for i in 1..count.len() {
            count[i] += count[i - 1];
        }
        for &s in by_second.iter() {
            let r = rank[s as usize] as usize;
            sa[count[r] as usize] = s;
            count[r] += 1;
        }
        // Re-rank.
        let key = |i: u32| {
            let i = i as usize;
            let second = if i + len < n { rank[i + len] + 1 } else { 0 };
            (rank[i], second)
        };
        new_rank[sa[0] as usize] = 0;
        for j in 1..n {
            let bump = (key(sa[j - 1]) != key(sa[j])) as u32;
            new_rank[sa[j] as usize] = new_rank[sa[j - 1] as usize] + bump;
        }
        std::mem::swap(&mut rank, &mut new_rank);
        classes = rank[sa[n - 1] as usize] as usize + 1;
        len *= 2;
    }
    sa
}

/// LCP array via Kasai's algorithm: `lcp[r]` is the longest common prefix of
/// the suffixes ranked `r - 1` and `r`; `lcp[0] = 0`.
fn lcp_array(seq: &[u64], sa: &[u32], inv: &[u32]) -> Vec<u32> {
    let n = seq.len();
    let mut lcp = vec![0u32; n];
    let mut k = 0usize;
    for i in 0..n {
        let r = inv[i] as usize;
        if r == 0 {
            k = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + k < n && j + k < n && seq[i + k] == seq[j + k] {
            k += 1;
        }
        lcp[r] = k as u32;
        k = k.saturating_sub(1);
    }
    lcp
}

/// Sparse table answering inclusive range-minimum queries in `O(1)` after
/// `O(N log N)` preprocessing.
pub struct SparseRmq {
    levels: Vec<Vec<u32>>,
}

impl SparseRmq {
    pub fn build(values: &[u32]) -> Self {
        let n = values.len();
        let mut levels = vec![values.to_vec()];
        let mut span = 1usize;
        while span * 2 <= n {
            let prev = levels.last().unwrap();
            let next: Vec<u32> = (0..=n - span * 2)
                .map(|i| prev[i].min(prev[i + span]))
                .collect();
            levels.push(next);
            span *= 2;
        }
        SparseRmq { levels }
    }

    /// Minimum of `values[l..=r]`.
    pub fn min(&self, l: usize, r: usize) -> u32 {
        debug_assert!(l <= r && r < self.levels[0].len());
        let j = (r - l + 1).ilog2() as usize;
        self.levels[j][l].min(self.levels[j][r + 1 - (1 << j)])
    }

    pub fn entry_count(&self) -> usize {
        self.levels.iter().map(|l| l.len()).sum()
    }
}

/// LCE oracle over the concatenation of a batch of strings.
///
/// Each input string is followed by a separator `alphabet_bound + index`, so
/// all suffixes of the concatenation are distinct and no common extension
/// crosses a string boundary.
pub struct LceOracle {
    seq: Vec<u64>,
    starts: Vec<u32>,
    sa: Vec<u32>,
    inv: Vec<u32>,
    lcp: Vec<u32>,
    rmq: SparseRmq,
}

impl LceOracle {
    /// `alphabet_bound` must be strictly greater than every symbol that
    /// occurs in `strings`.
    pub fn build<S: AsRef<[u64]>>(strings: &[S], alphabet_bound: u64) -> Self {
        let total: usize = strings.iter().map(|s| s.as_ref().len() + 1).sum();
        let mut seq = Vec::with_capacity(total);
        let mut starts = Vec::with_capacity(strings.len());
        for (t, s) in strings.iter().enumerate() {
            let s = s.as_ref();
            debug_assert!(s.iter().all(|&sym| sym < alphabet_bound));
            starts.push(seq.len() as u32);
            seq.extend_from_slice(s);
            seq.push(alphabet_bound + t as u64);
        }
        let sa = suffix_array(&seq);
        let mut inv = vec![0u32; seq.len()];
        for (r, &p) in sa.iter().enumerate() {
            inv[p as usize] = r as u32;
        }
        let lcp = lcp_array(&seq, &sa, &inv);
        let rmq = SparseRmq::build(&lcp);
        LceOracle {
            seq,
            starts,
            sa,
            inv,
            lcp,
            rmq,
        }
    }

    /// Global 0-based position of `offset` within input string `string`.
    #[inline]
    pub fn pos(&self, string: usize, offset: usize) -> usize {
        self.starts[string] as usize + offset
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn suffix_array_ref(&self) -> &[u32] {
        &self.sa
    }

    /// Longest common prefix of `seq[p..]` and `seq[q..]` (0-based). For
    /// `p == q` this is the remaining length to the end of the concatenation.
    pub fn lce(&self, p: usize, q: usize) -> usize {
        if p == q {
            return self.seq.len() - p;
        }
        let (mut a, mut b) = (self.inv[p] as usize, self.inv[q] as usize);
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        self.rmq.min(a + 1, b) as usize
    }

    pub fn entry_count(&self) -> usize {
        self.seq.len() + self.starts.len() + self.sa.len() + self.inv.len() + self.lcp.len()
            + self.rmq.entry_count()
    }
}

/// Per-level LCE oracles over column-strip rank strings.
///
/// Level `k` covers the strips of width `2^k`: one string of length `H` per
/// start column, whose `j`-th symbol is the level-`k` KMR rank of the window
/// at that column in row `j`. The `rev` family is built on the vertically
/// reversed text so that reversed strip prefixes become plain suffixes.
pub struct StripLceOracle {
    rows: usize,
    levels: Vec<LceOracle>,
    levels_rev: Vec<LceOracle>,
}

impl StripLceOracle {
    pub fn build(kmr: &KmrTable) -> Self {
        let rows = kmr.height();
        let mut levels = Vec::new();
        let mut levels_rev = Vec::new();
        for k in 0..=kmr.max_level() {
            let cols = kmr.level_cols(k);
            let bound = kmr.num_distinct(k) as u64;
            let mut fwd: Vec<Vec<u64>> = Vec::with_capacity(cols);
            let mut rev: Vec<Vec<u64>> = Vec::with_capacity(cols);
            for c in 0..cols {
                let s: Vec<u64> = (0..rows).map(|r| kmr.rank_at(k, r, c) as u64).collect();
                let mut r = s.clone();
                r.reverse();
                fwd.push(s);
                rev.push(r);
            }
            levels.push(LceOracle::build(&fwd, bound));
            levels_rev.push(LceOracle::build(&rev, bound));
        }
        StripLceOracle {
            rows,
            levels,
            levels_rev,
        }
    }

    /// LCE of the width-`w` strip strings starting at `(col_a, row_a)` and
    /// `(col_b, row_b)` (all 1-based): the number of consecutive rows from
    /// which the two width-`w` windows agree.
    pub fn strip_lce(&self, w: usize, col_a: usize, row_a: usize, col_b: usize, row_b: usize) -> usize {
        self.query(&self.levels, w, col_a, row_a, col_b, row_b)
    }

    /// Same on the vertically reversed text; `row_*` index into the reversed
    /// strip strings.
    pub fn strip_lce_rev(
        &self,
        w: usize,
        col_a: usize,
        row_a: usize,
        col_b: usize,
        row_b: usize,
    ) -> usize {
        self.query(&self.levels_rev, w, col_a, row_a, col_b, row_b)
    }

    fn query(
        &self,
        family: &[LceOracle],
        w: usize,
        col_a: usize,
        row_a: usize,
        col_b: usize,
        row_b: usize,
    ) -> usize {
        debug_assert!(w >= 1 && row_a >= 1 && row_b >= 1 && col_a >= 1 && col_b >= 1);
        let k = w.ilog2() as usize;
        let frag = 1usize << k;
        let o = &family[k];
        // The window of width w is covered by its leftmost and rightmost
        // width-2^k sub-windows; the strip LCE is the minimum of the two.
        let mut res = o.lce(o.pos(col_a - 1, row_a - 1), o.pos(col_b - 1, row_b - 1));
        if frag != w {
            let shift = w - frag;
            res = res.min(o.lce(
                o.pos(col_a - 1 + shift, row_a - 1),
                o.pos(col_b - 1 + shift, row_b - 1),
            ));
        }
        // Identical positions would otherwise run through the separator.
        res.min(self.rows + 1 - row_a.max(row_b))
    }

    pub fn level_count(&self) -> usize {
        self.levels.len()
    }

    pub fn entry_count(&self) -> usize {
        self.levels
            .iter()
            .chain(self.levels_rev.iter())
            .map(|o| o.entry_count())
            .sum()
    }
}
