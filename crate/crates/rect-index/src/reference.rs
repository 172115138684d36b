//! Brute-force reference implementations.
//!
//! These share no code with the indexed query paths; they exist so that
//! every structure in this crate can be checked against an independent
//! answer, both in the test suites and from the CLI `verify` command.

use crate::grid::{Grid2D, Occurrence};

/// Checks every candidate position by direct cell comparison. `O(n * m)`.
/// Output is sorted by `(row, col)`.
pub fn naive_search_2d(text: &Grid2D, pattern: &Grid2D) -> Vec<Occurrence> {
    let (hh, ww) = (text.height(), text.width());
    let (h, w) = (pattern.height(), pattern.width());
    let mut out = Vec::new();
    if h > hh || w > ww {
        return out;
    }
    for row in 1..=hh - h + 1 {
        'col: for col in 1..=ww - w + 1 {
            for i in 1..=h {
                for j in 1..=w {
                    if text.char_at(row + i - 1, col + j - 1) != pattern.char_at(i, j) {
                        continue 'col;
                    }
                }
            }
            out.push(Occurrence { row, col });
        }
    }
    out
}

/// Direct `O(|text| * |pattern|)` scan; returns 1-based start positions of
/// all (possibly overlapping) matches. Patterns must be non-empty.
pub fn naive_search_1d(text: &[u64], pattern: &[u64]) -> Vec<usize> {
    assert!(!pattern.is_empty(), "patterns are nonempty");
    let mut out = Vec::new();
    if pattern.len() > text.len() {
        return out;
    }
    for start in 0..=text.len() - pattern.len() {
        if text[start..start + pattern.len()] == *pattern {
            out.push(start + 1);
        }
    }
    out
}

/// Filters `(x, y, payload)` points against the inclusive rectangle
/// `[l1, r1] x [l2, r2]`, preserving input order.
pub fn naive_rect(points: &[(u32, u32, u32)], l1: u32, r1: u32, l2: u32, r2: u32) -> Vec<u32> {
    points
        .iter()
        .filter(|&&(x, y, _)| l1 <= x && x <= r1 && l2 <= y && y <= r2)
        .map(|&(_, _, p)| p)
        .collect()
}

/// Longest common prefix of `seq[p..]` and `seq[q..]` by direct comparison.
/// Positions are 0-based.
pub fn naive_lce(seq: &[u64], p: usize, q: usize) -> usize {
    let mut len = 0;
    while p + len < seq.len() && q + len < seq.len() && seq[p + len] == seq[q + len] {
        len += 1;
    }
    len
}
