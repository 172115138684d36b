//! Index a two-dimensional character grid so that all occurrences of any
//! rectangular pattern can be reported quickly.
//!
//! The text is an `H x W` grid (`n = H * W` cells) and a pattern is an
//! `h x w` grid (`m = h * w`). [`Index2D`] preprocesses the text into
//! `O(n log n)` words and answers [`Index2D::query`] in `O(m + k log n)`
//! time for `k` occurrences.
//!
//! The reduction works row-wise: every width-`w` row window is named by a
//! pair of Karp-Miller-Rosenberg fragment ranks (a *meta-character*), which
//! turns each band of `w` consecutive columns into a 1D string of length
//! `H`. Narrow widths are served by a generalized suffix trie over those
//! strings; wide ones by a cut/anchor index that pairs reversed-prefix and
//! suffix tries with 2D orthogonal range reporting. A transposed copy of
//! the whole structure serves patterns that are wider than tall.
//!
//! ```
//! use rect_index::{Grid2D, Index2D};
//!
//! let text = Grid2D::parse(b"abab\nbaba\nabab\n").unwrap();
//! let pattern = Grid2D::parse(b"ab\nba\n").unwrap();
//! let index = Index2D::build(text);
//! let hits = index.query(&pattern);
//! assert_eq!(
//!     hits.iter().map(|o| (o.row, o.col)).collect::<Vec<_>>(),
//!     vec![(1, 1), (1, 3), (2, 2)],
//! );
//! ```

pub mod grid;
pub mod index1d;
pub mod index2d;
pub mod kmr;
pub mod lce;
pub mod range;
pub mod reference;
pub mod trie;

pub use grid::{Grid2D, GridError, Occurrence};
pub use index2d::{Index2D, QueryWork, SpaceStats};
