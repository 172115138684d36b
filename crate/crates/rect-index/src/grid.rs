//! Rectangular byte grids and occurrence coordinates.
//!
//! One type serves both texts and patterns; which role a grid plays is
//! contextual. Rows and columns are 1-based in the public API, matching the
//! coordinate convention used everywhere else in this crate. Storage is
//! 0-based row-major.

use serde::Serialize;
use thiserror::Error;

/// Errors produced when reading a grid file.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GridError {
    #[error("empty grid input")]
    Empty,
    #[error("line {line} has length {got}, expected {expected}")]
    Ragged {
        line: usize,
        got: usize,
        expected: usize,
    },
}

/// An immutable rectangular array of byte symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid2D {
    height: usize,
    width: usize,
    cells: Vec<u8>,
}

impl Grid2D {
    /// Parses newline-separated lines of equal length. Accepts LF or CRLF
    /// endings; a trailing newline is ignored. Ragged or empty input is an
    /// error.
    pub fn parse(input: &[u8]) -> Result<Self, GridError> {
        let mut rows: Vec<&[u8]> = Vec::new();
        for mut line in input.split(|&b| b == b'\n') {
            if let [head @ .., b'\r'] = line {
                line = head;
            }
            rows.push(line);
        }
        // A trailing newline yields one empty fragment at the end.
        if rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.is_empty() || rows[0].is_empty() {
            return Err(GridError::Empty);
        }
        let width = rows[0].len();
        let mut cells = Vec::with_capacity(rows.len() * width);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(GridError::Ragged {
                    line: i + 1,
                    got: row.len(),
                    expected: width,
                });
            }
            cells.extend_from_slice(row);
        }
        Ok(Grid2D {
            height: rows.len(),
            width,
            cells,
        })
    }

    /// Builds a grid from explicit rows. Panics on ragged or empty input;
    /// intended for tests and generators that construct rows directly.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let mut bytes = Vec::new();
        for r in rows {
            bytes.extend_from_slice(r.as_ref());
            bytes.push(b'\n');
        }
        Self::parse(&bytes).expect("rows must be non-empty and of equal length")
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Total number of cells.
    pub fn size(&self) -> usize {
        self.height * self.width
    }

    /// Symbol at 1-based `(row, col)`.
    #[inline]
    pub fn char_at(&self, row: usize, col: usize) -> u8 {
        assert!(
            (1..=self.height).contains(&row) && (1..=self.width).contains(&col),
            "grid access ({row},{col}) outside {}x{}",
            self.height,
            self.width
        );
        self.cells[(row - 1) * self.width + (col - 1)]
    }

    /// Row `i` (1-based) as a byte slice.
    #[inline]
    pub fn row(&self, i: usize) -> &[u8] {
        assert!((1..=self.height).contains(&i));
        &self.cells[(i - 1) * self.width..i * self.width]
    }

    /// Grid with rows and columns interchanged.
    pub fn transpose(&self) -> Grid2D {
        let mut cells = Vec::with_capacity(self.cells.len());
        for j in 0..self.width {
            for i in 0..self.height {
                cells.push(self.cells[i * self.width + j]);
            }
        }
        Grid2D {
            height: self.width,
            width: self.height,
            cells,
        }
    }

    /// Serializes back to the line format accepted by [`Grid2D::parse`],
    /// with LF endings and a trailing newline.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.cells.len() + self.height);
        for i in 1..=self.height {
            out.extend_from_slice(self.row(i));
            out.push(b'\n');
        }
        out
    }
}

/// Position of a pattern occurrence: 1-based coordinates of the cell of the
/// text under the pattern's top-left corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Occurrence {
    pub row: usize,
    pub col: usize,
}
