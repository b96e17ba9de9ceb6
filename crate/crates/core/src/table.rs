use serde::{Serialize, Serializer};

use crate::chain::ChainScale;
use crate::error::{Error, Result};

/// A commutative binary operation on a finite chain, stored as a dense
/// row-major `(n+1) x (n+1)` table of chain indices.
///
/// Symmetry and range are enforced at construction, so every `OpTable` is
/// well-formed for its scale.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpTable {
    scale: ChainScale,
    values: Box<[u8]>,
}

/// Why raw rows could not become an [`OpTable`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableDefect {
    RowCount { expected: usize, found: usize },
    RowLength { row: usize, expected: usize, found: usize },
    OutOfRange { x: usize, y: usize, value: usize },
    Asymmetric { x: usize, y: usize, xy: usize, yx: usize },
}

impl std::fmt::Display for TableDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TableDefect::RowCount { expected, found } => {
                write!(f, "expected {expected} rows, found {found}")
            }
            TableDefect::RowLength { row, expected, found } => {
                write!(f, "row {row}: expected {expected} entries, found {found}")
            }
            TableDefect::OutOfRange { x, y, value } => {
                write!(f, "entry ({x}, {y}) = {value} is outside the chain")
            }
            TableDefect::Asymmetric { x, y, xy, yx } => {
                write!(f, "table is not symmetric: ({x}, {y}) = {xy} but ({y}, {x}) = {yx}")
            }
        }
    }
}

impl OpTable {
    /// Builds a table from `f`, evaluated only for `x <= y` and mirrored.
    pub fn from_fn(scale: ChainScale, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let size = scale.size();
        let mut values = vec![0u8; size * size].into_boxed_slice();
        for x in 0..size {
            for y in x..size {
                let v = f(x, y);
                if v > scale.n() {
                    return Err(Error::MalformedTable(
                        TableDefect::OutOfRange { x, y, value: v }.to_string(),
                    ));
                }
                values[x * size + y] = v as u8;
                values[y * size + x] = v as u8;
            }
        }
        Ok(OpTable { scale, values })
    }

    /// Scans raw rows and lists every structural defect.
    pub fn defects(scale: ChainScale, rows: &[Vec<usize>]) -> Vec<TableDefect> {
        let size = scale.size();
        let mut out = Vec::new();
        if rows.len() != size {
            out.push(TableDefect::RowCount { expected: size, found: rows.len() });
            return out;
        }
        for (x, row) in rows.iter().enumerate() {
            if row.len() != size {
                out.push(TableDefect::RowLength { row: x, expected: size, found: row.len() });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for (x, row) in rows.iter().enumerate() {
            for (y, &v) in row.iter().enumerate() {
                if v > scale.n() {
                    out.push(TableDefect::OutOfRange { x, y, value: v });
                }
            }
        }
        for x in 0..size {
            for y in x + 1..size {
                if rows[x][y] != rows[y][x] {
                    out.push(TableDefect::Asymmetric { x, y, xy: rows[x][y], yx: rows[y][x] });
                }
            }
        }
        out
    }

    pub fn from_rows(scale: ChainScale, rows: &[Vec<usize>]) -> Result<Self> {
        if let Some(d) = Self::defects(scale, rows).into_iter().next() {
            return Err(Error::MalformedTable(d.to_string()));
        }
        Self::from_fn(scale, |x, y| rows[x][y])
    }

    pub(crate) fn from_raw(scale: ChainScale, values: Box<[u8]>) -> Self {
        debug_assert_eq!(values.len(), scale.size() * scale.size());
        OpTable { scale, values }
    }

    #[inline]
    pub fn scale(&self) -> ChainScale {
        self.scale
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.scale.n()
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.values[x * self.scale.size() + y] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let size = self.scale.size();
        (0..size).map(|x| (0..size).map(|y| self.get(x, y)).collect()).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.values
    }

    /// Table for `n - T(n - x, n - y)`.
    pub fn dual(&self) -> OpTable {
        let n = self.n();
        OpTable::from_fn(self.scale, |x, y| n - self.get(n - x, n - y))
            .expect("dual of an in-range table stays in range")
    }

    /// Restriction to `[lo, hi]^2`, shifted down by `lo`. Fails when the
    /// block is not closed under the operation.
    pub fn restrict(&self, lo: usize, hi: usize) -> Result<OpTable> {
        debug_assert!(lo < hi && hi <= self.n());
        for x in lo..=hi {
            for y in x..=hi {
                let v = self.get(x, y);
                if v < lo || v > hi {
                    return Err(Error::RestrictionNotClosed { lo, hi, x, y, value: v });
                }
            }
        }
        let scale = ChainScale::new(hi - lo)?;
        OpTable::from_fn(scale, |x, y| self.get(x + lo, y + lo) - lo)
    }
}

impl std::fmt::Debug for OpTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OpTable({}", self.scale)?;
        for row in self.rows() {
            write!(f, " {row:?}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for OpTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(n: usize) -> ChainScale {
        ChainScale::new(n).unwrap()
    }

    #[test]
    fn from_fn_is_symmetric() {
        let t = OpTable::from_fn(l(3), |x, y| x.min(y)).unwrap();
        assert_eq!(t.get(1, 3), 1);
        assert_eq!(t.get(3, 1), 1);
    }

    #[test]
    fn defects_are_reported() {
        let rows = vec![vec![0, 1], vec![0, 1]];
        assert_eq!(
            OpTable::defects(l(1), &rows),
            vec![TableDefect::Asymmetric { x: 0, y: 1, xy: 1, yx: 0 }]
        );
        let rows = vec![vec![0, 5], vec![5, 1]];
        assert_eq!(OpTable::defects(l(1), &rows).len(), 2);
        assert!(matches!(
            OpTable::defects(l(2), &rows)[0],
            TableDefect::RowCount { expected: 3, found: 2 }
        ));
        assert!(OpTable::from_rows(l(1), &rows).is_err());
    }

    #[test]
    fn restrict_shifts_and_checks_closure() {
        let max = OpTable::from_fn(l(4), |x, y| x.max(y)).unwrap();
        let r = max.restrict(2, 4).unwrap();
        assert_eq!(r.n(), 2);
        assert_eq!(r.get(0, 1), 1);
        assert!(max.restrict(0, 2).is_ok());
        let luk = OpTable::from_fn(l(4), |x, y| (x + y).min(4)).unwrap();
        assert!(matches!(luk.restrict(0, 2), Err(Error::RestrictionNotClosed { .. })));
    }
}
