use std::collections::HashMap;

use super::IdealHandle;
use crate::error::{Error, Result};
use crate::ringcore::{same_ring, Polynomial, Ring};

/// A rectangular matrix of polynomials, stored row-major.
#[derive(Debug, Clone)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::InvalidInput("matrix rows have different lengths".into()));
            }
            for e in row {
                if !same_ring(e.ring(), ring) {
                    return Err(Error::ContextMismatch);
                }
                entries.push(e);
            }
        }
        Ok(PolyMatrix { ring: ring.clone(), rows: nrows, cols, entries })
    }

    /// An empty matrix with the given shape (one side must be zero).
    pub fn empty(ring: &Ring, rows: usize, cols: usize) -> Self {
        assert!(rows == 0 || cols == 0);
        PolyMatrix { ring: ring.clone(), rows, cols, entries: Vec::new() }
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(ring: &Ring, rows: usize, columns: &[Vec<Polynomial>]) -> Result<Self> {
        if columns.is_empty() {
            return Ok(Self::empty(ring, rows, 0));
        }
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::InvalidInput("column length does not match row count".into()));
        }
        let grid = (0..rows).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
        Self::new(ring, grid)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    /// The matrix with row `i` removed.
    pub fn delete_row(&self, i: usize) -> PolyMatrix {
        assert!(i < self.rows);
        let entries = (0..self.rows)
            .filter(|&r| r != i)
            .flat_map(|r| self.entries[r * self.cols..(r + 1) * self.cols].iter().cloned())
            .collect();
        PolyMatrix { ring: self.ring.clone(), rows: self.rows - 1, cols: self.cols, entries }
    }
}

/// Laplace expansion along the first listed row, memoized on (rows, cols).
struct DetCache<'a> {
    m: &'a PolyMatrix,
    memo: HashMap<(Vec<usize>, Vec<usize>), Polynomial>,
}

impl DetCache<'_> {
    fn det(&mut self, rows: &[usize], cols: &[usize]) -> Polynomial {
        debug_assert_eq!(rows.len(), cols.len());
        match rows.len() {
            0 => return Polynomial::one(&self.m.ring),
            1 => return self.m.get(rows[0], cols[0]).clone(),
            _ => {}
        }
        let key = (rows.to_vec(), cols.to_vec());
        if let Some(d) = self.memo.get(&key) {
            return d.clone();
        }
        let mut acc = Polynomial::zero(&self.m.ring);
        for (k, &c) in cols.iter().enumerate() {
            let entry = self.m.get(rows[0], c);
            if entry.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let sub = self.det(&rows[1..], &sub_cols);
            let term = entry.mul(&sub);
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            if n - i < k - current.len() {
                break;
            }
            current.push(i);
            go(i + 1, n, k, current, out);
            current.pop();
        }
    }
    go(0, n, k, &mut current, &mut out);
    out
}

/// Ideal of all `k x k` minors. `k = 0` gives the unit ideal; `k` larger than
/// either dimension gives the zero ideal.
pub fn minors_ideal(m: &PolyMatrix, k: usize) -> IdealHandle {
    if k == 0 {
        return IdealHandle::unit(&m.ring);
    }
    if k > m.rows.min(m.cols) {
        return IdealHandle::zero(&m.ring);
    }
    let mut cache = DetCache { m, memo: HashMap::new() };
    let row_sets = combinations(m.rows, k);
    let col_sets = combinations(m.cols, k);
    let mut gens: Vec<Polynomial> = Vec::new();
    for rows in &row_sets {
        for cols in &col_sets {
            let d = cache.det(rows, cols);
            if d.is_unit() {
                return IdealHandle::unit(&m.ring);
            }
            if !d.is_zero() && !gens.contains(&d) {
                gens.push(d);
            }
        }
    }
    IdealHandle::from_parts(&m.ring, gens, None)
}
