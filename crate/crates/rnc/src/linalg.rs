use crate::poly::Coeff;
use num_traits::{One, Zero};

/// Incrementally maintained reduced row-echelon span over the
/// rationals. Row indices are abstract coordinates (here: positions in
/// a fixed monomial basis of a graded piece).
#[derive(Debug, Clone)]
pub struct RowSpace {
    ncols: usize,
    rows: Vec<Vec<Coeff>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(ncols: usize) -> Self {
        RowSpace {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row` against the span in place, returning the residual.
    pub fn reduce(&self, mut row: Vec<Coeff>) -> Vec<Coeff> {
        assert_eq!(row.len(), self.ncols);
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(r) {
                    *x -= &f * y;
                }
            }
        }
        row
    }

    /// Insert a row; returns the reduced residual if it enlarged the
    /// span, None if it was already contained.
    pub fn insert(&mut self, row: Vec<Coeff>) -> Option<Vec<Coeff>> {
        let mut row = self.reduce(row);
        let pivot = row.iter().position(|c| !c.is_zero())?;
        let inv = row[pivot].recip();
        if !inv.is_one() {
            for x in row.iter_mut() {
                *x = &*x * &inv;
            }
        }
        // back-substitute to keep the basis reduced
        for r in self.rows.iter_mut() {
            if !r[pivot].is_zero() {
                let f = r[pivot].clone();
                for (x, y) in r.iter_mut().zip(&row) {
                    *x -= &f * y;
                }
            }
        }
        // keep rows ordered by pivot for determinism
        let pos = self
            .pivots
            .iter()
            .position(|&q| q > pivot)
            .unwrap_or(self.pivots.len());
        self.rows.insert(pos, row.clone());
        self.pivots.insert(pos, pivot);
        Some(row)
    }

    pub fn contains(&self, row: Vec<Coeff>) -> bool {
        self.reduce(row).iter().all(|c| c.is_zero())
    }
}

/// Rank of an arbitrary list of rational rows.
pub fn rank(rows: impl IntoIterator<Item = Vec<Coeff>>, ncols: usize) -> usize {
    let mut space = RowSpace::new(ncols);
    for row in rows {
        space.insert(row);
    }
    space.rank()
}
