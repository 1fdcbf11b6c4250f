//! Dense GF(2) matrices with word-packed rows, enough linear algebra for the
//! null-homotopy solver: reduced row echelon form and multi-rhs solving.

/// Row-major bit matrix over GF(2). Each row is a packed `u64` vector.
#[derive(Clone, Debug)]
pub struct BitMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Vec<u64>>,
}

fn words(cols: usize) -> usize {
    cols.div_ceil(64)
}

impl BitMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        BitMat { rows, cols, data: vec![vec![0; words(cols)] ; rows] }
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r][c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let mask = 1u64 << (c % 64);
        if v {
            self.data[r][c / 64] |= mask;
        } else {
            self.data[r][c / 64] &= !mask;
        }
    }

    fn xor_rows(&mut self, dst: usize, src: usize) {
        if dst == src {
            return;
        }
        let (lo, hi) = if dst < src { (dst, src) } else { (src, dst) };
        let (a, b) = self.data.split_at_mut(hi);
        let (dst_row, src_row) = if dst < src { (&mut a[lo], &b[0]) } else { (&mut b[0], &a[lo]) };
        for (d, s) in dst_row.iter_mut().zip(src_row.iter()) {
            *d ^= *s;
        }
    }
}

/// Solves `A y = r` for many right-hand sides at once.
///
/// `a_cols[j]` lists the nonzero row indices of column `j` of `A`; `rhs[k]`
/// lists the nonzero entries of the `k`-th right-hand side. Returns one
/// solution per rhs (free variables set to zero), or the index of the first
/// infeasible rhs.
pub fn solve_many(
    rows: usize,
    cols: usize,
    a_cols: &[Vec<usize>],
    rhs: &[Vec<usize>],
) -> Result<Vec<Vec<usize>>, usize> {
    assert_eq!(a_cols.len(), cols);
    let t = rhs.len();
    let mut m = BitMat::zero(rows, cols + t);
    for (j, col) in a_cols.iter().enumerate() {
        for &i in col {
            m.set(i, j, true);
        }
    }
    for (k, r) in rhs.iter().enumerate() {
        for &i in r {
            m.set(i, cols + k, true);
        }
    }

    // Forward elimination to reduced row echelon form on the A-part.
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; rows];
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| m.get(r, col)) else { continue };
        m.data.swap(row, p);
        for r in 0..rows {
            if r != row && m.get(r, col) {
                m.xor_rows(r, row);
            }
        }
        pivot_of_row[row] = Some(col);
        row += 1;
    }

    // Rows past the rank must have zero rhs entries, otherwise infeasible.
    for k in 0..t {
        for r in row..rows {
            if m.get(r, cols + k) {
                return Err(k);
            }
        }
    }

    let mut solutions = Vec::with_capacity(t);
    for k in 0..t {
        let mut y = Vec::new();
        for (r, pivot) in pivot_of_row.iter().enumerate().take(row) {
            if m.get(r, cols + k) {
                y.push(pivot.expect("pivot recorded"));
            }
        }
        y.sort_unstable();
        solutions.push(y);
    }
    Ok(solutions)
}
