//! Dense exact linear algebra over the prime field `F_p`.
//!
//! Scalars are canonical representatives in `[0, p)` stored as `u64`; the
//! modulus is kept below 2^32 so products never overflow.

/// Arithmetic context for `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        assert!(p < (1 << 32), "modulus must fit in 32 bits");
        Self { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, a: u64) -> u64 {
        a % self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse for prime `p` via Fermat.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0, "zero has no inverse");
        self.pow(a, self.p - 2)
    }
}

/// Row-major dense matrix over `F_p`. Vectors are rows and act on the right:
/// `v -> v * M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u64>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            data.extend(row);
        }
        Self { rows: nrows, cols: ncols, data }
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, field: &PrimeField, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = FpMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = field.add(out.get(i, j), field.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, field: &PrimeField, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| field.add(a, b))
            .collect();
        FpMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, field: &PrimeField, c: u64) -> FpMatrix {
        let data = self.data.iter().map(|&a| field.mul(a, c)).collect();
        FpMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&a| a == 0)
    }

    /// `v * M` for a row vector `v`.
    pub fn apply_row(&self, field: &PrimeField, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0u64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let row = self.row(k);
            for (j, &m) in row.iter().enumerate() {
                out[j] = field.add(out[j], field.mul(a, m));
            }
        }
        out
    }
}

/// An incrementally maintained subspace of row vectors, kept in reduced row
/// echelon form with rows ordered by pivot column.
#[derive(Debug, Clone)]
pub struct RowSpace {
    field: PrimeField,
    ncols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        Self { field, ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Eliminates the pivot coordinates of `v` in place.
    pub fn reduce(&self, v: &mut [u64]) {
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(row) {
                *x = self.field.sub(*x, self.field.mul(c, y));
            }
        }
    }

    /// Reduces `v` against the basis and inserts the remainder if nonzero.
    /// Returns true when the rank grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        self.reduce(&mut v);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(v[piv]);
        for x in v.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        // Back-substitute into the existing rows to keep full RREF.
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(&v) {
                *x = self.field.sub(*x, self.field.mul(c, y));
            }
        }
        let at = self.pivots.partition_point(|&q| q < piv);
        self.pivots.insert(at, piv);
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is outside the
    /// span. Because the basis is fully reduced, the coordinate on row `i` is
    /// just `v[pivots[i]]`.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        let coords: Vec<u64> = self.pivots.iter().map(|&p| v[p]).collect();
        let mut w = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&coords) {
            if c == 0 {
                continue;
            }
            for (x, &y) in w.iter_mut().zip(row) {
                *x = self.field.sub(*x, self.field.mul(c, y));
            }
        }
        if w.iter().all(|&x| x == 0) {
            Some(coords)
        } else {
            None
        }
    }
}

/// Basis of `{v : v * M = 0}` (row vectors killed by right action of `M`).
pub fn row_kernel(field: &PrimeField, m: &FpMatrix) -> Vec<Vec<u64>> {
    // v * M = 0 iff M^T v^T = 0; row-reduce M^T as equations in the
    // coordinates of v and read the kernel off the free columns.
    let t = m.transpose();
    let nvars = m.rows;
    let mut equations = RowSpace::new(*field, nvars);
    for i in 0..t.rows {
        equations.insert(t.row(i).to_vec());
    }
    let pivot_set: std::collections::HashSet<usize> =
        equations.pivots().iter().copied().collect();
    let mut kernel = Vec::new();
    for free in 0..nvars {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; nvars];
        v[free] = 1;
        for (row, &p) in equations.rows().iter().zip(equations.pivots()) {
            // x_p = -row[free] when x_free = 1 and the other free vars are 0.
            v[p] = field.neg(row[free]);
        }
        kernel.push(v);
    }
    kernel
}
