//! Dense linear algebra over a prime field `F_p`.

pub const PRIMES: [u64; 2] = [32003, 65537];

/// Row-major matrix over `F_p`; entries are kept reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Mat::zeros(k, k);
        for i in 0..k {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_cols(rows: usize, cols: &[Vec<u64>]) -> Self {
        let mut m = Mat::zeros(rows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            for (r, &x) in col.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: u64) {
        self.data[r * self.cols + c] = x;
    }

    pub fn col(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

/// Arithmetic in `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Field {
    pub p: u64,
}

impl Field {
    pub fn new(p: u64) -> Self {
        Field { p }
    }

    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        let (mut base, mut e, mut acc) = (a, self.p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn matmul(&self, a: &Mat, b: &Mat) -> Mat {
        assert_eq!(a.cols, b.rows, "shape mismatch");
        let mut out = Mat::zeros(a.rows, b.cols);
        for i in 0..a.rows {
            for k in 0..a.cols {
                let x = a.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..b.cols {
                    let v = self.add(out.get(i, j), self.mul(x, b.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn matvec(&self, a: &Mat, v: &[u64]) -> Vec<u64> {
        (0..a.rows)
            .map(|i| (0..a.cols).fold(0, |acc, k| self.add(acc, self.mul(a.get(i, k), v[k]))))
            .collect()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&self, m: &mut Mat) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for c in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.get(r, c) != 0) else { continue };
            if pr != row {
                for k in 0..m.cols {
                    m.data.swap(pr * m.cols + k, row * m.cols + k);
                }
            }
            let inv = self.inv(m.get(row, c));
            for k in c..m.cols {
                let v = self.mul(m.get(row, k), inv);
                m.set(row, k, v);
            }
            for r in 0..m.rows {
                let f = m.get(r, c);
                if r != row && f != 0 {
                    for k in c..m.cols {
                        let v = self.sub(m.get(r, k), self.mul(f, m.get(row, k)));
                        m.set(r, k, v);
                    }
                }
            }
            pivots.push(c);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, m: &Mat) -> usize {
        let mut w = m.clone();
        self.rref(&mut w).len()
    }

    /// Basis of `{x : m x = 0}`.
    pub fn nullspace(&self, m: &Mat) -> Vec<Vec<u64>> {
        let mut w = m.clone();
        let pivots = self.rref(&mut w);
        let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0; m.cols];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.sub(0, w.get(r, f));
                }
                v
            })
            .collect()
    }

    /// Some `x` with `a x = b`.
    pub fn solve(&self, a: &Mat, b: &[u64]) -> Option<Vec<u64>> {
        let mut aug = Mat::zeros(a.rows, a.cols + 1);
        for r in 0..a.rows {
            for c in 0..a.cols {
                aug.set(r, c, a.get(r, c));
            }
            aug.set(r, a.cols, b[r]);
        }
        let pivots = self.rref(&mut aug);
        if pivots.contains(&a.cols) {
            return None;
        }
        let mut x = vec![0; a.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, a.cols);
        }
        Some(x)
    }

    /// Rank of a family of vectors of equal length.
    pub fn rank_of(&self, vecs: &[Vec<u64>], len: usize) -> usize {
        if vecs.is_empty() || len == 0 {
            return 0;
        }
        let mut m = Mat::zeros(vecs.len(), len);
        for (r, v) in vecs.iter().enumerate() {
            for (c, &x) in v.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        self.rank(&m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_and_solve() {
        let f = Field::new(PRIMES[0]);
        let m = Mat { rows: 2, cols: 3, data: vec![1, 2, 3, 2, 4, 6] };
        assert_eq!(f.rank(&m), 1);
        let ns = f.nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(f.matvec(&m, v).iter().all(|&x| x == 0));
        }
        let x = f.solve(&m, &[1, 2]).unwrap();
        assert_eq!(f.matvec(&m, &x), vec![1, 2]);
        assert!(f.solve(&m, &[1, 3]).is_none());
        assert_eq!(f.mul(f.inv(12345), 12345), 1);
    }
}
