//! `R' = K[X,Y]/(Y(X-Y))` truncated at `X^t = 0`.
//!
//! Basis `X^m` and `X^m Y` for `m < t`. The relation `Y² = XY` gives
//! `X^a Y · X^b Y = X^{a+b+1} Y`.

/// Basis monomial: `X^m` when `y` is false, `X^m Y` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub m: usize,
    pub y: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct TruncatedRing {
    pub t: usize,
}

impl TruncatedRing {
    pub fn new(t: usize) -> Self {
        TruncatedRing { t }
    }

    pub fn dim(&self) -> usize {
        2 * self.t
    }

    pub fn index(&self, b: Monomial) -> usize {
        b.m + if b.y { self.t } else { 0 }
    }

    pub fn basis(&self) -> Vec<Monomial> {
        (0..self.t)
            .map(|m| Monomial { m, y: false })
            .chain((0..self.t).map(|m| Monomial { m, y: true }))
            .collect()
    }

    /// Product of two basis monomials, `None` when it vanishes in the
    /// truncation.
    pub fn mul_basis(&self, a: Monomial, b: Monomial) -> Option<Monomial> {
        let (m, y) = match (a.y, b.y) {
            (false, false) => (a.m + b.m, false),
            (true, false) | (false, true) => (a.m + b.m, true),
            (true, true) => (a.m + b.m + 1, true),
        };
        (m < self.t).then_some(Monomial { m, y })
    }

    /// Product of coefficient vectors (integer coefficients).
    pub fn mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let basis = self.basis();
        let mut out = vec![0; self.dim()];
        for (x, &ca) in basis.iter().zip(a) {
            if ca == 0 {
                continue;
            }
            for (y, &cb) in basis.iter().zip(b) {
                if cb == 0 {
                    continue;
                }
                if let Some(z) = self.mul_basis(*x, *y) {
                    out[self.index(z)] += ca * cb;
                }
            }
        }
        out
    }

    /// Associativity and commutativity on all basis triples, and
    /// `Y(X - Y) = 0`.
    pub fn check_structure(&self) -> bool {
        let basis = self.basis();
        let m = |a: Option<Monomial>, b: Monomial| a.and_then(|a| self.mul_basis(a, b));
        let assoc = basis.iter().all(|&a| {
            basis.iter().all(|&b| {
                basis.iter().all(|&c| {
                    let left = m(self.mul_basis(a, b), c);
                    let right = self.mul_basis(b, c).and_then(|bc| self.mul_basis(a, bc));
                    left == right
                })
            })
        });
        let comm = basis.iter().all(|&a| basis.iter().all(|&b| self.mul_basis(a, b) == self.mul_basis(b, a)));
        let unit = |mono: Monomial| {
            let mut v = vec![0; self.dim()];
            v[self.index(mono)] = 1;
            v
        };
        let y = unit(Monomial { m: 0, y: true });
        let x_minus_y: Vec<i64> =
            unit(Monomial { m: 1, y: false }).iter().zip(&y).map(|(a, b)| a - b).collect();
        let relation = self.mul(&y, &x_minus_y).iter().all(|&c| c == 0);
        assoc && comm && relation
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structure() {
        for t in 1..8 {
            assert!(TruncatedRing::new(t).check_structure());
        }
    }
}
