//! Dense linear algebra over a prime field `F_p`.

use crate::arith::{inv_mod, mul_mod, pow_mod};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

pub type Matrix = Vec<Vec<u64>>;

impl PrimeField {
    pub fn new(p: u64) -> Self {
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.p <= u64::from(u32::MAX) {
            a * b % self.p
        } else {
            mul_mod(a, b, self.p)
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn inv(&self, a: u64) -> u64 {
        inv_mod(a, self.p).expect("inverse of zero in prime field")
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    pub fn reduce(&self, a: u64) -> u64 {
        a % self.p
    }

    /// Reduces the rows in place to reduced row echelon form; returns the
    /// pivot columns.
    pub fn rref(&self, m: &mut Matrix) -> Vec<usize> {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, pr);
            let inv = self.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in c..cols {
                        let t = self.mul(f, m[r][j]);
                        m[i][j] = self.sub(m[i][j], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        pivots
    }

    /// Basis of `{x : A x = 0}`.
    pub fn nullspace(&self, a: &Matrix) -> Vec<Vec<u64>> {
        let cols = a.first().map_or(0, Vec::len);
        let mut m = a.clone();
        let pivots = self.rref(&mut m);
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; cols];
                v[f] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.neg(m[row][f]);
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial `det(xI − A)`, coefficients from the constant
    /// term upwards. Uses a Hessenberg reduction followed by the standard
    /// recurrence on leading principal minors.
    pub fn charpoly(&self, a: &Matrix) -> Vec<u64> {
        let n = a.len();
        let mut h = a.clone();
        for j in 0..n.saturating_sub(2) {
            let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else {
                continue;
            };
            if i != j + 1 {
                h.swap(i, j + 1);
                for row in h.iter_mut() {
                    row.swap(i, j + 1);
                }
            }
            let inv = self.inv(h[j + 1][j]);
            for k in j + 2..n {
                let u = self.mul(h[k][j], inv);
                if u == 0 {
                    continue;
                }
                for c in 0..n {
                    let t = self.mul(u, h[j + 1][c]);
                    h[k][c] = self.sub(h[k][c], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(u, row[k]);
                    row[j + 1] = self.add(row[j + 1], t);
                }
            }
        }
        // polys[m] = charpoly of the leading m×m block
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 1..=n {
            let prev = &polys[m - 1];
            let mut next = vec![0u64; m + 1];
            let diag = h[m - 1][m - 1];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = self.add(next[d + 1], c);
                next[d] = self.sub(next[d], self.mul(diag, c));
            }
            let mut t = 1u64;
            for i in 1..m {
                t = self.mul(t, h[m - i][m - i - 1]);
                let coef = self.mul(t, h[m - i - 1][m - 1]);
                if coef == 0 {
                    continue;
                }
                for (d, &c) in polys[m - i - 1].iter().enumerate() {
                    next[d] = self.sub(next[d], self.mul(coef, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    pub fn eval(&self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Distinct roots in `F_p`, ascending. Scans the field and deflates each
    /// root found, stopping once the remaining factor has no roots left to
    /// account for.
    pub fn roots(&self, poly: &[u64]) -> Vec<u64> {
        let mut f: Vec<u64> = poly.to_vec();
        while f.len() > 1 && *f.last().unwrap() == 0 {
            f.pop();
        }
        let mut roots = Vec::new();
        let mut x = 0;
        while f.len() > 1 && x < self.p {
            if self.eval(&f, x) == 0 {
                roots.push(x);
                while f.len() > 1 && self.eval(&f, x) == 0 {
                    f = self.deflate(&f, x);
                }
            }
            x += 1;
        }
        roots
    }

    /// `f / (x − r)` for a root `r` of `f`.
    fn deflate(&self, f: &[u64], r: u64) -> Vec<u64> {
        let n = f.len() - 1;
        let mut q = vec![0u64; n];
        let mut carry = 0;
        for d in (0..n).rev() {
            carry = self.add(f[d + 1], self.mul(carry, r));
            q[d] = carry;
        }
        q
    }

    pub fn mat_vec(&self, a: &Matrix, v: &[u64]) -> Vec<u64> {
        a.iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
            })
            .collect()
    }

    pub fn determinant(&self, a: &Matrix) -> u64 {
        let n = a.len();
        let mut m = a.clone();
        let mut det = 1u64;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| m[i][c] != 0) else {
                return 0;
            };
            if pr != c {
                m.swap(pr, c);
                det = self.neg(det);
            }
            det = self.mul(det, m[c][c]);
            let inv = self.inv(m[c][c]);
            for i in c + 1..n {
                let f = self.mul(m[i][c], inv);
                if f == 0 {
                    continue;
                }
                for j in c..n {
                    let t = self.mul(f, m[c][j]);
                    m[i][j] = self.sub(m[i][j], t);
                }
            }
        }
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const P: u64 = 101;

    proptest! {
        #[test]
        fn charpoly_matches_determinant(entries in proptest::collection::vec(0u64..P, 25), xs in proptest::collection::vec(0u64..P, 4)) {
            let f = PrimeField::new(P);
            let a: Matrix = entries.chunks(5).map(<[u64]>::to_vec).collect();
            let cp = f.charpoly(&a);
            prop_assert_eq!(cp.len(), 6);
            prop_assert_eq!(cp[5], 1);
            for x in xs {
                let shifted: Matrix = (0..5).map(|i| (0..5).map(|j| {
                    let d = if i == j { x } else { 0 };
                    f.sub(d, a[i][j])
                }).collect()).collect();
                prop_assert_eq!(f.eval(&cp, x), f.determinant(&shifted));
            }
        }

        #[test]
        fn nullspace_vectors_are_annihilated(entries in proptest::collection::vec(0u64..7, 12)) {
            let f = PrimeField::new(7);
            let a: Matrix = entries.chunks(4).map(<[u64]>::to_vec).collect();
            let ns = f.nullspace(&a);
            let mut m = a.clone();
            let rank = f.rref(&mut m).len();
            prop_assert_eq!(ns.len() + rank, 4);
            for v in ns {
                prop_assert!(f.mat_vec(&a, &v).iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn roots_of_split_polynomial() {
        let f = PrimeField::new(P);
        // (x-3)^2 (x-7) (x-100)
        let mut poly = vec![1u64];
        for r in [3, 3, 7, 100] {
            let mut next = vec![0u64; poly.len() + 1];
            for (d, &c) in poly.iter().enumerate() {
                next[d + 1] = f.add(next[d + 1], c);
                next[d] = f.sub(next[d], f.mul(r, c));
            }
            poly = next;
        }
        assert_eq!(f.roots(&poly), vec![3, 7, 100]);
    }
}
