//! First homology with the basis `a1, b1, ..., ag, bg` and ⟨a_i, b_i⟩ = 1.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Symplectic form ⟨x, y⟩.
pub fn form(x: &[i64], y: &[i64]) -> i64 {
    (0..x.len() / 2)
        .map(|i| x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i])
        .sum()
}

fn form_big(x: &[BigInt], y: &[BigInt]) -> BigInt {
    let mut s = BigInt::zero();
    for i in 0..x.len() / 2 {
        s += &x[2 * i] * &y[2 * i + 1] - &x[2 * i + 1] * &y[2 * i];
    }
    s
}

/// Sign normalization for unoriented classes: first nonzero entry positive.
pub fn normalize(v: &[i64]) -> Vec<i64> {
    match v.iter().find(|&&e| e != 0) {
        Some(&e) if e < 0 => v.iter().map(|e| -e).collect(),
        _ => v.to_vec(),
    }
}

/// Integer matrix acting on column vectors of H_1.
#[derive(Clone, PartialEq, Eq)]
pub struct SymplecticMatrix {
    dim: usize,
    m: Vec<BigInt>,
}

impl fmt::Debug for SymplecticMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl SymplecticMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut m = alloc::vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            m[i * dim + i] = BigInt::one();
        }
        SymplecticMatrix { dim, m }
    }

    /// The standard form J as a matrix.
    pub fn standard_form(genus: usize) -> Self {
        let dim = 2 * genus;
        let mut m = alloc::vec![BigInt::zero(); dim * dim];
        for i in 0..genus {
            m[(2 * i) * dim + 2 * i + 1] = BigInt::one();
            m[(2 * i + 1) * dim + 2 * i] = -BigInt::one();
        }
        SymplecticMatrix { dim, m }
    }

    /// x ↦ x + k⟨x, c⟩c.
    pub fn transvection(c: &[i64], k: i64) -> Self {
        let dim = c.len();
        let mut out = Self::identity(dim);
        for j in 0..dim {
            let mut e = alloc::vec![0i64; dim];
            e[j] = 1;
            let f = k * form(&e, c);
            if f != 0 {
                for (i, ci) in c.iter().enumerate() {
                    out.m[i * dim + j] += BigInt::from(f * ci);
                }
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.m[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.m.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.dim;
        let mut m = alloc::vec![BigInt::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = &self.m[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    m[i * d + j] += a * &other.m[k * d + j];
                }
            }
        }
        SymplecticMatrix { dim: d, m }
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let mut m = alloc::vec![BigInt::zero(); d * d];
        for i in 0..d {
            for j in 0..d {
                m[j * d + i] = self.m[i * d + j].clone();
            }
        }
        SymplecticMatrix { dim: d, m }
    }

    /// Inverse of a symplectic matrix: -J Mᵀ J.
    pub fn symplectic_inverse(&self) -> Self {
        let j = Self::standard_form(self.dim / 2);
        let mut r = j.mul(&self.transpose()).mul(&j);
        for e in &mut r.m {
            *e = -core::mem::take(e);
        }
        r
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        let d = self.dim;
        (0..d)
            .map(|i| {
                let mut s = BigInt::zero();
                for (j, vj) in v[..d].iter().enumerate() {
                    s += &self.m[i * d + j] * vj;
                }
                s
            })
            .collect()
    }

    pub fn apply_i64(&self, v: &[i64]) -> Vec<BigInt> {
        let b: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.apply(&b)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    /// MᵀJM = J.
    pub fn is_symplectic(&self) -> bool {
        let j = Self::standard_form(self.dim / 2);
        self.transpose().mul(&j).mul(self) == j
    }

    /// Does M act as the identity on ⟨c⟩^⊥/⟨c⟩, with M c = sign·c?
    pub fn trivial_on_quotient(&self, c: &[i64], sign: i64) -> bool {
        let d = self.dim;
        let cb: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
        let mc = self.apply(&cb);
        if mc.iter().zip(&cb).any(|(a, b)| *a != b * sign) {
            return false;
        }
        // Spanning set of c^⊥ over ℚ.
        let pairing: Vec<BigInt> = (0..d)
            .map(|j| {
                let mut e = alloc::vec![BigInt::zero(); d];
                e[j] = BigInt::one();
                form_big(&cb, &e)
            })
            .collect();
        let Some(p) = pairing.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        for k in 0..d {
            if k == p {
                continue;
            }
            let mut u = alloc::vec![BigInt::zero(); d];
            u[k] += &pairing[p];
            u[p] -= &pairing[k];
            let mu = self.apply(&u);
            let diff: Vec<BigInt> = mu.iter().zip(&u).map(|(a, b)| a - b).collect();
            if !parallel(&diff, &cb) {
                return false;
            }
        }
        true
    }
}

fn parallel(x: &[BigInt], c: &[BigInt]) -> bool {
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            if &x[i] * &c[j] != &x[j] * &c[i] {
                return false;
            }
        }
    }
    true
}

/// Largest absolute entry, for reporting growth.
pub fn max_abs(m: &SymplecticMatrix) -> BigInt {
    m.m.iter().map(|e| e.abs()).max().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_transvection() {
        let t = SymplecticMatrix::transvection(&[1, 0], 1);
        // b ↦ b + ⟨b, a⟩a = b - a.
        assert_eq!(t.apply_i64(&[0, 1]), alloc::vec![BigInt::from(-1), BigInt::from(1)]);
        assert!(t.is_symplectic());
        assert!(t.mul(&t.symplectic_inverse()).is_identity());
    }

    #[test]
    fn quotient_test() {
        let c = [0, 0, 1, 0];
        assert!(SymplecticMatrix::transvection(&c, 3).trivial_on_quotient(&c, 1));
        assert!(!SymplecticMatrix::transvection(&[1, 0, 0, 0], 1).trivial_on_quotient(&c, 1));
    }
}
