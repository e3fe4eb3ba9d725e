//! The model surface.
//!
//! Σ_g is the 4g-gon with boundary word `a1 b1 A1 B1 ... ag bg Ag Bg`. Removing
//! the centre of the polygon leaves a surface that retracts onto a ribbon graph
//! with one vertex and 2g loops; curves are drawn in that ribbon graph and the
//! removed point is the only thing separating punctured isotopy from closed isotopy.

use alloc::vec::Vec;

use crate::word::{inv, letter_a, letter_b, Letter};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surface {
    genus: usize,
    /// Boundary word of the polygon (the face of the ribbon graph).
    face: Vec<Letter>,
    /// Position of each half-edge in the counterclockwise order at the vertex.
    ccw_pos: Vec<u8>,
}

impl Surface {
    pub fn new(genus: usize) -> Surface {
        assert!((1..=60).contains(&genus), "genus out of range");
        let mut face = Vec::with_capacity(4 * genus);
        for i in 1..=genus {
            let (a, b) = (letter_a(i), letter_b(i));
            face.extend_from_slice(&[a, b, inv(a), inv(b)]);
        }
        // Walking the face with the face on the left, one leaves along x_{k+1}
        // right after arriving along x_k; so x_k^{-1} is the counterclockwise
        // successor of x_{k+1}.
        let n = face.len();
        let mut succ = alloc::vec![0u8; n];
        for k in 0..n {
            let next = face[(k + 1) % n];
            succ[next as usize] = inv(face[k]);
        }
        let mut ccw_pos = alloc::vec![u8::MAX; n];
        let mut h = face[0];
        for p in 0..n {
            assert_eq!(ccw_pos[h as usize], u8::MAX, "rotation is not a single cycle");
            ccw_pos[h as usize] = p as u8;
            h = succ[h as usize];
        }
        Surface {
            genus,
            face,
            ccw_pos,
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Number of free generators, 2g.
    pub fn rank(&self) -> usize {
        2 * self.genus
    }

    pub fn face(&self) -> &[Letter] {
        &self.face
    }

    /// Counterclockwise angular offset from half-edge `from` to `to`, in `0..4g`.
    #[inline]
    pub fn ccw(&self, from: Letter, to: Letter) -> usize {
        let n = self.face.len();
        (self.ccw_pos[to as usize] as usize + n - self.ccw_pos[from as usize] as usize) % n
    }

    /// Euler characteristic of the closed surface.
    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64
    }

    /// Cell counts of the polygon model: one vertex, 2g edges, one face.
    pub fn cell_counts(&self) -> (usize, usize, usize) {
        (1, 2 * self.genus, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_rotation() {
        let s = Surface::new(1);
        let (a, b) = (letter_a(1), letter_b(1));
        assert_eq!(s.ccw(a, b), 1);
        assert_eq!(s.ccw(a, inv(a)), 2);
        assert_eq!(s.ccw(a, inv(b)), 3);
    }

    #[test]
    fn euler() {
        for g in 1..6 {
            let s = Surface::new(g);
            let (v, e, f) = s.cell_counts();
            assert_eq!(v as i64 - e as i64 + f as i64, s.euler_characteristic());
        }
    }
}
