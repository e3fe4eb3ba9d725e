//! Dehn twists on cyclic words.
//!
//! `t_c` is right-handed: a strand crossing `c` turns left onto `c`, runs once
//! around it and carries on. On words this inserts a rotation of `c^{±1}` at
//! every crossing, in the order the crossings occur along the target.

use alloc::vec::Vec;

use crate::intersect::{compare_rays, crossings, Crossing, Ray};
use crate::surface::Surface;
use crate::word::{cyclic_reduce, inv, invert, rotate, Letter};

/// `t_c^k(x)` as a reduced cyclic word (not rotated to canonical form).
pub fn twist(s: &Surface, x: &[Letter], c: &[Letter], k: i64) -> Vec<Letter> {
    if k == 0 {
        return x.to_vec();
    }
    let mut cr = crossings(s, x, c);
    if cr.is_empty() {
        return x.to_vec();
    }
    let ci = invert(c);
    let limit = (2 * (x.len() + c.len()) + 4) as isize;
    cr.sort_by(|p, q| {
        p.visit.cmp(&q.visit).then_with(|| {
            let back = inv(crate::intersect::at(x, p.visit as isize - 1));
            compare_rays(s, back, &Ray::new(p, c, &ci), &Ray::new(q, c, &ci), limit)
        })
    });
    let mut out = Vec::with_capacity(x.len() + cr.len() * c.len() * k.unsigned_abs() as usize);
    let mut next = 0;
    for (v, &l) in x.iter().enumerate() {
        while next < cr.len() && cr[next].visit == v {
            push_loop(&mut out, &cr[next], c, &ci, k);
            next += 1;
        }
        out.push(l);
    }
    cyclic_reduce(&out)
}

fn push_loop(out: &mut Vec<Letter>, cr: &Crossing, c: &[Letter], ci: &[Letter], k: i64) {
    // The loop runs along the word the crossing was found against, starting
    // at the shared vertex visit; its direction follows the local sign.
    let w = if cr.other_inverted { ci } else { c };
    let sign = if cr.other_inverted { -cr.sign } else { cr.sign } as i64;
    let lp = rotate(w, cr.other_pos);
    let e = sign * k;
    let lp = if e > 0 { lp } else { invert(&lp) };
    for _ in 0..e.unsigned_abs() {
        out.extend_from_slice(&lp);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intersect::{algebraic_intersection, punctured_intersection, self_intersection};
    use crate::word::{exponent_sums, letter_a, letter_b};

    #[test]
    fn twist_dual_pair() {
        let s = Surface::new(2);
        let a = [letter_a(1)];
        let b = [letter_b(1)];
        let t = twist(&s, &b, &a, 1);
        assert_eq!(t.len(), 2);
        assert_eq!(self_intersection(&s, &t), 0);
        // ⟨b, a⟩ = -1, so t_a(b) = b - a in homology.
        assert_eq!(exponent_sums(&t, 4), alloc::vec![-1, 1, 0, 0]);
        assert_eq!(twist(&s, &t, &a, -1).len(), 1);
        assert_eq!(punctured_intersection(&s, &twist(&s, &b, &a, 3), &b), 3);
    }

    #[test]
    fn homology_transvection() {
        let s = Surface::new(2);
        let a = [letter_a(1)];
        let b = [letter_b(1)];
        let x = twist(&s, &twist(&s, &b, &a, 2), &b, -1);
        let y = [letter_a(2), letter_b(1), inv(letter_a(1))];
        let t = twist(&s, &y, &x, 1);
        let hx = exponent_sums(&x, 4);
        let hy = exponent_sums(&y, 4);
        let k = algebraic_intersection(&s, &y, &x);
        let ht = exponent_sums(&t, 4);
        for i in 0..4 {
            assert_eq!(ht[i], hy[i] + k * hx[i]);
        }
    }
}
