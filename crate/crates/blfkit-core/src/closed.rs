//! Closed-surface answers from punctured ones.
//!
//! Filling the puncture back in identifies punctured classes that differ by
//! pushing the puncture across a strand. If two simple curves are in minimal
//! position in the punctured surface but not in the closed one, an innermost
//! bigon holds the puncture, and pushing it out across one side drops the
//! punctured count by at least two. So greedy pushing reaches the closed
//! minimum, and never undershoots it.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::intersect::{punctured_intersection, same_cyclic, self_intersection};
use crate::surface::Surface;
use crate::word::{cyclic_reduce, exponent_sums, invert, least_rotation, rotate, Letter};

/// Every way of pushing the puncture across `x` (and then some): insert a
/// loop around the puncture, starting at any corner, at any vertex visit.
pub fn push_candidates(s: &Surface, x: &[Letter]) -> Vec<Vec<Letter>> {
    let face = s.face();
    let n = face.len();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in 0..n {
        let lp = rotate(face, r);
        for lp in [lp.clone(), invert(&lp)] {
            for i in 0..x.len().max(1) {
                let mut w = Vec::with_capacity(x.len() + n);
                w.extend_from_slice(&x[..i.min(x.len())]);
                w.extend_from_slice(&lp);
                w.extend_from_slice(&x[i.min(x.len())..]);
                let w = cyclic_reduce(&w);
                if w.is_empty() {
                    continue;
                }
                if seen.insert(least_rotation(&w)) {
                    out.push(w);
                }
            }
        }
    }
    out
}

/// Push `x` until it meets `y` minimally in the closed surface. Returns the
/// pushed word (simple, closed-isotopic to `x`) and the closed intersection number.
pub fn push_off(s: &Surface, x: &[Letter], y: &[Letter]) -> (Vec<Letter>, usize) {
    push_off_all(s, x, &[y])
}

fn det(x: &[Letter], y: &[Letter]) -> i64 {
    let hx = exponent_sums(x, 2);
    let hy = exponent_sums(y, 2);
    hx[0] * hy[1] - hx[1] * hy[0]
}

/// Geometric intersection number on the closed surface.
pub fn closed_intersection(s: &Surface, x: &[Letter], y: &[Letter]) -> usize {
    if s.genus() == 1 {
        return det(x, y).unsigned_abs() as usize;
    }
    push_off(s, x, y).1
}

/// Isotopy on the closed surface, with or without orientation.
pub fn closed_isotopic(s: &Surface, x: &[Letter], y: &[Letter], oriented: bool) -> bool {
    let hx = exponent_sums(x, s.rank());
    let hy = exponent_sums(y, s.rank());
    let neg: Vec<i64> = hy.iter().map(|v| -v).collect();
    let same_h = hx == hy;
    if !(same_h || (!oriented && hx == neg)) {
        return false;
    }
    if s.genus() == 1 {
        // Essential simple curves on the torus are determined by homology;
        // homology was compared above.
        return true;
    }
    let eq = |a: &[Letter]| {
        if oriented {
            a.len() == y.len() && least_rotation(a) == least_rotation(y)
        } else {
            same_cyclic(a, y)
        }
    };
    if eq(x) {
        return true;
    }
    let (cur, val) = push_off(s, x, y);
    if val > 0 {
        return false;
    }
    eq(&cur) || push_candidates(s, &cur).iter().any(|c| eq(c))
}

/// Push `x` until it meets the disjoint curves `ys` minimally, together.
/// Bigons with a multicurve behave as with a single curve, so the greedy
/// descent on the total count reaches the closed minimum.
pub fn push_off_all(s: &Surface, x: &[Letter], ys: &[&[Letter]]) -> (Vec<Letter>, usize) {
    let total = |w: &[Letter]| ys.iter().map(|y| punctured_intersection(s, w, y)).sum::<usize>();
    let mut cur = x.to_vec();
    let mut val = total(&cur);
    'outer: while val > 0 {
        for cand in push_candidates(s, &cur) {
            let v = total(&cand);
            if v < val && self_intersection(s, &cand) == 0 {
                cur = cand;
                val = v;
                continue 'outer;
            }
        }
        break;
    }
    (cur, val)
}

/// Is `k` the far side of an annulus around `c` that holds the puncture?
/// Both are simple, they are disjoint, closed isotopic and not punctured isotopic.
pub fn is_collar(s: &Surface, c: &[Letter], k: &[Letter]) -> bool {
    s.genus() > 1
        && !same_cyclic(k, c)
        && punctured_intersection(s, k, c) == 0
        && self_intersection(s, k) == 0
        && closed_isotopic(s, k, c, false)
}

/// The collars of `c` reached by one push across the puncture.
pub fn collars(s: &Surface, c: &[Letter]) -> Vec<Vec<Letter>> {
    push_candidates(s, c)
        .into_iter()
        .filter(|k| is_collar(s, c, k))
        .collect()
}

/// A simple word that bounds a disc in the closed surface: empty or the puncture loop.
pub fn is_closed_trivial(s: &Surface, x: &[Letter]) -> bool {
    x.is_empty() || same_cyclic(x, s.face())
}

/// One pass of Dehn's algorithm on a cyclic word: replace more than half of a
/// cyclic rotation of the face relator by the inverse of the rest.
fn dehn_step(s: &Surface, w: &[Letter]) -> Option<Vec<Letter>> {
    let n = s.face().len();
    let m = w.len();
    if m == 0 {
        return None;
    }
    let face = s.face();
    let rels: Vec<Vec<Letter>> = (0..n)
        .flat_map(|r| {
            let f = rotate(face, r);
            let fi = invert(&f);
            [f, fi]
        })
        .collect();
    for rel in &rels {
        for start in 0..m {
            let mut k = 0;
            while k < n && k < m && w[(start + k) % m] == rel[k] {
                k += 1;
            }
            if 2 * k > n {
                // w = (prefix rel[..k]) rest; rel[..k] = (rel[k..])^{-1}.
                let mut out = invert(&rel[k..]);
                for j in k..m {
                    out.push(w[(start + j) % m]);
                }
                return Some(cyclic_reduce(&out));
            }
        }
    }
    None
}

/// A simple punctured representative of the closed homotopy class of `w`, if
/// that class holds a simple curve. Returns the empty word for the trivial class.
///
/// Dehn reduction shortens the word, then punctured self-crossings are removed
/// by pushing the puncture: a curve that is simple on the closed surface but
/// not on the punctured one has an immersed monogon or bigon around the
/// puncture, and pushing out of it lowers the count.
pub fn simple_representative(s: &Surface, w: &[Letter]) -> Option<Vec<Letter>> {
    let mut cur = cyclic_reduce(w);
    while let Some(next) = dehn_step(s, &cur) {
        cur = next;
    }
    if cur.is_empty() || same_cyclic(&cur, s.face()) {
        return Some(Vec::new());
    }
    let mut val = self_intersection(s, &cur);
    'outer: while val > 0 {
        for cand in push_candidates(s, &cur) {
            let v = self_intersection(s, &cand);
            if v < val {
                cur = cand;
                val = v;
                continue 'outer;
            }
        }
        return None;
    }
    Some(cur)
}
