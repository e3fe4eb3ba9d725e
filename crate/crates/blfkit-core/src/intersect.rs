//! Crossings between cyclic words drawn in the ribbon graph.
//!
//! Two reduced cyclic words are in minimal position in the punctured surface
//! once drawn in the bands of the ribbon graph. Each maximal common stretch
//! (possibly a single vertex visit) is either a crossing or not, decided by the
//! side each strand enters and leaves on.

use alloc::vec::Vec;

use crate::surface::Surface;
use crate::word::{inv, invert, least_rotation, Letter};

#[inline]
pub(crate) fn at(w: &[Letter], i: isize) -> Letter {
    let n = w.len() as isize;
    w[i.rem_euclid(n) as usize]
}

/// One transverse crossing of `x` with `y`.
///
/// The crossing strand of `y` leaves `x` to the left along a ray: forward along
/// the other word from `other_pos`, or backward from it. `visit` is the vertex
/// visit of `x` (between `x[visit-1]` and `x[visit]`) where that ray departs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub visit: usize,
    pub other_inverted: bool,
    pub other_pos: usize,
    pub forward: bool,
    /// +1 when `y` crosses `x` from its right to its left.
    pub sign: i8,
}

/// Same curve up to orientation (as punctured classes).
pub fn same_cyclic(x: &[Letter], y: &[Letter]) -> bool {
    if x.len() != y.len() {
        return false;
    }
    let cx = least_rotation(x);
    cx == least_rotation(y) || cx == least_rotation(&invert(y))
}

/// Crossings of `x` with the strands of `w`.
///
/// A maximal common stretch starting at visits i, j (same letter out, different
/// letters in) is a crossing when the strands swap sides along it. The side at
/// the start comes from the incoming half-edges; the side at the end is the
/// order of the forward continuations, which is read off rotation ranks of the
/// turn sequences. Visits with four distinct half-edges cross according to the
/// half-edge types alone.
fn enumerate(
    s: &Surface,
    x: &[Letter],
    w: &[Letter],
    inverted: bool,
    diag: bool,
    out: &mut Vec<Crossing>,
) {
    let m = x.len();
    let n = w.len();
    let ranks = rotation_ranks(&[turns(s, x), turns(s, w)]);
    let (rx, rw) = (&ranks[0], &ranks[1]);
    let he = 2 * s.rank();
    // Visits by (incoming, outgoing) half-edge.
    let by_type = |v: &[Letter]| {
        let mut t: Vec<Vec<usize>> = alloc::vec![Vec::new(); he * he];
        for i in 0..v.len() {
            let h = inv(at(v, i as isize - 1));
            t[h as usize * he + v[i] as usize].push(i);
        }
        t
    };
    let (tx, tw) = (by_type(x), by_type(w));
    let skip = |i: usize, j: usize| diag && i == j;
    for hx in 0..he as Letter {
        for ox in 0..he as Letter {
            let xs = &tx[hx as usize * he + ox as usize];
            if xs.is_empty() {
                continue;
            }
            let span = s.ccw(ox, hx);
            let on_left = |h: Letter| {
                let d = s.ccw(ox, h);
                d > 0 && d < span
            };
            for hw in 0..he as Letter {
                if hw == hx {
                    continue;
                }
                // Common stretches starting here, with ow == ox.
                let ws = &tw[hw as usize * he + ox as usize];
                if !ws.is_empty() {
                    let left_start = s.ccw(ox, hw) < s.ccw(ox, hx);
                    let mut xs_sorted: Vec<usize> = xs.clone();
                    xs_sorted.sort_unstable_by_key(|&i| rx[i]);
                    let mut ws_sorted: Vec<usize> = ws.clone();
                    ws_sorted.sort_unstable_by_key(|&j| rw[j]);
                    // left_end holds when the w strand ranks above the x strand.
                    for &i in &xs_sorted {
                        let cut = ws_sorted.partition_point(|&j| rw[j] < rx[i]);
                        let crossing = if left_start { &ws_sorted[..cut] } else { &ws_sorted[cut..] };
                        for &j in crossing {
                            if skip(i, j) {
                                continue;
                            }
                            assert!(rw[j] != rx[i], "parallel words passed to crossing enumeration");
                            if left_start {
                                out.push(Crossing {
                                    visit: i,
                                    other_inverted: inverted,
                                    other_pos: j,
                                    forward: false,
                                    sign: -1,
                                });
                            } else {
                                let mut len = 1;
                                while at(x, (i + len) as isize) == at(w, (j + len) as isize) {
                                    len += 1;
                                }
                                out.push(Crossing {
                                    visit: (i + len) % m,
                                    other_inverted: inverted,
                                    other_pos: (j + len) % n,
                                    forward: true,
                                    sign: 1,
                                });
                            }
                        }
                    }
                }
                if inverted || hw == ox {
                    continue;
                }
                // Four distinct half-edges at one vertex visit.
                let hl = on_left(hw);
                for ow in 0..he as Letter {
                    if ow == hx || ow == ox || ow == hw || on_left(ow) == hl {
                        continue;
                    }
                    for &j in &tw[hw as usize * he + ow as usize] {
                        for &i in xs {
                            if skip(i, j) {
                                continue;
                            }
                            out.push(Crossing {
                                visit: i,
                                other_inverted: false,
                                other_pos: j,
                                forward: !hl,
                                sign: if hl { -1 } else { 1 },
                            });
                        }
                    }
                }
            }
        }
    }
}

/// Turn at each letter: the counterclockwise offset from the incoming
/// half-edge of the next letter to that letter.
fn turns(s: &Surface, w: &[Letter]) -> Vec<usize> {
    (0..w.len())
        .map(|i| s.ccw(inv(at(w, i as isize)), at(w, i as isize + 1)))
        .collect()
}

/// Rank of every rotation of each cyclic sequence, compared lexicographically
/// as infinite periodic sequences, over all sequences together.
pub(crate) fn rotation_ranks(seqs: &[Vec<usize>]) -> Vec<Vec<usize>> {
    // Flatten; `shift[p]` is the position `span` steps on within p's own cycle.
    let mut offsets = Vec::with_capacity(seqs.len() + 1);
    offsets.push(0);
    for q in seqs {
        offsets.push(offsets.last().unwrap() + q.len());
    }
    let total = *offsets.last().unwrap();
    if total == 0 {
        return alloc::vec![Vec::new(); seqs.len()];
    }
    let longest = seqs.iter().map(|q| q.len()).max().unwrap_or(0);
    let mut rank: Vec<usize> = seqs.iter().flatten().copied().collect();
    let mut bound = rank.iter().max().map_or(1, |&v| v + 1);
    let mut order: Vec<usize> = (0..total).collect();
    let mut tmp = alloc::vec![0usize; total];
    let mut span = 1;
    loop {
        let shift = |p: usize| {
            let k = offsets.partition_point(|&o| o <= p) - 1;
            let len = offsets[k + 1] - offsets[k];
            offsets[k] + (p - offsets[k] + span) % len
        };
        let second: Vec<usize> = (0..total).map(|p| rank[shift(p)]).collect();
        // Stable counting sorts: by the second key, then by the first.
        for key in [&second, &rank] {
            let mut count = alloc::vec![0usize; bound + 1];
            for &p in &order {
                count[key[p] + 1] += 1;
            }
            for v in 1..=bound {
                count[v] += count[v - 1];
            }
            for &p in &order {
                tmp[count[key[p]]] = p;
                count[key[p]] += 1;
            }
            core::mem::swap(&mut order, &mut tmp);
        }
        let mut next = alloc::vec![0usize; total];
        let mut distinct = 0;
        for j in 1..total {
            let (p, q) = (order[j - 1], order[j]);
            if (rank[p], second[p]) != (rank[q], second[q]) {
                distinct += 1;
            }
            next[q] = distinct;
        }
        rank = next;
        bound = distinct + 1;
        if span >= longest || distinct + 1 == total {
            break;
        }
        span *= 2;
    }
    (0..seqs.len())
        .map(|k| rank[offsets[k]..offsets[k + 1]].to_vec())
        .collect()
}

#[cfg(test)]
fn enumerate_naive(
    s: &Surface,
    x: &[Letter],
    w: &[Letter],
    inverted: bool,
    diag: bool,
    out: &mut Vec<Crossing>,
) {
    let m = x.len() as isize;
    let n = w.len() as isize;
    let cap = m + n + 1;
    for i in 0..m {
        let hx = inv(at(x, i - 1));
        let ox = at(x, i);
        for j in 0..n {
            if diag && i == j {
                continue;
            }
            let hw = inv(at(w, j - 1));
            let ow = at(w, j);
            if ox == ow {
                if hx == hw {
                    continue;
                }
                let mut len = 1;
                while len < cap && at(x, i + len) == at(w, j + len) {
                    len += 1;
                }
                assert!(len < cap, "parallel words passed to crossing enumeration");
                // Strands merging into a common half-edge: the one with the
                // smaller counterclockwise offset runs on the left.
                let left_start = s.ccw(ox, hw) < s.ccw(ox, hx);
                let h1 = inv(at(x, i + len - 1));
                let left_end = s.ccw(h1, at(w, j + len)) > s.ccw(h1, at(x, i + len));
                if left_start == left_end {
                    continue;
                }
                if left_start {
                    out.push(Crossing {
                        visit: i as usize,
                        other_inverted: inverted,
                        other_pos: j as usize,
                        forward: false,
                        sign: -1,
                    });
                } else {
                    out.push(Crossing {
                        visit: (i + len).rem_euclid(m) as usize,
                        other_inverted: inverted,
                        other_pos: (j + len).rem_euclid(n) as usize,
                        forward: true,
                        sign: 1,
                    });
                }
            } else if !inverted && hx != hw && hx != ow && ox != hw {
                // Four distinct half-edges at one vertex visit.
                let span = s.ccw(ox, hx);
                let on_left = |h: Letter| {
                    let d = s.ccw(ox, h);
                    d > 0 && d < span
                };
                let hl = on_left(hw);
                if hl == on_left(ow) {
                    continue;
                }
                out.push(Crossing {
                    visit: i as usize,
                    other_inverted: false,
                    other_pos: j as usize,
                    forward: !hl,
                    sign: if hl { -1 } else { 1 },
                });
            }
        }
    }
}

/// All crossings of `x` with `y`; empty when they are the same curve.
pub fn crossings(s: &Surface, x: &[Letter], y: &[Letter]) -> Vec<Crossing> {
    let mut out = Vec::new();
    if x.is_empty() || y.is_empty() || same_cyclic(x, y) {
        return out;
    }
    enumerate(s, x, y, false, false, &mut out);
    let yi = invert(y);
    let start = out.len();
    enumerate(s, x, &yi, true, false, &mut out);
    for c in &mut out[start..] {
        c.sign = -c.sign;
    }
    out
}

/// Geometric intersection number in the punctured surface.
pub fn punctured_intersection(s: &Surface, x: &[Letter], y: &[Letter]) -> usize {
    crossings(s, x, y).len()
}

/// Algebraic intersection number ⟨x, y⟩.
pub fn algebraic_intersection(s: &Surface, x: &[Letter], y: &[Letter]) -> i64 {
    crossings(s, x, y).iter().map(|c| c.sign as i64).sum()
}

/// Number of self-crossings of a reduced cyclic word.
pub fn self_intersection(s: &Surface, x: &[Letter]) -> usize {
    if x.is_empty() {
        return 0;
    }
    let mut out = Vec::new();
    enumerate(s, x, x, false, true, &mut out);
    enumerate(s, x, &invert(x), true, false, &mut out);
    debug_assert!(out.len() % 2 == 0);
    out.len() / 2
}

/// Letters of the left-departing ray of a crossing.
pub(crate) struct Ray<'a> {
    w: &'a [Letter],
    pos: isize,
    forward: bool,
}

impl<'a> Ray<'a> {
    pub(crate) fn new(c: &Crossing, y: &'a [Letter], yi: &'a [Letter]) -> Ray<'a> {
        Ray {
            w: if c.other_inverted { yi } else { y },
            pos: c.other_pos as isize,
            forward: c.forward,
        }
    }

    #[inline]
    pub(crate) fn letter(&self, t: isize) -> Letter {
        if self.forward {
            at(self.w, self.pos + t)
        } else {
            inv(at(self.w, self.pos - 1 - t))
        }
    }
}

/// Order of two rays leaving `x` to the left at the same visit: `Less` when
/// `r1` ends nearer the backward end of `x`, which is when its crossing comes first.
pub(crate) fn compare_rays(
    s: &Surface,
    back: Letter,
    r1: &Ray,
    r2: &Ray,
    limit: isize,
) -> core::cmp::Ordering {
    let mut h = back;
    for t in 0..limit {
        let (f1, f2) = (r1.letter(t), r2.letter(t));
        if f1 != f2 {
            // Subtrees are met clockwise from the incoming half-edge; a larger
            // counterclockwise offset is a smaller clockwise one.
            return s.ccw(h, f2).cmp(&s.ccw(h, f1));
        }
        h = inv(f1);
    }
    panic!("rays do not diverge");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{letter_a, letter_b};

    use crate::twist::twist;
    use proptest::prelude::*;

    fn naive(s: &Surface, x: &[Letter], y: &[Letter]) -> Vec<Crossing> {
        let mut out = Vec::new();
        if same_cyclic(x, y) {
            return out;
        }
        enumerate_naive(s, x, y, false, false, &mut out);
        let start = out.len();
        enumerate_naive(s, x, &invert(y), true, false, &mut out);
        for c in &mut out[start..] {
            c.sign = -c.sign;
        }
        out
    }

    /// A simple curve: a generator moved by a few twists along generators.
    fn curve(s: &Surface, start: usize, twists: &[(usize, i64)]) -> Vec<Letter> {
        let g = s.genus();
        let gens: Vec<Vec<Letter>> = (1..=g)
            .flat_map(|i| [alloc::vec![letter_a(i)], alloc::vec![letter_b(i)]])
            .collect();
        let mut w = gens[start % gens.len()].clone();
        for &(t, k) in twists {
            w = twist(s, &w, &gens[t % gens.len()], k);
        }
        w
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn ranked_enumeration_matches_pairwise(
            g in 1usize..4,
            sx in 0usize..8,
            sy in 0usize..8,
            tx in proptest::collection::vec((0usize..8, -2i64..3), 0..5),
            ty in proptest::collection::vec((0usize..8, -2i64..3), 0..5),
        ) {
            let s = Surface::new(g);
            let x = curve(&s, sx, &tx);
            let y = curve(&s, sy, &ty);
            let mut fast = crossings(&s, &x, &y);
            let mut slow = naive(&s, &x, &y);
            let key = |c: &Crossing| (c.visit, c.other_inverted, c.other_pos, c.forward, c.sign);
            fast.sort_by_key(key);
            slow.sort_by_key(key);
            prop_assert_eq!(fast, slow);
            let mut selfs = Vec::new();
            enumerate_naive(&s, &x, &x, false, true, &mut selfs);
            enumerate_naive(&s, &x, &invert(&x), true, false, &mut selfs);
            prop_assert_eq!(self_intersection(&s, &x), selfs.len() / 2);
        }
    }

    #[test]
    fn dual_pair() {
        let s = Surface::new(2);
        let a = [letter_a(1)];
        let b = [letter_b(1)];
        assert_eq!(punctured_intersection(&s, &a, &b), 1);
        assert_eq!(algebraic_intersection(&s, &a, &b), 1);
        assert_eq!(algebraic_intersection(&s, &b, &a), -1);
        assert_eq!(punctured_intersection(&s, &a, &[letter_a(2)]), 0);
        assert_eq!(punctured_intersection(&s, &a, &[letter_b(2)]), 0);
    }

    #[test]
    fn face_is_simple() {
        for g in 1..4 {
            let s = Surface::new(g);
            assert_eq!(self_intersection(&s, s.face()), 0);
        }
    }

    #[test]
    fn non_primitive_class_self_crosses() {
        let s = Surface::new(1);
        let (a, b) = (letter_a(1), letter_b(1));
        assert_eq!(self_intersection(&s, &[a, b]), 0);
        assert!(self_intersection(&s, &[a, a, inv(b), inv(b)]) > 0);
    }
}
