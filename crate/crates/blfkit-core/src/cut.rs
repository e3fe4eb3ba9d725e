//! Cutting the surface along a simple curve drawn in the ribbon graph.
//!
//! Strands split each band into sub-bands and the vertex disc into regions;
//! gluing them back up gives the complementary pieces, whose Euler
//! characteristics and first homology come straight from the cell counts.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::homology::form;
use crate::intersect::{at, rotation_ranks};
use crate::surface::Surface;
use crate::word::{generator, inv, invert, is_inverse, Letter};

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let nx = self.0[y];
            self.0[y] = r;
            y = nx;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a] = b;
        }
    }
}

/// One side of a separating curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub genus: usize,
    /// Whether the puncture of the ribbon model lies on this side.
    pub holds_puncture: bool,
    /// Homology classes spanning H_1 of the piece.
    pub cycles: Vec<Vec<i64>>,
}

/// Both sides of a separating simple curve, or `None` if it does not separate.
pub fn cut(s: &Surface, d: &[Letter]) -> Option<[Piece; 2]> {
    let m = d.len();
    if m == 0 {
        return None;
    }
    let di = invert(d);
    let rank = s.rank();
    // Strands of each band, as (inverted?, position) with the word letter equal
    // to the band's forward generator letter.
    let mut bands: Vec<Vec<(bool, usize)>> = alloc::vec![Vec::new(); rank];
    for (p, &l) in d.iter().enumerate() {
        if is_inverse(l) {
            bands[generator(l)].push((true, m - 1 - p));
        } else {
            bands[generator(l)].push((false, p));
        }
    }
    // Two strands that have agreed so far share the incoming half-edge, so
    // they part on the first differing turn; the larger counterclockwise turn
    // leaves on the left. Rank rotations of the turn sequences once.
    let turns = |w: &[Letter]| -> Vec<usize> {
        (0..m)
            .map(|i| s.ccw(inv(at(w, i as isize)), at(w, i as isize + 1)))
            .collect()
    };
    let ranks = rotation_ranks(&[turns(d), turns(&di)]);
    for band in bands.iter_mut() {
        band.sort_by_key(|&(i_, q)| core::cmp::Reverse(ranks[usize::from(i_)][q]));
    }
    // Left-to-right index of occurrence p of d within its band.
    let mut rank_of = alloc::vec![0usize; m];
    for band in &bands {
        for (r, &(i_, q)) in band.iter().enumerate() {
            let p = if i_ { m - 1 - q } else { q };
            rank_of[p] = r;
        }
    }
    // Points on the boundary of the vertex disc, arc by arc in counterclockwise order.
    let n_he = 2 * rank;
    let mut order: Vec<Letter> = (0..n_he as Letter).collect();
    order.sort_by_key(|&h| s.ccw(s.face()[0], h));
    let mut first = alloc::vec![0usize; n_he];
    let mut total = 0;
    for &h in &order {
        first[h as usize] = total;
        total += bands[generator(h)].len();
    }
    let pos_on = |h: Letter, r: usize| -> usize {
        let k = bands[generator(h)].len();
        let t = if is_inverse(h) { r } else { k - 1 - r };
        first[h as usize] + t
    };
    // Segment i lies just before point i.
    let mut regions = Dsu::new(total);
    for p in 0..m {
        let prev = (p + m - 1) % m;
        let a = pos_on(inv(d[prev]), rank_of[prev]);
        let b = pos_on(d[p], rank_of[p]);
        regions.union(a, (b + 1) % total);
        regions.union((a + 1) % total, b);
    }
    let seg = |h: Letter, t: usize| (first[h as usize] + t) % total;
    // Global graph: region roots plus one node per sub-band.
    let mut sub: Vec<(usize, usize, usize)> = Vec::new();
    for (e, band) in bands.iter().enumerate() {
        let k = band.len();
        let fwd = (2 * e) as Letter;
        for sb in 0..=k {
            let from = regions.find(seg(fwd, k - sb));
            let to = regions.find(seg(inv(fwd), sb));
            sub.push((e, from, to));
        }
    }
    let mut comp = Dsu::new(total + sub.len());
    for i in 0..total {
        comp.union(i, regions.find(i));
    }
    for (i, &(_, from, to)) in sub.iter().enumerate() {
        comp.union(total + i, from);
        comp.union(total + i, to);
    }
    let boundary_root = comp.find(regions.find(seg(order[0], bands[generator(order[0])].len())));
    let mut roots: Vec<usize> = Vec::new();
    for i in 0..total {
        let r = comp.find(i);
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    if total == 0 || roots.len() != 2 {
        return None;
    }
    let pieces = roots.map_piece(|root| {
        let mut chi: i64 = 0;
        for i in 0..total {
            if regions.find(i) == i && comp.find(i) == root {
                chi += 1;
            }
        }
        let mut pot: Vec<Option<Vec<i64>>> = alloc::vec![None; total];
        let mut cycles = Vec::new();
        let mine: Vec<&(usize, usize, usize)> =
            sub.iter().enumerate().filter(|(i, _)| comp.find(total + i) == root).map(|(_, x)| x).collect();
        chi -= mine.len() as i64;
        // Potentials along a spanning tree; each edge off the tree gives a cycle.
        let start = (0..total).find(|&i| regions.find(i) == i && comp.find(i) == root);
        if let Some(st) = start {
            let mut adj: Vec<Vec<usize>> = alloc::vec![Vec::new(); total];
            for (j, &&(_, from, to)) in mine.iter().enumerate() {
                adj[from].push(j);
                adj[to].push(j);
            }
            pot[st] = Some(alloc::vec![0; rank]);
            let mut queue = VecDeque::from([st]);
            while let Some(u) = queue.pop_front() {
                for &j in &adj[u] {
                    let (e, from, to) = *mine[j];
                    let (v, sign) = if from == u { (to, 1) } else { (from, -1) };
                    if pot[v].is_none() {
                        let mut p = pot[u].clone().expect("visited");
                        p[e] += sign;
                        pot[v] = Some(p);
                        queue.push_back(v);
                    }
                }
            }
            for &&(e, from, to) in &mine {
                if let (Some(pf), Some(pt)) = (&pot[from], &pot[to]) {
                    let v: Vec<i64> = (0..rank)
                        .map(|i| pf[i] + i64::from(i == e) - pt[i])
                        .collect();
                    if v.iter().any(|&x| x != 0) {
                        cycles.push(v);
                    }
                }
            }
        }
        // The punctured side has two boundary circles, the other one.
        let holds_puncture = root == boundary_root;
        let genus = if holds_puncture { -chi / 2 } else { (1 - chi) / 2 };
        Piece {
            genus: genus as usize,
            holds_puncture,
            cycles,
        }
    });
    Some(pieces)
}

trait MapPiece {
    fn map_piece<F: FnMut(usize) -> Piece>(&self, f: F) -> [Piece; 2];
}

impl MapPiece for Vec<usize> {
    fn map_piece<F: FnMut(usize) -> Piece>(&self, mut f: F) -> [Piece; 2] {
        [f(self[0]), f(self[1])]
    }
}

/// Which piece a nonseparating class disjoint from the cut lies in.
pub fn side_of_class(pieces: &[Piece; 2], h: &[i64]) -> Option<usize> {
    let orth = |p: &Piece| p.cycles.iter().all(|v| form(v, h) == 0);
    match (orth(&pieces[0]), orth(&pieces[1])) {
        (false, true) => Some(0),
        (true, false) => Some(1),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{letter_a, letter_b};

    fn commutator(i: usize) -> Vec<Letter> {
        let (a, b) = (letter_a(i), letter_b(i));
        alloc::vec![a, b, inv(a), inv(b)]
    }

    #[test]
    fn handle_boundary() {
        for g in 2..5 {
            let s = Surface::new(g);
            let p = cut(&s, &commutator(1)).expect("separating");
            let mut genera = [p[0].genus, p[1].genus];
            genera.sort();
            assert_eq!(genera, [1, g - 1]);
            let mut h = alloc::vec![0; 2 * g];
            h[0] = 1;
            let side = side_of_class(&p, &h).expect("a1 misses the cut");
            assert_eq!(p[side].genus, 1);
            h[0] = 0;
            h[2 * g - 1] = 1;
            assert_ne!(side_of_class(&p, &h), Some(side));
        }
    }

    #[test]
    fn nonseparating() {
        let s = Surface::new(2);
        assert!(cut(&s, &[letter_a(1)]).is_none());
    }

    #[test]
    fn even_split() {
        let s = Surface::new(4);
        let mut d = commutator(1);
        d.extend(commutator(2));
        let p = cut(&s, &d).unwrap();
        assert_eq!((p[0].genus, p[1].genus), (2, 2));
    }
}
