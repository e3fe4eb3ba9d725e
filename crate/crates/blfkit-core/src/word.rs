//! Letters and words in the free group on `a1, b1, ..., ag, bg`.
//!
//! A letter is a `u8`: generator `k` is `2k`, its inverse `2k + 1`. Generator
//! `2(i-1)` is `a_i` and `2(i-1) + 1` is `b_i`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

pub type Letter = u8;

#[inline]
pub fn inv(l: Letter) -> Letter {
    l ^ 1
}

#[inline]
pub fn generator(l: Letter) -> usize {
    (l >> 1) as usize
}

#[inline]
pub fn is_inverse(l: Letter) -> bool {
    l & 1 == 1
}

pub fn letter_a(i: usize) -> Letter {
    (4 * (i - 1)) as Letter
}

pub fn letter_b(i: usize) -> Letter {
    (4 * (i - 1) + 2) as Letter
}

pub fn invert(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|&l| inv(l)).collect()
}

/// Free reduction.
pub fn reduce(w: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&inv(l)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free and cyclic reduction.
pub fn cyclic_reduce(w: &[Letter]) -> Vec<Letter> {
    let r = reduce(w);
    let mut lo = 0;
    let mut hi = r.len();
    while hi - lo >= 2 && r[lo] == inv(r[hi - 1]) {
        lo += 1;
        hi -= 1;
    }
    r[lo..hi].to_vec()
}

/// Rotation `w[j..] w[..j]`.
pub fn rotate(w: &[Letter], j: usize) -> Vec<Letter> {
    let j = j % w.len().max(1);
    let mut out = Vec::with_capacity(w.len());
    out.extend_from_slice(&w[j..]);
    out.extend_from_slice(&w[..j]);
    out
}

/// Lexicographically least rotation (Booth's algorithm would do; words are short).
pub fn least_rotation(w: &[Letter]) -> Vec<Letter> {
    let n = w.len();
    if n == 0 {
        return Vec::new();
    }
    let mut best = 0;
    for j in 1..n {
        for k in 0..n {
            let x = w[(j + k) % n];
            let y = w[(best + k) % n];
            if x != y {
                if x < y {
                    best = j;
                }
                break;
            }
        }
    }
    rotate(w, best)
}

/// True if the cyclic word is a proper power of a shorter word.
pub fn is_proper_power(w: &[Letter]) -> bool {
    let n = w.len();
    (1..n).any(|p| n.is_multiple_of(p) && (0..n).all(|k| w[k] == w[(k + p) % n]))
}

/// Exponent sums, indexed by generator.
pub fn exponent_sums(w: &[Letter], rank: usize) -> Vec<i64> {
    let mut v = alloc::vec![0i64; rank];
    for &l in w {
        v[generator(l)] += if is_inverse(l) { -1 } else { 1 };
    }
    v
}

/// Human-readable rendering, `A1` for `a1^-1`.
pub fn render(w: &[Letter]) -> String {
    let mut s = String::new();
    for (k, &l) in w.iter().enumerate() {
        if k > 0 {
            s.push(' ');
        }
        let g = generator(l);
        let c = match (g.is_multiple_of(2), is_inverse(l)) {
            (true, false) => 'a',
            (true, true) => 'A',
            (false, false) => 'b',
            (false, true) => 'B',
        };
        let _ = write!(s, "{}{}", c, g / 2 + 1);
    }
    s
}

/// Signed codes used by the `coords=[...]` form: `a_i = 2i-1`, `b_i = 2i`, negative for inverses.
pub fn to_codes(w: &[Letter]) -> Vec<i64> {
    w.iter()
        .map(|&l| {
            let c = generator(l) as i64 + 1;
            if is_inverse(l) {
                -c
            } else {
                c
            }
        })
        .collect()
}

pub fn from_codes(codes: &[i64], genus: usize) -> Option<Vec<Letter>> {
    codes
        .iter()
        .map(|&c| {
            let g = c.unsigned_abs() as usize;
            if g == 0 || g > 2 * genus {
                None
            } else {
                Some((2 * (g - 1) + usize::from(c < 0)) as Letter)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction() {
        let a = letter_a(1);
        let b = letter_b(1);
        assert_eq!(reduce(&[a, b, inv(b), inv(a)]), Vec::<Letter>::new());
        assert_eq!(cyclic_reduce(&[a, b, a, inv(a), inv(a)]), alloc::vec![b]);
        assert_eq!(least_rotation(&[b, a]), alloc::vec![a, b]);
        assert!(is_proper_power(&[a, b, a, b]));
        assert!(!is_proper_power(&[a, b, b]));
    }

    #[test]
    fn codes_round_trip() {
        let w = alloc::vec![letter_a(2), inv(letter_b(1))];
        assert_eq!(to_codes(&w), alloc::vec![3, -2]);
        assert_eq!(from_codes(&[3, -2], 2), Some(w));
        assert_eq!(from_codes(&[5], 2), None);
    }
}
