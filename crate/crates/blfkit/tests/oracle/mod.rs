//! Intersection numbers on the genus-2 surface from hyperbolic geometry.
//!
//! The surface is the regular octagon with angles π/4, sides paired in the
//! pattern a b a⁻¹ b⁻¹ c d c⁻¹ d⁻¹. A curve given as a word is drawn as its
//! closed geodesic: the axis of its image in the Fuchsian group, cut into
//! chords of the octagon. In the Klein model the chords are straight, so
//! counting transverse crossings is plane geometry. Geodesics realise minimal
//! intersection, so the count is the geometric intersection number.
//!
//! Nothing here shares code with the word-based calculus. Arithmetic is
//! fixed point over big integers; tracing a geodesic of length ℓ loses about
//! ℓ/ln 2 bits, far below the working precision for the curves used in tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed};

const BITS: u32 = 1024;
/// Anything below 2^-256 is treated as zero; hitting it means a degenerate picture.
const TINY_BITS: u32 = 256;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct F(BigInt);

impl F {
    fn int(n: i64) -> F {
        F(BigInt::from(n) << BITS)
    }
    fn add(&self, o: &F) -> F {
        F(&self.0 + &o.0)
    }
    fn sub(&self, o: &F) -> F {
        F(&self.0 - &o.0)
    }
    fn mul(&self, o: &F) -> F {
        F((&self.0 * &o.0) >> BITS)
    }
    fn div(&self, o: &F) -> F {
        F((&self.0 << BITS) / &o.0)
    }
    fn neg(&self) -> F {
        F(-&self.0)
    }
    fn sqrt(&self) -> F {
        if self.0.is_negative() {
            assert!(self.tiny(), "square root of a negative number");
            return F::int(0);
        }
        F((&self.0 << BITS).sqrt())
    }
    fn tiny(&self) -> bool {
        self.0.abs() < (BigInt::one() << (BITS - TINY_BITS))
    }
    fn positive(&self) -> bool {
        self.0.is_positive()
    }
}

#[derive(Clone, Debug)]
struct C {
    re: F,
    im: F,
}

impl C {
    fn real(x: F) -> C {
        C { re: x, im: F::int(0) }
    }
    fn add(&self, o: &C) -> C {
        C { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }
    fn sub(&self, o: &C) -> C {
        C { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }
    fn mul(&self, o: &C) -> C {
        C {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }
    fn scale(&self, x: &F) -> C {
        C { re: self.re.mul(x), im: self.im.mul(x) }
    }
    fn norm2(&self) -> F {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }
    fn div(&self, o: &C) -> C {
        let n = o.norm2();
        let conj = C { re: o.re.clone(), im: o.im.neg() };
        let p = self.mul(&conj);
        C { re: p.re.div(&n), im: p.im.div(&n) }
    }
    fn sqrt(&self) -> C {
        let r = self.norm2().sqrt();
        let two = F::int(2);
        let re = r.add(&self.re).div(&two).sqrt();
        let im = r.sub(&self.re).div(&two).sqrt();
        let im = if self.im.0.is_negative() { im.neg() } else { im };
        C { re, im }
    }
    fn dot(&self, o: &C) -> F {
        self.re.mul(&o.re).add(&self.im.mul(&o.im))
    }
    fn tiny(&self) -> bool {
        self.re.tiny() && self.im.tiny()
    }
}

/// z ↦ (az + b)/(cz + d).
#[derive(Clone, Debug)]
struct Mobius([C; 4]);

impl Mobius {
    fn then(&self, o: &Mobius) -> Mobius {
        // self ∘ o
        let [a, b, c, d] = &self.0;
        let [e, f, g, h] = &o.0;
        Mobius([
            a.mul(e).add(&b.mul(g)),
            a.mul(f).add(&b.mul(h)),
            c.mul(e).add(&d.mul(g)),
            c.mul(f).add(&d.mul(h)),
        ])
    }
    fn inverse(&self) -> Mobius {
        let [a, b, c, d] = self.0.clone();
        let z = C::real(F::int(0));
        Mobius([d, z.sub(&b), z.sub(&c), a])
    }
    fn apply(&self, z: &C) -> C {
        let [a, b, c, d] = &self.0;
        a.mul(z).add(b).div(&c.mul(z).add(d))
    }
    /// The two fixed points on the circle at infinity.
    fn fixed_points(&self) -> (C, C) {
        let [a, b, c, d] = &self.0;
        let amd = a.sub(d);
        let disc = amd.mul(&amd).add(&b.mul(c).scale(&F::int(4))).sqrt();
        let two_c = c.scale(&F::int(2));
        (amd.add(&disc).div(&two_c), amd.sub(&disc).div(&two_c))
    }
    fn is_scalar(&self) -> bool {
        let [a, b, c, d] = &self.0;
        b.div(a).tiny() && c.div(a).tiny() && a.sub(d).div(a).tiny()
    }
}

/// The octagon group: side normals, side offset, and pairing maps.
pub struct Octagon {
    normals: Vec<C>,
    kappa: F,
    /// `pairing[k]` maps the tile across side k onto the octagon.
    pairing: Vec<Mobius>,
    gens: Vec<Mobius>,
}

const PARTNER: [usize; 8] = [2, 3, 0, 1, 6, 7, 4, 5];

impl Octagon {
    pub fn new() -> Octagon {
        let h = F::int(1).div(&F::int(2)).sqrt();
        let (z, o) = (F::int(0), F::int(1));
        let unit = |k: usize| -> C {
            let (re, im) = match k % 8 {
                0 => (o.clone(), z.clone()),
                1 => (h.clone(), h.clone()),
                2 => (z.clone(), o.clone()),
                3 => (h.neg(), h.clone()),
                4 => (o.neg(), z.clone()),
                5 => (h.neg(), h.neg()),
                6 => (z.clone(), o.neg()),
                _ => (h.clone(), h.neg()),
            };
            C { re, im }
        };
        // cosh of the centre-to-side distance is cot(π/8) = 1 + √2; the Klein
        // distance of a side is tanh of it, and so is the translation parameter.
        let ch = F::int(1).add(&F::int(2).sqrt());
        let kappa = F::int(1).sub(&F::int(1).div(&ch.mul(&ch))).sqrt();
        let one = C::real(F::int(1));
        let zero = C::real(F::int(0));
        let rot = |k: usize| Mobius([unit(k), zero.clone(), zero.clone(), one.clone()]);
        let shift = Mobius([one.clone(), C::real(kappa.clone()), C::real(kappa.clone()), one.clone()]);
        // Sends side k to side j, and the octagon to the tile across side j.
        let g = |k: usize, j: usize| rot(j).then(&shift).then(&rot((12 - k) % 8));
        let pairing = (0..8).map(|k| g(PARTNER[k], k).inverse()).collect();
        let gens = vec![g(2, 0), g(1, 3), g(6, 4), g(5, 7)];
        Octagon { normals: (0..8).map(unit).collect(), kappa, pairing, gens }
    }

    fn letter(&self, code: i64) -> Mobius {
        let m = &self.gens[(code.unsigned_abs() - 1) as usize];
        if code > 0 {
            m.clone()
        } else {
            m.inverse()
        }
    }

    fn word(&self, codes: &[i64]) -> Mobius {
        let one = C::real(F::int(1));
        let zero = C::real(F::int(0));
        let mut m = Mobius([one.clone(), zero.clone(), zero, one]);
        for &c in codes {
            m = m.then(&self.letter(c));
        }
        m
    }

    /// Does the face word a1 b1 A1 B1 a2 b2 A2 B2 map to the identity?
    pub fn relator_holds(&self) -> bool {
        self.word(&[1, 2, -1, -2, 3, 4, -3, -4]).is_scalar()
    }

    /// Parameter interval of the chord from p to q inside the octagon, and the
    /// exit side. `None` if the chord misses it; `Err` if it runs through a vertex.
    fn clip(&self, p: &C, q: &C) -> Result<Option<(F, F, usize)>, ()> {
        let dir = q.sub(p);
        let mut lo = F::int(0);
        let mut hi: Vec<(F, usize)> = vec![(F::int(1), 8)];
        let mut los: Vec<F> = Vec::new();
        for (k, u) in self.normals.iter().enumerate() {
            let s = p.dot(u);
            let v = dir.dot(u);
            if v.tiny() {
                if s.sub(&self.kappa).positive() {
                    return Ok(None);
                }
                continue;
            }
            let t = self.kappa.sub(&s).div(&v);
            if v.positive() {
                hi.push((t, k));
            } else {
                los.push(t.clone());
                if t > lo {
                    lo = t;
                }
            }
        }
        hi.sort();
        los.sort();
        let (t_out, side) = hi[0].clone();
        if t_out.sub(&lo).positive() && !t_out.sub(&lo).tiny() {
            let near = |a: &F, b: &F| a.sub(b).tiny();
            if hi.len() > 1 && near(&hi[1].0, &t_out) {
                return Err(());
            }
            if los.len() > 1 && near(&los[los.len() - 2], &lo) {
                return Err(());
            }
            Ok(Some((lo, t_out, side)))
        } else {
            Ok(None)
        }
    }

    /// The chords of the closed geodesic of a word, as Klein-model segments.
    /// `None` if the geodesic passes through the octagon's vertex, or if the
    /// word is too long for the working precision.
    fn chords(&self, codes: &[i64]) -> Option<Vec<(C, C)>> {
        let (mut p, mut q) = self.word(codes).fixed_points();
        // Move the axis until it meets the octagon: reflect the point nearest
        // the centre across whichever side it lies beyond.
        let mut guard = 0;
        loop {
            if self.clip(&p, &q).ok()?.is_some() {
                break;
            }
            let d = q.sub(&p);
            let t = p.dot(&d).neg().div(&d.norm2());
            let foot = p.add(&d.scale(&t));
            let k = (0..8).max_by(|&i, &j| foot.dot(&self.normals[i]).cmp(&foot.dot(&self.normals[j])))?;
            let m = &self.pairing[k];
            (p, q) = (m.apply(&p), m.apply(&q));
            guard += 1;
            assert!(guard < 10_000, "axis does not reach the octagon");
        }
        let start = (p.clone(), q.clone());
        let mut out = Vec::new();
        loop {
            let (t0, t1, side) = self.clip(&p, &q).ok()??;
            if side == 8 {
                // Rounding has drifted the axis off the boundary; give up on
                // this drawing rather than trust it.
                return None;
            }
            let d = q.sub(&p);
            out.push((p.add(&d.scale(&t0)), p.add(&d.scale(&t1))));
            let m = &self.pairing[side];
            (p, q) = (m.apply(&p), m.apply(&q));
            if p.sub(&start.0).tiny() && q.sub(&start.1).tiny() {
                return Some(out);
            }
            assert!(out.len() < 200_000, "geodesic does not close up");
        }
    }
}

fn orient(a: &C, b: &C, c: &C) -> F {
    let (u, v) = (b.sub(a), c.sub(a));
    u.re.mul(&v.im).sub(&u.im.mul(&v.re))
}

/// Do the open segments cross? `Err` when an endpoint lies on the other segment's line.
fn crosses(s: &(C, C), t: &(C, C)) -> Result<bool, ()> {
    let o = [orient(&s.0, &s.1, &t.0), orient(&s.0, &s.1, &t.1), orient(&t.0, &t.1, &s.0), orient(&t.0, &t.1, &s.1)];
    if o.iter().any(F::tiny) {
        return Err(());
    }
    Ok(o[0].positive() != o[1].positive() && o[2].positive() != o[3].positive())
}

fn same_chord(s: &(C, C), t: &(C, C)) -> bool {
    (s.0.sub(&t.0).tiny() && s.1.sub(&t.1).tiny()) || (s.0.sub(&t.1).tiny() && s.1.sub(&t.0).tiny())
}

/// Geometric intersection of two curves given by letter codes; `None` when
/// the drawing is degenerate (a geodesic through the vertex, or crossings on
/// the octagon's boundary).
pub fn intersection(oct: &Octagon, x: &[i64], y: &[i64]) -> Option<usize> {
    let (cx, cy) = (oct.chords(x)?, oct.chords(y)?);
    if cy.iter().any(|t| same_chord(&cx[0], t)) {
        // Same geodesic.
        return Some(0);
    }
    let mut n = 0;
    for s in &cx {
        for t in &cy {
            n += usize::from(crosses(s, t).ok()?);
        }
    }
    Some(n)
}

/// Transverse self-crossings of the geodesic of a word.
pub fn self_intersection(oct: &Octagon, x: &[i64]) -> Option<usize> {
    let cx = oct.chords(x)?;
    let mut n = 0;
    for i in 0..cx.len() {
        for j in i + 1..cx.len() {
            n += usize::from(crosses(&cx[i], &cx[j]).ok()?);
        }
    }
    Some(n)
}
