//! The capping map: mapping classes fixing a nonseparating curve c, pushed down
//! to the surface obtained by cutting along c and gluing in two discs.
//!
//! Everything is computed for c = a_g after a change of coordinates (a frame)
//! carrying a_g to c. For curves missing a_g, capping agrees up to homotopy
//! with collapsing the last handle, which on words deletes the letters a_g and
//! b_g. Homotopy is enough, since simple closed curves that are homotopic are
//! isotopic.

use alloc::collections::{BTreeMap, BinaryHeap};
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::closed::{closed_isotopic, simple_representative};
use crate::curves::CurveClass;
use crate::error::{Error, Result};
use crate::intersect::punctured_intersection;
use crate::mcg::TwistWord;
use crate::model::SurfaceModel;
use crate::surface::Surface;
use crate::word::{cyclic_reduce, exponent_sums, generator, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fixes {
    Plus,
    Minus,
    No,
}

pub fn fixes_c(w: &TwistWord, c: &CurveClass) -> Result<Fixes> {
    if c.is_separating() {
        return Err(Error::SeparatingCurve);
    }
    let y = w.apply(c)?;
    Ok(if y.is_isotopic(c, true)? {
        Fixes::Plus
    } else if y.is_isotopic(c, false)? {
        Fixes::Minus
    } else {
        Fixes::No
    })
}

/// A twist word H with H(a_g) = ±c.
#[derive(Clone, Debug)]
pub struct Frame {
    c: CurveClass,
    word: TwistWord,
}

impl Frame {
    pub fn word(&self) -> &TwistWord {
        &self.word
    }

    pub fn curve(&self) -> &CurveClass {
        &self.c
    }

    /// H(b_g): a curve meeting c once.
    pub fn dual(&self) -> CurveClass {
        let m = SurfaceModel::standard(self.c.genus(), 0).unwrap();
        let g = self.c.genus();
        let b = m.generator(&alloc::format!("b{g}")).unwrap();
        self.word.apply(&b).unwrap()
    }
}

/// Twist word moving a_g along the chain to the chain curve at `idx`.
/// For consecutive chain curves x, y meeting once, t_x t_y (x) = y.
fn chain_path(chain: &[CurveClass], idx: usize, genus: usize) -> TwistWord {
    let mut w = TwistWord::empty(genus);
    let last = chain.len() - 1;
    // Steps last → last-1 → ... → idx; each later step acts after the earlier ones.
    for m in (idx + 1..=last).rev() {
        let step = TwistWord::from_letters(
            genus,
            alloc::vec![(chain[m].clone(), 1), (chain[m - 1].clone(), 1)],
        )
        .unwrap();
        w = step.then(&w).unwrap();
    }
    w
}

/// Change of coordinates carrying a_g to c, found by best-first search over
/// single twists along the generators a_i, b_i, e_i, ordered by how much the
/// curve crosses the chain. The chain alone is not enough: its twists commute
/// with the hyperelliptic involution and so never move a curve like a_2 (g = 3)
/// onto a chain curve.
pub fn find_frame(c: &CurveClass) -> Result<Frame> {
    if c.is_separating() {
        return Err(Error::SeparatingCurve);
    }
    let g = c.genus();
    let model = SurfaceModel::standard(g, 0)?;
    let chain = model.chain();
    let gens: Vec<CurveClass> = model
        .generator_names()
        .iter()
        .map(|n| model.generator(n).unwrap())
        .collect();
    let s = Surface::new(g);
    let score = |x: &CurveClass| -> usize {
        chain
            .iter()
            .map(|f| punctured_intersection(&s, x.word(), f.word()))
            .sum()
    };
    let chain_h: Vec<Vec<i64>> = chain.iter().map(|f| f.homology_class()).collect();
    let hit = |x: &CurveClass| -> Option<usize> {
        let h = x.homology_class();
        (0..chain.len()).find(|&i| chain_h[i] == h && x.is_isotopic(&chain[i], false).unwrap())
    };
    // Twists applied to c, in order of application.
    let mut seen: BTreeMap<Vec<Letter>, ()> = BTreeMap::new();
    let mut heap = BinaryHeap::new();
    let mut store: Vec<(CurveClass, Vec<(usize, i64)>)> = Vec::new();
    store.push((c.clone(), Vec::new()));
    heap.push(Reverse((score(c), 0usize)));
    seen.insert(c.word().to_vec(), ());
    while let Some(Reverse((_, id))) = heap.pop() {
        if store.len() > 20_000 {
            break;
        }
        let (x, path) = store[id].clone();
        if let Some(i) = hit(&x) {
            // x = T(c) and x = K(a_g), so c = T⁻¹ K (a_g).
            let mut t_inv = TwistWord::empty(g);
            for &(j, k) in path.iter() {
                t_inv.push(gens[j].clone(), -k);
            }
            let word = t_inv.then(&chain_path(&chain, i, g))?;
            return Ok(Frame { c: c.clone(), word });
        }
        if path.len() >= 12 {
            continue;
        }
        for (j, f) in gens.iter().enumerate() {
            for k in [1i64, -1] {
                let y = x.dehn_twist(f, k)?;
                if seen.insert(y.word().to_vec(), ()).is_none() {
                    let mut p = path.clone();
                    p.push((j, k));
                    store.push((y.clone(), p));
                    heap.push(Reverse((score(&y), store.len() - 1)));
                }
            }
        }
    }
    Err(Error::NoFrame)
}

/// The word of a curve on Σ_g, disjoint from a_g up to isotopy, seen in Σ_{g-1}.
/// `None` means it bounds a disc there.
fn descend_word(x: &CurveClass) -> Option<Vec<Letter>> {
    let g = x.genus();
    let kept: Vec<Letter> = x
        .word()
        .iter()
        .copied()
        .filter(|&l| generator(l) < 2 * (g - 1))
        .collect();
    let w = cyclic_reduce(&kept);
    if g - 1 == 1 {
        return if exponent_sums(&w, 2).iter().all(|&v| v == 0) {
            None
        } else {
            Some(w)
        };
    }
    let s = Surface::new(g - 1);
    match simple_representative(&s, &w) {
        Some(r) if r.is_empty() => None,
        Some(r) => Some(r),
        None => Some(w),
    }
}

/// The image of a curve disjoint from c in Σ_c with the marked points forgotten.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Descent {
    Curve(CurveClass),
    /// The curve bounds a disc once the marked points are forgotten.
    Trivial,
}

/// Cap a curve disjoint from c. The result lives on the standard genus g-1
/// model, in the coordinates given by `frame`.
pub fn cap_descend(frame: &Frame, x: &CurveClass) -> Result<Descent> {
    if x.geometric_intersection(&frame.c)? != 0 {
        return Err(Error::CrossesC);
    }
    let g = x.genus();
    if g == 1 {
        return Ok(Descent::Trivial);
    }
    let y = frame.word.inverse().apply(x)?;
    Ok(match descend_word(&y) {
        None => Descent::Trivial,
        Some(w) => match CurveClass::from_word(g - 1, &w) {
            Ok(cc) => Descent::Curve(cc),
            Err(_) => Descent::Curve(CurveClass::from_simple(g - 1, &w)),
        },
    })
}

fn domain_sign(w: &TwistWord, c: &CurveClass) -> Result<Fixes> {
    match fixes_c(w, c)? {
        Fixes::No => Err(Error::NotInDomain),
        s => Ok(s),
    }
}

/// Exact test: does w become trivial on Σ_c once the marked points are forgotten?
pub fn phi_c_is_trivial(w: &TwistWord, c: &CurveClass) -> Result<bool> {
    domain_sign(w, c)?;
    let frame = find_frame(c)?;
    phi_c_is_trivial_in(w, &frame)
}

/// As [`phi_c_is_trivial`] with a known frame for c. The caller checks the domain.
pub fn phi_c_is_trivial_in(w: &TwistWord, frame: &Frame) -> Result<bool> {
    let g = w.genus();
    if g == 1 {
        return Ok(true);
    }
    let nu = frame.word.inverse().then(w)?.then(&frame.word)?;
    let lower = SurfaceModel::standard(g - 1, 0)?;
    let s = Surface::new(g - 1);
    for f in lower.chain() {
        // The same word on Σ_g is a curve missing the last handle.
        let lifted = CurveClass::from_simple(g, f.word());
        let image = nu.apply(&lifted)?;
        let Some(d) = descend_word(&image) else {
            return Ok(false);
        };
        if !closed_isotopic(&s, &d, f.word(), true) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Kernel test with the marked points kept: w must be a power of t_c.
pub fn phi_tilde_c_is_trivial(w: &TwistWord, c: &CurveClass) -> Result<bool> {
    if domain_sign(w, c)? != Fixes::Plus {
        return Ok(false);
    }
    let frame = find_frame(c)?;
    let beta = frame.dual();
    let k = w.apply(&beta)?.geometric_intersection(&beta)? as i64;
    for kk in [k, -k] {
        let rest = w.then(&TwistWord::twist(c, -kk))?;
        if rest.is_identity() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Fast necessary condition: the homology action is ±1 on [c]^⊥/[c] with the
/// sign of the action on c. True for every kernel element.
pub fn phi_c_homology_obstruction(w: &TwistWord, c: &CurveClass) -> Result<bool> {
    let sign = match domain_sign(w, c)? {
        Fixes::Plus => 1,
        _ => -1,
    };
    let m = w.homology_action();
    Ok(m.trivial_on_quotient(&c.oriented_homology(), sign))
}

pub fn kernel_generator_tc(c: &CurveClass) -> TwistWord {
    TwistWord::twist(c, 1)
}

/// Δ = (t_c t_β)³, six positive letters.
pub fn kernel_generator_delta(c: &CurveClass, beta: &CurveClass) -> Result<TwistWord> {
    if c.geometric_intersection(beta)? != 1 {
        return Err(Error::BadConfiguration("the dual curve must meet c once"));
    }
    let mut w = TwistWord::empty(c.genus());
    for _ in 0..3 {
        w.push(c.clone(), 1);
        w.push(beta.clone(), 1);
    }
    Ok(w)
}

/// A loop on Σ_c through one marked point, given by the two boundary curves of
/// its annular neighbourhood lifted to Σ_g; together with c they bound a pair of pants.
#[derive(Clone, Debug)]
pub enum PushLoop {
    /// The loop around the last remaining handle in the frame of c.
    Standard,
    Boundary { left: CurveClass, right: CurveClass },
}

/// Lift of a point push: t_{γL} t_{γR}⁻¹.
pub fn kernel_generator_pointpush(c: &CurveClass, lp: &PushLoop) -> Result<TwistWord> {
    let g = c.genus();
    if g < 2 {
        return Err(Error::BadConfiguration("no loops on a sphere"));
    }
    match lp {
        PushLoop::Standard => {
            let m = SurfaceModel::standard(g, 0)?;
            let left = m.generator(&alloc::format!("a{}", g - 1))?;
            let right = m.generator(&alloc::format!("e{}", g - 1))?;
            let w = TwistWord::from_letters(g, alloc::vec![(left, 1), (right, -1)])?;
            let frame = find_frame(c)?;
            w.conjugate(frame.word())
        }
        PushLoop::Boundary { left, right } => {
            let bad = Error::BadConfiguration("loop curves do not bound a pair of pants with c");
            if left.geometric_intersection(c)? != 0
                || right.geometric_intersection(c)? != 0
                || left.geometric_intersection(right)? != 0
                || left.is_isotopic(right, false)?
                || left.is_separating()
                || right.is_separating()
            {
                return Err(bad);
            }
            let (hl, hr, hc) = (left.oriented_homology(), right.oriented_homology(), c.oriented_homology());
            let combos = [1i64, -1].iter().flat_map(|&s| [1i64, -1].map(move |t| (s, t)));
            let fits = combos.clone().any(|(s, t)| {
                (0..hc.len()).all(|i| s * hl[i] + t * hr[i] == hc[i])
            });
            if !fits {
                return Err(bad);
            }
            TwistWord::from_letters(g, alloc::vec![(left.clone(), 1), (right.clone(), -1)])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(g: usize) -> SurfaceModel {
        SurfaceModel::standard(g, 0).unwrap()
    }

    #[test]
    fn frames_reach_every_generator() {
        for g in 2..4 {
            let m = model(g);
            for n in m.generator_names() {
                let c = m.generator(&n).unwrap();
                let f = find_frame(&c).unwrap_or_else(|e| panic!("{n}: {e:?}"));
                let ag = m.generator(&alloc::format!("a{g}")).unwrap();
                assert!(f.word().apply(&ag).unwrap().is_isotopic(&c, false).unwrap(), "{n}");
            }
        }
    }

    #[test]
    fn kernel_generators() {
        for g in 2..4 {
            let m = model(g);
            for n in ["a1", "b1", "a2"] {
                let c = m.generator(n).unwrap();
                let tc = kernel_generator_tc(&c);
                assert_eq!(fixes_c(&tc, &c).unwrap(), Fixes::Plus);
                assert!(phi_c_is_trivial(&tc, &c).unwrap());
                assert!(phi_tilde_c_is_trivial(&tc, &c).unwrap());
                let beta = find_frame(&c).unwrap().dual();
                let delta = kernel_generator_delta(&c, &beta).unwrap();
                assert_eq!(fixes_c(&delta, &c).unwrap(), Fixes::Minus, "{n}");
                assert!(phi_c_is_trivial(&delta, &c).unwrap(), "g={g} {n}");
                assert!(phi_c_homology_obstruction(&delta, &c).unwrap());
                let push = kernel_generator_pointpush(&c, &PushLoop::Standard).unwrap();
                assert_eq!(fixes_c(&push, &c).unwrap(), Fixes::Plus);
                assert!(phi_c_is_trivial(&push, &c).unwrap(), "g={g} {n}");
                assert!(!phi_tilde_c_is_trivial(&push, &c).unwrap());
            }
        }
    }

    #[test]
    fn nontrivial_is_detected() {
        let m = model(2);
        let (a1, a2) = (m.generator("a1").unwrap(), m.generator("a2").unwrap());
        let w = TwistWord::twist(&a1, 1);
        assert!(!phi_c_homology_obstruction(&w, &a2).unwrap());
        assert!(!phi_c_is_trivial(&w, &a2).unwrap());
        // A separating twist survives capping when both sides keep genus.
        let m3 = model(3);
        let a3 = m3.generator("a3").unwrap();
        let d = CurveClass::from_word(3, &[0, 2, 1, 3]).unwrap();
        let td = TwistWord::twist(&d, 1);
        assert!(phi_c_homology_obstruction(&td, &a3).unwrap());
        assert!(!phi_c_is_trivial(&td, &a3).unwrap());
        // ... and dies when its genus-one side holds c.
        let a1 = m3.generator("a1").unwrap();
        assert!(phi_c_is_trivial(&td, &a1).unwrap());
        let b2 = m.generator("b2").unwrap();
        assert_eq!(phi_c_is_trivial(&TwistWord::twist(&a2, 1), &b2), Err(Error::NotInDomain));
    }
}
