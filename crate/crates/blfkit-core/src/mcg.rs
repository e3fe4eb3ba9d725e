//! Mapping classes as words in Dehn twists.

use alloc::vec::Vec;

use crate::curves::{ArcClass, CurveClass};
use crate::error::{Error, Result};
use crate::homology::SymplecticMatrix;
use crate::model::SurfaceModel;

/// A product of twists. `[w1, w2, ...]` is w1 ∘ w2 ∘ ..., so the last letter acts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistWord {
    genus: usize,
    letters: Vec<(CurveClass, i64)>,
}

impl TwistWord {
    pub fn empty(genus: usize) -> TwistWord {
        TwistWord {
            genus,
            letters: Vec::new(),
        }
    }

    pub fn twist(c: &CurveClass, k: i64) -> TwistWord {
        let mut w = TwistWord::empty(c.genus());
        w.push(c.clone(), k);
        w
    }

    pub fn from_letters(genus: usize, letters: Vec<(CurveClass, i64)>) -> Result<TwistWord> {
        let mut w = TwistWord::empty(genus);
        for (c, k) in letters {
            if c.genus() != genus {
                return Err(Error::ModelMismatch {
                    left: genus,
                    right: c.genus(),
                });
            }
            w.push(c, k);
        }
        Ok(w)
    }

    /// Append a letter on the right; it acts before everything already present.
    /// Zero powers are dropped.
    pub fn push(&mut self, c: CurveClass, k: i64) {
        assert_eq!(c.genus(), self.genus, "twist curve from another model");
        if k != 0 {
            self.letters.push((c, k));
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn letters(&self) -> &[(CurveClass, i64)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check(&self, genus: usize) -> Result<()> {
        if genus == self.genus {
            Ok(())
        } else {
            Err(Error::ModelMismatch {
                left: self.genus,
                right: genus,
            })
        }
    }

    /// self ∘ other.
    pub fn then(&self, other: &TwistWord) -> Result<TwistWord> {
        other.check(self.genus)?;
        let mut w = self.clone();
        w.letters.extend(other.letters.iter().cloned());
        Ok(w)
    }

    pub fn inverse(&self) -> TwistWord {
        TwistWord {
            genus: self.genus,
            letters: self.letters.iter().rev().map(|(c, k)| (c.clone(), -k)).collect(),
        }
    }

    pub fn apply(&self, x: &CurveClass) -> Result<CurveClass> {
        self.check(x.genus())?;
        let mut y = x.clone();
        for (c, k) in self.letters.iter().rev() {
            y = y.dehn_twist(c, *k)?;
        }
        Ok(y)
    }

    /// Image of an arc; it lives on the capped surface of the image of its curve.
    pub fn apply_arc(&self, x: &ArcClass) -> Result<ArcClass> {
        let c = self.apply(x.capped_curve())?;
        let d = self.apply(x.source())?;
        ArcClass::pi_map(&d, &c)
    }

    /// Action on H_1, column vectors, M = M_1 M_2 ... M_n.
    pub fn homology_action(&self) -> SymplecticMatrix {
        let mut m = SymplecticMatrix::identity(2 * self.genus);
        for (c, k) in &self.letters {
            m = m.mul(&SymplecticMatrix::transvection(&c.oriented_homology(), *k));
        }
        m
    }

    /// Identity test by the Alexander method.
    ///
    /// The chain of 2g+1 curves fills the surface and any mapping class fixing
    /// each of its curves with orientation is trivial. The hyperelliptic
    /// involution fixes every chain curve but reverses it, so the oriented
    /// comparison (and the homology check, which sees -1) rules it out.
    pub fn is_identity(&self) -> bool {
        if !self.homology_action().is_identity() {
            return false;
        }
        let model = SurfaceModel::standard(self.genus, 0).expect("word on a valid model");
        model.chain().iter().all(|f| {
            let y = self.apply(f).expect("same model");
            y.is_isotopic(f, true).expect("same model")
        })
    }

    /// h w h⁻¹, letter by letter: (h(c_i), k_i).
    pub fn conjugate(&self, h: &TwistWord) -> Result<TwistWord> {
        h.check(self.genus)?;
        let mut out = TwistWord::empty(self.genus);
        for (c, k) in &self.letters {
            out.push(h.apply(c)?, *k);
        }
        Ok(out)
    }

    /// Every letter twists along a separating curve.
    pub fn is_torelli_word(&self) -> bool {
        self.letters.iter().all(|(c, _)| c.is_separating())
    }
}

/// The hyperelliptic involution of the standard model as a twist word.
///
/// For the chain c_1, ..., c_{2g+1} (a1, b1, e1, ..., b_g, a_g), the product
/// t_{c_1} ... t_{c_{2g+1}} t_{c_{2g+1}} ... t_{c_1} is the involution that
/// acts by -1 on homology and preserves every chain curve.
/// On the torus the chain has even length and (t_a t_b)³ plays this role.
pub fn involution(model: &SurfaceModel) -> TwistWord {
    let chain = model.chain();
    let mut w = TwistWord::empty(model.genus());
    if model.genus() == 1 {
        for _ in 0..3 {
            w.push(chain[0].clone(), 1);
            w.push(chain[1].clone(), 1);
        }
        return w;
    }
    for c in chain.iter() {
        w.push(c.clone(), 1);
    }
    for c in chain.iter().rev() {
        w.push(c.clone(), 1);
    }
    w
}

pub fn involution_image(model: &SurfaceModel, x: &CurveClass) -> Result<CurveClass> {
    involution(model).apply(x)
}

/// Is every curve preserved, up to orientation, by the standard involution?
pub fn is_symmetric_system(model: &SurfaceModel, curves: &[CurveClass]) -> Result<bool> {
    let iota = involution(model);
    for x in curves {
        if x.genus() != model.genus() {
            return Err(Error::ModelMismatch {
                left: model.genus(),
                right: x.genus(),
            });
        }
        if !iota.apply(x)?.is_isotopic(x, false)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_relation_is_trivial() {
        let m = SurfaceModel::standard(2, 0).unwrap();
        let (a, b) = (m.generator("a1").unwrap(), m.generator("b1").unwrap());
        let w = TwistWord::from_letters(
            2,
            alloc::vec![(a.clone(), 1), (b.clone(), 1), (a.clone(), 1), (b.clone(), -1), (a.clone(), -1), (b.clone(), -1)],
        )
        .unwrap();
        assert!(w.is_identity());
        assert!(TwistWord::empty(2).is_identity());
        assert!(!TwistWord::twist(&a, 1).is_identity());
    }

    #[test]
    fn involution_is_hyperelliptic() {
        for g in 1..4 {
            let m = SurfaceModel::standard(g, 0).unwrap();
            let iota = involution(&m);
            // J² = -1.
            let j = SymplecticMatrix::standard_form(g);
            let minus = j.mul(&j);
            assert_eq!(iota.homology_action(), minus, "g={g}");
            assert!(!iota.is_identity());
            assert!(iota.then(&iota).unwrap().is_identity(), "g={g}");
            assert!(is_symmetric_system(&m, &m.chain()).unwrap());
            let fixed = |name: &str| {
                let x = m.generator(name).unwrap();
                involution_image(&m, &x).unwrap().is_isotopic(&x, false).unwrap()
            };
            if g <= 2 {
                assert!(m.generator_names().iter().all(|n| fixed(n)), "g={g}");
            }
            if g == 3 {
                // a2 is not in the chain, and the standard a2 is not symmetric.
                assert!(!fixed("a2"));
            }
        }
    }
}
