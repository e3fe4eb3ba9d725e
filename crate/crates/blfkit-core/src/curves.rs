//! Isotopy classes of essential simple closed curves, and arcs in the capped surface.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::closed::{closed_intersection, closed_isotopic, is_closed_trivial};
use crate::cut::{cut, side_of_class, Piece};
use crate::error::{Error, Result};
use crate::homology::{form, normalize};
use crate::intersect::self_intersection;
use crate::surface::Surface;
use crate::twist::twist;
use crate::word::{
    cyclic_reduce, exponent_sums, from_codes, generator, invert, is_proper_power, least_rotation,
    render, to_codes, Letter,
};

/// An oriented essential simple closed curve on the closed genus-g surface.
///
/// The word is the reduced cyclic word of a representative in the punctured
/// surface, rotated to its least form. Equal words mean punctured isotopy, which
/// implies closed isotopy but not conversely; use [`CurveClass::is_isotopic`]
/// for the closed question.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveClass {
    genus: usize,
    word: Vec<Letter>,
}

impl fmt::Debug for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Curve(g={}; {})", self.genus, render(&self.word))
    }
}

impl CurveClass {
    /// Validate a word as an essential simple closed curve.
    pub fn from_word(genus: usize, w: &[Letter]) -> Result<CurveClass> {
        if genus == 0 || genus > 60 {
            return Err(Error::UnsupportedConfiguration { genus, marked: 0 });
        }
        if w.iter().any(|&l| generator(l) >= 2 * genus) {
            return Err(Error::NotACurve("letter outside the model"));
        }
        let w = cyclic_reduce(w);
        let s = Surface::new(genus);
        if w.is_empty() {
            return Err(Error::NotACurve("null-homotopic"));
        }
        if is_closed_trivial(&s, &w) {
            return Err(Error::NotACurve("bounds a disc"));
        }
        if is_proper_power(&w) {
            return Err(Error::NotACurve("multiple of a curve"));
        }
        if self_intersection(&s, &w) != 0 {
            return Err(Error::NotACurve("not simple"));
        }
        Ok(CurveClass {
            genus,
            word: least_rotation(&w),
        })
    }

    /// Trusted constructor for words produced by operations that preserve simplicity.
    pub(crate) fn from_simple(genus: usize, w: &[Letter]) -> CurveClass {
        let w = cyclic_reduce(w);
        debug_assert!(!w.is_empty());
        CurveClass {
            genus,
            word: least_rotation(&w),
        }
    }

    pub fn from_codes(genus: usize, codes: &[i64]) -> Result<CurveClass> {
        let w = from_codes(codes, genus).ok_or(Error::NotACurve("code outside the model"))?;
        CurveClass::from_word(genus, &w)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn codes(&self) -> Vec<i64> {
        to_codes(&self.word)
    }

    pub fn render(&self) -> String {
        render(&self.word)
    }

    pub(crate) fn surface(&self) -> Surface {
        Surface::new(self.genus)
    }

    fn same_model(&self, other: &CurveClass) -> Result<()> {
        if self.genus == other.genus {
            Ok(())
        } else {
            Err(Error::ModelMismatch {
                left: self.genus,
                right: other.genus,
            })
        }
    }

    pub fn reversed(&self) -> CurveClass {
        CurveClass::from_simple(self.genus, &invert(&self.word))
    }

    pub fn is_isotopic(&self, other: &CurveClass, oriented: bool) -> Result<bool> {
        self.same_model(other)?;
        Ok(closed_isotopic(&self.surface(), &self.word, &other.word, oriented))
    }

    pub fn geometric_intersection(&self, other: &CurveClass) -> Result<usize> {
        self.same_model(other)?;
        Ok(closed_intersection(&self.surface(), &self.word, &other.word))
    }

    /// Right-handed twist t_c^k applied to this curve.
    pub fn dehn_twist(&self, c: &CurveClass, k: i64) -> Result<CurveClass> {
        self.same_model(c)?;
        if k == 0 {
            return Ok(self.clone());
        }
        // A twist of the punctured surface; it descends to the closed one.
        let w = twist(&self.surface(), &self.word, &c.word, k);
        Ok(CurveClass::from_simple(self.genus, &w))
    }

    /// Homology class with the orientation of the word.
    pub fn oriented_homology(&self) -> Vec<i64> {
        exponent_sums(&self.word, 2 * self.genus)
    }

    /// Homology class up to sign, normalized so the first nonzero entry is positive.
    pub fn homology_class(&self) -> Vec<i64> {
        normalize(&self.oriented_homology())
    }

    pub fn is_separating(&self) -> bool {
        self.oriented_homology().iter().all(|&x| x == 0)
    }

    /// Cut along a separating curve.
    pub fn cut_genus_partition(&self) -> Result<Partition> {
        let pieces = cut(&self.surface(), &self.word).ok_or(Error::NotSeparating)?;
        let mut pieces = pieces;
        if pieces[0].genus > pieces[1].genus {
            pieces.swap(0, 1);
        }
        Ok(Partition {
            curve: self.clone(),
            pieces,
        })
    }

    /// Is this a separating curve bounding a one-holed torus that contains `c`?
    pub fn in_s_c(&self, c: &CurveClass) -> Result<bool> {
        self.same_model(c)?;
        if !self.is_separating() || c.is_separating() {
            return Ok(false);
        }
        if self.geometric_intersection(c)? != 0 {
            return Ok(false);
        }
        let p = self.cut_genus_partition()?;
        Ok(match p.side_of(c)? {
            Side::A => p.genera().0 == 1,
            Side::B => p.genera().1 == 1,
            _ => false,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
    Crosses,
    /// The curve is separating and misses the cut; homology cannot place it.
    Undetermined,
}

/// The two sides of a separating curve, smaller genus first.
#[derive(Clone, Debug)]
pub struct Partition {
    curve: CurveClass,
    pieces: [Piece; 2],
}

impl Partition {
    pub fn genera(&self) -> (usize, usize) {
        (self.pieces[0].genus, self.pieces[1].genus)
    }

    pub fn side_of(&self, x: &CurveClass) -> Result<Side> {
        if x.geometric_intersection(&self.curve)? > 0 {
            return Ok(Side::Crosses);
        }
        if x.is_separating() {
            return Ok(Side::Undetermined);
        }
        Ok(match side_of_class(&self.pieces, &x.oriented_homology()) {
            Some(0) => Side::A,
            Some(_) => Side::B,
            None => Side::Undetermined,
        })
    }
}

/// Class of a simple arc between the two marked points of Σ_c.
///
/// Arcs are stored through the separating curve they come from: the boundary
/// of a regular neighbourhood of the arc in Σ_c is exactly the image of that
/// curve, and this correspondence is a bijection between S_c and arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcClass {
    c: CurveClass,
    d: CurveClass,
}

impl ArcClass {
    /// The arc Π(d) on Σ_c.
    pub fn pi_map(d: &CurveClass, c: &CurveClass) -> Result<ArcClass> {
        if !d.in_s_c(c)? {
            return Err(Error::NotInSc);
        }
        Ok(ArcClass {
            c: c.clone(),
            d: d.clone(),
        })
    }

    pub fn capped_curve(&self) -> &CurveClass {
        &self.c
    }

    /// The separating curve on Σ_g whose neighbourhood boundary this arc is.
    pub fn source(&self) -> &CurveClass {
        &self.d
    }

    pub fn is_isotopic(&self, other: &ArcClass) -> Result<bool> {
        if !self.c.is_isotopic(&other.c, false)? {
            return Err(Error::EndpointMismatch);
        }
        self.d.is_isotopic(&other.d, false)
    }

    /// Minimal number of interior crossings.
    ///
    /// Two arcs with common endpoints in minimal position, with `m` interior
    /// crossings, have neighbourhood boundaries meeting `4m + 4` times: four
    /// near each crossing and two near each endpoint. The boundaries live in
    /// Σ_c minus the marked points, which is Σ_g minus c.
    pub fn arc_intersection(&self, other: &ArcClass) -> Result<usize> {
        if !self.c.is_isotopic(&other.c, false)? {
            return Err(Error::EndpointMismatch);
        }
        if self.d.is_isotopic(&other.d, false)? {
            return Ok(0);
        }
        let i = self.d.geometric_intersection(&other.d)?;
        debug_assert!(i >= 4 && i % 4 == 0, "neighbourhood boundaries meet {i} times");
        Ok(i.saturating_sub(4) / 4)
    }

    /// Twist along the image in Σ_c of a curve `e` disjoint from c.
    pub fn dehn_twist(&self, e: &CurveClass, k: i64) -> Result<ArcClass> {
        if e.geometric_intersection(&self.c)? != 0 {
            return Err(Error::CrossesC);
        }
        Ok(ArcClass {
            c: self.c.clone(),
            d: self.d.dehn_twist(e, k)?,
        })
    }
}

/// Homology classes of two curves pair to the algebraic intersection number.
pub fn algebraic_pairing(x: &CurveClass, y: &CurveClass) -> i64 {
    form(&x.oriented_homology(), &y.oriented_homology())
}
