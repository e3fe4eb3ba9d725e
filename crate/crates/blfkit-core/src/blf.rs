//! Hurwitz cycle systems (c; c_1, ..., c_n) and their invariants.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::hash::{Hash, Hasher};

use crate::capping::{
    find_frame, fixes_c, phi_c_homology_obstruction, phi_c_is_trivial_in, Fixes,
};
use crate::closed::{collars, is_collar, push_off_all};
use crate::curves::{ArcClass, CurveClass};
use crate::intersect::{punctured_intersection, same_cyclic};
use crate::error::{Error, Result};
use crate::mcg::{is_symmetric_system, TwistWord};
use crate::model::SurfaceModel;

#[derive(Clone, Debug)]
pub struct CycleSystem {
    c: CurveClass,
    cycles: Vec<CurveClass>,
    /// A collar of c (see [`crate::closed::is_collar`]) that the cycles may
    /// avoid. Moves carry it along; it is checked before every use and plays
    /// no part in comparisons.
    collar: Option<CurveClass>,
}

impl PartialEq for CycleSystem {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c && self.cycles == other.cycles
    }
}

impl Eq for CycleSystem {}

impl Hash for CycleSystem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.c.hash(state);
        self.cycles.hash(state);
    }
}

impl PartialOrd for CycleSystem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CycleSystem {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.c, &self.cycles).cmp(&(&other.c, &other.cycles))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Invalid {
    HomologyObstruction,
    ExactKernel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Invalid),
    DomainFail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub domain_check: Fixes,
    pub homology_obstruction: bool,
    /// `None` when the exact test was not requested or not reached.
    pub exact_kernel: Option<bool>,
    pub verdict: Verdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    /// Elementary transformation at a 1-based position.
    Elementary { index: usize, inverse: bool },
    Rotation,
    RotationInverse,
    /// Simultaneous action by t_x^power for the curve x.
    Simultaneous { curve: usize, power: i64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChiH {
    pub chi_h_times_4: i64,
    pub is_integer: bool,
    pub almost_complex_excluded: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hyperelliptic {
    Yes,
    Unknown,
}

/// Topological type of a vanishing cycle: nonseparating, or the genera of the two sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurveType {
    Nonseparating,
    Separating(usize, usize),
}

impl CycleSystem {
    pub fn new(c: CurveClass, cycles: Vec<CurveClass>) -> Result<CycleSystem> {
        if c.is_separating() {
            return Err(Error::SeparatingCurve);
        }
        for x in &cycles {
            if x.genus() != c.genus() {
                return Err(Error::ModelMismatch {
                    left: c.genus(),
                    right: x.genus(),
                });
            }
        }
        let mut w = CycleSystem {
            c,
            cycles,
            collar: None,
        };
        let s = w.c.surface();
        w.collar = collars(&s, w.c.word())
            .into_iter()
            .map(|k| CurveClass::from_simple(w.genus(), &k))
            .find(|k| w.avoids(k));
        Ok(w)
    }

    /// Do all cycles miss c and `k` in the punctured surface?
    fn avoids(&self, k: &CurveClass) -> bool {
        let s = self.c.surface();
        self.cycles.iter().all(|d| {
            punctured_intersection(&s, d.word(), self.c.word()) == 0
                && punctured_intersection(&s, d.word(), k.word()) == 0
        })
    }

    /// The carried collar, if it still is one and the cycles avoid it. Then no
    /// bigon between cycles can hold the puncture, so punctured intersection
    /// numbers and isotopy among cycles not isotopic to c are the closed ones.
    fn checked_collar(&self) -> Option<&CurveClass> {
        let k = self.collar.as_ref()?;
        (is_collar(&self.c.surface(), self.c.word(), k.word()) && self.avoids(k)).then_some(k)
    }

    /// The same system with cycle words pushed off a collar of c, when the
    /// cycles miss c. Moves keep the result adapted, which makes invariants of
    /// long cycles cheap.
    pub fn adapted(&self) -> CycleSystem {
        if self.checked_collar().is_some() {
            return self.clone();
        }
        let s = self.c.surface();
        let g = self.genus();
        for k in collars(&s, self.c.word()) {
            let mut cycles = Vec::with_capacity(self.n());
            for d in &self.cycles {
                let (w, left) = push_off_all(&s, d.word(), &[self.c.word(), &k]);
                if left > 0 {
                    break;
                }
                cycles.push(CurveClass::from_simple(g, &w));
            }
            if cycles.len() == self.n() {
                return CycleSystem {
                    c: self.c.clone(),
                    cycles,
                    collar: Some(CurveClass::from_simple(g, &k)),
                };
            }
        }
        self.clone()
    }

    pub fn genus(&self) -> usize {
        self.c.genus()
    }

    pub fn c(&self) -> &CurveClass {
        &self.c
    }

    pub fn cycles(&self) -> &[CurveClass] {
        &self.cycles
    }

    pub fn n(&self) -> usize {
        self.cycles.len()
    }

    /// The monodromy t_{c_n} ... t_{c_1}; t_{c_1} acts first.
    pub fn word(&self) -> TwistWord {
        let mut w = TwistWord::empty(self.genus());
        for x in self.cycles.iter().rev() {
            w.push(x.clone(), 1);
        }
        w
    }

    pub fn validate(&self, exact: bool) -> ValidationReport {
        let w = self.word();
        let domain_check = fixes_c(&w, &self.c).expect("c is nonseparating");
        if domain_check == Fixes::No {
            return ValidationReport {
                domain_check,
                homology_obstruction: false,
                exact_kernel: None,
                verdict: Verdict::DomainFail,
            };
        }
        let homology_obstruction =
            phi_c_homology_obstruction(&w, &self.c).expect("domain checked");
        let mut report = ValidationReport {
            domain_check,
            homology_obstruction,
            exact_kernel: None,
            verdict: Verdict::Valid,
        };
        if !homology_obstruction {
            report.verdict = Verdict::Invalid(Invalid::HomologyObstruction);
            if !exact {
                return report;
            }
        }
        if exact {
            let ok = find_frame(&self.c)
                .and_then(|f| phi_c_is_trivial_in(&w, &f))
                .unwrap_or(false);
            report.exact_kernel = Some(ok);
            if !ok && homology_obstruction {
                report.verdict = Verdict::Invalid(Invalid::ExactKernel);
            }
        }
        report
    }

    /// (.., c_i, c_{i+1}, ..) → (.., c_{i+1}, t_{c_{i+1}}(c_i), ..), or its inverse
    /// (.., t_{c_i}⁻¹(c_{i+1}), c_i, ..). The index is 1-based.
    pub fn elementary_transformation(&self, i: usize, inverse: bool) -> Result<CycleSystem> {
        let n = self.n();
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, len: n });
        }
        let (x, y) = (&self.cycles[i - 1], &self.cycles[i]);
        let (nx, ny) = if inverse {
            (y.dehn_twist(x, -1)?, x.clone())
        } else {
            (y.clone(), x.dehn_twist(y, 1)?)
        };
        let (t, k) = if inverse { (x, -1) } else { (y, 1) };
        let mut out = self.clone();
        out.cycles[i - 1] = nx;
        out.cycles[i] = ny;
        out.collar = self.collar.as_ref().map(|q| q.dehn_twist(t, k)).transpose()?;
        Ok(out)
    }

    pub fn simultaneous_action(&self, h: &TwistWord) -> Result<CycleSystem> {
        let c = h.apply(&self.c)?;
        let cycles = self
            .cycles
            .iter()
            .map(|x| h.apply(x))
            .collect::<Result<Vec<_>>>()?;
        let collar = self.collar.as_ref().map(|k| h.apply(k)).transpose()?;
        Ok(CycleSystem { c, cycles, collar })
    }

    /// (c; c_1, ..., c_n) → (t_{c_1}(c); c_2, ..., c_n, c_1).
    pub fn rotation(&self) -> Result<CycleSystem> {
        let first = self.cycles.first().ok_or(Error::EmptyCycles)?;
        let c = self.c.dehn_twist(first, 1)?;
        let mut cycles: Vec<CurveClass> = self.cycles[1..].to_vec();
        cycles.push(first.clone());
        let collar = self.collar.as_ref().map(|k| k.dehn_twist(first, 1)).transpose()?;
        Ok(CycleSystem { c, cycles, collar })
    }

    /// (c; c_1, ..., c_n) → (t_{c_n}⁻¹(c); c_n, c_1, ..., c_{n-1}), undoing [`Self::rotation`].
    pub fn rotation_inverse(&self) -> Result<CycleSystem> {
        let last = self.cycles.last().ok_or(Error::EmptyCycles)?;
        let c = self.c.dehn_twist(last, -1)?;
        let mut cycles = alloc::vec![last.clone()];
        cycles.extend_from_slice(&self.cycles[..self.n() - 1]);
        let collar = self.collar.as_ref().map(|k| k.dehn_twist(last, -1)).transpose()?;
        Ok(CycleSystem { c, cycles, collar })
    }

    /// Apply a move; simultaneous actions twist along the curve at the given
    /// position of `twist_set`.
    pub fn apply_move(&self, m: &Move, twist_set: &[CurveClass]) -> Result<CycleSystem> {
        match *m {
            Move::Elementary { index, inverse } => self.elementary_transformation(index, inverse),
            Move::Rotation => self.rotation(),
            Move::RotationInverse => self.rotation_inverse(),
            Move::Simultaneous { curve, power } => {
                let x = twist_set.get(curve).ok_or(Error::IndexOutOfRange {
                    index: curve,
                    len: twist_set.len(),
                })?;
                self.simultaneous_action(&TwistWord::twist(x, power))
            }
        }
    }

    /// Entrywise isotopy, unoriented.
    pub fn is_isotopic(&self, other: &CycleSystem) -> Result<bool> {
        if self.n() != other.n() || !self.c.is_isotopic(&other.c, false)? {
            return Ok(false);
        }
        // With a shared collar, cycles off c compare as punctured words.
        let shared = match (self.checked_collar(), other.checked_collar()) {
            (Some(k), Some(q)) => self.c == other.c && k == q,
            _ => false,
        };
        let hc = self.c.homology_class();
        for (x, y) in self.cycles.iter().zip(&other.cycles) {
            let same = if shared && x.homology_class() != hc {
                same_cyclic(x.word(), y.word())
            } else {
                x.is_isotopic(y, false)?
            };
            if !same {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn euler_characteristic(&self) -> i64 {
        6 - 4 * self.genus() as i64 + self.n() as i64
    }

    pub fn is_torelli(&self) -> bool {
        self.cycles.iter().all(|x| x.is_separating())
    }

    /// σ = -n for Torelli systems: the round cobordism contributes nothing
    /// when the monodromy acts trivially on homology.
    pub fn signature_torelli(&self) -> Result<i64> {
        if !self.is_torelli() {
            return Err(Error::NotTorelli);
        }
        Ok(-(self.n() as i64))
    }

    pub fn chi_h(&self) -> Result<ChiH> {
        let v = self.euler_characteristic() + self.signature_torelli()?;
        let is_integer = v.rem_euclid(4) == 0;
        Ok(ChiH {
            chi_h_times_4: v,
            is_integer,
            almost_complex_excluded: !is_integer,
        })
    }

    pub fn hyperelliptic(&self) -> Hyperelliptic {
        let model = SurfaceModel::standard(self.genus(), 0).expect("valid genus");
        let mut all = alloc::vec![self.c.clone()];
        all.extend(self.cycles.iter().cloned());
        match is_symmetric_system(&model, &all) {
            Ok(true) => Hyperelliptic::Yes,
            _ => Hyperelliptic::Unknown,
        }
    }

    /// The minimal intersection of the arcs of the two cycles, for n = 2 systems
    /// whose cycles both lie in S_c.
    pub fn i_invariant(&self) -> Result<usize> {
        if self.n() != 2 {
            return Err(Error::NotApplicable("needs exactly two vanishing cycles"));
        }
        let arc = |d: &CurveClass| {
            ArcClass::pi_map(d, &self.c).map_err(|_| Error::NotApplicable("cycle not in S_c"))
        };
        let (a, b) = (arc(&self.cycles[0])?, arc(&self.cycles[1])?);
        if self.checked_collar().is_some() {
            // Separating cycles are never isotopic to c.
            let (x, y) = (self.cycles[0].word(), self.cycles[1].word());
            if same_cyclic(x, y) {
                return Ok(0);
            }
            let i = punctured_intersection(&self.c.surface(), x, y);
            return Ok(i.saturating_sub(4) / 4);
        }
        a.arc_intersection(&b)
    }

    pub fn cycle_types(&self) -> Vec<CurveType> {
        let mut v: Vec<CurveType> = self
            .cycles
            .iter()
            .map(|x| match x.cut_genus_partition() {
                Ok(p) => {
                    let (a, b) = p.genera();
                    CurveType::Separating(a, b)
                }
                Err(_) => CurveType::Nonseparating,
            })
            .collect();
        v.sort();
        v
    }
}

/// The handle boundary [a1, b1], which lies in S_c for c = a1.
pub fn handle_boundary(genus: usize) -> CurveClass {
    CurveClass::from_simple(genus, &[0, 2, 1, 3])
}

fn check_family(genus: usize) -> Result<SurfaceModel> {
    if !(2..=60).contains(&genus) {
        return Err(Error::BadParams("genus must be at least 2"));
    }
    SurfaceModel::standard(genus, 0)
}

/// (a1; d, ..., d) with d the boundary of the handle carrying a1.
pub fn family_torelli(genus: usize, n: usize) -> Result<CycleSystem> {
    let m = check_family(genus)?;
    if n == 0 {
        return Err(Error::BadParams("n must be at least 1"));
    }
    let d = handle_boundary(genus);
    Ok(CycleSystem::new(m.generator("a1")?, alloc::vec![d; n])?.adapted())
}

/// The curves (d, d1, d2⁰) of the nonisomorphic family, all in S_c for c = a1.
///
/// With h = [a1, b1]: d = t_{b2}⁻¹ t_{e1}⁻¹ (h), d1 = h, d2⁰ = t_{e1}³ (h).
pub fn nonisomorphic_curves(genus: usize) -> Result<[CurveClass; 3]> {
    let m = check_family(genus)?;
    let (e1, b2) = (m.generator("e1")?, m.generator("b2")?);
    let h = handle_boundary(genus);
    let d = TwistWord::from_letters(genus, alloc::vec![(b2, -1), (e1.clone(), -1)])?.apply(&h)?;
    let d2 = TwistWord::twist(&e1, 3).apply(&h)?;
    Ok([d, h, d2])
}

/// (a1; d1, t_dⁿ(d2⁰)), whose I-invariant is 4n + 2.
pub fn family_nonisomorphic(genus: usize, n: usize) -> Result<CycleSystem> {
    let m = check_family(genus)?;
    let [d, d1, d2] = nonisomorphic_curves(genus)?;
    let d2n = TwistWord::twist(&d, n as i64).apply(&d2)?;
    Ok(CycleSystem::new(m.generator("a1")?, alloc::vec![d1, d2n])?.adapted())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torelli_family() {
        let w = family_torelli(2, 1).unwrap();
        assert_eq!(w.validate(true).verdict, Verdict::Valid);
        assert_eq!((w.euler_characteristic(), w.signature_torelli().unwrap()), (-1, -1));
        let w = family_torelli(3, 2).unwrap();
        assert_eq!((w.euler_characteristic(), w.signature_torelli().unwrap()), (-4, -2));
        assert!(w.word().homology_action().is_identity());
        assert_eq!(w.hyperelliptic(), Hyperelliptic::Yes);
        assert!(family_torelli(1, 1).is_err());
        assert!(family_torelli(2, 0).is_err());
    }

    #[test]
    fn nonisomorphic_family() {
        for n in 0..3 {
            let w = family_nonisomorphic(2, n).unwrap();
            assert_eq!(w.i_invariant().unwrap(), 4 * n + 2);
            assert_eq!(w.validate(true).verdict, Verdict::Valid);
            let moved = w.elementary_transformation(1, false).unwrap();
            assert_eq!(moved.i_invariant().unwrap(), 4 * n + 2);
        }
    }

    #[test]
    fn kernel_systems() {
        for g in 2..4 {
            let m = SurfaceModel::standard(g, 0).unwrap();
            let c = m.generator(&alloc::format!("a{g}")).unwrap();
            let beta = m.generator(&alloc::format!("b{g}")).unwrap();
            let tc = CycleSystem::new(c.clone(), alloc::vec![c.clone()]).unwrap();
            assert_eq!(tc.validate(true).verdict, Verdict::Valid);
            let delta = CycleSystem::new(
                c.clone(),
                alloc::vec![beta.clone(), c.clone(), beta.clone(), c.clone(), beta, c.clone()],
            )
            .unwrap();
            let r = delta.validate(true);
            assert_eq!((r.domain_check, r.verdict), (Fixes::Minus, Verdict::Valid));
        }
        let m = SurfaceModel::standard(2, 0).unwrap();
        let bad = CycleSystem::new(m.generator("a2").unwrap(), alloc::vec![m.generator("a1").unwrap()]).unwrap();
        let r = bad.validate(true);
        assert_eq!(r.verdict, Verdict::Invalid(Invalid::HomologyObstruction));
        assert_eq!(r.exact_kernel, Some(false));
    }

    #[test]
    fn moves_round_trip() {
        let w = family_nonisomorphic(2, 1).unwrap();
        let f = w.elementary_transformation(1, false).unwrap();
        assert!(f.elementary_transformation(1, true).unwrap().is_isotopic(&w).unwrap());
        assert!(w.elementary_transformation(2, false).is_err());
        let r = w.rotation().unwrap();
        // The rotation is t_{c1} acting on everything, then an inverse elementary move.
        let via = w
            .simultaneous_action(&TwistWord::twist(&w.cycles()[0], 1))
            .unwrap()
            .elementary_transformation(1, true)
            .unwrap();
        assert!(r.is_isotopic(&via).unwrap());
    }
}
