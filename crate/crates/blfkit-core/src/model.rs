//! Standard models of Σ_g with named curves.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::curves::CurveClass;
use crate::error::{Error, Result};
use crate::homology::SymplecticMatrix;
use crate::surface::Surface;
use crate::word::{inv, letter_a, letter_b};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceModel {
    genus: usize,
    marked: usize,
    surface: Surface,
}

/// A model surface: Σ_g with 0, 1 or 2 marked points.
///
/// Curves always live on the unmarked surface. Marked points are carried as
/// data so the capped surface Σ_c can say what it is.
impl SurfaceModel {
    pub fn standard(genus: usize, marked: usize) -> Result<SurfaceModel> {
        if genus == 0 || genus > 60 || marked > 2 {
            return Err(Error::UnsupportedConfiguration { genus, marked });
        }
        Ok(SurfaceModel {
            genus,
            marked,
            surface: Surface::new(genus),
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn marked_points(&self) -> Vec<String> {
        (1..=self.marked).map(|i| format!("p{i}")).collect()
    }

    pub fn surface(&self) -> &Surface {
        &self.surface
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.surface.euler_characteristic()
    }

    pub fn symplectic_form(&self) -> SymplecticMatrix {
        SymplecticMatrix::standard_form(self.genus)
    }

    pub fn generator_names(&self) -> Vec<String> {
        let g = self.genus;
        let mut v: Vec<String> = Vec::new();
        for i in 1..=g {
            v.push(format!("a{i}"));
            v.push(format!("b{i}"));
        }
        for i in 1..g {
            v.push(format!("e{i}"));
        }
        v
    }

    pub fn generator(&self, name: &str) -> Result<CurveClass> {
        let unknown = || Error::UnknownGenerator(name.into());
        let (kind, idx) = name.split_at(name.len().min(1));
        if idx.is_empty() || idx.starts_with('0') || idx.starts_with('+') {
            return Err(unknown());
        }
        let i: usize = idx.parse().map_err(|_| unknown())?;
        let g = self.genus;
        let word = match kind {
            "a" if (1..=g).contains(&i) => alloc::vec![letter_a(i)],
            "b" if (1..=g).contains(&i) => alloc::vec![letter_b(i)],
            "e" if (1..g).contains(&i) => {
                let (a, b) = (letter_a(i), letter_b(i));
                alloc::vec![a, inv(b), inv(letter_a(i + 1)), b]
            }
            _ => return Err(unknown()),
        };
        Ok(CurveClass::from_simple(g, &word))
    }

    /// The chain a1, b1, e1, b2, ..., e_{g-1}, b_g, a_g: consecutive curves meet
    /// once, all others are disjoint.
    pub fn chain(&self) -> Vec<CurveClass> {
        let g = self.genus;
        let mut names = alloc::vec![String::from("a1"), String::from("b1")];
        for i in 1..g {
            names.push(format!("e{i}"));
            names.push(format!("b{}", i + 1));
        }
        if g > 1 {
            names.push(format!("a{g}"));
        }
        names.iter().map(|n| self.generator(n).unwrap()).collect()
    }

    /// The genus g-1 surface with two marked points obtained by surgery on `c`.
    pub fn capped(&self, c: &CurveClass) -> Result<SurfaceModel> {
        if c.genus() != self.genus {
            return Err(Error::ModelMismatch {
                left: self.genus,
                right: c.genus(),
            });
        }
        if c.is_separating() {
            return Err(Error::SeparatingCurve);
        }
        if self.genus == 1 {
            // The sphere with two points; curves there are all inessential.
            return Err(Error::UnsupportedConfiguration {
                genus: 0,
                marked: 2,
            });
        }
        SurfaceModel::standard(self.genus - 1, 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_table() {
        let m = SurfaceModel::standard(2, 0).unwrap();
        assert_eq!(m.euler_characteristic(), -2);
        assert_eq!(m.generator("a1").unwrap().homology_class(), alloc::vec![1, 0, 0, 0]);
        assert!(matches!(m.generator("z9"), Err(Error::UnknownGenerator(_))));
        assert!(m.generator("e2").is_err());
        assert!(m.generator("a01").is_err());
        let e1 = m.generator("e1").unwrap();
        assert!(!e1.is_separating());
        for (n, want) in [("b1", 1), ("b2", 1), ("a1", 0), ("a2", 0)] {
            assert_eq!(e1.geometric_intersection(&m.generator(n).unwrap()).unwrap(), want, "{n}");
        }
    }

    #[test]
    fn chain_pattern() {
        for g in 1..5 {
            let m = SurfaceModel::standard(g, 0).unwrap();
            let ch = m.chain();
            assert_eq!(ch.len(), if g == 1 { 2 } else { 2 * g + 1 });
            for i in 0..ch.len() {
                for j in i + 1..ch.len() {
                    let want = usize::from(j == i + 1);
                    assert_eq!(ch[i].geometric_intersection(&ch[j]).unwrap(), want, "g={g} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn unsupported() {
        assert!(SurfaceModel::standard(0, 0).is_err());
        assert!(SurfaceModel::standard(2, 3).is_err());
        let m = SurfaceModel::standard(3, 0).unwrap();
        assert_eq!(m.symplectic_form(), SymplecticMatrix::standard_form(3));
        let capped = m.capped(&m.generator("a3").unwrap()).unwrap();
        assert_eq!((capped.genus(), capped.marked_points().len()), (2, 2));
    }
}
