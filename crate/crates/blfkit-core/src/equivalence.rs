//! Bounded search for Hurwitz equivalences, with invariants for quick negatives.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::blf::{CurveType, CycleSystem, Move};
use crate::capping::{fixes_c, Fixes};
use crate::curves::CurveClass;
use crate::error::{Error, Result};
use crate::model::SurfaceModel;

/// Move-invariant data; unequal fingerprints rule out equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub genus: usize,
    pub n: usize,
    pub fixes_sign: Fixes,
    pub cycle_types: Vec<CurveType>,
    pub i_invariant: Option<usize>,
}

pub fn fingerprint(w: &CycleSystem) -> Fingerprint {
    Fingerprint {
        genus: w.genus(),
        n: w.n(),
        fixes_sign: fixes_c(&w.word(), w.c()).expect("c is nonseparating"),
        cycle_types: w.cycle_types(),
        i_invariant: w.i_invariant().ok(),
    }
}

#[derive(Clone, Debug)]
pub struct Budget {
    pub max_depth: usize,
    pub max_states: usize,
    /// Curves whose single twists (either sign) act simultaneously.
    pub twist_set: Vec<CurveClass>,
}

impl Budget {
    /// Twists along the standard generators a_i, b_i, e_i.
    pub fn standard(genus: usize, max_depth: usize, max_states: usize) -> Budget {
        let m = SurfaceModel::standard(genus, 0).expect("valid genus");
        let twist_set = m
            .generator_names()
            .iter()
            .map(|n| m.generator(n).unwrap())
            .collect();
        Budget {
            max_depth,
            max_states,
            twist_set,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivalenceResult {
    /// Moves taking the first system to one entrywise isotopic to the second.
    Equivalent(Vec<Move>),
    Distinguished {
        invariant: &'static str,
        left: String,
        right: String,
    },
    Unknown { states: usize },
}

fn distinguish(a: &Fingerprint, b: &Fingerprint) -> Option<EquivalenceResult> {
    let d = |invariant, left: String, right: String| {
        Some(EquivalenceResult::Distinguished {
            invariant,
            left,
            right,
        })
    };
    if a.genus != b.genus {
        return d("genus", format!("{}", a.genus), format!("{}", b.genus));
    }
    if a.n != b.n {
        return d("n", format!("{}", a.n), format!("{}", b.n));
    }
    if a.fixes_sign != b.fixes_sign {
        return d("fixes_c_sign", format!("{:?}", a.fixes_sign), format!("{:?}", b.fixes_sign));
    }
    if a.cycle_types != b.cycle_types {
        return d("cycle_types", format!("{:?}", a.cycle_types), format!("{:?}", b.cycle_types));
    }
    if a.i_invariant != b.i_invariant {
        let show = |v: Option<usize>| v.map_or(String::from("undefined"), |x| format!("{x}"));
        return d("i_invariant", show(a.i_invariant), show(b.i_invariant));
    }
    None
}

/// The inverse of a move, as applied to the system it produced.
pub fn inverse_move(m: &Move) -> Move {
    match *m {
        Move::Elementary { index, inverse } => Move::Elementary {
            index,
            inverse: !inverse,
        },
        Move::Rotation => Move::RotationInverse,
        Move::RotationInverse => Move::Rotation,
        Move::Simultaneous { curve, power } => Move::Simultaneous {
            curve,
            power: -power,
        },
    }
}

/// Cheap moves first: elementary moves on long cycles blow words up, and a
/// meeting found by a rotation or a generator twist ends the level early.
fn moves(n: usize, twists: usize) -> Vec<Move> {
    let mut v = Vec::new();
    if n > 0 {
        v.push(Move::Rotation);
        v.push(Move::RotationInverse);
    }
    for curve in 0..twists {
        for power in [1, -1] {
            v.push(Move::Simultaneous { curve, power });
        }
    }
    for index in 1..n {
        for inverse in [false, true] {
            v.push(Move::Elementary { index, inverse });
        }
    }
    v
}

type Bucket = Vec<Vec<i64>>;

fn bucket(w: &CycleSystem) -> Bucket {
    let mut b = alloc::vec![w.c().homology_class()];
    b.extend(w.cycles().iter().map(|x| x.homology_class()));
    b
}

struct Side {
    /// State, parent index and the move that produced it.
    states: Vec<(CycleSystem, usize, Option<Move>)>,
    seen: BTreeMap<CycleSystem, ()>,
    by_bucket: BTreeMap<Bucket, Vec<usize>>,
    frontier: Vec<usize>,
}

impl Side {
    fn new(w: &CycleSystem) -> Side {
        let mut s = Side {
            states: Vec::new(),
            seen: BTreeMap::new(),
            by_bucket: BTreeMap::new(),
            frontier: Vec::new(),
        };
        s.insert(w.clone(), 0, None);
        s
    }

    fn insert(&mut self, w: CycleSystem, parent: usize, m: Option<Move>) -> Option<usize> {
        if self.seen.insert(w.clone(), ()).is_some() {
            return None;
        }
        let id = self.states.len();
        self.by_bucket.entry(bucket(&w)).or_default().push(id);
        self.states.push((w, parent, m));
        self.frontier.push(id);
        Some(id)
    }

    fn path(&self, mut id: usize) -> Vec<Move> {
        let mut p = Vec::new();
        while let Some(m) = self.states[id].2 {
            p.push(m);
            id = self.states[id].1;
        }
        p.reverse();
        p
    }

    /// Total word length of the frontier, a proxy for the cost of expanding it.
    fn frontier_cost(&self) -> usize {
        self.frontier
            .iter()
            .map(|&id| {
                let w = &self.states[id].0;
                w.cycles().iter().map(|x| x.word().len()).sum::<usize>() + w.c().word().len()
            })
            .sum()
    }

    fn meet(&self, w: &CycleSystem) -> Result<Option<usize>> {
        if let Some(ids) = self.by_bucket.get(&bucket(w)) {
            for &id in ids {
                if self.states[id].0.is_isotopic(w)? {
                    return Ok(Some(id));
                }
            }
        }
        Ok(None)
    }
}

/// Breadth-first search from both ends. Each level expands the side whose
/// frontier has less total word length, forward on ties; the total number of
/// levels is at most `max_depth`. Expansion order is fixed, so results depend
/// only on the inputs and the budget.
pub fn search_equivalent(
    w1: &CycleSystem,
    w2: &CycleSystem,
    budget: &Budget,
) -> Result<EquivalenceResult> {
    if w1.genus() != w2.genus() {
        return Err(Error::ModelMismatch {
            left: w1.genus(),
            right: w2.genus(),
        });
    }
    if let Some(r) = distinguish(&fingerprint(w1), &fingerprint(w2)) {
        return Ok(r);
    }
    if w1.is_isotopic(w2)? {
        return Ok(EquivalenceResult::Equivalent(Vec::new()));
    }
    let all = moves(w1.n(), budget.twist_set.len());
    let mut fwd = Side::new(w1);
    let mut bwd = Side::new(w2);
    let certificate = |fwd: &Side, f: usize, bwd: &Side, b: usize| {
        let mut p = fwd.path(f);
        p.extend(bwd.path(b).iter().rev().map(inverse_move));
        EquivalenceResult::Equivalent(p)
    };
    for _ in 0..budget.max_depth {
        let forward = match (fwd.frontier.is_empty(), bwd.frontier.is_empty()) {
            (true, true) => break,
            (false, true) => true,
            (true, false) => false,
            (false, false) => fwd.frontier_cost() <= bwd.frontier_cost(),
        };
        let (grow, other) = if forward {
            (&mut fwd, &bwd)
        } else {
            (&mut bwd, &fwd)
        };
        let frontier = core::mem::take(&mut grow.frontier);
        for id in frontier {
            for m in &all {
                if grow.states.len() + other.states.len() >= budget.max_states {
                    return Ok(EquivalenceResult::Unknown {
                        states: grow.states.len() + other.states.len(),
                    });
                }
                let next = grow.states[id].0.apply_move(m, &budget.twist_set)?;
                if let Some(new_id) = grow.insert(next.clone(), id, Some(*m)) {
                    if let Some(hit) = other.meet(&next)? {
                        return Ok(if forward {
                            certificate(grow, new_id, other, hit)
                        } else {
                            certificate(other, hit, grow, new_id)
                        });
                    }
                }
            }
        }
    }
    Ok(EquivalenceResult::Unknown {
        states: fwd.states.len() + bwd.states.len(),
    })
}

/// Replay a certificate.
pub fn replay(w: &CycleSystem, moves: &[Move], twist_set: &[CurveClass]) -> Result<CycleSystem> {
    let mut cur = w.clone();
    for m in moves {
        cur = cur.apply_move(m, twist_set)?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blf::family_nonisomorphic;

    #[test]
    fn finds_short_equivalences() {
        let w = family_nonisomorphic(2, 0).unwrap();
        let budget = Budget::standard(2, 4, 20_000);
        let target = w
            .elementary_transformation(1, false)
            .unwrap()
            .apply_move(&Move::Simultaneous { curve: 2, power: 1 }, &budget.twist_set)
            .unwrap();
        match search_equivalent(&w, &target, &budget).unwrap() {
            EquivalenceResult::Equivalent(p) => {
                let end = replay(&w, &p, &budget.twist_set).unwrap();
                assert!(end.is_isotopic(&target).unwrap());
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            search_equivalent(&w, &w, &budget).unwrap(),
            EquivalenceResult::Equivalent(Vec::new())
        );
    }

    #[test]
    fn distinguishes_family_members() {
        let budget = Budget::standard(2, 2, 100);
        let r = search_equivalent(
            &family_nonisomorphic(2, 1).unwrap(),
            &family_nonisomorphic(2, 3).unwrap(),
            &budget,
        )
        .unwrap();
        assert_eq!(
            r,
            EquivalenceResult::Distinguished {
                invariant: "i_invariant",
                left: "6".into(),
                right: "14".into()
            }
        );
    }
}
