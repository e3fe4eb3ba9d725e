//! JSON shapes printed by the CLI. Every report carries `schema_version`.

use blfkit_core::blf::{CurveType, Hyperelliptic, Invalid, Move, Verdict};
use blfkit_core::capping::Fixes;
use blfkit_core::equivalence::{fingerprint, EquivalenceResult};
use blfkit_core::{CycleSystem, Error, ValidationReport};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

fn fixes_name(f: Fixes) -> &'static str {
    match f {
        Fixes::Plus => "plus",
        Fixes::Minus => "minus",
        Fixes::No => "none",
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Validation {
    pub schema_version: u32,
    pub verdict: String,
    pub reason: Option<String>,
    pub domain_check: String,
    pub homology_obstruction: bool,
    pub exact_kernel: Option<bool>,
}

impl From<&ValidationReport> for Validation {
    fn from(r: &ValidationReport) -> Self {
        let (verdict, reason) = match r.verdict {
            Verdict::Valid => ("valid", None),
            Verdict::Invalid(Invalid::HomologyObstruction) => ("invalid", Some("homology_obstruction")),
            Verdict::Invalid(Invalid::ExactKernel) => ("invalid", Some("exact_kernel")),
            Verdict::DomainFail => ("domain_fail", Some("monodromy does not fix c")),
        };
        Validation {
            schema_version: SCHEMA_VERSION,
            verdict: verdict.into(),
            reason: reason.map(Into::into),
            domain_check: fixes_name(r.domain_check).into(),
            homology_obstruction: r.homology_obstruction,
            exact_kernel: r.exact_kernel,
        }
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Invariants {
    pub schema_version: u32,
    pub genus: usize,
    pub n: usize,
    pub euler_characteristic: i64,
    pub signature: Option<i64>,
    pub signature_reason: Option<String>,
    pub chi_h_times_4: Option<i64>,
    pub chi_h_is_integer: Option<bool>,
    pub torelli: bool,
    /// "yes" when every curve is symmetric under the standard involution,
    /// otherwise "unknown".
    pub hyperelliptic: String,
    pub i_invariant: Option<usize>,
    pub i_invariant_reason: Option<String>,
    pub fixes_c_sign: String,
    pub cycle_types: Vec<String>,
    pub genus_warning: Option<String>,
}

fn reason(e: &Error) -> String {
    e.to_string()
}

impl Invariants {
    pub fn of(w: &CycleSystem) -> Invariants {
        let f = fingerprint(w);
        let (signature, signature_reason) = match w.signature_torelli() {
            Ok(s) => (Some(s), None),
            Err(e) => (None, Some(reason(&e))),
        };
        let chi = w.chi_h().ok();
        let (i_invariant, i_invariant_reason) = match w.i_invariant() {
            Ok(i) => (Some(i), None),
            Err(e) => (None, Some(reason(&e))),
        };
        Invariants {
            schema_version: SCHEMA_VERSION,
            genus: w.genus(),
            n: w.n(),
            euler_characteristic: w.euler_characteristic(),
            signature,
            signature_reason,
            chi_h_times_4: chi.map(|c| c.chi_h_times_4),
            chi_h_is_integer: chi.map(|c| c.is_integer),
            torelli: w.is_torelli(),
            hyperelliptic: match w.hyperelliptic() {
                Hyperelliptic::Yes => "yes",
                Hyperelliptic::Unknown => "unknown",
            }
            .into(),
            i_invariant,
            i_invariant_reason,
            fixes_c_sign: fixes_name(f.fixes_sign).into(),
            cycle_types: f
                .cycle_types
                .iter()
                .map(|t| match t {
                    CurveType::Nonseparating => "nonseparating".to_string(),
                    CurveType::Separating(a, b) => format!("separating({a},{b})"),
                })
                .collect(),
            genus_warning: (w.genus() < 3)
                .then(|| "genus below 3: results on simplified fibrations do not apply".to_string()),
        }
    }
}

/// One replayable move. `curve` names an entry of `twist_set`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum MoveJson {
    Elem { index: usize, inverse: bool },
    Rot { inverse: bool },
    Simact { curve: String, power: i64 },
}

impl MoveJson {
    pub fn from_move(m: &Move, names: &[String]) -> MoveJson {
        match *m {
            Move::Elementary { index, inverse } => MoveJson::Elem { index, inverse },
            Move::Rotation => MoveJson::Rot { inverse: false },
            Move::RotationInverse => MoveJson::Rot { inverse: true },
            Move::Simultaneous { curve, power } => MoveJson::Simact { curve: names[curve].clone(), power },
        }
    }

    pub fn to_move(&self, names: &[String]) -> Option<Move> {
        Some(match self {
            MoveJson::Elem { index, inverse } => Move::Elementary { index: *index, inverse: *inverse },
            MoveJson::Rot { inverse: false } => Move::Rotation,
            MoveJson::Rot { inverse: true } => Move::RotationInverse,
            MoveJson::Simact { curve, power } => Move::Simultaneous {
                curve: names.iter().position(|n| n == curve)?,
                power: *power,
            },
        })
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Search {
    pub schema_version: u32,
    /// "equivalent", "distinguished" or "unknown".
    pub status: String,
    /// Moves taking the first system to the second; apply in order.
    pub certificate: Option<Vec<MoveJson>>,
    pub twist_set: Vec<String>,
    pub invariant: Option<String>,
    pub left: Option<String>,
    pub right: Option<String>,
    pub states: Option<usize>,
}

impl Search {
    pub fn of(r: &EquivalenceResult, names: &[String]) -> Search {
        let mut s = Search {
            schema_version: SCHEMA_VERSION,
            status: String::new(),
            certificate: None,
            twist_set: names.to_vec(),
            invariant: None,
            left: None,
            right: None,
            states: None,
        };
        match r {
            EquivalenceResult::Equivalent(ms) => {
                s.status = "equivalent".into();
                s.certificate = Some(ms.iter().map(|m| MoveJson::from_move(m, names)).collect());
            }
            EquivalenceResult::Distinguished { invariant, left, right } => {
                s.status = "distinguished".into();
                s.invariant = Some((*invariant).into());
                s.left = Some(left.clone());
                s.right = Some(right.clone());
            }
            EquivalenceResult::Unknown { states } => {
                s.status = "unknown".into();
                s.states = Some(*states);
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use blfkit_core::blf::family_torelli;

    #[test]
    fn invariants_of_torelli_family() {
        let v = Invariants::of(&family_torelli(2, 3).unwrap());
        assert_eq!((v.euler_characteristic, v.signature, v.chi_h_times_4), (1, Some(-3), Some(-2)));
        assert!(v.torelli && v.genus_warning.is_some() && v.i_invariant.is_none());
    }

    #[test]
    fn moves_round_trip_through_json() {
        let names = vec!["a1".to_string(), "b1".to_string()];
        for m in [
            Move::Elementary { index: 2, inverse: true },
            Move::Rotation,
            Move::RotationInverse,
            Move::Simultaneous { curve: 1, power: -1 },
        ] {
            let j = serde_json::to_string(&MoveJson::from_move(&m, &names)).unwrap();
            let back: MoveJson = serde_json::from_str(&j).unwrap();
            assert_eq!(back.to_move(&names), Some(m));
        }
    }
}
