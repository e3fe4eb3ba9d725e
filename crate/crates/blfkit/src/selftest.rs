//! Quick self-checks, and the random generators they share with the test suite.

use std::time::Instant;

use blfkit_core::blf::{family_nonisomorphic, family_torelli, handle_boundary, Move, Verdict};
use blfkit_core::capping::{kernel_generator_pointpush, phi_c_is_trivial, PushLoop};
use blfkit_core::curves::algebraic_pairing;
use blfkit_core::equivalence::{replay, search_equivalent, Budget, EquivalenceResult};
use blfkit_core::{CurveClass, CycleSystem, SurfaceModel, TwistWord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::doc;

pub struct Check {
    pub id: u32,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub seconds: f64,
}

impl Check {
    pub fn line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        format!("[{status}] {:>2} {} ({:.2}s) {}", self.id, self.name, self.seconds, self.detail)
    }
}

fn timed(id: u32, name: &'static str, f: impl FnOnce() -> Result<String, String>) -> Check {
    let t = Instant::now();
    let r = f();
    let seconds = t.elapsed().as_secs_f64();
    let (pass, detail) = match r {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Check { id, name, pass, detail, seconds }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn generators(genus: usize) -> Vec<CurveClass> {
    let m = SurfaceModel::standard(genus, 0).expect("valid genus");
    m.generator_names().iter().map(|n| m.generator(n).unwrap()).collect()
}

/// A product of `len` random generator twists with exponents ±1.
pub fn random_word(rng: &mut impl Rng, genus: usize, len: usize) -> TwistWord {
    let gens = generators(genus);
    let mut w = TwistWord::empty(genus);
    for _ in 0..len {
        let k = if rng.gen_bool(0.5) { 1 } else { -1 };
        w.push(gens[rng.gen_range(0..gens.len())].clone(), k);
    }
    w
}

/// A valid system built from kernel generators: blocks (c), the Δ block
/// (β, c, β, c, β, c) and (d) for d in S_c, all moved by a random mapping class.
pub fn random_valid_system(rng: &mut impl Rng, genus: usize, max_len: usize, spread: usize) -> CycleSystem {
    let m = SurfaceModel::standard(genus, 0).expect("valid genus");
    let len = rng.gen_range(0..=spread);
    let h = random_word(rng, genus, len);
    let c = h.apply(&m.generator("a1").unwrap()).unwrap();
    let beta0 = h.apply(&m.generator("b1").unwrap()).unwrap();
    let d = h.apply(&handle_boundary(genus)).unwrap();
    let mut cycles = Vec::new();
    loop {
        let room = max_len - cycles.len();
        let block = rng.gen_range(0..3);
        match block {
            0 => cycles.push(c.clone()),
            1 if room >= 6 => {
                let beta = beta0.dehn_twist(&c, rng.gen_range(-1..=1)).unwrap();
                for _ in 0..3 {
                    cycles.push(beta.clone());
                    cycles.push(c.clone());
                }
            }
            _ => cycles.push(d.clone()),
        }
        if cycles.len() >= max_len || rng.gen_bool(0.4) {
            break;
        }
    }
    CycleSystem::new(c, cycles).expect("c is nonseparating").adapted()
}

/// A move applicable to `w`; simultaneous actions index `twists` generators.
pub fn random_move(rng: &mut impl Rng, n: usize, twists: usize) -> Move {
    loop {
        match rng.gen_range(0..4) {
            0 if n >= 2 => {
                return Move::Elementary { index: rng.gen_range(1..n), inverse: rng.gen_bool(0.5) }
            }
            1 if n >= 1 => return Move::Rotation,
            2 if n >= 1 => return Move::RotationInverse,
            3 => {
                return Move::Simultaneous {
                    curve: rng.gen_range(0..twists),
                    power: if rng.gen_bool(0.5) { 1 } else { -1 },
                }
            }
            _ => {}
        }
    }
}

fn basic_systems(genus: usize) -> Vec<(&'static str, CycleSystem)> {
    let m = SurfaceModel::standard(genus, 0).unwrap();
    let (c, b) = (m.generator("a1").unwrap(), m.generator("b1").unwrap());
    let delta = [b.clone(), c.clone(), b.clone(), c.clone(), b, c.clone()].to_vec();
    vec![
        ("(c;c)", CycleSystem::new(c.clone(), vec![c.clone()]).unwrap()),
        ("delta", CycleSystem::new(c.clone(), delta).unwrap()),
        ("point push", CycleSystem::new(c, vec![handle_boundary(genus)]).unwrap()),
    ]
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

pub fn run_all() -> Vec<Check> {
    let mut out = Vec::new();
    out.push(timed(1, "kernel generators validate", || {
        for g in [2, 3] {
            for (name, w) in basic_systems(g) {
                let r = w.validate(true);
                check(r.verdict == Verdict::Valid && r.exact_kernel == Some(true), || {
                    format!("{name} at genus {g}: {r:?}")
                })?;
            }
            let c = SurfaceModel::standard(g, 0).unwrap().generator("a1").unwrap();
            let p = kernel_generator_pointpush(&c, &PushLoop::Standard).map_err(err)?;
            check(phi_c_is_trivial(&p, &c).map_err(err)?, || format!("point push at genus {g}"))?;
        }
        Ok("6 systems".into())
    }));
    out.push(timed(2, "homology obstruction", || {
        let m = SurfaceModel::standard(2, 0).unwrap();
        let w = CycleSystem::new(m.generator("a2").unwrap(), vec![m.generator("a1").unwrap()]).unwrap();
        let r = w.validate(true);
        check(!r.homology_obstruction && r.exact_kernel == Some(false), || format!("{r:?}"))?;
        Ok("(a2; a1) rejected".into())
    }));
    out.push(timed(3, "I-invariant of the family", || {
        for n in 0..3 {
            let i = family_nonisomorphic(2, n).and_then(|w| w.i_invariant()).map_err(err)?;
            check(i == 4 * n + 2, || format!("n={n}: I={i}"))?;
        }
        Ok("n = 0..2".into())
    }));
    out.push(timed(4, "I under moves", || {
        let gens = generators(2);
        let bad: Vec<String> = (0..12u64)
            .into_par_iter()
            .filter_map(|seed| {
                let mut r = rng(seed);
                let n = r.gen_range(0..2);
                let mut w = family_nonisomorphic(2, n).unwrap();
                for _ in 0..r.gen_range(1..=2) {
                    w = w.apply_move(&random_move(&mut r, 2, gens.len()), &gens).unwrap();
                }
                let i = w.i_invariant().ok();
                (i != Some(4 * n + 2)).then(|| format!("seed {seed}: {i:?}"))
            })
            .collect();
        check(bad.is_empty(), || bad.join("; "))?;
        Ok("12 sequences".into())
    }));
    out.push(timed(5, "Torelli family numerics", || {
        for g in 2..4 {
            for n in 1..4 {
                let w = family_torelli(g, n).map_err(err)?;
                let (gi, ni) = (g as i64, n as i64);
                let chi = w.chi_h().map_err(err)?;
                let got = (w.euler_characteristic(), w.signature_torelli().map_err(err)?, chi.chi_h_times_4);
                check(got == (6 - 4 * gi + ni, -ni, 6 - 4 * gi) && !chi.is_integer, || {
                    format!("g={g} n={n}: {got:?}")
                })?;
            }
        }
        Ok("g = 2..3, n = 1..3".into())
    }));
    out.push(timed(6, "Euler characteristic decomposition", || {
        for g in 2..4i64 {
            for n in 1..4i64 {
                let w = family_torelli(g as usize, n as usize).map_err(err)?;
                let parts = (8 - 4 * g) + 3 * n - 2 * (n + 1);
                check(w.euler_characteristic() == parts, || format!("g={g} n={n}"))?;
            }
        }
        Ok("g = 2..3, n = 1..3".into())
    }));
    out.push(timed(7, "moves preserve validity", || {
        let bad: Vec<String> = (0..24u64)
            .into_par_iter()
            .filter_map(|seed| move_soundness(seed).err())
            .collect();
        check(bad.is_empty(), || bad.join("; "))?;
        Ok("24 systems".into())
    }));
    out.push(timed(8, "elementary moves keep the monodromy", || {
        for seed in 0..8u64 {
            let mut r = rng(100 + seed);
            let w = random_valid_system(&mut r, 2, 4, 1);
            if w.n() < 2 {
                continue;
            }
            let i = r.gen_range(1..w.n());
            let v = w.elementary_transformation(i, false).map_err(err)?;
            let q = w.word().then(&v.word().inverse()).map_err(err)?;
            check(q.is_identity(), || format!("seed {seed}"))?;
        }
        Ok("8 systems".into())
    }));
    out.push(timed(9, "curve calculus", || {
        let gens = generators(2);
        for seed in 0..10u64 {
            let mut r = rng(200 + seed);
            let x = random_word(&mut r, 2, 2).apply(&gens[r.gen_range(0..gens.len())]).map_err(err)?;
            let y = random_word(&mut r, 2, 2).apply(&gens[r.gen_range(0..gens.len())]).map_err(err)?;
            let h = random_word(&mut r, 2, 2);
            let i = x.geometric_intersection(&y).map_err(err)?;
            check(i == y.geometric_intersection(&x).map_err(err)?, || "symmetry".into())?;
            let hi = h.apply(&x).map_err(err)?.geometric_intersection(&h.apply(&y).map_err(err)?);
            check(hi.map_err(err)? == i, || "action law".into())?;
            check(algebraic_pairing(&x, &y).unsigned_abs() as usize <= i, || "pairing bound".into())?;
            let k = r.gen_range(-2..=2i64);
            let t = x.dehn_twist(&y, k).map_err(err)?;
            let a = algebraic_pairing(&x, &y);
            let want: Vec<i64> = x
                .oriented_homology()
                .iter()
                .zip(y.oriented_homology())
                .map(|(u, v)| u + k * a * v)
                .collect();
            check(t.oriented_homology() == want, || "homology of a twist".into())?;
            let grown = t.geometric_intersection(&x).map_err(err)?;
            check(grown == k.unsigned_abs() as usize * i * i, || {
                format!("growth: k={k} i={i} got {grown}")
            })?;
        }
        Ok("10 random pairs".into())
    }));
    out.push(timed(10, "equivalence search", || {
        let gens = generators(2);
        for seed in 0..3u64 {
            let mut r = rng(300 + seed);
            let w = family_nonisomorphic(2, 0).unwrap();
            let mut v = w.clone();
            for _ in 0..2 {
                v = v.apply_move(&random_move(&mut r, 2, gens.len()), &gens).map_err(err)?;
            }
            let budget = Budget::standard(2, 4, 20_000);
            match search_equivalent(&w, &v, &budget).map_err(err)? {
                EquivalenceResult::Equivalent(ms) => {
                    let end = replay(&w, &ms, &budget.twist_set).map_err(err)?;
                    check(end.is_isotopic(&v).map_err(err)?, || "certificate does not replay".into())?;
                }
                other => return Err(format!("seed {seed}: {other:?}")),
            }
        }
        let a = family_nonisomorphic(2, 0).unwrap();
        let b = family_nonisomorphic(2, 1).unwrap();
        let r = search_equivalent(&a, &b, &Budget::standard(2, 2, 1000)).map_err(err)?;
        check(matches!(r, EquivalenceResult::Distinguished { invariant: "i_invariant", .. }), || {
            format!("{r:?}")
        })?;
        Ok("3 trials".into())
    }));
    out.push(timed(11, "documents and exit codes", || {
        for seed in 0..10u64 {
            let mut r = rng(400 + seed);
            let w = random_valid_system(&mut r, 2 + (seed as usize % 2), 8, 2);
            let d = doc::from_system(&w, vec![("seed".into(), seed.to_string())]);
            let text = doc::print(&d);
            let back = doc::parse(&text).map_err(err)?;
            check(back.doc == d && doc::print(&back.doc) == text, || format!("seed {seed}"))?;
        }
        Ok("10 documents".into())
    }));
    out
}

/// One random valid system, every kind of move, and the expected monodromy afterwards.
pub fn move_soundness(seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    let g = 2 + r.gen_range(0..2);
    let w = random_valid_system(&mut r, g, 8, 2);
    let gens = generators(g);
    let m = w.word().homology_action();
    let mut moves = vec![Move::Rotation, Move::RotationInverse];
    if w.n() >= 2 {
        let i = r.gen_range(1..w.n());
        moves.push(Move::Elementary { index: i, inverse: false });
        moves.push(Move::Elementary { index: i, inverse: true });
    }
    let k = r.gen_range(0..gens.len());
    moves.push(Move::Simultaneous { curve: k, power: 1 });
    for mv in moves {
        let v = w.apply_move(&mv, &gens).map_err(err)?;
        let rep = v.validate(true);
        if rep.verdict != Verdict::Valid || rep.exact_kernel != Some(true) {
            return Err(format!("seed {seed} {mv:?}: {rep:?}"));
        }
        // The product is unchanged by elementary moves and conjugated otherwise.
        let h = match mv {
            Move::Elementary { .. } => TwistWord::empty(g),
            Move::Rotation => TwistWord::twist(&w.cycles()[0], 1),
            Move::RotationInverse => TwistWord::twist(&w.cycles()[w.n() - 1], -1),
            Move::Simultaneous { curve, power } => TwistWord::twist(&gens[curve], power),
        };
        let hm = h.homology_action();
        let want = hm.mul(&m).mul(&h.inverse().homology_action());
        if v.word().homology_action() != want {
            return Err(format!("seed {seed} {mv:?}: homology action"));
        }
    }
    Ok(())
}
