//! The word calculus against geodesics drawn on the hyperbolic octagon.

mod oracle;

use blfkit::selftest::{generators, random_word, rng};
use blfkit_core::CurveClass;
use oracle::{intersection, self_intersection, Octagon};

#[test]
fn octagon_group_has_the_surface_relator() {
    assert!(Octagon::new().relator_holds());
}

#[test]
fn generator_intersections() {
    let oct = Octagon::new();
    let cases: [(&[i64], &[i64], usize); 4] = [
        (&[1], &[2], 1),
        (&[1], &[3], 0),
        (&[2], &[4], 0),
        (&[1, 2], &[2], 1),
    ];
    for (x, y, want) in cases {
        assert_eq!(intersection(&oct, x, y), Some(want), "{x:?} {y:?}");
    }
    assert_eq!(self_intersection(&oct, &[1, 2]), Some(0));
    // The geodesic of e1 runs through the vertex, which the drawing refuses.
    assert_eq!(intersection(&oct, &[1, -2, -3, 2], &[2]), None);
    // a1 b1 a1 B1 is not simple.
    assert_ne!(self_intersection(&oct, &[1, 2, 1, -2]), Some(0));
}

#[test]
fn random_curves_agree_with_geodesics() {
    let oct = Octagon::new();
    let gens = generators(2);
    let mut r = rng(7);
    let (mut done, mut skipped) = (0, 0);
    while done < 40 {
        let pick = |r: &mut _| -> CurveClass {
            let w = random_word(r, 2, 3);
            w.apply(&gens[rand::Rng::gen_range(r, 0..gens.len())]).unwrap()
        };
        let (x, y) = (pick(&mut r), pick(&mut r));
        let Some(want) = intersection(&oct, &x.codes(), &y.codes()) else {
            skipped += 1;
            continue;
        };
        assert_eq!(x.geometric_intersection(&y).unwrap(), want, "{x:?} {y:?}");
        assert_eq!(self_intersection(&oct, &x.codes()), Some(0), "{x:?}");
        done += 1;
    }
    assert!(skipped < 10, "{skipped} degenerate drawings");
}
