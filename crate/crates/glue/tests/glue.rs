use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sl3_glue::*;
use sl3_lamination::*;
use sl3_rational::{frac, q, Q};
use sl3_reconstruct::reconstruct_pinned;
use sl3_seed::IndexSet;
use sl3_surface::*;
use sl3_tropical::{apply_flip, Kind, TropicalPoint};

fn surf(s: &str) -> Triangulation {
    build(&s.parse().unwrap()).unwrap()
}

fn two_triangles() -> Triangulation {
    disjoint_union(&surf("triangle"), &surf("triangle"), "'").unwrap()
}

/// `(surface, eL, eR)` pairs that glue into a valid surface.
fn fixtures() -> Vec<(Triangulation, &'static str, &'static str)> {
    vec![
        (two_triangles(), "E0", "E0'"),
        (two_triangles(), "E1", "E2'"),
        (disjoint_union(&surf("polygon:4"), &surf("triangle"), "'").unwrap(), "E1", "E0'"),
        (surf("polygon:4"), "E0", "E2"),
        on("polygon:6", 0, 3),
        on("annulus:1,1", 0, 1),
        on("annulus:2,1", 0, 2),
        on("punctured-polygon:4,1", 0, 2),
    ]
}

fn on(name: &str, a: usize, b: usize) -> (Triangulation, &'static str, &'static str) {
    let t = surf(name);
    let (x, y) = (boundary(&t, a), boundary(&t, b));
    (t, x, y)
}

fn boundary(t: &Triangulation, k: usize) -> &'static str {
    let id = t.edges.iter().filter(|e| e.kind == EdgeKind::Boundary).nth(k).unwrap().id.clone();
    Box::leak(id.into_boxed_str())
}

fn random_full(rng: &mut ChaCha8Rng, t: &Triangulation, r: i64, d: i64) -> TropicalPoint {
    let ix = IndexSet::new(t);
    let mut x = TropicalPoint::zero(Kind::X, &ix);
    for c in &mut x.coords {
        *c = frac(rng.gen_range(-r..=r), d);
    }
    x
}

fn coherence(t: &Triangulation, el: &str, er: &str, x: &TropicalPoint) {
    let l = reconstruct_pinned(x, t, None).unwrap();
    assert_eq!(shear_frozen(t, &l).unwrap().coords, x.coords);
    let (g, maps, lg) = glue_laminations(&l, t, el, er, None).unwrap();
    lg.picture.validate(&g).unwrap();
    let got = shear_frozen(&g, &lg).unwrap();
    let want = glue_point(x, t, &g, &maps, er).unwrap();
    assert_eq!(got.ids, want.ids);
    assert_eq!(got.coords, want.coords, "{el}+{er} x={:?}", x.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>());
}

#[test]
fn glue_coordinates_examples() {
    assert_eq!(glue_coordinates(&[q(1), q(0)], &[q(0), q(2)]), [q(3), q(0)]);
    assert_eq!(glue_coordinates(&[q(0), q(0)], &[q(0), q(0)]), [q(0), q(0)]);
}

#[test]
fn empty_triangles_glue_to_empty_quad() {
    let t = two_triangles();
    let l = PinnedLamination::new(GlobalPicture::empty(&t), &t);
    let (g, _, lg) = glue_laminations(&l, &t, "E0", "E0'", None).unwrap();
    assert!(isomorphic(&g, &surf("polygon:4")));
    assert_eq!(lg.picture, GlobalPicture::empty(&g));
    assert!(shear_frozen(&g, &lg).unwrap().coords.iter().all(|c| c.is_zero()));
}

#[test]
fn tau_plus_glued_to_empty_triangle() {
    let t = two_triangles();
    let sum = ComponentSum::new(vec![Component::new(ComponentKind::TauPlus, "T0", q(1))]);
    let l = sum.to_picture(&t).unwrap();
    let x = shear_frozen(&t, &l).unwrap();
    let (g, maps, lg) = glue_laminations(&l, &t, "E0", "E0'", None).unwrap();
    assert_eq!(shear_frozen(&g, &lg).unwrap(), glue_point(&x, &t, &g, &maps, "E0'").unwrap());
}

#[test]
fn elementary_frozen_laminations_glue() {
    // -e at (E0,1) on one triangle and -e at (E0',2) on the other
    let t = two_triangles();
    let ix = IndexSet::new(&t);
    let mut x = TropicalPoint::zero(Kind::X, &ix);
    x.set("E0:1", q(-1));
    x.set("E0':2", q(-1));
    let l = reconstruct_pinned(&x, &t, None).unwrap();
    let (g, _, lg) = glue_laminations(&l, &t, "E0", "E0'", None).unwrap();
    let y = shear_frozen(&g, &lg).unwrap();
    for (id, c) in y.ids.iter().zip(&y.coords) {
        let want = if id == "E0:1" { q(-2) } else { Q::zero() };
        assert_eq!(c, &want, "{id}");
    }
}

#[test]
fn coherence_two_triangles() {
    let t = two_triangles();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..300 {
        let x = random_full(&mut rng, &t, 4, 1);
        coherence(&t, "E0", "E0'", &x);
    }
}

#[test]
fn coherence_fixtures() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (t, el, er) in fixtures() {
        for n in 0..120 {
            let d = if n % 4 == 3 { 2 } else { 1 };
            let x = random_full(&mut rng, &t, 3, d);
            coherence(&t, el, er, &x);
        }
    }
}

#[test]
fn shift_examples() {
    let t = two_triangles();
    let l = PinnedLamination::new(GlobalPicture::empty(&t), &t);
    let a = t.edge_index("E0").unwrap();
    let b = t.edge_index("E0'").unwrap();
    let s = shift_action(&l, &t, "E0", "E0'", &ShiftElement::new(q(1), q(0))).unwrap();
    assert_eq!(s.delta[a], [q(1), q(0)]);
    assert_eq!(s.delta[b], [q(0), q(-1)]);
    assert_eq!(shift_action(&l, &t, "E0", "E0'", &ShiftElement::default()).unwrap(), l);
    let mu = ShiftElement::new(frac(1, 3), q(-2));
    assert_eq!(mu.star().star(), mu);
    let u = Triangulation::clone(&surf("polygon:4"));
    assert!(matches!(
        shift_action(&PinnedLamination::new(GlobalPicture::empty(&u), &u), &u, "E4", "E0", &mu),
        Err(GlueError::UnknownInterval(_))
    ));
}

#[test]
fn shift_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (t, el, er) in fixtures() {
        for n in 0..100 {
            let x = random_full(&mut rng, &t, 3, 1);
            let l = reconstruct_pinned(&x, &t, None).unwrap();
            let d = if n % 2 == 0 { 1 } else { rng.gen_range(2..=3) };
            let mu = ShiftElement::new(frac(rng.gen_range(-6..=6), d), frac(rng.gen_range(-6..=6), d));
            let shifted = shift_action(&l, &t, el, er, &mu).unwrap();
            let (g, _, a) = glue_laminations(&l, &t, el, er, None).unwrap();
            let (_, _, b) = glue_laminations(&shifted, &t, el, er, None).unwrap();
            if d == 1 {
                assert_eq!(a, b);
            } else {
                // a common denominator cables the picture differently
                assert_eq!(shear_frozen(&g, &a).unwrap(), shear_frozen(&g, &b).unwrap());
            }
        }
    }
}

#[test]
fn flip_commutes_with_glue() {
    let t = disjoint_union(&surf("polygon:4"), &surf("triangle"), "'").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let x = random_full(&mut rng, &t, 3, 1);
        let (g, maps, _) = glue_laminations(&reconstruct_pinned(&x, &t, None).unwrap(), &t, "E1", "E0'", None).unwrap();
        let glued_then_flipped = apply_flip(&glue_point(&x, &t, &g, &maps, "E0'").unwrap(), &g, "E4").unwrap().0;
        let (xf, tf) = apply_flip(&x, &t, "E4").unwrap();
        let (gf, mf, lf) = glue_laminations(&reconstruct_pinned(&xf, &tf, None).unwrap(), &tf, "E1", "E0'", None).unwrap();
        assert_eq!(shear_frozen(&gf, &lf).unwrap(), glue_point(&xf, &tf, &gf, &mf, "E0'").unwrap());
        assert_eq!(glue_point(&xf, &tf, &gf, &mf, "E0'").unwrap().coords, glued_then_flipped.coords);
    }
}

#[test]
fn gluing_errors() {
    let t = two_triangles();
    let l = PinnedLamination::new(GlobalPicture::empty(&t), &t);
    assert!(matches!(glue_laminations(&l, &t, "E0", "E0", None), Err(GlueError::SameEdge(_))));
    let u = surf("triangle");
    let lu = PinnedLamination::new(GlobalPicture::empty(&u), &u);
    assert!(matches!(
        glue_laminations(&lu, &u, "E0", "E1", None),
        Err(GlueError::ResultViolatesSurfaceConditions(_))
    ));
    let x = {
        let mut x = TropicalPoint::zero(Kind::X, &IndexSet::new(&t));
        x.set("E0:1", q(-3));
        x.set("E0':1", q(-3));
        x
    };
    let l = reconstruct_pinned(&x, &t, None).unwrap();
    assert!(matches!(glue_laminations(&l, &t, "E0", "E0'", Some(0)), Err(GlueError::TruncationTooShallow(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coherence_prop(v in proptest::collection::vec(-5i64..=5, 16)) {
        let t = surf("annulus:1,1");
        let ix = IndexSet::new(&t);
        let coords = (0..ix.len()).map(|i| q(v[i % v.len()])).collect();
        let x = TropicalPoint::from_vec(Kind::X, &ix, coords);
        coherence(&t, boundary(&t, 0), boundary(&t, 1), &x);
    }
}
