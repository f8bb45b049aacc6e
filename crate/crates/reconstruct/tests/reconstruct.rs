use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sl3_lamination::*;
use sl3_rational::{frac, q, Q};
use sl3_reconstruct::*;
use sl3_seed::IndexSet;
use sl3_surface::*;
use sl3_tropical::{Kind, TropicalPoint};

const FIXTURES: &[&str] = &[
    "polygon:4",
    "polygon:5",
    "polygon:6",
    "annulus:1,1",
    "annulus:2,1",
    "punctured-polygon:3,1",
    "punctured-polygon:2,2",
    "torus",
];

fn surf(s: &str) -> Triangulation {
    build(&s.parse().unwrap()).unwrap()
}

fn random_x(rng: &mut ChaCha8Rng, t: &Triangulation, r: i64) -> TropicalPoint {
    let ix = IndexSet::new(t);
    let mut x = TropicalPoint::zero(Kind::X, &ix);
    for i in ix.unfrozen() {
        x.coords[i] = q(rng.gen_range(-r..=r));
    }
    x
}

fn roundtrip(name: &str, trials: usize, r: i64) {
    let t = surf(name);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 0..trials {
        let x = random_x(&mut rng, &t, r);
        let rep = roundtrip_check(&x, &t, None).unwrap_or_else(|e| panic!("{name} #{n} {:?}: {e}", x.coords));
        assert!(rep.equal, "{name} #{n}: {:?} -> {:?}", x.coords, shear_unfrozen(&t, &rep.picture).unwrap().coords);
        assert!(rep.stable, "{name} #{n}: not stable");
    }
}

#[test]
fn roundtrip_polygon4() {
    roundtrip("polygon:4", 1000, 5);
}

#[test]
fn roundtrip_polygon5() {
    roundtrip("polygon:5", 500, 4);
}

#[test]
fn roundtrip_polygon6() {
    roundtrip("polygon:6", 200, 3);
}

#[test]
fn roundtrip_annulus() {
    roundtrip("annulus:1,1", 500, 4);
    roundtrip("annulus:2,1", 200, 3);
}

#[test]
fn roundtrip_punctured() {
    roundtrip("punctured-polygon:3,1", 300, 3);
    roundtrip("punctured-polygon:2,2", 200, 3);
}

#[test]
fn roundtrip_torus() {
    roundtrip("torus", 500, 4);
}

fn quad_x(t: &Triangulation, tl: i64, tr: i64, e1: i64, e2: i64) -> TropicalPoint {
    let ix = IndexSet::new(t);
    let e = t.edge_index("E4").unwrap();
    let qd = t.quad(e).unwrap();
    let mut x = TropicalPoint::zero(Kind::X, &ix);
    x.coords[ix.face_pos(qd.tl)] = q(tl);
    x.coords[ix.face_pos(qd.tr)] = q(tr);
    x.coords[ix.edge_pos(e, 1)] = q(e1);
    x.coords[ix.edge_pos(e, 2)] = q(e2);
    x
}

fn legs_on(p: &GlobalPicture, tri: usize, side: usize) -> usize {
    p.side_strands(tri, side).iter().filter(|s| !s.is_arc()).count()
}

fn check_quad_example(v: (i64, i64, i64, i64), orient: HoneycombOrient, crossings: usize) {
    let t = surf("polygon:4");
    let x = quad_x(&t, v.0, v.1, v.2, v.3);
    let p = reconstruct(&x, &t, None).unwrap();
    let e = t.edge_index("E4").unwrap();
    let qd = t.quad(e).unwrap();
    let hl = p.triangles[qd.tl].honeycomb.as_ref().unwrap();
    let hr = p.triangles[qd.tr].honeycomb.as_ref().unwrap();
    assert_eq!((hl.orient, hl.height, hr.orient, hr.height), (orient, 2, orient, 3));
    assert_eq!(legs_on(&p, qd.tl, qd.il), 2);
    assert_eq!(legs_on(&p, qd.tr, qd.ir), 3);
    assert_eq!(p.pairings[e].len(), crossings);
    assert_eq!(shear_unfrozen(&t, &p).unwrap().coords, x.coords);
    let n = check_identifiers(&t, &p, &pins_from_x(&x, &t)).unwrap();
    assert_eq!(n, crossings);
}

#[test]
fn quad_sink_example() {
    check_quad_example((2, 3, -2, 1), HoneycombOrient::Sink, 6);
}

#[test]
fn quad_source_example() {
    check_quad_example((-2, -3, -2, 1), HoneycombOrient::Source, 7);
}

#[test]
fn zero_is_empty() {
    for name in ["polygon:4", "annulus:1,1", "punctured-polygon:3,1", "torus"] {
        let t = surf(name);
        let x = TropicalPoint::zero(Kind::X, &IndexSet::new(&t));
        let p = reconstruct(&x, &t, None).unwrap();
        assert_eq!(p, GlobalPicture::empty(&t), "{name}");
        assert!(traveler_trace(&t, &p).unwrap().is_empty());
    }
}

#[test]
fn rational_input() {
    let t = surf("polygon:5");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let mut x = random_x(&mut rng, &t, 4);
        let d = rng.gen_range(1..=4);
        for c in &mut x.coords {
            *c = &*c / q(d);
        }
        x.coords[IndexSet::new(&t).face_pos(0)] = frac(1, 2);
        let rep = roundtrip_check(&x, &t, None).unwrap();
        assert!(rep.equal && rep.stable);
    }
}

#[test]
fn identifiers_on_fixtures() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for name in FIXTURES {
        let t = surf(name);
        for _ in 0..100 {
            let x = random_x(&mut rng, &t, 4);
            let p = reconstruct(&x, &t, None).unwrap();
            check_identifiers(&t, &p, &pins_from_x(&x, &t)).unwrap();
        }
    }
}

#[test]
fn too_shallow() {
    let t = surf("polygon:4");
    let x = quad_x(&t, 2, 3, -2, 1);
    assert!(matches!(reconstruct(&x, &t, Some(0)), Err(ReconstructError::TruncationTooShallow(_))));
    let p = reconstruct(&x, &t, None).unwrap();
    let n0 = default_depth(&x, &t).to_integer().try_into().unwrap();
    for n in n0..n0 + 6 {
        assert_eq!(reconstruct(&x, &t, Some(n)).unwrap(), p);
    }
}

#[test]
fn square_removal_keeps_shear() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for name in FIXTURES {
        let t = surf(name);
        for _ in 0..50 {
            let x = random_x(&mut rng, &t, 3);
            let p = reconstruct(&x, &t, None).unwrap();
            let r = remove_squares(&t, &p).unwrap();
            r.validate(&t).unwrap();
            assert_eq!(shear_unfrozen(&t, &r).unwrap(), shear_unfrozen(&t, &p).unwrap());
        }
    }
}

#[test]
fn elementary_laminations() {
    for name in FIXTURES {
        let t = surf(name);
        let ix = IndexSet::new(&t);
        for k in 0..ix.len() {
            let l = elementary_lamination(&t, k).unwrap();
            let x = shear_frozen(&t, &l).unwrap();
            for i in 0..ix.len() {
                assert_eq!(x.coords[i], if i == k { q(-1) } else { Q::zero() }, "{name} k={k} i={i}");
            }
        }
    }
}

#[test]
fn pinned_roundtrip_with_frozen() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for name in FIXTURES {
        let t = surf(name);
        let ix = IndexSet::new(&t);
        for _ in 0..50 {
            let mut x = TropicalPoint::zero(Kind::X, &ix);
            for c in &mut x.coords {
                *c = q(rng.gen_range(-3..=3));
            }
            let l = reconstruct_pinned(&x, &t, None).unwrap();
            assert_eq!(shear_frozen(&t, &l).unwrap().coords, x.coords, "{name}");
        }
    }
}

#[test]
fn traveler_kinds() {
    let t = surf("torus");
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut spiralling = 0;
    for _ in 0..100 {
        let x = random_x(&mut rng, &t, 3);
        let p = reconstruct(&x, &t, None).unwrap();
        let tr = traveler_trace(&t, &p).unwrap();
        spiralling += tr.iter().filter(|r| r.kind == TravelerKind::Spiralling).count();
        let arcs: usize = p.triangles.iter().map(|tp| tp.corners.iter().map(|c| c.len()).sum::<usize>()).sum();
        assert_eq!(tr.iter().map(|r| r.arcs.len()).sum::<usize>(), arcs);
    }
    assert!(spiralling > 0);
}

#[test]
fn gluing_rule_symmetry() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for name in ["polygon:5", "annulus:1,1", "torus"] {
        let t = surf(name);
        for _ in 0..50 {
            let x = random_x(&mut rng, &t, 3);
            let p = reconstruct(&x, &t, None).unwrap();
            let shifted: Vec<Option<[Q; 4]>> = gluing_pins(&x, &t)
                .into_iter()
                .map(|pin| {
                    pin.map(|[lp, rm, lm, rp]| {
                        let k = q(rng.gen_range(-3..=3));
                        let l = q(rng.gen_range(-3..=3));
                        [lp - &k, rm + k, lm - &l, rp + l]
                    })
                })
                .collect();
            assert_eq!(reconstruct_with_pins(&x, &t, &shifted, None).unwrap(), p);
        }
    }
}

#[test]
fn closed_curve_traveler() {
    // the core curve of the annulus, found among small edge coordinates
    let t = surf("annulus:1,1");
    let ix = IndexSet::new(&t);
    let edges: Vec<usize> = ix.unfrozen().filter(|&i| i < 2 * t.num_edges()).collect();
    let mut found = Vec::new();
    for code in 0..3usize.pow(edges.len() as u32) {
        let mut x = TropicalPoint::zero(Kind::X, &ix);
        let mut c = code;
        for &i in &edges {
            x.coords[i] = q(c as i64 % 3 - 1);
            c /= 3;
        }
        let p = reconstruct(&x, &t, None).unwrap();
        let tr = traveler_trace(&t, &p).unwrap();
        if tr.len() == 1 && tr[0].kind == TravelerKind::Closed {
            assert!(tr[0].ends.is_empty());
            assert_eq!(tr[0].arcs.len(), 2);
            assert_eq!(tr[0].crossings.len(), 2);
            assert_eq!(shear_unfrozen(&t, &p).unwrap().coords, x.coords);
            found.push(x.coords);
        }
    }
    // one for each orientation
    assert_eq!(found.len(), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn roundtrip_prop(v in proptest::collection::vec(-6i64..=6, 12), d in 1i64..=3) {
        for name in ["punctured-polygon:2,2", "annulus:2,1"] {
            let t = surf(name);
            let ix = IndexSet::new(&t);
            let mut x = TropicalPoint::zero(Kind::X, &ix);
            for (k, i) in ix.unfrozen().enumerate() {
                x.coords[i] = Q::from(num_bigint::BigInt::from(v[k % v.len()])) / q(d);
            }
            let rep = roundtrip_check(&x, &t, None).unwrap();
            prop_assert!(rep.equal && rep.stable);
        }
    }
}
