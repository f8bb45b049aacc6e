use std::collections::BTreeMap;

use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sl3_rational::{frac, q, Q};
use sl3_seed::*;
use sl3_surface::*;
use sl3_tropical::*;

fn surf(s: &str) -> Triangulation {
    build(&s.parse().unwrap()).unwrap()
}

const FIXTURES: &[&str] = &[
    "triangle",
    "polygon:4",
    "polygon:5",
    "annulus:1,1",
    "annulus:2,1",
    "punctured-polygon:3,1",
    "punctured-polygon:2,2",
    "torus",
];

fn rand_q(rng: &mut ChaCha8Rng) -> Q {
    frac(rng.gen_range(-20..=20), rng.gen_range(1..=8))
}

fn rand_point(rng: &mut ChaCha8Rng, kind: Kind, ix: &IndexSet) -> TropicalPoint {
    TropicalPoint::from_vec(kind, ix, (0..ix.len()).map(|_| rand_q(rng)).collect())
}

fn raw(frozen: Vec<bool>, rows: Vec<Vec<i64>>) -> ExchangeMatrix {
    ExchangeMatrix {
        ids: (0..rows.len()).map(|i| format!("x{}", i + 1)).collect(),
        frozen,
        entries: rows.into_iter().map(|r| r.into_iter().map(q).collect()).collect(),
    }
}

fn raw_point(kind: Kind, eps: &ExchangeMatrix, v: &[i64]) -> TropicalPoint {
    TropicalPoint {
        kind,
        restricted: false,
        ids: eps.ids.clone(),
        frozen: eps.frozen.clone(),
        coords: v.iter().map(|&n| q(n)).collect(),
    }
}

fn interior_edges(t: &Triangulation) -> Vec<String> {
    t.edges
        .iter()
        .filter(|e| e.kind == EdgeKind::Interior)
        .map(|e| e.id.clone())
        .collect()
}

#[test]
fn small_x_mutation() {
    let eps = raw(vec![false, false], vec![vec![0, 1], vec![-1, 0]]);
    let x = raw_point(Kind::X, &eps, &[1, 0]);
    let y = mutate_x(&x, &eps, 0).unwrap();
    assert_eq!(y.coords, vec![q(-1), q(1)]);
    let z = raw_point(Kind::X, &eps, &[0, 5]);
    assert_eq!(mutate_x(&z, &eps, 0).unwrap(), z);
}

#[test]
fn small_a_mutation() {
    let eps = raw(vec![false, false], vec![vec![0, 1], vec![-1, 0]]);
    let a = raw_point(Kind::A, &eps, &[0, 1]);
    assert_eq!(mutate_a(&a, &eps, 0).unwrap().coords, vec![q(1), q(1)]);
    let zero = raw_point(Kind::A, &eps, &[0, 0]);
    assert_eq!(mutate_a(&zero, &eps, 0).unwrap(), zero);
}

#[test]
fn frozen_and_kind_errors() {
    let eps = raw(vec![false, true], vec![vec![0, 1], vec![-1, 0]]);
    let x = raw_point(Kind::X, &eps, &[1, 0]);
    assert!(matches!(mutate_x(&x, &eps, 1), Err(TropicalError::FrozenIndexMutation(_))));
    assert!(matches!(mutate_a(&x, &eps, 0), Err(TropicalError::KindMismatch { .. })));
    let other = raw(vec![false], vec![vec![0]]);
    assert!(matches!(mutate_x(&x, &other, 0), Err(TropicalError::SeedMismatch(_))));
}

#[test]
fn closed_form_examples() {
    let zero: [Q; 12] = std::array::from_fn(|_| Q::zero());
    assert_eq!(flip_x_local(&zero), zero);
    let mut e1 = zero.clone();
    e1[0] = q(1);
    let mut want = zero.clone();
    want[3] = q(-1);
    want[4] = q(1);
    want[9] = q(1);
    assert_eq!(flip_x_local(&e1), want);
    let mut e3 = zero.clone();
    e3[2] = q(1);
    let mut want = zero.clone();
    want[1] = q(-1);
    want[5] = q(1);
    want[8] = q(1);
    assert_eq!(flip_x_local(&e3), want);
}

#[test]
fn flip_of_e1_on_the_quadrilateral() {
    let t = surf("polygon:4");
    let ix = IndexSet::new(&t);
    let e = t.edge_index("E4").unwrap();
    let l = FlipLabels::new(&t, &ix, e).unwrap();
    let mut p = TropicalPoint::zero(Kind::X, &ix);
    p.coords[l.pos[0]] = q(1);
    let (seq, _) = apply_flip(&p, &t, "E4").unwrap();
    let closed = flip_x_closed_form(&p, &t, "E4").unwrap();
    assert_eq!(seq, closed);
    // label 4 (face of T_R) now sits on E':2
    assert_eq!(seq.coords[ix.edge_pos(e, 2)], q(-1));
    assert_eq!(seq.coords[l.pos[4]], q(1));
    assert_eq!(seq.coords[l.pos[9]], q(1));
    assert_eq!(seq.coords.iter().filter(|c| !c.is_zero()).count(), 3);
}

#[test]
fn closed_form_matches_mutations_on_embedded_quadrilaterals() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for s in FIXTURES {
        let t = surf(s);
        let ix = IndexSet::new(&t);
        for id in interior_edges(&t) {
            let e = t.edge_index(&id).unwrap();
            let embedded = FlipLabels::new(&t, &ix, e).unwrap().embedded();
            let trials = if *s == "polygon:4" { 1000 } else { 100 };
            for _ in 0..trials {
                let p = rand_point(&mut rng, Kind::X, &ix);
                let Ok((seq, _)) = apply_flip(&p, &t, &id) else { break };
                match flip_x_closed_form(&p, &t, &id) {
                    Ok(closed) => {
                        assert!(embedded);
                        assert_eq!(seq, closed, "{s} at {id}");
                    }
                    Err(TropicalError::BadLabeling(_)) => assert!(!embedded),
                    Err(err) => panic!("{err}"),
                }
            }
        }
    }
}

#[test]
fn flip_is_identity_away_from_the_quadrilateral() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let t = surf("polygon:5");
    let ix = IndexSet::new(&t);
    for id in interior_edges(&t) {
        let e = t.edge_index(&id).unwrap();
        let l = FlipLabels::new(&t, &ix, e).unwrap();
        for _ in 0..50 {
            let p = rand_point(&mut rng, Kind::X, &ix);
            let (y, _) = apply_flip(&p, &t, &id).unwrap();
            for i in (0..ix.len()).filter(|i| !l.pos.contains(i)) {
                assert_eq!(y.coords[i], p.coords[i]);
            }
        }
    }
}

#[test]
fn flip_twice_returns() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for s in FIXTURES {
        let t = surf(s);
        let ix = IndexSet::new(&t);
        for id in interior_edges(&t) {
            for kind in [Kind::X, Kind::A] {
                let p = rand_point(&mut rng, kind, &ix);
                let Ok((y, t1)) = apply_flip(&p, &t, &id) else { continue };
                let (z, t2) = apply_flip(&y, &t1, &id).unwrap();
                // the diagonal comes back reversed and its two triangles
                // trade ids
                let e = t.edge_index(&id).unwrap();
                let (tl, tr) = (t.left_slot(e).0, t.right_slot(e).unwrap().0);
                let mut back = z.clone();
                back.coords.swap(ix.edge_pos(e, 1), ix.edge_pos(e, 2));
                back.coords.swap(ix.face_pos(tl), ix.face_pos(tr));
                assert!(isomorphic(&t, &t2));
                assert_eq!(back, p, "{s} at {id}");
            }
        }
    }
}

#[test]
fn ensemble_examples() {
    let t = surf("triangle");
    let ix = IndexSet::new(&t);
    let labels: Vec<usize> = {
        let mut v = vec![ix.face_pos(0)];
        for side in &t.triangles[0].sides {
            let (x, y) = if side.reversed { (2, 1) } else { (1, 2) };
            v.push(ix.edge_pos(side.edge, x));
            v.push(ix.edge_pos(side.edge, y));
        }
        v
    };
    let point = |vals: [Q; 7], kind| {
        let mut p = TropicalPoint::zero(kind, &ix);
        for (k, v) in vals.into_iter().enumerate() {
            p.coords[labels[k]] = v;
        }
        p
    };
    let f = frac;
    let alpha = point([f(2, 3), f(1, 3), f(2, 3), q(0), q(0), f(2, 3), f(1, 3)], Kind::A);
    let x = ensemble(&alpha, &t).unwrap();
    assert_eq!(x, point([q(0), q(0), q(-1), q(0), q(0), q(0), q(0)], Kind::X));
    let tau = point([q(1), f(1, 3), f(2, 3), f(1, 3), f(2, 3), f(1, 3), f(2, 3)], Kind::A);
    let x = ensemble(&tau, &t).unwrap();
    assert_eq!(x, point([q(1), q(0), q(-1), q(0), q(-1), q(0), q(-1)], Kind::X));
    let zero = TropicalPoint::zero(Kind::A, &ix);
    assert!(ensemble(&zero, &t).unwrap().coords.iter().all(|c| c.is_zero()));
}

#[test]
fn ensemble_commutes_with_flips() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for s in FIXTURES {
        let t = surf(s);
        let ix = IndexSet::new(&t);
        for id in interior_edges(&t) {
            let trials = if *s == "polygon:4" { 300 } else { 40 };
            for _ in 0..trials {
                let a = rand_point(&mut rng, Kind::A, &ix);
                let Ok((a2, t2)) = apply_flip(&a, &t, &id) else { break };
                let lhs = ensemble(&a2, &t2).unwrap();
                let (rhs, _) = apply_flip(&ensemble(&a, &t).unwrap(), &t, &id).unwrap();
                assert_eq!(lhs, rhs, "{s} at {id}");
            }
        }
    }
}

/// Single mutations away from flip sequences, with `m` kept fixed.
#[test]
fn ensemble_commutes_with_single_mutations() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let mut failures = Vec::new();
    for s in FIXTURES {
        let t = surf(s);
        let (ix, eps) = exchange_matrix(&t);
        let m = m_matrix(&t);
        let uf: Vec<usize> = ix.unfrozen().collect();
        for _ in 0..50 {
            let k = uf[rng.gen_range(0..uf.len())];
            let a = rand_point(&mut rng, Kind::A, &ix);
            let x = ensemble(&a, &t).unwrap();
            let a2 = mutate_a(&a, &eps, k).unwrap();
            let x2 = mutate_x(&x, &eps, k).unwrap();
            let eps2 = mutate_matrix(&eps, k).unwrap().add(&m);
            let direct: Vec<Q> = (0..ix.len())
                .map(|i| (0..ix.len()).map(|j| eps2.get(i, j) * &a2.coords[j]).sum())
                .collect();
            if direct != x2.coords {
                failures.push(format!("{s} at {}", ix.ids[k]));
            }
        }
    }
    assert!(failures.is_empty(), "convention diagnostic: {failures:?}");
}

#[test]
fn dynkin_matches_mutation_sequence() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for s in FIXTURES {
        let t = surf(s);
        let (ix, eps) = exchange_matrix(&t);
        let steps = dynkin_mutation_sequence(&t);
        for _ in 0..500 {
            let p = rand_point(&mut rng, Kind::X, &ix);
            let closed = dynkin_cluster(&p, &t).unwrap();
            let (seq, _) = transport(&p, &eps, &steps).unwrap();
            assert_eq!(closed, seq, "{s}");
            assert_eq!(dynkin_cluster(&closed, &t).unwrap(), p, "{s}");
        }
    }
}

#[test]
fn dynkin_quadrilateral_example() {
    let t = surf("polygon:4");
    let ix = IndexSet::new(&t);
    let e = t.edge_index("E4").unwrap();
    let tl = t.left_slot(e).0;
    let mut p = TropicalPoint::zero(Kind::X, &ix).restrict();
    p.coords[ix.face_pos(tl)] = q(1);
    let y = dynkin_cluster(&p, &t).unwrap();
    let mut want = TropicalPoint::zero(Kind::X, &ix).restrict();
    want.coords[ix.face_pos(tl)] = q(-1);
    want.coords[ix.edge_pos(e, 1)] = q(1);
    assert_eq!(y, want);
}

#[test]
fn principal_locus() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for s in FIXTURES {
        let t = surf(s);
        let ix = IndexSet::new(&t);
        let zero = principal_embed(&BTreeMap::new(), &t).unwrap();
        assert!(zero.coords.iter().all(|c| c.is_zero()));
        for _ in 0..200 {
            let sl2: BTreeMap<String, Q> = t.edges.iter().map(|e| (e.id.clone(), rand_q(&mut rng))).collect();
            let p = principal_embed(&sl2, &t).unwrap();
            assert_eq!(dynkin_cluster(&p, &t).unwrap(), p);
            for id in interior_edges(&t) {
                let Ok((y, t2)) = apply_flip(&p, &t, &id) else { continue };
                for e in 0..t2.num_edges() {
                    assert_eq!(y.coords[ix.edge_pos(e, 1)], y.coords[ix.edge_pos(e, 2)]);
                }
                for f in 0..t2.num_triangles() {
                    assert!(y.coords[ix.face_pos(f)].is_zero());
                }
            }
        }
    }
}

#[test]
fn principal_indicator() {
    let t = surf("polygon:4");
    let ix = IndexSet::new(&t);
    let p = principal_embed(&[("E4".to_string(), q(1))].into_iter().collect(), &t).unwrap();
    let e = t.edge_index("E4").unwrap();
    for i in 0..ix.len() {
        let want = if i == ix.edge_pos(e, 1) || i == ix.edge_pos(e, 2) { q(1) } else { q(0) };
        assert_eq!(p.coords[i], want);
    }
    assert!(principal_embed(&[("nope".to_string(), q(1))].into_iter().collect(), &t).is_err());
}

#[test]
fn restricted_points_flip_like_full_ones() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let t = surf("polygon:5");
    let ix = IndexSet::new(&t);
    for id in interior_edges(&t) {
        for _ in 0..50 {
            let p = rand_point(&mut rng, Kind::X, &ix);
            let (full, _) = apply_flip(&p, &t, &id).unwrap();
            let (res, _) = apply_flip(&p.restrict(), &t, &id).unwrap();
            assert_eq!(full.restrict(), res);
        }
    }
}

#[test]
fn json_roundtrip() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    let t = surf("punctured-polygon:3,1");
    let ix = IndexSet::new(&t);
    let p = rand_point(&mut rng, Kind::X, &ix);
    for p in [p.clone(), p.restrict()] {
        let text = serde_json::to_string(&p).unwrap();
        let doc: TropicalPointDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(TropicalPoint::from_doc(&doc, &ix).unwrap(), p);
        assert_eq!(serde_json::to_string(&p.to_doc()).unwrap().len(), text.len());
    }
    let v: serde_json::Value = serde_json::from_str(r#"{"kind":"A","coords":{"E0:1":"2/4","T0":3}}"#).unwrap();
    let doc: TropicalPointDoc = serde_json::from_value(v).unwrap();
    let a = TropicalPoint::from_doc(&doc, &ix).unwrap();
    assert_eq!(a.get("E0:1"), Some(&frac(1, 2)));
    assert_eq!(a.get("T0"), Some(&q(3)));
}

#[test]
fn plmap_composition() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let t = surf("polygon:5");
    let (ix, eps) = exchange_matrix(&t);
    let (s1, t1) = flip_mutation_sequence(&t, "E5").unwrap();
    let (s2, _) = flip_mutation_sequence(&t1, "E6").unwrap();
    let f = PLMap::new(s1);
    let g = PLMap::new(s2);
    let p = rand_point(&mut rng, Kind::X, &ix);
    let step = f.apply(&p, &eps).unwrap();
    let (_, eps1) = exchange_matrix(&t1);
    assert_eq!(f.then(&g).apply(&p, &eps).unwrap(), g.apply(&step, &eps1).unwrap());
    assert_eq!(PLMap::identity().apply(&p, &eps).unwrap(), p);
}

proptest! {
    #[test]
    fn homogeneity(fix in 0usize..FIXTURES.len(), seed in any::<u64>(), un in 1i64..9, ud in 1i64..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = surf(FIXTURES[fix]);
        let (ix, eps) = exchange_matrix(&t);
        let u = frac(un, ud);
        let uf: Vec<usize> = ix.unfrozen().collect();
        let k = uf[rng.gen_range(0..uf.len())];
        let x = rand_point(&mut rng, Kind::X, &ix);
        let a = rand_point(&mut rng, Kind::A, &ix);
        prop_assert_eq!(mutate_x(&x.scale(&u), &eps, k).unwrap(), mutate_x(&x, &eps, k).unwrap().scale(&u));
        prop_assert_eq!(mutate_a(&a.scale(&u), &eps, k).unwrap(), mutate_a(&a, &eps, k).unwrap().scale(&u));
        prop_assert_eq!(dynkin_cluster(&x.scale(&u), &t).unwrap(), dynkin_cluster(&x, &t).unwrap().scale(&u));
        for id in interior_edges(&t) {
            if let Ok((y, _)) = apply_flip(&x.scale(&u), &t, &id) {
                prop_assert_eq!(y, apply_flip(&x, &t, &id).unwrap().0.scale(&u));
            }
        }
    }

    #[test]
    fn mutation_is_involutive(fix in 0usize..FIXTURES.len(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = surf(FIXTURES[fix]);
        let (ix, eps) = exchange_matrix(&t);
        let uf: Vec<usize> = ix.unfrozen().collect();
        let k = uf[rng.gen_range(0..uf.len())];
        let eps2 = mutate_matrix(&eps, k).unwrap();
        for kind in [Kind::X, Kind::A] {
            let p = rand_point(&mut rng, kind, &ix);
            let once = transport(&p, &eps, &[MutationStep::Mutate(k)]).unwrap().0;
            let twice = transport(&once, &eps2, &[MutationStep::Mutate(k)]).unwrap().0;
            prop_assert_eq!(twice, p);
        }
    }
}
