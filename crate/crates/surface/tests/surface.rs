use proptest::prelude::*;
use sl3_surface::*;

fn spec(s: &str) -> MarkedSurfaceSpec {
    s.parse().unwrap()
}

fn counts(t: &Triangulation) -> (usize, usize, usize, usize) {
    (t.num_triangles(), t.num_edges(), t.num_interior_edges(), t.num_boundary_edges())
}

fn euler_ok(t: &Triangulation) -> bool {
    let chi = t.euler_char();
    let m = t.num_special() as i64;
    t.num_edges() as i64 == -3 * chi + 2 * m
        && t.num_interior_edges() as i64 == -3 * chi + m
        && t.num_triangles() as i64 == -2 * chi + m
}

const FAMILIES: &[&str] = &[
    "triangle",
    "polygon:4",
    "polygon:5",
    "polygon:7",
    "punctured-polygon:2,1",
    "punctured-polygon:3,1",
    "punctured-polygon:1,2",
    "punctured-polygon:4,3",
    "annulus:1,1",
    "annulus:2,3",
    "torus",
];

#[test]
fn families_build_valid() {
    for s in FAMILIES {
        let t = build(&spec(s)).unwrap();
        assert!(validate(&t.to_doc()).is_empty(), "{s}");
        assert!(euler_ok(&t), "{s}");
    }
}

#[test]
fn quadrilateral_counts() {
    let t = build(&spec("polygon:4")).unwrap();
    assert_eq!(counts(&t), (2, 5, 1, 4));
}

#[test]
fn torus_counts() {
    let t = build(&spec("torus")).unwrap();
    assert_eq!(counts(&t), (2, 3, 3, 0));
    assert_eq!(t.num_punctures(), 1);
    assert_eq!(t.euler_char(), -1);
}

#[test]
fn annulus_and_punctured_counts() {
    let t = build(&spec("annulus:1,1")).unwrap();
    assert_eq!(t.euler_char(), 0);
    assert_eq!(counts(&t), (2, 4, 2, 2));
    let t = build(&spec("punctured-polygon:3,2")).unwrap();
    assert_eq!(t.num_punctures(), 2);
    assert_eq!(t.euler_char(), -1);
}

#[test]
fn surface_conditions_rejected() {
    let cases = [
        ("polygon:2", Condition::S3),
        ("polygon:1", Condition::S2),
        ("polygon:0", Condition::S1),
        ("punctured-polygon:1,1", Condition::S4),
        ("punctured-polygon:0,2", Condition::S1),
        ("annulus:0,2", Condition::S1),
    ];
    for (s, c) in cases {
        match build(&spec(s)) {
            Err(SurfaceError::SpecViolatesSurfaceConditions(got, _)) => assert_eq!(got, c, "{s}"),
            other => panic!("{s}: {other:?}"),
        }
    }
}

#[test]
fn self_folded_table_diagnosed() {
    let doc: TriangulationDoc = serde_json::from_value(serde_json::json!({
        "triangles": [{"id": "T0", "sides": ["E0", "E1", "-E1"]}],
        "edges": [
            {"id": "E0", "kind": "boundary", "orientation": ["v0", "v0"]},
            {"id": "E1", "kind": "interior", "orientation": ["v0", "p"]}
        ],
        "vertices": [{"id": "v0", "class": "special"}, {"id": "p", "class": "puncture"}]
    }))
    .unwrap();
    let d = validate(&doc);
    assert!(d.iter().any(|x| x == "self-folded triangle at T0"), "{d:?}");
    assert!(matches!(
        build(&MarkedSurfaceSpec::Explicit { table: doc }),
        Err(SurfaceError::SelfFoldedUnavoidable(_))
    ));
}

#[test]
fn wrong_edge_count_diagnosed() {
    let mut doc = build(&spec("polygon:4")).unwrap().to_doc();
    doc.vertices.push(VertexDoc { id: "extra".into(), class: VertexClass::Special });
    let d = validate(&doc);
    assert!(d.iter().any(|x| x == "edge-count identity violated"), "{d:?}");
}

#[test]
fn misoriented_boundary_diagnosed() {
    let mut doc = build(&spec("triangle")).unwrap().to_doc();
    doc.edges[0].orientation.swap(0, 1);
    doc.triangles[0].sides[0] = "-E0".into();
    let d = validate(&doc);
    assert!(d.iter().any(|x| x.contains("oriented along the boundary")), "{d:?}");
}

#[test]
fn flip_quadrilateral() {
    let t = build(&spec("polygon:4")).unwrap();
    let (t1, corr) = flip_edge(&t, "E4").unwrap();
    assert!(validate(&t1.to_doc()).is_empty());
    assert_eq!(corr.flipped, "E4");
    assert_eq!(corr.map.len(), 5);
    let e = t1.edge_index("E4").unwrap();
    // the new diagonal joins v1 and v3
    let ends = [t1.vertices[t1.edges[e].init].id.as_str(), t1.vertices[t1.edges[e].term].id.as_str()];
    assert_eq!(ends, ["v3", "v1"]);
    let (t2, _) = flip_edge(&t1, "E4").unwrap();
    assert!(isomorphic(&t, &t2));
    assert!(matches!(flip_edge(&t, "E0"), Err(SurfaceError::NotInteriorEdge(_))));
}

#[test]
fn flip_torus_every_edge() {
    let t = build(&spec("torus")).unwrap();
    for e in &t.edges {
        let (t1, _) = flip_edge(&t, &e.id).unwrap();
        assert!(validate(&t1.to_doc()).is_empty());
        assert!(isomorphic(&t, &t1));
    }
}

#[test]
fn punctured_triangle_flip_rejected() {
    // two triangles sharing two edges around a degree-2 puncture
    let t = build(&spec("punctured-polygon:2,1")).unwrap();
    let mut rejected = 0;
    for e in t.edges.iter().filter(|e| e.kind == EdgeKind::Interior) {
        if let Err(SurfaceError::FlipCreatesSelfFolded(_)) = flip_edge(&t, &e.id) {
            rejected += 1;
        }
    }
    assert!(rejected > 0);
}

#[test]
fn glue_two_triangles() {
    let a = build(&spec("triangle")).unwrap();
    let two = disjoint_union(&a, &a, "'").unwrap();
    assert_eq!(two.components().len(), 2);
    let (q, maps) = glue_boundary(&two, "E0", "E1'").unwrap();
    assert_eq!(maps.edge, "E0");
    assert!(isomorphic(&q, &build(&spec("polygon:4")).unwrap()));
    assert!(matches!(glue_boundary(&two, "E0", "E0"), Err(SurfaceError::SameEdge(_))));
}

#[test]
fn glue_opposite_sides_gives_annulus() {
    let t = build(&spec("polygon:4")).unwrap();
    let (a, _) = glue_boundary(&t, "E0", "E2").unwrap();
    assert_eq!(a.euler_char(), 0);
    assert_eq!(a.num_edges(), 4);
    assert_eq!(a.num_special(), 2);
    assert!(isomorphic(&a, &build(&spec("annulus:1,1")).unwrap()));
}

#[test]
fn glue_adjacent_sides_of_triangle_rejected() {
    let t = build(&spec("triangle")).unwrap();
    assert!(matches!(
        glue_boundary(&t, "E0", "E2"),
        Err(SurfaceError::ResultViolatesSurfaceConditions(_))
    ));
}

#[test]
fn json_roundtrip() {
    for s in FAMILIES {
        let t = build(&spec(s)).unwrap();
        let text = serde_json::to_string(&t.to_doc()).unwrap();
        let back: TriangulationDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(Triangulation::from_doc(&back).unwrap(), t);
    }
}

#[test]
fn corners_around_special_point_run_boundary_to_boundary() {
    let t = build(&spec("polygon:5")).unwrap();
    let v0 = t.vertex_index("v0").unwrap();
    let cs = t.corners_around(v0);
    assert_eq!(cs.len(), 3);
    let first = t.side(cs[0]);
    let last = t.side((cs[2].0, (cs[2].1 + 2) % 3));
    assert!(!t.is_interior(first.edge) && !t.is_interior(last.edge));
    let torus = build(&spec("torus")).unwrap();
    assert_eq!(torus.corners_around(0).len(), 6);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Random flip walks keep every invariant; flipping back is an isomorphism.
    #[test]
    fn flip_walks(fam in 0usize..FAMILIES.len(), picks in proptest::collection::vec(0usize..64, 1..12)) {
        let mut t = build(&spec(FAMILIES[fam])).unwrap();
        for p in picks {
            let interior: Vec<String> = t.edges.iter().filter(|e| e.kind == EdgeKind::Interior).map(|e| e.id.clone()).collect();
            if interior.is_empty() { break; }
            let id = &interior[p % interior.len()];
            let Ok((t1, _)) = flip_edge(&t, id) else { continue };
            prop_assert!(validate(&t1.to_doc()).is_empty());
            prop_assert!(euler_ok(&t1));
            prop_assert_eq!(counts(&t1), counts(&t));
            let (t2, _) = flip_edge(&t1, id).unwrap();
            prop_assert!(isomorphic(&t, &t2));
            t = t1;
        }
    }
}
