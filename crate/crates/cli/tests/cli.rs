use hollowlat::classify::classify_hull;
use hollowlat::constructions::{construct, ConstructionKind, Params};
use hollowlat::convex_hull;
use hollowlat_cli::document::PointSetDocument;
use hollowlat_cli::invoke;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, Option<Value>, Option<String>) {
    let mut full = vec!["hollowlat"];
    full.extend_from_slice(args);
    let (code, out, err) = invoke(full);
    (code, out.map(|s| serde_json::from_str(&s).unwrap()), err)
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn classify_doignon_cube() {
    let dir = tempfile::tempdir().unwrap();
    let (code, doc, _) = run(&["construct", "doignon_cube", "--dim", "3"]);
    assert_eq!(code, 0);
    let path = write(&dir, "c.json", &doc.unwrap().to_string());
    let (code, report, _) = run(&["classify", &path]);
    assert_eq!(code, 0);
    let r = report.unwrap();
    assert_eq!(r["schema_version"], "1");
    let c = &r["result"]["classification"];
    assert_eq!(c["empty"], true);
    assert_eq!(c["hollow"], true);
    assert_eq!(c["vertices"], 8);
}

#[test]
fn width_of_dilated_simplex() {
    let dir = tempfile::tempdir().unwrap();
    let (_, doc, _) = run(&["construct", "dilated_simplex", "--dim", "3"]);
    let path = write(&dir, "s.json", &doc.unwrap().to_string());
    let (code, report, _) = run(&["width", &path]);
    assert_eq!(code, 0);
    let r = &report.unwrap()["result"];
    assert_eq!(r["lattice_width"], "3");
    assert_eq!(r["direction"], serde_json::json!([1, 1, 1]));
}

#[test]
fn float_coordinate_is_malformed() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        &dir,
        "f.json",
        r#"{"d": 2, "points": [[0, 0], [1, 0], [0, 0.5]]}"#,
    );
    let (code, report, err) = run(&["classify", &path]);
    assert_eq!(code, 1);
    assert!(report.is_none());
    assert!(err.unwrap().contains("points[2][1]"));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["frobnicate"]).0, 64);
    assert_eq!(run(&["classify", "x.json", "--bogus"]).0, 64);
    assert_eq!(run(&["search", "--dim", "3", "--mode", "stochastic"]).0, 64);
    assert_eq!(run(&["search", "--dim", "3", "--mode", "exhaustive"]).0, 64);
    assert_eq!(run(&["construct", "nonesuch", "--dim", "2"]).0, 64);
    let (code, help, _) = invoke(["hollowlat", "--help"]);
    assert_eq!(code, 0);
    assert!(help.unwrap().contains("classify"));
}

#[test]
fn precondition_failures_exit_2_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let big = write(&dir, "b.json", r#"{"d": 2, "points": [[0, 0], [4, 0], [0, 4]]}"#);
    let (code, report, _) = run(&["reduce", &big]);
    assert_eq!(code, 2);
    let r = report.unwrap();
    assert_eq!(r["status"], "precondition_violated");
    assert_eq!(
        r["result"]["witness"]["interior_lattice_point"],
        serde_json::json!([1, 1])
    );

    let flat = write(&dir, "l.json", r#"{"d": 2, "points": [[0, 0], [3, 0]]}"#);
    let (code, report, _) = run(&["width", &flat]);
    assert_eq!(code, 2);
    assert_eq!(report.unwrap()["result"]["witness"]["affine_dim"], 1);

    let cube = write(
        &dir,
        "q.json",
        r#"{"d": 3, "points": [[0,0,0],[1,0,0],[0,1,0],[1,1,0],[0,0,1],[1,0,1],[0,1,1],[1,1,1]]}"#,
    );
    let (code, report, _) = run(&["reduce", &cube]);
    assert_eq!(code, 2);
    assert_eq!(
        report.unwrap()["result"]["witness"]["oversized_facet"]
            .as_array()
            .unwrap()
            .len(),
        4
    );
}

#[test]
fn dimension_mismatch_is_malformed() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(&dir, "m.json", r#"{"d": 2, "points": []}"#);
    assert_eq!(run(&["classify", &path]).0, 1);
    assert_eq!(run(&["classify", "/nonexistent/x.json"]).0, 1);
}

#[test]
fn construct_round_trip_matches_in_memory_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, d, k, n) in [
        (ConstructionKind::CrossInCube, 4, None, None),
        (ConstructionKind::PolygonLift, 3, None, Some(6)),
        (ConstructionKind::HypercubeK, 2, Some(4), None),
        (ConstructionKind::BallPolytope, 2, Some(9), None),
    ] {
        let mut args = vec![
            "construct".to_string(),
            kind.name().to_string(),
            "--dim".into(),
            d.to_string(),
        ];
        if let Some(k) = k {
            args.extend(["--k".into(), k.to_string()]);
        }
        if let Some(n) = n {
            args.extend(["--n".into(), n.to_string()]);
        }
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, doc, _) = run(&argv);
        assert_eq!(code, 0);
        let text = doc.unwrap().to_string();
        let parsed = PointSetDocument::parse(&text).unwrap();
        let c = construct(kind, &Params { d, k, n }).unwrap();
        assert_eq!(parsed.points, c.points);

        let path = write(&dir, "rt.json", &text);
        let (_, report, _) = run(&["classify", &path]);
        let in_memory = serde_json::to_value(classify_hull(&convex_hull(&c.points).unwrap())).unwrap();
        assert_eq!(report.unwrap()["result"]["classification"], in_memory);
    }
}

#[test]
fn construct_reports_claims() {
    let (_, doc, _) = run(&["construct", "hypercube_k", "--dim", "2", "--k", "4"]);
    let doc = doc.unwrap();
    let claims = doc["metadata"]["claims"].as_array().unwrap();
    assert!(claims.iter().all(|c| c["holds"] == true));
    assert_eq!(doc["points"].as_array().unwrap().len(), 16);
}

#[test]
fn segments_with_k() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(&dir, "s.json", r#"{"d": 2, "points": [[0, 0], [4, 0], [0, 4]]}"#);
    let (code, report, _) = run(&["segments", &path, "--k", "2"]);
    assert_eq!(code, 0);
    let r = &report.unwrap()["result"];
    assert_eq!(r["longest"]["length"], 4);
    assert!(r["modk"]["witness"]["length"].as_u64().unwrap() >= 2);
    assert_eq!(r["translation"]["modulus"], 4);
    // Residue (3, 3) is missing from x + y <= 4, so the shift (1, 1) avoids 4Z^2.
    assert_eq!(r["translation"]["shift"], serde_json::json!([1, 1]));
}

#[test]
fn huge_coordinates_survive_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let big = "100000000000000000000000000001";
    let text =
        format!(r#"{{"d": 2, "points": [[{big}, 0], [{big}, 1], [100000000000000000000000000002, 0]]}}"#);
    let path = write(&dir, "h.json", &text);
    let (code, out, _) = invoke(["hollowlat", "classify", path.as_str()]);
    assert_eq!(code, 0);
    let out = out.unwrap();
    // Emitted as a bare JSON integer, not a float or string.
    let parsed: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(parsed["result"]["hull"]["vertices"][0][0].to_string(), big);
}
