use qgb_core::covers::build_cover;
use qgb_core::families::generate;
use qgb_core::io::{cover_to_json, graph_from_json, load_cover, load_graph, parse_family, save_graph};
use qgb_core::{CoverStrategy, Error};

#[test]
fn generated_graphs_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for family in ["platonic:dodecahedron", "chain:3,2,4@1,1/2,2", "pumpkin:1,2,3", "star:1,2", "cycle:5"] {
        let g = generate(&parse_family(family, None).unwrap()).unwrap();
        let path = dir.path().join("g.json");
        save_graph(&g, &path).unwrap();
        let back = load_graph(&path).unwrap();
        assert_eq!(back, g, "{family}");
    }
}

#[test]
fn cover_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g = generate(&parse_family("platonic:cube", None).unwrap()).unwrap();
    let cover = build_cover(&g, &CoverStrategy::Faces).unwrap();
    let path = dir.path().join("c.json");
    std::fs::write(&path, cover_to_json(&g, &cover)).unwrap();
    assert_eq!(load_cover(&g, &path).unwrap(), cover);
}

#[test]
fn negative_length_is_rejected() {
    let text = r#"{"vertices":[0,1],"edges":[{"id":"a","ends":[0,1],"length":-1}]}"#;
    match graph_from_json(text) {
        Err(Error::Parse { message, .. }) => assert!(message.contains('a'), "{message}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn incomplete_rotation_is_rejected() {
    let text = r#"{"vertices":[0,1],
        "edges":[{"id":"a","ends":[0,1],"length":1},{"id":"b","ends":[0,1],"length":1}],
        "rotation":{"0":[{"edge":"a","end":0},{"edge":"b","end":0}],"1":[{"edge":"a","end":1}]}}"#;
    match graph_from_json(text) {
        Err(Error::Parse { location, .. }) => assert!(location.starts_with("rotation"), "{location}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn missing_file_is_an_io_error() {
    assert!(matches!(load_graph("/nonexistent/graph.json"), Err(Error::Io(_))));
}
