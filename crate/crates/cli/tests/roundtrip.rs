use ytab::circuits::{all_matrices, all_plane_functions, Value};
use ytab::oracles::{partitions_up_to, EnumerationBounds};
use ytab_cli::format::{emit_json, emit_text, parse_json, parse_text};

fn suite() -> Vec<Value> {
    let mut vs: Vec<Value> = EnumerationBounds::default().tableaux().into_iter().map(Value::Tableau).collect();
    vs.extend((0..=3).flat_map(|k| all_matrices(k, 2)).map(Value::Matrix));
    vs.extend(partitions_up_to(4, 3).iter().flat_map(|p| all_plane_functions(p, 1)).map(Value::Plane));
    vs
}

#[test]
fn every_suite_value_round_trips_in_both_formats() {
    let vs = suite();
    assert!(vs.len() > 10_000);
    for v in &vs {
        assert_eq!(parse_text(&emit_text(v)).unwrap(), vec![v.clone()], "{v}");
        assert_eq!(parse_json(&emit_json(v)).unwrap(), vec![v.clone()], "{v}");
    }
}

#[test]
fn round_trip_is_byte_exact() {
    for v in suite().iter().step_by(97) {
        let text = emit_text(v);
        assert_eq!(emit_text(&parse_text(&text).unwrap()[0]), text);
        let json = emit_json(v);
        assert_eq!(emit_json(&parse_json(&json).unwrap()[0]), json);
    }
}

#[test]
fn whole_documents_round_trip() {
    let vs: Vec<Value> = suite().into_iter().step_by(13).collect();
    let doc = Value::Tuple(vs.clone());
    assert_eq!(parse_text(&emit_text(&doc)).unwrap(), vs);
    assert_eq!(parse_json(&emit_json(&doc)).unwrap(), vs);
}
