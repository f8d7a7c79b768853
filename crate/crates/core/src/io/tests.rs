use super::*;

fn load(text: &str) -> Result<Workspace, WorkspaceError> {
    Workspace::from_json(text, None)
}

const BASE: &str = r#"{
  "field": "rationals",
  "algebras": { "A": { "sample": "kA2" }, "D": { "sample": "k[x]/(x^2)" } },
  "modules": {
    "I0": { "injective": { "algebra": "A", "index": 0 } },
    "S": { "simple": { "algebra": "D", "index": 0 } }
  },
  "bimodules": { "AA": { "regular": "A" }, "kD": { "simple": "D" } },
  "candidates": { "L": { "complex": "AA" }, "K": { "complex": "kD" } },
  "tasks": [
    { "op": "check-homothety", "candidate": "L" },
    { "op": "membership", "candidate": "L", "class": "bass", "modules": ["I0"] },
    { "op": "roundtrip", "candidate": "K", "class": "bass", "complexes": ["S"], "label": "non-member" }
  ]
}"#;

#[test]
fn minimal_file_loads() {
    let ws = load(r#"{"field": "rationals", "algebras": {"k": {"sample": "k"}}}"#).unwrap();
    assert_eq!(ws.algebras.len(), 1);
    assert!(ws.tasks.is_empty());
}

#[test]
fn non_associative_constants_name_the_triple() {
    // unital, but (u v) u = 0 while u (v u) = u u = v
    let text = r#"{
      "field": "rationals",
      "algebras": { "X": { "structure": {
        "labels": ["1", "u", "v"],
        "constants": [
          [[1,0,0],[0,1,0],[0,0,1]],
          [[0,1,0],[0,0,1],[0,0,0]],
          [[0,0,1],[0,1,0],[0,0,0]]
        ],
        "unit": [1,0,0]
      } } }
    }"#;
    let err = load(text).unwrap_err().to_string();
    assert!(err.contains("associativity fails on basis triple"), "{err}");
}

#[test]
fn nonzero_square_names_the_degree() {
    let text = r#"{
      "field": "rationals",
      "algebras": { "k": { "sample": "k" } },
      "modules": { "V": { "actions": { "algebra": "k", "matrices": [[[1]]] } } },
      "complexes": { "C": { "terms": {
        "0": { "module": "V", "differential": [[1]] },
        "1": { "module": "V", "differential": [[1]] },
        "2": { "module": "V" }
      } } }
    }"#;
    let err = load(text).unwrap_err().to_string();
    assert!(err.contains("complexes.C") && err.contains("degree 0"), "{err}");
}

#[test]
fn schema_errors_carry_positions() {
    let err = load("{\n  \"field\": \"rationals\",\n  \"algebras\": 3\n}").unwrap_err();
    match err {
        WorkspaceError::Schema { line, .. } => assert_eq!(line, 3),
        e => panic!("unexpected {e}"),
    }
}

#[test]
fn unresolved_and_unknown_are_reported() {
    let err = load(r#"{"field": "rationals", "modules": {"M": {"regular": "nope"}}}"#).unwrap_err();
    assert!(matches!(err, WorkspaceError::Unresolved { .. }), "{err}");
    let err = load(r#"{"field": "rationals", "tasks": [{"op": "frobnicate"}]}"#).unwrap_err();
    assert!(matches!(err, WorkspaceError::UnknownTask(_)), "{err}");
    let err = load(r#"{"field": "rationals", "tasks": [{"op": "check-pdc", "candidate": "L"}]}"#).unwrap_err();
    assert!(matches!(err, WorkspaceError::Unresolved { .. }), "{err}");
}

#[test]
fn cycles_are_rejected() {
    let text = r#"{"field": "rationals", "algebras": {"A": {"opposite": "B"}, "B": {"opposite": "A"}}}"#;
    assert!(matches!(load(text).unwrap_err(), WorkspaceError::Cycle { .. }));
}

#[test]
fn save_is_canonical_and_stable() {
    let text = r#"{
      "field": "Q",
      "algebras": { "k": { "sample": "k" } },
      "modules": { "V": { "actions": { "algebra": "k", "matrices": [[["2/2", 0], ["0", "-6/4"]]] } } },
      "tasks": [{ "op": "resolve", "object": "V" }]
    }"#;
    let ws = load(text).unwrap_err();
    // the action of the unit must be the identity
    assert!(ws.to_string().contains("modules.V"), "{ws}");
    let text = text.replace("\"-6/4\"", "\"4/4\"");
    let once = load(&text).unwrap().to_canonical_json();
    assert!(once.contains("\"1\"") && !once.contains("4/4") && once.contains("\"rationals\""), "{once}");
    let twice = load(&once).unwrap().to_canonical_json();
    assert_eq!(once, twice);
}

#[test]
fn prime_fields_store_integers() {
    let text = r#"{
      "field": {"prime": 5},
      "algebras": { "D": { "sample": "k[x]/(x^2)" } },
      "modules": { "M": { "actions": { "algebra": "D", "matrices": [[[1,0],[0,6]], [[0,0],["7",0]]] } } }
    }"#;
    let out = load(text).unwrap().to_canonical_json();
    assert!(out.contains("\"prime\": 5"));
    assert!(!out.contains("\"7\"") && !out.contains(" 6"), "{out}");
    assert_eq!(load(&out).unwrap().to_canonical_json(), out);
}

#[test]
fn field_override_reinterprets_scalars() {
    let ws = Workspace::from_json(BASE, Some(crate::linalg::Field::prime(3).unwrap())).unwrap();
    assert!(ws.to_canonical_json().contains("\"prime\": 3"));
}

#[test]
fn tasks_dispatch_with_expected_exit_codes() {
    let ws = load(BASE).unwrap();
    let opts = RunOptions::default();
    let h = run_task(&ws, 0, opts).unwrap();
    assert_eq!(h.op, "check-pdc");
    assert_eq!(h.exit_code(), 0);
    let m = run_task(&ws, 1, opts).unwrap();
    assert!(m.verdict.as_ref().unwrap().is_pass());
    let r = run_task(&ws, 2, opts).unwrap();
    assert_eq!(r.exit_code(), 1);
    let json = serde_json::to_string(&r).unwrap();
    assert!(json.contains("not in the class"), "{json}");
    let all = run_tasks(&ws, &[0, 1, 2], opts).unwrap();
    assert_eq!(all.exit_code, 1);
}

#[test]
fn reports_are_deterministic() {
    let ws = load(BASE).unwrap();
    let opts = RunOptions { seed: 7, ..RunOptions::default() };
    let a = run_tasks(&ws, &[0, 1, 2], opts).unwrap().to_json();
    let ws = load(BASE).unwrap();
    let b = run_tasks(&ws, &[0, 1, 2], opts).unwrap().to_json();
    assert_eq!(a, b);
}

#[test]
fn exit_code_precedence() {
    assert_eq!(combined_exit_code([0, 2, 0]), 2);
    assert_eq!(combined_exit_code([2, 3]), 3);
    assert_eq!(combined_exit_code([3, 1, 2]), 1);
    assert_eq!(combined_exit_code([]), 0);
}
