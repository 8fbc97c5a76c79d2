use std::path::PathBuf;

use assert_cmd::Command;
use serde_json::Value;

fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schemas").join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn output(args: &[&str]) -> Value {
    let out = Command::cargo_bin("abelrep").unwrap().args(args).output().unwrap();
    serde_json::from_slice(&out.stdout).unwrap()
}

/// Required keys are present and no key is undeclared, one level deep.
fn conforms(value: &Value, schema: &Value) {
    let props = schema["properties"].as_object().unwrap();
    let obj = value.as_object().unwrap();
    for key in schema["required"].as_array().unwrap() {
        assert!(obj.contains_key(key.as_str().unwrap()), "missing {key}");
    }
    for (key, v) in obj {
        let p = props.get(key).unwrap_or_else(|| panic!("undeclared key {key}"));
        if let (Some(items), Some(arr)) = (p.get("items"), v.as_array()) {
            if items.get("properties").is_some() {
                arr.iter().for_each(|x| conforms(x, items));
            }
        }
    }
}

#[test]
fn outputs_match_schemas() {
    let cases: &[(&str, &[&str])] = &[
        ("analyze", &["analyze", "par(cyclic(3), 2)"]),
        ("closure", &["closure", "--kind", "2orbit", "cyclic(5)"]),
        ("classification_report", &["classify", "--check-oracle", "gens: (1 2)(3 4), (5 6)"]),
        ("verify", &["verify", "catalogue:z2_3", "regular: [2, 2, 2]"]),
        ("aut", &["aut", "catalogue:fig3"]),
        ("catalogue_entry", &["catalogue", "z3_2_plus"]),
        ("graph", &["synth", "regular: [2, 2, 2]"]),
    ];
    for (name, args) in cases {
        conforms(&output(args), &schema(name));
    }
    for entry in output(&["catalogue"]).as_array().unwrap() {
        conforms(entry, &schema("catalogue_entry"));
    }
}
