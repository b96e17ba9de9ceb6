use serde_json::Value;
use uninorm_wasm::{check_pair, decompose_pair, family_table};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn table_view() {
    let v = parse(family_table("idemmin(n=4,e=2)").unwrap());
    assert_eq!(v["neutral"], 2);
    assert_eq!(v["rows"][2], serde_json::json!([0, 1, 2, 3, 4]));
    assert_eq!(v["regions"][0][4], "off-diagonal");
    assert_eq!(v["regions"][3][4], "upper-square");
    assert_eq!(v["idempotent"], true);
    assert!(family_table("idemmin(n=4,e=7)").is_err());
    assert!(family_table("min(n=40)").unwrap_err().contains("L_12"));
}

#[test]
fn pair_views() {
    let v = parse(check_pair("idemmin(n=4,e=2)", "idemmin(n=4,e=2)").unwrap());
    assert_eq!(v["summary"], "distributive: true; case: equal-neutral; theorem agrees");
    assert!(v["violation"].is_null());
    let v = parse(check_pair("luk-upper(n=4,e=2)", "luk-upper(n=4,e=2)").unwrap());
    assert_eq!(v["distributive"], false);
    assert_eq!(v["violation"]["witness"].as_array().unwrap().len(), 3);
    assert!(check_pair("min(n=3)", "min(n=4)").is_err());
}

#[test]
fn decomposition_view() {
    let v = parse(decompose_pair("umin-of(n=4,e=2,t=min(n=2),s=max(n=2))", "idemmin(n=4,e=1)").unwrap());
    assert_eq!(v["case"], "greater-neutral");
    assert_eq!(v["inner"]["neutral"], 1);
    assert_eq!(v["points"], 4);
    let err = decompose_pair("idemmin(n=4,e=2)", "luk-upper(n=4,e=1)").unwrap_err();
    assert!(err.starts_with("not distributive"), "{err}");
}
