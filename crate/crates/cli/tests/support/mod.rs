//! Golden-file cases shared by the golden and acceptance tests.
#![allow(dead_code)]

use std::path::PathBuf;

pub const CASES: &[(&str, &[&str])] = &[
    ("perm_eval", &["perm", "eval", "identity", "7"]),
    ("perm_eval_rho", &["perm", "eval", "rho", "6"]),
    ("perm_invert", &["perm", "invert", "rho"]),
    ("perm_oneline", &["perm", "oneline", "theta", "--len", "8"]),
    ("perm_pseudolen_theta", &["perm", "pseudolen", "theta", "--len", "6"]),
    ("perm_pseudolen_rho", &["perm", "pseudolen", "rho", "--len", "6"]),
    ("perm_validate", &["perm", "validate", r#"{"prefix":[2,1,4,3],"period":2,"offsets":[-1,1]}"#]),
    ("perm_validate_json", &["perm", "validate", "[3,1,2]", "--format", "json"]),
    ("perm_validate_offset_sum", &["perm", "validate", r#"{"prefix":[],"period":1,"offsets":[2]}"#]),
    ("perm_parse_error", &["perm", "eval", "[2,x,1]", "1"]),
    ("bruhat_leq_same", &["bruhat", "leq", "rho", "rho"]),
    ("bruhat_leq_finite", &["bruhat", "leq", "[1,3,2]", "[2,3,1]"]),
    ("bruhat_leq_not", &["bruhat", "leq", "[2,3,1]", "[1,3,2]"]),
    ("bruhat_leq_horizon", &["bruhat", "leq", "theta", "rho", "--horizon", "1000"]),
    ("bruhat_leq_json", &["bruhat", "leq", "rho", "theta", "--format", "json"]),
    ("bruhat_cover", &["bruhat", "cover", "[1,3,2]", "[2,3,1]"]),
    ("bruhat_not_cover", &["bruhat", "cover", "identity", "[3,2,1]"]),
    ("bruhat_dmf", &["bruhat", "dmf", "theta", "rho"]),
    ("bruhat_chain", &["bruhat", "chain", "identity", "theta", "--max-steps", "3"]),
    ("bruhat_chain_finite", &["bruhat", "chain", "identity", "[3,2,1]"]),
    ("bruhat_candidates", &["bruhat", "candidates", "identity", "[3,2,1]"]),
    ("bruhat_dmf_not_ordered", &["bruhat", "dmf", "[2,1]", "identity"]),
    ("interval_enum", &["interval", "enum", "identity", "[3,2,1]"]),
    ("interval_enum_identity", &["interval", "enum", "identity", "identity"]),
    ("interval_enum_dot", &["interval", "enum", "identity", "[2,3,1]", "--out", "dot"]),
    ("interval_enum_infinite", &["interval", "enum", "identity", "theta"]),
    ("interval_grading", &["interval", "grading", "identity", "[4,3,2,1]"]),
    ("interval_elcheck", &["interval", "elcheck", "identity", "[4,3,2,1]"]),
    ("interval_chains", &["interval", "chains", "identity", "[3,2,1]"]),
    ("complex_shelling", &["complex", "shelling", "identity", "[3,2,1]"]),
    ("complex_fhvec", &["complex", "fhvec", "identity", "[2,1]"]),
    ("complex_fhvec_s3", &["complex", "fhvec", "identity", "[3,2,1]"]),
    ("complex_srideal", &["complex", "srideal", "identity", "[3,2,1]"]),
    ("complex_srideal_m2", &["complex", "srideal", "identity", "[2,1,4,3]", "--m2"]),
    ("complex_srideal_chain", &["complex", "srideal", "identity", "[2,1]"]),
    ("complex_order", &["complex", "order", "identity", "[2,3,1]"]),
    ("complex_nested", &["complex", "nested", "identity", "theta", "--depth", "4", "--samples", "20"]),
    ("complex_nested_rho", &["complex", "nested", "identity", "rho", "--depth", "3"]),
    ("usage_unknown_command", &["frobnicate"]),
    ("usage_bad_bound", &["bruhat", "chain", "identity", "theta", "--max-steps", "0"]),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}
