//! Command-level tests, driving the command functions directly on real
//! fixture files and temporary inputs.

use std::path::PathBuf;
use std::sync::Arc;

use tempfile::tempdir;

use whq_cli::commands::{
    cmd_derive, cmd_equivalence, cmd_fundamental, cmd_gen, cmd_validate, ReportFormat,
};
use whq_cli::format::{ModuleFile, StructureFile};

use whq_core::exactlin::{Composite, FieldSpec, Mor};
use whq_core::generators::{group_algebra, groupoid_algebra, CayleyTable, FiniteGroupoid};
use whq_core::hopfmod::HopfModule;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

#[test]
fn validate_fixtures_pass() {
    for name in ["s3.whq", "c2.whq", "chein-s3.whq", "discrete-3.whq", "pair-2.whq"] {
        let res = cmd_validate(&fixture(name), ReportFormat::Text);
        assert_eq!(res.exit_code, 0, "{name}:\n{}", res.output);
        assert!(res.output.contains("(a4-7) ok"));
        assert!(res.output.contains("(mu-assoc-1) ok"));
        assert!(res.output.ends_with("RESULT: PASS\n"));
    }
}

#[test]
fn validate_json_report() {
    let res = cmd_validate(&fixture("s3.whq"), ReportFormat::Json);
    assert_eq!(res.exit_code, 0);
    let doc: serde_json::Value = serde_json::from_str(&res.output).unwrap();
    assert_eq!(doc["command"], "validate");
    assert_eq!(doc["pass"], true);
    assert!(doc["checks"].as_array().unwrap().len() > 20);
}

#[test]
fn validate_broken_antipode_fails_with_label() {
    let dir = tempdir().unwrap();
    // The group algebra of Z/3 with the antipode forced to the identity.
    let h = group_algebra(&CayleyTable::cyclic(3), FieldSpec::Q).unwrap();
    let mut doc = StructureFile::from_whq(&h);
    doc.antipode = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| if i == j { "1".to_string() } else { "0".to_string() })
                .collect()
        })
        .collect();
    let path = dir.path().join("broken-antipode.whq");
    std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap()).unwrap();

    let res = cmd_validate(&path, ReportFormat::Text);
    assert_eq!(res.exit_code, 1);
    assert!(res.output.contains("(a4-1) FAIL"), "{}", res.output);
    assert!(res.output.ends_with("RESULT: FAIL\n"));
}

#[test]
fn validate_empty_structure_passes() {
    let dir = tempdir().unwrap();
    let doc = StructureFile {
        field: whq_cli::format::FieldDto::Q,
        dim: 0,
        unit: vec![],
        mul: vec![],
        counit: vec![],
        comul: vec![],
        antipode: vec![],
        braiding: None,
    };
    let path = dir.path().join("zero.whq");
    std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap()).unwrap();
    let res = cmd_validate(&path, ReportFormat::Text);
    assert_eq!(res.exit_code, 0, "{}", res.output);
}

#[test]
fn unparseable_input_exits_two() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("garbage.whq");
    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(cmd_validate(&path, ReportFormat::Text).exit_code, 2);
    assert_eq!(cmd_derive(&path, ReportFormat::Text).exit_code, 2);
    let missing = dir.path().join("missing.whq");
    assert_eq!(cmd_validate(&missing, ReportFormat::Text).exit_code, 2);
}

#[test]
fn derive_reports_base_dimensions_and_degeneration() {
    let res = cmd_derive(&fixture("discrete-3.whq"), ReportFormat::Text);
    assert_eq!(res.exit_code, 0);
    assert!(res.output.contains("dim H_L = 3"), "{}", res.output);
    assert!(res.output.contains("associative: yes"));
    assert!(res
        .output
        .contains("hopf-quasigroup degeneration (Pi^L = unit∘counit): no"));

    let res = cmd_derive(&fixture("c2.whq"), ReportFormat::Text);
    assert!(res
        .output
        .contains("hopf-quasigroup degeneration (Pi^L = unit∘counit): yes"));

    let res = cmd_derive(&fixture("chein-s3.whq"), ReportFormat::Text);
    assert!(res.output.contains("nonassociative: witness ("), "{}", res.output);
    assert!(res.output.contains("dim H_L = 1"));
}

#[test]
fn fundamental_on_fixtures() {
    for name in ["s3.whq", "discrete-3.whq", "pair-2.whq"] {
        let res = cmd_fundamental(&fixture(name), None, ReportFormat::Text);
        assert_eq!(res.exit_code, 0, "{name}:\n{}", res.output);
        assert!(res.output.contains("(alpha-quasilinear) ok"));
    }
}

#[test]
fn fundamental_accepts_module_files() {
    let dir = tempdir().unwrap();
    let h = Arc::new(groupoid_algebra(&FiniteGroupoid::discrete(2), FieldSpec::Q).unwrap());
    let m = whq_core::generators::regular_hopf_module(&h).unwrap();
    let doc = ModuleFile::from_module(&m);
    let path = dir.path().join("regular.whqmod");
    std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap()).unwrap();
    let hpath = dir.path().join("h.whq");
    std::fs::write(
        &hpath,
        serde_json::to_string_pretty(&StructureFile::from_whq(&h)).unwrap(),
    )
    .unwrap();
    let res = cmd_fundamental(&hpath, Some(&path), ReportFormat::Text);
    assert_eq!(res.exit_code, 0, "{}", res.output);
}

#[test]
fn equivalence_on_small_fixture() {
    let res = cmd_equivalence(&fixture("discrete-3.whq"), &[], 0, 0, ReportFormat::Text);
    assert_eq!(res.exit_code, 0, "{}", res.output);
    assert!(res.output.contains("(triangle-1) ok"));
    assert!(res.output.contains("(triangle-2) ok"));
    assert!(res.output.contains("(unit-naturality) ok"));
}

#[test]
fn equivalence_with_random_seeded_samples_is_deterministic() {
    let a = cmd_equivalence(&fixture("pair-2.whq"), &[], 2, 42, ReportFormat::Text);
    let b = cmd_equivalence(&fixture("pair-2.whq"), &[], 2, 42, ReportFormat::Text);
    assert_eq!(a.exit_code, 0, "{}", a.output);
    assert_eq!(a.output, b.output);
}

#[test]
fn equivalence_rejects_non_strong_sample_naming_c1() {
    let dir = tempdir().unwrap();
    let h = Arc::new(groupoid_algebra(&FiniteGroupoid::pair(2), FieldSpec::Q).unwrap());
    let n = h.dim();
    // Reversed multiplication: fails (c1) on the pair groupoid.
    let twisted = Composite::new(FieldSpec::Q, n * n)
        .then(&h.braiding().c)
        .then(h.mul())
        .materialize();
    let m = HopfModule::new_unchecked(Arc::clone(&h), n, twisted, h.comul().clone()).unwrap();
    let mpath = dir.path().join("twisted.whqmod");
    std::fs::write(
        &mpath,
        serde_json::to_string_pretty(&ModuleFile::from_module(&m)).unwrap(),
    )
    .unwrap();
    let res = cmd_equivalence(
        &fixture("pair-2.whq"),
        &[mpath],
        0,
        0,
        ReportFormat::Text,
    );
    assert_eq!(res.exit_code, 1, "{}", res.output);
    assert!(res.output.contains("(c1)"), "{}", res.output);
}

#[test]
fn gen_round_trips_and_reports() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("klein.whq");
    let res = cmd_gen("klein", "Q", Some(&path));
    assert_eq!(res.exit_code, 0, "{}", res.output);
    let res = cmd_validate(&path, ReportFormat::Text);
    assert_eq!(res.exit_code, 0);
    // Unknown specs are parse errors; impossible constructions law errors.
    assert_eq!(cmd_gen("nonsense", "Q", None).exit_code, 2);
    assert_eq!(cmd_gen("s3", "fp:9", None).exit_code, 2);
}

#[test]
fn gen_over_prime_field() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("s3-f7.whq");
    let res = cmd_gen("s3", "fp:7", Some(&path));
    assert_eq!(res.exit_code, 0, "{}", res.output);
    let res = cmd_validate(&path, ReportFormat::Text);
    assert_eq!(res.exit_code, 0, "{}", res.output);
}

#[test]
fn save_load_round_trip_is_byte_exact_on_fixtures() {
    for name in [
        "s3.whq",
        "c2.whq",
        "chein-s3.whq",
        "discrete-3.whq",
        "pair-2.whq",
        "flagship.whq",
    ] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let doc: StructureFile = serde_json::from_str(&text).unwrap();
        let re = format!("{}\n", serde_json::to_string_pretty(&doc).unwrap());
        assert_eq!(re, text, "{name} round trip");
        // And through the in-memory structure as well.
        let h = doc.to_whq().unwrap();
        let re2 = format!(
            "{}\n",
            serde_json::to_string_pretty(&StructureFile::from_whq(&h)).unwrap()
        );
        assert_eq!(re2, text, "{name} structure round trip");
    }
}
