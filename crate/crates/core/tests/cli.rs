use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn corpus(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("collage-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn collage(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_collage")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn check_exit_codes() {
    let ok = collage(&["check", &corpus("shared_state.collage"), &corpus("comb.collage")]);
    assert_eq!(ok.status.code(), Some(0));
    let race = collage(&["check", &corpus("semaphore.collage")]);
    assert_eq!(race.status.code(), Some(1));
    assert!(stdout(&race).contains("central wire mismatch"));
    let bad = scratch("bad.collage");
    std::fs::write(&bad, "monoidal theory T { objects A; }").unwrap();
    assert_eq!(collage(&["check", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn check_reports_a_model_breaking_an_equation() {
    let f = scratch("broken.collage");
    std::fs::write(
        &f,
        "monoidal theory T { objects: A; edge f : A -> A; equation idem : f ; f = f; }
         interpretation i : T in z2 { A = *; f = 1; }",
    )
    .unwrap();
    let o = collage(&["check", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("equation `idem` fails"));
}

#[test]
fn eq_verdicts() {
    let out = scratch("race.json");
    let o = collage(&[
        "eq",
        &corpus("shared_state.collage"),
        "race",
        "raced",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("equal in 3 steps"));
    let steps = collage::rewrite::trace_from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(steps.len(), 3);

    let d = collage(&["eq", &corpus("channel.collage"), "roundtrip", "unchecked"]);
    assert_eq!(d.status.code(), Some(1));
    assert!(stdout(&d).contains("`counting`"));

    let u = collage(&["eq", &corpus("functor_box.collage"), "snake3", "plainbox", "--depth", "1"]);
    assert_eq!(u.status.code(), Some(3));
    let env = Command::new(env!("CARGO_BIN_EXE_collage"))
        .args(["eq", &corpus("functor_box.collage"), "snake3", "plainbox"])
        .env("COLLAGE_DEPTH", "2")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(3));

    let missing = collage(&["eq", &corpus("functor_box.collage"), "snake3", "nothing"]);
    assert_eq!(missing.status.code(), Some(2));
    let boundary = collage(&["eq", &corpus("functor_box.collage"), "boxed", "pair"]);
    assert_eq!(boundary.status.code(), Some(2));
}

#[test]
fn eval_prints_every_interpretation() {
    let o = collage(&["eval", &corpus("comb.collage"), "closed"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "parity: * -> * : 0\norder: 4 -> 2 : 4.2\n");
    let j = collage(&["eval", &corpus("functor_box.collage"), "pairMerged", "--model", "z2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["interpretation"], "parity");

    let f = scratch("gap.collage");
    std::fs::write(
        &f,
        "monoidal theory T { objects: A; edge f : A -> A; diagram d : f; }
         interpretation i : T in z2 { A = *; }",
    )
    .unwrap();
    let gap = collage(&["eval", f.to_str().unwrap(), "d"]);
    assert_eq!(gap.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&gap.stderr).contains("no interpretation for f"));
}

#[test]
fn render_formats() {
    let svg = collage(&["render", &corpus("functor_box.collage"), "boxed"]);
    assert_eq!(svg.status.code(), Some(0));
    let s = stdout(&svg);
    assert!(s.starts_with("<svg") && s.contains(">x</text>"));
    // inside the box is shaded, outside is not
    assert!(s.contains("rgb(255,255,255)") && s.contains("rgb(207,226,243)"));
    let dot = collage(&["render", &corpus("functor_box.collage"), "boxed", "--format", "dot"]);
    assert!(stdout(&dot).starts_with("digraph"));
    let bad = collage(&["render", &corpus("functor_box.collage"), "boxed", "--format", "png"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn oracles_and_index() {
    let o = collage(&["oracle", "hom-count", "--max-layers", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("hom-count: agreement\n"));
    assert_eq!(collage(&["oracle", "coend-closure"]).status.code(), Some(2));
    let c = collage(&["oracle", "coend-closure", "--seed", "3", "--count", "5"]);
    assert_eq!(c.status.code(), Some(0));
    let ex = collage(&["examples"]);
    let s = stdout(&ex);
    assert!(s.contains("bimodular theory SharedState: race, raced, intended"));
    assert!(s.contains("shared_state.race.raced.json"));
}

#[test]
fn normalize_is_exchange_invariant() {
    let a = collage(&["normalize", &corpus("functor_box.collage"), "mergeLeft"]);
    let b = collage(&["normalize", &corpus("functor_box.collage"), "mergeRight"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let d = collage::diagram::SlicedDiagram::from_json(stdout(&a).trim()).unwrap();
    assert_eq!(d.len(), 2);
}
