use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;
use votekit::indices::{power_vector, Engine};
use votekit::number::parse_rational;
use votekit::{parse_game, IndexKind, Rational};

fn votekit(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_votekit"))
        .env("VOTEKIT_CACHE", cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(cache: &Path, args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = votekit(cache, &full);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn results(v: &Value) -> &Vec<Value> {
    v["results"].as_array().expect("results array")
}

fn fractions(v: &Value, field: &str) -> Vec<String> {
    results(v)
        .iter()
        .map(|r| r[field].as_str().unwrap().to_string())
        .collect()
}

fn rationals(items: &[Value]) -> Vec<Rational> {
    items
        .iter()
        .map(|x| parse_rational(x.as_str().unwrap()).unwrap())
        .collect()
}

#[test]
fn index_worked_examples() {
    let dir = TempDir::new().unwrap();
    let ssi = json(dir.path(), &["index", "[3;3,2,1,1]", "--ssi"]);
    assert_eq!(fractions(&ssi, "fraction"), ["7/12", "1/4", "1/12", "1/12"]);
    let pbi = json(dir.path(), &["index", "[3;3,2,1,1]", "--pbi"]);
    assert_eq!(fractions(&pbi, "fraction"), ["1/2", "3/10", "1/10", "1/10"]);
    let combo = json(dir.path(), &["index", "[2;1,1,0,0] | [2;0,0,1,1]", "--ssi"]);
    assert_eq!(fractions(&combo, "fraction"), ["1/4"; 4]);
    assert_eq!(fractions(&combo, "decimal"), ["0.2500000"; 4]);
}

#[test]
fn output_envelope() {
    let dir = TempDir::new().unwrap();
    let v = json(dir.path(), &["eval", "[3;3,2,1,1]", "--coalition", "1,3"]);
    assert!(v["config"].is_object() && v["timing"]["seconds"].is_number());
    let out = votekit(
        dir.path(),
        &["--format", "csv", "index", "[3;3,2,1,1]", "--ssi"],
    );
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().contains("fraction"));
    assert_eq!(lines.count(), 4);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(
        votekit(dir.path(), &["index", "[3;1,1]"]).status.code(),
        Some(1)
    );
    assert_eq!(
        votekit(dir.path(), &["index", "[3;3,2"]).status.code(),
        Some(1)
    );
    assert_eq!(votekit(dir.path(), &["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        votekit(dir.path(), &["tables", "--n", "9"]).status.code(),
        Some(1)
    );
    assert_eq!(
        votekit(dir.path(), &["omega", "--n", "8"]).status.code(),
        Some(1)
    );
    assert_eq!(votekit(dir.path(), &["--help"]).status.code(), Some(0));
    let err = votekit(dir.path(), &["index", "[3;1,1]"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("error"));
}

fn distinct_counts(v: &Value) -> Vec<(u64, String, u64)> {
    results(v)
        .iter()
        .map(|r| {
            (
                r["n"].as_u64().unwrap(),
                r["index"].as_str().unwrap().to_string(),
                r["distinct"].as_u64().unwrap(),
            )
        })
        .collect()
}

#[test]
fn tables_coincide_up_to_six_voters() {
    let dir = TempDir::new().unwrap();
    let wg = json(dir.path(), &["tables", "--class", "wg", "--n", "3..6"]);
    let cg = json(dir.path(), &["tables", "--class", "cg", "--n", "3..6"]);
    assert_eq!(distinct_counts(&wg), distinct_counts(&cg));
    let ssi: Vec<u64> = distinct_counts(&wg)
        .into_iter()
        .filter(|c| c.1 == "ssi")
        .map(|c| c.2)
        .collect();
    assert_eq!(ssi, [4, 11, 53, 536]);
    assert!(results(&wg).iter().all(|r| r["check"] == "ok"));
}

#[test]
fn warm_cache_gives_identical_results() {
    let dir = TempDir::new().unwrap();
    let args = ["tables", "--class", "both", "--n", "3..6"];
    let cold = json(dir.path(), &args);
    assert!(dir.path().join("cg6.vkcat").exists());
    let warm = json(dir.path(), &args);
    assert_eq!(
        serde_json::to_string(&cold["results"]).unwrap(),
        serde_json::to_string(&warm["results"]).unwrap()
    );
}

#[test]
fn corrupt_cache_is_rebuilt() {
    let dir = TempDir::new().unwrap();
    let args = ["enumerate", "--class", "cg", "--n", "5"];
    let first = json(dir.path(), &args);
    let file = dir.path().join("cg5.vkcat");
    let bytes = fs::read(&file).unwrap();
    fs::write(&file, &bytes[..bytes.len() / 2]).unwrap();
    let second = json(dir.path(), &args);
    assert_eq!(first["results"], second["results"]);
    assert_eq!(fs::read(&file).unwrap(), bytes);
    fs::write(&file, b"garbage").unwrap();
    assert_eq!(json(dir.path(), &args)["results"], first["results"]);
}

#[test]
fn listed_games_reparse() {
    let dir = TempDir::new().unwrap();
    let v = json(
        dir.path(),
        &["enumerate", "--class", "wg", "--n", "4", "--list"],
    );
    let listed: Vec<&Value> = results(&v)
        .iter()
        .filter(|r| r["game"].is_string())
        .collect();
    assert_eq!(listed.len(), 25);
    for r in listed {
        let g = parse_game(r["game"].as_str().unwrap()).unwrap();
        let w = parse_game(r["weights"].as_str().unwrap()).unwrap();
        assert_eq!(g.to_explicit().unwrap(), w.to_explicit().unwrap());
    }
}

#[test]
fn omega_games_reparse() {
    let dir = TempDir::new().unwrap();
    let v = json(
        dir.path(),
        &["omega", "--n", "5", "--index", "ssi", "--metric", "l1"],
    );
    let r = &results(&v)[0];
    assert_eq!(r["exact"], "0");
    let argmax = parse_game(r["argmax"].as_str().unwrap()).unwrap();
    let nearest = parse_game(r["nearest"].as_str().unwrap()).unwrap();
    assert_eq!(
        argmax.to_explicit().unwrap(),
        nearest.to_explicit().unwrap()
    );
    let p = power_vector(&nearest, IndexKind::Ssi, Engine::Direct).unwrap();
    assert_eq!(
        p.entries(),
        rationals(r["nearest_vector"]["fractions"].as_array().unwrap())
    );
}

#[test]
fn inverse_of_attainable_target() {
    let dir = TempDir::new().unwrap();
    let target = dir.path().join("target.txt");
    fs::write(&target, "n=4 index=ssi\n7/12 1/4 1/12 1/12\n").unwrap();
    let v = json(
        dir.path(),
        &["inverse", "--target", target.to_str().unwrap(), "--n", "4"],
    );
    let r = &results(&v)[0];
    assert_eq!(r["exact"], "0");
    assert_eq!(r["mode"], "EXACT_MIN");
    let g = parse_game(r["game"].as_str().unwrap()).unwrap();
    let p = power_vector(&g, IndexKind::Ssi, Engine::Direct).unwrap();
    let want: Vec<Rational> = ["7/12", "1/4", "1/12", "1/12"]
        .iter()
        .map(|x| parse_rational(x).unwrap())
        .collect();
    assert_eq!(p.entries(), want);
    assert_eq!(fractions(&v, "vector")[0], "7/12 1/4 1/12 1/12");
}

#[test]
fn heuristic_inverse_is_flagged_and_seeded() {
    let dir = TempDir::new().unwrap();
    let args = [
        "inverse", "--target", "beta", "--n", "9", "--index", "ssi", "--budget", "500",
    ];
    let a = json(dir.path(), &args);
    let b = json(dir.path(), &args);
    assert_eq!(results(&a)[0]["mode"], "HEURISTIC_UPPER_BOUND");
    assert_eq!(a["results"], b["results"]);
    let g = parse_game(results(&a)[0]["game"].as_str().unwrap()).unwrap();
    assert_eq!(g.n(), 9);
}

#[test]
fn council_powers_are_normalized() {
    let dir = TempDir::new().unwrap();
    let pops = dir.path().join("members.csv");
    let members: String = (1..=10).map(|i| format!("m{i},{}\n", 1000 / i)).collect();
    fs::write(&pops, format!("# toy council\n{members}")).unwrap();
    let v = json(
        dir.path(),
        &["eu", "--populations", pops.to_str().unwrap(), "--pbi"],
    );
    let values: Vec<Rational> = results(&v)
        .iter()
        .map(|r| parse_rational(r["fraction"].as_str().unwrap()).unwrap())
        .collect();
    assert_eq!(values.len(), 10);
    assert_eq!(values.iter().sum::<Rational>(), Rational::from_integer(1));
    assert!(values.windows(2).all(|w| w[0] >= w[1]));
}
