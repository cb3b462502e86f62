use std::process::{Command, Output};

use serde_json::Value;

fn replika(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_replika"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn build_reports_dimensions() {
    let out = replika(&["build", "--quiver", "A3", "--m", "1", "--out", "json"]);
    assert!(out.status.success());
    let j = json_of(&out);
    assert_eq!(j["dim"], 18);
    assert_eq!(j["simples"], 6);
    assert_eq!(j["gldim"], 3);

    let file = concat!(env!("CARGO_MANIFEST_DIR"), "/../../quivers/a3.quiver");
    let j2 = json_of(&replika(&[
        "build", "--quiver", file, "--m", "2", "--out", "json",
    ]));
    assert_eq!(j2["dim"], 30);
    assert_eq!(j2["simples"], 9);
}

#[test]
fn malformed_quiver_is_a_usage_error() {
    let path = std::env::temp_dir().join(format!("replika-bad-{}.quiver", std::process::id()));
    std::fs::write(&path, "quiver Q\nvertices 3\narrow a 1\n").unwrap();
    let out = replika(&["build", "--quiver", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let out = replika(&["verify", "--quiver", "A3", "--target", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_is_deterministic_and_matches_cluster_count() {
    let args = [
        "enumerate",
        "--quiver",
        "A3",
        "--m",
        "1",
        "--pd-bound",
        "1",
        "--out",
        "json",
        "--seed",
        "3",
    ];
    let a = replika(&args);
    let b = replika(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let j = json_of(&a);
    assert_eq!(j["tilting_count"], 14);
    assert_eq!(j["cluster_tilting_objects"], 14);

    let dot = replika(&["enumerate", "--quiver", "A3", "--m", "1", "--out", "dot"]);
    let text = String::from_utf8(dot.stdout).unwrap();
    assert!(text.starts_with("graph"));
    assert!(text.contains(" -- "));
}

#[test]
fn mutate_then_reverse() {
    let inv = json_of(&replika(&[
        "enumerate",
        "--quiver",
        "A3",
        "--m",
        "1",
        "--out",
        "json",
    ]));
    let modules = inv["modules"].as_array().unwrap();
    let mut reversed = 0;
    let mut sink_seen = false;
    for t in inv["tilting"].as_array().unwrap() {
        let id = t["id"].as_str().unwrap();
        let summands = t["summands"].as_array().unwrap();
        for (k, s) in summands.iter().enumerate() {
            if modules[s.as_u64().unwrap() as usize]["proj_inj"] == true {
                continue;
            }
            let k = k.to_string();
            let up = replika(&[
                "mutate",
                "--quiver",
                "A3",
                "--m",
                "1",
                "--tilting",
                id,
                "--summand",
                &k,
                "--out",
                "json",
            ]);
            if up.status.code() == Some(2) {
                let err = String::from_utf8_lossy(&up.stderr);
                sink_seen |= err.contains("sink complement");
                continue;
            }
            assert!(
                up.status.success(),
                "{}",
                String::from_utf8_lossy(&up.stderr)
            );
            let j = json_of(&up);
            assert_eq!(j["exact"], true);
            let added = &j["added"]["index"];
            let pos = j["to_summands"]
                .as_array()
                .unwrap()
                .iter()
                .position(|v| v == added)
                .unwrap()
                .to_string();
            let to = j["to"].as_str().unwrap();
            let args = [
                "mutate",
                "--quiver",
                "A3",
                "--m",
                "1",
                "--tilting",
                to,
                "--summand",
                &pos,
                "--direction",
                "down",
                "--out",
                "json",
            ];
            let down = json_of(&replika(&args));
            assert_eq!(down["to"], id);
            reversed += 1;
        }
        if reversed >= 3 && sink_seen {
            break;
        }
    }
    assert!(reversed >= 3);
    assert!(sink_seen);
}

#[test]
fn verify_exit_codes() {
    let ok = replika(&["verify", "--quiver", "A3", "--m", "1", "--target", "cor38"]);
    assert_eq!(ok.status.code(), Some(0));
    // the literal Ext pattern fails for Hom(X_j, X_i) with j < i, so the suite reports failure
    let bad = replika(&[
        "verify", "--quiver", "A3", "--m", "1", "--target", "thm34", "--out", "json",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(json_of(&bad)["pass"], false);
}

#[test]
fn two_prime_crosscheck() {
    let out = replika(&[
        "cluster",
        "--quiver",
        "A3",
        "--m",
        "2",
        "--prime",
        "101",
        "--crosscheck",
        "32003",
        "--out",
        "json",
    ]);
    assert!(out.status.success());
    let j = json_of(&out);
    assert_eq!(j["crosscheck"]["agree"], true);
    assert_eq!(j["cluster_tilting_count"], 55);
}
