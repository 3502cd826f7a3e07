use std::process::Command;

fn cli(args: &str) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_umbral-ferrers"))
        .args(args.split_whitespace())
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s.lines().next().unwrap()).unwrap()
}

#[test]
fn series_outputs() {
    assert_eq!(
        cli("series wicketed --order 10 --format bfile --offset 8"),
        (0, "8 1\n9 8\n10 41\n".into(), String::new())
    );
    assert_eq!(
        cli("series ferrers --order 4 --format table").1,
        "hp count\n2 1\n3 2\n4 4\n"
    );
    let (code, out, err) = cli("series gated --order 5");
    assert_eq!(code, 0);
    assert_eq!(json(&out)["terms"], serde_json::json!([]));
    assert!(err.contains("t^6"));
    let (code, out, _) = cli("series gated --order 7 --catalytic");
    assert_eq!(code, 0);
    assert_eq!(json(&out)["vars"], serde_json::json!(["x1", "x2", "x3"]));
}

#[test]
fn bfile_lines_are_well_formed() {
    let (_, out, _) = cli("series gated --order 30 --format bfile --offset 0");
    assert!(out.ends_with('\n'));
    for (i, line) in out.lines().enumerate() {
        let (k, v) = line.split_once(' ').unwrap();
        assert_eq!(k, i.to_string());
        assert!(
            !v.is_empty() && v.bytes().all(|b| b.is_ascii_digit()),
            "{line}"
        );
    }
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = cli("verify fdfpeq --order 20");
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"relation\":\"fdfpeq\",\"order\":20,\"residual_min_degree\":\">20\",\"pass\":true}\n"
    );
    let (code, out, _) = cli("verify punceq123 --order 14 --points 2,3,5");
    assert_eq!(code, 0);
    assert_eq!(json(&out)["pass"], true);
    let (code, _, err) = cli("verify fdfpeq --order 3");
    assert_eq!(code, 2);
    assert!(err.contains("inconclusive"));
    assert_eq!(cli("verify fdfpeq1 --order 16 --points 2 --points -3").0, 0);
    assert_ne!(cli("verify punceq123 --order 10 --points 2,3").0, 0);
    assert_ne!(cli("verify nonsense --order 10").0, 0);
}

#[test]
fn guess_outputs() {
    let (code, out, _) = cli("guess wicketed --order 40");
    assert_eq!(code, 0);
    assert!(out.contains("matches fdfpeq"), "{out}");
    let (code, out, _) = cli("guess gated --order 40");
    assert_eq!(code, 0);
    assert!(out.contains("matches punceq"), "{out}");
    let (code, out, _) = cli("guess ferrers --order 20");
    assert_eq!(code, 0);
    assert!(out.starts_with("(-2*t + 1)*G + (-t^2) = 0\n"), "{out}");
    assert!(out.contains("effectively linear"));
    assert_eq!(cli("guess wicketed --order 12").0, 1);
}

#[test]
fn crosscheck_exit_codes() {
    let (code, out, _) = cli("crosscheck --max-hp 12");
    assert_eq!(code, 0);
    assert!(!out.contains("MISMATCH"));
    assert!(out.contains("wicketed 12 602 602 ok"));
    let (code, out, _) = cli("crosscheck --max-hp 1");
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "kind hp umbral oracle\nrefined 0 checked 0 mismatched\n"
    );
    assert_ne!(cli("crosscheck --max-hp 99").0, 0);
}

#[test]
fn oracle_and_render() {
    let (code, out, _) = cli("oracle wicketed --max-hp 10");
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"object\":\"wicketed\",\"counts\":[{\"hp\":8,\"count\":1},{\"hp\":9,\"count\":8},{\"hp\":10,\"count\":41}]}\n"
    );
    let (_, out, _) = cli("oracle nibbled --max-hp 8");
    let v = json(&out);
    let plain: Vec<(u64, u64)> = v["counts"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["alpha"] == 0 && c["beta"] == 0)
        .map(|c| (c["hp"].as_u64().unwrap(), c["count"].as_u64().unwrap()))
        .collect();
    assert_eq!(plain, vec![(4, 1), (6, 2), (8, 5)]);
    assert_ne!(cli("oracle gated --max-hp 50").0, 0);
    assert_ne!(cli("oracle triangles").0, 0);
    assert_eq!(
        cli("render --rows 3,4,4,6,7,8").1,
        "########\n#######\n######\n####\n####\n###\n"
    );
    assert_eq!(cli("render --rows 1").1, "#\n");
    assert_ne!(cli("render --rows 4,3").0, 0);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        "series wicketed --order 25 --format json",
        "oracle gated --max-hp 11 --format table",
        "oracle nibbled --max-hp 9",
        "crosscheck --max-hp 10",
        "guess gated --order 40",
    ] {
        assert_eq!(cli(args), cli(args), "{args}");
    }
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("umbral-ferrers-cli-{}.txt", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = cli(&format!(
        "series ferrers --order 5 --format bfile --output {p}"
    ));
    assert_eq!((code, out.as_str()), (0, ""));
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "2 1\n3 2\n4 4\n5 8\n"
    );
    std::fs::remove_file(path).ok();
}
