use std::process::{Command, Output};

use distfourier::ExactValue;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_distfourier"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ft_of_heaviside() {
    let o = run(&["ft", "--expr", "theta"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "pi*delta + (ik)^(-1)\n");
}

#[test]
fn ifft_and_fracderiv() {
    let o = run(&["ifft", "--expr", "pi*delta + i*pi*csch(pi*k)"]);
    assert_eq!(stdout(&o), "fd(1)\n");
    let o = run(&["fracderiv", "--expr", "theta", "--alpha", "1/2"]);
    assert_eq!(stdout(&o), "pi^(-1/2)*x^(-1/2)*theta\n");
}

#[test]
fn sincint_formats() {
    let o = run(&[
        "sincint", "--n", "5", "--m", "4", "--range", "half", "--format", "both",
    ]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "-45/32*ln(3) + 125/96*ln(5)");
    let f: f64 = lines[1].parse().unwrap();
    assert!((f - 0.550_698_750_875_705_6).abs() < 1e-15);
    for (n, m, range) in [(7, 4, "half"), (6, 6, "full"), (9, 2, "half")] {
        let o = run(&[
            "sincint",
            "--n",
            &n.to_string(),
            "--m",
            &m.to_string(),
            "--range",
            range,
            "--format",
            "exact",
        ]);
        let text = stdout(&o);
        assert!(text.trim().parse::<ExactValue>().is_ok(), "{text}");
    }
}

#[test]
fn sincint_table() {
    let o = run(&["sincint", "--table", "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1 + 2 * 6);
    assert!(out.contains("3,1,half,\"1/4*pi\",7.8539816339744828e-1"));
}

#[test]
fn series_output() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("plot.csv");
    let svg = dir.path().join("plot.svg");
    let o = Command::new(env!("CARGO_BIN_EXE_distfourier"))
        .args([
            "series",
            "--name",
            "absx",
            "--alpha",
            "1/2",
            "--order",
            "10",
            "--samples",
            "50",
        ])
        .args(["--xmin", "-1", "--xmax", "1", "--out"])
        .arg(&csv)
        .arg("--svg")
        .arg(&svg)
        .output()
        .unwrap();
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 51);
    assert!(text
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("-1.0000000000000000e0,"));
    assert!(std::fs::read_to_string(&svg).unwrap().contains("<polyline"));
}

#[test]
fn series_from_coefficient_file() {
    let dir = tempfile::tempdir().unwrap();
    let coeffs = dir.path().join("cos.csv");
    // cos x + 1/2 sin 2x, the second harmonic cut by --order 1
    std::fs::write(&coeffs, "n,a,b\n0,3,0\n1,1,0\n2,0,1/2\n").unwrap();
    let out = dir.path().join("out.csv");
    let o = Command::new(env!("CARGO_BIN_EXE_distfourier"))
        .args([
            "series",
            "--name",
            "sawtooth",
            "--alpha",
            "1",
            "--order",
            "1",
            "--samples",
            "3",
        ])
        .args(["--xmin", "0", "--xmax", "3.141592653589793", "--coeffs"])
        .arg(&coeffs)
        .arg("--out")
        .arg(&out)
        .output()
        .unwrap();
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let ys: Vec<f64> = std::fs::read_to_string(&out)
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| l.split_once(',').unwrap().1.parse().unwrap())
        .collect();
    // d/dx cos x = −sin x at 0, π/2, π
    assert!(
        ys[0].abs() < 1e-15 && (ys[1] + 1.0).abs() < 1e-15 && ys[2].abs() < 1e-15,
        "{ys:?}"
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["ft", "--expr", "theta("],
        vec!["ft", "--expr", "theta", "--bogus"],
        vec!["sincint", "--n", "1", "--m", "2"],
        vec!["sincint", "--n", "2", "--m", "1", "--range", "left"],
        vec![
            "series",
            "--name",
            "square",
            "--alpha",
            "1/2",
            "--order",
            "3",
            "--samples",
            "9",
            "--out",
            "x.csv",
        ],
        vec!["fracderiv", "--expr", "x^2", "--alpha", "1/2"],
        vec![],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_report() {
    let o = run(&["verify", "--filter", "sinc.golden"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 20);
    assert!(out
        .lines()
        .all(|l| l.starts_with("CHECK sinc.golden ") && l.ends_with(" PASS")));
    let o = run(&["verify", "--filter", "quad.alt_sum", "--tol", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains(" FAIL"));
}

#[test]
fn verify_everything_with_another_seed() {
    let o = run(&["verify", "--seed", "42"]);
    let out = stdout(&o);
    let names: Vec<&str> = out.lines().map(|l| l.split(' ').nth(1).unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert!(out.contains("CHECK dist.roundtrip seed=42,cases=1000"));
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        out.lines()
            .filter(|l| l.ends_with("FAIL"))
            .collect::<Vec<_>>()
            .join("\n")
    );
}
