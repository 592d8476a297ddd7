use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn qmf(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmf"))
        .args(args)
        .env("QMF_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn column(o: &Output, index: usize) -> Vec<String> {
    stdout(o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(index).unwrap().to_string())
        .collect()
}

#[test]
fn fishburn_values_and_cache_hits() {
    let dir = tempfile::tempdir().unwrap();
    let first = qmf(dir.path(), &["fishburn", "--count", "5", "--format", "csv"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(column(&first, 1), ["1", "1", "2", "5", "15"]);
    assert!(dir.path().join("fishburn.seq").exists());
    let again = qmf(dir.path(), &["fishburn", "--count", "5", "--format", "csv"]);
    assert_eq!(first.stdout, again.stdout);
    let one = qmf(dir.path(), &["fishburn", "--count", "1", "--format", "csv"]);
    assert_eq!(column(&one, 1), ["1"]);
}

#[test]
fn bad_flags_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(qmf(dir.path(), &["fishburn", "--count", "0"]).status.code(), Some(2));
    assert_eq!(qmf(dir.path(), &["fishburn", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(
        qmf(dir.path(), &["hikami", "--m", "2", "--alpha", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(qmf(dir.path(), &["verify", "--p", "5"]).status.code(), Some(2));
    assert_eq!(
        qmf(dir.path(), &["verify", "--p", "4", "--A", "1", "--B", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn cache_extension_preserves_prefix() {
    let dir = tempfile::tempdir().unwrap();
    qmf(dir.path(), &["fishburn", "--count", "10"]);
    let short = fs::read_to_string(dir.path().join("fishburn.seq")).unwrap();
    qmf(dir.path(), &["fishburn", "--count", "30"]);
    let long = fs::read_to_string(dir.path().join("fishburn.seq")).unwrap();
    let body = |s: &str| s.split_once('\n').unwrap().1.to_string();
    assert!(body(&long).starts_with(&body(&short)));
    assert!(long.starts_with("qmf-sequence v1 generator=fishburn count=30 sha256="));
}

#[test]
fn cache_flag_overrides_environment() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let flag = flag_dir.path().to_str().unwrap();
    qmf(env_dir.path(), &["fishburn", "--count", "3", "--cache-dir", flag]);
    assert!(flag_dir.path().join("fishburn.seq").exists());
    assert!(!env_dir.path().join("fishburn.seq").exists());
    let bypass = tempfile::tempdir().unwrap();
    qmf(bypass.path(), &["fishburn", "--count", "3", "--no-cache"]);
    assert!(!bypass.path().join("fishburn.seq").exists());
}

#[test]
fn hikami_data() {
    let dir = tempfile::tempdir().unwrap();
    let o = qmf(
        dir.path(),
        &["hikami", "--m", "2", "--alpha", "0", "--count", "5", "--format", "csv"],
    );
    assert_eq!(column(&o, 1), ["1", "2", "6", "23", "109"]);
    let m1 = qmf(dir.path(), &["hikami", "--m", "1", "--count", "30", "--format", "csv"]);
    let fish = qmf(dir.path(), &["fishburn", "--count", "30", "--format", "csv"]);
    assert_eq!(m1.stdout, fish.stdout);
}

#[test]
fn hsequence_methods() {
    let dir = tempfile::tempdir().unwrap();
    let o = qmf(
        dir.path(),
        &["hsequence", "--datum", "fishburn", "--count", "3", "--format", "csv"],
    );
    assert_eq!(column(&o, 1), ["-2", "-2", "-4"]);
    let both = qmf(
        dir.path(),
        &[
            "hsequence",
            "--datum",
            "fishburn",
            "--count",
            "12",
            "--method",
            "both",
            "--format",
            "csv",
        ],
    );
    assert_eq!(both.status.code(), Some(0));
    assert!(column(&both, 3).iter().all(|d| d == "0"));
    let chi = dir.path().join("chi.toml");
    fs::write(&chi, "period = 12\nvalues = [0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1]\n").unwrap();
    let from_file = qmf(
        dir.path(),
        &[
            "hsequence",
            "--a",
            "1",
            "--b",
            "24",
            "--chi-file",
            chi.to_str().unwrap(),
            "--count",
            "3",
            "--format",
            "csv",
        ],
    );
    assert_eq!(from_file.stdout, o.stdout);
    fs::write(&chi, "period = 12\nvalues = [0, 1]\n").unwrap();
    let bad = qmf(
        dir.path(),
        &[
            "hsequence",
            "--a",
            "1",
            "--b",
            "24",
            "--chi-file",
            chi.to_str().unwrap(),
        ],
    );
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("period is 12"));
    let broken = qmf(dir.path(), &["hsequence", "--a", "1", "--b", "5", "--chi", "chi12"]);
    assert_eq!(broken.status.code(), Some(2));
}

#[test]
fn predict_fishburn() {
    let dir = tempfile::tempdir().unwrap();
    let o = qmf(
        dir.path(),
        &["predict", "--datum", "fishburn", "--pmax", "11", "--format", "csv"],
    );
    let pairs: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').take(2).collect::<Vec<_>>().join(":"))
        .collect();
    assert_eq!(pairs, ["5:1", "5:2", "7:1", "11:1", "11:2", "11:3"]);
}

#[test]
fn verify_exit_codes_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    let ok = qmf(
        dir.path(),
        &["verify", "--p", "5", "--A", "2", "--B", "2", "--count", "600"],
    );
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stderr));
    let bad = qmf(
        dir.path(),
        &[
            "verify",
            "--p",
            "5",
            "--A",
            "1",
            "--B",
            "3",
            "--count",
            "600",
            "--format",
            "json-lines",
        ],
    );
    assert_eq!(bad.status.code(), Some(1));
    let record: serde_json::Value = serde_json::from_str(stdout(&bad).lines().next().unwrap()).unwrap();
    assert_eq!(record["schema_version"], 1);
    assert_eq!(record["status"], "refuted");
    assert_eq!(record["n"], "1");
    assert_eq!(record["index"], "2");
    assert_eq!(record["value"], "2");
    let claims = dir.path().join("claims.toml");
    fs::write(
        &claims,
        "[[claim]]\np = 7\nA = 1\nB = 1\n[[claim]]\np = 11\nA = 1\nB = 3\n",
    )
    .unwrap();
    let file = qmf(
        dir.path(),
        &["verify", "--claims-file", claims.to_str().unwrap(), "--count", "200"],
    );
    assert_eq!(file.status.code(), Some(0));
    let hik = qmf(
        dir.path(),
        &[
            "verify",
            "--p",
            "13",
            "--A",
            "1",
            "--B",
            "4",
            "--generator",
            "hikami",
            "--m",
            "2",
            "--count",
            "120",
        ],
    );
    assert_eq!(hik.status.code(), Some(0));
    let short = qmf(
        dir.path(),
        &[
            "verify", "--p", "5", "--A", "1", "--B", "1", "--count", "10", "--nmax", "50",
        ],
    );
    assert_eq!(short.status.code(), Some(2));
}

#[test]
fn goodcheck_density_strange() {
    let dir = tempfile::tempdir().unwrap();
    let good = qmf(dir.path(), &["goodcheck", "--chi", "chi12"]);
    assert!(stdout(&good).starts_with("verdict: good"));
    let chi = dir.path().join("chi.toml");
    fs::write(&chi, "period = 4\nvalues = [0, 1, -1, 0]\n").unwrap();
    let not_good = qmf(dir.path(), &["goodcheck", "--chi-file", chi.to_str().unwrap()]);
    assert!(stdout(&not_good).starts_with("verdict: not good"));
    let density = qmf(
        dir.path(),
        &["density", "--a", "1", "--b", "24", "--format", "json-lines"],
    );
    let record: serde_json::Value = serde_json::from_str(stdout(&density).trim()).unwrap();
    let fraction: f64 = record["fraction"].as_str().unwrap().parse().unwrap();
    assert!((fraction - 0.5).abs() < 0.02);
    let strange = qmf(dir.path(), &["strange", "--m", "2", "--alpha", "0", "--count", "20"]);
    assert_eq!(strange.status.code(), Some(0));
    assert!(stdout(&strange).contains("constant: -2\nmax_deviation: 0"));
}

#[test]
fn asymptotic_probe() {
    let dir = tempfile::tempdir().unwrap();
    let o = qmf(
        dir.path(),
        &["asymptotic", "--datum", "fishburn", "--t", "1/50", "--terms", "8"],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("status: resolved"));
    let bad = qmf(dir.path(), &["asymptotic", "--datum", "fishburn", "--t", "1/2"]);
    assert_eq!(bad.status.code(), Some(2));
}
