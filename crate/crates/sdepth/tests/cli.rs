//! End-to-end CLI tests against the built binary: formats, exit codes,
//! pipelines over generated families.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sdepth"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn macaulay_text_line() {
    let out = run(&["macaulay", "5", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "5 = C(3,2)+C(2,1); shadow 4\n");
}

#[test]
fn machine_output_is_stable() {
    let expect =
        "x = 5\nk = 2\nrep = C(3,2)+C(2,1)\ncoefficients = 3 2\nlowest_index = 1\nshadow = 4\n";
    let first = run(&["--format=machine", "macaulay", "5", "2"]);
    assert_eq!(code(&first), 0);
    assert_eq!(stdout(&first), expect);
    let second = run(&["--format=machine", "macaulay", "5", "2"]);
    assert_eq!(stdout(&second), stdout(&first));

    let bound = run(&["--format=machine", "bound", "6", "3"]);
    assert_eq!(code(&bound), 0);
    assert_eq!(
        stdout(&bound),
        "n = 6\nd = 3\ndelta = 3\nbinom = 15\nxi = 14\nbound = 14\nbranch = xi\n"
    );
}

#[test]
fn xi_and_bound_values() {
    assert_eq!(stdout(&run(&["xi", "4"])), "49\n");
    assert_eq!(stdout(&run(&["bound", "5", "2"])), "10 [binom]\n");
}

#[test]
fn collapsible_exit_codes_and_certificates() {
    let not_uc = stdout(&run(&["gen", "not-uc", "4", "2"]));
    let out = run_with_stdin(&["collapsible", "-"], &not_uc);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("VIOLATOR\n"), "{}", stdout(&out));

    let veronese = stdout(&run(&["gen", "veronese", "5", "2"]));
    let out = run_with_stdin(&["collapsible", "-"], &veronese);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("SDR\n"));
}

#[test]
fn sdepth_pipeline_values() {
    let veronese = stdout(&run(&["gen", "veronese", "5", "2"]));
    let out = run_with_stdin(&["sdepth", "-"], &veronese);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "3\n");

    let cwc = stdout(&run(&["gen", "cycle-chord", "5"]));
    let out = run_with_stdin(&["sdepth", "-"], &cwc);
    assert_eq!(stdout(&out), "3\n");
}

/// Every generated family feeds every decision without a format or resource
/// error: exit codes stay in {0, 1}.
#[test]
fn generated_families_round_trip() {
    let families = [
        vec!["gen", "veronese", "4", "2"],
        vec!["gen", "compressed", "4", "2", "5"],
        vec!["gen", "compressed", "6", "4", "9"],
        vec!["gen", "not-uc", "4", "2"],
        vec!["gen", "not-uc", "6", "3"],
        vec!["gen", "padded", "6", "3"],
        vec!["gen", "cycle-chord", "5"],
        vec!["gen", "cycle-chord", "6"],
    ];
    for family in &families {
        let generated = run(family);
        assert_eq!(code(&generated), 0, "{family:?}");
        let text = stdout(&generated);
        for decision in [
            vec!["sdepth", "-"],
            vec!["collapsible", "-"],
            vec!["verify-theorem", "-"],
            vec!["fvector", "-"],
        ] {
            let out = run_with_stdin(&decision, &text);
            let c = code(&out);
            assert!(
                c == 0 || c == 1,
                "{family:?} | {decision:?} exited {c}: {}",
                String::from_utf8_lossy(&out.stderr)
            );
        }
    }
}

#[test]
fn check_certificates_via_files() {
    let dir = std::env::temp_dir().join(format!("sdepth-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let ideal_path = dir.join("ideal.txt");
    std::fs::write(&ideal_path, stdout(&run(&["gen", "veronese", "4", "2"]))).unwrap();
    let ideal = ideal_path.to_str().unwrap();

    let cert_out = run(&["collapsible", ideal]);
    assert_eq!(code(&cert_out), 1); // the full Veronese complement fails
    let cert_path = dir.join("cert.txt");
    std::fs::write(&cert_path, stdout(&cert_out)).unwrap();
    let out = run(&["check", ideal, cert_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "violator: valid\n");

    // tamper: drop one violator line, the remainder no longer violates
    let full_cert = stdout(&cert_out);
    let kept: Vec<&str> = full_cert.lines().take(3).collect();
    let tampered_path = dir.join("tampered.txt");
    std::fs::write(&tampered_path, format!("{}\n", kept.join("\n"))).unwrap();
    let out = run(&["check", ideal, tampered_path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "violator: invalid\n");

    // a collapsible instance: SDR checks, and so does the witness partition
    let good_path = dir.join("good.txt");
    std::fs::write(
        &good_path,
        stdout(&run(&["gen", "compressed", "4", "2", "4"])),
    )
    .unwrap();
    let good = good_path.to_str().unwrap();
    let sdr_out = run(&["collapsible", good]);
    assert_eq!(code(&sdr_out), 0);
    let sdr_path = dir.join("sdr.txt");
    std::fs::write(&sdr_path, stdout(&sdr_out)).unwrap();
    let out = run(&["check", good, sdr_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    let witness = run(&["-v", "sdepth", good]);
    let witness_lines: String = stdout(&witness)
        .lines()
        .skip(1)
        .map(|l| format!("{l}\n"))
        .collect();
    let part_path = dir.join("partition.txt");
    std::fs::write(&part_path, witness_lines).unwrap();
    let out = run(&["check", good, part_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "partition: valid\n");

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn input_errors_exit_2() {
    let out = run_with_stdin(&["sdepth", "-"], "n=4\nx3*y4\n");
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");

    let out = run(&["sdepth", "/nonexistent/path.txt"]);
    assert_eq!(code(&out), 2);

    let out = run(&["gen", "mystery", "3"]);
    assert_eq!(code(&out), 2);

    let out = run(&["--unknown-flag", "xi", "2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn budget_exhaustion_exits_3() {
    let text = stdout(&run(&["gen", "veronese", "5", "1"]));
    let out = run_with_stdin(&["--budget", "1", "sdepth", "-"], &text);
    assert_eq!(code(&out), 3);
}

#[test]
fn probes_report() {
    let out = run(&["probe-conjecture", "5", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("sdepth = 3"));

    let out = run(&["--format=machine", "probe-star", "4", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("property_holds = true"));

    let out = run(&["--format=machine", "probe-xi-min", "4", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("mu_min = 5"));

    let out = run(&["probe-star", "10", "5"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn fvector_output() {
    let out = run_with_stdin(&["fvector", "-"], "complex n=3\nx1*x2*x3\n");
    assert_eq!(stdout(&out), "(1, 3, 3, 1)\n");
    let out = run_with_stdin(
        &["--format=machine", "fvector", "-"],
        "complex n=3\nx1*x2*x3\n",
    );
    assert_eq!(
        stdout(&out),
        "n = 3\ndim = 2\nf.-1 = 1\nf.0 = 3\nf.1 = 3\nf.2 = 1\n"
    );
}
