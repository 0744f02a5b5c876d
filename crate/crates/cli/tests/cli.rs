//! End-to-end tests of the `imaglab` binary: documented output bytes, the
//! exit-code contract, determinism, and the CSV round-trip invariant.

use std::process::{Command, Output};

fn imaglab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_imaglab"))
        .args(args)
        .output()
        .expect("imaglab binary launches")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process exits normally")
}

// --- measure ----------------------------------------------------------------

#[test]
fn measure_prints_documented_values() {
    let cases = [
        (
            vec!["measure", "plus", "--kind", "l1"],
            "1.000000000000e0\n",
        ),
        (
            vec!["measure", "canonical", "A=1", "--kind", "robustness"],
            "0.000000000000e0\n",
        ),
        (
            vec!["measure", "plus2", "--kind", "rel-entropy"],
            "1.000000000000e0\n",
        ),
        (
            vec!["measure", "plus2", "--kind", "l1"],
            "2.000000000000e0\n",
        ),
    ];
    for (args, expected) in cases {
        let out = imaglab(&args);
        assert_eq!(exit_code(&out), 0, "args {args:?}: {}", stderr_of(&out));
        assert_eq!(stdout_of(&out), expected, "args {args:?}");
    }
}

#[test]
fn measure_accepts_matrix_literals() {
    let lit = imaglab(&["measure", "0.5,-0.5i;0.5i,0.5", "--kind", "rel-entropy"]);
    let shortcut = imaglab(&["measure", "plus", "--kind", "rel-entropy"]);
    assert_eq!(exit_code(&lit), 0, "{}", stderr_of(&lit));
    assert_eq!(stdout_of(&lit), stdout_of(&shortcut));
}

#[test]
fn measure_error_classes_map_to_exit_codes() {
    // Unparseable spec: usage error.
    assert_eq!(
        exit_code(&imaglab(&["measure", "banana", "--kind", "l1"])),
        2
    );
    // Ragged literal: usage error.
    assert_eq!(
        exit_code(&imaglab(&["measure", "0.5,0.5;0.5", "--kind", "l1"])),
        2,
    );
    // Well-formed matrix that is not a state: data error.
    assert_eq!(
        exit_code(&imaglab(&["measure", "1,0;0,1", "--kind", "l1"])),
        3,
    );
    // Missing --kind: clap usage error.
    assert_eq!(exit_code(&imaglab(&["measure", "plus"])), 2);
}

// --- figure -----------------------------------------------------------------

#[test]
fn fig1_emits_the_documented_lattice() {
    let out = imaglab(&["figure", "fig1", "--grid", "11"]);
    assert_eq!(exit_code(&out), 0, "{}", stderr_of(&out));
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "A,p,dI_l1,dI_R,dI_r");
    assert_eq!(lines.len(), 1 + 121);

    let row = lines
        .iter()
        .find(|l| l.starts_with("0.00000000000e0,1.00000000000e0,"))
        .expect("row (A=0, p=1) present");
    let d_l1 = row.split(',').nth(2).unwrap();
    assert_eq!(d_l1, "1.00000000000e0");
}

#[test]
fn fig10_corner_row_has_full_l1_power() {
    let out = imaglab(&["figure", "fig10", "--grid", "11"]);
    assert_eq!(exit_code(&out), 0, "{}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.starts_with("p1,p2,D_l1,D_R,D_r\n"));
    let corner = text
        .lines()
        .find(|l| l.starts_with("1.00000000000e0,1.00000000000e0,"))
        .expect("corner row present");
    assert_eq!(corner.split(',').nth(2).unwrap(), "2.00000000000e0");
}

#[test]
fn figure_flag_scoping_is_strict() {
    assert_eq!(exit_code(&imaglab(&["figure", "fig11"])), 2);
    assert_eq!(
        exit_code(&imaglab(&["figure", "fig1", "--A", "0.5"])),
        2,
        "--A belongs to fig3/fig4 only",
    );
    assert_eq!(
        exit_code(&imaglab(&["figure", "fig3", "--p1", "0.5"])),
        2,
        "--p1 belongs to fig2 only",
    );
    // In-range slice accepted; out-of-range slice is a data error.
    assert_eq!(
        exit_code(&imaglab(&["figure", "fig4", "--grid", "3", "--A", "0.66"])),
        0,
    );
    assert_eq!(
        exit_code(&imaglab(&["figure", "fig4", "--grid", "3", "--A", "1.5"])),
        3,
    );
}

#[test]
fn csv_cells_round_trip_through_f64() {
    let out = imaglab(&["figure", "fig5", "--grid", "7"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    for line in text.lines().skip(1) {
        for cell in line.split(',') {
            let value: f64 = cell.parse().expect("cell parses as f64");
            let reprinted = format!("{value:.11e}");
            assert_eq!(reprinted, cell, "12-significant-digit round trip");
        }
    }
}

#[test]
fn figure_output_lands_in_out_file() {
    let path = std::env::temp_dir().join(format!("imaglab-fig4-{}.csv", std::process::id()));
    let path_text = path.to_str().expect("temp path is UTF-8");

    let to_file = imaglab(&["figure", "fig4", "--grid", "5", "--out", path_text]);
    assert_eq!(exit_code(&to_file), 0, "{}", stderr_of(&to_file));
    assert!(stdout_of(&to_file).is_empty(), "--out suppresses stdout");

    let from_file = std::fs::read_to_string(&path).expect("out file written");
    let to_stdout = imaglab(&["figure", "fig4", "--grid", "5"]);
    assert_eq!(from_file, stdout_of(&to_stdout));

    std::fs::remove_file(&path).ok();
}

// --- verify -----------------------------------------------------------------

#[test]
fn verify_exit_codes_follow_the_findings() {
    // Channel matrices and decay formulas verify clean.
    let channels = imaglab(&["verify", "channels", "--seed", "42"]);
    assert_eq!(exit_code(&channels), 0, "{}", stdout_of(&channels));
    assert!(stdout_of(&channels).lines().all(|l| l.ends_with("PASS")));

    let decay = imaglab(&["verify", "decay", "--grid", "7"]);
    assert_eq!(exit_code(&decay), 0, "{}", stdout_of(&decay));

    // The flip-pair relative-entropy power expression genuinely fails in
    // its verified domain (see the README's discrepancy notes), so the
    // power scope — and therefore `verify all` — exits 1.
    let power = imaglab(&["verify", "power", "--grid", "7"]);
    assert_eq!(exit_code(&power), 1);
    let text = stdout_of(&power);
    assert!(
        text.lines()
            .any(|l| l.starts_with("PFBF_r") && l.ends_with("FAIL")),
        "PFBF_r reports its defect: {text}",
    );
    assert_eq!(
        text.lines().filter(|l| l.ends_with("FAIL")).count(),
        1,
        "every other formula passes: {text}",
    );
}

#[test]
fn verify_reports_are_deterministic() {
    let first = imaglab(&["verify", "all", "--grid", "5", "--seed", "42"]);
    let second = imaglab(&["verify", "all", "--grid", "5", "--seed", "42"]);
    assert_eq!(stdout_of(&first), stdout_of(&second));
    assert_eq!(exit_code(&first), exit_code(&second));
}

// --- power ------------------------------------------------------------------

#[test]
fn power_examples_match_their_closed_forms() {
    let dep = imaglab(&[
        "power", "dep2", "--p1", "0.5", "--p2", "0.5", "--kind", "l1", "--mode", "de-imag",
    ]);
    assert_eq!(exit_code(&dep), 0, "{}", stderr_of(&dep));
    assert!(
        stdout_of(&dep).starts_with("value 1.000000000000e0\n"),
        "p1 + p2 at (½, ½): {}",
        stdout_of(&dep),
    );

    let bpf = imaglab(&[
        "power",
        "bpf2",
        "--p1",
        "0.3",
        "--p2",
        "0.7",
        "--kind",
        "robustness",
        "--mode",
        "de-imag",
    ]);
    assert_eq!(exit_code(&bpf), 0);
    assert!(
        stdout_of(&bpf).starts_with("value 0.000000000000e0\n"),
        "bit-phase flips destroy nothing: {}",
        stdout_of(&bpf),
    );
}

#[test]
fn imaginary_power_sampling_stays_at_zero() {
    let out = imaglab(&[
        "power",
        "pd2",
        "--g1",
        "0.4",
        "--g2",
        "0.9",
        "--kind",
        "l1",
        "--mode",
        "imag",
        "--samples",
        "2000",
        "--seed",
        "7",
    ]);
    assert_eq!(exit_code(&out), 0, "{}", stderr_of(&out));
    let text = stdout_of(&out);
    let value: f64 = text
        .lines()
        .next()
        .and_then(|l| l.strip_prefix("value "))
        .expect("value line first")
        .parse()
        .expect("value parses");
    assert!(
        value <= 1e-10,
        "real channel creates no imaginarity: {value}"
    );
    assert!(text.contains("seed 7"));

    let again = imaglab(&[
        "power",
        "pd2",
        "--g1",
        "0.4",
        "--g2",
        "0.9",
        "--kind",
        "l1",
        "--mode",
        "imag",
        "--samples",
        "2000",
        "--seed",
        "7",
    ]);
    assert_eq!(stdout_of(&again), text, "seeded sampling is deterministic");
}

#[test]
fn power_rejects_misuse() {
    // Single-qubit tag.
    assert_eq!(
        exit_code(&imaglab(&[
            "power",
            "dephasing",
            "--p",
            "0.5",
            "--kind",
            "l1",
        ])),
        2,
    );
    // Wrong parameter names for the tag.
    assert_eq!(
        exit_code(&imaglab(&[
            "power", "pd2", "--p1", "0.4", "--p2", "0.9", "--kind", "l1",
        ])),
        2,
    );
    // Out-of-range parameter: data error.
    assert_eq!(
        exit_code(&imaglab(&[
            "power", "pd2", "--g1", "1.4", "--g2", "0.9", "--kind", "l1",
        ])),
        3,
    );
}

// --- decay ------------------------------------------------------------------

#[test]
fn decay_full_dephasing_destroys_the_bit() {
    let out = imaglab(&["decay", "dephasing", "--p", "1", "--A", "0", "--kind", "l1"]);
    assert_eq!(exit_code(&out), 0, "{}", stderr_of(&out));
    assert_eq!(
        stdout_of(&out),
        "initial 1.000000000000e0\nafter 0.000000000000e0\ndelta 1.000000000000e0\n",
    );
}

#[test]
fn decay_pattern_flag_is_two_qubit_only() {
    assert_eq!(
        exit_code(&imaglab(&[
            "decay",
            "dephasing",
            "--p",
            "0.5",
            "--pattern",
            "00_11",
            "--kind",
            "l1",
        ])),
        2,
    );
    let dual_rail = imaglab(&[
        "decay", "ad2", "--g1", "0.5", "--g2", "0.5", "--A", "0.3", "--kind", "l1",
    ]);
    assert_eq!(exit_code(&dual_rail), 0, "{}", stderr_of(&dual_rail));
}
