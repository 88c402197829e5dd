//! Golden transcripts and contract checks for the binary: exact bytes on
//! stdout, diagnostics on stderr, exit codes, JSON shape, and determinism.

use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_trigpoly"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

#[test]
fn text_transcripts() {
    let cases: &[(&[&str], i32, &str)] = &[
        (&["normalize", "sin(t)^3"], 0, "3/4*sin(t) - 1/4*sin(3t)\n"),
        (&["normalize", "0"], 0, "0\n"),
        (
            &["normalize", "cosh(t)^2 - sinh(t)^2"],
            0,
            "A(x) = 1; B(x) = 0\n",
        ),
        (
            &["canonical", "sin(3t)"],
            0,
            "modulus: circle\nA(x) = 0; B(x) = 4*x^2 - 1\n",
        ),
        (
            &["naive", "sin(3t)"],
            0,
            "REPRESENTABLE\nP(x) = 0; Q(y) = -4*y^3 + 3*y\n# x = cos(t), y = sin(t)\n",
        ),
        (
            &["naive", "sin(2t)"],
            1,
            "NOT REPRESENTABLE\nobstruction: odd part of B(x) = 2*x\n",
        ),
        (&["identity", "2*sin(t)*cos(t) = sin(2t)"], 0, "IDENTITY\n"),
        (
            &["identity", "sin(2t) = 2*sin(t)"],
            1,
            "NOT AN IDENTITY\nwitness (x, y) = (3/5, 4/5): 24/25 != 8/5\n",
        ),
        (&["identity", "cosh(t)^2 - sinh(t)^2 = 1"], 0, "IDENTITY\n"),
        (
            &["identity", "cosh(t) = 1"],
            1,
            "NOT AN IDENTITY\nwitness (x, y) = (5/3, 4/3): 5/3 != 1\n",
        ),
        (&["chebyshev", "T", "2"], 0, "2*x^2 - 1\n"),
        (&["chebyshev", "U", "3"], 0, "8*x^3 - 4*x\n"),
        (
            &["reduce", "y^2"],
            0,
            "modulus: circle\nS(x,y) = 1\nA(x) = -x^2 + 1; B(x) = 0\n",
        ),
        (
            &["reduce", "--modulus", "hyperbola", "y^2"],
            0,
            "modulus: hyperbola\nS(x,y) = -1\nA(x) = x^2 - 1; B(x) = 0\n",
        ),
        (
            &["check", "sin(t)^2 + cos(t)^2"],
            0,
            "PASS\nmax deviation 2.220446049250313e-16 over 50 samples (tol 1e-9)\n",
        ),
        (
            // Tolerance zero surfaces the float noise the default absorbs.
            &["check", "--tol=0", "sin(t)^3"],
            1,
            "FAIL\nmax deviation 3.382710778154774e-16 at t = 6.082912397043648 over 50 samples (tol 0)\n",
        ),
        (
            &["check", "--samples", "10", "--seed", "42", "2*sin(t)*cos(t)"],
            0,
            "PASS\nmax deviation 1.1102230246251565e-16 over 10 samples (tol 1e-9)\n",
        ),
        (
            &["check", "cosh(t)^2 - sinh(t)^2"],
            0,
            "PASS\nmax deviation 1.7763568394002505e-15 over 50 samples (tol 1e-9)\n",
        ),
        (
            &["check", "10^400*cos(t)"],
            0,
            "INCONCLUSIVE\nvalues exceed the floating-point range\n",
        ),
    ];
    for (args, code, stdout) in cases {
        let (got_code, got_stdout, got_stderr) = run(args);
        assert_eq!(got_code, *code, "{args:?}");
        assert_eq!(got_stdout, *stdout, "{args:?}");
        assert_eq!(got_stderr, "", "{args:?}");
    }
}

#[test]
fn json_documents() {
    let cases: &[(&[&str], i32, &str)] = &[
        (
            &["--json", "normalize", "sin(t)^3"],
            0,
            r#"{"result":{"family":"circular","normalized":"3/4*sin(t) - 1/4*sin(3t)"},"status":"ok","subcommand":"normalize"}"#,
        ),
        (
            &["--json", "canonical", "sin(3t)"],
            0,
            r#"{"result":{"a":"0","b":"4*x^2 - 1","modulus":"circle"},"status":"ok","subcommand":"canonical"}"#,
        ),
        (
            &["--json", "naive", "sin(3t)"],
            0,
            r#"{"result":{"p":"0","q":"-4*y^3 + 3*y","representable":true},"status":"ok","subcommand":"naive"}"#,
        ),
        (
            &["--json", "naive", "sin(2t)"],
            1,
            r#"{"result":{"obstruction":"2*x","representable":false},"status":"refuted","subcommand":"naive"}"#,
        ),
        (
            &["--json", "identity", "2*sin(t)*cos(t) = sin(2t)"],
            0,
            r#"{"result":{"identity":true},"status":"ok","subcommand":"identity"}"#,
        ),
        (
            &["--json", "identity", "sin(2t) = 2*sin(t)"],
            1,
            r#"{"result":{"identity":false,"witness":{"lhs":"24/25","rhs":"8/5","x":"3/5","y":"4/5"}},"status":"refuted","subcommand":"identity"}"#,
        ),
        (
            &["--json", "chebyshev", "U", "3"],
            0,
            r#"{"result":{"kind":"U","n":3,"polynomial":"8*x^3 - 4*x"},"status":"ok","subcommand":"chebyshev"}"#,
        ),
        (
            &["--json", "reduce", "x*y^3 - i*y"],
            0,
            r#"{"result":{"a":"0","b":"-x^3 + x + (0-1*i)","modulus":"circle","s":"x*y"},"status":"ok","subcommand":"reduce"}"#,
        ),
        (
            &["--json", "check", "sin(t)^2 + cos(t)^2"],
            0,
            r#"{"result":{"max_deviation":2.220446049250313e-16,"samples":50,"verdict":"pass"},"status":"ok","subcommand":"check"}"#,
        ),
        (
            &["--json", "check", "10^400*cos(t)"],
            0,
            r#"{"result":{"samples":50,"verdict":"inconclusive"},"status":"ok","subcommand":"check"}"#,
        ),
        (
            &["--json", "naive", "2 + @"],
            2,
            r#"{"diagnostic":"at byte 4: unexpected character '@'","status":"error","subcommand":"naive"}"#,
        ),
    ];
    for (args, code, expected) in cases {
        let (got_code, got_stdout, got_stderr) = run(args);
        assert_eq!(got_code, *code, "{args:?}");
        assert_eq!(got_stdout, format!("{expected}\n"), "{args:?}");
        assert_eq!(got_stderr, "", "diagnostics move to stdout under --json");

        // Contract: one line, well formed, status field mirrors the exit code.
        assert_eq!(got_stdout.lines().count(), 1, "{args:?}");
        let doc: Value = serde_json::from_str(expected).expect("well-formed JSON");
        let status = doc["status"].as_str().unwrap();
        let expected_status = match code {
            0 => "ok",
            1 => "refuted",
            _ => "error",
        };
        assert_eq!(status, expected_status, "{args:?}");
        assert!(doc["subcommand"].is_string());
        match status {
            "error" => assert!(doc["diagnostic"].is_string()),
            _ => assert!(doc["result"].is_object()),
        }
    }
}

#[test]
fn diagnostics_go_to_stderr_with_positions() {
    let cases: &[(&[&str], &str)] = &[
        (&["naive", "sin(2u)"], "error: at byte 5: unknown name 'u'\n"),
        (
            // Positions on the right side of a claim count from the start of
            // the whole claim string.
            &["identity", "sin(t) = sin(2u)"],
            "error: at byte 14: unknown name 'u'\n",
        ),
        (
            &["normalize", "sin(t) + cosh(t)"],
            "error: at byte 7: circular and hyperbolic functions cannot be mixed\n",
        ),
        (
            &["normalize", "sinh(2t)"],
            "error: at byte 0: sinh/cosh take the plain argument t\n",
        ),
        (
            &["identity", "1 = 1 = 1"],
            "error: the claim must contain exactly one '='\n",
        ),
        (
            &["identity", "1"],
            "error: the claim must contain exactly one '='\n",
        ),
        (
            &["identity", "sin(t) = sinh(t)"],
            "error: the left side is circular but the right side is hyperbolic\n",
        ),
        (
            &["naive", "sinh(t)"],
            "error: the naive form applies to circular expressions; use sin/cos\n",
        ),
        (
            &["check", "--tol", "banana", "1"],
            "error: invalid tolerance 'banana'\n",
        ),
        (
            &["check", "--tol=-1e-9", "1"],
            "error: the tolerance must be finite and non-negative\n",
        ),
        (
            &["check", "--tol=nan", "1"],
            "error: the tolerance must be finite and non-negative\n",
        ),
        (
            &["check", "--samples", "0", "1"],
            "error: at least one sample is required\n",
        ),
        (
            // check takes a single expression, not a claim.
            &["check", "1 = 1"],
            "error: at byte 2: unexpected character '='\n",
        ),
    ];
    for (args, stderr) in cases {
        let (code, stdout, got_stderr) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert_eq!(stdout, "", "{args:?}");
        assert_eq!(got_stderr, *stderr, "{args:?}");
    }
}

#[test]
fn argument_errors_use_the_error_exit_code() {
    let (code, _, stderr) = run(&["chebyshev", "V", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("possible values: T, U"), "{stderr}");
    let (code, _, stderr) = run(&["reduce", "--modulus", "parabola", "y^2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("possible values:"), "{stderr}");
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn identical_invocations_produce_identical_bytes() {
    let invocations: &[&[&str]] = &[
        &["check", "--samples", "25", "--seed", "7", "sin(2t)*cos(3t)"],
        &["--json", "check", "--samples", "25", "--seed", "7", "sin(2t)*cos(3t)"],
        &["normalize", "sin(t)^5"],
        &["--json", "identity", "sin(2t) = 2*sin(t)"],
    ];
    for args in invocations {
        let first = run(args);
        let second = run(args);
        assert_eq!(first, second, "{args:?}");
    }
}

#[test]
fn the_seed_selects_the_sample_stream() {
    let (code_a, out_a, _) = run(&["check", "--tol=0", "--seed", "1", "sin(t)^3"]);
    let (code_b, out_b, _) = run(&["check", "--tol=0", "--seed", "2", "sin(t)^3"]);
    assert_eq!(code_a, 1);
    assert_eq!(code_b, 1);
    assert_ne!(out_a, out_b, "different seeds sample different angles");
}

#[test]
fn help_documents_the_defaults_and_exit_codes() {
    let (code, stdout, _) = run(&["check", "--help"]);
    assert_eq!(code, 0);
    for needle in ["[default: 50]", "[default: 0]", "[default: 1e-9]"] {
        assert!(stdout.contains(needle), "missing {needle}");
    }
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("Exit codes: 0 = positive result, 1 = refuted claim, 2 = error."));
    let (code, stdout, _) = run(&["--version"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "trigpoly 0.1.0\n");
}
