use std::process::Command;

use quatroot::cli::run;

fn call(args: &str) -> (i32, String, String) {
    let out = run(std::iter::once("quatroot").chain(args.split_whitespace()));
    (out.code, out.stdout, out.stderr)
}

fn ok(args: &str, json: &str) {
    assert_eq!(call(args), (0, format!("{json}\n"), String::new()), "{args}");
}

fn negative(args: &str, json: &str) {
    assert_eq!(call(args), (1, format!("{json}\n"), String::new()), "{args}");
}

fn invalid(args: &str) {
    let (code, stdout, stderr) = call(args);
    assert_eq!(code, 2, "{args}");
    assert!(stdout.is_empty(), "{args}");
    assert_eq!(stderr.lines().count(), 1, "{args}: {stderr:?}");
}

#[test]
fn sqrt_outputs() {
    ok("sqrt --alpha -1 --beta -1 --q 0,2,0,0", r#"{"status":"ok","root":[1,1,0,0],"verified":true}"#);
    ok("sqrt --alpha -1 --beta -1 --q 3,4,0,0", r#"{"status":"ok","root":[2,1,0,0],"verified":true}"#);
    ok("sqrt --alpha 1 --beta 1 --q 2,0,0,0", r#"{"status":"ok","root":[0,0,"3/2","1/2"],"verified":true}"#);
    ok("sqrt --alpha -1 --beta -1 --q −1,0,0,0", r#"{"status":"ok","root":[0,-1,0,0],"verified":true}"#);
    negative("sqrt --alpha -1 --beta -1 --q 2,0,0,0", r#"{"status":"not_a_square"}"#);
    negative("sqrt --alpha -1 --beta -1 --q 1,1,0,0", r#"{"status":"not_a_square"}"#);
}

#[test]
fn other_subcommands() {
    ok("hilbert --a -1 --b -1 --place inf", r#"{"symbol":-1}"#);
    ok("hilbert --a -1 --b -1 --place 2", r#"{"symbol":-1}"#);
    ok("hilbert --a 2 --b 7 --place 7", r#"{"symbol":1}"#);
    ok("is-split --alpha 1 --beta 5", r#"{"split":true}"#);
    ok("is-split --alpha -1 --beta -1", r#"{"split":false}"#);
    ok("conic --alpha 4 --c 3", r#"{"status":"ok","x":2,"y":"1/2"}"#);
    negative("conic --alpha -1 --c -1", r#"{"status":"unsolvable"}"#);
    ok("isotropic --form 1,1,-2", r#"{"isotropic":true,"witness":[1,1,1]}"#);
    ok("isotropic --form 1,1,1", r#"{"isotropic":false}"#);
    ok("isotropic --form 1,-1", r#"{"isotropic":true}"#);
    ok("common-value --xi -2,1 --zeta -1,-1", r#"{"status":"ok","d":-1}"#);
    negative("common-value --xi 1,1 --zeta -1,-1", r#"{"status":"empty_intersection"}"#);
}

#[test]
fn invalid_inputs() {
    invalid("sqrt --alpha 0 --beta -1 --q 1,0,0,0");
    invalid("sqrt --alpha -1 --beta -1 --q 1,0,0");
    invalid("sqrt --alpha x --beta -1 --q 1,0,0,0");
    invalid("hilbert --a 1 --b 0 --place 3");
    invalid("hilbert --a 1 --b 3 --place 9");
    invalid("hilbert --a 1 --b 3 --place real");
    invalid("conic --alpha 1/0 --c 2");
    invalid("isotropic --form 1,0,1");
    invalid("common-value --xi 1,1,1 --zeta 1,1");
    invalid("sqrt --alpha -1");
    invalid("");
}

#[test]
fn binary_matches_library() {
    let args = ["sqrt", "--alpha", "1", "--beta", "1", "--q", "2,0,0,0"];
    let lib = run(std::iter::once("quatroot").chain(args));
    let out = Command::new(env!("CARGO_BIN_EXE_quatroot")).args(args).output().unwrap();
    assert_eq!(out.status.code(), Some(lib.code));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout);
    let out = Command::new(env!("CARGO_BIN_EXE_quatroot")).args(["hilbert", "--a", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(String::from_utf8(out.stderr).unwrap().lines().count(), 1);
}
