use std::process::{Command, Output};

fn lexbs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lexbs")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn betti_table() {
    let o = lexbs(&["betti", "x, y^2, yz, z^2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "    | 0 1 2\n----+------\n  1 | 1 - -\n  2 | 3 5 2\n");
}

#[test]
fn betti_rejects_unstable_input() {
    let o = lexbs(&["betti", "x^2, y^2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("stable"));
}

#[test]
fn decompose_machine_lines() {
    let o = lexbs(&["decompose", "x^2,xy,xz,y^2", "--quotient", "--norm", "unit", "--machine"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "8/1\t0,2,3,4\n4/1\t0,2,3\n");
    let o = lexbs(&["decompose", "x^2,xy,xz,y^2", "--quotient", "--machine"]);
    assert_eq!(stdout(&o), "1/3\t0,2,3,4\n2/3\t0,2,3\n");
}

#[test]
fn decompose_in_four_variables() {
    let o = lexbs(&["decompose", "x1^2, x1x2, x2^2", "--vars", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!stdout(&o).is_empty());
}

#[test]
fn check_exit_codes() {
    let thm1 = lexbs(&["check", "thm1", "x^2, xy, xz^2, y^6, y^5z, y^4z^3, y^3z^4, y^2z^5, yz^6, z^9"]);
    assert_eq!(thm1.status.code(), Some(0));
    assert!(stdout(&thm1).contains("verdict: pass"));

    let excluded = lexbs(&["check", "conjecture", "x^2, xy, xz, y^2, yz, z^2"]);
    assert_eq!(excluded.status.code(), Some(2));
    assert!(stdout(&excluded).contains("hypothesis: excluded"));

    let not_lex = lexbs(&["check", "thm1", "x^2, xy, y^3"]);
    assert_eq!(not_lex.status.code(), Some(2));
    assert!(stdout(&not_lex).contains("not a lex-segment ideal"));
}

#[test]
fn parse_errors_exit_three() {
    for args in [&["betti", "x^2, w"][..], &["decompose", "x^"], &["betti"], &["no-such-command"]] {
        assert_eq!(lexbs(args).status.code(), Some(3), "{args:?}");
    }
    assert_eq!(lexbs(&["--help"]).status.code(), Some(0));
}

#[test]
fn explain_tags() {
    let o = lexbs(&["explain", "x^2, xy^2, xyz, xz^2, y^4, y^3z, y^2z^2, yz^6, z^9"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("  1/4 pi(4,8,11)  from c(-1)\n"), "{text}");
    assert!(text.contains("  1 pi(9)  from (L,x)\n"), "{text}");
    assert!(text.contains("c(-1): 1/42 pi(3,9,10)"), "{text}");
}

#[test]
fn explain_marks_extra() {
    let o = lexbs(&["explain", "x^2, xy, xz^2, y^6, y^5z, y^4z^3, y^3z^4, y^2z^5, yz^6, z^9"]);
    let text = stdout(&o);
    let line = text.lines().find(|l| l.contains("pi(2,4,8)")).unwrap();
    assert!(line.contains("extra"), "{line}");
}

#[test]
fn enumerate_machine_summary() {
    let o = lexbs(&["enumerate", "--max-deg", "2", "--machine", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "max_deg\t2\nvisited\t4\nthm1\t1\t0\t3\t0\t0\nthm2\t1\t0\t3\t0\t0\nconjecture\t0\t0\t3\t1\t0\n\
         ek_vs_cone\t1\t0\t3\t0\t0\nbhp\t4\t0\t0\t0\t0\nlemmas\t4\t0\t0\t0\t0\n"
    );
    let bad = lexbs(&["enumerate", "--max-deg", "2", "--checks", "thm9"]);
    assert_eq!(bad.status.code(), Some(3));
}

#[test]
fn power_ideal_round_trips() {
    let o = lexbs(&["gen", "power-ideal", "y,z", "3"]);
    assert_eq!(stdout(&o), "y^3, y^2z, yz^2, z^3\n");
    let gens = format!("x, {}", stdout(&o).trim());
    let b = lexbs(&["betti", &gens]);
    assert_eq!(b.status.code(), Some(0));
}
