use std::process::{Command, Output};

fn posetcon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_posetcon")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn fig1_congruences() {
    let out = posetcon(&["congruences", "examples/fig1.poset"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 10);
    assert!(text.starts_with("delta: "));
    assert!(text.contains("theta5: [0,c][d,1]\n"));
    assert!(text.ends_with("nabla: [0,1]\n"));
}

#[test]
fn fig1_star_congruences() {
    let out = posetcon(&["congruences", "examples/fig1.poset", "--star"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "delta: [0,0][a,a][b,b][c,c][d,d][1,1]\ntheta1: [0,a][b,1]\ntheta2: [0,b][a,1]\nnabla: [0,1]\n"
    );
}

#[test]
fn bruteforce_agrees_with_interval_search() {
    for name in ["fig1", "fig3", "fig4"] {
        let a = posetcon(&["congruences", name]);
        let b = posetcon(&["congruences", name, "--bruteforce"]);
        assert_eq!(stdout(&a), stdout(&b), "{name}");
    }
}

#[test]
fn bruteforce_refuses_large_posets() {
    assert_eq!(code(&posetcon(&["congruences", "fig6", "--bruteforce"])), 2);
}

#[test]
fn fig4_boolean_congruence_lattice() {
    let out = posetcon(&["con-lattice", "fig4", "--comp"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.matches(" < ").count(), 8);
    assert!(text.contains("lattice: yes"));
}

#[test]
fn check_exit_codes() {
    for name in ["fig1", "fig3", "fig4", "fig6", "antichain3", "chain1"] {
        let out = posetcon(&["check", name]);
        assert_eq!(code(&out), 0, "{name}: {}", stdout(&out));
        assert!(stdout(&out).contains(&format!("SUMMARY {name}: ")));
    }
}

#[test]
fn check_suite_selection() {
    let text = stdout(&posetcon(&["check", "fig6", "--suite", "boolean"]));
    assert!(text.lines().all(|l| !l.contains("FAIL")));
    assert!(text.contains("CHECK congruence-properties PASS [non-permutable:"));
    assert!(!text.contains("star-residuation"));
}

#[test]
fn missing_star_table_exits_one() {
    assert_eq!(code(&posetcon(&["star-table", "fig4"])), 1);
    assert_eq!(code(&posetcon(&["congruences", "fig4", "--star"])), 1);
    assert_eq!(code(&posetcon(&["--expect-star", "validate", "fig4"])), 1);
    assert_eq!(code(&posetcon(&["--expect-star", "validate", "fig1"])), 0);
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(code(&posetcon(&["frobnicate"])), 2);
    assert_eq!(code(&posetcon(&[])), 2);
    assert_eq!(code(&posetcon(&["validate", "no/such/file.poset"])), 2);
    assert_eq!(code(&posetcon(&["cones", "fig1", "zz"])), 2);
    assert_eq!(code(&posetcon(&["check", "fig1", "--suite", "nope"])), 2);
}

#[test]
fn parse_errors_exit_two() {
    let dir = std::env::temp_dir().join(format!("posetcon-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("loop.poset");
    std::fs::write(&bad, "poset loop\nelements: x\ncovers: x<x\n").unwrap();
    let out = posetcon(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let good = dir.join("two.poset");
    std::fs::write(&good, "poset two\nelements: 0 1\ncovers: 0<1\n").unwrap();
    let out = posetcon(&["validate", good.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("boolean: yes"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cones() {
    let out = posetcon(&["cones", "fig1", "c", "d"]);
    assert_eq!(stdout(&out), "L = {0,a,b}\nU = {1}\nMax L = {a,b}\nMin U = {1}\n");
    let all = stdout(&posetcon(&["cones", "fig1"]));
    assert!(all.starts_with("L = {0,a,b,c,d,1}\nU = {0,a,b,c,d,1}\n"));
}

#[test]
fn quotient_by_name_and_classes() {
    let by_name = posetcon(&["quotient", "fig1", "theta1"]);
    let by_classes = posetcon(&["quotient", "fig1", "[0,a][b,c][d,1]"]);
    assert_eq!(code(&by_name), 0);
    assert_eq!(stdout(&by_name), stdout(&by_classes));
    assert!(stdout(&by_name).contains("greatest-element order agrees: yes"));
    assert_eq!(code(&posetcon(&["quotient", "fig1", "[0,a][b,1]x"])), 2);
    assert_eq!(code(&posetcon(&["quotient", "fig1", "{0,c,d,1}"])), 2);
    assert_eq!(code(&posetcon(&["quotient", "fig1", "[0,0][a,a][b,b][c,1]{d}"])), 1);
}

#[test]
fn filters() {
    let all = stdout(&posetcon(&["filters", "fig1"]));
    let strong = stdout(&posetcon(&["filters", "fig1", "--strong"]));
    let deductive = stdout(&posetcon(&["filters", "fig1", "--deductive"]));
    assert!(strong.lines().count() <= all.lines().count());
    assert!(deductive.lines().any(|l| l == "{c,1}"));
    assert!(!deductive.lines().any(|l| l == "{a,1}"));
}

#[test]
fn kernels_list_exclusions() {
    let text = stdout(&posetcon(&["kernels", "fig4"]));
    for x in ["a'", "b'", "c'", "d'"] {
        assert!(text.contains(&format!("excluded [{x},1]:")), "{x}");
    }
    assert!(text.contains("excluded [a',1]: lower b=d',c',b'"));
    assert_eq!(code(&posetcon(&["kernels", "antichain2"])), 1);
}

#[test]
fn dot_output_is_deterministic() {
    for args in [["hasse", "fig1", ""], ["con-lattice", "fig4", "--dot"]] {
        let args: Vec<&str> = args.iter().copied().filter(|a| !a.is_empty()).collect();
        let a = stdout(&posetcon(&args));
        let b = stdout(&posetcon(&args));
        assert_eq!(a, b);
        assert!(a.starts_with("digraph "));
    }
    let hasse = stdout(&posetcon(&["hasse", "fig1"]));
    assert_eq!(hasse.matches("->").count(), 8);
}

#[test]
fn examples_lists_bundled_posets() {
    let text = stdout(&posetcon(&["examples"]));
    assert!(text.contains("fig1: 6 elements\n"));
    assert!(text.contains("fig6: 12 elements\n"));
    assert!(text.contains("fig7: 10 elements (reference lattice)\n"));
}
