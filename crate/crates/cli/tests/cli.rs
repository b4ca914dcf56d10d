use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

const EIGHT_CYCLE: &str = "\
# balanced 8-cycle
vertices 8
weights 1 4 4 3 2 2 2 2
edges
1 2
2 3
3 4
5 4
6 5
7 6
8 7
1 8
";

const THREE_PETALS: &str = "\
vertices 8
weights 2 2 2 2 1 2 1 2
edges
1 2
2 3
3 1
1 4
5 4
5 1
1 6
7 6
7 8
8 1
";

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        path
    }
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wogtoric"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &std::path::Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generators_of_a_balanced_cycle() {
    let ws = Workspace::new();
    let g = ws.file("d1.txt", EIGHT_CYCLE);
    let o = run(&["generators", path(&g)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "e1^1 e3^16 e5^8 e7^2 - e2^4 e4^16 e6^4 e8^1\n");
    let again = run(&["generators", "--oracle", path(&g)]);
    assert_eq!(stdout(&again), stdout(&o));
}

#[test]
fn zero_ideals() {
    let ws = Workspace::new();
    let tri = ws.file("tri.txt", "vertices 3\nweights 1 2 3\nedges\n1 2\n2 3\n3 1\n");
    let o = run(&["zero", path(&tri)]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "zero (odd cycle)\n".into()));
    let tree = ws.file("tree.txt", "vertices 4\nweights 1 2 3 1\nedges\n1 2\n2 3\n2 4\n");
    let o = run(&["generators", path(&tree)]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "zero ideal\n".into()));
}

#[test]
fn bad_input_exits_with_one() {
    let ws = Workspace::new();
    let bad = ws.file("bad.txt", "vertices 2\nweights 1 x\nedges\n");
    let o = run(&["generators", path(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("bad.txt:2:11: expected a non-negative integer"), "{err}");
    let missing = run(&["matrix", path(&ws.dir.path().join("nope.txt"))]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn exhausted_budget_is_flagged() {
    let ws = Workspace::new();
    let g = ws.file("petals.txt", THREE_PETALS);
    let full = run(&["generators", path(&g)]);
    assert_eq!(full.status.code(), Some(0));
    assert_eq!(stdout(&full).lines().count(), 5);
    let o = run(&["generators", "--bound", "0", path(&g)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("not certified"));
}

#[test]
fn json_output() {
    let ws = Workspace::new();
    let g = ws.file("petals.txt", THREE_PETALS);
    let o = run(&["generators", "--json", path(&g)]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "Basis");
    assert_eq!(v["method"], "OracleSaturation");
    assert_eq!(v["certified_minimal"], true);
    let gens = v["generators"].as_array().unwrap();
    assert_eq!(gens.len(), 5);
    assert_eq!(gens[0]["plus"].as_array().unwrap().len(), 10);
    assert_eq!(gens[0]["minus"][9], 2);
}

#[test]
fn verify_reports_each_line() {
    let ws = Workspace::new();
    let g = ws.file("petals.txt", THREE_PETALS);
    let f = ws.file(
        "claims.txt",
        "# one generator, one product of two, one non-member\n\
         e4 e6 e7 e9 - e5 e8 e10^2\n\
         e4^2 e6^2 e7^2 e9^2 - e5^2 e8^2 e10^4\n\
         e1 - e2\n",
    );
    let o = run(&["verify", path(&g), path(&f)]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].ends_with("kernel yes, ideal yes"));
    assert!(lines[1].ends_with("kernel yes, ideal yes"));
    assert!(lines[2].ends_with("kernel no, ideal no"));
}

#[test]
fn matrix_classify_and_dot() {
    let ws = Workspace::new();
    let g = ws.file("d1.txt", EIGHT_CYCLE);
    let m = stdout(&run(&["matrix", path(&g)]));
    assert_eq!(m.lines().count(), 8);
    assert_eq!(
        m.lines().next().unwrap().split_whitespace().collect::<Vec<_>>(),
        ["1", "0", "0", "0", "0", "0", "0", "1"]
    );
    let c = stdout(&run(&["classify", path(&g)]));
    assert!(c.contains("unicyclic") && c.contains("balanced"), "{c}");
    let d = stdout(&run(&["dot", path(&g)]));
    assert!(d.starts_with("digraph"));
    assert!(d.contains("x5 -> x4"));
}

#[test]
fn reads_stdin_and_is_deterministic() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wogtoric"))
        .args(["generators", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(THREE_PETALS.as_bytes()).unwrap();
    let piped = child.wait_with_output().unwrap();
    let ws = Workspace::new();
    let g = ws.file("petals.txt", THREE_PETALS);
    let runs: Vec<String> = (0..3).map(|_| stdout(&run(&["generators", path(&g)]))).collect();
    assert!(runs.iter().all(|r| *r == stdout(&piped)));
}
