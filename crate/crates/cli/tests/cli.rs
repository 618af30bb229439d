use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn wgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

const SMALL: &str = "directed 0\nA B 5\nA C 7\n";
const DIRECTED: &str = "directed 1\nA B 5\nB C 1\nA C 7\nnode D\n";

#[test]
fn mst_of_small_graph() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", SMALL);
    for algo in ["boruvka", "prim", "prim-matrix", "kruskal"] {
        let o = wgraph(&["run", "--algo", algo, "--graph", &g]);
        assert_eq!(o.status.code(), Some(0), "{algo}");
        assert_eq!(stdout(&o), "source,target,weight\nA,B,5\nA,C,7\n", "{algo}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("total weight 12"));
    }
}

#[test]
fn shortest_paths_with_paths() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", DIRECTED);
    for algo in ["dijkstra", "dijkstra_matrix", "bellman_ford", "dag_shortest_path"] {
        let o = wgraph(&["run", "--algo", algo, "--graph", &g, "--source", "A", "--show-path"]);
        assert_eq!(o.status.code(), Some(0), "{algo}");
        assert_eq!(stdout(&o), "target,distance,path\nA,0,A\nB,5,A B\nC,6,A B C\nD,inf,\n", "{algo}");
    }
    let o = wgraph(&["run", "--algo", "bellman_ford", "--graph", &g, "--target", "C"]);
    assert_eq!(stdout(&o), "target,distance\nC,6\n");
}

#[test]
fn all_pairs_agree() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", "directed 1\na b 4\nb c -2\na c 3\nc a 1\n");
    let outputs: Vec<String> = ["floyd_warshall", "johnson", "slow_all_pairs", "faster_all_pairs"]
        .iter()
        .map(|algo| stdout(&wgraph(&["run", "--algo", algo, "--graph", &g])))
        .collect();
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
    assert!(outputs[0].contains("a,c,2\n"));
    let o = wgraph(&["run", "--algo", "floyd_warshall", "--graph", &g, "--source", "a", "--target", "c", "--show-path"]);
    assert_eq!(stdout(&o), "source,target,distance,path\na,c,2,a b c\n");
}

#[test]
fn topological_order() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", "directed 1\nc b 1\nb a 1\n");
    let o = wgraph(&["run", "--algo", "topological_sort", "--graph", &g]);
    assert_eq!(stdout(&o), "position,node\n0,c\n1,b\n2,a\n");
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let small = write(&dir, "small.txt", SMALL);
    let directed = write(&dir, "directed.txt", DIRECTED);
    let broken = write(&dir, "broken.txt", "directed 0\nA B\n");
    let cycle = write(&dir, "cycle.txt", "directed 1\nA B 1\nB A -3\n");
    let missing = dir.path().join("absent.txt");
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["run", "--algo", "nope", "--graph", &small], 2),
        (vec!["run", "--algo", "dijkstra", "--graph", &directed, "--source", "Q"], 2),
        (vec!["run", "--algo", "johnson", "--graph", &directed, "--show-path"], 2),
        (vec!["run", "--algo", "kruskal", "--graph", &small, "--source", "A"], 2),
        (vec!["run", "--algo", "dijkstra", "--graph", &broken], 3),
        (vec!["run", "--algo", "dijkstra", "--graph", missing.to_str().unwrap()], 3),
        (vec!["run", "--algo", "kruskal", "--graph", &directed], 3),
        (vec!["run", "--algo", "bellman_ford", "--graph", &cycle], 3),
        (vec!["run", "--algo", "dijkstra", "--graph", &cycle], 3),
        (vec!["verify", "--suite", "mst", "--max-n", "40"], 2),
        (vec!["verify", "--suite", "everything"], 2),
        (vec!["generate", "--model", "complete", "--n", "0"], 2),
        (vec!["frobnicate"], 2),
    ];
    for (args, code) in cases {
        let o = wgraph(&args);
        assert_eq!(o.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    let line = String::from_utf8_lossy(&wgraph(&["run", "--algo", "dijkstra", "--graph", &broken]).stderr).into_owned();
    assert!(line.contains("line 2"), "{line}");
}

#[test]
fn generate_then_run() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("g.txt");
    let args = ["generate", "--model", "random-connected", "--n", "12", "--density", "0.3", "--weights", "1:50", "--int"];
    let first = wgraph(&[&args[..], &["--seed", "7", "--out", out.to_str().unwrap()]].concat());
    assert_eq!(first.status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("directed 0\n"));
    // same seed, same file
    let again = wgraph(&[&args[..], &["--seed", "7"]].concat());
    assert_eq!(stdout(&again), text);
    let mst = wgraph(&["run", "--algo", "kruskal", "--graph", out.to_str().unwrap()]);
    assert_eq!(stdout(&mst).lines().count(), 1 + 11);
}

#[test]
fn generate_dag_is_directed() {
    let o = wgraph(&["generate", "--model", "dag", "--n", "6", "--seed", "1"]);
    assert!(stdout(&o).starts_with("directed 1\n"));
}

#[test]
fn verify_suites_pass() {
    for (suite, max_n) in [("mst", "8"), ("sssp", "10"), ("apsp", "8")] {
        let o = wgraph(&["verify", "--suite", suite, "--instances", "30", "--max-n", max_n, "--seed", "11"]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        assert!(stdout(&o).contains("30/30 instances passed"));
    }
}

fn csv_rows(path: &Path) -> Vec<String> {
    fs::read_to_string(path).unwrap().lines().map(str::to_string).collect()
}

#[test]
fn bench_writes_and_appends_csv() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("times.csv");
    let run = || {
        wgraph(&["bench", "--algo", "kruskal", "--sizes", "8,16", "--trials", "2", "--model", "complete", "--out", out.to_str().unwrap()])
    };
    let o = run();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("log-log slope"));
    let rows = csv_rows(&out);
    assert_eq!(rows[0], "algorithm,v,e,trial,seed,wall_time_s");
    assert_eq!(rows.len(), 1 + 4);
    assert!(rows[1].starts_with("kruskal,8,28,0,"));
    run();
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 1 + 8);
    assert_eq!(rows.iter().filter(|r| r.starts_with("algorithm")).count(), 1);

    let bad = wgraph(&["bench", "--algo", "kruskal", "--sizes", "16,8", "--out", out.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
}
