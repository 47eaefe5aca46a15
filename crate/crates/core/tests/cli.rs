use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn ichom(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ichom")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

/// `degree=k rank=r` lines as `(k, r)`.
fn ranks(records: &str) -> Vec<(usize, usize)> {
    records
        .lines()
        .filter_map(|l| {
            let mut deg = None;
            let mut rank = None;
            for kv in l.split(' ') {
                match kv.split_once('=') {
                    Some(("degree", v)) => deg = v.parse().ok(),
                    Some(("rank", v)) => rank = v.parse().ok(),
                    _ => {}
                }
            }
            Some((deg?, rank?))
        })
        .collect()
}

#[test]
fn betti_of_hollow_triangle() {
    let (code, out, _) = ichom(&["betti", data("hollow-triangle.cx").to_str().unwrap(), "--format", "records"]);
    assert_eq!(code, 0);
    assert_eq!(ranks(&out), vec![(0, 1), (1, 1)]);
    assert!(out.starts_with("version="));
    assert!(out.lines().next().unwrap().contains("sha256="));
}

#[test]
fn betti_errors() {
    let p = scratch("dangling.cx", "dimension 1\nsimplex 0 1\nskeleton 0 7\n");
    let (code, _, err) = ichom(&["betti", p.to_str().unwrap()]);
    assert_ne!(code, 0);
    assert!(err.contains("line 3") && err.contains("[7]"), "{err}");

    let p = scratch("empty.cx", "# nothing here\ndimension 0\n");
    let (code, _, err) = ichom(&["betti", p.to_str().unwrap()]);
    assert_ne!(code, 0);
    assert!(err.contains("empty complex"), "{err}");

    let (code, _, err) = ichom(&["betti", "/nonexistent/file.cx"]);
    assert_ne!(code, 0);
    assert!(err.contains("/nonexistent/file.cx"), "{err}");
}

#[test]
fn ih_on_cone_over_hexagon() {
    let f = data("cone-hexagon.cx");
    let f = f.to_str().unwrap();
    let (code, plain, _) = ichom(&["ih", f, "--perversity", "0,0,0", "--format", "records"]);
    assert_eq!(code, 0);
    assert_eq!(ranks(&plain), vec![(0, 1), (1, 0), (2, 0)]);

    let (code, derived, _) = ichom(&["ih", f, "--alpha", "2:1", "--beta", "2:1/2", "--format", "records"]);
    assert_eq!(code, 0);
    assert_eq!(ranks(&derived), ranks(&plain));
    assert!(derived.contains("codim=2 alpha=1 beta=1/2 floor=0 p=0 source=control"), "{derived}");
    assert!(derived.contains("perversity_source=control"));
}

#[test]
fn ih_errors() {
    let (code, _, err) = ichom(&["ih", data("hexagon.cx").to_str().unwrap()]);
    assert_ne!(code, 0);
    assert!(err.contains("filtration required for ih"), "{err}");

    let f = data("cone-torus.cx");
    let f = f.to_str().unwrap();
    let (code, _, err) = ichom(&["ih", f, "--perversity", "0,0,0,2"]);
    assert_ne!(code, 0, "{err}");
    let (code, _, err) = ichom(&["ih", f, "--alpha", "3:1", "--beta", "3:2"]);
    assert_ne!(code, 0);
    assert!(err.contains("integer"), "{err}");
    let (code, _, err) = ichom(&["ih", f, "--alpha", "3:1", "--beta", "3:1.5"]);
    assert_ne!(code, 0);
    assert!(err.contains("p/q"), "{err}");
}

#[test]
fn cyclic_commands() {
    let (code, out, _) = ichom(&["cyclic", "hh", data("ground-field.alg").to_str().unwrap(), "--format", "records"]);
    assert_eq!(code, 0);
    let exact: Vec<_> = out.lines().filter(|l| l.contains("status=exact")).collect();
    assert_eq!(ranks(&exact.join("\n")), vec![(0, 1), (1, 0), (2, 0), (3, 0), (4, 0)]);

    let dual = data("dual-numbers.alg");
    let dual = dual.to_str().unwrap();
    let (code, out, _) = ichom(&["cyclic", "hh", dual, "--max-degree", "5", "--format", "records"]);
    assert_eq!(code, 0);
    let exact: Vec<_> = out.lines().filter(|l| l.contains("status=exact")).collect();
    assert_eq!(ranks(&exact.join("\n")), vec![(0, 2), (1, 1), (2, 1), (3, 1), (4, 1)]);
    assert!(out.contains("degree=5") && out.contains("status=upper-bound"));

    let (code, out, _) = ichom(&["cyclic", "hp", data("ground-field.alg").to_str().unwrap(), "--max-degree", "6", "--format", "records"]);
    assert_eq!(code, 0);
    assert!(out.contains("parity=even rank=1 status=stable"), "{out}");
    assert!(out.contains("parity=odd rank=0 status=stable"), "{out}");

    let (code, out, _) = ichom(&["cyclic", "sbi", dual, "--format", "records"]);
    assert_eq!(code, 0);
    assert!(!out.contains("inexact"));

    let (code, _, err) = ichom(&["cyclic", "hh", data("non-associative.alg").to_str().unwrap()]);
    assert_ne!(code, 0);
    assert!(err.contains("(1, 2, 2)"), "{err}");
}

#[test]
fn perversity_command() {
    let (code, out, _) = ichom(&["perversity", "--dimension", "4", "--alpha", "3:1,4:1", "--beta", "3:3/2,4:5/2", "--format", "records"]);
    assert_eq!(code, 0);
    assert!(out.contains("perversity=(0,0,0,0,0)"), "{out}");
    let (code, _, err) = ichom(&["perversity", "--dimension", "3", "--alpha", "3:1", "--beta", "3:5/2"]);
    assert_ne!(code, 0);
    assert!(err.contains("p_3"), "{err}");
}

#[test]
fn verify_suites() {
    let (code, out, _) = ichom(&["verify", "cone", "--format", "records"]);
    assert_eq!(code, 0);
    assert!(out.lines().skip(1).all(|l| l.ends_with("status=pass")), "{out}");

    let (code, out, _) = ichom(&["verify", "mixed", "--format", "records"]);
    assert_eq!(code, 0);
    for id in ["bb=0", "BB=0", "bB+Bb=0"] {
        assert!(out.contains(id), "missing {id}");
    }
    assert!(!out.contains("status=fail"));

    let (code, _, err) = ichom(&["verify", "nonsense"]);
    assert_ne!(code, 0);
    assert!(err.contains("available suites") && err.contains("cone"), "{err}");
}

#[test]
fn verify_reports_conventions() {
    let (code, out, _) = ichom(&["verify", "theorem0", "--cutoff-convention", "m-1", "--format", "records"]);
    // Mismatches are data, not errors.
    assert_eq!(code, 0);
    assert!(out.contains("status=mismatch"));
    assert!(out.contains("check=resolution expected=one-convention-for-all-cases actual=m status=pass"), "{out}");
    assert!(out.lines().next().unwrap().contains("cutoff_convention=m-1"));
}

#[test]
fn library_entry_point_matches_binary() {
    let path = data("hollow-triangle.cx");
    let lib = ichom::cli::run(["ichom", "betti", path.to_str().unwrap(), "--format", "records"]).unwrap();
    let (_, bin, _) = ichom(&["betti", path.to_str().unwrap(), "--format", "records"]);
    assert_eq!(lib, bin);
}
