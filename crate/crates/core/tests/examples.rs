//! Every example runs to completion.

use std::path::PathBuf;
use std::process::Command;

fn example(name: &str) -> PathBuf {
    let deps = std::env::current_exe().unwrap();
    deps.parent().unwrap().parent().unwrap().join("examples").join(name)
}

#[test]
fn examples_run() {
    for (name, args) in [
        ("root_systems", vec![]),
        ("mpoly", vec!["A3", "B3", "I2(5)"]),
        ("chains", vec!["B3"]),
        ("classes", vec!["A3"]),
        ("andre_trees", vec![]),
        ("hook_identities", vec!["5"]),
        ("coatom_orbits", vec![]),
        ("e6_orbits", vec!["4", "1"]),
        ("fuss_catalan", vec![]),
        ("verify", vec!["--group", "A3", "--check", "standard1,appendixA"]),
    ] {
        let path = example(name);
        assert!(path.exists(), "{} is not built", path.display());
        let out = Command::new(&path).args(&args).output().unwrap();
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stdout.is_empty(), "{name}");
    }
}
