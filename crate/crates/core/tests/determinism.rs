mod common;

use shadow_census::cancellation::annotate_catalog;
use shadow_census::census::{enumerate_special, EnumerateOptions};
use shadow_census::cli;
use shadow_census::io::{parse_catalog, parse_model, read_catalog, render_catalog, render_model, write_catalog};

fn options(jobs: usize) -> EnumerateOptions {
    EnumerateOptions {
        jobs,
        ..EnumerateOptions::default()
    }
}

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(
        std::iter::once("shadow-census").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn catalogs_do_not_depend_on_jobs() {
    for n in [1, 2] {
        let mut reference = enumerate_special(n, &options(1)).unwrap();
        annotate_catalog(&mut reference).unwrap();
        let expected = render_catalog(&reference);
        for jobs in [2, 4, 7] {
            let mut c = enumerate_special(n, &options(jobs)).unwrap();
            annotate_catalog(&mut c).unwrap();
            assert_eq!(render_catalog(&c), expected, "n={n} jobs={jobs}");
        }
    }
}

#[test]
fn catalog_round_trip_is_byte_exact() {
    let dir = tempfile::tempdir().unwrap();
    for n in [1, 2] {
        let mut c = common::catalog(n).clone();
        annotate_catalog(&mut c).unwrap();
        let path = dir.path().join(format!("n{n}.cat"));
        write_catalog(&c, &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, render_catalog(&c));
        let back = read_catalog(&path).unwrap();
        assert_eq!(back, c);
        assert_eq!(render_catalog(&parse_catalog(&text).unwrap()), text);
    }
}

#[test]
fn model_round_trip_is_byte_exact() {
    for r in common::all_records() {
        let text = render_model(&r.model());
        let back = parse_model(&text).unwrap();
        assert_eq!(back, r.model());
        assert_eq!(render_model(&back), text);
    }
}

#[test]
fn reports_are_identical_across_runs_and_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let (a, b) = (path("a.cat"), path("b.cat"));
    let first = run(&["enumerate", "--vertices", "2", "--out", &a, "--jobs", "1"]);
    let second = run(&["enumerate", "--vertices", "2", "--out", &b, "--jobs", "4"]);
    assert_eq!(first.0, 0, "{}", first.2);
    assert_eq!(first, second);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let stdout_1 = run(&["enumerate", "--vertices", "1"]);
    let stdout_3 = run(&["enumerate", "--vertices", "1", "--jobs", "3"]);
    assert_eq!(stdout_1, stdout_3);
    let acyclic = common::catalog(2)
        .records
        .iter()
        .position(|r| r.acyclic)
        .unwrap()
        .to_string();
    for args in [
        vec!["classify", "--catalog", &a],
        vec!["cancel", "--catalog", &a],
        vec!["kirby", "--catalog", &a, "--index", &acyclic, "--gleams", "1,-1,3"],
    ] {
        let once = run(&args);
        assert_eq!(once.0, 0, "{args:?}: {}", once.2);
        let other = args
            .iter()
            .map(|s| if *s == a.as_str() { b.as_str() } else { s })
            .collect::<Vec<_>>();
        assert_eq!(once, run(&other), "{args:?}");
        assert_eq!(once, run(&args), "{args:?}");
    }
}
