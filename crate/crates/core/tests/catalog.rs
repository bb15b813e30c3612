use derangekit::constructors::catalog::{self, Catalog, Kind};
use derangekit::derangements::kappa;
use derangekit::suites;
use derangekit::tables::{self, Loader};
use derangekit::{Error, Tier};
use std::fs;
use std::path::{Path, PathBuf};

fn data() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn copy_entry(from: &Path, to: &Path, name: &str) {
    let (src, dst) = (from.join(name), to.join(name));
    fs::create_dir_all(&dst).unwrap();
    for f in fs::read_dir(&src).unwrap() {
        let f = f.unwrap();
        fs::copy(f.path(), dst.join(f.file_name())).unwrap();
    }
}

#[test]
fn named_entries() {
    let c = Catalog::new(data());
    let m11 = c.load("M11", Tier::Core).unwrap();
    assert_eq!((m11.group.order(), m11.group.degree()), (7920, 11));
    let labels: Vec<&str> = m11.maximals().unwrap().iter().map(|s| s.label.as_str()).collect();
    assert_eq!(labels, ["M10", "L2_11", "M9.2", "S5", "2.S4"]);

    let p = c.load("P_121_42", Tier::Core).unwrap();
    assert_eq!(p.kind, Kind::Affine);
    assert_eq!(p.group.order(), 121 * 240);
    assert_eq!(p.alias(), Some("P(11^2,42)"));
    let h = p.subgroup("H").unwrap();
    assert_eq!(kappa(&p.group, &h.group).unwrap(), 2);

    let sz = c.load("Sz8_3", Tier::Core).unwrap();
    assert_eq!((sz.group.order(), sz.group.degree()), (87360, 65));
    assert!(sz.subgroup("5:4x3").is_some());
}

#[test]
fn every_entry_validates() {
    let c = Catalog::new(data());
    let names = c.names().unwrap();
    assert!(names.len() >= 46);
    let loader = Loader::new(c, Tier::Extended);
    let reports = suites::par_map(4, &names, |n| catalog::validate(&loader.get(n).unwrap()));
    for (n, r) in names.iter().zip(reports) {
        let r = r.unwrap_or_else(|e| panic!("{n}: {e}"));
        assert!(r.ok(), "{n}: {}", r.diff());
    }
}

#[test]
fn core_tier_refuses_the_largest_entry() {
    let c = Catalog::new(data());
    let e = c.load("Hering_Sp4_3.2", Tier::Core);
    let capped = match e {
        Err(Error::CapExceeded { .. }) => true,
        Ok(e) => matches!(kappa(&e.group, &e.subgroup("H").unwrap().group), Err(Error::CapExceeded { .. })),
        Err(e) => panic!("{e}"),
    };
    assert!(capped);
    let t = tables::regenerate("hering_eliminations", &Loader::new(c, Tier::Core));
    assert!(matches!(t, Err(Error::CapExceeded { order: 8398080, .. })));
}

#[test]
fn tampered_entries_are_rejected_with_a_diff() {
    let dir = tempfile::tempdir().unwrap();
    copy_entry(&data(), dir.path(), "A5");
    let meta = dir.path().join("A5/meta.txt");
    let text = fs::read_to_string(&meta).unwrap();
    fs::write(&meta, text.replace("expected_kappa.D10 = 1", "expected_kappa.D10 = 2").replace("order = 60", "order = 61")).unwrap();
    let e = Catalog::new(dir.path()).load("A5", Tier::Core).unwrap();
    let r = catalog::check(&e).unwrap();
    assert!(!r.ok());
    let diff = r.diff();
    assert!(diff.contains("expected_kappa.D10") && diff.contains("order"), "{diff}");
    assert!(matches!(catalog::validate(&e), Err(Error::Validation { .. })));

    // A subgroup that is not inside the group.
    fs::write(&meta, text).unwrap();
    fs::write(dir.path().join("A5/sub_D10.gens"), "perm 5\n(1,2)\n").unwrap();
    let e = Catalog::new(dir.path()).load("A5", Tier::Core).unwrap();
    let diff = catalog::check(&e).unwrap().diff();
    assert!(diff.contains("subgroup.D10"), "{diff}");

    // A permutation that does not fit the declared degree.
    fs::write(dir.path().join("A5/sub_D10.gens"), "perm 5\n(1,2,3,4,5,6)\n").unwrap();
    assert!(matches!(Catalog::new(dir.path()).load("A5", Tier::Core), Err(Error::Parse(_) | Error::NotAPermutation(_) | Error::DegreeMismatch(..))));
}

#[test]
fn missing_entries_are_unresolved() {
    let c = Catalog::new(data());
    assert!(matches!(c.load("NoSuchGroup", Tier::Core), Err(Error::Unresolved(_))));
    assert!(matches!(tables::golden("table9"), Err(Error::Unresolved(_))));
    let l = Loader::new(c, Tier::Core);
    assert!(matches!(suites::run("nope", &l, 1), Err(Error::Unresolved(_))));
    assert!(matches!(l.pair("A5", "Q8"), Err(Error::Unresolved(_))));
}

#[test]
fn generation_reproduces_the_shipped_files() {
    let dir = tempfile::tempdir().unwrap();
    let names: Vec<String> = ["A5", "D10", "P_4_2", "Hering_A6", "L2_8_3"].iter().map(|s| s.to_string()).collect();
    let mut written = catalog::generate(dir.path(), &names).unwrap();
    written.sort();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(written, sorted);
    for n in &names {
        for f in fs::read_dir(data().join(n)).unwrap() {
            let f = f.unwrap();
            let fresh = fs::read_to_string(dir.path().join(n).join(f.file_name())).unwrap();
            assert_eq!(fresh, fs::read_to_string(f.path()).unwrap(), "{n}/{:?}", f.file_name());
        }
    }
    assert!(catalog::generate(dir.path(), &["Bogus".to_string()]).is_err());
}

#[test]
fn gens_files_roundtrip() {
    for n in ["A5", "Hering_SL3_2"] {
        let g = catalog::read_gens(&data().join(n).join("group.gens")).unwrap();
        assert_eq!(catalog::Gens::parse(&g.render()).unwrap(), g);
    }
    assert!(catalog::Gens::parse("perm 3\n(1,2,4)\n").is_err());
    assert!(catalog::Gens::parse("mat 2 1 2\n1 0\n0\n").is_err());
    assert!(catalog::Gens::parse("blob 3\n").is_err());
}

#[test]
fn tables_render_in_three_formats() {
    let l = Loader::new(Catalog::new(data()), Tier::Core);
    let t = tables::regenerate("an_table4", &l).unwrap();
    assert!(t.ok(), "{:?}", t.diff());
    assert_eq!(t.to_text().lines().count(), 2 + 12);
    assert_eq!(t.to_csv().lines().count(), 1 + 12);
    let v: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 12);
    for id in tables::TABLE_IDS {
        assert!(!tables::golden(id).unwrap().is_empty());
    }
}

#[test]
fn fast_suites_pass() {
    let l = Loader::new(Catalog::new(data()), Tier::Extended);
    for id in ["theorem5", "wielandt", "gamma_l1_sweep", "subgroup_inclusion", "affine_reduction", "affine_centralisers", "affine_commutator"] {
        let r = suites::run(id, &l, 2).unwrap();
        assert!(r.passed() && !r.cases.is_empty(), "{}", r.to_text());
    }
}

#[test]
fn par_map_keeps_order() {
    let items: Vec<u64> = (0..100).collect();
    for w in [1, 3, 8] {
        assert_eq!(suites::par_map(w, &items, |x| x * x), items.iter().map(|x| x * x).collect::<Vec<_>>());
    }
}
