//! The thirteen acceptance criteria. Each one prints a pass/fail line; the
//! test fails if any criterion does.

use derangekit::chars::{burnside_check, inner_product, mno_check, CharacterTable, ClassFunction};
use derangekit::constructors::affine::{gl1_ext2, sl2_affine_char2};
use derangekit::constructors::catalog::Catalog;
use derangekit::constructors::symmetric;
use derangekit::derangements::{derangement_classes, is_elusive, kappa, prime_power_derangement};
use derangekit::structure::{classify_unique_vanishing, fingerprint, CaseTag};
use derangekit::suites;
use derangekit::tables::{self, Loader};
use derangekit::{Cyc, Error, PermGroup, Rational, Tier};
use std::path::Path;
use std::sync::OnceLock;
use std::time::Instant;

type Outcome = std::result::Result<String, String>;

fn loader() -> &'static Loader {
    static L: OnceLock<Loader> = OnceLock::new();
    L.get_or_init(|| {
        let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
        Loader::new(Catalog::new(root), Tier::Extended)
    })
}

fn err(e: Error) -> String {
    e.to_string()
}

fn workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn table(id: &str, rows: usize) -> Outcome {
    let t = tables::regenerate(id, loader()).map_err(err)?;
    if t.rows.len() != rows {
        return Err(format!("{} rows, expected {rows}", t.rows.len()));
    }
    if !t.ok() {
        return Err(t.diff().join("; "));
    }
    let values: Vec<String> = t.rows.iter().map(|r| r.expected.to_string()).collect();
    Ok(values.join(","))
}

fn point_kappa(g: &PermGroup) -> Result<usize, String> {
    kappa(g, &g.stabilizer(0).map_err(err)?).map_err(err)
}

fn gl1_witnesses_and_sl2() -> Outcome {
    let mut seen = Vec::new();
    for (p, k) in [(3, 2), (5, 2), (7, 2), (2, 4)] {
        let g = gl1_ext2(p, k).map_err(err)?;
        let kap = point_kappa(&g)?;
        if kap != 2 {
            return Err(format!("GL1({}).2 has kappa {kap}", p.pow(k)));
        }
        seen.push(kap);
    }
    let s4 = sl2_affine_char2(1).map_err(err)?;
    let same = fingerprint(&s4).map_err(err)? == fingerprint(&symmetric(4)).map_err(err)?;
    let k1 = point_kappa(&s4)?;
    if k1 != 2 || !same {
        return Err(format!("m=1: kappa {k1}, S4 fingerprint {same}"));
    }
    let mut big = Vec::new();
    for m in [2, 3] {
        let k = point_kappa(&sl2_affine_char2(m).map_err(err)?)?;
        if k < 3 {
            return Err(format!("m={m}: kappa {k} < 3"));
        }
        big.push(k);
    }
    Ok(format!("GL1.2 kappas {seen:?}; SL2 affine kappas 2, {big:?}"))
}

fn a5_on_z5() -> Outcome {
    let (g, h) = loader().pair("A5", "Z5").map_err(err)?;
    match kappa(&g, &h).map_err(err)? {
        2 if h.order() == 5 => Ok("kappa(A5, Z5) = 2".into()),
        k => Err(format!("kappa {k} with |H| = {}", h.order())),
    }
}

fn elusive_examples() -> Outcome {
    for (g, s) in [("M11_12", "H"), ("AGL1_9", "AGL1_3")] {
        let (g, h) = loader().pair(g, s).map_err(err)?;
        let elusive = is_elusive(&g, &h).map_err(err)?;
        let pp = prime_power_derangement(&g, &h).map_err(err)?;
        if !elusive || pp.is_none() {
            return Err(format!("elusive {elusive}, prime-power witness {pp:?}"));
        }
    }
    Ok("both elusive with prime-power derangements".into())
}

fn property_suites() -> Outcome {
    let ids = [
        "jordan",
        "fks",
        "cameron_cohen",
        "perm_character",
        "core_quotient",
        "single_class",
        "frobenius_lemma",
    ];
    let mut counts = Vec::new();
    for id in ids {
        let r = suites::run(id, loader(), workers()).map_err(err)?;
        if !r.passed() || !r.skipped.is_empty() || r.cases.is_empty() {
            return Err(r.to_text());
        }
        counts.push(format!("{id}={}", r.cases.len()));
    }
    Ok(counts.join(" "))
}

fn classifier() -> Outcome {
    let r = suites::run("theorem5", loader(), 1).map_err(err)?;
    if !r.passed() || r.cases.len() != 6 {
        return Err(r.to_text());
    }
    // The AGL1(8) numbers, read off the classifier directly.
    let g = derangekit::constructors::affine::agl1(2, 3).map_err(err)?;
    let h = g.stabilizer(0).map_err(err)?;
    let c = classify_unique_vanishing(&g, &h).map_err(err)?;
    let rep = derangement_classes(&g, &h).map_err(err)?;
    let cent = g.order() / rep.classes[0].size as u128;
    if c.tag != CaseTag::FROB_QUOTIENT_c || cent != 8 || rep.classes[0].size != 7 || (c.n_order, c.m_order) != (1, 8) {
        return Err(format!("{c:?}, |C_G(x)| = {cent}"));
    }
    Ok("D10, AGL1(8), AGL1(9), A5, L2(8):3 tagged; no induced hit from D10".into())
}

fn character_exactness() -> Outcome {
    let mut groups: Vec<PermGroup> = Vec::new();
    for e in loader().all().map_err(err)? {
        groups.push(e.group.clone());
        groups.extend(e.subgroups.iter().map(|s| s.group.clone()));
    }
    let mut computed = 0;
    let mut a5 = false;
    for g in &groups {
        let t = match CharacterTable::new(g) {
            Ok(t) => t,
            Err(Error::CapExceeded { .. } | Error::TooManyClasses(..)) => continue,
            Err(e) => return Err(err(e)),
        };
        computed += 1;
        let k = t.len();
        for a in 0..k {
            for b in a..k {
                let ip = inner_product(&t, &ClassFunction::from_row(&t, a), &ClassFunction::from_row(&t, b)).map_err(err)?;
                if ip != Rational::from_integer((a == b) as i128) {
                    return Err(format!("rows {a}, {b} of a group of order {}", g.order()));
                }
            }
        }
        for x in 0..k {
            for y in x..k {
                let mut s = Cyc::zero(1);
                for row in &t.rows {
                    s = &s + &(&row[x] * &row[y].conj());
                }
                let want = if x == y { t.centralizer_order(x) as i64 } else { 0 };
                if s != Cyc::from_int(1, want) {
                    return Err(format!("columns {x}, {y} of a group of order {}", g.order()));
                }
            }
        }
        if !burnside_check(&t) || !mno_check(&t) {
            return Err(format!("Burnside or MNO fails for a group of order {}", g.order()));
        }
        if g.order() == 60 && g.degree() == 5 {
            let mut d = t.degrees.clone();
            d.sort_unstable();
            a5 = d == [1, 3, 3, 4, 5];
        }
    }
    if !a5 {
        return Err("A5 degrees are not 1,3,3,4,5".into());
    }
    Ok(format!("{computed} tables exact"))
}

#[test]
fn acceptance_criteria() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("1 kappa <= 2 almost simple rows", || table("kappa_table1", 14)),
        ("2 kappa for A5, S5, A6, S6", || table("an_table4", 12)),
        ("3 M11 maximal row and Phi", || table("m11_row", 6)),
        ("4 A6 family", || table("a6_family", 5)),
        ("5 Phi for A7, S7, A8, S8", || table("phi_small", 4)),
        ("6 affine kappa = 2 rows", || table("affine_table2", 5)),
        ("7 Hering eliminations", || table("hering_eliminations", 11)),
        ("8 GL1 witnesses and SL2 affine", gl1_witnesses_and_sl2),
        ("9 kappa(A5, Z5)", a5_on_z5),
        ("10 elusive examples", elusive_examples),
        ("11 property suites", property_suites),
        ("12 unique-vanishing classifier", classifier),
        ("13 character exactness", character_exactness),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let t = Instant::now();
        match f() {
            Ok(msg) => println!("PASS {name}: {msg} ({:.1?})", t.elapsed()),
            Err(msg) => {
                println!("FAIL {name}: {msg} ({:.1?})", t.elapsed());
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
