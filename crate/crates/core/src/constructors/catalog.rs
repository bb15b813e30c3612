//! The on-disk catalog of groups and subgroups.
//!
//! Each entry is a directory `data/<name>/` holding `group.gens`,
//! `meta.txt` and one `sub_<key>.gens` per named subgroup. A `perm` entry
//! stores permutation generators in 1-based cycle notation. An `affine`
//! entry stores the matrix generators of the stabiliser `H` of the zero
//! vector; the group is `N:H` with `N` the translations and the subgroup
//! `H` is implicit.
//!
//! Metadata are `key = value` lines. Validation recomputes every recorded
//! property and rejects the entry with a field-level diff on any mismatch.

use super::matrix::{affine_group, linear_group, reduce_generators, MatrixGenSet};
use crate::derangements;
use crate::engine::{predicates, PermGroup, Tier};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::perm::Perm;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

/// Environment variable overriding the data directory.
pub const DATA_ENV: &str = "DERANGEKIT_DATA";

/// `$DERANGEKIT_DATA`, else `./data` when present, else the workspace copy.
pub fn default_data_dir() -> PathBuf {
    if let Some(d) = std::env::var_os(DATA_ENV) {
        return PathBuf::from(d);
    }
    let local = PathBuf::from("data");
    if local.is_dir() {
        return local;
    }
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Perm,
    Affine,
}

impl Kind {
    fn as_str(self) -> &'static str {
        match self {
            Kind::Perm => "perm",
            Kind::Affine => "affine",
        }
    }
}

/// A generator file: permutations or matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gens {
    Perm { degree: usize, gens: Vec<Perm> },
    Mat(MatrixGenSet),
}

impl Gens {
    pub fn parse(text: &str) -> Result<Gens> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.starts_with('#'));
        let header = lines
            .by_ref()
            .find(|l| !l.is_empty())
            .ok_or_else(|| Error::Parse("empty generator file".into()))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad number {s:?} in header {header:?}")))
        };
        match words.as_slice() {
            ["perm", n] => {
                let degree = num(n)?;
                let gens = lines
                    .filter(|l| !l.is_empty())
                    .map(|l| Perm::parse(l, degree))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Gens::Perm { degree, gens })
            }
            ["mat", p, k, d] => {
                let (p, k, dim) = (num(p)? as u32, num(k)? as u32, num(d)?);
                let mut mats = Vec::new();
                let mut rows: Vec<Vec<u32>> = Vec::new();
                for l in lines.chain(std::iter::once("")) {
                    if l.is_empty() {
                        if !rows.is_empty() {
                            if rows.len() != dim {
                                return Err(Error::Parse(format!(
                                    "matrix with {} rows, expected {dim}",
                                    rows.len()
                                )));
                            }
                            mats.push(Matrix::from_rows(std::mem::take(&mut rows)));
                        }
                        continue;
                    }
                    let row = l
                        .split_whitespace()
                        .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
                        .collect::<Result<Vec<_>>>()?;
                    if row.len() != dim {
                        return Err(Error::Parse(format!("row of length {}, expected {dim}", row.len())));
                    }
                    rows.push(row);
                }
                Ok(Gens::Mat(MatrixGenSet::new(p, k, dim, mats)?))
            }
            _ => Err(Error::Parse(format!("unknown header {header:?}"))),
        }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        match self {
            Gens::Perm { degree, gens } => {
                let _ = writeln!(s, "perm {degree}");
                for g in gens {
                    let _ = writeln!(s, "{g}");
                }
            }
            Gens::Mat(m) => {
                let _ = writeln!(s, "mat {} {} {}", m.p, m.k, m.dim);
                for (i, x) in m.mats.iter().enumerate() {
                    if i > 0 {
                        s.push('\n');
                    }
                    for r in x.to_rows() {
                        let row: Vec<String> = r.iter().map(u32::to_string).collect();
                        let _ = writeln!(s, "{}", row.join(" "));
                    }
                }
            }
        }
        s
    }

    /// The group the file describes: the permutation group, or the affine
    /// group `N:H` for matrices.
    pub fn group(&self) -> Result<PermGroup> {
        match self {
            Gens::Perm { degree, gens } => PermGroup::new(*degree, gens.clone()),
            Gens::Mat(m) => affine_group(m, true),
        }
    }

    /// The file read as a subgroup: matrices give the stabiliser of zero.
    pub fn subgroup(&self) -> Result<PermGroup> {
        match self {
            Gens::Perm { .. } => self.group(),
            Gens::Mat(m) => linear_group(m),
        }
    }
}

pub fn read_gens(path: &Path) -> Result<Gens> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Gens::parse(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        e => e,
    })
}

/// `key = value` metadata, kept sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Meta(pub BTreeMap<String, String>);

impl Meta {
    pub fn parse(text: &str) -> Result<Meta> {
        let mut m = BTreeMap::new();
        for l in text.lines().map(str::trim) {
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            let (k, v) = l
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key = value, got {l:?}")))?;
            m.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Meta(m))
    }

    pub fn render(&self) -> String {
        self.0.iter().map(|(k, v)| format!("{k} = {v}\n")).collect()
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    pub fn set(&mut self, key: &str, value: impl ToString) {
        self.0.insert(key.to_string(), value.to_string());
    }

    fn number(&self, key: &str) -> Result<Option<u128>> {
        self.get(key)
            .map(|v| v.parse().map_err(|_| Error::Parse(format!("{key} = {v:?} is not a number"))))
            .transpose()
    }

    fn flag(&self, key: &str) -> Result<Option<bool>> {
        self.get(key)
            .map(|v| v.parse().map_err(|_| Error::Parse(format!("{key} = {v:?} is not a boolean"))))
            .transpose()
    }

    fn list(&self, key: &str) -> Vec<String> {
        self.get(key)
            .map(|v| v.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect())
            .unwrap_or_default()
    }
}

/// The file-name form of a subgroup label: `3^2:4` becomes `3^2_4` and
/// brackets are dropped.
pub fn sub_key(label: &str) -> String {
    label
        .chars()
        .filter(|c| !"[]()".contains(*c))
        .map(|c| if c == ':' { '_' } else { c })
        .collect()
}

#[derive(Debug, Clone)]
pub struct Subgroup {
    pub key: String,
    pub label: String,
    pub group: PermGroup,
    pub expected_kappa: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct Entry {
    pub name: String,
    pub kind: Kind,
    pub meta: Meta,
    pub gens: Gens,
    pub group: PermGroup,
    pub subgroups: Vec<Subgroup>,
}

impl Entry {
    /// Looks a subgroup up by key or label.
    pub fn subgroup(&self, name: &str) -> Option<&Subgroup> {
        self.subgroups.iter().find(|s| s.key == name || s.label == name)
    }

    /// The maximal subgroups recorded for `Φ`, in metadata order.
    pub fn maximals(&self) -> Result<Vec<&Subgroup>> {
        self.meta
            .list("maximals")
            .iter()
            .map(|k| {
                self.subgroup(k)
                    .ok_or_else(|| Error::Parse(format!("{}: unknown maximal {k}", self.name)))
            })
            .collect()
    }

    pub fn tier(&self) -> Tier {
        match self.meta.get("tier") {
            Some("extended") => Tier::Extended,
            _ => Tier::Core,
        }
    }

    pub fn expected_phi(&self) -> Result<Option<usize>> {
        Ok(self.meta.number("phi")?.map(|x| x as usize))
    }

    pub fn alias(&self) -> Option<&str> {
        self.meta.get("alias")
    }

    pub fn description(&self) -> &str {
        self.meta.get("description").unwrap_or("")
    }
}

/// A catalog rooted at a data directory.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub root: PathBuf,
}

impl Catalog {
    pub fn new(root: impl Into<PathBuf>) -> Catalog {
        Catalog { root: root.into() }
    }

    pub fn open_default() -> Catalog {
        Catalog::new(default_data_dir())
    }

    /// Entry names, sorted.
    pub fn names(&self) -> Result<Vec<String>> {
        let dir = fs::read_dir(&self.root)
            .map_err(|e| Error::Io(format!("{}: {e}", self.root.display())))?;
        let mut out = Vec::new();
        for d in dir {
            let d = d?;
            if d.path().join("meta.txt").is_file() {
                out.push(d.file_name().to_string_lossy().into_owned());
            }
        }
        out.sort();
        Ok(out)
    }

    /// Loads an entry. Groups carry the cap of `tier`, so an extended entry
    /// loaded at the core tier fails with [`Error::CapExceeded`] as soon as
    /// an enumeration is attempted.
    pub fn load(&self, name: &str, tier: Tier) -> Result<Entry> {
        let dir = self.root.join(name);
        if !dir.join("meta.txt").is_file() {
            return Err(Error::Unresolved(format!("no catalog entry {name:?} in {}", self.root.display())));
        }
        let meta = Meta::parse(&fs::read_to_string(dir.join("meta.txt"))?)?;
        let kind = match meta.get("kind") {
            Some("perm") => Kind::Perm,
            Some("affine") => Kind::Affine,
            k => return Err(Error::Parse(format!("{name}: unknown kind {k:?}"))),
        };
        let gens = read_gens(&dir.join("group.gens"))?;
        if matches!((&gens, kind), (Gens::Perm { .. }, Kind::Affine) | (Gens::Mat(_), Kind::Perm)) {
            return Err(Error::Parse(format!("{name}: generator file does not match kind")));
        }
        let group = gens.group()?.with_tier(tier);
        let kappa = |key: &str| -> Result<Option<usize>> {
            Ok(meta.number(&format!("expected_kappa.{key}"))?.map(|x| x as usize))
        };
        let mut subgroups = Vec::new();
        if let Gens::Mat(m) = &gens {
            subgroups.push(Subgroup {
                key: "H".into(),
                label: "H".into(),
                group: linear_group(m)?.with_tier(tier),
                expected_kappa: kappa("H")?,
            });
        }
        let mut files: Vec<PathBuf> = fs::read_dir(&dir)?
            .filter_map(|d| d.ok().map(|d| d.path()))
            .filter(|p| {
                p.file_name()
                    .and_then(|f| f.to_str())
                    .is_some_and(|f| f.starts_with("sub_") && f.ends_with(".gens"))
            })
            .collect();
        files.sort();
        for path in files {
            let f = path.file_name().and_then(|f| f.to_str()).unwrap_or_default();
            let key = f["sub_".len()..f.len() - ".gens".len()].to_string();
            let label = meta.get(&format!("label.{key}")).unwrap_or(&key).to_string();
            let h = read_gens(&path)?.subgroup()?.with_tier(tier);
            if h.degree() != group.degree() {
                return Err(Error::DegreeMismatch(h.degree(), group.degree()));
            }
            subgroups.push(Subgroup { expected_kappa: kappa(&key)?, key, label, group: h });
        }
        // Metadata order for subgroups when recorded, else file order.
        let order = meta.list("subgroups");
        if !order.is_empty() {
            subgroups.sort_by_key(|s| order.iter().position(|k| *k == s.key).unwrap_or(usize::MAX));
        }
        Ok(Entry { name: name.to_string(), kind, meta, gens, group, subgroups })
    }

    pub fn load_all(&self, tier: Tier) -> Result<Vec<Entry>> {
        self.names()?.iter().map(|n| self.load(n, tier)).collect()
    }
}

/// One recomputed field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub field: String,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn ok(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub name: String,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn diff(&self) -> String {
        self.checks
            .iter()
            .filter(|c| !c.ok())
            .map(|c| format!("  {}: expected {}, got {}\n", c.field, c.expected, c.actual))
            .collect()
    }

    /// `Err(Error::Validation)` carrying the diff when any check failed.
    pub fn into_result(self) -> Result<ValidationReport> {
        if self.ok() {
            Ok(self)
        } else {
            Err(Error::Validation { name: self.name.clone(), diff: self.diff() })
        }
    }
}

/// Recomputes every recorded property of an entry. Missing mandatory keys
/// count as mismatches.
pub fn check(entry: &Entry) -> Result<ValidationReport> {
    let g = &entry.group;
    let mut checks = Vec::new();
    let mut push = |field: &str, expected: Option<String>, actual: String| {
        checks.push(Check {
            field: field.to_string(),
            expected: expected.unwrap_or_else(|| "<missing>".into()),
            actual,
        });
    };
    let m = &entry.meta;
    push("order", m.get("order").map(str::to_string), g.order().to_string());
    push("degree", m.get("degree").map(str::to_string), g.degree().to_string());
    let transitive = predicates::is_transitive(g);
    let flag = |k: &str| m.flag(k).map(|b| b.map(|b| b.to_string()));
    push("transitive", flag("transitive")?, transitive.to_string());
    push("primitive", flag("primitive")?, predicates::is_primitive(g).to_string());
    push(
        "two_transitive",
        flag("two_transitive")?,
        predicates::is_2transitive(g).to_string(),
    );
    for s in &entry.subgroups {
        let inside = s.group.is_subgroup_of(g);
        push(&format!("subgroup.{}", s.key), Some("true".into()), inside.to_string());
        if !inside {
            continue;
        }
        if s.group.order() == g.order() {
            continue;
        }
        let k = derangements::kappa(g, &s.group)?;
        // Jordan: a proper subgroup misses some class.
        push(&format!("jordan.{}", s.key), Some("true".into()), (k >= 1).to_string());
        if let Some(e) = s.expected_kappa {
            push(&format!("expected_kappa.{}", s.key), Some(e.to_string()), k.to_string());
        }
    }
    if let Some(phi) = entry.expected_phi()? {
        let maxes: Vec<PermGroup> = entry.maximals()?.iter().map(|s| s.group.clone()).collect();
        let (v, _) = derangements::phi_min(g, &maxes)?;
        push("phi", Some(phi.to_string()), v.to_string());
    }
    Ok(ValidationReport { name: entry.name.clone(), checks })
}

pub fn validate(entry: &Entry) -> Result<ValidationReport> {
    check(entry)?.into_result()
}

/// What [`generate`] writes for one entry.
pub struct Source {
    pub name: String,
    pub description: String,
    pub gens: Gens,
    pub subgroups: Vec<(String, Vec<Perm>)>,
    /// Expected `κ` per subgroup label, taken from the literature.
    pub kappa: Vec<(String, usize)>,
    pub maximals: Vec<String>,
    pub phi: Option<usize>,
    pub tier: Tier,
    pub alias: Option<String>,
}

impl Source {
    fn new(name: &str, description: &str, gens: Gens) -> Source {
        Source {
            name: name.into(),
            description: description.into(),
            gens,
            subgroups: Vec::new(),
            kappa: Vec::new(),
            maximals: Vec::new(),
            phi: None,
            tier: Tier::Core,
            alias: None,
        }
    }

    fn perm(name: &str, description: &str, g: &PermGroup) -> Source {
        Source::new(
            name,
            description,
            Gens::Perm { degree: g.degree(), gens: reduce_generators(g.degree(), g.generators()) },
        )
    }

    fn affine(name: &str, description: &str, m: MatrixGenSet, kappa: usize) -> Source {
        let mut s = Source::new(name, description, Gens::Mat(m));
        s.kappa.push(("H".into(), kappa));
        s
    }

    fn sub(mut self, label: &str, h: &PermGroup, kappa: Option<usize>) -> Source {
        self.subgroups
            .push((label.into(), reduce_generators(h.degree(), h.generators())));
        if let Some(k) = kappa {
            self.kappa.push((label.into(), k));
        }
        self
    }

    fn maximals(mut self, labels: &[&str], phi: Option<usize>) -> Source {
        self.maximals = labels.iter().map(|s| s.to_string()).collect();
        self.phi = phi;
        self
    }

    fn alias(mut self, a: &str) -> Source {
        self.alias = Some(a.into());
        self
    }

    fn tier(mut self, t: Tier) -> Source {
        self.tier = t;
        self
    }

    /// Writes the entry, computing the structural metadata from the
    /// generators.
    pub fn write(&self, root: &Path) -> Result<()> {
        let dir = root.join(&self.name);
        fs::create_dir_all(&dir)?;
        for old in fs::read_dir(&dir)? {
            let p = old?.path();
            if p.extension().is_some_and(|e| e == "gens" || e == "txt") {
                fs::remove_file(p)?;
            }
        }
        let g = self.gens.group()?;
        let mut meta = Meta::default();
        meta.set("kind", match self.gens {
            Gens::Perm { .. } => Kind::Perm,
            Gens::Mat(_) => Kind::Affine,
        }
        .as_str());
        meta.set("description", &self.description);
        meta.set("order", g.order());
        meta.set("degree", g.degree());
        meta.set("transitive", predicates::is_transitive(&g));
        meta.set("primitive", predicates::is_primitive(&g));
        meta.set("two_transitive", predicates::is_2transitive(&g));
        if self.tier == Tier::Extended {
            meta.set("tier", "extended");
        }
        if let Some(a) = &self.alias {
            meta.set("alias", a);
        }
        let mut keys = Vec::new();
        if matches!(self.gens, Gens::Mat(_)) {
            keys.push("H".to_string());
        }
        for (label, gens) in &self.subgroups {
            let key = sub_key(label);
            if key != *label {
                meta.set(&format!("label.{key}"), label);
            }
            let file = Gens::Perm { degree: g.degree(), gens: gens.clone() };
            fs::write(dir.join(format!("sub_{key}.gens")), file.render())?;
            keys.push(key);
        }
        meta.set("subgroups", keys.join(", "));
        for (label, k) in &self.kappa {
            meta.set(&format!("expected_kappa.{}", sub_key(label)), k);
        }
        if !self.maximals.is_empty() {
            let m: Vec<String> = self.maximals.iter().map(|l| sub_key(l)).collect();
            meta.set("maximals", m.join(", "));
        }
        if let Some(phi) = self.phi {
            meta.set("phi", phi);
        }
        fs::write(dir.join("group.gens"), self.gens.render())?;
        fs::write(dir.join("meta.txt"), meta.render())?;
        Ok(())
    }
}

type Builder = fn() -> Result<Source>;

fn named(n: super::almost_simple::Named, description: &str, kappa: &[usize]) -> Source {
    let mut s = Source::perm(&n.name, description, &n.group);
    for (i, (label, h)) in n.subgroups.iter().enumerate() {
        s = s.sub(label, h, kappa.get(i).copied());
    }
    s
}

fn all_labels(n: &super::almost_simple::Named) -> Vec<String> {
    n.subgroups.iter().map(|x| x.0.clone()).collect()
}

fn point_stab(name: &str, description: &str, g: &PermGroup, kappa: Option<usize>) -> Result<Source> {
    Ok(Source::perm(name, description, g).sub("H", &g.stabilizer(0)?, kappa))
}

/// Every built-in entry, by name. Expected values of `κ` and `Φ` are the
/// published ones; structural metadata are recomputed when writing.
pub fn builtin() -> Vec<(&'static str, Builder)> {
    use super::affine::*;
    use super::almost_simple as al;
    use super::{hering, two_class_affine};
    let list: Vec<(&'static str, Builder)> = vec![
        ("A5", || Ok(named(al::a5()?, "A5 on 5 points", &[1, 2, 2, 2]).maximals(&["D10", "D6", "A4"], None))),
        ("S5", || Ok(named(al::s5()?, "S5 on 5 points", &[2, 2, 3]).maximals(&["D12", "S4", "5:4"], None))),
        ("A6", || Ok(named(al::a6()?, "A6 on 6 points", &[2, 2, 3]))),
        ("S6", || Ok(named(al::s6()?, "S6 on 6 points", &[2, 3, 4]))),
        ("M10", || Ok(named(al::m10()?, "M10 on 10 points", &[2, 3, 4]).maximals(&["[16]", "3^2:Q8", "5:4"], None))),
        ("PGL2_9", || Ok(named(al::pgl2_9()?, "PGL2(9) on the projective line", &[]).maximals(&["3^2:8", "D20", "D16"], Some(4)))),
        ("Aut_A6", || Ok(named(al::aut_a6()?, "PGammaL2(9) on the projective line", &[]).maximals(&["3^2:[2^4]", "10:4", "[2^5]"], Some(4)))),
        ("L2_7", || Ok(named(al::l2_7()?, "L2(7) on the Fano plane", &[2, 2]))),
        ("L2_8_3", || Ok(named(al::l2_8_3()?, "L2(8):3 on the projective line", &[1]))),
        ("L3_4", || Ok(named(al::l3_4()?, "L3(4) on the projective plane", &[2]))),
        ("Sz8_3", || Ok(named(al::sz8_3()?, "Sz(8):3 on the Suzuki ovoid", &[2]))),
        ("M11", || {
            let n = al::m11()?;
            let labels = all_labels(&n);
            let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
            Ok(named(n.clone(), "M11 on 11 points", &[3, 3, 3, 4, 3]).maximals(&refs, Some(3)))
        }),
        ("M11_12", || point_stab("M11_12", "M11 on the 12 cosets of L2(11)", &al::m11_on_12()?, None)),
        ("AGL1_9_on_12", || {
            let (g, h) = al::agl1_9_on_agl1_3()?;
            let c = crate::engine::CosetAction::new(&g, &h)?;
            point_stab("AGL1_9_on_12", "AGL1(9) on the 12 cosets of AGL1(3)", c.image(), None)
        }),
        ("A7", || an(7, true, 3)),
        ("S7", || an(7, false, 4)),
        ("A8", || an(8, true, 5)),
        ("S8", || an(8, false, 5)),
        ("D10", || {
            let g = super::dihedral(5)?;
            let z5 = crate::engine::sylow_subgroup(&g, 5)?;
            Ok(Source::perm("D10", "D10 on 5 points", &g).sub("H", &g.stabilizer(0)?, Some(2)).sub("Z5", &z5, Some(1)))
        }),
        ("AGL1_7", || point_stab("AGL1_7", "AGL1(7)", &agl1(7, 1)?, Some(1))),
        ("AGL1_8", || point_stab("AGL1_8", "AGL1(8)", &agl1(2, 3)?, Some(1))),
        ("AGL1_9", || {
            let (g, h) = al::agl1_9_on_agl1_3()?;
            Ok(Source::perm("AGL1_9", "AGL1(9) on 9 points", &g).sub("H", &g.stabilizer(0)?, Some(1)).sub("AGL1_3", &h, None))
        }),
        ("F13_6", || point_stab("F13_6", "13:6, index 2 in AGL1(13)", &frobenius_half(13, 1)?, Some(2))),
        ("GL1ext_9", || point_stab("GL1ext_9", "9:(8.2) inside AGammaL1(9)", &gl1_ext2(3, 2)?, Some(2))),
        ("GL1ext_16", || point_stab("GL1ext_16", "16:(15.2) inside AGammaL1(16)", &gl1_ext2(2, 4)?, Some(2))),
        ("GL1ext_25", || point_stab("GL1ext_25", "25:(24.2) inside AGammaL1(25)", &gl1_ext2(5, 2)?, Some(2))),
        ("GL1ext_49", || point_stab("GL1ext_49", "49:(48.2) inside AGammaL1(49)", &gl1_ext2(7, 2)?, Some(2))),
        ("SL2aff_2", || point_stab("SL2aff_2", "2^2:SL2(2) on the affine plane", &sl2_affine_char2(1)?, Some(2))),
        ("SL2aff_4", || point_stab("SL2aff_4", "4^2:SL2(4) on the affine plane", &sl2_affine_char2(2)?, None)),
        ("SL2aff_8", || point_stab("SL2aff_8", "8^2:SL2(8) on the affine plane", &sl2_affine_char2(3)?, None)),
        ("P_4_2", || Ok(Source::affine("P_4_2", "2^2:S3 = S4", two_class_affine::p4_2()?, 2).alias("P(4,2)"))),
        ("P_25_17", || Ok(Source::affine("P_25_17", "5^2:(2^(1+2).6)", two_class_affine::p25_17()?, 2).alias("P(5^2,17)"))),
        ("P_121_42", || Ok(Source::affine("P_121_42", "11^2:(2^(1+2).[30])", two_class_affine::p121_42()?, 2).alias("P(11^2,42)"))),
        ("P_81_70", || Ok(Source::affine("P_81_70", "3^4:((2xQ8):2):5", two_class_affine::p81_70()?, 2).alias("P(3^4,70)"))),
        ("P_841_104", || Ok(Source::affine("P_841_104", "29^2:(7x2.SL2(5))", two_class_affine::p841_104()?, 2).alias("P(29^2,104)"))),
        ("Hering_SL3_2", || Ok(Source::affine("Hering_SL3_2", "2^3:SL3(2)", hering::sl3_2()?, 5))),
        ("Hering_SL3_3", || Ok(Source::affine("Hering_SL3_3", "3^3:SL3(3)", hering::sl3_3()?, 10))),
        ("Hering_GL3_3", || Ok(Source::affine("Hering_GL3_3", "3^3:GL3(3)", hering::gl3_3()?, 11))),
        ("Hering_Sp4_2", || Ok(Source::affine("Hering_Sp4_2", "2^4:Sp4(2)", hering::sp4(2)?, 10))),
        ("Hering_A6", || Ok(Source::affine("Hering_A6", "2^4:A6", hering::a6_in_sp4_2()?, 5))),
        ("Hering_A7", || Ok(Source::affine("Hering_A7", "2^4:A7", hering::a7_in_gl4_2()?, 6))),
        ("Hering_Sp4_3", || Ok(Source::affine("Hering_Sp4_3", "3^4:Sp4(3)", hering::sp4(3)?, 24))),
        ("Hering_Sp4_3.2", || {
            Ok(Source::affine("Hering_Sp4_3.2", "3^4:Sp4(3).2", hering::sp4_3_ext()?, 18).tier(Tier::Extended))
        }),
        ("Hering_G2_2", || Ok(Source::affine("Hering_G2_2", "2^6:G2(2)", hering::g2_2()?, 14))),
        ("Hering_G2_2d", || Ok(Source::affine("Hering_G2_2d", "2^6:G2(2)'", hering::g2_2_derived()?, 10))),
        ("Hering_SL2_13", || Ok(Source::affine("Hering_SL2_13", "3^6:SL2(13)", hering::sl2_13_in_gl6_3()?, 3))),
    ];
    list
}

fn an(n: usize, alt: bool, phi: usize) -> Result<Source> {
    let m = super::almost_simple::an_sn_maximals(n, alt)?;
    let labels = all_labels(&m);
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let desc = format!("{} on {n} points", m.name);
    Ok(named(m.clone(), &desc, &[]).maximals(&refs, Some(phi)))
}

/// Writes the built-in entries (all of them, or those named in `only`).
/// Returns the names written.
pub fn generate(root: &Path, only: &[String]) -> Result<Vec<String>> {
    let mut written = Vec::new();
    for (name, build) in builtin() {
        if !only.is_empty() && !only.iter().any(|o| o == name) {
            continue;
        }
        let mut s = build()?;
        s.name = name.to_string();
        s.write(root)?;
        written.push(name.to_string());
    }
    if !only.is_empty() && written.len() != only.len() {
        let missing: Vec<&String> = only.iter().filter(|o| !written.contains(o)).collect();
        return Err(Error::Unresolved(format!("no built-in entries {missing:?}")));
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gens_roundtrip() {
        let p = Gens::Perm {
            degree: 5,
            gens: vec![Perm::parse("(1,2,3,4,5)", 5).unwrap(), Perm::parse("()", 5).unwrap()],
        };
        assert_eq!(Gens::parse(&p.render()).unwrap(), p);
        let m = Gens::Mat(super::super::two_class_affine::p4_2().unwrap());
        assert_eq!(Gens::parse(&m.render()).unwrap(), m);
        assert!(Gens::parse("perm 3\n(1,4)\n").is_err());
        assert!(Gens::parse("mat 2 1 2\n1 1\n").is_err());
        assert!(Gens::parse("mat 2 1 2\n1 1\n1 1\n").is_err());
        assert!(Gens::parse("grp 3").is_err());
    }

    #[test]
    fn keys() {
        assert_eq!(sub_key("3^2:4"), "3^2_4");
        assert_eq!(sub_key("[16]"), "16");
        assert_eq!(sub_key("(A4x3):2"), "A4x3_2");
    }
}
