//! Golden tables of `κ` and `Φ` values and their regeneration from the
//! catalog.

use crate::constructors::catalog::{Catalog, Entry};
use crate::derangements;
use crate::engine::{PermGroup, Tier};
use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, Mutex};

/// Loads catalog entries once and shares them, so class tables computed
/// for one row are reused by the next.
pub struct Loader {
    pub catalog: Catalog,
    pub tier: Tier,
    cache: Mutex<HashMap<String, Arc<Entry>>>,
}

impl Loader {
    pub fn new(catalog: Catalog, tier: Tier) -> Loader {
        Loader { catalog, tier, cache: Mutex::new(HashMap::new()) }
    }

    pub fn get(&self, name: &str) -> Result<Arc<Entry>> {
        if let Some(e) = self.cache.lock().expect("cache lock").get(name) {
            return Ok(e.clone());
        }
        let e = Arc::new(self.catalog.load(name, self.tier)?);
        self.cache.lock().expect("cache lock").insert(name.to_string(), e.clone());
        Ok(e)
    }

    /// `(G, H)` for a reference `group/sub`.
    pub fn pair(&self, group: &str, sub: &str) -> Result<(PermGroup, PermGroup)> {
        let e = self.get(group)?;
        let h = e
            .subgroup(sub)
            .ok_or_else(|| Error::Unresolved(format!("{group} has no subgroup {sub}")))?;
        Ok((e.group.clone(), h.group.clone()))
    }

    pub fn all(&self) -> Result<Vec<Arc<Entry>>> {
        self.catalog.names()?.iter().map(|n| self.get(n)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Quantity {
    Kappa { group: &'static str, sub: &'static str },
    Phi { group: &'static str },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GoldenRow {
    pub label: &'static str,
    pub quantity: Quantity,
    pub expected: usize,
}

pub const TABLE_IDS: [&str; 7] = [
    "kappa_table1",
    "affine_table2",
    "an_table4",
    "hering_eliminations",
    "m11_row",
    "phi_small",
    "a6_family",
];

const fn k(label: &'static str, group: &'static str, sub: &'static str, expected: usize) -> GoldenRow {
    GoldenRow { label, quantity: Quantity::Kappa { group, sub }, expected }
}

const fn phi(label: &'static str, group: &'static str, expected: usize) -> GoldenRow {
    GoldenRow { label, quantity: Quantity::Phi { group }, expected }
}

const KAPPA_TABLE1: &[GoldenRow] = &[
    k("(A5, D10)", "A5", "D10", 1),
    k("(L2(8):3, D18:3)", "L2_8_3", "D18:3", 1),
    k("(A5, D6)", "A5", "D6", 2),
    k("(A5, A4)", "A5", "A4", 2),
    k("(S5, D12)", "S5", "D12", 2),
    k("(S5, S4)", "S5", "S4", 2),
    k("(A6, 3^2:4)", "A6", "3^2:4", 2),
    k("(A6, A5)", "A6", "A5", 2),
    k("(S6, 3^2:D8)", "S6", "3^2:D8", 2),
    k("(M10, [16])", "M10", "[16]", 2),
    k("(L2(7), 7:3)", "L2_7", "7:3", 2),
    k("(L2(7), S4)", "L2_7", "S4", 2),
    k("(L3(4), 2^4:A5)", "L3_4", "2^4:A5", 2),
    k("(2B2(8):3, 5:4x3)", "Sz8_3", "5:4x3", 2),
];

const AFFINE_TABLE2: &[GoldenRow] = &[
    k("2^2:S3 = S4, P(4,2)", "P_4_2", "H", 2),
    k("5^2:(2^(1+2).6), P(5^2,17)", "P_25_17", "H", 2),
    k("11^2:(2^(1+2).[30]), P(11^2,42)", "P_121_42", "H", 2),
    k("3^4:((2xQ8):2):5, P(3^4,70)", "P_81_70", "H", 2),
    k("29^2:(7x2.SL2(5)), P(29^2,104)", "P_841_104", "H", 2),
];

const AN_TABLE4: &[GoldenRow] = &[
    k("(A5, D10)", "A5", "D10", 1),
    k("(A5, D6)", "A5", "D6", 2),
    k("(A5, A4)", "A5", "A4", 2),
    k("(S5, D12)", "S5", "D12", 2),
    k("(S5, S4)", "S5", "S4", 2),
    k("(A6, 3^2:4)", "A6", "3^2:4", 2),
    k("(A6, A5)", "A6", "A5", 2),
    k("(S6, 3^2:D8)", "S6", "3^2:D8", 2),
    k("(S5, 5:4)", "S5", "5:4", 3),
    k("(A6, S4)", "A6", "S4", 3),
    k("(S6, S4x2)", "S6", "S4x2", 3),
    k("(S6, S5)", "S6", "S5", 4),
];

const HERING: &[GoldenRow] = &[
    k("2^3:SL3(2)", "Hering_SL3_2", "H", 5),
    k("3^3:SL3(3)", "Hering_SL3_3", "H", 10),
    k("3^3:GL3(3)", "Hering_GL3_3", "H", 11),
    k("2^4:Sp4(2)", "Hering_Sp4_2", "H", 10),
    k("3^4:Sp4(3)", "Hering_Sp4_3", "H", 24),
    k("3^4:Sp4(3).2", "Hering_Sp4_3.2", "H", 18),
    k("2^6:G2(2)'", "Hering_G2_2d", "H", 10),
    k("2^6:G2(2)", "Hering_G2_2", "H", 14),
    k("2^4:A6", "Hering_A6", "H", 5),
    k("2^4:A7", "Hering_A7", "H", 6),
    k("3^6:SL2(13)", "Hering_SL2_13", "H", 3),
];

const M11_ROW: &[GoldenRow] = &[
    k("M10", "M11", "M10", 3),
    k("L2(11)", "M11", "L2_11", 3),
    k("M9.2", "M11", "M9.2", 3),
    k("S5", "M11", "S5", 4),
    k("2.S4", "M11", "2.S4", 3),
    phi("Phi(M11)", "M11", 3),
];

const PHI_SMALL: &[GoldenRow] = &[
    phi("Phi(A7)", "A7", 3),
    phi("Phi(S7)", "S7", 4),
    phi("Phi(A8)", "A8", 5),
    phi("Phi(S8)", "S8", 5),
];

const A6_FAMILY: &[GoldenRow] = &[
    phi("Phi(PGL2(9))", "PGL2_9", 4),
    phi("Phi(Aut(A6))", "Aut_A6", 4),
    k("(M10, [16])", "M10", "[16]", 2),
    k("(M10, 3^2:Q8)", "M10", "3^2:Q8", 3),
    k("(M10, 5:4)", "M10", "5:4", 4),
];

pub fn golden(id: &str) -> Result<&'static [GoldenRow]> {
    Ok(match id {
        "kappa_table1" => KAPPA_TABLE1,
        "affine_table2" => AFFINE_TABLE2,
        "an_table4" => AN_TABLE4,
        "hering_eliminations" => HERING,
        "m11_row" => M11_ROW,
        "phi_small" => PHI_SMALL,
        "a6_family" => A6_FAMILY,
        _ => return Err(Error::Unresolved(format!("unknown table {id:?}; known: {}", TABLE_IDS.join(", ")))),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowResult {
    pub label: String,
    pub expected: usize,
    pub actual: Option<usize>,
    /// Set when the row could not be computed.
    pub error: Option<String>,
}

impl RowResult {
    pub fn ok(&self) -> bool {
        self.actual == Some(self.expected)
    }
}

/// Computes one row. Errors are kept in the row so a table always renders;
/// [`Error::CapExceeded`] is passed through for the caller's exit code.
pub fn evaluate(loader: &Loader, row: &GoldenRow) -> Result<RowResult> {
    let value = match row.quantity {
        Quantity::Kappa { group, sub } => loader
            .pair(group, sub)
            .and_then(|(g, h)| derangements::kappa(&g, &h)),
        Quantity::Phi { group } => loader.get(group).and_then(|e| {
            let maxes: Vec<PermGroup> = e.maximals()?.iter().map(|s| s.group.clone()).collect();
            Ok(derangements::phi_min(&e.group, &maxes)?.0)
        }),
    };
    match value {
        Ok(v) => Ok(RowResult { label: row.label.into(), expected: row.expected, actual: Some(v), error: None }),
        Err(e @ Error::CapExceeded { .. }) => Err(e),
        Err(e) => Ok(RowResult {
            label: row.label.into(),
            expected: row.expected,
            actual: None,
            error: Some(e.to_string()),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableResult {
    pub id: String,
    pub rows: Vec<RowResult>,
}

impl TableResult {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(RowResult::ok)
    }

    /// Cell-level differences against the golden copy.
    pub fn diff(&self) -> Vec<String> {
        self.rows
            .iter()
            .filter(|r| !r.ok())
            .map(|r| match (&r.actual, &r.error) {
                (_, Some(e)) => format!("{}: expected {}, error: {e}", r.label, r.expected),
                (Some(a), None) => format!("{}: expected {}, got {a}", r.label, r.expected),
                (None, None) => format!("{}: expected {}, no value", r.label, r.expected),
            })
            .collect()
    }

    pub fn to_text(&self) -> String {
        let w = self.rows.iter().map(|r| r.label.len()).max().unwrap_or(5).max(5);
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.id);
        let _ = writeln!(s, "{:<w$}  {:>8}  {:>8}  status", "entry", "expected", "actual");
        for r in &self.rows {
            let actual = r.actual.map_or("-".to_string(), |a| a.to_string());
            let status = if r.ok() { "ok" } else { "MISMATCH" };
            let _ = writeln!(s, "{:<w$}  {:>8}  {:>8}  {status}", r.label, r.expected, actual);
        }
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("table,entry,expected,actual,ok\n");
        for r in &self.rows {
            let actual = r.actual.map_or(String::new(), |a| a.to_string());
            let _ = writeln!(s, "{},\"{}\",{},{},{}", self.id, r.label, r.expected, actual, r.ok());
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serialises")
    }
}

pub fn regenerate(id: &str, loader: &Loader) -> Result<TableResult> {
    let rows = golden(id)?
        .iter()
        .map(|r| evaluate(loader, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(TableResult { id: id.to_string(), rows })
}
