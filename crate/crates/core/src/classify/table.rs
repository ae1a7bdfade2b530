//! The classification tables with each cell tagged by the checks behind it.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{catalog, verify_type, Description, HilbertDimension, TypeEntry, TypeLabel, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableScope {
    /// Types of degree at most ten.
    UpToDegreeTen,
    Scrolls,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellStatus {
    /// A check covering the cell ran and passed.
    Verified,
    /// A check covering the cell failed.
    Errata,
    /// Descriptive data with no check behind it.
    Recorded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub text: String,
    pub status: CellStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub label: TypeLabel,
    pub cells: Vec<Cell>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub title: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<TableRow>,
}

pub const COLUMNS: [&str; 10] = ["type", "n", "d", "g", "q", "p_g", "χ_S", "presentation", "Hilbert scheme", "description"];

fn status(report: &VerificationReport, names: &[&str]) -> CellStatus {
    let relevant: Vec<_> = report.checks.iter().filter(|c| names.contains(&c.name)).collect();
    if relevant.iter().any(|c| !c.passed) {
        CellStatus::Errata
    } else if relevant.is_empty() {
        CellStatus::Recorded
    } else {
        CellStatus::Verified
    }
}

/// `P(n;i,j)` or `Q(n;i)` for a complete intersection with the quadric removed.
pub fn ci_dimension_symbol(degrees: [i64; 3]) -> String {
    let mut rest = degrees.to_vec();
    if let Some(p) = rest.iter().position(|&x| x == 2) {
        rest.remove(p);
    }
    rest.sort_unstable();
    if rest[0] == rest[1] {
        alloc::format!("Q(n;{})", rest[0])
    } else {
        alloc::format!("P(n;{},{})", rest[0], rest[1])
    }
}

fn hilbert_text(e: &TypeEntry) -> String {
    let base = match (&e.hilbert, &e.description) {
        (HilbertDimension::CompleteIntersection, Description::CompleteIntersection(deg)) => ci_dimension_symbol(*deg),
        (HilbertDimension::Number(v), _) => v.to_string(),
        _ => String::from("?"),
    };
    if e.components > 1 {
        alloc::format!("{base} ({} components)", e.components)
    } else {
        base
    }
}

fn row(e: &TypeEntry) -> TableRow {
    let r = verify_type(e);
    let genus_checks = ["sectional genus", "scroll invariants", "presentation invariants", "Segre-product invariants"];
    let surface_checks = ["complete-intersection invariants", "scroll invariants", "presentation invariants", "Segre-product invariants"];
    let cell = |text: String, names: &[&str]| Cell { text, status: status(&r, names) };
    let presentations: Vec<String> = e.presentations.iter().map(|p| p.to_string()).collect();
    TableRow {
        label: e.label,
        cells: alloc::vec![
            cell(e.label.to_string(), &[]),
            cell(e.ambient.to_string(), &[]),
            cell(e.d.to_string(), &["degree parity", "presentation degree", "fiber cut", "scroll invariants"]),
            cell(e.g.to_string(), &genus_checks),
            cell(e.q.to_string(), &surface_checks),
            cell(e.p_g.to_string(), &surface_checks),
            cell(e.chi_s().to_string(), &surface_checks),
            cell(presentations.join("; "), &["presentation degree", "presentation rank"]),
            cell(hilbert_text(e), &["Hilbert-scheme dimension"]),
            cell(e.description.to_string(), &[]),
        ],
    }
}

pub fn classification_table(scope: TableScope) -> Table {
    let (title, keep): (&'static str, fn(&TypeEntry) -> bool) = match scope {
        TableScope::UpToDegreeTen => ("codimension-two subvarieties of degree at most 10", |e| e.d <= 10),
        TableScope::Scrolls => ("codimension-two scrolls", TypeEntry::is_scroll),
    };
    Table { title, columns: COLUMNS.to_vec(), rows: catalog().iter().filter(|e| keep(e)).map(row).collect() }
}
