//! Betti-table emitter for the grid families, cell-for-cell comparable
//! with the published tables.

use serde::Serialize;

use crate::cutgen::total_cut_complex;
use crate::error::{Error, Result};
use crate::graph::{family, Family};
use crate::homology::betti_with_cap;
use crate::par::{self, ExecMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFamily {
    G2n,
    G3n,
    G4n,
}

impl TableFamily {
    pub fn parse(s: &str) -> Result<TableFamily> {
        match s {
            "G2n" | "g2n" => Ok(TableFamily::G2n),
            "G3n" | "g3n" => Ok(TableFamily::G3n),
            "G4n" | "g4n" => Ok(TableFamily::G4n),
            other => Err(Error::UnknownTableFamily(other.to_string())),
        }
    }

    pub fn rows_m(self) -> usize {
        match self {
            TableFamily::G2n => 2,
            TableFamily::G3n => 3,
            TableFamily::G4n => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TableFamily::G2n => "G2n",
            TableFamily::G3n => "G3n",
            TableFamily::G4n => "G4n",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BettiTable {
    pub family: String,
    pub m: usize,
    pub k_values: Vec<usize>,
    pub n_values: Vec<usize>,
    /// cells[i][j] = entry for k_values[i], n_values[j].
    pub cells: Vec<Vec<String>>,
}

/// One table cell: the unique nonzero reduced Betti number as `β_d=v`,
/// `void`, `β_i=0, i ≥ 0` for a nonvoid complex with vanishing reduced
/// homology, or `skipped(cap)` past the face cap.
fn cell(m: usize, n: usize, k: usize, face_cap: u64) -> String {
    let g = family(Family::Grid(m, n)).expect("m, n >= 1");
    let c = match total_cut_complex(&g, k) {
        Ok(c) => c,
        Err(e) => return format!("error({e})"),
    };
    if c.is_void() {
        return "void".into();
    }
    let report = match betti_with_cap(&c, face_cap) {
        Ok(r) => r,
        Err(Error::FaceCapExceeded { .. }) => return "skipped(cap)".into(),
        Err(e) => return format!("error({e})"),
    };
    let nz = report.nonzero();
    match nz.as_slice() {
        [] => "β_i=0, i ≥ 0".into(),
        [(d, v)] => format!("β_{d}={v}"),
        many => many
            .iter()
            .map(|(d, v)| format!("β_{d}={v}"))
            .collect::<Vec<_>>()
            .join(";"),
    }
}

pub fn emit_table(
    fam: TableFamily,
    k_max: usize,
    n_max: usize,
    face_cap: u64,
) -> Result<BettiTable> {
    emit_table_with_mode(fam, k_max, n_max, face_cap, ExecMode::default())
}

pub fn emit_table_with_mode(
    fam: TableFamily,
    k_max: usize,
    n_max: usize,
    face_cap: u64,
    mode: ExecMode,
) -> Result<BettiTable> {
    let m = fam.rows_m();
    let k_values: Vec<usize> = (1..=k_max).collect();
    let n_values: Vec<usize> = (m..=n_max.max(m)).collect();
    let mut cells_flat: Vec<(usize, usize)> = Vec::new();
    for &k in &k_values {
        for &n in &n_values {
            cells_flat.push((k, n));
        }
    }
    let computed = par::map(mode, cells_flat, |(k, n)| cell(m, n, k, face_cap));
    let cells = computed
        .chunks(n_values.len())
        .map(|row| row.to_vec())
        .collect();
    Ok(BettiTable { family: fam.name().to_string(), m, k_values, n_values, cells })
}

impl BettiTable {
    pub fn get(&self, k: usize, n: usize) -> Option<&str> {
        let i = self.k_values.iter().position(|&x| x == k)?;
        let j = self.n_values.iter().position(|&x| x == n)?;
        Some(&self.cells[i][j])
    }

    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = vec![3];
        for (j, n) in self.n_values.iter().enumerate() {
            let mut w = n.to_string().len();
            for row in &self.cells {
                w = w.max(row[j].chars().count());
            }
            widths.push(w);
        }
        let mut out = String::new();
        out.push_str(&format!("{:>w$}", "k\\n", w = widths[0]));
        for (j, n) in self.n_values.iter().enumerate() {
            out.push_str(&format!("  {:>w$}", n, w = widths[j + 1]));
        }
        out.push('\n');
        for (i, k) in self.k_values.iter().enumerate() {
            out.push_str(&format!("{:>w$}", k, w = widths[0]));
            for (j, cell) in self.cells[i].iter().enumerate() {
                let pad = widths[j + 1].saturating_sub(cell.chars().count());
                out.push_str("  ");
                out.push_str(&" ".repeat(pad));
                out.push_str(cell);
            }
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("k");
        for n in &self.n_values {
            out.push_str(&format!(",{n}"));
        }
        out.push('\n');
        for (i, k) in self.k_values.iter().enumerate() {
            out.push_str(&k.to_string());
            for cell in &self.cells[i] {
                out.push(',');
                if cell.contains(',') {
                    out.push_str(&format!("\"{cell}\""));
                } else {
                    out.push_str(cell);
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_md(&self) -> String {
        let mut out = String::from("| k \\ n |");
        for n in &self.n_values {
            out.push_str(&format!(" {n} |"));
        }
        out.push('\n');
        out.push_str("|---|");
        for _ in &self.n_values {
            out.push_str("---|");
        }
        out.push('\n');
        for (i, k) in self.k_values.iter().enumerate() {
            out.push_str(&format!("| {k} |"));
            for cell in &self.cells[i] {
                out.push_str(&format!(" {cell} |"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }
}
