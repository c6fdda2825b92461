//! Plain-text pictures: fillings over their basement, diagrams as grids,
//! tabloids by snake label, and aligned expansion listings.

use std::fmt::Write;

use crate::bases::BasisExpansion;
use crate::diagram::{Cell, Diagram};
use crate::fillings::Filling;
use crate::frsk::TableauPair;
use crate::schubert::SchubertExpansion;
use crate::snakes::SnakeTabloid;

fn entry_width(f: &Filling) -> usize {
    f.reading().iter().map(|v| v.to_string().len()).max().unwrap_or(1)
}

/// Top row first; each line is `row | entries`, the column left of the bar
/// standing for the basement.
pub fn render_filling(f: &Filling) -> String {
    let w = entry_width(f);
    let label = f.num_rows().max(1).to_string().len();
    let mut out = String::new();
    for r in (1..=f.num_rows()).rev() {
        let cells: Vec<String> = f.row(r).iter().map(|v| format!("{v:>w$}")).collect();
        let line = format!("{r:>label$} | {}", cells.join(" "));
        let _ = writeln!(out, "{}", line.trim_end());
    }
    let width = f.num_columns() as usize * (w + 1);
    let _ = writeln!(out, "{} +{}", " ".repeat(label), "-".repeat(width.max(1)));
    out
}

/// French tableau: longest row at the bottom, no basement.
pub fn render_tableau(f: &Filling) -> String {
    let w = entry_width(f);
    let mut out = String::new();
    for r in (1..=f.num_rows()).rev() {
        let cells: Vec<String> = f.row(r).iter().map(|v| format!("{v:>w$}")).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

pub fn render_pair(p: &TableauPair, with_basement: bool) -> String {
    let draw = if with_basement { render_filling } else { render_tableau };
    format!("{}\n{}", draw(&p.insertion), draw(&p.recording))
}

/// `#` for a cell and `.` for an empty box, top row first.
pub fn render_diagram(d: &Diagram) -> String {
    let label = d.max_row().max(1).to_string().len();
    let mut out = String::new();
    for r in (1..=d.max_row()).rev() {
        let row: String = (1..=d.max_col()).map(|c| if d.contains(Cell::new(c, r)) { '#' } else { '.' }).collect();
        let _ = writeln!(out, "{r:>label$} {row}");
    }
    out
}

/// Every cell carries the anchor row of its snake; weight and sign follow.
pub fn render_tabloid(t: &SnakeTabloid) -> String {
    format!("{}weight {}  sign {:+}\n", render_filling(&t.labels()), t.weight(), t.sign())
}

pub fn render_expansion(e: &BasisExpansion, n: usize) -> String {
    let rows: Vec<(String, String)> =
        e.sorted_terms().into_iter().map(|(a, c)| (c.to_string(), format!("{}{}", e.basis, a.pad_to(n)))).collect();
    aligned(rows)
}

pub fn render_schubert(e: &SchubertExpansion) -> String {
    aligned(e.terms().iter().map(|(w, c)| (c.to_string(), format!("S{w}"))).collect())
}

fn aligned(rows: Vec<(String, String)>) -> String {
    if rows.is_empty() {
        return "0\n".to_string();
    }
    let w = rows.iter().map(|(c, _)| c.len()).max().unwrap_or(1);
    rows.into_iter().map(|(c, name)| format!("{c:>w$}  {name}\n")).collect()
}
