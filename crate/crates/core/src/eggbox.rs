//! Egg-box diagrams: one grid per D-class with R-classes as rows,
//! L-classes as columns and H-classes as cells, group cells shaded.
//! Rendered as DOT, ASCII or JSON.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::semigroup::GreenStructure;

pub const SCHEMA_VERSION: u32 = 1;

/// Colour tag for a cell, taken from the first coordinate in products
/// over `{0,∞}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tint {
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "inf")]
    Inf,
    #[serde(rename = "none")]
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub labels: Vec<String>,
    pub group: bool,
    pub tint: Tint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DClassBox {
    pub id: usize,
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<Vec<Cell>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EggBox {
    pub schema_version: u32,
    pub dclasses: Vec<DClassBox>,
    /// Cover pairs `[lower, upper]` of the J-order on D-class ids.
    pub hasse: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dot,
    Ascii,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dot" => Ok(Format::Dot),
            "ascii" => Ok(Format::Ascii),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?} (expected dot, ascii or json)")),
        }
    }
}

/// Lays out `g`. D-classes, rows and columns are ordered by their least
/// element; labels inside a cell are in element order.
pub fn layout<L, C>(g: &GreenStructure, labeler: L, tint: Option<C>) -> EggBox
where
    L: Fn(usize) -> String,
    C: Fn(usize) -> Tint,
{
    let d_members = GreenStructure::members(g.d_class());
    // D-class ids are already ordered by least element after normalization
    let j_to_d: Vec<usize> = {
        let mut map = vec![0; g.j_count()];
        for (d, members) in d_members.iter().enumerate() {
            map[g.j_class()[members[0]]] = d;
        }
        map
    };
    let dclasses = d_members
        .iter()
        .enumerate()
        .map(|(id, members)| {
            let mut rows: Vec<usize> = Vec::new();
            let mut cols: Vec<usize> = Vec::new();
            for &x in members {
                if !rows.contains(&g.r_class()[x]) {
                    rows.push(g.r_class()[x]);
                }
                if !cols.contains(&g.l_class()[x]) {
                    cols.push(g.l_class()[x]);
                }
            }
            let cells = rows
                .iter()
                .map(|&r| {
                    cols.iter()
                        .map(|&l| {
                            let inside: Vec<usize> = members
                                .iter()
                                .copied()
                                .filter(|&x| g.r_class()[x] == r && g.l_class()[x] == l)
                                .collect();
                            let tints: Vec<Tint> = match &tint {
                                Some(c) => inside.iter().map(|&x| c(x)).collect(),
                                None => vec![Tint::None],
                            };
                            let uniform = tints.iter().all(|t| *t == tints[0]);
                            Cell {
                                labels: inside.iter().map(|&x| labeler(x)).collect(),
                                group: inside.first().is_some_and(|&x| g.is_group_h(g.h_class()[x])),
                                tint: if uniform { tints[0] } else { Tint::None },
                            }
                        })
                        .collect()
                })
                .collect();
            DClassBox {
                id,
                rows: rows.len(),
                cols: cols.len(),
                cells,
            }
        })
        .collect();
    let mut hasse: Vec<(usize, usize)> = g.j_covers().iter().map(|&(lo, up)| (j_to_d[lo], j_to_d[up])).collect();
    hasse.sort_unstable();
    EggBox {
        schema_version: SCHEMA_VERSION,
        dclasses,
        hasse,
    }
}

impl EggBox {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Dot => self.to_dot(),
            Format::Ascii => self.to_ascii(),
            Format::Json => self.to_json(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("egg-box serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn cell_count(&self) -> usize {
        self.dclasses.iter().map(|d| d.rows * d.cols).sum()
    }

    pub fn shaded_count(&self) -> usize {
        self.dclasses.iter().flat_map(|d| d.cells.iter().flatten()).filter(|c| c.group).count()
    }

    /// Grids with `#` in front of group cells, followed by the cover pairs.
    pub fn to_ascii(&self) -> String {
        let mut out = String::new();
        for d in &self.dclasses {
            let text: Vec<Vec<String>> = d
                .cells
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| format!("{} {}", if c.group { '#' } else { ' ' }, c.labels.join(" ")))
                        .collect()
                })
                .collect();
            let width = text.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(0) + 1;
            let rule = format!("+{}\n", format!("{}+", "-".repeat(width)).repeat(d.cols));
            let _ = writeln!(out, "D{} ({} x {})", d.id, d.rows, d.cols);
            out.push_str(&rule);
            for row in &text {
                out.push('|');
                for cell in row {
                    let pad = width - cell.chars().count();
                    let _ = write!(out, "{cell}{}|", " ".repeat(pad));
                }
                out.push('\n');
                out.push_str(&rule);
            }
            out.push('\n');
        }
        if !self.hasse.is_empty() {
            out.push_str("covers:\n");
            for (lo, up) in &self.hasse {
                let _ = writeln!(out, "  D{lo} < D{up}");
            }
        }
        out
    }

    /// One HTML-table node per D-class, edges from lower to upper class
    /// drawn bottom-up.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph eggbox {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for d in &self.dclasses {
            let _ = write!(
                out,
                "  d{} [label=<<TABLE BORDER=\"0\" CELLBORDER=\"1\" CELLSPACING=\"0\" CELLPADDING=\"4\">",
                d.id
            );
            for row in &d.cells {
                out.push_str("<TR>");
                for c in row {
                    out.push_str("<TD");
                    if c.group {
                        out.push_str(" BGCOLOR=\"grey80\"");
                    }
                    match c.tint {
                        Tint::Zero => out.push_str(" COLOR=\"blue\""),
                        Tint::Inf => out.push_str(" COLOR=\"red\""),
                        Tint::None => {}
                    }
                    let body: Vec<String> = c.labels.iter().map(|l| escape_html(l)).collect();
                    let _ = write!(out, ">{}</TD>", body.join("<BR/>"));
                }
                out.push_str("</TR>");
            }
            out.push_str("</TABLE>>];\n");
        }
        for (lo, up) in &self.hasse {
            let _ = writeln!(out, "  d{lo} -> d{up};");
        }
        out.push_str("}\n");
        out
    }
}

fn escape_html(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::DiagramFamily;
    use crate::semigroup::{green_structure, FiniteSemigroup};
    use crate::twisting::diagram_semigroup;

    fn no_tint() -> Option<fn(usize) -> Tint> {
        None
    }

    #[test]
    fn p2_shapes() {
        let s = diagram_semigroup(DiagramFamily::P, 2).unwrap();
        let g = green_structure(&s).unwrap();
        let e = layout(&g, |x| s.element(x).to_string(), no_tint());
        let mut shapes: Vec<(usize, usize, usize)> = e
            .dclasses
            .iter()
            .map(|d| {
                let shaded = d.cells.iter().flatten().filter(|c| c.group).count();
                (d.rows, d.cols, shaded)
            })
            .collect();
        shapes.sort();
        assert_eq!(shapes, vec![(1, 1, 1), (2, 2, 4), (3, 3, 7)]);
        let units = e.dclasses.iter().find(|d| d.rows == 1).unwrap();
        assert_eq!(units.cells[0][0].labels.len(), 2);
        assert_eq!(e.hasse.len(), 2);
        let back = EggBox::from_json(&e.to_json()).unwrap();
        assert_eq!(back, e);
        assert_eq!(e.to_ascii().matches("D").count() >= 3, true);
    }

    #[test]
    fn trivial_monoid_is_one_node() {
        let s = FiniteSemigroup::build(vec![0u8], |_, _| 0, true).unwrap();
        let g = green_structure(&s).unwrap();
        let e = layout(&g, |x| x.to_string(), no_tint());
        let dot = e.to_dot();
        assert_eq!(dot.matches("[label=").count(), 1);
        assert!(!dot.contains("->"));
        assert_eq!(e.shaded_count(), 1);
    }

    #[test]
    fn labels_are_escaped() {
        assert_eq!(escape_html("a<b>&\""), "a&lt;b&gt;&amp;&quot;");
    }
}
