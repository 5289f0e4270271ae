//! Census runs: every invariant of every census graph over a degree range.

use rayon::prelude::*;
use serde::Serialize;

use crate::balance::is_weakly_d_general;
use crate::census::census;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::iso::canonical_form;
use crate::neron::{CurveAnalysis, Route};
use crate::surgery::is_tree_like;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub schema: u32,
    pub graph_id: String,
    pub genus: i64,
    pub vertices: usize,
    pub edges: usize,
    pub degree: i64,
    pub num_balanced: usize,
    pub num_strict: usize,
    pub class_group_order: i64,
    pub component_count: usize,
    pub neron_count: bool,
    pub neron_criterion: bool,
    pub neron_weakly_general: bool,
    pub tree_like: bool,
    pub d_general: bool,
    pub weakly_d_general: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub genus: i64,
    pub max_vertices: usize,
    pub rows: Vec<CensusRow>,
    /// Set when `max_rows` cut the output short.
    pub truncated: bool,
}

/// All rows for one graph. Route disagreement is a theorem violation.
pub fn graph_rows(g: &WeightedGraph, degrees: &[i64]) -> Result<Vec<CensusRow>> {
    let id = canonical_form(g).id();
    let tree_like = is_tree_like(g);
    let mut analysis = CurveAnalysis::new(g)?;
    degrees
        .iter()
        .map(|&d| {
            let balanced = analysis.balanced(d);
            let verdict = analysis.is_neron_type(d, Route::All)?;
            let routes = verdict.routes;
            let d_general = balanced.num_strict() == balanced.num_balanced();
            Ok(CensusRow {
                schema: SCHEMA_VERSION,
                graph_id: id.clone(),
                genus: g.genus(),
                vertices: g.num_vertices(),
                edges: g.num_edges(),
                degree: d,
                num_balanced: balanced.num_balanced(),
                num_strict: balanced.num_strict(),
                class_group_order: verdict.class_group_order,
                component_count: verdict.component_count,
                neron_count: routes.count.unwrap_or(verdict.verdict),
                neron_criterion: routes.criterion.unwrap_or(verdict.verdict),
                neron_weakly_general: routes.weakly_general.unwrap_or(verdict.verdict),
                tree_like,
                d_general,
                weakly_d_general: is_weakly_d_general(g, d)?,
            })
        })
        .collect()
}

/// Runs every census graph over `degrees`, ordered by graph id then degree.
/// With `max_rows`, at most that many rows are kept and the report is
/// flagged as truncated.
pub fn census_run(
    genus: i64,
    max_vertices: usize,
    degrees: &[i64],
    max_rows: Option<usize>,
) -> Result<CensusReport> {
    if !(2..=5).contains(&genus) {
        return Err(Error::InvalidArgument(format!(
            "census runs support genus 2..=5, got {genus}"
        )));
    }
    let graphs = census(genus, max_vertices)?;
    let per_graph: Vec<Vec<CensusRow>> = graphs
        .par_iter()
        .map(|g| graph_rows(g, degrees))
        .collect::<Result<_>>()?;
    let mut rows: Vec<CensusRow> = per_graph.into_iter().flatten().collect();
    rows.sort_by(|a, b| (&a.graph_id, a.degree).cmp(&(&b.graph_id, b.degree)));
    let mut truncated = false;
    if let Some(cap) = max_rows {
        if rows.len() > cap {
            rows.truncate(cap);
            truncated = true;
        }
    }
    Ok(CensusReport {
        genus,
        max_vertices,
        rows,
        truncated,
    })
}

pub fn render_json_lines(report: &CensusReport) -> String {
    let mut out = String::new();
    for row in &report.rows {
        out.push_str(&serde_json::to_string(row).expect("row serialises"));
        out.push('\n');
    }
    if report.truncated {
        out.push_str(&format!(
            "{{\"schema\":{SCHEMA_VERSION},\"truncated\":true,\"rows\":{}}}\n",
            report.rows.len()
        ));
    }
    out
}

pub fn render_table(report: &CensusReport) -> String {
    let header = [
        "graph_id", "v", "e", "d", "#Bbar", "#B", "#Delta", "i(P)", "count", "crit", "weak",
        "tree", "dgen", "wdgen",
    ];
    let b = |x: bool| if x { "yes" } else { "no" }.to_string();
    let mut lines: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
    for r in &report.rows {
        lines.push(vec![
            r.graph_id.clone(),
            r.vertices.to_string(),
            r.edges.to_string(),
            r.degree.to_string(),
            r.num_balanced.to_string(),
            r.num_strict.to_string(),
            r.class_group_order.to_string(),
            r.component_count.to_string(),
            b(r.neron_count),
            b(r.neron_criterion),
            b(r.neron_weakly_general),
            b(r.tree_like),
            b(r.d_general),
            b(r.weakly_d_general),
        ]);
    }
    let mut out = format!(
        "# schema {SCHEMA_VERSION}; census genus {} max_vertices {}\n",
        report.genus, report.max_vertices
    );
    out.push_str(&align(&lines));
    if report.truncated {
        out.push_str(&format!("# TRUNCATED after {} rows\n", report.rows.len()));
    }
    out
}

/// Right-aligns columns to the widest cell.
pub fn align(lines: &[Vec<String>]) -> String {
    let cols = lines.iter().map(|l| l.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| lines.iter().filter_map(|l| l.get(c)).map(|s| s.len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for l in lines {
        let cells: Vec<String> = l
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:>w$}", w = widths[c]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}
